"""Pairwise document comparison.

Two sentences match when their normalized texts are equal; the hash is
only a pre-filter and every hash hit is confirmed against the normalized
text.  Each sentence instance participates in at most one match (multiset
semantics): A's sentences, in document order, each take the earliest
still-unmatched equal sentence of B, which yields exactly the multiset
intersection size.

Percentages are reported in both directions because the denominator is
the sentence total of the document the percentage speaks for.  Rounding
is half-up at one decimal, computed over exact integers so no binary
float boundary artifact can flip a digit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .corpus import Document
from .errors import OutOfRange, ZeroTotal
from .rkhash import DEFAULT_PARAMS, HashParams, hash_sentence


class Band(enum.Enum):
    """Five-way similarity classification.

    ZERO and IDENTICAL are reserved for exactly 0% and exactly 100%;
    15.0 and 50.0 both fall in FIFTEEN_TO_FIFTY (inclusive bounds), and
    OVER_FIFTY covers everything strictly between 50% and 100%.
    """

    ZERO = "zero"
    UNDER_FIFTEEN = "under_fifteen"
    FIFTEEN_TO_FIFTY = "fifteen_to_fifty"
    OVER_FIFTY = "over_fifty"
    IDENTICAL = "identical"

    @property
    def rank(self) -> int:
        return _BAND_RANK[self]


_BAND_RANK = {
    Band.ZERO: 0,
    Band.UNDER_FIFTEEN: 1,
    Band.FIFTEEN_TO_FIFTY: 2,
    Band.OVER_FIFTY: 3,
    Band.IDENTICAL: 4,
}


@dataclass(frozen=True)
class SentenceMatch:
    """A matched sentence pair: (para_idx, sent_idx) on each side."""

    left: tuple[int, int]
    right: tuple[int, int]
    hash: int


@dataclass(frozen=True)
class ComparisonReport:
    doc_a: int
    doc_b: int
    matches: tuple[SentenceMatch, ...]
    pct_a: float
    pct_b: float
    band_a: Band
    band_b: Band
    third_party_flags: dict[tuple[str, int, int], tuple[int, ...]]


def match_sentences(
    a: Document, b: Document, params: HashParams | None = None
) -> list[SentenceMatch]:
    """Greedy in-order pairing of equal sentences, at most one match each.

    Candidates are pre-filtered by fingerprint equality and confirmed by
    normalized-text equality, so a hash collision cannot create a match.
    """
    params = params or DEFAULT_PARAMS
    by_hash: dict[int, list[tuple[tuple[int, int], str]]] = {}
    for sent in b.segmented.sentences():
        h = hash_sentence(sent, params)
        by_hash.setdefault(h, []).append(((sent.para_idx, sent.sent_idx), sent.normalized))

    matches: list[SentenceMatch] = []
    taken: set[tuple[int, tuple[int, int]]] = set()
    for sent in a.segmented.sentences():
        h = hash_sentence(sent, params)
        for coords, normalized in by_hash.get(h, ()):
            if (h, coords) in taken or normalized != sent.normalized:
                continue
            taken.add((h, coords))
            matches.append(
                SentenceMatch(left=(sent.para_idx, sent.sent_idx), right=coords, hash=h)
            )
            break
    return matches


def percentage(match_count: int, total_sentences: int) -> float:
    """(match_count / total_sentences) * 100, rounded half-up to one decimal.

    Computed in integer tenths of a percent: a half is rounded up exactly
    when twice the remainder of 1000*k / n reaches n.
    """
    if total_sentences == 0:
        raise ZeroTotal("percentage over zero sentences is undefined")
    if not 0 <= match_count <= total_sentences:
        raise ValueError("match count must lie in [0, total_sentences]")
    tenths, rem = divmod(1000 * match_count, total_sentences)
    if 2 * rem >= total_sentences:
        tenths += 1
    return tenths / 10


def classify(pct: float) -> Band:
    """Band of a one-decimal percentage; raises OutOfRange outside [0, 100]."""
    tenths = round(pct * 10)
    if not 0 <= tenths <= 1000:
        raise OutOfRange(f"percentage {pct} outside [0, 100]")
    if tenths == 0:
        return Band.ZERO
    if tenths == 1000:
        return Band.IDENTICAL
    if tenths < 150:
        return Band.UNDER_FIFTEEN
    if tenths <= 500:
        return Band.FIFTEEN_TO_FIFTY
    return Band.OVER_FIFTY


def compare(a_id: int, b_id: int, corpus) -> ComparisonReport:
    """Full comparison of two corpus documents (self-comparison allowed).

    Besides the matches and both directional percentages, every sentence
    of either side that also lives in some other corpus document gets a
    third-party flag listing those documents' ids.
    """
    snap = corpus.snapshot()
    doc_a = snap.get_document(a_id)
    doc_b = snap.get_document(b_id)

    matches = match_sentences(doc_a, doc_b, snap.params)
    pct_a = percentage(len(matches), doc_a.segmented.sentence_count)
    pct_b = percentage(len(matches), doc_b.segmented.sentence_count)

    flags: dict[tuple[str, int, int], tuple[int, ...]] = {}
    for side, doc in (("a", doc_a), ("b", doc_b)):
        for sent in doc.segmented.sentences():
            h = hash_sentence(sent, snap.params)
            others = sorted(
                {
                    rec.doc
                    for rec in snap.lookup_hash(h)
                    if rec.doc not in (a_id, b_id) and rec.normalized == sent.normalized
                }
            )
            if others:
                flags[(side, sent.para_idx, sent.sent_idx)] = tuple(others)

    return ComparisonReport(
        doc_a=a_id,
        doc_b=b_id,
        matches=tuple(matches),
        pct_a=pct_a,
        pct_b=pct_b,
        band_a=classify(pct_a),
        band_b=classify(pct_b),
        third_party_flags=flags,
    )
