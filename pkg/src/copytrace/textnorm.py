"""Text segmentation and normalization.

Raw document text is split into paragraphs (blank-line separated) and
sentences (terminator-punctuation separated).  Each sentence keeps its
original form for display and a canonical normalized form that feeds the
fingerprint hash: case folded, with everything that is not a letter or a
decimal digit removed.  Matching is therefore insensitive to case,
punctuation and spacing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyDocument

_TERMINATORS = frozenset(".!?")


def normalize(text: str) -> str:
    """Canonical form of ``text``: case folded, letters and digits only.

    Operates on Unicode scalar values with non-locale case folding;
    "letter" and "decimal digit" are the Unicode general categories.
    Idempotent, and the empty string maps to itself.
    """
    folded = text.casefold()
    return "".join(ch for ch in folded if ch.isalpha() or ch.isdecimal())


@dataclass(frozen=True)
class Sentence:
    """One sentence with display text, canonical text and its coordinates."""

    raw: str
    normalized: str
    para_idx: int
    sent_idx: int


@dataclass(frozen=True)
class SegmentedDocument:
    """Paragraphs of sentences, in source order, with no empty entries."""

    paragraphs: tuple[tuple[Sentence, ...], ...] = field(default_factory=tuple)

    def sentences(self) -> list[Sentence]:
        """All sentences flattened in source order."""
        return [s for para in self.paragraphs for s in para]

    @property
    def sentence_count(self) -> int:
        return sum(len(para) for para in self.paragraphs)


def _split_sentences(paragraph_text: str) -> list[str]:
    """Split paragraph text after '.', '!' or '?' followed by whitespace or end."""
    chunks: list[str] = []
    start = 0
    n = len(paragraph_text)
    for i, ch in enumerate(paragraph_text):
        if ch in _TERMINATORS and (i + 1 >= n or paragraph_text[i + 1].isspace()):
            chunk = paragraph_text[start : i + 1].strip()
            if chunk:
                chunks.append(chunk)
            start = i + 1
    tail = paragraph_text[start:].strip()
    if tail:
        chunks.append(tail)
    return chunks


def segment(text: str) -> SegmentedDocument:
    """Split raw text into paragraphs and sentences.

    Paragraphs are maximal runs of non-blank lines; line breaks inside a
    paragraph count as spaces.  Sentences whose normalized form is empty
    are dropped, and paragraphs left empty disappear with them.

    Raises EmptyDocument if no sentence survives.
    """
    paragraphs: list[tuple[Sentence, ...]] = []
    para_lines: list[str] = []

    def flush() -> None:
        if not para_lines:
            return
        para_text = " ".join(para_lines)
        para_lines.clear()
        sentences = []
        for chunk in _split_sentences(para_text):
            norm = normalize(chunk)
            if not norm:
                continue
            sentences.append(
                Sentence(raw=chunk, normalized=norm, para_idx=len(paragraphs), sent_idx=len(sentences))
            )
        if sentences:
            paragraphs.append(tuple(sentences))

    for line in text.splitlines():
        if line.strip():
            para_lines.append(line.strip())
        else:
            flush()
    flush()

    if not paragraphs:
        raise EmptyDocument("no sentence survives normalization")
    return SegmentedDocument(paragraphs=tuple(paragraphs))
