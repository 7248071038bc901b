"""copytrace: sentence-fingerprint document similarity.

Documents are segmented into sentences, each sentence is fingerprinted
with a Karp-Rabin polynomial hash of its normalized text, and pairs of
documents are compared by identical-sentence percentage, classified into
five indication bands, and rendered as highlighted reports.
"""

from .corpus import Corpus, CorpusSnapshot, Document, SentenceRecord
from .errors import (
    CopytraceError,
    EmptyDocument,
    EmptyNormalizedSentence,
    EmptyPattern,
    OutOfRange,
    StorageFailure,
    UnknownDocument,
    ZeroTotal,
)
from .report import render_html, render_json
from .rkhash import HashParams, RollingWindow, hash_full, hash_sentence, search
from .similarity import (
    Band,
    ComparisonReport,
    SentenceMatch,
    classify,
    compare,
    match_sentences,
    percentage,
)
from .textnorm import SegmentedDocument, Sentence, normalize, segment

__version__ = "0.1.0"

__all__ = [
    "Band",
    "ComparisonReport",
    "CopytraceError",
    "Corpus",
    "CorpusSnapshot",
    "Document",
    "EmptyDocument",
    "EmptyNormalizedSentence",
    "EmptyPattern",
    "HashParams",
    "OutOfRange",
    "RollingWindow",
    "SegmentedDocument",
    "Sentence",
    "SentenceMatch",
    "SentenceRecord",
    "StorageFailure",
    "UnknownDocument",
    "ZeroTotal",
    "classify",
    "compare",
    "hash_full",
    "hash_sentence",
    "match_sentences",
    "normalize",
    "percentage",
    "render_html",
    "render_json",
    "search",
    "segment",
]
