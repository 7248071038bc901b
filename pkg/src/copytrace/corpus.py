"""Persistent document corpus.

Documents are segmented on ingest; every sentence fingerprint is indexed
in a hash -> records map so cross-corpus lookups are O(1) per sentence.
The whole index lives in a single self-describing file: UTF-8, one JSON
record per line, the first line a header carrying the format version,
the hash parameters and the next id to assign.  Writes go to a temp file
in the same directory and are atomically renamed into place, so readers
never observe a half-written index.

Ids are assigned monotonically from the persisted counter and are never
reused, even after deletion.  Names are unique: re-ingesting a name
atomically replaces the prior version (under a fresh id).
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from pathlib import Path
from threading import Lock
from typing import Callable, NamedTuple
from xml.sax.saxutils import escape

from .errors import StorageFailure, UnknownDocument
from .rkhash import HashParams, hash_sentence
from .textnorm import SegmentedDocument, Sentence, segment

FORMAT_VERSION = 1


@dataclass(frozen=True)
class Document:
    """An ingested document: corpus-unique id, display name, segmented text."""

    id: int
    name: str
    segmented: SegmentedDocument
    ingested_at: int


@dataclass(frozen=True)
class SentenceRecord:
    """One indexed sentence, mirroring a row of the persistent store."""

    hash: int
    doc: int
    para_idx: int
    sent_idx: int
    raw: str
    normalized: str


class DocumentInfo(NamedTuple):
    id: int
    name: str
    sentence_count: int
    ingested_at: int


@dataclass(frozen=True)
class CorpusSnapshot:
    """Immutable view of the corpus at one point in time.

    Reads against a snapshot are consistent regardless of concurrent
    ingests; the live Corpus delegates its read methods here.
    """

    params: HashParams
    next_id: int
    documents: dict[int, Document]
    by_hash: dict[int, tuple[SentenceRecord, ...]]

    def snapshot(self) -> "CorpusSnapshot":
        return self

    def get_document(self, doc_id: int) -> Document:
        doc = self.documents.get(doc_id)
        if doc is None:
            raise UnknownDocument(f"no document with id {doc_id}")
        return doc

    def lookup_hash(self, h: int) -> list[SentenceRecord]:
        """All records with this fingerprint, ordered by (doc, para, sent)."""
        return list(self.by_hash.get(h, ()))

    def find_by_name(self, name: str) -> Document | None:
        for doc in self.documents.values():
            if doc.name == name:
                return doc
        return None

    def list_documents(self) -> list[DocumentInfo]:
        return [
            DocumentInfo(d.id, d.name, d.segmented.sentence_count, d.ingested_at)
            for d in sorted(self.documents.values(), key=lambda d: d.id)
        ]

    def export_xml(self, doc_id: int) -> str:
        """The document as XML: one element per paragraph and sentence.

        Child elements are indented one tab per nesting level with a
        newline after every element; the five XML special characters are
        escaped in text and attribute content.
        """
        doc = self.get_document(doc_id)
        quote_map = {'"': "&quot;", "'": "&apos;"}
        lines = ['<?xml version="1.0" encoding="UTF-8"?>']
        lines.append(f'<document id="{doc.id}" name="{escape(doc.name, quote_map)}">')
        for para_idx, para in enumerate(doc.segmented.paragraphs):
            lines.append(f'\t<paragraph id="{para_idx}">')
            for sent in para:
                text = escape(sent.raw, quote_map)
                lines.append(f'\t\t<sentence sentence_id="{sent.sent_idx}">{text}</sentence>')
            lines.append("\t</paragraph>")
        lines.append("</document>")
        return "\n".join(lines) + "\n"


def _records_for(doc: Document, params: HashParams) -> list[SentenceRecord]:
    return [
        SentenceRecord(
            hash=hash_sentence(s, params),
            doc=doc.id,
            para_idx=s.para_idx,
            sent_idx=s.sent_idx,
            raw=s.raw,
            normalized=s.normalized,
        )
        for s in doc.segmented.sentences()
    ]


def _build_by_hash(records: list[SentenceRecord]) -> dict[int, tuple[SentenceRecord, ...]]:
    buckets: dict[int, list[SentenceRecord]] = {}
    for rec in sorted(records, key=lambda r: (r.doc, r.para_idx, r.sent_idx)):
        buckets.setdefault(rec.hash, []).append(rec)
    return {h: tuple(rs) for h, rs in buckets.items()}


class Corpus:
    """The live, persistent corpus: single writer, any number of readers.

    Mutations build a full replacement snapshot, persist it, then swap it
    in; a failed write leaves both the file and the in-memory state
    untouched.
    """

    def __init__(
        self,
        path: str | Path,
        params: HashParams | None = None,
        *,
        clock: Callable[[], float] = time.time,
    ):
        self._path = Path(path)
        self._clock = clock
        self._write_lock = Lock()
        if self._path.exists():
            self._state = _load_index(self._path)
            if params is not None and params != self._state.params:
                raise ValueError("hash params differ from the persisted index header")
        else:
            self._state = CorpusSnapshot(
                params=params or HashParams(), next_id=1, documents={}, by_hash={}
            )

    @property
    def path(self) -> Path:
        return self._path

    @property
    def params(self) -> HashParams:
        return self._state.params

    def snapshot(self) -> CorpusSnapshot:
        return self._state

    # -- reads (delegate to the current snapshot) --

    def get_document(self, doc_id: int) -> Document:
        return self._state.get_document(doc_id)

    def lookup_hash(self, h: int) -> list[SentenceRecord]:
        return self._state.lookup_hash(h)

    def find_by_name(self, name: str) -> Document | None:
        return self._state.find_by_name(name)

    def list_documents(self) -> list[DocumentInfo]:
        return self._state.list_documents()

    def export_xml(self, doc_id: int) -> str:
        return self._state.export_xml(doc_id)

    # -- mutations --

    def ingest(self, name: str, content: str) -> int:
        """Segment, fingerprint and durably index a document; returns its id.

        Raises EmptyDocument if nothing survives normalization and
        StorageFailure if the index cannot be written (state unchanged).
        """
        if not name:
            raise ValueError("document name must be non-empty")
        segmented = segment(content)
        with self._write_lock:
            state = self._state
            documents = {
                d.id: d for d in state.documents.values() if d.name != name
            }
            doc = Document(
                id=state.next_id,
                name=name,
                segmented=segmented,
                ingested_at=int(self._clock()),
            )
            documents[doc.id] = doc
            new_state = CorpusSnapshot(
                params=state.params,
                next_id=state.next_id + 1,
                documents=documents,
                by_hash=_build_by_hash(
                    [r for d in documents.values() for r in _records_for(d, state.params)]
                ),
            )
            _persist_index(self._path, new_state)
            self._state = new_state
            return doc.id

    def remove_document(self, doc_id: int) -> bool:
        """Drop a document and its records; False if the id is unknown."""
        with self._write_lock:
            state = self._state
            if doc_id not in state.documents:
                return False
            documents = {i: d for i, d in state.documents.items() if i != doc_id}
            new_state = CorpusSnapshot(
                params=state.params,
                next_id=state.next_id,
                documents=documents,
                by_hash=_build_by_hash(
                    [r for d in documents.values() for r in _records_for(d, state.params)]
                ),
            )
            _persist_index(self._path, new_state)
            self._state = new_state
            return True


def _dumps(obj: dict) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _persist_index(path: Path, state: CorpusSnapshot) -> None:
    lines = [
        _dumps(
            {
                "format": FORMAT_VERSION,
                "base": state.params.base,
                "modulus": state.params.modulus,
                "next_id": state.next_id,
            }
        )
    ]
    for doc in sorted(state.documents.values(), key=lambda d: d.id):
        lines.append(
            _dumps({"doc": {"id": doc.id, "name": doc.name, "ingested_at": doc.ingested_at}})
        )
    records = sorted(
        (r for recs in state.by_hash.values() for r in recs),
        key=lambda r: (r.doc, r.para_idx, r.sent_idx),
    )
    for rec in records:
        lines.append(
            _dumps(
                {
                    "rec": {
                        "hash": rec.hash,
                        "doc": rec.doc,
                        "para": rec.para_idx,
                        "sent": rec.sent_idx,
                        "raw": rec.raw,
                        "norm": rec.normalized,
                    }
                }
            )
        )
    payload = ("\n".join(lines) + "\n").encode("utf-8")
    tmp = path.with_name(path.name + ".tmp")
    try:
        fd = os.open(tmp, os.O_WRONLY | os.O_CREAT | os.O_TRUNC, 0o644)
        try:
            os.write(fd, payload)
            os.fsync(fd)
        finally:
            os.close(fd)
        os.replace(tmp, path)
    except OSError as exc:
        try:
            tmp.unlink(missing_ok=True)
        except OSError:
            pass
        raise StorageFailure(f"cannot write index {path}: {exc}") from exc


def _load_index(path: Path) -> CorpusSnapshot:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise StorageFailure(f"cannot read index {path}: {exc}") from exc
    lines = text.splitlines()
    if not lines:
        raise StorageFailure(f"index {path} is empty")
    try:
        header = json.loads(lines[0])
        if header.get("format") != FORMAT_VERSION:
            raise StorageFailure(f"unsupported index format {header.get('format')!r}")
        params = HashParams(base=header["base"], modulus=header["modulus"])
        next_id = header["next_id"]

        doc_meta: dict[int, dict] = {}
        rec_rows: dict[int, list[dict]] = {}
        for line in lines[1:]:
            if not line:
                continue
            entry = json.loads(line)
            if "doc" in entry:
                doc_meta[entry["doc"]["id"]] = entry["doc"]
            elif "rec" in entry:
                rec_rows.setdefault(entry["rec"]["doc"], []).append(entry["rec"])
            else:
                raise StorageFailure(f"unrecognized index line: {line[:60]}")

        documents: dict[int, Document] = {}
        records: list[SentenceRecord] = []
        for doc_id, meta in doc_meta.items():
            rows = sorted(rec_rows.get(doc_id, []), key=lambda r: (r["para"], r["sent"]))
            paragraphs: list[tuple[Sentence, ...]] = []
            current: list[Sentence] = []
            current_para = 0
            for row in rows:
                if row["para"] != current_para:
                    paragraphs.append(tuple(current))
                    current = []
                    current_para = row["para"]
                current.append(
                    Sentence(
                        raw=row["raw"],
                        normalized=row["norm"],
                        para_idx=row["para"],
                        sent_idx=row["sent"],
                    )
                )
                records.append(
                    SentenceRecord(
                        hash=row["hash"],
                        doc=doc_id,
                        para_idx=row["para"],
                        sent_idx=row["sent"],
                        raw=row["raw"],
                        normalized=row["norm"],
                    )
                )
            if current:
                paragraphs.append(tuple(current))
            documents[doc_id] = Document(
                id=doc_id,
                name=meta["name"],
                segmented=SegmentedDocument(paragraphs=tuple(paragraphs)),
                ingested_at=meta["ingested_at"],
            )
        return CorpusSnapshot(
            params=params,
            next_id=next_id,
            documents=documents,
            by_hash=_build_by_hash(records),
        )
    except StorageFailure:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise StorageFailure(f"corrupt index {path}: {exc}") from exc
