"""copytrace command line: batch ingest, compare, scan, manage, serve.

Exit codes: 0 success, 1 usage error, 2 domain error (unknown or empty
document), 3 storage failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report as report_mod
from . import similarity
from .corpus import Corpus
from .errors import CopytraceError, StorageFailure, UnknownDocument
from .similarity import Band

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_STORAGE = 3


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="copytrace", description=__doc__)
    parser.add_argument(
        "--index",
        default="./copytrace.idx",
        help="path of the persistent index file (default: ./copytrace.idx)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_add = sub.add_parser("add", help="ingest one or more text files")
    p_add.add_argument("files", nargs="+", metavar="file")
    p_add.add_argument("--name", help="document name (single file only; default: file stem)")
    p_add.add_argument("--json", action="store_true")

    p_cmp = sub.add_parser("compare", help="compare two documents by name or id")
    p_cmp.add_argument("a")
    p_cmp.add_argument("b")
    p_cmp.add_argument("--html", metavar="out", help="write the HTML report to this file")
    p_cmp.add_argument("--json", action="store_true")

    p_scan = sub.add_parser("scan", help="compare every document pair in the corpus")
    p_scan.add_argument(
        "--min-band",
        choices=[b.value for b in Band],
        default=Band.ZERO.value,
        help="only report pairs whose stronger side reaches this band",
    )
    p_scan.add_argument("--json", action="store_true")

    p_list = sub.add_parser("list", help="list corpus documents")
    p_list.add_argument("--json", action="store_true")

    p_rm = sub.add_parser("rm", help="remove a document by name or id")
    p_rm.add_argument("name")
    p_rm.add_argument("--json", action="store_true")

    p_xml = sub.add_parser("export-xml", help="print a document's XML form")
    p_xml.add_argument("name")
    p_xml.add_argument("--json", action="store_true")

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--listen", default="127.0.0.1:8080", metavar="addr:port")
    p_serve.add_argument("--static", metavar="dir", help="directory of the web UI bundle")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except StorageFailure as exc:
        print(f"error: {exc.code}: {exc.message}", file=sys.stderr)
        return EXIT_STORAGE
    except CopytraceError as exc:
        print(f"error: {exc.code}: {exc.message}", file=sys.stderr)
        return EXIT_DOMAIN


def _dispatch(args) -> int:
    corpus = Corpus(args.index)

    if args.command == "add":
        if args.name and len(args.files) > 1:
            print("error: --name cannot apply to more than one file", file=sys.stderr)
            return EXIT_USAGE
        added = []
        for file in args.files:
            path = Path(file)
            try:
                content = path.read_text(encoding="utf-8")
            except OSError as exc:
                raise StorageFailure(f"cannot read {path}: {exc}") from exc
            name = args.name or path.stem
            doc_id = corpus.ingest(name, content)
            count = corpus.get_document(doc_id).segmented.sentence_count
            added.append({"id": doc_id, "name": name, "sentence_count": count})
        if args.json:
            print(report_mod.canonical_json(added))
        else:
            for entry in added:
                print(f"added {entry['id']} ({entry['name']}, {entry['sentence_count']} sentences)")
        return EXIT_OK

    if args.command == "compare":
        snap = corpus.snapshot()
        doc_a = _lookup(snap, args.a)
        doc_b = _lookup(snap, args.b)
        r = similarity.compare(doc_a.id, doc_b.id, snap)
        if args.html:
            Path(args.html).write_text(report_mod.render_html(r, snap), encoding="utf-8")
        if args.json:
            print(report_mod.render_json(r))
        else:
            print(
                f"pct_a={r.pct_a:.1f} band_a={r.band_a.value} "
                f"pct_b={r.pct_b:.1f} band_b={r.band_b.value} matches={len(r.matches)}"
            )
        return EXIT_OK

    if args.command == "scan":
        snap = corpus.snapshot()
        threshold = Band(args.min_band).rank
        docs = snap.list_documents()
        for i, left in enumerate(docs):
            for right in docs[i + 1 :]:
                r = similarity.compare(left.id, right.id, snap)
                if max(r.band_a.rank, r.band_b.rank) < threshold:
                    continue
                if args.json:
                    print(report_mod.render_json(r))
                else:
                    print(
                        f"{left.name} {right.name} "
                        f"pct_a={r.pct_a:.1f} band_a={r.band_a.value} "
                        f"pct_b={r.pct_b:.1f} band_b={r.band_b.value}"
                    )
        return EXIT_OK

    if args.command == "list":
        entries = corpus.list_documents()
        if args.json:
            print(report_mod.render_document_list_json(entries))
        else:
            print("id\tname\tsentences\tingested_at")
            for e in entries:
                print(f"{e.id}\t{e.name}\t{e.sentence_count}\t{e.ingested_at}")
        return EXIT_OK

    if args.command == "rm":
        doc = _lookup(corpus.snapshot(), args.name)
        corpus.remove_document(doc.id)
        if args.json:
            print(report_mod.canonical_json({"removed": True, "id": doc.id}))
        else:
            print(f"removed {doc.id} ({doc.name})")
        return EXIT_OK

    if args.command == "export-xml":
        snap = corpus.snapshot()
        doc = _lookup(snap, args.name)
        xml = snap.export_xml(doc.id)
        if args.json:
            print(report_mod.canonical_json({"id": doc.id, "name": doc.name, "xml": xml}))
        else:
            sys.stdout.write(xml)
        return EXIT_OK

    if args.command == "serve":
        from . import service

        service.serve(corpus, listen=args.listen, static_dir=args.static)
        return EXIT_OK

    raise AssertionError(f"unhandled command {args.command}")  # pragma: no cover


def _lookup(snap, ref: str):
    doc = snap.find_by_name(ref)
    if doc is None and ref.isdigit():
        doc = snap.documents.get(int(ref))
    if doc is None:
        raise UnknownDocument(f"no document named or numbered {ref!r}")
    return doc


if __name__ == "__main__":
    sys.exit(main())
