"""Report rendering: canonical JSON for machines, a standalone HTML page
for reviewers.

The HTML wraps every sentence in a span whose class is part of the
stable contract with the web UI: ``match`` (paired between the two
documents, red and bold), ``thirdparty`` (also present in another corpus
document, pink), ``plain``.  A sentence that is both matched and shared
with a third document renders as ``match``; its provenance still appears
in the "also found in" list.  Output is byte-deterministic for identical
inputs.
"""

from __future__ import annotations

import html
import json

from .corpus import CorpusSnapshot
from .similarity import Band, ComparisonReport

BAND_LABELS = {
    Band.ZERO: "0%",
    Band.UNDER_FIFTEEN: "under 15%",
    Band.FIFTEEN_TO_FIFTY: "15-50%",
    Band.OVER_FIFTY: "over 50%",
    Band.IDENTICAL: "100%",
}


def canonical_json(obj) -> str:
    """Compact JSON with insertion key order, real UTF-8 (no \\u escapes)."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def report_payload(r: ComparisonReport) -> dict:
    """The report as the documented JSON object (percentages as strings)."""
    matches = sorted(r.matches, key=lambda m: m.left)
    third_party = [
        {"side": side, "para": para, "sent": sent, "docs": list(docs)}
        for (side, para, sent), docs in sorted(r.third_party_flags.items())
    ]
    return {
        "doc_a": r.doc_a,
        "doc_b": r.doc_b,
        "pct_a": f"{r.pct_a:.1f}",
        "pct_b": f"{r.pct_b:.1f}",
        "band_a": r.band_a.value,
        "band_b": r.band_b.value,
        "matches": [
            {
                "left": {"para": m.left[0], "sent": m.left[1]},
                "right": {"para": m.right[0], "sent": m.right[1]},
            }
            for m in matches
        ],
        "third_party": third_party,
    }


def render_json(r: ComparisonReport) -> str:
    return canonical_json(report_payload(r))


def render_document_list_json(entries) -> str:
    """Canonical JSON for a corpus listing (shared by CLI and API)."""
    return canonical_json(
        [
            {
                "id": e.id,
                "name": e.name,
                "sentence_count": e.sentence_count,
                "ingested_at": e.ingested_at,
            }
            for e in entries
        ]
    )


_PAGE_CSS = """\
body { font-family: Georgia, serif; margin: 2rem auto; max-width: 72rem; color: #222; }
h1 { font-size: 1.4rem; }
table.summary { border-collapse: collapse; margin-bottom: 1.5rem; }
table.summary td, table.summary th { border: 1px solid #bbb; padding: .3rem .8rem; text-align: left; }
main.side-by-side { display: flex; gap: 2rem; align-items: flex-start; }
section.doc { flex: 1 1 0; border: 1px solid #ddd; padding: 0 1rem 1rem; }
.match { color: #b00000; font-weight: bold; }
.thirdparty { background-color: pink; }
.plain { }
section.provenance { margin-top: 1.5rem; }
"""


def _sentence_class(r: ComparisonReport, side: str, para: int, sent: int) -> str:
    coords = (para, sent)
    matched = any(
        (m.left if side == "a" else m.right) == coords for m in r.matches
    )
    if matched:
        return "match"
    if (side, para, sent) in r.third_party_flags:
        return "thirdparty"
    return "plain"


def render_html(r: ComparisonReport, corpus) -> str:
    """Standalone HTML5 report: summary header, both texts side by side."""
    snap: CorpusSnapshot = corpus.snapshot()
    doc_a = snap.get_document(r.doc_a)
    doc_b = snap.get_document(r.doc_b)

    def doc_section(side: str, doc, pct: float, band: Band) -> list[str]:
        out = [f'<section class="doc" id="doc-{side}">']
        out.append(
            f"<h2>{html.escape(doc.name)} &mdash; {pct:.1f}% ({html.escape(BAND_LABELS[band])})</h2>"
        )
        for para_idx, para in enumerate(doc.segmented.paragraphs):
            spans = []
            for sent in para:
                cls = _sentence_class(r, side, para_idx, sent.sent_idx)
                spans.append(f'<span class="{cls}">{html.escape(sent.raw)}</span>')
            out.append(f'<p data-para="{para_idx}">{" ".join(spans)}</p>')
        out.append("</section>")
        return out

    lines = [
        "<!DOCTYPE html>",
        '<html lang="en">',
        "<head>",
        '<meta charset="utf-8">',
        f"<title>Comparison: {html.escape(doc_a.name)} vs {html.escape(doc_b.name)}</title>",
        f"<style>\n{_PAGE_CSS}</style>",
        "</head>",
        "<body>",
        "<h1>Document comparison</h1>",
        '<table class="summary">',
        "<tr><th>Document</th><th>Identical sentences</th><th>Indication</th></tr>",
        f'<tr><td>{html.escape(doc_a.name)}</td><td class="pct-a">{r.pct_a:.1f}%</td>'
        f'<td class="band-a">{html.escape(BAND_LABELS[r.band_a])}</td></tr>',
        f'<tr><td>{html.escape(doc_b.name)}</td><td class="pct-b">{r.pct_b:.1f}%</td>'
        f'<td class="band-b">{html.escape(BAND_LABELS[r.band_b])}</td></tr>',
        "</table>",
        '<main class="side-by-side">',
    ]
    lines += doc_section("a", doc_a, r.pct_a, r.band_a)
    lines += doc_section("b", doc_b, r.pct_b, r.band_b)
    lines.append("</main>")

    if r.third_party_flags:
        lines.append('<section class="provenance">')
        lines.append("<h2>Also found in other documents</h2>")
        lines.append("<ul>")
        sides = {"a": doc_a, "b": doc_b}
        for (side, para, sent), doc_ids in sorted(r.third_party_flags.items()):
            raw = sides[side].segmented.paragraphs[para][sent].raw
            names = ", ".join(
                f"{html.escape(snap.get_document(i).name)} (id {i})" for i in doc_ids
            )
            lines.append(
                f'<li>{html.escape(sides[side].name)}, paragraph {para}, sentence {sent}: '
                f"&ldquo;{html.escape(raw)}&rdquo; also found in: {names}</li>"
            )
        lines.append("</ul>")
        lines.append("</section>")

    lines += ["</body>", "</html>"]
    return "\n".join(lines) + "\n"
