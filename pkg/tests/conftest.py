"""Shared fixtures: a temp-backed corpus and the five abstract-shaped
fixture documents whose pairwise overlaps produce the 0 / 1-of-7 /
3-of-6 / 7-of-9 / 9-of-9 comparison counts."""

import pytest

from copytrace.corpus import Corpus

# Shared sentences, by role:
#   X1..X3  in DOC_30104599 and DOC_31104453  (the 3-of-6 pair)
#   A1      in DOC_30104599 and DOC_30104876  (third-party provenance)
#   Y1      in DOC_30104876 and DOC_31104453  (the 1-of-7 pair)
#   P1..P7  in DOC_50404783 and DOC_50404087  (the 7-of-9 pair)
X1 = "Information systems support the daily operation of modern organizations."
X2 = "The study collects requirements through interviews and direct observation."
X3 = "Results show that response time improves after the redesign."
A1 = "Data is stored in a relational database for later retrieval."
Y1 = "User acceptance testing was performed with twelve participants."

DOC_30104599 = " ".join([
    "This thesis describes the design of an inventory application for a small retailer.",
    A1,
    "Stock levels are updated automatically after every transaction.",
    X1,
    X2,
    X3,
])  # 6 sentences

DOC_30104876 = " ".join([
    Y1,
    A1,
    "The sales module generates monthly summaries for management.",
    "Reports can be exported for further analysis.",
    "Future work includes integration with the purchasing workflow.",
])  # 5 sentences

DOC_31104453 = " ".join([
    X1,
    X2,
    X3,
    "A web interface lets staff enter orders from any terminal.",
    "Order histories are archived at the end of each period.",
    "The prototype was evaluated during a two week trial.",
    Y1,
])  # 7 sentences

_P = [
    "This study examines scheduling algorithms for campus laboratories.",
    "Existing timetables are produced by hand and contain frequent conflicts.",
    "A constraint solver assigns rooms based on capacity and equipment.",
    "Lecturer availability is encoded as a set of hard restrictions.",
    "Soft preferences cover consecutive sessions and building distance.",
    "The solver finds a feasible timetable for the evaluated semester.",
    "Conflict counts drop to zero in every tested scenario.",
]

DOC_50404783 = " ".join(_P + [
    "Administrators reviewed the generated schedules favourably.",
    "The approach generalizes to other faculties with minor changes.",
])  # 9 sentences

DOC_50404087 = " ".join(_P + [
    "A mobile client is planned as a follow up project.",
    "Deployment requires only a standard web server.",
])  # 9 sentences

FIXTURES = {
    "30104599-abstraksi": DOC_30104599,
    "30104876-abstraksi": DOC_30104876,
    "31104453-abstraksi": DOC_31104453,
    "50404783-abstraksi": DOC_50404783,
    "50404087-abstraksi": DOC_50404087,
}


@pytest.fixture
def corpus(tmp_path):
    return Corpus(tmp_path / "test.idx")


@pytest.fixture
def fixture_corpus(tmp_path):
    """Corpus preloaded with the five fixture documents; ids in dict order."""
    c = Corpus(tmp_path / "fixtures.idx", clock=lambda: 1700000000)
    ids = {name: c.ingest(name, text) for name, text in FIXTURES.items()}
    return c, ids
