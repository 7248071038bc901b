import string

import pytest
from hypothesis import given
from hypothesis import strategies as st

from copytrace.errors import EmptyDocument
from copytrace.textnorm import normalize, segment


class TestNormalize:
    def test_lowercase_and_strip(self):
        assert normalize("Hello, World!") == "helloworld"

    def test_empty(self):
        assert normalize("") == ""

    def test_punctuation_and_whitespace_removed(self):
        assert normalize("A.B.  c") == "abc"

    def test_digits_kept(self):
        assert normalize("Room 101!") == "room101"

    def test_unicode_folding(self):
        assert normalize("Grüße") == normalize("GRÜSSE")

    @given(st.text())
    def test_idempotent(self, text):
        once = normalize(text)
        assert normalize(once) == once

    @given(st.text(), st.text(alphabet=string.punctuation + " \t\n"))
    def test_punctuation_insensitive(self, text, noise):
        # splicing punctuation/whitespace anywhere never changes the result
        mid = len(text) // 2
        assert normalize(text[:mid] + noise + text[mid:]) == normalize(text)


class TestSegment:
    def test_paragraphs_and_sentences(self):
        seg = segment("One. Two.\n\nThree.")
        assert [[s.raw for s in p] for p in seg.paragraphs] == [["One.", "Two."], ["Three."]]

    def test_no_terminator_is_one_sentence(self):
        seg = segment("no terminator here")
        assert len(seg.paragraphs) == 1
        assert [s.raw for s in seg.paragraphs[0]] == ["no terminator here"]

    def test_all_punctuation_raises(self):
        with pytest.raises(EmptyDocument):
            segment("...\n\n...")

    def test_terminator_without_space_does_not_split(self):
        seg = segment("Version 2.5 shipped. Then what")
        assert [s.raw for s in seg.paragraphs[0]] == ["Version 2.5 shipped.", "Then what"]

    def test_exclamation_and_question(self):
        seg = segment("Really? Yes! Fine.")
        assert [s.raw for s in seg.paragraphs[0]] == ["Really?", "Yes!", "Fine."]

    def test_linebreak_inside_paragraph_is_space(self):
        seg = segment("First part\nsecond part. Next one.")
        assert seg.paragraphs[0][0].raw == "First part second part."

    def test_empty_normalized_sentences_dropped(self):
        seg = segment("Good one. !!! Another good.")
        assert [s.raw for s in seg.paragraphs[0]] == ["Good one.", "Another good."]

    def test_dropped_paragraph_keeps_indices_contiguous(self):
        seg = segment("First. \n\n ... \n\n Last.")
        assert len(seg.paragraphs) == 2
        assert [p[0].para_idx for p in seg.paragraphs] == [0, 1]

    def test_coordinates(self):
        seg = segment("One. Two.\n\nThree. Four.")
        coords = [(s.para_idx, s.sent_idx) for s in seg.sentences()]
        assert coords == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_normalized_matches_normalize_of_raw(self):
        seg = segment("Hello, World! Room 101.")
        for s in seg.sentences():
            assert s.normalized == normalize(s.raw)


def _render(seg) -> str:
    return "\n\n".join(" ".join(s.raw for s in para) for para in seg.paragraphs)


class TestSegmentationStability:
    @pytest.mark.parametrize(
        "text",
        [
            "One. Two.\n\nThree.",
            "no terminator",
            "Mixed! Really? Sure.\nwrapped line. Tail",
            "A. !!! B.\n\n\n\nC?",
        ],
    )
    def test_render_roundtrip(self, text):
        first = segment(text)
        second = segment(_render(first))
        assert [s.raw for s in first.sentences()] == [s.raw for s in second.sentences()]

    @given(
        st.lists(
            st.lists(
                st.sampled_from(["Alpha beta.", "Gamma delta!", "Epsilon?", "tail words"]),
                min_size=1,
                max_size=4,
            ),
            min_size=1,
            max_size=3,
        )
    )
    def test_render_roundtrip_generated(self, paras):
        # "tail words" has no terminator, so it may only close a paragraph
        cleaned = []
        for para in paras:
            keep = [s for s in para[:-1] if s != "tail words"] + [para[-1]]
            cleaned.append(keep)
        text = "\n\n".join(" ".join(p) for p in cleaned)
        first = segment(text)
        second = segment(_render(first))
        assert [s.raw for s in first.sentences()] == [s.raw for s in second.sentences()]
