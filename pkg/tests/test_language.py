import pytest
from hypothesis import given, strategies as st

from finitetm.language import (
    DuplicateWordWarning,
    FiniteLanguage,
    LanguageParseError,
    contains,
    max_word_length,
    parse_language,
    serialize_language,
)

word_sets = st.frozensets(st.text(alphabet="01", max_size=10), max_size=30)


def test_contains():
    lang = FiniteLanguage.of("1", "01", "110")
    assert contains(lang, "01")
    assert contains(lang, "1")
    assert not contains(lang, "10")
    assert not contains(lang, "001")
    assert not contains(FiniteLanguage.of(), "")


@pytest.mark.parametrize(
    "words, n",
    [(("1", "01", "110"), 3), (("",), 0), ((), 0), (("0000", ""), 4)],
)
def test_max_word_length(words, n):
    assert max_word_length(FiniteLanguage.of(*words)) == n


def test_rejects_non_binary_words():
    with pytest.raises(ValueError):
        FiniteLanguage.of("012")


def test_duplicates_collapse():
    assert len(FiniteLanguage(["1", "1", "0"])) == 2


class TestParse:
    def test_basic(self):
        lang = parse_language("1\n01\n110\n")
        assert lang.words == {"1", "01", "110"} and lang.n == 3

    def test_eps(self):
        lang = parse_language("eps\n")
        assert lang.words == {""} and lang.n == 0

    def test_comments_blank_lines_and_trailing_whitespace(self):
        lang = parse_language("# header\n\n  \n10  \n# 11\neps\t\n")
        assert lang.words == {"10", ""}

    def test_duplicate_warns(self):
        with pytest.warns(DuplicateWordWarning) as record:
            lang = parse_language("1\n1\n")
        assert lang.words == {"1"}
        assert len(record) == 1

    @pytest.mark.parametrize("text, lineno", [("1\n102\n", 2), ("abc", 1), ("0\n\n 1\n", 3), ("EPS\n", 1)])
    def test_malformed_line(self, text, lineno):
        with pytest.raises(LanguageParseError) as exc:
            parse_language(text)
        assert exc.value.lineno == lineno
        assert f"line {lineno}" in str(exc.value)

    def test_length_cap(self):
        assert parse_language("1" * 64).n == 64
        with pytest.raises(LanguageParseError, match="longer than 64"):
            parse_language("1" * 65)


def test_serialize():
    assert serialize_language(FiniteLanguage.of("110", "01", "1")) == "1\n01\n110\n"
    assert serialize_language(FiniteLanguage.of("")) == "eps\n"
    assert serialize_language(FiniteLanguage.of()) == ""


@given(word_sets)
def test_round_trip(words):
    lang = FiniteLanguage(words)
    assert parse_language(serialize_language(lang)) == lang


@given(word_sets, st.text(alphabet="01", max_size=12))
def test_contains_matches_linear_scan(words, w):
    listed = list(words)
    lang = FiniteLanguage(words)
    assert contains(lang, w) == any(x == w for x in listed)


@given(word_sets, st.text(alphabet="01", min_size=1, max_size=15))
def test_n_tracks_reconstruction(words, extra_word):
    lang = FiniteLanguage(words)
    bigger = FiniteLanguage(lang.words | {extra_word})
    assert bigger.n == max(lang.n, len(extra_word))
    assert bigger.n == max((len(w) for w in bigger.words), default=0)
