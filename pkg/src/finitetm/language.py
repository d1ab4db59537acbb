"""Finite languages over {0, 1} and the ``.lang`` text format.

Words are plain ``str`` objects over ``"01"``; the empty word is ``""``.
Leading zeros are significant, so ``"01"`` and ``"1"`` are different words.

File format: one entry per line.  Blank lines and lines starting with ``#``
are ignored, ``eps`` denotes the empty word, anything else must be a
string of at most 64 binary digits.  Trailing whitespace is stripped.
"""

from __future__ import annotations

import re
import warnings
from collections.abc import Iterable
from dataclasses import dataclass, field

__all__ = [
    "FiniteLanguage",
    "LanguageParseError",
    "DuplicateWordWarning",
    "EMPTY_WORD_TOKEN",
    "MAX_FILE_WORD_LENGTH",
    "contains",
    "max_word_length",
    "parse_language",
    "serialize_language",
    "word_sort_key",
]

EMPTY_WORD_TOKEN = "eps"
MAX_FILE_WORD_LENGTH = 64
_BITS = re.compile(r"[01]+")


class LanguageParseError(ValueError):
    def __init__(self, lineno: int, line: str, reason: str = "not a binary word"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class DuplicateWordWarning(UserWarning):
    pass


def word_sort_key(word: str) -> tuple[int, str]:
    return len(word), word


@dataclass(frozen=True)
class FiniteLanguage:
    """A finite set of binary words together with its maximum word length ``n``.

    ``n`` is derived from ``words`` on construction and is 0 for the empty
    language as well as for ``{""}``.
    """

    words: frozenset[str]
    n: int = field(init=False)

    def __post_init__(self):
        words = frozenset(self.words)
        for w in words:
            if not isinstance(w, str) or (w and not _BITS.fullmatch(w)):
                raise ValueError(f"not a binary word: {w!r}")
        object.__setattr__(self, "words", words)
        object.__setattr__(self, "n", max((len(w) for w in words), default=0))

    @classmethod
    def of(cls, *words: str) -> FiniteLanguage:
        return cls(frozenset(words))

    def __contains__(self, word: object) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.sorted_words())

    def sorted_words(self) -> list[str]:
        return sorted(self.words, key=word_sort_key)

    def prefixes(self) -> set[str]:
        """All distinct nonempty prefixes of member words (members included)."""
        return {w[:i] for w in self.words for i in range(1, len(w) + 1)}


def contains(lang: FiniteLanguage, word: str) -> bool:
    return word in lang.words


def max_word_length(lang: FiniteLanguage) -> int:
    return lang.n


def parse_language(text: str) -> FiniteLanguage:
    """Parse ``.lang`` text.  Duplicate words emit :class:`DuplicateWordWarning`."""
    words: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line or line.startswith("#"):
            continue
        if line == EMPTY_WORD_TOKEN:
            word = ""
        elif _BITS.fullmatch(line):
            if len(line) > MAX_FILE_WORD_LENGTH:
                raise LanguageParseError(lineno, line, f"word longer than {MAX_FILE_WORD_LENGTH} symbols")
            word = line
        else:
            raise LanguageParseError(lineno, line)
        if word in words:
            warnings.warn(
                f"line {lineno}: duplicate word {line!r} ignored", DuplicateWordWarning, stacklevel=2
            )
        words.add(word)
    return FiniteLanguage(frozenset(words))


def serialize_language(lang: FiniteLanguage | Iterable[str]) -> str:
    if not isinstance(lang, FiniteLanguage):
        lang = FiniteLanguage(frozenset(lang))
    return "".join((w or EMPTY_WORD_TOKEN) + "\n" for w in lang.sorted_words())
