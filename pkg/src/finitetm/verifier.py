"""Exhaustive checks that compiled machines decide their language within the step bound.

Every check enumerates all words of length ``0 .. n + extra`` in
length-then-lexicographic order and reports the first counterexample in
that order.  Runs are capped at ``n + extra + 2`` steps, so a machine that
fails to halt in time shows up as a step-bound failure.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterator
from dataclasses import dataclass

from .compiler import expected_dense_steps
from .language import FiniteLanguage, contains
from .tm import Machine, Symbol, Verdict, run

__all__ = [
    "Counterexample",
    "VerificationReport",
    "EnumerationGuardError",
    "MAX_ENUMERATION_LENGTH",
    "iter_words",
    "verify_equivalence",
    "verify_step_bound",
    "cross_check",
    "random_language",
    "flip_blank_read",
]

MAX_ENUMERATION_LENGTH = 22
DEFAULT_EXTRA = 2


class EnumerationGuardError(ValueError):
    pass


@dataclass(frozen=True)
class Counterexample:
    word: str
    expected: str
    observed: str

    def __str__(self):
        return f"{self.word or 'eps'}: expected {self.expected}, observed {self.observed}"


@dataclass(frozen=True)
class VerificationReport:
    property: str
    tested: int
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.property} ({self.tested} words)"
        if self.counterexample is not None:
            line += f": {self.counterexample}"
        return line


def iter_words(max_length: int) -> Iterator[str]:
    """All binary words of length 0..max_length, shortest first, then lexicographic."""
    for length in range(max_length + 1):
        for bits in itertools.product("01", repeat=length):
            yield "".join(bits)


def _corpus_length(n: int, extra: int, force: bool) -> int:
    if extra < 0:
        raise ValueError("extra must be non-negative")
    top = n + extra
    if top > MAX_ENUMERATION_LENGTH and not force:
        raise EnumerationGuardError(
            f"enumerating all words up to length {top} ({2 ** (top + 1) - 1} words) "
            f"exceeds the guard of {MAX_ENUMERATION_LENGTH}; pass force=True to override"
        )
    return top


def verify_equivalence(
    machine: Machine, lang: FiniteLanguage, extra: int = DEFAULT_EXTRA, force: bool = False
) -> VerificationReport:
    top = _corpus_length(lang.n, extra, force)
    limit = top + 2
    tested = 0
    for word in iter_words(top):
        tested += 1
        outcome = run(machine, word, limit)
        expected = Verdict.ACCEPT if contains(lang, word) else Verdict.REJECT
        if outcome.verdict is not expected:
            return VerificationReport(
                "equivalence", tested, Counterexample(word, expected.value, outcome.verdict.value)
            )
    return VerificationReport("equivalence", tested)


def verify_step_bound(
    machine: Machine, lang: FiniteLanguage, extra: int = DEFAULT_EXTRA, force: bool = False
) -> VerificationReport:
    """Check ``steps <= |w| + 1`` on every word; dense-backend machines must also hit the exact count."""
    top = _corpus_length(lang.n, extra, force)
    limit = top + 2
    exact = machine.backend == "dense"
    name = "step-bound-exact" if exact else "step-bound"
    tested = 0
    for word in iter_words(top):
        tested += 1
        outcome = run(machine, word, limit)
        if outcome.verdict is Verdict.STEP_LIMIT_EXCEEDED:
            return VerificationReport(
                name, tested, Counterexample(word, f"halt within {len(word) + 1}", f"no halt after {limit}")
            )
        if outcome.steps > len(word) + 1:
            return VerificationReport(
                name, tested, Counterexample(word, f"steps <= {len(word) + 1}", f"steps = {outcome.steps}")
            )
        if exact:
            want = expected_dense_steps(lang.n, len(word))
            if outcome.steps != want:
                return VerificationReport(
                    name, tested, Counterexample(word, f"steps = {want}", f"steps = {outcome.steps}")
                )
    return VerificationReport(name, tested)


def cross_check(
    dense: Machine, trie: Machine, n: int, extra: int = DEFAULT_EXTRA, force: bool = False
) -> VerificationReport:
    """Compare two backends word by word: same verdicts, trie never slower, equal steps on accepts."""
    top = _corpus_length(n, extra, force)
    limit = top + 2
    tested = 0
    for word in iter_words(top):
        tested += 1
        a = run(dense, word, limit)
        b = run(trie, word, limit)
        problem = None
        if a.verdict is not b.verdict:
            problem = (f"verdict {a.verdict.value}", f"verdict {b.verdict.value}")
        elif b.steps > a.steps:
            problem = (f"trie steps <= {a.steps}", f"trie steps = {b.steps}")
        elif a.verdict is Verdict.ACCEPT and a.steps != b.steps:
            problem = (f"trie steps = {a.steps}", f"trie steps = {b.steps}")
        if problem:
            return VerificationReport("cross-check", tested, Counterexample(word, *problem))
    return VerificationReport("cross-check", tested)


def _word_at(index: int) -> str:
    # index i <-> binary expansion of i + 1 without its leading 1: "", "0", "1", "00", ...
    return bin(index + 1)[3:]


def random_language(n: int, size: int, seed: int) -> FiniteLanguage:
    """Draw ``size`` distinct words of length <= n, at least one of length exactly n.

    Uses ``random.Random(seed)`` (Mersenne Twister), so a seed reproduces the
    same language on every platform.
    """
    if n < 0 or size < 0:
        raise ValueError("n and size must be non-negative")
    space = 2 ** (n + 1) - 1
    if size > space:
        raise ValueError(f"cannot draw {size} distinct words of length <= {n}; only {space} exist")
    if size == 0:
        return FiniteLanguage(frozenset())
    rng = random.Random(seed)
    longest = rng.randrange(2**n - 1, space)
    rest = rng.sample(range(space - 1), size - 1)
    # skip over the slot already taken by the guaranteed length-n word
    picked = [longest] + [i + 1 if i >= longest else i for i in rest]
    return FiniteLanguage(frozenset(_word_at(i) for i in picked))


def flip_blank_read(machine: Machine, state: int) -> Machine:
    """Swap accept and reject on ``state``'s blank-read transition."""
    target, out, d = machine.delta[state, Symbol.BLANK]
    if target == machine.accept:
        target = machine.reject
    elif target == machine.reject:
        target = machine.accept
    else:
        raise ValueError(f"blank read of {machine.labels[state]} does not halt")
    return machine.with_transition(state, Symbol.BLANK, (target, out, d))
