"""Compile a finite binary language into a machine that halts within |w| + 1 steps.

Every compiled machine reads its input left to right, erasing each cell and
moving right.  After reading a prefix ``p`` it sits in the state for ``p``; a
blank read then accepts iff ``p`` is in the language.  Two backends exist:

``dense``
    one state for every binary string of length 1..n, with n the maximum
    word length.  Reading an (n+1)-th symbol rejects.
``trie``
    only prefixes of member words get a state; a read that leaves the set
    of viable prefixes rejects at once.

Prefix states are numbered by ``prefix_state_index``: ``2**len(p)`` plus
the binary value of ``p`` read with the first symbol as least significant
bit.  The leading sentinel bit keeps ``"0"``, ``"00"``, ``"000"`` apart.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .language import FiniteLanguage
from .tm import Direction, Machine, Symbol

__all__ = [
    "CompileOptions",
    "CompileGuardError",
    "START",
    "ACCEPT",
    "REJECT",
    "prefix_state_index",
    "prefix_label",
    "compile_language",
    "compile_dense",
    "compile_trie",
    "expected_dense_steps",
    "dense_state_count",
]

Backend = Literal["dense", "trie"]
BACKENDS: tuple[str, ...] = ("dense", "trie")

START, ACCEPT, REJECT = 0, 1, 2
HALT_LABELS = ("q_start", "q_accept", "q_reject")


class CompileGuardError(ValueError):
    def __init__(self, n: int, guard: int):
        self.n = n
        self.guard = guard
        super().__init__(
            f"dense compilation of a language with n={n} exceeds the guard n<={guard} "
            f"({dense_state_count(n)} states); pass force=True to override"
        )


@dataclass(frozen=True)
class CompileOptions:
    backend: Backend = "dense"
    max_n_guard: int = 20
    force: bool = False

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}; expected one of {BACKENDS}")


def prefix_state_index(prefix: str) -> int:
    """Sentinel index of a nonempty binary prefix; the first symbol read is bit 0."""
    if not prefix or set(prefix) - {"0", "1"}:
        raise ValueError(f"not a nonempty binary prefix: {prefix!r}")
    return (1 << len(prefix)) | int(prefix[::-1], 2)


def prefix_label(prefix: str) -> str:
    return "q_" + prefix


def dense_state_count(n: int) -> int:
    return 3 if n == 0 else 2 ** (n + 1) + 1


def expected_dense_steps(n: int, input_length: int) -> int:
    """Steps a dense machine with maximum word length ``n`` takes on any input of that length."""
    return input_length + 1 if input_length <= n else n + 1


def compile_language(lang: FiniteLanguage, opts: CompileOptions | None = None) -> Machine:
    opts = opts or CompileOptions()
    if opts.backend == "dense":
        return compile_dense(lang, opts)
    return compile_trie(lang, opts)


def _dense_labels(n: int) -> list[str]:
    labels = list(HALT_LABELS)
    for m in range(1, n + 1):
        # format() puts the most significant bit first; the prefix wants bit 0 first
        labels.extend(prefix_label(format(v, f"0{m}b")[::-1]) for v in range(1 << m))
    return labels


def compile_dense(lang: FiniteLanguage, opts: CompileOptions | None = None) -> Machine:
    """Materialize a state for every binary prefix of length 1..n.

    State ids: 0 start, 1 accept, 2 reject, and prefix ``p`` at
    ``prefix_state_index(p) + 1``, giving ``2**(n+1) + 1`` states for n >= 1.
    """
    opts = opts or CompileOptions()
    if opts.backend != "dense":
        raise ValueError("compile_dense requires backend='dense'")
    n = lang.n
    if n > opts.max_n_guard and not opts.force:
        raise CompileGuardError(n, opts.max_n_guard)

    size = dense_state_count(n)
    next_state = np.full((size, 3), -1, dtype=np.int64)

    next_state[START, Symbol.BLANK] = ACCEPT if "" in lang else REJECT
    if n == 0:
        next_state[START, [Symbol.ZERO, Symbol.ONE]] = REJECT
    else:
        next_state[START, Symbol.ZERO] = prefix_state_index("0") + 1
        next_state[START, Symbol.ONE] = prefix_state_index("1") + 1

        lengths = np.arange(1, n + 1)
        k = np.arange(2, 2 ** (n + 1), dtype=np.int64)
        m = np.repeat(lengths, 2**lengths)
        rows = k + 1
        extendable = m < n
        # appending x at position m adds 2**m (x=0) or 2**(m+1) (x=1) to the index
        next_state[rows, Symbol.ZERO] = np.where(extendable, k + (1 << m) + 1, REJECT)
        next_state[rows, Symbol.ONE] = np.where(extendable, k + (2 << m) + 1, REJECT)
        next_state[rows, Symbol.BLANK] = REJECT
        members = [prefix_state_index(w) + 1 for w in lang.words if w]
        next_state[members, Symbol.BLANK] = ACCEPT

    write, move = _erase_right(next_state)
    return Machine(tuple(_dense_labels(n)), START, ACCEPT, REJECT, next_state, write, move, backend="dense")


def compile_trie(lang: FiniteLanguage, opts: CompileOptions | None = None) -> Machine:
    """Keep a state only for nonempty prefixes of member words; reject off-trie reads."""
    opts = opts or CompileOptions(backend="trie")
    if opts.backend != "trie":
        raise ValueError("compile_trie requires backend='trie'")

    prefixes = sorted(lang.prefixes(), key=prefix_state_index)
    ids = {p: i for i, p in enumerate(prefixes, start=3)}
    ids[""] = START
    size = 3 + len(prefixes)
    next_state = np.full((size, 3), -1, dtype=np.int64)

    for p in ["", *prefixes]:
        row = ids[p]
        next_state[row, Symbol.ZERO] = ids.get(p + "0", REJECT)
        next_state[row, Symbol.ONE] = ids.get(p + "1", REJECT)
        next_state[row, Symbol.BLANK] = ACCEPT if p in lang else REJECT

    labels = HALT_LABELS + tuple(prefix_label(p) for p in prefixes)
    write, move = _erase_right(next_state)
    return Machine(labels, START, ACCEPT, REJECT, next_state, write, move, backend="trie")


def _erase_right(next_state: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    defined = next_state >= 0
    write = np.where(defined, int(Symbol.BLANK), 0).astype(np.int8)
    move = np.where(defined, int(Direction.RIGHT), 0).astype(np.int8)
    return write, move
