"""Deterministic single-tape Turing machines and an exact step-counting simulator.

A :class:`Machine` keeps its transition function as three dense integer
tables indexed by ``(state_id, symbol)``: the next state, the symbol written
and the head move.  A next state of ``-1`` marks an undefined transition.
Compiled machines can have millions of states, and the table form keeps
them compact.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

__all__ = [
    "Symbol",
    "Direction",
    "StateId",
    "Machine",
    "Configuration",
    "Verdict",
    "RunOutcome",
    "UndefinedTransitionError",
    "validate",
    "initial_configuration",
    "step",
    "run",
]

LABEL_RE = re.compile(r"[A-Za-z0-9_]+")


class Symbol(enum.IntEnum):
    ZERO = 0
    ONE = 1
    BLANK = 2

    @property
    def char(self) -> str:
        return "01_"[self]

    @classmethod
    def from_char(cls, c: str) -> Symbol:
        if len(c) != 1 or c not in "01_":
            raise ValueError(f"not a tape symbol: {c!r}")
        return cls("01_".index(c))


class Direction(enum.IntEnum):
    LEFT = -1
    RIGHT = 1

    @property
    def char(self) -> str:
        return "L" if self is Direction.LEFT else "R"

    @classmethod
    def from_char(cls, c: str) -> Direction:
        if c == "L":
            return cls.LEFT
        if c == "R":
            return cls.RIGHT
        raise ValueError(f"not a head move: {c!r}")


class StateId(NamedTuple):
    id: int
    label: str


class Transition(NamedTuple):
    state: int
    write: Symbol
    move: Direction


class UndefinedTransitionError(LookupError):
    """Raised when the simulator reaches a (state, symbol) pair with no image."""


class _DeltaView(Mapping):
    """Read-only ``(state_id, Symbol) -> Transition`` view of a machine's tables."""

    def __init__(self, machine: Machine):
        self._m = machine

    def __getitem__(self, key):
        state, sym = key
        m = self._m
        if not (0 <= state < len(m.labels)) or sym not in (0, 1, 2):
            raise KeyError(key)
        target = int(m.next_state[state, sym])
        if target < 0:
            raise KeyError(key)
        return Transition(target, Symbol(int(m.write[state, sym])), Direction(int(m.move[state, sym])))

    def __iter__(self):
        for state, sym in np.argwhere(self._m.next_state >= 0):
            yield int(state), Symbol(int(sym))

    def __len__(self):
        return self._m.n_transitions


@dataclass(frozen=True, eq=False)
class Machine:
    """Immutable deterministic single-tape machine over tape alphabet {0, 1, _}.

    ``next_state``, ``write`` and ``move`` all have shape ``(len(labels), 3)``;
    column ``g`` holds the transition taken on reading ``Symbol(g)``.
    ``backend`` records which compiler produced the machine, if any.
    """

    labels: tuple[str, ...]
    start: int
    accept: int
    reject: int
    next_state: np.ndarray
    write: np.ndarray
    move: np.ndarray
    backend: str | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        for name, dtype in (("next_state", np.int64), ("write", np.int8), ("move", np.int8)):
            arr = np.array(getattr(self, name), dtype=dtype, copy=True)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @classmethod
    def from_transitions(
        cls,
        labels: Sequence[str],
        start: int,
        accept: int,
        reject: int,
        delta: Mapping[tuple[int, Symbol], tuple[int, Symbol, Direction]],
        backend: str | None = None,
    ) -> Machine:
        size = len(labels)
        next_state = np.full((size, 3), -1, dtype=np.int64)
        write = np.zeros((size, 3), dtype=np.int8)
        move = np.zeros((size, 3), dtype=np.int8)
        for (state, sym), (target, out, d) in delta.items():
            next_state[state, sym] = target
            write[state, sym] = out
            move[state, sym] = d
        return cls(tuple(labels), start, accept, reject, next_state, write, move, backend)

    def __eq__(self, other):
        if not isinstance(other, Machine):
            return NotImplemented
        return (
            self.labels == other.labels
            and (self.start, self.accept, self.reject) == (other.start, other.accept, other.reject)
            and self.backend == other.backend
            and np.array_equal(self.next_state, other.next_state)
            and np.array_equal(self.write, other.write)
            and np.array_equal(self.move, other.move)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return (
            f"Machine(states={self.n_states}, transitions={self.n_transitions}, "
            f"start={self.labels[self.start]!r}, backend={self.backend!r})"
        )

    @property
    def n_states(self) -> int:
        return len(self.labels)

    @cached_property
    def n_transitions(self) -> int:
        return int(np.count_nonzero(self.next_state >= 0))

    @property
    def states(self) -> list[StateId]:
        return [StateId(i, label) for i, label in enumerate(self.labels)]

    @property
    def delta(self) -> Mapping[tuple[int, Symbol], Transition]:
        return _DeltaView(self)

    @cached_property
    def _ids(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def state_id(self, label: str) -> int:
        return self._ids[label]

    def is_halting(self, state: int) -> bool:
        return state == self.accept or state == self.reject

    def transitions(self) -> Iterator[tuple[int, Symbol, Transition]]:
        """Yield ``(state, read, image)`` ordered by state id, then symbol 0, 1, _."""
        delta = self.delta
        for state, sym in delta:
            yield state, sym, delta[state, sym]

    def with_transition(self, state: int, symbol: Symbol, image: tuple[int, Symbol, Direction] | None) -> Machine:
        """Copy of the machine with one table entry replaced (``None`` removes it)."""
        next_state = self.next_state.copy()
        write = self.write.copy()
        move = self.move.copy()
        if image is None:
            next_state[state, symbol], write[state, symbol], move[state, symbol] = -1, 0, 0
        else:
            next_state[state, symbol], write[state, symbol], move[state, symbol] = image
        return Machine(self.labels, self.start, self.accept, self.reject, next_state, write, move, self.backend)

    @cached_property
    def _tables(self) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
        # plain lists index several times faster than numpy scalars in the run loop
        return self.next_state.tolist(), self.write.tolist(), self.move.tolist()


def validate(machine: Machine) -> list[str]:
    """Return a description of every broken machine invariant (empty if none)."""
    problems: list[str] = []
    labels = machine.labels
    size = len(labels)

    seen: set[str] = set()
    for i, label in enumerate(labels):
        if not isinstance(label, str) or not LABEL_RE.fullmatch(label):
            problems.append(f"state {i} has invalid label {label!r}")
        elif label in seen:
            problems.append(f"duplicate state label {label!r}")
        seen.add(label)

    for role in ("start", "accept", "reject"):
        s = getattr(machine, role)
        if not 0 <= s < size:
            problems.append(f"{role} state id {s} is not a state")
    if machine.accept == machine.reject:
        problems.append("accept and reject are the same state")

    for name in ("next_state", "write", "move"):
        if getattr(machine, name).shape != (size, 3):
            problems.append(f"{name} table has shape {getattr(machine, name).shape}, expected {(size, 3)}")
    if problems:
        return problems

    def name(s: int) -> str:
        return labels[s]

    nxt, write, move = machine.next_state, machine.write, machine.move
    defined = nxt >= 0
    for s, g in np.argwhere(nxt >= size):
        problems.append(f"transition ({name(s)}, {Symbol(g).char}) targets unknown state id {nxt[s, g]}")
    for s, g in np.argwhere(defined & ((write < 0) | (write > 2))):
        problems.append(f"transition ({name(s)}, {Symbol(g).char}) writes invalid symbol {write[s, g]}")
    for s, g in np.argwhere(defined & (move != 1) & (move != -1)):
        problems.append(f"transition ({name(s)}, {Symbol(g).char}) has invalid move {move[s, g]}")

    halting = np.zeros(size, dtype=bool)
    halting[[machine.accept, machine.reject]] = True
    for s, g in np.argwhere(~defined & ~halting[:, None]):
        problems.append(f"missing transition ({name(s)}, {Symbol(g).char})")
    for s, g in np.argwhere(defined & halting[:, None]):
        problems.append(f"halting state {name(s)} has outgoing transition on {Symbol(g).char}")
    return problems


@dataclass(frozen=True)
class Configuration:
    """Run snapshot.  ``tape`` holds only the non-blank cells."""

    state: int
    tape: Mapping[int, Symbol]
    head: int
    steps: int = 0

    def read(self, cell: int | None = None) -> Symbol:
        return self.tape.get(self.head if cell is None else cell, Symbol.BLANK)

    def window(self, lo: int, hi: int) -> str:
        """Tape cells ``lo..hi`` (inclusive) as text, e.g. ``"01__"``."""
        return "".join(self.read(i).char for i in range(lo, hi + 1))


def _symbols(word: str | Iterable[Symbol]) -> list[Symbol]:
    if isinstance(word, str):
        if not set(word) <= {"0", "1"}:
            raise ValueError(f"input word must be over {{0, 1}}: {word!r}")
        return [Symbol.ONE if c == "1" else Symbol.ZERO for c in word]
    out = [Symbol(s) for s in word]
    if Symbol.BLANK in out:
        raise ValueError("input word must not contain the blank symbol")
    return out


def initial_configuration(machine: Machine, word: str | Iterable[Symbol]) -> Configuration:
    tape = {i: s for i, s in enumerate(_symbols(word))}
    return Configuration(machine.start, tape, 0, 0)


def step(machine: Machine, config: Configuration) -> Configuration:
    """Apply one transition to ``config`` and return the successor configuration."""
    g = config.read()
    try:
        target, out, d = machine.delta[config.state, g]
    except KeyError:
        raise UndefinedTransitionError(
            f"no transition for ({machine.labels[config.state]}, {g.char})"
        ) from None
    tape = dict(config.tape)
    if out == Symbol.BLANK:
        tape.pop(config.head, None)
    else:
        tape[config.head] = out
    return Configuration(target, tape, config.head + d, config.steps + 1)


class Verdict(enum.Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    STEP_LIMIT_EXCEEDED = "step-limit-exceeded"


@dataclass(frozen=True)
class RunOutcome:
    verdict: Verdict
    steps: int
    trace: list[Configuration] | None = None
    final: Configuration | None = None

    @property
    def accepted(self) -> bool:
        return self.verdict is Verdict.ACCEPT


def run(
    machine: Machine,
    word: str | Iterable[Symbol],
    step_limit: int = 10_000,
    want_trace: bool = False,
) -> RunOutcome:
    """Simulate ``machine`` on ``word`` until it halts or ``step_limit`` steps elapse.

    Entering the accept or reject state counts as a step, so a machine that
    halts on its first read reports ``steps == 1``.  With ``want_trace`` the
    outcome carries every configuration, the initial one included.
    """
    if step_limit < 1:
        raise ValueError("step_limit must be at least 1")
    config = initial_configuration(machine, word)
    if want_trace:
        trace = [config]
        while not machine.is_halting(config.state) and config.steps < step_limit:
            config = step(machine, config)
            trace.append(config)
        return RunOutcome(_verdict(machine, config.state), config.steps, trace, config)

    nxt, wr, mv = machine._tables
    accept, reject = machine.accept, machine.reject
    tape = dict(config.tape)
    state, head, steps = config.state, 0, 0
    while state != accept and state != reject and steps < step_limit:
        g = tape.get(head, 2)
        target = nxt[state][g]
        if target < 0:
            raise UndefinedTransitionError(f"no transition for ({machine.labels[state]}, {Symbol(g).char})")
        out = wr[state][g]
        if out == 2:
            tape.pop(head, None)
        else:
            tape[head] = Symbol(out)
        head += mv[state][g]
        state = target
        steps += 1
    final = Configuration(state, tape, head, steps)
    return RunOutcome(_verdict(machine, state), steps, None, final)


def _verdict(machine: Machine, state: int) -> Verdict:
    if state == machine.accept:
        return Verdict.ACCEPT
    if state == machine.reject:
        return Verdict.REJECT
    return Verdict.STEP_LIMIT_EXCEEDED
