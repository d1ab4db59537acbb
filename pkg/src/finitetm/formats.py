"""Text formats for machines: the ``.tm`` file and Graphviz DOT.

A ``.tm`` file looks like::

    tm v1
    start q_start
    accept q_accept
    reject q_reject
    # backend dense
    q_start 0 -> _ R q_0
    ...

Lines starting with ``#`` are comments.  The ``# backend <name>`` comment
records which compiler produced the machine.  Transitions are written by
state id, then by read symbol in the order 0, 1, _.

When a file is read back, state ids follow the order in which labels first
appear: start, accept and reject first, then transition sources, then
states that only occur as targets.  Compiled machines already number their
states this way, so a serialize/parse round trip gives an identical
machine.
"""

from __future__ import annotations

import re

import numpy as np

from .tm import Direction, Machine, Symbol

__all__ = ["MachineFormatError", "serialize_machine", "parse_machine", "machine_to_dot"]

MAGIC = "tm v1"
_HEADER = ("start", "accept", "reject")
_TRANSITION = re.compile(r"(\S+) ([01_]) -> ([01_]) ([LR]) (\S+)")
_BACKEND = re.compile(r"#\s*backend\s+(\S+)")


class MachineFormatError(ValueError):
    def __init__(self, lineno: int | None, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


def serialize_machine(machine: Machine) -> str:
    labels = machine.labels
    lines = [
        MAGIC,
        f"start {labels[machine.start]}",
        f"accept {labels[machine.accept]}",
        f"reject {labels[machine.reject]}",
    ]
    if machine.backend:
        lines.append(f"# backend {machine.backend}")
    sym = "01_"
    nxt, wr, mv = machine._tables
    for s, row in enumerate(nxt):
        src = labels[s]
        for g in range(3):
            t = row[g]
            if t >= 0:
                lines.append(f"{src} {sym[g]} -> {sym[wr[s][g]]} {'L' if mv[s][g] < 0 else 'R'} {labels[t]}")
    return "\n".join(lines) + "\n"


def parse_machine(text: str) -> Machine:
    header: list[str] = []
    backend = None
    rows: list[tuple[int, str, int, int, int, str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _BACKEND.fullmatch(line)
            if m:
                backend = m.group(1)
            continue
        if not header:
            if line != MAGIC:
                raise MachineFormatError(lineno, f"expected {MAGIC!r}, got {line!r}")
            header.append(MAGIC)
            continue
        if len(header) <= len(_HEADER):
            key = _HEADER[len(header) - 1]
            parts = line.split()
            if len(parts) != 2 or parts[0] != key:
                raise MachineFormatError(lineno, f"expected '{key} <label>', got {line!r}")
            header.append(parts[1])
            continue
        m = _TRANSITION.fullmatch(line)
        if not m:
            raise MachineFormatError(lineno, f"malformed transition {line!r}")
        src, read, out, move, dst = m.groups()
        rows.append((lineno, src, "01_".index(read), "01_".index(out), Direction.from_char(move), dst))

    if len(header) < 1 + len(_HEADER):
        raise MachineFormatError(None, "incomplete header; expected tm v1, start, accept and reject lines")
    start_l, accept_l, reject_l = header[1:]
    if accept_l == reject_l:
        raise MachineFormatError(None, "accept and reject must be different states")

    ids: dict[str, int] = {}
    for label in (start_l, accept_l, reject_l):
        ids.setdefault(label, len(ids))
    for _, src, *_rest in rows:
        ids.setdefault(src, len(ids))
    for *_head, dst in rows:
        ids.setdefault(dst, len(ids))

    size = len(ids)
    next_state = np.full((size, 3), -1, dtype=np.int64)
    write = np.zeros((size, 3), dtype=np.int8)
    move = np.zeros((size, 3), dtype=np.int8)
    for lineno, src, read, out, d, dst in rows:
        s = ids[src]
        if next_state[s, read] >= 0:
            raise MachineFormatError(lineno, f"second transition for ({src}, {'01_'[read]})")
        next_state[s, read] = ids[dst]
        write[s, read] = out
        move[s, read] = d

    return Machine(tuple(ids), ids[start_l], ids[accept_l], ids[reject_l], next_state, write, move, backend)


def _quote(label: str) -> str:
    return '"' + label.replace('"', r"\"") + '"'


def machine_to_dot(machine: Machine, name: str = "tm") -> str:
    """Graphviz digraph: accept double-circled, reject boxed, start drawn bold."""
    out = [f"digraph {name} {{", "  rankdir=LR;"]
    for s, label in enumerate(machine.labels):
        if s == machine.accept:
            attrs = "shape=doublecircle"
        elif s == machine.reject:
            attrs = "shape=box"
        else:
            attrs = "shape=circle"
        if s == machine.start:
            attrs += ", style=bold"
        out.append(f"  {_quote(label)} [{attrs}];")
    for s, read, (t, wr, d) in machine.transitions():
        edge = f"{Symbol(read).char}/{Symbol(wr).char},{Direction(d).char}"
        out.append(f"  {_quote(machine.labels[s])} -> {_quote(machine.labels[t])} [label={_quote(edge)}];")
    out.append("}")
    return "\n".join(out) + "\n"
