"""Compile-and-simulate cost measurements, one CSV row per (language, backend)."""

from __future__ import annotations

import csv
import dataclasses
import io
import time
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path

from .compiler import BACKENDS, CompileOptions, compile_language
from .language import FiniteLanguage, parse_language
from .tm import run
from .verifier import DEFAULT_EXTRA, iter_words

__all__ = ["BenchRecord", "CSV_HEADER", "bench_language", "bench_directory", "records_to_csv"]


@dataclass(frozen=True)
class BenchRecord:
    language: str
    n: int
    words: int
    backend: str
    states: int
    transitions: int
    compile_ms: float | None
    total_steps: int
    wall_ms: float | None


CSV_HEADER = tuple(f.name for f in dataclasses.fields(BenchRecord))


def bench_language(
    name: str,
    lang: FiniteLanguage,
    backend: str,
    extra: int = DEFAULT_EXTRA,
    force: bool = False,
    timing: bool = True,
) -> BenchRecord:
    """Compile ``lang`` and run the machine on every word of length <= n + extra.

    With ``timing=False`` the two time columns are left empty so the
    record is reproducible byte for byte.
    """
    t0 = time.perf_counter()
    machine = compile_language(lang, CompileOptions(backend=backend, force=force))
    t1 = time.perf_counter()
    limit = lang.n + extra + 2
    total = sum(run(machine, w, limit).steps for w in iter_words(lang.n + extra))
    t2 = time.perf_counter()
    return BenchRecord(
        language=name,
        n=lang.n,
        words=len(lang),
        backend=backend,
        states=machine.n_states,
        transitions=machine.n_transitions,
        compile_ms=round((t1 - t0) * 1e3, 3) if timing else None,
        total_steps=total,
        wall_ms=round((t2 - t1) * 1e3, 3) if timing else None,
    )


def bench_directory(
    directory: str | Path, extra: int = DEFAULT_EXTRA, force: bool = False, timing: bool = True
) -> list[BenchRecord]:
    paths = sorted(Path(directory).glob("*.lang"), key=lambda p: p.stem)
    if not paths:
        raise FileNotFoundError(f"no .lang files in {directory}")
    records = []
    for path in paths:
        lang = parse_language(path.read_text(encoding="utf-8"))
        for backend in sorted(BACKENDS):
            records.append(bench_language(path.stem, lang, backend, extra, force, timing))
    return records


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(["" if v is None else v for v in dataclasses.astuple(r)])
    return buf.getvalue()
