"""Exhaustive parameter sweeps with a fixed output order.

Parameter tuples are enumerated in lexicographic order of the family's
parameter names. With ``jobs > 1`` consecutive chunks are evaluated in worker
processes, but at most ``2 * jobs`` chunks are in flight and results are
emitted strictly in submission order, so the stream is identical to the
serial one.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import BergeDualError, InvalidParameters
from .families import FAMILIES, PARAM_NAMES, build
from .verify import VIOLATION, CongruenceReport, classify

# Parameters that only take the values -1 and +1.
SIGN_PARAMS = frozenset({"sign", "delta", "eps"})

CHUNK = 256

CSV_HEADER = ("family", "params", "p", "chi_neg", "a", "residual", "holds", "classification")


def irange(lo: int, hi: int) -> range:
    """Inclusive integer range; empty ranges are rejected."""
    if lo > hi:
        raise InvalidParameters(f"empty range {lo}:{hi}")
    return range(lo, hi + 1)


def sweep_params(family: str, ranges: Mapping[str, Iterable[int]]) -> Iterator[tuple[int, ...]]:
    """Raw parameter tuples in lexicographic order. Validity is not checked here."""
    if family not in FAMILIES:
        raise InvalidParameters(f"unknown family {family!r}")
    names = PARAM_NAMES[family]
    missing = [n for n in names if n not in ranges]
    if missing:
        raise InvalidParameters(f"Type {family} sweep needs ranges for {', '.join(missing)}")
    extra = sorted(set(ranges) - set(names))
    if extra:
        raise InvalidParameters(f"Type {family} has no parameter(s) {', '.join(extra)}")
    axes = []
    for n in names:
        values = sorted(set(ranges[n]))
        if n in SIGN_PARAMS:
            values = [v for v in values if v in (-1, 1)]
        axes.append(values)
    return itertools.product(*axes)


def evaluate(family: str, params: tuple[int, ...]) -> CongruenceReport | None:
    """Report for one tuple, or None when the tuple does not describe a Berge knot."""
    try:
        return classify(build(family, params))
    except BergeDualError:
        return None


def _evaluate_chunk(family: str, chunk: Sequence[tuple[int, ...]]) -> list[CongruenceReport | None]:
    return [evaluate(family, params) for params in chunk]


@dataclass
class SweepSummary:
    total: int = 0
    skipped: int = 0
    holds: int = 0
    violations: int = 0
    classifications: Counter = field(default_factory=Counter)

    def add(self, rep: CongruenceReport) -> None:
        self.total += 1
        self.holds += rep.holds_count
        self.violations += rep.classification == VIOLATION
        self.classifications[rep.classification] += 1

    def line(self) -> str:
        by_class = " ".join(f"{k}={self.classifications[k]}" for k in sorted(self.classifications))
        text = f"summary: total={self.total} holds={self.holds} violations={self.violations} skipped={self.skipped}"
        return f"{text} {by_class}".rstrip()


class Sweep:
    """Iterable report stream; ``summary`` is complete once iteration finishes."""

    def __init__(self, family: str, ranges: Mapping[str, Iterable[int]], jobs: int = 1) -> None:
        if jobs < 1:
            raise InvalidParameters("jobs must be >= 1")
        self.family = family
        self.ranges = {k: tuple(v) for k, v in ranges.items()}
        self.jobs = jobs
        self.summary = SweepSummary()
        # Validate eagerly so configuration errors surface before any output.
        sweep_params(family, self.ranges)

    def _chunks(self) -> Iterator[list[tuple[int, ...]]]:
        it = sweep_params(self.family, self.ranges)
        while chunk := list(itertools.islice(it, CHUNK)):
            yield chunk

    def _results(self) -> Iterator[list[CongruenceReport | None]]:
        if self.jobs == 1:
            for chunk in self._chunks():
                yield _evaluate_chunk(self.family, chunk)
            return
        window = 2 * self.jobs
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            pending = []
            for chunk in self._chunks():
                pending.append(pool.submit(_evaluate_chunk, self.family, chunk))
                if len(pending) >= window:
                    yield pending.pop(0).result()
            for fut in pending:
                yield fut.result()

    def __iter__(self) -> Iterator[CongruenceReport]:
        for results in self._results():
            for rep in results:
                if rep is None:
                    self.summary.skipped += 1
                    continue
                self.summary.add(rep)
                yield rep


def sweep(family: str, ranges: Mapping[str, Iterable[int]], jobs: int = 1) -> Sweep:
    return Sweep(family, ranges, jobs)


def report_json(rep: CongruenceReport) -> str:
    rec = rep.record
    return json.dumps(
        {
            "family": rec.family,
            "params": list(rec.params),
            "p": rec.p,
            "chi_neg": rec.chi_neg,
            "candidates": [
                {"a": e.a.value, "residual": e.residual.value, "holds": e.holds} for e in rep.entries
            ],
            "classification": rep.classification,
        },
        separators=(",", ":"),
    )


def report_csv_rows(rep: CongruenceReport) -> list[tuple[str, ...]]:
    rec = rep.record
    params = " ".join(str(v) for v in rec.params)
    return [
        (
            rec.family,
            params,
            str(rec.p),
            str(rec.chi_neg),
            str(e.a.value),
            str(e.residual.value),
            "true" if e.holds else "false",
            rep.classification,
        )
        for e in rep.entries
    ]


def write_reports(reports: Iterable[CongruenceReport], out: io.TextIOBase, fmt: str = "jsonl") -> None:
    """Stream reports as json-lines or CSV (RFC 4180: CRLF line ends, minimal quoting)."""
    if fmt == "jsonl":
        for rep in reports:
            out.write(report_json(rep) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\r\n")
        writer.writerow(CSV_HEADER)
        for rep in reports:
            writer.writerows(report_csv_rows(rep))
    else:
        raise InvalidParameters(f"unknown format {fmt!r}")
