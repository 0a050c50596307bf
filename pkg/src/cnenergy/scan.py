"""Run bound checks over a stream of graphs and aggregate the outcome."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Iterator

from .bounds import BoundReport, Inapplicable, compute_context, normalize_selection, run_checks
from .energies import fmt_float
from .graph import Graph
from .graph6 import encode_graph6
from .tolerances import DEFAULT, Tolerances


@dataclass
class TheoremStats:
    checked: int = 0
    violations: int = 0
    equality_count: int = 0
    inapplicable: int = 0
    min_slack: float = math.inf
    min_slack_index: int | None = None
    min_slack_graph: str | None = None

    def add(self, report: BoundReport, index: int, graph6: str) -> None:
        self.checked += 1
        self.violations += not report.holds
        self.equality_count += report.equality
        self._offer(report.slack, index, graph6)

    def _offer(self, slack: float, index: int | None, graph6: str | None) -> None:
        if index is None:
            return
        if (slack, index) < (self.min_slack, self.min_slack_index if self.min_slack_index is not None else math.inf):
            self.min_slack, self.min_slack_index, self.min_slack_graph = slack, index, graph6

    def merge(self, other: TheoremStats) -> None:
        self.checked += other.checked
        self.violations += other.violations
        self.equality_count += other.equality_count
        self.inapplicable += other.inapplicable
        self._offer(other.min_slack, other.min_slack_index, other.min_slack_graph)

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "violations": self.violations,
            "equality_count": self.equality_count,
            "inapplicable": self.inapplicable,
            "min_slack": None if self.min_slack_index is None else fmt_float(self.min_slack),
            "min_slack_graph": self.min_slack_graph,
        }


@dataclass
class ScanSummary:
    """Commutative merge of per-graph results; lists are kept sorted by input index."""

    graphs: int = 0
    theorems: dict[str, TheoremStats] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    hyperenergetic: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    @property
    def total_violations(self) -> int:
        return sum(t.violations for t in self.theorems.values())

    def merge(self, other: ScanSummary) -> None:
        self.graphs += other.graphs
        for tid, stats in other.theorems.items():
            self.theorems.setdefault(tid, TheoremStats()).merge(stats)
        for mine, theirs in (
            (self.violations, other.violations),
            (self.hyperenergetic, other.hyperenergetic),
            (self.failures, other.failures),
        ):
            mine.extend(theirs)
            mine.sort(key=lambda d: (d["index"], d.get("theorem_id", "")))

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "total_violations": self.total_violations,
            "theorems": {tid: self.theorems[tid].to_dict() for tid in sorted(self.theorems)},
            "violations": self.violations,
            "hyperenergetic": self.hyperenergetic,
            "failures": self.failures,
        }


def evaluate_graph(index: int, g: Graph, selection: tuple[str, ...], tol: Tolerances) -> ScanSummary:
    """Summary of a single graph; per-graph failures are recorded, not raised."""
    out = ScanSummary(graphs=1)
    graph6 = encode_graph6(g)
    try:
        ctx = compute_context(g, tol)
        results = run_checks(ctx, selection, tol)
    except Exception as exc:  # noqa: BLE001 - a scan must survive one bad graph
        out.failures.append({"index": index, "graph6": graph6, "error": f"{type(exc).__name__}: {exc}"})
        return out
    for r in results:
        stats = out.theorems.setdefault(r.theorem_id, TheoremStats())
        if isinstance(r, Inapplicable):
            stats.inapplicable += 1
            continue
        stats.add(r, index, graph6)
        if not r.holds:
            out.violations.append({"index": index, "graph6": graph6, **r.to_dict()})
    flags = ctx.report.hyper_flags.names()
    if flags:
        out.hyperenergetic.append({"index": index, "graph6": graph6, "flags": flags})
    return out


def _evaluate_batch(batch: list[tuple[int, Graph]], selection: tuple[str, ...], tol: Tolerances) -> ScanSummary:
    total = ScanSummary()
    for index, g in batch:
        total.merge(evaluate_graph(index, g, selection, tol))
    return total


def _batches(items: Iterable[tuple[int, Graph]], size: int) -> Iterator[list[tuple[int, Graph]]]:
    it = iter(items)
    while batch := list(islice(it, size)):
        yield batch


def scan_corpus(
    graphs: Iterable[Graph],
    checks: str | Iterable[str] = "all",
    tol: Tolerances = DEFAULT,
    workers: int = 1,
    batch_size: int = 256,
) -> ScanSummary:
    """Run the selected checks over ``graphs``; the result is independent of ``workers``."""
    selection = normalize_selection(checks)
    summary = ScanSummary()
    indexed = enumerate(graphs)
    if workers <= 1:
        for batch in _batches(indexed, batch_size):
            summary.merge(_evaluate_batch(batch, selection, tol))
        return summary
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # Bounded window of in-flight batches keeps memory flat on long streams.
        window = workers * 4
        batches = _batches(indexed, batch_size)
        while chunk := list(islice(batches, window)):
            for part in pool.map(_evaluate_batch, chunk, [selection] * len(chunk), [tol] * len(chunk)):
                summary.merge(part)
    return summary
