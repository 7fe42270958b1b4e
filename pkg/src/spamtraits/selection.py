"""Best-first forward feature-subset search with a wrapper evaluator.

A subset's merit is the cross-validated accuracy of the wrapped learner
trained on just those features. The search starts from the empty set,
expands the best frontier subset by single-feature additions, and stops
after a run of non-improving expansions or when the evaluation budget
runs out. Smaller subsets win merit ties.
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import EmptyClass
from .evaluation import EvalReport, Learner, cross_validate, format_comparison_table
from .features import FeatureVector, project


@dataclass(frozen=True)
class WrapperEvaluator:
    learner: Learner
    k_folds: int = 10
    seed: int = 1


@dataclass(frozen=True)
class SearchConfig:
    evaluator: WrapperEvaluator
    stale_limit: int = 5
    max_evaluations: int | None = None  # None picks 10 * n_features**2

    def __post_init__(self) -> None:
        if self.stale_limit < 1:
            raise ValueError("stale_limit must be >= 1")
        if self.max_evaluations is not None and self.max_evaluations < 1:
            raise ValueError("max_evaluations must be >= 1")


@dataclass(frozen=True)
class FeatureSubset:
    indices: tuple[int, ...]  # sorted ascending, 1-based
    merit: float
    evaluations_used: int
    budget_exhausted: bool = False


def evaluate_subset(
    data: Sequence[FeatureVector],
    subset: Sequence[int],
    evaluator: WrapperEvaluator,
) -> float:
    """Merit of one subset: pooled CV accuracy on the projected data."""
    projected = [project(v, list(subset)) for v in data]
    report = cross_validate(
        evaluator.learner, projected, k=evaluator.k_folds, seed=evaluator.seed
    )
    return report.accuracy


def _majority_rate(data: Sequence[FeatureVector]) -> float:
    counts = Counter(v.label for v in data)
    return max(counts.values()) / len(data)


def best_first_forward(
    data: Sequence[FeatureVector],
    config: SearchConfig,
    on_evaluation: Callable[[tuple[int, ...], float], None] | None = None,
) -> FeatureSubset:
    """Search feature subsets, returning the best non-empty one found.

    The frontier is ordered by (merit desc, size asc, indices asc). The
    empty set seeds the search with the majority-class rate as its merit
    and costs nothing against the budget. Budget exhaustion is reported
    in-band via the budget_exhausted flag, never as an exception.
    """
    if not data:
        raise EmptyClass("no data to select features on")
    labels = {v.label for v in data}
    if None in labels:
        raise EmptyClass("labels required for feature selection")
    if len(labels) < 2:
        raise EmptyClass(f"need at least two classes, got {sorted(labels)}")  # type: ignore[type-var]

    n = len(data[0].values)
    budget = config.max_evaluations if config.max_evaluations is not None else 10 * n * n

    empty_merit = _majority_rate(data)
    merits: dict[tuple[int, ...], float] = {(): empty_merit}
    open_heap: list[tuple[float, int, tuple[int, ...]]] = [(-empty_merit, 0, ())]

    best: tuple[int, ...] = ()
    best_merit = empty_merit
    best_nonempty: tuple[int, ...] | None = None
    best_nonempty_merit = float("-inf")

    evaluations = 0
    stale = 0
    exhausted = False
    while open_heap and stale < config.stale_limit and not exhausted:
        _, _, subset = heapq.heappop(open_heap)
        improved = False
        for feature in range(1, n + 1):
            if feature in subset:
                continue
            child = tuple(sorted(subset + (feature,)))
            if child in merits:
                continue
            if evaluations >= budget:
                exhausted = True
                break
            merit = evaluate_subset(data, child, config.evaluator)
            evaluations += 1
            merits[child] = merit
            if on_evaluation is not None:
                on_evaluation(child, merit)
            heapq.heappush(open_heap, (-merit, len(child), child))
            if merit > best_merit:
                improved = True
            if merit > best_merit or (
                merit == best_merit and (len(child), child) < (len(best), best)
            ):
                best, best_merit = child, merit
            if merit > best_nonempty_merit or (
                merit == best_nonempty_merit
                and best_nonempty is not None
                and (len(child), child) < (len(best_nonempty), best_nonempty)
            ):
                best_nonempty, best_nonempty_merit = child, merit
        stale = 0 if improved else stale + 1

    if best_nonempty is None:
        raise ValueError("evaluation budget too small to score any subset")
    return FeatureSubset(
        indices=best_nonempty,
        merit=best_nonempty_merit,
        evaluations_used=evaluations,
        budget_exhausted=exhausted,
    )


def format_indices(indices: Sequence[int]) -> str:
    """Prose-style index list: "8, 9, 10, ... 17, and 18"."""
    items = [str(i) for i in indices]
    if len(items) == 1:
        return items[0]
    if len(items) == 2:
        return f"{items[0]} and {items[1]}"
    return ", ".join(items[:-1]) + f", and {items[-1]}"


def report_selection(
    result: FeatureSubset,
    subset_reports: Mapping[str, EvalReport],
    full_reports: Mapping[str, EvalReport] | None = None,
) -> str:
    """Selection summary plus a comparison table of full set vs subset."""
    lines = [
        f"Selected features: {format_indices(result.indices)}",
        f"Merit (CV accuracy): {result.merit:.4f}",
        f"Subset evaluations: {result.evaluations_used}",
    ]
    if result.budget_exhausted:
        lines.append("Note: evaluation budget exhausted; result is best-so-far.")
    rows: list[tuple[str, Mapping[str, EvalReport]]] = []
    if full_reports is not None:
        rows.append(("All features", full_reports))
    rows.append((f"Best first: {format_indices(result.indices)}", subset_reports))
    lines.append("")
    lines.append(format_comparison_table(rows))
    return "\n".join(lines)
