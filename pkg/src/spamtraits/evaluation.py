"""Confusion matrices, accuracy/precision/recall, and stratified
cross-validation, plus the fixed-width report tables the CLI prints.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Protocol, Sequence

import numpy as np

from .errors import (
    EmptyMatrix,
    FoldEvaluationError,
    LengthMismatch,
    SpamtraitsError,
    TooFewSamples,
)
from .features import FeatureVector


class Learner(Protocol):
    def fit(self, data: Sequence[FeatureVector]) -> "Learner": ...

    def predict(self, x: FeatureVector) -> str: ...


@dataclass(frozen=True)
class ConfusionMatrix:
    """counts[i][j] = samples predicted classes[i] whose true class is classes[j]."""

    classes: tuple[str, ...]
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def cell(self, predicted: str, true: str) -> int:
        return int(
            self.counts[self.classes.index(predicted), self.classes.index(true)]
        )


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    support: int


@dataclass(frozen=True)
class EvalReport:
    matrix: ConfusionMatrix
    accuracy: float
    per_class: Mapping[str, ClassMetrics]
    weighted_precision: float
    weighted_recall: float
    warnings: tuple[str, ...] = ()
    fold_reports: tuple["EvalReport", ...] = field(default=(), repr=False)


def confusion(
    preds: Sequence[str],
    truth: Sequence[str],
    classes: Sequence[str] | None = None,
) -> ConfusionMatrix:
    if len(preds) != len(truth):
        raise LengthMismatch(
            f"{len(preds)} predictions against {len(truth)} true labels"
        )
    if not preds:
        raise EmptyMatrix("no samples to tabulate")
    order = tuple(classes) if classes is not None else tuple(sorted(set(preds) | set(truth)))
    index = {c: i for i, c in enumerate(order)}
    counts = np.zeros((len(order), len(order)), dtype=int)
    for p, t in zip(preds, truth):
        counts[index[p], index[t]] += 1
    return ConfusionMatrix(classes=order, counts=counts)


def metrics(matrix: ConfusionMatrix) -> EvalReport:
    """Accuracy plus per-class and support-weighted precision/recall.

    A 0/0 ratio is reported as 0 and noted in the warnings so degenerate
    predictions are visible rather than silently optimistic.
    """
    total = matrix.total
    if total == 0:
        raise EmptyMatrix("confusion matrix has no samples")
    counts = matrix.counts
    accuracy = float(np.trace(counts)) / total

    warnings: list[str] = []
    per_class: dict[str, ClassMetrics] = {}
    for i, c in enumerate(matrix.classes):
        tp = int(counts[i, i])
        predicted = int(counts[i, :].sum())
        support = int(counts[:, i].sum())
        if predicted == 0:
            precision = 0.0
            warnings.append(f"precision for {c!r} is 0/0, reported as 0")
        else:
            precision = tp / predicted
        if support == 0:
            recall = 0.0
            warnings.append(f"recall for {c!r} is 0/0, reported as 0")
        else:
            recall = tp / support
        per_class[c] = ClassMetrics(precision=precision, recall=recall, support=support)

    weighted_precision = sum(
        m.support / total * m.precision for m in per_class.values()
    )
    weighted_recall = sum(m.support / total * m.recall for m in per_class.values())
    return EvalReport(
        matrix=matrix,
        accuracy=accuracy,
        per_class=per_class,
        weighted_precision=weighted_precision,
        weighted_recall=weighted_recall,
        warnings=tuple(warnings),
    )


def stratified_folds(
    data: Sequence[FeatureVector], k: int, seed: int = 1
) -> list[list[int]]:
    """Partition sample indices into k folds with near-equal class counts.

    Per-class counts across folds differ by at most one. The assignment
    is a pure function of (labels, k, seed).
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    by_class: dict[str, list[int]] = defaultdict(list)
    for i, v in enumerate(data):
        if v.label is None:
            raise TooFewSamples(f"sample {v.source_id or i} has no label")
        by_class[v.label].append(i)

    rng = random.Random(seed)
    folds: list[list[int]] = [[] for _ in range(k)]
    for label in sorted(by_class):
        indices = by_class[label]
        if len(indices) < k:
            raise TooFewSamples(
                f"class {label!r} has {len(indices)} samples, fewer than k={k}"
            )
        rng.shuffle(indices)
        for j in range(k):
            folds[j].extend(indices[j::k])
    return [sorted(fold) for fold in folds]


def cross_validate(
    learner: Learner,
    data: Sequence[FeatureVector],
    k: int = 10,
    seed: int = 1,
) -> EvalReport:
    """k-fold CV with pooled predictions.

    Each fold's model is fitted on the other k-1 folds only, so scaling
    and parameter estimates never see the held-out samples. The headline
    report tabulates all pooled predictions in dataset order; per-fold
    reports ride along in fold_reports.
    """
    folds = stratified_folds(data, k, seed)
    classes = tuple(sorted({v.label for v in data}))  # type: ignore[arg-type]
    preds: list[str | None] = [None] * len(data)
    fold_reports: list[EvalReport] = []
    for fold_no, test_idx in enumerate(folds):
        test_set = set(test_idx)
        train = [data[i] for i in range(len(data)) if i not in test_set]
        try:
            fitted = learner.fit(train)
            fold_preds = [fitted.predict(data[i]) for i in test_idx]
        except SpamtraitsError as exc:
            raise FoldEvaluationError(fold_no, exc) from exc
        for i, p in zip(test_idx, fold_preds):
            preds[i] = p
        fold_reports.append(
            metrics(confusion(fold_preds, [data[i].label for i in test_idx], classes))
        )
    truth = [v.label for v in data]
    pooled = metrics(confusion(preds, truth, classes))  # type: ignore[arg-type]
    return EvalReport(
        matrix=pooled.matrix,
        accuracy=pooled.accuracy,
        per_class=pooled.per_class,
        weighted_precision=pooled.weighted_precision,
        weighted_recall=pooled.weighted_recall,
        warnings=pooled.warnings,
        fold_reports=tuple(fold_reports),
    )


def format_report(report: EvalReport) -> str:
    """Single-classifier report: matrix, per-class table, weighted line."""
    classes = report.matrix.classes
    width = max(8, max(len(c) for c in classes) + 2)
    lines = ["Confusion matrix (rows predicted, columns true):"]
    lines.append(" " * width + "".join(f"{c:>{width}}" for c in classes))
    for i, c in enumerate(classes):
        row = "".join(f"{int(n):>{width}}" for n in report.matrix.counts[i])
        lines.append(f"{c:>{width}}" + row)
    lines.append("")
    lines.append(f"Accuracy: {report.accuracy:.4f}")
    lines.append(f"{'Class':<{width}}{'Precision':>12}{'Recall':>12}{'Support':>12}")
    for c in classes:
        m = report.per_class[c]
        lines.append(
            f"{c:<{width}}{m.precision:>12.4f}{m.recall:>12.4f}{m.support:>12}"
        )
    lines.append(
        f"{'weighted':<{width}}"
        f"{report.weighted_precision:>12.4f}{report.weighted_recall:>12.4f}"
        f"{report.matrix.total:>12}"
    )
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def format_comparison_table(
    rows: Sequence[tuple[str, Mapping[str, EvalReport]]],
    label_header: str = "Feature set",
) -> str:
    """Fixed-width table: one row per feature set, a three-metric column
    group (accuracy, precision, recall, in percent) per classifier."""
    if not rows:
        raise ValueError("no rows to format")
    classifiers = list(rows[0][1].keys())
    label_width = max(len(label_header), max(len(label) for label, _ in rows))
    group_width = 9 + 11 + 11
    metric_heads = f"{'Acc %':>9}{'Prec %':>11}{'Rec %':>11}"
    header1 = " | ".join(
        [f"{label_header:<{label_width}}"]
        + [f"{name:<{group_width}}" for name in classifiers]
    )
    header2 = " | ".join(
        [" " * label_width] + [metric_heads for _ in classifiers]
    )
    lines = [header1.rstrip(), header2.rstrip()]
    lines.append("-" * max(len(lines[0]), len(lines[1])))
    for label, reports in rows:
        cells = [f"{label:<{label_width}}"]
        for name in classifiers:
            r = reports[name]
            cells.append(
                f"{100 * r.accuracy:>9.1f}"
                f"{100 * r.weighted_precision:>11.1f}"
                f"{100 * r.weighted_recall:>11.1f}"
            )
        lines.append(" | ".join(cells).rstrip())
    return "\n".join(lines)
