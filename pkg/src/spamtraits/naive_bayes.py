"""Gaussian naive Bayes over numeric feature vectors.

Each class gets a prior and a per-feature Gaussian; scoring multiplies
them under the independence assumption. All arithmetic runs in log space
because a 21-factor product of small densities underflows doubles.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, EmptyClass
from .features import FeatureVector

_LOG_2PI = float(np.log(2.0 * np.pi))


@dataclass(frozen=True)
class NBConfig:
    variance_floor: float = 1e-6
    prior_smoothing: float = 1.0

    def __post_init__(self) -> None:
        if self.variance_floor <= 0:
            raise ValueError("variance_floor must be > 0")
        if self.prior_smoothing < 0:
            raise ValueError("prior_smoothing must be >= 0")


@dataclass(frozen=True)
class NBModel:
    classes: tuple[str, ...]
    priors: np.ndarray  # [C]
    means: np.ndarray  # [C, F]
    variances: np.ndarray  # [C, F], every entry >= the variance floor

    @property
    def feature_count(self) -> int:
        return int(self.means.shape[1])


def _class_order(
    data: Sequence[FeatureVector], classes: Sequence[str] | None
) -> tuple[str, ...]:
    if classes is not None:
        return tuple(classes)
    seen = {v.label for v in data}
    if None in seen:
        raise EmptyClass("unlabeled sample in training data")
    return tuple(sorted(seen))  # type: ignore[arg-type]


def _as_matrix(data: Sequence[FeatureVector]) -> np.ndarray:
    dims = {len(v.values) for v in data}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed dimensionalities in training data: {sorted(dims)}")
    return np.array([v.values for v in data], dtype=float)


def nb_fit(
    data: Sequence[FeatureVector],
    config: NBConfig = NBConfig(),
    classes: Sequence[str] | None = None,
) -> NBModel:
    """Estimate priors and per-class Gaussians from labeled vectors.

    Priors are smoothed counts; variances use the population convention
    and are clamped to the floor so constant features stay scoreable.
    """
    if not data:
        raise EmptyClass("no training data")
    order = _class_order(data, classes)
    if len(order) < 2:
        raise EmptyClass(f"need at least two classes, got {list(order)}")
    counts = Counter(v.label for v in data)
    unknown = set(counts) - set(order)
    if unknown:
        raise EmptyClass(f"samples labeled outside declared classes: {sorted(unknown)}")

    x = _as_matrix(data)
    n, n_features = x.shape
    s = config.prior_smoothing
    priors = np.array(
        [(counts.get(c, 0) + s) / (n + s * len(order)) for c in order], dtype=float
    )
    means = np.empty((len(order), n_features), dtype=float)
    variances = np.empty((len(order), n_features), dtype=float)
    for i, c in enumerate(order):
        if counts.get(c, 0) == 0:
            raise EmptyClass(f"class {c!r} has no training samples")
        rows = x[[v.label == c for v in data]]
        means[i] = rows.mean(axis=0)
        variances[i] = np.maximum(rows.var(axis=0), config.variance_floor)
    return NBModel(classes=order, priors=priors, means=means, variances=variances)


def _vector_values(x: FeatureVector | Sequence[float]) -> np.ndarray:
    values = getattr(x, "values", x)
    return np.asarray(values, dtype=float)


def log_likelihood_terms(model: NBModel, x: FeatureVector | Sequence[float]) -> np.ndarray:
    """Per-class, per-feature log density addends, shape [C, F]."""
    values = _vector_values(x)
    if values.shape != (model.feature_count,):
        raise DimensionMismatch(
            f"input has {values.shape[0] if values.ndim == 1 else values.shape} "
            f"features, model expects {model.feature_count}"
        )
    diff = values[None, :] - model.means
    return -0.5 * (_LOG_2PI + np.log(model.variances) + diff * diff / model.variances)


def _log_scores(model: NBModel, x: FeatureVector | Sequence[float]) -> np.ndarray:
    return np.log(model.priors) + log_likelihood_terms(model, x).sum(axis=1)


def nb_posterior(model: NBModel, x: FeatureVector | Sequence[float]) -> np.ndarray:
    """Normalized class probabilities for one input, summing to 1."""
    scores = _log_scores(model, x)
    shifted = scores - scores.max()
    weights = np.exp(shifted)
    return weights / weights.sum()


def nb_predict(model: NBModel, x: FeatureVector | Sequence[float]) -> str:
    """Highest-posterior class; ties go to the earliest declared class."""
    return model.classes[int(np.argmax(_log_scores(model, x)))]


class NaiveBayesLearner:
    """fit/predict adapter used by cross-validation and feature selection."""

    def __init__(
        self,
        config: NBConfig = NBConfig(),
        classes: Sequence[str] | None = None,
    ):
        self.config = config
        self.classes = classes
        self.model: NBModel | None = None

    def fit(self, data: Sequence[FeatureVector]) -> "NaiveBayesLearner":
        fitted = NaiveBayesLearner(self.config, self.classes)
        fitted.model = nb_fit(data, self.config, classes=self.classes)
        return fitted

    def predict(self, x: FeatureVector | Sequence[float]) -> str:
        if self.model is None:
            raise RuntimeError("learner is not fitted")
        return nb_predict(self.model, x)
