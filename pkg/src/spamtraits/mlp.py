"""Single-hidden-layer feed-forward network trained by stochastic
gradient descent with momentum.

Sigmoid units throughout, one output per class with 1-hot targets,
squared-error loss. Inputs are min-max scaled with statistics from the
training set only. Everything is deterministic in the config seed:
weight init and the per-epoch shuffle share one generator.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, EmptyClass, NonFiniteLoss
from .features import FeatureVector


@dataclass(frozen=True)
class MLPConfig:
    hidden_units: int | None = None  # None picks ceil((features + classes) / 2)
    learning_rate: float = 0.3
    momentum: float = 0.2
    epochs: int = 500
    seed: int = 1
    scale_to: tuple[float, float] = (-1.0, 1.0)

    def __post_init__(self) -> None:
        if self.hidden_units is not None and self.hidden_units < 1:
            raise ValueError("hidden_units must be >= 1")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")
        if not 0 <= self.momentum < 1:
            raise ValueError("momentum must be in [0, 1)")
        if self.epochs < 0:
            raise ValueError("epochs must be >= 0")
        if self.scale_to[0] >= self.scale_to[1]:
            raise ValueError("scale_to interval is empty")


@dataclass(frozen=True)
class MLPModel:
    classes: tuple[str, ...]
    w_hidden: np.ndarray  # [H, F+1], bias in the last column
    w_out: np.ndarray  # [C, H+1], bias in the last column
    scale_min: np.ndarray  # [F]
    scale_max: np.ndarray  # [F]
    scale_to: tuple[float, float]

    @property
    def feature_count(self) -> int:
        return int(self.w_hidden.shape[1]) - 1


def _sigmoid(z: np.ndarray) -> np.ndarray:
    # Clipping at 500 is an identity in double precision (the tail rounds
    # to 0 or 1 anyway) but keeps exp() inside the finite range.
    return 1.0 / (1.0 + np.exp(-np.clip(z, -500.0, 500.0)))


def _scale_inputs(model: MLPModel, values: np.ndarray) -> np.ndarray:
    lo, hi = model.scale_to
    span = model.scale_max - model.scale_min
    # A feature that never varied in training sits at the interval midpoint.
    scaled = np.full(values.shape, (lo + hi) / 2.0)
    moving = span != 0
    scaled[moving] = lo + (values[moving] - model.scale_min[moving]) * (
        (hi - lo) / span[moving]
    )
    return scaled


def _forward(
    model: MLPModel, values: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    xb = np.append(_scale_inputs(model, values), 1.0)
    hidden = _sigmoid(model.w_hidden @ xb)
    hb = np.append(hidden, 1.0)
    out = _sigmoid(model.w_out @ hb)
    return xb, hidden, hb, out


def _check_input(model: MLPModel, x: FeatureVector | Sequence[float]) -> np.ndarray:
    values = np.asarray(getattr(x, "values", x), dtype=float)
    if values.shape != (model.feature_count,):
        raise DimensionMismatch(
            f"input has {values.size} features, model expects {model.feature_count}"
        )
    return values


def _class_order(
    data: Sequence[FeatureVector], classes: Sequence[str] | None
) -> tuple[str, ...]:
    if classes is None:
        labels = {v.label for v in data}
        if None in labels:
            raise EmptyClass("unlabeled sample in training data")
        order = tuple(sorted(labels))  # type: ignore[arg-type]
    else:
        order = tuple(classes)
    if len(order) < 2:
        raise EmptyClass(f"need at least two classes, got {list(order)}")
    counts = Counter(v.label for v in data)
    for c in order:
        if counts.get(c, 0) == 0:
            raise EmptyClass(f"class {c!r} has no training samples")
    unknown = set(counts) - set(order)
    if unknown:
        raise EmptyClass(f"samples labeled outside declared classes: {sorted(unknown)}")
    return order


def mlp_train(
    data: Sequence[FeatureVector],
    config: MLPConfig = MLPConfig(),
    classes: Sequence[str] | None = None,
) -> MLPModel:
    """Train for exactly config.epochs passes of per-sample updates.

    Raises NonFiniteLoss if the squared error ever leaves the finite
    range, which in practice means the learning rate diverged.
    """
    if not data:
        raise EmptyClass("no training data")
    order = _class_order(data, classes)
    dims = {len(v.values) for v in data}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed dimensionalities in training data: {sorted(dims)}")

    x = np.array([v.values for v in data], dtype=float)
    n, n_features = x.shape
    n_classes = len(order)
    hidden = config.hidden_units or math.ceil((n_features + n_classes) / 2)

    class_index = {c: i for i, c in enumerate(order)}
    targets = np.zeros((n, n_classes))
    for i, v in enumerate(data):
        targets[i, class_index[v.label]] = 1.0

    scale_min = x.min(axis=0)
    scale_max = x.max(axis=0)
    lo, hi = config.scale_to
    span = scale_max - scale_min
    x_scaled = np.full(x.shape, (lo + hi) / 2.0)
    moving = span != 0
    x_scaled[:, moving] = lo + (x[:, moving] - scale_min[moving]) * (
        (hi - lo) / span[moving]
    )
    x_scaled = np.hstack([x_scaled, np.ones((n, 1))])

    rng = np.random.default_rng(config.seed)
    w_hidden = rng.uniform(-0.5, 0.5, (hidden, n_features + 1))
    w_out = rng.uniform(-0.5, 0.5, (n_classes, hidden + 1))

    lr = config.learning_rate
    mom = config.momentum
    vel_hidden = np.zeros_like(w_hidden)
    vel_out = np.zeros_like(w_out)
    order_idx = np.arange(n)
    for _ in range(config.epochs):
        rng.shuffle(order_idx)
        for i in order_idx:
            xb = x_scaled[i]
            h = _sigmoid(w_hidden @ xb)
            hb = np.append(h, 1.0)
            out = _sigmoid(w_out @ hb)
            err = out - targets[i]
            loss = 0.5 * float(err @ err)
            if not math.isfinite(loss):
                raise NonFiniteLoss(
                    f"loss became non-finite (learning_rate={lr}, momentum={mom})"
                )
            delta_out = err * out * (1.0 - out)
            delta_hidden = (w_out[:, :-1].T @ delta_out) * h * (1.0 - h)
            vel_out = mom * vel_out - lr * np.outer(delta_out, hb)
            vel_hidden = mom * vel_hidden - lr * np.outer(delta_hidden, xb)
            w_out = w_out + vel_out
            w_hidden = w_hidden + vel_hidden

    return MLPModel(
        classes=order,
        w_hidden=w_hidden,
        w_out=w_out,
        scale_min=scale_min,
        scale_max=scale_max,
        scale_to=config.scale_to,
    )


def mlp_predict(
    model: MLPModel, x: FeatureVector | Sequence[float]
) -> tuple[str, np.ndarray]:
    """Label plus per-class output activations; ties go to the earliest class."""
    values = _check_input(model, x)
    _, _, _, out = _forward(model, values)
    return model.classes[int(np.argmax(out))], out


def mlp_gradient(
    model: MLPModel,
    x: FeatureVector | Sequence[float],
    target: Sequence[float],
) -> tuple[np.ndarray, np.ndarray]:
    """Analytic gradient of 0.5 * sum((out - target)^2) w.r.t. both weight
    matrices, evaluated at the model's current weights."""
    values = _check_input(model, x)
    t = np.asarray(target, dtype=float)
    if t.shape != (len(model.classes),):
        raise DimensionMismatch(
            f"target has {t.size} entries, model has {len(model.classes)} classes"
        )
    xb, h, hb, out = _forward(model, values)
    err = out - t
    delta_out = err * out * (1.0 - out)
    delta_hidden = (model.w_out[:, :-1].T @ delta_out) * h * (1.0 - h)
    return np.outer(delta_hidden, xb), np.outer(delta_out, hb)


class MLPLearner:
    """fit/predict adapter used by cross-validation and feature selection."""

    def __init__(
        self,
        config: MLPConfig = MLPConfig(),
        classes: Sequence[str] | None = None,
    ):
        self.config = config
        self.classes = classes
        self.model: MLPModel | None = None

    def fit(self, data: Sequence[FeatureVector]) -> "MLPLearner":
        fitted = MLPLearner(self.config, self.classes)
        fitted.model = mlp_train(data, self.config, classes=self.classes)
        return fitted

    def predict(self, x: FeatureVector | Sequence[float]) -> str:
        if self.model is None:
            raise RuntimeError("learner is not fitted")
        return mlp_predict(self.model, x)[0]
