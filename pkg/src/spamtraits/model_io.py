"""Versioned model persistence with checksum verification.

A model file is a canonical JSON document (sorted keys, two-space
indent) followed by one trailing line "checksum: sha256:<hex>" computed
over every byte before that line. JSON's shortest-repr float encoding
makes the round-trip bit-exact, so a reloaded model predicts identically.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import CorruptModel, UnsupportedVersion
from .mlp import MLPModel
from .naive_bayes import NBModel

FORMAT_VERSION = 1

_CHECKSUM_MARKER = b"checksum: sha256:"
# The trailer must be exactly 64 hex digits plus a newline; anything
# looser would let corruption of the trailer itself go unnoticed.
_HEX_LINE_RE = re.compile(r"\A[0-9a-f]{64}\n\Z")


@dataclass(frozen=True)
class ModelFile:
    format_version: int
    kind: str  # "naive_bayes" | "mlp"
    feature_names: tuple[str, ...]
    payload: dict


def _payload_for(model: NBModel | MLPModel) -> tuple[str, dict]:
    if isinstance(model, NBModel):
        return "naive_bayes", {
            "classes": list(model.classes),
            "priors": model.priors.tolist(),
            "means": model.means.tolist(),
            "variances": model.variances.tolist(),
        }
    if isinstance(model, MLPModel):
        return "mlp", {
            "classes": list(model.classes),
            "w_hidden": model.w_hidden.tolist(),
            "w_out": model.w_out.tolist(),
            "scale_min": model.scale_min.tolist(),
            "scale_max": model.scale_max.tolist(),
            "scale_to": list(model.scale_to),
        }
    raise TypeError(f"cannot serialize {type(model).__name__}")


def _model_from(kind: str, payload: dict) -> NBModel | MLPModel:
    try:
        if kind == "naive_bayes":
            return NBModel(
                classes=tuple(payload["classes"]),
                priors=np.array(payload["priors"], dtype=float),
                means=np.array(payload["means"], dtype=float),
                variances=np.array(payload["variances"], dtype=float),
            )
        if kind == "mlp":
            return MLPModel(
                classes=tuple(payload["classes"]),
                w_hidden=np.array(payload["w_hidden"], dtype=float),
                w_out=np.array(payload["w_out"], dtype=float),
                scale_min=np.array(payload["scale_min"], dtype=float),
                scale_max=np.array(payload["scale_max"], dtype=float),
                scale_to=(float(payload["scale_to"][0]), float(payload["scale_to"][1])),
            )
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise CorruptModel(f"model payload is malformed: {exc}") from exc
    raise CorruptModel(f"unknown model kind {kind!r}")


def serialize_model(
    model: NBModel | MLPModel, feature_names: Sequence[str]
) -> bytes:
    kind, payload = _payload_for(model)
    document = {
        "format_version": FORMAT_VERSION,
        "kind": kind,
        "feature_names": list(feature_names),
        "payload": payload,
    }
    body = (
        json.dumps(document, sort_keys=True, indent=2, allow_nan=False) + "\n"
    ).encode("utf-8")
    digest = hashlib.sha256(body).hexdigest()
    return body + _CHECKSUM_MARKER + digest.encode("ascii") + b"\n"


def parse_model_file(data: bytes) -> ModelFile:
    """Verify the checksum and decode the document, without rebuilding
    the model object."""
    pos = data.rfind(_CHECKSUM_MARKER)
    if pos < 0:
        raise CorruptModel("missing checksum line")
    body = data[:pos]
    trailer = data[pos + len(_CHECKSUM_MARKER) :].decode("ascii", "replace")
    if not _HEX_LINE_RE.match(trailer):
        raise CorruptModel("checksum line is malformed")
    claimed = trailer[:-1]
    actual = hashlib.sha256(body).hexdigest()
    if actual != claimed:
        raise CorruptModel(f"checksum mismatch: file says {claimed}, content is {actual}")
    try:
        document = json.loads(body.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CorruptModel(f"model document is not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise CorruptModel("model document is not a JSON object")
    version = document.get("format_version")
    if version != FORMAT_VERSION:
        raise UnsupportedVersion(
            f"model format version {version!r} is not supported (this build reads {FORMAT_VERSION})"
        )
    kind = document.get("kind")
    payload = document.get("payload")
    names = document.get("feature_names")
    if not isinstance(kind, str) or not isinstance(payload, dict) or not isinstance(names, list):
        raise CorruptModel("model document is missing kind, payload, or feature_names")
    return ModelFile(
        format_version=version,
        kind=kind,
        feature_names=tuple(names),
        payload=payload,
    )


def deserialize_model(data: bytes) -> tuple[NBModel | MLPModel, tuple[str, ...]]:
    mf = parse_model_file(data)
    return _model_from(mf.kind, mf.payload), mf.feature_names


def save_model(
    model: NBModel | MLPModel, feature_names: Sequence[str], path: str | Path
) -> None:
    Path(path).write_bytes(serialize_model(model, feature_names))


def load_model(path: str | Path) -> tuple[NBModel | MLPModel, tuple[str, ...]]:
    """Load and verify a model file.

    Raises CorruptModel on any checksum or decoding failure and
    UnsupportedVersion when the file declares a different format version.
    """
    return deserialize_model(Path(path).read_bytes())
