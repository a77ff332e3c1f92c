"""Deterministic JSON output: sorted keys, a schema version and run metadata."""

from __future__ import annotations

import json
import math
from fractions import Fraction

SCHEMA_VERSION = 1


def _default(obj):
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _clean(obj):
    """Replace infinities (not valid JSON) with strings and stringify dict keys."""
    if isinstance(obj, float) and math.isinf(obj):
        return "inf" if obj > 0 else "-inf"
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if hasattr(obj, "to_json"):
        return _clean(obj.to_json())
    return obj


def envelope(payload, *, seed: int, bounds: dict, order: str = "grevlex", command: str = "") -> dict:
    from . import __version__

    return {
        "schema_version": SCHEMA_VERSION,
        "artifact": {"name": "qhom", "version": __version__},
        "command": command,
        "seed": seed,
        "bounds": dict(bounds),
        "monomial_order": order,
        "result": payload,
    }


def dumps(obj, indent: int | None = 2) -> str:
    return json.dumps(_clean(obj), sort_keys=True, indent=indent, default=_default,
                      ensure_ascii=False) + "\n"


def write(path, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))
