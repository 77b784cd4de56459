"""JSON schemas and the deterministic serializer used by the CLI.

Parsing is strict: unknown fields are rejected, types are checked, and
domain violations surface as the library's own error codes.  Serialization
fixes key order and renders floats with 10 significant digits so identical
inputs produce byte-identical output on any platform.
"""

from __future__ import annotations

import json
import math
import re
from typing import Any, Mapping, Optional

from .errors import SchemaViolation
from .geometry import DistortionEnvelope, RadiusResult
from .membership import Decomposition, ProductParamResult
from .oracle import MarginReport
from .series import NegCoeffSeries, make_series
from .weights import ClassParams

_INT_KEY = re.compile(r"^-?\d+$")


def _require_keys(data: Mapping[str, Any], required: tuple[str, ...], what: str) -> None:
    if not isinstance(data, dict):
        raise SchemaViolation(f"{what} must be a JSON object, got {type(data).__name__}")
    missing = [k for k in required if k not in data]
    unknown = [k for k in data if k not in required]
    if missing:
        raise SchemaViolation(f"{what} is missing fields: {', '.join(missing)}")
    if unknown:
        raise SchemaViolation(f"{what} has unknown fields: {', '.join(unknown)}")


def _as_int(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaViolation(f"{name} must be an integer, got {value!r}")
    return value


def _as_number(value: Any, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaViolation(f"{name} must be a number, got {value!r}")
    return float(value)


def parse_series(data: Any) -> NegCoeffSeries:
    """Read {"j": int, "terms": {"k": a_k, ...}} with integer-string keys."""
    _require_keys(data, ("j", "terms"), "series document")
    j = _as_int(data["j"], "series field 'j'")
    terms_raw = data["terms"]
    if not isinstance(terms_raw, dict):
        raise SchemaViolation("series field 'terms' must be an object")
    terms: dict[int, float] = {}
    for key, value in terms_raw.items():
        if not isinstance(key, str) or not _INT_KEY.match(key):
            raise SchemaViolation(f"series term key {key!r} is not a base-10 integer string")
        terms[int(key)] = _as_number(value, f"series coefficient at {key}")
    return make_series(j, terms)


def series_to_dict(f: NegCoeffSeries) -> dict[str, Any]:
    return {"j": f.j, "terms": {str(k): float(a) for k, a in sorted(f.terms.items())}}


def parse_params(data: Any) -> ClassParams:
    """Read {"n", "m", "beta", "j", "mode"}; mode is "integral" or "dual"."""
    _require_keys(data, ("n", "m", "beta", "j", "mode"), "params document")
    mode = data["mode"]
    if not isinstance(mode, str):
        raise SchemaViolation(f"params field 'mode' must be a string, got {mode!r}")
    return ClassParams(
        n=_as_int(data["n"], "params field 'n'"),
        m=_as_int(data["m"], "params field 'm'"),
        beta=_as_number(data["beta"], "params field 'beta'"),
        j=_as_int(data["j"], "params field 'j'"),
        mode=mode,
    )


def params_to_dict(p: ClassParams) -> dict[str, Any]:
    return {"n": p.n, "m": p.m, "beta": float(p.beta), "j": p.j, "mode": p.mode}


def margin_to_dict(rep: MarginReport) -> dict[str, Any]:
    return {
        "margin": float(rep.margin),
        "worst_z": {"re": float(rep.worst_z.real), "im": float(rep.worst_z.imag)},
        "degenerate_samples": int(rep.degenerate_samples),
    }


def radius_to_dict(res: RadiusResult) -> dict[str, Any]:
    return {
        "kind": res.kind,
        "value": float(res.value),
        "attained_k": int(res.attained_k),
        "scanned_to": int(res.scanned_to),
        "clipped": bool(res.clipped),
    }


def envelope_to_dict(env: DistortionEnvelope) -> dict[str, Any]:
    return {
        "lower": float(env.lower),
        "upper": float(env.upper),
        "r": float(env.r),
        "i": int(env.i),
        "vacuous_lower": bool(env.vacuous_lower),
    }


def product_to_dict(res: ProductParamResult) -> dict[str, Any]:
    printed: Optional[float] = float(res.printed_value)
    if not math.isfinite(printed):
        printed = None
    return {
        "kind": res.kind,
        "printed": printed,
        "derived": None if res.derived_value is None else float(res.derived_value),
        "attained_k": None if res.attained_k is None else int(res.attained_k),
        "feasible": bool(res.feasible),
    }


def decomposition_to_dict(d: Decomposition) -> dict[str, Any]:
    return {
        "mu_j": float(d.mu_j),
        "mus": {str(k): float(v) for k, v in sorted(d.mus.items())},
    }


def format_float(x: float) -> str:
    """Fixed 10-significant-digit token; non-finite values become null."""
    if not math.isfinite(x):
        return "null"
    token = format(x, ".10g")
    if "." not in token and "e" not in token and "E" not in token:
        token += ".0"
    return token


def dumps(value: Any) -> str:
    """Compact deterministic JSON: insertion-ordered keys, fixed float format."""
    out: list[str] = []
    _write(value, out)
    return "".join(out)


def _write(value: Any, out: list[str]) -> None:
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        out.append(format_float(value))
    elif isinstance(value, dict):
        out.append("{")
        for pos, (key, item) in enumerate(value.items()):
            if not isinstance(key, str):
                raise TypeError(f"JSON keys must be strings, got {key!r}")
            if pos:
                out.append(",")
            out.append(json.dumps(key))
            out.append(":")
            _write(item, out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for pos, item in enumerate(value):
            if pos:
                out.append(",")
            _write(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")
