"""Curve-spec ingestion and deterministic serialization helpers.

Curve specs are JSON objects:

    {"kind": "support", "constant": 40, "cos": {"3": 3}, "sin": {"2": -1},
     "rotation": 1}
    {"kind": "support", "sin": {"5": 1}, "half_harmonics": true,
     "rotation": 2.5}
    {"kind": "parametric", "x": {"poly": [0, 0, 1]}, "y": {"poly": [0, 0, 0, 1]},
     "domain": [-1, 1], "closed": false}

With ``half_harmonics`` the harmonic keys count halves of the fundamental
frequency (key "5" means frequency 5/2) and the support function has period
4*pi.  Angles are radians everywhere; the CLI additionally accepts symbolic
fractions of pi such as "pi/6" or "3pi/4".
"""

from __future__ import annotations

import json
import math
import re

from .curves import CoefficientMap, ParamCurve, SupportCurve
from .errors import SpecError
from .trigpoly import TWO_PI, TrigPoly

_SUPPORT_KEYS = {"kind", "constant", "cos", "sin", "half_harmonics", "rotation"}
_PARAM_KEYS = {"kind", "x", "y", "domain", "closed"}
_MAP_KEYS = {"poly", "cos", "sin"}


def _harmonic_table(obj, field: str) -> dict:
    if not isinstance(obj, dict):
        raise SpecError("must be an object of harmonic -> coefficient", field=field)
    out = {}
    for key, value in obj.items():
        try:
            n = int(key)
        except (TypeError, ValueError):
            raise SpecError(f"harmonic key {key!r} is not an integer", field=field)
        if n < 1:
            raise SpecError(f"harmonic {n} must be positive", field=field)
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise SpecError(f"coefficient for harmonic {n} must be a number", field=field)
        out[n] = float(value)
    return out


def _number(obj, field: str) -> float:
    if not isinstance(obj, (int, float)) or isinstance(obj, bool):
        raise SpecError("must be a number", field=field)
    return float(obj)


def parse_curve_spec(text_or_dict) -> SupportCurve | ParamCurve:
    """Parse a curve spec (JSON text or already-decoded dict).

    Unknown keys are rejected; errors carry the offending field path.
    """
    if isinstance(text_or_dict, (str, bytes)):
        try:
            spec = json.loads(text_or_dict)
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON: {exc}") from exc
    else:
        spec = text_or_dict
    if not isinstance(spec, dict):
        raise SpecError("curve spec must be a JSON object")
    kind = spec.get("kind")
    if kind == "support":
        return _parse_support(spec)
    if kind == "parametric":
        return _parse_parametric(spec)
    raise SpecError(f"kind must be 'support' or 'parametric', got {kind!r}", field="kind")


def _parse_support(spec: dict) -> SupportCurve:
    unknown = set(spec) - _SUPPORT_KEYS
    if unknown:
        raise SpecError(f"unknown key(s) {sorted(unknown)}", field="support")
    half = spec.get("half_harmonics", False)
    if not isinstance(half, bool):
        raise SpecError("must be a boolean", field="half_harmonics")
    period = 2 * TWO_PI if half else TWO_PI
    p = TrigPoly(
        constant=_number(spec.get("constant", 0.0), "constant"),
        cos_coeffs=_harmonic_table(spec.get("cos", {}), "cos"),
        sin_coeffs=_harmonic_table(spec.get("sin", {}), "sin"),
        period=period,
    )
    rotation = _number(spec.get("rotation", 1), "rotation")
    twice = 2 * rotation
    if abs(twice - round(twice)) > 1e-12 or rotation <= 0:
        raise SpecError("rotation must be a positive integer or half-integer", field="rotation")
    if not half and abs(rotation - round(rotation)) > 1e-12:
        raise SpecError(
            "half-integer rotation requires half_harmonics (period 4*pi)", field="rotation"
        )
    if p.constant == 0.0 and not p.harmonics:
        raise SpecError("support function is identically zero", field="support")
    return SupportCurve(p, rotation_number=rotation)


def _parse_map(obj, field: str) -> CoefficientMap:
    if not isinstance(obj, dict):
        raise SpecError("must be an object", field=field)
    unknown = set(obj) - _MAP_KEYS
    if unknown:
        raise SpecError(f"unknown key(s) {sorted(unknown)}", field=field)
    poly = obj.get("poly", [])
    if not isinstance(poly, list):
        raise SpecError("poly must be a list of coefficients", field=f"{field}.poly")
    return CoefficientMap(
        poly=[_number(c, f"{field}.poly[{i}]") for i, c in enumerate(poly)],
        cos=_harmonic_table(obj.get("cos", {}), f"{field}.cos"),
        sin=_harmonic_table(obj.get("sin", {}), f"{field}.sin"),
    )


def _parse_parametric(spec: dict) -> ParamCurve:
    unknown = set(spec) - _PARAM_KEYS
    if unknown:
        raise SpecError(f"unknown key(s) {sorted(unknown)}", field="parametric")
    for required in ("x", "y", "domain"):
        if required not in spec:
            raise SpecError("missing required key", field=required)
    domain = spec["domain"]
    if not (isinstance(domain, list) and len(domain) == 2):
        raise SpecError("domain must be [t0, t1]", field="domain")
    closed = spec.get("closed", False)
    if not isinstance(closed, bool):
        raise SpecError("must be a boolean", field="closed")
    return ParamCurve(
        _parse_map(spec["x"], "x"),
        _parse_map(spec["y"], "y"),
        ( _number(domain[0], "domain[0]"), _number(domain[1], "domain[1]") ),
        closed=closed,
    )


def serialize_curve_spec(curve) -> dict:
    """Inverse of parse_curve_spec, with identical coefficient tables."""
    if isinstance(curve, SupportCurve):
        out = {"kind": "support"}
        if curve.p.constant:
            out["constant"] = curve.p.constant
        if curve.p.cos_coeffs:
            out["cos"] = {str(n): a for n, a in curve.p.cos_coeffs.items()}
        if curve.p.sin_coeffs:
            out["sin"] = {str(n): b for n, b in curve.p.sin_coeffs.items()}
        if curve.p.period != TWO_PI:
            out["half_harmonics"] = True
        out["rotation"] = curve.rotation_number
        return out
    out = {"kind": "parametric"}
    for name, cmap in (("x", curve.x_map), ("y", curve.y_map)):
        entry = {}
        if cmap.poly:
            entry["poly"] = list(cmap.poly)
        if cmap.cos:
            entry["cos"] = {str(n): a for n, a in cmap.cos.items()}
        if cmap.sin:
            entry["sin"] = {str(n): b for n, b in cmap.sin.items()}
        out[name] = entry
    out["domain"] = list(curve.domain)
    out["closed"] = curve.closed
    return out


_ANGLE_RE = re.compile(
    r"^\s*(?P<coeff>[-+]?\d*\.?\d*(?:[eE][-+]?\d+)?)\s*\*?\s*(?P<pi>pi)?\s*"
    r"(?:/\s*(?P<den>\d*\.?\d+))?\s*$"
)


def parse_angle(text) -> float:
    """Radians from a numeric literal or a symbolic fraction of pi.

    Accepted forms: "0.7", "pi", "pi/6", "3pi/4", "0.5pi", "-pi/2".
    """
    if isinstance(text, (int, float)):
        return float(text)
    m = _ANGLE_RE.match(text)
    if not m or (not m.group("coeff") and not m.group("pi")):
        raise SpecError(f"cannot parse angle {text!r}")
    coeff = m.group("coeff")
    if coeff in ("", "+", "-"):
        value = -1.0 if coeff == "-" else 1.0
        if not m.group("pi"):
            raise SpecError(f"cannot parse angle {text!r}")
    else:
        value = float(coeff)
    if m.group("pi"):
        value *= math.pi
    if m.group("den"):
        value /= float(m.group("den"))
    return value


# ---------------------------------------------------------------------------
# deterministic writers


def format_float(x: float) -> str:
    """Locale-independent fixed formatting used by CSV output."""
    return "%.12g" % float(x)


def write_csv(path, header: list[str], rows) -> None:
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for cell in row:
            cells.append(cell if isinstance(cell, str) else format_float(cell))
        lines.append(",".join(cells))
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_json_report(path, obj: dict) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        json.dump(obj, fh, sort_keys=True, indent=2)
        fh.write("\n")
