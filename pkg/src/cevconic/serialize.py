"""Exact JSON encodings.  Rationals are strings, never floats."""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Any

from cevconic.conics import Conic
from cevconic.kernel import INFINITY, HLine, HPoint, Mat3
from cevconic.triangle import Bary, format_rational


def point_json(p: HPoint) -> Any:
    if p.is_infinite:
        return {"infinite": [str(p.coords[0]), str(p.coords[1])]}
    return [format_rational(c) for c in p.xy]


def to_json(value: Any) -> Any:
    """Best-effort exact encoding used for witnesses and reports."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, HPoint):
        return point_json(value)
    if isinstance(value, (HLine, Bary)):
        return [str(c) for c in value.coords]
    if isinstance(value, Mat3):
        return [str(c) for c in value.entries]
    if isinstance(value, Conic):
        return [str(c) for c in value.coeffs]
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if value is INFINITY:
        return "infinity"
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    if dataclasses.is_dataclass(value):
        return {f.name: to_json(getattr(value, f.name))
                for f in dataclasses.fields(value) if getattr(value, f.name) is not None}
    return repr(value)
