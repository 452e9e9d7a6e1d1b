"""Curve file format: one vertex per line, comma-separated coordinates,
no header; blank lines are ignored and the dimension of the first vertex
is enforced for all others."""
from __future__ import annotations

import os
from typing import Union

import numpy as np

from .geometry import PolyCurve

__all__ = ["read_curve", "write_curve", "parse_curve_text", "format_curve_text"]


def parse_curve_text(text: str, source: str = "<string>") -> PolyCurve:
    rows = []
    dim = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split(",")
        try:
            coords = [float(p) for p in parts]
        except ValueError:
            raise ValueError(f"{source}:{lineno}: cannot parse coordinates {line!r}")
        if dim is None:
            dim = len(coords)
        elif len(coords) != dim:
            raise ValueError(
                f"{source}:{lineno}: expected {dim} coordinates, got {len(coords)}"
            )
        rows.append(coords)
    if not rows:
        raise ValueError(f"{source}: no vertices found")
    return PolyCurve(np.asarray(rows, dtype=np.float64))


def read_curve(path: Union[str, os.PathLike]) -> PolyCurve:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_curve_text(fh.read(), source=str(path))


def format_curve_text(P: PolyCurve) -> str:
    lines = [",".join(repr(float(x)) for x in row) for row in P.vertices]
    return "\n".join(lines) + "\n"


def write_curve(path: Union[str, os.PathLike], P: PolyCurve):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_curve_text(P))
