"""Color vision deficiency simulation via linear-RGB matrix transforms."""

from __future__ import annotations

from functools import lru_cache

from ._data import load
from .color import Color, srgb_coords
from .spaces import convert_coords, linear_to_srgb, srgb_to_linear

CVD_TYPES = ("deuteranopia", "protanopia", "tritanopia", "grayscale")

# WCAG / Rec. 709 luminance weights, used for the grayscale reduction.
_LUMA = (0.2126, 0.7152, 0.0722)


@lru_cache(maxsize=None)
def _matrix(kind: str):
    rows = load("cvd_matrices.json")["matrices"][kind]
    # Row-normalize so white maps to white exactly (published rows sum to
    # 1 within rounding error).
    return tuple(tuple(v / sum(row) for v in row) for row in rows)


def simulate_cvd(c: Color, kind: str) -> Color:
    """Simulated appearance of a color under a CVD, in the color's own space."""
    if kind not in CVD_TYPES:
        raise ValueError(f"unknown CVD type: {kind!r}")
    lin = tuple(srgb_to_linear(min(1.0, max(0.0, v))) for v in srgb_coords(c))
    if kind == "grayscale":
        y = sum(w * v for w, v in zip(_LUMA, lin))
        out = (y, y, y)
    else:
        m = _matrix(kind)
        out = tuple(sum(m[i][j] * lin[j] for j in range(3)) for i in range(3))
    rgb = tuple(linear_to_srgb(min(1.0, max(0.0, v))) for v in out)
    return Color(c.space, convert_coords(rgb, "srgb", c.space), c.tags)
