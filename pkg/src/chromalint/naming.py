"""Nearest-name lookup over a fixed lexicon of web color names."""

from __future__ import annotations

import math
from functools import lru_cache

from ._data import load
from .color import Color, lab_coords, parse_color


@lru_cache(maxsize=None)
def lexicon() -> tuple[tuple[str, tuple[float, float, float]], ...]:
    """(name, lab centroid) pairs, sorted by name for deterministic ties."""
    names = load("color_names.json")["names"]
    return tuple((name, lab_coords(parse_color(hexval))) for name, hexval in sorted(names.items()))


def name_color(c: Color) -> str:
    """Name of the lexicon entry whose LAB centroid is nearest to the color.

    Exact distance ties resolve to the lexicographically smallest name.
    """
    lab = lab_coords(c)
    best_name, best_d = "", math.inf
    for name, cen in lexicon():
        d = (lab[0] - cen[0]) ** 2 + (lab[1] - cen[1]) ** 2 + (lab[2] - cen[2]) ** 2
        if d < best_d:
            best_name, best_d = name, d
    return best_name
