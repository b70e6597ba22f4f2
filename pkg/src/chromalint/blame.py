"""Blame: find the colors (or pairs) responsible for a lint failure.

Brute force in two passes. The constructive pass keeps each candidate unit
(a single color or a pair) alone in a subset palette and blames it when the
subset still fails. Only when the constructive pass blames nothing does the
reductive pass run: a unit is blamed when removing it makes the palette pass.
Background, type, and tags are preserved in every derived palette; evaluator
errors in a derived palette just mean that unit is not blamed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .color import to_hex
from .lang import EvalError, evaluate
from .lang.evaluate import Env
from .palette import Palette


@dataclass(frozen=True)
class Blame:
    mode: str  # "single" | "pair"
    units: tuple  # sorted tuple of indexes, or of (i, j) index pairs

    def indexes(self) -> list:
        if self.mode == "single":
            return sorted(self.units)
        seen = sorted({i for pair in self.units for i in pair})
        return seen

    def describe(self, p: Palette) -> str:
        if self.mode == "single":
            return ", ".join(to_hex(p.colors[i]) for i in self.units)
        return ", ".join(
            f"({to_hex(p.colors[i])} + {to_hex(p.colors[j])})" for i, j in self.units
        )

    def to_document(self, p: Palette) -> dict:
        if self.mode == "single":
            return {
                "mode": "single",
                "units": list(self.units),
                "hexes": [to_hex(p.colors[i]) for i in self.units],
            }
        return {
            "mode": "pair",
            "units": [list(pair) for pair in self.units],
            "hexes": [[to_hex(p.colors[i]), to_hex(p.colors[j])] for i, j in self.units],
        }


def _passes(lint, palette: Palette):
    """True/False verdict, or None when evaluation errors out."""
    try:
        return evaluate(lint.program, Env.for_palette(palette))
    except EvalError:
        return None


def _units(p: Palette, mode: str):
    if mode == "single":
        return [(i,) for i in range(len(p.colors))]
    return list(combinations(range(len(p.colors)), 2))


def blame(lint, p: Palette) -> Blame:
    """Blame for a failing lint; requires lint.blame_mode != 'none'."""
    mode = lint.blame_mode
    units = _units(p, mode)

    blamed = []
    for unit in units:
        subset = p.replace_colors([p.colors[i] for i in unit])
        if _passes(lint, subset) is False:
            blamed.append(unit)
    if not blamed:
        for unit in units:
            kept = [c for i, c in enumerate(p.colors) if i not in unit]
            if not kept:
                continue
            if _passes(lint, p.replace_colors(kept)) is True:
                blamed.append(unit)

    if mode == "single":
        return Blame("single", tuple(sorted(u[0] for u in blamed)))
    return Blame("pair", tuple(sorted(blamed)))
