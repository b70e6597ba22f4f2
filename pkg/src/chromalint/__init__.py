"""chromalint: a linter for discrete color palettes.

Palettes are checked against small assertion programs (built-in or
user-defined), failures are blamed on the responsible colors, and failing
palettes can be repaired by heuristic, stochastic, or LLM-backed fixers.
"""

from .color import Color, clamp_to_gamut, convert, in_gamut, parse_color
from .metrics import contrast, delta_e_2000, discriminable_at_size, euclidean_dist
from .cvd import simulate_cvd
from .naming import name_color
from .palette import Palette, parse_palette, serialize_palette

__version__ = "0.1.0"

__all__ = [
    "Color",
    "Palette",
    "clamp_to_gamut",
    "contrast",
    "convert",
    "delta_e_2000",
    "discriminable_at_size",
    "euclidean_dist",
    "in_gamut",
    "name_color",
    "parse_color",
    "parse_palette",
    "serialize_palette",
    "simulate_cvd",
]
