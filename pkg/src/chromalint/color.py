"""The color value: a point in a named space plus semantic tags."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .spaces import SPACES, Triple, convert_coords


class ColorParseError(ValueError):
    """Raised for color text that cannot be parsed."""


_HEX_RE = re.compile(r"\A#([0-9a-fA-F]{3}|[0-9a-fA-F]{6})\Z")
_FUNC_RE = re.compile(r"\A([a-zA-Z]+)\(\s*([^,()]+)\s*,\s*([^,()]+)\s*,\s*([^,()]+)\s*\)\Z")

GAMUT_TOL = 1e-6


@dataclass(frozen=True)
class Color:
    space: str
    coords: Triple
    tags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.space not in SPACES:
            raise ColorParseError(f"unknown color space: {self.space!r}")
        object.__setattr__(self, "coords", tuple(float(v) for v in self.coords))
        object.__setattr__(self, "tags", frozenset(t.lower() for t in self.tags))

    def with_tags(self, tags) -> "Color":
        return Color(self.space, self.coords, frozenset(tags))

    def has_tag(self, tag: str) -> bool:
        return tag.lower() in self.tags


def parse_color(text: str, tags=()) -> Color:
    """Parse '#rgb', '#rrggbb' or 'space(a, b, c)' into a Color.

    Hex parses into sRGB with channels scaled to [0, 1].
    """
    if not isinstance(text, str):
        raise ColorParseError(f"expected a color string, got {type(text).__name__}")
    text = text.strip()
    m = _HEX_RE.match(text)
    if m:
        digits = m.group(1).lower()
        if len(digits) == 3:
            digits = "".join(d * 2 for d in digits)
        r, g, b = (int(digits[i : i + 2], 16) / 255.0 for i in (0, 2, 4))
        return Color("srgb", (r, g, b), frozenset(tags))
    m = _FUNC_RE.match(text)
    if m:
        space = m.group(1).lower()
        if space not in SPACES:
            raise ColorParseError(f"unknown color space: {m.group(1)!r}")
        coords = []
        for part in m.groups()[1:]:
            try:
                coords.append(float(part))
            except ValueError:
                raise ColorParseError(f"bad coordinate: {part.strip()!r}") from None
        return Color(space, tuple(coords), frozenset(tags))
    raise ColorParseError(f"unrecognized color text: {text!r}")


def convert(c: Color, target: str) -> Color:
    """Re-express a color in another space; tags are carried along."""
    return Color(target, convert_coords(c.coords, c.space, target), c.tags)


def srgb_coords(c: Color) -> Triple:
    return convert_coords(c.coords, c.space, "srgb")


def lab_coords(c: Color) -> Triple:
    return convert_coords(c.coords, c.space, "lab")


def in_gamut(c: Color, tol: float = GAMUT_TOL) -> bool:
    return all(-tol <= v <= 1.0 + tol for v in srgb_coords(c))


def clamp_to_gamut(c: Color) -> Color:
    """Clamp to sRGB, quantize to 8 bits, convert back to the color's space."""
    quant = tuple(round(min(1.0, max(0.0, v)) * 255) / 255.0 for v in srgb_coords(c))
    return Color(c.space, convert_coords(quant, "srgb", c.space), c.tags)


def to_hex(c: Color) -> str:
    """Lowercase '#rrggbb' of the color clamped into gamut."""
    r, g, b = (round(min(1.0, max(0.0, v)) * 255) for v in srgb_coords(c))
    return f"#{r:02x}{g:02x}{b:02x}"


def format_color(c: Color) -> str:
    """Canonical text: hex when in gamut, 'space(a, b, c)' otherwise."""
    if in_gamut(c):
        return to_hex(c)
    a, b, d = (f"{v:.6g}" for v in c.coords)
    return f"{c.space}({a}, {b}, {d})"
