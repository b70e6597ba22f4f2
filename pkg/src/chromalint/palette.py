"""The palette data model and its JSON document format.

Document shape:
    {"name": str?, "type": "categorical"|"sequential"|"diverging",
     "background": colorText,
     "colors": [colorText | {"color": colorText, "tags": [str]}],
     "tags": [str]?}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .color import Color, ColorParseError, format_color, parse_color
from .metrics import delta_e_2000

PALETTE_TYPES = ("categorical", "sequential", "diverging")

# Colors closer than this dE2000 compare as equal.
COLOR_EQ_TOL = 0.01


class PaletteValidationError(ValueError):
    """Carries every violation found in a palette document."""

    def __init__(self, errors: list[tuple[str, str]]):
        self.errors = errors
        super().__init__("; ".join(f"{path}: {msg}" for path, msg in errors))


@dataclass(frozen=True)
class Palette:
    name: str
    colors: tuple[Color, ...]
    background: Color
    type: str
    context_tags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        object.__setattr__(self, "context_tags", frozenset(t.lower() for t in self.context_tags))

    def replace_colors(self, colors) -> "Palette":
        return Palette(self.name, tuple(colors), self.background, self.type, self.context_tags)

    def has_tag(self, tag: str) -> bool:
        return tag.lower() in self.context_tags


def palettes_equal(a: Palette, b: Palette) -> bool:
    """Structural equality: ordered colors within tolerance, same bg/type/tags."""
    if a.type != b.type or a.context_tags != b.context_tags:
        return False
    if len(a.colors) != len(b.colors):
        return False
    pairs = list(zip(a.colors, b.colors)) + [(a.background, b.background)]
    return all(
        x.tags == y.tags and delta_e_2000(x, y) < COLOR_EQ_TOL for x, y in pairs
    )


def parse_palette(document) -> Palette:
    """Validate and build a Palette from a parsed JSON document or JSON text."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise PaletteValidationError([("$", f"invalid JSON: {e}")]) from None

    errors: list[tuple[str, str]] = []
    if not isinstance(document, dict):
        raise PaletteValidationError([("$", "palette document must be an object")])

    name = document.get("name", "")
    if not isinstance(name, str):
        errors.append(("$.name", "name must be a string"))
        name = ""

    ptype = document.get("type")
    if ptype not in PALETTE_TYPES:
        errors.append(("$.type", f"type must be one of {', '.join(PALETTE_TYPES)}"))
        ptype = "categorical"

    background = None
    if "background" not in document:
        errors.append(("$.background", "missing background"))
    else:
        try:
            background = parse_color(document["background"])
        except ColorParseError as e:
            errors.append(("$.background", str(e)))

    colors: list[Color] = []
    raw = document.get("colors")
    if not isinstance(raw, list) or not raw:
        errors.append(("$.colors", "colors must be non-empty"))
    else:
        for i, entry in enumerate(raw):
            path = f"$.colors[{i}]"
            text, tags = entry, ()
            if isinstance(entry, dict):
                text = entry.get("color")
                tags = entry.get("tags", [])
                if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
                    errors.append((f"{path}.tags", "tags must be a list of strings"))
                    tags = ()
            try:
                colors.append(parse_color(text, tags))
            except ColorParseError as e:
                errors.append((path, str(e)))

    tags = document.get("tags", [])
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        errors.append(("$.tags", "tags must be a list of strings"))
        tags = []

    if errors:
        raise PaletteValidationError(errors)
    return Palette(name, tuple(colors), background, ptype, frozenset(tags))


def serialize_palette(p: Palette) -> dict:
    """Document form; round-trips through parse_palette to an equal palette."""
    def entry(c: Color):
        text = format_color(c)
        if c.tags:
            return {"color": text, "tags": sorted(c.tags)}
        return text

    doc = {
        "name": p.name,
        "type": p.type,
        "background": format_color(p.background),
        "colors": [entry(c) for c in p.colors],
    }
    if p.context_tags:
        doc["tags"] = sorted(p.context_tags)
    return doc


def palette_to_json(p: Palette) -> str:
    return json.dumps(serialize_palette(p), indent=2, sort_keys=True)
