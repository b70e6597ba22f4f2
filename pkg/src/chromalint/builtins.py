"""The shipped lint registry and the bundled reference palette corpus."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

from ._data import load
from .color import parse_color
from .engine import Lint, LintDefinitionError, parse_lint
from .palette import Palette

BUILTIN_COUNT = 35


@lru_cache(maxsize=None)
def load_builtins() -> tuple[Lint, ...]:
    """All shipped lints, sorted by id. Fails loudly on any malformed file."""
    lints = []
    root = resources.files("chromalint").joinpath("data").joinpath("lints")
    names = sorted(entry.name for entry in root.iterdir() if entry.name.endswith(".json"))
    for name in names:
        doc = json.loads(root.joinpath(name).read_text(encoding="utf-8"))
        lint = parse_lint(doc, source=name)
        if f"{lint.id}.json" != name:
            raise LintDefinitionError(f"{name}: file name does not match lint id {lint.id!r}")
        lints.append(lint)
    ids = [l.id for l in lints]
    if len(set(ids)) != len(ids):
        raise LintDefinitionError("duplicate lint ids in the shipped registry")
    return tuple(lints)


def load_user_lints(directory: str | Path) -> list[Lint]:
    """Lint definitions from a directory of JSON files, sorted by file name."""
    directory = Path(directory)
    lints = []
    for path in sorted(directory.glob("*.json")):
        lints.append(parse_lint(json.loads(path.read_text(encoding="utf-8")), source=str(path)))
    return lints


def build_registry(user_lints: list[Lint] = ()) -> list[Lint]:
    """Built-ins plus user lints; user lints load after and may shadow by id."""
    by_id = {l.id: l for l in load_builtins()}
    for l in user_lints:
        by_id[l.id] = l
    return sorted(by_id.values(), key=lambda l: l.id)


def colorbrewer_palettes(backgrounds: tuple[str, ...] = ("#ffffff",)) -> list[Palette]:
    """The bundled ColorBrewer 5-class schemes as palettes, one per background."""
    data = load("colorbrewer.json")
    palettes = []
    for name in sorted(data["schemes"]):
        scheme = data["schemes"][name]
        for bg in backgrounds:
            label = "black" if bg in ("#000", "#000000") else "white" if bg in ("#fff", "#ffffff") else bg
            palettes.append(
                Palette(
                    name=f"{name}-5-{label}",
                    colors=tuple(parse_color(c) for c in scheme["colors"]),
                    background=parse_color(bg),
                    type=scheme["kind"],
                )
            )
    return palettes
