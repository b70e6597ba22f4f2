"""Loader for the JSON data files shipped with the package."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    ref = resources.files("chromalint").joinpath("data").joinpath(name)
    return json.loads(ref.read_text(encoding="utf-8"))
