import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chromalint.builtins import load_builtins
from chromalint.palette import parse_palette

# The repair-prompt example palette: diverging, three low-contrast colors on white.
PROMPT_PALETTE_DOC = {
    "name": "new palette",
    "type": "diverging",
    "background": "#fff",
    "colors": ["#0084ae", "#e25c36", "#8db3c7", "#e5e3e0", "#eca288"],
}


@pytest.fixture(scope="session")
def prompt_palette():
    return parse_palette(PROMPT_PALETTE_DOC)


@pytest.fixture(scope="session")
def registry():
    return load_builtins()


@pytest.fixture(scope="session")
def registry_by_id(registry):
    return {l.id: l for l in registry}
