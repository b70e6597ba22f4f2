"""Automated repair of failing lints: heuristic, Monte Carlo, and LLM-backed.

Every returned candidate carries an honest re-evaluation verdict; a fixer
never claims success without the evaluator agreeing.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Protocol

from .blame import blame as compute_blame
from .color import Color, clamp_to_gamut, lab_coords, parse_color, to_hex
from .engine import Lint, ReportEntry, run_lint
from .lang import EvalError, evaluate
from .lang.evaluate import Env
from .naming import lexicon, name_color
from .palette import Palette
from .spaces import SPACES, convert_coords

HEURISTIC_LINT_IDS = (
    "color-name-discriminability",
    "diverging-palette-order",
    "even-distribution-hue",
    "even-distribution-lightness",
    "in-gamut",
    "max-colors",
    "sequential-palette-order",
)

MAX_COLORS = 10
PERMUTATION_LIMIT = 8  # 8! orders is the largest exhaustive diverging search


@dataclass(frozen=True)
class McConfig:
    max_rounds: int = 2000
    rng_seed: int = 0
    step_scale: float = 1.0  # maximum step per axis, in that axis's units


@dataclass(frozen=True)
class FixCandidate:
    strategy: str  # "monteCarlo" | "heuristic" | "llm"
    palette: Palette
    passes_target: bool
    iterations: int = 0


def _passes(lint: Lint, palette: Palette) -> bool:
    try:
        return evaluate(lint.program, Env.for_palette(palette))
    except EvalError:
        return False


def _candidate(strategy: str, lint: Lint, palette: Palette, iterations: int = 0) -> FixCandidate:
    return FixCandidate(strategy, palette, _passes(lint, palette), iterations)


# ---- Monte Carlo ------------------------------------------------------------

def fix_monte_carlo(lint: Lint, p: Palette, cfg: McConfig) -> Optional[FixCandidate]:
    """Random-walk repair: perturb the blamed colors until the lint passes.

    Each round adds an independent uniform step in [-scale, scale] per axis in
    each blamed color's own space (clamped to the axis range), re-evaluating
    after every round. Walks restart from the previous round's palette. With
    an empty blame, all colors are perturbed. Exhaustion returns None.
    """
    if _passes(lint, p):
        raise ValueError(f"lint {lint.id!r} already passes; nothing to fix")
    if lint.blame_mode != "none":
        blamed = compute_blame(lint, p).indexes()
    else:
        blamed = []
    if not blamed:
        blamed = list(range(len(p.colors)))

    rng = random.Random(cfg.rng_seed)
    current = p
    for rounds in range(1, cfg.max_rounds + 1):
        colors = list(current.colors)
        for i in blamed:
            colors[i] = _perturb(colors[i], rng, cfg.step_scale)
        current = current.replace_colors(colors)
        if _passes(lint, current):
            return FixCandidate("monteCarlo", current, True, rounds)
    return None


def _perturb(c: Color, rng: random.Random, scale: float) -> Color:
    coords = []
    for axis, v in zip(SPACES[c.space], c.coords):
        v = v + rng.uniform(-scale, scale)
        coords.append(min(axis.hi, max(axis.lo, v)))
    return Color(c.space, tuple(coords), c.tags)


# ---- Heuristics -------------------------------------------------------------

def fix_heuristic(lint: Lint, p: Palette) -> Optional[FixCandidate]:
    """One of seven fixed repair procedures, keyed by lint id; None otherwise."""
    proc = _HEURISTICS.get(lint.id)
    if proc is None:
        return None
    return _candidate("heuristic", lint, proc(p))


def _lab_l(c: Color) -> float:
    return lab_coords(c)[0]


def _fix_sequential_order(p: Palette) -> Palette:
    return p.replace_colors(sorted(p.colors, key=_lab_l))


def _is_diverging(ls: list[float]) -> bool:
    n = len(ls)
    for m in range(1, n - 1):  # pivot must be interior
        up_down = all(ls[i] < ls[i + 1] for i in range(m)) and all(
            ls[i] > ls[i + 1] for i in range(m, n - 1)
        )
        down_up = all(ls[i] > ls[i + 1] for i in range(m)) and all(
            ls[i] < ls[i + 1] for i in range(m, n - 1)
        )
        if up_down or down_up:
            return True
    return False


def _fix_diverging_order(p: Palette) -> Palette:
    colors = list(p.colors)
    if len(colors) <= PERMUTATION_LIMIT:
        for order in permutations(range(len(colors))):
            ls = [_lab_l(colors[i]) for i in order]
            if _is_diverging(ls):
                return p.replace_colors([colors[i] for i in order])
        return p
    # Too many orders to enumerate: sort ascending and fold into a peak.
    s = sorted(colors, key=_lab_l)
    return p.replace_colors(s[0::2] + list(reversed(s[1::2])))


def _fix_max_colors(p: Palette) -> Palette:
    return p.replace_colors(p.colors[:MAX_COLORS])


def _fix_in_gamut(p: Palette) -> Palette:
    return p.replace_colors([clamp_to_gamut(c) for c in p.colors])


def _fix_name_discriminability(p: Palette) -> Palette:
    """Greedily reassign contested color names; renamed colors snap to centroids."""
    names = [name_color(c) for c in p.colors]
    counts = {n: names.count(n) for n in names}
    in_use = {n for n in names if counts[n] == 1}
    centroids = dict(lexicon())

    out = list(p.colors)
    for i, c in enumerate(p.colors):
        if counts[names[i]] == 1:
            continue
        lab = lab_coords(c)
        ranked = sorted(
            (sum((x - y) ** 2 for x, y in zip(lab, cen)), name)
            for name, cen in centroids.items()
            if name not in in_use
        )
        _, assigned = ranked[0]
        in_use.add(assigned)
        if assigned != names[i]:
            cen = centroids[assigned]
            out[i] = Color(c.space, convert_coords(cen, "lab", c.space), c.tags)
    return p.replace_colors(out)


def _redistribute_lch(p: Palette, axis_index: int) -> Palette:
    """Evenly respace one LCH axis in palette order, endpoints fixed.

    The repaired colors stay in LCH: converting back to a gamut-bounded space
    could clip the assigned values and undo the redistribution.
    """
    n = len(p.colors)
    if n < 3:
        return p
    lch = [list(convert_coords(c.coords, c.space, "lch")) for c in p.colors]
    lo, hi = lch[0][axis_index], lch[-1][axis_index]
    out = []
    for i, c in enumerate(p.colors):
        coords = lch[i][:]
        coords[axis_index] = lo + (hi - lo) * i / (n - 1)
        out.append(Color("lch", tuple(coords), c.tags))
    return p.replace_colors(out)


def _fix_even_lightness(p: Palette) -> Palette:
    return _redistribute_lch(p, 0)


def _fix_even_hue(p: Palette) -> Palette:
    return _redistribute_lch(p, 2)


_HEURISTICS = {
    "sequential-palette-order": _fix_sequential_order,
    "diverging-palette-order": _fix_diverging_order,
    "max-colors": _fix_max_colors,
    "in-gamut": _fix_in_gamut,
    "color-name-discriminability": _fix_name_discriminability,
    "even-distribution-lightness": _fix_even_lightness,
    "even-distribution-hue": _fix_even_hue,
}


# ---- LLM --------------------------------------------------------------------

PROMPT_TEMPLATE = """You are a color expert. You take in a color palette and an error it has and fix it. Your fixes should be clever but respect the original vibe of the palette. Present your fixes as a single JSON object that describes the color palette. It should have a type like {{"background": string; "colors": string[]}}.
Additional criteria:
- As much as possible, do not provide fixes by simply removing a color from the palette.
- DO NOT JUST RETURN THE SAME COLORS. That is not a fix. You must change at least one color.

Do not offer any other response. YOU MUST GIVE A VALID JSON OBJECT. If you do not, you will be banned.

Palette: {palette}
Context: "This is a {type} palette called '{name}'."
Background Color: "{background}"
Error: "{error}"

Failed: {program}"""


class LlmClient(Protocol):
    def complete(self, prompt: str) -> str: ...


@dataclass
class StubLlmClient:
    """Canned-reply client for tests."""

    reply: str

    def complete(self, prompt: str) -> str:
        return self.reply


API_KEY_ENV = "CHROMALINT_LLM_API_KEY"
API_URL_ENV = "CHROMALINT_LLM_URL"
API_MODEL_ENV = "CHROMALINT_LLM_MODEL"


class HttpLlmClient:
    """Minimal OpenAI-compatible chat client; configured via environment."""

    def __init__(self):
        self.api_key = os.environ.get(API_KEY_ENV)
        if not self.api_key:
            raise RuntimeError(
                f"{API_KEY_ENV} is not set; the llm fix strategy is unavailable"
            )
        self.url = os.environ.get(API_URL_ENV, "https://api.openai.com/v1/chat/completions")
        self.model = os.environ.get(API_MODEL_ENV, "gpt-4o-mini")

    def complete(self, prompt: str) -> str:
        import httpx

        response = httpx.post(
            self.url,
            headers={"Authorization": f"Bearer {self.api_key}"},
            json={"model": self.model, "messages": [{"role": "user", "content": prompt}]},
            timeout=60.0,
        )
        response.raise_for_status()
        return response.json()["choices"][0]["message"]["content"]


def build_llm_prompt(lint: Lint, p: Palette, entry: ReportEntry) -> str:
    """Render the repair prompt for a failing lint; byte-stable per input."""
    return PROMPT_TEMPLATE.format(
        palette=json.dumps([to_hex(c) for c in p.colors], separators=(",", ":")),
        type=p.type,
        name=p.name or "new palette",
        background=to_hex(p.background),
        error=entry.message,
        program=entry.printed_program,
    )


def apply_llm_fix(lint: Lint, p: Palette, client: LlmClient) -> Optional[FixCandidate]:
    """Ask the client for a repaired palette; malformed replies yield None."""
    entry = run_lint(lint, p)
    if entry.status != "fail":
        raise ValueError(f"lint {lint.id!r} does not fail; nothing to fix")
    prompt = build_llm_prompt(lint, p, entry)
    try:
        reply = client.complete(prompt)
    except Exception:
        return None
    try:
        doc = json.loads(reply)
        background = parse_color(doc["background"])
        colors = [parse_color(c) for c in doc["colors"]]
        if not colors:
            return None
    except Exception:
        return None
    fixed = Palette(p.name, tuple(colors), background, p.type, p.context_tags)
    return _candidate("llm", lint, fixed)
