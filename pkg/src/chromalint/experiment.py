"""Fixer comparison over the bundled ColorBrewer corpus.

For every (5-color scheme x black/white background x applicable lint) cell
where the lint fails, each strategy attempts a repair; the matrix counts
attempts whose candidate does not pass. Lints that are never applicable on
the corpus (the tag-gated ones) are excluded up front; heuristic cells
without a procedure are recorded as not attempted.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .builtins import colorbrewer_palettes, load_builtins
from .engine import Lint, applicable, run_lint
from .fixers import HEURISTIC_LINT_IDS, McConfig, fix_heuristic, fix_monte_carlo
from .palette import Palette

BACKGROUNDS = ("#000000", "#ffffff")
STRATEGIES = ("heuristic", "monteCarlo")


@dataclass
class ExperimentResult:
    seed: int
    max_rounds: int
    corpus_size: int
    excluded_lints: list[str]
    lint_ids: list[str]
    # strategy -> lint id -> {"attempted": n, "failed": n} (absent = not attempted)
    matrix: dict = field(default_factory=dict)

    def total_failed(self, strategy: str, lint_ids=None) -> int:
        cells = self.matrix.get(strategy, {})
        ids = cells.keys() if lint_ids is None else [i for i in lint_ids if i in cells]
        return sum(cells[i]["failed"] for i in ids)

    def jointly_attempted(self) -> list[str]:
        sets = [set(self.matrix.get(s, {})) for s in STRATEGIES]
        return sorted(set.intersection(*sets)) if sets else []

    def to_document(self) -> dict:
        return {
            "seed": self.seed,
            "maxRounds": self.max_rounds,
            "corpusSize": self.corpus_size,
            "excludedLints": self.excluded_lints,
            "lintIds": self.lint_ids,
            "matrix": self.matrix,
            "jointlyAttempted": self.jointly_attempted(),
            "totals": {s: self.total_failed(s) for s in STRATEGIES},
        }


def experiment_corpus() -> list[Palette]:
    return colorbrewer_palettes(BACKGROUNDS)


def derive_lint_subset(registry, corpus) -> tuple[list[Lint], list[str]]:
    """Split the registry into corpus-relevant lints and never-applicable ones."""
    relevant, excluded = [], []
    for lint in registry:
        if any(applicable(lint, p) for p in corpus):
            relevant.append(lint)
        else:
            excluded.append(lint.id)
    return relevant, sorted(excluded)


def cell_seed(seed: int, palette_name: str, lint_id: str) -> int:
    """Stable per-cell seed so cells can run in any order."""
    digest = hashlib.sha256(f"{seed}|{palette_name}|{lint_id}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def run_experiment(seed: int = 0, max_rounds: int = 2000, registry=None, corpus=None) -> ExperimentResult:
    registry = list(registry) if registry is not None else list(load_builtins())
    corpus = list(corpus) if corpus is not None else experiment_corpus()
    relevant, excluded = derive_lint_subset(registry, corpus)

    matrix: dict[str, dict[str, dict[str, int]]] = {s: {} for s in STRATEGIES}

    def record(strategy: str, lint_id: str, candidate) -> None:
        cell = matrix[strategy].setdefault(lint_id, {"attempted": 0, "failed": 0})
        cell["attempted"] += 1
        # Re-verify from scratch rather than trusting the candidate's flag.
        if candidate is None:
            cell["failed"] += 1
        else:
            verdict = run_lint(lint, candidate.palette)
            if verdict.status != "pass":
                cell["failed"] += 1

    for palette in corpus:
        for lint in relevant:
            if not applicable(lint, palette):
                continue
            if run_lint(lint, palette).status != "fail":
                continue
            if lint.id in HEURISTIC_LINT_IDS:
                record("heuristic", lint.id, fix_heuristic(lint, palette))
            cfg = McConfig(max_rounds=max_rounds, rng_seed=cell_seed(seed, palette.name, lint.id))
            record("monteCarlo", lint.id, fix_monte_carlo(lint, palette, cfg))

    return ExperimentResult(
        seed=seed,
        max_rounds=max_rounds,
        corpus_size=len(corpus),
        excluded_lints=excluded,
        lint_ids=[l.id for l in relevant],
        matrix=matrix,
    )


def format_table(result: ExperimentResult) -> str:
    """Aligned text table: failed/attempted per (lint, strategy)."""
    width = max((len(i) for i in result.lint_ids), default=4) + 2
    head = "lint".ljust(width) + "".join(s.rjust(14) for s in STRATEGIES)
    lines = [head, "-" * len(head)]
    for lint_id in result.lint_ids:
        row = lint_id.ljust(width)
        for s in STRATEGIES:
            cell = result.matrix.get(s, {}).get(lint_id)
            row += ("-" if cell is None else f"{cell['failed']}/{cell['attempted']}").rjust(14)
        lines.append(row)
    lines.append("-" * len(head))
    totals = "total failed".ljust(width)
    for s in STRATEGIES:
        totals += str(result.total_failed(s)).rjust(14)
    lines.append(totals)
    joint = result.jointly_attempted()
    lines.append(
        f"jointly attempted: {', '.join(joint) if joint else '(none)'}"
    )
    lines.append(
        "joint failed: "
        + ", ".join(f"{s}={result.total_failed(s, joint)}" for s in STRATEGIES)
    )
    lines.append(f"relevant lints: {len(result.lint_ids)}; excluded: {len(result.excluded_lints)}")
    return "\n".join(lines)


def result_to_json(result: ExperimentResult) -> str:
    return json.dumps(result.to_document(), indent=2, sort_keys=True)
