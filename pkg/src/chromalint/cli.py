"""Command-line interface: check, fix, lints, simulate, experiment, serve.

Exit codes: 0 clean (or only warnings), 1 when an error-level lint fails,
2 for input problems, 3 when a fixer exhausts without a repair.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .builtins import build_registry, load_user_lints
from .cvd import CVD_TYPES, simulate_cvd
from .engine import (
    STATUS_FAIL,
    CustomizationState,
    LintDefinitionError,
    applicable,
    report_to_document,
    run_all,
    run_lint,
)
from .experiment import format_table, result_to_json, run_experiment
from .fixers import (
    API_KEY_ENV,
    HttpLlmClient,
    McConfig,
    apply_llm_fix,
    fix_heuristic,
    fix_monte_carlo,
)
from .palette import Palette, PaletteValidationError, palette_to_json, parse_palette

EXIT_OK = 0
EXIT_LINT_ERRORS = 1
EXIT_INPUT = 2
EXIT_EXHAUSTED = 3


def _fail(message: str, code: int = EXIT_INPUT):
    click.echo(message, err=True)
    sys.exit(code)


def _load_palette(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        _fail(f"cannot read palette file: {e}")
    try:
        return parse_palette(text)
    except PaletteValidationError as e:
        for p, msg in e.errors:
            click.echo(f"{path}: {p}: {msg}", err=True)
        sys.exit(EXIT_INPUT)


def _registry(user_lints_dir):
    try:
        user = load_user_lints(user_lints_dir) if user_lints_dir else []
    except (LintDefinitionError, OSError) as e:
        _fail(str(e))
    return build_registry(user)


def _customization(path):
    if not path:
        return CustomizationState()
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
        return CustomizationState.from_document(doc)
    except (OSError, json.JSONDecodeError, LintDefinitionError) as e:
        _fail(f"bad customization file: {e}")


@click.group()
def main():
    """Lint, blame, and repair discrete color palettes."""


@main.command()
@click.argument("palette_file")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]), default="text")
@click.option("--lint", "lint_ids", multiple=True, help="Only run these lint ids.")
@click.option("--ignore", "ignored", multiple=True, help="Ignore these lint ids.")
@click.option("--user-lints", "user_lints_dir", default=None, help="Directory of user lint files.")
@click.option("--customization", default=None, help="Customization state JSON file.")
def check(palette_file, fmt, lint_ids, ignored, user_lints_dir, customization):
    """Run the registry over a palette and print the report."""
    palette = _load_palette(palette_file)
    registry = _registry(user_lints_dir)
    custom = _customization(customization)
    if ignored:
        custom = CustomizationState(
            globally_ignored=custom.globally_ignored | frozenset(ignored),
            per_palette_ignored=custom.per_palette_ignored,
            overrides=custom.overrides,
        )
    if lint_ids:
        known = {l.id for l in registry}
        unknown = [i for i in lint_ids if i not in known]
        if unknown:
            _fail(f"unknown lint id(s): {', '.join(unknown)}")
        registry = [l for l in registry if l.id in lint_ids]

    entries = run_all(registry, palette, custom)
    if fmt == "structured":
        click.echo(json.dumps(report_to_document(entries, palette), indent=2, sort_keys=True))
    else:
        for e in entries:
            line = f"{e.level.upper():7} {e.status:13} {e.lint_id}"
            if e.message:
                line += f" - {e.message}"
            click.echo(line)
    has_errors = any(e.status == STATUS_FAIL and e.level == "error" for e in entries)
    sys.exit(EXIT_LINT_ERRORS if has_errors else EXIT_OK)


@main.command()
@click.argument("palette_file")
@click.option("--lint", "lint_id", required=True, help="Lint id to fix.")
@click.option("--strategy", type=click.Choice(["mc", "heuristic", "llm"]), required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-rounds", type=int, default=2000, show_default=True)
@click.option("--out", "out_path", default=None, help="Write the fixed palette here instead of stdout.")
@click.option("--user-lints", "user_lints_dir", default=None)
def fix(palette_file, lint_id, strategy, seed, max_rounds, out_path, user_lints_dir):
    """Repair one failing lint and emit the fixed palette document."""
    palette = _load_palette(palette_file)
    registry = _registry(user_lints_dir)
    by_id = {l.id: l for l in registry}
    lint = by_id.get(lint_id)
    if lint is None:
        _fail(f"unknown lint id: {lint_id}")
    if not applicable(lint, palette):
        _fail(f"lint {lint_id} is not applicable to this palette")
    if run_lint(lint, palette).status != STATUS_FAIL:
        _fail(f"lint {lint_id} does not fail on this palette; nothing to fix")

    if strategy == "heuristic":
        candidate = fix_heuristic(lint, palette)
        if candidate is None:
            _fail(f"no heuristic fix exists for {lint_id}")
    elif strategy == "mc":
        candidate = fix_monte_carlo(lint, palette, McConfig(max_rounds=max_rounds, rng_seed=seed))
    else:
        try:
            client = HttpLlmClient()
        except RuntimeError as e:
            _fail(f"{e} (set {API_KEY_ENV})")
        candidate = apply_llm_fix(lint, palette, client)

    if candidate is None or not candidate.passes_target:
        click.echo("no passing fix found", err=True)
        sys.exit(EXIT_EXHAUSTED)
    text = palette_to_json(candidate.palette)
    if out_path:
        Path(out_path).write_text(text + "\n", encoding="utf-8")
    else:
        click.echo(text)
    sys.exit(EXIT_OK)


@main.group()
def lints():
    """Inspect the lint registry."""


@lints.command("list")
@click.option("--user-lints", "user_lints_dir", default=None)
def lints_list(user_lints_dir):
    registry = _registry(user_lints_dir)
    width = max(len(l.id) for l in registry) + 2
    for l in registry:
        types = "any" if "any" in l.task_types else ",".join(sorted(l.task_types))
        tags = ",".join(sorted(l.required_tags)) or "-"
        click.echo(f"{l.id.ljust(width)}{l.level:9}{l.group:15}types={types:35}tags={tags}")


def _lookup(registry, lint_id):
    lint = next((l for l in registry if l.id == lint_id), None)
    if lint is None:
        _fail(f"unknown lint id: {lint_id}")
    return lint


@lints.command("show")
@click.argument("lint_id")
@click.option("--user-lints", "user_lints_dir", default=None)
def lints_show(lint_id, user_lints_dir):
    lint = _lookup(_registry(user_lints_dir), lint_id)
    click.echo(f"id:          {lint.id}")
    click.echo(f"name:        {lint.name}")
    click.echo(f"group:       {lint.group}")
    click.echo(f"level:       {lint.level}")
    click.echo(f"taskTypes:   {', '.join(sorted(lint.task_types))}")
    click.echo(f"requiredTags: {', '.join(sorted(lint.required_tags)) or '-'}")
    click.echo(f"blameMode:   {lint.blame_mode}")
    click.echo(f"description: {lint.description}")
    click.echo(f"program:     {lint.printed()}")


@lints.command("print")
@click.argument("lint_id")
@click.option("--user-lints", "user_lints_dir", default=None)
def lints_print(lint_id, user_lints_dir):
    click.echo(_lookup(_registry(user_lints_dir), lint_id).printed())


@main.command()
@click.argument("palette_file")
@click.option("--type", "kind", type=click.Choice(list(CVD_TYPES)), required=True)
def simulate(palette_file, kind):
    """Print the palette as it appears under a color vision deficiency."""
    palette = _load_palette(palette_file)
    simulated = Palette(
        palette.name,
        tuple(simulate_cvd(c, kind) for c in palette.colors),
        simulate_cvd(palette.background, kind),
        palette.type,
        palette.context_tags,
    )
    click.echo(palette_to_json(simulated))


@main.group()
def experiment():
    """Fixer comparison over the bundled corpus."""


@experiment.command("run")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-rounds", type=int, default=2000, show_default=True)
@click.option("--out", "out_path", default=None, help="Write the JSON matrix here.")
def experiment_run(seed, max_rounds, out_path):
    result = run_experiment(seed=seed, max_rounds=max_rounds)
    click.echo(format_table(result))
    if out_path:
        Path(out_path).write_text(result_to_json(result) + "\n", encoding="utf-8")
        click.echo(f"matrix written to {out_path}")


@main.command()
@click.option("--port", type=int, default=8404, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--ui", "ui_dir", default=None,
              help="Static directory with the built frontend (default: ./frontend/dist if present).")
def serve(port, host, ui_dir):
    """Run the stateless HTTP service, optionally hosting the editor UI."""
    import uvicorn

    from .service import create_app

    if ui_dir is None:
        candidate = Path("frontend") / "dist"
        ui_dir = str(candidate) if candidate.is_dir() else None
    uvicorn.run(create_app(static_dir=ui_dir), host=host, port=port)


if __name__ == "__main__":
    main()
