"""Stateless HTTP service over the lint engine.

Evaluation errors are domain results (evalError entries in a 200 response);
only malformed requests produce 400s, with the same validation paths the CLI
prints. Customization and user lints travel inside each request, so the
server holds no per-client state.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .builtins import build_registry
from .cvd import CVD_TYPES, simulate_cvd
from .engine import (
    STATUS_FAIL,
    CustomizationState,
    LintDefinitionError,
    applicable,
    parse_lint,
    report_to_document,
    run_all,
    run_lint,
    serialize_lint,
)
from .fixers import McConfig, StubLlmClient, apply_llm_fix, fix_heuristic, fix_monte_carlo
from .lang import ProgramParseError
from .palette import Palette, PaletteValidationError, parse_palette, serialize_palette


def _bad_request(detail):
    raise HTTPException(status_code=400, detail=detail)


def _palette_from(body: dict, key: str = "palette"):
    if key not in body:
        _bad_request([{"path": f"$.{key}", "message": "missing palette"}])
    try:
        return parse_palette(body[key])
    except PaletteValidationError as e:
        _bad_request([{"path": f"$.{key}{p[1:]}", "message": m} for p, m in e.errors])


def _user_lints_from(body: dict):
    lints = []
    for i, doc in enumerate(body.get("userLints") or []):
        try:
            lints.append(parse_lint(doc, source=f"$.userLints[{i}]"))
        except LintDefinitionError as e:
            _bad_request([{"path": f"$.userLints[{i}]", "message": str(e)}])
    return lints


def _customization_from(body: dict):
    try:
        return CustomizationState.from_document(body.get("customization"))
    except LintDefinitionError as e:
        _bad_request([{"path": "$.customization", "message": str(e)}])


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="chromalint", version="0.1.0")

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/lints")
    def lints():
        registry = build_registry()
        return {
            "lints": [
                {**serialize_lint(l), "printedProgram": l.printed()} for l in registry
            ]
        }

    @app.post("/evaluate")
    def evaluate(body: dict):
        palette = _palette_from(body)
        registry = build_registry(_user_lints_from(body))
        custom = _customization_from(body)
        lint_ids = body.get("lintIds")
        if lint_ids is not None:
            known = {l.id for l in registry}
            unknown = [i for i in lint_ids if i not in known]
            if unknown:
                _bad_request([{"path": "$.lintIds", "message": f"unknown lint ids: {unknown}"}])
            registry = [l for l in registry if l.id in lint_ids]
        entries = run_all(registry, palette, custom)
        return report_to_document(entries, palette)

    @app.post("/fix")
    def fix(body: dict):
        palette = _palette_from(body)
        registry = build_registry(_user_lints_from(body))
        lint_id = body.get("lintId")
        lint = next((l for l in registry if l.id == lint_id), None)
        if lint is None:
            _bad_request([{"path": "$.lintId", "message": f"unknown lint id: {lint_id}"}])
        strategy = body.get("strategy", "mc")
        if strategy not in ("mc", "heuristic", "llm"):
            _bad_request([{"path": "$.strategy", "message": f"unknown strategy: {strategy}"}])
        if not applicable(lint, palette):
            _bad_request([{"path": "$.lintId", "message": f"{lint_id} is not applicable to this palette"}])
        if run_lint(lint, palette).status != STATUS_FAIL:
            _bad_request([{"path": "$.lintId", "message": f"{lint_id} does not fail on this palette"}])

        if strategy == "heuristic":
            candidate = fix_heuristic(lint, palette)
        elif strategy == "mc":
            seed = int(body.get("seed", 0))
            max_rounds = int(body.get("maxRounds", 2000))
            candidate = fix_monte_carlo(lint, palette, McConfig(max_rounds=max_rounds, rng_seed=seed))
        else:
            reply = body.get("stubReply")
            if reply is None:
                from .fixers import HttpLlmClient

                try:
                    client = HttpLlmClient()
                except RuntimeError as e:
                    _bad_request([{"path": "$.strategy", "message": str(e)}])
            else:
                client = StubLlmClient(reply)
            candidate = apply_llm_fix(lint, palette, client)

        if candidate is None:
            return {"fixed": False, "strategy": strategy}
        return {
            "fixed": candidate.passes_target,
            "strategy": strategy,
            "iterations": candidate.iterations,
            "palette": serialize_palette(candidate.palette),
        }

    @app.post("/lints/validate")
    def validate(body: dict):
        doc = body.get("lint", body)
        try:
            lint = parse_lint(doc, source="$.lint")
        except LintDefinitionError as e:
            return JSONResponse(
                status_code=400, content={"ok": False, "errors": [{"message": str(e)}]}
            )
        except ProgramParseError as e:
            return JSONResponse(
                status_code=400,
                content={"ok": False, "errors": [{"path": e.path, "message": e.message}]},
            )
        return {"ok": True, "id": lint.id, "printedProgram": lint.printed()}

    @app.post("/simulate")
    def simulate(body: dict):
        palette = _palette_from(body)
        kind = body.get("type")
        if kind not in CVD_TYPES:
            _bad_request([{"path": "$.type", "message": f"unknown CVD type: {kind}"}])
        simulated = Palette(
            palette.name,
            tuple(simulate_cvd(c, kind) for c in palette.colors),
            simulate_cvd(palette.background, kind),
            palette.type,
            palette.context_tags,
        )
        return {"palette": serialize_palette(simulated)}

    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
