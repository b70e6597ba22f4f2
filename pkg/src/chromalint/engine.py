"""Lint objects, applicability filtering, evaluation, and report assembly."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .color import to_hex
from .lang import EvalError, ProgramParseError, evaluate, parse_program, print_program
from .lang.evaluate import Env
from .palette import PALETTE_TYPES, Palette

GROUPS = ("usability", "accessibility", "design", "custom")
LEVELS = ("error", "warning")
BLAME_MODES = ("single", "pair", "none")

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_IGNORED = "ignored"
STATUS_NOT_APPLICABLE = "notApplicable"
STATUS_EVAL_ERROR = "evalError"


class LintDefinitionError(ValueError):
    """A lint definition document is malformed."""


@dataclass(frozen=True)
class Lint:
    id: str
    name: str
    group: str
    level: str
    description: str
    fail_message: str
    task_types: frozenset[str]  # subset of palette types, or {"any"}
    required_tags: frozenset[str]
    program: object  # parsed AST
    program_doc: dict  # original JSON form
    blame_mode: str

    def printed(self) -> str:
        return print_program(self.program)


def parse_lint(document, source: str = "<lint>") -> Lint:
    """Build a Lint from its definition document, parsing the program."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise LintDefinitionError(f"{source}: invalid JSON: {e}") from None
    if not isinstance(document, dict):
        raise LintDefinitionError(f"{source}: lint definition must be an object")

    def need(key, typ):
        if key not in document:
            raise LintDefinitionError(f"{source}: missing {key!r}")
        value = document[key]
        if not isinstance(value, typ):
            raise LintDefinitionError(f"{source}: {key!r} has the wrong type")
        return value

    lint_id = need("id", str)
    group = need("group", str)
    if group not in GROUPS:
        raise LintDefinitionError(f"{source}: unknown group {group!r}")
    level = need("level", str)
    if level not in LEVELS:
        raise LintDefinitionError(f"{source}: unknown level {level!r}")
    task_types = frozenset(need("taskTypes", list))
    if not task_types:
        raise LintDefinitionError(f"{source}: taskTypes must be non-empty")
    bad = task_types - set(PALETTE_TYPES) - {"any"}
    if bad:
        raise LintDefinitionError(f"{source}: unknown taskTypes {sorted(bad)}")
    blame_mode = need("blameMode", str)
    if blame_mode not in BLAME_MODES:
        raise LintDefinitionError(f"{source}: unknown blameMode {blame_mode!r}")
    if "program" not in document:
        raise LintDefinitionError(f"{source}: missing 'program'")
    program_doc = document["program"]
    try:
        program = parse_program(program_doc)
    except ProgramParseError as e:
        raise LintDefinitionError(f"{source}: bad program at {e.path}: {e.message}") from None

    return Lint(
        id=lint_id,
        name=need("name", str),
        group=group,
        level=level,
        description=need("description", str),
        fail_message=need("failMessage", str),
        task_types=task_types,
        required_tags=frozenset(t.lower() for t in need("requiredTags", list)),
        program=program,
        program_doc=program_doc,
        blame_mode=blame_mode,
    )


def serialize_lint(l: Lint) -> dict:
    return {
        "id": l.id,
        "name": l.name,
        "group": l.group,
        "level": l.level,
        "description": l.description,
        "failMessage": l.fail_message,
        "taskTypes": sorted(l.task_types),
        "requiredTags": sorted(l.required_tags),
        "blameMode": l.blame_mode,
        "program": l.program_doc,
    }


@dataclass(frozen=True)
class CustomizationState:
    globally_ignored: frozenset[str] = field(default_factory=frozenset)
    per_palette_ignored: dict = field(default_factory=dict)  # palette name -> set of ids
    overrides: dict = field(default_factory=dict)  # lint id -> Lint

    @classmethod
    def from_document(cls, doc) -> "CustomizationState":
        doc = doc or {}
        overrides = {}
        for lint_id, lint_doc in (doc.get("overrides") or {}).items():
            lint = parse_lint(lint_doc, source=f"override:{lint_id}")
            if lint.id != lint_id:
                raise LintDefinitionError(f"override for {lint_id!r} changes the id to {lint.id!r}")
            overrides[lint_id] = lint
        return cls(
            globally_ignored=frozenset(doc.get("globallyIgnored") or ()),
            per_palette_ignored={
                k: frozenset(v) for k, v in (doc.get("perPaletteIgnored") or {}).items()
            },
            overrides=overrides,
        )

    def is_ignored(self, lint_id: str, palette_name: str) -> bool:
        if lint_id in self.globally_ignored:
            return True
        return lint_id in self.per_palette_ignored.get(palette_name, ())


@dataclass(frozen=True)
class ReportEntry:
    lint_id: str
    status: str
    level: str
    group: str
    message: str
    blame: Optional[object]  # blame_engine.Blame
    printed_program: str

    def to_document(self, palette: Palette) -> dict:
        doc = {
            "lintId": self.lint_id,
            "status": self.status,
            "level": self.level,
            "group": self.group,
            "message": self.message,
            "printedProgram": self.printed_program,
            "blame": None,
        }
        if self.blame is not None:
            doc["blame"] = self.blame.to_document(palette)
        return doc


def applicable(l: Lint, p: Palette) -> bool:
    """Task-type and required-tag filter."""
    if "any" not in l.task_types and p.type not in l.task_types:
        return False
    return l.required_tags <= p.context_tags


def render_fail_message(l: Lint, p: Palette, blame) -> str:
    blame_text = blame.describe(p) if blame is not None else ""
    return l.fail_message.replace("{{blame}}", blame_text).replace(
        "{{paletteName}}", p.name or "palette"
    )


def run_lint(l: Lint, p: Palette) -> ReportEntry:
    """Evaluate one lint; never raises for evaluator errors."""
    from .blame import blame as compute_blame

    if not applicable(l, p):
        return ReportEntry(l.id, STATUS_NOT_APPLICABLE, l.level, l.group, "", None, l.printed())
    try:
        ok = evaluate(l.program, Env.for_palette(p))
    except EvalError as e:
        return ReportEntry(
            l.id, STATUS_EVAL_ERROR, l.level, l.group, f"evaluation error at {e.path}: {e.message}",
            None, l.printed(),
        )
    if ok:
        return ReportEntry(l.id, STATUS_PASS, l.level, l.group, "", None, l.printed())
    b = compute_blame(l, p) if l.blame_mode != "none" else None
    return ReportEntry(
        l.id, STATUS_FAIL, l.level, l.group, render_fail_message(l, p, b), b, l.printed()
    )


def run_all(
    registry: list[Lint], p: Palette, custom: Optional[CustomizationState] = None
) -> list[ReportEntry]:
    """One entry per lint after overrides; errors sort before warnings."""
    custom = custom or CustomizationState()
    entries = []
    for l in registry:
        l = custom.overrides.get(l.id, l)
        entry = run_lint(l, p)
        if custom.is_ignored(l.id, p.name) and entry.status in (STATUS_PASS, STATUS_FAIL, STATUS_EVAL_ERROR):
            entry = ReportEntry(
                entry.lint_id, STATUS_IGNORED, entry.level, entry.group,
                entry.message, entry.blame, entry.printed_program,
            )
        entries.append(entry)
    entries.sort(key=lambda e: (LEVELS.index(e.level), e.group, e.lint_id))
    return entries


def report_to_document(entries: list[ReportEntry], p: Palette) -> dict:
    return {
        "paletteName": p.name,
        "entries": [e.to_document(p) for e in entries],
    }


def blamed_hexes(p: Palette, indexes) -> list[str]:
    return [to_hex(p.colors[i]) for i in indexes]
