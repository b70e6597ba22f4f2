import pytest

from chromalint.builtins import (
    BUILTIN_COUNT,
    build_registry,
    colorbrewer_palettes,
    load_builtins,
)
from chromalint.engine import parse_lint, run_lint, run_all, serialize_lint
from chromalint.lang import evaluate, parse_program
from chromalint.lang.evaluate import Env
from chromalint.palette import parse_palette

from test_engine import lint_doc


def test_registry_loads_exactly_35(registry):
    assert len(registry) == BUILTIN_COUNT == 35
    assert len({l.id for l in registry}) == 35


def test_every_program_parses_and_prints(registry):
    for lint in registry:
        assert lint.printed()  # parse happened at load; printing must not fail


def test_groups_and_levels_valid(registry):
    for lint in registry:
        assert lint.group in ("usability", "accessibility", "design")
        assert lint.level in ("error", "warning")


def test_tag_gated_lints_are_exactly_eight(registry):
    gated = sorted(l.id for l in registry if l.required_tags)
    assert gated == [
        "affect-negative-no-light-greens",
        "affect-playful-light-colors",
        "affect-positive-no-dark-reds",
        "affect-saturated-not-calm",
        "affect-saturated-not-serious",
        "affect-saturated-not-trustworthy",
        "wcag-text-contrast-aa",
        "wcag-text-contrast-aaa",
    ]


def test_corpus_runs_clean(registry):
    corpus = colorbrewer_palettes(("#000000", "#ffffff"))
    assert len(corpus) == 70
    for palette in corpus:
        for entry in run_all(list(registry), palette):
            assert entry.status != "evalError", (entry.lint_id, palette.name, entry.message)


def test_corpus_types_cover_all_three():
    kinds = {p.type for p in colorbrewer_palettes()}
    assert kinds == {"categorical", "sequential", "diverging"}


def test_cvd_lint_agrees_with_presimulated_check(registry_by_id):
    # Simulating inside the lint must equal simulating the palette first and
    # checking raw pairwise dE2000.
    raw_pairs = parse_program(
        {
            "all": {
                "in": "colors",
                "varbs": ["a", "b"],
                "where": {"<": {"left": "index(a)", "right": "index(b)"}},
                "predicate": {
                    "not": {"<": {"left": {"deltaE": {"left": "a", "right": "b",
                                                      "algorithm": "2000"}},
                                  "right": 10}}
                },
            }
        }
    )
    from chromalint.cvd import simulate_cvd

    corpus = colorbrewer_palettes(("#ffffff",))[:12]
    for kind in ("deuteranopia", "protanopia", "tritanopia"):
        lint = registry_by_id[f"cvd-friendly-{kind}"]
        for palette in corpus:
            inside = run_lint(lint, palette).status == "pass"
            simulated = palette.replace_colors([simulate_cvd(c, kind) for c in palette.colors])
            outside = evaluate(raw_pairs, Env.for_palette(simulated))
            assert inside == outside, (kind, palette.name)


def test_definitional_lints_fixed_by_own_heuristics(registry_by_id):
    from chromalint.fixers import fix_heuristic

    bad_seq = parse_palette({"colors": ["#bbbbbb", "#222222", "#777777"],
                             "background": "#fff", "type": "sequential"})
    bad_div = parse_palette({"colors": ["#eeeeee", "#444444", "#999999", "#222222"],
                             "background": "#fff", "type": "diverging"})
    for lint_id, palette in (("sequential-palette-order", bad_seq),
                             ("diverging-palette-order", bad_div)):
        lint = registry_by_id[lint_id]
        assert run_lint(lint, palette).status == "fail"
        assert fix_heuristic(lint, palette).passes_target


def test_user_lints_shadow_builtins_by_id(registry):
    relaxed = parse_lint(lint_doc(id="max-colors", program=True))
    merged = build_registry([relaxed])
    assert len(merged) == 35
    assert next(l for l in merged if l.id == "max-colors").program_doc is True


def test_sequential_order_lint_passes_canonical_sequential(registry_by_id):
    for palette in colorbrewer_palettes():
        if palette.type == "sequential":
            assert run_lint(registry_by_id["sequential-palette-order"], palette).status == "pass"


def test_diverging_order_lint_passes_canonical_diverging(registry_by_id):
    for palette in colorbrewer_palettes():
        if palette.type == "diverging":
            assert run_lint(registry_by_id["diverging-palette-order"], palette).status == "pass"


def test_diverging_order_rejects_monotone(registry_by_id):
    palette = parse_palette({"colors": ["#111111", "#555555", "#999999", "#dddddd"],
                             "background": "#fff", "type": "diverging"})
    assert run_lint(registry_by_id["diverging-palette-order"], palette).status == "fail"


@pytest.mark.parametrize(
    "lint_id,doc,expected",
    [
        ("avoid-extreme-colors",
         {"colors": ["#ff0000", "#888888"], "background": "#dddddd", "type": "categorical"},
         "fail"),
        ("avoid-extreme-colors",
         {"colors": ["#ee3344", "#888888"], "background": "#dddddd", "type": "categorical"},
         "pass"),
        ("max-colors",
         {"colors": [f"#0022{i:02x}" for i in range(11)], "background": "#fff",
          "type": "categorical"},
         "fail"),
        ("background-desaturation-sufficient",
         {"colors": ["#888888"], "background": "#ff2200", "type": "categorical"},
         "fail"),
        ("background-desaturation-sufficient",
         {"colors": ["#888888"], "background": "#f2f2f2", "type": "categorical"},
         "pass"),
        ("blue-nameable-as-blue",
         {"colors": [{"color": "#00a86b", "tags": ["blue"]}], "background": "#fff",
          "type": "categorical"},
         "fail"),
        ("blue-nameable-as-blue",
         {"colors": [{"color": "#1f77b4", "tags": ["blue"]}], "background": "#fff",
          "type": "categorical"},
         "pass"),
        ("axes-low-contrast-with-background",
         {"colors": [{"color": "#111111", "tags": ["axis"]}], "background": "#ffffff",
          "type": "categorical"},
         "fail"),
        ("axes-low-contrast-with-background",
         {"colors": [{"color": "#bbbbbb", "tags": ["axis"]}], "background": "#ffffff",
          "type": "categorical"},
         "pass"),
        ("require-color-complements",
         {"colors": ["hsl(10, 0.8, 0.5)", "hsl(30, 0.8, 0.5)"], "background": "#fff",
          "type": "categorical"},
         "fail"),
        ("prefer-yellowish-bluish-greens",
         {"colors": ["#21a621"], "background": "#fff", "type": "categorical"},
         "fail"),
        ("fair",
         {"colors": ["#111111", "#fefefe"], "background": "#888888", "type": "categorical"},
         "fail"),
        ("no-ugly-colors",
         {"colors": ["#c3b03b"], "background": "#fff", "type": "categorical"},
         "fail"),
    ],
)
def test_builtin_lint_behavior(registry_by_id, lint_id, doc, expected):
    assert run_lint(registry_by_id[lint_id], parse_palette(doc)).status == expected


def test_tetradic_square_detected(registry_by_id):
    square = parse_palette({
        "colors": ["lch(60, 50, 10)", "lch(60, 50, 100)", "lch(60, 50, 190)", "lch(60, 50, 280)"],
        "background": "#fff", "type": "categorical",
    })
    spread = parse_palette({
        "colors": ["lch(60, 50, 10)", "lch(60, 50, 80)", "lch(60, 50, 190)", "lch(60, 50, 300)"],
        "background": "#fff", "type": "categorical",
    })
    lint = registry_by_id["avoid-tetradic-palettes"]
    assert run_lint(lint, square).status == "fail"
    assert run_lint(lint, spread).status == "pass"


def test_text_lints_need_palette_and_color_tags(registry_by_id):
    lint = registry_by_id["wcag-text-contrast-aa"]
    low = {"color": "#9aa0a6", "tags": ["text"]}
    untagged_palette = parse_palette({"colors": [low], "background": "#fff", "type": "categorical"})
    tagged_palette = parse_palette({"colors": [low], "background": "#fff", "type": "categorical",
                                    "tags": ["text"]})
    assert run_lint(lint, untagged_palette).status == "notApplicable"
    assert run_lint(lint, tagged_palette).status == "fail"
