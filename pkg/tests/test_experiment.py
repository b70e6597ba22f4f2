from chromalint.builtins import colorbrewer_palettes, load_builtins
from chromalint.experiment import (
    cell_seed,
    derive_lint_subset,
    experiment_corpus,
    format_table,
    run_experiment,
)


def test_corpus_is_all_schemes_on_both_backgrounds():
    corpus = experiment_corpus()
    assert len(corpus) == 70
    assert all(len(p.colors) == 5 for p in corpus)
    backgrounds = {p.background.coords for p in corpus}
    assert backgrounds == {(0.0, 0.0, 0.0), (1.0, 1.0, 1.0)}


def test_subset_derivation_excludes_tag_gated_lints(registry):
    relevant, excluded = derive_lint_subset(list(registry), experiment_corpus())
    assert len(relevant) == 27
    assert len(excluded) == 8
    assert all(lint.required_tags for lint in registry if lint.id in excluded)


def test_cell_seeds_stable_and_distinct():
    a = cell_seed(0, "Blues-5-white", "in-gamut")
    assert a == cell_seed(0, "Blues-5-white", "in-gamut")
    assert a != cell_seed(0, "Blues-5-white", "max-colors")
    assert a != cell_seed(1, "Blues-5-white", "in-gamut")


def test_small_experiment_reproducible(registry):
    corpus = [p for p in experiment_corpus() if p.name.startswith(("Set2", "Blues"))]
    r1 = run_experiment(seed=3, max_rounds=300, corpus=corpus)
    r2 = run_experiment(seed=3, max_rounds=300, corpus=corpus)
    assert r1.matrix == r2.matrix


def test_failed_counts_bounded_by_attempts(registry):
    corpus = [p for p in experiment_corpus() if p.name.startswith("Set1")]
    result = run_experiment(seed=1, max_rounds=200, corpus=corpus)
    for cells in result.matrix.values():
        for cell in cells.values():
            assert 0 <= cell["failed"] <= cell["attempted"]


def test_heuristic_cells_only_for_supported_lints(registry):
    from chromalint.fixers import HEURISTIC_LINT_IDS

    corpus = [p for p in experiment_corpus() if p.name.startswith(("Set", "Pastel"))]
    result = run_experiment(seed=1, max_rounds=100, corpus=corpus)
    assert set(result.matrix["heuristic"]) <= set(HEURISTIC_LINT_IDS)


def test_table_formatting_mentions_every_relevant_lint(registry):
    corpus = [p for p in experiment_corpus() if p.name.startswith("Greys")]
    result = run_experiment(seed=0, max_rounds=50, corpus=corpus)
    table = format_table(result)
    for lint_id in result.lint_ids:
        assert lint_id in table
