import math

import numpy as np
import pytest

from cnenergy import bounds
from cnenergy.bounds import (
    BoundReport,
    Inapplicable,
    check_derived_graph_theorem,
    check_kmn_not_hyperenergetic,
    check_le_cn_bounds,
    compute_context,
    complete_bipartite_parts,
    cycle_order,
    normalize_selection,
    run_checks,
    sqrt_diagonal_bound,
    threshold_index,
)
from cnenergy.families import Complete, CompleteBipartite, Cycle, Path, Star, generate, parse_family
from cnenergy.graph import Graph, enumerate_all_labeled_graphs, is_quadrangle_free, is_triangle_free

from .conftest import random_graph

PETERSEN = Graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)


def _by_id(results):
    return {r.theorem_id: r for r in results}


def test_bound_report_relations():
    assert BoundReport("x", 1.0, 2.0, "<=").slack == 1.0
    assert BoundReport("x", 3.0, 2.0, ">=").slack == 1.0
    r = BoundReport("x", 2.0, 2.0 + 1e-9, "==")
    assert r.holds and r.equality
    assert not BoundReport("x", 2.0, 2.1, "==").holds
    assert not BoundReport("x", 2.0 + 1e-6, 2.0, "<=").holds
    assert BoundReport("x", 2.0 + 1e-8, 2.0, "<=").holds
    with pytest.raises(ValueError):
        BoundReport("x", 1, 1, "<")


def test_alpha_examples():
    k4 = compute_context(generate(Complete(4)))
    assert (k4.alpha, k4.s_alpha) == (3, pytest.approx(24))
    c4 = compute_context(generate(Cycle(4)))
    assert (c4.alpha, c4.s_alpha) == (2, pytest.approx(8))


def test_threshold_index_ties_and_floor():
    assert threshold_index(np.array([4.0, 4.0, 0.0, 0.0]), 2.0, 1e-7) == 2
    assert threshold_index(np.array([2.0 - 1e-9, 0.0]), 2.0, 1e-7) == 1
    assert threshold_index(np.array([0.0, 0.0]), 1.0, 1e-7) == 1


def test_finite_sum_and_max_form_examples():
    r = _by_id(run_checks(generate(Complete(4)), "finite-sum,max-form"))
    assert r["finite-sum.cnl"].rhs == pytest.approx(12)
    assert r["max-form.cnl"].rhs == pytest.approx(12)
    r = _by_id(run_checks(generate(Cycle(4)), "finite-sum"))
    assert r["finite-sum.cnl"].rhs == pytest.approx(8)


def test_k4_bound_values():
    r = _by_id(run_checks(generate(Complete(4)), "e-cn,le-cn"))
    assert r["e-cn.energy-squared"].rhs == pytest.approx(48)
    assert r["e-cn.four-edges"].rhs == 24
    assert r["le-cn.order-trace"].rhs == pytest.approx(36)
    assert r["le-cn.degree-lower"].rhs == pytest.approx(0)


def test_petersen_regular_bound():
    r = _by_id(check_le_cn_bounds(PETERSEN))
    reg = r["le-cn.regular"]
    assert isinstance(reg, BoundReport) and reg.holds
    # 3-regular on 10 vertices: every CNRS diagonal entry is 3 * 2 = 6
    assert reg.rhs == pytest.approx(sqrt_diagonal_bound(compute_context(PETERSEN), include_self=False))


def test_regular_bound_inapplicable_off_class():
    r = _by_id(check_le_cn_bounds(generate(Path(5))))
    assert isinstance(r["le-cn.regular"], Inapplicable)


def test_sqrt_bound_parts_coincide(rng):
    for _ in range(20):
        ctx = compute_context(random_graph(rng, 8))
        assert sqrt_diagonal_bound(ctx, True) == pytest.approx(sqrt_diagonal_bound(ctx, False))


def test_derived_graph_theorem_on_trees_and_cycles(rng):
    import networkx as nx

    for n in range(2, 14):
        tree = Graph(n, nx.random_labeled_tree(n, seed=int(rng.integers(1 << 30))).edges)
        res = check_derived_graph_theorem(tree)
        assert all(isinstance(r, BoundReport) and r.holds and r.equality for r in res)
    for n in range(5, 12):
        assert all(r.equality for r in check_derived_graph_theorem(generate(Cycle(n))))


def test_derived_graph_applicability_matches_predicates():
    for g in enumerate_all_labeled_graphs(5):
        free = is_triangle_free(g) and is_quadrangle_free(g)
        res = check_derived_graph_theorem(g)
        assert all(isinstance(r, BoundReport) for r in res) == free
        assert all(isinstance(r, Inapplicable) for r in res) == (not free)


def test_cycle_corollary_reports():
    r = _by_id(run_checks(generate(Cycle(4)), "derived-graph"))
    assert r["derived-graph.cycle-cnl"].equality and r["derived-graph.cycle-cnl"].lhs == pytest.approx(8)
    assert isinstance(r["derived-graph.cnl"], Inapplicable)
    r = _by_id(run_checks(generate(Cycle(5)), "derived-graph"))
    assert r["derived-graph.cycle-cnl"].lhs == pytest.approx(2 + 2 * math.sqrt(5))
    assert cycle_order(generate(parse_family("C3+C3"))) is None
    assert cycle_order(generate(Cycle(7))) == 7


def test_complete_bipartite_recognition():
    assert complete_bipartite_parts(generate(CompleteBipartite(3, 2))) == (2, 3)
    assert complete_bipartite_parts(generate(Star(4))) == (1, 4)
    assert complete_bipartite_parts(generate(Path(4))) is None
    assert complete_bipartite_parts(generate(Cycle(4))) == (2, 2)
    assert complete_bipartite_parts(generate(Complete(3))) is None


def test_kmn_equality_only_at_k11():
    eq = _by_id(check_kmn_not_hyperenergetic(generate(CompleteBipartite(1, 1))))
    assert eq["kmn-not-hyper.cnl"].equality
    for m, n in [(1, 2), (2, 2), (3, 5)]:
        r = _by_id(check_kmn_not_hyperenergetic(generate(CompleteBipartite(m, n))))
        assert r["kmn-not-hyper.cnl"].holds and not r["kmn-not-hyper.cnl"].equality


def test_selection():
    assert normalize_selection("all") == ("all",)
    assert normalize_selection("") == ("all",)
    assert normalize_selection("e-cn, le-cn") == ("e-cn", "le-cn")
    assert normalize_selection(["kmn"]) == ("kmn",)
    with pytest.raises(ValueError):
        normalize_selection("nonsense")


def test_all_checks_hold_on_random_graphs(rng):
    for _ in range(40):
        g = random_graph(rng, int(rng.integers(2, 25)))
        bad = [r for r in run_checks(g) if isinstance(r, BoundReport) and not r.holds]
        assert not bad, (g, bad)


def test_all_checks_hold_on_larger_families():
    for spec in ["K30", "Kmn:12,25", "S40", "P40", "C41", "K5vK7+C9", "(E5vE6)+P7"]:
        bad = [r for r in run_checks(generate(parse_family(spec))) if isinstance(r, BoundReport) and not r.holds]
        assert not bad, (spec, bad)


def test_all_checks_hold_on_order_5():
    for g in enumerate_all_labeled_graphs(5):
        assert bounds.all_hold(run_checks(g))
