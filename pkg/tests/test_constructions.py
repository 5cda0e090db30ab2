import math
from fractions import Fraction

import pytest

from planesat.constructions import (
    choose_bound_vertex,
    degree_bound,
    fig4_classes,
    fig4_witness,
    fig7_labels,
    fig7_witness,
    gap_constant,
    generic_bound,
    psr_gap_construction,
    psr_wheel_construction,
    wheel_coloring_bound,
)
from planesat.errors import PreconditionError
from planesat.graph import double_wheel, make_graph, random_triangulation
from planesat.saturation import is_labeled_saturated, is_unlabeled_saturated

from conftest import k4_drawing


@pytest.mark.parametrize("n", [9, 11, 13, 15])
def test_fig7_edge_count_and_host_edges(n, derived):
    h = fig7_witness(n)
    g, _ = double_wheel(n)
    assert len(h.edges) == (3 * n + 3) // 2
    assert h.edges <= g.edges
    if str(n) in derived["fig7"]:
        assert len(h.edges) == derived["fig7"][str(n)]["edges"]


@pytest.mark.parametrize("n", [9, 11, 13])
def test_fig7_is_plane_saturated(n):
    g, _ = double_wheel(n)
    assert is_unlabeled_saturated(fig7_witness(n), g).saturated


def test_fig7_labels_are_a_bijection():
    lab = fig7_labels(13)
    assert sorted(lab.values()) == list(range(13))


@pytest.mark.parametrize("n", [8, 7, 2])
def test_fig7_rejects_bad_n(n):
    with pytest.raises(PreconditionError):
        fig7_witness(n)


@pytest.mark.parametrize("n", range(7, 14))
def test_fig4_witness(n, derived):
    g, _ = double_wheel(n)
    h = fig4_witness(n)
    assert len(h.edges) == n + 2 == derived["fig4"][str(n)]
    assert is_labeled_saturated(h, g).saturated


def test_fig4_classes_partition_the_rim():
    a, b, c = fig4_classes(12)
    assert sorted(a + b + c) == list(range(5, 12))


def test_fig4_rejects_small_n():
    with pytest.raises(PreconditionError):
        fig4_witness(6)


def test_bound_formulas():
    assert generic_bound(4, 47) == Fraction(143, 2)
    assert degree_bound(4, 47) == 52
    assert degree_bound(5, 50) == 40 + Fraction(46, 5)
    assert degree_bound(6, 60) == 54
    assert degree_bound(7, 47) == generic_bound(7, 47) == 14 + Fraction(6 * 47, 7) - Fraction(12, 7) - 4


def test_choose_bound_vertex_on_double_wheel():
    g, _ = double_wheel(47)
    v = choose_bound_vertex(g)
    assert g.degree(v) == 4 and v == 2


def test_choose_bound_vertex_single_degree_seven_candidate():
    g = make_graph(47, [(0, i) for i in range(1, 8)])
    assert choose_bound_vertex(g) == 0


def test_choose_bound_vertex_rejects_small_or_degenerate():
    with pytest.raises(PreconditionError):
        choose_bound_vertex(double_wheel(12)[0])
    with pytest.raises(PreconditionError):
        choose_bound_vertex(make_graph(47, []))


def test_wheel_coloring_double_wheel_47(derived):
    g, d = double_wheel(47)
    h, rep = wheel_coloring_bound(g, d, 2)
    assert rep.k == 4 and rep.total_edges <= 52 and rep.bound_formula_value == 52
    assert rep.generic_bound == Fraction(143, 2)
    assert rep.total_edges == derived["dw47_k4_total"]
    assert is_labeled_saturated(h, g).saturated and rep.saturation_verified


def test_wheel_coloring_rejects_low_degree():
    g, d = random_triangulation(10, seed=1, flips=0)
    v = next(v for v in range(10) if g.degree(v) == 3)
    with pytest.raises(PreconditionError):
        wheel_coloring_bound(g, d, v)


def test_wheel_coloring_upper_instances(derived):
    from planesat.harness import upper_instances
    for (g, d), want in zip(upper_instances(), derived["upper_instances"]):
        v = choose_bound_vertex(g)
        h, rep = wheel_coloring_bound(g, d, v)
        assert (g.n, v, rep.k, rep.total_edges) == (want["n"], want["vertex"], want["k"], want["total_edges"])
        assert rep.total_edges <= g.n + 7
        assert rep.total_edges <= math.floor(degree_bound(rep.k, g.n))
        assert sum(rep.costs) <= 6 * g.n - 12 - 4 * rep.k
        assert rep.costs[rep.rotation_chosen] * rep.k <= sum(rep.costs)
        assert rep.added_edges == rep.total_edges - 2 * rep.k


@pytest.mark.parametrize("n", range(6, 13))
def test_psr_wheel(n):
    for g, d in (double_wheel(n), random_triangulation(n, seed=n)):
        h, rep = psr_wheel_construction(g, d)
        k = max(g.degrees)
        assert rep.bound_formula_value == 3 * n - 6 - min(k, n - k - 1)
        assert rep.total_edges <= rep.bound_formula_value
        assert is_unlabeled_saturated(h, g).saturated


def test_psr_wheel_examples(k4, derived):
    g, d = double_wheel(9)
    assert psr_wheel_construction(g, d)[1].bound_formula_value == 20
    h, rep = psr_wheel_construction(k4, k4_drawing())
    assert rep.bound_formula_value == 6 and len(h.edges) == 6
    g, d = random_triangulation(12, seed=5, flips=30)
    h, rep = psr_wheel_construction(g, d)
    want = derived["psr_wheel_rt12_5_30"]
    assert (max(g.degrees), int(rep.bound_formula_value), rep.total_edges) == \
        (want["max_degree"], want["bound"], want["total_edges"])


def test_gap_constant():
    assert gap_constant(1) == Fraction(1, 13)
    assert abs(float(gap_constant(0.933)) - 0.0673) < 1e-4


@pytest.mark.parametrize("n", [78, 100, 200])
def test_psr_gap_skeletons(n, derived):
    g, d = double_wheel(n)
    h, rep = psr_gap_construction(g, d, 0.933, step_budget=0)
    want = derived["psr_gap_skeletons"][str(n)]
    assert rep.details["skeleton_edges"] == want["skeleton_edges"]
    assert rep.binding == want["binding"] == (rep.bound_formula_value < 3 * n - 6)
    assert rep.details["skeleton_edges"] <= rep.bound_formula_value
    assert rep.saturation_verified is False
    assert h.edges <= g.edges


def test_psr_gap_reduced_analog(derived):
    g, d = double_wheel(12)
    h, rep = psr_gap_construction(g, d, Fraction(10, 12), strict=False)
    assert rep.total_edges == derived["psr_gap_dw12"]["total_edges"]
    assert rep.bound_satisfied and rep.saturation_verified
    assert is_unlabeled_saturated(h, g).saturated
    assert not rep.details["threshold_met"]


def test_psr_gap_preconditions():
    g, d = double_wheel(12)
    with pytest.raises(PreconditionError, match="threshold"):
        psr_gap_construction(g, d, 0.933)
    g, d = double_wheel(78)
    with pytest.raises(PreconditionError):
        psr_gap_construction(g, d, 1.0)


def test_report_json_round_numbers():
    g, d = double_wheel(47)
    js = wheel_coloring_bound(g, d, 2)[1].to_json()
    assert js["bound_formula_value"] == {"num": 52, "den": 1, "value": 52.0}
    assert js["kind"] == "wheel-coloring"
