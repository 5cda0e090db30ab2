import itertools
import random

import pytest

from planesat.drawing import empty_drawing
from planesat.graph import double_wheel, make_graph
from planesat.saturation import is_labeled_saturated, is_unlabeled_saturated
from planesat.search import (
    cross_check,
    enumerate_drawings,
    extensions,
    incremental_minimum,
    min_labeled_saturated,
    min_unlabeled_saturated,
    region_signature,
)


def dw(n):
    return double_wheel(n)[0]


def test_enumerate_drawings_examples():
    assert len(list(enumerate_drawings(3, [(0, 1)]))) == 1
    assert len(list(enumerate_drawings(3, [(0, 1), (1, 2), (0, 2)]))) == 1
    classes = list(enumerate_drawings(4, [(0, 1), (1, 2), (0, 2)]))
    assert len(classes) == 2
    assert len({region_signature(d) for d in classes}) == 2


def _incremental_signatures(g):
    """Region signatures of every drawing reachable by inserting host edges in order."""
    host = sorted(g.edges)
    pos = {e: i for i, e in enumerate(host)}
    out = {}
    level = {empty_drawing(g.n).key(): empty_drawing(g.n)}
    while level:
        nxt = {}
        for d in level.values():
            out.setdefault(d.edges, set()).add(region_signature(d))
            last = max((pos[e] for e in d.edges), default=-1)
            for e in host[last + 1:]:
                for x in extensions(d, *e):
                    nxt.setdefault(x.key(), x)
        level = nxt
    return out


def test_enumeration_matches_incremental_construction(k4):
    inc = _incremental_signatures(k4)
    for s in range(7):
        for sub in itertools.combinations(sorted(k4.edges), s):
            sigs = {region_signature(d) for d in enumerate_drawings(4, sub)}
            assert sigs == inc[frozenset(sub)], sub


def test_enumeration_matches_incremental_on_random_subsets():
    g = dw(5)
    inc = _incremental_signatures(g)
    rng = random.Random(5)
    host = sorted(g.edges)
    for _ in range(40):
        sub = rng.sample(host, rng.randint(0, 7))
        sigs = {region_signature(d) for d in enumerate_drawings(5, sub)}
        assert sigs == inc[frozenset(sub)]


@pytest.mark.parametrize("name, rule", [("K4", "labeled"), ("K4", "unlabeled"), ("dw5", "labeled"),
                                        ("dw5", "unlabeled"), ("dw6", "labeled"), ("dw6", "unlabeled"),
                                        ("dw7", "labeled")])
def test_minima_match_fixtures(name, rule, k4, derived):
    g = k4 if name == "K4" else dw(int(name[2:]))
    res = (min_labeled_saturated if rule == "labeled" else min_unlabeled_saturated)(g)
    want = derived["minima"][f"{name}/{rule}"]
    assert res.exhaustive and not res.budget_hit
    assert res.min_edges == want["min_edges"]
    assert sorted(map(list, res.witness.edges)) == want["witness_edges"]
    check = is_labeled_saturated if rule == "labeled" else is_unlabeled_saturated
    assert check(res.witness, g).saturated


def test_known_values(k4):
    assert min_labeled_saturated(k4).min_edges == 6
    assert min_labeled_saturated(dw(5)).min_edges >= 8
    assert min_unlabeled_saturated(dw(6)).min_edges >= 6
    assert min_labeled_saturated(dw(7)).min_edges == 9


@pytest.mark.slow
def test_eight_vertex_labeled_minimum(derived):
    res = min_labeled_saturated(dw(8))
    assert res.min_edges == derived["minima"]["dw8/labeled"]["min_edges"] == 10


def test_budget_gives_non_exhaustive_result():
    g = dw(6)
    res = min_labeled_saturated(g, budget=8)
    assert not res.exhaustive and res.budget_hit
    assert res.min_edges == len(g.edges)
    assert is_labeled_saturated(res.witness, g).saturated


def test_parallel_sweep_is_deterministic():
    g = dw(6)
    a = min_labeled_saturated(g)
    b = min_labeled_saturated(g, jobs=2)
    assert a.min_edges == b.min_edges and a.witness == b.witness


def test_unlabeled_minimum_is_label_invariant():
    g = dw(5)
    perm = [3, 0, 4, 1, 2]
    h = make_graph(5, [(perm[u], perm[v]) for u, v in g.edges])
    assert min_unlabeled_saturated(h).min_edges == min_unlabeled_saturated(g).min_edges


def test_minimum_is_least_saturated_size():
    g = dw(5)
    res = min_labeled_saturated(g)
    for s in range(res.min_edges):
        for sub in itertools.combinations(sorted(g.edges), s):
            for d in enumerate_drawings(5, sub):
                assert not is_labeled_saturated(d, g).saturated


def test_incremental_minimum_k4(k4):
    m, wit, states = incremental_minimum(k4, "labeled")
    assert m == 6 and len(wit.edges) == 6


@pytest.mark.parametrize("name", ["K4", "dw5"])
def test_cross_check(name, k4, derived):
    g = k4 if name == "K4" else dw(5)
    ok, details = cross_check(g)
    assert ok and derived["cross_check"][name]
    assert details["labeled"]["sweep"] == details["labeled"]["incremental"]


def test_search_result_json(k4):
    js = min_labeled_saturated(k4).to_json()
    assert js["min_edges"] == 6 and js["ratio"] == {"num": 1, "den": 1}
    assert set(js) == {"min_edges", "ratio", "exhaustive", "states", "witness"}
