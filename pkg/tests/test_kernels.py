import itertools
import os
import random
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planesat import kernels
from planesat.graph import random_triangulation, spanning_embedding
from planesat.harness import _brute_embeds, random_embedding_pairs

needs_compiled = pytest.mark.skipif(not kernels.COMPILED, reason="compiled kernels not built")


def _adj(n, edges):
    nb = [[] for _ in range(n)]
    for u, v in edges:
        nb[u].append(v)
        nb[v].append(u)
    return [tuple(sorted(x)) for x in nb]


def _masks(n, edges):
    m = [0] * n
    for u, v in edges:
        m[u] |= 1 << v
        m[v] |= 1 << u
    return m


def _connected_edges(rng, n, extra):
    edges = {(min(v, p), max(v, p)) for v in range(1, n) for p in [rng.randrange(v)]}
    pairs = [p for p in itertools.combinations(range(n), 2) if p not in edges]
    edges |= set(rng.sample(pairs, min(extra, len(pairs))))
    return sorted(edges)


def test_embedding_matches_permutation_oracle(derived):
    pairs = random_embedding_pairs()
    assert len(pairs) == 100 and all(n <= 7 for n, _, _ in pairs)
    got = [spanning_embedding(h, g) is not None for _, h, g in pairs]
    assert got == [_brute_embeds(n, h, g) for n, h, g in pairs] == derived["embedding_pairs"]


@pytest.mark.parametrize("backend", ["python", pytest.param("cython", marks=needs_compiled)])
def test_each_backend_matches_oracle(backend):
    for n, h, g in random_embedding_pairs(40, seed=11):
        sigma = spanning_embedding(h, g, backend=backend)
        assert (sigma is not None) == _brute_embeds(n, h, g)
        if sigma is not None:
            assert all(g.has_edge(sigma(u), sigma(v)) for u, v in h)


@needs_compiled
@given(st.integers(3, 7), st.integers(0, 3), st.integers(0, 10 ** 6))
def test_rotation_classes_backends_agree(n, extra, seed):
    edges = _connected_edges(random.Random(seed), n, extra)
    adj = _adj(n, edges)
    a = kernels.rotation_classes(n, adj, backend="python")
    b = kernels.rotation_classes(n, adj, backend="cython")
    assert a[1] == b[1]
    assert a[0] == b[0]


@needs_compiled
@given(st.integers(4, 12), st.integers(0, 10 ** 6), st.integers(0, 20))
def test_find_embedding_backends_agree(n, seed, k):
    rng = random.Random(seed)
    g, _ = random_triangulation(n, seed=seed)
    pairs = list(itertools.combinations(range(n), 2))
    h = rng.sample(pairs, min(k, len(pairs)))
    a = spanning_embedding(h, g, backend="python")
    b = spanning_embedding(h, g, backend="cython")
    assert a == b


def test_rotation_classes_counts_known_graphs():
    # K4 has two genus-0 rotation systems (mirror images) with the same face masks
    k4 = _adj(4, itertools.combinations(range(4), 2))
    classes, tried = kernels.rotation_classes(4, k4, backend="python")
    assert tried == 16 and len(classes) == 1
    path = _adj(3, [(0, 1), (1, 2)])
    classes, tried = kernels.rotation_classes(3, path, backend="python")
    assert tried == 1 and len(classes) == 1


def test_pure_python_switch():
    env = dict(os.environ, PLANESAT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from planesat import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@needs_compiled
def test_compiled_backend_selected_by_default():
    assert kernels.BACKEND == "cython"


def test_benchmark_runs(tmp_path):
    from pathlib import Path
    script = Path(__file__).parents[1] / "benchmarks" / "bench_kernels.py"
    out = subprocess.run([sys.executable, str(script), "--repeat", "1", "--json", str(tmp_path / "b.json")],
                         capture_output=True, text=True, check=True)
    assert "find_embedding" in out.stdout
    assert "python" in (tmp_path / "b.json").read_text()
