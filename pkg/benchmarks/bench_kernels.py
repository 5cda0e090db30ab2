"""Compiled vs pure-Python kernels on the workloads the library actually runs.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""
import argparse
import itertools
import json
import random
import time

from planesat import kernels
from planesat.graph import double_wheel, random_triangulation


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


def rotation_workload():
    """Every connected subgraph of the 6-vertex double wheel with 6 to 9 edges."""
    g, _ = double_wheel(6)
    jobs = []
    for s in range(6, 10):
        for sub in itertools.combinations(sorted(g.edges), s):
            adj = _adj(6, sub)
            if all(adj):
                jobs.append(adj)
    return jobs[::7]


def embedding_workload():
    """Sparse patterns against double wheels and random triangulations (n = 9..20)."""
    rng = random.Random(3)
    jobs = []
    for i in range(150):
        n = rng.randint(9, 20)
        g = double_wheel(n)[0] if i % 2 else random_triangulation(n, seed=i)[0]
        pairs = list(itertools.combinations(range(n), 2))
        h = rng.sample(pairs, rng.randint(n, 2 * n))
        jobs.append((n, _masks(n, h), list(g.masks)))
    return jobs


def run(backend, rot_jobs, emb_jobs):
    t0 = time.perf_counter()
    for adj in rot_jobs:
        kernels.rotation_classes(len(adj), adj, backend=backend)
    t1 = time.perf_counter()
    hits = 0
    for n, h, g in emb_jobs:
        hits += kernels.find_embedding(n, h, g, backend=backend) is not None
    t2 = time.perf_counter()
    return t1 - t0, t2 - t1, hits


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json")
    args = ap.parse_args()
    rot_jobs, emb_jobs = rotation_workload(), embedding_workload()
    backends = ["python"] + (["cython"] if kernels.COMPILED else [])
    results = {}
    for b in backends:
        best = None
        for _ in range(args.repeat):
            r = run(b, rot_jobs, emb_jobs)
            best = r if best is None else tuple(min(x, y) for x, y in zip(best[:2], r[:2])) + (r[2],)
        results[b] = {"rotation_classes_s": best[0], "find_embedding_s": best[1], "embeddable": best[2]}
    print(f"{len(rot_jobs)} rotation jobs, {len(emb_jobs)} embedding jobs, best of {args.repeat}")
    print(f"{'backend':8} {'rotation_classes':>17} {'find_embedding':>15}")
    for b, r in results.items():
        print(f"{b:8} {r['rotation_classes_s']:16.3f}s {r['find_embedding_s']:14.3f}s")
    if len(results) == 2:
        assert results["python"]["embeddable"] == results["cython"]["embeddable"]
        p, c = results["python"], results["cython"]
        print(f"speedup  {p['rotation_classes_s'] / c['rotation_classes_s']:16.1f}x "
              f"{p['find_embedding_s'] / c['find_embedding_s']:14.1f}x")
    else:
        print("compiled kernels not built; only the fallback was timed")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=1)


if __name__ == "__main__":
    main()
