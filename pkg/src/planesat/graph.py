"""Host graphs: validation, generators, coloring and spanning embeddings."""
from __future__ import annotations

import json
import random
import sys
from dataclasses import dataclass
from functools import cached_property

from . import kernels
from .drawing import (
    PlaneDrawing,
    _trace_rotation,
    drawing_from_rotation,
)
from .errors import DecodeError, GraphError, PreconditionError


@dataclass(frozen=True)
class LabeledGraph:
    n: int
    edges: frozenset

    @cached_property
    def adjacency(self) -> tuple:
        nb = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def masks(self) -> tuple:
        return tuple(sum(1 << w for w in a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple:
        return tuple(len(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @property
    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def __repr__(self):
        return f"LabeledGraph(n={self.n}, edges={len(self.edges)})"


@dataclass(frozen=True)
class Coloring:
    colors: tuple

    def classes(self) -> list:
        out = [[] for _ in range(4)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out


@dataclass(frozen=True)
class EmbeddingMap:
    sigma: tuple

    def __call__(self, v: int) -> int:
        return self.sigma[v]


def make_graph(n: int, edge_list) -> LabeledGraph:
    """Validated graph; rejects loops, duplicates and out-of-range vertices."""
    if not isinstance(n, int) or n < 0:
        raise GraphError(f"invalid vertex count {n!r}")
    seen = set()
    for pair in edge_list:
        try:
            u, v = (int(x) for x in pair)
        except (TypeError, ValueError):
            raise GraphError(f"malformed edge {pair!r}", pair) from None
        if u == v:
            raise GraphError(f"self-loop at vertex {u}", (u, v))
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside [0, {n})", (u, v))
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphError(f"duplicate edge ({u}, {v})", (u, v))
        seen.add(e)
    return LabeledGraph(n, frozenset(seen))


def double_wheel(n: int):
    """Two non-adjacent hubs 0 and 1 joined to every vertex of the rim cycle 2..n-1.

    Hub 0 is drawn inside the rim, hub 1 outside.
    """
    if n < 5:
        raise PreconditionError(f"the double wheel needs n >= 5, got {n}")
    rim = list(range(2, n))
    edges = [(0, i) for i in rim] + [(1, i) for i in rim]
    edges += [(rim[i], rim[i + 1]) for i in range(len(rim) - 1)] + [(2, n - 1)]
    g = make_graph(n, edges)
    rot = {0: tuple(rim), 1: tuple(reversed(rim))}
    for j, i in enumerate(rim):
        nxt = rim[(j + 1) % len(rim)]
        prv = rim[j - 1]
        rot[i] = (1, nxt, 0, prv)
    d = drawing_from_rotation(n, rot, outer={0: (1, 2)})
    return g, d


def _rotation_from_triangles(faces):
    # each traced face (a, b, c) means c follows a at b, a follows b at c, b follows c at a
    succ = {}
    for a, b, c in faces:
        succ.setdefault(b, {})[a] = c
        succ.setdefault(c, {})[b] = a
        succ.setdefault(a, {})[c] = b
    rot = {}
    for v, nxt in succ.items():
        start = min(nxt)
        cyc = [start]
        w = nxt[start]
        while w != start:
            cyc.append(w)
            w = nxt[w]
        rot[v] = tuple(cyc)
    return rot


def random_triangulation(n: int, seed: int = 0, flips: int | None = None):
    """Stacked triangulation from K4 followed by random diagonal flips.

    ``flips`` defaults to ``10 * n`` attempts; an attempt whose new diagonal
    already exists is skipped.  Deterministic in ``(n, seed, flips)``.
    """
    if n < 4:
        raise PreconditionError(f"a triangulation needs n >= 4, got {n}")
    if flips is None:
        flips = 10 * n
    rng = random.Random(seed)
    faces = [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]
    for v in range(4, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, v)
        faces.extend([(b, c, v), (c, a, v)])
    dart_face = {}
    for i, (a, b, c) in enumerate(faces):
        dart_face[(a, b)] = dart_face[(b, c)] = dart_face[(c, a)] = i
    edges = {(min(a, b), max(a, b)) for a, b in dart_face}
    pool = sorted(edges)
    for _ in range(flips):
        i = rng.randrange(len(pool))
        u, v = pool[i]
        f1, f2 = dart_face[(u, v)], dart_face[(v, u)]
        w = next(x for x in faces[f1] if x not in (u, v))
        z = next(x for x in faces[f2] if x not in (u, v))
        if (min(w, z), max(w, z)) in edges:
            continue
        for f in (f1, f2):
            a, b, c = faces[f]
            for d in ((a, b), (b, c), (c, a)):
                del dart_face[d]
        faces[f1] = (w, u, z)
        faces[f2] = (z, v, w)
        for f in (f1, f2):
            a, b, c = faces[f]
            dart_face[(a, b)] = dart_face[(b, c)] = dart_face[(c, a)] = f
        edges.discard((u, v))
        edges.add((min(w, z), max(w, z)))
        pool[i] = (min(w, z), max(w, z))
    g = make_graph(n, edges)
    return g, drawing_from_rotation(n, _rotation_from_triangles(faces))


def verify_triangulation(g: LabeledGraph, d: PlaneDrawing) -> bool:
    """True iff ``d`` draws ``g`` as a single genus-0 component with triangular faces."""
    if d.n != g.n or d.edges != g.edges:
        raise GraphError("drawing and graph have different edge sets")
    n = g.n
    if len(g.edges) != 3 * n - 6 or len(d.components) != 1:
        return False
    faces, _ = _trace_rotation(d.rotation)
    if n - len(g.edges) + len(faces) != 2:
        return False
    return all(len(f) == 3 for f in faces)


def four_coloring(g: LabeledGraph, vertices=None) -> Coloring:
    """Proper coloring with at most four colors (backtracking, DSATUR order).

    ``vertices`` restricts the coloring to an induced subgraph; other
    vertices get color 0 and are ignored.  The next vertex is the one with
    the most distinct neighbour colors, ties broken by degree then index.
    """
    n = g.n
    active = set(range(n)) if vertices is None else set(vertices)
    adj = [[w for w in g.adjacency[v] if w in active] for v in range(n)]
    color = [-1] * n
    todo = sorted(active)

    def pick():
        best, key = None, None
        for v in todo:
            if color[v] >= 0:
                continue
            sat = len({color[w] for w in adj[v] if color[w] >= 0})
            k = (sat, len(adj[v]), -v)
            if key is None or k > key:
                best, key = v, k
        return best

    def rec(left):
        if left == 0:
            return True
        v = pick()
        used = {color[w] for w in adj[v]}
        for c in range(4):
            if c in used:
                continue
            color[v] = c
            if rec(left - 1):
                return True
        color[v] = -1
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, len(todo) + 100))
    try:
        ok = rec(len(todo))
    finally:
        sys.setrecursionlimit(limit)
    if not ok:
        raise GraphError("no 4-coloring exists; the input is not planar")
    return Coloring(tuple(max(c, 0) for c in color))


def spanning_embedding(h_edges, g: LabeledGraph, n: int | None = None, backend=None):
    """Bijection mapping every edge of ``h_edges`` onto an edge of ``g``, or None."""
    if n is not None and n != g.n:
        raise GraphError(f"vertex counts differ: {n} vs {g.n}")
    hadj = [0] * g.n
    for u, v in h_edges:
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise GraphError(f"pattern edge ({u}, {v}) outside [0, {g.n})", (u, v))
        hadj[u] |= 1 << v
        hadj[v] |= 1 << u
    sigma = kernels.find_embedding(g.n, hadj, list(g.masks), backend=backend)
    return None if sigma is None else EmbeddingMap(tuple(sigma))


def degree_gap_vertex(g: LabeledGraph, c1: float):
    """Vertex whose degree beats every smaller degree by more than ``C2 * n``.

    ``C2 = C1^2 / (12 + C1)``.  Returns ``(w, gap)`` with ``gap`` the
    difference to the next smaller degree (None when no smaller degree
    exists), choosing the largest such degree then the smallest index.
    Returns None when no vertex has degree at least ``C1 * n``.
    """
    if not 0 < c1 <= 1:
        raise PreconditionError(f"C1 must lie in (0, 1], got {c1}")
    n = g.n
    deg = g.degrees
    if not deg or max(deg) < c1 * n:
        return None
    c2n = c1 * c1 / (12 + c1) * n
    values = sorted(set(deg), reverse=True)
    for i, d in enumerate(values):
        below = values[i + 1] if i + 1 < len(values) else None
        if below is None or d - below > c2n:
            w = min(v for v in range(n) if deg[v] == d)
            return w, (None if below is None else d - below)
    return None


def neighbor_cycle(g: LabeledGraph, d: PlaneDrawing, v: int) -> tuple:
    """Neighbours of ``v`` in rotation order; consecutive ones are adjacent in ``g``."""
    if g.degree(v) < 3:
        raise PreconditionError(f"vertex {v} has degree {g.degree(v)} < 3")
    rot = d.rotation[v]
    k = rot.index(min(rot))
    cyc = rot[k:] + rot[:k]
    for i, a in enumerate(cyc):
        b = cyc[(i + 1) % len(cyc)]
        if not g.has_edge(a, b):
            raise PreconditionError(f"neighbours {a}, {b} of {v} are not adjacent; not a triangulation drawing")
    return cyc


# -- I/O ---------------------------------------------------------------------

def graph_to_json(g: LabeledGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def encode_graph(g: LabeledGraph) -> bytes:
    return (json.dumps(graph_to_json(g)) + "\n").encode()


def decode_graph(data) -> LabeledGraph:
    """Parse the JSON format or the plain-text edge list (first line ``n``)."""
    text = data.decode() if isinstance(data, bytes) else data
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DecodeError(f"invalid JSON: {exc.msg}", len(text[:exc.pos].encode())) from None
        if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
            raise DecodeError("graph: expected an object with 'n' and 'edges'")
        return make_graph(obj["n"], obj["edges"])
    lines = text.splitlines()
    offset = 0
    n = None
    edges = []
    for line in lines:
        body = line.split("#", 1)[0].strip()
        if body:
            parts = body.split()
            try:
                nums = [int(p) for p in parts]
            except ValueError:
                raise DecodeError(f"non-integer token in {body!r}", offset) from None
            if n is None:
                if len(nums) != 1:
                    raise DecodeError("first line must hold the vertex count", offset)
                n = nums[0]
            else:
                if len(nums) != 2:
                    raise DecodeError(f"expected 'u v', got {body!r}", offset)
                edges.append(tuple(nums))
        offset += len(line.encode()) + 1
    if n is None:
        raise DecodeError("empty graph file", 0)
    return make_graph(n, edges)
