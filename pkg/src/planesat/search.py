"""Exhaustive enumeration of drawings and exact minimum saturated subgraphs.

Both saturation rules reduce to one question about an edge set ``E'``: is
there a drawing of ``E'`` in which no region contains both ends of a
*forbidden* pair?  For the labeled rule the forbidden pairs are the host
edges missing from ``E'``; for the unlabeled rule they are the pairs whose
addition keeps ``E'`` a subgraph of the host up to relabeling.  The sweep
walks edge subsets by increasing size in lexicographic order and stops at
the first size admitting such a drawing, so the witness is the least one.

:func:`cross_check` compares this with a second, independent enumerator that
grows drawings one :func:`insert_edge` at a time and runs the public
checkers on every state.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice

from . import kernels
from .drawing import (
    AMBIENT,
    Placement,
    PlaneDrawing,
    _components,
    _trace_rotation,
    drawing_to_json,
    empty_drawing,
    insert_edge,
    place_isolated,
)
from .graph import LabeledGraph, spanning_embedding
from .saturation import is_labeled_saturated, is_unlabeled_saturated


@dataclass(frozen=True)
class SearchResult:
    min_edges: int
    witness: PlaneDrawing
    states_explored: int
    exhaustive: bool
    budget_hit: bool
    rule: str = "labeled"

    def to_json(self, host_edges=None) -> dict:
        den = host_edges if host_edges is not None else 3 * self.witness.n - 6
        r = Fraction(self.min_edges, den)
        return {
            "min_edges": self.min_edges,
            "ratio": {"num": r.numerator, "den": r.denominator},
            "exhaustive": self.exhaustive,
            "states": self.states_explored,
            "witness": drawing_to_json(self.witness),
        }


def _bits(m):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _nbmask(nb, mask):
    out = 0
    for v in _bits(mask):
        out |= nb[v]
    return out


_CLASS_CACHE: dict = {}


def _component_options(n, comp_edges):
    """Per rotation class: the rotation and its faces as ``(mask, canonical dart)``."""
    key = (n, comp_edges)
    hit = _CLASS_CACHE.get(key)
    if hit is not None:
        return hit
    adj = [[] for _ in range(n)]
    for u, v in comp_edges:
        adj[u].append(v)
        adj[v].append(u)
    adj = [tuple(sorted(a)) for a in adj]
    classes, _ = kernels.rotation_classes(n, adj)
    out = []
    for masks in sorted(classes):
        rot = classes[masks]
        faces, _ = _trace_rotation(rot)
        masks = []
        for f in faces:
            m = 0
            for d in f:
                m |= 1 << d[0]
            masks.append((m, f[0]))
        out.append((rot, tuple(sorted(masks))))
    if len(_CLASS_CACHE) > 200000:
        _CLASS_CACHE.clear()
    _CLASS_CACHE[key] = out
    return out


def _arrangements(n, edges, nb=None):
    """Yield ``(rotation, outer, placement)`` triples whose regions avoid ``nb``.

    ``nb[v]`` is the mask of vertices that must not share a region with
    ``v``; ``None`` enumerates everything.  Placements are region-only and
    components are keyed by their smallest vertex.
    """
    if nb is None:
        nb = [0] * n
    comp_of, members = _components(n, edges)
    cyclic, trees = [], []
    by_comp = {}
    for u, v in edges:
        by_comp.setdefault(comp_of[u], []).append((u, v))
    for c, vs in sorted(members.items()):
        mask = sum(1 << v for v in vs)
        ce = by_comp.get(c, [])
        if len(ce) >= len(vs):
            cyclic.append((c, frozenset(ce)))
        else:
            if _nbmask(nb, mask) & mask:
                return
            trees.append((c, mask))

    per_comp = []
    for c, ce in cyclic:
        opts = []
        for rot, faces in _component_options(n, ce):
            if any(_nbmask(nb, m) & m for m, _ in faces):
                continue
            seen = set()
            for i, (m, dart) in enumerate(faces):
                if m in seen:
                    continue
                seen.add(m)
                inner = tuple(f for j, f in enumerate(faces) if j != i)
                opts.append((rot, dart, m, inner))
        if not opts:
            return
        per_comp.append(opts)

    def choose(i, picked):
        if i == len(cyclic):
            yield from place(picked)
            return
        for opt in per_comp[i]:
            picked.append(opt)
            yield from choose(i + 1, picked)
            picked.pop()

    def place(picked):
        # region 0 is ambient; then the inner faces of every cyclic component
        owner = [None]
        rid = [AMBIENT]
        acc = [0]
        accnb = [0]
        for (c, _), (rot, dart, m, inner) in zip(cyclic, picked):
            for fm, fd in inner:
                owner.append(c)
                rid.append((c, fd))
                acc.append(fm)
                accnb.append(_nbmask(nb, fm))
        items = [(c, opt[2]) for (c, _), opt in zip(cyclic, picked)] + trees
        parent = {}
        where = {}

        def creates_cycle(c, p):
            while p is not None:
                if p == c:
                    return True
                p = parent.get(p)
            return False

        def rec(k):
            if k == len(items):
                yield dict(where)
                return
            c, om = items[k]
            onb = _nbmask(nb, om)
            for r in range(len(rid)):
                if accnb[r] & om:
                    continue
                p = owner[r]
                if p is not None and creates_cycle(c, p):
                    continue
                saved = acc[r], accnb[r]
                acc[r] |= om
                accnb[r] |= onb
                parent[c] = p
                where[c] = rid[r]
                yield from rec(k + 1)
                del parent[c]
                del where[c]
                acc[r], accnb[r] = saved

        rotation = {}
        outer = {}
        for (c, _), (rot, dart, m, inner) in zip(cyclic, picked):
            rotation.update(rot)
            outer[c] = dart
        for where_map in rec(0):
            yield rotation, outer, where_map

    yield from choose(0, [])


def _materialize(n, edges, rotation, outer, where):
    placement = {c: Placement(r) for c, r in where.items()}
    return PlaneDrawing(n, frozenset(edges), dict(rotation), dict(outer), placement)


def region_signature(d: PlaneDrawing):
    """Saturation-relevant content of a drawing: the incident sets of its regions."""
    amb = None
    inner = []
    for r in d.regions:
        m = sum(1 << v for v in r.incident_vertices)
        if r.id == AMBIENT:
            amb = m
        else:
            inner.append(m)
    return amb, tuple(sorted(inner))


def enumerate_drawings(n, edges):
    """One representative of every drawing class of ``edges`` on ``n`` vertices.

    Classes are identified by their region incidence sets, which is all the
    checkers observe.
    """
    edges = frozenset((min(u, v), max(u, v)) for u, v in edges)
    seen = set()
    for rotation, outer, where in _arrangements(n, edges):
        d = _materialize(n, edges, rotation, outer, where)
        sig = region_signature(d)
        if sig in seen:
            continue
        seen.add(sig)
        yield d


def find_drawing(n, edges, nb):
    """First drawing of ``edges`` with no region containing a forbidden pair."""
    for rotation, outer, where in _arrangements(n, edges, nb):
        return _materialize(n, edges, rotation, outer, where)
    return None


# -- forbidden-pair rules -----------------------------------------------------

def labeled_forbidden(g: LabeledGraph, edges):
    nb = list(g.masks)
    for u, v in edges:
        nb[u] &= ~(1 << v)
        nb[v] &= ~(1 << u)
    return nb


class UnlabeledRule:
    """Forbidden pairs for the unlabeled rule with a memo on augmented edge sets."""

    def __init__(self, g: LabeledGraph):
        self.g = g
        self.memo = {}

    def embeds(self, edges):
        hit = self.memo.get(edges)
        if hit is None:
            hit = spanning_embedding(edges, self.g) is not None
            self.memo[edges] = hit
        return hit

    def forbidden(self, edges):
        g = self.g
        n = g.n
        nb = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in edges:
                    continue
                if (u, v) in g.edges or self.embeds(edges | {(u, v)}):
                    nb[u] |= 1 << v
                    nb[v] |= 1 << u
        return nb


# -- the subset sweep ---------------------------------------------------------

def _scan(args):
    g_n, g_edges, rule, subsets = args
    g = LabeledGraph(g_n, frozenset(g_edges))
    unl = UnlabeledRule(g) if rule == "unlabeled" else None
    states = 0
    for idx, sub in subsets:
        edges = frozenset(sub)
        nb = unl.forbidden(edges) if unl else labeled_forbidden(g, edges)
        states += 1
        d = find_drawing(g_n, edges, nb)
        if d is not None:
            return idx, d, states
    return None, None, states


def _sweep_size(g, rule, s, jobs, chunk=2000):
    host = sorted(g.edges)
    indexed = enumerate(combinations(host, s))
    if jobs <= 1:
        idx, d, states = _scan((g.n, host, rule, indexed))
        return d, states
    states = 0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        while True:
            batch = [list(islice(indexed, chunk)) for _ in range(jobs)]
            batch = [b for b in batch if b]
            if not batch:
                return None, states
            results = list(pool.map(_scan, [(g.n, host, rule, b) for b in batch]))
            states += sum(r[2] for r in results)
            hits = [r for r in results if r[0] is not None]
            if hits:
                return min(hits, key=lambda r: r[0])[1], states


def _min_saturated(g, rule, budget, jobs):
    jobs = jobs or 1
    if jobs < 0:
        jobs = os.cpu_count() or 1
    m = len(g.edges)
    limit = m if budget is None else min(budget, m)
    states = 0
    for s in range(limit + 1):
        d, k = _sweep_size(g, rule, s, jobs)
        states += k
        if d is not None:
            return SearchResult(s, d, states, True, False, rule)
    full = find_drawing(g.n, g.edges, [0] * g.n)
    return SearchResult(m, full, states, False, True, rule)


def min_labeled_saturated(g: LabeledGraph, budget=None, jobs=1) -> SearchResult:
    """Fewest edges of a labeled plane-saturated drawing (sizes up to ``budget``)."""
    return _min_saturated(g, "labeled", budget, jobs)


def min_unlabeled_saturated(g: LabeledGraph, budget=None, jobs=1) -> SearchResult:
    """Fewest edges of a plane-saturated subgraph (sizes up to ``budget``).

    Subsets are not deduplicated up to isomorphism; every labeling is swept.
    """
    return _min_saturated(g, "unlabeled", budget, jobs)


# -- independent incremental enumerator ---------------------------------------

def _arcs(face, cu, cv):
    b = list(face.boundary)
    i, j = b.index(cu), b.index(cv)
    if i < j:
        return b[i:j], b[j:] + b[:i]
    return b[i:] + b[:j], b[j:i]


def _occurrences(face, x):
    if face is None:
        return [None]
    return [d for d in face.boundary if d[0] == x]


def _host(d, reg, x):
    c = d.component_of(x)
    if reg.face is not None and reg.face.component == c:
        return reg.face
    if c in d.outer:
        return d.outer_face(c)
    return None


def _subsets(items):
    for k in range(len(items) + 1):
        yield from combinations(items, k)


def extensions(d: PlaneDrawing, u: int, v: int):
    """Every drawing obtained by drawing ``uv`` into ``d``, one per topological choice."""
    for reg in d.regions:
        if u not in reg.incident_vertices or v not in reg.incident_vertices:
            continue
        hu, hv = _host(d, reg, u), _host(d, reg, v)
        cu_, cv_ = d.component_of(u), d.component_of(v)
        for cu in _occurrences(hu, u):
            for cv in _occurrences(hv, v):
                if cu_ != cv_:
                    yield insert_edge(d, u, v, reg.id, cu, cv)
                elif reg.face is not None and reg.face.component == cu_:
                    side_a, side_b = _arcs(reg.face, cu, cv)
                    kids = reg.children
                    for chosen in _subsets(kids):
                        e = d
                        for k in kids:
                            anchor = side_a[0] if k in chosen else side_b[0]
                            e = place_isolated(e, k, reg.id, anchor)
                        yield insert_edge(e, u, v, reg.id, cu, cv)
                else:
                    sibs = tuple(k for k in reg.children if k != cu_)
                    for bounded in (1, 2):
                        for enc in _subsets(sibs):
                            yield insert_edge(d, u, v, reg.id, cu, cv, bounded=bounded, enclose=enc)


def incremental_minimum(g: LabeledGraph, rule: str, max_edges=None):
    """Least edge count of a saturated drawing found by growing drawings edge by edge.

    Edges are inserted in increasing host order, which reaches every drawing
    because deleting the largest edge of a drawing leaves a drawing.  Returns
    ``(min_edges, witness, states)``.
    """
    check = is_labeled_saturated if rule == "labeled" else is_unlabeled_saturated
    host = sorted(g.edges)
    pos = {e: i for i, e in enumerate(host)}
    level = {empty_drawing(g.n).key(): empty_drawing(g.n)}
    states = 0
    limit = len(host) if max_edges is None else max_edges
    for s in range(limit + 1):
        found = None
        for key in level:
            states += 1
            if check(level[key], g).saturated:
                found = level[key]
                break
        if found is not None:
            return s, found, states
        nxt = {}
        for d in level.values():
            last = max((pos[e] for e in d.edges), default=-1)
            for e in host[last + 1:]:
                for x in extensions(d, *e):
                    nxt.setdefault(x.key(), x)
        level = nxt
    return None, None, states


def cross_check(g: LabeledGraph):
    """Both enumerators agree on the minimum for both rules.

    Returns ``(ok, details)`` where ``details`` maps each rule to the two
    minima and their witnesses.
    """
    details = {}
    ok = True
    for rule, fn in (("labeled", min_labeled_saturated), ("unlabeled", min_unlabeled_saturated)):
        ref = fn(g)
        inc, wit, states = incremental_minimum(g, rule)
        details[rule] = {"sweep": ref.min_edges, "incremental": inc,
                         "sweep_witness": ref.witness, "incremental_witness": wit,
                         "incremental_states": states}
        ok = ok and ref.exhaustive and ref.min_edges == inc
    return ok, details
