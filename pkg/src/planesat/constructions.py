"""Executable constructions: lower-bound witnesses and upper-bound algorithms."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .drawing import (
    AMBIENT,
    PlaneDrawing,
    _trace_rotation,
    drawing_from_rotation,
    insert_edge,
    outer_dart_from_coordinates,
    place_isolated,
    rotation_from_coordinates,
)
from .errors import ConstructionError, PreconditionError
from .graph import LabeledGraph, degree_gap_vertex, double_wheel, four_coloring, neighbor_cycle
from .saturation import close_unlabeled, is_labeled_saturated, saturate_labeled


@dataclass(frozen=True)
class BoundReport:
    vertex_used: int
    k: int
    rotation_chosen: int | None
    added_edges: int
    total_edges: int
    bound_formula_value: Fraction
    bound_satisfied: bool
    kind: str = ""
    generic_bound: Fraction | None = None
    costs: tuple = ()
    chords_added: int = 0
    saturation_verified: bool | None = None
    binding: bool | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        def frac(x):
            return None if x is None else {"num": x.numerator, "den": x.denominator, "value": float(x)}

        return {
            "kind": self.kind,
            "vertex_used": self.vertex_used,
            "k": self.k,
            "rotation_chosen": self.rotation_chosen,
            "added_edges": self.added_edges,
            "total_edges": self.total_edges,
            "bound_formula_value": frac(self.bound_formula_value),
            "bound_satisfied": self.bound_satisfied,
            "generic_bound": frac(self.generic_bound),
            "costs": list(self.costs),
            "chords_added": self.chords_added,
            "saturation_verified": self.saturation_verified,
            "binding": self.binding,
            "details": self.details,
        }


# -- witnesses ---------------------------------------------------------------

def fig7_labels(n):
    """Host labels of the named vertices of the odd-n witness.

    Hubs: star centre ``c`` is 0 and ``a`` is 1.  Rim order: ``d, b, q1, q3,
    ..., q_{n-4}, q_{n-5}`` and then the remaining even leaves, so that every
    drawn edge is a host edge.
    """
    m = n - 4
    rim = ["d", "b"] + [f"q{i}" for i in range(1, m + 1, 2)] + [f"q{m - 1}"]
    rim += [f"q{i}" for i in range(2, m - 1, 2)]
    labels = {"c": 0, "a": 1}
    for j, name in enumerate(rim):
        labels[name] = j + 2
    return labels


def fig7_witness(n: int) -> PlaneDrawing:
    """Plane-saturated subgraph of the double wheel with ``(3n+3)/2`` edges (odd ``n >= 9``).

    A star on ``n-3`` vertices whose odd leaves are joined into a path, each
    even leaf enclosed in the triangle formed by the centre and its two odd
    neighbours, one extra edge between the last two leaves, and three more
    vertices ``a``, ``b``, ``d`` nested inside the first triangle.  Built
    from straight-line coordinates.
    """
    if n < 9 or n % 2 == 0:
        raise PreconditionError(f"the odd construction needs odd n >= 9, got {n}")
    lab = fig7_labels(n)
    m = n - 4
    step = math.pi / (m + 1)
    pos = {}
    pos[lab["c"]] = (0.0, 0.0)
    for i in range(1, m + 1):
        r = 10.0 if i % 2 else 5.0
        t = i * step
        pos[lab[f"q{i}"]] = (r * math.cos(t), r * math.sin(t))

    def polar(r, t):
        return (r * math.cos(t), r * math.sin(t))

    t2 = 2 * step
    pos[lab["a"]] = polar(7.0, t2)
    pos[lab["b"]] = polar(8.0, t2 - 0.25 * step)
    pos[lab["d"]] = polar(8.0, t2 + 0.2 * step)
    q = lambda i: lab[f"q{i}"]
    edges = [(lab["c"], q(i)) for i in range(1, m + 1)]
    edges += [(q(i), q(i + 2)) for i in range(1, m - 1, 2)]
    edges.append((q(m - 1), q(m)))
    edges += [(lab["a"], q(1)), (lab["a"], q(2)), (lab["a"], q(3))]
    edges += [(lab["b"], lab["a"]), (lab["b"], q(1))]
    edges += [(lab["d"], lab["a"]), (lab["d"], lab["b"])]
    rot = rotation_from_coordinates(edges, pos)
    d = drawing_from_rotation(n, rot, outer={lab["c"]: outer_dart_from_coordinates(rot, pos)})
    if len(d.edges) != (3 * n + 3) // 2:
        raise ConstructionError(f"odd construction produced {len(d.edges)} edges")
    return d


_FIG4_SKELETON = {0: (2, 4, 3), 1: (3, 4), 2: (0, 3), 3: (0, 1, 4, 2), 4: (0, 3, 1)}


def fig4_classes(n):
    """Pendant groups ``(A, B, C)`` of the ``n+2`` witness.

    ``A`` and ``B`` hang from hub 0 inside the triangle ``0,2,3`` and the
    quadrilateral ``0,2,3,4``; ``C`` hangs from hub 1 inside ``1,3,4``.
    Rim vertices ``5..n-2`` alternate between ``A`` and ``B`` and the last
    rim vertex goes to ``C``.
    """
    a = [x for x in range(5, n - 1) if (x - 5) % 2 == 0]
    b = [x for x in range(5, n - 1) if (x - 5) % 2 == 1]
    return a, b, [n - 1]


def fig4_witness(n: int) -> PlaneDrawing:
    """Labeled plane-saturated subgraph of the double wheel with ``n+2`` edges.

    The pattern generalizes the minimum witnesses found by exhaustive search
    at small ``n``; the result is checked and a failure raises.
    """
    if n < 7:
        raise PreconditionError(f"the n+2 construction needs n >= 7, got {n}")
    g, _ = double_wheel(n)
    d = drawing_from_rotation(n, _FIG4_SKELETON, outer={0: (0, 3)})
    a, b, c = fig4_classes(n)
    faces = {frozenset({0, 2, 3}): (0, a), frozenset({0, 2, 3, 4}): (0, b), frozenset({1, 3, 4}): (1, c)}
    for verts, (hub, group) in faces.items():
        rid = _region_with_face(d, verts)
        for x in group:
            d = place_isolated(d, x, rid)
    for verts, (hub, group) in faces.items():
        for x in group:
            d = insert_edge(d, hub, x, d.placement[x].region)
    if len(d.edges) != n + 2:
        raise ConstructionError(f"n+2 construction produced {len(d.edges)} edges")
    rep = is_labeled_saturated(d, g)
    if not rep.saturated:
        raise ConstructionError(f"n+2 construction is not saturated at n={n}: {rep.witness}")
    return d


def _region_with_face(d, verts):
    for r in d.regions:
        if r.face is not None and r.face.incident_vertices == verts:
            return r.id
    raise ConstructionError(f"no face with vertex set {sorted(verts)}")


# -- bounds ------------------------------------------------------------------

def generic_bound(k: int, n: int) -> Fraction:
    """``2k + 6n/k - 12/k - 4``."""
    return 2 * k + Fraction(6 * n, k) - Fraction(12, k) - 4


def degree_bound(k: int, n: int) -> Fraction:
    """Sharpest available bound for a wheel around a degree-``k`` vertex."""
    if k == 4:
        return Fraction(n + 5)
    if k == 5:
        return Fraction(4 * n, 5) + Fraction(46, 5)
    if k == 6:
        return Fraction(2 * n, 3) + 14
    return generic_bound(k, n)


def choose_bound_vertex(g: LabeledGraph) -> int:
    """Vertex of degree in ``[4, n/2)`` with the smallest applicable bound."""
    n = g.n
    if n < 47:
        raise PreconditionError(f"vertex choice is guaranteed only for n >= 47, got {n}")
    best = None
    for v in range(n):
        k = g.degree(v)
        if 4 <= k and 2 * k < n:
            key = (degree_bound(k, n), k, v)
            if best is None or key < best:
                best = key
    if best is None:
        raise PreconditionError("no vertex of degree at least 4 and below n/2; input is not a triangulation")
    return best[2]


def _wheel(g, d, v, spokes=None):
    """Wheel (or partial wheel) around ``v`` with the rotation inherited from ``d``.

    Returns ``(drawing, cycle)``.  For a full wheel the outer face is the one
    bounded by the rim; for a partial wheel there is a single non-triangle face.
    """
    cyc = neighbor_cycle(g, d, v)
    k = len(cyc)
    m = k if spokes is None else spokes
    drawn = cyc[:m]
    edges = {(min(v, x), max(v, x)) for x in drawn}
    last = m if m == k else m - 1
    for i in range(last):
        x, y = cyc[i], cyc[(i + 1) % k]
        edges.add((min(x, y), max(x, y)))
    rot = {}
    for x in (v,) + drawn:
        rot[x] = tuple(y for y in d.rotation[x] if (min(x, y), max(x, y)) in edges)
    faces, _ = _trace_rotation(rot)
    if m == k:
        outer = next(f for f in faces if all(a != v for a, _ in f))
    else:
        outer = max(faces, key=len)
    w = drawing_from_rotation(g.n, rot, outer={v: outer[0]})
    return w, cyc


def wheel_coloring_bound(g: LabeledGraph, d: PlaneDrawing, v: int):
    """Wheel around ``v`` with the four color classes placed in four consecutive faces.

    Of the ``k`` cyclic shifts of the class-to-face assignment the cheapest
    is used, then the drawing is labeled-saturated.  Host chords of the
    wheel's rim are addable through the outer face, so the closure adds them
    too; they are counted separately in the report.
    """
    k = g.degree(v)
    if k < 4:
        raise PreconditionError(f"vertex {v} has degree {k} < 4")
    n = g.n
    wheel, cyc = _wheel(g, d, v)
    rest = [x for x in range(n) if x != v and x not in cyc]
    coloring = four_coloring(g, rest)
    classes = [[x for x in rest if coloring.colors[x] == c] for c in range(4)]

    def cost(r):
        total = 0
        for j, cls in enumerate(classes):
            a, b = cyc[(j + r) % k], cyc[(j + r + 1) % k]
            total += sum(g.has_edge(x, a) + g.has_edge(x, b) for x in cls)
        return total

    costs = tuple(cost(r) for r in range(k))
    r_min = min(range(k), key=lambda r: (costs[r], r))
    h = wheel
    for j, cls in enumerate(classes):
        face = frozenset({v, cyc[(j + r_min) % k], cyc[(j + r_min + 1) % k]})
        rid = _region_with_face(wheel, face)
        for x in cls:
            h = place_isolated(h, x, rid)
    h = saturate_labeled(h, g)
    chords = sum(1 for (a, b) in h.edges - wheel.edges if a in cyc and b in cyc)
    total = len(h.edges)
    bound = degree_bound(k, n)
    rep = BoundReport(
        vertex_used=v, k=k, rotation_chosen=r_min, added_edges=total - 2 * k,
        total_edges=total, bound_formula_value=bound,
        bound_satisfied=total <= math.floor(bound), kind="wheel-coloring",
        generic_bound=generic_bound(k, n), costs=costs, chords_added=chords,
        saturation_verified=is_labeled_saturated(h, g).saturated,
        binding=bound < len(g.edges),
        details={"pigeonhole_total": sum(costs), "pigeonhole_limit": 6 * n - 12 - 4 * k,
                 "cost_min": costs[r_min], "cost_average": float(Fraction(sum(costs), k)),
                 "class_sizes": [len(c) for c in classes]},
    )
    return h, rep


def psr_wheel_construction(g: LabeledGraph, d: PlaneDrawing, step_budget=None):
    """Wheel around a maximum-degree vertex with the rest spread evenly over its faces."""
    n = g.n
    deg = g.degrees
    v = min(range(n), key=lambda x: (-deg[x], x))
    k = deg[v]
    wheel, cyc = _wheel(g, d, v)
    rest = [x for x in range(n) if x != v and x not in cyc]
    faces = [_region_with_face(wheel, frozenset({v, cyc[j], cyc[(j + 1) % k]})) for j in range(k)]
    h = wheel
    for i, x in enumerate(rest):
        h = place_isolated(h, x, faces[i % k])
    h, done = close_unlabeled(h, g, step_budget=step_budget)
    bound = Fraction(3 * n - 6 - min(k, n - k - 1))
    total = len(h.edges)
    rep = BoundReport(
        vertex_used=v, k=k, rotation_chosen=None, added_edges=total - 2 * k,
        total_edges=total, bound_formula_value=bound,
        bound_satisfied=total <= bound, kind="psr-wheel",
        saturation_verified=done, binding=bound < len(g.edges),
        details={"face_loads": [sum(1 for i in range(len(rest)) if i % k == j) for j in range(k)]},
    )
    return h, rep


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def gap_constant(c1) -> Fraction:
    c1 = _as_fraction(c1)
    return c1 * c1 / (12 + c1)


def _third_vertex(d, x, y, w):
    """Apex of the triangle on edge ``xy`` of a triangulation drawing other than ``w``."""
    for dart in ((x, y), (y, x)):
        f = d.face_of_dart(dart)
        apex = [a for a, _ in f.boundary if a not in (x, y)]
        if apex and apex[0] != w:
            return apex[0]
    raise PreconditionError(f"edge ({x}, {y}) does not lie on two triangles")


def psr_gap_construction(g: LabeledGraph, d: PlaneDrawing, c1, step_budget=None, strict=True):
    """Partial wheel around a degree-gap vertex, enclosed by a triangle, rest outside.

    ``strict=False`` skips the ``n >= 5/C2`` size requirement so reduced
    instances can be run; the report records that it was skipped.
    """
    n = g.n
    c1 = _as_fraction(c1)
    c2 = gap_constant(c1)
    need = Fraction(5) / c2
    if strict and n < need:
        raise PreconditionError(f"n = {n} is below the threshold 5/C2 = {float(need):.2f}")
    found = degree_gap_vertex(g, c1)
    if found is None:
        raise PreconditionError(f"no vertex of degree >= C1*n = {float(c1 * n):.2f}")
    w, gap = found
    m = math.ceil(g.degree(w) - c2 * n)
    if m < 2:
        raise PreconditionError(f"only {m} spokes would be drawn; need at least 2")
    h, cyc = _wheel(g, d, w, spokes=m)
    x, y = cyc[m - 2], cyc[m - 1]
    p = _third_vertex(d, x, y, w)
    drawn = set(cyc[:m]) | {w}
    todo = [(y, p)] if p in drawn else [(x, p), (y, p)]
    if p in drawn and h.has_edge(y, p):
        todo = [(x, p)]
    for a, b in todo:
        if h.component_of(a) != h.component_of(b) or h.placement[h.component_of(a)].region != AMBIENT:
            h = insert_edge(h, a, b, AMBIENT)
            continue
        options = [insert_edge(h, a, b, AMBIENT, bounded=side) for side in (1, 2)]
        h = next(o for o in options if w not in o.outer_face(o.component_of(w)).incident_vertices)
    skeleton = len(h.edges)
    h, done = close_unlabeled(h, g, step_budget=step_budget)
    bound = (3 - c2) * n + 1
    total = len(h.edges)
    rep = BoundReport(
        vertex_used=w, k=g.degree(w), rotation_chosen=None, added_edges=total - skeleton,
        total_edges=total, bound_formula_value=bound,
        bound_satisfied=total <= math.floor(bound), kind="psr-gap",
        saturation_verified=done, binding=bound < len(g.edges),
        details={"c1": str(c1), "c2": str(c2), "c2n": float(c2 * n), "gap": gap,
                 "spokes": m, "p": p, "p_already_drawn": p in drawn,
                 "skeleton_edges": skeleton, "threshold_5_over_c2": float(need),
                 "threshold_met": n >= need, "strict": strict},
    )
    return h, rep
