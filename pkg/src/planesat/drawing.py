"""Combinatorial model of crossing-free partial drawings.

A drawing is a spanning subgraph given by a counterclockwise rotation system
per connected component, the outer face of each component, and a placement
of every component (isolated vertices included) into a region of the rest of
the drawing.  A *region* is the ambient (unbounded) area or an inner face of
some component; its incident vertices are the boundary of that face together
with the outer boundaries of every component placed directly inside it.  Two
vertices can be joined without a crossing exactly when they share a region,
which is the only fact the saturation checkers consume.

Faces are traced with the successor rule: dart ``(u, v)`` is followed by
``(v, w)`` where ``w`` comes right after ``u`` in the rotation at ``v``.  A
face is identified by its lexicographically smallest dart.  A *corner* of a
face is named by the boundary dart leaving the corner's vertex.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property

from .errors import DecodeError, DrawingError, NotAddableError

AMBIENT = "ambient"


def region_sort_key(rid):
    """Total order on region ids: ambient first, then by (component, dart)."""
    if rid == AMBIENT:
        return (0, 0, (0, 0))
    return (1, rid[0], rid[1])


@dataclass(frozen=True)
class Placement:
    region: object
    anchor: tuple | None = None


@dataclass(frozen=True)
class Face:
    component: int
    boundary: tuple
    incident_vertices: frozenset

    @property
    def canonical_id(self):
        return self.boundary[0]

    def __len__(self):
        return len(self.boundary)


@dataclass(frozen=True)
class Region:
    id: object
    incident_vertices: frozenset
    children: tuple
    face: Face | None = None


def _edge(u, v):
    return (u, v) if u < v else (v, u)


def _trace_rotation(rotation):
    """All faces of a rotation system as canonical dart tuples.

    Returns ``(faces, face_of)`` where ``face_of`` maps each dart to the
    canonical id of its face.  Raises DrawingError if the rotation is not
    symmetric.
    """
    pos = {v: {w: i for i, w in enumerate(r)} for v, r in rotation.items()}
    face_of = {}
    faces = []
    for v in sorted(rotation):
        for w in rotation[v]:
            if (v, w) in face_of:
                continue
            walk = []
            a, b = v, w
            while (a, b) not in face_of:
                face_of[(a, b)] = None
                walk.append((a, b))
                rb = rotation.get(b)
                if rb is None or a not in pos[b]:
                    raise DrawingError(f"rotation at {b} does not list {a}")
                a, b = b, rb[(pos[b][a] + 1) % len(rb)]
            if (a, b) != walk[0]:
                raise DrawingError("face walk does not close; rotation is inconsistent")
            k = walk.index(min(walk))
            walk = tuple(walk[k:] + walk[:k])
            for d in walk:
                face_of[d] = walk[0]
            faces.append(walk)
    return faces, face_of


def _components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    comp_of = [find(v) for v in range(n)]
    members = {}
    for v in range(n):
        members.setdefault(comp_of[v], []).append(v)
    return comp_of, {c: tuple(m) for c, m in members.items()}


@dataclass(frozen=True)
class PlaneDrawing:
    """Immutable drawing value; see the module docstring for the model.

    ``rotation`` maps each non-isolated vertex to its counterclockwise
    neighbour tuple, ``outer`` maps each component with an edge to the
    canonical dart of its outer face, and ``placement`` maps every component
    id (its smallest vertex) to a :class:`Placement`.
    """

    n: int
    edges: frozenset
    rotation: dict
    outer: dict
    placement: dict

    # -- structure -------------------------------------------------------
    @cached_property
    def _comp(self):
        return _components(self.n, self.edges)

    def component_of(self, v):
        return self._comp[0][v]

    @property
    def components(self):
        return self._comp[1]

    @cached_property
    def _face_data(self):
        faces, face_of = _trace_rotation(self.rotation)
        comp_of = self._comp[0]
        by_comp = {}
        by_id = {}
        for walk in faces:
            c = comp_of[walk[0][0]]
            face = Face(c, walk, frozenset(d[0] for d in walk))
            by_comp.setdefault(c, []).append(face)
            by_id[walk[0]] = face
        return by_comp, by_id, face_of

    def faces(self, c):
        return list(self._face_data[0].get(c, ()))

    def face_of_dart(self, dart):
        data = self._face_data
        fid = data[2].get(tuple(dart))
        if fid is None:
            raise DrawingError(f"{tuple(dart)} is not a dart of the drawing")
        return data[1][fid]

    def outer_face(self, c):
        return self._face_data[1][self.outer[c]]

    @cached_property
    def regions(self):
        """All regions, ambient first, then by (component, canonical dart)."""
        children = {}
        for c, pl in self.placement.items():
            children.setdefault(pl.region, []).append(c)
        members = self.components

        def child_vertices(c):
            if c in self.outer:
                return self.outer_face(c).incident_vertices
            return frozenset(members[c])

        out = []
        kids = tuple(sorted(children.get(AMBIENT, ())))
        inc = frozenset().union(*(child_vertices(c) for c in kids)) if kids else frozenset()
        out.append(Region(AMBIENT, inc, kids, None))
        for c in sorted(self._face_data[0]):
            for face in sorted(self._face_data[0][c], key=lambda f: f.canonical_id):
                if face.canonical_id == self.outer[c]:
                    continue
                rid = (c, face.canonical_id)
                kids = tuple(sorted(children.get(rid, ())))
                inc = face.incident_vertices.union(*(child_vertices(k) for k in kids))
                out.append(Region(rid, inc, kids, face))
        return tuple(out)

    @cached_property
    def _region_index(self):
        return {r.id: r for r in self.regions}

    def region(self, rid):
        rid = self.normalize_region(rid)
        return self._region_index[rid]

    def normalize_region(self, rid):
        """Canonical region id; accepts any dart of the face and any vertex of its component."""
        if rid == AMBIENT or rid is None:
            return AMBIENT
        try:
            c, dart = rid
            dart = (int(dart[0]), int(dart[1]))
        except (TypeError, ValueError):
            raise DrawingError(f"malformed region id {rid!r}") from None
        if dart not in self._face_data[2]:
            raise DrawingError(f"region {rid!r} names no face of the drawing")
        face = self.face_of_dart(dart)
        if not (0 <= int(c) < self.n) or self.component_of(int(c)) != face.component:
            raise DrawingError(f"region {rid!r}: dart is not in component {c}")
        if self.outer[face.component] == face.canonical_id:
            raise DrawingError(f"region {rid!r} is an outer face, not a region")
        return (face.component, face.canonical_id)

    @cached_property
    def vertex_regions(self):
        out = [[] for _ in range(self.n)]
        for r in self.regions:
            for v in r.incident_vertices:
                out[v].append(r.id)
        return out

    def has_edge(self, u, v):
        return _edge(u, v) in self.edges

    def key(self):
        """Hashable identity ignoring anchors (they never affect addability)."""
        return (
            self.n,
            tuple(sorted(self.edges)),
            tuple(sorted(self.rotation.items())),
            tuple(sorted(self.outer.items())),
            tuple(sorted((c, p.region) for c, p in self.placement.items())),
        )

    def __repr__(self):
        return f"PlaneDrawing(n={self.n}, edges={len(self.edges)}, components={len(self.components)})"


# -- construction helpers ----------------------------------------------------

def empty_drawing(n):
    """``n`` isolated vertices, all in the ambient region."""
    return PlaneDrawing(n, frozenset(), {}, {}, {v: Placement(AMBIENT) for v in range(n)})


def drawing_from_rotation(n, rotation, outer=None, placement=None):
    """Build a drawing from a rotation system.

    ``outer`` maps a component (any of its vertices) to any dart of the face
    that should be unbounded; by default the face holding the component's
    smallest dart.  ``placement`` maps a component (any vertex) to a region id
    or a :class:`Placement`; unspecified components go to the ambient region.
    """
    rotation = {int(v): tuple(int(w) for w in r) for v, r in rotation.items() if r}
    edges = frozenset(_edge(v, w) for v, r in rotation.items() for w in r)
    for v, r in rotation.items():
        for w in r:
            if v not in rotation.get(w, ()):
                raise DrawingError(f"rotation at {w} does not list {v}")
    comp_of, members = _components(n, edges)
    faces, face_of = _trace_rotation(rotation)
    outer_map = {}
    for c, vs in members.items():
        if len(vs) > 1:
            smallest = min(d for d in face_of if comp_of[d[0]] == c)
            outer_map[c] = face_of[smallest]
    for c, dart in (outer or {}).items():
        dart = tuple(dart)
        if dart not in face_of or comp_of[dart[0]] != comp_of[c]:
            raise DrawingError(f"outer dart {dart} is not in component of {c}")
        outer_map[comp_of[c]] = face_of[dart]
    base = PlaneDrawing(n, edges, rotation, outer_map,
                        {c: Placement(AMBIENT) for c in members})
    pl = dict(base.placement)
    for c, p in (placement or {}).items():
        if not isinstance(p, Placement):
            p = Placement(p)
        rid = base.normalize_region(p.region)
        pl[comp_of[c]] = Placement(rid, tuple(p.anchor) if p.anchor is not None else None)
    drawing = PlaneDrawing(n, edges, rotation, outer_map, pl)
    problems = validate_drawing(drawing)
    if problems:
        raise DrawingError("; ".join(problems))
    return drawing


def rotation_from_coordinates(edges, coords):
    """Counterclockwise rotation system of a straight-line drawing."""
    nbrs = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    rot = {}
    for v, ws in nbrs.items():
        x0, y0 = coords[v]
        ws = sorted(ws, key=lambda w: math.atan2(coords[w][1] - y0, coords[w][0] - x0))
        rot[v] = tuple(ws)
    return rot


def outer_dart_from_coordinates(rotation, coords):
    """A dart of the unbounded face of a connected straight-line drawing."""
    faces, _ = _trace_rotation(rotation)
    worst = None
    for walk in faces:
        area = 0.0
        for a, b in walk:
            area += coords[a][0] * coords[b][1] - coords[b][0] * coords[a][1]
        if worst is None or area < worst[0]:
            worst = (area, walk[0])
    return worst[1]


# -- public operations -------------------------------------------------------

def trace_faces(drawing, c):
    """Faces of component ``c`` (any vertex of it), each starting at its canonical dart."""
    if not 0 <= c < drawing.n:
        raise DrawingError(f"component {c} not found")
    comp = drawing.component_of(c)
    faces = drawing.faces(comp)
    if not faces:
        raise DrawingError(f"component {comp} has no edges")
    return sorted(faces, key=lambda f: f.canonical_id)


def compute_regions(drawing):
    return list(drawing.regions)


def addable_pairs(drawing):
    """Non-adjacent pairs sharing a region, each with its smallest shared region."""
    seen = {}
    for r in drawing.regions:
        vs = sorted(r.incident_vertices)
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if (u, v) not in seen and (u, v) not in drawing.edges:
                    seen[(u, v)] = r.id
    return {(u, v, rid) for (u, v), rid in seen.items()}


def addable_map(drawing):
    """``{(u, v): region}`` form of :func:`addable_pairs`, sorted by pair."""
    return {(u, v): rid for u, v, rid in sorted(addable_pairs(drawing), key=lambda t: t[:2])}


def _host_face(drawing, reg, x):
    """Face on which ``x`` meets region ``reg`` (None for an isolated vertex)."""
    c = drawing.component_of(x)
    if reg.face is not None and reg.face.component == c:
        return reg.face
    if c not in reg.children:
        raise NotAddableError(f"vertex {x} is not incident to region {reg.id!r}")
    if c in drawing.outer:
        return drawing.outer_face(c)
    return None


def _corner(face, x, corner):
    if face is None:
        if corner is not None:
            raise NotAddableError(f"vertex {x} is isolated; it has no corners")
        return None
    if corner is None:
        for d in face.boundary:
            if d[0] == x:
                return d
        raise NotAddableError(f"vertex {x} not on face {face.canonical_id}")
    corner = tuple(corner)
    if corner[0] != x or corner not in face.boundary:
        raise NotAddableError(f"corner {corner} is not a corner of {x} on face {face.canonical_id}")
    return corner


def _splice(rot, x, y, corner):
    if corner is None:
        rot[x] = [y]
    else:
        r = rot[x]
        r.insert(r.index(corner[1]), y)


def insert_edge(drawing, u, v, region, u_corner=None, v_corner=None, *, bounded=None, enclose=()):
    """Draw edge ``uv`` inside ``region``, returning a new drawing.

    Corners name the occurrence of each endpoint on the region boundary
    (default: the first occurrence along the canonical traversal).  When the
    edge splits the region's own face, each child component moves to the
    sub-face holding its anchor dart (default anchor: the old face's
    canonical dart).  When it splits the outer face of a component placed in
    the region, ``bounded`` picks which new face becomes bounded (1 for the
    face containing dart ``(u, v)``, 2 for ``(v, u)``; default: the one
    without the old outer dart) and ``enclose`` lists sibling components
    that end up inside it.
    """
    if u == v:
        raise NotAddableError("self-loop")
    if not (0 <= u < drawing.n and 0 <= v < drawing.n):
        raise NotAddableError(f"vertex out of range in ({u}, {v})")
    if drawing.has_edge(u, v):
        raise NotAddableError(f"({u}, {v}) is already an edge")
    rid = drawing.normalize_region(region)
    reg = drawing.region(rid)
    if u not in reg.incident_vertices or v not in reg.incident_vertices:
        raise NotAddableError(f"({u}, {v}) do not share region {rid!r}")
    hu = _host_face(drawing, reg, u)
    hv = _host_face(drawing, reg, v)
    cu = _corner(hu, u, u_corner)
    cv = _corner(hv, v, v_corner)

    rot = {k: list(t) for k, t in drawing.rotation.items()}
    _splice(rot, u, v, cu)
    _splice(rot, v, u, cv)
    rot = {k: tuple(t) for k, t in rot.items()}
    edges = drawing.edges | {_edge(u, v)}
    _, face_of = _trace_rotation(rot)
    comp_of, _ = _components(drawing.n, edges)

    old_cu, old_cv = drawing.component_of(u), drawing.component_of(v)
    outer = {}
    for c, dart in drawing.outer.items():
        if c not in (old_cu, old_cv):
            outer[comp_of[c]] = face_of[dart]
    placement = {}

    def remap(pl):
        if pl.region == AMBIENT:
            return pl
        c, dart = pl.region
        fid = face_of[pl.anchor if pl.anchor is not None else dart]
        return Placement((comp_of[c], fid), pl.anchor)

    for c, pl in drawing.placement.items():
        if c not in (old_cu, old_cv):
            placement[comp_of[c]] = remap(pl)

    enclose = tuple(enclose)
    defining = reg.face.component if reg.face is not None else None
    if old_cu == old_cv:
        k = old_cu
        new_k = comp_of[k]
        placement[new_k] = remap(drawing.placement[k])
        if k == defining:
            if bounded is not None or enclose:
                raise DrawingError("bounded/enclose apply only when splitting an outer face")
            outer[new_k] = face_of[drawing.outer[k]]
        else:
            f1, f2 = face_of[(u, v)], face_of[(v, u)]
            old = face_of[drawing.outer[k]]
            if bounded is None:
                inner = f2 if old == f1 else f1
            elif bounded in (1, 2):
                inner = f1 if bounded == 1 else f2
            else:
                raise DrawingError(f"bounded must be 1 or 2, not {bounded!r}")
            outer[new_k] = f2 if inner == f1 else f1
            for s in enclose:
                if s == k or drawing.placement.get(s, Placement(None)).region != rid:
                    raise DrawingError(f"component {s} is not a sibling in region {rid!r}")
                placement[comp_of[s]] = Placement((new_k, inner), None)
    else:
        if bounded is not None or enclose:
            raise DrawingError("bounded/enclose apply only when splitting an outer face")
        merged = comp_of[u]
        if defining in (old_cu, old_cv):
            outer[merged] = face_of[drawing.outer[defining]]
            placement[merged] = remap(drawing.placement[defining])
        else:
            for c in (old_cu, old_cv):
                if c in drawing.outer:
                    outer[merged] = face_of[drawing.outer[c]]
                    break
            else:
                outer[merged] = face_of[(u, v)]
            anchor = drawing.placement[old_cu].anchor
            if anchor is None:
                anchor = drawing.placement[old_cv].anchor
            placement[merged] = remap(Placement(rid, anchor))
    return PlaneDrawing(drawing.n, edges, rot, outer, placement)


def _ancestors(drawing, c):
    seen = []
    cur = c
    while True:
        region = drawing.placement[cur].region
        if region == AMBIENT:
            return seen
        cur = region[0]
        if cur in seen:
            return seen
        seen.append(cur)


def place_isolated(drawing, v, region, anchor=None):
    """Move the component of ``v`` into ``region`` (optionally at an anchor corner)."""
    if not 0 <= v < drawing.n:
        raise DrawingError(f"vertex {v} out of range")
    c = drawing.component_of(v)
    rid = drawing.normalize_region(region)
    if rid == AMBIENT:
        if anchor is not None:
            raise DrawingError("the ambient region has no boundary to anchor to")
    else:
        if rid[0] == c or c in _ancestors(drawing, rid[0]):
            raise DrawingError(f"placing component {c} in {rid!r} would create a containment cycle")
        if anchor is not None:
            anchor = tuple(anchor)
            if anchor not in drawing.region(rid).face.boundary:
                raise DrawingError(f"anchor {anchor} is not on the boundary of {rid!r}")
    placement = dict(drawing.placement)
    placement[c] = Placement(rid, anchor)
    return PlaneDrawing(drawing.n, drawing.edges, drawing.rotation, drawing.outer, placement)


def validate_drawing(drawing):
    """List of violated invariants (empty when the drawing is valid)."""
    problems = []
    n = drawing.n
    if not isinstance(n, int) or n < 0:
        return [f"n: invalid vertex count {n!r}"]
    nbrs = {}
    for e in drawing.edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            problems.append(f"edges: {e} out of range")
        elif u >= v:
            problems.append(f"edges: {e} is not an ordered pair u < v")
        else:
            nbrs.setdefault(u, set()).add(v)
            nbrs.setdefault(v, set()).add(u)
    if problems:
        return problems
    for v in range(n):
        r = drawing.rotation.get(v)
        if v not in nbrs:
            if r:
                problems.append(f"rotation: isolated vertex {v} has a rotation {r}")
            continue
        if r is None:
            problems.append(f"rotation: vertex {v} has no rotation")
            continue
        if len(set(r)) != len(r):
            problems.append(f"rotation: vertex {v} repeats a neighbour in {r}")
        for w in r:
            if w not in nbrs[v]:
                problems.append(f"rotation: vertex {v} lists non-neighbour {w}")
        for w in nbrs[v] - set(r):
            problems.append(f"rotation: vertex {v} misses neighbour {w}")
    for v in drawing.rotation:
        if not (isinstance(v, int) and 0 <= v < n):
            problems.append(f"rotation: unknown vertex {v!r}")
    if problems:
        return problems
    try:
        by_comp, by_id, face_of = drawing._face_data
    except DrawingError as exc:
        return [f"rotation: {exc}"]
    members = drawing.components
    for c, vs in members.items():
        if len(vs) == 1:
            continue
        e = sum(len(nbrs[v]) for v in vs) // 2
        f = len(by_comp.get(c, ()))
        if len(vs) - e + f != 2:
            problems.append(f"euler: component {c} has V-E+F = {len(vs) - e + f}, not 2")
    with_edges = {c for c, vs in members.items() if len(vs) > 1}
    if set(drawing.outer) != with_edges:
        problems.append(f"outer: components {sorted(with_edges)} expected, got {sorted(drawing.outer)}")
    for c, dart in drawing.outer.items():
        dart = tuple(dart)
        if dart not in face_of or drawing.component_of(dart[0]) != c:
            problems.append(f"outer: dart {dart} does not belong to component {c}")
        elif face_of[dart] != dart:
            problems.append(f"outer: dart {dart} is not the canonical dart of its face")
    if set(drawing.placement) != set(members):
        problems.append(f"placement: components {sorted(members)} expected, got {sorted(drawing.placement)}")
        return problems
    for c, pl in sorted(drawing.placement.items()):
        rid = pl.region
        if rid == AMBIENT:
            if pl.anchor is not None:
                problems.append(f"placement: component {c} anchored in the ambient region")
            continue
        try:
            rc, dart = rid
            dart = tuple(dart)
        except (TypeError, ValueError):
            problems.append(f"placement: component {c} has malformed region {rid!r}")
            continue
        if rc not in with_edges or dart not in by_id or by_id[dart].component != rc:
            problems.append(f"placement: component {c} refers to unknown region {rid!r}")
            continue
        if drawing.outer.get(rc) == dart:
            problems.append(f"placement: component {c} placed in the outer face of {rc}")
        if rc == c:
            problems.append(f"placement: component {c} placed inside its own face")
        if pl.anchor is not None and tuple(pl.anchor) not in by_id[dart].boundary:
            problems.append(f"placement: anchor {pl.anchor} of component {c} not on region {rid!r}")
    if not problems:
        for c in members:
            chain = [c]
            cur = c
            while True:
                region = drawing.placement[cur].region
                if region == AMBIENT:
                    break
                cur = region[0]
                if cur in chain:
                    problems.append(f"placement: containment cycle through components {sorted(set(chain))}")
                    break
                chain.append(cur)
            if problems:
                break
    return problems


# -- serialization -----------------------------------------------------------

def _region_json(rid):
    if rid == AMBIENT:
        return AMBIENT
    return {"component": rid[0], "face": list(rid[1])}


def drawing_to_json(drawing):
    return {
        "n": drawing.n,
        "edges": [list(e) for e in sorted(drawing.edges)],
        "rotation": {str(v): list(r) for v, r in sorted(drawing.rotation.items())},
        "outer": [{"component": c, "dart": list(d)} for c, d in sorted(drawing.outer.items())],
        "placement": [
            {"component": c, "region": _region_json(p.region),
             "anchor": list(p.anchor) if p.anchor is not None else None}
            for c, p in sorted(drawing.placement.items())
        ],
    }


def encode_drawing(drawing):
    return (json.dumps(drawing_to_json(drawing), indent=1) + "\n").encode()


def _load_json(data):
    if isinstance(data, bytes):
        try:
            text = data.decode()
        except UnicodeDecodeError as exc:
            raise DecodeError("input is not UTF-8", exc.start) from None
    else:
        text = data
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DecodeError(f"invalid JSON: {exc.msg}", len(text[:exc.pos].encode())) from None


def _pair(value, what):
    if (not isinstance(value, list) or len(value) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in value)):
        raise DecodeError(f"{what}: expected a pair of integers, got {value!r}")
    return (value[0], value[1])


def drawing_from_json(obj):
    if not isinstance(obj, dict):
        raise DecodeError("drawing: expected a JSON object")
    for key in ("n", "edges", "rotation", "outer", "placement"):
        if key not in obj:
            raise DecodeError(f"drawing: missing field {key!r}")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DecodeError(f"n: expected a non-negative integer, got {n!r}")
    edges = frozenset(_pair(e, f"edges[{i}]") for i, e in enumerate(obj["edges"]))
    rotation = {}
    if not isinstance(obj["rotation"], dict):
        raise DecodeError("rotation: expected an object")
    for k, r in obj["rotation"].items():
        try:
            v = int(k)
        except ValueError:
            raise DecodeError(f"rotation: key {k!r} is not a vertex") from None
        if not isinstance(r, list) or not all(isinstance(x, int) for x in r):
            raise DecodeError(f"rotation[{k}]: expected a list of vertices")
        rotation[v] = tuple(r)
    outer = {}
    for i, entry in enumerate(obj["outer"]):
        try:
            outer[int(entry["component"])] = _pair(entry["dart"], f"outer[{i}].dart")
        except (KeyError, TypeError):
            raise DecodeError(f"outer[{i}]: expected {{component, dart}}") from None
    placement = {}
    for i, entry in enumerate(obj["placement"]):
        try:
            c = int(entry["component"])
            region = entry["region"]
            anchor = entry.get("anchor")
        except (KeyError, TypeError, AttributeError):
            raise DecodeError(f"placement[{i}]: expected {{component, region, anchor}}") from None
        if region != AMBIENT:
            if not isinstance(region, dict) or "component" not in region or "face" not in region:
                raise DecodeError(f"placement[{i}].region: expected 'ambient' or {{component, face}}")
            region = (int(region["component"]), _pair(region["face"], f"placement[{i}].region.face"))
        if anchor is not None:
            anchor = _pair(anchor, f"placement[{i}].anchor")
        placement[c] = Placement(region, anchor)
    drawing = PlaneDrawing(n, edges, rotation, outer, placement)
    problems = validate_drawing(drawing)
    if problems:
        raise DecodeError("invalid drawing: " + "; ".join(problems))
    return drawing


def decode_drawing(data):
    """Inverse of :func:`encode_drawing`; errors carry byte offsets for syntax faults."""
    return drawing_from_json(_load_json(data))


def export_dot(drawing, name="H"):
    """Graphviz text: one statement per edge, one cluster per non-ambient region."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(drawing.n):
        lines.append(f"  {v};")
    for u, v in sorted(drawing.edges):
        lines.append(f"  {u} -- {v};")
    members = drawing.components
    for i, r in enumerate(drawing.regions):
        if r.id == AMBIENT:
            label = "ambient"
        else:
            label = f"face {r.id[1]} of component {r.id[0]}"
        inc = " ".join(str(x) for x in sorted(r.incident_vertices))
        lines.append(f"  subgraph cluster_r{i} {{")
        lines.append(f'    label="{label}: incident {{{inc}}}";')
        lines.append(f'    r{i} [shape=note, label="region {i}"];')
        for c in r.children:
            lines.append(f"    // component {c}: {' '.join(map(str, members[c]))}")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
