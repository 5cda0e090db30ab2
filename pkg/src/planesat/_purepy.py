"""Pure-Python implementations of the hot kernels.

The compiled module ``planesat._speedups`` exposes the same functions with the
same semantics and the same enumeration order; :mod:`planesat.kernels` picks
one of the two at import time.  Vertex sets are Python ``int`` bitmasks.
"""
from __future__ import annotations

from itertools import permutations, product


def _popcount(x: int) -> int:
    return bin(x).count("1")


def rotation_classes(n, adj):
    """Enumerate genus-0 rotation systems of one connected component.

    ``adj[v]`` is the sorted neighbour tuple of ``v`` (empty for vertices
    outside the component).  Every cyclic order is listed once by fixing the
    smallest neighbour first.  Returns ``(classes, tried)`` where ``classes``
    maps the sorted tuple of face vertex-masks to the first rotation (a dict)
    producing it, in odometer order with the highest vertex varying fastest.
    """
    verts = [v for v in range(n) if adj[v]]
    n_edges = sum(len(adj[v]) for v in verts) // 2
    want = n_edges - len(verts) + 2
    choices = []
    for v in verts:
        a = adj[v]
        if len(a) <= 2:
            choices.append([tuple(a)])
        else:
            choices.append([(a[0],) + p for p in permutations(a[1:])])
    classes = {}
    tried = 0
    for combo in product(*choices):
        tried += 1
        masks = _trace_masks(verts, combo)
        if len(masks) != want:
            continue
        key = tuple(sorted(masks))
        if key not in classes:
            classes[key] = dict(zip(verts, combo))
    return classes, tried


def _trace_masks(verts, combo):
    rot = dict(zip(verts, combo))
    pos = {v: {w: i for i, w in enumerate(r)} for v, r in rot.items()}
    seen = set()
    masks = []
    for v in verts:
        for w in rot[v]:
            if (v, w) in seen:
                continue
            mask = 0
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                mask |= 1 << a
                rb = rot[b]
                a, b = b, rb[(pos[b][a] + 1) % len(rb)]
            masks.append(mask)
    return masks


def find_embedding(n, hadj, gadj, order):
    """Return ``sigma`` (list) with ``sigma[x]`` adjacent-preserving, or None.

    ``hadj``/``gadj`` are adjacency bitmasks of the pattern and host graphs on
    the same vertex count; ``order`` is the pattern-vertex mapping order.
    Host candidates are tried in degree-descending order, with forward
    checking on the domains of pattern neighbours; once the unmapped pattern
    vertices form an independent set the rest is solved as a bipartite
    matching.
    """
    hdeg = [_popcount(m) for m in hadj]
    gdeg = [_popcount(m) for m in gadj]
    rank = [0] * n
    for i, x in enumerate(order):
        rank[x] = i
    earlier = [[h for h in _bits(hadj[x]) if rank[h] < rank[x]] for x in range(n)]
    later = [[h for h in _bits(hadj[x]) if rank[h] > rank[x]] for x in range(n)]
    hosts = sorted(range(n), key=lambda y: (-gdeg[y], y))
    base = [0] * n
    for x in range(n):
        m = 0
        for y in range(n):
            if gdeg[y] >= hdeg[x]:
                m |= 1 << y
        base[x] = m
    # first index from which the remaining pattern vertices are pairwise non-adjacent
    split = n
    suffix = 0
    for i in range(n - 1, -1, -1):
        x = order[i]
        if hadj[x] & suffix:
            break
        suffix |= 1 << x
        split = i
    sigma = [-1] * n

    def domain(x, used):
        d = base[x] & ~used
        for h in earlier[x]:
            s = sigma[h]
            if s >= 0:
                d &= gadj[s]
        return d

    def rec(i, used):
        if i >= split:
            return _match_rest(order[i:], domain, used, sigma)
        x = order[i]
        dom = domain(x, used)
        if not dom:
            return False
        for y in hosts:
            if not (dom >> y) & 1:
                continue
            sigma[x] = y
            nused = used | (1 << y)
            if all(domain(z, nused) for z in later[x]):
                if rec(i + 1, nused):
                    return True
        sigma[x] = -1
        return False

    if rec(0, 0):
        return sigma
    return None


def _bits(m):
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def search_order(n, hadj):
    hdeg = [_popcount(m) for m in hadj]
    order = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        best = max(
            remaining,
            key=lambda x: (hdeg[x] > 0, _popcount(hadj[x] & placed) > 0,
                           _popcount(hadj[x] & placed), hdeg[x], -x),
        )
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order


def _match_rest(rest, domain, used, sigma):
    doms = [domain(x, used) for x in rest]
    if not all(doms):
        return False
    owner = {}

    def augment(i, seen):
        for y in _bits(doms[i]):
            if y in seen:
                continue
            seen.add(y)
            if y not in owner or augment(owner[y], seen):
                owner[y] = i
                return True
        return False

    for i in range(len(rest)):
        if not augment(i, set()):
            return False
    for y, i in owner.items():
        sigma[rest[i]] = y
    return True
