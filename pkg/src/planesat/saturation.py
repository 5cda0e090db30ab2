"""Labeled and unlabeled saturation checks and greedy closures."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .drawing import _region_json, addable_pairs, insert_edge
from .errors import GraphError, PreconditionError
from .graph import EmbeddingMap, LabeledGraph, spanning_embedding


@dataclass(frozen=True)
class SaturationReport:
    saturated: bool
    witness: tuple | None
    rule: str
    edges: int
    n: int
    host_membership: bool = True
    certificate: EmbeddingMap | None = None
    membership: EmbeddingMap | None = field(default=None, compare=False)
    policy: str = "lex"

    @property
    def ratio(self) -> Fraction | None:
        den = 3 * self.n - 6
        return Fraction(self.edges, den) if den > 0 else None

    def to_json(self) -> dict:
        r = self.ratio
        return {
            "saturated": self.saturated,
            "witness": list(self.witness[:2]) if self.witness else None,
            "region": _region_json(self.witness[2]) if self.witness else None,
            "host_membership": self.host_membership,
            "edges": self.edges,
            "ratio": {"num": r.numerator, "den": r.denominator} if r is not None else None,
            "rule": self.rule,
            "policy": self.policy,
            "certificate": list(self.certificate.sigma) if self.certificate else None,
        }


def _check_sizes(h, g):
    if h.n != g.n:
        raise GraphError(f"vertex counts differ: drawing has {h.n}, host has {g.n}")


def _sorted_addable(h, key=None):
    pairs = sorted(addable_pairs(h), key=lambda t: t[:2])
    if key is not None:
        pairs.sort(key=lambda t: key(t[0], t[1]))
    return pairs


def is_labeled_saturated(h, g: LabeledGraph, key=None) -> SaturationReport:
    """No host edge outside ``h`` joins two vertices of a common region."""
    _check_sizes(h, g)
    extra = h.edges - g.edges
    if extra:
        raise GraphError(f"drawing edge {min(extra)} is not a host edge", min(extra))
    for u, v, rid in _sorted_addable(h, key):
        if (u, v) in g.edges:
            return SaturationReport(False, (u, v, rid), "labeled", len(h.edges), h.n)
    return SaturationReport(True, None, "labeled", len(h.edges), h.n)


def is_unlabeled_saturated(h, g: LabeledGraph, key=None, backend=None) -> SaturationReport:
    """``h`` embeds in ``g`` and no crossing-free addition keeps it embeddable."""
    _check_sizes(h, g)
    base = spanning_embedding(h.edges, g, backend=backend)
    if base is None:
        return SaturationReport(False, None, "unlabeled", len(h.edges), h.n, host_membership=False)
    sigma = base.sigma
    for u, v, rid in _sorted_addable(h, key):
        if g.has_edge(sigma[u], sigma[v]):
            cert = base
        else:
            cert = spanning_embedding(h.edges | {(u, v)}, g, backend=backend)
        if cert is not None:
            return SaturationReport(False, (u, v, rid), "unlabeled", len(h.edges), h.n,
                                    certificate=cert, membership=base)
    return SaturationReport(True, None, "unlabeled", len(h.edges), h.n, membership=base)


def saturate_labeled(h, g: LabeledGraph, key=None):
    """Insert the least addable host edge until the drawing is labeled-saturated."""
    extra = h.edges - g.edges
    if extra:
        raise GraphError(f"drawing edge {min(extra)} is not a host edge", min(extra))
    while True:
        rep = is_labeled_saturated(h, g, key)
        if rep.saturated:
            return h
        u, v, rid = rep.witness
        h = insert_edge(h, u, v, rid)


def saturate_unlabeled(h, g: LabeledGraph, key=None):
    """Insert the least addable pair keeping ``h`` a subgraph of ``g`` up to relabeling."""
    return close_unlabeled(h, g, key)[0]


def close_unlabeled(h, g: LabeledGraph, key=None, step_budget=None):
    """Budgeted unlabeled closure; returns ``(drawing, verified_saturated)``."""
    if spanning_embedding(h.edges, g) is None:
        raise PreconditionError("the starting drawing is not a subgraph of the host")
    steps = 0
    while True:
        if step_budget is not None and steps >= step_budget:
            return h, False
        rep = is_unlabeled_saturated(h, g, key)
        if rep.saturated:
            return h, True
        u, v, rid = rep.witness
        h = insert_edge(h, u, v, rid)
        steps += 1
