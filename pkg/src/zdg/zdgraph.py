"""Zero-divisor graphs of inverse semigroups with zero, their metrics and case classification."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable

import numpy as np

from . import graphs
from .errors import AxiomError, TheoremViolation
from .semigroup import (FiniteSemigroup, OrderStructure, left_ideal_of_idempotents,
                        right_ideal_of_idempotents)


@dataclass(frozen=True, eq=False)
class ZdGraph:
    """Simple graph on zero-divisors.

    ``vertices[:core]`` are the graph proper. Any further vertices only serve as
    intermediates for distances (used by truncated graph inverse semigroups).
    """

    vertices: tuple[Hashable, ...]
    labels: tuple[str, ...]
    adj: np.ndarray
    core: int | None = None
    truncated: bool = False
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.vertices) if self.core is None else self.core

    @cached_property
    def core_adj(self) -> np.ndarray:
        return self.adj[: self.n, : self.n]

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        return graphs.edge_list(self.core_adj)

    @cached_property
    def diameter(self) -> float | None:
        return graphs.diameter(self.adj, self.n)

    @cached_property
    def girth(self) -> float:
        return graphs.girth(self.core_adj)

    @cached_property
    def connected(self) -> bool:
        return self.diameter is None or not math.isinf(self.diameter)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def label_edges(self) -> list[tuple[str, str]]:
        return [(self.labels[i], self.labels[j]) for i, j in self.edges]


@dataclass(frozen=True)
class DiamClass:
    case: str                 # "ii", "iii" or "iv"
    predicted: int
    computed: Any
    witness: tuple[str, str] | None = None


@dataclass(frozen=True)
class GirthClass:
    case: str                 # "star", "bipartite" or "odd-cycle"
    predicted: float
    computed: float
    witness: Any = None


def _require_zero(S: FiniteSemigroup) -> int:
    if S.zero is None:
        raise AxiomError("semigroup has no zero element")
    return S.zero


def zero_divisors(S: FiniteSemigroup, order: OrderStructure) -> frozenset[int]:
    """Nonzero a with some nonzero b such that the meet of a and b is {0}."""
    z = _require_zero(S)
    trivial = frozenset([z])
    out = set()
    for a in range(S.order):
        if a == z:
            continue
        for b in range(S.order):
            if b != z and order.meet(a, b) == trivial:
                out.add(a)
                break
    return frozenset(out)


def annihilator(S: FiniteSemigroup, order: OrderStructure, x: int) -> frozenset[int]:
    z = _require_zero(S)
    trivial = frozenset([z])
    return frozenset(y for y in range(S.order) if order.meet(x, y) == trivial)


def build_gamma(S: FiniteSemigroup, order: OrderStructure) -> ZdGraph:
    """Gamma(S). Also checks that the meet, Ea, and aE formulations of adjacency agree."""
    z = _require_zero(S)
    trivial = frozenset([z])
    verts = sorted(zero_divisors(S, order))
    left = {a: left_ideal_of_idempotents(S, a) for a in verts}
    right = {a: right_ideal_of_idempotents(S, a) for a in verts}
    n = len(verts)
    adj = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(verts):
        for j in range(i + 1, n):
            b = verts[j]
            by_meet = order.meet(a, b) == trivial
            by_left = (left[a] & left[b]) == trivial
            by_right = (right[a] & right[b]) == trivial
            if not by_meet == by_left == by_right:
                raise TheoremViolation("adjacency-equivalences",
                                       "meet, Ea and aE tests disagree",
                                       (S.elements[a], S.elements[b]))
            adj[i, j] = adj[j, i] = by_meet
    adj.setflags(write=False)
    return ZdGraph(tuple(verts), tuple(S.elements[a] for a in verts), adj)


def minimal_nonzero(S: FiniteSemigroup, order: OrderStructure) -> frozenset[int]:
    """Nonzero x with Ex = {x, 0}; cross-checked against poset minimality in S minus zero."""
    z = _require_zero(S)
    by_downset = frozenset(x for x in range(S.order)
                           if x != z and order.down_sets[x] == frozenset([x, z]))
    by_poset = frozenset(
        x for x in range(S.order)
        if x != z and not any(y != z and y != x and order.leq[y, x] for y in range(S.order)))
    if by_downset != by_poset:
        raise TheoremViolation("minimal-elements", "down-set and poset minimality differ",
                               sorted(S.elements[x] for x in by_downset ^ by_poset))
    return by_downset


def diameter(g: ZdGraph) -> float | None:
    return g.diameter


def girth(g: ZdGraph) -> float:
    return g.girth


def classify_diameter(S: FiniteSemigroup, order: OrderStructure, g: ZdGraph) -> DiamClass:
    """Predict the diameter from minimal elements and annihilators and compare with BFS."""
    if g.n < 2:
        raise ValueError("diameter classification needs at least two vertices")
    z = _require_zero(S)
    if not g.connected:
        raise TheoremViolation("diameter-classification", "zero-divisor graph is disconnected")
    computed = g.diameter
    verts = set(g.vertices)
    mins = minimal_nonzero(S, order)
    rest = sorted(verts - mins)
    trivial = frozenset([z])
    if verts == mins:
        cls = DiamClass("ii", 1, computed)
    elif not rest:
        # Z is a proper subset of Min: none of the cases applies.
        raise TheoremViolation("diameter-classification",
                               "zero-divisors form a proper subset of the minimal elements")
    else:
        ann = {x: annihilator(S, order, x) for x in rest}
        witness = None
        for i, x in enumerate(rest):
            for y in rest[i + 1:]:
                if order.meet(x, y) != trivial and (ann[x] & ann[y]) == trivial:
                    witness = (S.elements[x], S.elements[y])
                    break
            if witness:
                break
        cls = DiamClass("iv", 3, computed, witness) if witness else DiamClass("iii", 2, computed)
    if cls.predicted != computed:
        raise TheoremViolation("diameter-classification",
                               f"case {cls.case} predicts {cls.predicted}, BFS gives {computed}",
                               cls.witness)
    return cls


def classify_girth(S: FiniteSemigroup | None, g: ZdGraph) -> GirthClass:
    """Predict the girth from the star / bipartite / odd-cycle shape and compare with BFS."""
    if g.n < 2:
        raise ValueError("girth classification needs at least two vertices")
    A = g.core_adj
    computed = g.girth
    centre = graphs.star_centre(A)
    if centre is not None:
        cls = GirthClass("star", graphs.INF, computed, g.labels[centre])
    elif graphs.is_bipartite(A):
        cls = GirthClass("bipartite", 4, computed)
    else:
        cls = GirthClass("odd-cycle", 3, computed, _triangle(g))
    if cls.predicted != computed:
        raise TheoremViolation("girth-classification",
                               f"{cls.case} predicts {cls.predicted}, BFS gives {computed}",
                               cls.witness)
    return cls


def _triangle(g: ZdGraph) -> tuple[str, str, str] | None:
    A = g.core_adj
    for i, j in g.edges:
        common = np.flatnonzero(A[i] & A[j])
        if len(common):
            return (g.labels[i], g.labels[j], g.labels[int(common[0])])
    return None
