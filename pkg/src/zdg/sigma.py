"""The least group congruence on a zero-free inverse semigroup and the zero-divisor graph of S with a zero adjoined."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import AxiomError, Check, TheoremViolation
from .semigroup import (FiniteSemigroup, InverseVerdict, adjoin_zero,
                        left_ideal_of_idempotents, natural_order, verify_inverse)
from .zdgraph import ZdGraph, build_gamma

LEASTNESS_MAX_ORDER = 6


@dataclass(frozen=True)
class SigmaPartition:
    class_of: tuple[int, ...]
    classes: tuple[frozenset[int], ...]
    is_identity: bool

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def related(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]


@dataclass(frozen=True)
class BipartiteDecomposition:
    """Complete bipartite edge blocks keyed by pairs of class ids (i < j)."""

    blocks: dict[tuple[int, int], frozenset[tuple[int, int]]]

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset().union(*self.blocks.values()) if self.blocks else frozenset()


def sigma(S: FiniteSemigroup, v: InverseVerdict | None = None, allow_zero: bool = False) -> SigmaPartition:
    """a ~ b iff ea = fb for some idempotents e, f (i.e. Ea and Eb meet).

    Semigroups with a zero are refused: there sigma is the universal relation.
    Pass ``allow_zero=True`` to compute it anyway.
    """
    if v is None:
        v = verify_inverse(S)
    if not v.is_inverse:
        raise AxiomError(f"sigma needs an inverse semigroup: {v.witness}")
    if S.has_proper_zero and not allow_zero:
        raise AxiomError("sigma degenerates to universal relation on a semigroup with zero")
    n = S.order
    translates = [left_ideal_of_idempotents(S, a) for a in range(n)]
    rel = np.array([[bool(translates[a] & translates[b]) for b in range(n)] for a in range(n)])
    check_equivalence(rel)
    class_of = [-1] * n
    classes: list[set[int]] = []
    for a in range(n):
        if class_of[a] < 0:
            members = set(np.flatnonzero(rel[a]).tolist())
            for m in members:
                class_of[m] = len(classes)
            classes.append(members)
    sp = SigmaPartition(tuple(class_of), tuple(frozenset(c) for c in classes),
                        all(len(c) == 1 for c in classes))
    quotient_table(S, sp.class_of)
    return sp


def check_equivalence(rel: np.ndarray) -> None:
    if not rel.diagonal().all():
        raise TheoremViolation("sigma-congruence", "relation is not reflexive")
    if not (rel == rel.T).all():
        raise TheoremViolation("sigma-congruence", "relation is not symmetric")
    r = rel.astype(np.int64)
    if ((r @ r > 0) & ~rel).any():
        raise TheoremViolation("sigma-congruence", "relation is not transitive")


def quotient_table(S: FiniteSemigroup, class_of) -> np.ndarray:
    """Multiplication table of S modulo the partition ``class_of``; must be a group.

    Raises TheoremViolation if the partition is not a congruence or the quotient is not a group.
    """
    table = _quotient_or_none(S, class_of)
    if table is None:
        raise TheoremViolation("sigma-congruence", "partition is not compatible with multiplication")
    if not _is_group(table):
        raise TheoremViolation("sigma-congruence", "quotient is not a group")
    return table


def _quotient_or_none(S: FiniteSemigroup, class_of) -> np.ndarray | None:
    k = max(class_of) + 1
    q = np.full((k, k), -1, dtype=np.int64)
    T = S.table
    for a in range(S.order):
        for b in range(S.order):
            ca, cb, cp = class_of[a], class_of[b], class_of[T[a, b]]
            if q[ca, cb] < 0:
                q[ca, cb] = cp
            elif q[ca, cb] != cp:
                return None
    return q


def _is_group(q: np.ndarray) -> bool:
    k = q.shape[0]
    idx = np.arange(k)
    ids = [e for e in range(k) if (q[e] == idx).all() and (q[:, e] == idx).all()]
    if len(ids) != 1:
        return False
    e = ids[0]
    return all((q[a] == e).any() and (q[:, a] == e).any() for a in range(k))


def set_partitions(n: int) -> Iterator[list[int]]:
    """All set partitions of range(n) as restricted growth strings."""
    labels = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield list(labels)
            return
        for c in range(top + 2):
            labels[i] = c
            yield from rec(i + 1, max(top, c))

    if n == 0:
        yield []
    else:
        yield from rec(1, 0)


def group_congruences(S: FiniteSemigroup) -> list[list[int]]:
    """Every congruence of S whose quotient is a group (brute force, small orders only)."""
    if S.order > LEASTNESS_MAX_ORDER:
        raise ValueError(f"congruence enumeration capped at order {LEASTNESS_MAX_ORDER}")
    out = []
    for part in set_partitions(S.order):
        q = _quotient_or_none(S, part)
        if q is not None and _is_group(q):
            out.append(part)
    return out


def check_leastness(S: FiniteSemigroup, sp: SigmaPartition) -> Check:
    """sigma must refine every group congruence."""
    for part in group_congruences(S):
        for a in range(S.order):
            for b in range(S.order):
                if sp.related(a, b) and part[a] != part[b]:
                    return Check("sigma-least", False, {"pair": (S.elements[a], S.elements[b]),
                                                        "congruence": part})
    return Check("sigma-least", True)


def gamma_with_zero(S: FiniteSemigroup) -> tuple[FiniteSemigroup, ZdGraph]:
    S0 = adjoin_zero(S)
    return S0, build_gamma(S0, natural_order(S0))


def check_sigma_adjacency(S: FiniteSemigroup, sp: SigmaPartition,
                          S0: FiniteSemigroup | None = None, g: ZdGraph | None = None) -> Check:
    """For distinct a, b: not sigma-related <=> adjacent in Gamma(S^0) <=> E^0 a and E^0 b meet in {0}."""
    if S0 is None or g is None:
        S0, g = gamma_with_zero(S)
    zero = frozenset([S0.zero])
    pos = {v: i for i, v in enumerate(g.vertices)}
    translates = [left_ideal_of_idempotents(S0, a) for a in range(S.order)]
    for a in range(S.order):
        for b in range(a + 1, S.order):
            apart = not sp.related(a, b)
            adjacent = a in pos and b in pos and g.adjacent(pos[a], pos[b])
            disjoint = (translates[a] & translates[b]) == zero
            if not apart == adjacent == disjoint:
                return Check("sigma-adjacency", False, (S.elements[a], S.elements[b]),
                             note=f"apart={apart} adjacent={adjacent} disjoint={disjoint}")
    return Check("sigma-adjacency", True)


def verify_structure_theorem(S: FiniteSemigroup, sp: SigmaPartition,
                             g: ZdGraph | None = None) -> BipartiteDecomposition:
    """Gamma(S^0) is the union of complete bipartite graphs between distinct sigma-classes.

    Also checks the vertex set: all of S when there are two or more classes, empty otherwise.
    """
    if g is None:
        _, g = gamma_with_zero(S)
    if sp.num_classes == 1:
        if g.n:
            raise TheoremViolation("bipartite-union", "one sigma-class but Gamma(S^0) has vertices",
                                   list(g.labels))
        return BipartiteDecomposition({})
    if sorted(g.vertices) != list(range(S.order)):
        raise TheoremViolation("bipartite-union", "vertex set of Gamma(S^0) is not S",
                               list(g.labels))
    blocks = {}
    for i, ci in enumerate(sp.classes):
        for j in range(i + 1, sp.num_classes):
            cj = sp.classes[j]
            blocks[(i, j)] = frozenset((min(a, b), max(a, b)) for a in ci for b in cj)
    dec = BipartiteDecomposition(blocks)
    pos = list(g.vertices)
    actual = frozenset((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges)
    expected = dec.edges()
    if actual != expected:
        extra = sorted(actual - expected)
        missing = sorted(expected - actual)
        bad = (extra or missing)[0]
        raise TheoremViolation("bipartite-union", "edge set differs from the bipartite union",
                               (S.elements[bad[0]], S.elements[bad[1]]))
    return dec


def predict_diameter_sigma(S: FiniteSemigroup, sp: SigmaPartition, g: ZdGraph | None = None):
    """1 if |S| > 1 and sigma is the identity, 2 if sigma has >= 2 classes but is not the identity, else None."""
    if sp.num_classes == 1:
        pred = None
    elif sp.is_identity:
        pred = 1
    else:
        pred = 2
    if g is None:
        _, g = gamma_with_zero(S)
    if pred != g.diameter:
        raise TheoremViolation("sigma-diameter", f"predicted {pred}, computed {g.diameter}")
    return pred


def predict_girth_sigma(S: FiniteSemigroup, sp: SigmaPartition, g: ZdGraph | None = None) -> float:
    if sp.num_classes < 2:
        raise ValueError("girth prediction needs at least two sigma-classes")
    if sp.num_classes >= 3:
        pred = 3
    elif min(len(c) for c in sp.classes) == 1:
        pred = math.inf
    else:
        pred = 4
    if g is None:
        _, g = gamma_with_zero(S)
    if pred != g.girth:
        raise TheoremViolation("sigma-girth", f"predicted {pred}, computed {g.girth}")
    return pred


def is_group(S: FiniteSemigroup) -> bool:
    return _is_group(np.asarray(S.table))


def check_group_formulations(S: FiniteSemigroup, sp: SigmaPartition) -> Check:
    """'|S| > 1 and sigma is the identity' versus 'S is a non-trivial group'."""
    by_sigma = S.order > 1 and sp.is_identity
    by_group = S.order > 1 and is_group(S)
    return Check("sigma-identity-vs-group", by_sigma == by_group,
                 None if by_sigma == by_group else S.elements[0],
                 note=f"sigma-identity={by_sigma} group={by_group}")
