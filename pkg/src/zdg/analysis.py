"""End-to-end analysis of one semigroup or one digraph, producing a JSON-ready report."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import graph_inverse as ig
from .errors import AxiomError, Check, TheoremViolation
from .semigroup import (FiniteSemigroup, OrderStructure, check_associativity, least_element,
                        left_ideal_of_idempotents, natural_order, right_ideal_of_idempotents,
                        verify_inverse)
from .sigma import (LEASTNESS_MAX_ORDER, check_group_formulations, check_leastness,
                    check_sigma_adjacency, gamma_with_zero, predict_diameter_sigma,
                    predict_girth_sigma, sigma, verify_structure_theorem)
from .zdgraph import (ZdGraph, annihilator, build_gamma, classify_diameter, classify_girth,
                      minimal_nonzero)

SCHEMA = "zdg/1"


def metric(x) -> Any:
    if x is None:
        return None
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return int(x)


@dataclass
class AnalysisReport:
    input: str
    semigroup: dict = field(default_factory=dict)
    graph: dict = field(default_factory=dict)
    sigma: dict | None = None
    digraph: dict | None = None
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed and not c.skipped]

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"schema": SCHEMA, "input": self.input}
        if self.semigroup:
            out["semigroup"] = self.semigroup
        if self.digraph is not None:
            out["digraph"] = self.digraph
        out["graph"] = self.graph
        if self.sigma is not None:
            out["sigma"] = self.sigma
        out["checks"] = [c.to_dict() for c in self.checks]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=_jsonable) + "\n"


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    raise TypeError(f"not JSON serialisable: {type(x).__name__}")


def graph_block(g: ZdGraph | None, diam_case=None, girth_case=None) -> dict:
    if g is None:
        return {"vertices": [], "edges": [], "diameter": None, "girth": None,
                "diam_case": None, "girth_case": None}
    return {
        "vertices": list(g.labels[: g.n]),
        "edges": [list(e) for e in g.label_edges()],
        "diameter": metric(g.diameter) if g.n else None,
        "girth": metric(g.girth) if g.n else None,
        "diam_case": diam_case,
        "girth_case": girth_case,
    }


def to_dot(g: ZdGraph, name: str = "gamma") -> str:
    def q(s: str) -> str:
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'
    lines = [f"graph {q(name)} {{"]
    lines.extend(f"  {q(g.labels[i])};" for i in range(g.n))
    lines.extend(f"  {q(a)} -- {q(b)};" for a, b in g.label_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def run_check(name: str, fn: Callable[[], Any]) -> Check:
    """Run ``fn``; a TheoremViolation becomes a failed check, anything returned is discarded."""
    try:
        result = fn()
    except TheoremViolation as exc:
        return Check(name, False, exc.witness, note=str(exc))
    if isinstance(result, Check):
        return result
    return Check(name, True)


# -- semigroup checks -----------------------------------------------------------

def check_partial_order(S: FiniteSemigroup, order: OrderStructure) -> Check:
    L = order.leq
    if not L.diagonal().all():
        return Check("order-axioms", False, note="not reflexive")
    off = np.argwhere(np.triu(L & L.T, 1))
    if len(off):
        a, b = off[0]
        return Check("order-axioms", False, (S.elements[a], S.elements[b]), note="not antisymmetric")
    Li = L.astype(np.int64)
    bad = np.argwhere((Li @ Li > 0) & ~L)
    if len(bad):
        a, b = bad[0]
        return Check("order-axioms", False, (S.elements[a], S.elements[b]), note="not transitive")
    return Check("order-axioms", True)


def check_least_element_is_zero(S: FiniteSemigroup, order: OrderStructure) -> Check:
    least = least_element(order)
    if least != S.zero:
        name = lambda i: None if i is None else S.elements[i]
        return Check("least-element-is-zero", False, {"least": name(least), "zero": name(S.zero)})
    return Check("least-element-is-zero", True)


def check_inverse_involution(S: FiniteSemigroup, inv: tuple[int, ...]) -> Check:
    T = S.table
    for a, b in enumerate(inv):
        if inv[b] != a or T[T[a, b], a] != a or T[T[b, a], b] != b:
            return Check("inverse-involution", False, S.elements[a])
    return Check("inverse-involution", True)


def check_semilattice(S: FiniteSemigroup) -> Check:
    T = S.table
    E = sorted(S.idempotents)
    for e in E:
        for f in E:
            if T[e, f] != T[f, e] or T[e, f] not in S.idempotents:
                return Check("idempotent-semilattice", False, (S.elements[e], S.elements[f]))
    return Check("idempotent-semilattice", True)


def check_adjacency_equivalences(S: FiniteSemigroup, order: OrderStructure, g: ZdGraph) -> Check:
    """Six formulations of adjacency agree on every pair of distinct nonzero elements."""
    z = S.zero
    zero = frozenset([z])
    pos = {v: i for i, v in enumerate(g.vertices)}
    nonzero = [a for a in range(S.order) if a != z]
    left = {a: left_ideal_of_idempotents(S, a) for a in nonzero}
    right = {a: right_ideal_of_idempotents(S, a) for a in nonzero}
    ann = {a: annihilator(S, order, a) for a in nonzero}
    for i, a in enumerate(nonzero):
        for b in nonzero[i + 1:]:
            forms = (
                a in pos and b in pos and g.adjacent(pos[a], pos[b]),
                order.meet(a, b) == zero,
                (left[a] & left[b]) == zero,
                (right[a] & right[b]) == zero,
                a in ann[b],
                b in ann[a],
            )
            if len(set(forms)) != 1:
                return Check("adjacency-equivalences", False, (S.elements[a], S.elements[b]),
                             note=str(forms))
    return Check("adjacency-equivalences", True)


def check_vertex_set(S: FiniteSemigroup, order: OrderStructure, g: ZdGraph) -> Check:
    z = S.zero
    expected = sorted(a for a in range(S.order)
                      if a != z and annihilator(S, order, a) - {z})
    ok = list(g.vertices) == expected
    return Check("vertex-set", ok, None if ok else sorted(S.elements[a] for a in expected))


def _zero_checks(S: FiniteSemigroup, order: OrderStructure, report: AnalysisReport):
    """Zero-divisor graph of a semigroup with zero: build, measure, classify."""
    checks = report.checks
    try:
        g = build_gamma(S, order)
    except TheoremViolation as exc:
        checks.append(Check(exc.check, False, exc.witness, note=str(exc)))
        report.graph = graph_block(None)
        return None
    checks.append(check_adjacency_equivalences(S, order, g))
    checks.append(check_vertex_set(S, order, g))
    checks.append(run_check("minimal-elements", lambda: minimal_nonzero(S, order)))
    diam_case = girth_case = None
    if g.n >= 2:
        checks.append(Check("connected", g.connected, note=f"diameter={metric(g.diameter)}"))
        checks.append(Check("diameter-range", g.diameter in (1, 2, 3),
                            note=f"diameter={metric(g.diameter)}"))
        checks.append(Check("girth-range", g.girth in (3, 4, math.inf),
                            note=f"girth={metric(g.girth)}"))
        try:
            dc = classify_diameter(S, order, g)
            diam_case = dc.case
            checks.append(Check("diameter-classification", True, dc.witness,
                                note=f"case {dc.case}"))
        except TheoremViolation as exc:
            checks.append(Check("diameter-classification", False, exc.witness, note=str(exc)))
        try:
            gc = classify_girth(S, g)
            girth_case = gc.case
            checks.append(Check("girth-classification", True, gc.witness, note=gc.case))
        except TheoremViolation as exc:
            checks.append(Check("girth-classification", False, exc.witness, note=str(exc)))
    elif g.n == 1:
        checks.append(Check("classification", False, skipped=True,
                            note="single-vertex graph; classification skipped"))
    report.graph = graph_block(g, diam_case, girth_case)
    return g


def analyze_semigroup(S: FiniteSemigroup, name: str = "<semigroup>",
                      leastness_max_order: int = LEASTNESS_MAX_ORDER) -> tuple[AnalysisReport, ZdGraph | None]:
    """Run every applicable check on S.

    Raises AxiomError when S is not associative or not inverse. Returns the
    report and the zero-divisor graph (of S, or of S with a zero adjoined).
    """
    bad = check_associativity(S)
    if bad is not None:
        i, j, k = (S.elements[x] for x in bad)
        raise AxiomError(f"not associative: ({i}*{j})*{k} != {i}*({j}*{k})")
    v = verify_inverse(S)
    if not v.is_inverse:
        raise AxiomError(f"not an inverse semigroup: {v.witness}")
    report = AnalysisReport(name)
    report.semigroup = {
        "order": S.order,
        "elements": list(S.elements),
        "idempotents": [S.elements[e] for e in sorted(S.idempotents)],
        "zero": None if S.zero is None else S.elements[S.zero],
    }
    try:
        order = natural_order(S, v)
    except TheoremViolation as exc:
        report.checks.append(Check(exc.check, False, exc.witness, note=str(exc)))
        return report, None
    report.checks.append(Check("order-left-right", True))
    report.checks += [check_partial_order(S, order), check_least_element_is_zero(S, order),
                      check_inverse_involution(S, v.inverse_map), check_semilattice(S)]
    if S.has_proper_zero:
        g = _zero_checks(S, order, report)
        return report, g

    sp = sigma(S, v)
    S0, g0 = gamma_with_zero(S)
    order0 = natural_order(S0)
    sub = AnalysisReport(name)
    g0 = _zero_checks(S0, order0, sub) or g0
    report.graph = sub.graph
    report.checks += sub.checks
    block: dict[str, Any] = {
        "num_classes": sp.num_classes,
        "class_sizes": [len(c) for c in sp.classes],
        "classes": [[S.elements[a] for a in sorted(c)] for c in sp.classes],
        "is_identity": sp.is_identity,
        "predicted_diameter": None,
        "predicted_girth": None,
    }
    checks = [Check("sigma-congruence", True)]
    if S.order <= leastness_max_order:
        checks.append(check_leastness(S, sp))
    checks.append(check_sigma_adjacency(S, sp, S0, g0))
    checks.append(run_check("bipartite-union", lambda: verify_structure_theorem(S, sp, g0)))
    try:
        block["predicted_diameter"] = metric(predict_diameter_sigma(S, sp, g0))
        checks.append(Check("sigma-diameter", True))
    except TheoremViolation as exc:
        checks.append(Check("sigma-diameter", False, note=str(exc)))
    if sp.num_classes >= 2:
        try:
            block["predicted_girth"] = metric(predict_girth_sigma(S, sp, g0))
            checks.append(Check("sigma-girth", True))
        except TheoremViolation as exc:
            checks.append(Check("sigma-girth", False, note=str(exc)))
    checks.append(check_group_formulations(S, sp))
    block["checks"] = [c.to_dict() for c in checks]
    report.sigma = block
    report.checks += checks
    return report, g0


# -- digraphs ---------------------------------------------------------------------

def check_table_consistency(G: ig.DirectedGraph, g: ZdGraph) -> Check:
    """For finite I(G): Gamma from the Cayley table equals Gamma from the prefix test."""
    S, _ = ig.ig_to_semigroup(G)
    v = verify_inverse(S)
    if not v.is_inverse or check_associativity(S) is not None:
        return Check("ig-table-consistency", False, note="Cayley table is not an inverse semigroup")
    order = natural_order(S, v)
    gt = build_gamma(S, order)
    same_vertices = sorted(gt.labels) == sorted(g.labels[: g.n])
    same_edges = {frozenset(e) for e in gt.label_edges()} == {frozenset(e) for e in g.label_edges()}
    ok = same_vertices and same_edges
    return Check("ig-table-consistency", ok,
                 note=None if ok else f"vertices_equal={same_vertices} edges_equal={same_edges}")


def analyze_digraph(G: ig.DirectedGraph, max_len: int = ig.DEFAULT_MAX_LEN,
                    name: str = "<digraph>", associativity: bool = True) -> tuple[AnalysisReport, ZdGraph]:
    if G.is_trivial:
        raise AxiomError("I(G) has no zero-divisors (trivial graph)")
    elems, exact = ig.ig_elements(G, max_len)
    report = AnalysisReport(name)
    report.digraph = {
        "vertices": list(G.vertices),
        "edges": [list(e) for e in G.edges],
        "null": ig.is_null_graph(G),
        "acyclic": G.is_acyclic,
        "max_len": max_len,
        "exact": exact,
        "elements": len(elems),
    }
    checks = report.checks
    try:
        g = ig.build_gamma_ig(G, max_len)
        checks.append(Check("neighbour-witness", True))
    except TheoremViolation as exc:
        checks.append(Check(exc.check, False, exc.witness, note=str(exc)))
        raise
    checks.append(ig.check_adjacency_oracle(G, max_len, elems))
    checks.append(ig.check_path_clique(elems))
    checks.append(ig.check_vertices(g))
    checks.append(ig.check_inverse_laws(elems))
    if associativity:
        checks.append(ig.check_associativity(elems))
    pred = ig.classify_ig(G)
    computed = (g.diameter, g.girth)
    report.digraph["predicted"] = [metric(x) for x in pred]
    report.digraph["truncated"] = not exact
    if exact:
        checks.extend(ig.ig_theorem_checks(G, g, elems))
        checks.append(check_table_consistency(G, g))
    else:
        checks.append(Check("ig-truncated-metrics", pred == computed, skipped=True,
                            note=f"truncated at max_len={max_len}: computed "
                                 f"({metric(computed[0])}, {metric(computed[1])})"))
    report.graph = graph_block(g)
    return report, g
