"""Graph inverse semigroups I(G) of directed graphs, enumerated up to a path-length bound.

Nonzero elements are pairs (p, q) of paths with a common range, standing for p q^-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from .errors import AxiomError, Check, ParseError, TheoremViolation
from .semigroup import FiniteSemigroup
from .zdgraph import ZdGraph

DEFAULT_MAX_LEN = 4


class Edge(NamedTuple):
    name: str
    source: str
    range: str


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise AxiomError("duplicate vertex name")
        vs = set(self.vertices)
        names = set()
        for e in self.edges:
            if e.name in names:
                raise AxiomError(f"duplicate edge name {e.name!r}")
            if e.name in vs:
                raise AxiomError(f"edge name {e.name!r} clashes with a vertex")
            names.add(e.name)
            for end in (e.source, e.range):
                if end not in vs:
                    raise AxiomError(f"edge {e.name!r} references unknown vertex {end!r}")

    @cached_property
    def edge_by_name(self) -> dict[str, Edge]:
        return {e.name: e for e in self.edges}

    @cached_property
    def out_edges(self) -> dict[str, tuple[Edge, ...]]:
        return {v: tuple(e for e in self.edges if e.source == v) for v in self.vertices}

    @property
    def is_trivial(self) -> bool:
        return len(self.vertices) == 1 and not self.edges

    @cached_property
    def longest_path(self) -> float:
        """Length of a longest path, ``inf`` if there is a directed cycle."""
        order = []
        indeg = {v: 0 for v in self.vertices}
        for e in self.edges:
            indeg[e.range] += 1
        ready = [v for v in self.vertices if indeg[v] == 0]
        while ready:
            v = ready.pop()
            order.append(v)
            for e in self.out_edges[v]:
                indeg[e.range] -= 1
                if indeg[e.range] == 0:
                    ready.append(e.range)
        if len(order) < len(self.vertices):
            return math.inf
        best = {v: 0 for v in self.vertices}
        for v in reversed(order):
            for e in self.out_edges[v]:
                best[v] = max(best[v], best[e.range] + 1)
        return max(best.values(), default=0)

    @property
    def is_acyclic(self) -> bool:
        return not math.isinf(self.longest_path)


def parse_graph(text: str) -> DirectedGraph:
    """Parse the ``.dgf`` format. ``;`` may be used in place of a newline."""
    vertices = None
    edges = []
    in_edges = False
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        for part in raw.split("#", 1)[0].split(";"):
            if part.strip():
                lines.append((lineno, part.strip()))
    for lineno, line in lines:
        key, sep, rest = line.partition(":")
        key = key.strip()
        if key.lower() == "vertices" and sep:
            if vertices is not None:
                raise ParseError("duplicate 'vertices' line", lineno)
            vertices = rest.split()
            in_edges = False
        elif key.lower() == "edges" and sep:
            in_edges = True
            if rest.strip():
                edges.append(_parse_edge(rest.strip(), lineno))
        elif in_edges:
            edges.append(_parse_edge(line, lineno))
        else:
            raise ParseError(f"unexpected line {line!r}", lineno)
    if not vertices:
        raise ParseError("missing or empty 'vertices' line")
    vs = set(vertices)
    seen = set()
    for lineno, e in edges:
        if e.name in seen:
            raise ParseError(f"duplicate edge name {e.name!r}", lineno)
        seen.add(e.name)
        for end in (e.source, e.range):
            if end not in vs:
                raise ParseError(f"edge {e.name!r} references undeclared vertex {end!r}", lineno)
    try:
        return DirectedGraph(tuple(vertices), tuple(e for _, e in edges))
    except AxiomError as exc:
        raise ParseError(str(exc)) from exc


def _parse_edge(line: str, lineno: int) -> tuple[int, Edge]:
    name, sep, rest = line.partition(":")
    src, arrow, dst = rest.partition("->")
    name, src, dst = name.strip(), src.strip(), dst.strip()
    if not sep or not arrow or not name or len(src.split()) != 1 or len(dst.split()) != 1:
        raise ParseError(f"expected 'name: u -> v', got {line!r}", lineno)
    return lineno, Edge(name, src, dst)


def format_graph(G: DirectedGraph, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append("vertices: " + " ".join(G.vertices))
    lines.append("edges:")
    lines.extend(f"{e.name}: {e.source} -> {e.range}" for e in G.edges)
    return "\n".join(lines) + "\n"


def is_null_graph(G: DirectedGraph) -> bool:
    return not G.edges


# -- paths -----------------------------------------------------------------

@dataclass(frozen=True)
class GPath:
    """A directed path; an empty path is a vertex, with ``source == range``."""

    source: str
    range: str
    edges: tuple[str, ...] = ()

    @classmethod
    def vertex(cls, v: str) -> "GPath":
        return cls(v, v, ())

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_empty(self) -> bool:
        return not self.edges

    def concat(self, other: "GPath") -> "GPath":
        if self.range != other.source:
            raise ValueError(f"cannot compose {self} with {other}")
        return GPath(self.source, other.range, self.edges + other.edges)

    def strip_prefix(self, prefix: "GPath") -> "GPath | None":
        """The path t with ``self == prefix.concat(t)``, or None."""
        k = len(prefix.edges)
        if prefix.source != self.source or self.edges[:k] != prefix.edges:
            return None
        return GPath(prefix.range, self.range, self.edges[k:])

    def label(self) -> str:
        return "".join(self.edges) if self.edges else self.source


class PathEnumeration(NamedTuple):
    paths: tuple[GPath, ...]
    exact: bool


def enumerate_paths(G: DirectedGraph, max_len: int) -> PathEnumeration:
    """All paths of length <= max_len, one empty path per vertex first, then by length."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    layer = [GPath.vertex(v) for v in G.vertices]
    out = list(layer)
    for _ in range(max_len):
        nxt = []
        for p in layer:
            for e in G.out_edges[p.range]:
                nxt.append(GPath(p.source, e.range, p.edges + (e.name,)))
        if not nxt:
            break
        out.extend(nxt)
        layer = nxt
    return PathEnumeration(tuple(out), G.is_acyclic and max_len >= G.longest_path)


def path_of_edges(G: DirectedGraph, names: Sequence[str]) -> GPath:
    p = None
    for name in names:
        e = G.edge_by_name[name]
        step = GPath(e.source, e.range, (name,))
        p = step if p is None else p.concat(step)
    if p is None:
        raise ValueError("use GPath.vertex for empty paths")
    return p


# -- elements ---------------------------------------------------------------

@dataclass(frozen=True)
class IGElement:
    """p q^-1; the zero has ``p is q is None``."""

    p: GPath | None = None
    q: GPath | None = None

    def __post_init__(self):
        if (self.p is None) != (self.q is None):
            raise ValueError("both paths or neither")
        if self.p is not None and self.p.range != self.q.range:
            raise ValueError(f"paths {self.p} and {self.q} have different ranges")

    @property
    def is_zero(self) -> bool:
        return self.p is None

    @property
    def height(self) -> int:
        return 0 if self.p is None else max(len(self.p), len(self.q))

    @property
    def is_idempotent(self) -> bool:
        return self.p == self.q

    def label(self) -> str:
        if self.p is None:
            return "0"
        p, q = self.p, self.q
        if p.is_empty and q.is_empty:
            return p.source
        left = "" if p.is_empty else p.label()
        if q.is_empty:
            return left
        inv = q.label() if len(q) == 1 else f"({q.label()})"
        return f"{left}{inv}^-1"

    def __str__(self):
        return self.label()


ZERO = IGElement()


def element_of_path(p: GPath) -> IGElement:
    return IGElement(p, GPath.vertex(p.range))


def idempotent_of(p: GPath) -> IGElement:
    return IGElement(p, p)


class ElementEnumeration(NamedTuple):
    elements: tuple[IGElement, ...]
    exact: bool


def ig_elements(G: DirectedGraph, max_len: int) -> ElementEnumeration:
    """Zero followed by every p q^-1 with p, q enumerated and r(p) = r(q)."""
    paths, exact = enumerate_paths(G, max_len)
    by_range: dict[str, list[GPath]] = {}
    for q in paths:
        by_range.setdefault(q.range, []).append(q)
    elems = [ZERO]
    for p in paths:
        elems.extend(IGElement(p, q) for q in by_range[p.range])
    return ElementEnumeration(tuple(elems), exact)


def count_elements(G: DirectedGraph, max_len: int) -> int:
    """Size of ``ig_elements(G, max_len).elements`` without building it."""
    layer = {v: 1 for v in G.vertices}
    ending = dict(layer)
    for _ in range(max_len):
        nxt = {v: 0 for v in G.vertices}
        for e in G.edges:
            nxt[e.range] += layer[e.source]
        if not any(nxt.values()):
            break
        for v, c in nxt.items():
            ending[v] += c
        layer = nxt
    return 1 + sum(c * c for c in ending.values())


def ig_multiply(x: IGElement, y: IGElement) -> IGElement:
    """(p q^-1)(r s^-1) = p t s^-1 if r = q t, p (s t)^-1 if q = r t, else 0."""
    if x.is_zero or y.is_zero:
        return ZERO
    p, q, r, s = x.p, x.q, y.p, y.q
    t = r.strip_prefix(q)
    if t is not None:
        return IGElement(p.concat(t), s)
    t = q.strip_prefix(r)
    if t is not None:
        return IGElement(p, s.concat(t))
    return ZERO


def ig_inverse(x: IGElement) -> IGElement:
    return x if x.is_zero else IGElement(x.q, x.p)


def idempotent_translate(G: DirectedGraph, max_len: int, x: IGElement,
                         alpha_len: int | None = None) -> frozenset[IGElement]:
    """{a a^-1 x : a a path of length <= alpha_len} with 0: the down-set of x, truncated."""
    if alpha_len is None:
        alpha_len = max_len
    out = {ZERO}
    for a in enumerate_paths(G, alpha_len).paths:
        out.add(ig_multiply(idempotent_of(a), x))
    return frozenset(out)


def ig_adjacent(x: IGElement, y: IGElement) -> bool:
    """Adjacency in Gamma(I(G)) by a prefix test.

    p q^-1 and r s^-1 are non-adjacent iff one pair extends the other by a
    common path t: (p, q) = (r t, s t) or (r, s) = (p t, q t).
    """
    if x.is_zero or y.is_zero:
        raise ValueError("adjacency is defined on nonzero elements")
    if x == y:
        raise ValueError("adjacency is defined on distinct elements")
    for (a, b), (c, d) in (((x.p, x.q), (y.p, y.q)), ((y.p, y.q), (x.p, x.q))):
        t = c.strip_prefix(a)
        if t is not None and d.strip_prefix(b) == t:
            return False
    return True


def neighbour_witness(G: DirectedGraph, x: IGElement) -> IGElement:
    """A nonzero element adjacent to x, of height at most ``x.height + 1``."""
    p, q = x.p, x.q
    if not q.is_empty:
        return element_of_path(p)
    out = G.out_edges[p.range]
    if out:
        e = out[0]
        return element_of_path(p.concat(GPath(e.source, e.range, (e.name,))))
    if not p.is_empty:
        return element_of_path(GPath.vertex(p.source))
    others = [v for v in G.vertices if v != p.source]
    if not others:
        raise AxiomError("I(G) has no zero-divisors (trivial graph)")
    return element_of_path(GPath.vertex(others[0]))


def build_gamma_ig(G: DirectedGraph, max_len: int = DEFAULT_MAX_LEN) -> ZdGraph:
    """Gamma(I(G)) on the elements of height <= max_len.

    Elements of height max_len + 1 are kept as extra vertices so that distances
    can route through them; they are dropped when the enumeration is exact.
    Checks that every enumerated element has a neighbour.
    """
    if G.is_trivial:
        raise AxiomError("I(G) has no zero-divisors (trivial graph)")
    core, exact = ig_elements(G, max_len)
    core = core[1:]
    if exact:
        pool = core
    else:
        extra = [x for x in ig_elements(G, max_len + 1).elements[1:] if x.height > max_len]
        pool = core + tuple(extra)
    m = len(pool)
    adj = np.zeros((m, m), dtype=bool)
    for i in range(m):
        for j in range(i + 1, m):
            if ig_adjacent(pool[i], pool[j]):
                adj[i, j] = adj[j, i] = True
    adj.setflags(write=False)
    pos = {x: i for i, x in enumerate(pool)}
    for i, x in enumerate(core):
        w = neighbour_witness(G, x)
        if w not in pos or not adj[i, pos[w]]:
            raise TheoremViolation("all-nonzero-are-vertices",
                                   f"witness {w.label()} is not adjacent to {x.label()}", x.label())
    return ZdGraph(pool, tuple(x.label() for x in pool), adj, core=len(core),
                   truncated=not exact, meta={"max_len": max_len, "exact": exact})


def classify_ig(G: DirectedGraph) -> tuple[int, float]:
    """(diameter, girth) of Gamma(I(G)) predicted from |V(G)| and |E(G)|."""
    if G.is_trivial:
        raise AxiomError("I(G) has no zero-divisors (trivial graph)")
    if G.edges:
        return (2, 3)
    if len(G.vertices) == 2:
        return (1, math.inf)
    return (1, 3)


def ig_to_semigroup(G: DirectedGraph) -> tuple[FiniteSemigroup, tuple[IGElement, ...]]:
    """Cayley table of I(G) for an acyclic graph (where I(G) is finite)."""
    if not G.is_acyclic:
        raise AxiomError("I(G) is infinite for a graph with a directed cycle")
    elems, _ = ig_elements(G, int(G.longest_path))
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[ig_multiply(x, y)] for y in elems] for x in elems]
    return FiniteSemigroup.from_table([x.label() for x in elems], table, zero=0), elems


# -- checks -----------------------------------------------------------------

def product_table(elems: Sequence[IGElement]) -> np.ndarray:
    """Index of each product in ``elems``, or -1 when the product is not enumerated."""
    pos = {x: i for i, x in enumerate(elems)}
    m = len(elems)
    P = np.empty((m, m), dtype=np.int64)
    for i, x in enumerate(elems):
        P[i] = [pos.get(ig_multiply(x, y), -1) for y in elems]
    return P


def check_associativity(elems: Sequence[IGElement], P: np.ndarray | None = None) -> Check:
    """(xy)z = x(yz) on all triples whose partial and full products are enumerated."""
    if P is None:
        P = product_table(elems)
    m = len(elems)
    Pp = np.vstack([P, np.full((1, m), -1)])
    Pp = np.hstack([Pp, np.full((m + 1, 1), -1)])     # row/col -1 maps to overflow
    tested = 0
    for i in range(m):
        ij = P[i]                                     # over j
        lhs = Pp[ij, :m]                              # lhs[j, k] = (ij)k
        rhs = Pp[i][P]                                # rhs[j, k] = i(jk)
        ok = (ij[:, None] >= 0) & (P >= 0) & (lhs >= 0) & (rhs >= 0)
        tested += int(ok.sum())
        bad = np.argwhere(ok & (lhs != rhs))
        if len(bad):
            j, k = bad[0]
            return Check("ig-associativity", False,
                         (elems[i].label(), elems[j].label(), elems[k].label()))
    return Check("ig-associativity", True, note=f"{tested} triples")


def check_inverse_laws(elems: Sequence[IGElement]) -> Check:
    for x in elems:
        xi = ig_inverse(x)
        if ig_multiply(ig_multiply(x, xi), x) != x or ig_inverse(xi) != x:
            return Check("ig-inverse-laws", False, x.label())
        xx = ig_multiply(x, x)
        if (xx == x) != (x.is_zero or x.is_idempotent):
            return Check("ig-inverse-laws", False, x.label(), note="idempotent set mismatch")
    return Check("ig-inverse-laws", True)


def oracle_alpha_len(G: DirectedGraph, max_len: int) -> int:
    if G.is_acyclic:
        return int(G.longest_path)
    return 2 * max_len


def check_adjacency_oracle(G: DirectedGraph, max_len: int,
                           elems: Sequence[IGElement] | None = None) -> Check:
    """Prefix-test adjacency against intersections of brute-force idempotent translates."""
    if elems is None:
        elems = ig_elements(G, max_len).elements
    nonzero = [x for x in elems if not x.is_zero]
    alpha = oracle_alpha_len(G, max_len)
    idems = [idempotent_of(a) for a in enumerate_paths(G, alpha).paths]
    translates = [frozenset({ZERO, *(ig_multiply(e, x) for e in idems)}) for x in nonzero]
    zero = frozenset([ZERO])
    pairs = 0
    for i, x in enumerate(nonzero):
        for j in range(i + 1, len(nonzero)):
            y = nonzero[j]
            pairs += 1
            if ig_adjacent(x, y) != ((translates[i] & translates[j]) == zero):
                return Check("ig-adjacency-oracle", False, (x.label(), y.label()))
    return Check("ig-adjacency-oracle", True, note=f"{pairs} pairs, alpha_len={alpha}")


def check_path_clique(elems: Sequence[IGElement]) -> Check:
    """Paths and inverse paths are pairwise adjacent."""
    pathlike = [x for x in elems if not x.is_zero and (x.p.is_empty or x.q.is_empty)]
    for i, x in enumerate(pathlike):
        for y in pathlike[i + 1:]:
            if not ig_adjacent(x, y):
                return Check("path-clique", False, (x.label(), y.label()))
    return Check("path-clique", True)


def check_vertices(g: ZdGraph) -> Check:
    """Every enumerated nonzero element has a neighbour."""
    deg = g.adj[: g.n].sum(axis=1)
    lonely = np.flatnonzero(deg == 0)
    if len(lonely):
        return Check("all-nonzero-are-vertices", False, g.labels[int(lonely[0])])
    return Check("all-nonzero-are-vertices", True)


def ig_theorem_checks(G: DirectedGraph, g: ZdGraph, elems: Sequence[IGElement]) -> list[Check]:
    """Diameter and girth statements for an exact enumeration."""
    checks = []
    diam, gr = g.diameter, g.girth
    nv, ne = len(G.vertices), len(G.edges)
    null = not ne
    checks.append(Check("ig-diameter-range", diam in (1, 2), note=f"diameter={diam}"))
    checks.append(Check("ig-girth-range", gr in (3, math.inf), note=f"girth={gr}"))

    nonzero = [x for x in elems if not x.is_zero]
    alpha = int(G.longest_path)
    down = {x: idempotent_translate(G, alpha, x) for x in nonzero}
    all_minimal = all(down[x] == {x, ZERO} for x in nonzero)
    comparable = next(((x, y) for x in nonzero for y in nonzero if x != y and x in down[y]), None)
    checks.append(Check("ig-diameter-one", (diam == 1) == all_minimal == (null and nv >= 2),
                        note=f"diameter={diam} all_minimal={all_minimal} null={null}"))
    checks.append(Check("ig-diameter-two", (diam == 2) == (not null) == (comparable is not None),
                        None if comparable is None else (comparable[0].label(), comparable[1].label()),
                        note=f"diameter={diam} null={null}"))
    checks.append(Check("ig-girth-infinite", (gr == math.inf) == (nv == 2 and ne == 0),
                        note=f"girth={gr}"))
    checks.append(Check("ig-girth-three", (gr == 3) == (ne != 0 or (nv >= 3 and ne == 0)),
                        note=f"girth={gr}"))
    pred = classify_ig(G)
    checks.append(Check("ig-metric-prediction", pred == (diam, gr),
                        note=f"predicted={_fmt(pred)} computed={_fmt((diam, gr))}"))
    return checks


def _fmt(pair) -> str:
    return "(" + ", ".join("inf" if v == math.inf else str(v) for v in pair) + ")"
