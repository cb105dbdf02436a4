"""Named semigroups, digraphs and seeded corpora used by the CLI and the test-suite."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import AxiomError
from .graph_inverse import DirectedGraph, Edge, count_elements
from .semigroup import FiniteSemigroup, restrict

FAMILIES = ("i2-closures", "i3-closures", "clifford", "groups", "random-digraphs")


def b2() -> FiniteSemigroup:
    """The five-element Brandt semigroup with a^2 = b^2 = 0, ab = e, ba = f."""
    names = ["0", "e", "f", "a", "b"]
    rows = [
        "0 0 0 0 0",
        "0 e 0 a 0",
        "0 0 f 0 b",
        "0 0 a 0 e",
        "0 b 0 f 0",
    ]
    pos = {x: i for i, x in enumerate(names)}
    return FiniteSemigroup.from_table(names, [[pos[c] for c in r.split()] for r in rows], zero=0)


# -- partial injections -------------------------------------------------------

def partial_injections(n: int) -> list[tuple[tuple[int, int], ...]]:
    """Partial injections of {1..n} as sorted (x, image) pairs, ordered by rank then lexicographically."""
    pts = range(1, n + 1)
    out = []
    for k in range(n + 1):
        maps = []
        for dom in itertools.combinations(pts, k):
            for img in itertools.permutations(pts, k):
                maps.append(tuple(zip(dom, img)))
        out.extend(sorted(maps))
    return out


def injection_name(m: tuple[tuple[int, int], ...]) -> str:
    return "[" + ",".join(f"{x}>{y}" for x, y in m) + "]"


def compose(f, g):
    """Apply f then g (maps act on the right)."""
    gd = dict(g)
    return tuple((x, gd[y]) for x, y in f if y in gd)


def symmetric_inverse_monoid(n: int) -> FiniteSemigroup:
    if not 0 <= n <= 3:
        raise AxiomError("symmetric inverse monoids are generated for n <= 3")
    maps = partial_injections(n)
    pos = {m: i for i, m in enumerate(maps)}
    table = [[pos[compose(f, g)] for g in maps] for f in maps]
    return FiniteSemigroup.from_table([injection_name(m) for m in maps], table, zero=pos[()])


def inverse_closure(n: int, generators: Sequence[int]) -> list[int]:
    """Indices (into ``partial_injections(n)``) of the inverse subsemigroup generated, with the empty map."""
    maps = partial_injections(n)
    pos = {m: i for i, m in enumerate(maps)}
    elems = {pos[()]}
    for g in generators:
        m = maps[g]
        elems.add(g)
        elems.add(pos[tuple(sorted((y, x) for x, y in m))])
    frontier = set(elems)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(elems):
                for c in (pos[compose(maps[a], maps[b])], pos[compose(maps[b], maps[a])]):
                    if c not in elems:
                        new.add(c)
        elems |= new
        frontier = new
    return sorted(elems)


def random_closure(n: int, rng: random.Random, max_generators: int = 4) -> FiniteSemigroup:
    maps = partial_injections(n)
    k = rng.randint(1, max_generators)
    gens = [rng.randrange(1, len(maps)) for _ in range(k)]
    return restrict(symmetric_inverse_monoid(n), inverse_closure(n, gens))


# -- groups and Clifford semigroups -------------------------------------------

def cyclic_group(n: int) -> FiniteSemigroup:
    if n < 1:
        raise AxiomError("cyclic group order must be positive")
    names = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    return FiniteSemigroup.from_table(names[:n], [[(i + j) % n for j in range(n)] for i in range(n)])


def symmetric_group_s3() -> FiniteSemigroup:
    perms = sorted(itertools.permutations(range(3)))
    names = {(0, 1, 2): "id", (1, 0, 2): "(12)", (2, 1, 0): "(13)", (0, 2, 1): "(23)",
             (1, 2, 0): "(123)", (2, 0, 1): "(132)"}
    pos = {p: i for i, p in enumerate(perms)}
    # right action: x(pq) = (xp)q
    table = [[pos[tuple(q[p[x]] for x in range(3))] for q in perms] for p in perms]
    return FiniteSemigroup.from_table([names[p] for p in perms], table)


def valid_homs(m: int, n: int) -> list[int]:
    """Multipliers c with k -> c k mod n a homomorphism Z_m -> Z_n."""
    return [c for c in range(n) if (m * c) % n == 0]


def clifford_chain(groups: Sequence[int], homs: Sequence[int]) -> FiniteSemigroup:
    """Clifford semigroup over the chain e0 > e1 > ... with cyclic group Z_{groups[i]} at level i.

    ``homs[i]`` is the multiplier of the linking map Z_{groups[i]} -> Z_{groups[i+1]}.
    Element k of level i is named ``i:k``.
    """
    groups = list(groups)
    if not groups or any(g < 1 for g in groups):
        raise AxiomError("need at least one group of positive order")
    if len(homs) != len(groups) - 1:
        raise AxiomError("need one linking homomorphism per adjacent pair of levels")
    for i, c in enumerate(homs):
        if c not in valid_homs(groups[i], groups[i + 1]):
            raise AxiomError(f"k -> {c}k is not a homomorphism Z{groups[i]} -> Z{groups[i + 1]}")

    def push(level: int, k: int, target: int) -> int:
        for i in range(level, target):
            k = (homs[i] * k) % groups[i + 1]
        return k

    elems = [(i, k) for i, g in enumerate(groups) for k in range(g)]
    pos = {x: j for j, x in enumerate(elems)}
    table = []
    for i, a in elems:
        row = []
        for j, b in elems:
            low = max(i, j)
            row.append(pos[(low, (push(i, a, low) + push(j, b, low)) % groups[low])])
        table.append(row)
    return FiniteSemigroup.from_table([f"{i}:{k}" for i, k in elems], table)


def all_clifford_chains(max_levels: int = 3, max_group: int = 3,
                        zero_free: bool = True) -> Iterator[tuple[str, FiniteSemigroup]]:
    for levels in range(1, max_levels + 1):
        for groups in itertools.product(range(1, max_group + 1), repeat=levels):
            if zero_free and groups[-1] == 1:
                continue
            choices = [valid_homs(groups[i], groups[i + 1]) for i in range(levels - 1)]
            for homs in itertools.product(*choices):
                name = "clifford-" + ",".join(map(str, groups)) + "/" + ",".join(map(str, homs))
                yield name, clifford_chain(groups, homs)


def group_family() -> list[tuple[str, FiniteSemigroup]]:
    return [(f"Z{n}", cyclic_group(n)) for n in range(1, 7)] + [("S3", symmetric_group_s3())]


# -- directed graphs ----------------------------------------------------------

def example_digraph(name: str) -> DirectedGraph:
    """The three small digraphs: two isolated vertices, three isolated vertices, one edge."""
    if name == "g1":
        return DirectedGraph(("u1", "u2"))
    if name == "g2":
        return DirectedGraph(("v1", "v2", "v3"))
    if name == "g3":
        return DirectedGraph(("w1", "w2"), (Edge("e", "w1", "w2"),))
    raise KeyError(f"unknown example graph {name!r} (expected g1, g2 or g3)")


def loop_graph() -> DirectedGraph:
    return DirectedGraph(("v",), (Edge("l", "v", "v"),))


def random_digraph(rng: random.Random, max_vertices: int = 5, max_edges: int = 6) -> DirectedGraph:
    while True:
        nv = rng.randint(1, max_vertices)
        ne = rng.randint(0, max_edges)
        if nv == 1 and ne == 0:
            continue
        vs = tuple(f"v{i}" for i in range(1, nv + 1))
        es = tuple(Edge(f"e{j}", rng.choice(vs), rng.choice(vs)) for j in range(1, ne + 1))
        return DirectedGraph(vs, es)


# -- corpora ---------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusSpec:
    family: str
    seed: int = 0
    count: int = 100
    max_len: int = 3
    max_elements: int = 300
    max_vertices: int = 5
    max_edges: int = 6

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")


def corpus(spec: CorpusSpec) -> Iterator[tuple[str, object]]:
    """Yield (name, instance) pairs; identical specs give identical corpora.

    Semigroup families yield FiniteSemigroup, ``random-digraphs`` yields DirectedGraph.
    ``clifford`` and ``groups`` are exhaustive lists and ignore seed and count.
    """
    rng = random.Random(spec.seed)
    if spec.family in ("i2-closures", "i3-closures"):
        n = 2 if spec.family == "i2-closures" else 3
        for k in range(spec.count):
            yield f"{spec.family}#{k}", random_closure(n, rng)
    elif spec.family == "clifford":
        yield from all_clifford_chains()
    elif spec.family == "groups":
        yield from group_family()
    else:
        k = 0
        while k < spec.count:
            G = random_digraph(rng, spec.max_vertices, spec.max_edges)
            # reject graphs whose truncated I(G) would be too large to check exhaustively
            if count_elements(G, spec.max_len + 1) > spec.max_elements:
                continue
            yield f"digraph#{k}", G
            k += 1
