"""Finite semigroups given by Cayley tables, inverse-semigroup tests and the natural partial order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import AxiomError, ParseError, TheoremViolation

DEFAULT_MAX_ORDER = 512
ZERO_NAME = "0"


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """A finite semigroup on ``elements`` with ``table[i, j]`` the index of ``elements[i] * elements[j]``.

    Build instances with :meth:`from_table`, which computes the zero and the idempotents.
    """

    elements: tuple[str, ...]
    table: np.ndarray
    zero: int | None
    idempotents: frozenset[int]

    @classmethod
    def from_table(cls, elements: Sequence[str], table, zero: int | None = None,
                   max_order: int = DEFAULT_MAX_ORDER) -> "FiniteSemigroup":
        elements = tuple(elements)
        n = len(elements)
        if n == 0:
            raise AxiomError("a semigroup needs at least one element")
        if n > max_order:
            raise AxiomError(f"order {n} exceeds the supported maximum {max_order}")
        if len(set(elements)) != n:
            raise AxiomError("duplicate element names")
        arr = np.array(table, dtype=np.int64)
        if arr.shape != (n, n):
            raise AxiomError(f"table shape {arr.shape} does not match {n} elements")
        if arr.min() < 0 or arr.max() >= n:
            raise AxiomError("table entry out of range")
        arr.setflags(write=False)
        idem = frozenset(int(i) for i in np.flatnonzero(arr[np.arange(n), np.arange(n)] == np.arange(n)))
        S = cls(elements, arr, None, idem)
        found = find_zero(S)
        if zero is not None and zero != found:
            raise AxiomError(f"declared zero {elements[zero]!r} is not absorbing")
        object.__setattr__(S, "zero", found)
        return S

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def has_proper_zero(self) -> bool:
        """A zero in a semigroup of at least two elements.

        A one-element semigroup reports its element as ``zero`` but is treated
        as zero-free (a trivial group) when adjoining a zero or computing sigma.
        """
        return self.zero is not None and self.order >= 2

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(name) from None

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.elements, self.table.tobytes()))

    def __repr__(self):
        z = None if self.zero is None else self.elements[self.zero]
        return f"FiniteSemigroup(order={self.order}, zero={z!r})"


@dataclass(frozen=True)
class InverseVerdict:
    is_inverse: bool
    witness: str | None = None
    inverse_map: tuple[int, ...] | None = None


@dataclass(frozen=True, eq=False)
class OrderStructure:
    """The natural partial order: ``leq[i, j]`` iff element i <= element j."""

    leq: np.ndarray
    down_sets: tuple[frozenset[int], ...]

    def meet(self, a: int, b: int) -> frozenset[int]:
        return self.down_sets[a] & self.down_sets[b]


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_semigroup(text: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteSemigroup:
    """Parse the ``.sgp`` text format.

    Associativity is not checked here; see :func:`check_associativity`.
    """
    elements: list[str] | None = None
    zero_name: str | None = None
    zero_line = None
    rows: list[tuple[int, list[str]]] = []
    in_table = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if in_table:
            rows.append((lineno, line.split()))
            continue
        key, sep, rest = line.partition(":")
        key = key.strip().lower()
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", lineno)
        if key == "elements":
            if elements is not None:
                raise ParseError("duplicate 'elements' line", lineno)
            elements = rest.split()
            if not elements:
                raise ParseError("empty element list", lineno)
            if len(set(elements)) != len(elements):
                raise ParseError("duplicate element name", lineno)
        elif key == "zero":
            zero_name = rest.strip()
            zero_line = lineno
            if not zero_name or len(zero_name.split()) != 1:
                raise ParseError("'zero' takes exactly one element name", lineno)
        elif key == "table":
            if rest.strip():
                raise ParseError("table rows start on the line after 'table:'", lineno)
            in_table = True
        else:
            raise ParseError(f"unknown key {key!r}", lineno)

    if elements is None:
        raise ParseError("missing 'elements' line")
    if not in_table:
        raise ParseError("missing 'table:' section")
    n = len(elements)
    if n > max_order:
        raise ParseError(f"order {n} exceeds the supported maximum {max_order}")
    if len(rows) != n:
        raise ParseError(f"table has {len(rows)} rows, expected {n} (non-square table)")
    pos = {name: i for i, name in enumerate(elements)}
    table = []
    for r, (lineno, cells) in enumerate(rows):
        if len(cells) != n:
            raise ParseError(f"table row {r} has {len(cells)} entries, expected {n}", lineno)
        row = []
        for c in cells:
            if c not in pos:
                raise ParseError(f"unknown element {c!r} in table row {r}", lineno)
            row.append(pos[c])
        table.append(row)

    zero = None
    if zero_name is not None:
        if zero_name not in pos:
            raise ParseError(f"unknown zero element {zero_name!r}", zero_line)
        zero = pos[zero_name]
    try:
        return FiniteSemigroup.from_table(elements, table, zero=zero, max_order=max_order)
    except AxiomError as exc:
        raise ParseError(str(exc), zero_line if zero is not None else None) from exc


def format_semigroup(S: FiniteSemigroup, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append("elements: " + " ".join(S.elements))
    if S.zero is not None:
        lines.append(f"zero: {S.elements[S.zero]}")
    lines.append("table:")
    width = max(len(x) for x in S.elements)
    for row in S.table:
        lines.append(" ".join(S.elements[j].ljust(width) for j in row).rstrip())
    return "\n".join(lines) + "\n"


def check_associativity(S: FiniteSemigroup) -> tuple[int, int, int] | None:
    """Return None if associative, else the lexicographically least failing (i, j, k)."""
    T = S.table
    n = S.order
    for i in range(n):
        lhs = T[T[i]]                # lhs[j, k] = (ij)k
        rhs = T[i][T]                # rhs[j, k] = i(jk)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            j, k = bad[0]
            return (i, int(j), int(k))
    return None


def verify_inverse(S: FiniteSemigroup) -> InverseVerdict:
    """Inverse iff regular and the idempotents commute."""
    T = S.table
    n = S.order
    idx = np.arange(n)
    inverse = []
    for a in range(n):
        aba = T[T[a], a]             # over all b
        bab = T[T[:, a], idx]
        ok = np.flatnonzero((aba == a) & (bab == idx))
        if not len(ok):
            return InverseVerdict(False, f"element {S.elements[a]!r} has no inverse")
        inverse.append(int(ok[0]))
    E = sorted(S.idempotents)
    for x, e in enumerate(E):
        for f in E[x + 1:]:
            if T[e, f] != T[f, e]:
                return InverseVerdict(
                    False, f"idempotents {S.elements[e]!r} and {S.elements[f]!r} do not commute")
    return InverseVerdict(True, None, tuple(inverse))


def find_zero(S: FiniteSemigroup) -> int | None:
    T = S.table
    for z in range(S.order):
        if (T[z] == z).all() and (T[:, z] == z).all():
            return z
    return None


def left_ideal_of_idempotents(S: FiniteSemigroup, a: int) -> frozenset[int]:
    """The set Ea = {e * a : e idempotent}."""
    return frozenset(int(S.table[e, a]) for e in S.idempotents)


def right_ideal_of_idempotents(S: FiniteSemigroup, a: int) -> frozenset[int]:
    """The set aE = {a * f : f idempotent}."""
    return frozenset(int(S.table[a, f]) for f in S.idempotents)


def natural_order(S: FiniteSemigroup, v: InverseVerdict | None = None) -> OrderStructure:
    """a <= b iff a = e b for some idempotent e.

    The right-handed form a = b f is computed as well and must give the same relation.
    """
    if v is None:
        v = verify_inverse(S)
    if not v.is_inverse:
        raise AxiomError(f"natural order needs an inverse semigroup: {v.witness}")
    n = S.order
    down = []
    for b in range(n):
        left = left_ideal_of_idempotents(S, b)
        right = right_ideal_of_idempotents(S, b)
        if left != right:
            raise TheoremViolation("order-left-right", f"Eb != bE for b={S.elements[b]!r}",
                                   sorted(S.elements[x] for x in left ^ right))
        down.append(left)
    leq = np.zeros((n, n), dtype=bool)
    for b, ds in enumerate(down):
        leq[list(ds), b] = True
    leq.setflags(write=False)
    return OrderStructure(leq, tuple(down))


def meet_set(S: FiniteSemigroup, order: OrderStructure, a: int, b: int) -> frozenset[int]:
    return order.meet(a, b)


def least_element(order: OrderStructure) -> int | None:
    rows = np.flatnonzero(order.leq.all(axis=1))
    return int(rows[0]) if len(rows) else None


def adjoin_zero(S: FiniteSemigroup, zero_name: str = ZERO_NAME) -> FiniteSemigroup:
    """Return S with an external zero appended, or S itself if it already has one."""
    if S.has_proper_zero:
        return S
    if zero_name in S.elements:
        raise AxiomError(f"cannot adjoin zero: name {zero_name!r} already used")
    n = S.order
    T = np.full((n + 1, n + 1), n, dtype=np.int64)
    T[:n, :n] = S.table
    return FiniteSemigroup.from_table(S.elements + (zero_name,), T, zero=n)


def restrict(S: FiniteSemigroup, subset: Iterable[int]) -> FiniteSemigroup:
    """The subsemigroup on ``subset`` (which must be closed), keeping the given order."""
    keep = list(subset)
    pos = {x: i for i, x in enumerate(keep)}
    try:
        table = [[pos[int(S.table[a, b])] for b in keep] for a in keep]
    except KeyError as exc:
        raise AxiomError("subset is not closed under multiplication") from exc
    return FiniteSemigroup.from_table([S.elements[x] for x in keep], table)
