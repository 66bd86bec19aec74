"""Finite semigroup/monoid operation tables.

Tables are square arrays over element ids 0..m-1.  Associativity is checked
either by a vectorized full triple scan or, when a generating set is
supplied, by Light's test.  Constructors cover the classical families plus
two extension combinators used to assemble the built-in representations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np


class AlgebraError(ValueError):
    """Invalid table, element, or unmet constructor precondition."""


@dataclass(frozen=True)
class OpTable:
    """A binary operation on {0..order-1} given by a full table."""

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    connection: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        m = len(self.table)
        if any(len(row) != m for row in self.table):
            raise AlgebraError("operation table must be square")
        if any(not (0 <= v < m) for row in self.table for v in row):
            raise AlgebraError("table entries must be element ids")
        if len(self.labels) != m:
            raise AlgebraError("label count must match order")
        if any(not (0 <= c < m) for c in self.connection):
            raise AlgebraError("connection elements must be element ids")

    @property
    def order(self) -> int:
        return len(self.table)

    def product(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, g: int, t: int) -> int:
        if t < 1:
            raise AlgebraError("power exponent must be positive")
        acc = g
        for _ in range(t - 1):
            acc = self.table[acc][g]
        return acc

    def as_array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "table": [list(row) for row in self.table],
            "labels": list(self.labels),
            "connection": list(self.connection),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"

    @staticmethod
    def from_json_obj(obj: dict) -> "OpTable":
        table = tuple(tuple(int(v) for v in row) for row in obj["table"])
        if "order" in obj and int(obj["order"]) != len(table):
            raise AlgebraError("declared order does not match table size")
        labels = obj.get("labels")
        if labels is None:
            labels = [str(i) for i in range(len(table))]
        connection = tuple(int(c) for c in obj.get("connection", ()))
        return OpTable(table, tuple(str(x) for x in labels), connection)

    @staticmethod
    def from_rows(
        rows: Sequence[Sequence[int]],
        labels: Optional[Sequence[str]] = None,
        connection: Iterable[int] = (),
    ) -> "OpTable":
        table = tuple(tuple(row) for row in rows)
        if labels is None:
            labels = [str(i) for i in range(len(table))]
        return OpTable(table, tuple(labels), tuple(connection))


# -- closure and generation --------------------------------------------------


def generated_closure(table: OpTable, gens: Iterable[int]) -> frozenset[int]:
    """Subsemigroup generated by gens; includes the identity when one exists
    (a monoid's submonoids are taken to contain it)."""
    current = set(gens)
    e = find_identity(table)
    if e is not None:
        current.add(e)
    frontier = set(current)
    while frontier:
        new = set()
        for a in list(current):
            for b in frontier:
                new.add(table.product(a, b))
                new.add(table.product(b, a))
        frontier = new - current
        current |= frontier
    return frozenset(current)


def generates(table: OpTable, gens: Iterable[int]) -> bool:
    return len(generated_closure(table, gens)) == table.order


# -- associativity ------------------------------------------------------------


def _full_scan_associative(table: OpTable) -> bool:
    t = table.as_array()
    left = t[t, :]   # left[a, b, c] = (a*b)*c
    right = t[:, t]  # right[a, b, c] = a*(b*c)
    return bool(np.array_equal(left, right))


def _lights_test(table: OpTable, gens: Sequence[int]) -> bool:
    t = table.as_array()
    for a in gens:
        if not np.array_equal(t[t[:, a], :], t[:, t[a, :]]):
            return False
    return True


def is_associative(table: OpTable, generating_set: Optional[Iterable[int]] = None) -> bool:
    """Full triple scan; Light's test when a generating set is supplied."""
    if generating_set is None:
        return _full_scan_associative(table)
    gens = sorted(set(generating_set))
    if not generates(table, gens):
        raise AlgebraError("Light's test requires a genuinely generating set")
    return _lights_test(table, gens)


# -- structural queries --------------------------------------------------------


def find_identity(table: OpTable) -> Optional[int]:
    for e in range(table.order):
        if all(
            table.product(e, x) == x and table.product(x, e) == x
            for x in range(table.order)
        ):
            return e
    return None


def invertibles(table: OpTable) -> list[int]:
    e = find_identity(table)
    if e is None:
        raise AlgebraError("invertibility is relative to an identity; none exists")
    out = []
    for x in range(table.order):
        if any(
            table.product(x, y) == e and table.product(y, x) == e
            for y in range(table.order)
        ):
            out.append(x)
    return out


def element_order(table: OpTable, g: int) -> int:
    """Least t >= 1 with g^t equal to the identity."""
    e = find_identity(table)
    if e is None:
        raise AlgebraError("element order is relative to an identity; none exists")
    acc, t = g, 1
    while acc != e:
        acc = table.product(acc, g)
        t += 1
        if t > table.order:
            raise AlgebraError(f"element {g} has no power equal to the identity")
    return t


def idempotents(table: OpTable) -> list[int]:
    return [x for x in range(table.order) if table.product(x, x) == x]


def idempotents_closed(table: OpTable) -> bool:
    idem = set(idempotents(table))
    return all(table.product(e, f) in idem for e in idem for f in idem)


def is_completely_regular(table: OpTable) -> bool:
    """Every element a has an x with axa=a, xax=x and ax=xa."""
    m = table.order
    for a in range(m):
        if not any(
            table.product(table.product(a, x), a) == a
            and table.product(table.product(x, a), x) == x
            and table.product(a, x) == table.product(x, a)
            for x in range(m)
        ):
            return False
    return True


@dataclass(frozen=True)
class AlgebraReport:
    order: int
    associative: bool
    identity: Optional[int]
    is_monoid: bool
    is_group: bool
    idempotents: tuple[int, ...]
    idempotents_closed: bool
    completely_regular: bool
    is_orthogroup: bool

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "associative": self.associative,
            "identity": self.identity,
            "is_monoid": self.is_monoid,
            "is_group": self.is_group,
            "idempotents": list(self.idempotents),
            "idempotents_closed": self.idempotents_closed,
            "completely_regular": self.completely_regular,
            "is_orthogroup": self.is_orthogroup,
        }


def analyze(table: OpTable) -> AlgebraReport:
    assoc = is_associative(table)
    e = find_identity(table)
    is_monoid = assoc and e is not None
    is_group = is_monoid and len(invertibles(table)) == table.order
    idem = tuple(idempotents(table))
    closed = idempotents_closed(table)
    creg = is_completely_regular(table)
    return AlgebraReport(
        order=table.order,
        associative=assoc,
        identity=e,
        is_monoid=is_monoid,
        is_group=is_group,
        idempotents=idem,
        idempotents_closed=closed,
        completely_regular=creg,
        is_orthogroup=assoc and creg and closed,
    )


def is_orthogroup(table: OpTable) -> bool:
    """Completely regular semigroup whose idempotents form a subsemigroup."""
    return (
        is_associative(table)
        and is_completely_regular(table)
        and idempotents_closed(table)
    )


# -- constructors ---------------------------------------------------------------


def cyclic_group(n: int) -> OpTable:
    if n < 1:
        raise AlgebraError("cyclic group order must be positive")
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    return OpTable.from_rows(rows, labels=[str(i) for i in range(n)])


def dihedral_group(n: int) -> OpTable:
    """Order 2n: ids 0..n-1 are rotations r^i, ids n..2n-1 are r^i s."""
    if n < 1:
        raise AlgebraError("dihedral parameter must be positive")

    def mul(x: int, y: int) -> int:
        i, e = x % n, x // n
        j, f = y % n, y // n
        idx = (i + j) % n if e == 0 else (i - j) % n
        return idx + n * (e ^ f)

    rows = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    labels = [f"r{i}" for i in range(n)] + [f"r{i}s" for i in range(n)]
    return OpTable.from_rows(rows, labels=labels)


def null_semigroup(size: int, zero_index: int) -> OpTable:
    """All products equal the element at zero_index."""
    if not (0 <= zero_index < size):
        raise AlgebraError("zero element must be in the carrier")
    rows = [[zero_index] * size for _ in range(size)]
    return OpTable.from_rows(rows)


def left_zero_band(size: int) -> OpTable:
    """xy = x for all x, y."""
    if size < 1:
        raise AlgebraError("band size must be positive")
    rows = [[i] * size for i in range(size)]
    return OpTable.from_rows(rows, labels=[f"l{i}" for i in range(size)])


def direct_product(a: OpTable, b: OpTable) -> OpTable:
    """Componentwise product on row-major pairs ((x, y) -> x*|b| + y)."""
    mb = b.order
    rows = []
    for x1 in range(a.order):
        for y1 in range(mb):
            row = []
            for x2 in range(a.order):
                for y2 in range(mb):
                    row.append(a.product(x1, x2) * mb + b.product(y1, y2))
            rows.append(row)
    labels = [
        f"({la},{lb})" for la in a.labels for lb in b.labels
    ]
    return OpTable.from_rows(rows, labels=labels)


def presented_group_alpha_gamma(n: int, k: int) -> OpTable:
    """The order-2n group <a, g | a^n = g^2 = id, g a g = a^k>.

    Elements a^i g^e get id e*n + i; requires k^2 = 1 (mod n), which makes
    the relations consistent.  Connection {a, g} is attached.
    """
    if (k * k) % n != 1 % n:
        raise AlgebraError(f"presentation needs k^2 = 1 (mod n); got n={n}, k={k}")

    def mul(x: int, y: int) -> int:
        i, e = x % n, x // n
        j, f = y % n, y // n
        if e == 0:
            return ((i + j) % n) + n * f
        return ((i + k * j) % n) + n * ((1 + f) % 2)

    rows = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    labels = [f"a{i}" for i in range(n)] + [f"a{i}g" for i in range(n)]
    table = OpTable.from_rows(rows, labels=labels, connection=(1, n))
    if not _full_scan_associative(table):
        raise AlgebraError("presentation produced a non-associative table")
    return table


# -- extension combinators --------------------------------------------------------


def combinator_null_extension(
    r_table: OpTable, s_part: Iterable[int], rp_table: OpTable
) -> OpTable:
    """Semigroup on R x R' from a split R = S u T with ST, TS inside T.

    Products: (s, i)(r, j) = (sr, ij) for s in S, and (t, i)(r, j) = (tr, i)
    for t in T.  If R has an identity inside S and R' has one, the result is
    a monoid.  Associativity is re-verified on the built table.
    """
    s_set = frozenset(s_part)
    m = r_table.order
    if not s_set <= frozenset(range(m)):
        raise AlgebraError("S must be a subset of the carrier of R")
    t_set = frozenset(range(m)) - s_set
    for s in s_set:
        for t in t_set:
            if r_table.product(s, t) not in t_set or r_table.product(t, s) not in t_set:
                raise AlgebraError("extension needs ST and TS inside T")
    mp = rp_table.order

    def mul(x: int, y: int) -> int:
        r1, i = divmod(x, mp)
        r2, j = divmod(y, mp)
        prod = r_table.product(r1, r2)
        second = rp_table.product(i, j) if r1 in s_set else i
        return prod * mp + second

    order = m * mp
    rows = [[mul(x, y) for y in range(order)] for x in range(order)]
    labels = [
        f"({lr},{lp})" for lr in r_table.labels for lp in rp_table.labels
    ]
    table = OpTable.from_rows(rows, labels=labels)
    if not _full_scan_associative(table):
        raise AlgebraError("null extension produced a non-associative table")
    return table


def combinator_left_band_extension(
    s_table: OpTable,
    t_table: OpTable,
    r_table: OpTable,
    phi: Sequence[int],
    psi: Sequence[int],
) -> OpTable:
    """Semigroup on S u (T x L_R) from homomorphisms phi: S->T, psi: S->R.

    Products: s * s' in S; s(t, l_r) = (phi(s)t, l_{psi(s)r});
    (t, l_r)s = (t phi(s), l_r); (t, l_r)(t', l_r') = (tt', l_r).
    Ids: S keeps 0..|S|-1; (t, l_r) gets |S| + t*|R| + r.
    """
    ms, mt, mr = s_table.order, t_table.order, r_table.order
    if len(phi) != ms or len(psi) != ms:
        raise AlgebraError("phi and psi must be defined on all of S")
    if any(not (0 <= v < mt) for v in phi) or any(not (0 <= v < mr) for v in psi):
        raise AlgebraError("phi or psi image out of range")
    for x in range(ms):
        for y in range(ms):
            if phi[s_table.product(x, y)] != t_table.product(phi[x], phi[y]):
                raise AlgebraError("phi is not a homomorphism")
            if psi[s_table.product(x, y)] != r_table.product(psi[x], psi[y]):
                raise AlgebraError("psi is not a homomorphism")

    order = ms + mt * mr

    def mul(x: int, y: int) -> int:
        x_in_s, y_in_s = x < ms, y < ms
        if x_in_s and y_in_s:
            return s_table.product(x, y)
        if x_in_s:
            t, r = divmod(y - ms, mr)
            return ms + t_table.product(phi[x], t) * mr + r_table.product(psi[x], r)
        t, r = divmod(x - ms, mr)
        if y_in_s:
            return ms + t_table.product(t, phi[y]) * mr + r
        t2 = (y - ms) // mr
        return ms + t_table.product(t, t2) * mr + r

    rows = [[mul(x, y) for y in range(order)] for x in range(order)]
    labels = list(s_table.labels) + [
        f"({lt},{lr})" for lt in t_table.labels for lr in r_table.labels
    ]
    table = OpTable.from_rows(rows, labels=labels)
    if not _full_scan_associative(table):
        raise AlgebraError("left-band extension produced a non-associative table")
    return table


def cay1_monoid(n: int, k: int) -> OpTable:
    """The order-2n orthogroup Z_n u (Z_{n/d} x L_d) for k^2 = +-k (mod n).

    Built by the left-band extension with phi = mod n/d and psi = mod d,
    where d = gcd(n, k).  Connection {1, (1, l_0)} = ids {1, n + d}.
    """
    import math

    if (k * k) % n not in {k % n, (-k) % n}:
        raise AlgebraError(f"family needs k^2 = +-k (mod n); got n={n}, k={k}")
    d = math.gcd(n, k)
    g = n // d
    table = combinator_left_band_extension(
        cyclic_group(n),
        cyclic_group(g),
        cyclic_group(d),
        phi=[x % g for x in range(n)],
        psi=[x % d for x in range(n)],
    )
    labels = [str(x) for x in range(n)] + [
        f"({i},l{j})" for i in range(g) for j in range(d)
    ]
    return OpTable(table.table, tuple(labels), connection=(1, n + d))


# -- built-in tables ----------------------------------------------------------------

_PETERSEN_S_ROWS = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9),
    (1, 2, 3, 4, 5, 0, 7, 8, 6, 9),
    (2, 3, 4, 5, 0, 1, 8, 6, 7, 9),
    (3, 4, 5, 0, 1, 2, 6, 7, 8, 9),
    (4, 5, 0, 1, 2, 3, 7, 8, 6, 9),
    (5, 0, 1, 2, 3, 4, 8, 6, 7, 9),
    (9, 9, 9, 9, 9, 9, 9, 9, 9, 9),
    (9, 9, 9, 9, 9, 9, 9, 9, 9, 9),
    (9, 9, 9, 9, 9, 9, 9, 9, 9, 9),
    (9, 9, 9, 9, 9, 9, 9, 9, 9, 9),
)

_PETERSEN_M_ROWS = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9),
    (1, 2, 3, 4, 5, 0, 7, 8, 6, 9),
    (2, 3, 4, 5, 0, 1, 8, 6, 7, 9),
    (3, 4, 5, 0, 1, 2, 6, 7, 8, 9),
    (4, 5, 0, 1, 2, 3, 7, 8, 6, 9),
    (5, 0, 1, 2, 3, 4, 8, 6, 7, 9),
    (6, 6, 6, 6, 6, 6, 9, 9, 9, 9),
    (7, 7, 7, 7, 7, 7, 9, 9, 9, 9),
    (8, 8, 8, 8, 8, 8, 9, 9, 9, 9),
    (9, 9, 9, 9, 9, 9, 9, 9, 9, 9),
)

_PETERSEN_SP_ROWS = (
    (5, 4, 3, 2, 1, 0, 8, 7, 6, 9),
    (2, 3, 4, 5, 0, 1, 8, 6, 7, 9),
    (1, 0, 5, 4, 3, 2, 7, 6, 8, 9),
    (4, 5, 0, 1, 2, 3, 7, 8, 6, 9),
    (3, 2, 1, 0, 5, 4, 6, 8, 7, 9),
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9),
    (9, 9, 9, 9, 9, 9, 9, 9, 9, 9),
    (9, 9, 9, 9, 9, 9, 9, 9, 9, 9),
    (9, 9, 9, 9, 9, 9, 9, 9, 9, 9),
    (9, 9, 9, 9, 9, 9, 9, 9, 9, 9),
)

_PETERSEN_MP_ROWS = (
    (5, 4, 3, 2, 1, 0, 8, 7, 6, 9),
    (2, 3, 4, 5, 0, 1, 8, 6, 7, 9),
    (1, 0, 5, 4, 3, 2, 7, 6, 8, 9),
    (4, 5, 0, 1, 2, 3, 7, 8, 6, 9),
    (3, 2, 1, 0, 5, 4, 6, 8, 7, 9),
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9),
    (6, 6, 6, 6, 6, 6, 9, 9, 9, 9),
    (7, 7, 7, 7, 7, 7, 9, 9, 9, 9),
    (8, 8, 8, 8, 8, 8, 9, 9, 9, 9),
    (9, 9, 9, 9, 9, 9, 9, 9, 9, 9),
)

_DODECAHEDRON_M_ROWS = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19),
    (1, 0, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 16, 18, 17, 19, 12, 14, 13, 15),
    (2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 17, 18, 16, 19, 13, 14, 12, 15),
    (3, 2, 1, 0, 11, 10, 9, 8, 7, 6, 5, 4, 13, 12, 14, 15, 17, 16, 18, 19),
    (4, 5, 6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 14, 12, 13, 15, 18, 16, 17, 19),
    (5, 4, 3, 2, 1, 0, 11, 10, 9, 8, 7, 6, 18, 17, 16, 19, 14, 13, 12, 15),
    (6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5, 16, 17, 18, 19, 12, 13, 14, 15),
    (7, 6, 5, 4, 3, 2, 1, 0, 11, 10, 9, 8, 12, 14, 13, 15, 16, 18, 17, 19),
    (8, 9, 10, 11, 0, 1, 2, 3, 4, 5, 6, 7, 13, 14, 12, 15, 17, 18, 16, 19),
    (9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 11, 10, 17, 16, 18, 19, 13, 12, 14, 15),
    (10, 11, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 18, 16, 17, 19, 14, 12, 13, 15),
    (11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0, 14, 13, 12, 15, 18, 17, 16, 19),
    (12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12, 15, 15, 15, 15, 15, 15, 15, 15),
    (13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 13, 15, 15, 15, 15, 15, 15, 15, 15),
    (14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 14, 15, 15, 15, 15, 15, 15, 15, 15),
    (15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15, 15),
    (16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 19, 19, 19, 19, 19, 19, 19, 19),
    (17, 17, 17, 17, 17, 17, 17, 17, 17, 17, 17, 17, 19, 19, 19, 19, 19, 19, 19, 19),
    (18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 18, 19, 19, 19, 19, 19, 19, 19, 19),
    (19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19, 19),
)


def desargues_monoid() -> OpTable:
    """M x Z_2 via the null extension of the Petersen monoid M (S = Z_6).

    Connection {(1,1), (6,0)} = ids {3, 12}; its underlying Cayley graph is
    the Desargues graph G(10, 3).
    """
    base = combinator_null_extension(
        petersen_table("m"), range(6), cyclic_group(2)
    )
    return OpTable(base.table, base.labels, connection=(3, 12))


def petersen_table(which: str) -> OpTable:
    rows = {
        "s": _PETERSEN_S_ROWS,
        "m": _PETERSEN_M_ROWS,
        "sp": _PETERSEN_SP_ROWS,
        "mp": _PETERSEN_MP_ROWS,
    }[which]
    connection = (1, 6) if which in ("s", "m") else (0, 4, 8)
    return OpTable.from_rows(rows, connection=connection)


def builtin_tables() -> dict[str, OpTable]:
    """The six stock tables, keyed by their CLI names."""
    return {
        "petersen-s": petersen_table("s"),
        "petersen-m": petersen_table("m"),
        "petersen-sp": petersen_table("sp"),
        "petersen-mp": petersen_table("mp"),
        "dodecahedron": OpTable.from_rows(_DODECAHEDRON_M_ROWS, connection=(1, 11, 18)),
        "desargues": desargues_monoid(),
    }
