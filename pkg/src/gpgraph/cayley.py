"""Cayley digraphs of finite semigroups and graph representations of G(n, k).

A right Cayley digraph has an arc s -> s*c of color c for every element s
and connection element c.  The underlying graph suppresses loops, forgets
orientation, and merges multiple arcs; the loop/digon census is kept so the
constructions' multi-arc structure can be asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from . import algebra
from .algebra import AlgebraError, AlgebraReport, OpTable, analyze, cay1_monoid
from .core_classifier import CoreStatus, classify_core
from .gp_core import GPParams, GraphError, SimpleGraph, build_gp
from .hom_engine import SearchBudget, VertexMap, find_homomorphism


@dataclass(frozen=True)
class CayleyDigraph:
    """Colored arcs (source, target, color index into the connection)."""

    table: OpTable
    connection: tuple[int, ...]
    arcs: tuple[tuple[int, int, int], ...]

    @property
    def num_vertices(self) -> int:
        return self.table.order

    @property
    def labels(self) -> tuple[str, ...]:
        return self.table.labels

    def has_arc(self, s: int, t: int, color: Optional[int] = None) -> bool:
        if color is None:
            return any(a == s and b == t for a, b, _ in self.arcs)
        return (s, t, color) in set(self.arcs)

    def loops(self) -> tuple[tuple[int, int], ...]:
        return tuple((s, c) for s, t, c in self.arcs if s == t)


def build_cayley(table: OpTable, connection: Optional[Iterable[int]] = None) -> CayleyDigraph:
    conn = tuple(connection) if connection is not None else table.connection
    if not conn:
        raise AlgebraError("a nonempty connection set is required")
    if any(not (0 <= c < table.order) for c in conn):
        raise AlgebraError("connection elements must be element ids")
    arcs = tuple(
        (s, table.product(s, c), ci)
        for s in range(table.order)
        for ci, c in enumerate(conn)
    )
    return CayleyDigraph(table=table, connection=conn, arcs=arcs)


@dataclass(frozen=True)
class DigraphCensus:
    num_arcs: int
    num_loops: int
    loop_vertices: tuple[int, ...]
    parallel_digons: int      # vertex pairs carrying >= 2 same-direction arcs
    antiparallel_digons: int  # vertex pairs carrying arcs in both directions
    num_edges: int

    def to_json_obj(self) -> dict:
        return {
            "num_arcs": self.num_arcs,
            "num_loops": self.num_loops,
            "loop_vertices": list(self.loop_vertices),
            "parallel_digons": self.parallel_digons,
            "antiparallel_digons": self.antiparallel_digons,
            "num_edges": self.num_edges,
        }


def underlying_graph(digraph: CayleyDigraph) -> tuple[SimpleGraph, DigraphCensus]:
    """Suppress loops, forget orientation, merge parallel arcs."""
    fwd: dict[tuple[int, int], int] = {}
    bwd: dict[tuple[int, int], int] = {}
    loop_vertices = []
    for s, t, _ in digraph.arcs:
        if s == t:
            loop_vertices.append(s)
            continue
        key = (min(s, t), max(s, t))
        if s < t:
            fwd[key] = fwd.get(key, 0) + 1
        else:
            bwd[key] = bwd.get(key, 0) + 1
    pairs = set(fwd) | set(bwd)
    parallel = sum(1 for p in pairs if fwd.get(p, 0) >= 2 or bwd.get(p, 0) >= 2)
    antiparallel = sum(1 for p in pairs if fwd.get(p, 0) >= 1 and bwd.get(p, 0) >= 1)
    graph = SimpleGraph(
        digraph.num_vertices, sorted(pairs), labels=digraph.labels
    )
    census = DigraphCensus(
        num_arcs=len(digraph.arcs),
        num_loops=len(loop_vertices),
        loop_vertices=tuple(sorted(set(loop_vertices))),
        parallel_digons=parallel,
        antiparallel_digons=antiparallel,
        num_edges=len(pairs),
    )
    return graph, census


# -- isomorphism ----------------------------------------------------------------


DEFAULT_ISO_VERTEX_BOUND = 128


def is_isomorphic(
    g1: SimpleGraph,
    g2: SimpleGraph,
    max_vertices: int = DEFAULT_ISO_VERTEX_BOUND,
    budget: Optional[SearchBudget] = None,
) -> Optional[VertexMap]:
    """An isomorphism witness g1 -> g2, or None; exact, refuses huge inputs."""
    if max(g1.num_vertices, g2.num_vertices) > max_vertices:
        raise GraphError(
            f"isomorphism bound {max_vertices} exceeded; raise max_vertices to override"
        )
    if g1.num_vertices != g2.num_vertices or g1.num_edges != g2.num_edges:
        return None
    if sorted(map(g1.degree, range(g1.num_vertices))) != sorted(
        map(g2.degree, range(g2.num_vertices))
    ):
        return None
    return find_homomorphism(g1, g2, bijective=True, budget=budget)


# -- representation predicates ----------------------------------------------------


def is_group_graph(params: GPParams) -> bool:
    """G(n, k) is a Cayley graph of a group iff k^2 = 1 (mod n)."""
    return (params.k**2) % params.n == 1 % params.n


def group_graph_witness(params: GPParams) -> OpTable:
    """The order-2n group <a, g> realizing G(n, k), connection {a, g}."""
    if not is_group_graph(params):
        raise AlgebraError(f"G({params.n},{params.k}) is not a group graph")
    return algebra.presented_group_alpha_gamma(params.n, params.k)


def _k2_pm_k(params: GPParams) -> bool:
    n, k = params.n, params.k
    return (k * k) % n in {k % n, (-k) % n}


def is_2gen_monoid_graph(params: GPParams) -> bool:
    """Monoid graph on a 2-element generating connection set: holds iff
    (n, k) = (5, 2), or k^2 = 1, or k^2 = +-k (mod n)."""
    return (params.n, params.k) == (5, 2) or is_group_graph(params) or _k2_pm_k(params)


def two_gen_witness(params: GPParams) -> Optional[tuple[str, OpTable]]:
    """A concrete (kind, table-with-connection) witness for the 2-generated
    monoid representation, when one exists."""
    if (params.n, params.k) == (5, 2):
        return ("petersen-m", algebra.petersen_table("m"))
    if is_group_graph(params):
        return ("group", group_graph_witness(params))
    if _k2_pm_k(params):
        return ("cay1", cay1_monoid(params.n, params.k))
    return None


def is_2conn_monoid_graph_restricted(params: GPParams) -> Optional[bool]:
    """Monoid graph with |C| = 2 without requiring C to generate.

    Decided for gcd(n, k) = 1 and for n/d odd; None (open) otherwise.
    """
    n, k = params.n, params.k
    if math.gcd(n, k) == 1:
        return (n, k) in {(5, 2), (10, 3)} or is_group_graph(params)
    if params.inner_len % 2 == 1:
        return (n, k) == (5, 2) or is_group_graph(params) or _k2_pm_k(params)
    return None


def loopless_semigroup_obstruction(params: GPParams) -> bool:
    """True when any loopless semigroup representation would force a group:
    core, n != 4k, and k^2 != 1 (mod n)."""
    return (
        classify_core(params).status is CoreStatus.CORE
        and params.n != 4 * params.k
        and not is_group_graph(params)
    )


# -- cay1 variants ------------------------------------------------------------------


def cay1_connection_variant(n: int, k: int, variant: str) -> tuple[int, ...]:
    """Connections {1, (c0, l_0)} with c0 = 1 (std), -1 (rev), 0 (loop)."""
    d = math.gcd(n, k)
    g = n // d
    inner = {
        "std": n + d,              # (1, l_0)
        "rev": n + (g - 1) * d,    # (-1, l_0)
        "loop": n,                 # (0, l_0)
    }
    if variant not in inner:
        raise AlgebraError(f"unknown cay1 variant {variant!r}")
    return (1, inner[variant])


# -- bundled verification --------------------------------------------------------------


@dataclass(frozen=True)
class RepresentationReport:
    order: int
    connection: tuple[int, ...]
    algebra: AlgebraReport
    generates: bool
    census: DigraphCensus
    target: Optional[tuple[int, int]]
    matches_target: Optional[bool]
    iso_witness: Optional[VertexMap]

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "connection": list(self.connection),
            "algebra": self.algebra.to_json_obj(),
            "generates": self.generates,
            "census": self.census.to_json_obj(),
            "target": list(self.target) if self.target else None,
            "matches_target": self.matches_target,
            "iso_witness": self.iso_witness.as_json_array() if self.iso_witness else None,
        }


def verify_representation(
    table: OpTable,
    connection: Optional[Iterable[int]] = None,
    target: Optional[GPParams] = None,
    budget: Optional[SearchBudget] = None,
) -> RepresentationReport:
    """Analyze the table, build its Cayley digraph, and (optionally) check
    the underlying graph against G(n, k)."""
    digraph = build_cayley(table, connection)
    graph, census = underlying_graph(digraph)
    report = analyze(table)
    gen = algebra.generates(table, digraph.connection)
    matches: Optional[bool] = None
    witness: Optional[VertexMap] = None
    if target is not None:
        expected = build_gp(target)
        witness = is_isomorphic(expected, graph, budget=budget)
        if witness is not None and not _iso_ok(expected, graph, witness):
            raise RuntimeError("isomorphism witness failed re-verification")
        matches = witness is not None
    return RepresentationReport(
        order=table.order,
        connection=digraph.connection,
        algebra=report,
        generates=gen,
        census=census,
        target=(target.n, target.k) if target else None,
        matches_target=matches,
        iso_witness=witness,
    )


def _iso_ok(g1: SimpleGraph, g2: SimpleGraph, vmap: VertexMap) -> bool:
    if not vmap.is_bijective() or len(vmap) != g1.num_vertices:
        return False
    return all(
        g2.has_edge(vmap(a), vmap(b)) == g1.has_edge(a, b)
        for a in range(g1.num_vertices)
        for b in range(a + 1, g1.num_vertices)
    )


def invertible_generator_witness(
    table: OpTable, connection: Optional[Iterable[int]] = None
) -> Optional[tuple[int, int]]:
    """An invertible connection element of order > 2 whose power sequence
    (e, c, c^2, ...) is a cycle of the underlying graph, or None.

    Such an element exists in every monoid representation of a cubic graph
    on a two-element generating connection set.
    """
    conn = tuple(connection) if connection is not None else table.connection
    e = algebra.find_identity(table)
    if e is None:
        return None
    units = set(algebra.invertibles(table))
    graph, _ = underlying_graph(build_cayley(table, conn))
    for c in conn:
        if c not in units:
            continue
        o = algebra.element_order(table, c)
        if o <= 2:
            continue
        cycle = [e]
        acc = c
        while acc != e:
            cycle.append(acc)
            acc = table.product(acc, c)
        ok = len(set(cycle)) == o and all(
            graph.has_edge(cycle[i], cycle[(i + 1) % o]) for i in range(o)
        )
        if ok:
            return (c, o)
    return None


# -- named constructions (CLI / service) -----------------------------------------------


CONSTRUCTION_NAMES = (
    "petersen-s",
    "petersen-m",
    "petersen-sp",
    "petersen-mp",
    "dodecahedron",
    "desargues",
    "cay1",
    "cay1-rev",
    "cay1-loop",
    "group",
)


def build_named_construction(
    name: str, n: Optional[int] = None, k: Optional[int] = None
) -> CayleyDigraph:
    """Stock tables by name; cay1*/group require (n, k) parameters."""
    builtins = algebra.builtin_tables()
    if name in builtins:
        return build_cayley(builtins[name])
    if name in ("cay1", "cay1-rev", "cay1-loop"):
        if n is None or k is None:
            raise AlgebraError(f"construction {name!r} requires n and k")
        variant = {"cay1": "std", "cay1-rev": "rev", "cay1-loop": "loop"}[name]
        table = cay1_monoid(n, k)
        return build_cayley(table, cay1_connection_variant(n, k, variant))
    if name == "group":
        if n is None or k is None:
            raise AlgebraError("construction 'group' requires n and k")
        return build_cayley(algebra.presented_group_alpha_gamma(n, k))
    raise AlgebraError(
        f"unknown construction {name!r}; expected one of {', '.join(CONSTRUCTION_NAMES)}"
    )


# -- DOT export --------------------------------------------------------------------------


_ARC_COLORS = ("red", "blue", "forestgreen", "orange", "purple", "brown")


def digraph_to_dot(digraph: CayleyDigraph, name: str = "C") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(digraph.num_vertices):
        lines.append(f'  {v} [label="{digraph.labels[v]}"];')
    for s, t, ci in sorted(digraph.arcs):
        color = _ARC_COLORS[ci % len(_ARC_COLORS)]
        lines.append(f'  {s} -> {t} [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
