"""Automorphisms and vertex/endomorphism transitivity of G(n, k).

The rotation and reflection always generate a dihedral group of order 2n;
the inside-out exchange of rims is an automorphism exactly when
k^2 = +-1 (mod n).  Expected automorphism group orders follow the classical
classification, which leaves seven exceptional parameter pairs unassigned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .gp_core import GPParams, GraphError, SimpleGraph, build_gp
from .hom_engine import SearchBudget, VertexMap, iter_homomorphisms


@dataclass(frozen=True)
class Permutation(VertexMap):
    """A VertexMap that is a bijection."""

    def __post_init__(self) -> None:
        if len(set(self.images)) != len(self.images):
            raise GraphError("permutation images must be a bijection")


EXCEPTIONAL_AUT_PAIRS = frozenset(
    {(4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5)}
)


def rotation(params: GPParams) -> Permutation:
    """u_i -> u_{i+1}, v_i -> v_{i+1}; always an automorphism."""
    n = params.n
    images = [(i + 1) % n for i in range(n)] + [n + (i + 1) % n for i in range(n)]
    perm = Permutation(tuple(images))
    assert perm.is_automorphism(build_gp(params))
    return perm


def reflection(params: GPParams) -> Permutation:
    """u_i -> u_{-i}, v_i -> v_{-i}; always an automorphism."""
    n = params.n
    images = [(-i) % n for i in range(n)] + [n + (-i) % n for i in range(n)]
    perm = Permutation(tuple(images))
    assert perm.is_automorphism(build_gp(params))
    return perm


def inside_out(params: GPParams) -> VertexMap:
    """u_i -> v_{ki}, v_i -> u_{ki}: returned unverified.

    Not even a bijection when gcd(n, k) > 1; an automorphism exactly when
    k^2 = +-1 (mod n).
    """
    n, k = params.n, params.k
    images = [n + (k * i) % n for i in range(n)] + [(k * i) % n for i in range(n)]
    return VertexMap(tuple(images))


def inside_out_is_automorphism(params: GPParams) -> bool:
    return inside_out(params).is_automorphism(build_gp(params))


def is_vertex_transitive(params: GPParams) -> bool:
    """Closed form: k^2 = +-1 (mod n), plus the sporadic pair (10, 2)."""
    n, k = params.n, params.k
    return (k * k) % n in {1 % n, (n - 1) % n} or (n, k) == (10, 2)


def expected_aut_order(params: GPParams) -> Optional[int]:
    """4n when k^2 = +-1 (mod n), else 2n; None for the seven exceptions."""
    n, k = params.n, params.k
    if (n, k) in EXCEPTIONAL_AUT_PAIRS:
        return None
    if (k * k) % n in {1 % n, (n - 1) % n}:
        return 4 * n
    return 2 * n


DEFAULT_AUT_VERTEX_BOUND = 60


def aut_group_bruteforce(
    graph: SimpleGraph,
    max_vertices: int = DEFAULT_AUT_VERTEX_BOUND,
    budget: Optional[SearchBudget] = None,
) -> list[Permutation]:
    """All automorphisms by exhaustive backtracking.

    The result is checked to be closed under composition and inverse before
    being returned.
    """
    if graph.num_vertices > max_vertices:
        raise GraphError(
            f"{graph.num_vertices} vertices exceeds brute-force bound {max_vertices}"
        )
    perms = [
        Permutation(vmap.images)
        for vmap in iter_homomorphisms(graph, graph, bijective=True, budget=budget)
    ]
    images = {p.images for p in perms}
    for p in perms:
        if p.inverse().images not in images:
            raise RuntimeError("automorphism set not closed under inverse")
    for p in perms:
        for q in perms:
            if p.compose(q).images not in images:
                raise RuntimeError("automorphism set not closed under composition")
    perms.sort(key=lambda p: p.images)
    return perms


def orbits(perms: Iterable[VertexMap], num_vertices: int) -> list[list[int]]:
    """Vertex orbits under the given permutations."""
    perms = list(perms)
    seen = [False] * num_vertices
    out = []
    for v in range(num_vertices):
        if seen[v]:
            continue
        orbit = []
        stack = [v]
        seen[v] = True
        while stack:
            x = stack.pop()
            orbit.append(x)
            for p in perms:
                y = p(x)
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(orbit))
    return out


def group_closure(perms: Iterable[Permutation], num_vertices: int) -> list[Permutation]:
    """Closure of the given permutations under composition."""
    ident = Permutation(tuple(range(num_vertices)))
    gens = list(perms)
    seen = {ident.images: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g.compose(p)
                if q.images not in seen:
                    seen[q.images] = q
                    nxt.append(q)
        frontier = nxt
    return sorted(seen.values(), key=lambda p: p.images)


def aut_order_report_csv(rows: Iterable[tuple[int, int, Optional[int], int]]) -> str:
    """CSV lines (n, k, expected, found); expected empty when unassigned."""
    lines = ["n,k,expected,found"]
    for n, k, expected, found in rows:
        e = "" if expected is None else str(expected)
        lines.append(f"{n},{k},{e},{found}")
    return "\n".join(lines) + "\n"


def is_color_endomorphism(digraph, vmap: VertexMap) -> bool:
    """Does the map send every colored arc s -> s*c onto an arc of the same
    color?  Left multiplications x -> a*x always are, by associativity."""
    if len(vmap) != digraph.num_vertices:
        return False
    return all(digraph.has_arc(vmap(s), vmap(t), ci) for s, t, ci in digraph.arcs)


def left_multiplications(digraph) -> list[VertexMap]:
    """The color endomorphisms x -> a*x for each element a."""
    table = digraph.table
    maps = []
    for a in range(table.order):
        vmap = VertexMap(tuple(table.product(a, x) for x in range(table.order)))
        if not is_color_endomorphism(digraph, vmap):
            raise GraphError("left multiplication is not a color endomorphism")
        maps.append(vmap)
    return maps
