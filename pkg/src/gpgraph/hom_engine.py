"""Exact graph homomorphism search.

Backtracking over candidate bitmasks with arc-consistency propagation and
fail-first variable ordering.  All orderings are fixed, so results are
deterministic.  Budget exhaustion raises BudgetExhaustedError and is thereby
distinct from a definitive "no homomorphism" result (None).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .gp_core import SimpleGraph

DEFAULT_NODE_CAP = 100_000_000
BUDGET_ENV_VAR = "GP_ORACLE_BUDGET"


class BudgetExhaustedError(RuntimeError):
    """Search ran out of node expansions before reaching a definitive answer."""

    def __init__(self, expanded: int):
        super().__init__(f"search budget exhausted after {expanded} node expansions")
        self.expanded = expanded


@dataclass(frozen=True)
class SearchBudget:
    """Cap on backtracking node expansions (variable assignments tried)."""

    node_cap: int = DEFAULT_NODE_CAP

    @staticmethod
    def default() -> "SearchBudget":
        cap = os.environ.get(BUDGET_ENV_VAR)
        return SearchBudget(int(cap)) if cap else SearchBudget()


@dataclass(frozen=True)
class VertexMap:
    """A total map between vertex sets, stored as an image array."""

    images: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.images[v]

    def __len__(self) -> int:
        return len(self.images)

    def image(self) -> frozenset[int]:
        return frozenset(self.images)

    def as_json_array(self) -> list[int]:
        return list(self.images)

    def is_homomorphism(self, source: SimpleGraph, target: SimpleGraph) -> bool:
        if len(self.images) != source.num_vertices:
            return False
        if any(not (0 <= y < target.num_vertices) for y in self.images):
            return False
        return all(target.has_edge(self.images[a], self.images[b]) for a, b in source.edges)

    def is_endomorphism(self, graph: SimpleGraph) -> bool:
        return self.is_homomorphism(graph, graph)

    def is_bijective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def is_automorphism(self, graph: SimpleGraph) -> bool:
        """Bijective and edge-preserving in both directions."""
        if len(self.images) != graph.num_vertices or not self.is_bijective():
            return False
        return all(
            graph.has_edge(self.images[a], self.images[b]) == graph.has_edge(a, b)
            for a in range(graph.num_vertices)
            for b in range(a + 1, graph.num_vertices)
        )

    def compose(self, other: "VertexMap") -> "VertexMap":
        """self after other: (self.compose(other))(x) = self(other(x))."""
        return VertexMap(tuple(self.images[y] for y in other.images))

    def inverse(self) -> "VertexMap":
        if not self.is_bijective():
            raise ValueError("map is not bijective")
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return VertexMap(tuple(inv))

    def fixed_points(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.images) if x == y)


def identity_map(n: int) -> VertexMap:
    return VertexMap(tuple(range(n)))


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Csp:
    """Backtracking kernel shared by homomorphism, isomorphism and
    automorphism searches."""

    def __init__(
        self,
        source: SimpleGraph,
        target: SimpleGraph,
        *,
        partial: Optional[dict[int, int]] = None,
        allowed_images: Optional[Iterable[int]] = None,
        forbidden_images: Optional[Iterable[int]] = None,
        per_vertex_allowed: Optional[dict[int, Iterable[int]]] = None,
        bijective: bool = False,
        budget: Optional[SearchBudget] = None,
    ):
        self.src = source
        self.tgt = target
        self.bijective = bijective
        self.budget = budget or SearchBudget.default()
        self.expanded = 0
        self.n = source.num_vertices
        self.m = target.num_vertices
        self.tmask = target.neighbor_masks()
        full = (1 << self.m) - 1
        if allowed_images is not None:
            base = 0
            for v in allowed_images:
                base |= 1 << v
        else:
            base = full
        if forbidden_images is not None:
            for v in forbidden_images:
                base &= ~(1 << v)
        if bijective:
            # degree prefilter; iso also requires equal counts
            if self.n != self.m:
                base = 0
        self.cand = [base] * self.n
        if bijective and base:
            tdeg = [target.degree(v) for v in range(self.m)]
            for u in range(self.n):
                du = source.degree(u)
                mask = 0
                for v in _iter_bits(base):
                    if tdeg[v] == du:
                        mask |= 1 << v
                self.cand[u] = mask
        if per_vertex_allowed:
            for u, vals in per_vertex_allowed.items():
                mask = 0
                for v in vals:
                    mask |= 1 << v
                self.cand[u] &= mask
        self.assigned: list[int] = [-1] * self.n
        self.partial = dict(partial or {})

    # -- propagation -------------------------------------------------------

    def _revise_all(self, queue: list[int]) -> bool:
        """AC-3 over source edges: keep images with a supporting neighbor image."""
        while queue:
            u = queue.pop()
            cu = self.cand[u]
            for w in self.src.neighbors(u):
                if self.assigned[w] >= 0:
                    continue
                cw = self.cand[w]
                new = 0
                for h in _iter_bits(cw):
                    if self.tmask[h] & cu:
                        new |= 1 << h
                if new != cw:
                    if not new:
                        return False
                    self.cand[w] = new
                    queue.append(w)
        return True

    def _assign(self, u: int, h: int, trail: list[tuple[int, int]]) -> bool:
        """Set f(u) = h, forward-check, then propagate. trail records undo info."""
        for i, c in enumerate(self.cand):
            trail.append((i, c))
        self.assigned[u] = h
        self.cand[u] = 1 << h
        bit = 1 << h
        touched = [u]
        for w in range(self.n):
            if w == u or self.assigned[w] >= 0:
                continue
            c = self.cand[w]
            if self.src.has_edge(u, w):
                c &= self.tmask[h]
            elif self.bijective:
                # isomorphism: non-adjacent vertices need non-adjacent images
                c &= ~self.tmask[h]
            if self.bijective:
                c &= ~bit
            if c != self.cand[w]:
                self.cand[w] = c
                if not c:
                    return False
                touched.append(w)
        return self._revise_all(touched)

    def _undo(self, u: int, trail: list[tuple[int, int]]) -> None:
        self.assigned[u] = -1
        for i, c in reversed(trail):
            self.cand[i] = c

    # -- search ------------------------------------------------------------

    def _pick_variable(self) -> int:
        best, best_key = -1, None
        for u in range(self.n):
            if self.assigned[u] >= 0:
                continue
            assigned_nbrs = sum(1 for w in self.src.neighbors(u) if self.assigned[w] >= 0)
            popcount = bin(self.cand[u]).count("1")
            key = (-assigned_nbrs, popcount, u)
            if best_key is None or key < best_key:
                best, best_key = u, key
        return best

    def solutions(self) -> Iterator[VertexMap]:
        """Yield all solutions in deterministic order."""
        # seed with the requested partial assignment
        trail: list[tuple[int, int]] = []
        for u, h in sorted(self.partial.items()):
            if not self.cand[u] & (1 << h):
                return
            self.expanded += 1
            if self.expanded > self.budget.node_cap:
                raise BudgetExhaustedError(self.expanded)
            if not self._assign(u, h, trail):
                return
        yield from self._search()

    def _search(self) -> Iterator[VertexMap]:
        u = self._pick_variable()
        if u < 0:
            yield VertexMap(tuple(self.assigned))
            return
        for h in _iter_bits(self.cand[u]):
            self.expanded += 1
            if self.expanded > self.budget.node_cap:
                raise BudgetExhaustedError(self.expanded)
            trail: list[tuple[int, int]] = []
            if self._assign(u, h, trail):
                yield from self._search()
            self._undo(u, trail)


def iter_homomorphisms(
    source: SimpleGraph,
    target: SimpleGraph,
    *,
    partial: Optional[dict[int, int]] = None,
    allowed_images: Optional[Iterable[int]] = None,
    forbidden_images: Optional[Iterable[int]] = None,
    per_vertex_allowed: Optional[dict[int, Iterable[int]]] = None,
    bijective: bool = False,
    budget: Optional[SearchBudget] = None,
) -> Iterator[VertexMap]:
    """All homomorphisms source -> target satisfying the given restrictions."""
    csp = _Csp(
        source,
        target,
        partial=partial,
        allowed_images=allowed_images,
        forbidden_images=forbidden_images,
        per_vertex_allowed=per_vertex_allowed,
        bijective=bijective,
        budget=budget,
    )
    return csp.solutions()


def find_homomorphism(
    source: SimpleGraph,
    target: SimpleGraph,
    *,
    partial: Optional[dict[int, int]] = None,
    allowed_images: Optional[Iterable[int]] = None,
    forbidden_images: Optional[Iterable[int]] = None,
    per_vertex_allowed: Optional[dict[int, Iterable[int]]] = None,
    bijective: bool = False,
    budget: Optional[SearchBudget] = None,
) -> Optional[VertexMap]:
    """First homomorphism in deterministic order, or None if none exists.

    Raises BudgetExhaustedError when the budget runs out: absence of a
    homomorphism is only ever reported after an exhaustive search.
    """
    for vmap in iter_homomorphisms(
        source,
        target,
        partial=partial,
        allowed_images=allowed_images,
        forbidden_images=forbidden_images,
        per_vertex_allowed=per_vertex_allowed,
        bijective=bijective,
        budget=budget,
    ):
        return vmap
    return None


def _verified_orbit_reps(graph: SimpleGraph, automorphisms: Iterable[VertexMap]) -> list[int]:
    """Orbit representatives under the given maps; rejects non-automorphisms."""
    perms = list(automorphisms)
    for p in perms:
        if not p.is_automorphism(graph):
            raise ValueError("symmetry hint is not an automorphism of the graph")
    n = graph.num_vertices
    seen = [False] * n
    reps = []
    for v in range(n):
        if seen[v]:
            continue
        reps.append(v)
        # orbit closure under the provided generators
        stack = [v]
        seen[v] = True
        while stack:
            x = stack.pop()
            for p in perms:
                y = p(x)
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
    return reps


def is_core_oracle(
    graph: SimpleGraph,
    budget: Optional[SearchBudget] = None,
    automorphisms: Optional[Iterable[VertexMap]] = None,
) -> bool:
    """True iff every endomorphism is surjective (hence an automorphism).

    Checks per-vertex avoidability: the graph fails to be a core exactly when
    some endomorphism misses some vertex.  Verified automorphisms, when
    given, reduce the avoided vertex to one per orbit (an endomorphism
    avoiding w conjugates to one avoiding any image of w).
    """
    reps = (
        _verified_orbit_reps(graph, automorphisms)
        if automorphisms is not None
        else range(graph.num_vertices)
    )
    for w in reps:
        if (
            find_homomorphism(graph, graph, forbidden_images=[w], budget=budget)
            is not None
        ):
            return False
    return True


def verify_retraction(
    graph: SimpleGraph, vmap: VertexMap, target_vertices: Iterable[int]
) -> bool:
    """Check that vmap is an endomorphism onto target_vertices fixing them."""
    target = set(target_vertices)
    if len(vmap) != graph.num_vertices:
        return False
    if not vmap.is_endomorphism(graph):
        return False
    if set(vmap.images) != target:
        return False
    return all(vmap(x) == x for x in target)


def is_endo_transitive_oracle(
    graph: SimpleGraph,
    budget: Optional[SearchBudget] = None,
    automorphisms: Optional[Iterable[VertexMap]] = None,
) -> bool:
    """True iff for every ordered pair (u, v) some endomorphism sends u to v.

    Verified automorphisms, when given, serve as ready-made witnesses for the
    pairs they cover; every uncovered pair is settled by exhaustive search.
    """
    n = graph.num_vertices
    covered: set[tuple[int, int]] = set()
    if automorphisms is not None:
        perms = list(automorphisms)
        for p in perms:
            if not p.is_automorphism(graph):
                raise ValueError("symmetry hint is not an automorphism of the graph")
        for p in perms:
            for u in range(n):
                covered.add((u, p(u)))
    for u in range(n):
        for v in range(n):
            if (u, v) in covered:
                continue
            if find_homomorphism(graph, graph, partial={u: v}, budget=budget) is None:
                return False
    return True


def image_is_retract_check(
    graph: SimpleGraph, vmap: VertexMap, budget: Optional[SearchBudget] = None
) -> bool:
    """Whether the image of the given endomorphism is a retract of the graph.

    Searches for a retraction onto the induced image: an endomorphism fixing
    the image pointwise with all values inside it.
    """
    if not vmap.is_endomorphism(graph):
        raise ValueError("map is not an endomorphism")
    image = sorted(vmap.image())
    retraction = find_homomorphism(
        graph,
        graph,
        partial={x: x for x in image},
        allowed_images=image,
        budget=budget,
    )
    return retraction is not None
