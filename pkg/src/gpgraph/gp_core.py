"""Generalized Petersen graphs and odd-cycle structure.

Vertex layout for G(n, k): outer vertex u_i has id i, inner vertex v_i has
id n + i.  Edges are the outer rim u_i u_{i+1}, the inner rims v_i v_{i+k}
(gcd(n, k) cycles of length n/gcd(n, k)), and the spokes u_i v_i.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Invalid graph construction or query."""


class BipartiteGraphError(GraphError):
    """Raised when an odd-cycle query is made on a bipartite graph."""


@dataclass(frozen=True)
class GPParams:
    """Parameters (n, k) with 3 <= n and 0 < k < n/2."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise GraphError(f"n must be at least 3, got n={self.n}")
        if not (0 < self.k and 2 * self.k < self.n):
            raise GraphError(
                f"k must satisfy 0 < k < n/2, got k={self.k} with n={self.n}"
            )

    @property
    def d(self) -> int:
        """gcd(n, k): the number of inner cycles."""
        return math.gcd(self.n, self.k)

    @property
    def inner_len(self) -> int:
        """Length n/gcd(n, k) of each inner cycle."""
        return self.n // self.d


class Side(Enum):
    OUTER = "u"
    INNER = "v"


@dataclass(frozen=True)
class GPVertex:
    """A labeled vertex of G(n, k); index is taken mod n."""

    side: Side
    index: int

    def id(self, n: int) -> int:
        i = self.index % n
        return i if self.side is Side.OUTER else n + i

    def label(self, n: int) -> str:
        return f"{self.side.value}{self.index % n}"


def outer(i: int) -> GPVertex:
    return GPVertex(Side.OUTER, i)


def inner(i: int) -> GPVertex:
    return GPVertex(Side.INNER, i)


class SimpleGraph:
    """Undirected simple graph on vertices 0..num_vertices-1."""

    def __init__(
        self,
        num_vertices: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
        meta: Optional[dict] = None,
    ):
        if num_vertices < 0:
            raise GraphError("vertex count must be nonnegative")
        self.num_vertices = num_vertices
        adj: list[set[int]] = [set() for _ in range(num_vertices)]
        for a, b in edges:
            if not (0 <= a < num_vertices and 0 <= b < num_vertices):
                raise GraphError(f"edge ({a},{b}) out of range")
            if a == b:
                raise GraphError(f"loop at vertex {a} not allowed")
            adj[a].add(b)
            adj[b].add(a)
        self._adj = tuple(frozenset(s) for s in adj)
        self.edges = tuple(
            sorted((a, b) for a in range(num_vertices) for b in adj[a] if a < b)
        )
        if labels is not None:
            if len(labels) != num_vertices:
                raise GraphError("label count must match vertex count")
            self.labels = tuple(labels)
        else:
            self.labels = tuple(f"x{i}" for i in range(num_vertices))
        self.meta = dict(meta or {})
        self._masks: Optional[tuple[int, ...]] = None

    # -- basic queries ----------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adj[a]

    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency as bitmasks, cached."""
        if self._masks is None:
            masks = []
            for v in range(self.num_vertices):
                m = 0
                for w in self._adj[v]:
                    m |= 1 << w
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return (
            self.num_vertices == other.num_vertices and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.num_vertices, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph({self.num_vertices} vertices, {self.num_edges} edges)"

    # -- traversals -------------------------------------------------------

    def bfs_distances(self, source: int, allowed: Optional[set[int]] = None) -> list[int]:
        """Distances from source; -1 for unreachable. allowed restricts vertices."""
        dist = [-1] * self.num_vertices
        dist[source] = 0
        q = deque([source])
        while q:
            v = q.popleft()
            for w in self._adj[v]:
                if dist[w] < 0 and (allowed is None or w in allowed):
                    dist[w] = dist[v] + 1
                    q.append(w)
        return dist

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.num_vertices
        comps = []
        for s in range(self.num_vertices):
            if seen[s]:
                continue
            comp = []
            q = deque([s])
            seen[s] = True
            while q:
                v = q.popleft()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        q.append(w)
            comps.append(sorted(comp))
        return comps

    def two_coloring(self) -> Optional[list[int]]:
        """A proper 2-coloring, or None if an odd cycle exists."""
        color = [-1] * self.num_vertices
        for s in range(self.num_vertices):
            if color[s] >= 0:
                continue
            color[s] = 0
            q = deque([s])
            while q:
                v = q.popleft()
                for w in self._adj[v]:
                    if color[w] < 0:
                        color[w] = 1 - color[v]
                        q.append(w)
                    elif color[w] == color[v]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["SimpleGraph", dict[int, int]]:
        """Induced subgraph plus old->new id mapping."""
        verts = sorted(set(vertices))
        remap = {v: i for i, v in enumerate(verts)}
        edges = [
            (remap[a], remap[b]) for a, b in self.edges if a in remap and b in remap
        ]
        labels = [self.labels[v] for v in verts]
        return SimpleGraph(len(verts), edges, labels=labels), remap


# -- constructions --------------------------------------------------------


def build_gp(params: GPParams) -> SimpleGraph:
    """The generalized Petersen graph G(n, k): 2n vertices, 3n edges."""
    n, k = params.n, params.k
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))            # outer rim
        edges.append((n + i, n + (i + k) % n))    # inner rims
        edges.append((i, n + i))                  # spokes
    labels = [f"u{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
    return SimpleGraph(2 * n, edges, labels=labels, meta={"n": n, "k": k})


def is_bipartite_gp(params: GPParams) -> bool:
    """Closed form: G(n, k) is bipartite iff n is even and k is odd."""
    return params.n % 2 == 0 and params.k % 2 == 1


def kronecker_cover(graph: SimpleGraph) -> SimpleGraph:
    """Tensor product with K2: vertices (v, 0), (v, 1); edges across sides."""
    m = graph.num_vertices
    edges = []
    for a, b in graph.edges:
        edges.append((a, m + b))
        edges.append((b, m + a))
    labels = [f"{graph.labels[v]}.0" for v in range(m)] + [
        f"{graph.labels[v]}.1" for v in range(m)
    ]
    return SimpleGraph(2 * m, edges, labels=labels)


def generalized_prism(ell: int, m: int) -> SimpleGraph:
    """Two ell-cycles joined by ell paths of length m.

    Vertex z_{i,j} has id j*ell + i (0 <= j <= m); for m=1 this is G(ell, 1).
    """
    if ell < 3:
        raise GraphError(f"cycle length must be at least 3, got {ell}")
    if m < 1:
        raise GraphError(f"path length must be at least 1, got {m}")
    if m == 1:
        return build_gp(GPParams(ell, 1))
    edges = []
    for i in range(ell):
        edges.append((i, (i + 1) % ell))                      # first rim
        edges.append((m * ell + i, m * ell + (i + 1) % ell))  # second rim
        for j in range(m):
            edges.append((j * ell + i, (j + 1) * ell + i))    # joining paths
    labels = [f"x{i}" for i in range(ell)]
    for j in range(1, m):
        labels += [f"w{i}.{j}" for i in range(ell)]
    labels += [f"y{i}" for i in range(ell)]
    return SimpleGraph((m + 1) * ell, edges, labels=labels)


# -- odd cycles ------------------------------------------------------------


def odd_girth(graph: SimpleGraph) -> Optional[int]:
    """Length of a shortest odd cycle, or None if the graph is bipartite.

    Runs one BFS per vertex on the bipartite double cover; the shortest odd
    closed walk through s is the double-cover distance from (s, even) to
    (s, odd), and the minimum over s is attained by a cycle.
    """
    n = graph.num_vertices
    best: Optional[int] = None
    for s in range(n):
        # ids: vertex v with parity p -> 2v + p
        dist = [-1] * (2 * n)
        dist[2 * s] = 0
        q = deque([2 * s])
        found = None
        while q:
            node = q.popleft()
            v, p = node >> 1, node & 1
            dv = dist[node]
            if best is not None and dv >= best:
                break
            for w in graph.neighbors(v):
                nxt = 2 * w + (1 - p)
                if dist[nxt] < 0:
                    dist[nxt] = dv + 1
                    if nxt == 2 * s + 1:
                        found = dv + 1
                        break
                    q.append(nxt)
            if found is not None:
                break
        if found is not None and (best is None or found < best):
            best = found
    return best


@dataclass(frozen=True)
class CycleWitness:
    """A simple cycle, stored with a canonical vertex rotation."""

    vertices: tuple[int, ...]
    spoke_count: int = field(default=0)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_cycle_in(self, graph: SimpleGraph) -> bool:
        verts = self.vertices
        if len(set(verts)) != len(verts) or len(verts) < 3:
            return False
        return all(
            graph.has_edge(verts[i], verts[(i + 1) % len(verts)])
            for i in range(len(verts))
        )


def _canonical_cycle(verts: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect so the minimum vertex is first and its smaller neighbor second."""
    m = min(verts)
    i = verts.index(m)
    fwd = tuple(verts[(i + t) % len(verts)] for t in range(len(verts)))
    rev = tuple(verts[(i - t) % len(verts)] for t in range(len(verts)))
    return fwd if fwd[1] <= rev[1] else rev


def _spoke_count(verts: Sequence[int], n: int) -> int:
    cnt = 0
    for i in range(len(verts)):
        a, b = verts[i], verts[(i + 1) % len(verts)]
        if (a < n) != (b < n):
            cnt += 1
    return cnt


def _cycles_of_length(graph: SimpleGraph, length: int) -> list[tuple[int, ...]]:
    """All simple cycles of exactly the given length.

    Rooted DFS at each minimum vertex, restricted to larger ids, pruned by
    BFS distance back to the root.
    """
    n = graph.num_vertices
    out: list[tuple[int, ...]] = []
    adj = [sorted(graph.neighbors(v)) for v in range(n)]
    for root in range(n):
        allowed = {v for v in range(n) if v >= root}
        dist = graph.bfs_distances(root, allowed=allowed)
        on_path = [False] * n
        on_path[root] = True
        path = [root]

        def extend() -> None:
            v = path[-1]
            depth = len(path) - 1
            if depth == length - 1:
                if graph.has_edge(v, root) and path[1] < path[-1]:
                    out.append(tuple(path))
                return
            for w in adj[v]:
                if w <= root or on_path[w]:
                    continue
                if dist[w] < 0 or depth + 1 + dist[w] > length:
                    continue
                on_path[w] = True
                path.append(w)
                extend()
                path.pop()
                on_path[w] = False

        extend()
    return out


DEFAULT_ENUMERATION_BOUND = 32


def min_odd_cycle_witnesses(
    params: GPParams, max_n: int = DEFAULT_ENUMERATION_BOUND
) -> list[CycleWitness]:
    """All cycles of G(n, k) whose length equals the odd girth.

    Exhaustive enumeration; refuses for n beyond max_n. Raises on bipartite
    input, where no odd cycle exists.
    """
    if params.n > max_n:
        raise GraphError(
            f"n={params.n} exceeds the exhaustive enumeration bound {max_n}; "
            "raise max_n to override"
        )
    graph = build_gp(params)
    g = odd_girth(graph)
    if g is None:
        raise BipartiteGraphError(
            f"G({params.n},{params.k}) is bipartite: no odd cycles"
        )
    witnesses = [
        CycleWitness(_canonical_cycle(c), _spoke_count(c, params.n))
        for c in _cycles_of_length(graph, g)
    ]
    witnesses.sort(key=lambda w: w.vertices)
    return witnesses


# -- serialization ---------------------------------------------------------


def graph_to_json_obj(graph: SimpleGraph) -> dict:
    return {
        "n": graph.meta.get("n"),
        "k": graph.meta.get("k"),
        "vertices": list(graph.labels),
        "edges": [[a, b] for a, b in graph.edges],
    }


def graph_to_json(graph: SimpleGraph) -> str:
    return json.dumps(graph_to_json_obj(graph), indent=2) + "\n"


def graph_to_dot(graph: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(graph.num_vertices):
        lines.append(f'  {v} [label="{graph.labels[v]}"];')
    for a, b in graph.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
