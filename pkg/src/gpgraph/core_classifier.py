"""Core/retract classification of generalized Petersen graphs.

For non-bipartite G(n, k) write d = gcd(n, k) and let a be the unique
0 < a < n/d with a*k = d (mod n).  The graph is a core exactly when a
minimum odd cycle uses a spoke, which happens iff one of

    (c1)  n/d is even,
    (c2)  a + d is even and a >= d + 2,
    (c3)  a + d is odd and a + d + 2 <= n/d.

Otherwise the graph retracts onto the inner cycle through v_0 and an
explicit retraction is constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .gp_core import (
    CycleWitness,
    GPParams,
    GraphError,
    SimpleGraph,
    build_gp,
    generalized_prism,
    is_bipartite_gp,
    min_odd_cycle_witnesses,
)
from .hom_engine import VertexMap, verify_retraction
from .symmetry import is_vertex_transitive


class CoreStatus(Enum):
    BIPARTITE = "bipartite"
    CORE = "core"
    NOT_CORE = "not_core"


class CoreReason(Enum):
    C1 = "c1"
    C2 = "c2"
    C3 = "c3"


class NotCoreCase(Enum):
    A_EVEN_SMALL = "a_even_small"  # a + d even, a <= d
    A_ODD_LARGE = "a_odd_large"    # a + d odd, a + d >= n/d


@dataclass(frozen=True)
class CoreParams:
    """Derived arithmetic data for (n, k): d = gcd, inner length, witness a."""

    d: int
    a: int
    g_inner: int


@dataclass(frozen=True)
class CoreVerdict:
    status: CoreStatus
    reason: Optional[CoreReason]
    not_core_case: Optional[NotCoreCase]
    d: int
    a: int

    @property
    def is_core(self) -> bool:
        return self.status is CoreStatus.CORE

    def to_json_obj(self) -> dict:
        return {
            "status": self.status.value,
            "reason": self.reason.value if self.reason else None,
            "d": self.d,
            "a": self.a,
        }


def compute_a(params: GPParams) -> int:
    """The unique 0 < a < n/d with a*k = d (mod n), via a modular inverse."""
    d, g = params.d, params.inner_len
    a = pow(params.k // d, -1, g)  # in (0, n/d) since g >= 3
    assert 0 < a < g and (a * params.k) % params.n == d % params.n
    return a


def core_params(params: GPParams) -> CoreParams:
    return CoreParams(d=params.d, a=compute_a(params), g_inner=params.inner_len)


def classify_core(params: GPParams) -> CoreVerdict:
    """Closed-form classification of G(n, k) as bipartite, core, or retract."""
    cp = core_params(params)
    d, a, g = cp.d, cp.a, cp.g_inner
    if is_bipartite_gp(params):
        return CoreVerdict(CoreStatus.BIPARTITE, None, None, d, a)
    if g % 2 == 0:
        return CoreVerdict(CoreStatus.CORE, CoreReason.C1, None, d, a)
    if (a + d) % 2 == 0:
        if a >= d + 2:
            return CoreVerdict(CoreStatus.CORE, CoreReason.C2, None, d, a)
        return CoreVerdict(CoreStatus.NOT_CORE, None, NotCoreCase.A_EVEN_SMALL, d, a)
    if a + d + 2 <= g:
        return CoreVerdict(CoreStatus.CORE, CoreReason.C3, None, d, a)
    return CoreVerdict(CoreStatus.NOT_CORE, None, NotCoreCase.A_ODD_LARGE, d, a)


def has_spoked_min_odd_cycle(params: GPParams, max_n: int = 32) -> bool:
    """Whether some cycle at odd-girth length contains a spoke edge."""
    return any(w.spoke_count > 0 for w in min_odd_cycle_witnesses(params, max_n=max_n))


# -- explicit retraction ----------------------------------------------------


def retraction_target(params: GPParams) -> list[int]:
    """Vertex ids of the inner cycle through v_0 (indices = multiples of d)."""
    return [params.n + m for m in range(0, params.n, params.d)]


def _case1_images(n: int, k_eff: int, d: int, a_eff: int) -> list[int]:
    """Retraction images for the even case (a + d even, a <= d).

    Writing i = q*d + r with 0 <= r < d:
        f(u_i) = v_{q*d + (r+1)*k}   if r < a
        f(u_i) = v_{(q+1)*d + k}     if a <= r < d and r = a (mod 2)
        f(u_i) = v_{(q+1)*d}         if a < r < d and r != a (mod 2)
    and f(v_j) = v_{l - k} where f(u_j) = v_l.
    """
    images = [0] * (2 * n)
    for i in range(n):
        q, r = divmod(i, d)
        if r < a_eff:
            l = (q * d + (r + 1) * k_eff) % n
        elif (r - a_eff) % 2 == 0:
            l = ((q + 1) * d + k_eff) % n
        else:
            l = ((q + 1) * d) % n
        images[i] = n + l
        images[n + i] = n + (l - k_eff) % n
    return images


def build_retraction(params: GPParams) -> VertexMap:
    """Explicit retraction of a non-core non-bipartite G(n, k) onto the inner
    cycle through v_0.

    The odd case (a + d odd, a + d >= n/d) reduces to the even case on the
    same edge set via k' = n - k, whose witness is a' = n/d - a.
    """
    verdict = classify_core(params)
    if verdict.status is not CoreStatus.NOT_CORE:
        raise GraphError(
            f"G({params.n},{params.k}) is {verdict.status.value}: no retraction exists"
        )
    n, k, d = params.n, params.k, params.d
    a, g = verdict.a, params.inner_len
    if verdict.not_core_case is NotCoreCase.A_EVEN_SMALL:
        images = _case1_images(n, k, d, a)
    else:
        k2, a2 = n - k, g - a
        assert (a2 * k2) % n == d % n and (a2 + d) % 2 == 0 and a2 <= d
        images = _case1_images(n, k2, d, a2)
    vmap = VertexMap(tuple(images))
    if not verify_retraction(build_gp(params), vmap, retraction_target(params)):
        raise RuntimeError(
            f"constructed map for G({params.n},{params.k}) failed retraction check"
        )
    return vmap


# -- witness cycles for the core cases --------------------------------------


def c2_witness_cycle(params: GPParams) -> CycleWitness:
    """The two-spoke cycle of length n/d - a + d + 2 available under (c2)."""
    verdict = classify_core(params)
    if verdict.reason is not CoreReason.C2:
        raise GraphError(f"G({params.n},{params.k}) does not satisfy condition (c2)")
    n, k, d = params.n, params.k, params.d
    a, g = verdict.a, params.inner_len
    verts = [n + (lam * k) % n for lam in range(a, g)]  # v_{a*k} .. v_{(g-1)*k}
    verts.append(n + 0)                                 # v_0 = v_{g*k}
    verts.extend(range(0, d + 1))                       # u_0 .. u_d; u_d ~ v_d = v_{a*k}
    return CycleWitness(tuple(verts), spoke_count=2)


def c3_witness_cycle(params: GPParams) -> CycleWitness:
    """The two-spoke cycle of length a + d + 2 available under (c3)."""
    verdict = classify_core(params)
    if verdict.reason is not CoreReason.C3:
        raise GraphError(f"G({params.n},{params.k}) does not satisfy condition (c3)")
    n, k, d = params.n, params.k, params.d
    a = verdict.a
    verts = [n + (lam * k) % n for lam in range(0, a + 1)]  # v_0 .. v_{a*k} = v_d
    verts.extend(range(d, -1, -1))                          # u_d .. u_0; u_0 ~ v_0
    return CycleWitness(tuple(verts), spoke_count=2)


# -- prism-family endomorphism ----------------------------------------------


def prism_endomorphism(ell: int, m: int) -> VertexMap:
    """Endomorphism z_{i,j} -> x_{(i+j) mod ell} of the generalized prism.

    The image is the first rim; for m = 1 the graph is G(ell, 1) and the map
    sends u_i to u_i and v_i to u_{i+1}.
    """
    graph = generalized_prism(ell, m)
    images = [0] * graph.num_vertices
    for j in range(m + 1):
        for i in range(ell):
            images[j * ell + i] = (i + j) % ell
    vmap = VertexMap(tuple(images))
    assert vmap.is_endomorphism(graph)
    return vmap


def is_endomorphism_transitive(params: GPParams) -> bool:
    """Closed form: endomorphism-transitive iff vertex-transitive or bipartite."""
    return is_vertex_transitive(params) or is_bipartite_gp(params)
