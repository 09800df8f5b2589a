"""Power polytopes 2^K and proper central involutions."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cstring import StringCGroup, schlafli
from .geometry import FacePoset, build_poset
from .kernel import (CAPS, CapExceeded, FiniteGroup, Permutation, closure,
                     is_power_of_two, log2_exact)


def _bit_permutation(pi: np.ndarray) -> np.ndarray:
    """Image of every v-bit mask when bit u is sent to bit pi[u]."""
    v = pi.size
    x = np.arange(2**v, dtype=np.int64)
    out = np.zeros_like(x)
    for u in range(v):
        out |= ((x >> u) & 1) << int(pi[u])
    return out


def power_2k(K: StringCGroup, poset: FacePoset | None = None) -> StringCGroup:
    """Gamma(2^K) acting on {0,1}^v (as bitmasks) disjoint-union the flags of K."""
    sym = schlafli(K)
    if not all(is_power_of_two(p) for p in sym):
        raise ValueError(f"Schlafli symbol {sym} has an entry that is not a power of 2")
    P = poset or build_poset(K)
    geo = P.meta["geometry"]
    v = P.counts[0]
    cube = 2**v
    nflags = geo.cayley.size
    degree = cube + nflags
    if degree > CAPS.max_degree:
        raise CapExceeded("degree", CAPS.max_degree, degree)
    x = np.arange(cube, dtype=np.int64)
    flags = np.arange(nflags, dtype=np.int64) + cube
    # vertex 0 is the base vertex
    gens = [Permutation(np.concatenate([x ^ 1, flags]))]
    for j in range(K.rank):
        pi = geo.face_action(j)[0]
        on_flags = geo.cayley.left[:, j] + cube
        gens.append(Permutation(np.concatenate([_bit_permutation(pi), on_flags])))
    G = StringCGroup(gens, name=f"2^{K.name}")
    expected = 2 ** (log2_exact(K.order()) + v)
    if G.order() > CAPS.max_elements:
        raise CapExceeded("elements", CAPS.max_elements, G.order())
    if G.order() != expected:
        raise AssertionError(f"{G.name}: order {G.order()} != {expected}")
    G.base_vertices = v
    return G


def translation_subgroup(G: StringCGroup) -> FiniteGroup:
    """Coordinate flips {0,1}^v: conjugates of rho_0 under the lifted K."""
    from .kernel import normal_closure
    return normal_closure(G, [G.gens[0]])


@dataclass(frozen=True)
class CentralInvolution:
    element: Permutation
    avoids_facet: bool


def center_elements(G: StringCGroup) -> list[Permutation]:
    if G.order() > 2**16:
        raise CapExceeded("center enumeration", 2**16, G.order())
    elems = closure(G.gens, G.degree, limit=2**16)
    return [z for z in elems if all(z * g == g * z for g in G.gens)]


def proper_central_involutions(G: StringCGroup) -> list[CentralInvolution]:
    """Central involutions outside the vertex-figure parabolic {1..d-1}."""
    d = G.rank
    vf = G.parabolic(range(1, d))
    facet = G.parabolic(range(d - 1))
    out = []
    for z in center_elements(G):
        if z.is_identity() or not (z * z).is_identity():
            continue
        if z in vf:
            continue
        out.append(CentralInvolution(z, z not in facet))
    return out


def predicted_order_2kg(K: StringCGroup, m: int, v: int | None = None) -> int:
    """2^(n + (m+1) v / 2), given a central involution avoiding both parabolics."""
    if m < 3:
        raise ValueError("m >= 3")
    if not any(c.avoids_facet for c in proper_central_involutions(K)):
        raise ValueError(f"{K.name} has no proper central involution avoiding the facet group")
    if v is None:
        v = build_poset(K).counts[0]
    if v % 2:
        raise ValueError(f"v={v} is odd")
    n = log2_exact(K.order())
    return 2 ** (n + (m + 1) * v // 2)
