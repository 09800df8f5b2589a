"""Alternating semiregular polytopes from tail-triangle groups.

The group lives in Gamma(P) x Gamma(Q), where P and Q are flat towers of rank
d-1 sharing their facet K.  Its generators are the diagonal tail
(alpha_i, beta_i) for i <= d-3 and the two apexes (alpha_{d-2}, 1), (1, beta_{d-2}).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cstring import StringCGroup
from .fap import n_plus
from .geometry import POSET_CAP, CosetGeometry, FacePoset, FaceType, build_poset
from .kernel import (CAPS, CapExceeded, FiniteGroup, Permutation,
                     generator_matching_isomorphic, pair)
from .mix import build_flat_tower, tower_order
from .toroidal import torus


@dataclass
class TailTriangleGroup:
    group: FiniteGroup
    tail: tuple[Permutation, ...]
    apexes: tuple[Permutation, Permutation]
    params: tuple[tuple[int, ...], tuple[int, int]]
    P: StringCGroup
    Q: StringCGroup

    @property
    def rank(self) -> int:
        return len(self.tail) + 2

    @property
    def gens(self) -> tuple[Permutation, ...]:
        return (*self.tail, *self.apexes)

    def order(self) -> int:
        return self.group.order()

    @property
    def name(self) -> str:
        ns, (n, m) = self.params
        return f"semireg({','.join(map(str, ns))};{n},{m})"


def _tower(ns: tuple[int, ...]) -> StringCGroup:
    return torus(ns[0]) if len(ns) == 1 else build_flat_tower(ns)


def predicted_order(ns: Sequence[int], last: tuple[int, int]) -> int:
    d = len(ns) + 4
    return 2 ** (sum(ns) + last[0] + last[1] - 3 * (d - 3))


def build_semiregular(ns: Sequence[int], last: tuple[int, int]) -> TailTriangleGroup:
    """Tail-triangle group of rank ``d = len(ns) + 4``."""
    ns = tuple(int(x) for x in ns)
    n, m = (int(x) for x in last)
    if any(x < 5 for x in (*ns, n, m)):
        raise ValueError("all parameters must be >= 5")
    if predicted_order(ns, (n, m)) > CAPS.max_elements:
        raise CapExceeded("elements", CAPS.max_elements, predicted_order(ns, (n, m)))
    P = _tower(ns + (n,))
    Q = P if n == m else _tower(ns + (m,))
    d = P.rank + 1
    if 2 * P.degree > CAPS.max_degree and P is Q or P.degree + Q.degree > CAPS.max_degree:
        raise CapExceeded("degree", CAPS.max_degree, P.degree + Q.degree)
    eP = Permutation.identity(P.degree)
    eQ = Permutation.identity(Q.degree)
    tail = tuple(pair(P.gens[i], Q.gens[i]) for i in range(d - 2))
    apexes = (pair(P.gens[d - 2], eQ), pair(eP, Q.gens[d - 2]))
    G = FiniteGroup((*tail, *apexes))
    T = TailTriangleGroup(G, tail, apexes, (ns, (n, m)), P, Q)
    if G.order() != predicted_order(ns, (n, m)):
        raise AssertionError(f"{T.name}: order {G.order()} != {predicted_order(ns, (n, m))}")
    return T


def order_factorization(T: TailTriangleGroup) -> tuple[int, int, int]:
    """(|N_{d-2}(P)|, |N_{d-2}(Q)|, |Gamma(K)|), whose product is |T|."""
    d = T.rank
    K = T.P.parabolic(range(d - 2))
    return n_plus(T.P, d - 2).order(), n_plus(T.Q, d - 2).order(), K.order()


def doubling_automorphism_exists(T: TailTriangleGroup) -> bool:
    a, b = T.apexes
    return generator_matching_isomorphic(T.gens, (*T.tail, b, a))


def full_automorphism_group(T: TailTriangleGroup) -> FiniteGroup:
    """T itself, or T extended by the apex swap when that is an automorphism."""
    if not doubling_automorphism_exists(T):
        return T.group
    if T.P is not T.Q:
        # generator matching succeeded with distinct but equal-typed towers
        raise NotImplementedError("doubling needs identical constituents")
    D = T.P.degree
    swap = Permutation(np.concatenate([np.arange(D, 2 * D), np.arange(D)]))
    return FiniteGroup((*T.gens, swap))


def semireg_face_types(d: int) -> list[FaceType]:
    """Rank i <= d-3 omits alpha_i; rank d-2 is the tail; facets add one apex."""
    A, B = d - 2, d - 1
    tail = tuple(range(d - 2))
    types = [FaceType(i, tuple(j for j in range(d) if j != i)) for i in range(d - 2)]
    types.append(FaceType(d - 2, tail))
    types.append(FaceType(d - 1, (*tail, A), "P"))
    types.append(FaceType(d - 1, (*tail, B), "Q"))
    return types


def build_semireg_poset(T: TailTriangleGroup, limit: int = POSET_CAP) -> FacePoset:
    geo = CosetGeometry(T.gens, T.rank, semireg_face_types(T.rank), limit=limit, name=T.name)
    P = geo.poset
    P.meta["geometry"] = geo
    if not vertex_transitive(P):
        raise AssertionError(f"{T.name}: not vertex-transitive")
    return P


def vertex_transitive(P: FacePoset) -> bool:
    geo: CosetGeometry = P.meta["geometry"]
    acts = [geo.face_action(j)[0] for j in range(len(geo.cayley.gens))]
    seen = np.zeros(P.counts[0], dtype=bool)
    seen[0] = True
    frontier = np.array([0])
    while frontier.size:
        nxt = np.concatenate([a[frontier] for a in acts])
        nxt = np.unique(nxt[~seen[nxt]])
        seen[nxt] = True
        frontier = nxt
    return bool(seen.all())


def families_alternate(P: FacePoset) -> bool:
    """Every ridge lies in one P-facet and one Q-facet, so families alternate."""
    d = P.rank
    labels = P.labels[d - 1]
    for ups in P.covers[d - 2]:
        if sorted(labels[b] for b in ups) != ["P", "Q"]:
            return False
    return True


def facet_family_counts(P: FacePoset) -> dict[str, int]:
    labels = P.labels[P.rank - 1]
    return {k: labels.count(k) for k in ("P", "Q")}


def semireg_f0_formula(f0P: int, f0Q: int, f0K: int) -> int:
    v = Fraction(f0P * f0Q, f0K)
    if v.denominator != 1:
        raise ValueError(f"non-integral vertex prediction {v}")
    return int(v)


def constituent_posets(T: TailTriangleGroup) -> tuple[FacePoset, FacePoset, FacePoset]:
    d = T.rank
    PP = build_poset(T.P)
    QQ = PP if T.Q is T.P else build_poset(T.Q)
    KK = build_poset(T.P.parabolic(range(d - 2)))
    return PP, QQ, KK


def tower_orders(ns: Sequence[int], last: tuple[int, int]) -> tuple[int, int]:
    return tower_order(tuple(ns) + (last[0],)), tower_order(tuple(ns) + (last[1],))
