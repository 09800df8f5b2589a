"""The (k+1)-mix of two string C-groups and the flat {4,4} towers."""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Sequence

from .cstring import StringCGroup, check_intersection_property, check_string_relations
from .fap import has_fap_cofaces, has_fap_faces, hat_closure, n_minus
from .kernel import (CAPS, CapExceeded, Permutation, commutator,
                     generator_matching_isomorphic, pair)
from .toroidal import torus

logger = logging.getLogger(__name__)


class MixError(ValueError):
    """A hypothesis of the mix construction does not hold."""


def k_mix(P1: StringCGroup, P2: StringCGroup, k: int, check: bool = True,
          verify: bool = False) -> StringCGroup:
    """The (k+1)-mix of ``P1`` (rank c) and ``P2`` (rank d), of rank ``k+d+1``.

    P2's generators are indexed from ``k+1``, so the generator recipe reads
    rho_i = (a_i, 1) for i <= k, (a_i, b_i) for k < i < c, (1, b_i) for i >= c.
    """
    c, d = P1.rank, P2.rank
    if not (c >= 2 and d >= 2):
        raise MixError("both ranks must be at least 2")
    if not (0 <= k <= c - 2 and k >= c - d):
        raise MixError(f"need 0 <= k <= c-2 and k >= c-d (c={c}, d={d}, k={k})")
    if check:
        coface = P1.parabolic(range(k + 1, c))
        face = P2.parabolic(range(c - k - 1))
        if not generator_matching_isomorphic(coface.gens, face.gens):
            raise MixError("co-k-face of P1 does not match the (c-k-1)-face of P2")
        if not has_fap_cofaces(P1, k):
            raise MixError(f"P1 lacks the FAP with respect to its co-{k}-faces")
        if not has_fap_faces(P2, c - k - 1):
            raise MixError(f"P2 lacks the FAP with respect to its {c - k - 1}-faces")

    degree = P1.degree + P2.degree
    if degree > CAPS.max_degree:
        raise CapExceeded("degree", CAPS.max_degree, degree)
    e1 = Permutation.identity(P1.degree)
    e2 = Permutation.identity(P2.degree)
    alpha = P1.gens
    beta = {i + k + 1: b for i, b in enumerate(P2.gens)}
    gens = []
    for i in range(k + d + 1):
        if i <= k:
            gens.append(pair(alpha[i], e2))
        elif i <= c - 1:
            gens.append(pair(alpha[i], beta[i]))
        else:
            gens.append(pair(e1, beta[i]))
    M = StringCGroup(gens, name=f"({P1.name})<>{k + 1}({P2.name})")
    if M.order() > CAPS.max_elements:
        raise CapExceeded("elements", CAPS.max_elements, M.order())
    if check:
        expected = n_minus(P1, k).order() * P2.order()
        if M.order() != expected:
            raise AssertionError(f"mix order {M.order()} != |N_k^-(P1)|*|P2| = {expected}")
    if verify:
        problems = check_string_relations(M)
        if problems or not check_intersection_property(M, method="reduced"):
            raise AssertionError(f"{M.name} is not a string C-group")
    return M


@lru_cache(maxsize=None)
def _tower(ns: tuple[int, ...]) -> StringCGroup:
    if len(ns) == 1:
        return torus(ns[0])
    d = len(ns) + 2
    T = k_mix(_tower(ns[:-1]), torus(ns[-1]), d - 4)
    T.name = "tower(" + ",".join(map(str, ns)) + ")"
    T.types = ns
    return T


def tower_order(ns: Sequence[int]) -> int:
    d = len(ns) + 2
    return 2 ** (sum(ns) - 3 * (d - 3))


def build_flat_tower(ns: Sequence[int]) -> StringCGroup:
    """Regular d-polytope group of type {{4,4}^(n_3), ..., {4,4}^(n_d)}.

    Rank ``d = len(ns) + 2``; built by mixing the (d-1)-tower with
    [4,4]^(n_d) at ``k = d-4``.
    """
    ns = tuple(int(n) for n in ns)
    if not ns:
        raise ValueError("need at least one type")
    if any(n < 5 for n in ns):
        raise ValueError(f"all types must be >= 5, got {ns}")
    if tower_order(ns) > CAPS.max_elements:
        raise CapExceeded("elements", CAPS.max_elements, tower_order(ns))
    return _tower(ns)


def section_groups(T: StringCGroup) -> list[StringCGroup]:
    """Rank-3 sections F_j/F_{j-4} of the base flag, as parabolics on j-3..j-1."""
    return [T.parabolic(range(j - 3, j)) for j in range(3, T.rank + 1)]


def sections_match(T: StringCGroup, ns: Sequence[int]) -> list[bool]:
    return [generator_matching_isomorphic(S.gens, torus(n).gens)
            for S, n in zip(section_groups(T), ns)]


def iterated_factors(T: StringCGroup) -> list[int]:
    """Orders [|N_0|, |N^_1|, ..., |N^_{d-3}|, |<rho_{d-2}, rho_{d-1}>|]."""
    d = T.rank
    out = [hat_closure(T, 0).order()]
    out += [hat_closure(T, j).order() for j in range(1, d - 2)]
    out.append(T.parabolic([d - 2, d - 1]).order())
    return out


def commutator_relators_hold(T: StringCGroup) -> bool:
    """[(rho_i rho_{i+1})^2, (rho_{i+2} rho_{i+3})^2] = 1 for 0 <= i <= d-4."""
    g = T.gens
    for i in range(T.rank - 3):
        a = (g[i] * g[i + 1]) ** 2
        b = (g[i + 2] * g[i + 3]) ** 2
        if not commutator(a, b).is_identity():
            return False
    return True


def non_commuting_witness(T: StringCGroup, j: int) -> bool:
    """rho_j rho_{j-1} rho_j and rho_{j+1} rho_j rho_{j+1} fail to commute."""
    g = T.gens
    x = g[j] * g[j - 1] * g[j]
    y = g[j + 1] * g[j] * g[j + 1]
    return not commutator(x, y).is_identity()
