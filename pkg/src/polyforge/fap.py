"""Normal closures N_k^+ / N_k^- and the flat amalgamation property (FAP)."""
from __future__ import annotations

import enum

from .cstring import StringCGroup
from .kernel import FiniteGroup, intersection_order, normal_closure


class Hereditary(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"

    def __bool__(self) -> bool:
        return self is Hereditary.HOLDS


def _check_k(G: StringCGroup, k: int) -> None:
    if not 0 <= k < G.rank:
        raise ValueError(f"k={k} out of range for rank {G.rank}")


def _cached_closure(G: StringCGroup, key: tuple) -> FiniteGroup:
    cache = G.__dict__.setdefault("_closures", {})
    N = cache.get(key)
    if N is None:
        N = normal_closure(G, [G.gens[i] for i in key])
        cache[key] = N
    return N


def n_plus(G: StringCGroup, k: int) -> FiniteGroup:
    """Normal closure of ``{rho_k, ..., rho_{d-1}}`` in G."""
    _check_k(G, k)
    return _cached_closure(G, tuple(range(k, G.rank)))


def n_minus(G: StringCGroup, k: int) -> FiniteGroup:
    """Normal closure of ``{rho_0, ..., rho_k}`` in G."""
    _check_k(G, k)
    return _cached_closure(G, tuple(range(k + 1)))


def has_fap_faces(G: StringCGroup, k: int) -> bool:
    """FAP with respect to the k-faces: N_k^+ meets <rho_0..rho_{k-1}> trivially."""
    _check_k(G, k)
    if k == 0:
        return True
    N = n_plus(G, k)
    H = G.parabolic(range(k))
    ok = intersection_order(N, H) == 1
    if ok and N.order() * H.order() != G.order():
        raise AssertionError(f"{G.name}: FAP at k={k} but |N||H| != |G|")
    return ok


def has_fap_cofaces(G: StringCGroup, k: int) -> bool:
    """FAP with respect to the co-k-faces: N_k^- meets <rho_{k+1}..> trivially."""
    _check_k(G, k)
    if k == G.rank - 1:
        return True
    N = n_minus(G, k)
    H = G.parabolic(range(k + 1, G.rank))
    ok = intersection_order(N, H) == 1
    if ok and N.order() * H.order() != G.order():
        raise AssertionError(f"{G.name}: co-FAP at k={k} but |N||H| != |G|")
    return ok


def check_fap_hereditary(G: StringCGroup, k: int, l: int) -> Hereditary:
    """Co-face heredity: FAP at co-k and (in the co-k-face) at co-l gives co-(k+l+1).

    Unmet hypotheses give ``NOT_APPLICABLE``, never ``FAILS``.
    """
    d = G.rank
    if d < 4 or not 0 <= k <= d - 3 or not 0 <= l <= d - k - 4:
        return Hereditary.NOT_APPLICABLE
    if not has_fap_cofaces(G, k):
        return Hereditary.NOT_APPLICABLE
    coface = G.parabolic(range(k + 1, d))
    if not has_fap_cofaces(coface, l):
        return Hereditary.NOT_APPLICABLE
    return Hereditary.HOLDS if has_fap_cofaces(G, k + l + 1) else Hereditary.FAILS


def hat_closure(G: StringCGroup, j: int, window: int = 3) -> FiniteGroup:
    """Normal closure of rho_j inside <rho_j, ..., rho_{j+window-1}>."""
    W = G.parabolic(range(j, min(j + window, G.rank)))
    return normal_closure(W, [G.gens[j]])
