"""String C-groups: involutory generators, string relations, intersection property."""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .kernel import CapExceeded, FiniteGroup, Permutation, intersection_order

MAX_IP_RANK = 7


class StringCGroup(FiniteGroup):
    """A permutation group with an ordered tuple of distinguished involutions.

    Verification results are cached in :attr:`verified` and never reset;
    instances are not meant to be mutated after construction.
    """

    def __init__(self, gens: Sequence[Permutation], name: str | None = None,
                 degree: int | None = None, base_hint: Sequence[int] | None = None):
        super().__init__(gens, degree, base_hint)
        self.gens: tuple[Permutation, ...] = tuple(gens)
        self.name = name or f"C-group rank {len(self.gens)}"
        self.verified: dict[str, bool] = {}
        self._parabolics: dict[tuple[int, ...], StringCGroup] = {}
        self._schlafli: tuple[int, ...] | None = None

    @property
    def rank(self) -> int:
        return len(self.gens)

    def parabolic(self, subset: Iterable[int]) -> "StringCGroup":
        """``<rho_i : i in subset>``, keeping the generators in index order."""
        key = tuple(sorted(set(subset)))
        if any(i < 0 or i >= self.rank for i in key):
            raise ValueError(f"indices {key} out of range for rank {self.rank}")
        if key == tuple(range(self.rank)):
            return self
        P = self._parabolics.get(key)
        if P is None:
            P = StringCGroup([self.gens[i] for i in key],
                             name=f"{self.name}<{','.join(map(str, key))}>",
                             degree=self.degree, base_hint=self.base)
            self._parabolics[key] = P
        return P

    def facet_group(self) -> "StringCGroup":
        return self.parabolic(range(self.rank - 1))

    def vertex_figure_group(self) -> "StringCGroup":
        return self.parabolic(range(1, self.rank))

    def __repr__(self) -> str:
        return f"StringCGroup({self.name!r}, rank={self.rank}, degree={self.degree})"


def check_string_relations(G: StringCGroup) -> list[str]:
    """Problems with the involution and far-commuting relations; empty means pass."""
    out = []
    for i, r in enumerate(G.gens):
        if r.is_identity() or not (r * r).is_identity():
            out.append(f"rho{i} is not an involution (order {r.order()})")
    for i, j in itertools.combinations(range(G.rank), 2):
        if j - i >= 2:
            p = G.gens[i] * G.gens[j]
            if not (p * p).is_identity():
                out.append(f"(rho{i} rho{j})^2 != 1")
    G.verified["string_relations"] = not out
    return out


def schlafli(G: StringCGroup) -> tuple[int, ...]:
    if G._schlafli is None:
        problems = check_string_relations(G)
        if problems:
            raise ValueError("string relations fail: " + "; ".join(problems))
        G._schlafli = tuple((G.gens[i - 1] * G.gens[i]).order() for i in range(1, G.rank))
    return G._schlafli


def parabolic(G: StringCGroup, subset: Iterable[int]) -> StringCGroup:
    return G.parabolic(subset)


def _ip_pair_holds(G: StringCGroup, K: tuple[int, ...], J: tuple[int, ...]) -> bool:
    meet = tuple(sorted(set(K) & set(J)))
    A, B = G.parabolic(K), G.parabolic(J)
    return intersection_order(A, B) == G.parabolic(meet).order()


def check_intersection_property(G: StringCGroup, method: str = "exhaustive",
                                max_rank: int = MAX_IP_RANK) -> bool:
    """Intersection property for all pairs of generator subsets.

    ``method="exhaustive"`` compares every pair of incomparable subsets.
    ``method="reduced"`` only checks, for every window ``i..j`` of consecutive
    generators, that the two maximal sub-windows meet in their common part;
    by induction on the window length this is equivalent for groups
    satisfying the string relations.
    """
    if check_string_relations(G):
        raise ValueError("string relations fail")
    if G.rank > max_rank:
        raise CapExceeded("intersection-property rank", max_rank, G.rank)
    d = G.rank
    if method == "exhaustive":
        subsets = [tuple(c) for r in range(d + 1) for c in itertools.combinations(range(d), r)]
        ok = True
        for K, J in itertools.combinations(subsets, 2):
            sk, sj = set(K), set(J)
            if sk <= sj or sj <= sk:
                continue
            if not _ip_pair_holds(G, K, J):
                ok = False
                break
    elif method == "reduced":
        ok = True
        for length in range(2, d + 1):
            for i in range(d - length + 1):
                j = i + length - 1
                if not _ip_pair_holds(G, tuple(range(i, j)), tuple(range(i + 1, j + 1))):
                    ok = False
                    break
            if not ok:
                break
    else:
        raise ValueError(f"unknown method {method!r}")
    G.verified["intersection_property"] = ok
    return ok


def is_string_c_group(G: StringCGroup, method: str = "reduced") -> bool:
    return not check_string_relations(G) and check_intersection_property(G, method=method)
