"""Toroidal regular maps {4,4}_(s,t) and their groups [4,4]_(s,t).

The group is modelled as affine isometries ``p -> M p + v`` of the square
lattice, with ``v`` reduced modulo the lattice spanned by ``(s, t)`` and
``(-t, s)``.  Permutations come from the right regular action on those
``8(s^2 + t^2)`` elements.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cstring import StringCGroup
from .kernel import Permutation, generator_matching_isomorphic

# the point group of the square: all signed 2x2 permutation matrices
POINT_GROUP: tuple[tuple[int, int, int, int], ...] = tuple(
    m for m in (
        (1, 0, 0, 1), (-1, 0, 0, 1), (1, 0, 0, -1), (-1, 0, 0, -1),
        (0, 1, 1, 0), (0, -1, 1, 0), (0, 1, -1, 0), (0, -1, -1, 0),
    )
)


@dataclass(frozen=True)
class TorusParams:
    s: int
    t: int

    def __post_init__(self):
        if not ((self.t == 0 and self.s >= 2) or (self.s == self.t and self.s >= 2)):
            raise ValueError(f"invalid torus parameters ({self.s},{self.t}): "
                             "need t=0, s>=2 or s=t>=2")

    @property
    def group_order(self) -> int:
        return 8 * (self.s**2 + self.t**2)

    def reduce(self, x: int, y: int) -> tuple[int, int]:
        """Canonical representative of ``(x, y)`` modulo the lattice."""
        s, t = self.s, self.t
        if t == 0:
            return x % s, y % s
        # lattice spanned by (s,s), (-s,s) contains (2s,0) and (0,2s)
        x, y = x % (2 * s), y % (2 * s)
        if x >= s:
            x, y = x - s, (y - s) % (2 * s)
        return x, y

    def translations(self) -> list[tuple[int, int]]:
        if self.t == 0:
            return [(x, y) for x in range(self.s) for y in range(self.s)]
        return [(x, y) for x in range(self.s) for y in range(2 * self.s)]

    def __str__(self) -> str:
        return f"({self.s},{self.t})"


@dataclass(frozen=True)
class AffineIsometry:
    """``p -> pointpart @ p + transpart`` on Z^2 modulo the torus lattice."""

    pointpart: tuple[int, int, int, int]
    transpart: tuple[int, int]
    params: TorusParams

    def apply(self, p: tuple[int, int]) -> tuple[int, int]:
        a, b, c, d = self.pointpart
        x, y = p
        return self.params.reduce(a * x + b * y + self.transpart[0],
                                  c * x + d * y + self.transpart[1])

    def then(self, other: "AffineIsometry") -> "AffineIsometry":
        """``self`` followed by ``other``."""
        a, b, c, d = self.pointpart
        e, f, g, h = other.pointpart
        m = (e * a + f * c, e * b + f * d, g * a + h * c, g * b + h * d)
        tx, ty = self.transpart
        v = self.params.reduce(e * tx + f * ty + other.transpart[0],
                               g * tx + h * ty + other.transpart[1])
        return AffineIsometry(m, v, self.params)

    def inverse(self) -> "AffineIsometry":
        a, b, c, d = self.pointpart
        # point parts are orthogonal: inverse is the transpose
        mt = (a, c, b, d)
        tx, ty = self.transpart
        v = self.params.reduce(-(a * tx + c * ty), -(b * tx + d * ty))
        return AffineIsometry(mt, v, self.params)

    def is_translation(self) -> bool:
        return self.pointpart == (1, 0, 0, 1)


def params_for_exponent(n: int) -> TorusParams:
    """Parameters of the unique {4,4} map whose group has order ``2**n``."""
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    if n % 2:
        e = (n - 3) // 2
        return TorusParams(2**e, 0)
    e = (n - 4) // 2
    return TorusParams(2**e, 2**e)


def affine_generators(p: TorusParams) -> tuple[AffineIsometry, AffineIsometry, AffineIsometry]:
    """rho0: (x,y)->(1-x,y); rho1: (x,y)->(y,x); rho2: (x,y)->(x,-y)."""
    r0 = AffineIsometry((-1, 0, 0, 1), p.reduce(1, 0), p)
    r1 = AffineIsometry((0, 1, 1, 0), (0, 0), p)
    r2 = AffineIsometry((1, 0, 0, -1), (0, 0), p)
    return r0, r1, r2


def affine_elements(p: TorusParams) -> list[AffineIsometry]:
    return [AffineIsometry(m, v, p) for m in POINT_GROUP for v in p.translations()]


class TorusGroup(StringCGroup):
    """[4,4]_(s,t) as a rank-3 string C-group, remembering its affine model."""

    def __init__(self, params: TorusParams):
        elems = affine_elements(params)
        index = {e: i for i, e in enumerate(elems)}
        gens = []
        for g in affine_generators(params):
            gens.append(Permutation([index[e.then(g)] for e in elems]))
        super().__init__(gens, name=f"[4,4]_{params}")
        self.params = params
        self.affine = elems
        self._index = index

    def element(self, a: AffineIsometry) -> Permutation:
        """Permutation of the right regular action of an affine element."""
        return Permutation([self._index[e.then(a)] for e in self.affine])

    def affine_of(self, p: Permutation) -> AffineIsometry:
        """Inverse of :meth:`element`: the identity is listed first."""
        ident = self._index[AffineIsometry((1, 0, 0, 1), (0, 0), self.params)]
        return self.affine[p(ident)]

    def translation(self, x: int, y: int) -> Permutation:
        return self.element(AffineIsometry((1, 0, 0, 1), self.params.reduce(x, y), self.params))


@lru_cache(maxsize=None)
def build_torus_group(params: TorusParams) -> TorusGroup:
    G = TorusGroup(params)
    if G.order() != params.group_order:
        raise AssertionError(f"{G.name}: order {G.order()} != {params.group_order}")
    return G


def torus(n: int) -> TorusGroup:
    """[4,4]^(n), the {4,4} group of order 2**n."""
    return build_torus_group(params_for_exponent(n))


def polarity_exists(G: StringCGroup) -> bool:
    """Does ``rho0 <-> rho2`` (fixing rho1) extend to an automorphism?"""
    if G.rank != 3:
        raise ValueError("polarity test needs a rank-3 group")
    r0, r1, r2 = G.gens
    return generator_matching_isomorphic((r0, r1, r2), (r2, r1, r0))


def affine_count(params: TorusParams) -> int:
    """Elements of the affine model, counted as distinct (pointpart, transpart) pairs."""
    return len({(e.pointpart, e.transpart) for e in affine_elements(params)})


def translation_order(params: TorusParams) -> int:
    """Order of the unit translation in Z^2 / lattice, computed by stepping."""
    v = params.reduce(1, 0)
    k, cur = 1, v
    while cur != (0, 0):
        cur = params.reduce(cur[0] + v[0], cur[1] + v[1])
        k += 1
    return k

