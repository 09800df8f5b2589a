"""Permutation-group engine.

Every group in the package is a tuple of :class:`Permutation` objects acting
on ``{0, ..., degree-1}``.  Products are read left to right: ``p * q`` maps
``x`` to ``q(p(x))``.

Orders and membership go through a stabilizer chain built by a seeded random
Schreier-Sims pass followed by a deterministic Schreier-generator
verification, so the chain (and every number derived from it) is exact.
Elements of a subgroup can be enumerated compactly by their images of a base
of an ambient group; that is what makes intersections of subgroups of order
around 2**19 affordable.
"""
from __future__ import annotations

import logging
import math
import os
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

logger = logging.getLogger(__name__)

_DTYPE = np.int32


class CapExceeded(RuntimeError):
    """A configured resource cap would be exceeded."""

    def __init__(self, cap: str, limit: int, needed: int | None = None):
        self.cap = cap
        self.limit = limit
        self.needed = needed
        msg = f"{cap} cap exceeded (limit {limit}"
        msg += f", needed {needed})" if needed is not None else ")"
        super().__init__(msg)


@dataclass
class Caps:
    max_elements: int = 2**22
    max_degree: int = 2**16


def _default_caps() -> Caps:
    caps = Caps()
    env = os.environ.get("POLYFORGE_MAX_ELEMENTS")
    if env:
        caps.max_elements = max(caps.max_elements, int(env))
    return caps


CAPS = _default_caps()


# ---------------------------------------------------------------------------
# permutations


class Permutation:
    """A bijection of ``{0, ..., degree-1}`` stored as an image array."""

    __slots__ = ("_a", "_key")

    def __init__(self, images: Iterable[int], check: bool = True):
        a = np.array(list(images) if not isinstance(images, np.ndarray) else images,
                     dtype=_DTYPE)
        if a.ndim != 1:
            raise ValueError("images must be one-dimensional")
        if check:
            if a.size > CAPS.max_degree:
                raise CapExceeded("degree", CAPS.max_degree, int(a.size))
            seen = np.zeros(a.size, dtype=bool)
            if a.size and (a.min() < 0 or a.max() >= a.size):
                raise ValueError("not a permutation")
            seen[a] = True
            if not seen.all():
                raise ValueError("not a permutation")
        a.setflags(write=False)
        self._a = a
        self._key = None

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Permutation":
        p = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=_DTYPE)
        arr.setflags(write=False)
        p._a = arr
        p._key = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._wrap(np.arange(degree, dtype=_DTYPE))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        a = np.arange(degree, dtype=_DTYPE)
        for c in cycles:
            for i, x in enumerate(c):
                a[x] = c[(i + 1) % len(c)]
        return cls(a)

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self._a)

    @property
    def degree(self) -> int:
        return int(self._a.size)

    def __call__(self, x: int) -> int:
        return int(self._a[x])

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self._a)
        inv[self._a] = np.arange(self._a.size, dtype=_DTYPE)
        return Permutation._wrap(inv)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._a, np.arange(self._a.size)))

    def order(self) -> int:
        n = 1
        for c in self.cycles():
            n = math.lcm(n, len(c))
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        seen = np.zeros(self._a.size, dtype=bool)
        out = []
        for i in range(self._a.size):
            if seen[i] or self._a[i] == i:
                continue
            c = [i]
            seen[i] = True
            j = int(self._a[i])
            while j != i:
                seen[j] = True
                c.append(j)
                j = int(self._a[j])
            out.append(tuple(c))
        return out

    def key(self) -> bytes:
        if self._key is None:
            self._key = self._a.tobytes()
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation<{self.degree}>{cyc or '()'}"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Product ``p * q``: apply ``p`` first, then ``q``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    return Permutation._wrap(q._a[p._a])


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def commutator(a: Permutation, b: Permutation) -> Permutation:
    return a.inverse() * b.inverse() * a * b


# ---------------------------------------------------------------------------
# stabilizer chains


class _Level:
    __slots__ = ("point", "gens", "orbit", "pos", "trans", "tinv")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.orbit = np.array([point], dtype=_DTYPE)
        self.pos = np.full(degree, -1, dtype=np.int64)
        self.pos[point] = 0
        ident = np.arange(degree, dtype=_DTYPE)
        self.trans = ident[None, :].copy()
        self.tinv = ident[None, :].copy()

    def rebuild(self, degree: int) -> None:
        pt = self.point
        pos = np.full(degree, -1, dtype=np.int64)
        pos[pt] = 0
        orbit = [pt]
        trans = [np.arange(degree, dtype=_DTYPE)]
        i = 0
        while i < len(orbit):
            u = trans[i]
            x = orbit[i]
            for g in self.gens:
                y = int(g[x])
                if pos[y] < 0:
                    pos[y] = len(orbit)
                    orbit.append(y)
                    trans.append(g[u])
            i += 1
        self.pos = pos
        self.orbit = np.array(orbit, dtype=_DTYPE)
        self.trans = np.stack(trans)
        tinv = np.empty_like(self.trans)
        rows = np.arange(len(orbit))[:, None]
        tinv[rows, self.trans] = np.arange(degree, dtype=_DTYPE)[None, :]
        self.tinv = tinv


class StabilizerChain:
    """Base and strong generating set for a permutation group."""

    def __init__(self, degree: int, gens: Sequence[Permutation],
                 base: Sequence[int] = (), seed: int = 0):
        self.degree = degree
        self.levels: list[_Level] = []
        for b in base:
            self._append_level(int(b))
        self._rng = random.Random(seed)
        arrays = [g.array for g in gens if not g.is_identity()]
        self._gens = arrays
        if arrays:
            self._build(arrays)

    # -- construction ------------------------------------------------------

    def _append_level(self, point: int) -> None:
        self.levels.append(_Level(point, self.degree))

    def _first_moved(self, h: np.ndarray) -> int:
        moved = np.nonzero(h != np.arange(self.degree))[0]
        return int(moved[0])

    def _add_strong(self, h: np.ndarray, depth: int) -> None:
        """Add ``h`` (fixing the first ``depth`` base points) as a strong generator."""
        if depth == len(self.levels):
            self._append_level(self._first_moved(h))
        for lvl in self.levels[: depth + 1]:
            lvl.gens.append(h)
        for lvl in self.levels[: depth + 1]:
            lvl.rebuild(self.degree)

    def sift(self, h: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            p = lvl.pos[h[lvl.point]]
            if p < 0:
                return h, i
            h = lvl.tinv[p][h]
        return h, len(self.levels)

    def _is_ident(self, h: np.ndarray) -> bool:
        return bool(np.array_equal(h, np.arange(self.degree)))

    def _build(self, gens: list[np.ndarray]) -> None:
        for g in gens:
            r, j = self.sift(g)
            if not self._is_ident(r):
                self._add_strong(r, j)
        self._random_phase(gens)
        while True:
            found = self._verify()
            if not found:
                break

    def _random_phase(self, gens: list[np.ndarray], patience: int = 24) -> None:
        rng = self._rng
        pool = list(gens)
        while len(pool) < 10:
            pool.append(pool[len(pool) % len(gens)])
        acc = np.arange(self.degree, dtype=_DTYPE)
        quiet = 0
        for _ in range(50):
            i, j = rng.sample(range(len(pool)), 2)
            pool[i] = pool[j][pool[i]]
        while quiet < patience:
            i, j = rng.sample(range(len(pool)), 2)
            pool[i] = pool[j][pool[i]] if rng.random() < 0.5 else pool[i][pool[j]]
            acc = pool[i][acc]
            r, k = self.sift(acc)
            if self._is_ident(r):
                quiet += 1
            else:
                quiet = 0
                self._add_strong(r, k)

    def _verify(self) -> bool:
        """Sift every Schreier generator; add the first failure. True if one was added."""
        ident = np.arange(self.degree, dtype=_DTYPE)
        for i in range(len(self.levels) - 1, -1, -1):
            lvl = self.levels[i]
            if not lvl.gens:
                continue
            for g in lvl.gens:
                # Schreier generators u_p * g * u_{g(p)}^{-1} for all orbit points p
                img = g[lvl.orbit]
                q = lvl.pos[img]
                h = g[lvl.trans]
                h = np.take_along_axis(lvl.tinv[q], h, axis=1)
                res, depth = self._sift_batch(h, i + 1)
                bad = ~(res == ident[None, :]).all(axis=1)
                if bad.any():
                    k = int(np.nonzero(bad)[0][0])
                    self._add_strong(res[k].copy(), int(depth[k]))
                    return True
        return False

    def _sift_batch(self, h: np.ndarray, start: int) -> tuple[np.ndarray, np.ndarray]:
        h = h.copy()
        depth = np.full(h.shape[0], len(self.levels), dtype=np.int64)
        alive = np.ones(h.shape[0], dtype=bool)
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            idx = np.nonzero(alive)[0]
            if idx.size == 0:
                break
            p = lvl.pos[h[idx, lvl.point]]
            stop = p < 0
            depth[idx[stop]] = i
            alive[idx[stop]] = False
            go = idx[~stop]
            if go.size:
                h[go] = np.take_along_axis(lvl.tinv[p[~stop]], h[go], axis=1)
        return h, depth

    def extend(self, h: np.ndarray) -> bool:
        """Add a generator; returns False if it was already a member."""
        r, j = self.sift(h)
        if self._is_ident(r):
            return False
        self._gens.append(h)
        self._add_strong(r, j)
        self._random_phase(self._gens, patience=8)
        while self._verify():
            pass
        return True

    # -- queries -------------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self.levels)

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.orbit)
        return n

    def contains(self, h: np.ndarray) -> bool:
        r, _ = self.sift(h)
        return self._is_ident(r)

    def strong_generators(self) -> list[np.ndarray]:
        return list(self.levels[0].gens) if self.levels else []

    def base_image_elements(self, points: Sequence[int]) -> np.ndarray:
        """Images of ``points`` under every group element, one row per element."""
        pts = np.asarray(points, dtype=_DTYPE)
        rows = pts[None, :]
        for lvl in reversed(self.levels):
            # g = h * u, so g(x) = u(h(x))
            rows = lvl.trans[:, rows].reshape(-1, pts.size)
        return rows

    def member_mask(self, rows: np.ndarray, points: Sequence[int]) -> np.ndarray:
        """Membership of elements given only by their images of ``points``.

        ``points`` must be a base of a group containing both these elements and
        this chain's group, and must include this chain's base points.
        """
        where = {int(p): k for k, p in enumerate(points)}
        rows = rows.copy()
        alive = np.ones(rows.shape[0], dtype=bool)
        for lvl in self.levels:
            col = where[lvl.point]
            idx = np.nonzero(alive)[0]
            if idx.size == 0:
                break
            p = lvl.pos[rows[idx, col]]
            bad = p < 0
            alive[idx[bad]] = False
            go = idx[~bad]
            if go.size:
                tinv = lvl.tinv[p[~bad]]
                rows[go] = np.take_along_axis(tinv, rows[go], axis=1)
        target = np.asarray(points, dtype=rows.dtype)[None, :]
        return alive & (rows == target).all(axis=1)


# ---------------------------------------------------------------------------
# groups


class FiniteGroup:
    """A permutation group given by generators, with a lazily built chain.

    ``base_hint`` is a list of points that form a base for some group
    containing this one; subgroups built from a common ambient group share it,
    which lets their elements be compared by base images alone.
    """

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None,
                 base_hint: Sequence[int] | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"degree mismatch: {g.degree} != {degree}")
        if degree > CAPS.max_degree:
            raise CapExceeded("degree", CAPS.max_degree, degree)
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.degree = degree
        self._base_hint = tuple(base_hint) if base_hint is not None else None
        self._chain: StabilizerChain | None = None
        self._order: int | None = None

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators,
                                          base=self._base_hint or ())
        return self._chain

    @property
    def base(self) -> tuple[int, ...]:
        return self.chain.base

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def order(self) -> int:
        if self._order is None:
            self._order = self.chain.order()
        return self._order

    def __len__(self) -> int:
        return self.order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} != {self.degree}")
        return self.chain.contains(p.array)

    __contains__ = contains

    def subgroup(self, generators: Sequence[Permutation]) -> "FiniteGroup":
        return FiniteGroup(generators, self.degree, base_hint=self.base)

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_subgroup_of(self, other: "FiniteGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def elements(self, limit: int | None = None) -> list[Permutation]:
        """All elements as permutations (closure enumeration, capped)."""
        return closure(self.generators, self.degree, limit=limit)

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniform random element from the stabilizer chain."""
        h = np.arange(self.degree, dtype=_DTYPE)
        for lvl in reversed(self.chain.levels):
            u = lvl.trans[rng.randrange(len(lvl.orbit))]
            h = u[h]
        return Permutation._wrap(h)

    def base_images(self, points: Sequence[int]) -> np.ndarray:
        n = self.order()
        if n > CAPS.max_elements:
            raise CapExceeded("elements", CAPS.max_elements, n)
        return self.chain.base_image_elements(points)

    def __repr__(self) -> str:
        return f"FiniteGroup(ngens={len(self.generators)}, degree={self.degree})"


def closure(gens: Sequence[Permutation], degree: int,
            limit: int | None = None) -> list[Permutation]:
    """Naive breadth-first closure; the independent oracle for group orders."""
    limit = CAPS.max_elements if limit is None else limit
    ident = np.arange(degree, dtype=_DTYPE)
    seen = {ident.tobytes()}
    out = [ident]
    frontier = [ident]
    arrays = [g.array for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in arrays:
                y = g[x]
                k = y.tobytes()
                if k not in seen:
                    seen.add(k)
                    out.append(y)
                    nxt.append(y)
                    if len(out) > limit:
                        raise CapExceeded("elements", limit, len(out))
        frontier = nxt
    return [Permutation._wrap(a) for a in out]


def closure_order(G: FiniteGroup, limit: int | None = None) -> int:
    return len(closure(G.generators, G.degree, limit=limit))


def group_order(G: FiniteGroup) -> int:
    return G.order()


def contains(G: FiniteGroup, p: Permutation) -> bool:
    return G.contains(p)


def normal_closure(G: FiniteGroup, S: Sequence[Permutation]) -> FiniteGroup:
    """Smallest normal subgroup of ``G`` containing ``S``."""
    for s in S:
        if not G.contains(s):
            raise ValueError("element not in G")
    base = G.base
    gens: list[Permutation] = [s for s in S if not s.is_identity()]
    chain = StabilizerChain(G.degree, gens, base=base)
    queue = list(gens)
    ginv = [(g, g.inverse()) for g in G.generators]
    while queue:
        n = queue.pop()
        for g, gi in ginv:
            c = gi * n * g
            if chain.extend(c.array):
                gens.append(c)
                queue.append(c)
    N = FiniteGroup(gens, G.degree, base_hint=base)
    N._chain = chain
    return N


def _common_points(A: FiniteGroup, B: FiniteGroup) -> tuple[int, ...]:
    """Points forming a base of a group containing both A and B."""
    if A._base_hint is not None and A._base_hint == B._base_hint:
        return A._base_hint
    J = FiniteGroup(A.generators + B.generators, A.degree)
    return J.base


def _aligned(G: FiniteGroup, points: tuple[int, ...]) -> FiniteGroup:
    if G._base_hint == points:
        return G
    H = FiniteGroup(G.generators, G.degree, base_hint=points)
    H._order = G._order
    return H


def intersection_mask(A: FiniteGroup, B: FiniteGroup):
    """Enumerate the smaller group and sift its elements through the larger.

    Returns ``(small, points, rows, mask)``: rows are the base images of the
    elements of ``small`` and ``mask`` flags those lying in the other group.
    """
    if A.degree != B.degree:
        raise ValueError(f"degree mismatch: {A.degree} != {B.degree}")
    small, large = (A, B) if A.order() <= B.order() else (B, A)
    pts = _common_points(small, large)
    large = _aligned(large, pts)
    rows = small.base_images(pts)
    mask = large.chain.member_mask(rows, pts)
    return small, pts, rows, mask


def intersection_order(A: FiniteGroup, B: FiniteGroup) -> int:
    return int(intersection_mask(A, B)[3].sum())


def intersection(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    """The subgroup of common elements, as a group with its own generators."""
    small, pts, rows, mask = intersection_mask(A, B)
    small = _aligned(small, pts)
    target = int(mask.sum())
    members = np.nonzero(mask)[0]
    gens: list[Permutation] = []
    H = FiniteGroup(gens, A.degree, base_hint=pts)
    # walk members in a fixed pseudo-random order; each new generator at least doubles H
    order = np.random.default_rng(0).permutation(members)
    for idx in order:
        if H.order() == target:
            break
        p = _element_from_images(small, pts, rows[idx])
        if not H.contains(p):
            gens.append(p)
            H = FiniteGroup(gens, A.degree, base_hint=pts)
    return H


def _element_from_images(G: FiniteGroup, pts: Sequence[int], row: np.ndarray) -> Permutation:
    """Recover the full permutation of an element of ``G`` from base images."""
    chain = G.chain
    where = {int(p): k for k, p in enumerate(pts)}
    row = row.copy()
    us = []
    for lvl in chain.levels:
        p = int(lvl.pos[row[where[lvl.point]]])
        if p < 0:
            raise ValueError("images do not describe an element")
        us.append(lvl.trans[p])
        row = lvl.tinv[p][row]
    h = np.arange(G.degree, dtype=_DTYPE)
    for u in reversed(us):
        h = u[h]
    return Permutation._wrap(h)


def direct_product(A: FiniteGroup, B: FiniteGroup):
    """``A x B`` acting on ``deg(A) + deg(B)`` points, plus both embeddings."""
    da, db = A.degree, B.degree

    def embed_left(a: Permutation) -> Permutation:
        return Permutation._wrap(np.concatenate([a.array, np.arange(da, da + db, dtype=_DTYPE)]))

    def embed_right(b: Permutation) -> Permutation:
        return Permutation._wrap(np.concatenate([np.arange(da, dtype=_DTYPE), b.array + da]))

    gens = [embed_left(a) for a in A.generators] + [embed_right(b) for b in B.generators]
    P = FiniteGroup(gens, da + db)
    return P, embed_left, embed_right


def pair(a: Permutation, b: Permutation) -> Permutation:
    """The element ``(a, b)`` of a direct product of permutation groups."""
    return Permutation._wrap(np.concatenate([a.array, b.array + a.degree]))


def generator_matching_isomorphic(a: Sequence[Permutation], b: Sequence[Permutation]) -> bool:
    """True iff ``a[i] -> b[i]`` extends to an isomorphism ``<a> -> <b>``.

    The pairs ``(a[i], b[i])`` generate the graph of such a map exactly when
    the diagonal subgroup has the order of both factors.
    """
    if len(a) != len(b):
        raise ValueError("generator tuples differ in length")
    if not a:
        return True
    A = FiniteGroup(a)
    B = FiniteGroup(b)
    if A.order() != B.order():
        return False
    D = FiniteGroup([pair(x, y) for x, y in zip(a, b)])
    return D.order() == A.order()


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def log2_exact(n: int) -> int:
    """Exponent of a power of two, found by repeated halving."""
    if n <= 0:
        raise ValueError(f"{n} is not a power of 2")
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    if n != 1:
        raise ValueError("not a power of 2")
    return k
