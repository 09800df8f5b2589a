"""Face posets of coset geometries, polytopality diagnostics, medials, export.

Faces of rank ``i`` are left cosets ``x H_i`` of a subgroup ``H_i``; two faces
of consecutive ranks are incident when their cosets share an element.  The
group acts on faces by left multiplication.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .cstring import StringCGroup, check_intersection_property, check_string_relations
from .kernel import CapExceeded, FiniteGroup, Permutation

POSET_CAP = 2**14


# ---------------------------------------------------------------------------
# element tables


class Cayley:
    """All elements of ``<gens>`` with right and left multiplication tables.

    Element 0 is the identity.  ``right[e, j]`` is the index of ``e * g_j`` and
    ``left[e, j]`` the index of ``g_j * e``.
    """

    def __init__(self, gens: Sequence[Permutation], degree: int | None = None,
                 limit: int = POSET_CAP):
        self.gens = tuple(gens)
        self.group = FiniteGroup(self.gens, degree)
        n = self.group.order()
        if n > limit:
            raise CapExceeded("poset elements", limit, n)
        pts = self.group.base
        self.points = np.asarray(pts, dtype=np.int32)
        rows = self.group.chain.base_image_elements(pts) if pts else np.zeros((1, 0), np.int32)
        self.rows = rows
        self.size = rows.shape[0]
        self._make_index()
        ng = len(self.gens)
        right = np.empty((self.size, ng), dtype=np.int64)
        for j, g in enumerate(self.gens):
            right[:, j] = self.lookup(g.array[rows])
        self.right = right
        self._bfs()

    def _make_index(self) -> None:
        D = int(self.group.degree)
        m = self.rows.shape[1]
        bits = max(1, D.bit_length())
        if m * bits <= 62:
            w = np.int64(1) << (bits * np.arange(m, dtype=np.int64))
            self._weights = w
            keys = (self.rows.astype(np.int64) * w).sum(axis=1)
            self._order = np.argsort(keys)
            self._sorted = keys[self._order]
            self._dict = None
        else:
            self._weights = None
            self._dict = {r.tobytes(): i for i, r in enumerate(self.rows)}

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        rows = np.ascontiguousarray(rows, dtype=self.rows.dtype)
        if self._dict is not None:
            return np.array([self._dict[r.tobytes()] for r in rows], dtype=np.int64)
        keys = (rows.astype(np.int64) * self._weights).sum(axis=1)
        pos = np.searchsorted(self._sorted, keys)
        idx = self._order[np.minimum(pos, self.size - 1)]
        if not np.array_equal(self._sorted[np.minimum(pos, self.size - 1)], keys):
            raise KeyError("element not in group")
        return idx

    def _bfs(self) -> None:
        n, ng = self.size, len(self.gens)
        parent = np.full(n, -1, dtype=np.int64)
        pgen = np.full(n, -1, dtype=np.int64)
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        levels = [np.array([0])]
        frontier = levels[0]
        while frontier.size:
            src = np.repeat(frontier, ng)
            gj = np.tile(np.arange(ng), frontier.size)
            dst = self.right[frontier].ravel()
            fresh = ~seen[dst]
            dst, src, gj = dst[fresh], src[fresh], gj[fresh]
            dst, first = np.unique(dst, return_index=True)
            parent[dst] = src[first]
            pgen[dst] = gj[first]
            seen[dst] = True
            frontier = dst
            if dst.size:
                levels.append(dst)
        self.parent, self.pgen = parent, pgen
        left = np.empty_like(self.right)
        left[0] = self.right[0]
        for lvl in levels[1:]:
            left[lvl] = self.right[left[parent[lvl]], pgen[lvl][:, None]]
        self.left = left
        self._levels = levels

    def word(self, e: int) -> list[int]:
        """Generator indices whose product (left to right) is element ``e``."""
        w = []
        while e != 0:
            w.append(int(self.pgen[e]))
            e = int(self.parent[e])
        return w[::-1]

    def left_multiply(self, x: int, e: np.ndarray | int):
        """Index of ``x * e`` (elementwise over an array of ``e``)."""
        out = np.asarray(e)
        for j in reversed(self.word(x)):
            out = self.left[out, j]
        return out

    def cosets(self, subset: Iterable[int]) -> tuple[np.ndarray, int]:
        """Left cosets of the subgroup generated by the chosen generators."""
        subset = list(subset)
        n = self.size
        if not subset:
            return np.arange(n), n
        src = np.repeat(np.arange(n), len(subset))
        dst = self.right[:, subset].ravel()
        graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n))
        k, labels = connected_components(graph, directed=False)
        return _renumber(labels), k

    def automorphism(self, images: Sequence[int]) -> np.ndarray | None:
        """Extend ``g_j -> g_{images[j]}`` to an automorphism, if it is one."""
        images = np.asarray(images)
        phi = np.full(self.size, -1, dtype=np.int64)
        phi[0] = 0
        for lvl in self._levels[1:]:
            phi[lvl] = self.right[phi[self.parent[lvl]], images[self.pgen[lvl]]]
        if not np.array_equal(phi[self.right], self.right[phi][:, images]):
            return None
        if np.unique(phi).size != self.size:
            return None
        return phi


def _renumber(labels: np.ndarray) -> np.ndarray:
    """Relabel so labels appear in order of first occurrence."""
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    remap = np.empty(order.size, dtype=np.int64)
    remap[order] = np.arange(order.size)
    return remap[labels]


# ---------------------------------------------------------------------------
# posets


@dataclass
class FacePoset:
    """Ranked poset with implicit improper faces of rank -1 and ``rank``.

    ``covers[i][a]`` lists the faces of rank ``i+1`` above face ``a`` of rank ``i``.
    """

    rank: int
    counts: list[int]
    covers: list[list[frozenset[int]]]
    labels: list[list[str]] | None = None
    name: str = "poset"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self._mats: dict[tuple[int, int], np.ndarray] = {}

    def f_vector(self) -> list[int]:
        return list(self.counts)

    def cover_matrix(self, i: int) -> np.ndarray:
        M = np.zeros((self.counts[i], self.counts[i + 1]), dtype=bool)
        for a, ups in enumerate(self.covers[i]):
            M[a, list(ups)] = True
        return M

    def incidence(self, a: int, b: int) -> np.ndarray:
        """Boolean matrix of ``F <= G`` for ranks ``a <= b`` (improper ranks allowed)."""
        key = (a, b)
        if key not in self._mats:
            na = 1 if a in (-1, self.rank) else self.counts[a]
            nb = 1 if b in (-1, self.rank) else self.counts[b]
            if a == b:
                M = np.eye(na, dtype=bool)
            elif a == -1 or b == self.rank:
                M = np.ones((na, nb), dtype=bool)
            else:
                M = self.cover_matrix(a)
                for i in range(a + 1, b):
                    M = (M.astype(np.int64) @ self.cover_matrix(i).astype(np.int64)) > 0
            self._mats[key] = M
        return self._mats[key]

    def leq(self, a: int, x: int, b: int, y: int) -> bool:
        if a > b:
            return False
        return bool(self.incidence(a, b)[x, y])

    def _count(self, r: int) -> int:
        return 1 if r in (-1, self.rank) else self.counts[r]

    def section_flags(self, a: int, x: int, b: int, y: int) -> np.ndarray:
        """Chains of faces strictly between ``x`` (rank a) and ``y`` (rank b)."""
        if b - a < 2:
            return np.zeros((1, 0), dtype=np.int64)
        lo = self.incidence(a, a + 1)[x] & self.incidence(a + 1, b)[:, y]
        chains = np.nonzero(lo)[0][:, None]
        for r in range(a + 2, b):
            allowed = self.incidence(r, b)[:, y]
            step = self.incidence(r - 1, r)[chains[:, -1]] & allowed[None, :]
            ci, nf = np.nonzero(step)
            chains = np.concatenate([chains[ci], nf[:, None]], axis=1)
        return chains

    def flags(self) -> np.ndarray:
        return self.section_flags(-1, 0, self.rank, 0)

    def num_flags(self) -> int:
        return int(self.flags().shape[0])


def section(P: FacePoset, a: int, x: int, b: int, y: int) -> FacePoset:
    """The section y/x as a poset of rank ``b - a - 1``."""
    if not P.leq(a, x, b, y):
        raise ValueError("faces are not incident")
    keep = []
    for r in range(a + 1, b):
        mask = P.incidence(a, r)[x] & P.incidence(r, b)[:, y]
        keep.append(np.nonzero(mask)[0])
    covers = []
    for i in range(len(keep) - 1):
        pos = {int(f): k for k, f in enumerate(keep[i + 1])}
        covers.append([frozenset(pos[c] for c in P.covers[a + 1 + i][int(f)] if c in pos)
                       for f in keep[i]])
    labels = None
    if P.labels:
        labels = [[P.labels[a + 1 + i][int(f)] for f in k] for i, k in enumerate(keep)]
    return FacePoset(b - a - 1, [len(k) for k in keep], covers, labels=labels,
                     name=f"{P.name}[{a}:{x}..{b}:{y}]")


def _flags_connected(flags: np.ndarray) -> bool:
    n, r = flags.shape
    if n <= 1:
        return True
    src, dst = [], []
    for j in range(r):
        rest = np.delete(flags, j, axis=1)
        _, inv = np.unique(rest, axis=0, return_inverse=True)
        inv = inv.ravel()
        order = np.argsort(inv, kind="stable")
        same = inv[order[1:]] == inv[order[:-1]]
        src.append(order[:-1][same])
        dst.append(order[1:][same])
    src = np.concatenate(src)
    dst = np.concatenate(dst)
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n))
    k, _ = connected_components(graph, directed=False)
    return k == 1


def check_diamond(P: FacePoset) -> bool:
    d = P.rank
    for j in range(d):
        below = P.incidence(j - 1, j).astype(np.int64)
        above = P.incidence(j, j + 1).astype(np.int64)
        between = below @ above
        incident = P.incidence(j - 1, j + 1)
        if not np.all(between[incident] == 2):
            return False
    return True


def check_flag_connected(P: FacePoset) -> bool:
    """Flag graph connected, in the whole poset and in every section of rank >= 2."""
    d = P.rank
    for a in range(-1, d - 2):
        for b in range(a + 3, d + 1):
            inc = P.incidence(a, b)
            for x, y in zip(*np.nonzero(inc)):
                fl = P.section_flags(a, int(x), b, int(y))
                if fl.shape[0] == 0 or not _flags_connected(fl):
                    return False
    if d >= 1 and P.flags().shape[0] == 0:
        return False
    return True


def check_flat(P: FacePoset, k: int, l: int) -> bool:
    if not 0 <= k < l <= P.rank - 1:
        raise ValueError(f"need 0 <= k < l <= {P.rank - 1}")
    return bool(P.incidence(k, l).all())


def f_vector(P: FacePoset) -> list[int]:
    return P.f_vector()


# ---------------------------------------------------------------------------
# coset geometries


@dataclass
class FaceType:
    rank: int
    subset: tuple[int, ...]
    label: str = ""


class CosetGeometry:
    """Faces as left cosets of generator-subset subgroups, on shared elements."""

    def __init__(self, gens: Sequence[Permutation], rank: int,
                 face_types: Sequence[FaceType], limit: int = POSET_CAP, name: str = "poset"):
        self.cayley = Cayley(gens, limit=limit)
        self.rank = rank
        self.face_types = list(face_types)
        # per rank: offset of each face type, coset labels per element
        self.face_of: list[np.ndarray] = []     # per face type: element -> global face index in rank
        counts = [0] * rank
        labels: list[list[str]] = [[] for _ in range(rank)]
        for ft in self.face_types:
            lab, k = self.cayley.cosets(ft.subset)
            self.face_of.append(lab + counts[ft.rank])
            counts[ft.rank] += k
            labels[ft.rank].extend([ft.label] * k)
        covers: list[list[set[int]]] = [[set() for _ in range(counts[i])] for i in range(rank - 1)]
        for t1, ft1 in enumerate(self.face_types):
            for t2, ft2 in enumerate(self.face_types):
                if ft2.rank == ft1.rank + 1:
                    pairs = np.unique(np.stack([self.face_of[t1], self.face_of[t2]], axis=1), axis=0)
                    for a, b in pairs:
                        covers[ft1.rank][int(a)].add(int(b))
        self.poset = FacePoset(rank, counts, [[frozenset(s) for s in lvl] for lvl in covers],
                               labels=labels, name=name)

    def face_action(self, j: int) -> list[np.ndarray]:
        """Permutation of the faces of each rank induced by generator ``j``."""
        cay = self.cayley
        out = []
        for r in range(self.rank):
            perm = np.full(self.poset.counts[r], -1, dtype=np.int64)
            for t, ft in enumerate(self.face_types):
                if ft.rank != r:
                    continue
                lab = self.face_of[t]
                perm[lab] = lab[cay.left[:, j]]
            out.append(perm)
        return out

    def flag_of_element(self, e: int | np.ndarray, types: Sequence[int] | None = None) -> np.ndarray:
        types = types if types is not None else [next(t for t, ft in enumerate(self.face_types)
                                                      if ft.rank == r) for r in range(self.rank)]
        return np.stack([self.face_of[t][e] for t in types], axis=-1)


def regular_face_types(d: int) -> list[FaceType]:
    return [FaceType(i, tuple(j for j in range(d) if j != i)) for i in range(d)]


def coset_geometry(G: StringCGroup, limit: int = POSET_CAP) -> CosetGeometry:
    if G.verified.get("intersection_property") is None:
        if check_string_relations(G) or not check_intersection_property(G, method="reduced"):
            raise ValueError(f"{G.name} is not a string C-group")
    elif not G.verified["intersection_property"]:
        raise ValueError(f"{G.name} failed the intersection property")
    geo = CosetGeometry(G.gens, G.rank, regular_face_types(G.rank), limit=limit, name=G.name)
    return geo


def build_poset(G: StringCGroup, limit: int = POSET_CAP) -> FacePoset:
    """Face poset of the regular polytope of a string C-group."""
    geo = coset_geometry(G, limit)
    P = geo.poset
    P.meta["geometry"] = geo
    return P


def stabilizers_trivial(P: FacePoset, samples: int = 100, seed: int = 0) -> bool:
    """Spot-check that no non-identity element fixes a flag."""
    geo: CosetGeometry = P.meta["geometry"]
    cay = geo.cayley
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        e = int(rng.integers(cay.size))
        x = int(rng.integers(1, cay.size)) if cay.size > 1 else 0
        if x == 0:
            continue
        moved = cay.left_multiply(x, e)
        if np.array_equal(geo.flag_of_element(e), geo.flag_of_element(moved)):
            return False
    return True


# ---------------------------------------------------------------------------
# isomorphism


def _refine(P: FacePoset) -> list[list[int]]:
    d = P.rank
    colors = [[0] * P.counts[r] for r in range(d)]
    up = [[sorted(P.covers[r][a]) for a in range(P.counts[r])] for r in range(d - 1)]
    down: list[list[list[int]]] = [[[] for _ in range(P.counts[r])] for r in range(d)]
    for r in range(d - 1):
        for a, ups in enumerate(up[r]):
            for b in ups:
                down[r + 1][b].append(a)
    for _ in range(sum(P.counts) + 1):
        sig = {}
        new = []
        for r in range(d):
            row = []
            for a in range(P.counts[r]):
                s = (r, colors[r][a],
                     tuple(sorted(colors[r + 1][b] for b in up[r][a])) if r < d - 1 else (),
                     tuple(sorted(colors[r - 1][b] for b in down[r][a])))
                row.append(sig.setdefault(s, len(sig)))
            new.append(row)
        if sum(len(set(r)) for r in new) == sum(len(set(r)) for r in colors):
            return new
        colors = new
    return colors


def _signature(colors: list[list[int]]) -> list[list[int]]:
    return [sorted(c) for c in colors]


def posets_isomorphic(P: FacePoset, Q: FacePoset) -> bool:
    """Decide isomorphism by colour refinement plus backtracking."""
    if P.rank != Q.rank or P.counts != Q.counts:
        return False
    cp, cq = _refine_joint(P, Q)
    if _signature(cp) != _signature(cq):
        return False
    d = P.rank
    nodes = [(r, a) for r in range(d) for a in range(P.counts[r])]
    # order: connected growth from the first vertex keeps the search constrained
    nodes.sort(key=lambda n: (n[0], n[1]))
    adj_p = _adjacency(P)
    adj_q = _adjacency(Q)
    order = _bfs_order(nodes, adj_p)
    mapping: dict[tuple[int, int], tuple[int, int]] = {}
    used: set[tuple[int, int]] = set()

    def ok(n, m):
        if cp[n[0]][n[1]] != cq[m[0]][m[1]]:
            return False
        for nb in adj_p[n]:
            if nb in mapping and mapping[nb] not in adj_q[m]:
                return False
        return True

    def extend(i):
        if i == len(order):
            return True
        n = order[i]
        for b in range(Q.counts[n[0]]):
            m = (n[0], b)
            if m in used or not ok(n, m):
                continue
            mapping[n] = m
            used.add(m)
            if extend(i + 1):
                return True
            del mapping[n]
            used.discard(m)
        return False

    return extend(0)


def _refine_joint(P: FacePoset, Q: FacePoset):
    """Refine both posets with one shared colour dictionary."""
    joint = FacePoset(P.rank, [P.counts[r] + Q.counts[r] for r in range(P.rank)],
                      [[*P.covers[r], *[frozenset(b + P.counts[r + 1] for b in s) for s in Q.covers[r]]]
                       for r in range(P.rank - 1)])
    colors = _refine(joint)
    cp = [colors[r][:P.counts[r]] for r in range(P.rank)]
    cq = [colors[r][P.counts[r]:] for r in range(P.rank)]
    return cp, cq


def _adjacency(P: FacePoset) -> dict[tuple[int, int], set[tuple[int, int]]]:
    adj = {(r, a): set() for r in range(P.rank) for a in range(P.counts[r])}
    for r in range(P.rank - 1):
        for a, ups in enumerate(P.covers[r]):
            for b in ups:
                adj[(r, a)].add((r + 1, b))
                adj[(r + 1, b)].add((r, a))
    return adj


def _bfs_order(nodes, adj):
    seen, order = set(), []
    for start in nodes:
        if start in seen:
            continue
        seen.add(start)
        queue = [start]
        while queue:
            n = queue.pop(0)
            order.append(n)
            for nb in sorted(adj[n]):
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
    return order


# ---------------------------------------------------------------------------
# medials


def medial(K: FacePoset, G: StringCGroup | None = None):
    """Medial of a rank-3 poset, with its automorphism group when ``G`` is given.

    Vertices are the edges of K, edges the incident (vertex, face) pairs of K,
    and faces the faces of K followed by the vertices of K.  The group acts on
    the medial's flags; if K admits a polarity it is adjoined as an extra
    generator.
    """
    if K.rank != 3:
        raise ValueError("medial needs a rank-3 poset")
    f0, f1, f2 = K.counts
    vf = K.incidence(0, 2)
    pairs = [(int(v), int(f)) for v, f in zip(*np.nonzero(vf))]
    pair_idx = {p: i for i, p in enumerate(pairs)}
    ve = K.incidence(0, 1)
    ef = K.incidence(1, 2)
    vert_covers = [set() for _ in range(f1)]
    for i, (v, f) in enumerate(pairs):
        es = np.nonzero(ve[v] & ef[:, f])[0]
        for e in es:
            vert_covers[int(e)].add(i)
    edge_covers = [frozenset({f, f2 + v}) for v, f in pairs]
    M = FacePoset(3, [f1, len(pairs), f2 + f0],
                  [[frozenset(s) for s in vert_covers], edge_covers],
                  labels=[["v"] * f1, ["e"] * len(pairs), ["face"] * f2 + ["vertex"] * f0],
                  name=f"medial({K.name})")
    if G is None:
        return M, None

    geo: CosetGeometry = K.meta["geometry"]
    flags = M.flags()
    flag_index = {tuple(int(x) for x in fl): i for i, fl in enumerate(flags)}

    def lift(acts: list[np.ndarray], dual: bool) -> Permutation:
        img = np.empty(len(flags), dtype=np.int64)
        pv, pe, pf = acts
        for i, (e, p, X) in enumerate(flags):
            v, f = pairs[p]
            if not dual:
                p2 = pair_idx[(int(pv[v]), int(pf[f]))]
                X2 = pf[X] if X < f2 else f2 + pv[X - f2]
            else:
                # pv maps vertices to faces, pf maps faces to vertices
                p2 = pair_idx[(int(pf[f]), int(pv[v]))]
                X2 = f2 + pf[X] if X < f2 else pv[X - f2]
            img[i] = flag_index[(int(pe[e]), p2, int(X2))]
        return Permutation(img)

    gens = [lift(geo.face_action(j), False) for j in range(3)]
    phi = geo.cayley.automorphism([2, 1, 0])
    self_dual = phi is not None
    if self_dual:
        acts = []
        for r in range(3):
            # face of rank r with representative x goes to the rank 2-r face of phi(x)
            src = geo.face_of[r]
            dst = geo.face_of[2 - r][phi]
            perm = np.full(K.counts[r], -1, dtype=np.int64)
            perm[src] = dst
            acts.append(perm)
        gens.append(lift(acts, True))
    M.meta["self_dual"] = self_dual
    return M, FiniteGroup(gens)


# ---------------------------------------------------------------------------
# export


def _fid(r: int, a: int) -> str:
    return f"{r}:{a}"


def to_json(P: FacePoset) -> str:
    d = P.rank
    faces = [{"id": "-1:0", "rank": -1}]
    for r in range(d):
        for a in range(P.counts[r]):
            item = {"id": _fid(r, a), "rank": r}
            if P.labels and P.labels[r] and P.labels[r][a]:
                item["family"] = P.labels[r][a]
            faces.append(item)
    faces.append({"id": f"{d}:0", "rank": d})
    inc = [["-1:0", _fid(0, a)] for a in range(P.counts[0])] if d else []
    for r in range(d - 1):
        for a, ups in enumerate(P.covers[r]):
            inc.extend([_fid(r, a), _fid(r + 1, b)] for b in sorted(ups))
    if d:
        inc.extend([_fid(d - 1, a), f"{d}:0"] for a in range(P.counts[d - 1]))
    return json.dumps({"name": P.name, "rank": d, "f_vector": P.f_vector(),
                       "faces": faces, "incidence": inc}, indent=1)


def hasse_dot(P: FacePoset) -> str:
    d = P.rank
    lines = [f'digraph "{P.name}" {{', "  rankdir=BT;"]
    lines.append('  "-1:0" [label="F-1"];')
    for r in range(d):
        ids = " ".join(f'"{_fid(r, a)}"' for a in range(P.counts[r]))
        lines.append(f"  {{ rank=same; {ids} }}")
    lines.append(f'  "{d}:0" [label="F{d}"];')
    for a in range(P.counts[0] if d else 0):
        lines.append(f'  "-1:0" -> "{_fid(0, a)}";')
    for r in range(d - 1):
        for a, ups in enumerate(P.covers[r]):
            for b in sorted(ups):
                lines.append(f'  "{_fid(r, a)}" -> "{_fid(r + 1, b)}";')
    for a in range(P.counts[d - 1] if d else 0):
        lines.append(f'  "{_fid(d - 1, a)}" -> "{d}:0";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def flag_graph_dot(P: FacePoset) -> str:
    """Flag-adjacency graph; an edge labelled j joins j-adjacent flags."""
    flags = P.flags()
    lines = [f'graph "flags of {P.name}" {{']
    for i, fl in enumerate(flags):
        lines.append(f'  f{i} [label="{",".join(map(str, fl))}"];')
    for j in range(P.rank):
        rest = np.delete(flags, j, axis=1)
        groups: dict[bytes, list[int]] = {}
        for i, r in enumerate(rest):
            groups.setdefault(r.tobytes(), []).append(i)
        for members in groups.values():
            for a, b in itertools.combinations(members, 2):
                lines.append(f'  f{a} -- f{b} [label="{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def disjoint_union(P: FacePoset, Q: FacePoset) -> FacePoset:
    """Side-by-side union sharing only the improper faces (not a polytope)."""
    if P.rank != Q.rank:
        raise ValueError("ranks differ")
    covers = [[*P.covers[r], *[frozenset(b + P.counts[r + 1] for b in s) for s in Q.covers[r]]]
              for r in range(P.rank - 1)]
    return FacePoset(P.rank, [a + b for a, b in zip(P.counts, Q.counts)], covers,
                     name=f"{P.name}+{Q.name}")


def delete_face(P: FacePoset, r: int, a: int) -> FacePoset:
    """Copy of ``P`` with one face of rank ``r`` removed."""
    counts = list(P.counts)
    counts[r] -= 1

    def fix(x):
        return x - 1 if x > a else x

    covers = []
    for i in range(P.rank - 1):
        lvl = []
        for x, ups in enumerate(P.covers[i]):
            if i == r and x == a:
                continue
            ups = frozenset(fix(b) for b in ups if not (i + 1 == r and b == a))
            lvl.append(ups)
        covers.append(lvl)
    return FacePoset(P.rank, counts, covers, name=f"{P.name}-{r}:{a}")


def group_order_via_poset(P: FacePoset) -> int:
    return P.num_flags()
