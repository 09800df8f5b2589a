"""Presentations on involutory generators and Todd-Coxeter coset enumeration.

All generators are involutions, so a coset table needs one column per
generator and a word is simply a list of generator indices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from typing import Sequence

from .kernel import CapExceeded, Permutation
from .toroidal import TorusParams, params_for_exponent

DEFAULT_MAX_COSETS = 2**20

Word = list[int]


@dataclass
class Presentation:
    ngens: int
    relators: list[Word] = field(default_factory=list)
    name: str = "presentation"

    def __post_init__(self):
        if self.ngens < 1:
            raise ValueError("need at least one generator")
        for w in self.relators:
            if any(not 0 <= g < self.ngens for g in w):
                raise ValueError(f"relator {w} uses an unknown generator")
        for g in range(self.ngens):
            if [g, g] not in self.relators:
                self.relators.insert(g, [g, g])

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "ngens": self.ngens, "relators": self.relators})

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        data = json.loads(text)
        return cls(int(data["ngens"]), [list(map(int, w)) for w in data["relators"]],
                   name=data.get("name", "presentation"))


class CosetOverflow(CapExceeded):
    """Coset enumeration ran out of table rows."""


def evaluate(word: Sequence[int], gens: Sequence[Permutation]) -> Permutation:
    """Left-to-right product of the generators named by ``word``."""
    ident = Permutation.identity(gens[0].degree)
    return reduce(lambda acc, g: acc * gens[g], word, ident)


def relators_hold(P: Presentation, gens: Sequence[Permutation]) -> bool:
    return all(evaluate(w, gens).is_identity() for w in P.relators)


# ---------------------------------------------------------------------------
# coset table


class CosetTable:
    def __init__(self, ngens: int, max_cosets: int):
        self.ngens = ngens
        self.max_cosets = max_cosets
        self.table: list[list[int]] = [[-1] * ngens]
        self.p: list[int] = [0]
        self.live = 1
        self.deductions: list[tuple[int, int]] = []
        self.record = False
        self.defined = 1

    # -- union-find over cosets
    def rep(self, c: int) -> int:
        p = self.p
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.p[c] == c

    def define(self, c: int, x: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise CosetOverflow("cosets", self.max_cosets, len(self.table) + 1)
        n = len(self.table)
        self.table.append([-1] * self.ngens)
        self.p.append(n)
        self.live += 1
        self.defined += 1
        self.table[c][x] = n
        self.table[n][x] = c
        if self.record:
            self.deductions.append((c, x))

    def _set(self, a: int, x: int, b: int) -> None:
        self.table[a][x] = b
        self.table[b][x] = a
        if self.record:
            self.deductions.append((a, x))

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = min(a, b), max(a, b)
            self.p[hi] = lo
            self.live -= 1
            queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        table = self.table
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(self.ngens):
                d = table[g][x]
                if d < 0:
                    continue
                if table[d][x] == g:
                    table[d][x] = -1
                table[g][x] = -1
                mu, nu = self.rep(g), self.rep(d)
                if table[mu][x] >= 0:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x] >= 0:
                    self._merge(mu, table[nu][x], queue)
                else:
                    self._set(mu, x, nu)

    # -- scanning
    def scan(self, c: int, w: Word, fill: bool) -> None:
        """Scan ``w`` at ``c``; fill gaps by definition when ``fill``."""
        table = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] >= 0:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][w[j]] >= 0:
                b = table[b][w[j]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                self._set(f, w[i], b)
                return
            if not fill:
                return
            self.define(f, w[i])

    def compact(self) -> dict[int, int]:
        live = [c for c in range(len(self.table)) if self.is_live(c)]
        new = {c: k for k, c in enumerate(live)}
        self.table = [[new[self.rep(e)] if e >= 0 else -1 for e in self.table[c]] for c in live]
        self.p = list(range(len(live)))
        self.deductions = [(new[self.rep(a)], x) for a, x in self.deductions if self.rep(a) in new]
        return new

    def complete(self) -> bool:
        return all(e >= 0 for c in range(len(self.table)) if self.is_live(c) for e in self.table[c])

    def closed_under(self, words: Sequence[Word]) -> bool:
        for c in range(len(self.table)):
            if not self.is_live(c):
                continue
            for w in words:
                f = c
                for x in w:
                    f = self.table[f][x]
                if f != c:
                    return False
        return True


def _hlt(P: Presentation, sub: Sequence[Word], T: CosetTable) -> None:
    for w in sub:
        T.scan(0, w, fill=True)
    c = 0
    while c < len(T.table):
        if T.is_live(c):
            try:
                for w in P.relators:
                    T.scan(c, w, fill=True)
                    if not T.is_live(c):
                        break
                if T.is_live(c):
                    for x in range(T.ngens):
                        if T.table[c][x] < 0:
                            T.define(c, x)
            except CosetOverflow:
                c = _lookahead(P, T, c)
                continue
        c += 1


def _lookahead(P: Presentation, T: CosetTable, c: int) -> int:
    """Scan every live coset without defining; compact or give up."""
    before = T.live
    for a in range(len(T.table)):
        for w in P.relators:
            if not T.is_live(a):
                break
            T.scan(a, w, fill=False)
    if T.live == before:
        raise CosetOverflow("cosets", T.max_cosets, T.max_cosets + 1)
    new = T.compact()
    # resume at the first surviving coset at or after c
    for old in sorted(new):
        if old >= c:
            return new[old]
    return len(T.table)


def _felsch(P: Presentation, sub: Sequence[Word], T: CosetTable) -> None:
    rotations: list[list[Word]] = [[] for _ in range(T.ngens)]
    seen = set()
    for w in P.relators:
        for k in range(len(w)):
            for r in (w[k:] + w[:k], (w[k:] + w[:k])[::-1]):
                if tuple(r) not in seen:
                    seen.add(tuple(r))
                    rotations[r[0]].append(r)
    T.record = True

    def process() -> None:
        while T.deductions:
            a, x = T.deductions.pop()
            if not T.is_live(a):
                a = T.rep(a)
            b = T.table[a][x]
            for w in rotations[x]:
                if not T.is_live(a):
                    break
                T.scan(a, w, fill=False)
            if b >= 0 and T.is_live(b):
                for w in rotations[x]:
                    if not T.is_live(b):
                        break
                    T.scan(b, w, fill=False)

    for w in sub:
        T.scan(0, w, fill=True)
    process()
    c = 0
    while c < len(T.table):
        if T.is_live(c):
            for x in range(T.ngens):
                if T.is_live(c) and T.table[c][x] < 0:
                    T.define(c, x)
                    process()
        c += 1


def todd_coxeter(P: Presentation, sub: Sequence[Word] = (), max_cosets: int = DEFAULT_MAX_COSETS,
                 strategy: str = "hlt") -> int:
    """Index of ``<sub>`` in the group presented by ``P``; raises on overflow."""
    if max_cosets < 1:
        raise ValueError("max_cosets >= 1")
    T = CosetTable(P.ngens, max_cosets)
    if strategy == "hlt":
        _hlt(P, sub, T)
    elif strategy == "felsch":
        _felsch(P, sub, T)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if not T.complete() or not T.closed_under(P.relators):
        raise AssertionError("coset table did not close")
    return T.live


# ---------------------------------------------------------------------------
# presentations of the corpus


def translation_relator(params: TorusParams, offset: int = 0) -> Word:
    """T1^s T2^t in generators offset..offset+2, T1 = r0r1r2r1, T2 = r1r0r1r2."""
    a, b, c = offset, offset + 1, offset + 2
    return [a, b, c, b] * params.s + [b, a, b, c] * params.t


def coxeter_relators(schlafli: Sequence[int]) -> list[Word]:
    d = len(schlafli) + 1
    rels = [[i, i + 1] * p for i, p in enumerate(schlafli)]
    rels += [[i, j] * 2 for i in range(d) for j in range(i + 2, d)]
    return rels


def presentation_44(s: int, t: int) -> Presentation:
    p = TorusParams(s, t)
    return Presentation(3, coxeter_relators((4, 4)) + [translation_relator(p)], name=f"[4,4]_{p}")


def commutator_relator(i: int) -> Word:
    """[(r_i r_{i+1})^2, (r_{i+2} r_{i+3})^2] with [a,b] = a^-1 b^-1 a b."""
    return ([i + 1, i] * 2 + [i + 3, i + 2] * 2 + [i, i + 1] * 2 + [i + 2, i + 3] * 2)


def universal_presentation(sections: Sequence[TorusParams], with_commutators: bool = False,
                           name: str | None = None) -> Presentation:
    """{4,...,4} with one toroidal relator per consecutive rank-3 section."""
    d = len(sections) + 2
    rels = coxeter_relators((4,) * (d - 1))
    rels += [translation_relator(p, j) for j, p in enumerate(sections)]
    if with_commutators:
        rels += [commutator_relator(i) for i in range(d - 3)]
    return Presentation(d, rels, name=name or "{" + ",".join(f"{{4,4}}_{p}" for p in sections) + "}")


def flat_presentation(ns: Sequence[int], with_commutators: bool = True) -> Presentation:
    if any(n < 5 for n in ns):
        raise ValueError("all n_j must be >= 5")
    return universal_presentation([params_for_exponent(n) for n in ns], with_commutators,
                                  name=f"flat({','.join(map(str, ns))})")


def verify_presentation_theorem(ns: Sequence[int], strategy: str = "hlt",
                                max_cosets: int = DEFAULT_MAX_COSETS) -> bool:
    from .mix import build_flat_tower
    T = build_flat_tower(ns)
    P = flat_presentation(ns, True)
    if not relators_hold(P, T.gens):
        return False
    return todd_coxeter(P, (), max_cosets, strategy) == T.order()
