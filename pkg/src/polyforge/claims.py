"""Reproducibility harness: one check per numeric claim, keyed and ordered."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

from .catalog import cube, polygon
from .corpus import regular_corpus
from .cstring import check_intersection_property, schlafli
from .fap import n_minus, n_plus
from .fpres import flat_presentation, todd_coxeter, universal_presentation
from .geometry import (build_poset, check_diamond, check_flag_connected, medial,
                       posets_isomorphic)
from .kernel import (closure, closure_order, generator_matching_isomorphic,
                     intersection_order, is_power_of_two)
from .mix import build_flat_tower, sections_match, tower_order
from .power import power_2k, predicted_order_2kg, proper_central_involutions
from .semireg import (build_semireg_poset, build_semiregular, constituent_posets,
                      doubling_automorphism_exists, families_alternate, predicted_order)
from .toroidal import TorusParams, build_torus_group, torus


# the d=5 semiregular corpus reaches order 2^15
SEMIREG_POSET_LIMIT = 2**15


@dataclass
class ClaimResult:
    key: str
    passed: bool
    detail: str
    seconds: float


def _toroidal() -> tuple[bool, str]:
    orders = {n: torus(n).order() for n in range(5, 11)}
    ok = all(orders[n] == 2**n for n in orders)
    neg = {p: TorusParams(*p).group_order for p in [(3, 0), (5, 0), (3, 3)]}
    ok &= not any(is_power_of_two(v) for v in neg.values())
    return ok, f"orders {orders}; non-2-power controls {neg}"


def _toroidal_fap() -> tuple[bool, str]:
    rows = []
    ok = True
    for n in range(5, 9):
        G = torus(n)
        a0, a2 = n_minus(G, 0), n_plus(G, 2)
        i0 = intersection_order(a0, G.parabolic([1, 2]))
        i2 = intersection_order(a2, G.parabolic([0, 1]))
        ok &= a0.order() == a2.order() == 2 ** (n - 3) and i0 == i2 == 1
        rows.append((n, a0.order(), a2.order(), i0, i2))
    return ok, f"(n, |N0|, |N2|, meets) {rows}"


def _towers() -> tuple[bool, str]:
    count = 0
    for d in (4, 5, 6):
        for ns in itertools.product((5, 6, 7), repeat=d - 2):
            T = build_flat_tower(ns)
            if T.order() != tower_order(ns) or not check_intersection_property(T, "reduced"):
                return False, f"failed at {ns}"
            if not all(sections_match(T, ns)):
                return False, f"sections differ at {ns}"
            count += 1
    return True, f"{count} towers"


def _all_fives() -> tuple[bool, str]:
    orders = {d: build_flat_tower((5,) * (d - 2)).order() for d in range(3, 8)}
    return all(orders[d] == 2 ** (2 * d - 1) for d in orders), f"orders {orders}"


def _presentations() -> tuple[bool, str]:
    got = {ns: todd_coxeter(flat_presentation(ns)) for ns in [(5, 5), (5, 6), (6, 6), (5, 5, 5)]}
    ok = all(got[ns] == tower_order(ns) for ns in got)
    free = todd_coxeter(flat_presentation((6, 6), with_commutators=False))
    return ok and free == 1024, f"with commutators {got}; (6,6) without {free}"


def _universal() -> tuple[bool, str]:
    base = TorusParams(2, 0)
    cases = {"(2,0),(2,0)": (TorusParams(2, 0), 128),
             "(2,0),(4,0)": (TorusParams(4, 0), 2 ** (2 * 2 + 5)),
             "(2,0),(2,2)": (TorusParams(2, 2), 2 ** (2 * 1 + 6))}
    got = {k: todd_coxeter(universal_presentation([base, p])) for k, (p, _) in cases.items()}
    return all(got[k] == cases[k][1] for k in cases), f"orders {got}"


def _semiregular() -> tuple[bool, str]:
    count = 0
    for d in (4, 5):
        for ns in itertools.product((5, 6, 7), repeat=d - 4):
            for n, m in itertools.product((5, 6, 7), repeat=2):
                T = build_semiregular(ns, (n, m))
                if T.order() != predicted_order(ns, (n, m)):
                    return False, f"order at {ns};{n},{m}"
                if doubling_automorphism_exists(T) != (n == m):
                    return False, f"doubling at {ns};{n},{m}"
                S = build_semireg_poset(T, limit=SEMIREG_POSET_LIMIT)
                PP, QQ, KK = constituent_posets(T)
                if S.counts[0] * KK.counts[0] != PP.counts[0] * QQ.counts[0]:
                    return False, f"f0 at {ns};{n},{m}"
                if not families_alternate(S):
                    return False, f"alternation at {ns};{n},{m}"
                count += 1
    return True, f"{count} parameter sets"


def _medial() -> tuple[bool, str]:
    K = build_torus_group(TorusParams(2, 0))
    M, H = medial(build_poset(K), K)
    iso = posets_isomorphic(M, build_poset(build_torus_group(TorusParams(2, 2))))
    C = cube()
    Mc, _ = medial(build_poset(C), C)
    ok = iso and H.order() == 64 and Mc.f_vector() == [12, 24, 14]
    return ok, f"medial([4,4]_(2,0)) iso {iso}, group {H.order()}; medial(cube) f {Mc.f_vector()}"


def _power() -> tuple[bool, str]:
    out = {}
    ok = True
    for name, K in [("{4}", polygon(4)), ("(2,0)", build_torus_group(TorusParams(2, 0))),
                    ("(2,2)", build_torus_group(TorusParams(2, 2)))]:
        G = power_2k(K)
        v = build_poset(K).counts[0]
        ok &= G.order() == K.order() * 2**v
        ok &= generator_matching_isomorphic(G.parabolic(range(1, G.rank)).gens, K.gens)
        ok &= schlafli(G) == (4, *schlafli(K))
        out[name] = G.order()
    sq = power_2k(polygon(4))
    ok &= generator_matching_isomorphic(sq.gens, build_torus_group(TorusParams(4, 0)).gens)
    K = build_torus_group(TorusParams(2, 0))
    qual = [c for c in proper_central_involutions(K) if c.avoids_facet]
    pred = predicted_order_2kg(K, 3)
    ok &= len(qual) >= 1 and pred == 2**13
    return ok, f"orders {out}; 2kg([4,4]_(2,0), 3) = {pred}"


def _diagnostics() -> tuple[bool, str]:
    names = []
    for spec, G in regular_corpus():
        P = build_poset(G)
        if not (check_diamond(P) and check_flag_connected(P) and P.num_flags() == G.order()):
            return False, f"failed on {spec}"
        names.append(spec)
    return True, f"{len(names)} posets"


def _oracles() -> tuple[bool, str]:
    n = 0
    for spec, G in regular_corpus(max_order=2**12):
        if closure_order(G) != G.order():
            return False, f"order mismatch on {spec}"
        for i in range(G.rank):
            A = G.parabolic([j for j in range(G.rank) if j != i])
            B = G.parabolic([j for j in range(G.rank) if j != (i + 1) % G.rank])
            brute = len(set(p.key() for p in closure(A.gens, G.degree)) &
                        set(p.key() for p in closure(B.gens, G.degree)))
            if brute != intersection_order(A, B):
                return False, f"intersection mismatch on {spec}"
        n += 1
    return True, f"{n} groups"


CLAIMS: list[tuple[str, str, Callable[[], tuple[bool, str]]]] = [
    ("01.toroidal-orders", "[4,4]^(n) has order 2^n", _toroidal),
    ("02.toroidal-fap", "N(alpha0), N(alpha2) of order 2^(n-3), trivial meets", _toroidal_fap),
    ("03.flat-tower-orders", "tower order 2^(sum n - 3(d-3)), IP, sections", _towers),
    ("04.all-fives", "all-fives tower of order 2^(2d-1)", _all_fives),
    ("05.presentation", "enumerated orders equal tower orders", _presentations),
    ("06.universal-orders", "universal 4-polytope orders", _universal),
    ("07.semiregular", "order, doubling, f0, alternation", _semiregular),
    ("08.medial", "medials of [4,4]_(2,0) and the cube", _medial),
    ("09.power", "2^K orders and vertex-figures", _power),
    ("10.diagnostics", "diamond, flag connectivity, flag count", _diagnostics),
    ("11.kernel-oracles", "chain vs closure orders and intersections", _oracles),
]


def run_claims(keys: list[str] | None = None) -> list[ClaimResult]:
    out = []
    for key, _, fn in CLAIMS:
        if keys and not any(key.startswith(k) or k in key for k in keys):
            continue
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed claim, reported not raised
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(ClaimResult(key, bool(ok), detail, time.perf_counter() - t))
    return sorted(out, key=lambda r: r.key)

