"""Acceptance criteria 1-11, one test each, each printing a PASS/FAIL line."""
import itertools

from polyforge.catalog import cube, polygon
from polyforge.corpus import regular_corpus
from polyforge.cstring import check_intersection_property
from polyforge.fap import n_minus, n_plus
from polyforge.fpres import flat_presentation, relators_hold, todd_coxeter, universal_presentation
from polyforge.geometry import (build_poset, check_diamond, check_flag_connected, medial,
                                posets_isomorphic)
from polyforge.kernel import (closure, closure_order, generator_matching_isomorphic,
                              intersection_order, is_power_of_two)
from polyforge.mix import build_flat_tower, sections_match, tower_order
from polyforge.power import power_2k, predicted_order_2kg, proper_central_involutions
from polyforge.semireg import (build_semireg_poset, build_semiregular, constituent_posets,
                               doubling_automorphism_exists, families_alternate, predicted_order)
from polyforge.toroidal import TorusParams, build_torus_group, params_for_exponent, torus


def test_01_toroidal_classification(criterion):
    with criterion(1, "[4,4]^(n) has order 2^n; odd controls are not 2-powers", 5):
        for n in range(5, 11):
            assert build_torus_group(params_for_exponent(n)).order() == 2**n
        for st in [(3, 0), (5, 0), (3, 3)]:
            p = TorusParams(*st)
            assert build_torus_group(p).order() == 8 * (p.s**2 + p.t**2)
            assert not is_power_of_two(p.group_order)


def test_02_toroidal_fap(criterion):
    with criterion(2, "N(alpha0), N(alpha2) of order 2^(n-3), trivial meets", 5):
        for n in range(5, 9):
            G = torus(n)
            a0, a2 = n_minus(G, 0), n_plus(G, 2)
            assert a0.order() == a2.order() == 2 ** (n - 3)
            assert intersection_order(a0, G.parabolic([1, 2])) == 1
            assert intersection_order(a2, G.parabolic([0, 1])) == 1


def test_03_flat_tower_orders(criterion):
    with criterion(3, "flat towers d=4,5,6 over {5,6,7}: order, IP, sections", 180):
        count = 0
        for d in (4, 5, 6):
            for ns in itertools.product((5, 6, 7), repeat=d - 2):
                T = build_flat_tower(ns)
                assert T.order() == 2 ** (sum(ns) - 3 * (d - 3)), ns
                assert check_intersection_property(T, "reduced"), ns
                assert all(sections_match(T, ns)), ns
                count += 1
        assert count == 9 + 27 + 81


def test_04_all_fives(criterion):
    with criterion(4, "all-fives tower has order 2^(2d-1), d=3..7", 30):
        for d in range(3, 8):
            assert build_flat_tower((5,) * (d - 2)).order() == 2 ** (2 * d - 1)


def test_05_presentation_theorem(criterion):
    with criterion(5, "coset enumeration matches tower orders; (6,6) cover is 1024", 60):
        for ns in [(5, 5), (5, 6), (6, 6), (5, 5, 5)]:
            P = flat_presentation(ns, with_commutators=True)
            T = build_flat_tower(ns)
            assert relators_hold(P, T.gens)
            assert todd_coxeter(P) == T.order() == tower_order(ns)
        assert todd_coxeter(flat_presentation((6, 6), with_commutators=False)) == 1024


def test_06_universal_orders(criterion):
    with criterion(6, "universal {{4,4}_(2,0),K} orders 128, 2^9, 2^8", 60):
        b = TorusParams(2, 0)
        assert todd_coxeter(universal_presentation([b, TorusParams(2, 0)])) == 128
        e = 2
        assert todd_coxeter(universal_presentation([b, TorusParams(2**e, 0)])) == 2 ** (2 * e + 5)
        e = 1
        assert todd_coxeter(universal_presentation([b, TorusParams(2**e, 2**e)])) == 2 ** (2 * e + 6)


def test_07_semiregular(criterion):
    with criterion(7, "semiregular d=4,5: order, doubling, f0 identity, alternation", 120):
        for d in (4, 5):
            for ns in itertools.product((5, 6, 7), repeat=d - 4):
                for n, m in itertools.product((5, 6, 7), repeat=2):
                    T = build_semiregular(ns, (n, m))
                    assert T.order() == predicted_order(ns, (n, m))
                    assert T.order() == 2 ** (sum(ns) + n + m - 3 * (d - 3))
                    assert doubling_automorphism_exists(T) == (n == m)
                    S = build_semireg_poset(T, limit=2**15)
                    PP, QQ, KK = constituent_posets(T)
                    assert S.counts[0] * KK.counts[0] == PP.counts[0] * QQ.counts[0]
                    assert families_alternate(S)


def test_08_medial(criterion):
    with criterion(8, "medial([4,4]_(2,0)) ~ {4,4}_(2,2), group 64; medial(cube) (12,24,14)", 5):
        K = build_torus_group(TorusParams(2, 0))
        M, H = medial(build_poset(K), K)
        assert posets_isomorphic(M, build_poset(build_torus_group(TorusParams(2, 2))))
        assert H.order() == 64
        C = cube()
        Mc, _ = medial(build_poset(C), C)
        assert Mc.f_vector() == [12, 24, 14]


def test_09_power(criterion):
    with criterion(9, "|2^K| = 2^(n+v); vertex-figures; 2^{4} ~ [4,4]_(4,0); 2kg prediction", 30):
        for K in [polygon(4), build_torus_group(TorusParams(2, 0)),
                  build_torus_group(TorusParams(2, 2))]:
            v = build_poset(K).counts[0]
            G = power_2k(K)
            assert G.order() == 2 ** (K.order().bit_length() - 1 + v)
            assert generator_matching_isomorphic(G.parabolic(range(1, G.rank)).gens, K.gens)
        sq = power_2k(polygon(4))
        assert generator_matching_isomorphic(sq.gens, build_torus_group(TorusParams(4, 0)).gens)
        K = build_torus_group(TorusParams(2, 0))
        qualifying = [c for c in proper_central_involutions(K) if c.avoids_facet]
        assert qualifying
        z = qualifying[0].element
        assert (z * z).is_identity() and all(z * g == g * z for g in K.gens)
        assert z not in K.parabolic([1, 2]) and z not in K.parabolic([0, 1])
        assert predicted_order_2kg(K, 3) == 2**13


def test_10_polytopality(criterion):
    with criterion(10, "every corpus poset: diamond, flag connectivity, flags = order", 120):
        n = 0
        for spec, G in regular_corpus():
            P = build_poset(G)
            assert check_diamond(P), spec
            assert check_flag_connected(P), spec
            assert P.num_flags() == G.order(), spec
            n += 1
        assert n >= 20


def test_11_kernel_oracles(criterion):
    with criterion(11, "chain order = closure order; intersections = brute force", 60):
        n = 0
        for spec, G in regular_corpus(max_order=2**12):
            assert closure_order(G) == G.order(), spec
            d = G.rank
            subsets = [tuple(c) for r in range(1, d) for c in itertools.combinations(range(d), r)]
            for A_idx, B_idx in itertools.combinations(subsets, 2):
                A, B = G.parabolic(A_idx), G.parabolic(B_idx)
                brute = ({p.key() for p in closure(A.gens, G.degree)}
                         & {p.key() for p in closure(B.gens, G.degree)})
                assert intersection_order(A, B) == len(brute), (spec, A_idx, B_idx)
            n += 1
        assert n >= 15
