import pytest

from polyforge.geometry import build_poset, check_diamond, check_flag_connected, posets_isomorphic, section
from polyforge.semireg import (build_semireg_poset, build_semiregular, constituent_posets,
                               doubling_automorphism_exists, facet_family_counts,
                               families_alternate, full_automorphism_group, order_factorization,
                               predicted_order, semireg_f0_formula)


@pytest.mark.parametrize("ns, last, order", [((), (5, 6), 256), ((), (5, 5), 128),
                                             ((5,), (5, 6), 1024)])
def test_orders(ns, last, order):
    T = build_semiregular(ns, last)
    assert T.order() == order == predicted_order(ns, last)
    a, b, k = order_factorization(T)
    assert a * b * k == order
    assert a == 2 ** (last[0] - 3) and b == 2 ** (last[1] - 3)


@pytest.mark.parametrize("last, expected", [((5, 5), True), ((5, 6), False), ((6, 6), True),
                                            ((6, 5), False)])
def test_doubling(last, expected):
    T = build_semiregular((), last)
    assert doubling_automorphism_exists(T) is expected
    full = full_automorphism_group(T)
    assert full.order() == T.order() * (2 if expected else 1)


def test_apexes_commute_and_tail_forms_facet_groups():
    T = build_semiregular((), (5, 6))
    a, b = T.apexes
    assert (a * b) == (b * a)
    assert all((g * g).is_identity() for g in T.gens)


def test_poset_5_6():
    T = build_semiregular((), (5, 6))
    S = build_semireg_poset(T)
    PP, QQ, KK = constituent_posets(T)
    assert (PP.counts[0], QQ.counts[0], KK.counts[0]) == (4, 8, 4)
    assert S.counts[0] == 8 == semireg_f0_formula(4, 8, 4)
    fam = facet_family_counts(S)
    assert fam["P"] + fam["Q"] == S.counts[3]
    assert fam["P"] + fam["Q"] == PP.counts[2] + QQ.counts[2]
    assert fam == {"P": T.order() // T.P.order(), "Q": T.order() // T.Q.order()}
    assert families_alternate(S)
    assert check_diamond(S) and check_flag_connected(S)


def test_vertex_figure_of_5_5(t22):
    T = build_semiregular((), (5, 5))
    S = build_semireg_poset(T)
    assert S.counts[0] == semireg_f0_formula(4, 4, 4) == 4
    V = section(S, 0, 0, 4, 0)
    assert posets_isomorphic(V, build_poset(t22))


def test_rank5_poset():
    T = build_semiregular((5,), (6, 6))
    S = build_semireg_poset(T)
    PP, QQ, KK = constituent_posets(T)
    assert S.counts[0] * KK.counts[0] == PP.counts[0] * QQ.counts[0]
    assert families_alternate(S)
    assert check_diamond(S)


def test_f0_formula():
    assert semireg_f0_formula(4, 8, 4) == 8
    assert semireg_f0_formula(4, 4, 4) == 4
    assert semireg_f0_formula(6, 6, 6) == 6
    with pytest.raises(ValueError):
        semireg_f0_formula(3, 5, 4)


def test_parameter_range():
    with pytest.raises(ValueError):
        build_semiregular((), (4, 5))
