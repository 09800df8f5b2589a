import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyforge.kernel import (CAPS, CapExceeded, FiniteGroup, Permutation, closure,
                              closure_order, commutator, direct_product,
                              generator_matching_isomorphic, intersection,
                              intersection_order, is_power_of_two, log2_exact,
                              normal_closure, pair)


def perms(degree):
    return st.permutations(list(range(degree))).map(Permutation)


def test_composition_is_left_to_right():
    p = Permutation.from_cycles(3, (0, 1))
    q = Permutation.from_cycles(3, (1, 2))
    # p first: 0 -> 1, then q: 1 -> 2
    assert (p * q)(0) == 2
    assert (q * p)(0) == 1


def test_cycles_and_order():
    p = Permutation.from_cycles(6, (0, 1, 2), (3, 4))
    assert p.order() == 6
    assert p.cycles() == [(0, 1, 2), (3, 4)]
    assert (p ** 6).is_identity()
    assert (p * p.inverse()).is_identity()


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_commutator_of_commuting_elements_is_trivial():
    a = Permutation.from_cycles(5, (0, 1))
    b = Permutation.from_cycles(5, (2, 3, 4))
    assert commutator(a, b).is_identity()


@pytest.mark.parametrize("n, order", [(5, 120), (8, 40320), (12, 479001600)])
def test_symmetric_group_orders(n, order):
    gens = [Permutation.from_cycles(n, (0, 1)), Permutation.from_cycles(n, tuple(range(n)))]
    assert FiniteGroup(gens).order() == order


@settings(max_examples=40, deadline=None)
@given(st.lists(perms(7), min_size=1, max_size=3))
def test_chain_order_matches_closure(gens):
    G = FiniteGroup(gens)
    assert G.order() == closure_order(G)


@settings(max_examples=40, deadline=None)
@given(st.lists(perms(6), min_size=1, max_size=2), perms(6))
def test_membership_matches_closure(gens, x):
    G = FiniteGroup(gens)
    elems = {p.key() for p in closure(gens, 6)}
    assert G.contains(x) == (x.key() in elems)


@settings(max_examples=30, deadline=None)
@given(st.lists(perms(6), min_size=1, max_size=2), st.lists(perms(6), min_size=1, max_size=2))
def test_intersection_matches_brute_force(ga, gb):
    A, B = FiniteGroup(ga), FiniteGroup(gb)
    brute = {p.key() for p in closure(ga, 6)} & {p.key() for p in closure(gb, 6)}
    assert intersection_order(A, B) == len(brute)
    H = intersection(A, B)
    assert H.order() == len(brute)
    assert all(g.key() in brute for g in H.generators)


def test_normal_closure_of_transposition_in_s4():
    s4 = FiniteGroup([Permutation.from_cycles(4, (0, 1)), Permutation.from_cycles(4, (0, 1, 2, 3))])
    assert normal_closure(s4, [Permutation.from_cycles(4, (0, 1))]).order() == 24
    v4 = normal_closure(s4, [Permutation.from_cycles(4, (0, 1), (2, 3))])
    assert v4.order() == 4


def test_normal_closure_rejects_foreign_element():
    c4 = FiniteGroup([Permutation.from_cycles(4, (0, 1, 2, 3))])
    with pytest.raises(ValueError):
        normal_closure(c4, [Permutation.from_cycles(4, (0, 1))])


def test_direct_product_order():
    a = FiniteGroup([Permutation.from_cycles(3, (0, 1, 2))])
    b = FiniteGroup([Permutation.from_cycles(2, (0, 1))])
    P, el, er = direct_product(a, b)
    assert P.order() == 6
    assert el(a.generators[0]) in P


def test_generator_matching():
    r = Permutation.from_cycles(4, (0, 1, 2, 3))
    s = Permutation.from_cycles(4, (1, 3))
    # r -> r^-1, s -> s is an automorphism of D4; r -> s is not
    assert generator_matching_isomorphic((r, s), (r.inverse(), s))
    assert not generator_matching_isomorphic((r, s), (s, r))
    assert pair(r, s).degree == 8


def test_caps_raise():
    with pytest.raises(CapExceeded):
        closure([Permutation.from_cycles(6, (0, 1)), Permutation.from_cycles(6, tuple(range(6)))],
                6, limit=100)
    assert CAPS.max_elements >= 2**22


def test_random_element_is_member():
    G = FiniteGroup([Permutation.from_cycles(6, (0, 1, 2)), Permutation.from_cycles(6, (2, 3, 4, 5))])
    rng = random.Random(1)
    for _ in range(20):
        assert G.random_element(rng) in G


def test_power_of_two_helpers():
    assert [n for n in range(1, 20) if is_power_of_two(n)] == [1, 2, 4, 8, 16]
    assert log2_exact(1024) == 10
    with pytest.raises(ValueError):
        log2_exact(12)


def test_base_images_enumerate_distinct_elements():
    G = FiniteGroup([Permutation.from_cycles(5, (0, 1)), Permutation.from_cycles(5, (0, 1, 2, 3, 4))])
    rows = G.base_images(G.base)
    assert rows.shape[0] == 120
    assert len({r.tobytes() for r in rows}) == 120
    assert np.array_equal(rows[0], np.asarray(G.base))
