import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyforge.fpres import (CosetOverflow, Presentation, evaluate, flat_presentation,
                             presentation_44, relators_hold, todd_coxeter,
                             universal_presentation, verify_presentation_theorem)
from polyforge.mix import build_flat_tower
from polyforge.toroidal import TorusParams, build_torus_group

STRATEGIES = ("hlt", "felsch")


def test_single_involution():
    assert todd_coxeter(Presentation(1, [])) == 2


def test_dihedral():
    P = Presentation(2, [[0, 1] * 5])
    assert todd_coxeter(P) == 10
    assert todd_coxeter(P, [[0]]) == 5


@pytest.mark.parametrize("strategy", STRATEGIES)
@pytest.mark.parametrize("st", [(2, 0), (4, 0), (2, 2), (3, 0), (3, 3), (4, 4)])
def test_torus_presentations(st, strategy):
    p = TorusParams(*st)
    P = presentation_44(*st)
    assert todd_coxeter(P, strategy=strategy) == p.group_order
    assert relators_hold(P, build_torus_group(p).gens)


def test_face_subgroup_index():
    assert todd_coxeter(presentation_44(2, 0), [[0], [1]]) == 4


@pytest.mark.parametrize("strategy", STRATEGIES)
@pytest.mark.parametrize("ns", [(5, 5), (5, 6), (6, 6), (5, 5, 5)])
def test_presentation_theorem(ns, strategy):
    assert verify_presentation_theorem(ns, strategy)


def test_commutators_needed():
    assert todd_coxeter(flat_presentation((6, 6), with_commutators=False)) == 1024


def test_position_factor_identity():
    base = todd_coxeter(flat_presentation((5, 5)))
    for ns in [(6, 5), (7, 5), (5, 6), (5, 7)]:
        extra = sum(ns) - 10
        assert todd_coxeter(flat_presentation(ns)) == 2**extra * base


def test_universal_orders():
    b = TorusParams(2, 0)
    assert todd_coxeter(universal_presentation([b, TorusParams(2, 0)])) == 128
    assert todd_coxeter(universal_presentation([b, TorusParams(4, 0)])) == 512
    assert todd_coxeter(universal_presentation([b, TorusParams(2, 2)])) == 256


def test_overflow_is_reported():
    with pytest.raises(CosetOverflow):
        todd_coxeter(presentation_44(4, 0), max_cosets=20)


def test_lookahead_recovers_under_tight_cap():
    # HLT defines more cosets than the index; lookahead reclaims the slack
    assert todd_coxeter(presentation_44(4, 0), max_cosets=140) == 128


def test_json_round_trip():
    P = flat_presentation((5, 6))
    Q = Presentation.from_json(P.to_json())
    assert Q.ngens == P.ngens and Q.relators == P.relators


def test_invalid_relator():
    with pytest.raises(ValueError):
        Presentation(2, [[0, 2]])


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 12), st.sampled_from(STRATEGIES))
def test_dihedral_orders(p, strategy):
    assert todd_coxeter(Presentation(2, [[0, 1] * p]), strategy=strategy) == 2 * p


def test_relators_evaluate_in_towers():
    T = build_flat_tower((5, 5, 5))
    P = flat_presentation((5, 5, 5))
    assert all(evaluate(w, T.gens).is_identity() for w in P.relators)
