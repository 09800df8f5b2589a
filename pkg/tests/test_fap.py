import pytest

from polyforge.fap import (Hereditary, check_fap_hereditary, has_fap_cofaces, has_fap_faces,
                           hat_closure, n_minus, n_plus)
from polyforge.kernel import intersection_order
from polyforge.mix import build_flat_tower
from polyforge.toroidal import TorusParams, build_torus_group, torus


@pytest.mark.parametrize("n", range(5, 9))
def test_toroidal_fap(n):
    G = torus(n)
    assert n_minus(G, 0).order() == n_plus(G, 2).order() == 2 ** (n - 3)
    assert has_fap_cofaces(G, 0) and has_fap_faces(G, 2)


def test_fap_fails_for_odd_torus():
    G = build_torus_group(TorusParams(3, 0))
    assert not has_fap_cofaces(G, 0)
    assert intersection_order(n_minus(G, 0), G.parabolic([1, 2])) > 1


def test_trivial_endpoints(t20):
    assert has_fap_faces(t20, 0)
    assert has_fap_cofaces(t20, 2)
    with pytest.raises(ValueError):
        n_plus(t20, 3)


def test_hereditary_on_towers():
    T = build_flat_tower((5, 5, 5))
    assert check_fap_hereditary(T, 0, 0) is Hereditary.HOLDS
    assert check_fap_hereditary(T, 0, 1) is Hereditary.HOLDS
    assert bool(Hereditary.HOLDS) and not bool(Hereditary.NOT_APPLICABLE)
    assert check_fap_hereditary(torus(5), 0, 0) is Hereditary.NOT_APPLICABLE


def test_hereditary_out_of_range_is_not_applicable():
    T = build_flat_tower((5, 5, 5))
    assert check_fap_hereditary(T, 2, 0) is Hereditary.NOT_APPLICABLE
    assert check_fap_hereditary(T, 0, 2) is Hereditary.NOT_APPLICABLE


def test_hat_closure_orders():
    T = build_flat_tower((5, 6))
    assert hat_closure(T, 0).order() == 4
    assert hat_closure(T, 1).order() == 2 ** (6 - 3)
