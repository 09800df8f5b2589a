import pytest

from polyforge.catalog import cube, polygon
from polyforge.cstring import (StringCGroup, check_intersection_property,
                               check_string_relations, is_string_c_group, schlafli)
from polyforge.kernel import Permutation
from polyforge.mix import build_flat_tower
from polyforge.toroidal import torus


def test_cube_and_square():
    assert schlafli(cube()) == (4, 3)
    assert cube().order() == 48
    assert polygon(4).order() == 8
    assert is_string_c_group(cube())


@pytest.mark.parametrize("G", [torus(5), torus(6), cube(), build_flat_tower((5, 5)),
                               build_flat_tower((5, 6)), build_flat_tower((5, 5, 5))],
                         ids=lambda G: G.name)
def test_reduced_agrees_with_exhaustive(G):
    assert check_intersection_property(G, "exhaustive") == check_intersection_property(G, "reduced")


def test_string_relation_failure_reported():
    a = Permutation.from_cycles(4, (0, 1))
    b = Permutation.from_cycles(4, (1, 2))
    c = Permutation.from_cycles(4, (2, 3))
    # rho0 = (0 1) and rho2 = (1 2) do not commute
    bad = StringCGroup([a, c, Permutation.from_cycles(4, (1, 2))], name="bad")
    problems = check_string_relations(bad)
    assert problems and "rho0 rho2" in problems[0]
    with pytest.raises(ValueError):
        schlafli(bad)
    ok = StringCGroup([a, b, c])
    assert not check_string_relations(ok)


def test_identity_generator_is_not_an_involution():
    G = StringCGroup([Permutation.identity(3), Permutation.from_cycles(3, (0, 1))])
    assert check_string_relations(G)


def test_intersection_property_failure():
    # rho0 = rho2 collapses two parabolics: <0,1> meets <1,2> in the whole group
    a = Permutation.from_cycles(4, (0, 1), (2, 3))
    b = Permutation.from_cycles(4, (1, 2))
    G = StringCGroup([a, b, a], name="degenerate")
    assert not check_string_relations(G)
    assert not check_intersection_property(G, "exhaustive")
    assert not check_intersection_property(G, "reduced")


def test_parabolics_are_cached_and_share_base(t20):
    P = t20.parabolic([0, 1])
    assert P is t20.parabolic((1, 0))
    assert P.order() == 8
    assert t20.parabolic([0, 1, 2]) is t20
    assert t20.facet_group().order() == t20.vertex_figure_group().order() == 8
    with pytest.raises(ValueError):
        t20.parabolic([3])
