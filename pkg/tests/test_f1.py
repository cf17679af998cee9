from math import comb, factorial

import pytest

from loosegeo import f1
from loosegeo.gfq import pg_size


@pytest.mark.parametrize("n", range(0, 11))
def test_spec_point_counts(n):
    space = f1.spec_points(n)
    assert len(space.points) == 2 ** n


def test_spec_rejects_out_of_range():
    with pytest.raises(ValueError):
        f1.spec_points(21)
    with pytest.raises(ValueError):
        f1.spec_points(-1)


def test_height_census_is_binomial():
    space = f1.spec_points(6)
    census = f1.height_census(space)
    assert census == {h: comb(6, h) for h in range(7)}


def test_specialization_order():
    space = f1.spec_points(3)
    g = space.generic_point()
    c = space.closed_point()
    for p in space.points:
        assert space.leq(g, p)
        assert space.leq(p, c)


@pytest.mark.parametrize("m", range(0, 5))
def test_proj_closed_points_match_pg_over_f2(m):
    assert f1.proj_c_closed_point_count(m) == pg_size(2, m + 1)


def test_point_congruence_generators():
    cong = f1.point_congruence((0, 1, 0, 1))
    assert cong.pivot == 1
    assert cong.zero_indices == (0, 2)
    assert cong.unit_pairs == ((3, 1),)
    gens = cong.generators()
    assert ("zero", 0) in gens and ("eq", 3, 1) in gens
    with pytest.raises(ValueError):
        f1.point_congruence((0, 0))
    with pytest.raises(ValueError):
        f1.point_congruence((0, 2))


@pytest.mark.parametrize("n", range(1, 5))
def test_topo_aut_group_is_symmetric_on_variables(n):
    space = f1.spec_points(n)
    group = f1.topo_aut_group(space)
    assert group.order() == factorial(n)
