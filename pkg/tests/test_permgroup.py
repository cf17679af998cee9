from itertools import permutations

from hypothesis import given, strategies as st

from loosegeo.permgroup import (
    PermGroup,
    compose,
    intersection_order,
    inverse,
    is_normal,
    pointwise_stabilizer,
    setwise_stabilizer,
    verify_central_product,
)


def sym(n):
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return PermGroup([cycle, swap], n)


def test_symmetric_group_order_and_membership():
    g = sym(5)
    assert g.order() == 120
    for p in permutations(range(4)):
        assert g.contains(tuple(p) + (4,))
    assert len(list(g.elements())) == 120


def test_stabilizers_in_s4():
    g = sym(4)
    stab = pointwise_stabilizer(g, [0])
    assert stab.order() == 6
    setw = setwise_stabilizer(g, [0, 1])
    assert setw.order() == 4  # swaps within {0,1} times swaps within {2,3}
    assert not is_normal(g, setw)


def test_normality():
    g = sym(3)
    a3 = PermGroup([(1, 2, 0)], 3)
    assert is_normal(g, a3)


def test_intersection_order():
    g = sym(4)
    a = pointwise_stabilizer(g, [0])
    b = pointwise_stabilizer(g, [1])
    assert intersection_order(a, b) == 2  # the swap of {2,3}


def test_central_product_of_disjoint_swaps():
    a = PermGroup([(1, 0, 2, 3)], 4)
    b = PermGroup([(0, 1, 3, 2)], 4)
    whole = PermGroup([(1, 0, 2, 3), (0, 1, 3, 2)], 4)
    rep = verify_central_product(whole, [a, b])
    assert rep["ok"] and rep["commute"] and rep["generates"]
    assert rep["intersection_orders"] == {(0, 1): 1}


def test_central_product_rejects_non_commuting_factors():
    g = sym(3)
    a = PermGroup([(1, 0, 2)], 3)
    b = PermGroup([(0, 2, 1)], 3)
    rep = verify_central_product(g, [a, b])
    assert not rep["commute"]


@given(st.permutations(list(range(6))), st.permutations(list(range(6))))
def test_compose_and_inverse(p, q):
    p, q = tuple(p), tuple(q)
    pq = compose(p, q)
    # find image of i: q is applied first
    for i in range(6):
        assert pq[i] == p[q[i]]
    assert compose(p, inverse(p)) == tuple(range(6))


@given(st.lists(st.permutations(list(range(5))), min_size=1, max_size=3))
def test_order_divides_symmetric_group(gens):
    g = PermGroup([tuple(p) for p in gens], 5)
    assert 120 % g.order() == 0
    for p in gens:
        assert g.contains(tuple(p))
