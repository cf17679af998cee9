from fractions import Fraction
from itertools import product

import pytest

from loosegeo import gfq
from loosegeo.scheme import (
    build_scheme,
    classify_lines,
    convexity_check,
    count_points,
    decompose,
    double_rank,
    enumerate_subspaces,
    interpolate_count_polynomial,
    subgraph_span_dim,
)
from conftest import corpus_graph


def brute_points(graph, q):
    """Independent membership test: a projective point belongs to the model iff
    its support sits inside one vertex star with the vertex coordinate nonzero,
    or is exactly the two fresh ends of a vertexless edge."""
    F = gfq.get_field(q)
    comp = graph.completion()
    idx = comp.index
    out = []
    for p in gfq.projective_points(F, len(comp)):
        support = {comp.names[i] for i, c in enumerate(p) if c != 0}
        ok = False
        for v in graph.vertices:
            star = {v} | set(comp.neighbours(v))
            if v in support and support <= star:
                ok = True
        for e, (a, b) in graph.edges.items():
            if a is None and b is None and support == set(comp.edge_ends[e]):
                ok = True
        if ok:
            out.append(p)
    return out


@pytest.mark.parametrize("name,q", list(product(["toy", "p4", "k3", "gamma1", "gamma2", "ve"], [2, 3])))
def test_points_match_brute_membership(name, q):
    graph = corpus_graph(name)
    model = build_scheme(graph, q)
    assert model.points == sorted(brute_points(graph, q))


def test_toy_point_counts():
    toy = corpus_graph("toy")
    assert len(build_scheme(toy, 2).points) == 7
    assert len(build_scheme(toy, 3).points) == 16
    assert count_points(toy, [2, 3, 4, 5]) == {2: 7, 3: 16, 4: 29, 5: 46}


def test_counting_polynomials():
    # toy: 2q^2 - q + 1; triangle: q^2 + q + 1
    toy_poly = interpolate_count_polynomial(corpus_graph("toy"))
    assert toy_poly == [Fraction(1), Fraction(-1), Fraction(2)]
    k3_poly = interpolate_count_polynomial(corpus_graph("k3"))
    assert k3_poly == [Fraction(1), Fraction(1), Fraction(1)]


def test_extension_counts_are_consistent():
    model = build_scheme(corpus_graph("toy"), 2)
    # |X(F_{2^r})| follows the same polynomial 2q^2 - q + 1
    for r in (1, 2, 3):
        q = 2 ** r
        assert model.point_count(r) == 2 * q * q - q + 1


def test_profile_of_full_space():
    model = build_scheme(corpus_graph("toy"), 2)
    basis = tuple(tuple(1 if j == i else 0 for j in range(4)) for i in range(4))
    prof = model.profile(basis)
    assert len(prof) == model.m + 1
    assert prof[0] == 7


def test_classify_lines_toy():
    model = build_scheme(corpus_graph("toy"), 2)
    lines = classify_lines(model)
    kinds = sorted(line.kind for line in lines)
    assert kinds.count("projective") == 3
    assert kinds.count("affine") == 8
    for line in lines:
        if line.kind == "affine":
            assert line.missing is not None
            assert line.missing not in model.point_index


def test_enumerate_subspaces_gamma1():
    model = build_scheme(corpus_graph("gamma1"), 2)
    projective, affine = enumerate_subspaces(model)
    assert len(projective.get(1, [])) == 12
    dims = sorted(p.dim for p in affine)
    assert dims == [1] * 8 + [2] * 4


def test_double_rank_examples():
    assert double_rank(build_scheme(corpus_graph("toy"), 2)) == (2, 1)
    # the triangle span is fully projective: no complete-affine part
    assert double_rank(build_scheme(corpus_graph("k3"), 2)) == (0, 2)
    assert double_rank(build_scheme(corpus_graph("gamma2"), 2)) == (3, 2)


def test_convexity_requires_tree():
    with pytest.raises(ValueError):
        convexity_check(build_scheme(corpus_graph("gamma1"), 2))


def test_subgraph_span_dims_toy():
    model = build_scheme(corpus_graph("toy"), 2)
    assert subgraph_span_dim(model, ["x"]) == 0
    assert subgraph_span_dim(model, ["x", "y"]) == 1
    assert subgraph_span_dim(model, ["x", "y", "lx#1", "ly#1"]) == 3


def test_decompose_disjoint_cover():
    for name, sizes in (("gamma1", (12, 2, 1)), ("gamma2", (14, 1, 0))):
        rep = decompose(build_scheme(corpus_graph(name), 2))
        assert rep["sizes"] == sizes
        assert rep["disjoint"]
        assert sum(rep["sizes"]) == rep["ambient_size"] == 15


def test_empty_graph_is_rejected():
    from loosegeo.graphs import LooseGraph

    with pytest.raises(ValueError):
        build_scheme(LooseGraph(), 2)
