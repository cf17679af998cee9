import pytest

from loosegeo.graphs import LooseGraph, LooseMorphism, fresh_name, graph_aut_group_perms
from conftest import corpus_graph


def toy():
    return corpus_graph("toy")


def test_degrees_and_inner_vertices():
    g = toy()
    assert g.degree("x") == 2 and g.degree("y") == 2
    assert g.inner_vertices() == ["x", "y"]
    spider = corpus_graph("spider")
    assert spider.inner_vertices() == ["w", "c", "d"]


def test_decorations():
    spider = corpus_graph("spider")
    assert spider.decoration("w").as_tuple() == (2, 0, 1)
    assert spider.decoration("c").as_tuple() == (0, 0, 2)
    assert spider.decoration("d").as_tuple() == (1, 0, 1)


def test_completion_ordering_and_fresh_names():
    g = toy()
    comp = g.completion()
    assert comp.names == ["x", "y", fresh_name("lx", 1), fresh_name("ly", 1)]
    assert comp.edge_ends["lx"] == ("x", "lx#1")
    assert comp.adjacent("x", "y")
    assert not comp.adjacent("lx#1", "ly#1")


def test_is_tree():
    assert corpus_graph("p4").is_tree()
    assert toy().is_tree()
    assert not corpus_graph("gamma1").is_tree()
    assert not corpus_graph("k3").is_tree()


def test_add_edge_rejects_duplicates_and_unknown_vertices():
    g = LooseGraph()
    g.add_vertex("a")
    with pytest.raises(ValueError):
        g.add_edge("e", "a", "b")
    g.add_vertex("b")
    g.add_edge("e", "a", "b")
    with pytest.raises(ValueError):
        g.add_edge("e", "a", "b")


def test_morphism_validation_rules():
    p4 = corpus_graph("p4")
    p3 = corpus_graph("p3")
    vmap = {"a": "a", "b": "b", "c": "b", "d": "c"}
    good = LooseMorphism(p4, p3, vmap, {"ab": ("edge", "ab"), "bc": ("vertex", "b"), "cd": ("edge", "bc")})
    good.validate()
    # endpoint off the image edge
    bad = LooseMorphism(p4, p3, vmap, {"ab": ("edge", "bc"), "bc": ("vertex", "b"), "cd": ("edge", "bc")})
    with pytest.raises(ValueError):
        bad.validate()
    # both endpoints collapse without contraction
    bad2 = LooseMorphism(p4, p3, vmap, {"ab": ("edge", "ab"), "bc": ("edge", "ab"), "cd": ("edge", "bc")})
    with pytest.raises(ValueError):
        bad2.validate()


def test_loose_edge_can_contract_with_its_edge():
    g = LooseGraph()
    g.add_vertex("a")
    g.add_edge("l", "a", None)
    pt = LooseGraph()
    pt.add_vertex("p")
    m = LooseMorphism(g, pt, {"a": "p"}, {"l": ("vertex", "p")})
    m.validate()
    cmap = m.completion_vertex_map()
    assert cmap[fresh_name("l", 1)] == "p"


def test_completion_vertex_map_slot_order():
    g = LooseGraph()
    g.add_vertex("a")
    g.add_edge("l", "a", None)
    k2 = LooseGraph()
    k2.add_vertex("u")
    k2.add_vertex("v")
    k2.add_edge("e", "u", "v")
    m = LooseMorphism(g, k2, {"a": "u"}, {"l": ("edge", "e")})
    cmap = m.completion_vertex_map()
    assert cmap == {"a": "u", fresh_name("l", 1): "v"}


def test_compose_matches_pointwise_application():
    p4, p3 = corpus_graph("p4"), corpus_graph("p3")
    f = LooseMorphism(
        p4, p3,
        {"a": "a", "b": "b", "c": "b", "d": "c"},
        {"ab": ("edge", "ab"), "bc": ("vertex", "b"), "cd": ("edge", "bc")},
    )
    pt = LooseGraph()
    pt.add_vertex("p")
    g = LooseMorphism(
        p3, pt,
        {"a": "p", "b": "p", "c": "p"},
        {"ab": ("vertex", "p"), "bc": ("vertex", "p")},
    )
    gf = g.compose(f)
    gf.validate()
    for v in p4.vertices:
        assert gf.vmap[v] == g.vmap[f.vmap[v]]
    assert gf.emap == {"ab": ("vertex", "p"), "bc": ("vertex", "p"), "cd": ("vertex", "p")}


def test_graph_aut_group_plain_and_colored():
    p4 = corpus_graph("p4")
    auts = graph_aut_group_perms(p4)
    assert len(auts) == 2
    # pinning an endpoint with a color kills the flip
    colored = graph_aut_group_perms(p4, colors={"a": 0, "b": 1, "c": 1, "d": 1})
    assert len(colored) == 1
    spider_inner = corpus_graph("spider").induced_inner_subgraph()
    assert len(graph_aut_group_perms(spider_inner)) == 2
