import pytest

from conftest import load
from oracles import naive_maximal, naive_zero, relation_words
from monoquiver import MonomialAlgebra, Quiver
from monoquiver.generate import random_algebra
from monoquiver.ramifications import (
    component_shape,
    decompose_maximal_paths,
    induced_component_algebra,
    is_unilaterally_connected,
    omega_path,
    ramifications_graph,
    weak_components,
)
from monoquiver.structure import is_ump


def omega_table(A):
    return {a: str(w) for a, w in ramifications_graph(A).omega_of.items()}


def edge_names(graph_edges):
    return {(str(a), str(b)) for a, b in graph_edges}


def test_omega_tailed_triangle():
    assert omega_table(load("tailed_triangle")) == {"a": "a", "b": "b.c", "c": "b.c", "d": "d.e", "e": "d.e", "f": "f"}


def test_omega_two_cycle_tail():
    assert omega_table(load("two_cycle_tail")) == {"a": "b.a", "b": "b.a", "c": "c"}


def test_omega_four_cycle_entry_follows_degree_rule():
    table = omega_table(load("four_cycle_entry"))
    assert {table[a] for a in ("a1", "a2", "a3", "a4")} == {"a4.a1.a2.a3"}
    assert table["b"] == "b"


def test_omega_triangle_exit_is_a_cycle():
    A = load("triangle_exit")
    w = omega_path("a", A.quiver)
    assert str(w) == "a.b.c" and w.is_cycle


def test_omega_cover_and_inner_degrees(fixture_algebra):
    q = fixture_algebra.quiver
    for a in q.arrow_ids:
        w = omega_path(a, q)
        assert a in w.arrows
        for x in w.arrows[1:]:
            v = q.source(x)
            assert len(q.in_arrows(v)) == 1 and len(q.out_arrows(v)) == 1


def test_omega_is_maximal_on_noncyclic_quivers(fixture_algebra):
    q = fixture_algebra.quiver
    for a in q.arrow_ids:
        w = omega_path(a, q)
        if w.source == w.target and all(len(q.out_arrows(v)) == 1 for v in q.vertices):
            continue
        s, t = w.source, w.target
        assert not (len(q.in_arrows(s)) == 1 and len(q.out_arrows(s)) == 1) or w.is_cycle
        assert not (len(q.in_arrows(t)) == 1 and len(q.out_arrows(t)) == 1) or w.is_cycle


def test_edges_follow_definition(fixture_algebra):
    A = fixture_algebra
    g = ramifications_graph(A)
    rels = relation_words(A)
    expected = set()
    for w in g.vertices:
        for v in g.vertices:
            if w != v and w.target == v.source and not naive_zero((w.arrows[-1], v.arrows[0]), rels):
                expected.add((w, v))
    assert set(g.edges) == expected


def test_tailed_triangle_graph():
    g = ramifications_graph(load("tailed_triangle"))
    assert edge_names(g.edges) == {("a", "b.c"), ("b.c", "a"), ("b.c", "d.e")}
    parts = [{str(w) for w in c.vertices} for c in g.components]
    assert parts == [{"a", "b.c", "d.e"}, {"f"}]


def test_two_cycle_tail_graph():
    g = ramifications_graph(load("two_cycle_tail"))
    assert edge_names(g.edges) == {("b.a", "c")}
    assert len(g.components) == 1


def test_weak_components_examples():
    assert len(ramifications_graph(load("tailed_triangle")).components) == 2
    parts = [{str(w) for w in c.vertices} for c in ramifications_graph(load("crossed_two_cycle")).components]
    assert sorted(map(sorted, parts)) == [["a1", "b1"], ["a2", "b2"]]
    single = MonomialAlgebra(Quiver(["1", "2"], [("x", "1", "2")]))
    assert len(ramifications_graph(single).components) == 1
    assert len(weak_components([1, 2, 3], [(1, 2)])) == 2


def test_induced_algebras_tailed_triangle():
    A = load("tailed_triangle")
    g = ramifications_graph(A)
    big = induced_component_algebra(g.component_of("a"), A)
    small = induced_component_algebra(g.component_of("f"), A)
    assert set(big.quiver.arrow_ids) == {"a", "b", "c", "d", "e"}
    assert {str(r) for r in big.relations} == {"c.a.b.c.a", "d.e"}
    assert {str(m) for m in big.maximal} == {"a.b.c.a.b.c.d", "e"}
    assert small.quiver.arrow_ids == ("f",) and small.relations == ()
    assert {str(m) for m in small.maximal} == {"f"}


def test_induced_algebra_four_cycle():
    A = load("four_cycle_entry")
    part = induced_component_algebra(ramifications_graph(A).component_of("a1"), A)
    assert set(part.quiver.arrow_ids) == {"a1", "a2", "a3", "a4"}
    assert {str(r) for r in part.relations} == {"a4.a1.a2.a3", "a2.a3.a4.a1"}


def test_decomposition_counts():
    d = decompose_maximal_paths(load("tailed_triangle"))
    assert len(d.maximal) == 3
    assert sorted(len(p.maximal) for p in d.components) == [1, 2]
    d5 = decompose_maximal_paths(load("crossed_two_cycle"))
    assert len(d5.maximal) == sum(len(p.maximal) for p in d5.components) == 2
    single = MonomialAlgebra(Quiver(["1", "2"], [("x", "1", "2")]))
    assert len(decompose_maximal_paths(single).maximal) == 1


def test_decomposition_matches_oracle(fixture_algebra):
    A = fixture_algebra
    d = decompose_maximal_paths(A)
    images = sorted(m.arrows for part in d.components for m in part.maximal)
    assert images == naive_maximal(A)


def test_unilateral_connectivity_examples():
    for c in ramifications_graph(load("tailed_triangle")).components:
        assert is_unilaterally_connected(c).holds
    (comp,) = ramifications_graph(load("two_cycle_tail")).components
    assert is_unilaterally_connected(comp).holds
    assert not is_ump(load("two_cycle_tail")).holds


def test_unilateral_connectivity_witness():
    q = Quiver(["1", "2", "3", "4"], [("x", "1", "2"), ("y", "3", "2"), ("z", "2", "4")])
    A = MonomialAlgebra(q)
    (comp,) = ramifications_graph(A).components
    v = is_unilaterally_connected(comp)
    assert not v.holds
    a, b = v.witness
    assert {str(a), str(b)} == {"x", "y"}


@pytest.mark.parametrize("tag", ["tailed_triangle", "three_cycle", "bridged_triangles_long", "bridged_triangles_short"])
def test_ump_fixtures_have_unilateral_components(tag):
    A = load(tag)
    assert is_ump(A).holds
    assert all(is_unilaterally_connected(c).holds for c in ramifications_graph(A).components)


def test_component_shapes():
    (comp,) = ramifications_graph(load("triangle_exit")).components
    shape = component_shape(comp)
    assert shape.kind == "nakayama_path"
    assert {str(w): f for w, f in shape.cycle_flags.items()} == {"a.b.c": True, "d": False}
    for c in ramifications_graph(load("crossed_two_cycle")).components:
        assert component_shape(c).kind == "nakayama_path"
    (comp,) = ramifications_graph(load("two_cycle_tail")).components
    assert component_shape(comp).kind == "nakayama_path"
    shapes = [component_shape(c).kind for c in ramifications_graph(load("tailed_triangle")).components]
    assert shapes == ["other", "nakayama_path"]


def test_nakayama_cycle_shape():
    q = Quiver(["1", "2", "3", "4"], [("x", "1", "2"), ("y", "2", "1"), ("u", "1", "3"), ("w", "4", "2")])
    A = MonomialAlgebra(q, [("w", "y"), ("y", "u"), ("x", "y", "x")])
    g = ramifications_graph(A)
    assert edge_names(g.edges) == {("x", "y"), ("y", "x")}
    kinds = {tuple(str(w) for w in c.vertices): component_shape(c).kind for c in g.components}
    assert kinds == {("u",): "nakayama_path", ("w",): "nakayama_path", ("x", "y"): "nakayama_cycle"}


@pytest.mark.parametrize("seed", range(60))
def test_ump_iff_components_ump_on_random_instances(seed):
    A = random_algebra(seed)
    g = ramifications_graph(A)
    parts = [is_ump(induced_component_algebra(c, A).algebra).holds for c in g.components]
    assert is_ump(A).holds == all(parts)
