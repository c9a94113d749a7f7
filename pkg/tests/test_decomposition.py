import random

import pytest
from hypothesis import given, settings

from isreconf import (Graph, InputError, brute_modular_width, is_module, md_tree,
                      modular_width, nd_partition, top_partition)

from helpers import (complete_graph, cycle_graph, edgeless_graph, graphs,
                     path_graph, random_graph)


def c4():
    return cycle_graph([1, 2, 3, 4])


def test_is_module_whole_and_singletons():
    g = path_graph([1, 2, 3])
    assert is_module(g, g.vertices)
    for v in g.ids:
        assert is_module(g, {v})


def test_is_module_counterexample():
    # 1 has no outside neighbor beyond the pair, 2 sees 3
    g = path_graph([1, 2, 3])
    assert not is_module(g, {1, 2})
    assert is_module(g, {1, 3})


def test_is_module_empty_errors():
    with pytest.raises(InputError):
        is_module(path_graph([1, 2]), set())


def test_md_tree_shapes():
    kn = md_tree(complete_graph(5))
    assert kn.kind == "series" and len(kn.children) == 5
    assert all(c.kind == "leaf" for c in kn.children)
    en = md_tree(edgeless_graph(5))
    assert en.kind == "parallel" and len(en.children) == 5
    p4 = md_tree(path_graph([1, 2, 3, 4]))
    assert p4.kind == "prime" and len(p4.children) == 4
    assert all(c.kind == "leaf" for c in p4.children)


def test_p4_has_no_nontrivial_module():
    g = path_graph([1, 2, 3, 4])
    ids = g.ids
    for state in range(1, 1 << 4):
        sub = {ids[i] for i in range(4) if state >> i & 1}
        if 1 < len(sub) < 4:
            assert not is_module(g, sub)


def test_top_partition_c4():
    assert top_partition(c4()) == [frozenset({1, 3}), frozenset({2, 4})]


def test_top_partition_p4_singletons():
    assert top_partition(path_graph([1, 2, 3, 4])) == [
        frozenset({1}), frozenset({2}), frozenset({3}), frozenset({4})]


def test_top_partition_k2():
    assert top_partition(complete_graph(2)) == [frozenset({1}), frozenset({2})]


def test_top_partition_needs_two_vertices():
    with pytest.raises(InputError):
        top_partition(Graph([1]))


def test_modular_width_examples():
    assert modular_width(complete_graph(5)) == 2
    assert modular_width(path_graph([1, 2, 3, 4, 5])) == 5
    assert modular_width(Graph([7])) == 1
    assert modular_width(complete_graph(2)) == 2
    assert modular_width(edgeless_graph(2)) == 2


def test_nd_partition_examples():
    kn = nd_partition(complete_graph(4))
    assert len(kn) == 1 and kn[0].kind == "clique"
    c4_classes = nd_partition(c4())
    assert [(sorted(c.members), c.kind) for c in c4_classes] == [
        ([1, 3], "independent"), ([2, 4], "independent")]
    assert len(nd_partition(path_graph([1, 2, 3, 4]))) == 4


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_modular_width_matches_brute_force(g):
    assert modular_width(g) == brute_modular_width(g)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_md_tree_structure_is_valid(g):
    tree = md_tree(g)
    assert tree.leaf_count() == g.n

    def walk(node):
        spans = [c.span for c in node.children]
        if node.kind != "leaf":
            assert frozenset().union(*spans) == node.span
            parent = g.induced_subgraph(node.span)
            for span in spans:
                assert is_module(parent, span)
            if node.kind == "prime":
                # children form the maximal modular partition: the quotient is prime
                reps = [min(s) for s in spans]
                quotient = Graph(reps, [(a, b) for i, a in enumerate(reps)
                                        for j, b in enumerate(reps) if i < j
                                        and parent.has_edge(next(iter(spans[i])), b)])
                for state in range(1, 1 << len(reps)):
                    sub = {reps[i] for i in range(len(reps)) if state >> i & 1}
                    if 1 < len(sub) < len(reps):
                        assert not is_module(quotient, sub)
        for c in node.children:
            walk(c)

    walk(tree)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_nd_classes_are_homogeneous_modules(g):
    classes = nd_partition(g)
    seen = set()
    for cl in classes:
        assert is_module(g, cl.members)
        assert not seen & cl.members
        seen |= cl.members
        sub = g.induced_subgraph(cl.members)
        size = len(cl.members)
        assert sub.m == (size * (size - 1) // 2 if cl.kind == "clique" else 0)
    assert seen == g.vertices


def test_nd_at_least_mw_on_random_graphs():
    rng = random.Random(4242)
    for _ in range(60):
        g = random_graph(rng, rng.randint(4, 12), 0.5)
        classes = nd_partition(g)
        if len(classes) >= 2:
            assert len(classes) >= modular_width(g)


def test_quotient_edge_semantics_in_prime_tree():
    # two modules substituted into an edge of P4 keep the tree prime at the top
    g = Graph([1, 2, 3, 4, 5],
              [(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (2, 3)])
    # vertices 2,3 are true twins inside a P4-shaped quotient 1-(23)-4-5
    parts = top_partition(g)
    assert frozenset({2, 3}) in parts
    assert modular_width(g) == 4
