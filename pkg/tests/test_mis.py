from hypothesis import given, settings

from isreconf import Graph, alpha, brute_alpha

from helpers import complete_graph, cycle_graph, edgeless_graph, graphs


def test_alpha_complete_and_edgeless():
    assert alpha(complete_graph(6)).size == 1
    assert alpha(edgeless_graph(6)).size == 6


def test_alpha_c5():
    # brute enumeration of C5's independent sets tops out at 2
    assert alpha(cycle_graph([1, 2, 3, 4, 5])).size == 2


def test_alpha_empty_graph():
    assert alpha(Graph([])).size == 0


def test_alpha_witness_is_deterministic():
    c4 = cycle_graph([1, 2, 3, 4])
    assert alpha(c4).witness == {1, 3}


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_alpha_matches_brute_force_and_witness_checks(g):
    result = alpha(g)
    assert result.size == brute_alpha(g)
    assert g.is_independent(result.witness)
    assert len(result.witness) == result.size
