import pytest

from patterncount.errors import BudgetExceeded
from patterncount.graphs import SimpleGraph, complete_graph, cycle_graph, path_graph
from patterncount.patterns import catalog
from patterncount.ramsey import all_two_class_patterns, class_graph, ramsey_le, two_class_ramsey_hypothesis


def test_triangle_ramsey_number():
    assert not ramsey_le(complete_graph(3), 5)
    assert ramsey_le(complete_graph(3), 6)


def test_single_edge():
    assert ramsey_le(complete_graph(2), 2)
    assert ramsey_le(complete_graph(2), 3)


def test_small_known_values():
    # R(P3, P3) = 3, R(C4, C4) = 6, R(P4, P4) = 5
    assert not ramsey_le(path_graph(3), 2)
    assert ramsey_le(path_graph(3), 3)
    assert not ramsey_le(cycle_graph(4), 5)
    assert ramsey_le(cycle_graph(4), 6)
    assert not ramsey_le(path_graph(4), 4)
    assert ramsey_le(path_graph(4), 5)


def test_isolated_vertices_ignored():
    j = SimpleGraph.from_edges(5, [(0, 1)])
    assert ramsey_le(j, 2)


def test_errors():
    with pytest.raises(ValueError):
        ramsey_le(SimpleGraph.from_edges(3, []), 4)
    with pytest.raises(BudgetExceeded):
        ramsey_le(complete_graph(3), 7)


def test_two_class_patterns():
    assert len(all_two_class_patterns(3)) == 1
    assert len(all_two_class_patterns(4)) == 5
    assert two_class_ramsey_hypothesis(catalog("T0"))
    assert two_class_ramsey_hypothesis(catalog("P1"))
    assert two_class_ramsey_hypothesis(catalog("P2"))
    assert not two_class_ramsey_hypothesis(catalog("R0"))
    assert class_graph(catalog("T0"), 1).num_edges == 1
