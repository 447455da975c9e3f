"""
Тестирование графов сетей.
"""

import pytest

from errors import InvalidInput
from geodesic_nets.graph import GraphStructure


def theta_graph(q):
    edges = []
    for chain in range(3):
        path = [0] + [2 + chain * q + index for index in range(q)] + [1]
        edges.extend(zip(path[:-1], path[1:]))
    return GraphStructure(edges)


def cycle_graph(size, weight=1):
    return GraphStructure([(index, (index + 1) % size) for index in range(size)], [weight] * size)


class TestGraphStructure:
    """
    Тестирование графа G = (V, E, ω).
    """

    def test_theta_chains(self):
        graph = theta_graph(2)
        chains = graph.chains()
        assert graph.anchors() == [0, 1]
        assert len(chains) == 3
        assert all(not chain.closed and len(chain.interior) == 2 for chain in chains)
        assert {chain.vertices[0] for chain in chains} == {0}
        assert {chain.vertices[-1] for chain in chains} == {1}

    def test_cycle(self):
        graph = cycle_graph(5)
        (chain,) = graph.chains()
        assert chain.closed
        assert sorted(chain.vertices) == list(range(5))
        assert len(chain.edges()) == 5

    def test_subdivision(self):
        assert theta_graph(3).is_subdivided(3)
        assert not theta_graph(3).is_subdivided(2)
        assert cycle_graph(9).is_subdivided(8)

    def test_weights(self):
        graph = cycle_graph(4, weight=2)
        assert graph.weight(3, 0) == 2
        assert graph.scaled(3).weights() == [6, 6, 6, 6]
        assert graph.degree(0) == 2
        assert graph.neighbors(0) == [1, 3]

    def test_isomorphism(self):
        relabeled = GraphStructure([(0, 2), (2, 1), (1, 3), (3, 0)])
        assert cycle_graph(4).is_isomorphic(relabeled)
        assert not cycle_graph(4).is_isomorphic(cycle_graph(4, weight=2))

    def test_serialization(self):
        graph = theta_graph(2)
        restored = GraphStructure.from_dict(graph.to_dict())
        assert restored.edges == graph.edges
        assert restored.weights() == graph.weights()

    @pytest.mark.parametrize(
        "edges, weights",
        [
            ([(0, 0), (0, 1)], None),
            ([(0, 1), (1, 0)], None),
            ([(0, 1), (1, 2)], [1, 0]),
            ([(0, 2), (2, 3)], None),
            ([], None),
        ],
    )
    def test_invalid(self, edges, weights):
        with pytest.raises(InvalidInput):
            GraphStructure(edges, weights)
