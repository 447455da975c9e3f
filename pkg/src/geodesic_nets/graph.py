"""
Взвешенные графы сетей и их разбиение на цепочки.
"""

from typing import Any, Iterable, NamedTuple, Optional

import networkx as nx

from errors import InvalidInput


class Chain(NamedTuple):
    """
    Максимальная цепочка вершин степени 2.

    Для незамкнутой цепочки ``vertices`` начинается и заканчивается опорными
    вершинами (степень ≠ 2), для цикла содержит все вершины цикла без повторов.
    """

    vertices: list[int]
    closed: bool

    @property
    def interior(self) -> list[int]:
        return self.vertices if self.closed else self.vertices[1:-1]

    def edges(self) -> list[tuple[int, int]]:
        path = self.vertices + self.vertices[:1] if self.closed else self.vertices
        return list(zip(path[:-1], path[1:]))


class GraphStructure:
    """
    Конечный простой неориентированный граф G = (V, E, ω) с натуральными весами ребер.
    """

    def __init__(self, edges: Iterable[tuple[int, int]], weights: Optional[Iterable[int]] = None) -> None:
        """
        Конструктор.

        :param edges: Ребра (пары вершин)
        :param weights: Веса ребер в том же порядке (по умолчанию 1)
        """

        edges = [(int(u), int(v)) for u, v in edges]
        weights = [1] * len(edges) if weights is None else [int(item) for item in weights]
        if not edges:
            raise InvalidInput("graph must have at least one edge")
        if len(weights) != len(edges):
            raise InvalidInput("one weight per edge is required", {"edges": len(edges), "weights": len(weights)})

        graph = nx.Graph()
        for (u, v), weight in zip(edges, weights):
            if u == v:
                raise InvalidInput("graph must not contain loops", {"vertex": u})
            if graph.has_edge(u, v):
                raise InvalidInput("graph must not contain multiple edges", {"edge": (u, v)})
            if weight <= 0:
                raise InvalidInput("edge weights must be positive integers", {"edge": (u, v), "weight": weight})
            graph.add_edge(u, v, weight=weight)

        if sorted(graph.nodes) != list(range(graph.number_of_nodes())):
            raise InvalidInput("vertices must be numbered 0..n-1", {"vertices": sorted(graph.nodes)})
        self.nx_graph = graph

    @property
    def vertices(self) -> list[int]:
        return list(range(self.nx_graph.number_of_nodes()))

    @property
    def edges(self) -> list[tuple[int, int]]:
        """
        Ребра (u, v) с u < v в лексикографическом порядке.

        :return:
        """

        return sorted((min(u, v), max(u, v)) for u, v in self.nx_graph.edges)

    def weight(self, u: int, v: int) -> int:
        return int(self.nx_graph.edges[u, v]["weight"])

    def weights(self) -> list[int]:
        return [self.weight(u, v) for u, v in self.edges]

    def neighbors(self, u: int) -> list[int]:
        return sorted(self.nx_graph.neighbors(u))

    def degree(self, u: int) -> int:
        return int(self.nx_graph.degree[u])

    def anchors(self) -> list[int]:
        """
        Вершины степени ≠ 2.

        :return:
        """

        return [u for u in self.vertices if self.degree(u) != 2]

    def chains(self) -> list[Chain]:
        """
        Разбиение ребер на цепочки между опорными вершинами и циклы из вершин степени 2.

        :return:
        """

        visited: set[frozenset[int]] = set()
        chains = []
        for anchor in self.anchors():
            for neighbor in self.neighbors(anchor):
                if frozenset((anchor, neighbor)) in visited:
                    continue
                path = [anchor, neighbor]
                visited.add(frozenset(path))
                while self.degree(path[-1]) == 2:
                    following = next(item for item in self.neighbors(path[-1]) if item != path[-2])
                    visited.add(frozenset((path[-1], following)))
                    path.append(following)
                chains.append(Chain(path, False))

        for start in self.vertices:
            if all(frozenset((start, item)) in visited for item in self.neighbors(start)):
                continue
            path = [start, self.neighbors(start)[0]]
            visited.add(frozenset(path))
            while path[-1] != start:
                following = next(item for item in self.neighbors(path[-1]) if item != path[-2])
                visited.add(frozenset((path[-1], following)))
                path.append(following)
            chains.append(Chain(path[:-1], True))
        return chains

    def is_subdivided(self, q: int) -> bool:
        """
        Проверка Q-подразбиения: Q внутренних вершин в каждой цепочке, Q + 1 вершина в каждом цикле.

        :param q: Число Q
        :return:
        """

        return all(len(chain.vertices) == (q + 1 if chain.closed else q + 2) for chain in self.chains())

    def is_isomorphic(self, other: "GraphStructure") -> bool:
        return bool(
            nx.is_isomorphic(
                self.nx_graph, other.nx_graph, edge_match=lambda first, second: first["weight"] == second["weight"]
            )
        )

    def scaled(self, factor: int) -> "GraphStructure":
        return GraphStructure(self.edges, [factor * item for item in self.weights()])

    def to_dict(self) -> dict[str, Any]:
        return {
            "vertices": len(self.vertices),
            "edges": [list(edge) for edge in self.edges],
            "weights": self.weights(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "GraphStructure":
        return cls([tuple(edge) for edge in data["edges"]], data.get("weights"))  # type: ignore[misc]

    def __repr__(self) -> str:
        return f"GraphStructure(V={len(self.vertices)}, E={len(self.edges)})"
