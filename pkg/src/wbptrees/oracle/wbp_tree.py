# -----------------------------------------------------------
# wbp_tree.py
# Description: weighted bi-colored plane trees: vertices, weighted edges and the cyclic order of edges at each vertex.
# -----------------------------------------------------------
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from src.wbptrees.exceptions.OracleExceptions import InvalidTreeError
from src.wbptrees.passport.labels import DEFAULT_LABEL, Label
from src.wbptrees.passport.passport import Color, LabeledWeight, Passport


@dataclass(frozen=True)
class Vertex:
    color: Color
    weight: int
    label: Label = DEFAULT_LABEL

    @property
    def labeled_weight(self) -> LabeledWeight:
        return LabeledWeight(self.weight, self.label)


@dataclass(frozen=True)
class Edge:
    black: int
    white: int
    weight: int

    def other(self, vertex: int) -> int:
        return self.white if vertex == self.black else self.black


@dataclass(frozen=True)
class Dart:
    """
    An edge traversed from its source vertex.
    """
    source: int
    edge: int


@dataclass(frozen=True)
class WBPTree:
    """
    A bipartite tree embedded in the plane. rotation[v] lists the edges at v in counterclockwise order.
    """
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        """
        :raise InvalidTreeError: if the data is not a bicolored plane tree with compatible weights
        """
        if len(self.vertices) < 2 or len(self.edges) != len(self.vertices) - 1:
            raise InvalidTreeError(f"{len(self.vertices)} vertices and {len(self.edges)} edges do not form a tree")
        if len(self.rotation) != len(self.vertices):
            raise InvalidTreeError("every vertex needs a rotation")
        for index, edge in enumerate(self.edges):
            if not (0 <= edge.black < len(self.vertices) and 0 <= edge.white < len(self.vertices)):
                raise InvalidTreeError(f"edge {index} has an endpoint out of range")
            if self.vertices[edge.black].color is not Color.BLACK or self.vertices[edge.white].color is not Color.WHITE:
                raise InvalidTreeError(f"edge {index} does not join a black and a white vertex")
            if edge.weight < 1:
                raise InvalidTreeError(f"edge {index} has weight {edge.weight}")
        if not nx.is_tree(self.to_graph()):
            raise InvalidTreeError("the edges do not form a tree")
        for vertex, order in enumerate(self.rotation):
            incident = sorted(index for index, edge in enumerate(self.edges) if vertex in (edge.black, edge.white))
            if sorted(order) != incident:
                raise InvalidTreeError(f"rotation of vertex {vertex} does not list its edges")
            total = sum(self.edges[index].weight for index in order)
            if total != self.vertices[vertex].weight:
                raise InvalidTreeError(
                    f"vertex {vertex} has weight {self.vertices[vertex].weight} but its edges sum to {total}")

    def to_graph(self) -> nx.Graph:
        graph = nx.Graph()
        for index, vertex in enumerate(self.vertices):
            graph.add_node(index, bipartite=0 if vertex.color is Color.BLACK else 1, weight=vertex.weight)
        for index, edge in enumerate(self.edges):
            graph.add_edge(edge.black, edge.white, weight=edge.weight, index=index)
        return graph

    def passport(self) -> Passport:
        black = tuple(vertex.labeled_weight for vertex in self.vertices if vertex.color is Color.BLACK)
        white = tuple(vertex.labeled_weight for vertex in self.vertices if vertex.color is Color.WHITE)
        return Passport(black, white)

    @cached_property
    def _positions(self) -> list[dict[int, int]]:
        return [{edge: position for position, edge in enumerate(order)} for order in self.rotation]

    def next_dart(self, dart: Dart) -> Dart:
        """
        The dart following dart along the boundary of the unique face.
        """
        target = self.edges[dart.edge].other(dart.source)
        order = self.rotation[target]
        position = self._positions[target][dart.edge]
        return Dart(target, order[(position + 1) % len(order)])

    def boundary_walk(self, start: Dart | None = None) -> list[Dart]:
        """
        Every dart once, in the order the face boundary visits them.
        """
        dart = start if start is not None else Dart(self.edges[0].black, 0)
        walk = []
        for _ in range(2 * len(self.edges)):
            walk.append(dart)
            dart = self.next_dart(dart)
        if len(set(walk)) != len(walk) or walk[0] != dart:
            raise InvalidTreeError("the boundary walk does not close after visiting every dart once")
        return walk
