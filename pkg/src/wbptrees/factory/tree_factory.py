from typing import Sequence

from src.wbptrees.exceptions.OracleExceptions import InvalidTreeError
from src.wbptrees.oracle.wbp_tree import Edge, Vertex, WBPTree
from src.wbptrees.passport.labels import format_label, parse_label
from src.wbptrees.passport.passport import Color, LabeledWeight

PointKey = tuple[Color, LabeledWeight]
# (edge weight, index of the child's point key, children of the child)
Child = tuple[int, int, tuple]


class TreeFactory:
    """
    This class is responsible for creating WBPTree objects.
    A tree can be created from:
    - A rooted forest as produced by the generator, with the point keys it refers to.
    - Plain vertex, edge and rotation lists.
    - A dictionary, as written by the JSON export.
    """

    @staticmethod
    def create_from_forest(root_key: int, forest: tuple[Child, ...], keys: Sequence[PointKey]) -> WBPTree:
        """
        :param root_key: index in keys of the root's point
        :param forest: the ordered children of the root
        :param keys: the (color, labeled weight) of every point kind
        :return: the tree, the edges at every non-root vertex start with the edge to its parent
        """
        vertices: list[Vertex] = []
        edges: list[Edge] = []
        rotation: list[list[int]] = []

        def add_vertex(key: int) -> int:
            color, labeled_weight = keys[key]
            vertices.append(Vertex(color, labeled_weight.weight, labeled_weight.label))
            rotation.append([])
            return len(vertices) - 1

        root = add_vertex(root_key)
        stack = [(root, forest)]
        while stack:
            parent, children = stack.pop()
            for edge_weight, child_key, grandchildren in children:
                child = add_vertex(child_key)
                if vertices[parent].color is Color.BLACK:
                    edges.append(Edge(parent, child, edge_weight))
                else:
                    edges.append(Edge(child, parent, edge_weight))
                rotation[parent].append(len(edges) - 1)
                rotation[child].append(len(edges) - 1)
                stack.append((child, grandchildren))
        return WBPTree(tuple(vertices), tuple(edges), tuple(tuple(order) for order in rotation))

    @staticmethod
    def create_from_edges(vertices: Sequence[Vertex], edges: Sequence[Edge], rotation: Sequence[Sequence[int]]) \
            -> WBPTree:
        return WBPTree(tuple(vertices), tuple(edges), tuple(tuple(order) for order in rotation))

    @staticmethod
    def create_from_dictionary(dict_tree: dict) -> WBPTree:
        """
        Creates a WBPTree from a dictionary with the keys vertices, edges and rotation.
        :raise InvalidTreeError: if a key is missing or a value has the wrong shape
        """
        try:
            vertices = [
                Vertex(Color(vertex["color"]), int(vertex["weight"]), parse_label(str(vertex.get("label", 0))))
                for vertex in dict_tree["vertices"]
            ]
            edges = [Edge(int(edge["black"]), int(edge["white"]), int(edge["weight"])) for edge in dict_tree["edges"]]
            rotation = [[int(edge) for edge in order] for order in dict_tree["rotation"]]
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidTreeError("The dictionary must contain vertices (color, weight, label), "
                                   "edges (black, white, weight) and rotation. Here is the dictionary: \n"
                                   + str(dict_tree)) from e
        return TreeFactory.create_from_edges(vertices, edges, rotation)

    @staticmethod
    def to_dictionary(tree: WBPTree) -> dict:
        return {
            "vertices": [{"color": vertex.color.value, "weight": vertex.weight, "label": format_label(vertex.label)}
                         for vertex in tree.vertices],
            "edges": [{"black": edge.black, "white": edge.white, "weight": edge.weight} for edge in tree.edges],
            "rotation": [list(order) for order in tree.rotation],
        }
