# -----------------------------------------------------------
# export.py
# Description: JSON documents and Graphviz DOT sources for trees and enumerations.
# -----------------------------------------------------------
import json

import graphviz

from src.wbptrees.factory.tree_factory import TreeFactory
from src.wbptrees.oracle.canonical import canonical_code
from src.wbptrees.oracle.generator import census_of
from src.wbptrees.oracle.wbp_tree import WBPTree
from src.wbptrees.passport.labels import DEFAULT_LABEL, format_label
from src.wbptrees.passport.notation import print_passport
from src.wbptrees.passport.passport import Color, Passport


def tree_to_dict(tree: WBPTree) -> dict:
    code = canonical_code(tree)
    document = {"passport": print_passport(tree.passport())}
    document.update(TreeFactory.to_dictionary(tree))
    document["canonical_code"] = [list(symbol) for symbol in code.code]
    document["aut_order"] = code.aut_order
    return document


def enumeration_to_dict(passport: Passport, trees: list[WBPTree]) -> dict:
    census = census_of(trees)
    return {
        "passport": print_passport(passport),
        "count": len(trees),
        "by_symmetry": {str(order): count for order, count in census.counts.items()},
        "trees": [tree_to_dict(tree) for tree in trees],
    }


def enumeration_to_json(passport: Passport, trees: list[WBPTree], indent: int | None = 4) -> str:
    return json.dumps(enumeration_to_dict(passport, trees), indent=indent)


def _vertex_caption(tree: WBPTree, vertex: int) -> str:
    data = tree.vertices[vertex]
    if data.label == DEFAULT_LABEL:
        return str(data.weight)
    return f"{data.weight}_{format_label(data.label)}"


def _draw(graph: graphviz.Graph, tree: WBPTree, prefix: str) -> None:
    for vertex, data in enumerate(tree.vertices):
        style = {"style": "filled", "fillcolor": "black", "fontcolor": "white"} if data.color is Color.BLACK \
            else {"style": "solid", "fillcolor": "white", "fontcolor": "black"}
        graph.node(f"{prefix}v{vertex}", _vertex_caption(tree, vertex), shape="circle", **style)
    # boundary walk order, dot keeps the plane order where it can
    seen = set()
    for dart in tree.boundary_walk():
        if dart.edge in seen:
            continue
        seen.add(dart.edge)
        edge = tree.edges[dart.edge]
        graph.edge(f"{prefix}v{edge.black}", f"{prefix}v{edge.white}", label=f" {edge.weight}")


def tree_to_dot(tree: WBPTree, name: str = "tree") -> str:
    """
    DOT source of one tree: black vertices filled, white vertices hollow, edges labeled with their weight.
    """
    graph = graphviz.Graph(name=name)
    graph.attr(label=f"{print_passport(tree.passport())}, symmetry {canonical_code(tree).aut_order}")
    _draw(graph, tree, "")
    return graph.source


def enumeration_to_dot(passport: Passport, trees: list[WBPTree]) -> str:
    """
    DOT source with one cluster per tree.
    """
    graph = graphviz.Graph(name="enumeration")
    graph.attr(label=f"{print_passport(passport)}: {len(trees)} trees")
    for number, tree in enumerate(trees):
        with graph.subgraph(name=f"cluster_{number}") as cluster:
            cluster.attr(label=f"tree {number + 1}, symmetry {canonical_code(tree).aut_order}")
            _draw(cluster, tree, f"t{number}_")
    return graph.source
