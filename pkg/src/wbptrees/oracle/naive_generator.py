# -----------------------------------------------------------
# naive_generator.py
# Description: second, unrelated way to list the trees of a small unlabeled passport:
#   every labeled tree on n vertices (Pruefer sequences), both 2-colorings, every edge-weight composition and
#   every rotation system, merged by canonical code.
# -----------------------------------------------------------
from collections import Counter
from itertools import combinations, permutations, product

import networkx as nx
from networkx.algorithms import bipartite

from src.wbptrees.exceptions.PassportExceptions import PassportValueError
from src.wbptrees.factory.tree_factory import TreeFactory
from src.wbptrees.oracle.canonical import CanonicalCode, canonical_code
from src.wbptrees.oracle.generator import check_enumerable
from src.wbptrees.oracle.wbp_tree import Edge, Vertex, WBPTree
from src.wbptrees.passport.passport import Color, Passport, size, strip_labels

NAIVE_MAX_EDGES = 5


def _compositions(total: int, parts: int):
    """
    Every tuple of parts positive integers adding up to total.
    """
    for cuts in combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def _cyclic_orders(items: list[int]):
    if len(items) <= 1:
        yield tuple(items)
        return
    first, rest = items[0], items[1:]
    for order in permutations(rest):
        yield (first,) + order


def enumerate_trees_naive(passport: Passport) -> list[WBPTree]:
    """
    :raise OracleBoundError: above five edges
    :raise PassportValueError: on labeled passports
    """
    check_enumerable(passport, NAIVE_MAX_EDGES + 1)
    if strip_labels(passport) != passport:
        raise PassportValueError("the naive generator takes unlabeled passports")
    points = size(passport)
    black_target = Counter(entry.weight for entry in passport.black)
    white_target = Counter(entry.weight for entry in passport.white)
    total = passport.black_weight

    found: dict[CanonicalCode, WBPTree] = {}
    for sequence in product(range(points), repeat=points - 2):
        graph = nx.from_prufer_sequence(list(sequence))
        pairs = sorted(tuple(sorted(pair)) for pair in graph.edges())
        coloring = bipartite.color(graph)
        for flip in (0, 1):
            colors = [Color.BLACK if coloring[node] == flip else Color.WHITE for node in range(points)]
            if colors.count(Color.BLACK) != len(passport.black):
                continue
            for weights in _compositions(total, len(pairs)):
                vertex_weights = [0] * points
                for (u, v), weight in zip(pairs, weights):
                    vertex_weights[u] += weight
                    vertex_weights[v] += weight
                blacks = Counter(w for node, w in enumerate(vertex_weights) if colors[node] is Color.BLACK)
                whites = Counter(w for node, w in enumerate(vertex_weights) if colors[node] is Color.WHITE)
                if blacks != black_target or whites != white_target:
                    continue
                vertices = [Vertex(colors[node], vertex_weights[node]) for node in range(points)]
                edges = [Edge(u, v, weight) if colors[u] is Color.BLACK else Edge(v, u, weight)
                         for (u, v), weight in zip(pairs, weights)]
                incident = [[index for index, pair in enumerate(pairs) if node in pair] for node in range(points)]
                for rotation in product(*(_cyclic_orders(order) for order in incident)):
                    tree = TreeFactory.create_from_edges(vertices, edges, rotation)
                    found.setdefault(canonical_code(tree), tree)
    return [found[code] for code in sorted(found)]
