# -----------------------------------------------------------
# canonical.py
# Description: canonical code of a plane tree from the minimal rotation of its boundary walk, and its symmetry order.
# -----------------------------------------------------------
from dataclasses import dataclass
from typing import Sequence

from src.wbptrees.exceptions.OracleExceptions import SymmetryError
from src.wbptrees.oracle.wbp_tree import Dart, WBPTree
from src.wbptrees.passport.labels import label_sort_key
from src.wbptrees.passport.passport import Color

Symbol = tuple


@dataclass(frozen=True, order=True)
class CanonicalCode:
    code: tuple[Symbol, ...]
    period: int

    @property
    def aut_order(self) -> int:
        return len(self.code) // self.period


@dataclass(frozen=True)
class WalkTemplate:
    """
    The boundary walk of a tree with the label part of every symbol left out,
    so the same shape can be encoded under many labelings.
    """
    sources: tuple[int, ...]
    symbols: tuple[Symbol, ...]


def walk_template(tree: WBPTree) -> WalkTemplate:
    walk = tree.boundary_walk()
    index = {dart: position for position, dart in enumerate(walk)}
    length = len(walk)
    sources = []
    symbols = []
    for position, dart in enumerate(walk):
        edge = tree.edges[dart.edge]
        twin = Dart(edge.other(dart.source), dart.edge)
        vertex = tree.vertices[dart.source]
        sources.append(dart.source)
        symbols.append((0 if vertex.color is Color.BLACK else 1, vertex.weight, edge.weight,
                        (index[twin] - position) % length))
    return WalkTemplate(tuple(sources), tuple(symbols))


def minimal_rotation(sequence: Sequence) -> tuple:
    smallest = min(sequence)
    starts = [position for position, symbol in enumerate(sequence) if symbol == smallest]
    return min(tuple(sequence[start:]) + tuple(sequence[:start]) for start in starts)


def period_of(sequence: Sequence) -> int:
    """
    Smallest shift leaving the cyclic sequence unchanged.
    """
    length = len(sequence)
    for shift in range(1, length + 1):
        if length % shift == 0 and all(sequence[i] == sequence[(i + shift) % length] for i in range(length)):
            return shift
    return length


def _check_rotation(sources: Sequence[int], period: int, vertex_keys: Sequence) -> None:
    """
    The shift by period must move whole vertices: darts leaving one vertex go to darts leaving one vertex.
    :raise SymmetryError: otherwise
    """
    images: dict[int, int] = {}
    length = len(sources)
    for position, source in enumerate(sources):
        image = sources[(position + period) % length]
        if images.setdefault(source, image) != image or vertex_keys[source] != vertex_keys[image]:
            raise SymmetryError(f"the shift by {period} of the boundary walk is not a rotation of the tree")
    if len(set(images.values())) != len(images):
        raise SymmetryError(f"the shift by {period} of the boundary walk does not permute the vertices")


def encode(template: WalkTemplate, vertex_keys: Sequence) -> CanonicalCode:
    """
    :param vertex_keys: sort key of the label of every vertex
    """
    sequence = [symbols + (vertex_keys[source],) for source, symbols in zip(template.sources, template.symbols)]
    period = period_of(sequence)
    if period < len(sequence):
        _check_rotation(template.sources, period, vertex_keys)
    return CanonicalCode(minimal_rotation(sequence), period)


def vertex_label_keys(tree: WBPTree) -> list[tuple]:
    return [label_sort_key(vertex.label) for vertex in tree.vertices]


def canonical_code(tree: WBPTree) -> CanonicalCode:
    """
    Two trees get the same code iff an orientation-preserving map of the plane carries one onto the other,
    respecting colors, weights and labels. Mirror images are not identified.
    """
    return encode(walk_template(tree), vertex_label_keys(tree))


def aut_order(tree: WBPTree) -> int:
    return canonical_code(tree).aut_order
