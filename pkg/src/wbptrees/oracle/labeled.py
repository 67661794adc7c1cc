# -----------------------------------------------------------
# labeled.py
# Description: counts of labeled trees, by labeling every unlabeled shape in all ways and merging equal results,
#   or from the rotation group of each shape when there are too many labelings.
# -----------------------------------------------------------
from collections import defaultdict
from itertools import permutations, product
from typing import Hashable

from src.wbptrees.exceptions.PassportExceptions import NotSimpleError
from src.wbptrees.infrastructure.config import Infos
from src.wbptrees.oracle.canonical import CanonicalCode, canonical_code, encode, walk_template
from src.wbptrees.oracle.generator import SymmetryCensus, check_enumerable, enumerate_trees
from src.wbptrees.oracle.wbp_tree import WBPTree
from src.wbptrees.passport.labels import Label, label_sort_key
from src.wbptrees.passport.notation import print_passport
from src.wbptrees.passport.passport import Passport, fill, forget_fill, is_simple, p_factor, strip_labels


def distinct_labelings(shape: WBPTree, group_of_vertex: list[Hashable],
                       labels_of_group: dict[Hashable, list[Label]]) -> set[CanonicalCode]:
    """
    Codes of every tree obtained by handing out, inside each group, its labels to its vertices in every order.
    """
    template = walk_template(shape)
    members = defaultdict(list)
    for vertex, group in enumerate(group_of_vertex):
        members[group].append(vertex)
    groups = list(members)
    codes = set()
    for assignment in product(*(permutations(labels_of_group[group]) for group in groups)):
        keys = [None] * len(shape.vertices)
        for group, labels in zip(groups, assignment):
            for vertex, label in zip(members[group], labels):
                keys[vertex] = label_sort_key(label)
        codes.add(encode(template, keys))
    return codes


def count_labeled_direct(passport: Passport, max_points: int = Infos.default_oracle_max_points) -> int:
    """
    Number of labeled trees with the simple passport, from the label-free shapes and every labeling of them.
    :raise NotSimpleError: if a labeled weight is repeated
    """
    if not is_simple(passport):
        raise NotSimpleError(f"{print_passport(passport)} repeats a labeled weight, fill it first")
    check_enumerable(passport, max_points)
    labels_of_group = defaultdict(list)
    for color, point in passport.points():
        labels_of_group[(color, point.weight)].append(point.label)
    total = 0
    for shape in enumerate_trees(strip_labels(passport), max_points):
        group_of_vertex = [(vertex.color, vertex.weight) for vertex in shape.vertices]
        total += len(distinct_labelings(shape, group_of_vertex, labels_of_group))
    return total


def labeled_census(passport: Passport, max_points: int = Infos.default_oracle_max_points,
                   max_labelings: int = Infos.default_max_labelings) -> SymmetryCensus:
    """
    Number of trees with the filled passport, counted by the symmetry order of their shape with passport.
    Up to max_labelings labelings per shape, they are built and merged one by one. Beyond, a shape with
    rotation group of order e counts p(passport) / e, the group acting freely on labelings with distinct labels.
    """
    check_enumerable(passport, max_points)
    factor = p_factor(passport)
    explicit = factor <= max_labelings
    labels_of_group = defaultdict(list)
    if explicit:
        for (color, point), original in forget_fill(fill(passport), passport).items():
            labels_of_group[(color, original)].append(point.label)
    counts = defaultdict(int)
    for shape in enumerate_trees(passport, max_points):
        order = canonical_code(shape).aut_order
        if explicit:
            group_of_vertex = [(vertex.color, vertex.labeled_weight) for vertex in shape.vertices]
            counts[order] += len(distinct_labelings(shape, group_of_vertex, labels_of_group))
        else:
            counts[order] += factor // order
    return SymmetryCensus(dict(sorted(counts.items())))
