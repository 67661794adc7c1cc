from dataclasses import dataclass
from enum import Enum
from typing import Union


class Star(Enum):
    """
    The symmetric-center label of a divided passport. There is a single value, STAR.
    """
    STAR = "*"

    def __repr__(self):
        return "STAR"


STAR = Star.STAR


@dataclass(frozen=True)
class FilledLabel:
    """
    Double label (base, index) given by filling to the index-th copy of a repeated labeled weight.
    """
    base: "Label"
    index: int


Label = Union[int, Star, FilledLabel]

DEFAULT_LABEL: int = 0


def label_sort_key(label: Label) -> tuple:
    """
    Total order on labels: integers, then double labels, then the star.
    """
    if isinstance(label, Star):
        return 2,
    if isinstance(label, FilledLabel):
        return (1,) + label_sort_key(label.base) + (label.index,)
    return 0, label


def format_label(label: Label) -> str:
    if isinstance(label, Star):
        return label.value
    if isinstance(label, FilledLabel):
        return f"{format_label(label.base)}.{label.index}"
    return str(label)


def parse_label(text: str) -> Label:
    """
    :param text: '*', an integer, or dotted integers for double labels ('0.2' is FilledLabel(0, 2)).
    """
    if text == STAR.value:
        return STAR
    parts = text.split(".")
    label: Label = int(parts[0])
    for index in parts[1:]:
        label = FilledLabel(label, int(index))
    return label


def base_label(label: Label) -> Label:
    """
    Forgets the second element of a double label. Other labels are returned as is.
    """
    if isinstance(label, FilledLabel):
        return label.base
    return label
