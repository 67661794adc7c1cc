# -----------------------------------------------------------
# notation.py
# Description: reads and writes the textual passport notation, e.g. "6^10 | 10^6" or "3 1 | 2_* 2".
#   term  := WEIGHT ['_' LABEL] ['^' MULT]
#   LABEL := '*' | INT ('.' INT)*
# -----------------------------------------------------------
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby

import pyparsing as pp

from src.wbptrees.exceptions.PassportExceptions import PassportSyntaxError, PassportValueError
from src.wbptrees.passport.labels import DEFAULT_LABEL, STAR, format_label, parse_label
from src.wbptrees.passport.passport import LabeledWeight, Passport

TERM_PATTERN = r"(\d+)(?:_(\*|\d+(?:\.\d+)*))?(?:\^(\d+))?(?=\s|\||$)"
_TERM_RE = re.compile(TERM_PATTERN)


@dataclass(frozen=True)
class Term:
    weight: int
    label: str | None
    multiplicity: int
    position: int


def _make_term(s, loc, toks):
    match = _TERM_RE.match(s, loc)
    weight, label, multiplicity = match.groups()
    return Term(int(weight), label, int(multiplicity) if multiplicity is not None else 1, loc)


@lru_cache(maxsize=1)
def make_grammar() -> pp.ParserElement:
    term = pp.Regex(TERM_PATTERN).set_name("labeled weight")
    term.set_parse_action(_make_term)
    side = pp.Group(pp.ZeroOrMore(term))
    separator = pp.Suppress(pp.Literal("|"))
    return side("black") + separator + side("white")


def _side_weights(terms) -> list[LabeledWeight]:
    side = []
    for term in terms:
        if term.weight == 0:
            raise PassportValueError(f"zero weight at char {term.position}")
        if term.multiplicity == 0:
            raise PassportValueError(f"zero multiplicity at char {term.position}")
        label = parse_label(term.label) if term.label is not None else DEFAULT_LABEL
        if label is STAR and term.multiplicity > 1:
            raise PassportValueError(f"duplicated star at char {term.position}")
        side.extend([LabeledWeight(term.weight, label)] * term.multiplicity)
    return side


def parse_passport(text: str) -> Passport:
    """
    :param text: the passport notation, black side, '|', white side. Either side may be empty.
    :return: the canonical passport
    :raise PassportSyntaxError: on malformed text, with the offending position
    :raise PassportValueError: on zero weights or multiplicities, or a repeated star
    """
    try:
        result = make_grammar().parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise PassportSyntaxError(f"invalid passport {text!r}: {e.msg}", e.loc, e.col) from e
    black = _side_weights(list(result["black"]))
    white = _side_weights(list(result["white"]))
    if sum(1 for entry in black + white if entry.label is STAR) > 1:
        raise PassportValueError(f"duplicated star in {text!r}")
    return Passport(tuple(black), tuple(white))


def format_term(labeled_weight: LabeledWeight, multiplicity: int) -> str:
    term = str(labeled_weight.weight)
    if labeled_weight.label != DEFAULT_LABEL:
        term += "_" + format_label(labeled_weight.label)
    if multiplicity > 1:
        term += f"^{multiplicity}"
    return term


def _format_side(side) -> str:
    return " ".join(format_term(labeled_weight, len(list(group))) for labeled_weight, group in groupby(side))


def print_passport(passport: Passport) -> str:
    """
    Canonical text of a passport: descending order, repeated entries grouped, label 0 and exponent 1 omitted.
    """
    black = _format_side(passport.black)
    white = _format_side(passport.white)
    return f"{black} | {white}".strip()
