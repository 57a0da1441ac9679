# grammar.py
#
# This file is part of rieszstat: exact verification of statistical order
# convergence of nets in Riesz spaces.
#
#    Copyright (c) 2024 and later, the rieszstat developers
#    All rights reserved.
#
#    This source code is licensed under the BSD-style license found in the
#    LICENSE file in the root directory of this source tree.
############################################################################
"""
Textual grammars for set expressions, Riesz space elements and tail rules. Every
`to_text` rendering in the package parses back through these grammars.

Set expressions::

    ap(a,d)  fin{1,5,9}  fin{(1,2),(3,4)}  pred:squares  listed{a1,a2}
    colisted{a1}  c(S)  u(S,T,...)  i(S,T,...)

Elements: `3/4` (rationals), `(1,-2/3,0)` (vector(n)), `{1: 1, 5: -2/3}` (finsupp).

Tails::

    const(E)  harmonic(E)  geometric(E, r)  sum(T, ...)  spike(S,E,T)
    masked(S,T)  switch(S,T1,T2)  units(a,d,c)
"""

import functools

from fractions import Fraction
from typing import Any, Callable

import pyparsing

from pyparsing import (
    Forward,
    Group,
    Keyword,
    Literal,
    ParserElement,
    Regex,
    Suppress,
    Word,
    alphanums,
    delimited_list,
)

from rieszstat.core.exceptions import NetSpecError
from rieszstat.core.lattice import RieszElement, RieszSpace
from rieszstat.core.set_expr import (
    ArithProg,
    CoListed,
    Complement,
    FiniteList,
    Intersection,
    Listed,
    PredicateSampled,
    SetExpr,
    Union,
)
from rieszstat.core.tail_rules import (
    ClosedTail,
    EventuallyConstant,
    GeometricScale,
    HarmonicScale,
    InterleavedUnits,
    Masked,
    SpikeOn,
    Switch,
    TailRule,
    linear_tail,
)

ParserElement.enable_packrat()

LPAR, RPAR, LBRACE, RBRACE, COMMA, COLON = map(Suppress, "(){},:")


def _action(fn: Callable[[Any], Any]) -> Callable:
    """Parse action turning construction errors into located parse errors."""

    def action(text: str, loc: int, tokens: pyparsing.ParseResults) -> Any:
        try:
            return fn(tokens)
        except (ValueError, KeyError, ZeroDivisionError) as error:
            raise pyparsing.ParseFatalException(text, loc, str(error))

    return action


def _call(name: str, *args: ParserElement) -> ParserElement:
    """name(arg, arg, ...)"""
    expr = Suppress(Keyword(name)) + LPAR + args[0]
    for arg in args[1:]:
        expr = expr + COMMA + arg
    return expr + RPAR


NATURAL = Regex(r"\d+").set_parse_action(lambda t: int(t[0]))
RATIONAL = Regex(r"[+-]?\d+(/\d+)?").set_parse_action(_action(lambda t: Fraction(t[0])))
NAME = Word(alphanums + "_")


@functools.lru_cache(maxsize=None)
def set_grammar() -> ParserElement:
    set_expr = Forward()
    pair = (LPAR + NATURAL + COMMA + NATURAL + RPAR).set_parse_action(
        lambda t: (t[0], t[1])
    )
    index = pair | NATURAL

    def folded(kind: type) -> Callable:
        return _action(lambda t: functools.reduce(kind, list(t[0])))

    finite = (
        Suppress(Keyword("fin")) + LBRACE + Group(pyparsing.Opt(delimited_list(index))) + RBRACE
    ).set_parse_action(lambda t: FiniteList(tuple(t[0])))
    progression = _call("ap", NATURAL, NATURAL).set_parse_action(
        _action(lambda t: ArithProg(t[0], t[1]))
    )
    predicate = (Suppress(Literal("pred:")) + NAME).set_parse_action(
        _action(lambda t: PredicateSampled(t[0]))
    )
    atoms = LBRACE + Group(pyparsing.Opt(delimited_list(NAME))) + RBRACE
    listed = (Suppress(Keyword("listed")) + atoms).set_parse_action(
        lambda t: Listed(tuple(t[0]))
    )
    colisted = (Suppress(Keyword("colisted")) + atoms).set_parse_action(
        lambda t: CoListed(tuple(t[0]))
    )
    complement = (
        Suppress(Keyword("c") | Keyword("complement")) + LPAR + set_expr + RPAR
    ).set_parse_action(lambda t: Complement(t[0]))
    members = LPAR + Group(delimited_list(set_expr, min=2)) + RPAR
    union = (Suppress(Keyword("u") | Keyword("union")) + members).set_parse_action(
        folded(Union)
    )
    intersection = (
        Suppress(Keyword("i") | Keyword("intersection")) + members
    ).set_parse_action(folded(Intersection))
    set_expr <<= (
        finite | progression | predicate | listed | colisted | complement | union | intersection
    )
    return set_expr


@functools.lru_cache(maxsize=None)
def element_grammar(space: RieszSpace) -> ParserElement:
    vector = (LPAR + Group(delimited_list(RATIONAL)) + RPAR).set_parse_action(
        _action(lambda t: space.element(list(t[0])))
    )
    entry = Group(NATURAL + COLON + RATIONAL)
    sparse = (LBRACE + Group(pyparsing.Opt(delimited_list(entry))) + RBRACE).set_parse_action(
        _action(lambda t: space.element({int(k): v for k, v in t[0]}))
    )
    scalar = RATIONAL.copy().add_parse_action(_action(lambda t: space.element(t[0])))
    return vector | sparse | scalar


def _sum(tails: list) -> ClosedTail:
    if not all(isinstance(tail, ClosedTail) for tail in tails):
        raise ValueError("sum(...) accepts closed tails only")
    return linear_tail(*tails)


@functools.lru_cache(maxsize=None)
def tail_grammar(space: RieszSpace) -> ParserElement:
    tail = Forward()
    element = element_grammar(space)
    set_expr = set_grammar()
    const = _call("const", element).set_parse_action(
        _action(lambda t: EventuallyConstant(t[0]))
    )
    harmonic = _call("harmonic", element).set_parse_action(
        _action(lambda t: HarmonicScale(t[0]))
    )
    geometric = _call("geometric", element, RATIONAL).set_parse_action(
        _action(lambda t: GeometricScale(t[0], t[1]))
    )
    summed = (
        Suppress(Keyword("sum")) + LPAR + Group(delimited_list(tail)) + RPAR
    ).set_parse_action(_action(lambda t: _sum(list(t[0]))))
    spike = _call("spike", set_expr, element, tail).set_parse_action(
        _action(lambda t: SpikeOn(t[0], t[1], t[2]))
    )
    masked = _call("masked", set_expr, tail).set_parse_action(
        _action(lambda t: Masked(t[0], t[1], space))
    )
    switch = _call("switch", set_expr, tail, tail).set_parse_action(
        _action(lambda t: Switch(t[0], t[1], t[2]))
    )
    units = _call("units", NATURAL, NATURAL, RATIONAL).set_parse_action(
        _action(lambda t: InterleavedUnits(t[0], t[1], t[2], space))
    )
    tail <<= const | harmonic | geometric | summed | spike | masked | switch | units
    return tail


def _parse(grammar: ParserElement, text: str, what: str) -> Any:
    try:
        return grammar.parse_string(text, parse_all=True)[0]
    except pyparsing.ParseBaseException as error:
        raise NetSpecError(
            "cannot parse {} '{}': {}".format(what, text, error.msg),
            error.lineno,
            error.col,
        ) from None


def parse_set_expr(text: str) -> SetExpr:
    """
    Set expression from its text.

    Raises
    ------
    NetSpecError
        with the line and column of the first unparseable position
    """
    return _parse(set_grammar(), text, "set expression")


def parse_element(text: str, space: RieszSpace) -> RieszElement:
    return _parse(element_grammar(space), str(text), "element of {}".format(space.to_text()))


def parse_tail(text: str, space: RieszSpace) -> TailRule:
    return _parse(tail_grammar(space), text, "tail rule")


def parse_space(text: str) -> RieszSpace:
    try:
        return RieszSpace.from_text(text)
    except ValueError as error:
        raise NetSpecError("unknown space '{}': {}".format(text, error)) from None
