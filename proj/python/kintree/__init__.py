"""Exact navigation of the binary tree of LR-strings and its rational labelings.

Values come back as Python ints and fractions.Fraction; continued fractions are lists
of quotients, with [0] and [] for the two boundary vertices.
"""

import json
from fractions import Fraction

from ._kintree import (
    DomainError,
    KintreeError,
    LRString,
    ParseError,
    ResourceError,
    ValidationError,
    cf_children,
    cf_level,
    cf_parents,
    cf_to_string,
    distant_parent_sequence,
    enumerate_level,
    level_strings,
    suite_names,
)
from . import _kintree

__all__ = [
    "DomainError", "KintreeError", "LRString", "ParseError", "ResourceError", "ValidationError",
    "cf_children", "cf_level", "cf_parents", "cf_to_string", "cf_value", "cf_of_rational",
    "distant_parent_sequence", "enumerate_level", "level_strings", "position", "r_value",
    "simplest_between", "simplest_between_cf_formula", "stern_brocot", "calkin_wilf",
    "stern_brocot_locate", "suite_names", "verify",
]


def _pair(x):
    x = Fraction(x)
    return (x.numerator, x.denominator)


def _fraction(p):
    # 1/0 has no Fraction; the boundary is reported as None
    num, den = p
    return None if den == 0 else Fraction(num, den)


def _lr(s):
    return LRString(s) if isinstance(s, str) else s


def r_value(s):
    """r(s) as an exact Fraction (a dyadic rational in [0, 2])."""
    return Fraction(*_lr(s)._r())


def position(s):
    """N(s): an int for words, -1 for R^-1 and Fraction(-1, 2) for L^-1."""
    num, den = _lr(s)._position()
    return num if den == 1 else Fraction(num, den)


def stern_brocot(s):
    return _fraction(_lr(s)._stern_brocot())


def calkin_wilf(s):
    return _fraction(_lr(s)._calkin_wilf())


def stern_brocot_locate(x):
    return _kintree._stern_brocot_locate(_pair(x))


def cf_value(quotients):
    return _fraction(_kintree._cf_value(list(quotients)))


def cf_of_rational(x):
    return _kintree._cf_of_rational(_pair(x))


def simplest_between(x, y):
    return _fraction(_kintree._simplest_between(_pair(x), _pair(y)))


def simplest_between_cf_formula(x, y):
    return _fraction(_kintree._simplest_between_cf_formula(_pair(x), _pair(y)))


def verify(suite, depth=None, seed=None):
    """Run one verification suite; returns the report as a dict."""
    kwargs = {} if seed is None else {"seed": seed}
    return json.loads(_kintree._verify(suite, depth, **kwargs))
