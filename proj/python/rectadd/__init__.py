"""Exact additive rectangle functions over Q(sqrt2).

Numbers and rectangles are exact. Command functions return the same JSON
report as the `rectadd` CLI, parsed into a dict.
"""

import json

from . import _rectadd
from ._rectadd import ParseError, QNum, Rect, decompose, evaluate

__all__ = [
    "ParseError",
    "QNum",
    "Rect",
    "counterexample",
    "decompose",
    "decompose_report",
    "dyadic_approx",
    "evaluate",
    "probe",
    "proptest",
]


def counterexample(**kwargs):
    return json.loads(_rectadd.counterexample(**kwargs))


def decompose_report(rect="[0,8]x[0,5]", **kwargs):
    return json.loads(_rectadd.decompose_report(str(rect), **kwargs))


def dyadic_approx(rect="[0,1]x[1,0+1*sqrt2]", **kwargs):
    return json.loads(_rectadd.dyadic_approx(str(rect), **kwargs))


def probe(**kwargs):
    return json.loads(_rectadd.probe(**kwargs))


def proptest(**kwargs):
    return json.loads(_rectadd.proptest(**kwargs))
