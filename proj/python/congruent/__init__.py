"""Exact rational triangles, tau-congruent numbers and congruent numbers.

Thin wrapper over the compiled ``_core`` module: rationals go in as ``int``,
``Fraction`` or ``"p/q"`` strings and come back as ``Fraction``; squarefree
classes come back as ``int``.
"""

from fractions import Fraction

from ._core import (
    CongruentError,
    DegenerateTriangle,
    FactorizationLimitExceeded,
    InvalidParameter,
    NonIntegralInverseTau,
    NonPositiveInput,
    ParseError,
    PoleInput,
)
from . import _core

__all__ = [
    "CongruentError",
    "DegenerateTriangle",
    "FactorizationLimitExceeded",
    "InvalidParameter",
    "NonIntegralInverseTau",
    "NonPositiveInput",
    "ParseError",
    "PoleInput",
    "squarefree_class",
    "signed_divisors",
    "is_rational_square",
    "point_from_x",
    "integer_points",
    "heron_triangle",
    "tau_congruent_number",
    "triangle_from_t",
    "ellipse_area_and_class",
    "consecutive_product_triangle",
    "inscribed_triangle",
    "circum_area_and_class",
    "exradii",
    "triangle_with_unit_exradius",
    "excircle_area_class",
    "normalize_to_unit_exradius",
    "render_tables",
    "check_record",
    "tau_record",
]


def _s(q):
    if isinstance(q, Fraction):
        return f"{q.numerator}/{q.denominator}"
    return str(q)


def _f(text):
    return Fraction(text)


def _tuple(t):
    return tuple(_f(v) for v in t)


def squarefree_class(q):
    return int(_core.squarefree_class(_s(q)))


def signed_divisors(n):
    return [int(d) for d in _core.signed_divisors(_s(n))]


def is_rational_square(q):
    return _core.is_rational_square(_s(q))


def point_from_x(tau, x):
    return _tuple(_core.point_from_x(_s(tau), _s(x)))


def integer_points(tau):
    return [(int(x), int(y)) for x, y in _core.integer_points(_s(tau))]


def heron_triangle(tau, x, y):
    return _tuple(_core.heron_triangle(_s(tau), _s(x), _s(y)))


def tau_congruent_number(tau, x, y):
    area, n, cls = _core.tau_congruent_number(_s(tau), _s(x), _s(y))
    return _f(area), _f(n), int(cls)


def triangle_from_t(axis, t):
    return _tuple(_core.triangle_from_t(_s(axis), _s(t)))


def ellipse_area_and_class(t):
    area, cls = _core.ellipse_area_and_class(_s(t))
    return _f(area), int(cls)


def consecutive_product_triangle(t):
    return _tuple(_core.consecutive_product_triangle(_s(t)))


def inscribed_triangle(radius, t):
    return _tuple(_core.inscribed_triangle(_s(radius), _s(t)))


def circum_area_and_class(radius, t):
    area, cls = _core.circum_area_and_class(_s(radius), _s(t))
    return _f(area), int(cls)


def exradii(a, b, c):
    return _tuple(_core.exradii(_s(a), _s(b), _s(c)))


def triangle_with_unit_exradius(kind, x):
    return _tuple(_core.triangle_with_unit_exradius(kind, _s(x)))


def excircle_area_class(kind, x):
    area, cls = _core.excircle_area_class(kind, _s(x))
    return _f(area), int(cls)


def normalize_to_unit_exradius(a, b, c, kind):
    return _tuple(_core.normalize_to_unit_exradius(_s(a), _s(b), _s(c), kind))


def render_tables():
    return _core.render_tables()


def check_record(line):
    """Failure messages for one JSON record line; empty when it verifies."""
    return list(_core.check_record(line))


def tau_record(tau, x):
    return _core.tau_record(_s(tau), _s(x))
