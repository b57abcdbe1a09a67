import json
from fractions import Fraction as F

import pytest

import congruent as c


def test_tau_point_and_triangle():
    assert c.point_from_x(1, 2) == (2, 3)
    assert c.heron_triangle(1, 2, 3) == (4, 3, 5)
    assert c.tau_congruent_number(1, 2, 3) == (6, 6, 6)
    assert c.tau_congruent_number(F(1, 2), 2, F(4, 3))[2] == 3


def test_integer_points():
    assert c.integer_points(1) == [(-1, 0), (0, -1), (2, 3), (3, 2)]
    with pytest.raises(c.NonIntegralInverseTau):
        c.integer_points(F(2, 3))


def test_ellipse_and_consecutive():
    assert c.triangle_from_t(2, 1) == (6, 2, 5)
    assert c.ellipse_area_and_class(6) == (F(28, 3), 21)
    assert c.consecutive_product_triangle(3) == (15, 8, 17)


def test_circumcircle_and_excircle():
    assert c.inscribed_triangle(F(5, 2), F(1, 2)) == (3, 4, 5)
    assert c.circum_area_and_class(1, F(1, 2)) == (F(24, 25), 6)
    assert c.exradii(3, 4, 5) == (2, 3, 6)
    assert c.triangle_with_unit_exradius("a", F(1, 2)) == (F(3, 2), 2, F(5, 2))
    assert c.excircle_area_class("c", F(1, 3)) == (F(1, 6), 6)
    assert c.normalize_to_unit_exradius(3, 4, 5, "c") == (F(1, 2), F(2, 3), F(5, 6))


def test_squarefree():
    assert c.squarefree_class(336) == 21
    assert c.squarefree_class(F(3, 8)) == 6
    assert c.is_rational_square(F(9, 4))
    assert sorted(c.signed_divisors(10)) == [-10, -5, -2, -1, 1, 2, 5, 10]


def test_errors():
    with pytest.raises(c.PoleInput):
        c.point_from_x(1, 1)
    with pytest.raises(c.ParseError):
        c.squarefree_class("1/0")
    with pytest.raises(c.CongruentError):
        c.inscribed_triangle(1, 1)
    assert issubclass(c.CongruentError, ValueError)


def test_records_and_tables():
    line = c.tau_record(1, 2)
    assert json.loads(line)["class"] == 6
    assert c.check_record(line) == []
    bad = json.loads(line)
    bad["sides"] = ["3", "4", "6"]
    assert "Pythagoras/law-of-cosines failed" in " ".join(c.check_record(json.dumps(bad)))
    assert "erratum: published table prints 42" in c.render_tables()
