from fractions import Fraction

import pytest

from trialkit.fields import (DivisionByZero, FieldDescriptor, PRIME,
                             QUADRATIC, RATIONALS, format_scalar,
                             parse_scalar, sqrt_in_field)

Q = FieldDescriptor(RATIONALS)
QS3 = FieldDescriptor(QUADRATIC, d=3)
F7 = FieldDescriptor(PRIME, p=7)


def test_rational_arithmetic():
    a = Q.from_fraction(Fraction(2, 3))
    b = Q.from_int(5)
    assert a + b == Q.from_fraction(Fraction(17, 3))
    assert a * b == Q.from_fraction(Fraction(10, 3))
    assert (a - a).is_zero()
    assert b / a == Q.from_fraction(Fraction(15, 2))
    assert -a == Q.from_fraction(Fraction(-2, 3))


def test_quadratic_arithmetic():
    r3 = sqrt_in_field(QS3.from_int(3))
    assert r3 is not None
    assert r3 * r3 == QS3.from_int(3)
    x = QS3.from_int(1) + r3
    y = QS3.from_int(2) - r3
    # (1 + s)(2 - s) = 2 + s - 3 = s - 1
    assert x * y == r3 - QS3.from_int(1)
    assert (x / x) == QS3.one()


def test_prime_field_arithmetic():
    a = F7.from_int(3)
    b = F7.from_int(5)
    assert a + b == F7.from_int(1)
    assert a * b == F7.from_int(1)
    assert a.inverse() == F7.from_int(5)
    assert F7.from_fraction(Fraction(1, 2)) == F7.from_int(4)


def test_division_by_zero_raises():
    with pytest.raises(DivisionByZero):
        Q.one() / Q.zero()
    with pytest.raises(DivisionByZero):
        F7.zero().inverse()


def test_sqrt_availability():
    assert sqrt_in_field(Q.from_int(4)) == Q.from_int(2)
    assert sqrt_in_field(Q.from_int(3)) is None
    assert sqrt_in_field(QS3.from_int(12)) == QS3.from_int(2) * sqrt_in_field(QS3.from_int(3))
    # 3 = 5^2 mod 11, but 3 is not a square mod 7
    F11 = FieldDescriptor(PRIME, p=11)
    r = sqrt_in_field(F11.from_int(3))
    assert r is not None and r * r == F11.from_int(3)
    assert sqrt_in_field(F7.from_int(3)) is None


def test_descriptor_validation():
    with pytest.raises(ValueError):
        FieldDescriptor(QUADRATIC, d=4)  # not square-free
    with pytest.raises(ValueError):
        FieldDescriptor(PRIME, p=6)
    with pytest.raises(ValueError):
        FieldDescriptor(PRIME, p=2)


def test_format_parse_round_trip():
    for desc, vals in ((Q, ["-7/3", "0", "5"]),
                       (F7, ["3", "0"]),):
        for text in vals:
            x = parse_scalar(text, desc)
            assert parse_scalar(format_scalar(x), desc) == x
    x = QS3.from_fraction(Fraction(1, 2)) + sqrt_in_field(QS3.from_int(3))
    assert parse_scalar(format_scalar(x), QS3) == x


def test_characteristic():
    assert Q.characteristic == 0
    assert F7.characteristic == 7
    assert FieldDescriptor(PRIME, p=3).characteristic == 3
