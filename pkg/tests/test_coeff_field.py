"""Tests for prime field arithmetic"""

import pytest

from src.coeff_field import FieldElement, FieldSpec, fp_arith, inverse_mod, is_prime
from src.errors import ComputationError, DivisionByZero


@pytest.mark.parametrize("n", [2, 3, 5, 7, 13, 101, 7919, 2147483647])
def test_primes(n):
    assert is_prime(n)


@pytest.mark.parametrize("n", [0, 1, 4, 9, 91, 561, 1105, 2147483646])
def test_non_primes(n):
    assert not is_prime(n)


def test_inverse_mod():
    """Inverses multiply to one"""
    assert inverse_mod(3, 7) == 5
    for p in (2, 3, 5, 101):
        for a in range(1, p):
            assert a * inverse_mod(a, p) % p == 1


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        inverse_mod(0, 5)
    with pytest.raises(ZeroDivisionError):
        inverse_mod(10, 5)
    with pytest.raises(ComputationError):
        FieldSpec(5).inv(0)


@pytest.mark.parametrize("p", [0, 1, 4, 15, 2 ** 31, 2 ** 31 + 11])
def test_bad_characteristic(p):
    with pytest.raises(ValueError):
        FieldSpec(p)


def test_field_elements():
    """F_5 arithmetic stays canonical"""
    F = FieldSpec(5)
    a, b = F.element(3), F.element(4)
    assert (a + b).value == 2
    assert (a - b).value == 4
    assert (a * b).value == 2
    assert (-a).value == 2
    assert F.element(2).inverse().value == 3
    assert F.element(-1).value == 4
    assert int(F.element(12)) == 2


def test_element_checks():
    with pytest.raises(ValueError):
        FieldElement(FieldSpec(5), 7)
    with pytest.raises(ValueError):
        FieldSpec(5).element(1) + FieldSpec(7).element(1)


def test_fp_arith():
    F = FieldSpec(7)
    assert fp_arith("add", F.element(5), F.element(4)).value == 2
    assert fp_arith("mul", F.element(3), F.element(5)).value == 1
    assert fp_arith("inv", F.element(3)).value == 5
    assert fp_arith("neg", F.element(0)).value == 0
    with pytest.raises(DivisionByZero):
        fp_arith("inv", F.element(0))
    with pytest.raises(ValueError):
        fp_arith("add", F.element(1))
    with pytest.raises(ValueError):
        fp_arith("pow", F.element(1), F.element(2))
