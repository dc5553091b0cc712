"""Exact Dedekind sums s(a, b) by three independent routes.

* ``naive``: the sawtooth definition, summed over k = 1..b-1.
* ``reciprocity``: Euclid-style recursion on the reciprocity law.
* ``meyer``: conversion from an inversion count of x -> [a*x]_b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .exact import (
    InvalidInversionCount,
    NonIntegralResult,
    check_modulus,
    require_unit,
)
from .permutation import inversion_count_salie

Method = Literal["naive", "reciprocity", "meyer"]


@dataclass(frozen=True)
class DedekindSumValue:
    value: Fraction
    a: int
    b: int
    method: Method


def sawtooth(x: Fraction) -> Fraction:
    """((x)): 0 at integers, otherwise frac(x) - 1/2."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - (x.numerator // x.denominator) - Fraction(1, 2)


def dedekind_sum_naive(a: int, b: int) -> DedekindSumValue:
    require_unit(a, b)
    a %= b
    # For 0 < k < b and a a unit, ((k/b)) = (2k - b)/(2b) and
    # ((ka/b)) = (2[ka]_b - b)/(2b); accumulate over 4b^2.
    total = sum((2 * k - b) * (2 * (k * a % b) - b) for k in range(1, b))
    return DedekindSumValue(Fraction(total, 4 * b * b), a, b, "naive")


def dedekind_sum_fast(a: int, b: int) -> DedekindSumValue:
    """s(a,b) = -1/4 + (a^2 + b^2 + 1)/(12ab) - s([b]_a, a), down to s(0, 1) = 0."""
    require_unit(a, b)
    a %= b
    a0, b0 = a, b
    total = Fraction(0)
    sign = 1
    while b > 1:
        total += sign * (Fraction(a * a + b * b + 1, 12 * a * b) - Fraction(1, 4))
        sign = -sign
        a, b = b % a, a
    return DedekindSumValue(total, a0, b0, "reciprocity")


def sum_from_inversions(i: int, b: int) -> Fraction:
    """s = ((b-1)(b-2)/4 - i) / (3b)."""
    check_modulus(b)
    if i < 0:
        raise InvalidInversionCount(f"negative inversion count {i}")
    if b == 1 and i != 0:
        raise InvalidInversionCount(f"the permutation of {{0}} has no inversions, got {i}")
    return Fraction((b - 1) * (b - 2) - 4 * i, 12 * b)


def inversions_from_sum(s: Fraction, b: int) -> int:
    """Invert :func:`sum_from_inversions`: return -3b*s + (b-1)(b-2)/4."""
    check_modulus(b)
    value = Fraction((b - 1) * (b - 2), 4) - 3 * b * Fraction(s)
    if value.denominator != 1:
        raise NonIntegralResult(f"-3*{b}*s + ({b}-1)({b}-2)/4 = {value} for s = {s}")
    if value < 0:
        raise NonIntegralResult(f"negative inversion count {value} for s = {s}, b = {b}")
    return value.numerator


def dedekind_sum_meyer(a: int, b: int) -> DedekindSumValue:
    """s(a, b) recovered from the Salie inversion counter."""
    inv = inversion_count_salie(a, b).value
    return DedekindSumValue(sum_from_inversions(inv, b), a % b, b, "meyer")


def dedekind_sum(a: int, b: int) -> Fraction:
    """Shortcut for the fast route's exact value."""
    return dedekind_sum_fast(a, b).value
