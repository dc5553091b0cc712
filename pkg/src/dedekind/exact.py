"""Exact integer/rational primitives shared by the rest of the package.

Python integers are arbitrary precision, so products such as
``(a1 - a2) * (b - 1) * (b + a1*a2 - 1)`` never wrap.  Rationals are
:class:`fractions.Fraction`, which is always stored reduced with a positive
denominator and compares/hashes by value.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _gcd

ExactRational = Fraction


class NotCoprime(ValueError):
    """A multiplier shares a factor with the modulus."""

    def __init__(self, a: int, b: int):
        super().__init__(f"gcd({a}, {b}) = {_gcd(a, b)} != 1")
        self.a = a
        self.b = b


class EvenModulus(ValueError):
    pass


class ZeroDenominator(ZeroDivisionError):
    pass


class InvalidModulus(ValueError):
    pass


class InvalidInversionCount(ValueError):
    pass


class NonIntegralResult(ValueError):
    pass


class InternalInvariantViolation(RuntimeError):
    """Raised when an exactness assertion fails; always indicates a bug."""


def gcd(x: int, y: int) -> int:
    return _gcd(x, y)


def check_modulus(b: int) -> None:
    if b < 1:
        raise ValueError(f"modulus must be positive, got {b}")


def require_unit(a: int, b: int) -> None:
    """Raise unless ``a`` is a unit mod the positive integer ``b``."""
    check_modulus(b)
    if _gcd(a, b) != 1:
        raise NotCoprime(a, b)


def units(b: int) -> list[int]:
    """Units mod ``b`` in ascending order: 1 <= a < b, or ``[0]`` when b == 1."""
    check_modulus(b)
    if b == 1:
        return [0]
    return [a for a in range(1, b) if _gcd(a, b) == 1]


def mod_inverse(a: int, b: int) -> int:
    require_unit(a, b)
    return pow(a, -1, b)


def rational_make(n: int, d: int) -> Fraction:
    if d == 0:
        raise ZeroDenominator(f"{n}/0")
    return Fraction(n, d)


def format_rational(r: Fraction) -> str:
    """Render as ``"p/q"`` in lowest terms, or ``"p"`` when q == 1."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    if not sep:
        return Fraction(int(num))
    return rational_make(int(num), int(den))


def jacobi_symbol(a: int, b: int) -> int:
    """Jacobi symbol (a/b) for odd b >= 1, by quadratic reciprocity.

    ``a`` may be any integer; it is reduced mod ``b`` first.
    """
    if b < 1 or b % 2 == 0:
        raise EvenModulus(f"Jacobi symbol needs an odd positive modulus, got {b}")
    a %= b
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            # (2/b) = -1 exactly when b = 3, 5 mod 8
            if b % 8 in (3, 5):
                sign = -sign
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            sign = -sign
        a %= b
    return sign if b == 1 else 0


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def two_power_odd_prime(b: int, max_e: int = 3) -> tuple[int, int] | None:
    """Return ``(e, p)`` with ``b == 2**e * p``, p an odd prime and e <= max_e."""
    if b < 1:
        return None
    e = (b & -b).bit_length() - 1
    p = b >> e
    if e <= max_e and p > 2 and is_prime(p):
        return e, p
    return None
