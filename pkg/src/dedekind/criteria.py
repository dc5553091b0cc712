"""When do 12s(a1,b) and 12s(a2,b) differ by an element of Z, 2Z or 4Z?

Three characterisations are compared level by level:

* value: the exact rational 12s(a1,b) - 12s(a2,b) (ground truth),
* (a): congruences of inversion counts mod b,
* (c): divisibility of (a1-a2)(a1a2-1) by b, resp. of
  (a1-a2)(b-1)(b+a1a2-1) by 2b and 4b.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exact import (
    InvalidModulus,
    format_rational,
    mod_inverse,
    require_unit,
    two_power_odd_prime,
    units,
)
from .permutation import inversion_count_salie
from .sums import dedekind_sum_fast

LEVELS = (1, 2, 4)


def _require_pair(a1: int, a2: int, b: int) -> None:
    require_unit(a1, b)
    require_unit(a2, b)


def _product_c(a1: int, a2: int, b: int) -> int:
    return (a1 - a2) * (b - 1) * (b + a1 * a2 - 1)


def criterion_mod_z(a1: int, a2: int, b: int) -> bool:
    _require_pair(a1, a2, b)
    return (a1 - a2) * (a1 * a2 - 1) % b == 0


def criterion_mod_2z(a1: int, a2: int, b: int) -> bool:
    _require_pair(a1, a2, b)
    return _product_c(a1, a2, b) % (2 * b) == 0


def criterion_mod_4z(a1: int, a2: int, b: int) -> bool:
    _require_pair(a1, a2, b)
    return _product_c(a1, a2, b) % (4 * b) == 0


def _crit_c(a1: int, a2: int, b: int) -> tuple[bool, bool, bool]:
    prod = _product_c(a1, a2, b)
    return (
        (a1 - a2) * (a1 * a2 - 1) % b == 0,
        prod % (2 * b) == 0,
        prod % (4 * b) == 0,
    )


def _crit_a(i1: int, i2: int, b: int) -> tuple[bool, bool, bool]:
    di = i1 - i2
    return (4 * di % b == 0, 2 * di % b == 0, di % b == 0)


def inversion_criterion(a1: int, a2: int, b: int, level: int) -> bool:
    """Level 1: 4dI = 0, level 2: 2dI = 0, level 4: dI = 0 (mod b)."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}, got {level}")
    _require_pair(a1, a2, b)
    di = inversion_count_salie(a1, b).value - inversion_count_salie(a2, b).value
    return (4 // level) * di % b == 0


def congruence_eq2_check(a1: int, a2: int, b: int, m: int) -> bool:
    """4a1a2(I1 - I2) == (a1-a2)(b-1)(b+a1a2-1) (mod m), m in {b, 2b, 4b}."""
    _require_pair(a1, a2, b)
    if m not in (b, 2 * b, 4 * b):
        raise InvalidModulus(f"m must be one of b, 2b, 4b for b={b}, got {m}")
    di = inversion_count_salie(a1, b).value - inversion_count_salie(a2, b).value
    return eq2_holds(a1, a2, b, m, di)


def eq2_holds(a1: int, a2: int, b: int, m: int, di: int) -> bool:
    return (4 * a1 * a2 * di - _product_c(a1, a2, b)) % m == 0


@dataclass(frozen=True)
class DeltaClassReport:
    a1: int
    a2: int
    b: int
    delta12s: Fraction
    in_Z: bool
    in_2Z: bool
    in_4Z: bool
    crit_c: tuple[bool, bool, bool]
    crit_a: tuple[bool, bool, bool]
    sums_equal: bool
    consistent: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "a1": self.a1,
            "a2": self.a2,
            "b": self.b,
            "delta12s": format_rational(self.delta12s),
            "in_Z": self.in_Z,
            "in_2Z": self.in_2Z,
            "in_4Z": self.in_4Z,
            "crit_c": list(self.crit_c),
            "crit_a": list(self.crit_a),
            "sums_equal": self.sums_equal,
            "consistent": self.consistent,
        }


def classify_values(
    a1: int, a2: int, b: int, s1: Fraction, s2: Fraction, i1: int, i2: int
) -> DeltaClassReport:
    """Build a report from already computed sums and inversion counts.

    ``a1`` and ``a2`` must already be reduced units mod ``b``.
    """
    delta = 12 * (s1 - s2)
    integral = delta.denominator == 1
    value_levels = (
        integral,
        integral and delta.numerator % 2 == 0,
        integral and delta.numerator % 4 == 0,
    )
    crit_c = _crit_c(a1, a2, b)
    crit_a = _crit_a(i1, i2, b)
    return DeltaClassReport(
        a1=a1,
        a2=a2,
        b=b,
        delta12s=delta,
        in_Z=value_levels[0],
        in_2Z=value_levels[1],
        in_4Z=value_levels[2],
        crit_c=crit_c,
        crit_a=crit_a,
        sums_equal=delta == 0,
        consistent=value_levels == crit_c == crit_a,
    )


def delta_classify(a1: int, a2: int, b: int) -> DeltaClassReport:
    _require_pair(a1, a2, b)
    a1 %= b
    a2 %= b
    return classify_values(
        a1,
        a2,
        b,
        dedekind_sum_fast(a1, b).value,
        dedekind_sum_fast(a2, b).value,
        inversion_count_salie(a1, b).value,
        inversion_count_salie(a2, b).value,
    )


@dataclass(frozen=True)
class CorollaryVerdict:
    b: int
    decomposition: tuple[int, int] | None
    holds: bool
    offending_pairs: list[tuple[int, int]] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        dec = None
        if self.decomposition is not None:
            dec = {"e": self.decomposition[0], "p": self.decomposition[1]}
        return {
            "b": self.b,
            "decomposition": dec,
            "holds": self.holds,
            "offending_pairs": [list(p) for p in self.offending_pairs],
        }


def equal_sum_classes(b: int) -> dict[Fraction, list[int]]:
    """Group the units mod b by exact Dedekind sum; members ascending."""
    groups: dict[Fraction, list[int]] = defaultdict(list)
    for a in units(b):
        groups[dedekind_sum_fast(a, b).value].append(a)
    return dict(groups)


def corollary_classify(b: int) -> CorollaryVerdict:
    """Check whether s(a1,b) = s(a2,b) forces a1 = a2 or a1*a2 = 1 (mod b).

    Runs for any b; ``decomposition`` records whether b = 2^e p with
    e <= 3 and p an odd prime.
    """
    offending = []
    for members in equal_sum_classes(b).values():
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                if x * y % b != 1 % b:
                    offending.append((x, y))
    # s(a^-1, b) = s(a, b) is checked, not assumed
    inverse_ok = all(
        dedekind_sum_fast(a, b).value == dedekind_sum_fast(mod_inverse(a, b), b).value
        for a in units(b)
    )
    offending.sort()
    return CorollaryVerdict(
        b=b,
        decomposition=two_power_odd_prime(b),
        holds=not offending and inverse_ok,
        offending_pairs=offending,
    )
