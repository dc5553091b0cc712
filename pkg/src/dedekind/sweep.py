"""Exhaustive verification sweeps over moduli 1..b_max.

Each check is a function of one modulus ``b`` returning how many
individual identities it evaluated and the inputs of any that failed.
Work is split by ``b`` and merged in ascending order, so the report does
not depend on the worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Iterable

from .criteria import classify_values, corollary_classify, eq2_holds
from .exact import (
    NonIntegralResult,
    format_rational,
    jacobi_symbol,
    mod_inverse,
    two_power_odd_prime,
    units,
)
from .permutation import inversion_count_salie, inversion_table
from .sums import (
    dedekind_sum_fast,
    dedekind_sum_naive,
    inversions_from_sum,
    sum_from_inversions,
)

CheckResult = tuple[int, list[dict[str, Any]]]


def _fast_sums(b: int) -> dict[int, Fraction]:
    return {a: dedekind_sum_fast(a, b).value for a in units(b)}


def check_agreement(b: int) -> CheckResult:
    """naive == reciprocity == Meyer(Salie) for every unit."""
    bad = []
    us = units(b)
    for a in us:
        naive = dedekind_sum_naive(a, b).value
        fast = dedekind_sum_fast(a, b).value
        meyer = sum_from_inversions(inversion_count_salie(a, b).value, b)
        if not naive == fast == meyer:
            bad.append({"a": a, "b": b, "naive": format_rational(naive),
                        "fast": format_rational(fast), "meyer": format_rational(meyer)})
    return len(us), bad


def check_meyer(b: int) -> CheckResult:
    """Direct inversion counts and naive sums satisfy Meyer's formula both ways."""
    bad = []
    table = inversion_table(b)
    for a, inv in table.items():
        s = dedekind_sum_naive(a, b).value
        try:
            recovered = inversions_from_sum(s, b)
        except NonIntegralResult:
            recovered = None
        if recovered != inv or sum_from_inversions(inv, b) != s or (12 * b * s).denominator != 1:
            bad.append({"a": a, "b": b, "s": format_rational(s), "I": inv,
                        "recovered": recovered})
    return len(table), bad


def check_salie(b: int) -> CheckResult:
    """4aI(a,b) + 4bI(b,a) = (a-1)(b-1)(a+b-1) for coprime 1 <= a <= b."""
    bad = []
    n = 0
    here = inversion_table(b)
    for a in range(1, b + 1):
        if gcd(a, b) != 1:
            continue
        n += 1
        lhs = 4 * a * here[a % b] + 4 * b * inversion_table(a)[b % a]
        rhs = (a - 1) * (b - 1) * (a + b - 1)
        if lhs != rhs:
            bad.append({"a": a, "b": b, "lhs": lhs, "rhs": rhs})
    return n, bad


def check_zolotarev(b: int) -> CheckResult:
    """(-1)^I(a,b) equals the Jacobi symbol, odd b only."""
    if b % 2 == 0:
        return 0, []
    bad = []
    table = inversion_table(b)
    for a, inv in table.items():
        symbol = jacobi_symbol(a, b)
        if (-1) ** (inv % 2) != symbol:
            bad.append({"a": a, "b": b, "I": inv, "jacobi": symbol})
    return len(table), bad


def check_eq1(b: int) -> CheckResult:
    """4I(a1,b) - 4I(a2,b) = -b(12s(a1,b) - 12s(a2,b)) for all unit pairs."""
    bad = []
    table = inversion_table(b)
    sums = _fast_sums(b)
    n = 0
    for a1, i1 in table.items():
        for a2, i2 in table.items():
            n += 1
            if 4 * (i1 - i2) != -b * 12 * (sums[a1] - sums[a2]):
                bad.append({"a1": a1, "a2": a2, "b": b})
    return n, bad


def check_eq2(b: int) -> CheckResult:
    """4a1a2(I1 - I2) = (a1-a2)(b-1)(b+a1a2-1) mod b, 2b and 4b."""
    bad = []
    table = inversion_table(b)
    n = 0
    for a1, i1 in table.items():
        for a2, i2 in table.items():
            for m in (b, 2 * b, 4 * b):
                n += 1
                if not eq2_holds(a1, a2, b, m, i1 - i2):
                    bad.append({"a1": a1, "a2": a2, "b": b, "m": m})
    return n, bad


def check_membership_levels(b: int) -> CheckResult:
    """Value-based membership equals criteria (a) and (c) at every level."""
    bad = []
    table = inversion_table(b)
    sums = _fast_sums(b)
    n = 0
    for a1, i1 in table.items():
        s1 = sums[a1]
        for a2, i2 in table.items():
            n += 1
            r = classify_values(a1, a2, b, s1, sums[a2], i1, i2)
            nested = (r.in_Z or not r.in_2Z) and (r.in_2Z or not r.in_4Z)
            if not (r.consistent and nested and (r.in_4Z or not r.sums_equal)):
                bad.append(r.to_dict())
    return n, bad


def check_corollary(b: int) -> CheckResult:
    """s(a^-1,b) = s(a,b) always; for b = 2^e p (e <= 3) equality only for a2 = a1^{+-1}."""
    bad = []
    sums = _fast_sums(b)
    n = 0
    for a, s in sums.items():
        n += 1
        inv = mod_inverse(a, b)
        if sums[inv] != s:
            bad.append({"a": a, "inverse": inv, "b": b})
    if two_power_odd_prime(b) is not None:
        n += 1
        verdict = corollary_classify(b)
        if not verdict.holds:
            bad.append(verdict.to_dict())
    return n, bad


CHECKS: dict[str, Callable[[int], CheckResult]] = {
    "agreement": check_agreement,
    "meyer": check_meyer,
    "salie": check_salie,
    "zolotarev": check_zolotarev,
    "eq1": check_eq1,
    "eq2": check_eq2,
    "theorem4": check_membership_levels,
    "corollary": check_corollary,
}


@dataclass(frozen=True)
class SweepConfig:
    b_max: int
    checks: tuple[str, ...] = tuple(CHECKS)
    parallelism: int = 1
    output_path: str | None = None

    def __post_init__(self):
        if self.b_max < 2:
            raise ValueError(f"b_max must be at least 2, got {self.b_max}")
        if not self.checks:
            raise ValueError("at least one check is required")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ValueError(f"unknown checks: {', '.join(unknown)}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be positive")


@dataclass
class SweepReport:
    b_max: int
    counts: dict[str, int] = field(default_factory=dict)
    violations: dict[str, list[dict[str, Any]]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "b_max": self.b_max,
            "checks": {
                name: {"count": self.counts[name], "violations": len(self.violations[name])}
                for name in self.counts
            },
            "violations": {k: v for k, v in self.violations.items() if v},
            "ok": self.ok,
        }

    def lines(self) -> Iterable[str]:
        for name, count in self.counts.items():
            yield f"{name}: {count} checks, {len(self.violations[name])} violations"
        for name, items in self.violations.items():
            for item in items:
                yield f"VIOLATION {name}: {json.dumps(item, sort_keys=True)}"


def _run_one(job: tuple[int, tuple[str, ...]]) -> tuple[int, dict[str, CheckResult]]:
    b, checks = job
    return b, {name: CHECKS[name](b) for name in checks}


def run_checks(check: str, b_values: Iterable[int]) -> CheckResult:
    """Run a single named check over the given moduli and pool the results."""
    fn = CHECKS[check]
    total = 0
    bad: list[dict[str, Any]] = []
    for b in b_values:
        n, v = fn(b)
        total += n
        bad.extend(v)
    return total, bad


def verify_sweep(config: SweepConfig) -> SweepReport:
    jobs = [(b, config.checks) for b in range(1, config.b_max + 1)]
    # large b carry most of the work; hand them out first
    if config.parallelism > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            results = sorted(pool.map(_run_one, reversed(jobs)))
    else:
        results = [_run_one(job) for job in jobs]
    report = SweepReport(config.b_max)
    for name in config.checks:
        report.counts[name] = 0
        report.violations[name] = []
    for _, per_check in results:
        for name, (n, bad) in per_check.items():
            report.counts[name] += n
            report.violations[name].extend(bad)
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return report
