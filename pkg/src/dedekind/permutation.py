"""Multiplier permutations x -> [a*x]_b and their inversion counts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

import numpy as np

from .exact import (
    InternalInvariantViolation,
    jacobi_symbol,
    require_unit,
    units,
)

# rows * padded_width per numpy batch
_BATCH_CELLS = 1 << 21


@dataclass(frozen=True)
class MultiplierPermutation:
    multiplier: int
    modulus: int
    images: tuple[int, ...]

    @classmethod
    def build(cls, a: int, b: int) -> "MultiplierPermutation":
        require_unit(a, b)
        a %= b
        return cls(a, b, tuple(a * x % b for x in range(b)))

    def __len__(self) -> int:
        return self.modulus

    def __getitem__(self, x: int) -> int:
        return self.images[x]


@dataclass(frozen=True)
class InversionCount:
    value: int
    method: Literal["direct", "salie"]

    def __int__(self) -> int:
        return self.value


def permutation_image(a: int, b: int, x: int) -> int:
    require_unit(a, b)
    if not 0 <= x < b:
        raise ValueError(f"x={x} outside [0, {b})")
    return a * x - b * (a * x // b)


def _merge_count_rows(rows: np.ndarray) -> np.ndarray:
    """Inversion count of every row of a 2-D integer array.

    Bottom-up merge sort over all rows at once.  Each level merges adjacent
    sorted blocks with a stable sort (two sorted runs, so a linear merge);
    for every element coming from a right block, the left-block elements
    that land after it are the inversions it closes.
    """
    m, n = rows.shape
    size = 1
    while size < n:
        size *= 2
    cur = np.empty((m, size), dtype=np.int64)
    cur[:, :n] = rows
    if size > n:
        # strictly increasing tail above every value adds no inversions
        top = int(rows.max()) + 1 if n else 0
        cur[:, n:] = np.arange(top, top + size - n, dtype=np.int64)
    total = np.zeros(m, dtype=np.int64)
    width = 1
    while width < size:
        blocks = cur.reshape(m, size // (2 * width), 2 * width)
        order = np.argsort(blocks, axis=-1, kind="stable")
        from_left = order < width
        left_seen = np.cumsum(from_left, axis=-1, dtype=np.int64)
        total += np.where(from_left, 0, width - left_seen).sum(axis=(1, 2))
        cur = np.take_along_axis(blocks, order, axis=-1).reshape(m, size)
        width *= 2
    return total


def count_inversions(seq: Sequence[int]) -> int:
    """Number of pairs i < j with seq[i] > seq[j]."""
    if len(seq) < 2:
        return 0
    return int(_merge_count_rows(np.asarray(seq, dtype=np.int64)[None, :])[0])


def inversion_count_direct(a: int, b: int) -> InversionCount:
    """Count inversions of x -> [a*x]_b by merge counting, O(b log b)."""
    require_unit(a, b)
    images = (np.arange(b, dtype=np.int64) * (a % b)) % b
    return InversionCount(count_inversions(images), "direct")


@lru_cache(maxsize=1024)
def _inversion_table(b: int) -> tuple[tuple[int, int], ...]:
    us = units(b)
    if b == 1:
        return ((0, 0),)
    xs = np.arange(b, dtype=np.int64)
    chunk = max(1, _BATCH_CELLS // b)
    out: list[tuple[int, int]] = []
    for start in range(0, len(us), chunk):
        mult = np.asarray(us[start:start + chunk], dtype=np.int64)
        counts = _merge_count_rows(np.outer(mult, xs) % b)
        out.extend(zip(us[start:start + chunk], (int(c) for c in counts)))
    return tuple(out)


def inversion_table(b: int) -> dict[int, int]:
    """Direct inversion count I(a, b) for every unit a mod b, batched."""
    return dict(_inversion_table(b))


def inversion_count_salie(a: int, b: int) -> InversionCount:
    """I(a, b) in O(log b) steps from 4aI(a,b) + 4bI(b,a) = (a-1)(b-1)(a+b-1).

    The chain of reduced pairs is walked down Euclid-style to a base case
    (I(a, 1) = 0 or I(1, b) = 0) and unwound; every unwinding step must
    divide exactly by 4a.
    """
    require_unit(a, b)
    chain = []
    a %= b
    while b > 1 and a > 1:
        chain.append((a, b))
        a, b = b % a, a
    inv = 0
    for a, b in reversed(chain):
        num = (a - 1) * (b - 1) * (a + b - 1) - 4 * b * inv
        inv, rem = divmod(num, 4 * a)
        if rem:
            raise InternalInvariantViolation(
                f"inexact Salie step at (a={a}, b={b}): {num} / {4 * a}"
            )
    return InversionCount(inv, "salie")


def salie_identity_check(a: int, b: int) -> bool:
    """Whether 4a*I(a,b) + 4b*I(b,a) == (a-1)(b-1)(a+b-1) with direct counts."""
    if a < 1 or b < 1:
        raise ValueError("Salie identity is stated for positive a, b")
    require_unit(a, b)
    lhs = 4 * a * inversion_count_direct(a, b).value
    lhs += 4 * b * inversion_count_direct(b, a).value
    return lhs == (a - 1) * (b - 1) * (a + b - 1)


def zolotarev_check(a: int, b: int) -> bool:
    """Whether the sign (-1)**I(a,b) of the permutation equals (a/b)."""
    symbol = jacobi_symbol(a, b)
    require_unit(a, b)
    parity = inversion_count_direct(a, b).value % 2
    return (-1) ** parity == symbol
