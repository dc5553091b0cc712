"""Equal-sum search and CSV/JSON emission used by the command line."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Any, Iterable

from .criteria import (
    DeltaClassReport,
    classify_values,
    criterion_mod_2z,
    criterion_mod_4z,
    criterion_mod_z,
    equal_sum_classes,
)
from .exact import InternalInvariantViolation, format_rational, parse_rational
from .permutation import inversion_count_salie

CSV_HEADER = ("b", "a1", "a2", "delta12s", "in_Z", "in_2Z", "in_4Z", "sums_equal")


@dataclass(frozen=True)
class EqualSumGroup:
    b: int
    value: Fraction
    members: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"b": self.b, "value": format_rational(self.value), "members": list(self.members)}

    def pairs(self) -> list[tuple[int, int]]:
        m = self.members
        return [(x, y) for i, x in enumerate(m) for y in m[i + 1:]]


def pairs_search(b: int) -> list[EqualSumGroup]:
    """Units mod b sharing a Dedekind sum, as groups of size >= 2 sorted by value."""
    if b < 2:
        raise ValueError(f"pairs search needs b >= 2, got {b}")
    groups = [
        EqualSumGroup(b, value, tuple(members))
        for value, members in equal_sum_classes(b).items()
        if len(members) >= 2
    ]
    groups.sort(key=lambda g: (g.value, g.members))
    for g in groups:
        for a1, a2 in g.pairs():
            if not (criterion_mod_z(a1, a2, b) and criterion_mod_2z(a1, a2, b)
                    and criterion_mod_4z(a1, a2, b)):
                raise InternalInvariantViolation(
                    f"s({a1},{b}) = s({a2},{b}) but a divisibility criterion fails"
                )
    return groups


def group_reports(groups: Iterable[EqualSumGroup]) -> list[DeltaClassReport]:
    """Classification rows for every unordered pair inside each group."""
    rows = []
    for g in groups:
        inv = {a: inversion_count_salie(a, g.b).value for a in g.members}
        for a1, a2 in g.pairs():
            rows.append(classify_values(a1, a2, g.b, g.value, g.value, inv[a1], inv[a2]))
    return rows


def _flag(x: bool) -> str:
    return "true" if x else "false"


def emit_csv(rows: Iterable[DeltaClassReport], out: IO[str] | str) -> None:
    """Write rows sorted by (b, a1, a2) to a text stream or a file path."""
    if isinstance(out, str):
        with open(out, "w", encoding="utf-8", newline="") as fh:
            return emit_csv(rows, fh)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in sorted(rows, key=lambda r: (r.b, r.a1, r.a2)):
        writer.writerow([
            r.b, r.a1, r.a2, format_rational(r.delta12s),
            _flag(r.in_Z), _flag(r.in_2Z), _flag(r.in_4Z), _flag(r.sums_equal),
        ])


def csv_text(rows: Iterable[DeltaClassReport]) -> str:
    buf = io.StringIO()
    emit_csv(rows, buf)
    return buf.getvalue()


def read_csv(src: IO[str]) -> list[dict[str, Any]]:
    """Parse rows written by :func:`emit_csv` back into typed values."""
    reader = csv.DictReader(src)
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    out = []
    for row in reader:
        out.append({
            "b": int(row["b"]),
            "a1": int(row["a1"]),
            "a2": int(row["a2"]),
            "delta12s": parse_rational(row["delta12s"]),
            **{k: row[k] == "true" for k in ("in_Z", "in_2Z", "in_4Z", "sums_equal")},
        })
    return out
