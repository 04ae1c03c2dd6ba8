"""Exact rank computations for sparse rational matrices.

Vectors are dicts ``{index: coefficient}`` with int or Fraction entries.
Elimination runs over the integers: rational rows are cleared of denominators
first, and each reduction step is fraction-free (cross-multiplication followed
by division by the row content), so no Fraction arithmetic happens in the inner
loop and nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

SparseVector = Mapping[int, "int | Fraction"]


def _integral(vec: SparseVector) -> dict[int, int]:
    items = {k: v for k, v in vec.items() if v != 0}
    if not items:
        return {}
    den = 1
    for v in items.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    row = {k: int(v * den) for k, v in items.items()}
    return _primitive(row)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {k: v // g for k, v in row.items()}
    return row


def dedupe(vectors: Iterable[SparseVector]) -> list[dict[int, int]]:
    """Drop zero vectors and exact duplicates (after scaling to primitive
    integer form, so scalar multiples count as duplicates)."""
    seen = set()
    out = []
    for vec in vectors:
        row = _integral(vec)
        if not row:
            continue
        key = tuple(sorted(row.items()))
        if key not in seen:
            seen.add(key)
            out.append(row)
    return out


class Echelon:
    """Incrementally maintained row echelon form; ``add`` reports whether the
    new vector increased the rank."""

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: SparseVector) -> dict[int, int]:
        row = _integral(vec)
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                return row
            a, b = piv[col], row[col]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                x = new.get(k, 0) - b * v
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
        return row

    def add(self, vec: SparseVector) -> bool:
        row = self.reduce(vec)
        if not row:
            return False
        self.pivots[min(row)] = row
        return True


def rank(vectors: Iterable[SparseVector]) -> int:
    ech = Echelon()
    for row in dedupe(vectors):
        ech.add(row)
    return ech.rank


def compose(outer: list[SparseVector], inner: list[SparseVector]) -> list[dict[int, int | Fraction]]:
    """Columns of the product outer * inner, both given as lists of columns."""
    out = []
    for col in inner:
        acc: dict[int, int | Fraction] = {}
        for j, c in col.items():
            for i, v in outer[j].items():
                x = acc.get(i, 0) + c * v
                if x:
                    acc[i] = x
                else:
                    acc.pop(i, None)
        out.append(acc)
    return out
