"""Hochschild homology straight from the chain complex.

Uses the Hochschild complex normalized relative to the semisimple subalgebra
E spanned by the vertex idempotents:

    C_n = A (x)_E rad A (x)_E ... (x)_E rad A   (n copies of rad A, cyclically over E)

with basis the tuples (p_0, p_1, ..., p_n) of nonzero paths, p_1..p_n of
positive length, t(p_i) = s(p_{i+1}) and t(p_n) = s(p_0).  Since E is
separable this computes HH_*(A).  No formula from the theory of monomial
algebras is used, which is the point of the exercise.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .quiver import Path, SurfaceAlgebra, Tag

DEFAULT_CAP = 200_000

Chain = tuple[Path, ...]


class OracleTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class BoundaryMatrix:
    degree: int
    rows: int
    columns: tuple[dict[int, int], ...]

    @property
    def rank(self) -> int:
        return linalg.rank(self.columns)


def _paths_between(alg: SurfaceAlgebra):
    table: dict[tuple[str, str], list[Path]] = {}
    for p in alg.paths_A():
        table.setdefault((p.source, p.target), []).append(p)
    return table


def chain_basis(alg: SurfaceAlgebra, n: int, cap: int = DEFAULT_CAP) -> list[Chain]:
    if n < 0:
        raise ValueError("degree must be non-negative")
    between = _paths_between(alg)
    positive_from: dict[str, list[Path]] = {}
    for p in alg.paths_A():
        if p.arrows:
            positive_from.setdefault(p.source, []).append(p)

    out: list[Chain] = []
    if n == 0:
        for (s, t), paths in between.items():
            if s == t:
                out.extend((p,) for p in paths)
        out.sort()
        if len(out) > cap:
            raise OracleTooLarge(f"C_0 has {len(out)} basis tuples (cap {cap})")
        return out

    def extend(prefix: list[Path]):
        if len(prefix) == n:
            for p0 in between.get((prefix[-1].target, prefix[0].source), ()):
                out.append((p0, *prefix))
                if len(out) > cap:
                    raise OracleTooLarge(f"C_{n} exceeds {cap} basis tuples")
            return
        for p in positive_from.get(prefix[-1].target, ()):
            prefix.append(p)
            extend(prefix)
            prefix.pop()

    for first in alg.paths_A():
        if first.arrows:
            extend([first])
    out.sort()
    return out


def boundary_matrix(alg: SurfaceAlgebra, n: int, source: list[Chain],
                    target: list[Chain]) -> BoundaryMatrix:
    """Matrix of d_n : C_n -> C_{n-1} (one sparse column per source tuple).

    d(p_0,...,p_n) = sum_{i<n} (-1)^i (.., p_i p_{i+1}, ..) + (-1)^n (p_n p_0, p_1, .., p_{n-1})
    """
    if n < 1:
        raise ValueError("d_n is defined for n >= 1")
    index = {c: i for i, c in enumerate(target)}
    cols = []
    for chain in source:
        col: dict[int, int] = {}

        def add(t, coeff):
            j = index[t]
            v = col.get(j, 0) + coeff
            if v:
                col[j] = v
            else:
                col.pop(j, None)

        for i in range(n):
            prod = alg.multiply(chain[i], chain[i + 1], Tag.A)
            if prod is not None:
                add(chain[:i] + (prod,) + chain[i + 2:], -1 if i % 2 else 1)
        prod = alg.multiply(chain[n], chain[0], Tag.A)
        if prod is not None:
            add((prod,) + chain[1:n], -1 if n % 2 else 1)
        cols.append(col)
    return BoundaryMatrix(n, len(target), tuple(cols))


class HochschildComplex:
    """Lazily built chain groups and differentials of one algebra."""

    def __init__(self, alg: SurfaceAlgebra, cap: int = DEFAULT_CAP):
        self.alg = alg
        self.cap = cap
        self._basis: dict[int, list[Chain]] = {}
        self._d: dict[int, BoundaryMatrix] = {}
        self._rank: dict[int, int] = {}

    def basis(self, n: int) -> list[Chain]:
        if n not in self._basis:
            self._basis[n] = chain_basis(self.alg, n, self.cap)
        return self._basis[n]

    def d(self, n: int) -> BoundaryMatrix:
        if n not in self._d:
            self._d[n] = boundary_matrix(self.alg, n, self.basis(n), self.basis(n - 1))
        return self._d[n]

    def rank_d(self, n: int) -> int:
        if n == 0:
            return 0
        if n not in self._rank:
            self._rank[n] = self.d(n).rank
        return self._rank[n]

    def hh_dim(self, n: int) -> int:
        kernel = len(self.basis(n)) - self.rank_d(n)
        return kernel - self.rank_d(n + 1)

    def dd_is_zero(self, n: int) -> bool:
        """d_{n-1} o d_n == 0 exactly (n >= 2)."""
        composed = linalg.compose(list(self.d(n - 1).columns), list(self.d(n).columns))
        return not any(composed)


def hh_dim_bar(alg: SurfaceAlgebra, n: int, cap: int = DEFAULT_CAP) -> int:
    return HochschildComplex(alg, cap).hh_dim(n)
