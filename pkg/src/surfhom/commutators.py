"""Graded commutator spaces [A, A] and [A^!, A^!], degree by degree.

The degree-n piece of the commutator space is spanned by the commutators of
basis paths whose lengths add up to n.  Its dimension is the exact rank of
those commutators written in the path basis of the degree-n piece.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from . import linalg
from .quiver import Path, Quiver, SurfaceAlgebra, Tag, homological_degree

Element = Mapping[Path, Union[int, Fraction]]


@dataclass(frozen=True)
class GradedVector:
    degree: int
    coords: dict[int, int | Fraction]


@dataclass(frozen=True)
class CommutatorSpan:
    tag: Tag
    degree: int
    ambient_dim: int
    generators: tuple[GradedVector, ...]
    rank: int


def _as_element(x: Path | Element) -> Element:
    return {x: 1} if isinstance(x, Path) else x


def graded_commutator(alg: SurfaceAlgebra, x: Path | Element, y: Path | Element,
                      tag: Tag) -> dict[Path, int | Fraction]:
    """[x, y] = xy - (-1)^(homdeg x * homdeg y) yx, extended bilinearly.

    Signs are taken termwise, so mixed-degree combinations are handled as
    sums of commutators of their homogeneous components.
    """
    out: dict[Path, int | Fraction] = {}

    def add(p, c):
        v = out.get(p, 0) + c
        if v:
            out[p] = v
        else:
            out.pop(p, None)

    for p, cp in _as_element(x).items():
        for q, cq in _as_element(y).items():
            sign = -1 if homological_degree(p, tag) * homological_degree(q, tag) % 2 else 1
            pq = alg.multiply(p, q, tag)
            if pq is not None:
                add(pq, cp * cq)
            qp = alg.multiply(q, p, tag)
            if qp is not None:
                add(qp, -sign * cp * cq)
    return out


def commutator_span(alg: SurfaceAlgebra, tag: Tag, n: int) -> CommutatorSpan:
    if n < 0:
        raise ValueError("degree must be non-negative")
    ambient = alg.basis(tag, n)
    index = {p: i for i, p in enumerate(ambient)}
    gens = []
    for k in range(n + 1):
        left, right = alg.basis(tag, k), alg.basis(tag, n - k)
        if not left or not right:
            continue
        for p in left:
            for q in right:
                # [p, q] only involves pq and qp; skip pairs where both vanish.
                if p.target != q.source and q.target != p.source:
                    continue
                c = graded_commutator(alg, p, q, tag)
                if c:
                    gens.append(GradedVector(n, {index[r]: v for r, v in c.items()}))
    r = linalg.rank(g.coords for g in gens)
    return CommutatorSpan(tag, n, len(ambient), tuple(gens), r)


def quotient_dim(alg: SurfaceAlgebra, tag: Tag, n: int) -> int:
    """dim of the degree-n piece of the algebra modulo its commutators."""
    span = commutator_span(alg, tag, n)
    return span.ambient_dim - span.rank


def rotate(Q: Quiver, p: Path) -> Path:
    """g . (a_1 ... a_n) = a_n a_1 ... a_{n-1} for a cycle of positive length."""
    if not p.is_cycle or not p.arrows:
        raise ValueError(f"{p} is not a cycle of positive length")
    arrows = (p.arrows[-1],) + p.arrows[:-1]
    start = Q.arrow[arrows[0]].source
    return Path(start, start, arrows)


def cyclic_orbits(Q: Quiver, paths: list[Path]) -> list[tuple[Path, ...]]:
    """Partition cycles of one length into orbits under rotation.

    Orbits are listed in order of first appearance; within an orbit the
    paths are g^0 p, g^1 p, ... for its first member p.
    """
    for p in paths:
        if not p.is_cycle or not p.arrows:
            raise ValueError(f"{p} is not a cycle of positive length")
    members = set(paths)
    seen: set[Path] = set()
    orbits = []
    for p in paths:
        if p in seen:
            continue
        orbit = [p]
        q = rotate(Q, p)
        while q != p:
            orbit.append(q)
            q = rotate(Q, q)
        if not members.issuperset(orbit):
            raise ValueError(f"path set is not closed under rotation (orbit of {p})")
        seen.update(orbit)
        orbits.append(tuple(orbit))
    return orbits
