"""The quiver of a triangulation, its quadratic monomial algebra A and the
Koszul dual A^!.

Both algebras have the paths of the quiver as spanning set.  In A a path is
zero as soon as two consecutive arrows form a relation; in A^! it is zero as
soon as two consecutive arrows do NOT form a relation.  Consequently the
graded pieces of both algebras have bases consisting of paths, and products of
basis paths are basis paths or zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterator

from .surface import Triangulation, internal_triangles, natural_key


class Tag(Enum):
    """Which algebra a path is read in."""

    A = "A"
    KOSZUL = "A!"


class NotFiniteDimensional(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str
    triangle: int


@dataclass(frozen=True, order=True)
class Path:
    """A path of the quiver; ``arrows == ()`` is the idempotent at ``source``."""

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    @classmethod
    def idempotent(cls, vertex: str) -> Path:
        return cls(vertex, vertex, ())

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_cycle(self) -> bool:
        return self.source == self.target

    def __str__(self) -> str:
        if not self.arrows:
            return f"e[{self.source}]"
        return "*".join(self.arrows)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    @cached_property
    def arrow(self) -> dict[str, Arrow]:
        return {a.id: a for a in self.arrows}

    @cached_property
    def out_arrows(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out[a.source].append(a)
        return {v: tuple(lst) for v, lst in out.items()}

    def path(self, *arrow_ids: str) -> Path:
        """Build a path from arrow ids, checking composability."""
        if not arrow_ids:
            raise ValueError("use Path.idempotent for length-0 paths")
        arrows = [self.arrow[i] for i in arrow_ids]
        for x, y in zip(arrows, arrows[1:]):
            if x.target != y.source:
                raise ValueError(f"arrows {x.id} and {y.id} are not composable")
        return Path(arrows[0].source, arrows[-1].target, tuple(arrow_ids))

    def arrows_between(self, source: str, target: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == source and a.target == target]


RelationSet = frozenset  # of (arrow id, arrow id) pairs


def build_quiver(T: Triangulation) -> Quiver:
    """One vertex per arc; one arrow i -> j for each triangle in which arc j
    follows arc i counter-clockwise."""
    arrows = []
    for t, tri in enumerate(T.triangles):
        edges = tri.edges
        for k in range(3):
            i, j = edges[k], edges[(k + 1) % 3]
            if T.is_arc(i) and T.is_arc(j):
                arrows.append(Arrow(f"{t}/{i}->{j}", i, j, t))
    return Quiver(tuple(sorted(T.arcs, key=natural_key)), tuple(arrows))


def relation_set(T: Triangulation, Q: Quiver) -> frozenset[tuple[str, str]]:
    """The three length-2 subpaths of the 3-cycle of every internal triangle."""
    rels = set()
    for t in internal_triangles(T):
        cycle = [a for a in Q.arrows if a.triangle == t]
        assert len(cycle) == 3
        for a in cycle:
            for b in cycle:
                if a.target == b.source:
                    rels.add((a.id, b.id))
    return frozenset(rels)


def _admissible(pair: tuple[str, str], tag: Tag, R) -> bool:
    return (pair not in R) if tag is Tag.A else (pair in R)


def _sort_key(Q: Quiver):
    vpos = {v: i for i, v in enumerate(Q.vertices)}
    apos = {a.id: i for i, a in enumerate(Q.arrows)}
    return lambda p: (len(p), vpos[p.source], tuple(apos[a] for a in p.arrows))


def basis_A(Q: Quiver, R, guard: int | None = None) -> dict[int, list[Path]]:
    """All nonzero paths of A = kQ/<R>, grouped by length.

    Raises NotFiniteDimensional if a nonzero path longer than ``guard``
    exists (default: the number of arrows, which bounds the length of any
    nonzero path in a finite dimensional monomial algebra).
    """
    if guard is None:
        guard = len(Q.arrows)
    by_degree: dict[int, list[Path]] = {0: [Path.idempotent(v) for v in Q.vertices]}
    stack = [Q.path(a.id) for a in Q.arrows]
    while stack:
        p = stack.pop()
        if len(p) > guard:
            raise NotFiniteDimensional(
                f"nonzero path of length {len(p)} exceeds guard {guard}: {p}")
        by_degree.setdefault(len(p), []).append(p)
        for a in Q.out_arrows[p.target]:
            if (p.arrows[-1], a.id) not in R:
                stack.append(Path(p.source, a.target, p.arrows + (a.id,)))
    key = _sort_key(Q)
    return {n: sorted(paths, key=key) for n, paths in sorted(by_degree.items())}


def basis_koszul(Q: Quiver, R, n: int) -> list[Path]:
    """Basis of the degree-n piece of A^! = kQ/<length-2 paths not in R>."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n == 0:
        return [Path.idempotent(v) for v in Q.vertices]
    level = [Q.path(a.id) for a in Q.arrows]
    for _ in range(n - 1):
        level = [Path(p.source, a.target, p.arrows + (a.id,))
                 for p in level for a in Q.out_arrows[p.target]
                 if (p.arrows[-1], a.id) in R]
    return sorted(level, key=_sort_key(Q))


def multiply(p: Path, q: Path, tag: Tag, R) -> Path | None:
    """Product pq in A (tag A) or A^! (tag KOSZUL); None stands for zero."""
    if p.target != q.source:
        return None
    if not p.arrows:
        return q
    if not q.arrows:
        return p
    arrows = p.arrows + q.arrows
    if not all(_admissible(pair, tag, R) for pair in zip(arrows, arrows[1:])):
        return None
    return Path(p.source, q.target, arrows)


def homological_degree(p: Path, tag: Tag) -> int:
    return 0 if tag is Tag.A else len(p)


@dataclass
class SurfaceAlgebra:
    """The pair (A_T, A_T^!) of a triangulation, with cached bases."""

    quiver: Quiver
    relations: frozenset
    internal_triangle_count: int = 0
    _koszul: dict[int, list[Path]] = field(default_factory=dict, repr=False)

    @classmethod
    def from_triangulation(cls, T: Triangulation) -> SurfaceAlgebra:
        Q = build_quiver(T)
        return cls(Q, relation_set(T, Q), len(internal_triangles(T)))

    @property
    def vertex_count(self) -> int:
        return len(self.quiver.vertices)

    @cached_property
    def basis_A(self) -> dict[int, list[Path]]:
        return basis_A(self.quiver, self.relations)

    @property
    def max_degree_A(self) -> int:
        return max(self.basis_A)

    def basis(self, tag: Tag, n: int) -> list[Path]:
        if tag is Tag.A:
            return self.basis_A.get(n, [])
        if n not in self._koszul:
            self._koszul[n] = basis_koszul(self.quiver, self.relations, n)
        return self._koszul[n]

    def multiply(self, p: Path, q: Path, tag: Tag) -> Path | None:
        return multiply(p, q, tag, self.relations)

    def paths_A(self) -> Iterator[Path]:
        for paths in self.basis_A.values():
            yield from paths
