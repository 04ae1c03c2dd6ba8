"""Combinatorial triangulated surfaces without punctures.

A triangulation is a list of triangles, each given by its three sides in
counter-clockwise order.  A side is an edge (arc or boundary segment) together
with the direction in which the triangle traverses it.  Two triangles sharing
an arc must traverse it in opposite directions; that is what makes the glued
surface oriented.

Marked points are never given explicitly: they are the classes of triangle
corners identified by the gluing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class EdgeKind(Enum):
    ARC = "arc"
    BOUNDARY = "boundary"


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class TopologyError(RuntimeError):
    """Corner orbits do not describe a surface (should not happen on valid input)."""


class FlipError(ValueError):
    pass


@dataclass(frozen=True)
class Side:
    edge: str
    forward: bool = True

    def reversed(self) -> Side:
        return Side(self.edge, not self.forward)

    def __str__(self) -> str:
        return f"{self.edge}{'+' if self.forward else '-'}"


@dataclass(frozen=True)
class Triangle:
    sides: tuple[Side, Side, Side]

    @property
    def edges(self) -> tuple[str, str, str]:
        return tuple(s.edge for s in self.sides)

    def rotated(self, k: int) -> Triangle:
        k %= 3
        return Triangle(self.sides[k:] + self.sides[:k])

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.sides)


@dataclass(frozen=True)
class Triangulation:
    arcs: frozenset[str]
    boundaries: frozenset[str]
    triangles: tuple[Triangle, ...]

    def kind(self, name: str) -> EdgeKind:
        if name in self.arcs:
            return EdgeKind.ARC
        if name in self.boundaries:
            return EdgeKind.BOUNDARY
        raise KeyError(name)

    def is_arc(self, name: str) -> bool:
        return name in self.arcs

    @property
    def edge_names(self) -> frozenset[str]:
        return self.arcs | self.boundaries


@dataclass(frozen=True)
class TopologySummary:
    genus: int
    boundary_components: int
    marked_points: int
    euler_characteristic: int


_NAME = re.compile(r"[A-Za-z0-9_']+\Z")
_SIDE = re.compile(r"([A-Za-z0-9_']+)([+-])\Z")


def natural_key(name: str):
    """Sort key comparing digit runs numerically, so t2 < t10."""
    return [(0, int(tok), "") if tok.isdigit() else (1, 0, tok)
            for tok in re.findall(r"\d+|\D+", name)]


def parse_triangulation(text: str) -> Triangulation:
    """Parse the line-oriented triangulation format.

    Only syntax and name resolution are checked here; gluing rules are the
    business of :func:`validate`.
    """
    arcs: set[str] = set()
    boundaries: set[str] = set()
    triangles: list[Triangle] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()
        if keyword in ("arc", "boundary"):
            if len(args) != 1:
                raise ParseError(f"'{keyword}' takes exactly one name, got {len(args)}", lineno)
            name = args[0]
            if not _NAME.match(name):
                raise ParseError(f"invalid edge name {name!r}", lineno)
            if name in arcs or name in boundaries:
                raise ParseError(f"duplicate edge name {name!r}", lineno)
            (arcs if keyword == "arc" else boundaries).add(name)
        elif keyword == "triangle":
            if len(args) != 3:
                raise ParseError(f"'triangle' takes exactly three sides, got {len(args)}", lineno)
            sides = []
            for tok in args:
                m = _SIDE.match(tok)
                if not m:
                    raise ParseError(f"malformed side {tok!r} (expected <name>+ or <name>-)", lineno)
                name, sign = m.groups()
                if name not in arcs and name not in boundaries:
                    raise ParseError(f"triangle references undeclared edge {name!r}", lineno)
                sides.append(Side(name, sign == "+"))
            triangles.append(Triangle(tuple(sides)))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno)
    return Triangulation(frozenset(arcs), frozenset(boundaries), tuple(triangles))


def format_triangulation(T: Triangulation) -> str:
    lines = [f"arc {a}" for a in sorted(T.arcs, key=natural_key)]
    lines += [f"boundary {b}" for b in sorted(T.boundaries, key=natural_key)]
    lines += [f"triangle {t}" for t in T.triangles]
    return "\n".join(lines) + "\n"


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def classes(self):
        out = {}
        for x in list(self.parent):
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def _corner_classes(T: Triangulation) -> tuple[_UnionFind, list]:
    # Side k of a triangle runs from corner k to corner k+1.
    uf = _UnionFind()
    for i, tri in enumerate(T.triangles):
        for k, side in enumerate(tri.sides):
            start, end = ("tri", i, k), ("tri", i, (k + 1) % 3)
            tail, head = ("edge", side.edge, 0), ("edge", side.edge, 1)
            if not side.forward:
                tail, head = head, tail
            uf.union(start, tail)
            uf.union(end, head)
    points = [c for c in uf.classes() if any(x[0] == "tri" for x in c)]
    return uf, points


def _raw_topology(T: Triangulation):
    """(c, b, chi, bad_points) from corner orbits; bad_points lists marked
    points whose boundary incidence is not exactly two segment ends."""
    uf, points = _corner_classes(T)
    c = len(points)
    chi = c - len(T.arcs) - len(T.boundaries) + len(T.triangles)
    incidence: dict = {}
    bd = _UnionFind()
    for b in T.boundaries:
        p, q = uf.find(("edge", b, 0)), uf.find(("edge", b, 1))
        incidence[p] = incidence.get(p, 0) + 1
        incidence[q] = incidence.get(q, 0) + 1
        bd.union(p, q)
    roots = {uf.find(x[0]) for x in points}
    bad = [r for r in roots if incidence.get(r, 0) != 2]
    components = len({bd.find(r) for r in roots if r in incidence})
    return c, components, chi, bad


def validate(T: Triangulation) -> list[str]:
    """Return the list of violated invariants; empty means valid."""
    violations: list[str] = []
    if not T.triangles:
        violations.append("no triangles")
    if not T.boundaries:
        violations.append("no boundary segments (surface must have boundary)")

    uses: dict[str, list[tuple[int, bool]]] = {e: [] for e in T.edge_names}
    for i, tri in enumerate(T.triangles):
        if len(set(tri.edges)) != 3:
            violations.append(f"self-folded triangle {i} ({tri})")
        for side in tri.sides:
            uses[side.edge].append((i, side.forward))

    for a in sorted(T.arcs, key=natural_key):
        occ = uses[a]
        if len(occ) != 2:
            violations.append(f"arc multiplicity: {a} is a side of {len(occ)} triangles (expected 2)")
        elif occ[0][1] == occ[1][1]:
            violations.append(f"non-orientable gluing on {a}")
    for b in sorted(T.boundaries, key=natural_key):
        if len(uses[b]) != 1:
            violations.append(
                f"boundary multiplicity: {b} is a side of {len(uses[b])} triangles (expected 1)")

    if T.triangles:
        adj = _UnionFind()
        for i in range(len(T.triangles)):
            adj.find(i)
        for occ in uses.values():
            for (i, _), (j, _) in zip(occ, occ[1:]):
                adj.union(i, j)
        if len(adj.classes()) > 1:
            violations.append("surface is not connected")

    if violations:
        return violations

    c, b, chi, bad = _raw_topology(T)
    if bad:
        violations.append(f"{len(bad)} marked point(s) not on exactly one boundary arc pair "
                          "(puncture or pinched point)")
        return violations
    twice_genus = 2 - b - chi
    if twice_genus < 0 or twice_genus % 2:
        violations.append(f"inconsistent Euler characteristic {chi} for {b} boundary components")
        return violations
    g = twice_genus // 2
    expected = 6 * g + 3 * b + c - 6
    if len(T.arcs) != expected:
        violations.append(
            f"arc count {len(T.arcs)} != 6g+3b+c-6 = {expected} (g={g}, b={b}, c={c}); "
            "triangulation is not maximal")
    return violations


def topology(T: Triangulation) -> TopologySummary:
    c, b, chi, bad = _raw_topology(T)
    twice_genus = 2 - b - chi
    if bad or b < 1 or twice_genus < 0 or twice_genus % 2:
        raise TopologyError(f"corner orbits inconsistent: c={c}, b={b}, chi={chi}")
    return TopologySummary(genus=twice_genus // 2, boundary_components=b,
                           marked_points=c, euler_characteristic=chi)


def internal_triangles(T: Triangulation) -> list[int]:
    return [i for i, tri in enumerate(T.triangles) if all(T.is_arc(e) for e in tri.edges)]


def _fresh_name(T: Triangulation, name: str) -> str:
    new = name + "'"
    while new in T.edge_names:
        new += "'"
    return new


def flip(T: Triangulation, arc: str) -> Triangulation:
    """Replace ``arc`` by the other diagonal of the quadrilateral formed by its
    two triangles.  The new arc is named ``arc'`` (more primes on collision)."""
    if arc not in T.edge_names:
        raise FlipError(f"unknown edge {arc!r}")
    if not T.is_arc(arc):
        raise FlipError(f"{arc!r} is a boundary segment and cannot be flipped")
    where = [i for i, tri in enumerate(T.triangles) if arc in tri.edges]
    if len(where) != 2:
        raise FlipError(f"arc {arc!r} is not shared by two distinct triangles")
    i, j = where
    t1 = T.triangles[i].rotated(T.triangles[i].edges.index(arc))
    t2 = T.triangles[j].rotated(T.triangles[j].edges.index(arc))
    # t1 = (arc, a, b) and t2 = (arc reversed, c, d); the quadrilateral reads a b c d ccw.
    _, a, b = t1.sides
    _, c, d = t2.sides
    new = _fresh_name(T, arc)
    triangles = list(T.triangles)
    triangles[i] = Triangle((a, Side(new, True), d))
    triangles[j] = Triangle((b, c, Side(new, False)))
    out = Triangulation(T.arcs - {arc} | {new}, T.boundaries, tuple(triangles))
    problems = validate(out)
    if problems:
        raise FlipError(f"flip of {arc!r} produced an invalid triangulation: {problems}")
    return out


def rename(T: Triangulation, mapping: dict[str, str]) -> Triangulation:
    def r(name):
        return mapping.get(name, name)

    return Triangulation(
        frozenset(map(r, T.arcs)), frozenset(map(r, T.boundaries)),
        tuple(Triangle(tuple(Side(r(s.edge), s.forward) for s in tri.sides))
              for tri in T.triangles))


def isomorphism(S: Triangulation, T: Triangulation,
                fixed: dict[str, str] | None = None) -> dict[str, str] | None:
    """Find an orientation-preserving isomorphism S -> T.

    Returns the edge map, or None.  Triangles may be permuted and rotated and
    any edge may have its direction reversed (that is only a change of
    bookkeeping).  ``fixed`` pins some edge images, e.g. the identity on every
    name to test equality up to reordering.
    """
    if (len(S.arcs), len(S.boundaries), len(S.triangles)) != \
            (len(T.arcs), len(T.boundaries), len(T.triangles)):
        return None
    fixed = dict(fixed or {})
    for src, dst in fixed.items():
        if src not in S.edge_names or dst not in T.edge_names or S.kind(src) != T.kind(dst):
            return None

    n = len(S.triangles)
    edge_map: dict[str, str] = {}
    flip_sign: dict[str, bool] = {}
    used_edges: set[str] = set()
    used_tris = [False] * n

    def assign(trial, s_tri: Triangle, t_tri: Triangle) -> bool:
        for s_side, t_side in zip(s_tri.sides, t_tri.sides):
            e, f = s_side.edge, t_side.edge
            if S.kind(e) != T.kind(f):
                return False
            if e in fixed and fixed[e] != f:
                return False
            sign = s_side.forward != t_side.forward
            if e in edge_map:
                if edge_map[e] != f or flip_sign[e] != sign:
                    return False
            else:
                if f in used_edges:
                    return False
                edge_map[e] = f
                flip_sign[e] = sign
                used_edges.add(f)
                trial.append(e)
        return True

    def undo(trial):
        for e in trial:
            used_edges.discard(edge_map.pop(e))
            del flip_sign[e]

    def search(k: int) -> bool:
        if k == n:
            return True
        s_tri = S.triangles[k]
        for j, t_tri in enumerate(T.triangles):
            if used_tris[j]:
                continue
            for r in range(3):
                trial: list[str] = []
                if assign(trial, s_tri, t_tri.rotated(r)):
                    used_tris[j] = True
                    if search(k + 1):
                        return True
                    used_tris[j] = False
                undo(trial)
        return False

    return dict(edge_map) if search(0) else None


def isomorphic(S: Triangulation, T: Triangulation,
               fixed: dict[str, str] | None = None) -> bool:
    return isomorphism(S, T, fixed) is not None


def load(path) -> Triangulation:
    with open(path, encoding="utf-8") as fh:
        return parse_triangulation(fh.read())
