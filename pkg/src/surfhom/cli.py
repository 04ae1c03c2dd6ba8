"""surfhom command line.

Exit codes: 0 success, 1 invalid input or failed check, 2 usage error,
3 chain-complex oracle exceeded its size cap.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import surface
from .bar import DEFAULT_CAP
from .homology import HomologyTable, compute_table, table_differences
from .quiver import SurfaceAlgebra

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_ORACLE = 0, 1, 2, 3
DEFAULT_MAX_N = 14

COLUMNS = (("hh", "HH"), ("hc", "HC"), ("hc_co", "HC^"))


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fmt(v) -> str:
    return "-" if v is None else str(v)


def render_table(tables: HomologyTable | Sequence[HomologyTable], fmt: str = "pretty",
                 footer: Sequence[str] = ()) -> str:
    """Render one table, or several side by side (pretty only).

    tsv has the fixed header ``n HH HC HCco`` and takes the first table.
    """
    if isinstance(tables, HomologyTable):
        tables = [tables]
    if fmt == "tsv":
        t = tables[0]
        lines = ["n\tHH\tHC\tHCco"]
        lines += ["\t".join([str(n)] + [_fmt(v) for v in t.row(n)]) for n in range(t.max_n + 1)]
        return "\n".join(lines) + "\n"
    if fmt != "pretty":
        raise ValueError(f"unknown format {fmt!r}")

    many = len(tables) > 1
    headers = ["n"]
    cols = [[str(n) for n in range(tables[0].max_n + 1)]]
    for t in tables:
        for attr, label in COLUMNS:
            headers.append(f"{label}[{t.method}]" if many else label)
            cols.append([_fmt(v) for v in getattr(t, attr)])
    widths = [max(len(h), *(len(x) for x in col)) for h, col in zip(headers, cols)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in zip(*cols):
        lines.append("  ".join(x.rjust(w) for x, w in zip(row, widths)))
    lines += list(footer)
    return "\n".join(lines) + "\n"


def _load(path: str) -> surface.Triangulation:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _Fail(EXIT_USAGE, f"{path}: {exc.strerror}")
    try:
        return surface.parse_triangulation(text)
    except surface.ParseError as exc:
        raise _Fail(EXIT_INVALID, f"{path}: {exc}")


def _load_valid(path: str) -> surface.Triangulation:
    T = _load(path)
    problems = surface.validate(T)
    if problems:
        raise _Fail(EXIT_INVALID, "\n".join(f"{path}: {p}" for p in problems))
    return T


def cmd_validate(args, out: TextIO) -> int:
    T = _load(args.file)
    problems = surface.validate(T)
    for p in problems:
        out.write(f"violation: {p}\n")
    if problems:
        return EXIT_INVALID
    out.write("valid\n")
    return EXIT_OK


def cmd_topology(args, out: TextIO) -> int:
    T = _load_valid(args.file)
    top = surface.topology(T)
    rows = [
        ("genus", top.genus),
        ("boundary_components", top.boundary_components),
        ("marked_points", top.marked_points),
        ("euler_characteristic", top.euler_characteristic),
        ("arcs", len(T.arcs)),
        ("boundary_segments", len(T.boundaries)),
        ("triangles", len(T.triangles)),
        ("internal_triangles", len(surface.internal_triangles(T))),
    ]
    out.writelines(f"{k} {v}\n" for k, v in rows)
    return EXIT_OK


def cmd_quiver(args, out: TextIO) -> int:
    alg = SurfaceAlgebra.from_triangulation(_load_valid(args.file))
    Q = alg.quiver
    out.writelines(f"vertex {v}\n" for v in Q.vertices)
    out.writelines(f"arrow {a.id} {a.source} {a.target}\n" for a in Q.arrows)
    order = {a.id: i for i, a in enumerate(Q.arrows)}
    for x, y in sorted(alg.relations, key=lambda r: (order[r[0]], order[r[1]])):
        out.write(f"relation {x} {y}\n")
    return EXIT_OK


def _summary_footer(alg: SurfaceAlgebra) -> list[str]:
    return [f"|Q_0| = {alg.vertex_count}", f"|int(T)| = {alg.internal_triangle_count}"]


def cmd_dims(args, out: TextIO, err: TextIO) -> int:
    alg = SurfaceAlgebra.from_triangulation(_load_valid(args.file))
    methods = ["closed", "skoldberg"] if args.method == "both" else [args.method]
    tables = [compute_table(alg, args.max_n, m, args.oracle_cap) for m in methods]
    footer = _summary_footer(alg)
    code = EXIT_OK
    if args.method == "both":
        diff = table_differences(*tables)
        if any(diff.values()):
            detail = "; ".join(f"{label} at n={','.join(map(str, diff[attr]))}"
                               for attr, label in COLUMNS if diff[attr])
            footer.append(f"methods agree: no ({detail})")
            err.write(f"methods disagree: {detail}\n")
            code = EXIT_INVALID
        else:
            footer.append("methods agree: yes")
    if args.method == "oracle" and None in tables[0].hh:
        first = tables[0].hh.index(None)
        err.write(f"oracle too large from n={first} on (cap {args.oracle_cap}); "
                  "those degrees are not checked\n")
        code = EXIT_ORACLE
    if args.format == "tsv":
        out.write(render_table(tables[0], "tsv"))
    else:
        out.write(render_table(tables, "pretty", footer))
    return code


def cmd_flip(args, out: TextIO) -> int:
    T = _load_valid(args.file)
    try:
        F = surface.flip(T, args.arc)
    except surface.FlipError as exc:
        raise _Fail(EXIT_USAGE, str(exc))
    text = surface.format_triangulation(F)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_compare(args, out: TextIO) -> int:
    a = SurfaceAlgebra.from_triangulation(_load_valid(args.file_a))
    b = SurfaceAlgebra.from_triangulation(_load_valid(args.file_b))
    ta = compute_table(a, args.max_n, "closed")
    tb = compute_table(b, args.max_n, "closed")
    diff = table_differences(ta, tb)
    for attr, label in COLUMNS:
        degrees = " ".join(map(str, diff[attr])) or "none"
        out.write(f"{label} differs at n: {degrees}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="surfhom",
        description="Hochschild and cyclic homology of algebras from triangulated surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check gluing and maximality")
    s.add_argument("file")
    s = sub.add_parser("topology", help="genus, boundary components, marked points")
    s.add_argument("file")
    s = sub.add_parser("quiver", help="dump the quiver and relations")
    s.add_argument("file")

    s = sub.add_parser("dims", help="table of dim HH_n, HC_n, HC^n")
    s.add_argument("file")
    s.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    s.add_argument("--method", choices=["closed", "skoldberg", "oracle", "both"], default="closed")
    s.add_argument("--format", choices=["pretty", "tsv"], default="pretty")
    s.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)

    s = sub.add_parser("flip", help="flip one arc and print the new triangulation")
    s.add_argument("file")
    s.add_argument("--arc", required=True)
    s.add_argument("-o", "--output")

    s = sub.add_parser("compare", help="degrees where two tables differ")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "max_n", 0) < 0:
        err.write("surfhom: --max-n must be non-negative\n")
        return EXIT_USAGE
    if getattr(args, "oracle_cap", 1) < 1:
        err.write("surfhom: --oracle-cap must be positive\n")
        return EXIT_USAGE
    handlers = {
        "validate": lambda: cmd_validate(args, out),
        "topology": lambda: cmd_topology(args, out),
        "quiver": lambda: cmd_quiver(args, out),
        "dims": lambda: cmd_dims(args, out, err),
        "flip": lambda: cmd_flip(args, out),
        "compare": lambda: cmd_compare(args, out),
    }
    try:
        return handlers[args.command]()
    except _Fail as exc:
        err.write(f"{exc}\n")
        return exc.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
