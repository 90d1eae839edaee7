"""Command-line front end.

Subcommands:
  analyze D [--vector B,C] [--json] [--dot]   modulus report, optional vector query
  points D [--json]                           catalog of the projective line
  verify LO..HI [--matrix] [--json]           formula-vs-enumeration sweeps
  layers-dot D                                Graphviz DOT layer diagram

All output goes to stdout, diagnostics to stderr.  Exit codes: 0 on success,
1 when a verification sweep finds a discrepancy, 2 on usage or budget errors.
Degree tuples are always reported with components in ascending-prime order;
the factor legend in every report makes the order explicit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import kernels
from .errors import BudgetExceededError, QuditlineError
from .line import (
    POINT_ENUMERATION_CAP,
    count_points_through,
    enumerate_points,
    line_cardinality,
    points_through,
    union_equals_perp,
    union_size,
)
from .pauli import PauliOp, center_size, commuting_count, group_order, layer_table
from .ring import Modulus, factorize
from .symplectic import Vec2, degree, is_admissible, perp_cardinality
from .verify import verify_range

SCHEMA_VERSION = 1
DOT_RENDER_CAP = 60


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _fmt_tuple(values) -> str:
    return "(" + ",".join(str(x) for x in values) + ")"


# --- analyze -----------------------------------------------------------------


def build_analysis(d: int, vector: tuple[int, int] | None, budget: int) -> dict[str, Any]:
    """Assemble the analysis document; the JSON and text renderers share it."""
    m = factorize(d)
    table = layer_table(m)
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "kind": "analysis",
        "d": d,
        "factors": [[p, e] for p, e in m.factors],
        "factor_legend": m.describe(),
        "squarefree": m.is_squarefree,
        "line_points": line_cardinality(m),
        "group_order": group_order(m),
        "center_size": center_size(m),
        "layers": [
            {
                "degree": list(row.degree.deltas),
                "delta_sum": row.degree.total,
                "vector_count": row.vector_count,
                "operator_count": row.operator_count,
                "pg_label": list(row.pg_label) if row.pg_label is not None else None,
            }
            for row in table
        ],
    }
    if vector is not None:
        v = Vec2(vector[0] % d, vector[1] % d, m)
        entry: dict[str, Any] = {
            "components": [v.b, v.c],
            "degree": list(degree(v).deltas),
            "delta_sum": degree(v).total,
            "admissible": is_admissible(v),
            "points_through": count_points_through(v),
            "perp_cardinality": perp_cardinality(v),
            "union_size": d * d if v.is_zero else union_size(v),
            "union_equals_perp": union_equals_perp(v),
            "commuting_operators": commuting_count(PauliOp(0, v.b, v.c, m)),
        }
        if line_cardinality(m) <= budget:
            catalog = enumerate_points(m, budget)
            entry["point_generators"] = [
                [pt.generator.b, pt.generator.c] for pt in points_through(v, catalog)
            ]
        doc["vector"] = entry
    return doc


def render_analysis(doc: dict[str, Any], out) -> None:
    print(f"modulus: Z_{doc['d']} ({doc['factor_legend']})", file=out)
    print(f"squarefree: {_yesno(doc['squarefree'])}", file=out)
    print(f"projective line points: {doc['line_points']}", file=out)
    print(
        f"group order: {doc['group_order']} (center {doc['center_size']})", file=out
    )
    legend = ", ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in doc["factors"])
    print(f"layers (degree components over {legend}):", file=out)
    for row in doc["layers"]:
        line = (
            f"  degree {_fmt_tuple(row['degree'])}  Delta {row['delta_sum']}"
            f"  vectors {row['vector_count']}  operators {row['operator_count']}"
        )
        if row["pg_label"] is not None:
            line += f"  pg {_fmt_tuple(row['pg_label'])}"
        print(line, file=out)
    if "vector" in doc:
        q = doc["vector"]
        print(f"vector {_fmt_tuple(q['components'])}:", file=out)
        print(
            f"  degree {_fmt_tuple(q['degree'])}  Delta {q['delta_sum']}"
            f"  admissible {_yesno(q['admissible'])}",
            file=out,
        )
        print(f"  points through: {q['points_through']}", file=out)
        if "point_generators" in q:
            gens = " ".join(_fmt_tuple(g) for g in q["point_generators"])
            print(f"  point generators: {gens}", file=out)
        print(f"  perp cardinality: {q['perp_cardinality']}", file=out)
        print(f"  union size: {q['union_size']}", file=out)
        print(f"  union equals perp: {_yesno(q['union_equals_perp'])}", file=out)
        print(f"  commuting operators: {q['commuting_operators']}", file=out)


# --- points ------------------------------------------------------------------


def build_points(d: int, budget: int) -> dict[str, Any]:
    m = factorize(d)
    catalog = enumerate_points(m, budget)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "points",
        "d": d,
        "factor_legend": m.describe(),
        "count": len(catalog),
        "points": [
            {
                "generator": [pt.generator.b, pt.generator.c],
                "component_generators": [list(g) for g in pt.component_generators()],
            }
            for pt in catalog
        ],
    }


def render_points(doc: dict[str, Any], out) -> None:
    print(
        f"{doc['count']} points on the projective line over Z_{doc['d']}"
        f" ({doc['factor_legend']})",
        file=out,
    )
    for pt in doc["points"]:
        comps = " ".join(_fmt_tuple(g) for g in pt["component_generators"])
        print(f"  {_fmt_tuple(pt['generator'])}  components: {comps}", file=out)


# --- verify ------------------------------------------------------------------


def build_verify(lo: int, hi: int, with_matrix: bool, budget: int) -> dict[str, Any]:
    summary = verify_range(lo, hi, include_matrix=with_matrix)
    totals = summary.totals()
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "kind": "verify",
        "lo": lo,
        "hi": hi,
        "ok": summary.ok,
        "moduli_checked": len(summary.reports),
        "checks": [
            {
                "name": t.name,
                "checked": t.checked,
                "failures": t.failures,
                "first_failure": t.first_failure,
            }
            for t in totals.values()
        ],
    }
    if with_matrix:
        doc["matrix"] = [
            {
                "d": r.matrix.d,
                "ok": r.matrix.ok,
                "pairs_checked": r.matrix.pairs_checked,
                "commuting_pairs": r.matrix.commuting_pairs,
                "max_deviation": r.matrix.max_deviation,
                "tolerance": r.matrix.tolerance,
                "first_failure": r.matrix.first_failure,
            }
            for r in summary.reports
            if r.matrix is not None
        ]
    return doc


def render_verify(doc: dict[str, Any], out) -> None:
    status = "all checks passed" if doc["ok"] else "DISCREPANCIES FOUND"
    print(f"verify {doc['lo']}..{doc['hi']}: {status}", file=out)
    for check in doc["checks"]:
        line = f"  {check['name']:<24} {check['checked']:>10} checked, {check['failures']} failures"
        print(line, file=out)
        if check["first_failure"]:
            print(f"    first: {check['first_failure']}", file=out)
    for entry in doc.get("matrix", []):
        line = (
            f"  matrix d={entry['d']}: {entry['pairs_checked']} pairs, "
            f"{entry['commuting_pairs']} commuting, "
            f"max deviation {entry['max_deviation']:.3e}"
        )
        if not entry["ok"]:
            line += f"  FAILED ({entry['first_failure']})"
        print(line, file=out)


# --- layers-dot --------------------------------------------------------------


def build_dot(d: int, cap: int) -> str:
    """DOT document: one node per vector, one path per free cyclic submodule."""
    if d > cap:
        raise BudgetExceededError("layer-diagram rendering", d, cap)
    m = factorize(d)
    catalog = enumerate_points(m)
    counts, _ = kernels.union_sweep(d, catalog.generators())
    lines = [f"graph layers_d{d} {{"]
    lines.append(
        f"  // modulus {m.describe()}; nodes are vectors (b,c) of Z_{d}^2;"
        " each edge path traces one free cyclic submodule"
    )
    lines.append("  node [shape=circle];")
    for b in range(d):
        for c in range(d):
            v = Vec2(b, c, m)
            deg = degree(v)
            lines.append(
                f'  "{b}_{c}" [degree="{deg}" delta="{deg.total}"'
                f' points="{counts[b * d + c]}"];'
            )
    for pt in catalog:
        gb, gc = pt.generator.pair
        tag = f"{gb}_{gc}"
        lines.append(f"  // submodule generated by ({gb},{gc})")
        for u in range(d - 1):
            x1, y1 = (u * gb) % d, (u * gc) % d
            x2, y2 = ((u + 1) * gb) % d, ((u + 1) * gc) % d
            lines.append(f'  "{x1}_{y1}" -- "{x2}_{y2}" [submodule="{tag}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- argument plumbing -------------------------------------------------------


def _parse_vector(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected B,C with two integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected B,C with two integers, got {text!r}") from exc


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            bounds = int(lo), int(hi)
        else:
            bounds = int(lo), int(lo)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected D or LO..HI, got {text!r}") from exc
    if bounds[0] < 2 or bounds[1] < bounds[0]:
        raise argparse.ArgumentTypeError(
            f"range must satisfy 2 <= LO <= HI, got {text!r}"
        )
    return bounds


def _parse_modulus(text: str) -> int:
    try:
        d = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"modulus must be an integer, got {text!r}") from exc
    if d < 2:
        raise argparse.ArgumentTypeError(f"modulus must be >= 2, got {d}")
    return d


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quditline",
        description="Commutation structure of one qudit via the projective line over Z_d.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="layer report for one modulus, optional vector query")
    p.add_argument("d", type=_parse_modulus)
    p.add_argument("--vector", type=_parse_vector, metavar="B,C")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", action="store_true", help="emit the layer diagram instead of a report")
    p.add_argument("--budget", type=int, default=POINT_ENUMERATION_CAP, metavar="N")

    p = sub.add_parser("points", help="enumerate the projective line")
    p.add_argument("d", type=_parse_modulus)
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=int, default=POINT_ENUMERATION_CAP, metavar="N")

    p = sub.add_parser("verify", help="run formula-vs-enumeration sweeps")
    p.add_argument("range", type=_parse_range, metavar="D|LO..HI")
    p.add_argument("--matrix", action="store_true", help="include the numeric matrix sweep")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("layers-dot", help="Graphviz layer diagram")
    p.add_argument("d", type=_parse_modulus)
    p.add_argument("--budget", type=int, default=DOT_RENDER_CAP, metavar="N")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            if args.dot:
                sys.stdout.write(build_dot(args.d, DOT_RENDER_CAP))
                return 0
            doc = build_analysis(args.d, args.vector, args.budget)
            if args.json:
                print(json.dumps(doc, indent=2))
            else:
                render_analysis(doc, sys.stdout)
            return 0
        if args.command == "points":
            doc = build_points(args.d, args.budget)
            if args.json:
                print(json.dumps(doc, indent=2))
            else:
                render_points(doc, sys.stdout)
            return 0
        if args.command == "verify":
            lo, hi = args.range
            doc = build_verify(lo, hi, args.matrix, POINT_ENUMERATION_CAP)
            if args.json:
                print(json.dumps(doc, indent=2))
            else:
                render_verify(doc, sys.stdout)
            return 0 if doc["ok"] else 1
        if args.command == "layers-dot":
            sys.stdout.write(build_dot(args.d, args.budget))
            return 0
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuditlineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
