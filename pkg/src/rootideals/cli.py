"""Command-line front end.

Commands: ``tabulate`` (render the count table of a type), ``verify``
(diff computed tables against the bundled reference tables), ``list``
(ideals of one parabolic), ``count`` (just their number).  Simple-root
indices on the command line are 1-based; exit codes: 0 ok, 1 verification
mismatch, 2 bad arguments, 3 unknown or missing reference table.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import GOLDEN_TYPES
from .ideals import IdealRecord, is_filter_for, list_ideals, root_pair_sums
from .oracle import TooLarge, iter_subset_scan_filters
from .poset import build_poset, iter_bits, minimal_elements
from .rootsys import RootSystem, SimpleType, UnsupportedType, build_root_system
from .tabulate import (
    MissingGolden,
    TableRow,
    brute_force_tabulate,
    golden_table,
    tabulate,
    verify_against_golden,
)


def _mask_indices(mask: int) -> list[int]:
    return [z + 1 for z in iter_bits(mask)]


def _mask_set(mask: int) -> str:
    return "{" + ",".join(f"α{i}" for i in _mask_indices(mask)) + "}"


def _mask_csv(mask: int) -> str:
    return ";".join(str(i) for i in _mask_indices(mask))


def _root_ascii(rs: RootSystem, j: int) -> str:
    return str(rs.positive_roots[j])


def _root_pretty(rs: RootSystem, j: int) -> str:
    return str(rs.positive_roots[j]).replace("a", "α")


def _diagram(t: SimpleType, mask: int) -> str:
    """One-line node pictograph, filled circles marking the chosen roots."""
    dot = ["•" if mask >> z & 1 else "∘" for z in range(t.rank)]
    if t.kind == "E":
        bottom = [dot[0]] + dot[2:]
        return "".join(bottom) + "/" + dot[1]
    if t.kind == "D":
        return "".join(dot[: t.rank - 2]) + "(" + "".join(dot[t.rank - 2 :]) + ")"
    return "".join(dot)


def _render_table(t: SimpleType, rows: list[TableRow], fmt: str) -> str:
    if fmt == "csv":
        lines = ["mask,n_count,ab_count"]
        lines += [f"{_mask_csv(r.mask)},{r.n_count},{r.ab_count}" for r in rows]
        return "\n".join(lines)
    if fmt == "json":
        doc = {
            "type": str(t),
            "rows": [
                {"I": _mask_indices(r.mask), "n": r.n_count, "ab": r.ab_count}
                for r in rows
            ],
        }
        return json.dumps(doc, indent=2)
    lines = [
        f"Ideal counts for {t}",
        "",
        "| I | n | ab | diagram |",
        "|---|--:|--:|---|",
    ]
    lines += [
        f"| {_mask_set(r.mask)} | {r.n_count} | {r.ab_count} | {_diagram(t, r.mask)} |"
        for r in rows
    ]
    return "\n".join(lines)


def _render_ideals(
    rs: RootSystem,
    records: list[IdealRecord],
    parabolic: int,
    fmt: str,
) -> str:
    if fmt == "csv":
        lines = ["min_roots,size,abelian"]
        for r in records:
            mins = ";".join(_root_ascii(rs, j) for j in iter_bits(r.min_roots))
            lines.append(f"{mins},{r.size},{str(r.abelian).lower()}")
        lines.append(f"# count={len(records)}")
        return "\n".join(lines)
    if fmt == "json":
        doc = {
            "type": str(rs.simple_type),
            "parabolic": _mask_indices(parabolic),
            "ideals": [
                {
                    "min_roots": [
                        _root_ascii(rs, j) for j in iter_bits(r.min_roots)
                    ],
                    "size": r.size,
                    "abelian": r.abelian,
                }
                for r in records
            ],
            "count": len(records),
        }
        return json.dumps(doc, indent=2)
    lines = [
        f"Ideals of the {_mask_set(parabolic)} parabolic of {rs.simple_type}",
        "",
        "| min roots | size | abelian |",
        "|---|--:|---|",
    ]
    for r in records:
        mins = "{" + ",".join(_root_pretty(rs, j) for j in iter_bits(r.min_roots)) + "}"
        lines.append(f"| {mins} | {r.size} | {'yes' if r.abelian else 'no'} |")
    lines.append("")
    lines.append(f"Total: {len(records)}")
    return "\n".join(lines)


def _parse_type(name: str) -> SimpleType:
    try:
        return SimpleType.parse(name)
    except UnsupportedType as exc:
        raise _CliError(2, str(exc)) from None


def _parse_parabolic(text: str | None, rank: int) -> int:
    if not text:
        return 0
    mask = 0
    for part in text.split(","):
        try:
            i = int(part)
        except ValueError:
            raise _CliError(2, f"bad simple-root index {part!r}") from None
        if not 1 <= i <= rank:
            raise _CliError(2, f"simple-root index {i} out of range 1..{rank}")
        mask |= 1 << (i - 1)
    return mask


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _warn_no_golden(t: SimpleType) -> None:
    if str(t) not in GOLDEN_TYPES:
        print(
            f"warning: no reference table for {t}; counts are unverified",
            file=sys.stderr,
        )


def _cmd_tabulate(args: argparse.Namespace) -> int:
    t = _parse_type(args.type)
    _warn_no_golden(t)
    rs = build_root_system(t)
    if args.oracle:
        try:
            rows = brute_force_tabulate(rs)
        except TooLarge as exc:
            raise _CliError(2, f"--oracle: {exc}") from None
    else:
        rows = tabulate(rs, threads=args.threads)
    print(_render_table(t, rows, args.format))
    return 0


def _verify_one(name: str, threads: int) -> tuple[int, int]:
    """Verify one type; returns (rows, mismatches) and prints the outcome."""
    t = SimpleType.parse(name)
    rs = build_root_system(t)
    g = golden_table(t)
    mismatches = verify_against_golden(rs, g, threads=threads)
    print(f"{t}: {len(g.rows)} rows, {len(mismatches)} mismatches")
    for m in mismatches:
        print(
            f"  {_mask_set(m.mask)}: expected n={m.expected[0]} ab={m.expected[1]},"
            f" got n={m.got[0]} ab={m.got[1]}"
        )
    return len(g.rows), len(mismatches)


def _cmd_verify(args: argparse.Namespace) -> int:
    names = list(GOLDEN_TYPES) if args.type == "all" else [str(_parse_type(args.type))]
    total_rows = total_bad = 0
    try:
        for name in names:
            rows, bad = _verify_one(name, args.threads)
            total_rows += rows
            total_bad += bad
    except MissingGolden as exc:
        raise _CliError(3, str(exc)) from None
    print(f"{len(names)} tables, {total_rows} rows, {total_bad} mismatches")
    return 1 if total_bad else 0


def _oracle_ideals(rs: RootSystem, parabolic: int, abelian_only: bool) -> list[IdealRecord]:
    p = build_poset(rs)
    out = []
    for f in iter_subset_scan_filters(p):
        if not is_filter_for(rs, f, parabolic):
            continue
        abelian = root_pair_sums(rs, f) == 0
        if abelian_only and not abelian:
            continue
        compat = 0
        for z in range(rs.rank):
            if is_filter_for(rs, f, 1 << z):
                compat |= 1 << z
        out.append(
            IdealRecord(
                roots=f,
                min_roots=minimal_elements(p, f),
                compat=compat,
                abelian=abelian,
                size=f.bit_count(),
            )
        )
    out.sort(key=lambda r: (r.size, r.roots))
    return out


def _selected_ideals(args: argparse.Namespace) -> tuple[RootSystem, int, list[IdealRecord]]:
    t = _parse_type(args.type)
    rs = build_root_system(t)
    parabolic = _parse_parabolic(args.parabolic, rs.rank)
    if args.oracle:
        try:
            records = _oracle_ideals(rs, parabolic, args.abelian_only)
        except TooLarge as exc:
            raise _CliError(2, f"--oracle: {exc}") from None
    else:
        records = list_ideals(
            rs, build_poset(rs), parabolic=parabolic, abelian_only=args.abelian_only
        )
    return rs, parabolic, records


def _cmd_list(args: argparse.Namespace) -> int:
    rs, parabolic, records = _selected_ideals(args)
    print(_render_ideals(rs, records, parabolic, args.format))
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    _, _, records = _selected_ideals(args)
    print(len(records))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootideals",
        description="Exact ideal counts for parabolic subalgebras of the simple Lie types.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tab = sub.add_parser("tabulate", help="render the full count table of a type")
    p_tab.add_argument("--type", required=True, help="simple type, e.g. E6 or G2")
    p_tab.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    p_tab.add_argument("--threads", type=int, default=1)
    p_tab.add_argument("--oracle", action="store_true", help="use the brute-force path")
    p_tab.set_defaults(fn=_cmd_tabulate)

    p_ver = sub.add_parser("verify", help="diff computed tables against the reference tables")
    p_ver.add_argument("--type", required=True, help="one of G2,F4,E6,E7,E8 or 'all'")
    p_ver.add_argument("--threads", type=int, default=1)
    p_ver.set_defaults(fn=_cmd_verify)

    p_list = sub.add_parser("list", help="list the ideals of one parabolic")
    p_list.add_argument("--type", required=True)
    p_list.add_argument("--parabolic", default="", help="comma-separated 1-based indices")
    p_list.add_argument("--abelian-only", action="store_true")
    p_list.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    p_list.add_argument("--oracle", action="store_true")
    p_list.set_defaults(fn=_cmd_list)

    p_count = sub.add_parser("count", help="count the ideals of one parabolic")
    p_count.add_argument("--type", required=True)
    p_count.add_argument("--parabolic", default="")
    p_count.add_argument("--abelian-only", action="store_true")
    p_count.add_argument("--oracle", action="store_true")
    p_count.set_defaults(fn=_cmd_count)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
