"""Command-line front end.

Subcommands: analyze, equation, catalog, tables, deform-check, schedule.
Exit codes: 0 on success, 2 for invalid input (the message names the violated
rule), 3 when a provably-true identity fails (always a bug).  Output bytes are
deterministic for fixed inputs: keys are sorted, rationals print as "p/q",
infinity as "inf", and nothing environment-dependent is emitted.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog as cat
from .conic_bundle import blow_up_schedule, discriminant_deformed, discriminant_joyce
from .errors import (
    InternalInvariantError,
    InvalidFanError,
    InvalidParameterError,
    InvalidSequenceError,
)
from .exact import format_scalar, parse_scalar
from .invariants import (
    regularity,
    reduction_trace,
    restriction_multiplicities,
    sequence_l_vector,
    sequence_summary,
    trace_divisor,
)
from .model import minitwistor_model, validate_lambdas
from .render import (
    discriminant_latex,
    discriminant_text,
    dumps,
    equation_latex,
    equation_text,
    model_text,
    schedule_text,
)


def _parse_sequence(text: str) -> tuple[int, ...]:
    try:
        seq = tuple(int(token) for token in text.split(","))
    except ValueError as exc:
        raise InvalidSequenceError("entries must be positive integers") from exc
    return seq


def _parse_lambdas(text: str | None, n: int):
    if text is None:
        return None
    values = tuple(parse_scalar(token) for token in text.split(","))
    validate_lambdas(values, n)
    return values


def _parse_c(text: str) -> int:
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise InvalidParameterError("c must be +1 or -1")


def _format_seq(seq: tuple[int, ...]) -> str:
    return ",".join(str(k) for k in seq)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_analyze(args: argparse.Namespace) -> int:
    seq = _parse_sequence(args.seq)
    summary = sequence_summary(seq)
    lambdas = _parse_lambdas(args.lambdas, summary["n"])
    c_sign = _parse_c(args.c)
    model = minitwistor_model(seq, lambdas, c_sign)
    reg = regularity(seq)
    div = trace_divisor(reduction_trace(seq))
    cycle, conj_cycle = restriction_multiplicities(div, seq)
    joyce = discriminant_joyce(seq)
    deformed = None if reg.semi_free else discriminant_deformed(seq)
    schedule = blow_up_schedule(seq)

    if args.format == "json":
        report = dict(summary)
        report.update(
            {
                "input": {"seq": seq, "lambda": model.lambdas, "c": c_sign},
                "regular": reg.regular,
                "semi_free": reg.semi_free,
                "note": reg.note,
                "model": model,
                "discriminant_joyce": joyce,
                "discriminant_deformed": deformed,
                "schedule": schedule,
                "restrictions": {"cycle": cycle, "conjugate_cycle": conj_cycle},
            }
        )
        sys.stdout.write(dumps(report))
    elif args.format == "latex":
        print(equation_latex(model))
        print()
        print(discriminant_latex(joyce))
        if deformed is not None:
            print()
            print(discriminant_latex(deformed))
    else:
        print(f"sequence k = ({_format_seq(seq)}), n = {summary['n']}")
        print(f"m = {summary['m']}")
        print("trace: " + " ".join(f"({i},{j})" for i, j in summary["trace"]))
        print(f"l+ = {summary['l_plus']}")
        print(f"l- = {summary['l_minus']}")
        print(f"l  = {summary['l']}")
        if reg.semi_free:
            print(f"regularity: semi-free ({reg.note}); deformable = {reg.deformable}")
        else:
            print(
                f"regularity: r = {reg.r}, s = {reg.s}, slack = {reg.slack}, "
                f"deformable = {reg.deformable}"
            )
        print(model_text(model))
        print(discriminant_text(joyce))
        if deformed is not None:
            print(discriminant_text(deformed))
        print(schedule_text(schedule))
    return 0


def _cmd_equation(args: argparse.Namespace) -> int:
    seq = _parse_sequence(args.seq)
    n = len(seq) - 1
    lambdas = _parse_lambdas(args.lambdas, n)
    model = minitwistor_model(seq, lambdas, _parse_c(args.c))
    if args.format == "json":
        sys.stdout.write(dumps(model))
    elif args.format == "latex":
        print(equation_latex(model))
    else:
        print(equation_text(model))
    return 0


def _cmd_deform_check(args: argparse.Namespace) -> int:
    seq = _parse_sequence(args.seq)
    reg = regularity(seq)
    if reg.semi_free:
        if args.format == "json":
            sys.stdout.write(
                dumps(
                    {
                        "n": reg.n,
                        "k": seq,
                        "semi_free": True,
                        "note": reg.note,
                        "deformable": reg.deformable,
                    }
                )
            )
        else:
            print(f"semi-free: handled by LeBrun theory (deformable = {reg.deformable})")
        return 0
    deformed = discriminant_deformed(seq)
    if args.format == "json":
        sys.stdout.write(
            dumps(
                {
                    "n": reg.n,
                    "k": seq,
                    "semi_free": False,
                    "r": reg.r,
                    "s": reg.s,
                    "slack": reg.slack,
                    "deformable": reg.deformable,
                    "discriminant_deformed": deformed,
                }
            )
        )
    else:
        print(
            f"r = {reg.r}, s = {reg.s}, slack = {reg.slack}, deformable = {reg.deformable}"
        )
        print(discriminant_text(deformed))
    return 0


def _cmd_schedule(args: argparse.Namespace) -> int:
    seq = _parse_sequence(args.seq)
    schedule = blow_up_schedule(seq)
    if args.format == "json":
        sys.stdout.write(dumps(schedule))
    else:
        print(schedule_text(schedule))
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    n = args.n
    if n < 0:
        raise InvalidParameterError("n must be nonnegative")
    cache = None if args.no_cache else cat.CatalogCache(args.cache_dir)
    if args.classes == "marked":
        reps = cat.enumerate_marked(n)
        if args.format == "json":
            sys.stdout.write(dumps({"n": n, "count": len(reps), "classes": reps}))
        else:
            print(f"n = {n}: {len(reps)} marked sequences up to reversal")
            for rep in reps:
                print("  " + _format_seq(rep))
        return 0
    classes, delta = cat.u1_classes_cached(n, cache)
    if args.format == "json":
        sys.stdout.write(dumps({"n": n, "delta": delta, "classes": classes}))
    else:
        print(f"n = {n}: delta = {delta} circle-action classes")
        for cls in classes:
            slack = "-" if cls.slack is None else str(cls.slack)
            print(
                f"  {_format_seq(cls.canonical)}  members={len(cls.members)} "
                f"m={cls.m} slack={slack}"
            )
    return 0


def _tables_delta(args: argparse.Namespace) -> int:
    table = cat.growth_report(args.n_max)
    deltas = tuple(row.delta for row in table.rows)
    expected = cat.KNOWN_DELTA[: min(len(deltas), len(cat.KNOWN_DELTA))]
    if deltas[: len(expected)] != expected:
        raise InternalInvariantError(
            f"regenerated delta table {deltas[:len(expected)]} differs from {expected}"
        )
    if args.format == "json":
        sys.stdout.write(dumps(table))
    else:
        print("n  delta  marked  delta/n^2")
        for row in table.rows:
            ratio = "-" if row.ratio is None else format_scalar(row.ratio)
            print(f"{row.n}  {row.delta}  {row.marked_classes}  {ratio}")
    return 0


def _tables_fibonacci(args: argparse.Namespace) -> int:
    rows = []
    for n in range(2, args.n_max + 1):
        seq = cat.family_fibonacci(n)
        lvec = sequence_l_vector(seq)
        m = reduction_trace(seq).m
        if n in cat.FIBONACCI_TABLE and cat.FIBONACCI_TABLE[n] != (seq, lvec, m):
            raise InternalInvariantError(
                f"regenerated maximal-step row at n = {n} differs from the stored table"
            )
        rows.append({"n": n, "k": seq, "l": lvec, "m": m})
    if args.format == "json":
        sys.stdout.write(dumps({"rows": rows}))
    elif args.format == "latex":
        print("\\begin{tabular}{llll}")
        print("$n$ & $k$ & $l$ & $m$ \\\\")
        print("\\hline")
        for row in rows:
            k = ",".join(str(x) for x in row["k"])
            l = ",".join(str(x) for x in row["l"])
            print(f"{row['n']} & $({k})$ & $({l})$ & {row['m']} \\\\")
        print("\\end{tabular}")
    else:
        print("n  k  l  m")
        for row in rows:
            print(
                f"{row['n']}  ({_format_seq(row['k'])})  "
                f"({_format_seq(row['l'])})  {row['m']}"
            )
    return 0


def _tables_family(args: argparse.Namespace, which: str) -> int:
    members = cat.family_lebrun(args.n) if which == "lebrun" else cat.family_involutive(args.n)
    payload = {"n": args.n, "count": len(members), "family": which, "members": members}
    if args.format == "json":
        sys.stdout.write(dumps(payload))
    else:
        print(f"{which} family at n = {args.n}: {len(members)} sequences")
        for member in members:
            if member.semi_free:
                print(f"  ({_format_seq(member.seq)})  semi-free, deformable = {member.deformable}")
            else:
                print(
                    f"  ({_format_seq(member.seq)})  slack = {member.slack}, "
                    f"deformable = {member.deformable}"
                )
    return 0


def _cmd_tables(args: argparse.Namespace) -> int:
    if args.which == "delta":
        return _tables_delta(args)
    if args.which == "fibonacci":
        return _tables_fibonacci(args)
    return _tables_family(args, args.which)


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minitwistor",
        description=(
            "Exact-arithmetic invariants, projective models and catalogs for "
            "circle subgroups of torus actions on connected sums of CP^2."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "latex", "text"), default="text")
    seqarg = argparse.ArgumentParser(add_help=False)
    seqarg.add_argument("--seq", required=True, help="weights k_2,...,k_{n+2}, e.g. 1,2,5,3,1")
    modelargs = argparse.ArgumentParser(add_help=False)
    modelargs.add_argument(
        "--lambda",
        dest="lambdas",
        default=None,
        help='conformal invariants "0,l2,...,inf" (default 0,1,2,...,inf)',
    )
    modelargs.add_argument("--c", default="+1", help="sign of the equation, +1 or -1")

    p = sub.add_parser(
        "analyze",
        parents=[seqarg, modelargs, fmt],
        help="full report: invariants, model, discriminants, blow-up schedule",
    )
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser(
        "equation", parents=[seqarg, modelargs, fmt], help="just the model equation"
    )
    p.set_defaults(handler=_cmd_equation)

    p = sub.add_parser(
        "deform-check",
        parents=[seqarg, fmt],
        help="deformability slack and the deformed discriminant report",
    )
    p.set_defaults(handler=_cmd_deform_check)

    p = sub.add_parser("schedule", parents=[seqarg, fmt], help="blow-up schedule ledger")
    p.set_defaults(handler=_cmd_schedule)

    p = sub.add_parser("catalog", help="enumerate sequences or circle-action classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--classes", choices=("marked", "u1"), default="u1")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--cache-dir", default=None, help="JSON cache directory (or $MTF_CACHE_DIR)")
    p.add_argument("--no-cache", action="store_true", help="skip the JSON cache")
    p.set_defaults(handler=_cmd_catalog)

    p = sub.add_parser(
        "tables",
        parents=[fmt],
        help="regenerate a stored table and diff it against the embedded copy",
    )
    p.add_argument("which", choices=("delta", "fibonacci", "lebrun", "involutive"))
    p.add_argument("--n-max", type=int, default=None, help="last n for delta/fibonacci")
    p.add_argument("--n", type=int, default=None, help="level for lebrun/involutive")
    p.set_defaults(handler=_cmd_tables)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "tables":
        if args.which in ("delta", "fibonacci"):
            if args.n_max is None:
                args.n_max = 5 if args.which == "delta" else 7
        elif args.n is None:
            parser.error(f"tables {args.which} requires --n")
    try:
        return args.handler(args)
    except (InvalidSequenceError, InvalidFanError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
