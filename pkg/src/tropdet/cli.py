"""Command line interface.

Subcommands: bounds, construct, tdet, tropdet, verify, enumerate, rubik,
zero-block, random.  Results go to stdout (plain text by default, one JSON
document with --format structured); diagnostics go to stderr.  Exit codes:
0 success, 1 domain or input failure, 2 usage error.

Human-readable output prints permutations and index sets 1-indexed;
structured output is 0-indexed.  The enumeration visit budget can be
overridden with the TROPDET_MAX_VISITS environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .assignment import Transversal, tdet, tropdet
from .blocks import largest_low_block
from .bounds import BoundsResult, lower_bound_L, rubik_answer, upper_bound_U
from .construct import construct_max_tropdet, construct_min_tdet
from .enumerate_ds import (
    DEFAULT_VISIT_BUDGET,
    brute_L,
    brute_U,
    count_D,
    random_ds,
)
from .errors import LineSumError, MatrixParseError, MatrixShapeError, TropdetError
from .matrices import DSMatrix, IntMatrix, parse_matrix, serialize, split, validate_ds

BUDGET_ENV_VAR = "TROPDET_MAX_VISITS"


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _read_matrix(path: str) -> IntMatrix:
    if path == "-":
        return parse_matrix(sys.stdin.read())
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixParseError(f"cannot read {path}: {exc}")
    return parse_matrix(text)


def _budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_VISIT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise TropdetError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}")
    if value < 1:
        raise TropdetError(f"{BUDGET_ENV_VAR} must be >= 1, got {value}")
    return value


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _bound_doc(res: BoundsResult) -> dict:
    return {
        "value": res.value,
        "case": res.case_tag.value,
        "l": res.l,
        "eqn1_holds": res.eqn1_holds,
        "eqn2_holds": res.eqn2_holds,
    }


def _matrix_doc(ds: DSMatrix) -> dict:
    return json.loads(serialize(ds, "structured"))


def _cmd_bounds(args) -> int:
    p = split(args.m, args.n)
    low = lower_bound_L(args.m, args.n)
    high = upper_bound_U(args.m, args.n)
    if args.format == "structured":
        _emit_json(
            {
                "m": p.m,
                "n": p.n,
                "q": p.q,
                "r": p.r,
                "L": _bound_doc(low),
                "U": _bound_doc(high),
            }
        )
        return 0
    print(f"m = {p.m}, n = {p.n}  (q = {p.q}, r = {p.r})")
    suffix = f", l = {low.l}" if low.l is not None else ""
    print(f"L({p.m},{p.n}) = {low.value}  [case {low.case_tag.value}{suffix}]")
    print(f"U({p.m},{p.n}) = {high.value}  [case {high.case_tag.value}]")
    return 0


def _cmd_construct(args) -> int:
    if args.objective == "min-tdet":
        ds = construct_min_tdet(args.m, args.n)
        res = lower_bound_L(args.m, args.n)
        achieved = tdet(ds.matrix).value
        label = "tdet"
    else:
        ds = construct_max_tropdet(args.m, args.n)
        res = upper_bound_U(args.m, args.n)
        achieved = tropdet(ds.matrix).value
        label = "tropdet"
    if args.format == "structured":
        _emit_json(
            {
                "m": args.m,
                "n": args.n,
                "objective": args.objective,
                "case": res.case_tag.value,
                "bound": res.value,
                "achieved": achieved,
                "matrix": _matrix_doc(ds),
            }
        )
        return 0
    print(f"m = {args.m}, n = {args.n}, objective = {args.objective}")
    print(serialize(ds))
    print(f"{label} = {achieved}")
    print(f"bound = {res.value}  [case {res.case_tag.value}]")
    return 0


def _print_transversal(which: str, n: int, t: Transversal, fmt: str) -> None:
    if fmt == "structured":
        _emit_json(
            {
                "which": which,
                "n": n,
                "value": t.value,
                "permutation": list(t.perm),
            }
        )
        return
    print(f"{which} = {t.value}")
    print("permutation (1-indexed): " + " ".join(str(j + 1) for j in t.perm))


def _cmd_eval(args) -> int:
    a = _read_matrix(args.file)
    t = tdet(a) if args.which == "tdet" else tropdet(a)
    _print_transversal(args.which, a.rows, t, args.format)
    return 0


def _cmd_verify(args) -> int:
    a = _read_matrix(args.file)
    violation: dict | None = None
    ds: DSMatrix | None = None
    try:
        ds = validate_ds(a)
    except LineSumError as exc:
        violation = {
            "axis": exc.axis,
            "index": exc.index,
            "sum": exc.total,
            "expected": exc.expected,
        }
    except MatrixShapeError as exc:
        violation = {"shape": str(exc)}

    expected = args.expect_m
    mismatch = ds is not None and expected is not None and ds.m != expected

    if args.format == "structured":
        _emit_json(
            {
                "rows": a.rows,
                "cols": a.cols,
                "member": ds is not None and not mismatch,
                "m": ds.m if ds is not None else None,
                "expected_m": expected,
                "violation": violation,
            }
        )
    else:
        if ds is not None and not mismatch:
            print(f"doubly stochastic: yes (m = {ds.m}, n = {ds.n})")
        elif mismatch:
            print("doubly stochastic: yes, but wrong line sum")
            print(f"m = {ds.m}, expected {expected}")
        else:
            print("doubly stochastic: no")
            if "axis" in (violation or {}):
                print(
                    f"{violation['axis']} {violation['index'] + 1} sums to "
                    f"{violation['sum']}, expected {violation['expected']}"
                )
            else:
                print(violation["shape"])
    return 0 if ds is not None and not mismatch else 1


def _cmd_enumerate(args) -> int:
    budget = _budget()
    if args.stat == "count":
        total = count_D(args.m, args.n, budget)
        if args.format == "structured":
            _emit_json({"m": args.m, "n": args.n, "stat": "count", "count": total})
        else:
            print(f"|D({args.m},{args.n})| = {total}")
        return 0
    stats = (
        brute_L(args.m, args.n, budget)
        if args.stat == "min-tdet"
        else brute_U(args.m, args.n, budget)
    )
    if args.format == "structured":
        _emit_json(
            {
                "m": args.m,
                "n": args.n,
                "stat": args.stat,
                "extremum": stats.extremum,
                "count": stats.count,
                "witness": _matrix_doc(stats.witness),
            }
        )
        return 0
    label = "min tdet" if args.stat == "min-tdet" else "max tropdet"
    print(f"{label} over D({args.m},{args.n}) = {stats.extremum}")
    print(f"matrices visited: {stats.count}")
    print("witness:")
    print(serialize(stats.witness))
    return 0


def _cmd_rubik(args) -> int:
    answer = rubik_answer(args.colors, args.stickers_per_face)
    witness = construct_min_tdet(args.stickers_per_face, args.colors)
    if args.format == "structured":
        _emit_json(
            {
                "colors": args.colors,
                "stickers_per_face": args.stickers_per_face,
                "answer": answer,
                "witness": _matrix_doc(witness),
            }
        )
        return 0
    print(f"colors = {args.colors}, stickers per face = {args.stickers_per_face}")
    print(f"worst-case stickers to replace: {answer}")
    print("worst-case sticker counts (rows = colors, columns = faces):")
    print(serialize(witness))
    return 0


def _cmd_zero_block(args) -> int:
    a = _read_matrix(args.file)
    block = largest_low_block(a, args.threshold)
    n = a.rows
    hall = block.dimension_sum <= n
    if args.format == "structured":
        _emit_json(
            {
                "n": n,
                "threshold": args.threshold,
                "row_set": list(block.row_set),
                "col_set": list(block.col_set),
                "sum": block.dimension_sum,
                "hall_holds": hall,
            }
        )
        return 0
    print(f"n = {n}, threshold = {args.threshold}")
    print(
        f"largest low block: |R| = {len(block.row_set)}, "
        f"|S| = {len(block.col_set)}, sum = {block.dimension_sum}"
    )
    rows_text = " ".join(str(i + 1) for i in block.row_set) or "none"
    cols_text = " ".join(str(j + 1) for j in block.col_set) or "none"
    print(f"rows (1-indexed): {rows_text}")
    print(f"columns (1-indexed): {cols_text}")
    print(
        "Hall condition (|R| + |S| <= n): " + ("holds" if hall else "fails")
    )
    return 0


def _cmd_random(args) -> int:
    ds = random_ds(args.m, args.n, args.seed)
    if args.format == "structured":
        doc = _matrix_doc(ds)
        doc["seed"] = args.seed
        _emit_json(doc)
        return 0
    print(serialize(ds))
    return 0


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format",
        choices=("plain", "structured"),
        default="plain",
        help="plain text (default) or a single JSON document",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropdet",
        description=(
            "Sharp bounds, extremal constructions and exact solvers for "
            "tropical determinants of integer doubly-stochastic matrices."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("bounds", help="evaluate L(m,n) and U(m,n)")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_bounds)

    p = subs.add_parser("construct", help="build an extremal member of D(m,n)")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument(
        "--objective", choices=("min-tdet", "max-tropdet"), required=True
    )
    _add_format(p)
    p.set_defaults(func=_cmd_construct)

    for which in ("tdet", "tropdet"):
        p = subs.add_parser(
            which, help=f"evaluate {which} of a matrix file ('-' for stdin)"
        )
        p.add_argument("file")
        _add_format(p)
        p.set_defaults(func=_cmd_eval, which=which)

    p = subs.add_parser("verify", help="check membership in D(m,n)")
    p.add_argument("file")
    p.add_argument(
        "--expect-m",
        type=_positive_int,
        default=None,
        help="also require the detected line sum to equal this value",
    )
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("enumerate", help="sweep all of D(m,n)")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument(
        "--stat", choices=("count", "min-tdet", "max-tropdet"), required=True
    )
    _add_format(p)
    p.set_defaults(func=_cmd_enumerate)

    p = subs.add_parser(
        "rubik", help="worst-case sticker replacement count for a color puzzle"
    )
    p.add_argument("--colors", type=_positive_int, required=True)
    p.add_argument("--stickers-per-face", type=_positive_int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_rubik)

    p = subs.add_parser(
        "zero-block", help="largest low block and Hall condition of a matrix file"
    )
    p.add_argument("file")
    p.add_argument("--threshold", type=_nonneg_int, default=0)
    _add_format(p)
    p.set_defaults(func=_cmd_zero_block)

    p = subs.add_parser("random", help="sample a random member of D(m,n)")
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seed", type=_nonneg_int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_random)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TropdetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
