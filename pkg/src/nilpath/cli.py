"""Command-line front end for the nilpotency and walk-parity checks.

Every subcommand runs one verification (or one measurement) and prints a
single report: a table by default, or one JSON object / CSV detail rows
with ``--format``. Exit status is 0 when every report row matches its
expectation, 1 when some row does not, and 2 for usage errors such as
malformed integers or a theorem query below its length bound.

The walk-enumerating commands refuse lengths above a cap (default
``DEFAULT_ENUM_CAP``) because their work grows exponentially; set the
``NILPATH_ENUM_CAP`` environment variable to raise or lower it.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from collections.abc import Iterator, Sequence

from .charpoly import charpoly_path
from .gf2 import mat_is_zero, mat_pow, nilpotency_index
from .proofcheck import (
    ClassTag,
    ReflectionOutOfBounds,
    class_census,
    classify,
    find_naive_failure,
    naive_pivot,
    reflect_class3,
    theorem_check,
)
from .report import Detail, ParityReport, render_csv, render_json, render_text
from .walks import (
    DEFAULT_ENUM_CAP,
    EnumerationCapExceeded,
    PathSpec,
    Walk,
    count_walks_exact,
    count_walks_parity,
    enumerate_walks,
    integer_adjacency_power,
    iter_walks_from,
    path_adjacency,
    walk_is_valid,
)

__all__ = ["run", "console_main"]

_RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


class _UsageError(Exception):
    """Parameter problem detected after argparse; message goes to stderr."""


def _enum_cap() -> int:
    raw = os.environ.get("NILPATH_ENUM_CAP")
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise _UsageError(f"NILPATH_ENUM_CAP must be an integer, got {raw!r}")
    if cap < 0:
        raise _UsageError(f"NILPATH_ENUM_CAP must be non-negative, got {cap}")
    return cap


def _value_row(check: str, value: object, provenance: str) -> Detail:
    """A report row that states a result rather than testing one."""
    return Detail(check, value, value, provenance)


def _cmd_check_nilpotent(args: argparse.Namespace) -> ParityReport:
    if args.m is not None:
        spec = PathSpec.from_m(args.m)
        params = {"m": spec.m, "n": spec.n}
    else:
        spec = PathSpec.from_n(args.n)
        params = {"m": spec.m, "n": spec.n}
    n = spec.n
    a = path_adjacency(n)
    details = [
        Detail(
            f"A^{n} over GF(2)",
            "zero matrix",
            "zero matrix" if mat_is_zero(mat_pow(a, n)) else "nonzero matrix",
            "square-and-multiply on bit-packed rows",
        )
    ]
    index = nilpotency_index(a)
    details.append(
        Detail(
            "nilpotency index",
            n,
            index if index is not None else "none (not nilpotent)",
            "smallest e with A^e = 0",
        )
    )
    if n > 1:
        details.append(
            Detail(
                f"corner entry (1, {n}) of A^{n - 1}",
                1,
                mat_pow(a, n - 1).bit(1, n),
                "the length bound is tight: one walk spans the whole path",
            )
        )
    return ParityReport.from_details("check-nilpotent", params, details, 0.0)


def _cmd_walk_count(args: argparse.Namespace) -> ParityReport:
    n, x, y, k = args.n, args.x, args.y, args.k
    params = {"n": n, "x": x, "y": y, "k": k, "mode": args.mode}
    details = []
    if args.mode == "exact":
        count = count_walks_exact(n, x, y, k)
        details.append(
            _value_row(
                f"walks of length {k} from {x} to {y}",
                count,
                "counting-vector recurrence",
            )
        )
        details.append(
            Detail(
                "parity route agrees mod 2",
                count % 2,
                count_walks_parity(n, x, y, k),
                "bit-packed parity recurrence",
            )
        )
    else:
        details.append(
            _value_row(
                f"parity of walks of length {k} from {x} to {y}",
                count_walks_parity(n, x, y, k),
                "bit-packed parity recurrence",
            )
        )
    return ParityReport.from_details("walk-count", params, details, 0.0)


def _cmd_verify_lemma(args: argparse.Namespace) -> ParityReport:
    n, max_k = args.n, args.max_k
    if n < 1:
        raise _UsageError(f"--n must be at least 1, got {n}")
    if max_k < 0:
        raise _UsageError(f"--max-k must be non-negative, got {max_k}")
    cap = _enum_cap()
    if max_k > cap:
        raise _UsageError(
            f"--max-k {max_k} exceeds the enumeration cap {cap} "
            "(override with NILPATH_ENUM_CAP)"
        )
    params = {"n": n, "max_k": max_k}
    details = []
    for k in range(max_k + 1):
        power = integer_adjacency_power(n, k)
        mismatches = 0
        walks_seen = 0
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                enumerated = len(enumerate_walks(n, x, y, k, cap=cap))
                walks_seen += enumerated
                counted = count_walks_exact(n, x, y, k)
                if not (counted == enumerated == power[x - 1][y - 1]):
                    mismatches += 1
        details.append(
            Detail(
                f"k = {k}: count = enumeration = matrix power, all (x, y)",
                "0 mismatches",
                f"{mismatches} mismatches",
                f"{n * n} endpoint pairs, {walks_seen} walks listed",
            )
        )
    return ParityReport.from_details("verify-lemma", params, details, 0.0)


def _cmd_verify_theorem(args: argparse.Namespace) -> ParityReport:
    if args.all:
        if any(v is not None for v in (args.m, args.k, args.x, args.y)):
            raise _UsageError("--all cannot be combined with --m/--k/--x/--y")
        details = []
        for m in range(1, 5):
            n = 2**m - 1
            for k in range(n, n + 5):
                failures = []
                for x in range(1, n + 1):
                    for y in range(1, n + 1):
                        sub = theorem_check(m, k, x, y)
                        if not sub.passed or count_walks_parity(n, x, y, k):
                            failures.append((x, y))
                details.append(
                    Detail(
                        f"m = {m}, k = {k}: every endpoint pair even",
                        "0 failures",
                        f"{len(failures)} failures"
                        + (f" at {failures[:3]}" if failures else ""),
                        f"{n * n} endpoint pairs certified",
                    )
                )
        return ParityReport.from_details(
            "verify-theorem", {"all": True}, details, 0.0
        )
    missing = [
        name
        for name, v in (("--m", args.m), ("--k", args.k), ("--x", args.x), ("--y", args.y))
        if v is None
    ]
    if missing:
        raise _UsageError(
            f"verify-theorem needs {' '.join(missing)} (or --all)"
        )
    n = 2**args.m - 1
    if args.k < n:
        raise _UsageError(
            f"--k {args.k} is below the theorem bound: need k >= n = {n}"
        )
    return theorem_check(args.m, args.k, args.x, args.y).renamed("verify-theorem")


def _iter_class3(n: int, pivot: int, k: int) -> Iterator[Walk]:
    for start in range(1, n + 1):
        for walk in iter_walks_from(n, start, k):
            if classify(n, walk, pivot).tag is ClassTag.CLASS3:
                yield walk


def _cmd_involution_test(args: argparse.Namespace) -> ParityReport:
    spec = PathSpec.from_m(args.m)
    n = spec.n
    k = args.k
    if k < 0:
        raise _UsageError(f"--k must be non-negative, got {k}")
    cap = _enum_cap()
    if k > cap:
        raise _UsageError(
            f"--k {k} exceeds the enumeration cap {cap} "
            "(override with NILPATH_ENUM_CAP)"
        )
    if n == 1:
        raise _UsageError("--m 1 has a single vertex and no midpoint to reflect across")
    pivot = 2 ** (args.m - 1)
    params = {"m": args.m, "n": n, "k": k, "pivot": pivot}
    tested = 0
    bad_walk = bad_fixed = bad_preserve = bad_double = 0
    for length in range(k + 1):
        for walk in _iter_class3(n, pivot, length):
            tested += 1
            image = reflect_class3(n, walk, pivot)
            if not (
                image.start == walk.start
                and image.end == walk.end
                and image.length == walk.length
                and classify(n, image, pivot).tag is ClassTag.CLASS3
            ):
                bad_preserve += 1
            if image == walk:
                bad_fixed += 1
            if reflect_class3(n, image, pivot) != walk:
                bad_double += 1
            if not walk_is_valid(n, image):
                bad_walk += 1
    src = f"all class-3 walks of length <= {k}, pivot {pivot}"
    details = [
        _value_row("class-3 walks tested", tested, src),
        Detail("image is a valid walk", 0, bad_walk, src),
        Detail("image preserves start, end, length, class", 0, bad_preserve, src),
        Detail("no fixed points", 0, bad_fixed, src),
        Detail("applying twice restores the walk", 0, bad_double, src),
    ]
    return ParityReport.from_details("involution-test", params, details, 0.0)


def _cmd_census(args: argparse.Namespace) -> ParityReport:
    n, pivot, x, y, k = args.n, args.pivot, args.x, args.y, args.k
    census = class_census(n, pivot, x, y, k)
    total = count_walks_exact(n, x, y, k)
    params = {"n": n, "pivot": pivot, "x": x, "y": y, "k": k}
    details = [
        _value_row("class 1 (pivot never visited)", census.c1, "pivot-avoiding count"),
        _value_row("class 2 (pivot visited once)", census.c2, "prefix times suffix counts"),
        _value_row("class 3 (pivot visited twice or more)", census.c3, "remainder"),
        Detail("classes partition all walks", total, census.total, "exact total count"),
        Detail(
            "per-offset class-2 counts sum to class 2",
            census.c2,
            sum(census.per_step_c2),
            f"offsets 0..{k}",
        ),
        _value_row(
            "class-2 count by visit offset",
            " ".join(str(c) for c in census.per_step_c2),
            "offset i = pivot reached after exactly i steps",
        ),
    ]
    return ParityReport.from_details("census", params, details, 0.0)


def _cmd_naive_demo(args: argparse.Namespace) -> ParityReport:
    n, k = args.n, args.k
    cap = _enum_cap()
    try:
        witness = find_naive_failure(n, k, cap=cap)
    except EnumerationCapExceeded as exc:
        raise _UsageError(str(exc) + " (override with NILPATH_ENUM_CAP)")
    params = {"n": n, "k": k}
    details = [
        Detail(
            "some walk escapes the naive reflection",
            "witness found",
            "witness found" if witness is not None else "none at this size",
            "lexicographic scan over every start vertex",
        )
    ]
    if witness is not None:
        pivot = naive_pivot(witness)
        try:
            reflect_class3(n, witness, pivot)
            outcome, escape = "stayed in bounds", None
        except ReflectionOutOfBounds as exc:
            outcome, escape = "out of bounds", str(exc)
        details.append(_value_row("witness walk", str(witness), "first in scan order"))
        details.append(
            _value_row(
                "its naive pivot", pivot, "repeated vertex with maximal 2-exponent"
            )
        )
        details.append(
            Detail(
                "reflecting at the naive pivot",
                "out of bounds",
                outcome,
                "the pivot is off-center, so the mirror leaves the path",
            )
        )
        if escape is not None:
            details.append(_value_row("escape detail", escape, "reflection attempt"))
    return ParityReport.from_details("naive-demo", params, details, 0.0)


def _cmd_charpoly(args: argparse.Namespace) -> ParityReport:
    n = args.n
    if n < 0:
        raise _UsageError(f"--n must be non-negative, got {n}")
    poly = charpoly_path(n)
    params = {"n": n, "check_monomial": args.check_monomial}
    details = [
        _value_row(
            "characteristic polynomial mod 2",
            str(poly),
            "three-term recurrence on leading minors",
        )
    ]
    if args.check_monomial:
        details.append(
            Detail(
                f"equals x^{n}",
                "yes",
                "yes" if poly.bits == 1 << n else "no",
                "every coefficient below the top vanishes",
            )
        )
    return ParityReport.from_details("charpoly", params, details, 0.0)


def _cmd_bench(args: argparse.Namespace) -> ParityReport:
    if args.max_m < 1:
        raise _UsageError(f"--max-m must be at least 1, got {args.max_m}")
    details = []
    for m in range(1, args.max_m + 1):
        n = 2**m - 1
        a = path_adjacency(n)
        t0 = time.perf_counter()
        power = mat_pow(a, n)
        ms = (time.perf_counter() - t0) * 1000.0
        details.append(
            Detail(
                f"m = {m:2d}: A^{n} at n = {n}",
                "zero matrix",
                "zero matrix" if mat_is_zero(power) else "nonzero matrix",
                f"{ms:.1f} ms wall time",
            )
        )
    return ParityReport.from_details("bench", {"max_m": args.max_m}, details, 0.0)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilpath",
        description=(
            "Verify that path-graph adjacency matrices on 2^m - 1 vertices "
            "are nilpotent over GF(2), and exercise the walk-counting "
            "argument behind that fact."
        ),
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=sorted(_RENDERERS),
        default="text",
        help="report format (default: text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "check-nilpotent",
        parents=[fmt],
        help="raise the adjacency matrix to the n-th power and inspect it",
    )
    size = p.add_mutually_exclusive_group(required=True)
    size.add_argument("--m", type=int, help="use n = 2^m - 1 vertices")
    size.add_argument("--n", type=int, help="explicit vertex count")
    p.set_defaults(handler=_cmd_check_nilpotent)

    p = sub.add_parser(
        "walk-count",
        parents=[fmt],
        help="count walks between two vertices, exactly or mod 2",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument(
        "--exact", dest="mode", action="store_const", const="exact", default="exact"
    )
    mode.add_argument("--parity", dest="mode", action="store_const", const="parity")
    p.set_defaults(handler=_cmd_walk_count)

    p = sub.add_parser(
        "verify-lemma",
        parents=[fmt],
        help="check count = enumeration = matrix power for k = 0..max-k",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.set_defaults(handler=_cmd_verify_lemma)

    p = sub.add_parser(
        "verify-theorem",
        parents=[fmt],
        help="certify even walk counts for k >= n = 2^m - 1",
    )
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument(
        "--all",
        action="store_true",
        help="sweep m <= 4, n <= k <= n + 4, every endpoint pair",
    )
    p.set_defaults(handler=_cmd_verify_theorem)

    p = sub.add_parser(
        "involution-test",
        parents=[fmt],
        help="exhaustively test the midpoint reflection on class-3 walks",
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="test lengths 0..k")
    p.set_defaults(handler=_cmd_involution_test)

    p = sub.add_parser(
        "census",
        parents=[fmt],
        help="exact class sizes for one (pivot, x, y, k) choice",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pivot", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser(
        "naive-demo",
        parents=[fmt],
        help="search for a walk where the divisibility-pivot reflection escapes",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_naive_demo)

    p = sub.add_parser(
        "charpoly",
        parents=[fmt],
        help="characteristic polynomial of the path adjacency matrix mod 2",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check-monomial", action="store_true")
    p.set_defaults(handler=_cmd_charpoly)

    p = sub.add_parser(
        "bench",
        parents=[fmt],
        help="time mat_pow(A, n) for m = 1..max-m and assert the zero result",
    )
    p.add_argument("--max-m", type=int, default=12)
    p.set_defaults(handler=_cmd_bench)

    return parser


def run(argv: Sequence[str]) -> int:
    """Parse argv, run one subcommand, print its report, return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    started = time.perf_counter()
    try:
        report = args.handler(args)
    except (_UsageError, ValueError) as exc:
        print(f"nilpath {args.command}: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    if report.elapsed_ms == 0.0:
        report = report.with_elapsed(elapsed_ms)
    sys.stdout.write(_RENDERERS[args.format](report))
    return 0 if report.passed else 1


def console_main() -> None:
    raise SystemExit(run(sys.argv[1:]))
