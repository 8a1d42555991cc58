"""Command-line surface: generation, counting, matrices, conversion, checks.

All data output goes to stdout and is byte-deterministic for fixed inputs
and flags, including across worker counts.  Progress notes, verification
summaries and wall-clock timings go to stderr so that stdout stays
machine-readable.  Exit code 0 means every requested verification passed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass

from .counting import (
    DEFAULT_CELL_LIMIT,
    CountingMemo,
    gale_ryser_feasible,
    s_bruteforce,
    s_count,
)
from .errors import AmbiguousMaximumError, BipartError, LimitError
from .matrices import (
    DEFAULT_MAX_N,
    CoefficientVector,
    TransitionMatrix,
    c_from_d,
    d_from_c,
    invert_unitriangular,
    matrix_to_csv,
    matrix_to_json,
    pairing_matrix,
    transition_matrix,
    vector_from_json,
    vector_to_json,
    verify_triangular,
    wavefront,
)
from .partitions import (
    Partition,
    PartitionOrder,
    dominance_covers,
    dominates,
    format_partition,
    parse_partition,
)

ENV_MAX_N = "BIPART_MAX_N"


@dataclass
class CliConfig:
    max_n: int = DEFAULT_MAX_N
    brute_force_cell_limit: int = DEFAULT_CELL_LIMIT
    output_format: str = "table"
    threads: int = 1
    strict_partition_parse: bool = True

    def __post_init__(self) -> None:
        if self.max_n < 0:
            raise ValueError("max_n must be nonnegative")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    max_n = args.max_n
    if max_n is None:
        env = os.environ.get(ENV_MAX_N)
        max_n = int(env) if env else DEFAULT_MAX_N
    return CliConfig(
        max_n=max_n,
        brute_force_cell_limit=getattr(args, "cell_limit", DEFAULT_CELL_LIMIT),
        output_format=args.format,
        threads=args.threads,
        strict_partition_parse=not args.lenient_parse,
    )


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def _guard(n: int, config: CliConfig) -> None:
    if n > config.max_n:
        raise LimitError(
            f"n={n} exceeds max_n={config.max_n}; raise it with --max-n "
            f"or the {ENV_MAX_N} environment variable"
        )


# ---------------------------------------------------------------- partitions


def cmd_partitions(args: argparse.Namespace, config: CliConfig) -> int:
    _guard(args.n, config)
    order = PartitionOrder(args.n, max_n=None)
    edges: list[tuple[Partition, Partition]] = []
    if args.dominance:
        for alpha in order:
            for beta in dominance_covers(alpha):
                edges.append((alpha, beta))

    if config.output_format == "json":
        listing = []
        for i, p in enumerate(order):
            item = {"index": i, "partition": format_partition(p)}
            if args.transpose:
                item["transpose"] = format_partition(p.transpose())
            listing.append(item)
        payload: dict = {"n": args.n, "partitions": listing}
        if args.dominance:
            payload["edges"] = [
                [format_partition(a), format_partition(b)] for a, b in edges
            ]
        _emit(json.dumps(payload, indent=2), None)
    elif config.output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        header = ["index", "partition"] + (["transpose"] if args.transpose else [])
        writer.writerow(header)
        for i, p in enumerate(order):
            row = [str(i), format_partition(p)]
            if args.transpose:
                row.append(format_partition(p.transpose()))
            writer.writerow(row)
        if args.dominance:
            writer.writerow(["edge_from", "edge_to"])
            for a, b in edges:
                writer.writerow([format_partition(a), format_partition(b)])
        _emit(buffer.getvalue(), None)
    else:
        lines = []
        for i, p in enumerate(order):
            line = f"{i}\t{p}"
            if args.transpose:
                line += f"\t{p.transpose()}"
            lines.append(line)
        if args.dominance:
            lines.append(f"# dominance covers ({len(order)} nodes, {len(edges)} edges)")
            for a, b in edges:
                lines.append(f"{a} > {b}")
        _emit("\n".join(lines), None)
    return 0


# --------------------------------------------------------------------- count


def cmd_count(args: argparse.Namespace, config: CliConfig) -> int:
    strict = config.strict_partition_parse
    alpha = parse_partition(args.alpha, strict=strict)
    beta = parse_partition(args.beta, strict=strict)
    value = s_count(alpha, beta)
    agree = None
    oracle_value = None
    if args.oracle:
        oracle_value = s_bruteforce(
            alpha, beta, cell_limit=config.brute_force_cell_limit
        )
        agree = oracle_value == value

    if config.output_format == "json":
        payload = {
            "alpha": format_partition(alpha),
            "beta": format_partition(beta),
            "count": str(value),
        }
        if args.oracle:
            payload["oracle"] = str(oracle_value)
            payload["agree"] = agree
        _emit(json.dumps(payload, indent=2), None)
    elif config.output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        header = ["alpha", "beta", "count"] + (["oracle", "agree"] if args.oracle else [])
        writer.writerow(header)
        row = [format_partition(alpha), format_partition(beta), str(value)]
        if args.oracle:
            row += [str(oracle_value), str(agree).lower()]
        writer.writerow(row)
        _emit(buffer.getvalue(), None)
    else:
        lines = [str(value)]
        if args.oracle:
            lines.append(
                f"oracle {oracle_value} ({'agree' if agree else 'DISAGREE'})"
            )
        _emit("\n".join(lines), None)
    return 0 if agree in (None, True) else 1


# -------------------------------------------------------------------- matrix


def _build_matrix(n: int, kind: str, config: CliConfig) -> TransitionMatrix:
    if kind == "S":
        return pairing_matrix(n, max_n=config.max_n, threads=config.threads)
    matrix = transition_matrix(n, max_n=config.max_n, threads=config.threads)
    if kind == "Minv":
        return invert_unitriangular(matrix)
    return matrix


def _matrix_table(matrix: TransitionMatrix) -> str:
    texts = [str(p) for p in matrix.order]
    cells = [[str(e) for e in row] for row in matrix.entries]
    label_width = max(len(t) for t in texts)
    widths = [
        max(len(texts[j]), max(len(cells[i][j]) for i in range(len(cells))))
        for j in range(len(texts))
    ]
    lines = [f"{matrix.kind} n={matrix.n} size={matrix.size}"]
    header = " " * label_width + "  " + "  ".join(
        texts[j].rjust(widths[j]) for j in range(len(texts))
    )
    lines.append(header)
    for i, row in enumerate(cells):
        lines.append(
            texts[i].ljust(label_width)
            + "  "
            + "  ".join(row[j].rjust(widths[j]) for j in range(len(row)))
        )
    return "\n".join(lines)


def _identity_product(a: TransitionMatrix, b: TransitionMatrix) -> bool:
    p = a.size
    for i in range(p):
        arow = a.entries[i]
        for j in range(p):
            acc = sum(arow[k] * b.entries[k][j] for k in range(p) if arow[k])
            if acc != (1 if i == j else 0):
                return False
    return True


def cmd_matrix(args: argparse.Namespace, config: CliConfig) -> int:
    _guard(args.n, config)
    matrix = _build_matrix(args.n, args.kind, config)

    status = 0
    if args.verify:
        if args.kind == "M":
            report = verify_triangular(matrix)
            print(report.summary(), file=sys.stderr)
            status = 0 if report.passed else 1
        elif args.kind == "Minv":
            forward = transition_matrix(args.n, max_n=config.max_n)
            ok = _identity_product(forward, matrix) and _identity_product(
                matrix, forward
            )
            print(
                f"{'PASS' if ok else 'FAIL'}: M({args.n}) and its inverse "
                f"multiply to the identity both ways",
                file=sys.stderr,
            )
            status = 0 if ok else 1
        else:
            entries = matrix.entries
            ok = all(
                entries[i][j] == entries[j][i]
                for i in range(matrix.size)
                for j in range(i)
            )
            print(
                f"{'PASS' if ok else 'FAIL'}: S({args.n}) is symmetric",
                file=sys.stderr,
            )
            status = 0 if ok else 1

    if config.output_format == "json":
        _emit(matrix_to_json(matrix), args.output)
    elif config.output_format == "csv":
        _emit(matrix_to_csv(matrix), args.output)
    else:
        _emit(_matrix_table(matrix), args.output)
    return status


# ------------------------------------------------------------------- convert


def _wavefront_note(vector: CoefficientVector) -> str:
    try:
        report = wavefront(vector)
    except AmbiguousMaximumError as exc:
        return f"wavefront ambiguous: {exc}"
    except ValueError:
        return "wavefront undefined: zero vector"
    unit = "yes" if report.unit else "no"
    return (
        f"wavefront {report.partition} coefficient {report.coefficient} "
        f"(unit: {unit})"
    )


def cmd_convert(args: argparse.Namespace, config: CliConfig) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    vector = vector_from_json(text, strict_parse=config.strict_partition_parse)
    _guard(vector.n, config)

    expected_side = "c" if args.direction == "c2d" else "d"
    if vector.side != expected_side:
        print(
            f"error: direction {args.direction} needs a side-{expected_side} "
            f"vector, got side {vector.side}",
            file=sys.stderr,
        )
        return 2

    if args.direction == "c2d":
        result = d_from_c(vector, max_n=config.max_n)
        d_side = result
    else:
        result = c_from_d(vector, max_n=config.max_n)
        d_side = vector

    _emit(vector_to_json(result), args.output)
    print(_wavefront_note(result), file=sys.stderr)
    negatives = d_side.negative_support()
    if negatives:
        listing = ", ".join(str(p) for p in negatives)
        print(
            f"note: d-side vector has negative entries at {listing}; "
            f"not representation data",
            file=sys.stderr,
        )
    return 0


# -------------------------------------------------------------------- verify


def _suite_oracle_equivalence(n_max: int, config: CliConfig) -> tuple[bool, str]:
    cap = min(n_max, 8)
    memo: dict = {}
    for n in range(cap + 1):
        order = PartitionOrder(n, max_n=None)
        for a in order:
            for b in order:
                if s_count(a, b, memo) != s_bruteforce(
                    a, b, cell_limit=config.brute_force_cell_limit
                ):
                    return False, f"mismatch at ({a}, {b})"
    return True, f"all pairs, n <= {cap}"


def _suite_symmetry(n_max: int) -> tuple[bool, str]:
    memo: dict = {}
    for n in range(n_max + 1):
        order = PartitionOrder(n, max_n=None)
        for a in order:
            for b in order:
                if s_count(a, b, memo) != s_count(b, a, memo):
                    return False, f"s({a},{b}) != s({b},{a})"
    return True, f"all pairs, n <= {n_max}"


def _suite_gale_ryser(n_max: int) -> tuple[bool, str]:
    memo: dict = {}
    for n in range(n_max + 1):
        order = PartitionOrder(n, max_n=None)
        for a in order:
            for b in order:
                if (s_count(a, b, memo) > 0) != gale_ryser_feasible(a, b):
                    return False, f"support mismatch at ({a}, {b})"
    return True, f"all pairs, n <= {n_max}"


def _suite_diagonal(n_max: int) -> tuple[bool, str]:
    memo: dict = {}
    for n in range(n_max + 1):
        for a in PartitionOrder(n, max_n=None):
            if s_count(a, a.transpose(), memo) != 1:
                return False, f"s({a}, {a.transpose()}) != 1"
    return True, f"all partitions, n <= {n_max}"


def _inject_fault(matrix: TransitionMatrix, fault: str) -> TransitionMatrix:
    entries = [list(row) for row in matrix.entries]
    order = matrix.order
    p = len(order)
    if fault == "diag":
        entries[p - 1][p - 1] = 2
    elif fault == "zero":
        done = False
        for i in range(p):
            for j in range(p):
                if i != j and not dominates(order[j], order[i]):
                    entries[i][j] = 1
                    done = True
                    break
            if done:
                break
    elif fault == "positive":
        done = False
        for i in range(p):
            for j in range(p):
                if i != j and dominates(order[j], order[i]):
                    entries[i][j] = 0
                    done = True
                    break
            if done:
                break
    return TransitionMatrix(
        n=matrix.n,
        order=order,
        entries=tuple(tuple(r) for r in entries),
        kind=matrix.kind,
    )


def _suite_triangularity(
    n_max: int, config: CliConfig, fault: str | None
) -> tuple[bool, str]:
    for n in range(n_max + 1):
        matrix = transition_matrix(n, max_n=config.max_n, threads=config.threads)
        if fault and n == n_max:
            matrix = _inject_fault(matrix, fault)
        report = verify_triangular(matrix)
        if not report.passed:
            first = report.summary().splitlines()[1].strip()
            return False, f"n={n}: {first}"
    return True, f"M(n) unitriangular with dominance support, n <= {n_max}"


def _suite_inverse(n_max: int, config: CliConfig) -> tuple[bool, str]:
    for n in range(n_max + 1):
        matrix = transition_matrix(n, max_n=config.max_n, threads=config.threads)
        inverse = invert_unitriangular(matrix)
        if not (
            _identity_product(matrix, inverse)
            and _identity_product(inverse, matrix)
        ):
            return False, f"M({n}) inverse roundtrip failed"
    return True, f"M(n)*Minv(n) == I both ways, n <= {n_max}"


def _suite_wavefront(n_max: int, config: CliConfig) -> tuple[bool, str]:
    for n in range(n_max + 1):
        for alpha in PartitionOrder(n, max_n=None):
            c = CoefficientVector(n, "c", {alpha: 1})
            d = d_from_c(c, max_n=config.max_n)
            wc = wavefront(c)
            wd = wavefront(d)
            if wc.partition != wd.partition or not (wc.unit and wd.unit):
                return False, f"mismatch for indicator at {alpha}"
    return True, f"indicator vectors, n <= {n_max}"


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    _guard(args.n_max, config)
    n_max = args.n_max
    fault = args.inject_fault
    suites = [
        ("oracle-equivalence", lambda: _suite_oracle_equivalence(n_max, config)),
        ("symmetry", lambda: _suite_symmetry(n_max)),
        ("gale-ryser-support", lambda: _suite_gale_ryser(n_max)),
        ("diagonal-ones", lambda: _suite_diagonal(n_max)),
        ("triangularity", lambda: _suite_triangularity(n_max, config, fault)),
        ("inverse-roundtrip", lambda: _suite_inverse(n_max, config)),
        ("wavefront-match", lambda: _suite_wavefront(n_max, config)),
    ]
    all_ok = True
    width = max(len(name) for name, _ in suites)
    for name, run in suites:
        ok, detail = run()
        all_ok = all_ok and ok
        print(f"{name.ljust(width)}  {'PASS' if ok else 'FAIL'}  {detail}")
    return 0 if all_ok else 1


# --------------------------------------------------------------------- bench


def cmd_bench(args: argparse.Namespace, config: CliConfig) -> int:
    _guard(args.n, config)
    n = args.n
    memo = CountingMemo()

    t0 = time.perf_counter()
    cold = transition_matrix(n, max_n=config.max_n, memo=memo)
    t_cold = time.perf_counter() - t0
    cold_hits, cold_misses = memo.hits, memo.misses

    t0 = time.perf_counter()
    warm = transition_matrix(n, max_n=config.max_n, memo=memo)
    t_warm = time.perf_counter() - t0
    warm_hits = memo.hits - cold_hits
    warm_misses = memo.misses - cold_misses

    order = cold.order
    candidates = sum(
        1
        for i in range(len(order))
        for j in range(len(order))
        if dominates(order[j], order[i])
    )
    peak_bits = max(e.bit_length() for row in cold.entries for e in row)

    lines = [
        f"bench M({n}) size={cold.size}",
        f"candidate cells (dominance filter): {candidates}",
        f"memo entries after cold fill: {len(memo)}",
        f"cold lookups: {cold_hits + cold_misses} "
        f"(hits {cold_hits}, misses {cold_misses})",
        f"warm lookups: {warm_hits + warm_misses} "
        f"(hits {warm_hits}, misses {warm_misses})",
        f"warm hit rate: {warm_hits / (warm_hits + warm_misses):.4f}"
        if warm_hits + warm_misses
        else "warm hit rate: n/a",
        f"peak entry bit-length: {peak_bits}",
        f"cold == warm: {'yes' if cold.entries == warm.entries else 'NO'}",
    ]
    print(f"cold fill: {t_cold:.3f}s", file=sys.stderr)
    print(f"warm fill: {t_warm:.3f}s", file=sys.stderr)

    if config.threads > 1:
        t0 = time.perf_counter()
        threaded = transition_matrix(n, max_n=config.max_n, threads=config.threads)
        t_threaded = time.perf_counter() - t0
        print(f"threaded fill ({config.threads}): {t_threaded:.3f}s", file=sys.stderr)
        lines.append(
            f"threads={config.threads} result identical: "
            f"{'yes' if threaded.entries == cold.entries else 'NO'}"
        )

    _emit("\n".join(lines), None)
    if cold.entries != warm.entries:
        return 1
    if config.threads > 1 and threaded.entries != cold.entries:
        return 1
    return 0


# ---------------------------------------------------------------------- main


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-n",
        type=int,
        default=None,
        help=f"weight guard (default {DEFAULT_MAX_N}, env {ENV_MAX_N})",
    )
    common.add_argument(
        "--format",
        choices=("json", "csv", "table"),
        default="table",
        help="output format (default table)",
    )
    common.add_argument(
        "--threads", type=int, default=1, help="worker-count hint for matrix fills"
    )
    common.add_argument(
        "--lenient-parse",
        action="store_true",
        help="sort partition parts instead of rejecting unsorted input",
    )

    parser = argparse.ArgumentParser(
        prog="bipart",
        description=(
            "Exact counting of 0-1 matrices with prescribed margins, and the "
            "unitriangular transition it induces on the partition lattice."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", parents=[common], help="list P(n) in canonical order")
    p.add_argument("n", type=int)
    p.add_argument("--transpose", action="store_true", help="add a conjugate column")
    p.add_argument(
        "--dominance", action="store_true", help="also emit the dominance Hasse edges"
    )
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("count", parents=[common], help="s(alpha, beta)")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument(
        "--oracle", action="store_true", help="cross-check against brute force"
    )
    p.add_argument(
        "--cell-limit",
        type=int,
        default=DEFAULT_CELL_LIMIT,
        help="brute-force grid guard in cells",
    )
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("matrix", parents=[common], help="emit S(n), M(n) or Minv(n)")
    p.add_argument("n", type=int)
    p.add_argument("kind", choices=("S", "M", "Minv"))
    p.add_argument("--verify", action="store_true", help="run structural checks")
    p.add_argument("--output", default=None, help="write to a file instead of stdout")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser(
        "convert", parents=[common], help="apply the transition to a coefficient vector"
    )
    p.add_argument("direction", choices=("c2d", "d2c"))
    p.add_argument(
        "input", nargs="?", default="-", help="JSON vector file, or - for stdin"
    )
    p.add_argument("--output", default=None, help="write to a file instead of stdout")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", parents=[common], help="run the property suites")
    p.add_argument("n_max", type=int)
    p.add_argument(
        "--inject-fault",
        choices=("diag", "zero", "positive"),
        default=None,
        help="corrupt the top matrix to prove the checks detect it",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time the matrix fill")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        return args.func(args, config)
    except BipartError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
