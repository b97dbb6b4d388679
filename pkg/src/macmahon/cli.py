"""Command-line interface: enumerate, verify, bijection and show.

Exit codes: 0 success or full match, 1 identity mismatch, 2 usage or input
error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict, dataclass

from . import io
from .bijections.knuth import knuth_backward, knuth_encode, knuth_insertions, random_marked_matrix
from .bijections.pi import InvalidPair, pi_backward, pi_forward, pi_statistics
from .bijections.recount import recount_shifted
from .components import a_poly, analyze
from .genfun import IDENTITIES, DegreeStatus, VerificationReport, compare, verify
from .partitions import EnumerationCapError, enumerate_pp, enumerate_spp, max_items_cap
from .render import ascii_render, svg_render

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
RECOUNT = "shifted-recount"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    rows: int = 3
    cols: int = 3
    smax: int = 8
    qtmax: int = 4
    cap: int | None = None
    output: str = "text"
    render: str = "none"
    seed: int | None = None

    def __post_init__(self):
        if self.cap is not None and self.cap <= 0:
            raise UsageError("--cap must be positive")
        if self.smax < 0 or self.qtmax < 0:
            raise UsageError("--smax and --qtmax must be nonnegative")
        if self.rows < 1 or self.cols < 1:
            raise UsageError("--rows and --cols must be at least 1")


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from None


def cmd_enumerate(config: RunConfig, strict: bool, out) -> int:
    source = enumerate_spp if strict else enumerate_pp
    cap = config.cap if config.cap is not None else max_items_cap()
    items = []
    for pp in source(config.rows, config.cols, config.smax, cap=cap):
        items.append({"rows": [list(r) for r in pp.rows], "weight": pp.weight, "trace": pp.trace,
                      "k": analyze(pp).k, "a": a_poly(pp).factored()})
    if config.output == "json":
        out.write(io.dumps({"rows": config.rows, "cols": config.cols, "smax": config.smax,
                            "strict": strict, "count": len(items), "items": items}))
    else:
        for item in items:
            out.write(f"{json.dumps(item['rows'])}  weight={item['weight']} trace={item['trace']} "
                      f"k={item['k']} A={item['a']}\n")
        out.write(f"{len(items)} items\n")
    return EXIT_OK


def _recount_report(config: RunConfig) -> VerificationReport:
    start = time.perf_counter()
    result = recount_shifted(config.rows, config.cols, config.smax)
    degrees = []
    for side, series in (("components", result.direct), ("markings", result.via_markings),
                         ("knuth", result.via_knuth)):
        degrees += compare(series, result.product, side)
    if not result.preimages_distinct:
        degrees.append(DegreeStatus(0, False, 0, 0, "distinct-preimages"))
    return VerificationReport(RECOUNT, config.rows, config.cols, config.smax, None, tuple(degrees),
                              time.perf_counter() - start)


def cmd_verify(config: RunConfig, identity: str, out, timing: bool = False, max_weight: int | None = None) -> int:
    if identity == RECOUNT:
        report = _recount_report(config)
    else:
        try:
            report = verify(identity, config.rows, config.cols, config.smax, config.qtmax, max_weight)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if config.output == "json":
        out.write(io.dumps(report.to_json(timing=timing)))
    else:
        out.write(report.summary() + (f" in {report.duration:.3f}s" if timing else "") + "\n")
        for d in report.mismatches():
            where = f" ({d.side})" if d.side else ""
            out.write(f"  s^{d.degree}{where}: lhs = {d.lhs}, rhs = {d.rhs}\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _format_stats(stats) -> str:
    return (f"|pi|={stats.weight} tr={stats.trace} k={stats.k} "
            f"|S|={stats.size_s} |T|={stats.size_t} |sh|={stats.size_shape} "
            f"k(S)={stats.k_s} k(T)={stats.k_t} l(S)={stats.length}")


def cmd_bijection_pi(config: RunConfig, path: str, inverse: bool, out) -> int:
    data = _read_json(path)
    if inverse:
        S, T = io.pair_from_json(data, marked=False)
        pp = pi_backward(S, T)
        if config.output == "json":
            out.write(io.dumps(io.pp_to_json(pp)))
        else:
            out.write(f"{pp}\n")
        return EXIT_OK
    pp = io.pp_from_json(data)
    S, T = pi_forward(pp)
    stats = pi_statistics(S, T)
    if config.output == "json":
        body = io.pair_to_json(S, T)
        body["statistics"] = asdict(stats)
        out.write(io.dumps(body))
    else:
        out.write(f"S:\n{S}\nT:\n{T}\n{_format_stats(stats)}\n")
    return EXIT_OK


def cmd_bijection_knuth(config: RunConfig, path: str | None, inverse: bool, trace: bool, out,
                        max_magnitude: int | None = None) -> int:
    if path is None:
        if inverse or max_magnitude is None:
            raise UsageError("give --input, or --random without --inverse")
        rng = random.Random(config.seed)
        A = random_marked_matrix(config.rows, config.cols, max_magnitude, rng)
    elif inverse:
        S, T = io.pair_from_json(_read_json(path), marked=True)
        A = knuth_backward(S, T)
        out.write(io.dumps(io.matrix_to_json(A)) if config.output == "json" else f"{A}\n")
        return EXIT_OK
    else:
        A = io.matrix_from_json(_read_json(path))
    S, T, log = knuth_insertions(A)
    if config.output == "json":
        body = io.pair_to_json(S, T)
        if path is None:
            body["matrix"] = io.matrix_to_json(A)
        if trace:
            E = knuth_encode(A)
            body["encoding"] = {"top": list(E.top), "bottom": [io.marked_to_json(v) for v in E.bottom]}
        out.write(io.dumps(body))
        return EXIT_OK
    if path is None:
        out.write(f"A:\n{A}\n")
    if trace:
        out.write(f"E:\n{knuth_encode(A)}\n")
        for n, ins in enumerate(log, start=1):
            i, x = ins.letter
            path_text = ", ".join(
                f"{step.mode} {step.cell}: {step.value}" + (f" bumps {step.bumped}" if step.bumped else " placed")
                for step in ins.steps)
            out.write(f"step {n}: insert {x} (record {i}) -> {path_text}\n")
    out.write(f"S:\n{S}\nT:\n{T}\n")
    return EXIT_OK


def cmd_show(config: RunConfig, path: str, out) -> int:
    pp = io.pp_from_json(_read_json(path))
    analysis = analyze(pp)
    if config.output == "json":
        body = analysis.to_json()
        out.write(io.dumps(body))
        return EXIT_OK
    if config.render == "svg":
        out.write(svg_render(pp, analysis))
        return EXIT_OK
    text = ascii_render(pp, analysis)
    if text:
        out.write(text + "\n")
    out.write(f"k={analysis.k} A={a_poly(pp).factored()}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="macmahon", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rows", type=int, default=3)
    common.add_argument("--cols", type=int, default=3)
    common.add_argument("--smax", type=int, default=8, help="truncation degree in s")
    common.add_argument("--qtmax", type=int, default=4, help="total-degree truncation in q and t")
    common.add_argument("--cap", type=int, default=None, help="maximum number of enumerated items")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=None, help="random seed for sampled sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list plane partitions in a box")
    p.add_argument("--strict", action="store_true", help="strict plane partitions only")

    p = sub.add_parser("verify", parents=[common], help="check an identity coefficient by coefficient")
    p.add_argument("identity", choices=IDENTITIES + (RECOUNT,))
    p.add_argument("--timing", action="store_true", help="report wall-clock time")
    p.add_argument("--max-weight", type=int, default=None, help="largest s-degree allowed for enumeration")

    p = sub.add_parser("bijection", help="run a bijection on a JSON input")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("pi", parents=[common], help="strict plane partition <-> unmarked tableau pair")
    k.add_argument("--input", required=True, help="JSON file, or - for stdin")
    k.add_argument("--inverse", action="store_true")
    k = kinds.add_parser("knuth", parents=[common], help="marked matrix <-> marked tableau pair")
    source = k.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="JSON file, or - for stdin")
    source.add_argument("--random", type=int, metavar="MAX", help="random rows x cols matrix, magnitudes <= MAX")
    k.add_argument("--inverse", action="store_true")
    k.add_argument("--trace", action="store_true", help="print the encoding and every insertion")

    p = sub.add_parser("show", parents=[common], help="draw a plane partition with its components")
    p.add_argument("--input", required=True, help="JSON file, or - for stdin")
    p.add_argument("--render", choices=("ascii", "svg"), default="ascii")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        config = RunConfig(args.command, args.rows, args.cols, args.smax, args.qtmax, args.cap,
                           "json" if args.json else "text", getattr(args, "render", "none"), args.seed)
        if args.command == "enumerate":
            return cmd_enumerate(config, args.strict, out)
        if args.command == "verify":
            return cmd_verify(config, args.identity, out, args.timing, args.max_weight)
        if args.command == "bijection" and args.kind == "pi":
            return cmd_bijection_pi(config, args.input, args.inverse, out)
        if args.command == "bijection":
            return cmd_bijection_knuth(config, args.input, args.inverse, args.trace, out, args.random)
        return cmd_show(config, args.input, out)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, InvalidPair, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
