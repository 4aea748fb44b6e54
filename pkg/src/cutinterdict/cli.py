"""Command-line front end.

    cutinterdict solve INSTANCE [--json] [--seed S] [--epsilon E] [--enum M]
    cutinterdict oracle INSTANCE
    cutinterdict check INSTANCE...
    cutinterdict lambda INSTANCE
    cutinterdict enumerate INSTANCE [--threshold-mult Q]
    cutinterdict gen N M [--wmax W] [--cmax C] [--bmax B] [--seed S]

Exit codes: 0 success, 1 solver/oracle mismatch, 2 bad input or a size
guard, 3 internal assertion (dual certificate printed to stderr).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .engine import GraphCutFamily, InternalError, Options, Solution, solve, zero_optimum
from .enumeration import EXHAUSTIVE_LIMIT, DEFAULT_REPETITION_CAP, EnumerationError
from .generate import random_instance
from .instance import InstanceError, format_instance, parse_instance, truncate_weights
from .lagrangian import ActiveLine, LagrangianError, LambdaCertificate, find_lambda_star
from .oracle import OracleLimitError, brute_solve

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def rational(x):
    if x is None:
        return None
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def unrational(d):
    return None if d is None else Fraction(d["num"], d["den"])


def line_to_dict(line: ActiveLine) -> dict:
    return {"intercept": rational(line.intercept), "slope": line.slope, "S": list(line.S), "R": list(line.R)}


def certificate_to_dict(cert: LambdaCertificate) -> dict:
    return {
        "lambda_star": rational(cert.lambda_star),
        "L_star": rational(cert.L_star),
        "Lambda": rational(cert.Lambda),
        "line_lo": line_to_dict(cert.line_lo),
        "line_hi": line_to_dict(cert.line_hi),
        "iterations": cert.iterations,
    }


def solution_to_dict(sol: Solution) -> dict:
    return {
        "value": sol.value,
        "S": list(sol.S),
        "R": list(sol.R),
        "lambda_star": rational(sol.lambda_star),
        "L_star": rational(sol.L_star),
        "Lambda": rational(sol.Lambda),
        "candidates": sol.candidates,
        "degenerate": sol.degenerate,
        "disconnected": sol.disconnected,
        "seed": sol.seed,
        "enumeration": sol.enumeration,
        "repetitions": sol.repetitions,
        "knapsack": sol.knapsack,
        "epsilon": rational(sol.epsilon),
        "strict": sol.strict,
        "certificate": certificate_to_dict(sol.certificate) if sol.certificate else None,
        "timings_ms": sol.timings_ms,
    }


def solution_from_dict(d: dict) -> Solution:
    return Solution(
        value=d["value"], S=tuple(d["S"]), R=tuple(d["R"]),
        lambda_star=unrational(d["lambda_star"]), L_star=unrational(d["L_star"]),
        Lambda=unrational(d["Lambda"]), candidates=d["candidates"], degenerate=d["degenerate"],
        enumeration=d.get("enumeration"), repetitions=d.get("repetitions", 0), seed=d.get("seed", 0),
        knapsack=d.get("knapsack", "exact"), epsilon=unrational(d.get("epsilon")),
        strict=d.get("strict", True), disconnected=d.get("disconnected", False),
        timings_ms=d.get("timings_ms", {}),
    )


def _fmt(x) -> str:
    return "-" if x is None else str(Fraction(x))


def _ids(S) -> str:
    return "{" + ", ".join(map(str, S)) + "}"


def _read(path):
    if path == "-":
        return parse_instance(sys.stdin.read())
    with open(path) as fh:
        return parse_instance(fh.read())


def _options(args) -> Options:
    return Options(
        knapsack="fptas" if args.epsilon is not None else "exact",
        epsilon=args.epsilon,
        enum=args.enum,
        exhaustive_limit=args.exhaustive_limit,
        seed=args.seed,
        delta=args.delta,
        repetition_cap=args.rep_cap,
        strict=not args.non_strict,
    )


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_solve(args) -> int:
    inst = _read(args.instance)
    sol = solve(inst, _options(args))
    lines = [
        f"value      {sol.value}",
        f"S          {_ids(sol.S)}",
        f"R          {_ids(sol.R)}",
    ]
    if sol.degenerate:
        lines.append("degenerate a cut is fully removable within budget" +
                     (" (graph disconnected)" if sol.disconnected else ""))
    else:
        lines += [
            f"lambda*    {_fmt(sol.lambda_star)}",
            f"L*         {_fmt(sol.L_star)}",
            f"Lambda     {_fmt(sol.Lambda)}",
            f"candidates {sol.candidates} ({sol.enumeration}"
            + (f", {sol.repetitions} repetitions" if sol.enumeration == "contraction" else "") + ")",
        ]
    if not sol.strict:
        lines.append("note       non-strict threshold (non-canonical)")
    _emit(args, solution_to_dict(sol), "\n".join(lines))
    return EXIT_OK


def cmd_oracle(args) -> int:
    inst = _read(args.instance)
    rep = brute_solve(inst)
    payload = {
        "value": rep.value, "S": list(rep.best_S), "R": list(rep.best_R),
        "table": [{"cut": list(C), "residual": g} for C, g in rep.table],
    }
    text = "\n".join([f"value {rep.value}", f"S     {_ids(rep.best_S)}", f"R     {_ids(rep.best_R)}",
                      f"cuts  {len(rep.table)}"]
                     + [f"  {_ids(C)} -> {g}" for C, g in rep.table])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_check(args) -> int:
    status = EXIT_OK
    for path in args.instance:
        inst = _read(path)
        rep = brute_solve(inst)
        sol = solve(inst, _options(args))
        if sol.value == rep.value:
            print(f"ok       {path}: value {sol.value}")
        else:
            status = EXIT_MISMATCH
            print(f"MISMATCH {path}: solver {sol.value} S={_ids(sol.S)} R={_ids(sol.R)}; "
                  f"oracle {rep.value} S={_ids(rep.best_S)} R={_ids(rep.best_R)}")
    return status


def cmd_lambda(args) -> int:
    inst = _read(args.instance)
    family = GraphCutFamily(inst, _options(args))
    zero = zero_optimum(inst, family)
    if zero is not None:
        msg = f"optimum is 0: delete {_ids(zero[1])} from cut {_ids(zero[0])}"
        _emit(args, {"degenerate": True, "S": list(zero[0]), "R": list(zero[1])}, f"degenerate: {msg}")
        return EXIT_OK
    cert = find_lambda_star(inst, family)
    text = "\n".join([
        f"lambda* {_fmt(cert.lambda_star)}",
        f"L*      {_fmt(cert.L_star)}",
        f"Lambda  {_fmt(cert.Lambda)}",
        f"lo line {_fmt(cert.line_lo.intercept)} + lambda*({cert.line_lo.slope})  S={_ids(cert.line_lo.S)} R={_ids(cert.line_lo.R)}",
        f"hi line {_fmt(cert.line_hi.intercept)} + lambda*({cert.line_hi.slope})  S={_ids(cert.line_hi.S)} R={_ids(cert.line_hi.R)}",
    ])
    _emit(args, certificate_to_dict(cert), text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    inst = _read(args.instance)
    opts = _options(args)
    family = GraphCutFamily(inst, opts)
    zero = zero_optimum(inst, family)
    if zero is not None:
        msg = f"optimum is 0: delete {_ids(zero[1])} from cut {_ids(zero[0])}"
        _emit(args, {"degenerate": True, "S": list(zero[0]), "R": list(zero[1])}, f"degenerate: {msg}")
        return EXIT_OK
    cert = find_lambda_star(inst, family)
    q = Fraction(args.threshold_mult)
    weights = truncate_weights(inst, cert.lambda_star)
    cuts = family.cut_family(weights, q * cert.L_star, opts.strict, opts.seed)
    payload = {
        "threshold": rational(cuts.threshold), "strict": cuts.strict, "method": cuts.method,
        "repetitions": cuts.repetitions, "seed": cuts.seed, "lambda_star": rational(cert.lambda_star),
        "cuts": [{"side": sorted(c.side), "edges": list(c.cut_edges), "value": rational(c.value)}
                 for c in cuts.cuts],
    }
    rel = "<" if cuts.strict else "<="
    text = "\n".join([f"{len(cuts.cuts)} cuts with value {rel} {_fmt(cuts.threshold)} ({cuts.method})"]
                     + [f"  {_fmt(c.value):>8}  edges {_ids(c.cut_edges)}  side {_ids(sorted(c.side))}"
                        for c in cuts.cuts])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_gen(args) -> int:
    inst = random_instance(args.n, args.m, args.wmax, args.cmax, args.bmax, args.seed)
    sys.stdout.write(format_instance(
        inst, f"gen n={args.n} m={args.m} wmax={args.wmax} cmax={args.cmax} bmax={args.bmax} seed={args.seed}"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutinterdict", description="Budgeted min-cut interdiction solver.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--epsilon", type=Fraction, default=None,
                        help="use the FPTAS knapsack with this epsilon in (0, 1)")
    common.add_argument("--enum", choices=["auto", "exhaustive", "contraction"], default="auto")
    common.add_argument("--exhaustive-limit", type=int, default=EXHAUSTIVE_LIMIT)
    common.add_argument("--delta", type=Fraction, default=None,
                        help="contraction failure probability (default 1/n)")
    common.add_argument("--rep-cap", type=int, default=DEFAULT_REPETITION_CAP,
                        help="maximum contraction repetitions")
    common.add_argument("--non-strict", action="store_true",
                        help="enumerate with <= instead of < (non-canonical)")

    for name, func, many in [("solve", cmd_solve, False), ("oracle", cmd_oracle, False),
                             ("check", cmd_check, True), ("lambda", cmd_lambda, False)]:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("instance", nargs="+" if many else None, help="instance file, or - for stdin")
        p.set_defaults(func=func)

    p = sub.add_parser("enumerate", parents=[common])
    p.add_argument("instance")
    p.add_argument("--threshold-mult", type=Fraction, default=Fraction(2))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("gen")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--wmax", type=int, default=10)
    p.add_argument("--cmax", type=int, default=10)
    p.add_argument("--bmax", type=int, default=15)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, EnumerationError, OracleLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        if exc.certificate is not None:
            print(json.dumps({"certificate": certificate_to_dict(exc.certificate)}), file=sys.stderr)
        return EXIT_INTERNAL
    except (LagrangianError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
