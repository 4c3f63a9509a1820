"""Command-line interface: verification, group computation, Hesse
analysis, and numerical search.

Each command prints one JSON document on stdout and a human-readable
summary on stderr.  Exit codes: 0 when the command's primary assertion
holds, 1 when it fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hesse as hessemod
from . import numsearch, symmetry
from .decomposition import (
    TAU_CANDIDATES,
    WaringDecomposition,
    verify_waring,
)
from .qfield import rational, rational_str

EXIT_OK = 0
EXIT_ASSERTION_FAILED = 1
EXIT_USAGE = 2


def _emit(report: dict, summary: str) -> None:
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    print(summary, file=sys.stderr)


def _load_decomposition(path, tau):
    if path is None:
        return WaringDecomposition.canonical(tau)
    with open(path) as fh:
        return WaringDecomposition.from_json(json.load(fh))


def cmd_verify(args) -> int:
    taus = TAU_CANDIDATES if args.tau_auto else (rational(args.tau),)
    outcomes = []
    any_match = False
    for tau in taus:
        try:
            d = _load_decomposition(args.file, tau)
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
            print(f"error: cannot load decomposition: {exc}", file=sys.stderr)
            return EXIT_USAGE
        rep = verify_waring(d)
        out = {"tau": rational_str(rep.tau_used),
               "exact_match": rep.exact_match}
        if not rep.exact_match:
            out["difference"] = rep.difference.to_json()
        outcomes.append(out)
        any_match = any_match or rep.exact_match
    report = {
        "command": "verify",
        "inputs": {"tau_auto": args.tau_auto,
                   "tau": args.tau, "file": args.file},
        "outcome": {"runs": outcomes, "verified": any_match},
        "exit_code": EXIT_OK if any_match else EXIT_ASSERTION_FAILED,
    }
    lines = [f"tau={o['tau']}: "
             + ("exact match" if o["exact_match"] else "MISMATCH")
             for o in outcomes]
    _emit(report, "; ".join(lines))
    return report["exit_code"]


def cmd_group(args) -> int:
    tau = rational(-2)
    d = WaringDecomposition.canonical(tau)
    gens = symmetry.generator_ops(tau)
    expected = 216
    if args.with_transpose:
        gens.append(symmetry.transpose_op(tau))
        expected *= 2
    if args.with_conjugation:
        gens.append(symmetry.conjugation_op(tau))
        expected *= 2
    rep = symmetry.closure(gens, d)
    elements = []
    for op, ip in zip(rep.elements, rep.permutations):
        entry = {
            "matrix": op.g.rep.to_json(),
            "transpose": op.transpose,
            "conjugate": op.conjugate,
            "perm": list(ip.perm),
            "scalars": [w.to_json() for w in ip.witnesses],
        }
        la = symmetry.label_action(ip)
        if la["block1"] is not None:
            entry["first_block_affine"] = {"A": [list(r) for r in la["block1"].a],
                                           "t": list(la["block1"].t)}
        elements.append(entry)
    ok = rep.order == expected
    report = {
        "command": "group",
        "inputs": {"with_transpose": args.with_transpose,
                   "with_conjugation": args.with_conjugation},
        "outcome": {"order": rep.order, "expected_order": expected,
                    "tau": rational_str(tau), "elements": elements},
        "exit_code": EXIT_OK if ok else EXIT_ASSERTION_FAILED,
    }
    _emit(report, f"group order {rep.order} (expected {expected})")
    return report["exit_code"]


def cmd_hesse(args) -> int:
    tau = rational(-2)
    try:
        if args.points:
            with open(args.points) as fh:
                data = json.load(fh)
            points = [hessemod.ProjPoint.from_json(p, tau)
                      for p in data["points"]]
        else:
            d = WaringDecomposition.canonical(tau)
            points = [hessemod.column_point(m) for m in d.matrices[:9]]
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: cannot load points: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        config = hessemod.build_configuration(points)
    except hessemod.DegenerateConfigurationError as exc:
        report = {"command": "hesse", "inputs": {"points": args.points},
                  "outcome": {"error": f"degenerate configuration: {exc}"},
                  "exit_code": EXIT_ASSERTION_FAILED}
        _emit(report, f"degenerate configuration: {exc}")
        return EXIT_ASSERTION_FAILED

    autos = hessemod.incidence_automorphisms(config)
    realizable = sum(
        1 for a in autos if hessemod.pgl_realizable(a, config) is not None)
    inflections = sum(1 for p in points if hessemod.inflection_check(p))
    is_hesse = (len(config.lines) == 12
                and config.lines == hessemod.affine_lines_f3()
                and len(autos) == 432 and realizable == 216
                and inflections == 9)
    outcome = {
        "lines": len(config.lines),
        "autos": len(autos),
        "realizable": realizable,
        "inflections": f"{inflections}/9",
        "is_hesse_configuration": is_hesse,
    }
    if args.emit_config:
        with open(args.emit_config, "w") as fh:
            json.dump(config.to_json() | {"tau": rational_str(tau)}, fh,
                      indent=2)
    report = {
        "command": "hesse",
        "inputs": {"points": args.points, "emit_config": args.emit_config},
        "outcome": outcome,
        "exit_code": EXIT_OK if is_hesse else EXIT_ASSERTION_FAILED,
    }
    summary = (f"lines={outcome['lines']} autos={outcome['autos']} "
               f"realizable={outcome['realizable']} "
               f"inflections={outcome['inflections']}")
    if not is_hesse:
        summary += " -- not a Hesse configuration"
    _emit(report, summary)
    return report["exit_code"]


def cmd_search(args) -> int:
    if args.n < 1 or args.rank < 1 or args.restarts < 1 or args.tol <= 0:
        print("error: --n, --rank, --restarts must be >= 1 and --tol > 0",
              file=sys.stderr)
        return EXIT_USAGE
    if args.from_exact:
        if args.n != 3 or args.rank != 18:
            print("error: --from-exact requires --n 3 --rank 18",
                  file=sys.stderr)
            return EXIT_USAGE
        d = WaringDecomposition.canonical(rational(-2))
        start = numsearch.perturbed_exact(d, seed=args.seed,
                                          magnitude=args.perturb)
        result = numsearch.polish(start, max_iters=args.max_iters,
                                  tolerance=args.tol, seed=args.seed)
    else:
        result = numsearch.search(args.n, args.rank, seed=args.seed,
                                  restarts=args.restarts,
                                  max_iters=args.max_iters,
                                  tolerance=args.tol, jobs=args.jobs)
    report = {
        "command": "search",
        "inputs": {"n": args.n, "rank": args.rank, "seed": args.seed,
                   "restarts": args.restarts, "max_iters": args.max_iters,
                   "tol": args.tol, "jobs": args.jobs,
                   "from_exact": args.from_exact, "perturb": args.perturb},
        "outcome": result.to_json(),
        "exit_code": EXIT_OK if result.converged else EXIT_ASSERTION_FAILED,
    }
    _emit(report, f"loss={result.loss:.3e} iterations={result.iterations} "
          f"converged={result.converged}")
    return report["exit_code"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="waringlab",
        description="Exact Waring-decomposition verification workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify the rank-18 decomposition")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--tau", help="cube of the scalar a, as p/q")
    group.add_argument("--tau-auto", action="store_true",
                       help="try tau = -1/2 and tau = -2, report both")
    p.add_argument("--file", help="decomposition JSON file (default: built-in)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("group", help="compute the symmetry group closure")
    p.add_argument("--with-transpose", action="store_true")
    p.add_argument("--with-conjugation", action="store_true")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("hesse", help="analyze the rank-one point configuration")
    p.add_argument("--points", help="JSON file of 9 projective points")
    p.add_argument("--emit-config", help="write configuration JSON here")
    p.set_defaults(func=cmd_hesse)

    p = sub.add_parser("search", help="numerical decomposition search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--max-iters", type=int,
                   default=numsearch.DEFAULT_MAX_ITERS)
    p.add_argument("--tol", type=float, default=numsearch.DEFAULT_TOLERANCE)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--from-exact", action="store_true",
                   help="start from a perturbation of the exact solution")
    p.add_argument("--perturb", type=float, default=1e-3)
    p.set_defaults(func=cmd_search)
    return parser


def _merge_tau(argv):
    """Join "--tau -1/2" into "--tau=-1/2" so argparse does not mistake the
    negative rational for an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--tau":
            val = next(it, None)
            if val is None:
                out.append(tok)
            else:
                out.append(f"--tau={val}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_tau(argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.command == "verify" and not args.tau_auto:
            rational(args.tau)
    except (ValueError, ZeroDivisionError):
        print(f"error: bad rational {args.tau!r}", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
