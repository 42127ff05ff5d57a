"""Command-line entry point.

All machine-readable output (JSON documents, CSV tables) goes to stdout
or the --out file; short human summaries go to stderr.  Stochastic
subcommands require an explicit --seed so that identical invocations
always produce byte-identical output files.

Exit codes: 0 success, 2 parameter or input validation failure,
1 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import agcode, dqi_model, hopi, solvers
from .curve import genus, rational_points
from .errors import HopilabError, ValidationError


def _dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _parse_int_list(raw: str, flag: str) -> list[int]:
    try:
        values = [int(part) for part in raw.split(",") if part.strip() != ""]
    except ValueError:
        raise ValidationError(f"{flag} expects a comma-separated integer list, got {raw!r}")
    if not values:
        raise ValidationError(f"{flag} must contain at least one value")
    return values


def _cmd_params(args) -> int:
    if not dqi_model.is_prime_power(args.q):
        raise ValidationError(f"q={args.q} is not a prime power")
    g = genus(args.q)
    n = args.q**3
    ell = dqi_model.ell_from_params(args.q, args.t)
    payload = {
        "q": args.q,
        "t": args.t,
        "n": n,
        "k": args.t + 1 - g,
        "g": g,
        "d_designed": n - args.t,
        "t_dual": agcode.dual_parameter(args.q, args.t),
        "ell": ell,
    }
    _emit(_dump_json(payload), args.out)
    return 0


def _cmd_points(args) -> int:
    points = rational_points(args.q)
    payload = {"q": args.q, "n": len(points), "points": [[p.x, p.y] for p in points]}
    _emit(_dump_json(payload), args.out)
    _note(f"{len(points)} rational points on the q={args.q} Hermitian curve")
    return 0


def _cmd_code_info(args) -> int:
    code = agcode.build_code(args.q, args.t)
    payload = {
        "q": code.q,
        "t": code.t,
        "n": code.n,
        "k": code.k,
        "d_designed": code.d_designed,
        "t_dual": code.t_dual,
        "basis": [[a, b] for a, b in code.basis],
    }
    _emit(_dump_json(payload), args.out)
    return 0


def _cmd_dual_check(args) -> int:
    g = genus(args.q)
    ts = [args.t] if args.t is not None else list(range(2 * g - 1, args.q**3))
    results = []
    for t in ts:
        report = agcode.check_duality(args.q, t)
        results.append(
            {
                "t": report.t,
                "t_dual": report.t_dual,
                "orthogonal": report.orthogonal,
                "rank_sum": report.rank_sum,
                "passed": report.passed,
            }
        )
    all_passed = all(r["passed"] for r in results)
    _emit(_dump_json({"q": args.q, "all_passed": all_passed, "results": results}), args.out)
    _note(f"dual-check q={args.q}: {sum(r['passed'] for r in results)}/{len(results)} passed")
    return 0


def _cmd_distance(args) -> int:
    code = agcode.build_code(args.q, args.t)
    d_min = agcode.min_distance_bruteforce(code, budget=args.budget)
    payload = {
        "q": code.q,
        "t": code.t,
        "n": code.n,
        "k": code.k,
        "d_designed": code.d_designed,
        "d_min": d_min,
        "budget": args.budget,
    }
    _emit(_dump_json(payload), args.out)
    _note(f"exact minimum distance {d_min} (designed bound {code.d_designed})")
    return 0


def _cmd_gen_instance(args) -> int:
    inst = hopi.random_instance(args.q, args.t, args.r, args.seed)
    hopi.write_instance(inst, args.out)
    _note(f"wrote instance q={args.q} t={args.t} r={args.r} seed={args.seed} to {args.out}")
    return 0


def _cmd_solve(args) -> int:
    inst = hopi.read_instance(args.instance)
    if args.alg in ("prange", "sa") and args.seed is None:
        raise ValidationError(f"--seed is required for --alg {args.alg}")
    if args.alg == "prange":
        solver = solvers.prange_solve
    elif args.alg == "sa":
        schedule = None
        if args.schedule is not None:
            parts = args.schedule.split(",")
            if len(parts) != 3:
                raise ValidationError("--schedule expects steps,t_initial,t_final")
            try:
                schedule = solvers.make_schedule(int(parts[0]), float(parts[1]), float(parts[2]))
            except ValueError:
                raise ValidationError(f"malformed --schedule value {args.schedule!r}")

        def solver(instance, seed, _schedule=schedule):
            return solvers.simulated_annealing(instance, seed, _schedule)

    else:  # brute
        result = solvers.brute_force_optimum(inst, budget=args.budget)
        return _finish_solve(result, inst, args.out)

    if args.trials < 1:
        raise ValidationError("--trials must be at least 1")
    if args.trials == 1:
        result = solver(inst, args.seed)
    else:
        result = solvers.best_of(solver, inst, args.trials, args.seed)
    return _finish_solve(result, inst, args.out)


def _finish_solve(result: solvers.SolveResult, inst: hopi.HopiInstance, out: str | None) -> int:
    # elapsed is intentionally left out of the file: outputs must be
    # byte-identical across runs with the same seed.
    payload = {
        "algorithm": result.algorithm,
        "msg": result.msg,
        "satisfied": result.satisfied,
        "seed": result.seed,
        "trials": result.trials,
    }
    _emit(_dump_json(payload), out)
    _note(
        f"{result.algorithm}: satisfied {result.satisfied}/{inst.n} "
        f"(trials={result.trials}, elapsed={result.elapsed:.3f}s)"
    )
    return 0


def _cmd_sweep_fig1a(args) -> int:
    points = dqi_model.sweep_fig1a(args.q)
    dqi_model.write_fig1a_csv(args.out, points)
    _note(f"wrote {len(points)} rows to {args.out}")
    return 0


def _cmd_sweep_fig1b(args) -> int:
    q_list = _parse_int_list(args.q_list, "--q-list")
    points = dqi_model.sweep_fig1b(args.rate, q_list)
    dqi_model.write_fig1b_csv(args.out, points)
    _note(f"wrote {len(points)} rows to {args.out}")
    return 0


def _cmd_sweep_fig2(args) -> int:
    q_list = _parse_int_list(args.q_list, "--q-list")
    r_grid = None if args.r_grid is None else _parse_int_list(args.r_grid, "--r-grid")
    points = dqi_model.sweep_fig2(args.rate, q_list, r_grid)
    dqi_model.write_fig2_csv(args.out, points)
    argmax = dqi_model.fig2_argmax(points)
    for q in sorted(argmax):
        pt = argmax[q]
        _note(f"q={q}: peak ratio {pt.ratio:.6f} at r={pt.r:g} (r/q^2={pt.r_frac:.6f})")
    _note(f"wrote {len(points)} rows to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopilab",
        description="Hermitian codes, HOPI instances, classical solvers, "
        "and the DQI semicircle performance model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--out", help="write output to this file instead of stdout")
        return p

    p = add("params", _cmd_params, "derived code and model parameters for (q, t)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = add("points", _cmd_points, "enumerate the affine rational points")
    p.add_argument("--q", type=int, required=True)

    p = add("code-info", _cmd_code_info, "code parameters and monomial basis")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = add("dual-check", _cmd_dual_check, "certify C_t-perp = C_t' numerically")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, help="single t to check (default: all valid t)")

    p = add("distance", _cmd_distance, "exact minimum distance by enumeration")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int, default=agcode.DEFAULT_ENUM_BUDGET)

    p = add("gen-instance", _cmd_gen_instance, "sample and write a random instance")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = add("solve", _cmd_solve, "run a solver against an instance file")
    p.add_argument("--alg", choices=("prange", "sa", "brute"), required=True)
    p.add_argument("--instance", required=True)
    p.add_argument("--seed", type=int, help="required for prange and sa")
    p.add_argument("--trials", type=int, default=1, help="best-of repetitions")
    p.add_argument("--schedule", help="sa schedule as steps,t_initial,t_final")
    p.add_argument("--budget", type=int, default=solvers.DEFAULT_BRUTE_BUDGET)

    p = add("sweep-fig1a", _cmd_sweep_fig1a, "balanced-case fractions vs code rate")
    p.add_argument("--q", type=int, required=True)

    p = add("sweep-fig1b", _cmd_sweep_fig1b, "balanced-case fractions vs field size")
    p.add_argument("--rate", type=float, required=True)
    p.add_argument("--q-list", default=",".join(map(str, dqi_model.DEFAULT_MODEL_Q_LIST)))

    p = add("sweep-fig2", _cmd_sweep_fig2, "advantage-ratio surface over (q, r)")
    p.add_argument("--rate", type=float, required=True)
    p.add_argument("--q-list", default=",".join(map(str, dqi_model.DEFAULT_MODEL_Q_LIST)))
    p.add_argument("--r-grid", help="comma-separated r values (default: 1..q^2 per q)")

    return parser


# sweep and generation commands write files, not stdout
_OUT_REQUIRED = {"gen-instance", "sweep-fig1a", "sweep-fig1b", "sweep-fig2"}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command in _OUT_REQUIRED and args.out is None:
        print(f"error: {args.command} requires --out", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HopilabError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
