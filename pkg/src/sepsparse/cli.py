"""Command-line interface: project / recover / gen / bench.

Exit codes: 0 on success, 2 on configuration errors, 3 when the requested
parameters admit no feasible support.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import bench as bench_mod
from .dp import dp_solve, dp_solve_2spike
from .generators import gen_poisson, gen_uniform
from .head import head_project
from .model import Instance, InfeasibleParameters, brute_force_solve, objective
from .recovery import am_iht, default_measurement_count, gen_sensing, measure, random_feasible_support
from .seeding import derive_seed, make_rng
from .serialize import read_vector, write_support, write_vector
from .tail import tail_project, topk_tail_project

__all__ = ["main", "run"]

EXIT_CONFIG = 2
EXIT_INFEASIBLE = 3


class ConfigError(Exception):
    pass


def _project_opt(x, k, delta, spikes):
    """Exact optimum for ratio reporting, skipped when a DP would be too big."""
    cost = k * delta * x.size if spikes == 2 else k * x.size
    if spikes > 2 or cost > 5e7:
        return None
    if spikes == 2:
        values, _ = dp_solve_2spike(x, k, delta)
    else:
        values, _ = dp_solve(x, k, delta)
    return float(values[-1])


def _resolve_spikes(args) -> int:
    spikes = args.spikes if args.spikes is not None else (2 if args.algo == "dp2" else 1)
    if spikes < 1:
        raise ConfigError("--spikes must be >= 1")
    allowed = {"dp": (1,), "dp2": (2,), "tail": (1,), "topk": (1,), "head": (1, 2)}
    if args.algo in allowed and spikes not in allowed[args.algo]:
        raise ConfigError(f"--algo {args.algo} supports --spikes {allowed[args.algo]}, got {spikes}")
    return spikes


def _cmd_project(args) -> int:
    x = read_vector(args.infile)
    if x.size == 0:
        raise ConfigError(f"{args.infile} contains no values")
    if float(x.min()) < 0:
        raise ConfigError("input vector has negative entries; square it first")
    if args.k < 1 or args.delta < 1:
        raise ConfigError("k and delta must be >= 1")
    spikes = _resolve_spikes(args)
    needs_eps = args.algo in ("head", "tail")
    if needs_eps and args.epsilon is None:
        raise ConfigError(f"--epsilon is required for --algo {args.algo}")

    start = time.perf_counter()
    if args.algo == "dp":
        values, sols = dp_solve(x, args.k, args.delta)
        support = sols[-1]
    elif args.algo == "dp2":
        values, sols = dp_solve_2spike(x, args.k, args.delta)
        support = sols[-1]
    elif args.algo == "head":
        support = head_project(x, args.k, args.delta, spikes, args.epsilon)
    elif args.algo == "tail":
        support = tail_project(x, args.k, args.delta, args.epsilon)
    elif args.algo == "topk":
        support = topk_tail_project(x, args.k, args.delta)
    else:  # oracle
        support, _ = brute_force_solve(Instance(x, args.k, args.delta, spikes))
    runtime_ms = 1000.0 * (time.perf_counter() - start)

    value = objective(x, support)
    result = {
        "algo": args.algo,
        "n": int(x.size),
        "k": args.k,
        "delta": args.delta,
        "spikes": spikes,
        "support": list(support),
        "value": value,
        "runtime_ms": round(runtime_ms, 3),
    }
    if args.algo in ("head", "tail", "topk"):
        opt = _project_opt(x, args.k, args.delta, spikes if args.algo == "head" else 1)
        if opt is not None:
            result["opt"] = opt
            result["head_ratio"] = value / opt if opt > 0 else None
            total = float(x.sum())
            opt_leftover = total - opt
            result["tail_ratio"] = (total - value) / opt_leftover if opt_leftover > 1e-12 else None
    _emit_json(result, args.out)
    return 0


def _cmd_recover(args) -> int:
    if args.n < 1 or args.k < 1 or args.delta < 1:
        raise ConfigError("n, k and delta must be >= 1")
    if args.iters < 0:
        raise ConfigError("--iters must be >= 0")
    m = args.m if args.m is not None else default_measurement_count(args.n, args.k)
    if m < 1:
        raise ConfigError("m must be >= 1")

    model = gen_sensing(m, args.n, derive_seed(args.seed, 0))
    support = random_feasible_support(
        args.n, args.k, args.delta, 1, make_rng(args.seed, 1)
    )
    coeffs = make_rng(args.seed, 2).standard_normal(args.k)
    x_true = np.zeros(args.n)
    x_true[np.asarray(support, dtype=np.intp) - 1] = coeffs
    obs = measure(model, x_true, args.sigma, derive_seed(args.seed, 3))
    x_hat, trace = am_iht(
        obs.y,
        model,
        args.k,
        args.delta,
        args.iters,
        args.eps,
        args.eps,
        x_true=x_true,
        stop_tol=args.stop_tol,
    )

    lines = ["iteration,residual,proxy"]
    for it, (res, proxy) in enumerate(zip(trace.residuals, trace.proxies)):
        lines.append(f"{it},{res:.12g},{proxy:.12g}")
    csv_text = "\n".join(lines) + "\n"
    summary = {
        "n": args.n,
        "k": args.k,
        "delta": args.delta,
        "m": m,
        "sigma": args.sigma,
        "iterations": trace.iterations,
        "support": list(trace.supports[-1]),
        "true_support": list(support),
        "residual": trace.residuals[-1],
        "proxy": trace.proxies[-1],
        "noise_norm": float(np.linalg.norm(obs.e)),
    }
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv_text)
        _emit_json(summary, None)
    else:
        sys.stdout.write(csv_text)
        json.dump(summary, sys.stderr)
        sys.stderr.write("\n")
    _ = x_hat
    return 0


def _cmd_gen(args) -> int:
    if args.n < 1:
        raise ConfigError("--n must be >= 1")
    if args.kind == "poisson":
        if args.gap is None or args.gap < 1:
            raise ConfigError("poisson generation needs --gap >= 1")
        x, spikes = gen_poisson(args.n, args.gap, args.seed)
        if args.spikes_out:
            write_support(args.spikes_out, spikes)
    else:
        x = gen_uniform(args.n, args.seed)
    if args.out:
        write_vector(args.out, x)
    else:
        sys.stdout.write("".join(f"{v!r}\n" for v in x.tolist()))
    return 0


def _cmd_bench(args) -> int:
    fmt = "dat" if args.tikz_dat else args.format
    rows = bench_mod.run_preset(args.preset, seed=args.seed, repeats=args.repeats)
    if fmt == "dat":
        if not args.out:
            raise ConfigError("--format dat needs --out as a filename prefix")
        written = bench_mod.rows_to_dat(rows, args.out)
        print("\n".join(written))
        return 0
    writer = bench_mod.rows_to_csv if fmt == "csv" else bench_mod.rows_to_json
    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer(rows, fh)
    else:
        writer(rows, sys.stdout)
    return 0


def _emit_json(payload, out) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepsparse",
        description="Projection and recovery toolkit for separated-sparsity models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    proj = sub.add_parser("project", help="project a weight vector onto the model")
    proj.add_argument("--in", dest="infile", required=True, help="vector file, one number per line")
    proj.add_argument("--k", type=int, required=True)
    proj.add_argument("--delta", type=int, required=True)
    proj.add_argument("--spikes", type=int, default=None,
                      help="spike count; defaults to 2 for dp2, otherwise 1")
    proj.add_argument(
        "--algo", required=True, choices=["dp", "dp2", "head", "tail", "topk", "oracle"]
    )
    proj.add_argument("--epsilon", type=float, default=None)
    proj.add_argument("--out", default=None, help="write the JSON result here instead of stdout")
    proj.set_defaults(func=_cmd_project)

    rec = sub.add_parser("recover", help="simulate measurement and run the recovery loop")
    rec.add_argument("--n", type=int, required=True)
    rec.add_argument("--k", type=int, required=True)
    rec.add_argument("--delta", type=int, required=True)
    rec.add_argument("--m", type=int, default=None, help="default ceil(6 k ln n), clamped to [1, n]")
    rec.add_argument("--sigma", type=float, default=0.0)
    rec.add_argument("--iters", type=int, default=30)
    rec.add_argument("--eps", type=float, default=0.01)
    rec.add_argument("--seed", type=int, default=0)
    rec.add_argument("--stop-tol", type=float, default=None)
    rec.add_argument("--out", default=None, help="trace CSV path (stdout when omitted)")
    rec.set_defaults(func=_cmd_recover)

    gen = sub.add_parser("gen", help="generate a random instance vector")
    gen.add_argument("--kind", required=True, choices=["uniform", "poisson"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--gap", type=float, default=None, help="expected spike gap (poisson)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None)
    gen.add_argument("--spikes-out", default=None, help="also write the spike support here")
    gen.set_defaults(func=_cmd_gen)

    ben = sub.add_parser("bench", help="run a benchmark preset")
    ben.add_argument("--preset", required=True, choices=sorted(bench_mod.PRESETS))
    ben.add_argument("--out", default=None)
    ben.add_argument("--format", choices=["csv", "dat", "json"], default="csv")
    ben.add_argument("--tikz-dat", action="store_true", help="shorthand for --format dat")
    ben.add_argument("--seed", type=int, default=0)
    ben.add_argument("--repeats", type=int, default=None)
    ben.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleParameters as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def run() -> None:
    raise SystemExit(main())
