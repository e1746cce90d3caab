"""Command-line front end.

Subcommands:
    increment    evaluate one iteration's increment and coefficients
    table        emit the fixed-point trajectory table as CSV
    figure       emit the data series behind the standard plots
    search       generate a schedule, run it, write the trajectory
    export-qasm  write an OpenQASM 3 circuit, optionally replay-verified

All data outputs are deterministic for a fixed seed: CSV columns are
printed with 6 decimal places, JSON carries full double precision.  A JSON
config file may supply any flag; command-line values win.  The environment
variable QAA_OUTPUT_DIR sets the default output directory.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import engine, qasm, schedules, statevector as sv
from .reference_tables import FIXED_POINT_N8_L21, MAIN_TABLE_ROWS
from .subspace import (
    IterationParams,
    StateAngles,
    coefficients,
    increment,
    initial_angles,
    qaao_region_fraction,
)

SEARCH_KINDS = ("random-qaao", "optimal", "noisy-optimal", "fixed-point", "pi3")


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    if not path.is_absolute() and (base := os.environ.get("QAA_OUTPUT_DIR")):
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_increment(args: argparse.Namespace) -> int:
    state = StateAngles(args.theta, args.phi)
    theta0 = initial_angles(args.n, args.m).theta
    params = IterationParams(args.beta, args.gamma)
    delta = increment(params, state, theta0)
    coef = coefficients(params, state, theta0)
    amplifying = coef.b > args.c / math.sqrt(2**args.n)
    lines = [
        f"increment {delta:.6f}",
        f"A {coef.a:.6f}",
        f"B {coef.b:.6f}",
        f"C {coef.c_coef:.6f}",
        f"qaao {'O' if amplifying else 'X'}",
    ]
    _write("\n".join(lines) + "\n", args.out)
    return 0


def _table_rows(n: int, length: int, delta: float) -> list[dict]:
    seq = schedules.fixed_point_sequence(length, delta)
    oracle = sv.OracleSpec(n, frozenset({"0" * n}))
    traj = engine.run_search(seq, oracle)
    return [
        {
            "no": s.index,
            "theta": s.state_before.theta,
            "phi": s.state_before.phi,
            "beta": s.params.beta,
            "gamma": s.params.gamma,
            "increment": s.increment,
            "qaao": "O" if s.qaao_flag else "X",
        }
        for s in traj.steps
    ]


def cmd_table(args: argparse.Namespace) -> int:
    rows = _table_rows(args.n, args.L, args.delta)
    if args.kind == "main":
        rows = [r for r in rows if r["no"] in MAIN_TABLE_ROWS]
    if args.format == "json":
        _write(json.dumps(rows, sort_keys=True) + "\n", args.out)
        return 0
    lines = ["no,theta,phi,beta,gamma,increment,qaao"]
    for r in rows:
        lines.append(
            f"{r['no']},{r['theta']:.6f},{r['phi']:.6f},{r['beta']:.6f},"
            f"{r['gamma']:.6f},{r['increment']:.6f},{r['qaao']}"
        )
    _write("\n".join(lines) + "\n", args.out)
    return 0


def _figure_fig1b(args) -> tuple[list[str], list]:
    steps = schedules.k_star(args.n, args.m)
    traj = engine.grover_baseline(args.n, args.m, steps)
    rows = [
        {"step": s.index, "probability": s.probability_after} for s in traj.steps
    ]
    return ["step", "probability"], rows


def _figure_fig3(args) -> tuple[list[str], list]:
    rows = []
    for delta in (0.05 * math.pi, 0.2 * math.pi, 0.3 * math.pi):
        seq = schedules.noisy_optimal_sequence(args.n, delta, seed=args.seed, m=args.m)
        oracle = sv.OracleSpec(args.n, frozenset({"0" * args.n}))
        traj = engine.run_search(seq, oracle)
        for s in traj.steps:
            rows.append(
                {
                    "delta": delta,
                    "step": s.index,
                    "queries": s.cumulative_queries,
                    "probability": s.probability_after,
                }
            )
    return ["delta", "step", "queries", "probability"], rows


def _figure_fig4(args) -> dict:
    return engine.compare(
        [
            ("fixed-point", {"length": args.L, "delta": 0.316}),
            ("pi3", {}),
            ("random-qaao", {"seed": args.seed, "c": args.c}),
        ],
        n=args.n,
        m=args.m,
        threshold=0.9,
        seed=args.seed,
    )


def _figure_region(args) -> dict:
    import numpy as np

    from .subspace import amplification_coefficient, region_boundary

    theta0 = initial_angles(args.n, args.m).theta
    res = args.resolution
    axis = np.linspace(-math.pi, math.pi, res, endpoint=False) + math.pi / res
    beta, gamma = np.meshgrid(axis, axis, indexing="ij")
    b = amplification_coefficient(beta, gamma, 0.0, theta0)
    boundary = []
    for bt in axis:
        try:
            boundary.append([float(bt), region_boundary(float(bt), theta0)])
        except ValueError:
            continue
    return {
        "n": args.n,
        "resolution": res,
        "positive_fraction": float(np.mean(b > 0.0)),
        "boundary": boundary,
    }


def _figure_fig7(args) -> tuple[list[str], list]:
    seq = schedules.fixed_point_sequence(args.L, 0.316)
    oracle = sv.OracleSpec(args.n, frozenset({"0" * args.n}))
    traj = engine.run_search(seq, oracle)
    rows = [
        {
            "step": s.index,
            "queries": s.cumulative_queries,
            "probability": s.probability_after,
        }
        for s in traj.steps
    ]
    return ["step", "queries", "probability"], rows


def cmd_figure(args: argparse.Namespace) -> int:
    if args.id in ("fig4", "region"):
        payload = _figure_fig4(args) if args.id == "fig4" else _figure_region(args)
        _write(json.dumps(payload, sort_keys=True) + "\n", args.out)
        return 0
    header, rows = {
        "fig1b": _figure_fig1b,
        "fig3": _figure_fig3,
        "fig7": _figure_fig7,
    }[args.id](args)
    if args.format == "json":
        _write(json.dumps(rows, sort_keys=True) + "\n", args.out)
        return 0
    lines = [",".join(header)]
    for r in rows:
        cells = [
            f"{r[k]:.6f}" if isinstance(r[k], float) else str(r[k]) for k in header
        ]
        lines.append(",".join(cells))
    _write("\n".join(lines) + "\n", args.out)
    return 0


def _build_sequence(args) -> schedules.ParameterSequence:
    if args.kind == "random-qaao":
        return schedules.generate_qaao_sequence(args.n, args.m, c=args.c, seed=args.seed)
    if args.kind == "optimal":
        return schedules.optimal_sequence(args.n, args.m)
    if args.kind == "noisy-optimal":
        return schedules.noisy_optimal_sequence(args.n, args.delta, seed=args.seed, m=args.m)
    if args.kind == "fixed-point":
        return schedules.fixed_point_sequence(args.L, args.delta if args.delta else 0.316)
    raise ValueError(f"unknown kind {args.kind!r}")


def cmd_search(args: argparse.Namespace) -> int:
    target = args.target or "0" * args.n
    oracle = (
        sv.OracleSpec.single(target)
        if args.m == 1
        else sv.OracleSpec(args.n, frozenset(format(i, f"0{args.n}b") for i in range(args.m)))
    )
    if args.kind == "pi3":
        theta0 = initial_angles(args.n, args.m).theta
        rows = []
        for depth in range(schedules.MAX_PI3_DEPTH + 1):
            rows.append(
                {
                    "depth": depth,
                    "queries": schedules.pi3_sequence(depth).oracle_queries,
                    "probability": 1.0 - schedules.pi3_failure_probability(depth, theta0),
                }
            )
        if args.format == "json":
            _write(json.dumps(rows, sort_keys=True) + "\n", args.out)
        else:
            lines = ["depth,queries,probability"]
            lines += [f"{r['depth']},{r['queries']},{r['probability']:.6f}" for r in rows]
            _write("\n".join(lines) + "\n", args.out)
        return 0
    seq = _build_sequence(args)
    traj = engine.run_search(seq, oracle, backend=args.backend)
    text = traj.to_json() + "\n" if args.format == "json" else traj.to_csv()
    _write(text, args.out)
    if args.shots:
        state = sv.uniform_state(args.n)
        for p in seq.params:
            state = sv.apply_iteration(state, p, oracle)
        histogram = sv.sample_measurements(state, args.shots, args.seed)
        hist_text = json.dumps(histogram, sort_keys=True) + "\n"
        _write(hist_text, args.out + ".hist.json" if args.out else None)
    return 0


def cmd_export_qasm(args: argparse.Namespace) -> int:
    target = args.target or "0" * args.n
    oracle = sv.OracleSpec.single(target)
    if args.kind == "grover":
        params = [IterationParams(math.pi, math.pi) for _ in range(args.steps)]
        seq = schedules.ParameterSequence(
            params=tuple(params), kind="optimal", n=args.n
        )
    else:
        seq = _build_sequence(args)
    source = qasm.export_circuit(seq, oracle)
    _write(source, args.out)
    if args.verify:
        deviation = qasm.roundtrip_deviation(seq, oracle)
        print(f"replay max deviation {deviation:.3e}", file=sys.stderr)
        if deviation > 1e-9:
            return 1
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=8, help="qubit count")
    p.add_argument("--m", type=int, default=1, help="number of target states")
    p.add_argument("--c", type=float, default=1.5, help="amplification predicate constant")
    p.add_argument("--delta", type=float, default=0.0, help="perturbation / error budget")
    p.add_argument("--L", type=int, default=21, help="fixed-point schedule length")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.add_argument("--shots", type=int, default=0, help="measurement shots")
    p.add_argument("--target", type=str, default=None, help="target bit string")
    p.add_argument("--backend", choices=engine.BACKENDS, default="analytic")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=str, default=None, help="output path (default stdout)")
    p.add_argument("--config", type=str, default=None, help="JSON file with default flags")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qaa", description="amplitude amplification schedules and simulation"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("increment", help="evaluate one iteration at a state")
    _add_common(p)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, default=0.0)
    p.set_defaults(func=cmd_increment)

    p = sub.add_parser("table", help="emit the fixed-point trajectory table")
    _add_common(p)
    p.add_argument("kind", choices=("main", "appendix"), nargs="?", default="appendix")
    p.set_defaults(func=cmd_table, delta=0.316)

    p = sub.add_parser("figure", help="emit a figure data series")
    _add_common(p)
    p.add_argument("id", choices=("fig1b", "fig3", "fig4", "region", "fig7"))
    p.add_argument("--resolution", type=int, default=512)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("search", help="generate and run a schedule")
    _add_common(p)
    p.add_argument("kind", choices=SEARCH_KINDS)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("export-qasm", help="write an OpenQASM 3 circuit")
    _add_common(p)
    p.add_argument("kind", choices=("grover",) + SEARCH_KINDS[:-1])
    p.add_argument("--steps", type=int, default=1, help="iterations for kind=grover")
    p.add_argument("--verify", action="store_true", help="replay and report deviation")
    p.set_defaults(func=cmd_export_qasm)

    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        overrides = json.loads(Path(args.config).read_text())
        filtered = [a for a in argv if a != "--config" and a != args.config]
        explicit = {a.lstrip("-").split("=")[0] for a in filtered if a.startswith("--")}
        for key, value in overrides.items():
            if key not in explicit and hasattr(args, key):
                setattr(args, key, value)
    return args


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = _apply_config(parser, list(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
