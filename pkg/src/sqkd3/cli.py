"""Command-line surface: sweep the key rate over noise, locate thresholds,
run the Monte Carlo simulator, and run the self-check suite.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
SQKD3_THREADS caps sweep parallelism.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import verify
from .term_tables import BASIS_ERROR_ORDER
from .attack import ChannelScenario, pauli_twirl_attack
from .keyrate import find_threshold, key_rate
from .sim import run_protocol
from .stats import stat_table_from_attack

_MODEL = {"dep": "dependent", "indep": "independent"}
_PMODE = {"printed": "as-printed", "corrected": "corrected"}
_WEIGHT = {"printed": "as-printed", "normalized": "normalized"}

SWEEP_COLUMNS = ["Q", "r", "t1", "t2", "t3", "t4", "X", "p_lower",
                 "lambda1", "lambda2", "S_BEC", "S_EC_upper", "H_B_given_A"]


def _add_convention_flags(p: argparse.ArgumentParser, with_model=True):
    p.add_argument("--variant", choices=["phi1", "phi2"], default="phi1")
    if with_model:
        p.add_argument("--model", choices=["dep", "indep"], default="dep")
    p.add_argument("--p-mode", choices=["printed", "corrected"],
                   default="printed")
    p.add_argument("--weighting", choices=["printed", "normalized"],
                   default="printed")
    p.add_argument("--basis-convention", choices=["per-pair", "total"],
                   default="per-pair")


def _scenario(args, q: float) -> ChannelScenario:
    return ChannelScenario(
        q=q, model=_MODEL[args.model], variant=args.variant,
        basis_noise_convention=args.basis_convention,
        joint_weighting=_WEIGHT[args.weighting], p_mode=_PMODE[args.p_mode])


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _max_workers() -> int:
    env = os.environ.get("SQKD3_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def cmd_sweep(args) -> int:
    if not (0.0 <= args.q_min < args.q_max <= 0.375 and args.steps >= 2):
        print("sweep needs 0 <= q-min < q-max <= 0.375 and steps >= 2",
              file=sys.stderr)
        return 2
    grid = np.linspace(args.q_min, args.q_max, args.steps)

    def evaluate(q):
        rep = key_rate(_scenario(args, float(q)))
        return [q, rep.r, *rep.t, rep.X, rep.p_lower, rep.lambda1,
                rep.lambda2, rep.S_BEC, rep.S_EC_upper, rep.H_B_given_A]

    with ThreadPoolExecutor(max_workers=_max_workers()) as pool:
        rows = list(pool.map(evaluate, grid))

    header = (f"# sqkd3 sweep variant={args.variant} model={_MODEL[args.model]}"
              f" p_mode={_PMODE[args.p_mode]} weighting={_WEIGHT[args.weighting]}"
              f" basis_convention={args.basis_convention}")
    lines = [header, ",".join(SWEEP_COLUMNS)]
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    text = "\n".join(lines) + "\n"
    try:
        if args.out == "-":
            sys.stdout.write(text)
        else:
            with open(args.out, "w") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return 3
    return 0


def cmd_threshold(args) -> int:
    thr = find_threshold(
        variant=args.variant, model=_MODEL[args.model],
        basis_noise_convention=args.basis_convention,
        joint_weighting=_WEIGHT[args.weighting], p_mode=_PMODE[args.p_mode])
    doc = {"variant": args.variant, "model": _MODEL[args.model],
           "convention": {"p_mode": _PMODE[args.p_mode],
                          "weighting": _WEIGHT[args.weighting],
                          "basis_convention": args.basis_convention}}
    if thr is None:
        doc["threshold"] = None
        doc["note"] = "no threshold <= 3/8"
    else:
        doc["threshold"] = thr
        doc["report_at_threshold"] = json.loads(
            key_rate(_scenario(args, thr)).to_json())
    print(json.dumps(doc, indent=2))
    return 0


def cmd_simulate(args) -> int:
    attack = pauli_twirl_attack(args.q, args.q)
    result = run_protocol(args.n, attack, args.variant, args.seed)
    table = stat_table_from_attack(attack, args.variant)

    def sigma_dev(freq, p, n_cat):
        if n_cat == 0:
            return 0.0
        sd = np.sqrt(p * (1 - p) / n_cat)
        diff = abs(freq - p)
        if sd == 0:
            return 0.0 if diff == 0 else float("inf")
        return diff / sd

    per_sent = result.counts_p.sum(axis=(1, 2))
    max_sigma = 0.0
    for i in range(3):
        for j in range(3):
            for k in range(3):
                max_sigma = max(max_sigma, sigma_dev(
                    result.empirical_p[i, j, k], table.p[i, j, k], per_sent[i]))
    for idx, (i, _j) in enumerate(BASIS_ERROR_ORDER):
        max_sigma = max(max_sigma, sigma_dev(
            result.empirical_basis_err[idx], table.basis_err[idx],
            result.noise_rounds_per_sent[i]))

    doc = json.loads(result.to_json())
    doc["analytic_p"] = table.p.ravel().tolist()
    doc["analytic_basis_err"] = table.basis_err.tolist()
    doc["max_deviation_sigma"] = max_sigma
    print(json.dumps(doc))
    return 0


def cmd_verify(_args) -> int:
    return 0 if verify.run_all() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqkd3",
        description="Key-rate analysis of the 3-dimensional semi-quantum "
                    "key distribution protocol")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="key rate over a noise grid, CSV output")
    _add_convention_flags(p)
    p.add_argument("--q-min", type=float, default=0.0)
    p.add_argument("--q-max", type=float, default=0.25)
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--out", default="-", help="output path ('-' = stdout)")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("threshold", help="smallest noise with zero key rate")
    _add_convention_flags(p)
    p.set_defaults(fn=cmd_threshold)

    p = sub.add_parser("simulate", help="Monte Carlo rounds under the "
                                        "symmetric twirl attack")
    p.add_argument("--n", type=int, default=100000)
    p.add_argument("--q", type=float, default=0.1)
    p.add_argument("--variant", choices=["phi1", "phi2"], default="phi1")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_simulate)

    p = sub.add_parser("verify", help="run the self-check suite")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
