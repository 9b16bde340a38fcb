"""Command-line surface: verification commands, scans and table emission.

Exit codes: 0 success, 1 internal consistency failure, 2 usage error.
CSV output uses '.' decimals, a header row, LF endings and 12 significant
digits, so identical invocations are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import grover, polytope, single_query
from .behavior import eval_B

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _emit(rows, header, fmt: str, out):
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        objs = [
            {h: (v if not isinstance(v, float) else float(_fmt(v))) for h, v in zip(header, row)}
            for row in rows
        ]
        text = json.dumps(objs, indent=2) + "\n"
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_phi(args) -> float:
    if getattr(args, "phi_deg", None) is not None:
        if getattr(args, "phi", None) is not None:
            raise UsageError("give either --phi or --phi-deg, not both")
        return math.radians(args.phi_deg)
    return args.phi


def _violation_row(n: int, phi: float):
    pattern = single_query.PhasePattern.half_half(n, phi)
    d_num = single_query.delta_numeric(n, pattern)
    if n >= 3:
        d_closed, spectrum = single_query.delta_closed_form(n, phi)
        regime = spectrum.regime.value
    else:
        d_closed = max(-math.cos(phi), 0.0)  # exact two-location law
        regime = "violation" if d_closed > 1e-10 else "none"
    b_quantum = n - 1 + d_num
    return (n, phi, d_num, d_closed, regime, b_quantum, float(n - 1))


def _delta_max_row(n: int):
    phi, _ = single_query.delta_max(n)
    return _violation_row(n, phi)


VIOLATION_HEADER = (
    "n",
    "phi",
    "delta_numeric",
    "delta_closed_form",
    "regime",
    "B_quantum",
    "B_classical_bound",
)


def cmd_violation(args) -> int:
    if args.n < 2:
        raise UsageError("violation requires --n >= 2")
    phi = _resolve_phi(args)
    row = _violation_row(args.n, phi) if phi is not None else _delta_max_row(args.n)
    _emit([row], VIOLATION_HEADER, args.format, args.out)
    return EXIT_OK


def cmd_polytope(args) -> int:
    if not 1 <= args.k <= args.n:
        raise UsageError("polytope requires 1 <= k <= n")
    if args.n > 4:
        raise UsageError("polytope command capped at n = 4")
    vertices = polytope.enumerate_vertices(args.n, args.k)
    max_b = polytope.max_B_over_vertices(args.n, args.k)
    expected = args.n - 1 if args.k < args.n else args.n
    print(f"n {args.n}")
    print(f"k {args.k}")
    print(f"vertices {len(vertices)}")
    print(f"max_B {_fmt(max_b)}")
    print(f"expected {expected}")
    if abs(max_b - expected) > 1e-12:
        print("consistency FAILED: vertex bound does not match", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_grover(args) -> int:
    if args.n < 2 or args.n > grover.MAX_N_DENSE:
        raise UsageError(f"grover requires 2 <= n <= {grover.MAX_N_DENSE}")
    k_max = args.kmax if args.kmax is not None else grover.optimal_query_count(args.n)
    if not 0 <= k_max <= args.n:
        raise UsageError("kmax must lie in [0, n]")
    rows = [
        (r.n, r.k, r.p_quantum, r.p_classical, r.gap)
        for r in grover.speedup_curve(args.n, k_max)
    ]
    _emit(rows, ("n", "k", "p_quantum", "p_classical", "gap"), args.format, args.out)
    return EXIT_OK


def cmd_witness(args) -> int:
    if not 2 <= args.n <= 3:
        raise UsageError("witness uses the exact LP path and requires 2 <= n <= 3")
    phi = _resolve_phi(args)
    if phi is None:
        raise UsageError("witness requires --phi or --phi-deg")
    pattern = single_query.PhasePattern.half_half(args.n, phi)
    p0, rho0, p1, rho1 = single_query.build_discrimination_pair(args.n, pattern)
    _, povm = single_query.helstrom(p0, rho0, p1, rho1)
    behavior = single_query.induced_behavior(args.n, pattern, povm)
    b_val = eval_B(behavior)
    k = args.n - 1
    result = polytope.is_k_way(behavior, k, mode="exact")
    print(f"n {args.n}")
    print(f"phi {_fmt(phi)}")
    print(f"B {_fmt(b_val)}")
    print(f"member_k{k} {'true' if result.is_member else 'false'}")
    if b_val > args.n - 1 + 1e-9 and result.is_member:
        print("consistency FAILED: violation accepted by the LP", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def _worker_count(n_tasks: int) -> int:
    env = os.environ.get("KWAY_THREADS")
    cap = int(env) if env else (os.cpu_count() or 1)
    return max(1, min(cap, n_tasks))


def cmd_scan(args) -> int:
    if args.n_min < 2 or args.n_max < args.n_min:
        raise UsageError("scan requires 2 <= n-min <= n-max")
    ns = list(range(args.n_min, args.n_max + 1))
    workers = _worker_count(len(ns))
    if workers == 1:
        rows = [_delta_max_row(n) for n in ns]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_delta_max_row, ns))
    _emit(rows, VIOLATION_HEADER, args.format, args.out)
    return EXIT_OK


def _add_output_flags(p):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="FILE", default=None)


def _add_phi_flags(p, required=False):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--phi", type=float, help="angle in radians")
    g.add_argument("--phi-deg", type=float, help="angle in degrees")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kway", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("violation", help="single-query violation delta at a phase, or its maximum over phi")
    p.add_argument("--n", type=int, required=True)
    _add_phi_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_violation)

    p = sub.add_parser("polytope", help="vertex count and witness bound at signaling level k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("grover", help="multi-query quantum vs classical winning probabilities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, default=None)
    _add_output_flags(p)
    p.set_defaults(func=cmd_grover)

    p = sub.add_parser("witness", help="induced behavior, witness value and LP membership")
    p.add_argument("--n", type=int, required=True)
    _add_phi_flags(p, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("scan", help="table of maximal violations over a range of N")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    _add_output_flags(p)
    p.set_defaults(func=cmd_scan)

    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
