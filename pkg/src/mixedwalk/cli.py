"""Command-line front end.

Subcommands: ``spectrum``, ``classify-cycle``, ``walk``, ``period``,
``sweep``, ``verify``.  Graphs come from a JSON file or from inline
builders like ``cycle:n=8,j=3`` and ``path:n=5,orient=fbd...``; angles are
``pi*p/q`` or decimal radians.  Exit codes: 0 success, 1 bad input, 2
internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from . import linalg, periodicity, spectra, switching, verify, walk
from .errors import DomainError, InternalConsistencyError, UsageError
from .graphs import (
    BACKWARD,
    DIGON,
    FORWARD,
    MixedGraph,
    build_cycle,
    build_path,
    from_json_dict,
    to_json_dict,
)
from .spectra import Angle, RationalAngle

ORIENT_CHARS = {"f": FORWARD, "b": BACKWARD, "d": DIGON}


def parse_eta(text: str) -> Angle:
    """Parse ``pi*p/q`` (or ``pi*p``) into a rational angle, or decimal radians.

    Only the rational form ever routes to closed-form cycle periods; a
    decimal cannot certify rationality.
    """
    text = text.strip()
    if text.startswith("pi*"):
        body = text[3:]
        try:
            if "/" in body:
                p_str, q_str = body.split("/", 1)
                p, q = int(p_str), int(q_str)
            else:
                p, q = int(body), 1
        except ValueError as exc:
            raise UsageError(f"cannot parse angle {text!r}; want pi*p/q or radians") from exc
        if q == 0:
            raise UsageError("angle denominator must be nonzero")
        return RationalAngle(p, q)
    try:
        value = float(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse angle {text!r}; want pi*p/q or radians") from exc
    if not math.isfinite(value):
        raise UsageError(f"angle must be finite, got {text!r}")
    return value


def parse_graph(text: str) -> MixedGraph:
    """Builder spec (``cycle:...`` / ``path:...``) or a JSON file path."""
    if text.startswith("cycle:") or text.startswith("path:"):
        kind, _, body = text.partition(":")
        fields = {}
        for item in body.split(","):
            if not item:
                continue
            key, _, value = item.partition("=")
            if not value:
                raise UsageError(f"malformed graph field {item!r} in {text!r}")
            fields[key.strip()] = value.strip()
        try:
            n = int(fields.pop("n"))
        except (KeyError, ValueError) as exc:
            raise UsageError(f"graph spec {text!r} needs an integer n") from exc
        try:
            if kind == "cycle":
                j = int(fields.pop("j", 0))
                if fields:
                    raise UsageError(f"unknown cycle fields {sorted(fields)}")
                return build_cycle(n, j)
            orient = fields.pop("orient", "d" * (n - 1))
            if fields:
                raise UsageError(f"unknown path fields {sorted(fields)}")
            try:
                symbols = [ORIENT_CHARS[ch] for ch in orient]
            except KeyError as exc:
                raise UsageError(f"orientation chars must be f/b/d, got {orient!r}") from exc
            return build_path(n, symbols)
        except (DomainError, ValueError) as exc:
            raise UsageError(str(exc)) from exc
    try:
        with open(text) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read graph file {text!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"graph file {text!r} is not valid JSON: {exc}") from exc
    return from_json_dict(data)


def _eta_json(eta: Angle):
    if isinstance(eta, RationalAngle):
        return {"kind": "rational", "p": eta.p, "q": eta.q}
    return {"kind": "radians", "value": float(eta)}


def _complex_json(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _matrix_json(m: np.ndarray) -> list:
    return [[_complex_json(z) for z in row] for row in np.asarray(m)]


def _emit(payload, fmt: str) -> None:
    if fmt == "pretty":
        print(json.dumps(payload, indent=2))
    else:
        print(json.dumps(payload))


def cmd_spectrum(args) -> int:
    graph = parse_graph(args.graph)
    eta = parse_eta(args.eta)
    h = spectra.h_eta(graph, eta)
    spec = linalg.hermitian_eigenvalues(h)
    det = linalg.determinant(h)
    payload = {
        "n": graph.n_vertices,
        "eta": _eta_json(eta),
        "graph": to_json_dict(graph),
        "charpoly": [_complex_json(c) for c in linalg.charpoly(h)],
        "determinant": _complex_json(det),
        "eigenvalues": [[_complex_json(v), m] for v, m in spec.pairs],
        "cospectral_with_underlying": spectra.cospectral(graph, graph.underlying(), eta),
    }
    if graph.is_cycle_graph():
        j = switching.classify_cycle(graph)
        payload["determinant_closed_form"] = spectra.det_cycle_closed(
            graph.n_vertices, j, eta
        )
    elif graph.is_path_graph():
        payload["determinant_closed_form"] = spectra.det_path_closed(graph.n_vertices)
    _emit(payload, args.format)
    return 0


def cmd_classify_cycle(args) -> int:
    graph = parse_graph(args.graph)
    eta = parse_eta(args.eta)
    result = switching.canonicalize_cycle(graph, eta)
    canonical = build_cycle(graph.n_vertices, result.type_j)
    payload = {
        "n": graph.n_vertices,
        "j": result.type_j,
        "orientation_reversed": result.orientation_reversed,
        "moves": [[move, vertex] for move, vertex in result.moves],
        "witness_exponents": list(result.witness.exponents),
        "relabeling": list(result.relabeling),
        "canonical_graph": to_json_dict(canonical),
    }
    _emit(payload, args.format)
    return 0


def cmd_walk(args) -> int:
    graph = parse_graph(args.graph)
    eta = parse_eta(args.eta)
    ops = walk.time_evolution(graph, eta)
    wanted = [name.strip().upper() for name in args.operators.split(",") if name.strip()]
    known = {"U": ops.evolution, "K": ops.boundary, "C": ops.coin, "S": ops.shift}
    bad = [name for name in wanted if name not in known]
    if bad:
        raise UsageError(f"unknown operators {bad}; choose from U,K,C,S")
    payload = {
        "n": graph.n_vertices,
        "eta": _eta_json(eta),
        "arc_order": [list(a) for a in ops.arc_index.arcs],
    }
    for name in wanted:
        payload[name] = _matrix_json(known[name])
    _emit(payload, args.format)
    return 0


def cmd_period(args) -> int:
    graph = parse_graph(args.graph)
    eta = parse_eta(args.eta)
    report = periodicity.period_of(graph, eta, cap=args.cap, tol=args.tol)
    payload = {
        "periodic": report.periodic,
        "period": report.period,
        "method": report.method,
        "cap_used": report.cap_used,
        "cross_check": report.cross_check,
        "residual": report.residual,
    }
    if not isinstance(eta, RationalAngle):
        hint = periodicity.detect_rational_angle(float(eta))
        # Advisory only; a float match never upgrades to the closed form.
        payload["rational_angle_hint"] = None if hint is None else _eta_json(hint)
    _emit(payload, args.format)
    return 2 if report.cross_check == periodicity.DISAGREE else 0


def _sweep_cell(cell):
    n, j, p, q = cell
    eta = RationalAngle(p, q)
    tau_formula = periodicity.cycle_period(n, j, eta)
    ops = walk.time_evolution(build_cycle(n, j), eta)
    brute = periodicity.brute_force_period(ops.evolution, 2 * eta.q * n)
    tau_brute = brute.period if brute.periodic else -1
    return n, j, p, q, tau_formula, tau_brute, tau_formula == tau_brute


def cmd_sweep(args) -> int:
    angles = []
    for token in args.angles.split(","):
        token = token.strip()
        try:
            p_str, q_str = token.split("/", 1)
            angles.append((int(p_str), int(q_str)))
        except ValueError as exc:
            raise UsageError(f"sweep angles must be p/q pairs, got {token!r}") from exc
    cells = [
        (n, j, p, q)
        for n in range(args.n_min, args.n_max + 1)
        for j in range(n + 1)
        for p, q in angles
    ]
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_cell, cells))
    else:
        rows = [_sweep_cell(cell) for cell in cells]
    print("n,j,p,q,tau_formula,tau_brute,agree")
    all_agree = True
    for n, j, p, q, tf, tb, agree in rows:
        all_agree &= agree
        print(f"{n},{j},{p},{q},{tf},{tb},{'true' if agree else 'false'}")
    if not all_agree:
        print("sweep: formula and powering disagree", file=sys.stderr)
        return 2
    return 0


def cmd_verify(args) -> int:
    results = verify.run_checks(seed=args.seed, jobs=args.jobs)
    ok = True
    for r in results:
        ok &= r.passed
        status = "PASS" if r.passed else "FAIL"
        print(f"[{status}] {r.name:34s} {r.seconds:6.2f}s  {r.detail}")
    if not ok:
        print("verify: at least one check failed", file=sys.stderr)
        return 2
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # bad flags are usage errors, exit 1
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mixedwalk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, graph=True, eta=True):
        if graph:
            p.add_argument("--graph", required=True, help="JSON file or cycle:n=8,j=3 / path:n=5[,orient=fbd..]")
        if eta:
            p.add_argument("--eta", required=True, help="angle as pi*p/q or decimal radians")
        p.add_argument("--format", choices=("json", "pretty"), default="json")

    p = sub.add_parser("spectrum", help="matrix invariants of a mixed graph")
    add_common(p)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("classify-cycle", help="canonical type and switching witness of a mixed cycle")
    add_common(p)
    p.set_defaults(fn=cmd_classify_cycle)

    p = sub.add_parser("walk", help="dump walk operators")
    add_common(p)
    p.add_argument("--operators", default="U", help="comma list from U,K,C,S")
    p.set_defaults(fn=cmd_walk)

    p = sub.add_parser("period", help="periodicity report for a mixed graph")
    add_common(p)
    p.add_argument("--cap", type=int, default=periodicity.DEFAULT_CAP, help="powering budget")
    p.add_argument("--tol", type=float, default=linalg.IDENTITY_TOL, help="identity tolerance")
    p.set_defaults(fn=cmd_period)

    p = sub.add_parser("sweep", help="CSV table: period formula vs powering over a cycle grid")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--angles", default="0/1,1/1,1/2,1/3,2/3,3/4", help="comma list of p/q")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 2


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
