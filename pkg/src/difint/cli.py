"""Command-line front end: design, analyze, verify, simulate, expand, export.

All output is deterministic: identical argument vectors produce byte-identical
text, CSV uses a header row with ``,`` separators and ``.`` decimal points,
and structured results are JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .design import DesignSpec, design_pair, special_epsilon
from .discrete import identity_experiment
from .errors import DomainError, EpsilonRangeError, NotRealizableError, ShapeError
from .factored import frequency_response
from .frequency import DIFFERENTIATOR, INTEGRATOR, make_grid, sweep_table
from .identities import CONDITIONS, associativity_table, check_identity
from .realization import export_netlist, synthesize_rc, to_partial_fractions

_TABLE_SWEEP_ALPHAS = [a / 10.0 for a in range(1, 10)]
_MATRIX_ALPHAS = [0.1, 0.2, 0.3, 0.4, 0.6, 0.7, 0.8, 0.9]


def _add_design_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--method", "-m", type=int, required=True, choices=range(1, 8),
                        metavar="1..7", help="design method index")
    parser.add_argument("--alpha", "-a", type=float, required=True,
                        help="fractional order in (0, 1)")
    parser.add_argument("--wl", type=float, default=1e-3, help="band lower edge, rad/s")
    parser.add_argument("--wh", type=float, default=1e3, help="band upper edge, rad/s")
    parser.add_argument("--n", type=int, default=10, help="number of factor pairs")
    parser.add_argument("--k", type=int, default=2, help="factor multiplicity")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--eps", type=float, default=None,
                       help="ripple offset in dB (methods 3 and 4)")
    group.add_argument("--eps-special", action="store_true",
                       help="use the special offset that collapses methods 3/4 onto 1/2")


def _add_kind_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", choices=("int", "diff"), default="int",
                        help="integrator or differentiator")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="difint",
        description="Design and verify identity-preserving rational approximations "
                    "of fractional integrators and differentiators.",
    )
    parser.add_argument("--output", "-o", default="-",
                        help="output file path, or - for standard output")
    parser.add_argument("--precision", type=int, default=9,
                        help="significant digits for printed numbers")
    sub = parser.add_subparsers(dest="command", required=True)

    p_design = sub.add_parser("design", help="print designed parameters")
    _add_design_arguments(p_design)
    _add_kind_argument(p_design)
    p_design.add_argument("--format", choices=("json", "text"), default="text")

    p_bode = sub.add_parser("bode", help="frequency response and error CSV")
    _add_design_arguments(p_bode)
    _add_kind_argument(p_bode)
    p_bode.add_argument("--points", type=int, default=1000, help="grid size")

    p_table = sub.add_parser("table", help="benchmark comparison tables")
    p_table.add_argument("--which", type=int, required=True, choices=range(1, 6),
                         metavar="1..5",
                         help="1: composition law matrix; 2/3: integrator/differentiator "
                              "band error norms; 4/5: time-domain identity errors at "
                              "order 0.4 / at the singular order 0.5")
    p_table.add_argument("--wl", type=float, default=1e-3)
    p_table.add_argument("--wh", type=float, default=1e3)
    p_table.add_argument("--n", type=int, default=10)
    p_table.add_argument("--k", type=int, default=2)
    p_table.add_argument("--points", type=int, default=10000,
                         help="frequency grid size (tables 2 and 3)")
    p_table.add_argument("--alphas", default=None,
                         help="comma-separated order sweep (tables 1, 2, 3)")
    p_table.add_argument("--alpha", type=float, default=None,
                         help="single order (tables 4 and 5)")
    p_table.add_argument("--h", type=float, default=0.001,
                         help="sample period, s (tables 4 and 5)")
    p_table.add_argument("--T", type=float, default=10.0,
                         help="simulation horizon, s (tables 4 and 5)")

    p_check = sub.add_parser("check", help="composition law verdicts as JSON")
    _add_design_arguments(p_check)
    p_check.add_argument("--condition", choices=("i", "ii", "iii", "all"), default="all")

    p_sim = sub.add_parser("simulate", help="time-domain identity experiment CSV")
    _add_design_arguments(p_sim)
    p_sim.add_argument("--h", type=float, default=0.001, help="sample period, s")
    p_sim.add_argument("--T", type=float, default=10.0, help="horizon, s")
    p_sim.add_argument("--experiment", choices=("x", "y", "z", "all"), default="all")

    p_pfe = sub.add_parser("pfe", help="partial-fraction form as JSON")
    _add_design_arguments(p_pfe)
    _add_kind_argument(p_pfe)

    p_circuit = sub.add_parser("circuit", help="RC network netlist (k = 1 only)")
    _add_design_arguments(p_circuit)
    _add_kind_argument(p_circuit)
    p_circuit.add_argument("--format", choices=("spice", "json"), default="spice")

    return parser


def _resolve_epsilon(args, require: bool = True) -> float | None:
    if args.method in (3, 4):
        if args.eps_special:
            probe = DesignSpec(args.method, args.alpha, args.wl, args.wh, args.n, args.k)
            return special_epsilon(probe)
        if args.eps is None and require:
            raise DomainError(
                f"method {args.method} needs --eps or --eps-special"
            )
        return args.eps
    if args.eps is not None or args.eps_special:
        raise DomainError(f"method {args.method} does not take a ripple offset")
    return None


def _spec_from_args(args, require_epsilon: bool = True) -> DesignSpec:
    return DesignSpec(args.method, args.alpha, args.wl, args.wh, args.n, args.k,
                      _resolve_epsilon(args, require_epsilon))


def _model_from_args(args):
    pair = design_pair(_spec_from_args(args))
    return pair.integrator if args.kind == "int" else pair.differentiator


def _fmt(value: float, precision: int) -> str:
    return format(float(value) + 0.0, f".{precision}g")  # +0.0 folds away -0


def _jnum(value: float, precision: int) -> float:
    return float(_fmt(value, precision))


def _csv(header: list[str], rows, precision: int) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(
            cell if isinstance(cell, str) else _fmt(cell, precision) for cell in row
        ))
    return "\n".join(lines) + "\n"


def _model_json(model, precision):
    return {
        "gain": _jnum(model.gain, precision),
        "s_exponent": model.s_exponent,
        "multiplicity": model.multiplicity,
        "zeros": [_jnum(z, precision) for z in model.zeros],
        "poles": [_jnum(p, precision) for p in model.poles],
    }


def cmd_design(args) -> str:
    spec = _spec_from_args(args)
    model = _model_from_args(args)
    kind = "integrator" if args.kind == "int" else "differentiator"
    p = args.precision
    if args.format == "json":
        payload = {
            "method": spec.kappa,
            "kind": kind,
            "branch": spec.branch.value,
            "alpha": _jnum(spec.alpha, p),
            "omega_l": _jnum(spec.omega_l, p),
            "omega_h": _jnum(spec.omega_h, p),
            "n": spec.n,
            "k": model.multiplicity,
            "epsilon": None if spec.epsilon is None else _jnum(spec.epsilon, p),
        }
        payload.update(_model_json(model, p))
        return json.dumps(payload, indent=2) + "\n"
    lines = [
        f"method={spec.kappa} kind={kind} branch={spec.branch.value}",
        f"alpha={_fmt(spec.alpha, p)} omega_l={_fmt(spec.omega_l, p)} "
        f"omega_h={_fmt(spec.omega_h, p)} n={spec.n} k={model.multiplicity}"
        + ("" if spec.epsilon is None else f" epsilon={_fmt(spec.epsilon, p)}"),
        f"gain={_fmt(model.gain, p)} s_exponent={model.s_exponent}",
        "index,zero,pole",
    ]
    for index, (z, q) in enumerate(model.factors, start=1):
        lines.append(f"{index},{_fmt(z, p)},{_fmt(q, p)}")
    return "\n".join(lines) + "\n"


def cmd_bode(args) -> str:
    spec = _spec_from_args(args)
    model = _model_from_args(args)
    kind = INTEGRATOR if args.kind == "int" else DIFFERENTIATOR
    signed = -spec.alpha if kind == INTEGRATOR else spec.alpha
    grid = make_grid(spec.omega_l, spec.omega_h, args.points)
    _, mag_model, phase_model = frequency_response(model, grid)
    mag_exact = 20.0 * signed * np.log10(grid)
    phase_exact = np.full(grid.shape, 90.0 * signed)
    header = ["omega", "mag_db_model", "mag_db_exact", "phase_deg_model",
              "phase_deg_exact", "mag_error_db", "phase_error_deg"]
    rows = zip(grid, mag_model, mag_exact, phase_model, phase_exact,
               mag_exact - mag_model, phase_exact - phase_model)
    return _csv(header, rows, args.precision)


def _parse_alphas(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise DomainError(f"bad order sweep {text!r}") from exc


def cmd_table(args) -> str:
    p = args.precision
    if args.which == 1:
        alphas = _parse_alphas(args.alphas) if args.alphas else _MATRIX_ALPHAS
        matrix = associativity_table(alphas, args.wl, args.wh, args.n, args.k)
        lines = ["method  i  ii  iii"]
        for row, kappa in enumerate(range(1, 8)):
            marks = ["✓" if matrix[row, col] else "×" for col in range(3)]
            lines.append(f"{kappa}       {marks[0]}  {marks[1]}   {marks[2]}")
        return "\n".join(lines) + "\n"
    if args.which in (2, 3):
        alphas = _parse_alphas(args.alphas) if args.alphas else _TABLE_SWEEP_ALPHAS
        kind = INTEGRATOR if args.which == 2 else DIFFERENTIATOR
        rows = []
        for kappa in range(1, 8):
            row = sweep_table(kappa, kind, alphas, args.wl, args.wh, args.n, args.k,
                              args.points)
            rows.append([str(kappa), row.mag_norm_inf, row.mag_norm_two,
                         row.phase_norm_inf, row.phase_norm_two])
        header = ["method", "mag_inf_db", "mag_two_db", "phase_inf_deg", "phase_two_deg"]
        return _csv(header, rows, p)
    alpha = args.alpha if args.alpha is not None else (0.4 if args.which == 4 else 0.5)
    rows = []
    for kappa in range(1, 8):
        res = identity_experiment(kappa, alpha, args.wl, args.wh, args.n, args.k,
                                  sample_period=args.h, duration=args.T)
        rows.append([str(kappa),
                     res["x"].inf_norm, res["x"].two_norm,
                     res["y"].inf_norm, res["y"].two_norm,
                     res["z"].inf_norm, res["z"].two_norm])
    header = ["method", "x_inf", "x_two", "y_inf", "y_two", "z_inf", "z_two"]
    return _csv(header, rows, p)


def cmd_check(args) -> str:
    # Methods 3/4 fall back to their special offset inside check_identity.
    spec = _spec_from_args(args, require_epsilon=False)
    conditions = CONDITIONS if args.condition == "all" else (args.condition,)
    p = args.precision
    verdicts = []
    for condition in conditions:
        verdict = check_identity(condition, spec.kappa, spec.alpha, spec.omega_l,
                                 spec.omega_h, spec.n, spec.k, spec.epsilon)
        verdicts.append({
            "condition": condition,
            "structural_pass": verdict.structural_pass,
            "numeric_max_deviation": _jnum(verdict.numeric_max_deviation, p),
            "simplified": None if verdict.simplified is None
            else _model_json(verdict.simplified, p),
            "failure_note": verdict.failure_note,
        })
    payload = verdicts[0] if len(verdicts) == 1 else verdicts
    return json.dumps(payload, indent=2) + "\n"


def cmd_simulate(args) -> str:
    spec = _spec_from_args(args, require_epsilon=False)
    results = identity_experiment(spec.kappa, spec.alpha, spec.omega_l, spec.omega_h,
                                  spec.n, spec.k, spec.epsilon,
                                  sample_period=args.h, duration=args.T)
    p = args.precision
    if args.experiment != "all":
        res = results[args.experiment]
        rows = zip(res.time, res.input_signal, res.exact, res.approx, res.error)
        return _csv(["t", "u", "exact", "approx", "error"], rows, p)
    rows = []
    for name in ("x", "y", "z"):
        res = results[name]
        for values in zip(res.time, res.input_signal, res.exact, res.approx, res.error):
            rows.append([name, *values])
    return _csv(["experiment", "t", "u", "exact", "approx", "error"], rows, p)


def cmd_pfe(args) -> str:
    model = _model_from_args(args)
    pf = to_partial_fractions(model)
    p = args.precision
    payload = {
        "direct": _jnum(pf.direct, p),
        "origin_residue": _jnum(pf.origin_residue, p),
        "terms": [
            {"pole": _jnum(term.pole, p),
             "residues": [_jnum(r, p) for r in term.residues]}
            for term in pf.terms
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_circuit(args) -> str:
    spec = _spec_from_args(args)
    model = _model_from_args(args)
    network = synthesize_rc(to_partial_fractions(model))
    meta = {
        "method": spec.kappa,
        "alpha": _fmt(spec.alpha, args.precision),
        "omega_l": _fmt(spec.omega_l, args.precision),
        "omega_h": _fmt(spec.omega_h, args.precision),
        "n": spec.n,
    }
    return export_netlist(network, format=args.format, meta=meta,
                          precision=args.precision)


_COMMANDS = {
    "design": cmd_design,
    "bode": cmd_bode,
    "table": cmd_table,
    "check": cmd_check,
    "simulate": cmd_simulate,
    "pfe": cmd_pfe,
    "circuit": cmd_circuit,
}


def _write_output(text: str, destination: str) -> None:
    if destination == "-":
        sys.stdout.write(text)
    else:
        with open(destination, "w", encoding="utf-8") as handle:
            handle.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        text = _COMMANDS[args.command](args)
    except EpsilonRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotRealizableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (DomainError, ShapeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write_output(text, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
