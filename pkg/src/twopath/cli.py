"""Command-line front end.

Every subcommand builds its full table in memory and only then writes it,
so a failure never leaves a partial file behind.  Lengths are in um,
angles in radians.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import decoherence as dec
from . import double_slit as ds
from . import information as info
from . import interferometer as ifm
from . import montecarlo as mc
from .errors import (
    InsufficientSamples,
    InvalidMode,
    ModeMismatch,
    NonFiniteInput,
    NormalizationError,
    QuadratureBudgetExceeded,
)
from .states import DetectorOverlap, TwoPathState

SCHEMA_VERSION = "v1"
SIG_DIGITS = 9

MODE_ALIASES = {
    "path": mc.Mode.PATH,
    "output": mc.Mode.OUTPUT,
    "shifted": mc.Mode.SHIFTED,
    "screen": mc.Mode.SCREEN,
    **{m.value: m for m in mc.Mode},
}


class Table:
    def __init__(self, command: str, config: dict, columns: list[str], rows: list[list]):
        self.command = command
        self.config = config
        self.columns = columns
        self.rows = rows


def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return int(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.{SIG_DIGITS}g}"
    return v


def _json_value(v):
    f = _fmt(v)
    if isinstance(v, (float, np.floating)):
        x = float(f)
        return x if math.isfinite(x) else f
    return f


def render(table: Table, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "schema": SCHEMA_VERSION,
            "command": table.command,
            "config": table.config,
            "columns": table.columns,
            "rows": [[_json_value(v) for v in row] for row in table.rows],
        }
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(table.columns)
    for row in table.rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def float_list(text: str) -> list[float]:
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def int_list(text: str) -> list[int]:
    vals = float_list(text)
    if any(v != int(v) or v < 0 for v in vals):
        raise argparse.ArgumentTypeError(f"expected non-negative integers, got {text!r}")
    return [int(v) for v in vals]


def _config(args) -> dict:
    skip = {"func", "out", "format", "positions_out"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _kd_values(args, parser) -> list[float]:
    if args.kd is not None:
        return args.kd
    if args.wavelength is None or args.slit_sep is None:
        parser.error("give --kd or both --wavelength and --slit-sep")
    return [2.0 * math.pi / lam * args.slit_sep for lam in args.wavelength]


def _state(asq: float, chi: float) -> TwoPathState:
    return TwoPathState.from_weight(asq, chi)


def _overlap(args) -> DetectorOverlap:
    return DetectorOverlap.from_polar(args.overlap, args.overlap_phase)


def _geometry(args) -> ds.FringeGeometry:
    if args.k is not None:
        return ds.FringeGeometry(args.k, args.slit_sep, args.screen_dist)
    return ds.FringeGeometry.from_wavelength(args.wavelength, args.slit_sep, args.screen_dist)


def _quad_spec(args, xi_max: float) -> dec.QuadratureSpec:
    return dec.QuadratureSpec(xi_max, args.nodes_xi, args.nodes_eta)


def cmd_visibility(args, parser) -> Table:
    cols = ["kd", "photons", "v_closed_form", "v_oracle", "abs_difference"]
    rows = []
    for kd in _kd_values(args, parser):
        s = dec.sinc_overlap(kd, 1.0)
        oracle = None
        if not args.no_oracle:
            oracle = abs(dec.overlap_oracle(abs(kd), 1.0, _quad_spec(args, args.xi_max),
                                            check_convergence=False))
        for n in args.photons:
            v = 1.0 if n == 0 else abs(s) ** n
            vo = float("nan") if oracle is None else (1.0 if n == 0 else oracle ** n)
            rows.append([kd, n, v, vo, abs(v - vo)])
    return Table("visibility", _config(args), cols, rows)


def cmd_ports(args, parser) -> Table:
    cols = ["asq", "chi", "overlap", "overlap_phase",
            "p1", "p2", "p3", "p4", "p3_shift", "p4_shift"]
    overlap = _overlap(args)
    rows = []
    for asq in args.asq:
        for chi in args.chi:
            p = ifm.port_probabilities_with_decoherence(_state(asq, chi), overlap)
            rows.append([asq, chi, args.overlap, args.overlap_phase, *p.as_tuple()])
    return Table("ports", _config(args), cols, rows)


def cmd_info(args, parser) -> Table:
    cols = ["asq", "chi", "p1", "p2", "p3", "p4", "p3_shift", "p4_shift",
            "I1", "I2", "I3", "I_path", "I_interf", "total"]
    if args.shannon:
        cols.append("shannon_sum")
    rows = []
    for asq in args.asq:
        for chi in args.chi:
            p = ifm.port_probabilities(_state(asq, chi))
            tri = info.info_measures(p)
            split = info.complementarity_split(tri)
            row = [asq, chi, *p.as_tuple(), tri.i1, tri.i2, tri.i3,
                   split.i_path, split.i_interf, tri.total]
            if args.shannon:
                row.append(info.shannon_sum(p))
            rows.append(row)
    return Table("info", _config(args), cols, rows)


def cmd_pattern(args, parser) -> Table:
    state = _state(args.asq, args.chi)
    geom = _geometry(args)
    overlap = _overlap(args)
    Y = geom.period
    if args.samples is not None:
        run = mc.sample_pattern(state, geom, args.samples, args.seed,
                                overlap=overlap, workers=args.workers)
        v_est = mc.estimate_visibility(run, geom)
        cols = ["asq", "chi", "period", "n_samples", "seed", "visibility_estimate",
                "visibility_analytic", "i_interf_integral", "i_interf_closed_form",
                "i_interf_empirical"]
        rows = [[args.asq, args.chi, Y, args.samples, args.seed, v_est,
                 2.0 * state.a * state.b * abs(overlap.overlap),
                 ds.interference_information_integral(state, geom, args.quad_nodes),
                 ds.interference_information_closed_form(state), v_est ** 2]]
        if args.positions_out:
            pcols, prow = run.table()
            _write(Path(args.positions_out),
                   render(Table("pattern-positions", _config(args), pcols, prow), args.format))
        return Table("pattern", _config(args), cols, rows)
    if args.integral:
        integral = ds.interference_information_integral(state, geom, args.quad_nodes)
        closed = ds.interference_information_closed_form(state)
        cols = ["asq", "chi", "period", "i_interf_integral", "i_interf_closed_form",
                "abs_difference"]
        return Table("pattern", _config(args), cols,
                     [[args.asq, args.chi, Y, integral, closed, abs(integral - closed)]])
    if args.grid < 2:
        parser.error("--grid must be at least 2")
    y = np.arange(args.grid) * (Y / args.grid)
    p = ds.density(y, state, geom, overlap)
    return Table("pattern", _config(args), ["y", "density"],
                 [[yi, pi] for yi, pi in zip(y, p)])


def cmd_oracle(args, parser) -> Table:
    cols = ["kd", "xi_max", "oracle_value_re", "oracle_value_im", "sinc", "abs_error",
            "converged"]
    rows = []
    for kd in _kd_values(args, parser):
        s = dec.sinc_overlap(kd, 1.0)
        for xi_max in args.xi_max:
            r = dec.overlap_oracle(abs(kd), 1.0, _quad_spec(args, xi_max),
                                   check_convergence=not args.no_check)
            rows.append([kd, xi_max, r.value.real, r.value.imag, s,
                         abs(r.value - s), r.converged])
    return Table("oracle", _config(args), cols, rows)


def cmd_sample(args, parser) -> Table:
    state = _state(args.asq, args.chi)
    overlap = _overlap(args)
    if args.mode == "all":
        modes = list(mc.DISCRETE_MODES)
    else:
        modes = [MODE_ALIASES[args.mode]]
    if modes == [mc.Mode.SCREEN]:
        run = mc.sample_pattern(state, _geometry(args), args.samples, args.seed,
                                overlap=overlap, workers=args.workers)
        cols, rows = run.table()
        return Table("sample", _config(args), cols, rows)
    cols = None
    rows = []
    for mode in modes:
        run = mc.sample_ports(state, mode, args.samples, args.seed,
                              overlap=overlap, workers=args.workers)
        cols, r = run.table()
        p = mc.mode_probability(state, mode, overlap)
        for row, prob in zip(r, (p, 1.0 - p)):
            rows.append([*row, prob])
    return Table("sample", _config(args), cols + ["probability"], rows)


def _add_quad_flags(p):
    p.add_argument("--nodes-xi", type=int, default=16,
                   help="Gauss-Legendre nodes per xi panel")
    p.add_argument("--nodes-eta", type=int, default=16,
                   help="Gauss-Legendre nodes per eta panel")


def _add_state_flags(p, many: bool = False):
    kind = float_list if many else float
    p.add_argument("--asq", type=kind, default=[0.5] if many else 0.5,
                   help="path-1 weight a^2 in [0, 1]")
    p.add_argument("--chi", type=kind, default=[0.0] if many else 0.0,
                   help="relative phase (rad)")


def _add_overlap_flags(p):
    p.add_argument("--overlap", type=float, default=1.0,
                   help="modulus of the detector-state overlap")
    p.add_argument("--overlap-phase", type=float, default=0.0)


def _add_geometry_flags(p):
    p.add_argument("--wavelength", type=float, default=1.0,
                   help="de Broglie wavelength (um)")
    p.add_argument("--k", type=float, default=None,
                   help="de Broglie wavenumber (rad/um); overrides --wavelength")
    p.add_argument("--slit-sep", type=float, default=1.0, help="slit separation (um)")
    p.add_argument("--screen-dist", type=float, default=1.0, help="screen distance (um)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twopath",
        description="Which-path information and fringe visibility calculator.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.set_defaults(func=func)
        return p

    p = add("visibility", cmd_visibility, "visibility after photon emission")
    p.add_argument("--kd", type=float_list, default=None,
                   help="dimensionless K*d values (overrides wavelength/slit-sep)")
    p.add_argument("--wavelength", type=float_list, default=None, help="photon wavelength (um)")
    p.add_argument("--slit-sep", type=float, default=None, help="slit separation (um)")
    p.add_argument("--photons", type=int_list, default=[1], help="photon counts N")
    p.add_argument("--xi-max", type=float, default=1e3, help="oracle cutoff")
    p.add_argument("--no-oracle", action="store_true", help="skip the quadrature column")
    _add_quad_flags(p)

    p = add("ports", cmd_ports, "beam-splitter port probabilities")
    _add_state_flags(p, many=True)
    _add_overlap_flags(p)

    p = add("info", cmd_info, "information measures and complementarity totals")
    _add_state_flags(p, many=True)
    p.add_argument("--shannon", action="store_true", help="append the Shannon-entropy sum")

    p = add("pattern", cmd_pattern, "double-slit density, samples or fringe information")
    _add_state_flags(p)
    _add_overlap_flags(p)
    _add_geometry_flags(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--grid", type=int, default=256, help="analytic density grid size")
    g.add_argument("--samples", type=int, default=None, help="Monte Carlo sample count")
    g.add_argument("--integral", action="store_true", help="fringe information by quadrature")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--quad-nodes", type=int, default=64)
    p.add_argument("--positions-out", default=None,
                   help="also write sampled positions to this file")

    p = add("oracle", cmd_oracle, "quadrature check of the photon-state overlap")
    p.add_argument("--kd", type=float_list, default=None)
    p.add_argument("--wavelength", type=float_list, default=None)
    p.add_argument("--slit-sep", type=float, default=None)
    p.add_argument("--xi-max", type=float_list, default=[1e2, 1e3, 1e4])
    p.add_argument("--no-check", action="store_true", help="skip the node-doubling check")
    _add_quad_flags(p)

    p = add("sample", cmd_sample, "seeded detection experiment")
    p.add_argument("--mode", default="all", choices=sorted(MODE_ALIASES) + ["all"])
    _add_state_flags(p)
    _add_overlap_flags(p)
    _add_geometry_flags(p)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    return parser


def _write(path: Path | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    path.write_text(text)


DOMAIN_ERRORS = (
    NormalizationError, NonFiniteInput, QuadratureBudgetExceeded, InsufficientSamples,
    InvalidMode, ModeMismatch, ValueError, ZeroDivisionError,
)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        table = args.func(args, parser)
        text = render(table, args.format)
    except DOMAIN_ERRORS as exc:
        print(f"twopath {args.command}: error: {exc}", file=sys.stderr)
        return 1
    _write(Path(args.out) if args.out else None, text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
