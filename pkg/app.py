# -*- coding: utf-8 -*-
"""
Command-line front end: simulations, zone predictions, comparisons, stability verdicts,
plateaus, Green functions and the exact oracle. Payloads go to stdout (or --output);
logging goes to stderr.

Exit codes: 0 success, 2 validation or usage error, 3 numerical self-check failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from config.app_config import (
    DEFAULT_COURANT,
    DEFAULT_NMAX,
    FDW_CSV_DIGITS,
    FDW_LOG_LEVEL,
    FDW_THREADS,
    PDE_T_FINAL,
    TRACE_N,
)
from errors import FdwError, NumericalDiagnosticError, ValidationError
from asymptotics.plateaus import (
    dirichlet_l2_closed_form,
    first_moment_slope,
    l2_quadrature,
    lp_convergence_order,
    lp_exponent,
    moment_asymptote,
)
from asymptotics.predictors import STABLE, UNSTABLE, Prediction, predict
from green.predict import (
    Front,
    green_front_predict,
    green_l2_limit,
    green_transition_predict,
    trace_divergence,
)
from green.simulate import GreenKind, green_simulate
from oracle.rational import MAX_N, oracle_check
from reporting.writers import dumps_json, rows_to_csv, rows_to_xlsx
from schemes.library import NAMED_SCHEMES, lax_friedrichs_corner, load_scheme_file, named_boundary
from schemes.model import BoundaryScheme, BulkKind, BulkScheme, CornerScheme, parse_number, to_fraction
from schemes.norms import empirical_order, lp_norm, moments
from schemes.pde import pde_order_study
from schemes.simulate import simulate_error
from stability.classify import classify
from symbols.phase import Zone

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

# Remainder exponent of each zone predictor: |eps - pred| = O(n^-rate).
_REMAINDER_RATE = {
    Zone.NEAR_WALL: 2.5,
    Zone.TRANSITION: 1.5,
    Zone.FRONT: 2.0 / 3.0,
    Zone.GAUSSIAN_PEAK: 1.0,
}
_UNSTABLE_FRONT_RATE = 1.0 / 3.0

_ZONE_NAMES = {
    "near-wall": Zone.NEAR_WALL,
    "nearwall": Zone.NEAR_WALL,
    "transition": Zone.TRANSITION,
    "front": Zone.FRONT,
    "gaussian": Zone.GAUSSIAN_PEAK,
    "gaussianpeak": Zone.GAUSSIAN_PEAK,
}


# Flags whose values may be negative rationals such as -1/2.
_SIGNED_FLAGS = ("--courant", "--omega", "--nu", "--param", "--dx")


@dataclass(frozen=True)
class RunConfig:
    """The parsed invocation; `to_json` is canonical (sorted keys, numbers as p/q strings)."""

    command: str
    boundary: Optional[str] = None
    bulk: Optional[str] = None
    courant: Optional[str] = None
    omega: Optional[str] = None
    n_max: Optional[int] = None
    j_max: Optional[int] = None
    zone: Optional[str] = None
    nu: Optional[str] = None
    output: Optional[str] = None
    format: str = "csv"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        def num(name: str) -> Optional[str]:
            raw = getattr(args, name, None)
            return None if raw is None else str(parse_number(raw))

        n_max = getattr(args, "nmax", None)
        if n_max is None:
            n_max = getattr(args, "n", None)
        return cls(
            command=args.cmd,
            boundary=getattr(args, "boundary", None),
            bulk=getattr(args, "bulk", None),
            courant=num("courant"),
            omega=num("omega"),
            n_max=n_max,
            j_max=getattr(args, "jmax", None),
            zone=getattr(args, "zone", None),
            nu=num("nu"),
            output=args.output,
            format=args.format,
        )

    def to_json(self) -> str:
        return dumps_json(self.__dict__)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        data = json.loads(text)
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValidationError("unknown run config keys: %s" % ", ".join(sorted(unknown)))
        return cls(**data)


@dataclass
class CommandResult:
    """Tabular rows (header + rows) and/or a JSON payload."""

    header: Optional[List[str]] = None
    rows: List[Sequence[Any]] = field(default_factory=list)
    payload: Dict[str, Any] = field(default_factory=dict)
    sheet: str = "results"
    exit_code: int = EXIT_OK


def configure_logging(level: Optional[str] = None) -> None:
    name = (level or FDW_LOG_LEVEL or "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


# ---- argument helpers -------------------------------------------------------


def _bulk(args: argparse.Namespace) -> BulkScheme:
    kind = BulkKind.parse(args.bulk)
    omega = parse_number(args.omega) if args.omega is not None else None
    return BulkScheme(kind=kind, courant=parse_number(args.courant), omega=omega, allow_any_courant=kind != BulkKind.LEAP_FROG)


def _leapfrog(args: argparse.Namespace) -> BulkScheme:
    return BulkScheme(kind=BulkKind.LEAP_FROG, courant=parse_number(args.courant))


def _boundary(args: argparse.Namespace, kind: BulkKind) -> Tuple[BoundaryScheme, Optional[CornerScheme]]:
    target = args.boundary
    if target is None:
        target = "upwind" if kind == BulkKind.LEAP_FROG else "dirichlet"
    key = target.strip().lower().replace("-", "_")
    if key in NAMED_SCHEMES:
        params = [parse_number(p) for p in (args.param or [])]
        return named_boundary(key, parse_number(args.courant), *params), None
    return load_scheme_file(target)


def _nu(text: Optional[str]) -> Optional[Fraction]:
    if text is None:
        return None
    nu = parse_number(text)
    if not isinstance(nu, Fraction):
        nu = Fraction(nu)
    if nu < 0 or nu > 1:
        raise ValidationError("nu must lie in [0, 1] (got %s)" % nu)
    return nu


def _sample_times(n_max: int, step: int = 1) -> List[int]:
    out = []
    for div in (8, 4, 2, 1):
        n = (n_max // div) // step * step
        if n >= 2 and n not in out:
            out.append(n)
    return out


def _remainder_rate(zone: Zone, mode: str) -> float:
    if zone == Zone.FRONT and mode == UNSTABLE:
        return _UNSTABLE_FRONT_RATE
    return _REMAINDER_RATE.get(zone, 0.0)


def _parallel(fn: Callable, items: Sequence) -> List:
    if FDW_THREADS <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=FDW_THREADS) as ex:
        return list(ex.map(fn, items))


def _zone_points(zone: Zone, bulk: BulkScheme, n: int, nu: Optional[Fraction]) -> List[int]:
    c = bulk.c
    if zone == Zone.NEAR_WALL:
        return list(range(0, 5))
    if zone == Zone.TRANSITION:
        ratio = nu if nu is not None else abs(to_fraction(bulk.courant)) / 2
        return [int(ratio * n)]
    if zone == Zone.FRONT:
        centre = int(round(-c * n)) if c < 0 else int(round(c * n))
        return list(range(centre - 5, centre + 6))
    spread = int(3 * math.sqrt(max(n, 1)))
    centre = int(round(c * n))
    return list(range(max(0, centre - spread), centre + spread + 1, max(1, spread // 10)))


# ---- commands ---------------------------------------------------------------


def cmd_simulate(args: argparse.Namespace) -> CommandResult:
    bulk = _bulk(args)
    boundary, _ = _boundary(args, bulk.kind)
    n_max = args.nmax
    every = max(1, args.every or 1)
    snaps = list(range(0, n_max + 1, every))
    run = simulate_error(
        bulk, boundary, n_max, args.jmax, truncate=args.truncate, snapshots=snaps, exact=args.exact
    )
    rows = []
    for fld in run:
        for j, v in enumerate(fld.values):
            rows.append((fld.time_index, j, v))
    return CommandResult(header=["n", "j", "value"], rows=rows, sheet="simulate")


def cmd_pde_demo(args: argparse.Namespace) -> CommandResult:
    courant = float(parse_number(args.courant))
    boundary, corner = _boundary(args, BulkKind.LEAP_FROG)
    corner = corner or lax_friedrichs_corner(parse_number(args.courant))
    dxs = [float(parse_number(d)) for d in (args.dx or ["1/1000", "1/2000", "1/4000"])]
    study = pde_order_study(boundary, corner, dxs, courant, args.t_final, p=float(args.p))
    predicted = lp_convergence_order(args.p)
    rows = [(dx, norm) for dx, norm in zip(study.dxs, study.norms)]
    return CommandResult(
        header=["dx", "error_norm"],
        rows=rows,
        payload={"order": study.order, "predicted_order": predicted, "p": study.p},
        sheet="pde",
    )


def cmd_predict(args: argparse.Namespace) -> CommandResult:
    bulk = _bulk(args)
    boundary, _ = _boundary(args, bulk.kind)
    n = args.n
    nu = _nu(args.nu)
    if args.j is not None:
        j = args.j
    elif nu is not None:
        if (nu * n).denominator != 1:
            raise ValidationError("n must be a multiple of the denominator of nu")
        j = int(nu * n)
    else:
        raise ValidationError("predict needs --j or --nu")
    zone = _ZONE_NAMES[args.zone] if args.zone else None
    mode = UNSTABLE if args.unstable else STABLE
    pred = predict(boundary, bulk, n, j, mode=mode, zone=zone)
    return CommandResult(payload=_prediction_payload(pred))


def _prediction_payload(pred: Prediction) -> Dict[str, Any]:
    return {
        "zone": pred.zone.value,
        "n": pred.n,
        "j": pred.j,
        "value": pred.value,
        "scale_exponent": pred.scale_exponent,
        "diagnostics": pred.diagnostics,
    }


def cmd_compare(args: argparse.Namespace) -> CommandResult:
    bulk = _bulk(args)
    boundary, _ = _boundary(args, bulk.kind)
    zone = _ZONE_NAMES[args.zone]
    mode = UNSTABLE if args.unstable else STABLE
    nu = _nu(args.nu)
    step = nu.denominator if (zone == Zone.TRANSITION and nu is not None) else 1
    times = _sample_times(args.nmax, step)
    run = simulate_error(bulk, boundary, args.nmax, args.jmax, truncate=args.truncate, snapshots=times)
    points = []
    for n in times:
        for j in _zone_points(zone, bulk, n, nu):
            if 0 <= j <= run.j_max:
                points.append((n, j))

    def one(point: Tuple[int, int]):
        n, j = point
        simulated = float(run.row(n).values[j])
        try:
            predicted = predict(boundary, bulk, n, j, mode=mode, zone=zone).value
        except ValidationError as e:
            _logger.info("no prediction at n=%d j=%d: %s", n, j, e)
            return None
        err = abs(simulated - predicted)
        return (n, j, zone.value, simulated, predicted, err, err * n ** _remainder_rate(zone, mode))

    rows = [r for r in _parallel(one, points) if r is not None]
    return CommandResult(
        header=["n", "j", "zone", "simulated", "predicted", "abs_err", "scaled_err"], rows=rows, sheet="compare"
    )


def cmd_stability(args: argparse.Namespace) -> CommandResult:
    bulk = _bulk(args)
    boundary, _ = _boundary(args, bulk.kind)
    verdict = classify(boundary, bulk, delta=args.delta, grid=args.grid)
    return CommandResult(payload=verdict.to_json())


def cmd_l2(args: argparse.Namespace) -> CommandResult:
    bulk = _leapfrog(args)
    boundary, _ = _boundary(args, bulk.kind)
    quad = l2_quadrature(boundary, bulk)
    payload: Dict[str, Any] = {"l2_asymptote": quad.value, "nodes": quad.nodes, "imag_residue": quad.imag_residue}
    if boundary.is_dirichlet():
        payload["closed_form"] = dirichlet_l2_closed_form(bulk.c)
    if args.nmax:
        run = simulate_error(bulk, boundary, args.nmax, snapshots=())
        payload["simulated"] = lp_norm(run.final, 2)
        payload["n"] = args.nmax
    return CommandResult(payload=payload)


def cmd_moments(args: argparse.Namespace) -> CommandResult:
    bulk = _leapfrog(args)
    boundary, _ = _boundary(args, bulk.kind)
    n = args.nmax
    run = simulate_error(bulk, boundary, n, snapshots=(n - 1,))
    payload: Dict[str, Any] = {
        "n": n,
        "order": args.order,
        "alternating": args.alternating,
        "simulated": float(moments(run.final, args.order, args.alternating)),
        "predicted": moment_asymptote(boundary, bulk.c, args.order, args.alternating, n),
    }
    if args.order == 1 and not args.alternating:
        m_prev = float(moments(run.row(n - 1), 1, False))
        m_last = float(moments(run.final, 1, False))
        sign = -1 if n % 2 else 1
        payload["simulated_slope"] = sign * m_last + sign * m_prev
        payload["predicted_slope"] = first_moment_slope(boundary, bulk.c)
    return CommandResult(payload=payload)


def cmd_green(args: argparse.Namespace) -> CommandResult:
    which = GreenKind.parse(args.which)
    c = float(parse_number(args.courant))
    fields = green_simulate(c, which, args.nmax, snapshots=())
    final = fields[-1]
    if args.zone is None:
        rows = [(final.n, int(j), v) for j, v in zip(final.j, final.values)]
        return CommandResult(
            header=["n", "j", "value"],
            rows=rows,
            payload={"l2": final.l2(), "l2_limit": green_l2_limit(c)},
            sheet="green",
        )
    if which != GreenKind.SECOND:
        raise ValidationError("Green predictors describe the second Green function")
    n = final.n
    if args.zone == "transition":
        lim = int(abs(c) * n * 0.95)
        js = list(range(-lim, lim + 1, max(1, lim // 50)))

        def fn(j: int) -> float:
            return green_transition_predict(c, n, j)

    elif args.zone in ("front", "spurious", "physical"):
        front = Front.PHYSICAL if args.zone == "physical" else Front.SPURIOUS
        centre = int(round(c * n)) if front == Front.PHYSICAL else int(round(-c * n))
        js = list(range(centre - 10, centre + 11))

        def fn(j: int) -> float:
            return green_front_predict(c, n, j, front)

    else:
        raise ValidationError("green --zone must be transition, spurious or physical")
    preds = _parallel(fn, js)
    rows = []
    for j, p in zip(js, preds):
        v = float(final.at(j))
        rows.append((n, j, v, p, abs(v - p)))
    return CommandResult(header=["n", "j", "value", "predicted", "abs_err"], rows=rows, sheet="green")


def cmd_trace(args: argparse.Namespace) -> CommandResult:
    c = float(parse_number(args.courant))
    res = trace_divergence(c, args.nmax, method=args.method)
    n_values = sorted({int(round(10 ** e)) for e in [x / 4 for x in range(4, 4 * int(math.log10(args.nmax)) + 1)]} | {args.nmax})
    rows = [(n, float(res.partial_sums[n])) for n in n_values if n <= args.nmax]
    return CommandResult(
        header=["N", "partial_sum"],
        rows=rows,
        payload={
            "fitted_log_coeff": res.fitted_log_coeff,
            "theoretical_log_coeff": res.theoretical_log_coeff,
            "stated_log_coeff": res.stated_log_coeff,
            "partial_sum": res.partial_sum,
        },
        sheet="trace",
    )


def cmd_lp_scan(args: argparse.Namespace) -> CommandResult:
    ps = args.p_values or ["1", "2", "3", "4", "6", "inf"]
    measured: Dict[str, float] = {}
    if args.nmax:
        bulk = _leapfrog(args)
        boundary, _ = _boundary(args, bulk.kind)
        times = [args.nmax // 4, args.nmax // 2, args.nmax]
        run = simulate_error(bulk, boundary, args.nmax, snapshots=times)

        def fit(p: str) -> float:
            norms = [lp_norm(run.row(n), p) for n in times]
            # norms ~ n^exponent, so the slope against 1/n is -exponent
            return -empirical_order([1.0 / n for n in times], norms)

        for p, val in zip(ps, _parallel(fit, ps)):
            measured[p] = val
    rows = []
    for p in ps:
        exp = lp_exponent(p)
        rows.append((p, exp.exponent, exp.dominant, lp_convergence_order(p), measured.get(p)))
    return CommandResult(header=["p", "exponent", "dominant", "convergence_order", "measured_exponent"], rows=rows, sheet="lp")


def cmd_oracle_check(args: argparse.Namespace) -> CommandResult:
    n_max = min(args.nmax or MAX_N, MAX_N)
    bad = oracle_check(parse_number(args.courant), n_max)
    payload = {
        "courant": str(parse_number(args.courant)),
        "n_max": n_max,
        "checked": sum(n + 1 for n in range(n_max + 1)),
        "mismatches": [{"n": n, "j": j, "explicit": str(a), "recurrence": str(b)} for n, j, a, b in bad],
    }
    return CommandResult(payload=payload, exit_code=EXIT_NUMERICAL if bad else EXIT_OK)


# ---- parser -----------------------------------------------------------------


def _add_scheme_args(p: argparse.ArgumentParser, bulk: bool = True) -> None:
    if bulk:
        p.add_argument("--bulk", default="leapfrog", help="leapfrog | dissipative | manufactured")
        p.add_argument("--omega", default=None, help="relaxation parameter of the dissipative bulk")
    p.add_argument("--courant", default=DEFAULT_COURANT, help="Courant number, e.g. -1/2")
    p.add_argument("--boundary", default=None, help="scheme name or JSON coefficient file")
    p.add_argument("--param", action="append", help="extra factory parameter (repeatable)")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=["csv", "json", "xlsx"], default="csv")
    p.add_argument("--log-level", default=None)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fdw", description="Boundary-scheme error analysis for the leap-frog scheme")
    sub = p.add_subparsers(dest="cmd", required=True)

    ps = sub.add_parser("simulate", help="run the error recurrence")
    _add_scheme_args(ps)
    ps.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    ps.add_argument("--jmax", type=int, default=None)
    ps.add_argument("--truncate", action="store_true")
    ps.add_argument("--every", type=int, default=1, help="keep every k-th row")
    ps.add_argument("--exact", action="store_true", help="rational arithmetic")
    ps.set_defaults(func=cmd_simulate)

    pp = sub.add_parser("pde-demo", help="empirical order of the PDE error")
    _add_scheme_args(pp, bulk=False)
    pp.add_argument("--dx", action="append", help="grid step (repeatable)")
    pp.add_argument("--t-final", type=float, default=PDE_T_FINAL)
    pp.add_argument("--p", default="2")
    pp.set_defaults(func=cmd_pde_demo)

    pr = sub.add_parser("predict", help="zone prediction at one point")
    _add_scheme_args(pr)
    pr.add_argument("--zone", choices=sorted(_ZONE_NAMES), default=None)
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--j", type=int, default=None)
    pr.add_argument("--nu", default=None, help="j/n as p/q")
    pr.add_argument("--unstable", action="store_true")
    pr.set_defaults(func=cmd_predict)

    pc = sub.add_parser("compare", help="simulated vs predicted in one zone")
    _add_scheme_args(pc)
    pc.add_argument("--zone", choices=sorted(_ZONE_NAMES), required=True)
    pc.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    pc.add_argument("--jmax", type=int, default=None)
    pc.add_argument("--truncate", action="store_true")
    pc.add_argument("--nu", default=None, help="transition point j/n as p/q")
    pc.add_argument("--unstable", action="store_true")
    pc.set_defaults(func=cmd_compare)

    pst = sub.add_parser("stability", help="stability verdict")
    _add_scheme_args(pst)
    pst.add_argument("--delta", type=float, default=None)
    pst.add_argument("--grid", type=int, default=None)
    pst.set_defaults(func=cmd_stability)

    pl = sub.add_parser("l2", help="l2 plateau")
    _add_scheme_args(pl, bulk=False)
    pl.add_argument("--nmax", type=int, default=0, help="also simulate to this n")
    pl.set_defaults(func=cmd_l2)

    pm = sub.add_parser("moments", help="zero and first moments")
    _add_scheme_args(pm, bulk=False)
    pm.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    pm.add_argument("--order", type=int, choices=[0, 1], default=0)
    pm.add_argument("--alternating", action="store_true")
    pm.set_defaults(func=cmd_moments)

    pg = sub.add_parser("green", help="Green functions on the lattice")
    pg.add_argument("--courant", default=DEFAULT_COURANT)
    pg.add_argument("--which", default="Second")
    pg.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    pg.add_argument("--zone", default=None, help="transition | spurious | physical")
    pg.set_defaults(func=cmd_green)

    pt = sub.add_parser("trace", help="divergence of sum |S_0^n|^2")
    pt.add_argument("--courant", default=DEFAULT_COURANT)
    pt.add_argument("--nmax", type=int, default=TRACE_N)
    pt.add_argument("--method", choices=["legendre", "simulate"], default="legendre")
    pt.set_defaults(func=cmd_trace)

    plp = sub.add_parser("lp-scan", help="l^p growth exponents")
    _add_scheme_args(plp, bulk=False)
    plp.add_argument("--p-values", nargs="+", default=None)
    plp.add_argument("--nmax", type=int, default=0, help="also measure exponents from a run")
    plp.set_defaults(func=cmd_lp_scan)

    po = sub.add_parser("oracle-check", help="rational explicit formula vs exact recurrence")
    po.add_argument("--courant", default=DEFAULT_COURANT)
    po.add_argument("--nmax", type=int, default=MAX_N)
    po.set_defaults(func=cmd_oracle_check)

    for sp in (ps, pp, pr, pc, pst, pl, pm, pg, pt, plp, po):
        _add_output_args(sp)
    return p


# ---- output -----------------------------------------------------------------


def _render(result: CommandResult, fmt: str, output: Optional[str], out) -> None:
    if result.header is None or fmt == "json":
        if result.header is None:
            payload = result.payload
        else:
            payload = dict(result.payload)
            payload["columns"] = result.header
            payload["rows"] = [list(r) for r in result.rows]
        text = dumps_json(payload)
    elif fmt == "xlsx":
        if not output:
            raise ValidationError("--format xlsx needs --output")
        rows_to_xlsx(result.header, result.rows, output, result.sheet)
        if result.payload:
            _logger.info("%s", dumps_json(result.payload).strip())
        return
    else:
        text = rows_to_csv(result.header, result.rows, FDW_CSV_DIGITS)
        if result.payload:
            _logger.info("%s", dumps_json(result.payload).strip())
    if output:
        with open(output, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        out.write(text)


def _join_signed_values(argv: Sequence[str]) -> List[str]:
    """["--courant", "-1/2"] -> ["--courant=-1/2"] so argparse does not read -1/2 as a flag."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in _SIGNED_FLAGS and nxt is not None and len(nxt) > 1 and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] == "."):
            out.append("%s=%s" % (tok, nxt))
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    raw = list(argv) if argv is not None else sys.argv[1:]
    try:
        args = parser.parse_args(_join_signed_values(raw))
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_VALIDATION
    configure_logging(args.log_level)
    try:
        _logger.info("run config %s", RunConfig.from_args(args).to_json().strip())
        result = args.func(args)
        _render(result, args.format, args.output, out)
        return result.exit_code
    except ValidationError as e:
        _logger.error("%s", e)
        return EXIT_VALIDATION
    except NumericalDiagnosticError as e:
        _logger.error("%s", e)
        return EXIT_NUMERICAL
    except FdwError as e:
        _logger.error("%s", e)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(run())
