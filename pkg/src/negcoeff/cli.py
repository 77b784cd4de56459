"""Batch command-line front end.

Reads series and params JSON files, dispatches to the library and prints a
deterministic JSON (or CSV) report on stdout.  Exit codes: 0 when the run
succeeded and any predicate held (membership true, no violation found),
1 when a predicate failed or a violation was found, 2 on invalid input,
an invalid weight family or a parameter out of range.  Every library error
is reported as one machine-readable JSON line on stderr.

Defaults (kmax = 512, tol = 1e-9, the standard sampling grid) are all
overridable by flags and nothing is read from the environment, so a result
is fully reproducible from its command line.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .errors import NegCoeffError, ParameterOutOfRange
from .geometry import (
    DEFAULT_KMAX,
    RADIUS_KINDS,
    bernardi_univalence_radius,
    distortion_envelope,
    radius,
)
from .jsonio import (
    decomposition_to_dict,
    dumps,
    envelope_to_dict,
    format_float,
    margin_to_dict,
    parse_params,
    parse_series,
    product_to_dict,
    radius_to_dict,
    series_to_dict,
)
from .membership import PRODUCT_KINDS, decompose, deficiency, extremal, product_parameter
from .oracle import (
    DEFAULT_ANGLES,
    DEFAULT_RADII,
    DEFAULT_REAL_AXIS,
    GEOMETRY_KINDS,
    SampleGrid,
    circle_points,
    distortion_extremes,
    geometry_slacks,
    grid_points,
    membership_slacks,
    reduce_margin,
    transform_slacks,
)
from .series import bernardi

DEFAULT_TOL = 1e-9

VERIFY_KINDS = ("membership",) + GEOMETRY_KINDS + ("transform",)


class _InputError(NegCoeffError):
    """Invalid invocation or unreadable input file."""

    @property
    def code(self) -> str:
        return "InvalidInput"


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path} is not valid JSON: {exc}") from exc


def _float_list(text: str, flag: str) -> tuple[float, ...]:
    if text.strip() == "":
        return ()
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise _InputError(f"{flag} expects comma-separated numbers, got {text!r}") from exc


def _check_kmax(kmax: int, j: int) -> int:
    if kmax < j + 2:
        raise ParameterOutOfRange(f"--kmax must be at least j + 2 = {j + 2}, got {kmax}")
    return kmax


def _check_tol(tol: float) -> float:
    if not tol > 0.0:
        raise ParameterOutOfRange(f"--tol must be positive, got {tol}")
    return tol


def _emit(payload) -> None:
    sys.stdout.write(dumps(payload) + "\n")


def _csv_row(fields) -> str:
    cells = []
    for field in fields:
        cells.append(format_float(field) if isinstance(field, float) else str(field))
    return ",".join(cells)


def _cmd_check(args) -> int:
    f = parse_series(_load_json(args.series))
    p = parse_params(_load_json(args.params))
    sigma, member = deficiency(f, p)
    _emit({"sigma": float(sigma), "member": bool(member)})
    return 0 if member else 1


def _cmd_extremal(args) -> int:
    p = parse_params(_load_json(args.params))
    _emit(series_to_dict(extremal(args.k, p)))
    return 0


def _cmd_decompose(args) -> int:
    f = parse_series(_load_json(args.series))
    p = parse_params(_load_json(args.params))
    _emit(decomposition_to_dict(decompose(f, p)))
    return 0


def _cmd_radii(args) -> int:
    p = parse_params(_load_json(args.params))
    _check_kmax(args.kmax, p.j)
    kinds = [args.kind] if args.kind else list(RADIUS_KINDS)
    rhos = _float_list(args.rho, "--rho")
    if not rhos:
        raise _InputError("--rho needs at least one value")
    results = [
        (kind, rho, radius(kind, p, rho, kmax=args.kmax, full_scan=args.full_scan))
        for kind in kinds
        for rho in rhos
    ]
    if args.format == "csv":
        lines = ["kind,rho,value,attained_k"]
        lines += [_csv_row((k, rho, res.value, res.attained_k)) for k, rho, res in results]
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    if len(results) == 1:
        _emit(radius_to_dict(results[0][2]))
    else:
        _emit({"radii": [dict(radius_to_dict(res), rho=float(rho)) for _, rho, res in results]})
    return 0


def _cmd_distortion(args) -> int:
    p = parse_params(_load_json(args.params))
    _check_tol(args.tol)
    env = distortion_envelope(p, args.i, args.r)
    payload = envelope_to_dict(env)
    code = 0
    if args.verify:
        if args.series is None:
            raise _InputError("--verify needs --series")
        f = parse_series(_load_json(args.series))
        low, high = distortion_extremes(f, args.i, args.r, p.mode, angles=args.angles)
        inside = low >= env.lower - args.tol and high <= env.upper + args.tol
        payload.update({"oracle_min": low, "oracle_max": high, "inside": inside})
        code = 0 if inside else 1
    _emit(payload)
    return code


def _cmd_product(args) -> int:
    p = parse_params(_load_json(args.params))
    _check_kmax(args.kmax, p.j)
    result = product_parameter(args.kind, p, eta=args.eta, kmax=args.kmax)
    _emit(product_to_dict(result))
    return 0


def _cmd_transform(args) -> int:
    f = parse_series(_load_json(args.series))
    p = parse_params(_load_json(args.params))
    _check_kmax(args.kmax, p.j)
    image = bernardi(f, args.c)
    res = bernardi_univalence_radius(p, args.c, kmax=args.kmax, full_scan=args.full_scan)
    _emit({"series": series_to_dict(image), "univalence_radius": radius_to_dict(res)})
    return 0


def _verify_samples(args):
    f = parse_series(_load_json(args.series))
    if args.kind == "membership":
        if args.params is None:
            raise _InputError("membership verification needs --params")
        p = parse_params(_load_json(args.params))
        radii = DEFAULT_RADII if args.radii is None else _float_list(args.radii, "--radii")
        refine = (
            DEFAULT_REAL_AXIS if args.real_axis is None else _float_list(args.real_axis, "--real-axis")
        )
        points = grid_points(SampleGrid(radii, args.angles, refine))
        slack, degenerate = membership_slacks(f, p, points)
        return points, slack, degenerate
    if args.r is None:
        raise _InputError(f"kind {args.kind!r} needs --r")
    points = circle_points(args.r, args.angles)
    if args.kind == "transform":
        slack, degenerate = transform_slacks(f, points)
    else:
        slack, degenerate = geometry_slacks(args.kind, f, args.rho, points)
    return points, slack, degenerate


def _cmd_verify(args) -> int:
    _check_tol(args.tol)
    points, slack, degenerate = _verify_samples(args)
    report = reduce_margin(slack, degenerate, points)
    if args.dump:
        lines = ["index,re,im,slack,degenerate"]
        for idx, z in enumerate(points):
            lines.append(
                _csv_row(
                    (idx, float(z.real), float(z.imag), float(slack[idx]), int(degenerate[idx]))
                )
            )
        with open(args.dump, "w", encoding="utf-8") as handle:
            handle.write("\n".join(lines) + "\n")
    _emit(margin_to_dict(report))
    return 0 if report.margin >= -args.tol else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negcoeff",
        description="Coefficient-criterion tools for series with negative coefficients.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.set_defaults(handler=handler)
        return cmd

    check = add("check", _cmd_check, "membership test via the coefficient criterion")
    check.add_argument("--series", required=True, help="series JSON file")
    check.add_argument("--params", required=True, help="params JSON file")

    ext = add("extremal", _cmd_extremal, "single-term series saturating the criterion")
    ext.add_argument("--params", required=True)
    ext.add_argument("--k", required=True, type=int, help="index of the extremal term")

    dec = add("decompose", _cmd_decompose, "extreme-point weights of a member")
    dec.add_argument("--series", required=True)
    dec.add_argument("--params", required=True)

    rad = add("radii", _cmd_radii, "geometric radii (all kinds unless --kind)")
    rad.add_argument("--params", required=True)
    rad.add_argument("--rho", default="0.0", help="comma-separated orders in [0, 1)")
    rad.add_argument("--kind", choices=RADIUS_KINDS)
    rad.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    rad.add_argument("--full-scan", action="store_true", help="disable the early stop")
    rad.add_argument("--format", choices=("json", "csv"), default="json")

    dis = add("distortion", _cmd_distortion, "modulus envelope for an operator image")
    dis.add_argument("--params", required=True)
    dis.add_argument("--i", required=True, type=int, help="operator index, 0 <= i <= n")
    dis.add_argument("--r", required=True, type=float, help="circle radius in [0, 1)")
    dis.add_argument("--series", help="series JSON file (with --verify)")
    dis.add_argument("--verify", action="store_true", help="compare sampled extremes")
    dis.add_argument("--angles", type=int, default=DEFAULT_ANGLES)
    dis.add_argument("--tol", type=float, default=DEFAULT_TOL)

    pro = add("product", _cmd_product, "certified class parameter for combined series")
    pro.add_argument("--params", required=True)
    pro.add_argument("--kind", required=True, choices=PRODUCT_KINDS)
    pro.add_argument("--eta", type=float, help="second class parameter (kind xi)")
    pro.add_argument("--kmax", type=int, default=DEFAULT_KMAX)

    tra = add("transform", _cmd_transform, "coefficient transform and univalence radius")
    tra.add_argument("--series", required=True)
    tra.add_argument("--params", required=True)
    tra.add_argument("--c", required=True, type=float, help="transform parameter, c > -1")
    tra.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    tra.add_argument("--full-scan", action="store_true")

    ver = add("verify", _cmd_verify, "disc-sampling margin for an analytic condition")
    ver.add_argument("--series", required=True)
    ver.add_argument("--params", help="params JSON file (kind membership)")
    ver.add_argument("--kind", choices=VERIFY_KINDS, default="membership")
    ver.add_argument("--rho", type=float, default=0.0, help="order for geometric kinds")
    ver.add_argument("--r", type=float, help="circle radius for non-membership kinds")
    ver.add_argument("--angles", type=int, default=DEFAULT_ANGLES)
    ver.add_argument("--radii", help="comma-separated grid radii (kind membership)")
    ver.add_argument("--real-axis", help="comma-separated real-axis refinement points")
    ver.add_argument("--dump", help="write per-sample slacks to this CSV file")
    ver.add_argument("--tol", type=float, default=DEFAULT_TOL)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except NegCoeffError as exc:
        sys.stderr.write(dumps({"error": exc.code, "detail": str(exc)}) + "\n")
        return 2
    except OSError as exc:
        sys.stderr.write(dumps({"error": "InvalidInput", "detail": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
