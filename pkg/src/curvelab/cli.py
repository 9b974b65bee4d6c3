"""Command-line interface.

Subcommands (see ``curvelab <cmd> --help`` for flags):

  show          render base curve / singular evolutoids set / evolutoid
                family to SVG
  evolutoid     sample one evolutoid to CSV (columns: param,x,y), or its
                singular points with --singular
                (columns: param,alpha,x,y,is_cusp,borderline)
  ses           sample the singular evolutoids set to CSV
                (columns: param,alpha,x,y; with --classify an extra kind
                column plus rows for singularities and inflexions)
  front         sample the extended evolutoids front to an OBJ mesh, with
                optional singular-set CSV (columns: theta,alpha,x,y,kind)
  gauss-bonnet  certify the front's Gauss-Bonnet identity, JSON report
  areas         evolutoid area identity / inequality report, JSON
  check         genericity scan report, JSON

Exit codes: 0 success; 1 malformed specification; 2 numeric degeneracy
(JSON diagnostic on stderr); 3 gauss-bonnet residual above --tol-residual.
All angles are radians; fractions of pi like "pi/6" or "3pi/4" are accepted.
CURVELAB_THREADS caps quadrature worker threads, CURVELAB_BACKEND selects
the numba or numpy kernel backend.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import front as front_mod
from . import ses as ses_mod
from .curves import ParamCurve, SupportCurve, check_genericity, oriented_area
from .errors import (
    BorderlineClassification,
    CurveLabError,
    DegenerateSigmaPointError,
    DegenerateSingularSetError,
    FlatError,
    NotClosedError,
    OnSigmaError,
    RegularityError,
    SpecError,
)
from .evolutoid import (
    EvolutoidSpec,
    area_identity,
    asymptote_lines,
    check_cor24,
    evolutoid_points,
    evolutoid_point,
    singular_params,
)
from .gaussbonnet import gauss_bonnet_check
from .plotting import PlotScene, render_svg
from .specio import parse_angle, parse_curve_spec, write_csv, write_json_report

_DEGENERACY_ERRORS = (
    DegenerateSingularSetError,
    DegenerateSigmaPointError,
    OnSigmaError,
    FlatError,
    RegularityError,
    NotClosedError,
    BorderlineClassification,
)


def _load_curve(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read curve spec {path}: {exc}")
    return parse_curve_spec(text)


def _curve_id(path: str) -> str:
    return Path(path).name


def _param_grid(curve, n: int) -> np.ndarray:
    if isinstance(curve, SupportCurve):
        return np.linspace(0.0, curve.closure_period, n, endpoint=False)
    t0, t1 = curve.domain
    return np.linspace(t0, t1, n)


def _base_polyline(curve, n: int) -> np.ndarray:
    ts = _param_grid(curve, n)
    pts = curve.points(ts)
    if isinstance(curve, SupportCurve):
        pts = np.vstack([pts, pts[:1]])  # close the loop visually
    return pts


def _ses_samples(curve, n: int):
    ts = _param_grid(curve, n)
    if isinstance(curve, SupportCurve):
        locs = ses_mod.ses_points_support(curve, ts)
        alphas = [ses_mod.ses_point(curve, float(t)).alpha_of_param for t in ts]
        return ts, np.asarray(locs), np.array(alphas)
    rows = []
    for t in ts:
        try:
            sp = ses_mod.ses_point(curve, float(t))
        except (RegularityError, FlatError):
            continue
        rows.append((sp.param, sp.location[0], sp.location[1], sp.alpha_of_param))
    arr = np.array(rows)
    return arr[:, 0], arr[:, 1:3], arr[:, 3]


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_show(args) -> int:
    curve = _load_curve(args.curve)
    scene = PlotScene()
    scene.add(_base_polyline(curve, args.samples), "base")
    if args.what == "family":
        alphas = [parse_angle(a) for a in args.alphas.split(",")] if args.alphas else []
        if not alphas:
            raise SpecError("--what family requires --alphas", field="alphas")
        for alpha in alphas:
            if isinstance(curve, SupportCurve):
                pts = evolutoid_points(EvolutoidSpec(curve, alpha), _param_grid(curve, args.samples))
                pts = np.vstack([pts, pts[:1]])
            else:
                pts = _sample_param_evolutoid(curve, alpha, args.samples)
            scene.add(pts, "evolutoid")
    if args.what in ("ses", "family"):
        _, locs, _ = _ses_samples(curve, args.samples)
        if isinstance(curve, SupportCurve):
            locs = np.vstack([locs, locs[:1]])
        scene.add(locs, "ses")
    if args.asymptotes:
        if not isinstance(curve, ParamCurve):
            raise SpecError("--asymptotes applies to parametric curves only")
        alphas = [parse_angle(a) for a in args.alphas.split(",")] if args.alphas else [np.pi / 2]
        reach = 2.0 * curve.diameter()
        for alpha in alphas:
            for line in asymptote_lines(curve, alpha):
                seg = np.array(
                    [line.point - reach * line.direction, line.point + reach * line.direction]
                )
                scene.add(seg, "asymptote")
    render_svg(scene, args.out)
    return 0


def _sample_param_evolutoid(curve: ParamCurve, alpha: float, n: int) -> np.ndarray:
    pts = []
    for t in _param_grid(curve, n):
        try:
            pts.append(evolutoid_point(EvolutoidSpec(curve, alpha), float(t)))
        except (RegularityError, FlatError):
            continue
    if not pts:
        raise FlatError("evolutoid has no finite sample points")
    return np.array(pts)


def _cmd_evolutoid(args) -> int:
    curve = _load_curve(args.curve)
    alpha = parse_angle(args.alpha)
    spec = EvolutoidSpec(curve, alpha)
    if args.singular:
        rows = [
            (s.param, s.alpha, s.location[0], s.location[1],
             "1" if s.is_cusp else "0", "1" if s.borderline else "0")
            for s in singular_params(spec)
        ]
        write_csv(args.out, ["param", "alpha", "x", "y", "is_cusp", "borderline"], rows)
        return 0
    ts = _param_grid(curve, args.samples)
    if isinstance(curve, SupportCurve):
        pts = evolutoid_points(spec, ts)
        rows = [(t, p[0], p[1]) for t, p in zip(ts, pts)]
    else:
        rows = []
        for t in ts:
            try:
                p = evolutoid_point(spec, float(t))
            except (RegularityError, FlatError):
                continue
            rows.append((t, p[0], p[1]))
    write_csv(args.out, ["param", "x", "y"], rows)
    return 0


def _cmd_ses(args) -> int:
    curve = _load_curve(args.curve)
    ts, locs, alphas = _ses_samples(curve, args.samples)
    if not args.classify:
        rows = [(t, a, p[0], p[1]) for t, a, p in zip(ts, alphas, locs)]
        write_csv(args.out, ["param", "alpha", "x", "y"], rows)
        return 0
    rows = [[float(t), float(a), float(p[0]), float(p[1]), "regular"]
            for t, a, p in zip(ts, alphas, locs)]
    for s in ses_mod.ses_singularities(curve):
        alpha = ses_mod.ses_point(curve, s.param).alpha_of_param
        rows.append([s.param, alpha, s.location[0], s.location[1], s.kind])
    for item in ses_mod.ses_inflexions(curve):
        sp = ses_mod.ses_point(curve, item["param"])
        rows.append([item["param"], sp.alpha_of_param,
                     sp.location[0], sp.location[1], item["kind"]])
    rows.sort(key=lambda r: (r[0], r[4]))
    write_csv(args.out, ["param", "alpha", "x", "y", "kind"], rows)
    return 0


def _cmd_front(args) -> int:
    curve = _load_curve(args.curve)
    if not isinstance(curve, SupportCurve):
        raise SpecError("the front is defined for support curves", field="kind")
    try:
        n_alpha, n_theta = (int(v) for v in args.grid.split(","))
    except ValueError:
        raise SpecError("--grid expects NA,NT", field="grid")
    if n_alpha < 8 or n_theta < 8:
        raise SpecError("grid sizes must be at least 8", field="grid")
    sigma = front_mod.extract_sigma(curve, n_samples=max(n_theta, 256))
    mesh = front_mod.mesh_front(curve, (n_alpha, n_theta), sigma=sigma)
    front_mod.write_obj(mesh, args.out)
    if args.sigma:
        write_csv(
            args.sigma,
            ["theta", "alpha", "x", "y", "kind"],
            front_mod.sigma_csv_rows(sigma, curve),
        )
    return 0


def _cmd_gauss_bonnet(args) -> int:
    curve = _load_curve(args.curve)
    if not isinstance(curve, SupportCurve):
        raise SpecError("gauss-bonnet runs on support curves", field="kind")
    report = gauss_bonnet_check(curve, tol=args.tol, curve_id=_curve_id(args.curve))
    write_json_report(args.report, report.to_json_dict())
    if report.relative_residual > args.tol_residual:
        print(
            f"relative residual {report.relative_residual:.3e} exceeds "
            f"--tol-residual {args.tol_residual:.3e}",
            file=sys.stderr,
        )
        return 3
    return 0


def _cmd_areas(args) -> int:
    curve = _load_curve(args.curve)
    if not isinstance(curve, SupportCurve):
        raise SpecError("area identities run on support curves", field="kind")
    alpha = parse_angle(args.alpha)
    identity = area_identity(curve, alpha)
    report = {
        "curve": _curve_id(args.curve),
        "alpha": alpha,
        "area_base": oriented_area(curve),
        "area_identity": identity,
    }
    if curve.rotation_number == 1 and 0.0 < alpha < np.pi:
        report["cor24"] = check_cor24(curve, alpha)
    write_json_report(args.report, report)
    return 0


def _cmd_check(args) -> int:
    curve = _load_curve(args.curve)
    result = check_genericity(curve)
    report = {
        "curve": _curve_id(args.curve),
        "violations": result.violations,
        "is_generic": result.is_generic,
        "is_generic_for": result.is_generic_for,
    }
    write_json_report(args.report, report)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvelab",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--curve", required=True, help="curve spec JSON file")

    p = sub.add_parser("show", help="render curve/ses/evolutoid-family SVG")
    add_common(p)
    p.add_argument("--what", choices=["base", "ses", "family"], default="base")
    p.add_argument("--alphas", default="", help="comma-separated angles (radians or pi fractions)")
    p.add_argument("--out", required=True)
    p.add_argument("--asymptotes", action="store_true")
    p.add_argument("--samples", type=int, default=1024)

    p = sub.add_parser("evolutoid", help="sample an evolutoid to CSV")
    add_common(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--singular", action="store_true", help="emit singular points instead")
    p.add_argument("--out", required=True)
    p.add_argument("--samples", type=int, default=1024)

    p = sub.add_parser("ses", help="sample the singular evolutoids set to CSV")
    add_common(p)
    p.add_argument("--classify", action="store_true")
    p.add_argument("--out", required=True)
    p.add_argument("--samples", type=int, default=1024)

    p = sub.add_parser("front", help="export the extended front as OBJ")
    add_common(p)
    p.add_argument("--grid", default="64,256", help="NA,NT grid sizes")
    p.add_argument("--out", required=True)
    p.add_argument("--sigma", default="", help="also write singular-set CSV here")

    p = sub.add_parser("gauss-bonnet", help="certify the Gauss-Bonnet identity")
    add_common(p)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--tol-residual", type=float, default=1e-5)
    p.add_argument("--report", required=True)

    p = sub.add_parser("areas", help="evolutoid area identity report")
    add_common(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--report", required=True)

    p = sub.add_parser("check", help="genericity report")
    add_common(p)
    p.add_argument("--report", required=True)

    return parser


_HANDLERS = {
    "show": _cmd_show,
    "evolutoid": _cmd_evolutoid,
    "ses": _cmd_ses,
    "front": _cmd_front,
    "gauss-bonnet": _cmd_gauss_bonnet,
    "areas": _cmd_areas,
    "check": _cmd_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except SpecError as exc:
        print(f"spec error: {exc}", file=sys.stderr)
        return 1
    except _DEGENERACY_ERRORS as exc:
        diag = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(diag, sort_keys=True), file=sys.stderr)
        return 2
    except CurveLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
