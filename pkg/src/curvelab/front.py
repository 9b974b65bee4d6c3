"""The extended evolutoids front: all evolutoids stacked in time.

The front lives in R x R^2 with the rotation angle as first ("time")
coordinate:

    F(alpha, theta) = (alpha, f(theta) + rho(theta) sin(alpha) t(theta+alpha))

over M = [0, pi] x S^1 for a hedgehog base curve.  Its unit normal and signed
area density are

    nu     = (-rho sin(alpha), n(theta+alpha)) / sqrt(1 + rho^2 sin^2(alpha)),
    lambda = (rho cos(alpha) + rho' sin(alpha)) sqrt(1 + rho^2 sin^2(alpha)),

so the singular set Sigma is the zero set of rho cos(alpha) + rho' sin(alpha).
For each theta with rho != 0 that equation has exactly one root in (0, pi),
so Sigma is extracted as a graph alpha(theta); where rho vanishes, Sigma dives
into the boundary alpha in {0, pi} (null singular points).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from .curves import SupportCurve, check_genericity, hedgehog_frame
from .errors import BorderlineClassification, DegenerateSingularSetError
from .rootfind import find_roots
from .ses import branch_alpha, ses_points_support

#: relative discriminant magnitude below which classification is "borderline"
CLASSIFY_RTOL = 1e-6


@dataclass(frozen=True)
class FrontSample:
    alpha: float
    theta: float
    position: np.ndarray  # (alpha, x, y)
    normal: np.ndarray  # unit vector in R^3
    signed_density: float
    region: str  # "plus" | "minus" | "singular"


@dataclass(frozen=True)
class SingularFrontPoint:
    theta: float
    alpha: float
    kind: str  # "cuspidal_edge" | "swallowtail" | "boundary_null"
    peak_sign: str  # "positive" | "negative" | "none"
    peak_label: str
    diagnostics: dict = field(default_factory=dict)


@dataclass
class SigmaCurve:
    samples: list  # ordered dicts: theta, alpha, position, projected
    boundary_null_points: list  # dicts: theta, alpha in {0, pi}
    marks: list  # SingularFrontPoint classification marks


def front_position(curve: SupportCurve, alpha, theta):
    """Front point(s) (alpha, f_alpha(theta)); broadcasts over arrays."""
    alpha = np.asarray(alpha, dtype=float)
    theta = np.asarray(theta, dtype=float)
    alpha, theta = np.broadcast_arrays(alpha, theta)
    t_rot, _ = hedgehog_frame(theta + alpha)
    spatial = curve.points(theta) + (curve.rho(theta) * np.sin(alpha))[..., None] * t_rot
    return np.concatenate([alpha[..., None], spatial], axis=-1)


def front_normal(curve: SupportCurve, alpha, theta):
    alpha = np.asarray(alpha, dtype=float)
    theta = np.asarray(theta, dtype=float)
    alpha, theta = np.broadcast_arrays(alpha, theta)
    _, n_rot = hedgehog_frame(theta + alpha)
    rho = curve.rho(theta)
    w = np.sqrt(1.0 + rho * rho * np.sin(alpha) ** 2)
    vec = np.concatenate([(-rho * np.sin(alpha))[..., None], n_rot], axis=-1)
    return vec / w[..., None]


def signed_area_density(curve: SupportCurve, alpha, theta):
    """lambda(alpha, theta); its zero set is the singular set of the front."""
    alpha = np.asarray(alpha, dtype=float)
    theta = np.asarray(theta, dtype=float)
    rho = curve.rho(theta)
    rho1 = curve.rho(theta, 1)
    return (rho * np.cos(alpha) + rho1 * np.sin(alpha)) * np.sqrt(
        1.0 + rho * rho * np.sin(alpha) ** 2
    )


def density_scale(curve: SupportCurve) -> float:
    r, r1 = curve.scale("rho"), curve.scale("rho1")
    return (r + r1) * math.sqrt(1.0 + r * r)


def front_sample(curve: SupportCurve, alpha: float, theta: float) -> FrontSample:
    lam = float(signed_area_density(curve, alpha, theta))
    tol = 1e-9 * (1.0 + density_scale(curve))
    if abs(lam) <= tol:
        region = "singular"
    else:
        region = "plus" if lam > 0 else "minus"
    return FrontSample(
        alpha=float(alpha),
        theta=float(theta),
        position=front_position(curve, alpha, theta),
        normal=front_normal(curve, alpha, theta),
        signed_density=lam,
        region=region,
    )


def sigma_alpha(curve: SupportCurve, theta):
    """The unique interior zero alpha(theta) of the density, as a graph."""
    theta = np.asarray(theta, dtype=float)
    rho = curve.rho(theta)
    rho1 = curve.rho(theta, 1)
    with np.errstate(divide="ignore"):
        return np.pi / 2 + np.arctan(rho1 / rho)


def _require_front_generic(curve: SupportCurve):
    report = check_genericity(curve)
    if not report.is_generic_for["front_engine"]:
        kinds = {v["kind"] for v in report.violations}
        if "degenerate_singular_set" in kinds:
            raise DegenerateSingularSetError(
                "singular set degenerates to a non-graph (circle-like input)"
            )
    return report


def rho_zeros(curve: SupportCurve) -> list[float]:
    return find_roots(
        curve.rho_poly(0),
        0.0,
        curve.closure_period,
        dfn=curve.rho_poly(1),
        zero_scale=curve.scale("rho"),
    )


def extract_sigma(curve: SupportCurve, n_samples: int = 1024) -> SigmaCurve:
    """Sample the singular set as a graph over theta, with boundary nulls.

    Grid samples too close to a zero of rho are dropped (the graph exits
    through the boundary there); each rho zero contributes null points at
    both boundary components.
    """
    _require_front_generic(curve)
    period = curve.closure_period
    thetas = np.linspace(0.0, period, n_samples, endpoint=False)
    rho_vals = curve.rho(thetas)
    tol = curve.zero_tol("rho")
    keep = np.abs(rho_vals) > tol
    alphas = sigma_alpha(curve, thetas[keep])
    positions = front_position(curve, alphas, thetas[keep])
    samples = [
        {
            "theta": float(t),
            "alpha": float(a),
            "position": pos,
            "projected": pos[1:],
        }
        for t, a, pos in zip(thetas[keep], alphas, positions)
    ]
    nulls = []
    for z in rho_zeros(curve):
        for boundary_alpha in (0.0, math.pi):
            nulls.append({"theta": float(z), "alpha": boundary_alpha})
    sigma = SigmaCurve(samples=samples, boundary_null_points=nulls, marks=[])
    sigma.marks = classify_sigma(sigma, curve)
    return sigma


def _sing_disc_funcs(curve: SupportCurve):
    r, r1, r2, r3 = (curve.rho_poly(k) for k in range(4))
    disc = lambda th: r(th) * r2(th) - r1(th) ** 2
    ddisc = lambda th: r(th) * r3(th) - r1(th) * r2(th)
    return disc, ddisc


def swallowtail_params(curve: SupportCurve) -> list[float]:
    """Zeros of rho*rho'' - rho'^2 with a sign change: the critical
    parameters of the singular-set graph."""
    disc, ddisc = _sing_disc_funcs(curve)
    return find_roots(disc, 0.0, curve.closure_period, dfn=ddisc,
                      zero_scale=curve.scale("sing"))


def classify_sigma_point(curve: SupportCurve, theta: float) -> SingularFrontPoint:
    """Classify one interior singular-set point by the discriminant
    rho*rho'' - rho'^2 (nonzero: cuspidal edge; zero with sign change:
    swallowtail, which is a critical point of the graph alpha(theta))."""
    r = float(curve.rho(theta))
    r1 = float(curve.rho(theta, 1))
    r2 = float(curve.rho(theta, 2))
    disc = r * r2 - r1 * r1
    scale = curve.scale("sing")
    rosette = bool(np.all(curve.rho(np.linspace(0, curve.closure_period, 2048)) > 0))
    if abs(disc) > CLASSIFY_RTOL * scale:
        kind, peak_sign, label = "cuspidal_edge", "none", ""
    else:
        disc_fn = _sing_disc_funcs(curve)[0]
        h = curve.closure_period * 1e-5
        before = float(disc_fn(theta - h))
        after = float(disc_fn(theta + h))
        if before * after >= 0:
            raise BorderlineClassification(
                f"discriminant zero without detectable sign change at theta={theta}"
            )
        kind = "swallowtail"
        # alpha'(theta) has the sign of the discriminant: + -> - is a local max
        if rosette:
            if before > 0:
                peak_sign, label = "negative", "negative peak"
            else:
                peak_sign, label = "positive", "positive peak"
        else:
            peak_sign, label = "none", "extremum (peak candidate)"
    return SingularFrontPoint(
        theta=float(theta),
        alpha=float(sigma_alpha(curve, theta)),
        kind=kind,
        peak_sign=peak_sign,
        peak_label=label,
        diagnostics={"rho": r, "rho1": r1, "rho2": r2, "discriminant": disc},
    )


def classify_sigma(sigma: SigmaCurve, curve: SupportCurve) -> list[SingularFrontPoint]:
    """Classification marks: swallowtails at discriminant sign changes plus
    boundary null points.  Every other interior point is a cuspidal edge
    (query classify_sigma_point for individual samples)."""
    marks = [classify_sigma_point(curve, t) for t in swallowtail_params(curve)]
    for null in sigma.boundary_null_points:
        marks.append(
            SingularFrontPoint(
                theta=null["theta"],
                alpha=null["alpha"],
                kind="boundary_null",
                peak_sign="none",
                peak_label="",
                diagnostics={
                    "rho": float(curve.rho(null["theta"])),
                    "rho1": float(curve.rho(null["theta"], 1)),
                },
            )
        )
    marks.sort(key=lambda m: (m.theta, m.alpha))
    return marks


def projection_check(curve: SupportCurve, n_samples: int = 4096) -> dict:
    """Symmetric Hausdorff distance between the projected singular set and
    the singular evolutoids set, on matched theta grids."""
    _require_front_generic(curve)
    thetas = np.linspace(0.0, curve.closure_period, n_samples, endpoint=False)
    rho_vals = curve.rho(thetas)
    tol = curve.zero_tol("rho")
    projected = np.empty((n_samples, 2))
    interior = np.abs(rho_vals) > tol
    alphas = sigma_alpha(curve, thetas[interior])
    projected[interior] = front_position(curve, alphas, thetas[interior])[:, 1:]
    # where rho = 0 the singular set meets the boundary and projects onto the
    # base-curve point itself
    projected[~interior] = curve.points(thetas[~interior])
    ses_pts = ses_points_support(curve, thetas)
    d_ab = cKDTree(ses_pts).query(projected)[0].max()
    d_ba = cKDTree(projected).query(ses_pts)[0].max()
    return {"hausdorff_distance": float(max(d_ab, d_ba))}


# ---------------------------------------------------------------------------
# meshing


@dataclass
class TriangleMesh:
    vertices: np.ndarray  # (n, 3) in (alpha, x, y) order
    normals: np.ndarray  # (n, 3) unit
    region_signs: np.ndarray  # (n,) in {-1, 0, +1}, the sign of the density
    faces: np.ndarray  # (m, 3) 0-based
    sigma_polyline: np.ndarray | None  # (k, 3) or None


def mesh_front(curve: SupportCurve, grid=(64, 256), sigma: SigmaCurve | None = None) -> TriangleMesh:
    """Sample the front on an (alpha, theta) grid as an indexed triangle mesh.

    The grid is closed (wraps) in theta and open in alpha; quads are split
    into two triangles.  Vertices carry the unit normal and the sign of the
    signed area density.
    """
    n_alpha, n_theta = grid
    if n_alpha < 8 or n_theta < 8:
        raise ValueError("grid sizes must be at least 8")
    alphas = np.linspace(0.0, math.pi, n_alpha)
    thetas = np.linspace(0.0, curve.closure_period, n_theta, endpoint=False)
    A, T = np.meshgrid(alphas, thetas, indexing="ij")
    verts = front_position(curve, A, T).reshape(-1, 3)
    normals = front_normal(curve, A, T).reshape(-1, 3)
    lam = signed_area_density(curve, A, T).reshape(-1)
    tol = 1e-9 * (1.0 + density_scale(curve))
    signs = np.where(np.abs(lam) <= tol, 0, np.sign(lam)).astype(np.int8)

    faces = []
    for i in range(n_alpha - 1):
        for j in range(n_theta):
            j2 = (j + 1) % n_theta
            v00 = i * n_theta + j
            v01 = i * n_theta + j2
            v10 = (i + 1) * n_theta + j
            v11 = (i + 1) * n_theta + j2
            faces.append((v00, v01, v11))
            faces.append((v00, v11, v10))
    polyline = None
    if sigma is not None and sigma.samples:
        polyline = np.array([s["position"] for s in sigma.samples])
    return TriangleMesh(
        vertices=verts,
        normals=normals,
        region_signs=signs,
        faces=np.array(faces, dtype=np.int64),
        sigma_polyline=polyline,
    )


def write_obj(mesh: TriangleMesh, path) -> None:
    """Deterministic OBJ export; positions in (alpha, x, y) order."""
    lines = ["o front"]
    for v in mesh.vertices:
        lines.append("v %.9g %.9g %.9g" % tuple(v))
    for n in mesh.normals:
        lines.append("vn %.9g %.9g %.9g" % tuple(n))
    for f in mesh.faces:
        lines.append("f %d//%d %d//%d %d//%d" % (f[0] + 1, f[0] + 1, f[1] + 1, f[1] + 1, f[2] + 1, f[2] + 1))
    if mesh.sigma_polyline is not None and len(mesh.sigma_polyline):
        lines.append("o sigma")
        base = len(mesh.vertices)
        for v in mesh.sigma_polyline:
            lines.append("v %.9g %.9g %.9g" % tuple(v))
        idx = " ".join(str(base + i + 1) for i in range(len(mesh.sigma_polyline)))
        lines.append("l " + idx)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def sigma_csv_rows(sigma: SigmaCurve, curve: SupportCurve) -> list[tuple]:
    """Rows (theta, alpha, x, y, kind) for the singular-set CSV export."""
    scale = curve.scale("sing")
    rows = []
    for s in sigma.samples:
        r = float(curve.rho(s["theta"]))
        r1 = float(curve.rho(s["theta"], 1))
        r2 = float(curve.rho(s["theta"], 2))
        disc = r * r2 - r1 * r1
        kind = "cuspidal_edge" if abs(disc) > CLASSIFY_RTOL * scale else "borderline"
        rows.append((s["theta"], s["alpha"], s["projected"][0], s["projected"][1], kind))
    for m in sigma.marks:
        if m.kind == "cuspidal_edge":
            continue
        pos = front_position(curve, m.alpha, m.theta)
        rows.append((m.theta, m.alpha, pos[1], pos[2], m.kind))
    rows.sort(key=lambda row: (row[0], row[1]))
    return rows
