"""Independent numerical oracles used by the front/curvature tests.

Everything here works from the embedding map of the front alone, by central
finite differences: first/second fundamental forms for the Gaussian
curvature, the 3x3-determinant formula for geodesic and singular curvature.
These never touch the closed-form density implementations they check.
"""

import numpy as np

from curvelab.front import front_normal, front_position, sigma_alpha, signed_area_density


def fd_gaussian_K(curve, alpha, theta, h=1e-4):
    """Gaussian curvature from finite-difference fundamental forms, with one
    Richardson extrapolation step."""

    def k_at(hh):
        F = lambda a, t: front_position(curve, a, t)
        f_a = (F(alpha + hh, theta) - F(alpha - hh, theta)) / (2 * hh)
        f_t = (F(alpha, theta + hh) - F(alpha, theta - hh)) / (2 * hh)
        f_aa = (F(alpha + hh, theta) - 2 * F(alpha, theta) + F(alpha - hh, theta)) / hh**2
        f_tt = (F(alpha, theta + hh) - 2 * F(alpha, theta) + F(alpha, theta - hh)) / hh**2
        f_at = (
            F(alpha + hh, theta + hh)
            - F(alpha + hh, theta - hh)
            - F(alpha - hh, theta + hh)
            + F(alpha - hh, theta - hh)
        ) / (4 * hh**2)
        nu = front_normal(curve, alpha, theta)
        E = f_a @ f_a
        Ff = f_a @ f_t
        G = f_t @ f_t
        L = f_aa @ nu
        M = f_at @ nu
        N = f_tt @ nu
        return (L * N - M * M) / (E * G - Ff * Ff)

    return (4 * k_at(h / 2) - k_at(h)) / 3


def fd_kg_dtau_density(curve, alpha, theta, h=1e-5):
    """Geodesic-curvature arc density of the constant-time fiber, per dtheta:
    det(gamma', gamma'', nu) / |gamma'|^2."""
    g = lambda t: front_position(curve, alpha, t)
    d1 = (g(theta + h) - g(theta - h)) / (2 * h)
    d2 = (g(theta + h) - 2 * g(theta) + g(theta - h)) / h**2
    nu = front_normal(curve, alpha, theta)
    det = np.linalg.det(np.stack([d1, d2, nu]))
    return det / (d1 @ d1)


def fd_ks_dtau_density(curve, theta, h=1e-6):
    """Singular-curvature arc density along the singular set, per dtheta:
    sgn(dlambda(eta)) * det(sigma', sigma'', nu) / |sigma'|^2, with the null
    field eta = sgn(alpha') d/dtheta fixed by the orientation convention."""
    sig = lambda t: front_position(curve, float(sigma_alpha(curve, t)), t)
    s0 = sig(theta)
    sp = (sig(theta + h) - sig(theta - h)) / (2 * h)
    s2 = (sig(theta + h) - 2 * s0 + sig(theta - h)) / h**2
    nu = front_normal(curve, float(sigma_alpha(curve, theta)), theta)
    det = np.linalg.det(np.stack([sp, s2, nu]))
    a_prime = (sigma_alpha(curve, theta + h) - sigma_alpha(curve, theta - h)) / (2 * h)
    eta_sign = 1.0 if a_prime >= 0 else -1.0
    alpha0 = float(sigma_alpha(curve, theta))
    dlam = eta_sign * (
        signed_area_density(curve, alpha0, theta + h)
        - signed_area_density(curve, alpha0, theta - h)
    ) / (2 * h)
    return np.sign(dlam) * det / (sp @ sp)


def kda_theta_profile(curve, theta):
    """Closed-form inner time integral of the curvature area density at fixed
    theta (antiderivative evaluated across the singular-set split):
    2 (rho^2 + rho^4 - rho'^2) / ((1 + rho^2) sqrt(rho^2 + rho^4 + rho'^2))."""
    r = np.asarray(curve.rho(theta))
    r1 = np.asarray(curve.rho(theta, 1))
    rr = r * r + r**4 + r1 * r1
    return 2.0 * (r * r + r**4 - r1 * r1) / ((1.0 + r * r) * np.sqrt(rr))
