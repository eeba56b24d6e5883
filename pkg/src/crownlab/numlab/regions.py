"""Closed-form membership tests for unipotently parameterized crown slices.

Three matrix models are covered: the Lorentz groups (no doubled root), the
rank-one group with doubled root SU(2,1), and the symplectic groups where the
slice through the abelian nilradical is cut out by an operator-norm bound.
Each verdict is cross-examined by a scan for zeros of the horospherical
discriminant, which is what actually obstructs membership.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import UnsupportedModel
from .so12 import so12_identity_check
from .tolerances import TOL


@dataclass(frozen=True)
class RegionVerdict:
    inside: bool
    margin: float  # signed distance of the defining inequality from 1
    witness: dict


# -- Lorentz model: q = 0, c = 1/(4p) ----------------------------------------


def lorentz_check(y_vec, scan: int = 25) -> RegionVerdict:
    y = np.asarray(y_vec, dtype=float)
    p = y.size
    c = 1.0 / (4 * p)
    value = c * float(y @ y)
    inside = value < 1.0

    # discriminant scan: F(y') = (1 + c <y'+iy, y'+iy>)^2 has a zero iff the
    # real quadric 1 + c(|y'|^2 - |y|^2) = 0 meets the hyperplane <y, y'> = 0
    witness = {"scan_min": math.inf, "zero_found": False}
    norm2 = float(y @ y)
    if norm2 >= 1.0 / c:
        # closed-form zero: any y' orthogonal to y with |y'|^2 = |y|^2 - 1/c
        if p == 1:
            perp = np.zeros(1)
        else:
            e = np.zeros(p)
            e[int(np.argmin(np.abs(y)))] = 1.0
            perp = e - (e @ y) / norm2 * y
            perp /= np.linalg.norm(perp)
        yprime = math.sqrt(norm2 - 1.0 / c) * perp
        val = (1 + c * (yprime @ yprime - norm2 + 2j * (y @ yprime))) ** 2
        witness["zero_found"] = bool(abs(val) < TOL.witness)
        witness["scan_min"] = float(abs(val))
    else:
        rng = np.linspace(-2 * math.sqrt(norm2) - 1, 2 * math.sqrt(norm2) + 1, scan)
        best = math.inf
        for i in range(scan):
            yp = rng[i] * (y / (np.linalg.norm(y) + 1e-300))
            val = (1 + c * (yp @ yp - norm2 + 2j * (y @ yp))) ** 2
            best = min(best, abs(val))
        witness["scan_min"] = float(best)
    return RegionVerdict(inside, 1.0 - value, witness)


# -- SU(2,1) ------------------------------------------------------------------


def su21_predicate(x: float, y: float, z: float) -> bool:
    return 2 * (x * x + y * y) + abs(z) < 1.0


def _su21_f(xr: float, z: float, u: float, v: float, w: float) -> complex:
    """Chart discriminant along the nilpotent slice, (x, y) rotated to (xr, 0)."""
    return (1 + (u + 1j * xr) ** 2 + v * v) ** 2 + (w + 1j * (z - 2 * v * xr)) ** 2


def su21_discriminant_scan(x: float, y: float, z: float, grid: int = 21):
    """Scan the chart discriminant for zeros; returns (inside, evidence).

    Splitting the zero condition into real and imaginary parts gives a real
    quadratic in the nilpotent coordinate v (the slice u = 0 is optimal, the
    centre coordinate w absorbs the imaginary part), solvable precisely when
    2(x^2+y^2) + |z| >= 1.  When solvable the explicit root is evaluated and
    must vanish to tolerance; otherwise a grid scan confirms a uniform gap.
    """
    xr = math.hypot(x, y)
    disc = 2 * xr * xr - 1 + abs(z)
    if disc >= 0:
        eps = -1 if z >= 0 else 1
        v = eps * xr + math.sqrt(disc)
        residual = abs(_su21_f(xr, z, 0.0, v, 0.0))
        return False, {"zero_residual": residual, "scan_min": residual}
    best = math.inf
    for u in np.linspace(-1.5, 1.5, grid):
        for v in np.linspace(-1.5, 1.5, grid):
            for w in np.linspace(-1.5, 1.5, grid):
                best = min(best, abs(_su21_f(xr, z, u, v, w)))
    return True, {"zero_residual": None, "scan_min": best}


def su21_check(x: float, y: float, z: float) -> RegionVerdict:
    inside = su21_predicate(x, y, z)
    scan_inside, evidence = su21_discriminant_scan(x, y, z)
    evidence = dict(evidence)
    evidence["agrees"] = scan_inside == inside
    return RegionVerdict(inside, 1.0 - (2 * (x * x + y * y) + abs(z)), evidence)


# -- Sp(n) ---------------------------------------------------------------------


def sp_check(z_mat) -> RegionVerdict:
    z = np.asarray(z_mat, dtype=float)
    n = z.shape[0]
    if z.shape != (n, n) or n > 8 or not np.allclose(z, z.T, atol=1e-12):
        raise UnsupportedModel("need a real symmetric matrix of size <= 8")
    eigs = np.linalg.eigvalsh(z)
    opnorm = float(np.max(np.abs(eigs)))
    inside = opnorm < 1.0
    pos = bool(np.all(1 + eigs > 0) and np.all(1 - eigs > 0))
    return RegionVerdict(inside, 1.0 - opnorm, {"pd_agrees": pos == inside})


def crown_region_check(model: str, point) -> RegionVerdict:
    if model.lower() in ("so", "lorentz", "so1p"):
        return lorentz_check(point)
    if model.lower() == "su21":
        return su21_check(*point)
    if model.lower() in ("sp", "spn"):
        return sp_check(point)
    raise UnsupportedModel(model)


# -- symplectic matrices and the blockwise orbit identity ----------------------


def symplectic_form(n: int) -> np.ndarray:
    j = np.zeros((2 * n, 2 * n))
    j[:n, n:] = np.eye(n)
    j[n:, :n] = -np.eye(n)
    return j


def sp_n_diag(z_vec) -> np.ndarray:
    """Unipotent n_z with diagonal symmetric block z."""
    z = np.asarray(z_vec, dtype=complex)
    n = z.size
    g = np.eye(2 * n, dtype=complex)
    g[:n, n:] = np.diag(z)
    return g


def sp_a_diag(w_vec) -> np.ndarray:
    w = np.asarray(w_vec, dtype=complex)
    return np.diag(np.concatenate([w, 1 / w]))


def sp_form_deviation(g: np.ndarray) -> float:
    n = g.shape[0] // 2
    j = symplectic_form(n)
    return float(np.max(np.abs(g.T @ j @ g - j)))


def sp_orbit_blockwise(t_vec) -> dict:
    """Blockwise reduction of the symplectic orbit identity to rank one.

    For each diagonal angle the two-by-two reduction is exactly the
    hyperboloid identity, so the per-block deviation certifies
    G n_{sin 2t} x0 = G a_{e^{it}} x0; symplectic form preservation of the
    assembled matrices is checked alongside.
    """
    t = np.asarray(t_vec, dtype=float)
    if np.any(np.abs(t) >= math.pi / 4):
        raise UnsupportedModel("angles must satisfy |t| < pi/4")
    dev_blocks = max(so12_identity_check(float(ti)) for ti in t)
    g1 = sp_n_diag(np.sin(2 * t))
    g2 = sp_a_diag(np.exp(1j * t))
    return {
        "block_identity_deviation": dev_blocks,
        "form_deviation": max(sp_form_deviation(g1), sp_form_deviation(g2)),
    }
