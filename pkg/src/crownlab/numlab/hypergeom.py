"""Gauss hypergeometric function near its unit singularity, and exponent fits.

The series is used away from z = 1; near z = 1 the standard connection
formula applies, with the logarithmic variants when c - a - b is an integer
(these are exactly the odd root-multiplicity cases).  Radial restrictions of
rank-one spherical functions are hypergeometric with

    a = lam + p/4 + q/2,  b = -lam + p/4 + q/2,  c = (1 + p + q)/2,
    z(eps) = (1 + cos(pi eps)) / 2 = 1 - (pi eps / 2)^2 + ...

so the exponent of the singular expansion in eps is 2(c - a - b) = 1 - q.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from ..errors import ConnectionFormulaFailure, SeriesDivergence
from .tolerances import TOL

_MAX_TERMS = 10_000


def _gamma(x) -> complex:
    return complex(mpmath.gamma(complex(x)))


def _digamma(x) -> complex:
    return complex(mpmath.digamma(complex(x)))


def _is_nonpositive_int(x, tol=1e-12):
    xr = complex(x)
    return abs(xr.imag) < tol and xr.real <= 0.5 and abs(xr.real - round(xr.real)) < tol


def _series(a, b, c, z) -> complex:
    term = 1.0 + 0j
    total = 1.0 + 0j
    for k in range(_MAX_TERMS):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
        if abs(term) < TOL.series_term * max(1.0, abs(total)):
            return total
    raise SeriesDivergence(f"series did not converge at z = {z}")


def _terminating(a, b, c, z) -> complex:
    n = int(round(-complex(a).real)) if _is_nonpositive_int(a) else int(round(-complex(b).real))
    term = 1.0 + 0j
    total = 1.0 + 0j
    for k in range(n):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
    return total


def _connection_generic(a, b, c, z) -> complex:
    w = 1 - z
    s = c - a - b
    f1 = (
        _gamma(c)
        * _gamma(s)
        / (_gamma(c - a) * _gamma(c - b))
        * _series(a, b, 1 - s, w)
    )
    f2 = (
        _gamma(c)
        * _gamma(-s)
        / (_gamma(a) * _gamma(b))
        * cmath.exp(s * cmath.log(w))
        * _series(c - a, c - b, 1 + s, w)
    )
    return f1 + f2


def _connection_log(a, b, c, z, m: int) -> complex:
    """Connection at z = 1 for c = a + b - m with integer m >= 0."""
    w = 1 - z
    logw = cmath.log(w)
    if m == 0:
        pref = _gamma(c) / (_gamma(a) * _gamma(b))
        total = 0j
        term = 1.0 + 0j
        for k in range(_MAX_TERMS):
            psi = 2 * _digamma(k + 1) - _digamma(a + k) - _digamma(b + k) - logw
            contrib = term * psi
            total += contrib
            term *= (a + k) * (b + k) / ((k + 1) ** 2) * w
            if k > 3 and abs(contrib) < TOL.series_term * max(1.0, abs(total)):
                break
        else:
            raise ConnectionFormulaFailure("log-case series did not converge")
        return pref * total
    head = 0j
    term = 1.0 + 0j
    for k in range(m):
        head += term
        if k + 1 < m:
            term *= (a - m + k) * (b - m + k) / ((k + 1) * (1 - m + k)) * w
    head *= _gamma(m) * _gamma(c) / (_gamma(a) * _gamma(b)) * cmath.exp(-m * logw)
    tail = 0j
    term = 1.0 / math.factorial(m) + 0j
    for k in range(_MAX_TERMS):
        psi = logw - _digamma(k + 1) - _digamma(k + m + 1) + _digamma(a + k) + _digamma(b + k)
        contrib = term * psi
        tail += contrib
        term *= (a + k) * (b + k) / ((k + 1) * (k + m + 1)) * w
        if k > 3 and abs(contrib) < TOL.series_term * max(1.0, abs(tail)):
            break
    else:
        raise ConnectionFormulaFailure("log-case series did not converge")
    tail *= (-1) ** m * _gamma(c) / (_gamma(a - m) * _gamma(b - m))
    return head - tail


def gauss_2f1(a, b, c, z) -> complex:
    """F(a, b; c; z) on the cut plane, robust near z = 1.

    Handles terminating cases for any z, the direct series for moderate |z|,
    a Pfaff transform for far-left real z, and the z to 1-z connection
    formulas (logarithmic variant included) near the unit point.
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    if _is_nonpositive_int(c) and not (_is_nonpositive_int(a) or _is_nonpositive_int(b)):
        raise ConnectionFormulaFailure("c is a non-positive integer")
    if _is_nonpositive_int(a) or _is_nonpositive_int(b):
        return _terminating(a, b, c, z)
    if abs(z) <= 0.65:
        return _series(a, b, c, z)
    if z.real < 0:
        # Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1))
        zz = z / (z - 1)
        return cmath.exp(-a * cmath.log(1 - z)) * _series(a, c - b, c, zz)
    if abs(1 - z) < 0.7:
        s = c - a - b
        if abs(s.imag) < 1e-12 and abs(s.real - round(s.real)) < 1e-12:
            m = int(round(s.real))
            if m <= 0:
                return _connection_log(a, b, c, z, -m)
            # positive integer exponent difference: perturb is not allowed;
            # swap roles via the reflected identity F = (1-z)^s F(c-a, c-b)
            return cmath.exp(s * cmath.log(1 - z)) * gauss_2f1(c - a, c - b, c, z)
        return _connection_generic(a, b, c, z)
    raise ConnectionFormulaFailure(f"argument region not covered: z = {z}")


# ---------------------------------------------------------------------------
# Exponent fits for the rank-one boundary expansion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FitResult:
    exponent_estimate: float
    log_degree_estimate: int
    residual: float
    grid: tuple[float, ...]
    kind: str  # 'power' | 'log' | 'bounded'


def rank_one_parameters(p: int, q: int, lam: float):
    return lam + p / 4 + q / 2, -lam + p / 4 + q / 2, (1 + p + q) / 2


def spherical_boundary_value(p: int, q: int, lam: float, eps: float) -> complex:
    a, b, c = rank_one_parameters(p, q, lam)
    z = (1 + math.cos(math.pi * eps)) / 2
    return gauss_2f1(a, b, c, z)


def exponent_fit(p: int, q: int, lam: float, grid=None) -> FitResult:
    """Fit the boundary exponent of the rank-one spherical function.

    Power behaviour is fitted on log-log scale; a vanishing slope triggers
    the secondary fit |phi| against |log eps| to separate the logarithmic
    case from terminating (bounded) solutions.
    """
    if grid is None:
        grid = np.geomspace(1e-2, 1e-6, 17)
    grid = np.asarray(grid, dtype=float)
    vals = np.array([abs(spherical_boundary_value(p, q, lam, e)) for e in grid])
    if np.any(vals == 0):
        raise ConnectionFormulaFailure("hit an exact zero on the fit grid")
    x = np.log(grid)
    yy = np.log(vals)
    slope, intercept = np.polyfit(x, yy, 1)
    resid = float(np.sqrt(np.mean((yy - (slope * x + intercept)) ** 2)))
    if slope < -0.2:
        return FitResult(float(slope), 0, resid, tuple(grid), "power")
    # secondary: is |phi| affine in log(1/eps)?
    xl = np.log(1.0 / grid)
    b1, b0 = np.polyfit(xl, vals, 1)
    lin_res = float(np.sqrt(np.mean((vals - (b1 * xl + b0)) ** 2)))
    spread = float(vals.max() - vals.min())
    if spread > 0.1 * float(vals.max()) and b1 > 0:
        return FitResult(float(slope), 1, lin_res, tuple(grid), "log")
    return FitResult(float(slope), 0, resid, tuple(grid), "bounded")
