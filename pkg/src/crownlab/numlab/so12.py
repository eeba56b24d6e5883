"""The rank-one hyperboloid model: orbit identities, boundary map, spherical
functions.

The quadric is Q(z) = z0^2 - z1^2 - z2^2 on C^3 with base point (1,0,0); the
boost axis plays the role of the flat, horocycles are parameterized by the
forward null cone, and the crown corresponds to boost angles |t| < pi/2.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ..errors import ChartBoundary
from .quadrature import QuadratureSpec, adaptive_quad
from .tolerances import TOL

E1 = np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=float)
E2 = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=float)
E3 = np.array([[0, 0, 0], [0, 0, 1], [0, -1, 0]], dtype=float)
X0 = np.array([1.0, 0.0, 0.0])
Z1 = np.array([0.0, 0.0, 1j])  # exp(i pi/2 e1) . x0


def quadric(z) -> complex:
    z = np.asarray(z, dtype=complex)
    return z[0] ** 2 - z[1] ** 2 - z[2] ** 2


def minkowski(z, w) -> complex:
    z, w = np.asarray(z, dtype=complex), np.asarray(w, dtype=complex)
    return z[0] * w[0] - z[1] * w[1] - z[2] * w[2]


def n_horo(z: complex) -> np.ndarray:
    """Horocyclic one-parameter subgroup element n_z."""
    return np.array(
        [
            [1 + z * z / 2, z, -z * z / 2],
            [z, 1, -z],
            [z * z / 2, z, 1 - z * z / 2],
        ],
        dtype=complex,
    )


def boost(r: float) -> np.ndarray:
    c, s = math.cosh(r), math.sinh(r)
    return np.array([[c, 0, s], [0, 1, 0], [s, 0, c]], dtype=complex)


def rotation(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[1, 0, 0], [0, c, s], [0, -s, c]], dtype=complex)


def a_complex(t: complex) -> np.ndarray:
    """exp(i t e1) with complex angle allowed."""
    c, s = cmath.cos(t), cmath.sin(t)
    return np.array([[c, 0, 1j * s], [0, 1, 0], [1j * s, 0, c]], dtype=complex)


def so12_identity_check(t: float) -> float:
    """Deviation in the unipotent-versus-elliptic orbit identity at angle t.

    With y = sin t the element k(pi/2) b(r) n_{iy} must send the base point to
    (cos t, 0, -i sin t) once tanh r = (y^2/2) / (1 - y^2/2); |t| < pi/4 keeps
    the right-hand side inside the solvable range.
    """
    if not abs(t) < math.pi / 4:
        raise ChartBoundary("the identity needs |t| < pi/4")
    y = math.sin(t)
    ratio = (y * y / 2) / (1 - y * y / 2)
    r = math.atanh(ratio)
    lhs = rotation(math.pi / 2) @ boost(r) @ n_horo(1j * y) @ X0
    rhs = np.array([math.cos(t), 0.0, -1j * math.sin(t)])
    return float(np.max(np.abs(lhs - rhs)))


def exp_nilpotent(m: np.ndarray) -> np.ndarray:
    """Matrix exponential for 3x3 elements with m^3 = 0 (exact quadratic)."""
    m2 = m @ m
    if np.max(np.abs(m2 @ m)) > 1e-12 * max(1.0, np.max(np.abs(m))) ** 3:
        raise ValueError("element is not nilpotent of order <= 3")
    return np.eye(3, dtype=complex) + m + m2 / 2


def boundary_map_value(s: float, sign: int) -> np.ndarray:
    """b([1, s(e1 +/- e3)]) = exp(-i s (e1 +/- e3)) . z1."""
    y = E1 + sign * E3
    return exp_nilpotent(-1j * s * y.astype(complex)) @ Z1


def horocycle_witness(z, samples: int = 720):
    """Find xi on the forward null cone with <z, xi> = 1, or None.

    The cone is {r (1, cos psi, sin psi) : r > 0}; the pairing condition
    becomes w(psi) := z0 - z1 cos psi - z2 sin psi in (0, inf) after clearing
    r, so the imaginary part of w must vanish with positive real part.
    """
    z = np.asarray(z, dtype=complex)

    def w(psi):
        return z[0] - z[1] * np.cos(psi) - z[2] * np.sin(psi)

    grid = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    vals = w(grid)
    best = None
    for i in range(samples):
        a, b = grid[i], grid[(i + 1) % samples] + (2 * math.pi if i + 1 == samples else 0)
        fa, fb = vals[i].imag, vals[(i + 1) % samples].imag
        if fa == 0.0 and vals[i].real > 0:
            best = a
            break
        if fa * fb < 0:
            lo, hi = a, b
            for _ in range(200):
                mid = (lo + hi) / 2
                if w(np.array([lo]))[0].imag * w(np.array([mid]))[0].imag <= 0:
                    hi = mid
                else:
                    lo = mid
            psi = (lo + hi) / 2
            if w(np.array([psi]))[0].real > 0:
                best = psi
                break
    if best is None:
        return None
    psi = best
    r = 1.0 / w(np.array([psi]))[0].real
    xi = r * np.array([1.0, math.cos(psi), math.sin(psi)])
    return xi


def case_family_point(case: int, param: float) -> np.ndarray:
    """Representatives of the three orbit families filling the unipotent domain.

    case 1: real part timelike with positive zeroth coordinate,
    case 2: real part spacelike,
    case 3: real part nonzero null.
    """
    if case == 1:
        # timelike real part: x0^2 + y1^2 = 1 with x0 > 0
        psi = 0.6 * param
        return np.array([math.cos(psi), 1j * math.sin(psi), 0.0])
    if case == 2:
        x2 = abs(param) + 0.25
        y1 = math.sqrt(1 + x2 * x2)
        return np.array([0.0, 1j * y1, x2])
    if case == 3:
        return np.array([1 + 1j * param, 1 + 1j * param, 1j])
    raise ValueError("case must be 1, 2 or 3")


def boundary_suite(s_grid=None, params=None) -> dict:
    """Deviations for the corner boundary map and horocycle witnesses."""
    s_grid = np.linspace(0.0, 10.0, 41) if s_grid is None else s_grid
    params = np.linspace(-2.0, 2.0, 9) if params is None else params
    dev_b = 0.0
    for s in s_grid:
        for sign in (+1, -1):
            val = boundary_map_value(float(s), sign)
            target = np.array([s, sign * s, 1j])
            dev_b = max(dev_b, float(np.max(np.abs(val - target))))
    dev_w = 0.0
    for case in (1, 2, 3):
        for p in params:
            z = case_family_point(case, float(p))
            assert abs(quadric(z) - 1) < 1e-12
            xi = horocycle_witness(z)
            if xi is None:
                raise ChartBoundary(f"no witness found in case {case}, param {p}")
            dev_w = max(dev_w, abs(minkowski(z, xi) - 1))
    # purely imaginary points admit no witness: the pairing stays imaginary
    fail_gap = math.inf
    for u in (0.0, 0.5, 1.5):
        z = 1j * np.array([math.sinh(u), math.cosh(u), 0.0])
        assert abs(quadric(z) - 1) < 1e-12
        psis = np.linspace(0, 2 * math.pi, 2000)
        for r in np.geomspace(0.05, 40, 60):
            xi = np.stack([r * np.ones_like(psis), r * np.cos(psis), r * np.sin(psis)])
            gaps = np.abs(z[0] * xi[0] - z[1] * xi[1] - z[2] * xi[2] - 1.0)
            fail_gap = min(fail_gap, float(np.min(gaps)))
    return {
        "boundary_map_deviation": dev_b,
        "witness_residual": dev_w,
        "imaginary_point_best_gap": fail_gap,
    }


# ---------------------------------------------------------------------------
# Spherical functions on the hyperboloid
# ---------------------------------------------------------------------------


def _a_exponent(w, sigma: complex) -> complex:
    """(a-part of w)^sigma where exp(-r) = w0 - w2, principal branch."""
    base = w[0] - w[2]
    if abs(base) < 1e-13:
        raise ChartBoundary("point left the horospherical chart")
    if base.real <= 0:
        raise ChartBoundary("principal branch guard: Re(w0 - w2) <= 0")
    return cmath.exp(-sigma * cmath.log(base))


def spherical_so12(lam: float, y: float, spec: QuadratureSpec | None = None) -> complex:
    """phi_lambda at exp(i (pi/2) y e1) . x0 by quadrature over the rotation group.

    Normalised so the value at the base point (y = 0) is 1; |y| < 1 keeps the
    whole integration orbit inside the chart.
    """
    if not abs(y) < 1:
        raise ChartBoundary("need |y| < 1")
    theta = math.pi * y / 2
    z = a_complex(theta) @ X0
    sigma = 0.5 + 1j * lam

    def integrand(phis):
        cos, sin = np.cos(phis), np.sin(phis)
        w0 = np.full_like(phis, z[0], dtype=complex)
        w1 = sin * z[2] + cos * z[1]
        w2 = cos * z[2] - sin * z[1]
        base = w0 - w2
        if np.any(base.real <= 0):
            raise ChartBoundary("integration orbit left the chart")
        return np.exp(-sigma * np.log(base))

    val = adaptive_quad(integrand, 0.0, 2 * math.pi, spec)
    return val / (2 * math.pi)


def doubling_check(lam: float, y: float, spec: QuadratureSpec | None = None) -> float:
    """Relative gap between the squared-norm integral and phi at the doubled point.

    Needs |y| < 1/2 so the doubled point stays inside the chart.
    """
    if not abs(y) < 0.5:
        raise ChartBoundary("doubling needs |y| < 1/2")
    theta = math.pi * y / 2
    z = a_complex(theta) @ X0
    sigma = 1.0 + 2j * lam

    def integrand(phis):
        cos, sin = np.cos(phis), np.sin(phis)
        w0 = np.full_like(phis, z[0], dtype=complex)
        w2 = cos * z[2] - sin * z[1]
        base = w0 - w2
        if np.any(base.real <= 0):
            raise ChartBoundary("integration orbit left the chart")
        return np.abs(np.exp(-sigma * np.log(base)))

    lhs = adaptive_quad(integrand, 0.0, 2 * math.pi, spec).real / (2 * math.pi)
    rhs = spherical_so12(lam, 2 * y, spec).real
    return abs(lhs - rhs) / max(abs(rhs), 1e-30)
