"""Sharpness check for the Mellin transform of degree-three Whittaker data.

The double Mellin transform is a quotient of six gamma factors over one,
    RHS(s1, s2) = (1/4) pi^{-s1-s2}
                  G((s1+a)/2) G((s1+b)/2) G((s1+g)/2)
                  G((s2-a)/2) G((s2-b)/2) G((s2-g)/2) / G((s1+s2)/2),
with g = -a-b.  Stirling approximation along the diagonal (s, s) and along
the axis (s, 0) gives elementary comparison forms; the quotient is evaluated
with high-precision log-gamma and the ratios to those forms are reported.

Note: the diagonal comparison form is the corrected Stirling reduction
    2 (2 pi)^{-2s+5/2} e^{-2s} s^{2s-5/2} / 2^s ;
the form with s^{2s-1/2} and prefactor 1/2 that circulates differs from the
honest reduction by a factor s^2/4 and is reported separately.
"""

from __future__ import annotations

import cmath
import math

import mpmath

from ..errors import PoleProximity


def _loggamma(z) -> complex:
    z = complex(z)
    if abs(z.imag) < 1e-12 and z.real <= 0 and abs(z.real - round(z.real)) < 1e-9:
        raise PoleProximity(f"gamma argument {z} is at or near a pole")
    return complex(mpmath.loggamma(z))


def rhs_log(s1: float, s2: float, alpha=0j, beta=0j) -> complex:
    gamma = -alpha - beta
    num = (
        _loggamma((s1 + alpha) / 2)
        + _loggamma((s1 + beta) / 2)
        + _loggamma((s1 + gamma) / 2)
        + _loggamma((s2 - alpha) / 2)
        + _loggamma((s2 - beta) / 2)
        + _loggamma((s2 - gamma) / 2)
    )
    return math.log(0.25) - (s1 + s2) * math.log(math.pi) + num - _loggamma((s1 + s2) / 2)


def diagonal_form_log(s: float, corrected: bool = True) -> float:
    """log of the Stirling comparison form on the diagonal (s, s)."""
    base = (-2 * s + 2.5) * math.log(2 * math.pi) - 2 * s - s * math.log(2)
    if corrected:
        return math.log(2) + base + (2 * s - 2.5) * math.log(s)
    return math.log(0.5) + base + (2 * s - 0.5) * math.log(s)


def axis_form_log(s: float, alpha, beta) -> complex:
    """log of the Stirling comparison form on the axis (s, 0).

    The constant pi G(-a/2) G(-b/2) G(-g/2) comes from the three gamma
    factors that freeze at s2 = 0.
    """
    gamma = -alpha - beta
    const = (
        math.log(math.pi)
        + _loggamma(-alpha / 2)
        + _loggamma(-beta / 2)
        + _loggamma(-gamma / 2)
    )
    return const - s * math.log(2 * math.pi) - s + (s - 1) * math.log(s)


def mellin_stirling_check(s: float, alpha=0.6j, beta=-0.5j) -> dict:
    """Ratios of the gamma quotient to its Stirling forms at (s, s) and (s, 0)."""
    if s <= 2:
        raise PoleProximity("need s large enough to clear all poles")
    diag = rhs_log(s, s, alpha, beta)
    axis = rhs_log(s, 0.0, alpha, beta)
    return {
        "s": s,
        "ratio_diagonal": cmath.exp(diag - diagonal_form_log(s, corrected=True)),
        "ratio_diagonal_printed_form": cmath.exp(
            diag - diagonal_form_log(s, corrected=False)
        ),
        "ratio_axis": cmath.exp(axis - axis_form_log(s, alpha, beta)),
    }


def quotient_identity_check(s: float) -> float:
    """At alpha = beta = 0 the diagonal value is (1/4) pi^{-2s} G(s/2)^6 / G(s)."""
    direct = (
        math.log(0.25)
        - 2 * s * math.log(math.pi)
        + 6 * _loggamma(s / 2).real
        - _loggamma(s).real
    )
    return abs(cmath.exp(rhs_log(s, s) - direct) - 1)
