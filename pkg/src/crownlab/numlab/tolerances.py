"""Numeric tolerances used across the verification lab, in one place.

Every quantitative claim in the lab references one of these constants; the
acceptance suite quotes them rather than re-inventing numbers inline.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    form_preservation: float = 1e-10  # |Q(gv) - Q(v)|, |g^T J g - J|
    orbit_identity: float = 1e-10  # SO(1,2) matrix identity deviation
    boundary_map: float = 1e-10  # corner boundary map values
    witness: float = 1e-9  # horocycle pairing residual
    convexity: float = 1e-8  # majorization slack for Im log a
    chart_guard: float = 1e-12  # minimal principal minor in the Iwasawa chart
    quadrature: float = 1e-9  # default adaptive quadrature tolerance
    doubling: float = 1e-6  # relative gap in the doubling identity
    phase_slack: float = 1e-12  # slack for the phase bound
    fit_window: float = 0.05  # allowed deviation of fitted exponents
    fit_stability: float = 0.01  # change under grid refinement
    grid_flip: float = 1e-3  # resolution of the operator-norm flip scan
    bessel_rel: float = 1e-8  # closed-form Bessel comparison
    series_term: float = 1e-16  # hypergeometric series cutoff
    tail: float = 1e-12  # Fourier tail cutoff for cusp-form sums


TOL = Tolerances()
