"""Adaptive Gauss-Legendre quadrature for complex-valued integrands."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import QuadratureFailure
from .tolerances import TOL

_NODES_HI, _WEIGHTS_HI = np.polynomial.legendre.leggauss(15)
_NODES_LO, _WEIGHTS_LO = np.polynomial.legendre.leggauss(7)


@dataclass(frozen=True)
class QuadratureSpec:
    rule: str = "adaptive-gauss-legendre"
    atol: float = TOL.quadrature
    max_subdivisions: int = 4000


def _panel(f, a, b):
    mid, half = (a + b) / 2, (b - a) / 2
    hi = half * np.sum(_WEIGHTS_HI * f(mid + half * _NODES_HI))
    lo = half * np.sum(_WEIGHTS_LO * f(mid + half * _NODES_LO))
    return hi, abs(hi - lo)


def adaptive_quad(f, a, b, spec: QuadratureSpec | None = None):
    """Integrate a callable over [a, b]; f must accept numpy arrays."""
    spec = spec or QuadratureSpec()
    intervals = [(float(a), float(b))]
    total = 0.0 + 0.0j
    used = 0
    while intervals:
        lo, hi = intervals.pop()
        val, err = _panel(f, lo, hi)
        if err < spec.atol * max(1.0, abs(val)) or hi - lo < 1e-14:
            total += val
            continue
        used += 1
        if used > spec.max_subdivisions:
            raise QuadratureFailure(
                f"tolerance {spec.atol} not reached within "
                f"{spec.max_subdivisions} subdivisions"
            )
        mid = (lo + hi) / 2
        intervals.extend([(lo, mid), (mid, hi)])
    return total
