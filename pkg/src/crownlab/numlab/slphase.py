"""Phase bound for unipotent translates in the special linear group.

Matching bottom rows in the horospherical factorisation of k z(t), where
z(t) is the bidiagonal unipotent element with constant superdiagonal it,
yields the squared torus entry 1 - t^2 s + 2 i t c with s and c quadratic in
the bottom row of k.  The resulting phase obeys
|phi| <= (1/2) atan(2t / (1 - t^2)) because s <= 1 and |c| <= 1.
"""

from __future__ import annotations

import math

import numpy as np

from .iwasawa import sample_special_orthogonal


def phase_bound(t: float) -> float:
    return 0.5 * math.atan2(2 * t, 1 - t * t) if t >= 0 else -phase_bound(-t)


def bottom_row_phase(t: float, k_row) -> float:
    k = np.asarray(k_row, dtype=float)
    s = float(np.sum(k[:-1] ** 2))
    c = float(np.sum(k[:-1] * k[1:]))
    val = 1 - t * t * s + 2j * t * c
    return 0.5 * math.atan2(val.imag, val.real)


def sln_phase_bound(n: int, t: float, k_row=None, seed: int = 0, samples: int = 1):
    """Evaluate phases on sampled rotations and compare with the bound.

    Returns (max |phase|, bound, holds) over the requested samples; a single
    explicit row can be passed instead.
    """
    if not abs(t) < 1:
        raise ValueError("need |t| < 1")
    bound = abs(phase_bound(t))
    if k_row is not None:
        ph = abs(bottom_row_phase(t, k_row))
        return ph, bound, ph <= bound + 1e-12
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        k = sample_special_orthogonal(rng, n)
        worst = max(worst, abs(bottom_row_phase(t, k[-1])))
    return worst, bound, worst <= bound + 1e-12


def extremal_phase_search(n: int, t: float, seed: int = 0, iters: int = 4000) -> float:
    """Best achievable |phase| over unit bottom rows, by random local search.

    The supremum stays strictly below the bound for fixed n; concentrated
    rows k_1 = ... = k_{n-1} approach it as n grows.
    """
    rng = np.random.default_rng(seed)
    vec = np.ones(n)
    vec[-1] = 0.0
    vec /= np.linalg.norm(vec)
    best = abs(bottom_row_phase(t, vec))
    step = 0.5
    for i in range(iters):
        cand = vec + step * rng.standard_normal(n)
        cand /= np.linalg.norm(cand)
        val = abs(bottom_row_phase(t, cand))
        if val > best:
            best, vec = val, cand
        if i % 500 == 499:
            step *= 0.5
    return best


def concentrated_phase(n: int, t: float) -> float:
    """|phase| of the row with equal mass on the first n-1 coordinates."""
    k = np.zeros(n)
    k[:-1] = 1.0 / math.sqrt(n - 1)
    return abs(bottom_row_phase(t, k))
