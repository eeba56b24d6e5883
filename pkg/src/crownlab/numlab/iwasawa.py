"""Horospherical (Iwasawa) middle projection from principal minors.

For a complex symmetric matrix M = g g^T with g in the lower-unitriangular
times diagonal times orthogonal chart, the squared torus part is read off
from the ratios of leading principal minors: a_k^2 = D_k / D_{k-1}.  The
imaginary parts of (1/2) log a_k^2 land in the convex hull of the Weyl orbit
of the imaginary source point; the hull test in coordinates is majorization.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import ChartBoundary
from .tolerances import TOL


def iwasawa_a_part(m, guard: float = TOL.chart_guard) -> np.ndarray:
    """Diagonal of a^2 for a complex symmetric matrix in the chart.

    Raises ChartBoundary when a leading principal minor degenerates, i.e.
    the point left the unipotent-times-torus chart.
    """
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    if m.shape != (n, n) or not np.allclose(m, m.T, atol=1e-12):
        raise ChartBoundary("input must be complex symmetric")
    minors = [1.0 + 0j]
    scale = max(1.0, float(np.max(np.abs(m))))
    for k in range(1, n + 1):
        d = np.linalg.det(m[:k, :k])
        if abs(d) < guard * scale**k:
            raise ChartBoundary(f"leading minor {k} vanishes to tolerance")
        minors.append(d)
    return np.array([minors[k] / minors[k - 1] for k in range(1, n + 1)])


def im_log_a(m, guard: float = TOL.chart_guard) -> np.ndarray:
    """Imaginary parts of log a_k on the principal branch, with chart guard."""
    a2 = iwasawa_a_part(m, guard)
    args = np.angle(a2)
    if np.any(np.abs(args) >= np.pi - 1e-12):
        raise ChartBoundary("Im log a^2 reached the branch cut")
    return args / 2.0


def majorized_by(v, y, slack: float = TOL.convexity) -> bool:
    """Whether v lies in the convex hull of the permutation orbit of y.

    Rado's criterion: equal totals and dominated sorted partial sums.
    """
    v = np.sort(np.asarray(v, dtype=float))[::-1]
    y = np.sort(np.asarray(y, dtype=float))[::-1]
    if abs(v.sum() - y.sum()) > slack:
        return False
    return bool(np.all(np.cumsum(v) <= np.cumsum(y) + slack))


def sample_special_orthogonal(rng, n: int) -> np.ndarray:
    """Haar-ish sample of SO(n) by orthonormalising a Gaussian matrix."""
    g = rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def convexity_samples(n: int, count: int, seed: int = 0, shrink: float = 0.93):
    """Slack of the convex-hull containment on random special-linear samples.

    Draws rotations k and interior flat points Y, forms k exp(iY) twice
    symmetrised, and yields the worst majorization slack of Im log a against
    the source spectrum.  Positive return value = containment holds with
    that margin (it reports the largest violation, 0 when none).
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(count):
        k = sample_special_orthogonal(rng, n)
        y = rng.uniform(-1.0, 1.0, size=n)
        y -= y.mean()
        spread = max(abs(y[i] - y[j]) for i in range(n) for j in range(n))
        y *= shrink / max(spread, 1e-9)
        z = k @ np.diag(np.exp(1j * math.pi / 2 * y))
        v = im_log_a(z @ z.T)
        target = math.pi / 2 * y
        vv = np.sort(v)[::-1]
        tt = np.sort(target)[::-1]
        gap = max(
            float(np.max(np.cumsum(vv) - np.cumsum(tt))),
            abs(float(vv.sum() - tt.sum())),
        )
        worst = max(worst, gap)
    return worst
