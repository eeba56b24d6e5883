"""Exact rational vertex enumeration for the crown polytope.

The polytope is {Y : |alpha(Y)| <= 1 for all alpha in the reduced system}.
In coweight coordinates every constraint row is just the coefficient vector
of a positive root, so vertices are found by solving all n-by-n subsystems
of active constraints with signs, keeping the feasible solutions, and
deduplicating.  Small ranks only; this is the independent geometric oracle
for the extremal-point combinatorics.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import UnsupportedType
from .rootsys import RootSystemData


def solve_fraction(rows, rhs):
    """Gaussian elimination over Fraction; returns None when singular."""
    n = len(rows)
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def polytope_vertices(rs: RootSystemData, max_rank: int = 3) -> set[tuple[Fraction, ...]]:
    if rs.rank > max_rank:
        raise UnsupportedType(f"vertex enumeration limited to rank <= {max_rank}")
    roots = [tuple(r.coeffs) for r in rs.reduced_positive_roots()]
    n = rs.rank
    vertices: set[tuple[Fraction, ...]] = set()
    for subset in itertools.combinations(range(len(roots)), n):
        rows = [roots[i] for i in subset]
        for signs in itertools.product((Fraction(1), Fraction(-1)), repeat=n):
            sol = solve_fraction(rows, list(signs))
            if sol is None:
                continue
            if all(
                abs(sum(c * y for c, y in zip(alpha, sol))) <= 1 for alpha in roots
            ):
                vertices.add(sol)
    # Keep only points where at least one constraint is tight at 1 (all are,
    # by construction) and drop interior duplicates like the origin.
    return {v for v in vertices if any(v)}
