"""Brute-force character tables for small Weyl groups.

Everything here is computed from explicit (signed) permutation matrices with
exact rational arithmetic: conjugacy classes by conjugation closure, the
character table from a random integral element of the class algebra (its
simultaneous eigenvectors are the central characters), graded coinvariant
multiplicities by Molien series expansion truncated at the number of
positive roots, and induced characters summed over the whole group.

This is the independent oracle for the combinatorial character formulas; it
must not share code with crownlab.weylchar.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import TooLarge

Matrix = tuple[tuple[int, ...], ...]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _det_sign(a: Matrix) -> int:
    """Determinant of a signed permutation matrix."""
    n = len(a)
    perm, sign = [None] * n, 1
    for i in range(n):
        j = next(k for k in range(n) if a[i][k] != 0)
        perm[i] = j
        sign *= a[i][j]
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        ln, cur = 0, start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def sym_elements(n: int) -> list[Matrix]:
    out = []
    for p in itertools.permutations(range(n)):
        out.append(tuple(tuple(int(p[i] == j) for j in range(n)) for i in range(n)))
    return out


def hyperoct_elements(n: int) -> list[Matrix]:
    out = []
    for p in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(
                tuple(
                    tuple(signs[i] * int(p[i] == j) for j in range(n))
                    for i in range(n)
                )
            )
    return out


def demi_elements(n: int) -> list[Matrix]:
    return [
        g
        for g in hyperoct_elements(n)
        if np.prod([g[i][j] for i in range(n) for j in range(n) if g[i][j]]) == 1
    ]


_DEGREES = {
    "S": lambda n: list(range(2, n + 1)),
    "B": lambda n: list(range(2, 2 * n + 1, 2)),
    "D": lambda n: list(range(2, 2 * n - 1, 2)) + [n],
}


@dataclass
class OracleCharacter:
    values: tuple[Fraction, ...]  # by class index
    degree: int
    b_invariant: int
    fake_degree: tuple[int, ...]  # coinvariant multiplicities by degree


class BruteForceWeylGroup:
    """Character table and coinvariant grading of one small Weyl group."""

    def __init__(self, kind: str, rank: int, max_order: int = 400):
        if kind == "S":
            elements = sym_elements(rank)
            dim = rank
            npos = rank * (rank - 1) // 2
        elif kind == "B":
            elements = hyperoct_elements(rank)
            dim = rank
            npos = rank * rank
        elif kind == "D":
            elements = demi_elements(rank)
            dim = rank
            npos = rank * (rank - 1)
        else:
            raise TooLarge(f"unknown kind {kind!r}")
        if len(elements) > max_order:
            raise TooLarge(f"group of order {len(elements)} exceeds the oracle budget")
        self.kind, self.rank, self.dim = kind, rank, dim
        self.elements = elements
        self.order = len(elements)
        self.index = {g: i for i, g in enumerate(elements)}
        self.n_positive = npos
        self.degrees = _DEGREES[kind](rank)
        assert np.prod(self.degrees) * (1 if kind != "S" else 1) == self.order or kind == "S"
        self._build_classes()
        self._build_table()
        self._build_fake_degrees()

    # -- conjugacy classes --------------------------------------------------

    def _build_classes(self):
        elements = self.elements
        cls_of = {}
        classes = []
        for g in elements:
            if g in cls_of:
                continue
            orbit = {g}
            stack = [g]
            while stack:
                x = stack.pop()
                for h in elements:
                    y = _matmul(_matmul(h, x), _transpose(h))
                    if y not in orbit:
                        orbit.add(y)
                        stack.append(y)
            idx = len(classes)
            classes.append(sorted(orbit))
            for y in orbit:
                cls_of[y] = idx
        self.classes = classes
        self.class_of = cls_of
        self.class_sizes = [len(c) for c in classes]
        self.identity_class = cls_of[_identity(self.dim)]
        self.inverse_class = [
            cls_of[_transpose(c[0])] for c in classes
        ]

    # -- character table via the class algebra ------------------------------

    def _class_matrices(self):
        k = len(self.classes)
        reps = [c[0] for c in self.classes]
        mats = []
        for i in range(k):
            m = [[0] * k for _ in range(k)]
            for kk, rep in enumerate(reps):
                for x in self.classes[i]:
                    y = _matmul(_transpose(x), rep)
                    m[kk][self.class_of[y]] += 1
            # m[kk][j] counts x in C_i with x^{-1} g_k in C_j, i.e. a_{ijk}
            mats.append(m)
        return mats

    def _build_table(self):
        k = len(self.classes)
        mats = self._class_matrices()
        rng = np.random.default_rng(12345)
        for _ in range(40):
            coeff = [int(c) for c in rng.integers(1, 30, size=k)]
            m = [[0] * k for _ in range(k)]
            for i in range(k):
                # a_{ijk} is stored as mats[i][kk][j]; we need (M_i)_{j,kk}
                for kk in range(k):
                    for j in range(k):
                        m[j][kk] += coeff[i] * mats[i][kk][j]
            eigvals = np.linalg.eigvals(np.array(m, dtype=float))
            rounded = sorted(set(int(round(v.real)) for v in eigvals))
            if len(rounded) != k:
                continue
            vectors = []
            ok = True
            for lam in rounded:
                vec = _nullspace_vector(
                    [
                        [Fraction(m[r][c] - (lam if r == c else 0)) for c in range(k)]
                        for r in range(k)
                    ]
                )
                if vec is None:
                    ok = False
                    break
                vectors.append(vec)
            if ok:
                break
        else:
            raise TooLarge("class algebra diagonalisation failed")

        chars = []
        e = self.identity_class
        for vec in vectors:
            omega = [v / vec[e] for v in vec]
            s = sum(
                omega[j] * omega[self.inverse_class[j]] / self.class_sizes[j]
                for j in range(k)
            )
            deg2 = Fraction(self.order) / s
            deg = _fraction_isqrt(deg2)
            values = tuple(deg * omega[j] / self.class_sizes[j] for j in range(k))
            if any(v.denominator != 1 for v in values):
                raise TooLarge("non-integral character values; diagonalisation bug")
            chars.append((int(deg), values))
        chars.sort(key=lambda c: (c[0], c[1]))
        self._raw_chars = chars

    # -- Molien series -------------------------------------------------------

    def _char_poly_coeffs(self, g: Matrix) -> list[int]:
        """Coefficients of det(1 - q g) via traces of exterior powers."""
        n = self.dim
        coeffs = [1]
        for k in range(1, n + 1):
            tot = 0
            for rows in itertools.combinations(range(n), k):
                sub = [[g[r][c] for c in rows] for r in rows]
                tot += _int_det(sub)
            coeffs.append((-1) ** k * tot)
        return coeffs

    def _build_fake_degrees(self):
        n_max = self.n_positive
        k = len(self.classes)
        # graded trace on polynomials up to degree n_max, per class
        graded = []
        for c in self.classes:
            poly = self._char_poly_coeffs(c[0])
            graded.append(_series_inverse(poly, n_max))
        # multiply by prod (1 - q^{d_i}) to land in the coinvariant algebra
        factor = [Fraction(1)] + [Fraction(0)] * n_max
        for d in self.degrees:
            nxt = list(factor)
            for i in range(0, n_max + 1 - d):
                nxt[i + d] -= factor[i]
            factor = nxt
        coinv = [
            [
                sum(factor[i] * graded[j][d - i] for i in range(d + 1))
                for d in range(n_max + 1)
            ]
            for j in range(k)
        ]
        self.characters = []
        for deg, values in self._raw_chars:
            mults = []
            for d in range(n_max + 1):
                tot = sum(
                    self.class_sizes[j]
                    * values[self.inverse_class[j]]
                    * coinv[j][d]
                    for j in range(k)
                )
                m = tot / self.order
                if m.denominator != 1 or m < 0:
                    raise TooLarge("non-integral coinvariant multiplicity")
                mults.append(int(m))
            b = next(d for d, m in enumerate(mults) if m > 0)
            self.characters.append(
                OracleCharacter(values, deg, b, tuple(mults))
            )
        total = sum(c.degree * c.fake_degree[d] for c in self.characters for d in [0])
        assert total == 1  # only the trivial character lives in degree zero

    # -- reflection data ------------------------------------------------------

    def reflection_classes(self) -> dict[str, int]:
        """Class indices of the reflections: diagonal flips 's', the rest 't'."""
        out = {}
        for j, c in enumerate(self.classes):
            g = c[0]
            tr = sum(g[i][i] for i in range(self.dim))
            if _det_sign(g) == -1 and tr == self.dim - 2 and _matmul(g, g) == _identity(self.dim):
                diag = all(g[i][j2] == 0 for i in range(self.dim) for j2 in range(self.dim) if i != j2)
                out["s" if diag else "t"] = j
        return out

    # -- induction -------------------------------------------------------------

    def induced_character(self, members, values_on_h) -> tuple[Fraction, ...]:
        """Ind_H^G(chi) evaluated on class representatives.

        ``members`` is the element set of H, ``values_on_h`` a callable.
        """
        member_set = set(members)
        size = len(member_set)
        out = []
        for c in self.classes:
            rep = c[0]
            tot = Fraction(0)
            for x in self.elements:
                y = _matmul(_matmul(_transpose(x), rep), x)
                if y in member_set:
                    tot += values_on_h(y)
            out.append(tot / size)
        return tuple(out)

    def decompose(self, class_function) -> list[tuple[OracleCharacter, int]]:
        out = []
        for ch in self.characters:
            tot = sum(
                self.class_sizes[j]
                * ch.values[self.inverse_class[j]]
                * class_function[j]
                for j in range(len(self.classes))
            )
            mult = tot / self.order
            if mult.denominator != 1:
                raise TooLarge("non-integral induction multiplicity")
            if mult:
                out.append((ch, int(mult)))
        return out


def _int_det(rows) -> int:
    a = [list(map(Fraction, r)) for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    num = det
    assert num.denominator == 1
    return int(num)


def _series_inverse(poly, n_max: int) -> list[Fraction]:
    """Power series coefficients of 1/poly(q) up to degree n_max."""
    assert poly[0] == 1
    inv = [Fraction(1)] + [Fraction(0)] * n_max
    for d in range(1, n_max + 1):
        s = Fraction(0)
        for i in range(1, min(d, len(poly) - 1) + 1):
            s += poly[i] * inv[d - i]
        inv[d] = -s
    return inv


def _nullspace_vector(rows):
    """One nullspace vector of a rational matrix, or None if trivial/2d."""
    n = len(rows)
    a = [list(r) for r in rows]
    pivots = []
    col_of_row = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        col_of_row.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        return None
    f = free[0]
    vec = [Fraction(0)] * n
    vec[f] = Fraction(1)
    for i, col in enumerate(col_of_row):
        vec[col] = -a[i][f]
    return vec


def _fraction_isqrt(x: Fraction) -> Fraction:
    assert x.denominator == 1 and x >= 0
    import math

    r = math.isqrt(x.numerator)
    if r * r != x.numerator:
        raise TooLarge("character degree is not a perfect square; bug")
    return Fraction(r)


@lru_cache(maxsize=None)
def char_oracle(kind: str, rank: int) -> BruteForceWeylGroup:
    """Cached brute-force table; 'S' up to rank 5, 'B'/'D' up to 4."""
    limits = {"S": 5, "B": 4, "D": 4}
    if rank > limits.get(kind, 0):
        raise TooLarge(f"oracle limited to {limits} ranks; got ({kind}, {rank})")
    return BruteForceWeylGroup(kind, rank)


# Subgroup element selectors for the induction pairs under test.


def subgroup_elements(group: BruteForceWeylGroup, pair) -> list[Matrix]:
    n = group.dim
    kind = pair[0]

    def fixes_last(g):
        return all(g[n - 1][j] == int(j == n - 1) for j in range(n)) and all(
            g[i][n - 1] == int(i == n - 1) for i in range(n)
        )

    if kind == "A":  # S_j x S_{l-j} inside S_l
        j = pair[1]
        out = []
        for g in group.elements:
            img = [next(c for c in range(n) if g[r][c] != 0) for r in range(n)]
            if all((r < j) == (img[r] < j) for r in range(n)):
                out.append(g)
        return out
    if kind in ("B", "D1"):  # corank-one parabolic fixing the last axis
        return [g for g in group.elements if fixes_last(g)]
    if kind in ("C", "Dl"):  # the subgroup of plain permutations
        return [
            g
            for g in group.elements
            if all(x >= 0 for row in g for x in row)
        ]
    raise TooLarge(f"no subgroup selector for {pair!r}")
