"""Leading exponents of holomorphically extended spherical functions.

For an extremal boundary point eta of the crown polytope the singular
expansion of the spherical function is governed by the isotropy reflection
group of eta inside the affine Weyl group.  Each irreducible constituent tau
of the induced trivial character contributes a candidate exponent

    s_tau(m) = b(tau) - c_tau(m) / 2,
    c_tau(m) = sum over reflection classes  size * (1 - chi_tau / deg) * m^a,

an affine-linear form in the multiplicities (m_half, m_long, m_other).  The
leading exponent is the minimum over the constituents; on the multiplicity
cone the minimiser is the character obtained by truncated induction of the
sign character, independent of m.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from . import weylchar
from .errors import (
    InvalidPeriod,
    NonReducedSystem,
    NotExtremal,
    OutsideCone,
    UnsupportedPair,
)
from .rootsys import (
    BoundaryPoint,
    IsotropyData,
    RootSystemData,
    boundary_point,
    extremal_points,
    isotropy_subsystem,
    root_level_census,
)
from .weylchar import CharacterLabel, MultiplicityFunction

# A generic interior point of the multiplicity cone, used to order symbolic
# spectra and to certify minimisers; denominators are kept odd and unequal so
# accidental ties cannot happen for the half-integral forms that occur.
_GENERIC_M = (Fraction(3, 7), Fraction(15, 11), Fraction(40, 13))


@dataclass(frozen=True)
class AffineExponentForm:
    """Affine-linear form  constant + ch*m_half + cl*m_long + co*m_other."""

    constant: Fraction = Fraction(0)
    m_half: Fraction = Fraction(0)
    m_long: Fraction = Fraction(0)
    m_other: Fraction = Fraction(0)

    def __add__(self, other):
        return AffineExponentForm(
            self.constant + other.constant,
            self.m_half + other.m_half,
            self.m_long + other.m_long,
            self.m_other + other.m_other,
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, factor) -> "AffineExponentForm":
        f = Fraction(factor)
        return AffineExponentForm(
            self.constant * f, self.m_half * f, self.m_long * f, self.m_other * f
        )

    def evaluate(self, m: MultiplicityFunction) -> Fraction:
        return (
            self.constant
            + self.m_half * m.m_half
            + self.m_long * m.m_long
            + self.m_other * m.m_other
        )

    def eval_at(self, mh, m1, m2) -> Fraction:
        return self.constant + self.m_half * mh + self.m_long * m1 + self.m_other * m2

    def is_zero(self) -> bool:
        return not any((self.constant, self.m_half, self.m_long, self.m_other))

    def coefficients(self):
        return (self.constant, self.m_half, self.m_long, self.m_other)

    def render(self) -> str:
        parts = []
        if self.constant or self.is_zero():
            parts.append(_fmt_frac(self.constant))
        for coef, sym in (
            (self.m_half, "mh"),
            (self.m_long, "m1"),
            (self.m_other, "m2"),
        ):
            if coef == 0:
                continue
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            term = sym if mag == 1 else f"{_fmt_frac(mag)}*{sym}"
            if not parts:
                parts.append(term if coef > 0 else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
        return " ".join(parts)

    def __str__(self):
        return self.render()


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def form_from_weights(weights, factor=Fraction(1)) -> AffineExponentForm:
    ch, cl, co = weights
    return AffineExponentForm(Fraction(0), ch * factor, cl * factor, co * factor)


# ---------------------------------------------------------------------------
# Pair resolution: which parabolic pair governs a given extremal point
# ---------------------------------------------------------------------------


def _pair_for(rs: RootSystemData, bp: BoundaryPoint):
    fam, n, j = rs.family, rs.rank, bp.index
    if fam == "A":
        return ("A", min(j, n + 1 - j), n + 1)
    if fam == "B":
        if j == 1:
            return ("B", n)
        if j == n:
            return ("A", 1, 4) if n == 3 else ("Dl", n)
    if fam in ("C", "BC"):
        if j == n:
            return ("A", 1, 2) if n == 1 else ("C", n)
    if fam == "D":
        if j == 1:
            return ("D1", n)
        if j in (n - 1, n):
            return ("Dl", n)
    if fam == "E":
        if n == 6 and j in (1, 6):
            return ("E6",)
        if n == 7 and j == 7:
            return ("E7",)
        if n == 7 and j == 2:
            return ("A", 1, 8)
        if n == 8 and j == 1:
            return ("D1", 8)
        if n == 8 and j == 2:
            return ("A", 1, 9)
    if fam == "F" and j == 4:
        return ("B", 4)
    if fam == "G" and j == 1:
        return ("A", 1, 3)
    raise UnsupportedPair(f"no isotropy pattern for ({fam}{n}, node {j})")


def _abstract_classes(rs, iso: IsotropyData, pair):
    """Match concrete reflection classes to the abstract class tags 's'/'t'.

    Hyperoctahedral isotropy groups carry two classes; whether the sign flips
    sit on the longer or the shorter roots depends on the presentation (B
    presentations put flips on short roots, C presentations on long ones).
    """
    kind = pair[0]
    classes = iso.classes
    if kind in ("A", "D1", "Dl", "E6", "E7"):
        if len(classes) != 1:
            raise AssertionError(f"expected a single reflection class for {pair}")
        return {"t": classes[0]}
    if kind in ("B", "C"):
        if len(classes) != 2:
            raise AssertionError(f"expected two reflection classes for {pair}")
        short, long_ = sorted(classes, key=lambda c: c.norm2)
        flips = short if kind == "B" else long_
        other = long_ if kind == "B" else short
        l = pair[1]
        if flips.size != l or other.size != l * (l - 1):
            raise AssertionError("reflection class sizes do not match the type")
        return {"s": flips, "t": other}
    raise UnsupportedPair(repr(pair))


def exponent_forms(rs: RootSystemData, bp: BoundaryPoint) -> list[tuple[CharacterLabel, AffineExponentForm]]:
    """The candidate forms s_tau for every tau in the induced decomposition."""
    if not bp.extremal:
        raise NotExtremal(bp.label())
    iso = isotropy_subsystem(rs, bp)
    pair = _pair_for(rs, bp)
    classes = _abstract_classes(rs, iso, pair)
    group = weylchar.pair_group(pair)
    out = []
    for tau in weylchar.induce_trivial(pair):
        deg = weylchar.dim_irrep(tau)
        c = AffineExponentForm()
        for tag, geom in classes.items():
            chi = weylchar.reflection_value(tau, tag)
            c = c + form_from_weights(geom.m_weights, geom.size * (1 - chi / deg))
        form = AffineExponentForm(Fraction(weylchar.b_invariant(tau))) + c.scale(
            Fraction(-1, 2)
        )
        out.append((tau, form))
    # sanity: every coefficient of m is non-positive, so exponents only sink
    # as multiplicities grow
    for _, f in out:
        if f.m_half > 0 or f.m_long > 0 or f.m_other > 0:
            raise AssertionError("positive multiplicity coefficient in an exponent")
    _ = group
    return out


def leading_character(rs: RootSystemData, bp: BoundaryPoint) -> CharacterLabel:
    return weylchar.j_induce_sign(_pair_for(rs, bp))


def exponent_spectrum(rs, bp, m: MultiplicityFunction | None = None):
    """All candidate exponents, sorted ascending (at m, or generically)."""
    forms = exponent_forms(rs, bp)
    if m is not None and not m.symbolic:
        _warn_outside_cone(rs, m)
        key = lambda item: (item[1].evaluate(m), str(item[0]))
    else:
        key = lambda item: (item[1].eval_at(*_GENERIC_M), str(item[0]))
    return sorted(forms, key=key)


def leading_exponent(rs, bp, m: MultiplicityFunction | None = None):
    """The leading character and its exponent form (or value minimiser at m)."""
    sigma = leading_character(rs, bp)
    forms = dict((str(t), f) for t, f in exponent_forms(rs, bp))
    sigma_form = forms[str(sigma)]
    if m is None or m.symbolic:
        generic = [(f.eval_at(*_GENERIC_M), str(t)) for t, f in forms.items()]
        if min(v for v, _ in generic) != sigma_form.eval_at(*_GENERIC_M):
            raise AssertionError("truncated induction did not give the minimiser")
        return sigma, sigma_form
    _warn_outside_cone(rs, m)
    spectrum = exponent_spectrum(rs, bp, m)
    best_val = spectrum[0][1].evaluate(m)
    if sigma_form.evaluate(m) == best_val:
        return sigma, sigma_form
    return spectrum[0]


def _warn_outside_cone(rs, m: MultiplicityFunction):
    tags = rs.orbit_tags()
    if not m.in_cone(has_other="other" in tags, has_half="half" in tags):
        warnings.warn(
            "multiplicities outside the cone 1 <= m1 <= m2; table guarantees "
            "do not apply",
            stacklevel=3,
        )


# ---------------------------------------------------------------------------
# Degeneracy of the leading exponent
# ---------------------------------------------------------------------------


def _cone_minimum(form: AffineExponentForm, has_half: bool, has_other: bool):
    """Exact minimum of the form over the multiplicity cone, or None if -inf."""
    rays = []
    if has_half:
        rays.append((Fraction(1), Fraction(0), Fraction(0)))
    if has_other:
        rays.append((Fraction(0), Fraction(1), Fraction(1)))
        rays.append((Fraction(0), Fraction(0), Fraction(1)))
    else:
        rays.append((Fraction(0), Fraction(1), Fraction(0)))
    for r in rays:
        slope = form.m_half * r[0] + form.m_long * r[1] + form.m_other * r[2]
        if slope < 0:
            return None
    return form.eval_at(Fraction(0), Fraction(1), Fraction(1))


def _equation_string(form: AffineExponentForm) -> str:
    """Human form of the hyperplane {form = 0}, e.g. 'm1 = 1'."""
    terms = [
        (form.m_half, "mh"),
        (form.m_long, "m1"),
        (form.m_other, "m2"),
    ]
    denom = math.lcm(*(c.denominator for c, _ in terms), form.constant.denominator)
    scaled = [(c * denom, s) for c, s in terms]
    const = form.constant * denom
    nums = [int(c) for c, _ in scaled] + [int(const)]
    g = math.gcd(*(abs(v) for v in nums)) or 1
    scaled = [(c / g, s) for c, s in scaled]
    const = const / g
    lead = next((c for c, _ in scaled if c != 0), Fraction(1))
    if lead < 0:
        scaled = [(-c, s) for c, s in scaled]
        const = -const
    lhs = " + ".join(
        (s if c == 1 else f"{_fmt_frac(c)}*{s}") for c, s in scaled if c > 0
    )
    rhs_terms = [(-c, s) for c, s in scaled if c < 0]
    rhs = " + ".join(
        (s if c == 1 else f"{_fmt_frac(c)}*{s}") for c, s in rhs_terms
    )
    if const > 0:
        rhs = f"{rhs} - {_fmt_frac(const)}" if rhs else f"-{_fmt_frac(const)}"
    elif const < 0:
        rhs = f"{rhs} + {_fmt_frac(-const)}" if rhs else _fmt_frac(-const)
    return f"{lhs or '0'} = {rhs or '0'}"


def degeneracy_condition(rs, bp) -> str:
    """Symbolic condition on m under which two leading exponents coincide."""
    sigma = leading_character(rs, bp)
    forms = exponent_forms(rs, bp)
    sigma_form = next(f for t, f in forms if str(t) == str(sigma))
    tags = rs.orbit_tags()
    has_half, has_other = "half" in tags, "other" in tags
    conditions = []
    for tau, f in forms:
        if str(tau) == str(sigma):
            continue
        diff = f - sigma_form
        mn = _cone_minimum(diff, has_half, has_other)
        if mn is None or mn < 0:
            raise AssertionError("leading form is not minimal on the cone")
        if mn == 0:
            conditions.append(_equation_string(diff))
    if not conditions:
        return "never"
    return " or ".join(sorted(set(conditions)))


def degeneracy_flag(rs, bp, m: MultiplicityFunction) -> tuple[int, str]:
    """1 when the two smallest exponents coincide at m (m must lie in the cone)."""
    if m.symbolic:
        raise OutsideCone("degeneracy flag needs numeric multiplicities")
    tags = rs.orbit_tags()
    if not m.in_cone(has_other="other" in tags, has_half="half" in tags):
        raise OutsideCone("degeneracy classification is only guaranteed on the cone")
    spectrum = exponent_spectrum(rs, bp, m)
    condition = degeneracy_condition(rs, bp)
    if len(spectrum) < 2:
        return 0, condition
    v0 = spectrum[0][1].evaluate(m)
    v1 = spectrum[1][1].evaluate(m)
    return int(v0 == v1), condition


# ---------------------------------------------------------------------------
# Cross checks and assembled reports
# ---------------------------------------------------------------------------


def complex_cross_check(rs, bp) -> tuple[int, bool]:
    """Compare s(m=2) with minus the number of level-one positive roots."""
    if not rs.is_reduced:
        raise NonReducedSystem("the all-multiplicities-two case needs a reduced system")
    census = root_level_census(rs, bp)
    target = -census.complex_level_count
    _, form = leading_exponent(rs, bp)
    value = form.eval_at(Fraction(0), Fraction(2), Fraction(2))
    return target, value == target


def lower_bound_rate(rs, bp) -> AffineExponentForm:
    """Half the multiplicity-weighted count of roots at intermediate levels.

    Equals (dim g - dim g_eta)/4 for the centraliser grading at eta; zero
    exactly at minuscule points.
    """
    if not bp.extremal:
        raise NotExtremal(bp.label())
    census = root_level_census(rs, bp)
    total = AffineExponentForm()
    for lv, weights in census.weights.items():
        if 0 < lv < 1:
            total = total + form_from_weights(weights, Fraction(1, 2))
    return total


@dataclass(frozen=True)
class Table1Row:
    family: str
    rank: int
    extremal: tuple[tuple[int, int], ...]  # (index, denominator)
    minuscule: tuple[tuple[int, int], ...]

    def extremal_labels(self):
        return [_pt_label(j, k) for j, k in self.extremal]

    def minuscule_labels(self):
        return [_pt_label(j, k) for j, k in self.minuscule]


def _pt_label(j, k):
    return f"w{j}" if k == 1 else f"w{j}/{k}"


def boundary_report(rs) -> Table1Row:
    ext = extremal_points(rs)
    return Table1Row(
        rs.family,
        rs.rank,
        tuple((bp.index, bp.denominator) for bp in ext),
        tuple((bp.index, bp.denominator) for bp in ext if bp.minuscule),
    )


@dataclass(frozen=True)
class ExponentReport:
    eta: BoundaryPoint
    isotropy: IsotropyData
    j_eta: tuple[tuple[CharacterLabel, AffineExponentForm], ...]
    leading_character: CharacterLabel
    leading_exponent: AffineExponentForm
    degeneracy_condition: str
    complex_check: int | None
    lower_bound: AffineExponentForm

    def degenerate_at(self, m: MultiplicityFunction) -> bool:
        vals = sorted(f.evaluate(m) for _, f in self.j_eta)
        return len(vals) > 1 and vals[0] == vals[1]


def exponent_report(rs, bp_or_index) -> ExponentReport:
    bp = (
        bp_or_index
        if isinstance(bp_or_index, BoundaryPoint)
        else boundary_point(rs, bp_or_index)
    )
    iso = isotropy_subsystem(rs, bp)
    forms = tuple(exponent_spectrum(rs, bp))
    sigma, lead = leading_exponent(rs, bp)
    if rs.is_reduced:
        cc, ok = complex_cross_check(rs, bp)
        if not ok:
            raise AssertionError(f"complex cross-check failed at {bp.label()}")
    else:
        cc = None
    return ExponentReport(
        eta=bp,
        isotropy=iso,
        j_eta=forms,
        leading_character=sigma,
        leading_exponent=lead,
        degeneracy_condition=degeneracy_condition(rs, bp),
        complex_check=cc,
        lower_bound=lower_bound_rate(rs, bp),
    )


# ---------------------------------------------------------------------------
# Assembled decay profile
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DirectionData:
    index: int
    c_alpha: Fraction
    period: float
    rate: float  # 2 pi c_alpha / period


@dataclass(frozen=True)
class DecayProfile:
    dim_x: Fraction
    r_x: Fraction
    s_x: Fraction
    d_x: int
    directions: tuple[DirectionData, ...]
    poly_exponent: Fraction  # -(r_x/2 + s_x/4)
    log_power: Fraction  # d_x / 2


def geometric_c_alpha(rs, i: int) -> Fraction:
    """Largest c with (c/2) H_beta inside the closed polytope for the ideal at alpha_i."""
    best = None
    reduced = [r.coeffs for r in rs.reduced_positive_roots()]
    for beta in rs.positive_roots:
        if beta.coeffs[i - 1] <= 0:
            continue
        worst = max(abs(rs.cartan_int(g, beta.coeffs)) for g in reduced)
        c = Fraction(2) / worst
        best = c if best is None else min(best, c)
    return best


def decay_profile(rs, m: MultiplicityFunction, periods, c_alpha=None) -> DecayProfile:
    """Ingredients of the assembled cusp-form decay bound.

    ``periods`` maps simple-root indices (1-based) to the lattice periods
    r_{alpha,Gamma}; ``c_alpha`` may override the geometric constants.
    """
    if m.symbolic:
        raise OutsideCone("decay profiles need numeric multiplicities")
    if isinstance(periods, (int, float, Fraction)):
        periods = {i: periods for i in range(1, rs.rank + 1)}
    for i, v in periods.items():
        if not (1 <= i <= rs.rank) or float(v) <= 0:
            raise InvalidPeriod(f"period for node {i} must be positive")
    if set(periods) != set(range(1, rs.rank + 1)):
        raise InvalidPeriod("one period per simple root is required")

    counts = {"half": 0, "long": 0, "other": 0}
    for r in rs.positive_roots:
        counts[r.tag] += 1
    dim_x = (
        rs.rank
        + counts["half"] * m.m_half
        + counts["long"] * m.m_long
        + counts["other"] * m.m_other
    )
    r_x = -dim_x + Fraction(rs.rank, 2) + Fraction(1, 2)

    s_vals = []
    for bp in extremal_points(rs):
        val = leading_exponent(rs, bp, m)[1].evaluate(m)
        flag, _ = degeneracy_flag(rs, bp, m)
        s_vals.append((val, flag))
    s_x = max(v for v, _ in s_vals)
    d_x = max(flag for v, flag in s_vals if v == s_x)

    dirs = []
    for i in range(1, rs.rank + 1):
        c = Fraction(c_alpha[i]) if c_alpha else geometric_c_alpha(rs, i)
        per = float(periods[i])
        dirs.append(DirectionData(i, c, per, 2 * math.pi * float(c) / per))
    return DecayProfile(
        dim_x=dim_x,
        r_x=r_x,
        s_x=s_x,
        d_x=d_x,
        directions=tuple(dirs),
        poly_exponent=-(r_x / 2 + Fraction(s_x) / 4),
        log_power=Fraction(d_x, 2),
    )
