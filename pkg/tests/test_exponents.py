"""Leading exponents, degeneracy, cross checks and decay profiles."""

import math
import warnings
from fractions import Fraction

import pytest

from crownlab import table_data
from crownlab import weylchar as wc
from crownlab.errors import InvalidPeriod, NonReducedSystem, OutsideCone
from crownlab.exponents import (
    AffineExponentForm,
    boundary_report,
    complex_cross_check,
    decay_profile,
    degeneracy_condition,
    degeneracy_flag,
    exponent_report,
    exponent_spectrum,
    geometric_c_alpha,
    leading_exponent,
    lower_bound_rate,
)
from crownlab.rootsys import boundary_point, extremal_points, root_system
from crownlab.weylchar import MultiplicityFunction

M = MultiplicityFunction.numeric
F = Fraction


def form(const=0, mh=0, m1=0, m2=0):
    return AffineExponentForm(F(const), F(mh), F(m1), F(m2))


def test_leading_examples():
    rs = root_system("B", 6)
    sigma, f = leading_exponent(rs, boundary_point(rs, 1))
    assert sigma == wc.BCLabel((5,), (1,))
    assert f == form(1, 0, -5, -1)

    rs = root_system("G", 2)
    _, f = leading_exponent(rs, boundary_point(rs, 1))
    assert f == form(1, 0, F(-3, 2), 0)
    assert f.evaluate(M(1)) == F(-1, 2)

    for r, j in [(2, 1), (2, 2), (3, 3)]:
        rs = root_system("A", 2 * r)
        _, f = leading_exponent(rs, boundary_point(rs, j))
        assert f == form(j, 0, F(-j * (2 * r + 2 - j), 2), 0)


def test_spectrum_examples():
    rs = root_system("C", 5)
    spec = exponent_spectrum(rs, boundary_point(rs, 5))
    got = {f.coefficients() for _, f in spec}
    # s_(i, 5-i) = (5-i)(1 - m1 - i m2) for i = 0..5
    assert got == {(F(5 - i), F(0), F(-(5 - i)), F(-i * (5 - i))) for i in range(6)}

    rs = root_system("E", 7)
    spec = exponent_spectrum(rs, boundary_point(rs, 7))
    assert [f.coefficients() for _, f in spec] == [
        (F(3), F(0), F(-15), F(0)),
        (F(2), F(0), F(-14), F(0)),
        (F(1), F(0), F(-9), F(0)),
        (F(0), F(0), F(0), F(0)),
    ]

    rs = root_system("D", 6)
    spec = exponent_spectrum(rs, boundary_point(rs, 1))
    assert [f.coefficients() for _, f in spec] == [
        (F(2), F(0), F(-6), F(0)),
        (F(1), F(0), F(-5), F(0)),
        (F(0), F(0), F(0), F(0)),
    ]


def test_spectrum_sorted_at_numeric_m():
    rs = root_system("B", 4)
    m = M(1, 3)
    spec = exponent_spectrum(rs, boundary_point(rs, 1), m)
    vals = [f.evaluate(m) for _, f in spec]
    assert vals == sorted(vals)


def test_degeneracy_examples():
    rs = root_system("A", 5)  # 2r - 1 with r = 3
    flag, cond = degeneracy_flag(rs, boundary_point(rs, 3), M(1))
    assert flag == 1 and cond == "m1 = 1"
    flag, _ = degeneracy_flag(rs, boundary_point(rs, 2), M(1))
    assert flag == 0

    rs = root_system("BC", 1)
    flag, cond = degeneracy_flag(rs, boundary_point(rs, 1), M(1, 1, m_half=2))
    assert flag == 1 and cond == "m1 = 1"

    rs = root_system("B", 5)
    for m in (M(1), M(1, 4), M(2, 2)):
        flag, cond = degeneracy_flag(rs, boundary_point(rs, 1), m)
        assert flag == 0 and cond == "never"


def test_degeneracy_discovered_for_even_orthogonal_spin_nodes():
    # the (r,r)' and (r+1,r-1) exponents cross at m = 1; pinned against the
    # printed empty cell (see the project notes)
    for n in (4, 6, 8):
        rs = root_system("D", n)
        flag, cond = degeneracy_flag(rs, boundary_point(rs, n), M(1))
        assert flag == 1 and cond == "m1 = 1"
        flag, _ = degeneracy_flag(rs, boundary_point(rs, n), M(2))
        assert flag == 0
    rs = root_system("B", 4)
    flag, cond = degeneracy_flag(rs, boundary_point(rs, 4), M(1))
    assert flag == 1 and cond == "m1 = 1"


def test_outside_cone_errors_and_warning():
    rs = root_system("B", 4)
    bp = boundary_point(rs, 1)
    with pytest.raises(OutsideCone):
        degeneracy_flag(rs, bp, M(F(1, 2)))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        leading_exponent(rs, bp, M(F(1, 2)))
    assert any("cone" in str(w.message) for w in caught)


def test_complex_cross_check_examples():
    rs = root_system("E", 6)
    assert complex_cross_check(rs, boundary_point(rs, 1)) == (-16, True)
    rs = root_system("E", 7)
    assert complex_cross_check(rs, boundary_point(rs, 7)) == (-27, True)
    for l, j in [(4, 1), (5, 2), (6, 3)]:
        rs = root_system("A", l - 1)
        target, ok = complex_cross_check(rs, boundary_point(rs, j))
        assert ok and target == -j * (l - j)
    with pytest.raises(NonReducedSystem):
        rs = root_system("BC", 2)
        complex_cross_check(rs, boundary_point(rs, 2))


def test_lower_bound_examples():
    for fam, rank in [("A", 4), ("D", 5), ("E", 6), ("C", 4)]:
        rs = root_system(fam, rank)
        for bp in extremal_points(rs):
            if bp.minuscule and rs.is_reduced:
                assert lower_bound_rate(rs, bp) == form()

    rs = root_system("G", 2)
    f = lower_bound_rate(rs, boundary_point(rs, 1))
    assert f == form(0, 0, 0, F(3, 2))
    assert f.evaluate(M(1, 1)) == F(3, 2)  # dim G2 - dim sl3 = 6, over 4

    rs = root_system("B", 3)
    f = lower_bound_rate(rs, boundary_point(rs, 3))
    assert f == form(0, 0, 0, F(3, 2))  # three short roots at level one half


def test_exponent_report_assembly():
    rs = root_system("BC", 7)
    rep = exponent_report(rs, 7)
    assert rep.isotropy.classified_affine_type == "C7"
    assert str(rep.leading_character) == "(3|4)"
    assert rep.leading_exponent == form(4, 0, -4, -12)
    assert rep.degeneracy_condition == "m1 = 1"
    assert rep.complex_check is None
    assert rep.degenerate_at(M(1, 5))
    assert not rep.degenerate_at(M(2, 5))


def test_boundary_report_rows():
    for fam, rank in table_data.all_systems(8):
        rs = root_system(fam, rank)
        row = boundary_report(rs)
        want_ext, want_min = table_data.expected_table1(fam, rank)
        assert row.extremal == want_ext
        assert row.minuscule == want_min


def test_table4_full_reproduction():
    for fam, rank in table_data.all_systems(8):
        rs = root_system(fam, rank)
        for bp in extremal_points(rs):
            want = table_data.expected_table4(fam, rank, bp.index)
            rep = exponent_report(rs, bp)
            assert rep.isotropy.classified_affine_type == want["affine_type"]
            assert rep.leading_character == want["sigma"]
            assert rep.leading_exponent.coefficients() == want["coeffs"]
            assert rep.degeneracy_condition == want["condition"]


def test_decay_profile_examples():
    # rank one with multiplicity one: the hyperbolic plane
    rs = root_system("A", 1)
    prof = decay_profile(rs, M(1), 1.0)
    assert prof.dim_x == 2
    assert prof.r_x == -1
    assert prof.s_x == 0 and prof.d_x == 1
    assert prof.directions[0].rate == pytest.approx(2 * math.pi)
    assert prof.poly_exponent == F(1, 2)
    assert prof.log_power == F(1, 2)

    # special-linear style input: unit periods and constants
    rs = root_system("A", 3)
    prof = decay_profile(rs, M(1), 1.0)
    for d in prof.directions:
        assert d.c_alpha == 1
        assert d.rate == pytest.approx(2 * math.pi)

    with pytest.raises(InvalidPeriod):
        decay_profile(rs, M(1), 0.0)
    with pytest.raises(InvalidPeriod):
        decay_profile(rs, M(1), {1: 1.0})


def test_geometric_constants():
    rs = root_system("A", 4)
    for i in range(1, 5):
        assert geometric_c_alpha(rs, i) == 1
    rs = root_system("G", 2)
    # short-root directions reach the boundary earlier
    assert geometric_c_alpha(rs, 1) == F(2, 3)

    rs = root_system("BC", 2)
    # half roots have doubled coroots, so the constant halves
    assert geometric_c_alpha(rs, 2) == F(1, 2)


def test_s_x_is_max_over_eta():
    rs = root_system("B", 4)
    m = M(1)
    prof = decay_profile(rs, m, 1.0)
    vals = [
        leading_exponent(rs, bp, m)[1].evaluate(m) for bp in extremal_points(rs)
    ]
    assert prof.s_x == max(vals)
    assert prof.d_x == 1  # the spin node ties at m = 1


def test_render_forms():
    assert form(1, 0, F(-3, 2)).render() == "1 - 3/2*m1"
    assert form(0).render() == "0"
    assert form(2, 0, -8).render() == "2 - 8*m1"
    assert form(4, 0, -4, -12).render() == "4 - 4*m1 - 12*m2"


def test_degeneracy_condition_strings():
    rs = root_system("E", 8)
    assert degeneracy_condition(rs, boundary_point(rs, 1)) == "m1 = 1"
    assert degeneracy_condition(rs, boundary_point(rs, 2)) == "never"
