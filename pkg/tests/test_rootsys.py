"""Root system construction, boundary combinatorics, diagram classification."""

from fractions import Fraction

import pytest

from crownlab import polytope
from crownlab.errors import MalformedGraph, NotExtremal, UnsupportedType
from crownlab.rootsys import (
    NOT_FINITE,
    DiagramGraph,
    boundary_point,
    build_root_system,
    classify_diagram,
    extremal_points,
    isotropy_subsystem,
    minuscule_points,
    omega_membership,
    root_level_census,
    root_system,
    weyl_orbit,
)

COUNTS = {
    ("A", 2): 3,
    ("B", 4): 16,
    ("C", 5): 25,
    ("D", 6): 30,
    ("E", 6): 36,
    ("E", 7): 63,
    ("E", 8): 120,
    ("F", 4): 24,
    ("G", 2): 6,
    ("BC", 3): 12,
}


def test_positive_root_counts():
    for (fam, rank), count in COUNTS.items():
        assert len(root_system(fam, rank).positive_roots) == count


def test_a2_basics():
    rs = root_system("A", 2)
    assert len(rs.positive_roots) == 3
    assert rs.highest_root_coeffs == (1, 1)


def test_g2_highest_root():
    assert root_system("G", 2).highest_root_coeffs == (3, 2)


def test_bc1_roots_and_reduced_system():
    rs = root_system("BC", 1)
    tags = sorted((tuple(r.coeffs), r.tag) for r in rs.positive_roots)
    assert tags == [((Fraction(1, 2),), "half"), ((Fraction(1),), "long")]
    assert classify_diagram(DiagramGraph.from_cartan(rs.cartan)) == ("A1",)


def test_half_roots_only_for_bc():
    for fam, rank in COUNTS:
        rs = root_system(fam, rank)
        halves = [r for r in rs.positive_roots if r.tag == "half"]
        assert bool(halves) == (fam == "BC")
        for h in halves:
            doubled = tuple(2 * c for c in h.coeffs)
            assert any(
                r.coeffs == doubled and r.tag == "long" for r in rs.positive_roots
            )


def test_cartan_matrix_validity():
    for fam, rank in COUNTS:
        a = root_system(fam, rank).cartan
        n = len(a)
        for i in range(n):
            assert a[i][i] == 2
            for j in range(n):
                if i != j:
                    assert a[i][j] <= 0
                    assert (a[i][j] == 0) == (a[j][i] == 0)


def test_affine_kernel_identity():
    # the extended matrix annihilates (1, k_1, ..., k_n) from the left
    for fam, rank in COUNTS:
        rs = root_system(fam, rank)
        k = (1,) + rs.highest_root_coeffs
        for j in range(rank + 1):
            assert sum(k[i] * rs.affine_cartan[i][j] for i in range(rank + 1)) == 0


def test_admissibility_errors():
    with pytest.raises(UnsupportedType):
        build_root_system("A", 0)
    with pytest.raises(UnsupportedType):
        build_root_system("D", 3)
    with pytest.raises(UnsupportedType):
        build_root_system("E", 9)
    with pytest.raises(UnsupportedType):
        build_root_system("A", 13)  # rank overflow guard
    with pytest.raises(UnsupportedType):
        build_root_system("H", 3)


def test_extremal_examples():
    assert [bp.label() for bp in extremal_points(root_system("E", 8))] == [
        "w1/2",
        "w2/3",
    ]
    assert [bp.label() for bp in extremal_points(root_system("F", 4))] == ["w4/2"]
    for n in (1, 3, 6):
        assert [bp.index for bp in extremal_points(root_system("A", n))] == list(
            range(1, n + 1)
        )


def test_minuscule_examples():
    assert minuscule_points(root_system("E", 8)) == []
    for n in (2, 5, 8):
        assert [bp.index for bp in minuscule_points(root_system("C", n))] == [n]
    for n in (4, 7):
        assert [bp.index for bp in minuscule_points(root_system("D", n))] == [
            1,
            n - 1,
            n,
        ]


def test_eta_normalization():
    rs = root_system("G", 2)
    bp = boundary_point(rs, 1)
    assert bp.denominator == 3
    # the highest root evaluates to one on eta
    theta = rs.highest_root_coeffs
    assert sum(Fraction(c) * e for c, e in zip(theta, bp.eta)) == 1


def test_classify_path_and_cycle():
    assert classify_diagram(DiagramGraph.simply_laced_path(3)) == ("A3",)
    for n in (3, 5, 8):
        assert classify_diagram(DiagramGraph.simply_laced_cycle(n)) == (NOT_FINITE,)


def test_classify_double_edge_by_arrow():
    # path on 4 nodes, double edge at the end; the arrow fixes B vs C
    b4 = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -2], [0, 0, -1, 2]]
    c4 = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -2, 2]]
    assert classify_diagram(DiagramGraph.from_cartan(b4)) == ("B4",)
    assert classify_diagram(DiagramGraph.from_cartan(c4)) == ("C4",)


def test_classify_reducible_multiset():
    g = DiagramGraph.from_cartan(
        [[2, 0, 0], [0, 2, -1], [0, -1, 2]]
    )
    assert classify_diagram(g) == ("A1", "A2")


def test_malformed_graphs():
    with pytest.raises(MalformedGraph):
        DiagramGraph.from_cartan([[2, -1], [0, 2]])  # asymmetric zero pattern
    with pytest.raises(MalformedGraph):
        DiagramGraph.from_cartan([[1, 0], [0, 2]])
    with pytest.raises(MalformedGraph):
        DiagramGraph.from_cartan([[2, 1], [1, 2]])


def test_isotropy_examples():
    cases = [("E", 7, 2, "A7"), ("B", 3, 3, "A3"), ("G", 2, 1, "A2")]
    for fam, rank, j, expected in cases:
        rs = root_system(fam, rank)
        iso = isotropy_subsystem(rs, boundary_point(rs, j))
        assert iso.classified_affine_type == expected


def test_isotropy_counts_consistent():
    rs = root_system("B", 5)
    iso = isotropy_subsystem(rs, boundary_point(rs, 1))
    level1 = [p for p in iso.affine_vanishing_roots if p[1] == 1]
    assert len(level1) + len(iso.finite_part) == iso.affine_positive_count
    assert iso.classified_finite_type == "B4"


def test_not_extremal_raises():
    rs = root_system("B", 5)
    with pytest.raises(NotExtremal):
        isotropy_subsystem(rs, boundary_point(rs, 3))
    with pytest.raises(NotExtremal):
        root_level_census(rs, boundary_point(rs, 3))


def test_census_examples():
    rs = root_system("E", 6)
    census = root_level_census(rs, boundary_point(rs, 1))
    assert census.complex_level_count == 16

    rs = root_system("A", 3)
    census = root_level_census(rs, boundary_point(rs, 2))
    assert census.complex_level_count == 4
    # independent enumeration: roots e_a - e_b with a <= 2 < b
    count = sum(1 for a in range(1, 3) for b in range(3, 5))
    assert count == 4

    # minuscule points have no strictly intermediate levels over Sigma^l
    for fam, rank in [("A", 4), ("D", 5), ("E", 6), ("C", 3)]:
        rs = root_system(fam, rank)
        for bp in minuscule_points(rs):
            census = root_level_census(rs, bp)
            for lv, (ch, cl, co) in census.weights.items():
                if 0 < lv < 1:
                    assert cl == co == 0  # only half roots may sit in between


def test_omega_membership_three_way():
    rs = root_system("A", 2)
    assert omega_membership(rs, (Fraction(1, 3), Fraction(1, 3))) == "interior"
    ext = extremal_points(rs)[0]
    assert omega_membership(rs, ext.eta) == "boundary"
    assert omega_membership(rs, (2, 0)) == "exterior"


def test_weyl_orbit_guard():
    with pytest.raises(UnsupportedType):
        weyl_orbit(root_system("A", 5), (1, 0, 0, 0, 0))


@pytest.mark.parametrize(
    "fam,rank",
    [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3),
     ("BC", 1), ("BC", 2), ("BC", 3), ("G", 2)],
)
def test_polytope_vertex_oracle(fam, rank):
    rs = root_system(fam, rank)
    orbit = set()
    for bp in extremal_points(rs):
        orbit |= weyl_orbit(rs, bp.eta)
    assert orbit == polytope.polytope_vertices(rs)
