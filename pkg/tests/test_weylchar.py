"""Character formulas against closed forms and the brute-force oracle."""

from fractions import Fraction
from math import comb

import pytest

from crownlab import weylchar as wc
from crownlab.charoracle import _det_sign, char_oracle, subgroup_elements
from crownlab.errors import AmbiguousComponent, UnsupportedLabel, UnsupportedPair


def test_dim_examples():
    assert wc.dim_irrep(wc.SymLabel((2, 1))) == 2
    for l in (4, 6, 7):
        for i in range(l + 1):
            lab = wc.BCLabel((i,) if i else (), (l - i,) if l - i else ())
            assert wc.dim_irrep(lab) == comb(l, i)
    for r in (2, 3, 4):
        assert wc.dim_irrep(wc.DSplitLabel((r,), "+")) == comb(2 * r, r) // 2


def test_b_invariant_examples():
    assert wc.b_invariant(wc.SymLabel((5,))) == 0
    for l in (3, 5, 8):
        assert wc.b_invariant(wc.BCLabel((1,), (1,) * (l - 1))) == (l - 1) ** 2
        for i in range(l + 1):
            lab = wc.BCLabel((i,) if i else (), (l - i,) if l - i else ())
            assert wc.b_invariant(lab) == l - i


def test_b_invariant_sign_induction_family():
    # the minimal twisted b-invariant picks out exactly i = floor(l/2)
    for l in (4, 5, 6, 7):
        values = {}
        for i in range(l + 1):
            lab = wc.BCLabel((1,) * (l - i) if l - i else (), (1,) * i if i else ())
            values[i] = wc.b_invariant(lab)
        assert values == {
            i: (l - i) * (l - i - 1) + i * i for i in range(l + 1)
        }
        assert min(values.values()) == values[l // 2] == l * (l - 1) // 2


def test_induce_trivial_patterns():
    assert wc.induce_trivial(("A", 2, 5)) == [
        wc.SymLabel((5,)),
        wc.SymLabel((4, 1)),
        wc.SymLabel((3, 2)),
    ]
    assert wc.induce_trivial(("B", 4)) == [
        wc.BCLabel((4,), ()),
        wc.BCLabel((3,), (1,)),
        wc.BCLabel((3, 1), ()),
    ]
    assert wc.induce_trivial(("C", 3)) == [
        wc.BCLabel((), (3,)),
        wc.BCLabel((1,), (2,)),
        wc.BCLabel((2,), (1,)),
        wc.BCLabel((3,), ()),
    ]
    js = wc.induce_trivial(("Dl", 4))
    assert wc.DSplitLabel((2,), "+") in js
    assert wc.DLabel(((3,), (1,))) in js and wc.DLabel(((4,), ())) in js


def test_induction_dimension_identity():
    for pair in [("A", 3, 7), ("B", 6), ("C", 6), ("D1", 6), ("Dl", 6), ("Dl", 7), ("E6",), ("E7",)]:
        total = sum(wc.dim_irrep(t) for t in wc.induce_trivial(pair))
        assert total == wc.pair_index(pair)


def test_j_induce_examples():
    assert wc.j_induce_sign(("A", 2, 7)) == wc.SymLabel((5, 2))
    assert wc.j_induce_sign(("B", 5)) == wc.BCLabel((4,), (1,))
    assert wc.j_induce_sign(("C", 4)) == wc.BCLabel((2,), (2,))
    assert wc.j_induce_sign(("C", 7)) == wc.BCLabel((3,), (4,))
    assert wc.j_induce_sign(("D1", 6)) == wc.DLabel(((5, 1), ()))
    assert wc.j_induce_sign(("Dl", 6)) == wc.DSplitLabel((3,), "+")
    assert wc.j_induce_sign(("E6",)) == wc.ExcLabel("E6", "phi_{20,2}")
    assert wc.j_induce_sign(("E7",)) == wc.ExcLabel("E7", "phi_{21,3}")


def test_reflection_value_examples():
    assert wc.reflection_value(wc.SymLabel((1, 1)), "t") == -1
    assert wc.reflection_value(wc.ExcLabel("E6", "phi_{20,2}"), "t") == 10
    # standard representation of S_l on a transposition
    for l in (4, 6, 9):
        assert wc.reflection_value(wc.SymLabel((l - 1, 1)), "t") == l - 3
    # flip value scales with |lam| - |mu|
    lab = wc.BCLabel((3,), (1,))
    assert wc.reflection_value(lab, "s") == wc.dim_irrep(lab) * Fraction(2, 4)


def test_reflection_datum_bounds():
    for lab, grp in [
        (wc.SymLabel((3, 2)), ("S", 5)),
        (wc.BCLabel((2, 1), (1,)), ("B", 4)),
        (wc.DLabel(((3,), (1,))), ("D", 4)),
        (wc.DSplitLabel((2,), "-"), ("D", 4)),
        (wc.ExcLabel("E7", "phi_{27,2}"), ("E7",)),
    ]:
        for datum in wc.reflection_values(lab, grp):
            assert abs(datum.value) <= datum.degree


def test_label_validation():
    with pytest.raises(UnsupportedLabel):
        wc.SymLabel((1, 2))
    with pytest.raises(UnsupportedLabel):
        wc.DLabel(((2,), (2,)))
    with pytest.raises(UnsupportedLabel):
        wc.DSplitLabel((2,), "x")
    with pytest.raises(UnsupportedPair):
        wc.induce_trivial(("Z", 3))


# ---------------------------------------------------------------------------
# Oracle agreement
# ---------------------------------------------------------------------------


def _partitions(n, cap=None):
    cap = cap or n
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _fingerprints_library(kind, rank):
    if kind == "S":
        labels = [wc.SymLabel(p) for p in _partitions(rank)]
    elif kind == "B":
        labels = [
            wc.BCLabel(lam, mu)
            for a in range(rank + 1)
            for lam in _partitions(a)
            for mu in _partitions(rank - a)
        ]
    else:
        raise ValueError(kind)
    grp = (kind, rank)
    out = []
    for lab in labels:
        data = wc.reflection_values(lab, grp)
        out.append(
            (
                wc.dim_irrep(lab),
                wc.b_invariant(lab),
                tuple(int(d.value) for d in sorted(data, key=lambda d: d.tag)),
            )
        )
    return sorted(out)


@pytest.mark.parametrize("kind,rank", [("S", 2), ("S", 3), ("S", 4), ("S", 5), ("B", 2), ("B", 3)])
def test_oracle_table_agreement(kind, rank):
    g = char_oracle(kind, rank)
    refl = g.reflection_classes()
    oracle = sorted(
        (
            c.degree,
            c.b_invariant,
            tuple(int(c.values[refl[t]]) for t in sorted(refl)),
        )
        for c in g.characters
    )
    assert oracle == _fingerprints_library(kind, rank)


def test_oracle_resolves_birthday_discrepancy():
    """The closed form (l-i)(l-i-1) + i^2 wins over l(l-1) + i(2l-1-2i)."""
    g = char_oracle("B", 3)
    l = 3
    for i in (1, 2):
        lab = wc.BCLabel((1,) * (l - i), (1,) * i)
        target_dim = wc.dim_irrep(lab)
        ours = wc.b_invariant(lab)
        assert ours == (l - i) * (l - i - 1) + i * i
        competing = l * (l - 1) + i * ((2 * l - 1) - 2 * i)
        matches = [
            c.b_invariant
            for c in g.characters
            if c.degree == target_dim and c.b_invariant == ours
        ]
        assert matches, "oracle does not contain the computed b-invariant"
        assert ours != competing


def test_oracle_d4_splits_share_b_invariant():
    g = char_oracle("D", 4)
    dim3 = sorted(c.b_invariant for c in g.characters if c.degree == 3)
    # triality orbit {(3,1)|-}, (2,2)+, (2,2)- at b=2 and its twist at b=6
    assert dim3 == [2, 2, 2, 6, 6, 6]
    assert wc.b_invariant(wc.DSplitLabel((2,), "+")) == 2
    assert wc.b_invariant(wc.DSplitLabel((2,), "-")) == 2
    assert wc.b_invariant(wc.DSplitLabel((1, 1), "+")) == 6


@pytest.mark.parametrize(
    "kind,rank,pair",
    [
        ("S", 5, ("A", 2, 5)),
        ("S", 4, ("A", 1, 4)),
        ("B", 3, ("B", 3)),
        ("B", 3, ("C", 3)),
        ("B", 2, ("C", 2)),
        ("D", 4, ("Dl", 4)),
        ("D", 4, ("D1", 4)),
    ],
)
def test_oracle_inductions(kind, rank, pair):
    g = char_oracle(kind, rank)
    members = subgroup_elements(g, pair)
    for sign in (False, True):
        fn = (lambda y: Fraction(_det_sign(y))) if sign else (lambda y: Fraction(1))
        decomposition = g.decompose(g.induced_character(members, fn))
        assert all(mult == 1 for _, mult in decomposition)
        got = sorted((c.degree, c.b_invariant) for c, _ in decomposition)
        labels = wc.induce_sign(pair) if sign else wc.induce_trivial(pair)
        assert got == sorted((wc.dim_irrep(t), wc.b_invariant(t)) for t in labels)


def test_oracle_sigma_via_truncation():
    """j-induction agrees with picking minimal b inside the oracle Ind(sign)."""
    for kind, rank, pair in [("B", 3, ("C", 3)), ("S", 5, ("A", 2, 5)), ("D", 4, ("Dl", 4))]:
        g = char_oracle(kind, rank)
        members = subgroup_elements(g, pair)
        ind = g.decompose(g.induced_character(members, lambda y: Fraction(_det_sign(y))))
        target = wc.pair_subgroup_positive_roots(pair)
        matches = [c for c, _ in ind if c.b_invariant == target]
        assert len(matches) == 1
        sigma = wc.j_induce_sign(pair)
        twisted_dim = wc.dim_irrep(sigma)
        assert matches[0].degree == twisted_dim


def test_harmonic_birthday_in_ambient_group():
    """Lowest occurrence inside the ambient coinvariants equals the own-group
    b-invariant.

    The isotropy group of the halved spin node of B3 is the D3 = S4 subgroup
    generated by the reflections in e_i +/- e_j.  For every irreducible of
    that subgroup, the first degree where it appears in the B3 coinvariant
    algebra (graded by Molien series over the subgroup classes) must agree
    with its birthday in the subgroup's own coinvariants.
    """
    from fractions import Fraction as Fr

    from crownlab.charoracle import BruteForceWeylGroup, _series_inverse

    d3 = BruteForceWeylGroup("D", 3)
    n_max = 9  # positive roots of B3
    graded = []
    for c in d3.classes:
        graded.append(_series_inverse(d3._char_poly_coeffs(c[0]), n_max))
    factor = [Fr(1)] + [Fr(0)] * n_max
    for d in (2, 4, 6):  # degrees of B3
        nxt = list(factor)
        for i in range(0, n_max + 1 - d):
            nxt[i + d] -= factor[i]
        factor = nxt
    for ch in d3.characters:
        lowest = None
        for deg in range(n_max + 1):
            tot = sum(
                d3.class_sizes[j]
                * ch.values[d3.inverse_class[j]]
                * sum(factor[i] * graded[j][deg - i] for i in range(deg + 1))
                for j in range(len(d3.classes))
            )
            mult = tot / d3.order
            assert mult.denominator == 1 and mult >= 0
            if mult and lowest is None:
                lowest = deg
        assert lowest == ch.b_invariant
