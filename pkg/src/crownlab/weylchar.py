"""Characters of classical Weyl groups needed for leading-exponent formulas.

Labels follow the classical conventions: partitions for symmetric groups,
ordered bipartitions (lam, mu) for the hyperoctahedral groups W(B_l)=W(C_l),
unordered pairs for W(D_l) with a two-way split when lam == mu.  The two
exceptional groups that occur (E6, E7) are served from a static data table.

The quantities computed here are exactly the ones the exponent formula
consumes: dimensions, b-invariants (lowest degree in the coinvariant algebra
of the group itself), character values on reflections, decompositions of
induced trivial/sign characters for the specific parabolic pairs that arise
at extremal boundary points, and truncated induction of the sign character.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import comb, factorial

from .errors import (
    AmbiguousComponent,
    MissingExceptionalData,
    UnsupportedLabel,
    UnsupportedPair,
)

Partition = tuple[int, ...]


# ---------------------------------------------------------------------------
# Partition helpers
# ---------------------------------------------------------------------------


def as_partition(parts) -> Partition:
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise UnsupportedLabel(f"{parts!r} is not a partition")
    return p


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def nfn(p: Partition) -> int:
    """n(lambda) = sum (i-1) lambda_i, the b-invariant in type A."""
    return sum(i * x for i, x in enumerate(p))


def hook_dim(p: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    n = sum(p)
    if n == 0:
        return 1
    conj = conjugate(p)
    denom = 1
    for i, row in enumerate(p):
        for j in range(row):
            denom *= row - j + conj[j] - i - 1
    return factorial(n) // denom


# ---------------------------------------------------------------------------
# Character labels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymLabel:
    """Irreducible character of a symmetric group, by partition."""

    partition: Partition

    def __post_init__(self):
        object.__setattr__(self, "partition", as_partition(self.partition))

    @property
    def n(self) -> int:
        return sum(self.partition)

    def __str__(self):
        return "(" + ",".join(map(str, self.partition)) + ")"


@dataclass(frozen=True)
class BCLabel:
    """Irreducible character of W(B_l) = W(C_l), by ordered bipartition."""

    lam: Partition
    mu: Partition

    def __post_init__(self):
        object.__setattr__(self, "lam", as_partition(self.lam))
        object.__setattr__(self, "mu", as_partition(self.mu))

    @property
    def n(self) -> int:
        return sum(self.lam) + sum(self.mu)

    def __str__(self):
        lam = ",".join(map(str, self.lam)) or "-"
        mu = ",".join(map(str, self.mu)) or "-"
        return f"({lam}|{mu})"


@dataclass(frozen=True)
class DLabel:
    """Irreducible character of W(D_l) from an unordered pair lam != mu."""

    pair: tuple[Partition, Partition]

    def __post_init__(self):
        a, b = (as_partition(self.pair[0]), as_partition(self.pair[1]))
        if a == b:
            raise UnsupportedLabel("equal pairs must use DSplitLabel")
        object.__setattr__(self, "pair", tuple(sorted((a, b), reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.pair[0]) + sum(self.pair[1])

    def __str__(self):
        a, b = self.pair
        sa = ",".join(map(str, a)) or "-"
        sb = ",".join(map(str, b)) or "-"
        return f"{{{sa}|{sb}}}"


@dataclass(frozen=True)
class DSplitLabel:
    """One of the two components of a self-paired W(D_l) character.

    The sign is relative to the inducing subgroup in context: '+' marks the
    component containing the fixed vector of the relevant S_l.  Both halves
    share dimension, b-invariant and reflection values.
    """

    lam: Partition
    sign: str  # '+' or '-'

    def __post_init__(self):
        object.__setattr__(self, "lam", as_partition(self.lam))
        if self.sign not in ("+", "-"):
            raise UnsupportedLabel("split sign must be '+' or '-'")

    @property
    def n(self) -> int:
        return 2 * sum(self.lam)

    def __str__(self):
        s = ",".join(map(str, self.lam))
        return f"({s}|{s})" + ("'" if self.sign == "+" else "''")


@dataclass(frozen=True)
class ExcLabel:
    group: str  # 'E6' | 'E7'
    name: str  # e.g. 'phi_{20,2}'

    def __str__(self):
        return self.name


CharacterLabel = SymLabel | BCLabel | DLabel | DSplitLabel | ExcLabel


# ---------------------------------------------------------------------------
# Static exceptional data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExceptionalCharRecord:
    group: str
    name: str
    degree: int
    b_invariant: int
    reflection_value: Fraction
    b_det_twist: int
    provenance: str


@lru_cache(maxsize=1)
def exceptional_records() -> dict[tuple[str, str], ExceptionalCharRecord]:
    out = {}
    data = resources.files("crownlab.data").joinpath("exceptional_chars.tsv")
    with data.open("r", encoding="utf-8") as fh:
        reader = csv.DictReader(
            (line for line in fh if not line.startswith("#")), delimiter="\t"
        )
        for row in reader:
            rec = ExceptionalCharRecord(
                group=row["group"],
                name=row["name"],
                degree=int(row["degree"]),
                b_invariant=int(row["b_invariant"]),
                reflection_value=Fraction(row["reflection_value"]),
                b_det_twist=int(row["b_det_twist"]),
                provenance=row["provenance"],
            )
            if rec.b_invariant != int(rec.name.split(",")[-1].rstrip("}")):
                raise MissingExceptionalData(f"bad naming convention in {rec}")
            if rec.degree != int(rec.name.split("{")[1].split(",")[0]):
                raise MissingExceptionalData(f"bad naming convention in {rec}")
            out[(rec.group, rec.name)] = rec
    return out


def _exc_record(label: ExcLabel) -> ExceptionalCharRecord:
    try:
        return exceptional_records()[(label.group, label.name)]
    except KeyError as exc:
        raise MissingExceptionalData(f"no static record for {label}") from exc


# Components of the induced trivial character at the minuscule exceptional
# points, smallest b-invariant last.
EXC_J_LISTS = {
    "E6": ("phi_{1,0}", "phi_{6,1}", "phi_{20,2}"),
    "E7": ("phi_{1,0}", "phi_{7,1}", "phi_{27,2}", "phi_{21,3}"),
}


# ---------------------------------------------------------------------------
# Dimensions, b-invariants, twists
# ---------------------------------------------------------------------------


def _bc_dim(lam: Partition, mu: Partition) -> int:
    return comb(sum(lam) + sum(mu), sum(lam)) * hook_dim(lam) * hook_dim(mu)


def _bc_b(lam: Partition, mu: Partition) -> int:
    return 2 * nfn(lam) + 2 * nfn(mu) + sum(mu)


def dim_irrep(label: CharacterLabel) -> int:
    if isinstance(label, SymLabel):
        return hook_dim(label.partition)
    if isinstance(label, BCLabel):
        return _bc_dim(label.lam, label.mu)
    if isinstance(label, DLabel):
        return _bc_dim(*label.pair)
    if isinstance(label, DSplitLabel):
        return _bc_dim(label.lam, label.lam) // 2
    if isinstance(label, ExcLabel):
        return _exc_record(label).degree
    raise UnsupportedLabel(repr(label))


def b_invariant(label: CharacterLabel) -> int:
    """Lowest degree of the character in its own group's coinvariant algebra.

    Type D uses the minimum over the two orderings of the hyperoctahedral
    formula; split pairs inherit the value of their common bipartition (the
    two halves occur in the same degrees, see the oracle tests).
    """
    if isinstance(label, SymLabel):
        return nfn(label.partition)
    if isinstance(label, BCLabel):
        return _bc_b(label.lam, label.mu)
    if isinstance(label, DLabel):
        a, b = label.pair
        return min(_bc_b(a, b), _bc_b(b, a))
    if isinstance(label, DSplitLabel):
        return _bc_b(label.lam, label.lam)
    if isinstance(label, ExcLabel):
        return _exc_record(label).b_invariant
    raise UnsupportedLabel(repr(label))


def det_twist(label: CharacterLabel) -> CharacterLabel:
    """Tensor with the determinant character of the ambient group."""
    if isinstance(label, SymLabel):
        return SymLabel(conjugate(label.partition))
    if isinstance(label, BCLabel):
        return BCLabel(conjugate(label.mu), conjugate(label.lam))
    if isinstance(label, DLabel):
        a, b = label.pair
        return DLabel((conjugate(a), conjugate(b)))
    if isinstance(label, DSplitLabel):
        return DSplitLabel(conjugate(label.lam), label.sign)
    raise UnsupportedLabel(f"det twist of {label} not needed; use b_det_twist")


def b_of_det_twist(label: CharacterLabel) -> int:
    if isinstance(label, ExcLabel):
        return _exc_record(label).b_det_twist
    return b_invariant(det_twist(label))


# ---------------------------------------------------------------------------
# Reflection values
# ---------------------------------------------------------------------------


def _strip_sum(p: Partition) -> Fraction:
    """Signed sum over 2-strip removals of hook dimensions.

    Equals the symmetric group character chi_p on the class (2, 1^{n-2});
    evaluated through the content formula.
    """
    n = sum(p)
    if n < 2:
        return Fraction(0)
    return Fraction(hook_dim(p) * 2 * (nfn(conjugate(p)) - nfn(p)), n * (n - 1))


def sym_transposition_value(p: Partition) -> Fraction:
    """chi_lambda(transposition), via the content formula."""
    n = sum(p)
    if n < 2:
        return Fraction(hook_dim(p))
    return Fraction(hook_dim(p) * (nfn(conjugate(p)) - nfn(p)), n * (n - 1) // 2)


def bc_flip_value(lam: Partition, mu: Partition) -> Fraction:
    """Character value on a one-coordinate sign flip in W(B_n)."""
    n = sum(lam) + sum(mu)
    return Fraction(_bc_dim(lam, mu) * (sum(lam) - sum(mu)), n)


def bc_transposition_value(lam: Partition, mu: Partition) -> Fraction:
    """Character value on a reflection of transposition type in W(B_n).

    Murnaghan-Nakayama for the wreath product: a positive 2-cycle is removed
    from either component, the rest restricts to W(B_{n-2}).
    """
    n = sum(lam) + sum(mu)
    a, b = sum(lam), sum(mu)
    val = Fraction(0)
    if a >= 2:
        val += comb(n - 2, a - 2) * hook_dim(mu) * _strip_sum(lam)
    if b >= 2:
        val += comb(n - 2, a) * hook_dim(lam) * _strip_sum(mu)
    return val


def reflection_value(label: CharacterLabel, cls: str) -> Fraction:
    """Value on one representative of the reflection class ``cls``.

    ``cls`` is 't' for the transposition-type class and 's' for the sign-flip
    class of the hyperoctahedral groups; groups with a single reflection class
    only accept 't'.
    """
    if isinstance(label, SymLabel):
        if cls != "t":
            raise UnsupportedLabel("symmetric groups have a single reflection class")
        return sym_transposition_value(label.partition)
    if isinstance(label, BCLabel):
        if cls == "s":
            return bc_flip_value(label.lam, label.mu)
        if cls == "t":
            return bc_transposition_value(label.lam, label.mu)
        raise UnsupportedLabel(f"unknown class {cls!r}")
    if isinstance(label, DLabel):
        if cls != "t":
            raise UnsupportedLabel("type D has a single reflection class")
        return bc_transposition_value(*label.pair)
    if isinstance(label, DSplitLabel):
        if cls != "t":
            raise UnsupportedLabel("type D has a single reflection class")
        return bc_transposition_value(label.lam, label.lam) / 2
    if isinstance(label, ExcLabel):
        if cls != "t":
            raise UnsupportedLabel("exceptional groups here are simply laced")
        return _exc_record(label).reflection_value
    raise UnsupportedLabel(repr(label))


@dataclass(frozen=True)
class ReflectionClassDatum:
    """Class tag, size and character value for one reflection class."""

    tag: str
    size: int
    value: Fraction
    degree: int


def reflection_values(label: CharacterLabel, group) -> list[ReflectionClassDatum]:
    """All reflection classes of ``group`` with the values of ``label``.

    ``group`` is ('S', l), ('B', l), ('D', l), ('E6',) or ('E7',).
    """
    deg = dim_irrep(label)
    kind, rank = (group[0], group[1]) if len(group) == 2 else (group[0], None)
    if kind == "S":
        data = [("t", rank * (rank - 1) // 2)]
    elif kind == "B":
        data = [("s", rank), ("t", rank * (rank - 1))]
    elif kind == "D":
        data = [("t", rank * (rank - 1))]
    elif kind == "E6":
        data = [("t", 36)]
    elif kind == "E7":
        data = [("t", 63)]
    else:
        raise UnsupportedLabel(f"unknown group {group!r}")
    out = []
    for tag, size in data:
        v = reflection_value(label, tag)
        if abs(v) > deg:
            raise AssertionError("reflection value exceeds the degree")
        out.append(ReflectionClassDatum(tag, size, v, deg))
    return out


# ---------------------------------------------------------------------------
# Induction of trivial and sign characters for the pairs that occur
# ---------------------------------------------------------------------------

# A pair spec names the parabolic W_eta inside W_eta^a:
#   ('A', j, l)  S_j x S_{l-j} inside S_l
#   ('B', l)     B_{l-1} inside B_l
#   ('C', l)     S_l inside W(C_l)
#   ('D1', l)    D_{l-1} inside D_l
#   ('Dl', l)    S_l inside W(D_l)
#   ('E6',) / ('E7',)   served from the static table


def pair_group(pair) -> tuple:
    kind = pair[0]
    if kind == "A":
        return ("S", pair[2])
    if kind in ("B", "C"):
        return ("B", pair[1])
    if kind in ("D1", "Dl"):
        return ("D", pair[1])
    if kind in ("E6", "E7"):
        return (kind,)
    raise UnsupportedPair(repr(pair))


def pair_index(pair) -> int:
    """Index [W_eta^a : W_eta] of the parabolic subgroup."""
    kind = pair[0]
    if kind == "A":
        _, j, l = pair
        return comb(l, j)
    if kind == "B":
        return 2 * pair[1]
    if kind == "C":
        return 2 ** pair[1]
    if kind == "D1":
        return 2 * pair[1]
    if kind == "Dl":
        return 2 ** (pair[1] - 1)
    if kind == "E6":
        return 27  # |W(E6)| / |W(D5)|
    if kind == "E7":
        return 56  # |W(E7)| / |W(E6)|
    raise UnsupportedPair(repr(pair))


def pair_subgroup_positive_roots(pair) -> int:
    """|Sigma_{eta,+}|, the number of positive roots of W_eta."""
    kind = pair[0]
    if kind == "A":
        _, j, l = pair
        return comb(j, 2) + comb(l - j, 2)
    if kind == "B":
        return (pair[1] - 1) ** 2
    if kind == "C":
        return comb(pair[1], 2)
    if kind == "D1":
        return (pair[1] - 1) * (pair[1] - 2)
    if kind == "Dl":
        return comb(pair[1], 2)
    if kind == "E6":
        return 20  # positive roots of D5
    if kind == "E7":
        return 36  # positive roots of E6
    raise UnsupportedPair(repr(pair))


def induce_trivial(pair) -> list[CharacterLabel]:
    """Decomposition of Ind(trivial) from W_eta to W_eta^a, multiplicity free.

    The classical cases are the two-row Littlewood-Richardson pattern, the
    one-box branching pattern for B_{l-1} in B_l and its D restriction, and
    the one-row bipartition family for S_l inside W(C_l) / W(D_l).
    """
    kind = pair[0]
    if kind == "A":
        _, j, l = pair
        j = min(j, l - j)
        out: list[CharacterLabel] = [
            SymLabel((l - i, i) if i else (l,)) for i in range(j + 1)
        ]
    elif kind == "B":
        l = pair[1]
        out = [
            BCLabel((l,), ()),
            BCLabel((l - 1,), (1,)),
            BCLabel((l - 1, 1), ()),
        ]
    elif kind == "C":
        l = pair[1]
        out = [BCLabel((i,) if i else (), (l - i,) if l - i else ()) for i in range(l + 1)]
    elif kind == "D1":
        l = pair[1]
        if l < 4:
            raise UnsupportedPair("D1 pattern needs rank >= 4")
        out = [
            DLabel(((l,), ())),
            DLabel(((l - 1,), (1,))),
            DLabel(((l - 1, 1), ())),
        ]
    elif kind == "Dl":
        l = pair[1]
        r, odd = divmod(l, 2)
        out = []
        if not odd:
            out.append(DSplitLabel((r,), "+"))
        for i in range(r + 1, l + 1):
            out.append(DLabel(((i,), (l - i,) if l - i else ())))
    elif kind in ("E6", "E7"):
        out = [ExcLabel(kind, name) for name in EXC_J_LISTS[kind]]
    else:
        raise UnsupportedPair(repr(pair))

    total = sum(dim_irrep(t) for t in out)
    if total != pair_index(pair):
        raise AssertionError(
            f"dimension identity fails for {pair}: {total} != {pair_index(pair)}"
        )
    return out


def induce_sign(pair) -> list[CharacterLabel]:
    """Decomposition of Ind(sign of W_eta); the det twist of induce_trivial."""
    if pair[0] in ("E6", "E7"):
        raise UnsupportedPair("sign induction for exceptional pairs is not stored")
    return [det_twist(t) for t in induce_trivial(pair)]


def j_induce_sign(pair) -> CharacterLabel:
    """Leading character: det tensor truncated induction of the sign of W_eta.

    Truncated induction picks the unique component of Ind(sign) whose
    b-invariant equals |Sigma_{eta,+}|; tensoring back with det lands inside
    the decomposition of Ind(trivial).
    """
    target = pair_subgroup_positive_roots(pair)
    candidates = [
        tau for tau in induce_trivial(pair) if b_of_det_twist(tau) == target
    ]
    if len(candidates) != 1:
        raise AmbiguousComponent(
            f"truncated induction for {pair}: {len(candidates)} components "
            f"with twisted b-invariant {target}"
        )
    return candidates[0]


# ---------------------------------------------------------------------------
# Multiplicity functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicityFunction:
    """Multiplicities keyed by Weyl orbit: half roots, long roots, the rest.

    ``symbolic`` means downstream exponents are kept as affine forms and the
    stored values are ignored.
    """

    m_half: Fraction = Fraction(0)
    m_long: Fraction = Fraction(1)
    m_other: Fraction = Fraction(1)
    symbolic: bool = False

    @classmethod
    def numeric(cls, m_long, m_other=None, m_half=0) -> "MultiplicityFunction":
        m_long = Fraction(m_long)
        m_other = m_long if m_other is None else Fraction(m_other)
        return cls(Fraction(m_half), m_long, m_other, symbolic=False)

    @classmethod
    def indeterminate(cls) -> "MultiplicityFunction":
        return cls(symbolic=True)

    def in_cone(self, has_other: bool = True, has_half: bool = True) -> bool:
        """The positivity cone 1 <= m_long (<= m_other), m_half >= 0."""
        if self.symbolic:
            return True
        ok = self.m_long >= 1
        if has_other:
            ok = ok and self.m_other >= self.m_long
        if has_half:
            ok = ok and self.m_half >= 0
        return ok
