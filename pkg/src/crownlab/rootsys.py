"""Irreducible restricted root systems and the crown polytope.

Conventions used throughout:

* Roots are stored as rational coefficient vectors over the simple roots of
  the reduced system ``Sigma^l`` of unmultipliable roots (Bourbaki numbering).
  For the non-reduced family ``BC_n`` the reduced system is ``C_n`` and the
  multipliable roots ``e_i`` enter with half-integral coefficients and orbit
  tag ``half``.
* A boundary point ``eta = omega_j / k_j`` is stored in the coweight basis,
  i.e. as the vector ``(alpha_1(eta), ..., alpha_n(eta))``, so evaluating a
  root on ``eta`` is the single exact lookup ``coeffs[j-1] / k_j``.
* Orbit tags: ``long`` marks unmultipliable roots of maximal length, ``other``
  the remaining unmultipliable roots, ``half`` the halves of long roots.
  The tags index the multiplicity coordinates (m_long, m_other, m_half).

All combinatorics is exact over ``fractions.Fraction``; no floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import MalformedGraph, NotExtremal, UnsupportedType

NOT_FINITE = "not finite type"

ADMISSIBLE_RANKS = {
    "A": range(1, 13),
    "B": range(2, 13),
    "C": range(2, 13),
    "D": range(4, 13),
    "E": range(6, 9),
    "F": range(4, 5),
    "G": range(2, 3),
    "BC": range(1, 13),
}

_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
    "BC": lambda n: n * n + n,
}


def _chain(n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix A[i][j] = <alpha_i, alpha_j^vee> of the reduced system."""
    n = rank
    if family == "A":
        a = _chain(n)
    elif family == "B":
        a = _chain(n)
        a[n - 2][n - 1] = -2  # alpha_{n-1} long, alpha_n short
        a[n - 1][n - 2] = -1
    elif family in ("C", "BC"):
        a = _chain(n)
        if n >= 2:
            a[n - 2][n - 1] = -1  # alpha_n is the long root 2e_n
            a[n - 1][n - 2] = -2
    elif family == "D":
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif family == "E":
        a = _chain(n)
        # Bourbaki: node 2 hangs off node 4; the chain is 1-3-4-...-n.
        a[0][1] = a[1][0] = 0
        a[1][2] = a[2][1] = 0
        a[0][2] = a[2][0] = -1
        a[1][3] = a[3][1] = -1
    elif family == "F":
        a = _chain(4)
        a[1][2] = -2  # alpha_2 long, alpha_3 short
        a[2][1] = -1
    elif family == "G":
        a = [[2, -1], [-3, 2]]  # alpha_1 short, alpha_2 long
    else:
        raise UnsupportedType(f"unknown family {family!r}")
    return tuple(tuple(row) for row in a)


def _simple_norms(cartan: tuple[tuple[int, ...], ...]) -> tuple[Fraction, ...]:
    """Squared lengths (alpha_i, alpha_i), normalised so short roots have 2."""
    n = len(cartan)
    norm = [None] * n
    norm[0] = Fraction(2)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i != j and cartan[i][j] != 0 and norm[i] is not None and norm[j] is None:
                    # (a_i,a_i)/(a_j,a_j) = A_ji / A_ij
                    norm[j] = norm[i] * cartan[j][i] / cartan[i][j]
                    changed = True
    if any(v is None for v in norm):
        raise MalformedGraph("disconnected Cartan matrix")
    scale = Fraction(2) / min(norm)
    return tuple(v * scale for v in norm)


@dataclass(frozen=True)
class Root:
    """A root written over the simple roots of the reduced system."""

    coeffs: tuple[Fraction, ...]
    tag: str  # 'long' | 'other' | 'half'

    def height(self) -> Fraction:
        return sum(self.coeffs)


@dataclass(frozen=True)
class BoundaryPoint:
    """A candidate vertex omega_j / k_j of the crown polytope."""

    index: int  # 1-based simple-root index j
    denominator: int  # k_j
    eta: tuple[Fraction, ...]  # coweight coordinates alpha_i(eta)
    extremal: bool
    minuscule: bool

    def label(self) -> str:
        if self.denominator == 1:
            return f"w{self.index}"
        return f"w{self.index}/{self.denominator}"


@dataclass(frozen=True)
class RootSystemData:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    simple_norm2: tuple[Fraction, ...]
    positive_roots: tuple[Root, ...]
    highest_root_coeffs: tuple[int, ...]
    affine_cartan: tuple[tuple[int, ...], ...]  # index 0 is the affine node

    # -- bilinear form helpers ------------------------------------------------

    def inner(self, c1, c2) -> Fraction:
        tot = Fraction(0)
        for i, x in enumerate(c1):
            if x == 0:
                continue
            for j, y in enumerate(c2):
                if y == 0:
                    continue
                tot += x * y * self.cartan[i][j] * self.simple_norm2[j] / 2
        return tot

    def norm2(self, coeffs) -> Fraction:
        return self.inner(coeffs, coeffs)

    def cartan_int(self, c1, c2) -> Fraction:
        """<c1, c2^vee> = 2 (c1, c2) / (c2, c2)."""
        return 2 * self.inner(c1, c2) / self.norm2(c2)

    # -- views ----------------------------------------------------------------

    @property
    def is_reduced(self) -> bool:
        return self.family != "BC"

    def reduced_positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.positive_roots if r.tag != "half")

    def orbit_tags(self) -> set[str]:
        return {r.tag for r in self.positive_roots}

    def type_label(self) -> str:
        return f"{self.family}{self.rank}"


def _positive_roots_reduced(cartan) -> list[tuple[Fraction, ...]]:
    """All positive roots of the reduced system, by height closure."""
    n = len(cartan)
    simples = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    layers = {1: set(simples)}
    known = set(simples)
    h = 1
    while layers.get(h):
        nxt = set()
        for gamma in layers[h]:
            for i in range(n):
                k = sum(gamma[j] * cartan[j][i] for j in range(n))
                p = 0
                cur = gamma
                while True:
                    cur = tuple(c - s for c, s in zip(cur, simples[i]))
                    if cur in known:
                        p += 1
                    else:
                        break
                if p - k > 0:
                    cand = tuple(c + s for c, s in zip(gamma, simples[i]))
                    if cand not in known:
                        nxt.add(cand)
                        known.add(cand)
        if nxt:
            layers[h + 1] = nxt
        h += 1
    return sorted(known, key=lambda c: (sum(c), c))


def build_root_system(family: str, rank: int) -> RootSystemData:
    """Construct an irreducible (possibly non-reduced) restricted root system."""
    family = family.upper()
    if family not in ADMISSIBLE_RANKS:
        raise UnsupportedType(f"unknown family {family!r}")
    if rank not in ADMISSIBLE_RANKS[family]:
        raise UnsupportedType(f"({family}, {rank}) is not an admissible irreducible pair")

    cm = cartan_matrix(family, rank)
    norms = _simple_norms(cm)
    coeff_vectors = _positive_roots_reduced(cm)

    probe = RootSystemData(family, rank, cm, norms, (), (), ())
    max_norm = max(probe.norm2(c) for c in coeff_vectors)
    roots = []
    for c in coeff_vectors:
        tag = "long" if probe.norm2(c) == max_norm else "other"
        roots.append(Root(c, tag))
    if family == "BC":
        for c in coeff_vectors:
            if probe.norm2(c) == max_norm:
                roots.append(Root(tuple(x / 2 for x in c), "half"))

    highest = max(coeff_vectors, key=lambda c: sum(c))
    k = tuple(int(x) for x in highest)

    # Extended Cartan matrix; node 0 has gradient -theta.
    grads = [tuple(-x for x in highest)] + [
        tuple(Fraction(int(i == j)) for j in range(rank)) for i in range(rank)
    ]
    aff = tuple(
        tuple(int(probe.cartan_int(grads[i], grads[j])) for j in range(rank + 1))
        for i in range(rank + 1)
    )

    rs = RootSystemData(family, rank, cm, norms, tuple(roots), k, aff)
    expected = _POSITIVE_COUNT[family](rank)
    if len(rs.positive_roots) != expected:
        raise AssertionError(f"positive root count {len(rs.positive_roots)} != {expected}")
    return rs


@lru_cache(maxsize=None)
def _cached_system(family: str, rank: int) -> RootSystemData:
    return build_root_system(family, rank)


def root_system(family: str, rank: int) -> RootSystemData:
    """Memoised accessor; systems are immutable so sharing is safe."""
    return _cached_system(family.upper(), rank)


# ---------------------------------------------------------------------------
# Diagram classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiagramGraph:
    """A marked Coxeter diagram given by a generalized Cartan matrix."""

    cartan: tuple[tuple[int, ...], ...]

    @classmethod
    def from_cartan(cls, rows) -> "DiagramGraph":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise MalformedGraph("cartan matrix is not square")
        for i in range(n):
            if rows[i][i] != 2:
                raise MalformedGraph("diagonal entries must equal 2")
            for j in range(n):
                if i != j:
                    if rows[i][j] > 0:
                        raise MalformedGraph("off-diagonal entries must be <= 0")
                    if (rows[i][j] == 0) != (rows[j][i] == 0):
                        raise MalformedGraph("zero pattern must be symmetric")
        return cls(rows)

    @classmethod
    def simply_laced_path(cls, n: int) -> "DiagramGraph":
        return cls.from_cartan(_chain(n))

    @classmethod
    def simply_laced_cycle(cls, n: int) -> "DiagramGraph":
        a = _chain(n)
        a[0][n - 1] = a[n - 1][0] = -1
        return cls.from_cartan(a)

    def components(self) -> list[list[int]]:
        n = len(self.cartan)
        seen, comps = set(), []
        for start in range(n):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in range(n):
                    if w not in seen and w != v and self.cartan[v][w] != 0:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


def _classify_component(g: DiagramGraph, nodes: list[int]) -> str:
    a = g.cartan
    n = len(nodes)
    if n == 1:
        return "A1"
    edges = []
    for u, v in itertools.combinations(nodes, 2):
        if a[u][v] != 0:
            edges.append((u, v, a[u][v] * a[v][u]))
    if any(m > 3 for *_, m in edges) or len(edges) != n - 1:
        return NOT_FINITE  # cycle, multi-edge bundle, or affine-type marks
    deg = {v: 0 for v in nodes}
    for u, v, _ in edges:
        deg[u] += 1
        deg[v] += 1
    if max(deg.values()) > 3:
        return NOT_FINITE
    branch = [v for v in nodes if deg[v] == 3]
    triples = [e for e in edges if e[2] == 3]
    doubles = [e for e in edges if e[2] == 2]

    if triples:
        return "G2" if n == 2 and not doubles else NOT_FINITE
    if len(doubles) > 1:
        return NOT_FINITE
    if doubles:
        if branch:
            return NOT_FINITE
        u, v, _ = doubles[0]
        end_touch = deg[u] == 1 or deg[v] == 1
        if n == 2:
            return "C2"  # B2 and C2 coincide; canonical label C2
        if end_touch:
            # |A_uv| > |A_vu| means u is the longer root
            end, innr = (u, v) if deg[u] == 1 else (v, u)
            longer_is_end = abs(a[end][innr]) > abs(a[innr][end])
            return f"{'C' if longer_is_end else 'B'}{n}"
        if n == 4 and deg[u] == 2 and deg[v] == 2:
            return "F4"
        return NOT_FINITE
    # simply laced
    if not branch:
        return f"A{n}"
    if len(branch) > 1:
        return NOT_FINITE
    b = branch[0]
    adj = {v: [w for w in nodes if w != v and a[v][w] != 0] for v in nodes}
    arms = []
    for nb in adj[b]:
        ln, prev, cur = 1, b, nb
        while deg[cur] == 2:
            nxt = [w for w in adj[cur] if w != prev][0]
            prev, cur = cur, nxt
            ln += 1
        arms.append(ln)
    arms.sort()
    if arms[0] == arms[1] == 1:
        return f"D{n}"
    if arms == [1, 2, 2]:
        return "E6"
    if arms == [1, 2, 3]:
        return "E7"
    if arms == [1, 2, 4]:
        return "E8"
    return NOT_FINITE


def classify_diagram(graph: DiagramGraph) -> tuple[str, ...]:
    """Dynkin type of a marked diagram as a multiset of irreducible labels.

    Returns ``(NOT_FINITE,)`` when any component fails to be of finite type.
    Rank-2 double-edge components are canonicalised to ``C2`` and ``D3`` never
    occurs (three-node simply-laced components classify as ``A3``).
    """
    labels = []
    for comp in graph.components():
        lab = _classify_component(graph, comp)
        if lab == NOT_FINITE:
            return (NOT_FINITE,)
        labels.append(lab)
    return tuple(sorted(labels))


# ---------------------------------------------------------------------------
# Boundary points of the crown polytope
# ---------------------------------------------------------------------------


def _affine_connected_without(rs: RootSystemData, j: int) -> bool:
    nodes = [i for i in range(rs.rank + 1) if i != j]
    if not nodes:
        return True
    adj = {v: [w for w in nodes if w != v and rs.affine_cartan[v][w] != 0] for v in nodes}
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nodes)


def boundary_point(rs: RootSystemData, j: int) -> BoundaryPoint:
    if not 1 <= j <= rs.rank:
        raise UnsupportedType(f"node index {j} out of range")
    k = rs.highest_root_coeffs[j - 1]
    eta = tuple(
        Fraction(1, k) if i == j - 1 else Fraction(0) for i in range(rs.rank)
    )
    ext = _affine_connected_without(rs, j)
    return BoundaryPoint(j, k, eta, ext, ext and k == 1)


def extremal_points(rs: RootSystemData) -> list[BoundaryPoint]:
    """The vertices omega_j/k_j of the crown polytope inside the closed chamber.

    A node qualifies exactly when deleting it from the affine diagram leaves
    a connected graph.
    """
    return [bp for j in range(1, rs.rank + 1) if (bp := boundary_point(rs, j)).extremal]


def minuscule_points(rs: RootSystemData) -> list[BoundaryPoint]:
    return [bp for bp in extremal_points(rs) if bp.minuscule]


def root_level(root: Root, bp: BoundaryPoint) -> Fraction:
    return root.coeffs[bp.index - 1] / bp.denominator


def omega_membership(rs: RootSystemData, point) -> str:
    """Three-way membership verdict for the polytope {|alpha(Y)| <= 1}.

    ``point`` is given in coweight coordinates (values on the simple roots).
    """
    point = tuple(Fraction(x) for x in point)
    worst = max(
        abs(sum(c * p for c, p in zip(r.coeffs, point)))
        for r in rs.reduced_positive_roots()
    )
    if worst < 1:
        return "interior"
    if worst == 1:
        return "boundary"
    return "exterior"


def weyl_orbit(rs: RootSystemData, vec, max_rank: int = 4) -> set[tuple[Fraction, ...]]:
    """Weyl orbit of a coweight-coordinate vector by simple-reflection closure.

    Guarded to small rank; the order of W grows too quickly beyond that.
    """
    if rs.rank > max_rank:
        raise UnsupportedType(f"weyl_orbit limited to rank <= {max_rank}")
    start = tuple(Fraction(x) for x in vec)
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rs.rank):
                w = tuple(
                    v[j] - v[i] * rs.cartan[j][i] for j in range(rs.rank)
                )
                if w not in orbit:
                    orbit.add(w)
                    nxt.append(w)
        frontier = nxt
    return orbit


# ---------------------------------------------------------------------------
# Isotropy data at a boundary point
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReflectionClassGeometry:
    """One conjugacy class of reflections of the isotropy group W_eta^a.

    ``members`` lists the vanishing affine roots (root, level) in the class;
    ``m_weights`` gives the affine multiplicity of the class as coefficients
    (c_half, c_long, c_other) of the multiplicity coordinates.
    """

    norm2: Fraction
    size: int
    members: tuple[tuple[Root, int], ...]
    m_weights: tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class IsotropyData:
    eta: BoundaryPoint
    affine_vanishing_roots: tuple[tuple[Root, int], ...]
    finite_part: tuple[Root, ...]
    classified_affine_type: str
    classified_finite_type: str
    classes: tuple[ReflectionClassGeometry, ...]
    finite_positive_count: int  # |Sigma_{eta,+}|, roots of W_eta

    @property
    def affine_positive_count(self) -> int:
        return len(self.affine_vanishing_roots)


def _affine_m_weights(rs: RootSystemData, root: Root, level: int):
    """Coefficients (c_half, c_long, c_other) of the affine multiplicity.

    The affine multiplicity of (alpha, n) is m_alpha plus, when alpha/2 is a
    root and the shift n is even, the multiplicity of alpha/2. Parity only
    matters for the orbits where translations move the shift by 2.
    """
    c_half = Fraction(0)
    c_long = Fraction(1) if root.tag == "long" else Fraction(0)
    c_other = Fraction(1) if root.tag == "other" else Fraction(0)
    if level % 2 == 0 and root.tag == "long" and not rs.is_reduced:
        half = tuple(x / 2 for x in root.coeffs)
        if any(r.coeffs == half and r.tag == "half" for r in rs.positive_roots):
            c_half = Fraction(1)
    return (c_half, c_long, c_other)


def isotropy_subsystem(rs: RootSystemData, bp: BoundaryPoint) -> IsotropyData:
    """Positive affine roots vanishing at eta, classified, with class data."""
    if not bp.extremal:
        raise NotExtremal(f"{bp.label()} is not an extremal point of the polytope")

    level0, level1 = [], []
    for r in rs.reduced_positive_roots():
        lv = root_level(r, bp)
        if lv == 0:
            level0.append(r)
        elif lv == 1:
            level1.append(r)
    pairs = tuple([(r, 0) for r in level0] + [(r, 1) for r in level1])

    j = bp.index
    finite_simples = [
        tuple(Fraction(int(i == t)) for t in range(rs.rank))
        for i in range(rs.rank)
        if i != j - 1
    ]
    theta = tuple(Fraction(c) for c in rs.highest_root_coeffs)
    affine_simples = [tuple(-x for x in theta)] + finite_simples

    def classify_simples(simples):
        if not simples:
            return ""
        cm = [
            [int(rs.cartan_int(s, t)) for t in simples]
            for s in simples
        ]
        return "+".join(classify_diagram(DiagramGraph.from_cartan(cm)))

    aff_type = classify_simples(affine_simples)
    fin_type = classify_simples(finite_simples)

    groups: dict[Fraction, list[tuple[Root, int]]] = {}
    for r, lv in pairs:
        groups.setdefault(rs.norm2(r.coeffs), []).append((r, lv))
    classes = []
    for norm, members in sorted(groups.items()):
        weights = {_affine_m_weights(rs, r, lv) for r, lv in members}
        if len(weights) != 1:
            raise AssertionError("affine multiplicity not constant on a class")
        classes.append(
            ReflectionClassGeometry(norm, len(members), tuple(members), weights.pop())
        )

    return IsotropyData(
        eta=bp,
        affine_vanishing_roots=pairs,
        finite_part=tuple(level0),
        classified_affine_type=aff_type,
        classified_finite_type=fin_type,
        classes=tuple(classes),
        finite_positive_count=len(level0),
    )


@dataclass(frozen=True)
class LevelCensus:
    """Root counts of the full system Sigma by level at a boundary point."""

    counts: dict  # Fraction level -> int
    weights: dict  # Fraction level -> (c_half, c_long, c_other)
    complex_level_count: int  # level-1 count over the reduced system

    def weighted(self, m) -> dict:
        out = {}
        for lv, (ch, cl, co) in self.weights.items():
            out[lv] = ch * m.m_half + cl * m.m_long + co * m.m_other
        return out


def root_level_census(rs: RootSystemData, bp: BoundaryPoint, m=None) -> LevelCensus:
    if not bp.extremal:
        raise NotExtremal(f"{bp.label()} is not an extremal point of the polytope")
    counts: dict = {}
    weights: dict = {}
    for r in rs.positive_roots:
        lv = root_level(r, bp)
        counts[lv] = counts.get(lv, 0) + 1
        ch, cl, co = weights.get(lv, (Fraction(0),) * 3)
        weights[lv] = (
            ch + (r.tag == "half"),
            cl + (r.tag == "long"),
            co + (r.tag == "other"),
        )
    complex_count = sum(
        1 for r in rs.reduced_positive_roots() if root_level(r, bp) == 1
    )
    return LevelCensus(counts, weights, complex_count)
