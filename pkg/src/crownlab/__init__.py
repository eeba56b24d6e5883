"""crownlab: crown-domain boundary combinatorics and verification lab."""

from .rootsys import (
    BoundaryPoint,
    DiagramGraph,
    IsotropyData,
    Root,
    RootSystemData,
    boundary_point,
    build_root_system,
    classify_diagram,
    extremal_points,
    isotropy_subsystem,
    minuscule_points,
    root_level_census,
    root_system,
)
from .weylchar import (
    BCLabel,
    CharacterLabel,
    DLabel,
    DSplitLabel,
    ExcLabel,
    MultiplicityFunction,
    SymLabel,
    b_invariant,
    dim_irrep,
    induce_trivial,
    j_induce_sign,
    reflection_values,
)
from .exponents import (
    AffineExponentForm,
    DecayProfile,
    ExponentReport,
    boundary_report,
    complex_cross_check,
    decay_profile,
    degeneracy_flag,
    exponent_report,
    exponent_spectrum,
    leading_exponent,
    lower_bound_rate,
)

__version__ = "0.1.0"
