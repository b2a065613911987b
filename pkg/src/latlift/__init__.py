"""latlift: finite multiplicative lattices, ideal systems, and wire lifting."""

__version__ = "0.1.0"

from .lattice import (
    CARRIER_CAP,
    ElementFlags,
    FiniteLattice,
    Interval,
    are_isomorphic,
    classify_element,
    enumerate_small_lattices,
    is_domain,
    lattice_from_dict,
    load_lattice,
    verify_lattice,
)
from .lifting import (
    EquivalenceReport,
    FinitaryEmbeddingReport,
    LiftabilityReport,
    LiftResult,
    WireError,
    WireReport,
    analyze_wire,
    check_finitary_embedding,
    check_liftability,
    check_m_wire_ideal_equivalence,
    enumerate_wires,
    finitary_closure,
    lift,
)
from .monoid import (
    POWERSET_CAP,
    ClosureMap,
    FiniteMonoid,
    IdealLattice,
    build_ideal_lattice,
    constant_closure,
    load_monoid,
    monoid_from_dict,
    multiples_closure,
    subset_product,
    verify_finitary,
    verify_ideal_system,
    verify_monoid,
    verify_weak_ideal_system,
)
from .natquad import (
    DivisionClosureReport,
    MWireVerdict,
    QuadOrder,
    SGenReport,
    division_closure_check,
    is_inert,
    is_norm,
    m_wire_verdict,
    nat_join,
    nat_meet,
    nat_residual,
    norm,
    norm_image,
    norm_witness,
    s_wire_check,
)
from .verdicts import LoadError, TheoremViolation, Verdict, Violation

__all__ = [
    "CARRIER_CAP",
    "POWERSET_CAP",
    "ClosureMap",
    "DivisionClosureReport",
    "ElementFlags",
    "EquivalenceReport",
    "FiniteLattice",
    "FiniteMonoid",
    "FinitaryEmbeddingReport",
    "IdealLattice",
    "Interval",
    "LiftResult",
    "LiftabilityReport",
    "LoadError",
    "MWireVerdict",
    "QuadOrder",
    "SGenReport",
    "TheoremViolation",
    "Verdict",
    "Violation",
    "WireError",
    "WireReport",
    "analyze_wire",
    "are_isomorphic",
    "build_ideal_lattice",
    "check_finitary_embedding",
    "check_liftability",
    "check_m_wire_ideal_equivalence",
    "classify_element",
    "constant_closure",
    "division_closure_check",
    "enumerate_small_lattices",
    "enumerate_wires",
    "finitary_closure",
    "is_domain",
    "is_inert",
    "is_norm",
    "lattice_from_dict",
    "lift",
    "load_lattice",
    "load_monoid",
    "m_wire_verdict",
    "monoid_from_dict",
    "multiples_closure",
    "nat_join",
    "nat_meet",
    "nat_residual",
    "norm",
    "norm_image",
    "norm_witness",
    "s_wire_check",
    "subset_product",
    "verify_finitary",
    "verify_ideal_system",
    "verify_lattice",
    "verify_monoid",
    "verify_weak_ideal_system",
]
