"""Exact computer algebra for semirings with a negation map."""

from .scalars import (
    BOTTOM,
    ELT_MINUS_ONE,
    ELT_ONE,
    EltScalar,
    SupertropicalScalar,
    SymPair,
    circ,
    elt,
    nabla,
    supertropical,
    surpasses,
    sym,
)
from .linalg import (
    DEFAULT_GRID,
    LARGE_GRID,
    SMALL_GRID,
    EltPolynomial,
    Matrix,
    Vector,
    elt_determinant,
    identity_matrix,
    is_dependent_det,
    is_dependent_grid,
    mat_mul,
    span_membership_grid,
    unit_vector,
    zero_vector,
)
from .lift import (
    FreeLiftElement,
    PuiseuxSeries,
    dependence_via_lift,
    el_tropicalize,
    free_lift_map,
    monomial,
    verify_lift_laws,
)
from .lie import (
    FreeLieAlgebra,
    IdealGenerators,
    StructureConstants,
    ad_matrix,
    bracket,
    classical_algebra,
    construct_2dim,
    construct_3dim,
    in_center,
    is_abelian,
    is_nilpotent,
    is_solvable,
    negated_commutator,
    verify_axioms,
    verify_strong_jacobi,
)
from .cartan import (
    cartan_check,
    char_poly,
    essential_indices,
    essential_trace,
    is_elt_nilpotent,
    killing_form,
    probe_form_radical,
)
from .pbw import (
    FreeWordElement,
    free_commutator,
    pbw_counterexample,
    verify_strong_jacobi_free,
    word_mul,
)

__all__ = [name for name in dir() if not name.startswith("_")]
