"""Exact computations for Bridgeland-stability Reider bounds on normal surfaces."""

from .bogomolov import (
    CxEstimate,
    ResolutionProfile,
    SingularPointData,
    ade_profile,
    cone_profile,
    cx_continuous,
    cx_integer,
    koseki_base_constant,
)
from .bounds import (
    check_general_vanishing,
    check_stability_hypothesis,
    compare_m_forms,
    fujita_power,
    m,
    m_closed_form,
    m_prime,
    reider_table,
)
from .lattice import (
    DivisorClass,
    SurfaceLattice,
    denominator_bound,
    hodge_index_check,
    intersect,
    mumford_product,
    mumford_pullback,
    validate_lattice,
)
from .stability import (
    ChernCharacter,
    StabilityPoint,
    bridgeland_degree,
    ch_of_twist,
    ch_of_type_O,
    discriminant,
    heart_membership,
    mu_slope,
    scaled_rank,
    slope_compare,
    standard_point,
)
from .walls import SearchWindow, enumerate_candidates, verify_lemma_hodge

__version__ = "0.1.0"
