"""Genus-3 Siegel theta constants, boundary-cone coordinates of the toroidal
compactification, vanishing sums of roots of unity, and explicit families of
period matrices in the hyperelliptic locus."""

from .exact import (
    CyclotomicElement,
    GaussianRational,
    RootOfUnity,
    cyclotomic_is_zero,
    cyclotomic_polynomial,
    root_to_complex,
)
from .siegel import (
    AffinePeriodFamily,
    SymplecticMatrix,
    build_varphi,
    evaluate_family,
    is_siegel_point,
    is_symplectic,
    rank_one_K,
    siegel_action,
)
from .theta import (
    Characteristic,
    ThetaValue,
    even_characteristics,
    factor_on_decomposable,
    parity,
    theta,
    theta_constant,
    theta_null,
)
from .cones import (
    Cone,
    boundary_coords,
    cone_catalog,
    cone_valuation,
    get_cone,
    minimal_valuations,
    monomial_exponents,
)
from .fourier_jacobi import (
    fj_rank2_11_series,
    fj_truncate_rank1,
    lot_coefficient,
    lot_monomial,
    lot_numeric_verify,
    lot_secondary_q12,
    lot_secondary_verify,
)
from .roots_of_unity import (
    Relation,
    analyze_L_factors,
    analyze_c4_factor,
    brute_force_vanishing,
    mann_candidate_orders,
    solve_vanishing_sum,
)
from .families import (
    compare_families,
    example_family,
    fixed_part_lattice,
    fj_group_vanishing,
    pi_u,
    relations_check,
    verify_vanishing,
)
from . import z2z4

__version__ = "0.1.0"
