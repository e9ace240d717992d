"""Separable-ball radius bounds and separability certificates.

Lower bounds on the radius of the ball of separable (unentangled) matrices
around the identity for multipartite systems, certificates for concrete
density matrices, induced norms of Schur-product maps, the extremal
ball-positive map construction, coefficient-of-symmetry geometry, and NMR
entanglement thresholds.
"""

from __future__ import annotations

from .ballbounds import (
    RadiusReport,
    closed_form_radius,
    gamma_bound,
    gb03_baseline,
    lambda_bound,
    lambdaprime_bound,
    normalized_radius,
    qubit_asymptotic_exponent,
    qubit_normalized_radius,
    radius_report,
    recursion_radius,
    weak_radius,
)
from .certify import (
    Certificate,
    certify_normalized,
    certify_pseudopure,
    certify_unnormalized,
    mu,
    ppt_all_cuts,
    pseudopure_bound,
)
from .extremal import (
    achieved_ratio,
    ball_positivity_check,
    block_chain_check,
    build_tau,
    critical_mu,
    worst_case_input,
)
from .geometry import (
    ConvexWitness,
    john_ball_figures,
    mes_symmetry_witness,
    sep_symmetry_coefficient,
    sep_symmetry_witness,
    unitary_basis,
)
from .matcore import (
    MapOnMatrices,
    MaterializationError,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
    partial_transpose,
    save_matrix,
)
from .nmr import (
    NmrParams,
    pseudopure_epsilon,
    pseudopure_threshold,
    thermal_deviation_norm,
    thermal_state,
    thermal_threshold,
)
from .schurnorm import (
    SimplexQPResult,
    ds_schur_majorization_check,
    l_matrix,
    l_matrix_norm,
    majorizes,
    nielsen_kempe_check,
    oracle_two_inf_norm,
    schur_two_inf_norm,
    simplex_qp_max,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "ConvexWitness",
    "MapOnMatrices",
    "MaterializationError",
    "NmrParams",
    "RadiusReport",
    "SimplexQPResult",
    "achieved_ratio",
    "ball_positivity_check",
    "block_chain_check",
    "build_tau",
    "certify_normalized",
    "certify_pseudopure",
    "certify_unnormalized",
    "closed_form_radius",
    "critical_mu",
    "ds_schur_majorization_check",
    "gamma_bound",
    "gb03_baseline",
    "john_ball_figures",
    "l_matrix",
    "l_matrix_norm",
    "lambda_bound",
    "lambdaprime_bound",
    "load_matrix",
    "majorizes",
    "matrix_from_json",
    "matrix_to_json",
    "mes_symmetry_witness",
    "mu",
    "nielsen_kempe_check",
    "normalized_radius",
    "oracle_two_inf_norm",
    "partial_transpose",
    "ppt_all_cuts",
    "pseudopure_bound",
    "pseudopure_epsilon",
    "pseudopure_threshold",
    "qubit_asymptotic_exponent",
    "qubit_normalized_radius",
    "radius_report",
    "recursion_radius",
    "save_matrix",
    "schur_two_inf_norm",
    "sep_symmetry_coefficient",
    "sep_symmetry_witness",
    "simplex_qp_max",
    "thermal_deviation_norm",
    "thermal_state",
    "thermal_threshold",
    "unitary_basis",
    "weak_radius",
    "worst_case_input",
]
