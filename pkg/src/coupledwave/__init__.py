"""Exact traveling waves of the coupled system

    u_t + alpha v^2 v_x + beta u^2 u_x + eta u u_x + gamma u_xxx = 0
    v_t + sigma (u v)_x + epsilon v v_x = 0

built by the (G'/G)-expansion and Weierstrass-function methods, with a
finite-difference verifier that checks every closed form independently.
"""

from .errors import *  # noqa: F401,F403
from .gg_method import (
    Case,
    ConstraintWarning,
    GGSolution,
    ansatz_residuals,
    constraint_residual,
    eval_case_as_printed,
    eval_case_solution,
    eval_via_g_over_g,
    g_over_g,
    gg_profile,
    pole_locations,
    solve_ansatz,
)
from .elliptic import (
    EllipticModulus,
    WeierstrassInvariants,
    jacobi_sn_cn_dn,
    invariants_from_roots,
    modulus_from_roots,
    normalized_roots,
    reciprocal_weierstrass_p,
    weierstrass_p,
    weierstrass_p_prime,
    weierstrass_roots,
)
from .profiles import TravelingWave
from .reduction import CubicODE, PhysicalSystem, cubic_from_coefficients, reduce, u_from_w, v_from_u, w_from_u
from .verify import (
    GridSpec,
    EquationId,
    ResidualReport,
    asymptotic_check,
    fd_convergence,
    ode_residual_at,
    evolve_and_compare,
    ode_residual,
    pde_residual,
    translation_check,
)
from .wef_method import (
    WEFForm,
    WEFSolution,
    check_restriction,
    coefficient_residuals,
    degree_relation,
    eval_wef_profile,
    jef_form_as_printed,
    restriction_satisfied,
    solve_wef,
    wef_profile,
)

__version__ = "0.1.0"
