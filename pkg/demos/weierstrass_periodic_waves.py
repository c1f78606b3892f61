"""
Periodic waves from the Weierstrass function
============================================

When 2 B^2 = 9 A C the shifted oscillator has no constant term and admits
w = tau / P(xi) + zeta. Three evaluation forms are compared by residual.
"""

import math

import numpy as np

from coupledwave import (
    GridSpec,
    check_restriction,
    cubic_from_coefficients,
    ode_residual,
    solve_wef,
    wef_profile,
)

A, C, gamma = 6.0, 4.0, 1.0
B = math.sqrt(4.5 * A * C)
print("2B^2 - 9AC =", check_restriction(A, B, C))

sol = solve_wef(A, C, gamma, zeta_branch=1, B=B)
print(f"tau={sol.tau} zeta={sol.zeta} g2={sol.g2:.12g} g3={sol.g3}")
print("roots:", sol.inv.roots, " m^2 =", round(sol.m2, 6))
print("g2^3 / (27 g3^2) =", sol.g2**3 / (27 * sol.g3**2), "(32/27 =", 32 / 27, ")")

# the invariant ratio is the same for any coefficients
for a, g in ((0.3, -2.0), (50.0, 0.1)):
    s = solve_wef(a, a, g)
    print(f"  A={a}, gamma={g}: ratio={s.g2**3 / (27 * s.g3**2):.15f}")

cubic = cubic_from_coefficients(A, B, C)
grid = GridSpec(-10, 10, 2001)
for form in ("PForm", "JEFForm", "TanhLimitAsPrinted"):
    w = wef_profile(sol, form, shifted=True)
    r = ode_residual(w, cubic, gamma, "ODE43", grid)
    print(f"{form:>20}: residual {r.max_abs_residual:.2e}")

xi = np.array([0.3, 0.9, 2.0])
print("\nPForm vs JEFForm:", wef_profile(sol, "PForm")(xi) - wef_profile(sol, "JEFForm")(xi))
