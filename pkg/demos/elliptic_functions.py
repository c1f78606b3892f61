"""
Jacobi and Weierstrass functions
================================

The kernel behind the periodic solutions: sn, cn, dn by the AGM, and P
through its real roots.
"""

import numpy as np

from coupledwave import jacobi_sn_cn_dn, normalized_roots, weierstrass_p, weierstrass_roots
from coupledwave.elliptic import weierstrass_p_prime

xi = np.linspace(0, 4, 5)
for m2 in (0.0, 0.5, 1.0):
    sn, cn, dn = jacobi_sn_cn_dn(xi, m2)
    print(f"m2={m2}: sn={np.round(sn, 6)}")
    print(f"        sn^2+cn^2-1 max {np.abs(sn**2 + cn**2 - 1).max():.1e}, "
          f"dn^2+m2 sn^2-1 max {np.abs(dn**2 + m2 * sn**2 - 1).max():.1e}")

inv = weierstrass_roots(2.0, 0.5)
print("\nroots of 4z^3 - 2z - 1/2:", inv.roots)
z = np.array([0.3, 0.7, 1.1])
P, dP = weierstrass_p(z, inv), weierstrass_p_prime(z, inv)
print("P'^2 - (4P^3 - g2 P - g3):", dP**2 - (4 * P**3 - inv.g2 * P - inv.g3))

# with e1 - e3 = 1 the Jacobi relations need no argument scaling
norm = normalized_roots(0.25)
P = weierstrass_p(z, norm)
sn, _, _ = jacobi_sn_cn_dn(z, 0.25)
print("\nsn - (P - e3)^(-1/2):", sn - (P - norm.e3) ** -0.5)
