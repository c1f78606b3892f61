"""Real-argument Jacobi and Weierstrass elliptic functions.

Jacobi functions use the arithmetic-geometric mean with descending Landen
back-substitution. The modulus is always passed squared (``m2 = k^2``).

For invariants with ``g2^3 - 27 g3^2 > 0`` the roots of ``4z^3 - g2 z - g3``
are real, ``e1 > e2 > e3``, and on the real line

    P(xi) = e3 + (e1 - e3) / sn^2(sqrt(e1 - e3) xi, m2),
    m2 = (e2 - e3) / (e1 - e3).
"""

import math
from dataclasses import dataclass

import numpy as np

from ._util import scalar_or_array
from .errors import (
    CoincidentExtremeRoots,
    ModulusOutOfRange,
    NonPositiveDiscriminant,
    PoleAtZero,
)

__all__ = [
    "EllipticModulus",
    "WeierstrassInvariants",
    "jacobi_sn_cn_dn",
    "weierstrass_roots",
    "invariants_from_roots",
    "normalized_roots",
    "modulus_from_roots",
    "weierstrass_p",
    "weierstrass_p_prime",
    "reciprocal_weierstrass_p",
]

AGM_RTOL = 1e-15
AGM_MAXITER = 32


@dataclass(frozen=True)
class EllipticModulus:
    m2: float

    def __post_init__(self):
        if not 0.0 <= self.m2 <= 1.0:
            raise ModulusOutOfRange(f"m2={self.m2!r} outside [0, 1]")


@dataclass(frozen=True)
class WeierstrassInvariants:
    g2: float
    g3: float
    e1: float
    e2: float
    e3: float

    @property
    def discriminant(self):
        return self.g2**3 - 27 * self.g3**2

    @property
    def roots(self):
        return (self.e1, self.e2, self.e3)


def _agm_coefficients(m2):
    a, b, c = 1.0, math.sqrt(1.0 - m2), math.sqrt(m2)
    A, C = [a], [c]
    while abs(c) > AGM_RTOL * a and len(A) <= AGM_MAXITER:
        a, b, c = (a + b) / 2, math.sqrt(a * b), (a - b) / 2
        A.append(a)
        C.append(c)
    return A, C


def jacobi_sn_cn_dn(xi, m2):
    """Return ``(sn, cn, dn)`` at real ``xi`` for squared modulus ``m2`` in [0, 1]."""
    m2 = float(m2)
    if not 0.0 <= m2 <= 1.0:
        raise ModulusOutOfRange(f"m2={m2!r} outside [0, 1]")
    u = np.asarray(xi, dtype=float)
    if m2 == 0.0:
        sn, cn, dn = np.sin(u), np.cos(u), np.ones_like(u)
    elif m2 == 1.0:
        sn = np.tanh(u)
        cn = 1.0 / np.cosh(u)
        dn = cn.copy()
    else:
        A, C = _agm_coefficients(m2)
        n = len(A) - 1
        phi = (2.0**n) * A[n] * u
        for j in range(n, 0, -1):
            phi = 0.5 * (phi + np.arcsin(C[j] / A[j] * np.sin(phi)))
        sn = np.sin(phi)
        cn = np.cos(phi)
        # cos(phi0)/cos(phi1 - phi0) is 0/0-ill-conditioned where |sn| ~ 1;
        # both terms here are non-negative, so no cancellation.
        dn = np.sqrt(cn**2 + (1.0 - m2) * sn**2)
    return scalar_or_array(sn), scalar_or_array(cn), scalar_or_array(dn)


def weierstrass_roots(g2, g3) -> WeierstrassInvariants:
    """Real roots of ``4 z^3 - g2 z - g3`` sorted ``e1 >= e2 >= e3``.

    Trigonometric (casus irreducibilis) formula followed by one Newton
    step per root.
    """
    g2, g3 = float(g2), float(g3)
    disc = g2**3 - 27 * g3**2
    if not disc > 0:
        raise NonPositiveDiscriminant(
            f"g2^3 - 27 g3^2 = {disc!r} <= 0: fewer than three distinct real roots"
        )
    # z^3 + p z + q with p = -g2/4, q = -g3/4
    p, q = -g2 / 4, -g3 / 4
    r = 2 * math.sqrt(-p / 3)
    arg = (3 * q / (2 * p)) * math.sqrt(-3 / p)
    theta = math.acos(min(1.0, max(-1.0, arg))) / 3
    roots = [r * math.cos(theta - 2 * math.pi * k / 3) for k in range(3)]

    polished = []
    for z in roots:
        f = 4 * z**3 - g2 * z - g3
        df = 12 * z**2 - g2
        polished.append(z - f / df if df != 0 else z)
    e1, e2, e3 = sorted(polished, reverse=True)
    return WeierstrassInvariants(g2, g3, e1, e2, e3)


def invariants_from_roots(e1, e2, e3) -> WeierstrassInvariants:
    """Rebuild (g2, g3) from a zero-sum root triple via symmetric functions."""
    e1, e2, e3 = sorted((float(e1), float(e2), float(e3)), reverse=True)
    g2 = -4 * (e1 * e2 + e1 * e3 + e2 * e3)
    g3 = 4 * e1 * e2 * e3
    return WeierstrassInvariants(g2, g3, e1, e2, e3)


def normalized_roots(m2):
    """Roots with ``e1 - e3 = 1`` for which P reduces to ``e3 + 1/sn^2(xi, m2)``."""
    m2 = EllipticModulus(float(m2)).m2
    return invariants_from_roots((2 - m2) / 3, (2 * m2 - 1) / 3, -(1 + m2) / 3)


def modulus_from_roots(inv: WeierstrassInvariants) -> EllipticModulus:
    spread = inv.e1 - inv.e3
    if not spread > 0:
        raise CoincidentExtremeRoots("e1 == e3: modulus undefined")
    m2 = (inv.e2 - inv.e3) / spread
    return EllipticModulus(min(1.0, max(0.0, m2)))


def _scaled_sn_cn_dn(xi, inv):
    if not inv.discriminant > 0:
        raise NonPositiveDiscriminant("discriminant must be positive")
    m2 = modulus_from_roots(inv).m2
    k = math.sqrt(inv.e1 - inv.e3)
    sn, cn, dn = jacobi_sn_cn_dn(k * np.asarray(xi, dtype=float), m2)
    return np.asarray(sn), np.asarray(cn), np.asarray(dn), k


def weierstrass_p(xi, inv: WeierstrassInvariants):
    """P(xi; g2, g3) for real nonzero xi."""
    xi = np.asarray(xi, dtype=float)
    if np.any(xi == 0):
        raise PoleAtZero("P has a double pole at xi = 0")
    sn, _, _, k = _scaled_sn_cn_dn(xi, inv)
    return scalar_or_array(inv.e3 + k**2 / sn**2)


def weierstrass_p_prime(xi, inv: WeierstrassInvariants):
    """P'(xi) = -2 (e1 - e3)^(3/2) cn dn / sn^3."""
    xi = np.asarray(xi, dtype=float)
    if np.any(xi == 0):
        raise PoleAtZero("P' has a triple pole at xi = 0")
    sn, cn, dn, k = _scaled_sn_cn_dn(xi, inv)
    return scalar_or_array(-2 * k**3 * cn * dn / sn**3)


def reciprocal_weierstrass_p(xi, inv: WeierstrassInvariants):
    """1/P(xi), finite everywhere on the real line (zero at the lattice points)."""
    sn, _, _, k = _scaled_sn_cn_dn(xi, inv)
    s2 = sn**2
    return scalar_or_array(s2 / (k**2 + inv.e3 * s2))
