"""Weierstrass-function solutions of the restricted cubic oscillator.

Under ``2 B^2 = 9 A C`` the depressed equation loses its constant term and
becomes ``gamma w'' - (A/2) w + C w^3 = 0``. Substituting
``w = tau / P(xi) + zeta`` and clearing powers of P gives

    P^3:  2 gamma tau - A zeta / 2 + C zeta^3 = 0
    P^2:  -A tau / 2 + 3 C tau zeta^2 = 0
    P^1:  -3/2 gamma tau g2 + 3 C tau^2 zeta = 0
    P^0:  -2 gamma tau g3 + C tau^3 = 0

whose solution is ``zeta = +-sqrt(A / (6C))``, ``tau = A zeta / (6 gamma)``,
``g3 = A^3 / (432 gamma^3)`` and ``g2 = A^2 / (18 gamma^2)``. The ratio
``g2^3 / (27 g3^2)`` is the constant 32/27, so the lattice always has three
real half-period values.
"""

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._util import scalar_or_array
from .elliptic import (
    WeierstrassInvariants,
    jacobi_sn_cn_dn,
    modulus_from_roots,
    weierstrass_p,
    weierstrass_roots,
)
from .errors import ComplexZeta, FormUnavailable, PoleAtPoint, ZeroAmplitude
from .profiles import TravelingWave
from .reduction import PhysicalSystem, v_from_u

__all__ = [
    "WEFForm",
    "WEFSolution",
    "DegreeRelation",
    "degree_relation",
    "check_restriction",
    "restriction_satisfied",
    "solve_wef",
    "coefficient_residuals",
    "wef_profile",
    "eval_wef_profile",
    "jef_form_as_printed",
    "DISCRIMINANT_RATIO",
]

DISCRIMINANT_RATIO = 32.0 / 27.0


class WEFForm(enum.Enum):
    PFORM = "PForm"
    JEF = "JEFForm"
    TANH_LIMIT_AS_PRINTED = "TanhLimitAsPrinted"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        for member in cls:
            if str(value).lower() == member.value.lower():
                return member
        raise ValueError(f"unknown form {value!r}; expected one of {[m.value for m in cls]}")


@dataclass(frozen=True)
class WEFSolution:
    tau: float
    zeta: float
    inv: WeierstrassInvariants
    restriction_residual: float
    shift: float
    A: float
    C: float
    gamma: float

    @property
    def g2(self):
        return self.inv.g2

    @property
    def g3(self):
        return self.inv.g3

    @property
    def m2(self):
        return modulus_from_roots(self.inv).m2


@dataclass(frozen=True)
class DegreeRelation:
    """Balance between the order-2k derivative and a degree-(r+1) nonlinearity.

    ``gamma_coeff`` and ``mu_offset`` are the amplitude and offset of the
    reciprocal-P ansatz ``phi = gamma_coeff * Q^(2s) + mu_offset``; they
    are unrelated to the PDE's gamma and the linear ODE's mu.
    """

    k: int
    r: int
    s: Optional[int]
    gamma_coeff: float = 1.0
    mu_offset: float = 0.0


def degree_relation(k, r):
    """Integer s with ``2k - r = 2 r s``, or None.

    Existence of s is necessary for the reciprocal-P ansatz, not sufficient.
    """
    if k < 1 or r < 1:
        raise ValueError("k and r must be positive integers")
    num = 2 * k - r
    if num < 0 or num % (2 * r):
        return None
    return num // (2 * r)


def check_restriction(A, B, C):
    """``2 B^2 - 9 A C``; zero when the depressed equation has no constant term."""
    return 2 * B**2 - 9 * A * C


def restriction_satisfied(A, B, C):
    return abs(check_restriction(A, B, C)) <= 1e-9 * max(B**2, abs(A * C), 1.0)


def solve_wef(A, C, gamma, zeta_branch=1, B=None) -> WEFSolution:
    """Parameters of ``w = tau / P(xi; g2, g3) + zeta``.

    ``B`` only enters the bookkeeping: the restriction residual and the
    offset ``shift = -B/(3C)`` mapping w back to u. Without it the
    residual is NaN and the shift is zero (the profile is w itself).
    """
    A, C, gamma = float(A), float(C), float(gamma)
    if A == 0:
        raise ZeroAmplitude("A = 0 gives tau = zeta = g2 = g3 = 0")
    if gamma == 0:
        raise ValueError("gamma must be nonzero")
    if C == 0 or not A / C > 0:
        raise ComplexZeta(f"A/C > 0 violated (A={A!r}, C={C!r}): zeta = sqrt(A/(6C)) is not real")
    sign = 1 if zeta_branch in (1, "+", "+1") else -1 if zeta_branch in (-1, "-", "-1") else None
    if sign is None:
        raise ValueError(f"zeta_branch must be +1 or -1, got {zeta_branch!r}")

    zeta = sign * math.sqrt(A / (6 * C))
    tau = A * zeta / (6 * gamma)
    g3 = A**3 / (432 * gamma**3)
    g2 = 2 * math.sqrt(A * g3 / (3 * gamma))
    inv = weierstrass_roots(g2, g3)
    if B is None:
        restriction, shift = float("nan"), 0.0
    else:
        restriction, shift = check_restriction(A, B, C), -B / (3 * C)
    return WEFSolution(tau, zeta, inv, restriction, shift, A, C, gamma)


def coefficient_residuals(sol: WEFSolution):
    """Relative residuals of the P^3, P^2, P^1, P^0 coefficient equations."""
    A, C, gamma = sol.A, sol.C, sol.gamma
    tau, zeta, g2, g3 = sol.tau, sol.zeta, sol.g2, sol.g3
    rows = [
        (2 * gamma * tau, -0.5 * A * zeta, C * zeta**3),
        (-0.5 * A * tau, 3 * C * tau * zeta**2),
        (-1.5 * gamma * tau * g2, 3 * C * tau**2 * zeta),
        (-2 * gamma * tau * g3, C * tau**3),
    ]
    return [abs(sum(r)) / max(sum(abs(t) for t in r), 1e-300) for r in rows]


def _w_values(sol, form, xi):
    if not sol.inv.discriminant > 0:
        raise FormUnavailable("elliptic forms need g2^3 - 27 g3^2 > 0")
    xi = np.asarray(xi, dtype=float)
    if form is WEFForm.PFORM:
        nz = xi != 0
        recip = np.zeros_like(xi)
        # P has a double pole on the lattice, where 1/P -> 0.
        if np.any(nz):
            recip[nz] = 1.0 / np.asarray(weierstrass_p(xi[nz], sol.inv))
        return sol.tau * recip + sol.zeta
    if form is WEFForm.JEF:
        inv = sol.inv
        k2 = inv.e1 - inv.e3
        sn, _, _ = jacobi_sn_cn_dn(math.sqrt(k2) * xi, modulus_from_roots(inv).m2)
        s2 = np.asarray(sn) ** 2
        den = 1.0 + inv.e3 / k2 * s2
        if np.any(den == 0):
            raise PoleAtPoint("JEF denominator vanishes")
        return sol.tau / k2 * s2 / den + sol.zeta
    T2 = np.tanh(xi) ** 2
    return sol.tau * T2 / (1 - 2.0 / 3.0 * T2) + sol.zeta


def _offset(sol, form):
    # the printed tanh limit carries +B/(3C); the exact forms use -B/(3C)
    if form is WEFForm.TANH_LIMIT_AS_PRINTED:
        return -sol.shift
    return sol.shift


def wef_profile(sol: WEFSolution, form=WEFForm.PFORM, c=0.0, shifted=False):
    """:class:`TravelingWave` for the verifier (w if ``shifted`` else u)."""
    form = WEFForm.parse(form)
    offset = 0.0 if shifted else _offset(sol, form)
    periodic = form is not WEFForm.TANH_LIMIT_AS_PRINTED
    return TravelingWave(
        lambda xi: _w_values(sol, form, xi) + offset,
        c=c,
        periodic=periodic,
        label=f"wef {form.value} {'w' if shifted else 'u'}",
    )


def eval_wef_profile(sol: WEFSolution, form, phys: PhysicalSystem, x, t):
    """Return ``(u, v)`` at (x, t); v follows from u through the slaving relation."""
    form = WEFForm.parse(form)
    xi = np.asarray(x, dtype=float) - phys.c * np.asarray(t, dtype=float)
    u = _w_values(sol, form, xi) + _offset(sol, form)
    return scalar_or_array(u), v_from_u(phys, u)


def jef_form_as_printed(tau, zeta, m2, xi):
    """``tau sn^2 / (1 - (1 + m2) sn^2 / 3) + zeta`` with unscaled argument.

    Equals the P-form only for roots normalised to ``e1 - e3 = 1``.
    """
    sn, _, _ = jacobi_sn_cn_dn(xi, m2)
    s2 = np.asarray(sn) ** 2
    return scalar_or_array(tau * s2 / (1 - (1 + m2) / 3 * s2) + zeta)


