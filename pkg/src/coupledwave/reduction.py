"""Traveling-wave reduction of the coupled system

    u_t + alpha v^2 v_x + beta u^2 u_x + eta u u_x + gamma u_xxx = 0
    v_t + sigma (u v)_x + epsilon v v_x = 0

With xi = x - c t and the integration constant of the v equation set to
zero, v is slaved to u through ``v = 2 (c - sigma u) / epsilon`` and u
obeys the cubic oscillator

    gamma u'' + A u + B u^2 + C u^3 = 0.

Shifting ``u = w + delta`` with ``delta = -B / (3 C)`` removes the
quadratic term:

    gamma w'' + c1 w + c2 w^3 + c3 = 0.
"""

from dataclasses import dataclass

import numpy as np

from ._util import scalar_or_array
from .errors import DegenerateCubic, EpsilonZero

__all__ = [
    "PhysicalSystem",
    "CubicODE",
    "reduce",
    "cubic_from_coefficients",
    "v_from_u",
    "u_from_w",
    "w_from_u",
]


@dataclass(frozen=True)
class PhysicalSystem:
    alpha: float
    beta: float
    eta: float
    gamma: float
    sigma: float
    epsilon: float
    c: float

    def __post_init__(self):
        if self.epsilon == 0:
            raise EpsilonZero("epsilon must be nonzero (v = 2(c - sigma u)/epsilon)")
        if self.gamma == 0:
            raise ValueError("gamma must be nonzero (dispersion coefficient)")


@dataclass(frozen=True)
class CubicODE:
    """Coefficients of ``gamma u'' + A u + B u^2 + C u^3 = 0`` and its depressed form."""

    A: float
    B: float
    C: float
    delta: float
    c1: float
    c2: float
    c3: float

    def identity_residuals(self):
        """Relative residuals of the four shift identities (should be ~1e-16)."""
        A, B, C = self.A, self.B, self.C
        pairs = [
            (self.delta, -B / (3 * C)),
            (3 * C * self.c1, 3 * A * C - B**2),
            (self.c2, C),
            (27 * C**2 * self.c3, 2 * B**3 - 9 * A * B * C),
        ]
        return [abs(a - b) / max(abs(a), abs(b), 1.0) for a, b in pairs]


def cubic_from_coefficients(A, B, C):
    """Build a :class:`CubicODE` directly from (A, B, C)."""
    A, B, C = float(A), float(B), float(C)
    if abs(C) < 1e-12 * max(abs(A), abs(B), 1.0):
        raise DegenerateCubic(f"cubic coefficient C={C!r} is zero; shift -B/(3C) undefined")
    return CubicODE(
        A=A,
        B=B,
        C=C,
        delta=-B / (3 * C),
        c1=(3 * A * C - B**2) / (3 * C),
        c2=C,
        c3=(2 * B**3 - 9 * A * B * C) / (27 * C**2),
    )


def reduce(phys: PhysicalSystem) -> CubicODE:
    """Reduce the PDE pair at wave speed ``phys.c`` to the cubic ODE for u."""
    if phys.epsilon == 0:
        raise EpsilonZero("epsilon must be nonzero")
    k = 8 * phys.alpha * phys.sigma / phys.epsilon**3
    c = phys.c
    A = -(c + k * c**2)
    B = phys.eta / 2 + k * phys.sigma * c
    C = phys.beta / 3 - k * phys.sigma**2 / 3
    return cubic_from_coefficients(A, B, C)


def v_from_u(phys: PhysicalSystem, u):
    """Second field from the first: ``v = 2 (c - sigma u) / epsilon``."""
    if phys.epsilon == 0:
        raise EpsilonZero("epsilon must be nonzero")
    return scalar_or_array(2 * (phys.c - phys.sigma * np.asarray(u, dtype=float)) / phys.epsilon)


def u_from_w(cubic: CubicODE, w):
    return scalar_or_array(np.asarray(w, dtype=float) + cubic.delta)


def w_from_u(cubic: CubicODE, u):
    return scalar_or_array(np.asarray(u, dtype=float) - cubic.delta)
