"""(G'/G)-expansion for the depressed cubic oscillator.

The ansatz ``w = a0 + a1 F`` with ``F = G'/G`` and
``G'' + lambda G' + mu G = 0`` turns ``gamma w'' + c1 w + c2 w^3 + c3 = 0``
into four polynomial conditions in F:

    F^3:  2 gamma a1 + c2 a1^3 = 0
    F^2:  3 gamma lambda a1 + 3 c2 a0 a1^2 = 0
    F^1:  gamma a1 (lambda^2 + 2 mu) + c1 a1 + 3 c2 a0^2 a1 = 0
    F^0:  gamma a1 lambda mu + c1 a0 + c2 a0^3 + c3 = 0

The first three fix ``a1^2 = -2 gamma / c2``, ``a0 = lambda a1 / 2`` and
``lambda^2 - 4 mu = 2 c1 / gamma``. The last one collapses to ``c3 = 0``
for every such choice, so it is reported rather than solved.

Only the hyperbolic branch (``lambda^2 - 4 mu > 0``) is supported.
"""

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np

from ._util import scalar_or_array
from .errors import Inadmissible, NegativeDiscriminant, PoleAtPoint, PoleAtXi
from .profiles import TravelingWave
from .reduction import CubicODE

__all__ = [
    "Case",
    "GGSolution",
    "ConstraintWarning",
    "g_over_g",
    "solve_ansatz",
    "ansatz_residuals",
    "constraint_residual",
    "eval_case_solution",
    "eval_via_g_over_g",
    "eval_case_as_printed",
    "pole_locations",
    "gg_profile",
]

POLE_RTOL = 1e-12


class Case(enum.Enum):
    CASE1 = "Case1"  # mu = 0, lambda = +sqrt(2 c1 / gamma)
    CASE2 = "Case2"  # mu = 0, lambda = -sqrt(2 c1 / gamma)
    CASE3 = "Case3"  # lambda = 0, mu = -c1 / (2 gamma)

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, int) and not isinstance(value, bool) and 1 <= value <= 3:
            return list(cls)[value - 1]
        for member in cls:
            if str(value).lower() == member.value.lower():
                return member
        raise ValueError(f"unknown case {value!r}; expected Case1, Case2 or Case3")


class ConstraintWarning(UserWarning):
    """The F^0 condition (equivalently c3 = 0) is violated."""


@dataclass(frozen=True)
class GGSolution:
    case: Case
    branch: int
    a0: float
    a1: float
    lam: float
    mu: float
    Delta: float
    C1: float
    C2: float
    constraint_residual: float

    @property
    def amplitude(self):
        """``a1 sqrt(Delta) / 2``, which equals ``branch * sqrt(-c1/c2)``."""
        return self.a1 * math.sqrt(self.Delta) / 2


def _ratio(C1, C2, s):
    """(C1 cosh s + C2 sinh s) / (C1 sinh s + C2 cosh s) and its scaled denominator."""
    T = np.tanh(s)
    den = C1 * T + C2
    return T, den


def g_over_g(lam, mu, C1, C2, xi):
    """G'/G for the hyperbolic solution of ``G'' + lam G' + mu G = 0``."""
    Delta = lam**2 - 4 * mu
    if not Delta > 0:
        raise NegativeDiscriminant(
            f"lambda^2 - 4 mu = {Delta!r} <= 0; only the hyperbolic branch is supported"
        )
    root = math.sqrt(Delta)
    xi = np.asarray(xi, dtype=float)
    T, den = _ratio(C1, C2, root * xi / 2)
    if np.any(np.abs(den) < POLE_RTOL * (abs(C1) + abs(C2))):
        raise PoleAtXi("C1 sinh + C2 cosh vanishes at the requested xi")
    return scalar_or_array(-lam / 2 + root / 2 * (C1 + C2 * T) / den)


def _sign(branch):
    if branch in (1, "+", "+1"):
        return 1
    if branch in (-1, "-", "-1"):
        return -1
    raise ValueError(f"branch must be +1 or -1, got {branch!r}")


def solve_ansatz(cubic: CubicODE, gamma, case, branch=1, C1=0.0, C2=1.0) -> GGSolution:
    """Expansion parameters for one of the three hyperbolic cases.

    Raises :class:`Inadmissible` when ``-2 gamma / c2 > 0`` or
    ``2 c1 / gamma > 0`` fails, or when ``C1 = +-C2`` (constant profile).
    A nonzero ``c3`` only triggers :class:`ConstraintWarning`.
    """
    case = Case.parse(case)
    branch = _sign(branch)
    c1, c2 = cubic.c1, cubic.c2
    if gamma == 0:
        raise Inadmissible("gamma must be nonzero")
    if not -2 * gamma / c2 > 0:
        raise Inadmissible(
            f"-2*gamma/c2 > 0 violated (gamma={gamma!r}, c2={c2!r}): "
            "gamma and c2 must have opposite signs"
        )
    if not 2 * c1 / gamma > 0:
        raise Inadmissible(
            f"2*c1/gamma > 0 violated (c1={c1!r}, gamma={gamma!r}): "
            "gamma and c1 must have the same sign"
        )
    C1, C2 = float(C1), float(C2)
    if abs(abs(C1) - abs(C2)) <= 1e-12 * max(abs(C1), abs(C2)) or (C1 == 0 and C2 == 0):
        raise Inadmissible(f"C1 != +-C2 violated (C1={C1!r}, C2={C2!r})")

    a1 = branch * math.sqrt(-2 * gamma / c2)
    Delta = 2 * c1 / gamma
    if case is Case.CASE1:
        lam, mu = math.sqrt(Delta), 0.0
    elif case is Case.CASE2:
        lam, mu = -math.sqrt(Delta), 0.0
    else:
        lam, mu = 0.0, -c1 / (2 * gamma)
    a0 = lam * a1 / 2
    res = gamma * a1 * lam * mu + c1 * a0 + c2 * a0**3 + cubic.c3
    if abs(cubic.c3) > 1e-12 * max(abs(c1), abs(c2), 1.0):
        warnings.warn(
            f"constraint gamma*a1*lambda*mu + c1*a0 + c2*a0^3 + c3 = {res:.6g} != 0; "
            "the profile does not solve the ODE unless c3 = 0",
            ConstraintWarning,
            stacklevel=2,
        )
    return GGSolution(case, branch, a0, a1, lam, mu, lam**2 - 4 * mu, C1, C2, res)


def ansatz_residuals(sol: GGSolution, cubic: CubicODE, gamma):
    """Relative residuals of the F^3, F^2 and F^1 coefficient equations."""
    a0, a1, lam, mu = sol.a0, sol.a1, sol.lam, sol.mu
    c1, c2 = cubic.c1, cubic.c2
    rows = [
        (2 * gamma * a1, c2 * a1**3),
        (3 * a1 * lam * gamma, 3 * a0 * a1**2 * c2),
        (gamma * a1 * lam**2, 2 * gamma * a1 * mu, c1 * a1, 3 * c2 * a0**2 * a1),
    ]
    return [abs(sum(r)) / max(sum(abs(t) for t in r), 1e-300) for r in rows]


def constraint_residual(sol: GGSolution, cubic: CubicODE, gamma):
    """The F^0 coefficient ``gamma a1 lambda mu + c1 a0 + c2 a0^3 + c3``."""
    return gamma * sol.a1 * sol.lam * sol.mu + cubic.c1 * sol.a0 + cubic.c2 * sol.a0**3 + cubic.c3


def pole_locations(sol: GGSolution):
    """xi values where the singular profile blows up (empty for kinks)."""
    if sol.C1 == 0 or abs(sol.C2 / sol.C1) >= 1:
        return ()
    # + 0.0 folds -0.0 into 0.0
    return (2 * math.atanh(-sol.C2 / sol.C1) / math.sqrt(sol.Delta) + 0.0,)


def _w_case(sol: GGSolution, xi):
    C1, C2 = sol.C1, sol.C2
    T, den = _ratio(C1, C2, math.sqrt(sol.Delta) * xi / 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        if sol.case is Case.CASE1:
            bracket = 1 + (C1 - C2) * (1 - T) / den
        elif sol.case is Case.CASE2:
            bracket = -1 + (C1 + C2) * (1 + T) / den
        else:
            bracket = (C1 + C2 * T) / den
    return sol.amplitude * bracket, den


def _check_pole(sol, den):
    if np.any(np.abs(den) < POLE_RTOL * (abs(sol.C1) + abs(sol.C2))):
        poles = pole_locations(sol)
        xi_star = poles[0] if poles else None
        raise PoleAtPoint(f"singular wave: pole at xi* = {xi_star!r}", xi_pole=xi_star)


def eval_case_solution(sol: GGSolution, cubic: CubicODE, gamma, c, x, t):
    """u(x, t) from the closed-form tanh expression of the selected case."""
    xi = np.asarray(x, dtype=float) - c * np.asarray(t, dtype=float)
    w, den = _w_case(sol, xi)
    _check_pole(sol, den)
    return scalar_or_array(w + cubic.delta)


def eval_via_g_over_g(sol: GGSolution, cubic: CubicODE, c, x, t):
    """u(x, t) as ``a0 + a1 G'/G + delta``; independent of the case formulas."""
    xi = np.asarray(x, dtype=float) - c * np.asarray(t, dtype=float)
    try:
        F = g_over_g(sol.lam, sol.mu, sol.C1, sol.C2, xi)
    except PoleAtXi as exc:
        poles = pole_locations(sol)
        raise PoleAtPoint(str(exc), xi_pole=poles[0] if poles else None) from exc
    return scalar_or_array(sol.a0 + sol.a1 * np.asarray(F) + cubic.delta)


def eval_case_as_printed(sol: GGSolution, cubic: CubicODE, gamma, c, x, t):
    """The three case formulas in their literal, uncorrected form.

    Includes the ``+B/(3C)`` offset and the alternative Case 2 bracket
    ``1 + (C1 + C2)(1 - T)/(C2 - C1 T)``; neither is exact in general (compare with
    :func:`eval_case_solution` through the residual verifier).
    """
    xi = np.asarray(x, dtype=float) - c * np.asarray(t, dtype=float)
    amp = sol.branch * math.sqrt(-cubic.c1 / cubic.c2)
    T = np.tanh(0.5 * math.sqrt(2 * cubic.c1 / gamma) * xi)
    C1, C2 = sol.C1, sol.C2
    with np.errstate(divide="ignore", invalid="ignore"):
        if sol.case is Case.CASE1:
            br = 1 + (C1 - C2) * (1 - T) / (C1 * T + C2)
        elif sol.case is Case.CASE2:
            br = 1 + (C1 + C2) * (1 - T) / (C2 - C1 * T)
        else:
            br = (C1 + C2 * T) / (C1 * T + C2)
    return scalar_or_array(amp * br + cubic.B / (3 * cubic.C))


def gg_profile(sol: GGSolution, cubic: CubicODE, c=0.0, shifted=False):
    """Non-raising :class:`TravelingWave` for the verifier.

    ``shifted=True`` returns w (the depressed variable) instead of u.
    """
    offset = 0.0 if shifted else cubic.delta

    def func(xi):
        w, _ = _w_case(sol, xi)
        return w + offset

    name = "w" if shifted else "u"
    return TravelingWave(func, c=c, poles=pole_locations(sol), label=f"gg {sol.case.value} {name}")
