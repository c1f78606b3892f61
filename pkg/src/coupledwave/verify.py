"""Numerical adjudication of constructed profiles.

Everything here works from point values only: derivatives are central
finite differences (4th order, one Richardson level), so a profile is
checked without reusing any derivative formula from its construction.
"""

import enum
import math
from dataclasses import asdict, dataclass, field

import numba
import numpy as np

from .errors import (
    AllPointsExcluded,
    BoundaryContamination,
    GridTooCoarse,
    UnstableStep,
)
from .reduction import CubicODE, PhysicalSystem

__all__ = [
    "EquationId",
    "GridSpec",
    "ResidualReport",
    "AsymptoticReport",
    "TranslationReport",
    "EvolutionReport",
    "d1",
    "d2",
    "d3",
    "ode_residual",
    "ode_residual_at",
    "fd_convergence",
    "pde_residual",
    "asymptotic_check",
    "translation_check",
    "evolve_and_compare",
]

DEFAULT_TOLERANCE = 1e-6
DEFAULT_POLE_EXCLUSION = 0.5


class EquationId(str, enum.Enum):
    ODE15 = "ODE15"  # gamma u'' + A u + B u^2 + C u^3
    ODE17 = "ODE17"  # gamma w'' + c1 w + c2 w^3 + c3
    ODE43 = "ODE43"  # gamma w'' - (A/2) w + C w^3
    PDE6 = "PDE6"
    PDE7 = "PDE7"


@dataclass(frozen=True)
class GridSpec:
    xmin: float
    xmax: float
    nx: int
    tmin: float = 0.0
    tmax: float = 0.0
    nt: int = 1
    pole_exclusion_radius: float = DEFAULT_POLE_EXCLUSION

    def __post_init__(self):
        if not self.xmax > self.xmin:
            raise ValueError("xmax must exceed xmin")
        if self.nx < 16:
            raise ValueError("nx must be at least 16")
        if self.nt < 1:
            raise ValueError("nt must be at least 1")
        if self.nt > 1 and not self.tmax > self.tmin:
            raise ValueError("tmax must exceed tmin when nt > 1")
        if self.pole_exclusion_radius < 0:
            raise ValueError("pole_exclusion_radius must be non-negative")

    @property
    def hx(self):
        return (self.xmax - self.xmin) / (self.nx - 1)

    @property
    def ht(self):
        return (self.tmax - self.tmin) / (self.nt - 1) if self.nt > 1 else 0.0

    @property
    def x(self):
        return np.linspace(self.xmin, self.xmax, self.nx)

    @property
    def t(self):
        return np.linspace(self.tmin, self.tmax, self.nt)


@dataclass(frozen=True)
class ResidualReport:
    equation_id: EquationId
    max_abs_residual: float
    argmax_location: tuple
    points_evaluated: int
    points_excluded: int
    tolerance: float
    passed: bool

    def to_dict(self):
        d = asdict(self)
        d["equation_id"] = self.equation_id.value
        d["pass"] = d.pop("passed")
        d["argmax_location"] = list(self.argmax_location)
        return d


@dataclass(frozen=True)
class AsymptoticReport:
    xi_far: float
    limits: tuple
    first_derivative: tuple
    second_derivative: tuple
    cubic_residual: tuple
    tolerance: float
    passed: bool
    failures: tuple = ()

    def to_dict(self):
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}


@dataclass(frozen=True)
class TranslationReport:
    max_abs_difference: float
    samples: int
    skipped: int
    tolerance: float
    passed: bool

    def to_dict(self):
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


@dataclass(frozen=True)
class EvolutionReport:
    linf_error: float
    l2_error: float
    T: float
    dt: float
    steps: int
    nx: int
    h: float
    extra: dict = field(default_factory=dict)


# --- finite differences -----------------------------------------------------


def d1(f, x, h):
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h)


def d2(f, x, h):
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h)


def d3(f, x, h):
    return (
        -f(x + 3 * h) + 8 * f(x + 2 * h) - 13 * f(x + h)
        + 13 * f(x - h) - 8 * f(x - 2 * h) + f(x - 3 * h)
    ) / (8 * h**3)


def _richardson(op, f, x, h):
    # all three stencils are central with O(h^4) leading error
    return (16 * op(f, x, h / 2) - op(f, x, h)) / 15


def _deriv(op, f, x, h, richardson):
    return _richardson(op, f, x, h) if richardson else op(f, x, h)


# --- ODE residuals ------------------------------------------------------------


def _ode_expr(which, u, upp, cubic, gamma):
    which = EquationId(which)
    if which is EquationId.ODE15:
        return gamma * upp + cubic.A * u + cubic.B * u**2 + cubic.C * u**3
    if which is EquationId.ODE17:
        return gamma * upp + cubic.c1 * u + cubic.c2 * u**3 + cubic.c3
    if which is EquationId.ODE43:
        return gamma * upp - 0.5 * cubic.A * u + cubic.C * u**3
    raise ValueError(f"{which} is not an ODE")


def _exclusion_mask(xi, poles, radius):
    keep = np.ones(xi.shape, dtype=bool)
    for p in poles:
        keep &= np.abs(xi - p) > radius
    return keep


def ode_residual_at(profile, cubic: CubicODE, gamma, which, xi, h, richardson=True):
    """Pointwise ODE residual with FD step ``h``.

    ODE15 expects u; ODE17 and ODE43 expect the shifted variable w.
    """
    xi = np.asarray(xi, dtype=float)
    with np.errstate(all="ignore"):
        u = profile(xi)
        upp = _deriv(d2, profile, xi, h, richardson)
        r = _ode_expr(which, u, upp, cubic, gamma)
    return np.where(np.isfinite(r), r, np.inf)


def ode_residual(profile, cubic: CubicODE, gamma, which, grid: GridSpec, *,
                 poles=None, tolerance=DEFAULT_TOLERANCE, richardson=True) -> ResidualReport:
    """Max |residual| of the selected ODE over ``grid.x`` (read as xi).

    Pole neighbourhoods (``profile.poles`` unless ``poles`` is given) are
    excluded; a non-finite residual anywhere else counts as infinite.
    """
    which = EquationId(which)
    if poles is None:
        poles = getattr(profile, "poles", ())
    xi = grid.x
    keep = _exclusion_mask(xi, poles, grid.pole_exclusion_radius)
    if not keep.any():
        raise AllPointsExcluded("every grid point lies inside a pole exclusion zone")
    r = np.abs(ode_residual_at(profile, cubic, gamma, which, xi[keep], grid.hx, richardson))
    i = int(np.argmax(r))
    worst = float(r[i])
    return ResidualReport(
        which, worst, (float(xi[keep][i]), 0.0), int(keep.sum()),
        int((~keep).sum()), float(tolerance), bool(worst <= tolerance),
    )


def fd_convergence(profile, cubic: CubicODE, gamma, which, xi, steps):
    """Plain 4th-order FD residual maxima for each step and successive ratios."""
    errs = [float(np.max(np.abs(ode_residual_at(profile, cubic, gamma, which, xi, h, False))))
            for h in steps]
    ratios = [a / b if b > 0 else math.inf for a, b in zip(errs, errs[1:])]
    return errs, ratios


# --- PDE residuals ------------------------------------------------------------


def pde_residual(u, v, phys: PhysicalSystem, grid: GridSpec, *, poles=(),
                 tolerance=DEFAULT_TOLERANCE, richardson=True):
    """Residuals of both PDEs on the (x, t) grid.

    ``u`` and ``v`` are callables of (x, t). ``poles`` are xi = x - c t
    locations whose neighbourhoods are excluded. The grid fixes where the
    residual is sampled; the time stencil uses ``min(ht, hx)``.
    """
    if grid.nt < 5:
        raise GridTooCoarse("nt >= 5 required for time derivatives")
    X, Tm = np.meshgrid(grid.x, grid.t)
    xi = X - phys.c * Tm
    keep = _exclusion_mask(xi, poles, grid.pole_exclusion_radius)
    if not keep.any():
        raise AllPointsExcluded("every grid point lies inside a pole exclusion zone")
    x, t = X[keep], Tm[keep]
    # the time grid is usually much coarser than x; a coarse t-stencil would
    # dominate the residual near poles, so it never exceeds the x step
    hx = grid.hx
    ht = min(grid.ht, hx) if grid.nt > 1 else hx

    def in_x(fn):
        return lambda s: fn(s, t)

    def in_t(fn):
        return lambda s: fn(x, s)

    with np.errstate(all="ignore"):
        uu, vv = u(x, t), v(x, t)
        ut = _deriv(d1, in_t(u), t, ht, richardson)
        vt = _deriv(d1, in_t(v), t, ht, richardson)
        ux = _deriv(d1, in_x(u), x, hx, richardson)
        vx = _deriv(d1, in_x(v), x, hx, richardson)
        uxxx = _deriv(d3, in_x(u), x, hx, richardson)
        r6 = ut + phys.alpha * vv**2 * vx + phys.beta * uu**2 * ux + phys.eta * uu * ux + phys.gamma * uxxx
        r7 = vt + phys.sigma * (ux * vv + uu * vx) + phys.epsilon * vv * vx

    reports = []
    for eq, r in ((EquationId.PDE6, r6), (EquationId.PDE7, r7)):
        r = np.abs(np.where(np.isfinite(r), r, np.inf))
        i = int(np.argmax(r))
        worst = float(r[i])
        reports.append(ResidualReport(
            eq, worst, (float(x[i]), float(t[i])), int(keep.sum()),
            int((~keep).sum()), float(tolerance), bool(worst <= tolerance),
        ))
    return tuple(reports)


# --- asymptotics and translation ---------------------------------------------


def asymptotic_check(profile, cubic: CubicODE, xi_far=20.0, *, tolerance=DEFAULT_TOLERANCE,
                     h=0.05) -> AsymptoticReport:
    """Far-field test: u', u'' vanish and u tends to a root of A u + B u^2 + C u^3."""
    if xi_far < 10:
        raise ValueError("xi_far must be at least 10")
    pts = np.array([-xi_far, xi_far], dtype=float)
    with np.errstate(all="ignore"):
        u = np.asarray(profile(pts), dtype=float)
        du = _richardson(d1, profile, pts, h)
        ddu = _richardson(d2, profile, pts, h)
        cub = cubic.A * u + cubic.B * u**2 + cubic.C * u**3
    failures = []
    for name, vals in (("u'", du), ("u''", ddu), ("A u + B u^2 + C u^3", cub)):
        bad = ~(np.abs(vals) < tolerance)
        for side, flag in zip(("-", "+"), bad):
            if flag:
                failures.append(f"{name} at {side}xi_far")
    return AsymptoticReport(
        float(xi_far), tuple(map(float, u)), tuple(map(float, du)),
        tuple(map(float, ddu)), tuple(map(float, cub)), float(tolerance),
        not failures, tuple(failures),
    )


def translation_check(profile2d, c, samples=100, *, poles=(), exclusion=DEFAULT_POLE_EXCLUSION,
                      tolerance=1e-12, seed=0) -> TranslationReport:
    """|u(x + c d, t + d) - u(x, t)| over random (x, t, d)."""
    if samples < 10:
        raise ValueError("samples must be at least 10")
    rng = np.random.default_rng(seed)
    x = rng.uniform(-10, 10, samples)
    t = rng.uniform(0, 5, samples)
    d = rng.uniform(-5, 5, samples)
    keep = _exclusion_mask(x - c * t, poles, exclusion)
    x, t, d = x[keep], t[keep], d[keep]
    with np.errstate(all="ignore"):
        diff = np.abs(np.asarray(profile2d(x + c * d, t + d)) - np.asarray(profile2d(x, t)))
    diff = np.where(np.isfinite(diff), diff, np.inf)
    worst = float(diff.max()) if diff.size else 0.0
    return TranslationReport(worst, int(keep.sum()), int((~keep).sum()), float(tolerance),
                             bool(worst < tolerance))


# --- time evolution -----------------------------------------------------------

_G = 3  # ghost/boundary layer width needed by the 7-point third derivative


@numba.njit(cache=True)
def _rhs(u, v, coef, h, fu, fv, out_u, out_v):
    alpha, beta, eta, gamma, sigma, epsilon = coef[0], coef[1], coef[2], coef[3], coef[4], coef[5]
    n = u.size
    for i in range(n):
        ui, vi = u[i], v[i]
        fu[i] = alpha * vi * vi * vi / 3 + beta * ui * ui * ui / 3 + eta * ui * ui / 2
        fv[i] = sigma * ui * vi + epsilon * vi * vi / 2
    c1 = 1.0 / (12 * h)
    c3 = 1.0 / (8 * h * h * h)
    for i in range(_G):
        out_u[i] = 0.0
        out_v[i] = 0.0
        out_u[n - 1 - i] = 0.0
        out_v[n - 1 - i] = 0.0
    for i in range(_G, n - _G):
        dfu = (fu[i - 2] - 8 * fu[i - 1] + 8 * fu[i + 1] - fu[i + 2]) * c1
        dfv = (fv[i - 2] - 8 * fv[i - 1] + 8 * fv[i + 1] - fv[i + 2]) * c1
        uxxx = (-u[i + 3] + 8 * u[i + 2] - 13 * u[i + 1]
                + 13 * u[i - 1] - 8 * u[i - 2] + u[i - 3]) * c3
        out_u[i] = -dfu - gamma * uxxx
        out_v[i] = -dfv


@numba.njit(cache=True)
def _pin(uu, vv, UB, VB, k):
    n = uu.size
    for j in range(_G):
        uu[j] = UB[k, j]
        vv[j] = VB[k, j]
        uu[n - _G + j] = UB[k, _G + j]
        vv[n - _G + j] = VB[k, _G + j]


@numba.njit(cache=True)
def _rk4(u, v, UB, VB, coef, h, dt, steps):
    """Advance in place; returns the first step with non-finite data or -1."""
    n = u.size
    ku = np.empty((4, n))
    kv = np.empty((4, n))
    tu = np.empty(n)
    tv = np.empty(n)
    fu = np.empty(n)
    fv = np.empty(n)
    for s in range(steps):
        _rhs(u, v, coef, h, fu, fv, ku[0], kv[0])
        for j in range(1, 4):
            frac = 1.0 if j == 3 else 0.5
            k = 2 * s + 2 if j == 3 else 2 * s + 1
            for i in range(n):
                tu[i] = u[i] + frac * dt * ku[j - 1, i]
                tv[i] = v[i] + frac * dt * kv[j - 1, i]
            _pin(tu, tv, UB, VB, k)
            _rhs(tu, tv, coef, h, fu, fv, ku[j], kv[j])
        for i in range(n):
            u[i] += dt / 6 * (ku[0, i] + 2 * ku[1, i] + 2 * ku[2, i] + ku[3, i])
            v[i] += dt / 6 * (kv[0, i] + 2 * kv[1, i] + 2 * kv[2, i] + kv[3, i])
        _pin(u, v, UB, VB, 2 * s + 2)
        if s % 64 == 0 or s == steps - 1:
            if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
                return s
    return -1


def _front_position(x, values):
    grad = np.abs(np.gradient(values, x))
    if not np.any(grad > 0):
        return None
    return x[int(np.argmax(grad))]


def evolve_and_compare(u_exact, v_exact, phys: PhysicalSystem, T, grid: GridSpec, *,
                       safety=0.9) -> EvolutionReport:
    """Integrate both PDEs from the exact data at ``grid.tmin`` to ``tmin + T``.

    Method of lines: 4th-order central differences in x (flux form), RK4 in
    time, outer three points on each side pinned to the exact solution.
    The step is the smallest of 0.1 h^2/|gamma|, the RK4 imaginary-axis
    limit of the dispersive stencil and an advective CFL bound, scaled by
    ``safety``. Returns max and discrete L2 errors of u and v against the
    exact solution at the final time.
    """
    x = grid.x
    h = grid.hx
    t0 = grid.tmin
    t1 = t0 + T
    width = grid.xmax - grid.xmin
    for tt in (t0, t1):
        pos = _front_position(x, np.asarray(u_exact(x, np.full_like(x, tt))))
        if pos is not None and min(pos - grid.xmin, grid.xmax - pos) < 0.2 * width:
            raise BoundaryContamination(
                f"wave front at x={pos:.4g} (t={tt:.4g}) is within 20% of the domain edge"
            )

    u = np.array(u_exact(x, np.full_like(x, t0)), dtype=float)
    v = np.array(v_exact(x, np.full_like(x, t0)), dtype=float)

    umax = float(np.max(np.abs(u))) if u.size else 0.0
    vmax = float(np.max(np.abs(v))) if v.size else 0.0
    adv = (abs(phys.alpha) * vmax**2 + abs(phys.beta) * umax**2 + abs(phys.eta) * umax
           + abs(phys.sigma) * (umax + vmax) + abs(phys.epsilon) * vmax)
    rho = 4.6087 * abs(phys.gamma) / h**3 + 1.3722 * adv / h
    dt = min(0.1 * h * h / abs(phys.gamma), safety * 2 * math.sqrt(2) / rho)
    steps = max(1, math.ceil(T / dt)) if T > 0 else 0
    dt = T / steps if steps else 0.0

    left = slice(0, _G)
    right = slice(x.size - _G, x.size)
    # exact boundary values at every RK4 stage time t0 + k dt/2
    xb = np.concatenate([x[left], x[right]])
    tb = t0 + 0.5 * dt * np.arange(2 * steps + 1)
    XB, TB = np.meshgrid(xb, tb)
    UB = np.asarray(u_exact(XB.ravel(), TB.ravel()), dtype=float).reshape(XB.shape)
    VB = np.asarray(v_exact(XB.ravel(), TB.ravel()), dtype=float).reshape(XB.shape)

    coef = np.array([phys.alpha, phys.beta, phys.eta, phys.gamma, phys.sigma, phys.epsilon])
    bad = _rk4(u, v, UB, VB, coef, h, dt, steps)
    if bad >= 0:
        raise UnstableStep(f"non-finite values at step {bad}, t={t0 + (bad + 1) * dt:.6g}")
    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
        raise UnstableStep("non-finite values at the final time")

    tt = np.full_like(x, t1)
    eu = u - np.asarray(u_exact(x, tt))
    ev = v - np.asarray(v_exact(x, tt))
    err = np.maximum(np.abs(eu), np.abs(ev))
    linf = float(err.max())
    l2 = float(math.sqrt(h * float(np.sum(eu**2 + ev**2))))
    return EvolutionReport(linf, l2, float(T), float(dt), steps, grid.nx, float(h),
                           {"linf_u": float(np.abs(eu).max()), "linf_v": float(np.abs(ev).max())})
