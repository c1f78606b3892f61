import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from coupledwave.errors import DegenerateCubic, EpsilonZero
from coupledwave.reduction import (
    PhysicalSystem,
    cubic_from_coefficients,
    reduce,
    u_from_w,
    v_from_u,
    w_from_u,
)

coef = st.floats(-5, 5, allow_nan=False).filter(lambda x: abs(x) > 1e-3)


def symbolic_reduction(alpha, beta, eta, sigma, epsilon, c):
    """Oracle: substitute v(u) into the u-equation, integrate in u, read off A, B, C."""
    u = sp.symbols("u")
    a, b, e, s, ep, cc = map(sp.nsimplify, (alpha, beta, eta, sigma, epsilon, c))
    v = 2 * (cc - s * u) / ep
    # coefficient of u' in -c u' + alpha v^2 v' + beta u^2 u' + eta u u'
    integrand = -cc + a * v**2 * sp.diff(v, u) + b * u**2 + e * u
    F = sp.Poly(sp.integrate(sp.expand(integrand), u), u)
    return {k: F.coeff_monomial(u**p) for k, p in (("A", 1), ("B", 2), ("C", 3))}


def symbolic_shift(A, B, C):
    w = sp.symbols("w")
    A, B, C = map(sp.nsimplify, (A, B, C))
    e = sp.Poly(sp.expand(A * (w - B / (3 * C)) + B * (w - B / (3 * C)) ** 2 + C * (w - B / (3 * C)) ** 3), w)
    return {"c1": e.coeff_monomial(w), "c2": e.coeff_monomial(w**3), "c3": e.coeff_monomial(1),
            "quadratic": e.coeff_monomial(w**2)}


@pytest.mark.parametrize(
    "params, expected",
    [
        (dict(alpha=0, eta=0, beta=-3, gamma=1, sigma=1, epsilon=2, c=-1),
         dict(A=1, B=0, C=-1, delta=0, c1=1, c2=-1, c3=0)),
        (dict(alpha=1, sigma=1, epsilon=2, c=1, eta=2, beta=4, gamma=1),
         dict(A=-2, B=2, C=1, delta=-2 / 3, c1=-10 / 3, c2=1, c3=52 / 27)),
        (dict(alpha=0, eta=0, beta=3, gamma=1, sigma=1, epsilon=1, c=0),
         dict(A=0, B=0, C=1, delta=0, c1=0, c2=1, c3=0)),
    ],
)
def test_reduce_examples(params, expected):
    cub = reduce(PhysicalSystem(**params))
    for k, v in expected.items():
        assert getattr(cub, k) == pytest.approx(v, abs=1e-14), k
    oracle = symbolic_reduction(params["alpha"], params["beta"], params["eta"],
                                params["sigma"], params["epsilon"], params["c"])
    for k in "ABC":
        assert getattr(cub, k) == pytest.approx(float(oracle[k]), abs=1e-14)
    if cub.C != 0:
        sh = symbolic_shift(cub.A, cub.B, cub.C)
        assert sh["quadratic"] == 0
        for k in ("c1", "c2", "c3"):
            assert getattr(cub, k) == pytest.approx(float(sh[k]), abs=1e-13)


@settings(max_examples=60, deadline=None)
@given(coef, coef, coef, coef, coef, coef)
def test_reduce_matches_symbolic_oracle(alpha, beta, eta, sigma, epsilon, c):
    phys = PhysicalSystem(alpha, beta, eta, 1.0, sigma, epsilon, c)
    try:
        cub = reduce(phys)
    except DegenerateCubic:
        return
    oracle = symbolic_reduction(alpha, beta, eta, sigma, epsilon, c)
    for k in "ABC":
        ref = float(oracle[k])
        assert abs(getattr(cub, k) - ref) <= 1e-11 * max(1.0, abs(ref))
    assert max(cub.identity_residuals()) < 1e-12


@given(coef, coef, coef, coef)
def test_alpha_zero_is_scale_consistent(beta, eta, sigma, c):
    cub = reduce(PhysicalSystem(0.0, beta, eta, 1.0, sigma, 2.0, c))
    assert cub.A == -c and cub.B == eta / 2 and cub.C == beta / 3


def test_reduce_errors():
    with pytest.raises(EpsilonZero):
        PhysicalSystem(0, 1, 0, 1, 1, 0, 1)
    with pytest.raises(DegenerateCubic):
        reduce(PhysicalSystem(0, 0, 1, 1, 1, 2, 1))
    with pytest.raises(DegenerateCubic):
        cubic_from_coefficients(1, 1, 1e-15)


def test_v_from_u_examples():
    phys = PhysicalSystem(0, 1, 0, 1, 1, 2, -1)
    assert v_from_u(phys, 1.0) == -2.0
    assert v_from_u(phys, 0.0) == 2 * phys.c / phys.epsilon
    p2 = PhysicalSystem(0, 1, 0, 1, 2.5, 3.0, 1.5)
    assert v_from_u(p2, p2.c / p2.sigma) == 0.0


@given(coef, coef, coef, st.floats(-10, 10))
def test_v_from_u_satisfies_integrated_equation(sigma, epsilon, c, u):
    phys = PhysicalSystem(0, 1, 0, 1, sigma, epsilon, c)
    v = v_from_u(phys, u)
    lhs = -c + sigma * u + epsilon / 2 * v
    assert abs(lhs) <= 1e-13 * max(1.0, abs(c), abs(sigma * u))


def test_shift_round_trip():
    cub = cubic_from_coefficients(1.0, 3.0, -1.0)
    assert cub.delta == 1.0
    w = np.linspace(-2, 2, 7)
    assert np.allclose(w_from_u(cub, u_from_w(cub, w)), w)
    assert math.isclose(u_from_w(cub, 0.0), 1.0)
