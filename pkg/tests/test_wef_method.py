import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from coupledwave.errors import ComplexZeta, ZeroAmplitude
from coupledwave.reduction import PhysicalSystem, v_from_u
from coupledwave.verify import GridSpec, ode_residual, ode_residual_at
from coupledwave.wef_method import (
    DISCRIMINANT_RATIO,
    WEFForm,
    check_restriction,
    coefficient_residuals,
    degree_relation,
    eval_wef_profile,
    jef_form_as_printed,
    restriction_satisfied,
    solve_wef,
    wef_profile,
)

S5 = math.sqrt(5.0)
M2_POS = (3 - S5) / (3 + S5)
mag = st.floats(0.05, 20.0)
sign = st.sampled_from([-1.0, 1.0])


def test_coefficient_equations_symbolic():
    """Oracle: substitute w = tau/P + zeta with P'^2 = 4P^3 - g2 P - g3, P'' = 6P^2 - g2/2."""
    P, tau, zeta, g, A, C, g2, g3 = sp.symbols("P tau zeta gamma A C g2 g3")
    Pp2 = 4 * P**3 - g2 * P - g3
    Ppp = 6 * P**2 - g2 / 2
    # w'' for w = tau/P: tau (2 P'^2 / P^3 - P''/P^2)
    wpp = tau * (2 * Pp2 / P**3 - Ppp / P**2)
    expr = sp.expand((g * wpp - A / 2 * (tau / P + zeta) + C * (tau / P + zeta) ** 3) * P**3)
    poly = sp.Poly(expr, P)
    sol = {zeta: sp.sqrt(A / (6 * C)), tau: A * sp.sqrt(A / (6 * C)) / (6 * g),
           g3: A**3 / (432 * g**3), g2: A**2 / (18 * g**2)}
    for coeff in poly.all_coeffs():
        assert sp.simplify(coeff.subs(sol)) == 0
    assert sp.simplify((g2**3 / (27 * g3**2)).subs(sol)) == sp.Rational(32, 27)


def test_worked_instance():
    s = solve_wef(6.0, 4.0, 1.0, +1)
    assert (s.zeta, s.tau, s.g3) == (0.5, 0.5, 0.5)
    assert s.g2 == pytest.approx(2.0, abs=1e-15)
    assert s.inv.discriminant == pytest.approx(1.25, abs=1e-14)
    assert max(coefficient_residuals(s)) < 1e-15
    m = solve_wef(6.0, 4.0, 1.0, -1)
    assert (m.zeta, m.tau) == (-0.5, -0.5) and m.g2 == s.g2 and m.g3 == s.g3


def test_errors():
    with pytest.raises(ComplexZeta, match="A/C"):
        solve_wef(6.0, -4.0, 1.0)
    with pytest.raises(ZeroAmplitude):
        solve_wef(0.0, 4.0, 1.0)
    with pytest.raises(ValueError):
        solve_wef(6.0, 4.0, 1.0, zeta_branch=0)


def test_restriction_and_degree_relation():
    assert check_restriction(6.0, math.sqrt(108.0), 4.0) == pytest.approx(0.0, abs=1e-12)
    assert check_restriction(1.0, 0.0, 1.0) == -9.0
    assert check_restriction(0.0, 0.0, 7.0) == 0.0
    assert restriction_satisfied(6.0, math.sqrt(108.0), 4.0)
    assert not restriction_satisfied(6.0, 10.0, 4.0)
    assert degree_relation(1, 2) == 0
    assert degree_relation(2, 4) == 0
    assert degree_relation(2, 1) is None
    assert degree_relation(5, 2) == 2
    with pytest.raises(ValueError):
        degree_relation(0, 1)


@settings(max_examples=300)
@given(mag, sign, mag, sign, st.sampled_from([1, -1]))
def test_system_closure_and_ratio(a, sa, g, sg, br):
    A, gamma = sa * a, sg * g
    C = sa * 1.7  # A/C > 0
    s = solve_wef(A, C, gamma, br)
    assert max(coefficient_residuals(s)) < 1e-12
    assert s.g2**3 / (27 * s.g3**2) == pytest.approx(DISCRIMINANT_RATIO, rel=1e-12)
    assert s.inv.discriminant > 0
    assert s.zeta**2 == pytest.approx(A / (6 * C), rel=1e-12)
    assert s.tau**2 == pytest.approx(2 * gamma * s.g3 / C, rel=1e-12)


@settings(max_examples=100)
@given(mag, sign, mag, sign)
def test_modulus_depends_only_on_sign_of_g3(a, sa, g, sg):
    s = solve_wef(sa * a, sa * 2.0, sg * g)
    expect = M2_POS if s.g3 > 0 else 1 - M2_POS
    assert s.m2 == pytest.approx(expect, abs=1e-10)


@pytest.mark.parametrize("branch", [1, -1])
def test_pform_solves_restricted_ode(wef_cubic, branch):
    s = solve_wef(6.0, 4.0, 1.0, branch, B=wef_cubic.B)
    assert s.shift == pytest.approx(-math.sqrt(108.0) / 12)
    w = wef_profile(s, "PForm", shifted=True)
    assert abs(ode_residual_at(w, wef_cubic, 1.0, "ODE43", 0.5, 0.01)) < 1e-8
    rep = ode_residual(w, wef_cubic, 1.0, "ODE43", GridSpec(-10, 10, 2001), poles=(0.0,))
    # the lattice repeats; keep away from every pole
    assert rep.max_abs_residual < 1e-6
    u = wef_profile(s, "PForm")
    xi = np.linspace(0.3, 1.5, 13)
    assert np.max(np.abs(ode_residual_at(u, wef_cubic, 1.0, "ODE15", xi, 0.01))) < 1e-8


def test_jef_equals_pform():
    s = solve_wef(6.0, 4.0, 1.0)
    xi = np.array([0.3, 0.9, 2.0])
    p = wef_profile(s, "PForm")(xi)
    j = wef_profile(s, "JEFForm")(xi)
    assert np.max(np.abs(p - j)) < 1e-10


def test_printed_jef_form_under_normalization():
    # A chosen so that e1 - e3 = 1
    A = 24 / (3 + S5)
    s = solve_wef(A, 4.0, 1.0)
    assert s.inv.e1 - s.inv.e3 == pytest.approx(1.0, abs=1e-14)
    xi = np.array([0.3, 0.9, 2.0])
    printed = jef_form_as_printed(s.tau, s.zeta, s.m2, xi)
    assert np.max(np.abs(printed - wef_profile(s, "PForm")(xi))) < 1e-10
    # without normalization the printed form differs
    s6 = solve_wef(6.0, 4.0, 1.0)
    off = jef_form_as_printed(s6.tau, s6.zeta, s6.m2, xi) - wef_profile(s6, "PForm")(xi)
    assert np.max(np.abs(off)) > 1e-3


def test_tanh_limit_is_not_exact(wef_cubic):
    s = solve_wef(6.0, 4.0, 1.0, B=wef_cubic.B)
    w = wef_profile(s, "TanhLimitAsPrinted", shifted=True)
    assert abs(ode_residual_at(w, wef_cubic, 1.0, "ODE43", 0.5, 0.01)) > 1e-3


def test_eval_wef_profile_physical():
    phys = PhysicalSystem(alpha=0.0, beta=12.0, eta=2 * math.sqrt(108.0), gamma=1.0,
                          sigma=1.0, epsilon=2.0, c=-6.0)
    s = solve_wef(6.0, 4.0, 1.0, B=math.sqrt(108.0))
    u, v = eval_wef_profile(s, WEFForm.PFORM, phys, 1.5, 0.1)
    assert u == pytest.approx(wef_profile(s, "PForm")(1.5 + 0.6), abs=1e-14)
    assert v == pytest.approx(v_from_u(phys, u), abs=1e-14)
    assert WEFForm.parse("jefform") is WEFForm.JEF
