import math
from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from wronskit import (
    OperatorBase,
    OperatorPower,
    Trig,
    TrigPoly,
    apply_operator,
    basis_element,
    differentiate,
    eval_at_zero,
    harmonic_step,
    is_constant,
    monomial_derivative,
)
from oracles import central_difference, eval_float, random_trigpoly

S = basis_element(0, Trig.SIN)
C = basis_element(0, Trig.COS)

terms = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 2)),
    st.integers(-4, 4),
    max_size=4,
)
trigpolys = st.builds(TrigPoly, terms, terms)


def test_pythagorean_collapse():
    assert S * S + C * C == 1
    assert S * S == TrigPoly({(0, 0): 1, (0, 2): -1})


def test_mixed_product_keeps_s_degree_one():
    u = (S + C) * (S + C)
    # s^2 + 2sc + c^2 = 1 + 2sc
    assert u == TrigPoly({(0, 0): 1}, {(0, 1): 2})


def test_scalar_arithmetic():
    u = basis_element(1, Trig.SIN)
    assert 2 * u == u + u
    assert u - u == TrigPoly.zero()
    assert Fraction(1, 2) * (u + u) == u
    assert -(-u) == u
    assert (3 - (3 - u)) == u


def test_equality_against_scalars():
    assert TrigPoly.constant(5) == 5
    assert TrigPoly.constant(Fraction(1, 2)) == Fraction(1, 2)
    assert TrigPoly.zero() == 0
    assert not (S == 0)


def test_derivative_chain_of_x_sin_x():
    f = basis_element(1, Trig.SIN)
    d1 = differentiate(f)
    assert d1 == S + basis_element(1, Trig.COS)
    d4 = monomial_derivative(1, Trig.SIN, 4)
    assert d4 == f - 4 * C


def test_basic_derivatives():
    assert differentiate(S) == C
    assert differentiate(C) == -S
    assert differentiate(basis_element(1, Trig.COS)) == C - basis_element(1, Trig.SIN)
    assert differentiate(TrigPoly.constant(7)) == 0


def test_harmonic_step_examples():
    assert harmonic_step(basis_element(1, Trig.SIN)) == 2 * C
    g = basis_element(2, Trig.SIN)
    assert harmonic_step(harmonic_step(g)) == -8 * S


def test_apply_operator():
    f = basis_element(1, Trig.SIN)
    d = OperatorPower(OperatorBase.DERIVATIVE, 4)
    assert apply_operator(d, f) == monomial_derivative(1, Trig.SIN, 4)
    h = OperatorPower(OperatorBase.HARMONIC, 2)
    assert apply_operator(h, basis_element(2, Trig.SIN)) == -8 * S
    ident = OperatorPower(OperatorBase.HARMONIC, 0)
    assert apply_operator(ident, f) == f


def test_operator_power_rejects_negative_exponent():
    with pytest.raises(ValueError):
        OperatorPower(OperatorBase.DERIVATIVE, -1)


def test_annihilation_and_nonvanishing():
    for n in range(0, 7):
        for kind in (Trig.SIN, Trig.COS):
            u = basis_element(n, kind)
            for k in range(n):
                u = harmonic_step(u)
                assert u != 0, f"(D^2+1)^{k + 1} killed x^{n} {kind.value} too early"
            assert harmonic_step(u) == 0


def test_initial_conditions():
    for n in range(0, 7):
        for k in range(n + 1):
            assert eval_at_zero(monomial_derivative(n, Trig.SIN, k)) == 0
    assert eval_at_zero(monomial_derivative(1, Trig.SIN, 2)) == 2


def test_eval_at_zero_uses_cos_equal_one():
    u = TrigPoly({(0, 3): Fraction(1, 2), (0, 0): 1, (2, 1): 9}, {(0, 0): 4})
    assert eval_at_zero(u) == Fraction(3, 2)


def test_is_constant():
    assert is_constant(TrigPoly.zero()) == 0
    assert is_constant(TrigPoly.constant(Fraction(-3, 7))) == Fraction(-3, 7)
    assert is_constant(S) is None
    assert is_constant(basis_element(1, Trig.COS)) is None
    assert is_constant(S * S + C * C) == 1


def test_rendering_is_deterministic_and_ordered():
    u = monomial_derivative(1, Trig.SIN, 2)
    assert str(u) == "-x*s + 2*c"
    assert str(TrigPoly.zero()) == "0"
    assert str(TrigPoly.constant(Fraction(-3, 2))) == "-3/2"
    v = TrigPoly({(1, 1): 1}, {(0, 0): 1})
    assert str(v) == "s + x*c"
    assert str(u) == str(differentiate(differentiate(basis_element(1, Trig.SIN))))


def test_basis_element_rejects_negative_power():
    with pytest.raises(ValueError):
        basis_element(-1, Trig.SIN)


def test_canonical_zero_cleanup():
    u = TrigPoly({(0, 0): 0, (1, 1): 2}, {(2, 0): 0})
    assert dict(u.p) == {(1, 1): 2}
    assert dict(u.q) == {}


@given(trigpolys, trigpolys)
@settings(deadline=None)
def test_leibniz_rule(u, v):
    assert differentiate(u * v) == differentiate(u) * v + u * differentiate(v)


@given(trigpolys, trigpolys, trigpolys)
@settings(deadline=None)
def test_ring_axioms(u, v, w):
    assert u + v == v + u
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w


@given(trigpolys)
@settings(deadline=None)
def test_derivative_is_additive(u):
    assert differentiate(u + u) == 2 * differentiate(u)


def test_differentiate_matches_finite_differences():
    rng = Random(20260817)
    for _ in range(20):
        u = random_trigpoly(rng)
        du = differentiate(u)
        for x0 in (0.3, 0.7, 1.1):
            exact = eval_float(du, x0)
            approx = central_difference(u, x0, step=1e-5)
            assert abs(approx - exact) <= 1e-6 * max(1.0, abs(exact))


def test_float_oracle_agrees_on_known_function():
    # sanity for the oracle itself: x sin x at 0.7
    f = basis_element(1, Trig.SIN)
    assert math.isclose(eval_float(f, 0.7), 0.7 * math.sin(0.7), rel_tol=1e-12)
