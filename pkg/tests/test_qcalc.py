from __future__ import annotations

import random

import pytest

from qortho.errors import DivergenceError, DomainError
from qortho.families import Family, Params, coeffs
from qortho.hyper import Polynomial
from qortho.qcalc import (delta_b, dq_fn, dq_poly, jackson_01, jackson_0inf, op_apply,
                          op_delta, op_identity, sobolev_op, sobolev_op_expanded)
from qortho.qcore import q_pochhammer, q_pochhammer_inf

from refdata import QBETA_1_5_2_5_Q0_7


def _rand_poly(rng, deg):
    return Polynomial([rng.uniform(-2, 2) for _ in range(deg + 1)])


def test_dq_fn_cases():
    assert dq_fn(lambda t: 3.0, 0.7, 0.5) == 0.0
    q, z = 0.5, 0.3
    assert dq_fn(lambda t: t * t, z, q) == pytest.approx((1 + q) * z, rel=1e-13)
    # z = 0 falls back to a symmetric difference
    assert dq_fn(lambda t: 2.0 * t, 0.0, q) == pytest.approx(2.0, rel=1e-9)


def test_dq_fn_matches_dq_poly():
    p = Params(q=0.5, gamma=0.3, xi=0.7)
    cs = coeffs(Family.LITTLE_Q_JACOBI, 3, p)
    z = 0.3
    assert dq_fn(cs, z, 0.5) == pytest.approx(dq_poly(cs, 0.5)(z), rel=1e-12)


def test_dq_poly_cases():
    assert dq_poly(Polynomial([5.0]), 0.5).coeffs == [0.0]
    q = 0.37
    assert dq_poly(Polynomial([0.0, 0.0, 1.0]), q).coeffs == pytest.approx([0.0, 1 + q])


def test_dq_iterated_monomial_image():
    # c-fold q-derivative of z^{j+c} is z^j (q^{j+1}; q)_c / (1-q)^c
    for q in (0.4, 0.8):
        for c in (1, 2, 3, 4):
            for j in range(11):
                mono = Polynomial([0.0] * (j + c) + [1.0])
                for _ in range(c):
                    mono = dq_poly(mono, q)
                expected = q_pochhammer(q ** (j + 1), q, c) / (1 - q) ** c
                assert mono.degree == j
                assert mono.coeffs[j] == pytest.approx(expected, rel=1e-12)


def test_delta_b_cases():
    q = 0.6
    assert delta_b(Polynomial([4.0]), 1.0, q).coeffs == [0.0]
    assert delta_b(Polynomial([0.0, 1.0]), 2.0, q).coeffs == pytest.approx([0.0, 2 * q - 1])


def test_delta_b_first_order_form():
    # Delta_a y = a (q-1) z D_q y + (a-1) y, checked on a random cubic
    rng = random.Random(11)
    q, a = 0.55, 1.7
    y = _rand_poly(rng, 3)
    direct = delta_b(y, a, q)
    rhs = dq_poly(y, q).shift_up().scale(a * (q - 1)).add(y.scale(a - 1))
    assert direct.coeffs == pytest.approx(rhs.coeffs, rel=1e-13)


def test_q_leibniz_rule():
    # D_q(f g)(z) = f(qz) D_q g(z) + g(z) D_q f(z) on random cubics
    rng = random.Random(5)
    q = 0.45
    for _ in range(10):
        f, g = _rand_poly(rng, 3), _rand_poly(rng, 3)
        lhs = dq_poly(f.mul(g), q)
        rhs = f.dilate(q).mul(dq_poly(g, q)).add(g.mul(dq_poly(f, q)))
        assert lhs.coeffs == pytest.approx(rhs.coeffs, rel=1e-12, abs=1e-14)


def test_sobolev_op_trivial():
    # c = 1 on the constant 1: D_q(z) = 1
    assert sobolev_op(Polynomial([1.0]), 1, 0.5).coeffs == [1.0]
    with pytest.raises(DomainError):
        sobolev_op(Polynomial([1.0]), 0, 0.5)


def test_sobolev_reduction_identity_jacobi():
    # D_q^c(z^c member) = ((q;q)_c/(1-q)^c) * core member
    q, g, x = 0.5, 0.3, 0.7
    for c in (1, 2):
        p = Params(q=q, gamma=g, xi=x, c=c)
        y = coeffs(Family.GEN_LITTLE_Q_JACOBI, 4, p)
        lhs = sobolev_op(y, c, q)
        fac = q_pochhammer(q, q, c) / (1 - q) ** c
        rhs = coeffs(Family.LITTLE_Q_JACOBI, 4, Params(q=q, gamma=g, xi=x)).scale(fac)
        assert lhs.coeffs == pytest.approx(rhs.coeffs, rel=1e-12)


def test_sobolev_reduction_identity_laguerre():
    q, g = 0.9, 0.1
    p = Params(q=q, gamma=g, c=1)
    y = coeffs(Family.GEN_Q_LAGUERRE, 5, p)
    lhs = sobolev_op(y, 1, q)
    fac = q_pochhammer(q, q, 1) / (1 - q)
    rhs = coeffs(Family.Q_LAGUERRE, 5, Params(q=q, gamma=g)).scale(fac)
    assert lhs.coeffs == pytest.approx(rhs.coeffs, rel=1e-12)


def test_sobolev_op_expanded_matches():
    rng = random.Random(23)
    for c in (1, 2, 3):
        for q in (0.35, 0.5, 0.8):
            for _ in range(4):
                y = _rand_poly(rng, 8)
                a = sobolev_op(y, c, q)
                b = sobolev_op_expanded(y, c, q)
                assert a.coeffs == pytest.approx(b.coeffs, rel=1e-12, abs=1e-12)


def test_sobolev_op_expanded_constant():
    # on y = 1 both give ((q;q)_c/(1-q)^c) * 1 (degree-zero core reduction)
    for c in (1, 2, 3):
        q = 0.5
        fac = q_pochhammer(q, q, c) / (1 - q) ** c
        assert sobolev_op_expanded(Polynomial([1.0]), c, q).coeffs == pytest.approx([fac], rel=1e-13)


def test_jackson_01_basics():
    assert jackson_01(lambda t: 1.0, 0.5) == pytest.approx(1.0, rel=1e-12)
    for q in (0.3, 0.7):
        assert jackson_01(lambda t: t, q) == pytest.approx(1 / (1 + q), rel=1e-12)


def test_jackson_01_beta_value():
    from qortho.qcore import q_power_real

    got = jackson_01(lambda t: t ** 0.5 * q_power_real(t, 1.5, 0.7), 0.7)
    assert got == pytest.approx(QBETA_1_5_2_5_Q0_7, rel=1e-12)


def test_jackson_01_divergence():
    with pytest.raises(DivergenceError):
        jackson_01(lambda t: 1.0 / t**3, 0.5)


def test_jackson_0inf_cases():
    assert jackson_0inf(lambda t: 0.0, 0.5) == 0.0
    # half-line weight with gamma = 0.5 integrates to a finite positive value
    q, g = 0.5, 0.5
    w = lambda t: t**g / q_pochhammer_inf(-t, q)
    val = jackson_0inf(w, q)
    assert val > 0
    # value is stable under a wider starting window
    val2 = jackson_0inf(w, q, start_window=256)
    assert val2 == pytest.approx(val, rel=1e-12)


def test_jackson_0inf_detailed_window():
    from qortho.qcalc import jackson_0inf_detailed

    q = 0.5
    w = lambda t: t**0.5 / q_pochhammer_inf(-t, q)
    res = jackson_0inf_detailed(w, q)
    assert res.k_min < 0 < res.k_max
    assert res.tail_estimate <= 1e-14 * (1 + abs(res.value))
    assert res.value == pytest.approx(jackson_0inf(w, q), rel=1e-15)


def test_op_expr_delta_chain():
    # Delta_a as an operator expression reproduces delta_b coefficientwise
    q, a = 0.5, 1.3
    expr = op_delta(a, op_identity(q), q)
    y = Polynomial([0.7, -1.2, 0.4, 2.0])
    got = op_apply(expr, y, q)
    want = delta_b(y, a, q)
    assert got.coeffs == pytest.approx(want.coeffs, rel=1e-13)
