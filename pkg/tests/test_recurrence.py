from __future__ import annotations

import pytest

from qortho.families import Family, Params, eval as feval
from qortho.qcore import one_minus_qpow
from qortho.recurrence import (eval_by_recurrence, mu_jacobi, mu_laguerre, recurrence_coeffs,
                               recurrence_polynomials, recurrence_residual)

GRID_Q = (0.3, 0.5, 0.9)
GRID_GX = (-0.5, 0.1, 0.9)
GRID_C = (1, 2)
GRID_Z = (0.0, 0.25, 0.5, 1.0, 2.0)


def test_mu_jacobi_special_values():
    p = Params(q=0.5, gamma=0.3, xi=0.7, c=1.2)
    f0 = mu_jacobi(0, p)
    assert f0.mu2 == 0
    # mu3(0) = -(1-q^{g+1})(1-q^{c+1})(1-q^{g+x+1})(1-q^{g+x})
    q, g, x, c = 0.5, 0.3, 0.7, 1.2
    expected = -(one_minus_qpow(q, g + 1) * one_minus_qpow(q, c + 1)
                 * one_minus_qpow(q, g + x + 1) * one_minus_qpow(q, g + x))
    assert f0.mu3 == pytest.approx(expected, rel=1e-14)
    assert f0.mu3 + f0.mu4 == pytest.approx(0.0, abs=1e-16)


def test_mu_laguerre_special_values():
    q, g, c = 0.5, 0.3, 1.2
    p = Params(q=q, gamma=g, c=c)
    f0 = mu_laguerre(0, p)
    assert f0.mu1 == 0 and f0.mu2 == 0 and f0.mu5 == 0
    f1 = mu_laguerre(1, p)
    assert f1.mu1 == 0
    assert f1.mu5 == pytest.approx(q ** (3 * g + 8) * (1 - q), rel=1e-14)
    expected_mu2 = (q ** (2 * g + 5) * one_minus_qpow(q, g + 2) * one_minus_qpow(q, c + 2)
                    - q ** (2 * g + 7) * one_minus_qpow(q, g + 1) * one_minus_qpow(q, c + 1))
    assert f1.mu2 == pytest.approx(expected_mu2, rel=1e-13)


def test_sum_constraint():
    for q in GRID_Q:
        for g in GRID_GX:
            for c in GRID_C:
                pl = Params(q=q, gamma=g, c=c)
                for n in range(2, 13):
                    f = mu_laguerre(n, pl)
                    scale = max(abs(f.mu1), abs(f.mu2), abs(f.mu3), abs(f.mu4))
                    assert abs(f.mu1 + f.mu2 + f.mu3 + f.mu4) <= 1e-10 * scale
                for x in GRID_GX:
                    pj = Params(q=q, gamma=g, xi=x, c=c)
                    for n in range(2, 13):
                        f = mu_jacobi(n, pj)
                        scale = max(abs(f.mu1), abs(f.mu2), abs(f.mu3), abs(f.mu4))
                        assert abs(f.mu1 + f.mu2 + f.mu3 + f.mu4) <= 1e-10 * scale


def test_jacobi_residual_n0_two_term():
    p = Params(q=0.5, gamma=0.2, xi=0.2, c=1)
    assert recurrence_residual(Family.GEN_LITTLE_Q_JACOBI, 0, p, 0.5) < 1e-11


def test_residual_sweep():
    for q in GRID_Q:
        for g in GRID_GX:
            for c in GRID_C:
                pl = Params(q=q, gamma=g, c=c)
                for n in (0, 1, 2, 5, 8, 12):
                    for z in GRID_Z:
                        assert recurrence_residual(Family.GEN_Q_LAGUERRE, n, pl, z) < 1e-9


def test_residual_sweep_jacobi():
    for q in GRID_Q:
        for g in GRID_GX:
            for x in GRID_GX:
                p = Params(q=q, gamma=g, xi=x, c=1)
                for n in (0, 1, 2, 5, 8, 12):
                    for z in GRID_Z:
                        assert recurrence_residual(Family.GEN_LITTLE_Q_JACOBI, n, p, z) < 1e-9


def test_residual_specific_rows():
    p = Params(q=0.5, gamma=0.3, xi=0.7, c=1)
    for z in (0.1, 0.5, 0.9):
        assert recurrence_residual(Family.GEN_LITTLE_Q_JACOBI, 3, p, z) < 1e-10
    pl = Params(q=0.9, gamma=0.5, c=1)
    for z in (0.3, 1.1, 2.4):
        assert recurrence_residual(Family.GEN_Q_LAGUERRE, 4, pl, z) < 1e-10


def test_four_term_not_three_term():
    # mu1 is genuinely nonzero somewhere: the relation does not collapse to
    # a three-term recurrence for generic parameters
    p = Params(q=0.5, gamma=0.3, xi=0.7, c=1)
    assert any(abs(mu_jacobi(n, p).mu1) > 1e-8 for n in range(2, 7))
    pl = Params(q=0.5, gamma=0.3, c=1)
    assert any(abs(mu_laguerre(n, pl).mu1) > 1e-8 for n in range(2, 7))


def test_eval_by_recurrence_seeds():
    p = Params(q=0.5, gamma=0.3, xi=0.7, c=1)
    ys = eval_by_recurrence(Family.GEN_LITTLE_Q_JACOBI, 1, p, 0.4)
    assert ys[0] == 1
    assert ys[1] == pytest.approx(feval(Family.GEN_LITTLE_Q_JACOBI, 1, p, 0.4), rel=1e-14)


def test_eval_by_recurrence_matches_series():
    p = Params(q=0.5, gamma=0.3, xi=0.7, c=1)
    ys = eval_by_recurrence(Family.GEN_LITTLE_Q_JACOBI, 10, p, 0.6)
    for k, y in enumerate(ys):
        direct = feval(Family.GEN_LITTLE_Q_JACOBI, k, p, 0.6)
        assert y == pytest.approx(direct, rel=1e-8, abs=1e-12)
    pl = Params(q=0.9, gamma=0.5, c=1)
    ys = eval_by_recurrence(Family.GEN_Q_LAGUERRE, 10, pl, 2.0)
    for k, y in enumerate(ys):
        direct = feval(Family.GEN_Q_LAGUERRE, k, pl, 2.0)
        assert y == pytest.approx(direct, rel=1e-8, abs=1e-12)


def test_recurrence_polynomials_match_series():
    from qortho.families import coeffs

    p = Params(q=0.5, gamma=0.3, xi=0.7, c=1)
    polys = recurrence_polynomials(Family.GEN_LITTLE_Q_JACOBI, 8, p)
    for k, poly in enumerate(polys):
        direct = coeffs(Family.GEN_LITTLE_Q_JACOBI, k, p)
        assert poly.coeffs == pytest.approx(direct.coeffs, rel=1e-8, abs=1e-10)


def test_laguerre_mu_from_jacobi_b_limit():
    # substituting q^xi -> b in the jacobi-type mu4 and scaling by b^2
    # reproduces the laguerre-type mu4 as b -> -inf
    q, g, c = 0.61, 0.37, 1.29
    p = Params(q=q, gamma=g, c=c)
    for n in (2, 4):
        target = mu_laguerre(n, p).mu4
        b = -1e8
        # mu4 = q^n (1-q^{g+n+1})(1-q^{c+n+1}) [q^{n+g+x+1}; q]_2 with q^x = b
        B = q ** (n + g + 1) * b
        val = (q**n * one_minus_qpow(q, g + n + 1) * one_minus_qpow(q, c + n + 1)
               * (1 - B) * (1 - B / q))
        assert val / b**2 == pytest.approx(target, rel=1e-4)


def test_recurrence_coeffs_dispatch():
    p = Params(q=0.5, gamma=0.3, xi=0.7, c=1)
    assert recurrence_coeffs(Family.GEN_LITTLE_Q_JACOBI, 3, p).family is Family.GEN_LITTLE_Q_JACOBI
    assert recurrence_coeffs(Family.GEN_Q_LAGUERRE, 3, p).family is Family.GEN_Q_LAGUERRE
    with pytest.raises(Exception):
        recurrence_coeffs(Family.LITTLE_Q_JACOBI, 3, p)
