"""Closed-form four-term recurrence coefficients and recurrence evaluation.

Both generalized families satisfy a four-term relation linking degrees
n-2 .. n+1 with coefficients that are degree-one in z:

    jacobi-type:    mu1 y_{n-2} + (mu2 + z mu5) y_{n-1}
                        + (mu3 + z mu6) y_n + mu4 y_{n+1} = 0
    laguerre-type:  q mu1' y_{n-2} + (q mu2' - z mu5') y_{n-1}
                        + (q mu3' - z mu6') y_n + q mu4' y_{n+1} = 0

Note the minus signs in the laguerre-type arrangement: the relation is the
b -> -inf degeneration of the jacobi-type one under z -> -z/(bq), and the
sign travels with the substituted variable.  (Residual tests over parameter
grids arbitrate this; the plus-sign variant fails them at order one.)

The n = 0, 1 coefficients that multiply surviving terms are hard-coded
special cases; the general closed forms below hold for n >= 2.  Brackets
[b; q]_i = (1-b)(1-b/q)...(1-b q^{1-i}) appear as literal products.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, PivotError
from .families import Family, Params, coeffs, eval as family_eval
from .hyper import Polynomial
from .qcore import one_minus_qpow, qpow

_RECURRENT = (Family.GEN_LITTLE_Q_JACOBI, Family.GEN_Q_LAGUERRE)


@dataclass(frozen=True)
class FourTermCoeffs:
    """Raw recurrence coefficients mu_1..mu_6 at degree index n."""

    family: Family
    n: int
    q: object
    mu1: object
    mu2: object
    mu3: object
    mu4: object
    mu5: object
    mu6: object

    def row(self):
        """Coefficients (a1, a2, a3, a4, b5, b6) of the normalized row

        a1 y_{n-2} + (a2 + z b5) y_{n-1} + (a3 + z b6) y_n + a4 y_{n+1} = 0.
        """
        if self.family is Family.GEN_LITTLE_Q_JACOBI:
            return self.mu1, self.mu2, self.mu3, self.mu4, self.mu5, self.mu6
        q = self.q
        return q * self.mu1, q * self.mu2, q * self.mu3, q * self.mu4, -self.mu5, -self.mu6


def _brk(q, e, i: int):
    """[q^e; q]_i = prod_{j=0}^{i-1} (1 - q^(e-j))."""
    prod = 1
    for j in range(i):
        prod *= one_minus_qpow(q, e - j)
    return prod


def mu_jacobi(n: int, p: Params) -> FourTermCoeffs:
    """Recurrence coefficients for the generalized little q-Jacobi family."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if not p.c > 0:
        raise DomainError("recurrence coefficients need c > 0")
    q, g, x, c = p.q, p.gamma, p.xi, p.c
    omq = lambda e: one_minus_qpow(q, e)
    mu6 = _brk(q, 2 * n + g + x + 2, 2) * omq(n + g + x) * omq(n + 1)
    mu4 = qpow(q, n) * omq(g + n + 1) * omq(c + n + 1) * _brk(q, n + g + x + 1, 2)
    mu5 = -q * omq(n) * omq(n + g + x - 1) * _brk(q, 2 * n + g + x + 2, 2)
    if n == 0:
        mu2 = 0 * q
        mu3 = -omq(g + 1) * omq(c + 1) * _brk(q, g + x + 1, 2)
    elif n == 1:
        mu2 = (q * omq(g + 1) * omq(c + 1) * omq(g + x) * _brk(q, g + x + 4, 2) / omq(g + x + 2)
               - q * omq(g + 2) * omq(c + 2) * _brk(q, g + x + 2, 2)
               + (1 + q) * omq(g + 2) * omq(c + 2) * omq(g + x + 1) * omq(g + x + 3)
               - (1 + q) * omq(g + 1) * omq(c + 1) * omq(g + x + 1) * _brk(q, g + x + 4, 2) / omq(g + x + 2))
        # the 1/[q^{g+x+2}; q]_2 inner pole at g + x = -1 is removable: its
        # (1 - q^{g+x+1}) factor cancels against the prefactor
        mu3 = (-omq(g + x + 3) * q * omq(g + 1) * omq(c + 1) * omq(g + x) * omq(g + x + 4)
               / omq(g + x + 2)
               - omq(g + x + 1) * omq(g + x + 3) * (
                   (1 + q) * omq(g + 2) * omq(c + 2)
                   - (1 + q) * omq(g + 1) * omq(c + 1) * omq(g + x + 4) / omq(g + x + 2)))
    else:
        mu3 = -omq(2 * n + g + x + 1) * omq(n + g + x) * (
            omq(n + 1) * omq(g + n + 1) * omq(c + n + 1) / (1 - q)
            + qpow(q, n) * omq(n + g + x - 1) * omq(g + n) * omq(c + n) * omq(2 * n + g + x + 2) / _brk(q, 2 * n + g + x, 2)
            - omq(g + n) * omq(c + n) * omq(2 * n + g + x + 2) * omq(n + 1) / ((1 - q) * omq(2 * n + g + x)))
        mu2 = (omq(2 * n + g + x - 1) * _brk(q, n + 1, 2) * omq(g + n + 1) * omq(c + n + 1) * omq(2 * n + g + x + 1) / (qpow(q, n - 1) * (1 - q) ** 2)
               + q * omq(n + g + x - 1) * omq(g + n) * omq(c + n) * omq(n) * _brk(q, 2 * n + g + x + 2, 2) / ((1 - q) * omq(2 * n + g + x))
               - omq(2 * n + g + x - 1) * omq(g + n) * omq(c + n) * _brk(q, n + 1, 2) * _brk(q, 2 * n + g + x + 2, 2) / (qpow(q, n - 1) * (1 - q) ** 2 * omq(2 * n + g + x))
               - _brk(q, 2 * n + g + x, 2) * omq(g + n + 1) * omq(c + n + 1) * _brk(q, n + 1, 2) / (qpow(q, n - 2) * _brk(q, 2, 2))
               - q * omq(n + g + x - 1) * omq(g + n - 1) * omq(c + n - 1) * omq(n) * _brk(q, 2 * n + g + x + 2, 2) / ((1 - q) * omq(2 * n + g + x - 2))
               + _brk(q, 2 * n + g + x + 2, 2) * omq(g + n - 1) * omq(c + n - 1) * _brk(q, n + 1, 2) / (qpow(q, n - 2) * _brk(q, 2, 2)))
    mu1 = -mu2 - mu3 - mu4
    return FourTermCoeffs(Family.GEN_LITTLE_Q_JACOBI, n, q, mu1, mu2, mu3, mu4, mu5, mu6)


def mu_laguerre(n: int, p: Params) -> FourTermCoeffs:
    """Recurrence coefficients for the generalized q-Laguerre family."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if not p.c > 0:
        raise DomainError("recurrence coefficients need c > 0")
    q, g, c = p.q, p.gamma, p.c
    omq = lambda e: one_minus_qpow(q, e)
    mu3 = -qpow(q, 3 * n + 2 * g + 1) * (
        omq(n + 1) * omq(g + n + 1) * omq(c + n + 1) / (1 - q)
        + q**2 * omq(g + n) * omq(c + n)
        - q**2 * omq(n + 1) * omq(g + n) * omq(c + n) / (1 - q))
    mu4 = qpow(q, 3 * n + 2 * g + 1) * omq(g + n + 1) * omq(c + n + 1)
    mu6 = -qpow(q, 5 * n + 3 * g + 3) * omq(n + 1)
    if n == 0:
        mu1 = mu2 = mu5 = 0 * q
    elif n == 1:
        mu1 = 0 * q
        mu5 = qpow(q, 3 * g + 8) * (1 - q)
        mu2 = qpow(q, 2 * g + 5) * omq(g + 2) * omq(c + 2) - qpow(q, 2 * g + 7) * omq(g + 1) * omq(c + 1)
    else:
        mu5 = qpow(q, 5 * n + 3 * g + 3) * omq(n)
        mu2 = (qpow(q, 3 * n + 2 * g + 1) * omq(g + n + 1) * omq(c + n + 1) * _brk(q, n + 1, 2) / (1 - q) ** 2
               + qpow(q, 3 * n + 2 * g + 3) * omq(g + n) * omq(c + n) * omq(n) / (1 - q)
               - qpow(q, 3 * n + 2 * g + 3) * omq(g + n) * omq(c + n) * _brk(q, n + 1, 2) / (1 - q) ** 2
               - qpow(q, 3 * n + 2 * g + 1) * omq(g + n + 1) * omq(c + n + 1) * _brk(q, n + 1, 2) / _brk(q, 2, 2)
               - qpow(q, 3 * n + 2 * g + 5) * omq(g + n - 1) * omq(c + n - 1) * omq(n) / (1 - q)
               + qpow(q, 3 * n + 2 * g + 5) * omq(g + n - 1) * omq(c + n - 1) * _brk(q, n + 1, 2) / _brk(q, 2, 2))
        mu1 = -mu2 - mu3 - mu4
    return FourTermCoeffs(Family.GEN_Q_LAGUERRE, n, q, mu1, mu2, mu3, mu4, mu5, mu6)


def recurrence_coeffs(family: Family, n: int, p: Params) -> FourTermCoeffs:
    if family is Family.GEN_LITTLE_Q_JACOBI:
        return mu_jacobi(n, p)
    if family is Family.GEN_Q_LAGUERRE:
        return mu_laguerre(n, p)
    raise DomainError(f"no four-term recurrence for {family.value}")


def recurrence_residual(family: Family, n: int, p: Params, z) -> float:
    """Normalized residual of the four-term relation at degree index n.

    y_{-1} = y_{-2} = 0.  The residual is |sum of the four terms| divided by
    the largest term-magnitude *scale*, where each member's scale is
    sum_k |c_k| |z|^k rather than the evaluated value: near alternating-series
    cancellation the values themselves sit at the rounding floor of that
    scale, and a value-based normalization would report input noise instead
    of the identity's accuracy.
    """
    a1, a2, a3, a4, b5, b6 = recurrence_coeffs(family, n, p).row()
    members = [coeffs(family, k, p) if k >= 0 else None for k in (n - 2, n - 1, n, n + 1)]
    vals = [m(z) if m is not None else 0 for m in members]
    mags = [sum(abs(ck) * abs(z) ** k for k, ck in enumerate(m)) if m is not None else 0
            for m in members]
    weights = [abs(a1), abs(a2) + abs(z) * abs(b5), abs(a3) + abs(z) * abs(b6), abs(a4)]
    terms = [a1 * vals[0], (a2 + z * b5) * vals[1], (a3 + z * b6) * vals[2], a4 * vals[3]]
    scale = max(w * m for w, m in zip(weights, mags))
    total = terms[0] + terms[1] + terms[2] + terms[3]
    if scale == 0:
        return abs(total)
    return abs(total) / scale


def eval_by_recurrence(family: Family, N: int, p: Params, z) -> list:
    """Forward solve for y_0 .. y_N at z; seeds y_0 = 1 and y_1 from the series."""
    if family not in _RECURRENT:
        raise DomainError(f"no four-term recurrence for {family.value}")
    if N < 0:
        raise DomainError("N must be nonnegative")
    out = [1]
    if N >= 1:
        out.append(family_eval(family, 1, p, z))
    for n in range(1, N):
        a1, a2, a3, a4, b5, b6 = recurrence_coeffs(family, n, p).row()
        if abs(a4) < 1e-250:
            raise PivotError(n)
        ym2 = out[n - 2] if n >= 2 else 0
        out.append(-(a1 * ym2 + (a2 + z * b5) * out[n - 1] + (a3 + z * b6) * out[n]) / a4)
    return out


def recurrence_polynomials(family: Family, N: int, p: Params) -> list[Polynomial]:
    """Coefficient vectors y_0..y_N generated by the recurrence (series-seeded)."""
    if family not in _RECURRENT:
        raise DomainError(f"no four-term recurrence for {family.value}")
    polys = [coeffs(family, 0, p)]
    if N >= 1:
        polys.append(coeffs(family, 1, p))
    for n in range(1, N):
        a1, a2, a3, a4, b5, b6 = recurrence_coeffs(family, n, p).row()
        if abs(a4) < 1e-250:
            raise PivotError(n)
        acc = polys[n].scale(a3).add(polys[n].shift_up().scale(b6))
        acc = acc.add(polys[n - 1].scale(a2)).add(polys[n - 1].shift_up().scale(b5))
        if n >= 2:
            acc = acc.add(polys[n - 2].scale(a1))
        polys.append(acc.scale(-1 / a4))
    return polys
