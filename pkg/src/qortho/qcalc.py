"""q-difference operators and Jackson integrals.

Operator work on polynomials happens on monomial coefficient vectors -- the
maps are exact and immune to the catastrophic cancellation that pointwise
differencing suffers near q -> 1.  The module also provides a small algebra
of operator expressions (dicts mapping q-derivative order to a polynomial
coefficient in z), which is how the higher-order q-difference equations are
assembled from Delta_b chains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivergenceError, DomainError, TruncationError
from .hyper import Polynomial
from .qcore import DEFAULT_TOL, Tolerances, q_pochhammer, validate_q


def dq_fn(f, z, q):
    """q-difference quotient (f(qz) - f(z)) / ((q-1) z) of a raw callable.

    At z = 0 the operator equals f'(0); lacking a derivative we fall back to
    a symmetric difference with step 1e-6.  Library code never hits this
    branch (polynomial paths use dq_poly).
    """
    validate_q(q)
    if z == 0:
        h = 1e-6
        return (f(h) - f(-h)) / (2 * h)
    return (f(q * z) - f(z)) / ((q - 1) * z)


def dq_poly(poly: Polynomial, q) -> Polynomial:
    """Exact q-derivative on coefficients: z^k -> [k]_q z^(k-1)."""
    validate_q(q)
    qm1 = q - 1
    return Polynomial([poly[k] * (q**k - 1) / qm1 for k in range(1, len(poly))] or [0 * poly[0]])


def delta_b(poly: Polynomial, b, q) -> Polynomial:
    """Delta_b f(z) = b f(qz) - f(z); coefficient k picks up (b q^k - 1)."""
    validate_q(q)
    return Polynomial([c * (b * q**k - 1) for k, c in enumerate(poly)])


def sobolev_op(poly: Polynomial, c: int, q) -> Polynomial:
    """The order-c Sobolev-type operator y -> D_q^c (z^c y)."""
    if c < 1 or int(c) != c:
        raise DomainError(f"sobolev_op requires integer c >= 1, got {c}")
    out = poly.shift_up(int(c))
    for _ in range(int(c)):
        out = dq_poly(out, q)
    return out


def sobolev_op_expanded(poly: Polynomial, c: int, q) -> Polynomial:
    """Same operator through its expansion sum_j d_j(z) D_q^j y with

        d_j(z) = ((q;q)_c/(q;q)_j)^2 * q^(j^2) / ((q;q)_{c-j} (1-q)^(c-j)) * z^j.

    The q-power is q^(j^2): the j-th q-Leibniz term evaluates the surviving
    monomial at q^j z, contributing (q^j)^j.  Must agree with sobolev_op
    coefficientwise; the equality validates the closed form of the d_j.
    """
    if c < 1 or int(c) != c:
        raise DomainError(f"sobolev_op_expanded requires integer c >= 1, got {c}")
    c = int(c)
    validate_q(q)
    poch_c = q_pochhammer(q, q, c)
    acc = Polynomial([0 * poly[0]])
    deriv = poly
    for j in range(c + 1):
        dj = (poch_c / q_pochhammer(q, q, j)) ** 2 * q ** (j * j) / (
            q_pochhammer(q, q, c - j) * (1 - q) ** (c - j))
        acc = acc.add(deriv.shift_up(j).scale(dj))
        deriv = dq_poly(deriv, q)
    return acc


def jackson_01(f, q, tol: Tolerances = DEFAULT_TOL):
    """Jackson integral on [0, 1]: (1-q) sum_{k>=0} q^k f(q^k)."""
    validate_q(q)
    qf = float(q)
    terms = []
    small_streak = 0
    qk = 1.0
    acc = 0.0
    for k in range(tol.max_terms):
        t = qk * f(qk)
        terms.append(t)
        acc += t
        # geometric tail bound: remaining mass < |t| * q/(1-q) once f stops growing
        if abs(t) * qf / (1 - qf) <= tol.series_tol * (1 + abs(acc)):
            small_streak += 1
            if small_streak >= 3:
                return (1 - qf) * math.fsum(terms)
        else:
            small_streak = 0
        if k > 64 and abs(t) > 1e100:
            raise DivergenceError("jackson_01: summand is not decaying")
        qk *= qf
    raise TruncationError("jackson_01: max_terms exceeded")


def jackson_0inf(f, q, tol: Tolerances = DEFAULT_TOL, start_window: int = 64, max_window: int = 1 << 14):
    """Bilateral Jackson integral on [0, inf): (1-q) sum_{k in Z} q^k f(q^k)."""
    return jackson_0inf_detailed(f, q, tol, start_window, max_window).value


def jackson_0inf_detailed(f, q, tol: Tolerances = DEFAULT_TOL, start_window: int = 64,
                          max_window: int = 1 << 14) -> "QLatticeSum":
    """Bilateral Jackson sum with its truncation window and tail estimate.

    The window [-K, K] starts at K = 64 and doubles until both edge terms
    are below the tolerance and widening by 8 on each side changes the
    value by less than series_tol relative.
    """
    validate_q(q)
    qf = float(q)
    K = start_window
    while K <= max_window:
        terms = [qf**k * f(qf**k) for k in range(-K, K + 1)]
        val = (1 - qf) * math.fsum(terms)
        if not math.isfinite(val):
            raise DivergenceError("jackson_0inf: summand diverges")
        edge = max(abs(terms[0]), abs(terms[-1]))
        pad = math.fsum(qf**k * f(qf**k) for k in list(range(-K - 8, -K)) + list(range(K + 1, K + 9)))
        widened = val + (1 - qf) * pad
        if edge <= tol.series_tol * (1 + abs(val)) and abs(widened - val) <= tol.series_tol * (1 + abs(val)):
            return QLatticeSum(widened, -K - 8, K + 8, abs(widened - val))
        K *= 2
    raise TruncationError("jackson_0inf: window cap reached before tail bound")


# ---------------------------------------------------------------------------
# Operator expressions: dict {derivative order k: Polynomial l_k(z)} meaning
# sum_k l_k(z) D_q^k.  Used to build the third-order q-difference equations
# from Delta_b chains exactly, in the D_q basis.
# ---------------------------------------------------------------------------

OpExpr = dict


def op_identity(q) -> OpExpr:
    one = Fraction(1) if isinstance(q, Fraction) else 1.0
    return {0: Polynomial([one])}


def op_dq(expr: OpExpr, q) -> OpExpr:
    """Left-compose with D_q using D(f g) = f(qz) Dg + (Df) g."""
    out: OpExpr = {}
    for k, ck in expr.items():
        _accum(out, k + 1, ck.dilate(q))
        d = dq_poly(ck, q)
        if d.degree > 0 or d[0] != 0:
            _accum(out, k, d)
    return out


def op_delta(a, expr: OpExpr, q) -> OpExpr:
    """Left-compose with Delta_a = a (q-1) z D_q + (a - 1)."""
    d = op_dq(expr, q)
    out: OpExpr = {}
    for k, ck in d.items():
        _accum(out, k, ck.shift_up().scale(a * (q - 1)))
    if a != 1:
        for k, ck in expr.items():
            _accum(out, k, ck.scale(a - 1))
    return out


def op_dilate(expr: OpExpr, q) -> OpExpr:
    """Left-compose with the dilation (E f)(z) = f(qz), via E = 1 + (q-1) z D_q."""
    out: OpExpr = {}
    for k, ck in expr.items():
        ckq = ck.dilate(q)
        _accum(out, k, ckq)
        _accum(out, k + 1, ckq.shift_up().scale(q - 1))
    return out


def op_mul_z(expr: OpExpr, s=1) -> OpExpr:
    """Multiply the operator by s * z on the left."""
    return {k: ck.shift_up().scale(s) for k, ck in expr.items()}


def op_sub(e1: OpExpr, e2: OpExpr) -> OpExpr:
    out = {k: ck for k, ck in e1.items()}
    for k, ck in e2.items():
        _accum(out, k, ck.scale(-1))
    return out


def op_apply(expr: OpExpr, poly: Polynomial, q) -> Polynomial:
    """Apply the operator to a polynomial, returning the result polynomial."""
    acc = Polynomial([0 * poly[0]])
    derivs = {0: poly}
    top = max(expr)
    for k in range(1, top + 1):
        derivs[k] = dq_poly(derivs[k - 1], q)
    for k, ck in expr.items():
        acc = acc.add(ck.mul(derivs[k]))
    return acc


def op_apply_at(expr: OpExpr, poly: Polynomial, q, z):
    """Evaluate (operator applied to poly) at z; returns (value, term_scale).

    term_scale is the largest individual |l_k(z) * D^k poly(z)|, the natural
    normalizer for residual checks.
    """
    derivs = {0: poly}
    top = max(expr)
    for k in range(1, top + 1):
        derivs[k] = dq_poly(derivs[k - 1], q)
    parts = [expr[k](z) * derivs[k](z) for k in sorted(expr)]
    total = sum(parts)
    scale = max((abs(p) for p in parts), default=0)
    return total, scale


def _accum(out: OpExpr, k: int, poly: Polynomial):
    if k in out:
        out[k] = out[k].add(poly)
    else:
        out[k] = poly


@dataclass(frozen=True)
class QLatticeSum:
    """Result of a lattice-supported sum with its truncation window."""

    value: float
    k_min: int
    k_max: int
    tail_estimate: float
