"""Scalar q-calculus building blocks.

Everything here is elementary: q-numbers, q-shifted factorials (finite and
infinite), the q-gamma/q-beta pair, q-binomials, q-power products and the
classical rising factorial.  Two conventions hold throughout the package:

* q is a real base strictly inside (0, 1); boundary values are rejected.
* factors of the form 1 - q**e are computed through ``one_minus_qpow`` so
  they keep full *relative* accuracy as q -> 1 (plain ``1 - q**e`` loses
  the leading digits precisely in the regime the q -> 1 studies probe).

All functions accept ``fractions.Fraction`` inputs and then stay exact,
which is what the rational oracle mode builds on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, TruncationError

Q_EPS = 1e-12


@dataclass(frozen=True)
class Tolerances:
    """Truncation controls for infinite sums and products.

    series_tol is a relative tail bound; max_terms is a hard iteration cap
    after which TruncationError is raised.
    """

    series_tol: float = 1e-14
    max_terms: int = 10**6

    def __post_init__(self):
        if not self.series_tol > 0:
            raise DomainError("series_tol must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be at least 1")


DEFAULT_TOL = Tolerances()


def _is_exact(x) -> bool:
    return isinstance(x, (Fraction, int))


def validate_q(q):
    """Check 0 < q < 1 away from both boundaries, return q unchanged."""
    if isinstance(q, Fraction):
        if not (0 < q < 1):
            raise DomainError(f"q must lie strictly inside (0, 1), got {q}")
        return q
    qf = float(q)
    if not (Q_EPS < qf < 1.0 - Q_EPS):
        raise DomainError(f"q must lie in ({Q_EPS}, {1 - Q_EPS}), got {q}")
    return q


def qpow(q, e):
    """q**e; exact for Fraction q with integral e, ordinary pow otherwise."""
    if isinstance(q, Fraction):
        if _is_exact(e):
            return q ** int(e)
        raise DomainError("exact mode requires integer exponents")
    return math.exp(e * math.log(q)) if e else 1.0


def one_minus_qpow(q, e):
    """1 - q**e without cancellation; exactly 0 when e == 0.

    Float path uses -expm1(e*log q), which keeps relative accuracy even for
    |e*log q| ~ 1e-5 where direct subtraction loses five digits.
    """
    if isinstance(q, Fraction):
        if _is_exact(e):
            return 1 - q ** int(e)
        raise DomainError("exact mode requires integer exponents")
    return -math.expm1(e * math.log(q))


def q_number(a, q):
    """[a]_q = (q^a - 1)/(q - 1); tends to a as q -> 1."""
    validate_q(q)
    return one_minus_qpow(q, a) / (1 - q)


def q_pochhammer(b, q, k: int):
    """Finite q-shifted factorial (b; q)_k = prod_{j<k} (1 - b q^j)."""
    validate_q(q)
    if k < 0:
        raise DomainError("q_pochhammer order must be nonnegative")
    prod = 1
    for j in range(k):
        prod *= 1 - b * q**j
    return prod


def q_pochhammer_exp(e, q, k: int):
    """(q^e; q)_k with the base given by its exponent.

    The factor at j is 1 - q^(e+j), so the product is *exactly* zero as soon
    as e + j hits 0 -- the termination mechanism of every q^{-n} numerator
    parameter.
    """
    validate_q(q)
    if k < 0:
        raise DomainError("q_pochhammer order must be nonnegative")
    prod = 1
    for j in range(k):
        prod *= one_minus_qpow(q, e + j)
    return prod


def q_pochhammer_inf(b, q, tol: Tolerances = DEFAULT_TOL):
    """Infinite product (b; q)_inf.

    Truncated once |b| q^j < series_tol * (1 - q): the log-tail of the
    remaining factors is bounded by sum_j |b| q^j / (1-q)-type geometric
    bounds, so this is a genuine relative tail criterion.
    """
    validate_q(q)
    cutoff = tol.series_tol * (1 - float(q))
    prod = 1
    scale = abs(float(b))
    qj = 1
    for j in range(tol.max_terms):
        if scale * float(qj) < cutoff:
            return prod
        prod *= 1 - b * qj
        if prod == 0:
            return prod
        qj = qj * q
    raise TruncationError("q_pochhammer_inf: max_terms exceeded before tail bound")


def q_gamma(e, q, tol: Tolerances = DEFAULT_TOL):
    """Gamma_q(e) = (q;q)_inf / (q^e;q)_inf * (1-q)^(1-e) for e > 0."""
    if not e > 0:
        raise DomainError("q_gamma requires a positive argument")
    validate_q(q)
    num = q_pochhammer_inf(q, q, tol)
    den = q_pochhammer_inf(qpow(q, e), q, tol)
    return num / den * (1 - q) ** (1 - e)


def q_beta(a, b, q, tol: Tolerances = DEFAULT_TOL):
    """beta_q(a, b) = Gamma_q(a) Gamma_q(b) / Gamma_q(a+b)."""
    if not (a > 0 and b > 0):
        raise DomainError("q_beta requires positive arguments")
    return q_gamma(a, q, tol) * q_gamma(b, q, tol) / q_gamma(a + b, q, tol)


def q_binomial(n: int, k: int, q):
    """Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k})."""
    if not (0 <= k <= n):
        raise DomainError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    validate_q(q)
    num = q_pochhammer(q, q, n)
    return num / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k))


def q_power(x, y, q, n: int):
    """(x + y)_q^n = prod_{j=0}^{n-1} (x + q^j y), with the empty product 1."""
    validate_q(q)
    if n < 0:
        raise DomainError("q_power exponent must be nonnegative")
    prod = 1
    for j in range(n):
        prod *= x + q**j * y
    return prod


def q_power_real(x_shift, beta, q, tol: Tolerances = DEFAULT_TOL):
    """(1 - q*t)_q^beta for real beta, as (q t; q)_inf / (q^{beta+1} t; q)_inf.

    ``x_shift`` is t.  For integer beta this agrees with the finite product
    q_power(1, -q*t, q, beta).
    """
    validate_q(q)
    return q_pochhammer_inf(q * x_shift, q, tol) / q_pochhammer_inf(qpow(q, beta + 1) * x_shift, q, tol)


def rising_factorial(s, l: int):
    """Classical rising factorial (s)_l = s (s+1) ... (s+l-1)."""
    if l < 0:
        raise DomainError("rising_factorial order must be nonnegative")
    prod = 1
    for j in range(l):
        prod *= s + j
    return prod
