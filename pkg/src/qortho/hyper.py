"""Basic hypergeometric series and their coefficient extraction.

A series parameter is usually a signed power of q (q^{-n}, q^{gamma+1},
-q^{xi+n}, or literally 0).  Storing the exponent instead of the realized
value buys two things: termination at k = n is detected *exactly* (the
factor 1 - q^{e+k} is computed from e + k = 0, not from a float comparison),
and every factor keeps full relative accuracy as q -> 1.  Raw numeric
parameters are still accepted for limit experiments where the value is not
a q-power (e.g. the b -> -inf degeneration).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AdmissibilityError, DivergenceError, DomainError, NotAPolynomialError, TruncationError
from .qcore import DEFAULT_TOL, Tolerances, one_minus_qpow, qpow, validate_q

COEFF_FLOOR = 1e-300


class PhiParam:
    """One numerator or denominator parameter of an _m phi_p series."""

    __slots__ = ("sign", "exponent", "raw")

    def __init__(self, sign=None, exponent=None, raw=None):
        self.sign = sign
        self.exponent = exponent
        self.raw = raw

    @classmethod
    def qpow(cls, exponent, sign: int = 1) -> "PhiParam":
        """Parameter sign * q**exponent."""
        if sign not in (-1, 1):
            raise DomainError("sign must be +1 or -1")
        return cls(sign=sign, exponent=exponent)

    @classmethod
    def zero(cls) -> "PhiParam":
        return cls(sign=0, exponent=0)

    @classmethod
    def value(cls, v) -> "PhiParam":
        """Raw numeric parameter (no exact termination detection)."""
        return cls(raw=v)

    @property
    def is_raw(self) -> bool:
        return self.raw is not None

    def value_at(self, q):
        if self.is_raw:
            return self.raw
        if self.sign == 0:
            return 0 * q
        return self.sign * qpow(q, self.exponent)

    def one_minus_shifted(self, q, k: int):
        """1 - a * q^k for this parameter a, computed without cancellation."""
        if self.is_raw:
            return 1 - self.raw * q**k
        if self.sign == 0:
            return 1
        if self.sign > 0:
            return one_minus_qpow(q, self.exponent + k)
        return 1 + qpow(q, self.exponent + k)

    def termination_index(self) -> int | None:
        """n when the parameter is exactly q^{-n} with integer n >= 0."""
        if self.is_raw or self.sign != 1:
            return None
        e = self.exponent
        if isinstance(e, int) and e <= 0:
            return -e
        if isinstance(e, Fraction) and e.denominator == 1 and e <= 0:
            return -int(e)
        if isinstance(e, float) and e.is_integer() and e <= 0:
            return -int(e)
        return None

    def __repr__(self):
        if self.is_raw:
            return f"PhiParam(value={self.raw!r})"
        if self.sign == 0:
            return "PhiParam(0)"
        s = "-" if self.sign < 0 else ""
        return f"PhiParam({s}q^{self.exponent})"


def _as_param(p) -> PhiParam:
    return p if isinstance(p, PhiParam) else PhiParam.value(p)


@dataclass(frozen=True)
class PhiSpec:
    """Parameter lists of an _m phi_p basic hypergeometric series."""

    upper: tuple
    lower: tuple

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(_as_param(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(_as_param(b) for b in self.lower))
        for b in self.lower:
            if b.termination_index() is not None:
                raise AdmissibilityError(f"lower parameter {b!r} equals q^(-n)")

    @property
    def m(self) -> int:
        return len(self.upper)

    @property
    def p(self) -> int:
        return len(self.lower)

    @property
    def power_exponent(self) -> int:
        """Exponent 1 + p - m of the (-1)^k q^(k(k-1)/2) factor."""
        return 1 + self.p - self.m

    def termination_degree(self) -> int | None:
        """Smallest n with q^{-n} among the upper parameters, else None."""
        degs = [t for a in self.upper if (t := a.termination_index()) is not None]
        return min(degs) if degs else None


class Polynomial:
    """Dense monomial-basis polynomial; coefficient k multiplies z^k.

    Coefficients may be float, Fraction or complex; evaluation is plain
    Horner and therefore follows whatever arithmetic the coefficients carry.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = list(coeffs)
        while len(cs) > 1 and abs(cs[-1]) <= COEFF_FLOOR:
            cs.pop()
        if not cs:
            cs = [0.0]
        self.coeffs = cs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z):
        acc = 0 * z
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Polynomial({self.coeffs!r})"

    def dilate(self, s) -> "Polynomial":
        """Coefficients of z -> p(s*z)."""
        out, sk = [], 1
        for c in self.coeffs:
            out.append(c * sk)
            sk = sk * s
        return Polynomial(out)

    def shift_up(self, m: int = 1) -> "Polynomial":
        """Multiply by z^m."""
        return Polynomial([0] * m + self.coeffs)

    def scale(self, s) -> "Polynomial":
        return Polynomial([c * s for c in self.coeffs])

    def add(self, other: "Polynomial", s=1) -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [0] * (n - len(self.coeffs))
        b = other.coeffs + [0] * (n - len(other.coeffs))
        return Polynomial([x + s * y for x, y in zip(a, b)])

    def mul(self, other: "Polynomial") -> "Polynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def max_abs(self) -> float:
        return max(abs(c) for c in self.coeffs)


def phi_term_ratio(spec: PhiSpec, q, k: int, z_scale=1):
    """Ratio coeff_{k+1}/coeff_k of the series with argument z_scale * z.

    Includes the ((-1)^k q^(k(k-1)/2))^(1+p-m) factor through its one-step
    increment (-q^k)^(1+p-m) and the argument scale, so coefficients follow
    by pure multiplication -- no k-term products, no overflow-prone powers.
    """
    validate_q(q)
    if k < 0:
        raise DomainError("term index must be nonnegative")
    num = 1
    for a in spec.upper:
        num = num * a.one_minus_shifted(q, k)
    den = one_minus_qpow(q, k + 1)
    for b in spec.lower:
        f = b.one_minus_shifted(q, k)
        if f == 0:
            raise AdmissibilityError(f"lower parameter {b!r} produces a zero factor at k={k}")
        den = den * f
    d = spec.power_exponent
    power_step = (-(q**k)) ** d if d >= 0 else 1 / ((-(q**k)) ** (-d))
    return num / den * power_step * z_scale


def phi_coeffs(spec: PhiSpec, q, z_scale=1) -> Polynomial:
    """Monomial coefficients of a terminating series in z (argument z_scale*z)."""
    n = spec.termination_degree()
    if n is None:
        raise NotAPolynomialError("series has no q^(-n) upper parameter")
    coeffs = [Fraction(1) if isinstance(q, Fraction) else 1.0]
    for k in range(n):
        coeffs.append(coeffs[-1] * phi_term_ratio(spec, q, k, z_scale))
    return Polynomial(coeffs)


def phi_eval(spec: PhiSpec, q, z, tol: Tolerances = DEFAULT_TOL):
    """Sum the series at argument z (the caller applies any scale to z).

    Terminating series are summed exactly over k = 0..n.  Non-terminating
    series stop on a relative tail bound and raise DivergenceError when the
    terms grow persistently instead.
    """
    validate_q(q)
    n = spec.termination_degree()
    term = Fraction(1) if isinstance(q, Fraction) else 1.0
    terms = [term]
    if n is not None:
        for k in range(n):
            term = term * phi_term_ratio(spec, q, k) * z
            terms.append(term)
        return _sum_values(terms)
    acc = term
    growth = 0
    for k in range(tol.max_terms):
        term = term * phi_term_ratio(spec, q, k) * z
        terms.append(term)
        acc = acc + term
        if abs(term) <= tol.series_tol * (1 + abs(acc)):
            return _sum_values(terms)
        growth = growth + 1 if abs(terms[-1]) > abs(terms[-2]) else 0
        if growth > 64 and abs(term) > 1e100:
            raise DivergenceError("phi_eval: series terms grow without bound")
    raise TruncationError("phi_eval: max_terms exceeded")


def _sum_values(values):
    if any(isinstance(v, complex) for v in values):
        return complex(math.fsum(v.real if isinstance(v, complex) else v for v in values),
                       math.fsum(v.imag if isinstance(v, complex) else 0.0 for v in values))
    if all(isinstance(v, float) for v in values):
        return math.fsum(values)
    return sum(values)


def pFq_term_ratio(upper: Sequence, lower: Sequence, k: int):
    num = 1
    for a in upper:
        num *= a + k
    den = k + 1
    for b in lower:
        if b + k == 0:
            raise AdmissibilityError(f"classical lower parameter {b} hits a pole at k={k}")
        den *= b + k
    return num / den


def _pFq_termination(upper) -> int | None:
    degs = []
    for a in upper:
        fa = float(a)
        if fa <= 0 and abs(fa - round(fa)) < 1e-12:
            degs.append(-round(fa))
    return min(degs) if degs else None


def pFq_coeffs(upper: Sequence, lower: Sequence) -> Polynomial:
    """Coefficients of a terminating classical hypergeometric series."""
    n = _pFq_termination(upper)
    if n is None:
        raise NotAPolynomialError("no negative-integer upper parameter")
    coeffs = [1.0]
    for k in range(n):
        coeffs.append(coeffs[-1] * pFq_term_ratio(upper, lower, k))
    return Polynomial(coeffs)


def pFq_eval(upper: Sequence, lower: Sequence, z, tol: Tolerances = DEFAULT_TOL):
    """Classical _rF_s series; the q -> 1 comparison target."""
    n = _pFq_termination(upper)
    term, terms = 1.0, [1.0]
    if n is not None:
        for k in range(n):
            term = term * pFq_term_ratio(upper, lower, k) * z
            terms.append(term)
        return _sum_values(terms)
    acc = term
    growth = 0
    for k in range(tol.max_terms):
        term = term * pFq_term_ratio(upper, lower, k) * z
        terms.append(term)
        acc += term
        if abs(term) <= tol.series_tol * (1 + abs(acc)):
            return _sum_values(terms)
        growth = growth + 1 if abs(terms[-1]) > abs(terms[-2]) else 0
        if growth > 64 and abs(term) > 1e100:
            raise DivergenceError("pFq_eval: series terms grow without bound")
    raise TruncationError("pFq_eval: max_terms exceeded")
