"""Compensated floating-point helpers and the exact-rational oracle mode.

The float paths of the package already avoid the dangerous cancellations
(1 - q^e goes through expm1), so compensated summation is only needed where
many terms of mixed sign are aggregated; ``comp_sum`` returns the faithfully
rounded sum (math.fsum underneath, which is an error-free-transformation
cascade).

The strongest oracle in the repository is the exact mode: with integer
gamma, xi, c and rational q every quantity in the coefficient pipeline is a
rational number, so identities that hold symbolically evaluate to exactly
zero as Fractions.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError
from .families import Family, Params, coeffs


class CompensatedAccumulator:
    """Two-term running sum (value + error channel), Neumaier style."""

    __slots__ = ("value", "error")

    def __init__(self):
        self.value = 0.0
        self.error = 0.0

    def add(self, x: float) -> None:
        t = self.value + x
        if abs(self.value) >= abs(x):
            self.error += (self.value - t) + x
        else:
            self.error += (x - t) + self.value
        self.value = t

    @property
    def total(self) -> float:
        return self.value + self.error


def comp_sum(values) -> float:
    """Faithfully rounded sum of floats; exact for Fraction/int inputs."""
    vals = list(values)
    if not vals:
        return 0.0
    if all(isinstance(v, float) for v in vals):
        return math.fsum(vals)
    if any(isinstance(v, complex) for v in vals):
        return complex(math.fsum(v.real if isinstance(v, complex) else float(v) for v in vals),
                       math.fsum(v.imag if isinstance(v, complex) else 0.0 for v in vals))
    return sum(vals)


def comp_dot(xs, ys) -> float:
    """Compensated dot product via pairwise products into fsum."""
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys):
        raise DomainError("comp_dot length mismatch")
    return comp_sum([x * y for x, y in zip(xs, ys)])


def exact_params(q: Fraction, gamma: int = 0, xi: int = 0, c: int = 0) -> Params:
    """Validated parameter bundle for the exact-rational mode."""
    if not isinstance(q, Fraction):
        raise DomainError("exact mode requires a Fraction q")
    for name, v in (("gamma", gamma), ("xi", xi), ("c", c)):
        if not isinstance(v, int):
            raise DomainError(f"exact mode requires integer {name}, got {v!r}")
    return Params(q=q, gamma=gamma, xi=xi, c=c)


def exact_coeffs(family: Family, n: int, p: Params) -> list:
    """Monomial coefficients as exact Fractions.

    Valid because q^(gamma+1) and friends are rational when gamma, xi, c are
    integers and q is rational; the shared coefficient pipeline then never
    leaves the rationals.
    """
    if not isinstance(p.q, Fraction):
        raise DomainError("exact_coeffs requires Fraction q (see exact_params)")
    for name, v in (("gamma", p.gamma), ("xi", p.xi), ("c", p.c)):
        if not isinstance(v, int):
            raise DomainError(f"exact_coeffs requires integer {name}")
    cs = coeffs(family, n, p)
    out = list(cs.coeffs)
    if not all(isinstance(v, (Fraction, int)) for v in out):
        raise DomainError("exact pipeline leaked out of the rationals")
    return [Fraction(v) for v in out]
