"""Named polynomial families and the structural limits that connect them.

Seven q-families (two generalized ones plus their special cases and the two
classical q-families they extend) and the two classical hypergeometric
targets of the q -> 1 limits.  Each q-family is a terminating basic
hypergeometric series; ``make_spec`` produces the parameter lists and the
scalar multiplying z in the series argument.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError
from .hyper import PhiParam, PhiSpec, Polynomial, pFq_coeffs, pFq_eval, phi_coeffs, phi_eval
from .qcore import qpow, validate_q


class Family(enum.Enum):
    LITTLE_Q_JACOBI = "little-q-jacobi"
    Q_LAGUERRE = "q-laguerre"
    GEN_LITTLE_Q_JACOBI = "gen-little-q-jacobi"
    GEN_Q_LAGUERRE = "gen-q-laguerre"
    GEN_Q_BESSEL = "gen-q-bessel"
    EXT_LITTLE_Q_LAGUERRE = "ext-little-q-laguerre"
    GEN_STIELTJES_WIGERT = "gen-stieltjes-wigert"
    CLASSICAL_JACOBI = "classical-jacobi"
    CLASSICAL_LAGUERRE = "classical-laguerre"

    @classmethod
    def from_name(cls, name: str) -> "Family":
        for f in cls:
            if f.value == name:
                return f
        known = ", ".join(f.value for f in cls)
        raise DomainError(f"unknown family {name!r}; known families: {known}")


#: families whose series carries the q^(xi)-type second parameter
XI_FAMILIES = {Family.LITTLE_Q_JACOBI, Family.GEN_LITTLE_Q_JACOBI, Family.GEN_Q_BESSEL, Family.CLASSICAL_JACOBI}
#: families with a gamma parameter
GAMMA_FAMILIES = {f for f in Family if f not in (Family.GEN_STIELTJES_WIGERT,)}
#: families that admit the extension parameter c
C_FAMILIES = {
    Family.GEN_LITTLE_Q_JACOBI,
    Family.GEN_Q_LAGUERRE,
    Family.GEN_Q_BESSEL,
    Family.EXT_LITTLE_Q_LAGUERRE,
    Family.GEN_STIELTJES_WIGERT,
    Family.CLASSICAL_JACOBI,
    Family.CLASSICAL_LAGUERRE,
}
#: q-families that can be fed to the pencil-based zero solver
PENCIL_FAMILIES = {Family.GEN_LITTLE_Q_JACOBI, Family.GEN_Q_LAGUERRE}
CLASSICAL_FAMILIES = {Family.CLASSICAL_JACOBI, Family.CLASSICAL_LAGUERRE}


@dataclass(frozen=True)
class Params:
    """Parameter bundle (q, gamma, xi, c) threaded through every evaluation.

    gamma, xi > -1 where the family uses them; c >= 0, with c = 0 meaning
    the classical (unextended) reduction.  Values may be Fractions/ints for
    the exact-rational mode.
    """

    q: object
    gamma: object = 0.0
    xi: object = 0.0
    c: object = 0.0

    def __post_init__(self):
        validate_q(self.q)
        if not self.gamma > -1:
            raise DomainError(f"gamma must exceed -1, got {self.gamma}")
        if not self.xi > -1:
            raise DomainError(f"xi must exceed -1, got {self.xi}")
        if self.c < 0:
            raise DomainError(f"c must be nonnegative, got {self.c}")

    def require_integer_c(self) -> int:
        cf = float(self.c)
        if cf < 1 or abs(cf - round(cf)) > 1e-12:
            raise DomainError(f"this operation requires integer c >= 1, got {self.c}")
        return int(round(cf))


def make_spec(family: Family, n: int, p: Params):
    """(PhiSpec, z_scale) for a q-family; the series argument is z_scale * z.

    With c = 0 the (q, q^(c+1)) numerator/denominator pair cancels and the
    spec collapses to the unextended family.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if family in CLASSICAL_FAMILIES:
        raise DomainError(f"{family.value} is not a basic hypergeometric family")
    q, g, x, c = p.q, p.gamma, p.xi, p.c
    # the unextended families take no c; a nonzero c in the shared bundle is
    # simply not theirs to use
    extended = c != 0 and family not in (Family.LITTLE_Q_JACOBI, Family.Q_LAGUERRE)
    upper: list = [PhiParam.qpow(-n)]
    lower: list = []
    if family in (Family.GEN_LITTLE_Q_JACOBI, Family.LITTLE_Q_JACOBI):
        upper.append(PhiParam.qpow(n + g + x + 1))
        lower.append(PhiParam.qpow(g + 1))
        scale = qpow(q, 1)
    elif family in (Family.GEN_Q_LAGUERRE, Family.Q_LAGUERRE):
        lower.append(PhiParam.qpow(g + 1))
        scale = -qpow(q, n + g + 1)
    elif family is Family.GEN_Q_BESSEL:
        upper.append(PhiParam.qpow(x + n, sign=-1))
        lower.append(PhiParam.zero())
        scale = qpow(q, 1)
    elif family is Family.EXT_LITTLE_Q_LAGUERRE:
        upper.append(PhiParam.zero())
        lower.append(PhiParam.qpow(g + 1))
        scale = qpow(q, 1)
    elif family is Family.GEN_STIELTJES_WIGERT:
        lower.append(PhiParam.zero())
        scale = -qpow(q, n + 1)
    else:
        raise DomainError(f"unhandled family {family}")
    if extended:
        upper.append(PhiParam.qpow(1))
        lower.append(PhiParam.qpow(c + 1))
    return PhiSpec(tuple(upper), tuple(lower)), scale


def _classical_args(family: Family, n: int, p: Params):
    g, x, c = p.gamma, p.xi, p.c
    if family is Family.CLASSICAL_JACOBI:
        upper, lower = [-n, n + g + x + 1], [g + 1]
    elif family is Family.CLASSICAL_LAGUERRE:
        upper, lower = [-n], [g + 1]
    else:
        raise DomainError(f"{family.value} is not classical")
    if c != 0:
        upper.append(1)
        lower.append(c + 1)
    return upper, lower


def coeffs(family: Family, n: int, p: Params) -> Polynomial:
    """Monomial coefficients of the degree-n family member."""
    if family in CLASSICAL_FAMILIES:
        upper, lower = _classical_args(family, n, p)
        return pFq_coeffs(upper, lower)
    spec, scale = make_spec(family, n, p)
    return phi_coeffs(spec, p.q, scale)


def eval(family: Family, n: int, p: Params, z):
    """Value of the degree-n family member at z (complex z allowed)."""
    if family in CLASSICAL_FAMILIES:
        upper, lower = _classical_args(family, n, p)
        return pFq_eval(upper, lower, z)
    spec, scale = make_spec(family, n, p)
    return phi_eval(spec, p.q, scale * z)


def laguerre_from_jacobi_limit_check(n: int, p: Params, b_values) -> list:
    """Degeneration of the extended Jacobi family into the extended Laguerre one.

    Substituting q^xi -> b (a raw negative parameter value) and z -> -z/(bq)
    must reproduce the extended q-Laguerre member as b -> -inf.  Returns the
    sup deviation over a z-grid for each b; the sequence should decrease as
    |b| grows.
    """
    if n > 15:
        raise DomainError("limit check restricted to n <= 15 (conditioning)")
    q, g, c = p.q, p.gamma, p.c
    target = coeffs(Family.GEN_Q_LAGUERRE, n, p)
    zgrid = [0.1 + 0.3 * i for i in range(10)]
    devs = []
    for b in b_values:
        if not b < 0:
            raise DomainError("b values must be negative")
        upper = [PhiParam.qpow(-n), PhiParam.value(qpow(q, n + g + 1) * b), PhiParam.qpow(1)]
        lower = [PhiParam.qpow(g + 1), PhiParam.qpow(c + 1)]
        spec = PhiSpec(tuple(upper), tuple(lower))
        dev = 0.0
        for z in zgrid:
            w = -z / (b * q)
            dev = max(dev, abs(phi_eval(spec, q, qpow(q, 1) * w) - target(z)))
        devs.append(dev)
    return devs


_Q1_TARGETS = {
    Family.GEN_LITTLE_Q_JACOBI: Family.CLASSICAL_JACOBI,
    Family.GEN_Q_LAGUERRE: Family.CLASSICAL_LAGUERRE,
    Family.LITTLE_Q_JACOBI: Family.CLASSICAL_JACOBI,
    Family.Q_LAGUERRE: Family.CLASSICAL_LAGUERRE,
}


def q_to_1_limit_check(family: Family, n: int, p: Params, q_values) -> list:
    """Relative sup deviation from the classical limit target per q value.

    Jacobi-type members converge directly on [0, 1]; Laguerre-type members
    converge after the argument rescale z -> (1-q) z and are compared on
    [0, 4n].  The deviation is normalized by the sup of the target on the
    grid (Laguerre values grow fast with z) and should decrease as q -> 1.
    """
    if family not in _Q1_TARGETS:
        raise DomainError(f"no classical q->1 target for {family.value}")
    target_family = _Q1_TARGETS[family]
    laguerre_type = target_family is Family.CLASSICAL_LAGUERRE
    devs = []
    zmax = 4.0 * max(n, 1) if laguerre_type else 1.0
    zgrid = [zmax * i / 12 for i in range(13)]
    for q in q_values:
        pq = Params(q=q, gamma=p.gamma, xi=p.xi, c=p.c)
        cl = coeffs(target_family, n, pq)
        qc = coeffs(family, n, pq)
        if laguerre_type:
            qc = qc.dilate(1 - float(q))
        scale = max(1.0, max(abs(cl(z)) for z in zgrid))
        dev = max(abs(qc(z) - cl(z)) for z in zgrid) / scale
        devs.append(dev)
    return devs


def rescaled_zero_polynomial(family: Family, n: int, p: Params) -> Polynomial:
    """Polynomial whose zeros sit on the classical scale for q -> 1 studies.

    For Laguerre-type q-families that is z -> member((1-q) z); all other
    families are returned unchanged.
    """
    cs = coeffs(family, n, p)
    if family in (Family.GEN_Q_LAGUERRE, Family.Q_LAGUERRE):
        return cs.dilate(1 - float(p.q))
    return cs
