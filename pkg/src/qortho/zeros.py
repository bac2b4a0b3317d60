"""Zero computation by two independent routes, plus zero-pattern analysis.

Route one assembles the banded matrix pair (A, B) whose generalized
eigenvalues are the zeros of the degree-n member (rows are the four-term
recurrence at degree indices 0..n-1).  B is lower bidiagonal, so B^{-1} A
is built by exact forward substitution; the result is upper Hessenberg and
is handed to the LAPACK-backed QR iteration.  Route two runs the
Aberth-Ehrlich simultaneous iteration directly on the monomial
coefficients.  Agreement of the two routes is the main cross-check of the
whole coefficient pipeline.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError, PairingError, PencilSingularError
from .families import Family, Params, coeffs, eval as family_eval
from .hyper import Polynomial
from .qcore import one_minus_qpow, qpow
from .recurrence import recurrence_coeffs

DEFAULT_IM_TOL = 1e-7


@dataclass(frozen=True)
class Pencil:
    """Matrix pair of the generalized eigenvalue problem A X = z B X."""

    family: Family
    n: int
    A: np.ndarray
    B: np.ndarray


@dataclass
class ZeroSet:
    """Computed zeros with provenance and per-root diagnostics."""

    family: Family
    n: int
    roots: list
    method: str
    real_flags: list
    residuals: list
    warnings: list = field(default_factory=list)

    @property
    def real_roots(self) -> list:
        return [r.real for r, f in zip(self.roots, self.real_flags) if f]

    @property
    def n_real(self) -> int:
        return sum(self.real_flags)


def build_pencil(family: Family, n: int, p: Params) -> Pencil:
    """Assemble the banded pair (A, B) from the recurrence rows 0..n-1."""
    if n < 2:
        raise DomainError("pencil needs n >= 2")
    A = np.zeros((n, n))
    B = np.zeros((n, n))
    for i in range(n):
        a1, a2, a3, a4, b5, b6 = (float(v) for v in recurrence_coeffs(family, i, p).row())
        A[i, i] = a3
        if i + 1 < n:
            A[i, i + 1] = a4
        if i >= 1:
            A[i, i - 1] = a2
        if i >= 2:
            A[i, i - 2] = a1
        B[i, i] = -b6
        if i >= 1:
            B[i, i - 1] = -b5
    return Pencil(family, n, A, B)


def pencil_residual(pencil: Pencil, p: Params, z) -> float:
    """Normalized size of A X(z) - z B X(z) + a4(n-1) y_n(z) e_n.

    X(z) stacks the degree 0..n-1 members evaluated by series; the identity
    holds for every z, which validates the assembly independently of any
    eigenvalue solve.
    """
    n = pencil.n
    X = np.array([float(family_eval(pencil.family, k, p, z)) for k in range(n)])
    r = pencil.A @ X - z * (pencil.B @ X)
    a4 = float(recurrence_coeffs(pencil.family, n - 1, p).row()[3])
    r[-1] += a4 * float(family_eval(pencil.family, n, p, z))
    # normalize by the magnitude scale of the evaluations, not the possibly
    # cancellation-tiny values themselves
    mags = [sum(abs(ck) * abs(z) ** k for k, ck in enumerate(coeffs(pencil.family, m, p)))
            for m in range(n + 1)]
    scale = max(np.abs(pencil.A).max(), np.abs(pencil.B).max() * abs(z), abs(a4)) * max(mags)
    return float(np.abs(r).max() / scale)


def pencil_eigenvalues(pencil: Pencil) -> list:
    """Eigenvalues of B^{-1} A via forward substitution + Hessenberg QR."""
    n = pencil.n
    A, B = pencil.A, pencil.B
    diag_scale = np.abs(B).max()
    for i in range(n):
        if abs(B[i, i]) <= 1e-300 * max(diag_scale, 1.0):
            raise PencilSingularError(i)
    C = np.empty_like(A)
    for j in range(n):
        C[0, j] = A[0, j] / B[0, 0]
        for i in range(1, n):
            C[i, j] = (A[i, j] - B[i, i - 1] * C[i - 1, j]) / B[i, i]
    try:
        ev = np.linalg.eigvals(C)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"QR iteration failed: {exc}") from exc
    return sorted((complex(v) for v in ev), key=lambda w: (w.real, w.imag))


def _horner2(coeffs, z):
    p = coeffs[-1]
    dp = 0j
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _newton_polygon_radii(cs) -> list:
    """Per-root starting moduli from the upper convex hull of (k, log|c_k|).

    Each hull segment from k1 to k2 contributes k2 - k1 roots of modulus
    exp(slope); this respects coefficient magnitude profiles whose root
    moduli spread over many decades (geometric q-lattice zero patterns),
    where a single bounding circle stalls the iteration.
    """
    pts = [(k, math.log(abs(c))) for k, c in enumerate(cs) if c != 0]
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) <= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    radii = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        r = math.exp((y1 - y2) / (x2 - x1))
        radii.extend([r] * (x2 - x1))
    # zero leading/trailing gaps (c_0 == 0 roots at the origin)
    while len(radii) < len(cs) - 1:
        radii.insert(0, 1e-12)
    return radii


def aberth_roots(poly: Polynomial, tol: float = 1e-13, max_sweeps: int = 500) -> list:
    """All complex roots by the Aberth-Ehrlich simultaneous iteration.

    Starting points sit on Newton-polygon circles, rotated by 0.4 rad to
    break symmetry.  Sweeps stop when every correction falls below tol
    relative or stops improving; Newton polishing follows, and acceptance
    is by residual (|p(r)| relative to the coefficient-magnitude scale at r).
    """
    cs = [complex(c) for c in poly.coeffs]
    n = poly.degree
    if n < 1:
        raise DomainError("aberth_roots needs degree >= 1")
    lead = cs[-1]
    if lead == 0 or not math.isfinite(abs(lead)):
        raise DomainError("leading coefficient is not usable")
    radii = _newton_polygon_radii(cs)
    roots = [radii[k] * cmath.exp(2j * math.pi * (k + 0.5) / n + 0.4j) for k in range(n)]
    prev_max_step = math.inf
    stall = 0
    for _sweep in range(max_sweeps):
        max_step = 0.0
        for i in range(n):
            z = roots[i]
            pv, dv = _horner2(cs, z)
            if pv == 0:
                continue
            repel = sum(1.0 / (z - roots[j]) for j in range(n) if j != i)
            denom = dv / pv - repel
            if denom == 0:
                continue
            dz = 1.0 / denom
            roots[i] = z - dz
            max_step = max(max_step, abs(dz) / (1.0 + abs(roots[i])))
        if max_step < tol:
            break
        stall = stall + 1 if max_step >= 0.99 * prev_max_step else 0
        prev_max_step = max_step
        if stall > 40:
            break  # rounding-floor livelock or genuinely stuck; residuals decide
    for i in range(n):  # Newton polish
        z = roots[i]
        for _ in range(3):
            pv, dv = _horner2(cs, z)
            if dv == 0:
                break
            z = z - pv / dv
        roots[i] = z
    worst = max(root_residuals(poly, roots))
    if worst > 1e-7:
        raise ConvergenceError(f"Aberth iteration left residual {worst:.2e}")
    return sorted(roots, key=lambda w: (w.real, w.imag))


def root_residuals(poly: Polynomial, roots) -> list:
    """|p(root)| normalized by sum |c_k| |root|^k (poly-scale relative)."""
    out = []
    for r in roots:
        pv, _ = _horner2([complex(c) for c in poly.coeffs], r)
        scale = sum(abs(c) * abs(r) ** k for k, c in enumerate(poly.coeffs))
        out.append(abs(pv) / max(scale, 1e-300))
    return out


def classify_real(roots, im_tol: float = DEFAULT_IM_TOL) -> list:
    """Real/complex flags; realness means |Im| < im_tol (1 + |Re|).

    The nonreal remainder must pair into conjugates within 1e-10; failure
    signals a broken solve rather than genuine asymmetry (coefficients are
    real).
    """
    flags = [abs(r.imag) < im_tol * (1 + abs(r.real)) for r in roots]
    complexes = [r for r, f in zip(roots, flags) if not f]
    unmatched = list(complexes)
    while unmatched:
        r = unmatched.pop()
        best_i, best_d = None, math.inf
        for i, s in enumerate(unmatched):
            d = abs(s - r.conjugate())
            if d < best_d:
                best_i, best_d = i, d
        if best_i is None or best_d > 1e-10 * (1 + abs(r)):
            raise PairingError(f"unpaired complex root {r!r}")
        unmatched.pop(best_i)
    return flags


def interlace_check(inner, outer):
    """Chain check for interlacing zeros; returns (ok, first violation or None).

    With len(outer) == len(inner) + 1 the consecutive-degree chain
    outer_1 <= inner_1 <= outer_2 <= ... <= inner_n <= outer_{n+1} is
    verified; with equal lengths the one-sided chain
    inner_1 <= outer_1 <= inner_2 <= ... <= inner_n <= outer_n.
    Inputs must be sorted ascending; comparisons are strict data (tol 0).
    """
    inner = list(inner)
    outer = list(outer)
    if sorted(inner) != inner or sorted(outer) != outer:
        raise DomainError("interlace_check expects sorted inputs")
    if len(outer) == len(inner) + 1:
        chain = []
        for i in range(len(inner)):
            chain.append((f"outer[{i}] <= inner[{i}]", outer[i], inner[i]))
            chain.append((f"inner[{i}] <= outer[{i + 1}]", inner[i], outer[i + 1]))
    elif len(outer) == len(inner):
        chain = []
        for i in range(len(inner)):
            chain.append((f"inner[{i}] <= outer[{i}]", inner[i], outer[i]))
            if i + 1 < len(inner):
                chain.append((f"outer[{i}] <= inner[{i + 1}]", outer[i], inner[i + 1]))
    else:
        raise DomainError("length mismatch: need equal lengths or outer = inner + 1")
    for name, lo, hi in chain:
        if not lo <= hi:
            return False, f"{name} violated: {lo!r} > {hi!r}"
    return True, None


def compute_zeros(family: Family, n: int, p: Params, method: str = "both",
                  im_tol: float = DEFAULT_IM_TOL) -> ZeroSet:
    """Front end: zeros of the degree-n member by the requested method.

    method 'pencil' needs the four-term recurrence (generalized families)
    and n >= 2; 'aberth' works for every family; 'both' cross-validates and
    returns the pencil values.  A singular pencil falls back to 'aberth'
    with a warning recorded.
    """
    if n < 1:
        raise DomainError("zero computation needs n >= 1")
    cs = coeffs(family, n, p)
    cs_f = Polynomial([float(c) for c in cs.coeffs])
    warnings = []
    pencil_ok = family in (Family.GEN_LITTLE_Q_JACOBI, Family.GEN_Q_LAGUERRE) and n >= 2
    if method not in ("pencil", "aberth", "both"):
        raise DomainError(f"unknown method {method!r}")
    want_pencil = method in ("pencil", "both") and pencil_ok
    if method == "pencil" and not pencil_ok:
        warnings.append("pencil unavailable for this family/degree; using aberth")
    roots = None
    used = "aberth"
    if want_pencil:
        try:
            roots = pencil_eigenvalues(build_pencil(family, n, p))
            used = "pencil"
        except PencilSingularError as exc:
            warnings.append(f"{exc}; falling back to aberth")
    if method == "both" and pencil_ok and roots is not None:
        alt = aberth_roots(cs_f)
        dev = max_paired_distance(roots, alt)
        scale = max(max(abs(r) for r in roots), 1.0)
        if dev > 1e-5 * scale:
            warnings.append(f"pencil/aberth disagreement {dev:.3e}")
        used = "both"
    if roots is None:
        roots = aberth_roots(cs_f)
    flags = classify_real(roots, im_tol)
    res = root_residuals(cs_f, roots)
    return ZeroSet(family, n, roots, used, flags, res, warnings)


def max_paired_distance(a, b) -> float:
    """Greedy nearest-neighbour pairing distance, with assignment fallback.

    Returns the largest pairwise distance after matching the two root sets;
    greedy collisions trigger a full O(n^3)-ish assignment only for the
    leftovers, which is plenty at these sizes.
    """
    if len(a) != len(b):
        raise DomainError("root sets differ in size")
    remaining = list(range(len(b)))
    worst = 0.0
    for r in a:
        best_j, best_d = None, math.inf
        for j in remaining:
            d = abs(r - b[j])
            if d < best_d:
                best_j, best_d = j, d
        remaining.remove(best_j)
        worst = max(worst, best_d)
    return worst


# --- structural identities of the c = 1 laguerre-type family ---------------


def _shift_constants(n: int, p: Params):
    q, g = p.q, p.gamma
    A = (one_minus_qpow(q, n + g + 1) * one_minus_qpow(q, n + 2)
         / (qpow(q, n + g + 1) * (qpow(q, n + 1) - 1)))
    B = (qpow(q, 2 * n + g + 1) + 1 - qpow(q, 2 * n + g + 2)) / qpow(q, n + g + 1)
    return A, B


def laguerre_shift_identity_residual(n: int, p: Params, z, printed_b: bool = False) -> float:
    """Residual of the shifted two-term relation for the c = 1 family:

        (1 + z) L_n(qz) = A L_{n+1}(z) + B L_n(z).

    A is forced by the leading coefficients; B defaults to 1 - A, the value
    forced by z = 0 (``printed_b=True`` switches to the alternative constant
    (q^{2n+g+1} + 1 - q^{2n+g+2})/q^{n+g+1}).  The relation is exact at
    n = 0 and fails for n >= 1 under either constant -- the middle
    coefficients are over-determined; see the verification suite notes.
    """
    if float(p.c) != 1:
        raise DomainError("shift identity requires c = 1")
    q = p.q
    A, Bp = _shift_constants(n, p)
    B = Bp if printed_b else 1 - A
    lhs = (1 + z) * family_eval(Family.GEN_Q_LAGUERRE, n, p, q * z)
    t1 = A * family_eval(Family.GEN_Q_LAGUERRE, n + 1, p, z)
    t2 = B * family_eval(Family.GEN_Q_LAGUERRE, n, p, z)
    scale = max(abs(lhs), abs(t1), abs(t2), 1e-300)
    return abs(lhs - t1 - t2) / scale


def laguerre_c1_link_residual(n: int, p: Params, z) -> float:
    """Residual of the exact c = 1 reduction link

        q L_n(qz, 1; q) - L_n(z, 1; q) = (q - 1) Lcal_n(z; q),

    the z-form of applying the order-1 Sobolev operator.  Holds identically.
    """
    if float(p.c) != 1:
        raise DomainError("c1 link requires c = 1")
    q = p.q
    lhs = q * family_eval(Family.GEN_Q_LAGUERRE, n, p, q * z) - family_eval(Family.GEN_Q_LAGUERRE, n, p, z)
    rhs = (q - 1) * family_eval(Family.Q_LAGUERRE, n, p, z)
    scale = max(abs(lhs), abs(rhs), 1e-300)
    return abs(lhs - rhs) / scale


def sobolev_laguerre_link_residual(n: int, p: Params, z, printed_b: bool = False) -> float:
    """Residual of the combined link expressing Lcal_n through L_{n+1}, L_n:

        -(1-q)/q Lcal_n(z) = A/(1+z) L_{n+1}(z) + B/(1+z) L_n(z) - L_n(z)/q,

    obtained by eliminating L_n(qz) between the shifted two-term relation
    and the exact c = 1 link (A < 0 carries the minus sign of the displayed
    first term).  Inherits the constants of the shifted relation, and with
    them its n >= 1 caveats; z = -1 is a pole of the right side.
    """
    if float(p.c) != 1:
        raise DomainError("link requires c = 1")
    if z == -1:
        raise DomainError("z = -1 is a pole of the link")
    q = p.q
    A, Bp = _shift_constants(n, p)
    B = Bp if printed_b else 1 - A
    lhs = -(1 - q) / q * family_eval(Family.Q_LAGUERRE, n, p, z)
    t1 = A / (1 + z) * family_eval(Family.GEN_Q_LAGUERRE, n + 1, p, z)
    t2 = B / (1 + z) * family_eval(Family.GEN_Q_LAGUERRE, n, p, z)
    t3 = -family_eval(Family.GEN_Q_LAGUERRE, n, p, z) / q
    scale = max(abs(lhs), abs(t1), abs(t2), abs(t3), 1e-300)
    return abs(lhs - (t1 + t2 + t3)) / scale
