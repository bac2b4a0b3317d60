"""Acceptance criteria, one test per criterion, one PASS/FAIL line printed each.

Criteria compare computed quantities against the external reference cells in
refdata at the stated tolerances.  Where a reference cell disagrees with the
independently recomputed 60-digit truth (also in refdata) by more than the
stated tolerance, the criterion cannot pass for that cell with *any* correct
implementation; the failure message then shows both numbers side by side.
The regression tests elsewhere pin this library to the 60-digit truth at
<= 1e-7, which localizes such failures to the reference cells themselves.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from qortho.families import Family, Params, coeffs
from qortho.recurrence import recurrence_residual
from qortho.verify import (a_norm, eigen_qde_residual, hyper_operator_residual,
                           integral_representation_residual, sobolev_inner, CORE_FAMILIES)
from qortho.zeros import (aberth_roots, build_pencil, compute_zeros, interlace_check,
                          max_paired_distance, pencil_eigenvalues, pencil_residual)
from qortho.qcalc import sobolev_op
from qortho.qcore import q_pochhammer

import refdata as rd


def _line(num, ok, detail=""):
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'}{' - ' if detail else ''}{detail}")


def _cells(computed, cells, tol):
    rows = []
    ok = True
    for got, cell in zip(computed, cells):
        dev = abs(got - cell)
        good = dev <= tol
        ok = ok and good
        rows.append((got, cell, dev, good))
    return ok, rows


def _cell_report(rows):
    return "; ".join(f"got {g:.7g} vs cell {c:.7g} (|d|={d:.2e}{'' if k else ' !'})"
                     for g, c, d, k in rows if not k) or "all cells within tolerance"


def test_criterion_1_table3_reproduction():
    t0 = time.time()
    p = Params(q=0.9, gamma=0.5, c=1)
    got6 = sorted(r.real for r in compute_zeros(Family.GEN_Q_LAGUERRE, 6, p, method="both").roots)
    got7 = sorted(r.real for r in compute_zeros(Family.GEN_Q_LAGUERRE, 7, p, method="both").roots)
    elapsed = time.time() - t0
    ok6, rows6 = _cells(got6, rd.CELLS_TABLE3_N6, 5e-5)
    ok7, rows7 = _cells(got7, rd.CELLS_TABLE3_N7, 5e-5)
    ok = ok6 and ok7 and elapsed < 1.0
    _line(1, ok, f"runtime {elapsed:.2f}s; n=6: {_cell_report(rows6)}; n=7: {_cell_report(rows7)}")
    assert elapsed < 1.0
    assert ok6 and ok7, (f"reference-cell deviations exceed 5e-5: n=6 {_cell_report(rows6)}; "
                         f"n=7 {_cell_report(rows7)}; 60-digit truth: {rd.TRUTH_TABLE3_N6} / "
                         f"{rd.TRUTH_TABLE3_N7}")


def test_criterion_2_table4_reproduction_and_interlacing():
    p_cl = Params(q=0.9, gamma=0.1)
    p_ext = Params(q=0.9, gamma=0.1, c=1)
    got_cl = sorted(r.real for r in compute_zeros(Family.Q_LAGUERRE, 5, p_cl, method="aberth").roots)
    got_ext = sorted(r.real for r in compute_zeros(Family.GEN_Q_LAGUERRE, 5, p_ext, method="both").roots)
    ok_cl, rows_cl = _cells(got_cl, rd.CELLS_TABLE4_CLASSICAL, 5e-5)
    ok_ext, rows_ext = _cells(got_ext, rd.CELLS_TABLE4_EXTENDED, 5e-5)
    chain_ok, detail = interlace_check(got_cl, got_ext)
    ok = ok_cl and ok_ext and chain_ok
    _line(2, ok, f"classical: {_cell_report(rows_cl)}; extended: {_cell_report(rows_ext)}; "
                 f"one-sided interlacing {'holds' if chain_ok else f'violated: {detail}'}")
    assert ok_cl and ok_ext, f"{_cell_report(rows_cl)}; {_cell_report(rows_ext)}"
    assert chain_ok, detail


def test_criterion_3_table1_reproduction():
    t0 = time.time()
    all_rows = {}
    ok_q = True
    for q, cells in rd.CELLS_TABLE1.items():
        p = Params(q=q, gamma=0.1, xi=0.2, c=1)
        got = sorted(r.real for r in compute_zeros(Family.GEN_LITTLE_Q_JACOBI, 6, p, method="both").roots)
        okq, rows = _cells(got, cells, 2e-3)
        ok_q = ok_q and okq
        all_rows[q] = rows
    got_cl = sorted(r.real for r in aberth_roots(
        coeffs(Family.CLASSICAL_JACOBI, 6, Params(q=0.5, gamma=0.1, xi=0.2, c=1))))
    ok_cl, rows_cl = _cells(got_cl, rd.CELLS_TABLE1_CLASSICAL, 1e-5)
    elapsed = time.time() - t0
    ok = ok_q and ok_cl and elapsed < 5.0
    detail = "; ".join(f"q={q}: {_cell_report(rows)}" for q, rows in all_rows.items())
    _line(3, ok, f"runtime {elapsed:.2f}s; {detail}; classical: {_cell_report(rows_cl)}")
    assert elapsed < 5.0
    assert ok_cl, f"classical column: {_cell_report(rows_cl)}"
    assert ok_q, (f"q-column cells deviate beyond 2e-3: {detail}. The computed zeros match the "
                  f"60-digit truth to <= 1e-7 (see regression tests); truth per column: "
                  f"{rd.TRUTH_TABLE1}")


def test_criterion_4_table2_reproduction():
    from qortho.families import rescaled_zero_polynomial

    all_rows = {}
    ok_q = True
    for q, cells in rd.CELLS_TABLE2.items():
        p = Params(q=q, gamma=0.1, c=1)
        got = sorted(r.real for r in aberth_roots(
            rescaled_zero_polynomial(Family.GEN_Q_LAGUERRE, 6, p)))
        okq, rows = _cells(got, cells, 2e-3)
        ok_q = ok_q and okq
        all_rows[q] = rows
    got_cl = sorted(r.real for r in aberth_roots(
        coeffs(Family.CLASSICAL_LAGUERRE, 6, Params(q=0.5, gamma=0.1, c=1))))
    ok_cl, rows_cl = _cells(got_cl, rd.CELLS_TABLE2_CLASSICAL, 1e-5)
    ok = ok_q and ok_cl
    detail = "; ".join(f"q={q}: {_cell_report(rows)}" for q, rows in all_rows.items())
    _line(4, ok, f"{detail}; classical: {_cell_report(rows_cl)}")
    assert ok_cl, (f"classical column: {_cell_report(rows_cl)}; 60-digit truth "
                   f"{rd.TRUTH_TABLE2_CLASSICAL} (two cells are printed to only 6 significant "
                   f"figures, i.e. an absolute quantization coarser than 1e-5)")
    assert ok_q, (f"q-column cells deviate beyond 2e-3: {detail}. Computed zeros match the "
                  f"60-digit truth to <= 1e-7; truth per column: {rd.TRUTH_TABLE2}")


def test_criterion_5_identity_suite():
    t0 = time.time()
    gen_all = (Family.GEN_LITTLE_Q_JACOBI, Family.GEN_Q_LAGUERRE, Family.GEN_Q_BESSEL,
               Family.EXT_LITTLE_Q_LAGUERRE, Family.GEN_STIELTJES_WIGERT)
    qs = (Fraction(1, 2), Fraction(9, 10))
    zs = (Fraction(0), Fraction(1, 2), Fraction(2))
    checked = 0
    core_map = ((Family.GEN_LITTLE_Q_JACOBI, Family.LITTLE_Q_JACOBI),
                (Family.GEN_Q_LAGUERRE, Family.Q_LAGUERRE))
    for q in qs:
        for g in (0, 1, 2):
            for x in (0, 1, 2):
                # c = 0 is admissible for the operator identity (families
                # collapse onto their cores); the recurrence and the Sobolev
                # reduction need c >= 1
                for c in (0, 1, 2):
                    p = Params(q=q, gamma=g, xi=x, c=c)
                    for n in range(9):
                        # hypergeometric operator identity, all five families
                        for fam in gen_all:
                            assert hyper_operator_residual(fam, n, p) == 0
                            checked += 1
                        if c == 0:
                            continue
                        # four-term recurrences
                        for fam in (Family.GEN_LITTLE_Q_JACOBI, Family.GEN_Q_LAGUERRE):
                            for z in zs:
                                assert recurrence_residual(fam, n, p, z) == 0
                                checked += 1
                        # Sobolev operator reduction onto the cores
                        fac = q_pochhammer(q, q, c) / (1 - q) ** c
                        for fam, core in core_map:
                            lhs = sobolev_op(coeffs(fam, n, p), c, q)
                            rhs = coeffs(core, n, Params(q=q, gamma=g, xi=x)).scale(fac)
                            assert lhs.add(rhs, s=-1).max_abs() == 0
                            checked += 1
                # second-order eigenvalue equations of the cores (c-free)
                p0 = Params(q=q, gamma=g, xi=x)
                for core in CORE_FAMILIES:
                    for n in range(9):
                        assert eigen_qde_residual(core, n, p0) == 0
                        checked += 1
    # floating mode: normalized residuals on the non-integer grid
    worst = 0.0
    for q in (0.3, 0.5, 0.9):
        for g in (-0.5, 0.1, 0.9):
            for x in (-0.5, 0.1, 0.9):
                for c in (1, 2):
                    p = Params(q=q, gamma=g, xi=x, c=c)
                    for n in (0, 1, 2, 5, 8, 12):
                        for z in (0.0, 0.25, 0.5, 1.0, 2.0):
                            worst = max(worst, recurrence_residual(Family.GEN_LITTLE_Q_JACOBI, n, p, z))
                            if x == -0.5:
                                worst = max(worst, recurrence_residual(Family.GEN_Q_LAGUERRE, n, p, z))
    elapsed = time.time() - t0
    ok = worst < 1e-9 and elapsed < 60.0
    _line(5, ok, f"{checked} exact identities all zero; float worst residual {worst:.2e}; "
                 f"runtime {elapsed:.1f}s")
    assert worst < 1e-9
    assert elapsed < 60.0


def test_criterion_6_integral_representations():
    worst = 0.0
    for fam in (Family.GEN_LITTLE_Q_JACOBI, Family.GEN_Q_LAGUERRE):
        for c in (1, 2):
            p = Params(q=0.5, gamma=0.3, xi=0.7, c=c)
            for n in (1, 2, 4, 6, 8):
                for z in (0.2, 0.8, 1.5):
                    worst = max(worst, integral_representation_residual(fam, n, p, z))
    ok = worst < 1e-8
    _line(6, ok, f"worst reconstruction residual {worst:.2e}")
    assert ok


def test_criterion_7_orthogonality():
    import math

    detail = []
    ok = True
    for fam in (Family.GEN_LITTLE_Q_JACOBI, Family.GEN_Q_BESSEL, Family.EXT_LITTLE_Q_LAGUERRE):
        for q in (0.5, 0.9):
            p = Params(q=q, gamma=0.1, xi=0.2, c=1)
            diags = [sobolev_inner(fam, n, n, p) for n in range(7)]
            worst_diag = max(abs(d / a_norm(fam, n, p) - 1) for n, d in enumerate(diags))
            worst_off = max(abs(sobolev_inner(fam, n, m, p)) / math.sqrt(diags[n] * diags[m])
                            for n in range(7) for m in range(n + 1, 7))
            ok = ok and worst_diag < 1e-5 and worst_off < 1e-7
            detail.append(f"{fam.value} q={q}: diag {worst_diag:.1e} off {worst_off:.1e}")
    for fam in (Family.GEN_Q_LAGUERRE, Family.GEN_STIELTJES_WIGERT):
        for q in (0.5, 0.9):
            p = Params(q=q, gamma=0.3, c=1)
            diags = [sobolev_inner(fam, n, n, p) for n in range(7)]
            ratios = [d / a_norm(fam, n, p) for n, d in enumerate(diags)]
            worst_ratio = max(abs(r / ratios[0] - 1) for r in ratios)
            worst_off = max(abs(sobolev_inner(fam, n, m, p)) / math.sqrt(diags[n] * diags[m])
                            for n in range(7) for m in range(n + 1, 7))
            ok = ok and worst_ratio < 1e-5 and worst_off < 1e-7
            detail.append(f"{fam.value} q={q}: ratio-const {worst_ratio:.1e} off {worst_off:.1e}")
    _line(7, ok, "; ".join(detail))
    assert ok, "; ".join(detail)


def test_criterion_8_method_cross_validation():
    rng = random.Random(42)
    worst_pair = 0.0
    worst_res = 0.0
    for q in (0.3, 0.5, 0.9):
        for g in (-0.5, 0.1, 0.9):
            for fam, xs in ((Family.GEN_LITTLE_Q_JACOBI, (-0.5, 0.1, 0.9)),
                            (Family.GEN_Q_LAGUERRE, (0.0,))):
                for x in xs:
                    for c in (1, 2):
                        p = Params(q=q, gamma=g, xi=x, c=c)
                        if fam is Family.GEN_LITTLE_Q_JACOBI and g + x in (0.0, -1.0):
                            # B is exactly singular (mu6(0) = 0); the designed
                            # fallback is exercised instead of the comparison
                            zs = compute_zeros(fam, 6, p, method="pencil")
                            assert len(zs.roots) == 6
                            continue
                        for n in (2, 5, 9, 12):
                            pc = build_pencil(fam, n, p)
                            ev = pencil_eigenvalues(pc)
                            ab = aberth_roots(coeffs(fam, n, p))
                            scale = max(1.0, max(abs(r) for r in ev))
                            worst_pair = max(worst_pair, max_paired_distance(ev, ab) / scale)
                            worst_res = max(worst_res, pencil_residual(pc, p, rng.uniform(0.0, 2.0)))
    ok = worst_pair < 1e-6 and worst_res < 1e-8
    _line(8, ok, f"worst pencil/aberth distance {worst_pair:.2e}; worst pencil residual {worst_res:.2e}")
    assert worst_pair < 1e-6
    assert worst_res < 1e-8


def test_criterion_9_zero_pattern_phenomenology():
    counts = {}
    for g in (0.7, 0.8, 1.0):
        p = Params(q=0.99998, gamma=g, xi=g, c=g)
        zs = compute_zeros(Family.GEN_LITTLE_Q_JACOBI, 17, p, method="both")
        counts[g] = zs.n_real
    lag_counts = {}
    for g in (0.8, 0.9, 1.0):
        p = Params(q=0.99999, gamma=g, c=g)
        zs = compute_zeros(Family.GEN_Q_LAGUERRE, 6, p, method="both")
        lag_counts[g] = zs.n_real
    ok = (counts[0.7] == 17 and counts[0.8] == 3 and counts[1.0] < counts[0.8]
          and lag_counts[0.8] == 6 and lag_counts[0.9] == 6 and lag_counts[1.0] < 6)
    _line(9, ok, f"degree-17 real counts {counts}; degree-6 real counts {lag_counts}")
    assert counts[0.7] == 17
    assert counts[0.8] == 3
    assert counts[1.0] < counts[0.8]
    assert lag_counts[0.8] == 6 and lag_counts[0.9] == 6
    assert lag_counts[1.0] < 6
