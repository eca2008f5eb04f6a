"""Acceptance gate.  Each test covers one numbered criterion and prints a
single ACCEPTANCE <id>: PASS/FAIL line before asserting."""

import random
import time

import pytest

from vdwcomplex.cli import main
from vdwcomplex.classify import classify_cell_full, sweep_cells
from vdwcomplex.complex_core import (VdwParams, lemma_nonface_predictions,
                                     make_vdw)
from vdwcomplex.homology import FieldSpec, reduced_betti_numbers
from vdwcomplex.resolution import hochster_betti, ideal_table
from vdwcomplex.structure import is_chordal, is_flag, is_quasi_forest
from vdwcomplex.complex_core import SimplicialComplex

from conftest import brute_minimal_non_faces, random_small_complex

Q = FieldSpec.rationals()
GF2 = FieldSpec.prime(2)

N_MAX = 12

TOTALS_52 = "total:  1  2  1"
TOTALS_62 = "total:  1  4  5  2"


def report(cid, ok, detail=""):
    suffix = (" -- " + detail) if detail else ""
    print("ACCEPTANCE %s: %s%s" % (cid, "PASS" if ok else "FAIL", suffix))
    assert ok, "criterion %s: %s" % (cid, detail or "failed")


def run_sweep(field):
    out = {}
    for n, k in sweep_cells(N_MAX):
        out[(n, k)] = classify_cell_full(n, k, field)
    return out


@pytest.fixture(scope="module")
def sweep_q():
    start = time.monotonic()
    cells = run_sweep(Q)
    return cells, time.monotonic() - start


@pytest.fixture(scope="module")
def sweep_gf2():
    return run_sweep(GF2)


def test_criterion_1_golden_betti_tables(capsys):
    ok = True
    details = []
    for n, k, totals in ((5, 2, TOTALS_52), (6, 2, TOTALS_62)):
        start = time.monotonic()
        code = main(["betti", "--vdw", str(n), str(k), "--field", "Q"])
        elapsed = time.monotonic() - start
        out = capsys.readouterr().out
        if code != 0 or out.splitlines()[1] != totals or elapsed >= 1.0:
            ok = False
            details.append("vdW(%d,%d) got %r in %.2fs"
                           % (n, k, out.splitlines()[1], elapsed))
    with capsys.disabled():
        report(1, ok, "; ".join(details))


def test_criterion_2_linear_resolution_sweep(sweep_q, capsys):
    cells, elapsed = sweep_q
    bad = [(n, k) for (n, k), (rep, _) in cells.items()
           if rep.computed["linear_resolution"] != (k == 1 or 2 * k >= n)]
    ok = len(cells) == 66 and not bad and elapsed < 600
    with capsys.disabled():
        report(2, ok, "%d cells in %.1fs, mismatches %s"
               % (len(cells), elapsed, bad))


def test_criterion_3_cm_and_vd_sweep(sweep_q, capsys):
    bad = []
    for (n, k), (rep, _) in sweep_q[0].items():
        closed = n <= 6 or k == 1 or 2 * k >= n
        cm = rep.computed["cohen_macaulay"]
        vd = rep.computed["vertex_decomposable"]
        if not (cm == vd == closed):
            bad.append((n, k, cm, vd, closed))
    with capsys.disabled():
        report(3, not bad, "mismatches %s" % bad)


def test_criterion_4_level_and_gorenstein(sweep_q, capsys):
    not_level = [(n, k) for (n, k), (rep, _) in sweep_q[0].items()
                 if rep.computed["cohen_macaulay"]
                 and not rep.computed["level"]]
    gorenstein = sorted((n, k) for (n, k), (rep, _) in sweep_q[0].items()
                        if rep.computed["gorenstein"] and not rep.zero_ideal)
    ok = not not_level and gorenstein == [(5, 2)]
    with capsys.disabled():
        report(4, ok,
               "non-level CM cells %s; nonzero-ideal Gorenstein cells %s "
               "(expected exactly [(5, 2)])" % (not_level, gorenstein))


def test_criterion_5_predicted_non_faces(capsys):
    start = time.monotonic()
    bad = []
    for n in range(7, 31):
        for k in range(2, (n - 1) // 2 + 1):
            c = make_vdw(VdwParams(n, k))
            mnf = set(c.minimal_non_faces(max_size=3))
            pair, triple = lemma_nonface_predictions(VdwParams(n, k))
            sizes = {m.bit_count() for m in mnf}
            if pair not in mnf or triple not in mnf \
                    or not {2, 3} <= sizes:
                bad.append((n, k))
    elapsed = time.monotonic() - start
    ok = not bad and elapsed < 300
    with capsys.disabled():
        report(5, ok, "failures %s in %.1fs" % (bad, elapsed))


def test_criterion_6_first_column_vs_brute_force(capsys):
    bad = []
    for n in range(2, 11):
        for k in range(1, n):
            c = make_vdw(VdwParams(n, k))
            t = ideal_table(hochster_betti(c, Q))
            col0 = {j: v for (i, j), v in t.entries.items() if i == 0}
            brute = {}
            for m in brute_minimal_non_faces(c):
                brute[m.bit_count()] = brute.get(m.bit_count(), 0) + 1
            if col0 != brute:
                bad.append((n, k))
    with capsys.disabled():
        report(6, not bad, "mismatches %s" % bad)


def test_criterion_7_quasi_forest_equivalence(capsys):
    rng = random.Random(20250824)
    samples = [make_vdw(VdwParams(n, k))
               for n in range(2, 11) for k in range(1, n)]
    samples += [random_small_complex(rng) for _ in range(500)]
    bad = []
    for c in samples:
        expected = is_flag(c) and is_chordal(c.one_skeleton())[0]
        if is_quasi_forest(c) != expected:
            bad.append(c.facets)
    with capsys.disabled():
        report(7, not bad, "%d complexes, counterexamples %s"
               % (len(samples), bad[:3]))


def test_criterion_8_field_stability(sweep_q, sweep_gf2, capsys):
    bad = []
    for cell, (rep_q, table_q) in sweep_q[0].items():
        rep_g, table_g = sweep_gf2[cell]
        if rep_q.computed != rep_g.computed:
            bad.append((cell, "verdicts"))
        if cell[0] <= 10 and table_q.entries != table_g.entries:
            bad.append((cell, "betti"))
    for n, k, totals in ((5, 2, TOTALS_52), (6, 2, TOTALS_62)):
        t = hochster_betti(make_vdw(VdwParams(n, k)), GF2)
        from vdwcomplex.resolution import render_text
        if render_text(t).splitlines()[1] != totals:
            bad.append(((n, k), "golden"))
    with capsys.disabled():
        report(8, not bad, "divergences %s" % bad)


def test_criterion_9_homology_sanity(capsys):
    ok = True
    details = []
    simplex = SimplicialComplex.from_vertex_lists(5, [[1, 2, 3, 4, 5]])
    if any(h for _, h in reduced_betti_numbers(simplex, Q)):
        ok, details = False, details + ["simplex not acyclic"]
    tri = SimplicialComplex.from_vertex_lists(3, [[1, 2], [2, 3], [1, 3]])
    if dict(reduced_betti_numbers(tri, Q)).get(1) != 1:
        ok, details = False, details + ["hollow triangle H1 != 1"]
    # Euler-Poincare asserted inside every induced subcomplex of the
    # criterion-1 sweeps (the flag also disables the cone shortcut)
    for n, k in ((5, 2), (6, 2)):
        try:
            hochster_betti(make_vdw(VdwParams(n, k)), Q, euler_check=True)
        except AssertionError:
            ok = False
            details.append("Euler check failed on vdW(%d,%d)" % (n, k))
    with capsys.disabled():
        report(9, ok, "; ".join(details))
