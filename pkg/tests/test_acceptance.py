"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (visible even without
``-s``) and then asserts, so ``pytest tests/test_acceptance.py`` doubles as a
readable report.
"""
import contextlib
import io
import itertools
import json
import math
import time

import numpy as np
import pytest

from gcalgebra.algebra import GC_TABLE, check_associative, complex_table
from gcalgebra.cli import EXIT_OK, cmd_fig1, main, parse_config
from gcalgebra.dirac import build_dirac_operator, compose_symbol, klein_gordon_symbol, spinor_ratio
from gcalgebra.gc import GcNumber, SgcNumber, Verdict, adler_check, euler_inequality_witness, sgc_mul
from gcalgebra.matrix import GcVector2, anticommutator, gamma_matrices, identity, mat_mul, operator_associator_probe
from gcalgebra.verify import euler_grid_error, plane_wave_grid, span_1j_associator_sweep


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}: {detail}")
        assert ok, detail

    return emit


def test_criterion_01_gamma_identities(report):
    g = gamma_matrices()
    eye = identity()
    squares = [mat_mul(g[0], g[0]) == -eye] + [mat_mul(x, x) == eye for x in g[1:]]
    anti = [anticommutator(a, b).is_zero() for a, b in itertools.combinations(g, 2)]
    # every coefficient is an exact small integer, so == is a zero-tolerance test
    integral = all(e.is_integral() for x in g for row in x.entries for e in row)
    ok = all(squares) and all(anti) and integral
    report(1, "gamma identities", ok, f"squares {sum(squares)}/4, anticommutators {sum(anti)}/6 exact")


def test_criterion_02_klein_gordon(report):
    sq = compose_symbol(build_dirac_operator(), build_dirac_operator())
    kg = klein_gordon_symbol()
    axes = "txyz"
    cross_zero = all(sq.coefficient(a, b) is None for a, b in itertools.combinations(axes, 2))
    first_order_zero = all(sq.coefficient(a) is None for a in axes)
    ok = sq == kg and cross_zero and first_order_zero
    report(2, "KG symbol recovery", ok, f"H*H == diag(dx^2+dy^2+dz^2-dt^2): {sq == kg}; cross terms zero: {cross_zero}")


def test_criterion_03_plane_wave(report):
    reps = plane_wave_grid(20, 20, 20, seed=0, h=1e-4)
    worst = max(r.max_analytic for r in reps)
    ratios = [r.fd_ratio for r in reps]
    ok = len(reps) == 800 and worst < 1e-10 and all(3.5 <= q <= 4.5 for q in ratios)
    report(3, "plane-wave residuals", ok,
           f"{len(reps)} waves, max analytic {worst:.2e}, FD ratio in [{min(ratios):.3f}, {max(ratios):.3f}]")


def test_criterion_04_fig1(report):
    cfg = parse_config(["fig1"])
    buf = io.StringIO()
    start = time.perf_counter()
    code = cmd_fig1(cfg, buf)
    elapsed = time.perf_counter() - start
    lines = buf.getvalue().splitlines()
    data = [line.split(",") for line in lines[1:]]
    by_m = {}
    for m, p, branch, r in data:
        if branch == "positive":
            by_m.setdefault(m, []).append(float(r))
    increasing = all(all(b > a for a, b in zip(s, s[1:])) for s in by_m.values())
    spot1 = abs(spinor_ratio(1.0, 0.0, "positive") - 1.0) <= 1e-12
    spot2 = abs(spinor_ratio(3.0, 4.0, "positive") - 3.0) <= 1e-12
    ok = code == EXIT_OK and len(data) == 5000 and increasing and spot1 and spot2 and elapsed < 1.0
    report(4, "fig1 reproduction", ok,
           f"{len(data)} rows in {elapsed * 1000:.0f} ms, spot values ok: {spot1 and spot2}, increasing in p: {increasing}")


def test_criterion_05_modulus_postulates(report):
    rep = adler_check(1000, seed=0)
    first_four = all(rep.postulates[k].verdict is Verdict.HOLDS for k in (1, 2, 3, 4))
    p5 = rep.postulates[5]
    i, j = GcNumber(0, 1, 0), GcNumber(0, 0, 1)
    p5_fails = p5.verdict is Verdict.FAILS and p5.witness == (i, j) and p5.discrepancy == 1.0
    sgc = rep.sgc_norm_multiplicative.holds and rep.sgc_associative.holds
    ok = first_four and p5_fails and sgc
    report(5, "modulus postulates", ok,
           f"postulates 1-4 hold: {first_four}; postulate 5 fails at (i,j) by {p5.discrepancy}; SGC holds: {sgc}")


def test_criterion_06_euler(report):
    grid = euler_grid_error(100, 32)
    d = euler_inequality_witness(1.0, math.pi / 4)[2]
    d_phi0 = euler_inequality_witness(1.0, 0.0)[2]
    d_theta0 = euler_inequality_witness(0.0, math.pi / 4)[2]
    ok = grid <= 1e-10 and d > 0.1 and d_phi0 == 0.0 and d_theta0 == 0.0
    report(6, "Euler formula", ok,
           f"series vs closed {grid:.2e}; inequality {d:.6f} at (1, pi/4); degenerate {d_phi0}, {d_theta0}")


def test_criterion_07_non_associativity(report):
    w = check_associative(GC_TABLE)
    iij = next((x for x in w if x.operands == (1, 1, 2)), None)
    j = GC_TABLE.basis(2)
    hit = iij is not None and iij.lhs == -j and iij.rhs == GC_TABLE.zero()
    empty_c = check_associative(complex_table()) == []
    ok = bool(w) and hit and empty_c
    report(7, "non-associativity", ok,
           f"{len(w)} Gc witnesses, {iij.describe() if iij else 'no (i,i,j)'}; C table empty: {empty_c}")


def test_criterion_08_sgc_product(report):
    rng = np.random.default_rng(8)
    worst = 0.0
    for _ in range(1000):
        phi = float(rng.uniform(0, 2 * math.pi))
        (r1, r2), (t1, t2) = rng.uniform(0.1, 10, 2), rng.uniform(-math.pi, math.pi, 2)
        x, y = SgcNumber(float(r1), float(t1), phi), SgcNumber(float(r2), float(t2), phi)
        a, b = sgc_mul(x, y).to_gc(), x.to_gc() * y.to_gc()
        worst = max(worst, a.distance(b) / max(a.norm(), b.norm()))
    report(8, "SGC product formula", worst <= 1e-12, f"1000 same-phi pairs, max relative error {worst:.2e}")


def test_criterion_09_operator_associator(report):
    g0, g1, g2, g3 = gamma_matrices()
    zero, i = GcNumber(), GcNumber(0, 1, 0)
    d = operator_associator_probe(g1, g2, GcVector2(i, zero))[1]
    sweep = span_1j_associator_sweep(1000, seed=0)
    ok = d > 0 and sweep <= 1e-12
    report(9, "operator associator", ok,
           f"gamma1, gamma2, psi=(i,0) gives {d}; span(1,j) sweep max {sweep:.2e}")


def test_criterion_10_mutation_sensitivity(report, tmp_path):
    path = tmp_path / "mutant.json"
    survivors = []
    sink = io.StringIO()
    for a, b, c in itertools.product(range(3), repeat=3):
        for delta in (1.0, -1.0):
            data = GC_TABLE.to_dict()
            data["f"][a][b][c] += delta
            path.write_text(json.dumps(data))
            with contextlib.redirect_stdout(sink), contextlib.redirect_stderr(sink):
                code = main(["verify", "--table", str(path), "--fail-fast"])
            if code == 0:
                survivors.append((a, b, c, delta))
    report(10, "mutation sensitivity", not survivors,
           f"54 single-entry mutants, {54 - len(survivors)} rejected, survivors {survivors}")
