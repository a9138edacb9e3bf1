"""
The full verification suite behind ``gcalgebra verify``.

Every check records the property it probes, whether that property is
expected to hold, and whether it did.  Expected failures (associativity
and norm multiplicativity on Gc, pointwise lifting of matrix products)
are first-class: the suite passes only when they fail as predicted.
All checks run against a caller-supplied structure-constants table so a
corrupted table is caught.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import (
    GC_TABLE,
    StructureConstantsTable,
    check_associative,
    check_commutative,
    check_power_associative_sampled,
    find_zero_divisors,
)
from .dirac import (
    PlaneWave,
    apply_dirac_twice,
    build_dirac_operator,
    compose_symbol,
    eval_plane_wave,
    klein_gordon_symbol,
    residual_check,
)
from .gc import GcNumber, SgcNumber, adler_check, euler_inequality_witness, exp_closed, exp_series, sgc_mul
from .matrix import GcMatrix, GcVector2, anticommutator, gamma_matrices, identity, mat_mul, operator_associator_probe

__all__ = ["Check", "run_verification", "GAMMA_NAMES", "gamma_identity_checks", "associator_witness",
           "span_1j_associator_sweep", "euler_grid_error", "plane_wave_grid"]

GAMMA_NAMES = ("gamma0", "gamma1", "gamma2", "gamma3")


@dataclass
class Check:
    name: str
    expected: bool
    holds: bool | None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.holds is not None and self.holds == self.expected

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        suffix = " [expected failure]" if not self.expected else ""
        detail = f": {self.detail}" if self.detail else ""
        return f"{status}  {self.name}{detail}{suffix}"

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "holds": self.holds,
                "ok": self.ok, "detail": self.detail}


def gamma_identity_checks(table: StructureConstantsTable = GC_TABLE) -> list[Check]:
    """Four squares and six anticommutators, compared exactly."""
    g = gamma_matrices(table)
    one = identity(table)
    out = []
    for k, gm in enumerate(g):
        target = -one if k == 0 else one
        sq = mat_mul(gm, gm)
        label = "-I" if k == 0 else "I"
        out.append(Check(f"{GAMMA_NAMES[k]}^2 = {label}", True, sq == target, f"got {sq}"))
    for a, b in itertools.combinations(range(4), 2):
        ac = anticommutator(g[a], g[b])
        out.append(Check(f"{{{GAMMA_NAMES[a]}, {GAMMA_NAMES[b]}}} = 0", True, ac.is_zero(), f"got {ac}"))
    return out


def associator_witness(table: StructureConstantsTable = GC_TABLE) -> tuple[GcVector2, float]:
    """``gamma1 (gamma2 v) - (gamma1 gamma2) v`` for ``v = (i, 0)``."""
    g = gamma_matrices(table)
    v = GcVector2(GcNumber(0.0, 1.0, table=table), GcNumber(table=table))
    return operator_associator_probe(g[1], g[2], v)


def _span_1j(rng: np.random.Generator, table: StructureConstantsTable) -> GcNumber:
    a, c = rng.uniform(-1.0, 1.0, size=2)
    return GcNumber(a, 0.0, c, table=table)


def span_1j_associator_sweep(samples: int = 1000, seed: int = 0,
                             table: StructureConstantsTable = GC_TABLE) -> float:
    """Largest associator discrepancy over random matrices and vectors with values in span{1, j}."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        A = GcMatrix.of([[_span_1j(rng, table) for _ in range(2)] for _ in range(2)])
        B = GcMatrix.of([[_span_1j(rng, table) for _ in range(2)] for _ in range(2)])
        v = GcVector2(_span_1j(rng, table), _span_1j(rng, table))
        worst = max(worst, operator_associator_probe(A, B, v)[1])
    return worst


def euler_grid_error(n_theta: int = 100, n_phi: int = 32, table: StructureConstantsTable = GC_TABLE) -> float:
    """Max distance between the series and closed-form exponentials, theta in [-10, 10], phi in [0, 2 pi)."""
    worst = 0.0
    for theta in np.linspace(-10.0, 10.0, n_theta):
        for phi in np.arange(n_phi) * (2 * math.pi / n_phi):
            s = exp_series(float(theta), float(phi), table=table)
            worst = max(worst, s.distance(exp_closed(float(theta), float(phi), table)))
    return worst


def plane_wave_grid(n_m: int = 20, n_p: int = 20, points: int = 20, seed: int = 0, h: float = 1e-4,
                    table: StructureConstantsTable = GC_TABLE):
    """Residual reports over m in [0.1, 5], p in [-5, 5], both branches."""
    reports = []
    for k, m in enumerate(np.linspace(0.1, 5.0, n_m)):
        for l, p in enumerate(np.linspace(-5.0, 5.0, n_p)):
            for branch in ("positive", "negative"):
                w = PlaneWave(float(m), float(p), branch)
                reports.append(residual_check(w, points, seed + k * n_p + l, h, table))
    return reports


def _guard(name: str, expected: bool, fn: Callable[[], Check | list[Check]]) -> list[Check]:
    try:
        res = fn()
    except Exception as exc:  # a corrupted table may break a check outright
        return [Check(name, expected, None, f"error: {type(exc).__name__}: {exc}")]
    return res if isinstance(res, list) else [res]


def run_verification(table: StructureConstantsTable = GC_TABLE, samples: int = 1000, seed: int = 0,
                     fail_fast: bool = False) -> list[Check]:
    """Run every check against ``table``; with ``fail_fast`` stop after the first failing group."""
    names = table.basis_names
    steps: list[tuple[str, bool, Callable]] = []

    steps.append(("gamma identities", True, lambda: gamma_identity_checks(table)))

    def kg():
        H = build_dirac_operator(table)
        sq = compose_symbol(H, H)
        return Check("KG symbol recovery", True, sq == klein_gordon_symbol(table), f"H^2 = {sq}")

    steps.append(("KG symbol recovery", True, kg))

    def commutative():
        w = check_commutative(table)
        return Check("GC commutative", True, not w, "; ".join(x.describe() for x in w[:3]))

    def associative():
        w = check_associative(table)
        has = any(x.operands == (1, 1, 2) for x in w)
        detail = f"NO (witness {names[1]},{names[1]},{names[2]}: {w[0].describe()})" if has else (
            "no (i,i,j) witness" if w else "yes")
        return Check("GC associative", False, not has, detail)

    def zero_divisors():
        w = find_zero_divisors(table)
        pairs = [x.operands for x in w]
        shown = ", ".join(f"({names[a]},{names[b]})" for a, b in pairs) or "none"
        return Check("GC zero divisors are exactly (i,j), (j,i)", True, pairs == [(1, 2), (2, 1)], shown)

    def power_assoc():
        w = check_power_associative_sampled(table, samples, seed)
        return Check("GC power associative (sampled)", True, not w, f"{len(w)} violations in {samples} samples")

    steps.append(("GC commutative", True, commutative))
    steps.append(("GC associative", False, associative))
    steps.append(("GC zero divisors", True, zero_divisors))
    steps.append(("GC power associative", True, power_assoc))

    def modulus_postulates():
        rep = adler_check(samples, seed, table)
        out = [Check(f"modulus postulate {k} on GC", True, rep.postulates[k].holds,
                     f"{rep.postulates[k].probes} probes") for k in (1, 2, 3, 4)]
        p5 = rep.postulates[5]
        i, j = (GcNumber(0, 1, 0, table=table), GcNumber(0, 0, 1, table=table))
        witnessed = (not p5.holds and p5.witness == (i, j) and p5.discrepancy == 1.0)
        detail = ("FAILS (witness i,j; N(ij) = 0, N(i)N(j) = 1)" if witnessed
                  else f"verdict {p5.verdict.value}, witness {p5.witness}, discrepancy {p5.discrepancy}")
        out.append(Check("modulus postulate 5 on GC", False, not witnessed, detail))
        out.append(Check("modulus postulate 5 on SGC", True, rep.sgc_norm_multiplicative.holds,
                         f"{rep.sgc_norm_multiplicative.probes} same-phi pairs"))
        out.append(Check("SGC associative", True, rep.sgc_associative.holds,
                         f"{rep.sgc_associative.probes} same-phi triples"))
        return out

    steps.append(("modulus postulates", True, modulus_postulates))

    def sgc_product():
        rng = np.random.default_rng(seed + 1)
        worst = 0.0
        for _ in range(samples):
            phi = float(rng.uniform(0, 2 * math.pi))
            x = SgcNumber(float(rng.uniform(0.1, 10)), float(rng.uniform(-math.pi, math.pi)), phi)
            y = SgcNumber(float(rng.uniform(0.1, 10)), float(rng.uniform(-math.pi, math.pi)), phi)
            prod, emb = sgc_mul(x, y).to_gc(table), x.to_gc(table) * y.to_gc(table)
            worst = max(worst, prod.distance(emb) / max(prod.norm(), emb.norm()))
        return Check("SGC product formula matches GC product", True, worst <= 1e-12, f"max rel err {worst:.2e}")

    steps.append(("SGC product formula", True, sgc_product))

    def euler():
        err = euler_grid_error(table=table)
        return Check("Euler series = closed form (100x32 grid)", True, err <= 1e-10, f"max err {err:.2e}")

    def euler_ineq():
        _, _, d = euler_inequality_witness(1.0, math.pi / 4, table)
        _, _, d_phi0 = euler_inequality_witness(1.0, 0.0, table)
        _, _, d_theta0 = euler_inequality_witness(0.0, math.pi / 4, table)
        return [
            Check("exp(theta u) = exp(theta cos(phi) i) exp(theta sin(phi) j) at theta=1, phi=pi/4",
                  False, not d > 0.1, f"discrepancy {d:.6f}"),
            Check("Euler split exact at phi=0 and theta=0", True, d_phi0 == 0.0 and d_theta0 == 0.0,
                  f"discrepancies {d_phi0}, {d_theta0}"),
        ]

    steps.append(("Euler series", True, euler))
    steps.append(("Euler inequality", False, euler_ineq))

    def residuals():
        reps = plane_wave_grid(seed=seed, table=table)
        worst = max(r.max_analytic for r in reps)
        ratios = [r.fd_ratio for r in reps]
        lo, hi = min(ratios), max(ratios)
        return [
            Check("plane-wave analytic residual < 1e-10 (20x20 grid, both branches)", True, worst < 1e-10,
                  f"max {worst:.2e}"),
            Check("plane-wave FD residual order 2", True, 3.5 <= lo and hi <= 4.5,
                  f"ratio range [{lo:.4f}, {hi:.4f}]"),
        ]

    steps.append(("plane-wave residuals", True, residuals))

    def twice():
        worst = 0.0
        for m, p, b in ((1.0, 0.0, "positive"), (3.0, 4.0, "negative"), (0.5, -2.0, "positive")):
            w = PlaneWave(m, p, b)
            for x, t in ((0.3, -1.2), (4.0, 2.5)):
                d = apply_dirac_twice(w, x, t, table) - (m * m) * eval_plane_wave(w, x, t, table)
                worst = max(worst, d.norm())
        return Check("pointwise H(H psi) = m^2 psi on plane waves", True, worst < 1e-10, f"max err {worst:.2e}")

    steps.append(("pointwise H(H psi)", True, twice))

    def assoc_probe():
        _, d = associator_witness(table)
        sweep = span_1j_associator_sweep(min(samples, 1000), seed, table)
        return [
            Check("gamma1 (gamma2 v) = (gamma1 gamma2) v for v = (i, 0)", False, d == 0.0, f"discrepancy {d:g}"),
            Check("matrix action lifts pointwise on span{1,j}", True, sweep <= 1e-12, f"max discrepancy {sweep:.2e}"),
        ]

    steps.append(("operator associator", False, assoc_probe))

    checks: list[Check] = []
    for name, expected, fn in steps:
        group = _guard(name, expected, fn)
        checks += group
        if fail_fast and not all(c.ok for c in group):
            break
    return checks
