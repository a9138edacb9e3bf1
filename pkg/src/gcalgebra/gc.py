"""
The Gc algebra: numbers ``a + bi + cj`` with ii = jj = -1 and ij = ji = 0.

The product is commutative but not associative, and ``i``, ``j`` are zero
divisors, so the Euclidean modulus is not multiplicative on Gc.  Every
imaginary unit ``u = cos(phi) i + sin(phi) j`` still squares to -1, which
gives a polar form ``R exp(theta u)`` and, for a fixed ``phi``, a
sub-algebra (SGc) isomorphic to the complex numbers.
"""
from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    GC_TABLE,
    REL_TOL,
    AlgebraElement,
    ConvergenceError,
    DomainError,
    StructureConstantsTable,
)

__all__ = [
    "GcNumber",
    "PolarGc",
    "SgcNumber",
    "Verdict",
    "PostulateVerdict",
    "AdlerReport",
    "conj",
    "norm",
    "to_polar",
    "from_polar",
    "unit_direction",
    "exp_series",
    "exp_closed",
    "euler_inequality_witness",
    "sgc_mul",
    "adler_check",
]

PHI_TOL = 1e-12


class GcNumber(AlgebraElement):
    """``a + bi + cj`` over a three-dimensional table (Gc unless overridden)."""

    __slots__ = ()

    def __init__(self, a: float = 0.0, b: float = 0.0, c: float = 0.0,
                 table: StructureConstantsTable = GC_TABLE):
        if table.dim != 3:
            raise DomainError("GcNumber needs a three-dimensional table")
        super().__init__((a, b, c), table)

    @classmethod
    def from_element(cls, x: AlgebraElement) -> "GcNumber":
        return cls(*x.coeffs, table=x.table)

    @property
    def a(self) -> float:
        return self.coeffs[0]

    @property
    def b(self) -> float:
        return self.coeffs[1]

    @property
    def c(self) -> float:
        return self.coeffs[2]

    def __repr__(self) -> str:
        return f"GcNumber({self.a!r}, {self.b!r}, {self.c!r})"

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c}

    @classmethod
    def from_dict(cls, data: dict, table: StructureConstantsTable = GC_TABLE) -> "GcNumber":
        return cls(data["a"], data["b"], data["c"], table=table)

    @classmethod
    def parse(cls, text: str, table: StructureConstantsTable = GC_TABLE) -> "GcNumber":
        """Parse an ``"a,b,c"`` triple."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected 'a,b,c', got {text!r}")
        return cls(*(float(p) for p in parts), table=table)


def conj(q: GcNumber) -> GcNumber:
    return GcNumber(q.a, -q.b, -q.c, table=q.table)


def norm(q: GcNumber) -> float:
    """Modulus ``(a^2 + b^2 + c^2) ** 0.5``, the square root of ``conj(q) q``."""
    return math.sqrt(q.a * q.a + q.b * q.b + q.c * q.c)


@dataclass(frozen=True)
class PolarGc:
    """Spherical chart ``a = R cos(theta)``, ``b = R sin(theta) cos(phi)``,
    ``c = R sin(theta) sin(phi)`` with theta in [0, pi], phi in [0, 2 pi)."""

    R: float
    theta: float
    phi: float

    def __post_init__(self):
        if not (self.R >= 0 and math.isfinite(self.R)):
            raise DomainError(f"R must be finite and >= 0, got {self.R}")
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise DomainError(f"phi must lie in [0, 2 pi), got {self.phi}")

    def to_dict(self) -> dict:
        return {"R": self.R, "theta": self.theta, "phi": self.phi}


def to_polar(q: GcNumber) -> PolarGc:
    """On the real axis (b = c = 0) the azimuth is set to 0."""
    rho = math.hypot(q.b, q.c)
    R = math.sqrt(q.a * q.a + rho * rho)
    theta = math.atan2(rho, q.a)
    if rho == 0.0:
        phi = 0.0
        theta = math.pi if q.a < 0 else 0.0
    else:
        phi = math.atan2(q.c, q.b) % (2 * math.pi)
        if phi >= 2 * math.pi:  # tiny negative angles wrap to 2 pi in floating point
            phi = 0.0
    return PolarGc(R, theta, phi)


def from_polar(p: PolarGc, table: StructureConstantsTable = GC_TABLE) -> GcNumber:
    s = p.R * math.sin(p.theta)
    return GcNumber(p.R * math.cos(p.theta), s * math.cos(p.phi), s * math.sin(p.phi), table=table)


def unit_direction(phi: float, table: StructureConstantsTable = GC_TABLE) -> GcNumber:
    """``u = cos(phi) i + sin(phi) j``."""
    return GcNumber(0.0, math.cos(phi), math.sin(phi), table=table)


def exp_closed(theta: float, phi: float, table: StructureConstantsTable = GC_TABLE) -> GcNumber:
    """``exp(theta u) = cos(theta) + sin(theta) u`` with ``u = cos(phi) i + sin(phi) j``.

    Valid because ``u u = cos^2 ii + sin^2 jj + cos sin (ij + ji) = -1``, so the
    even and odd parts of the series are the cosine and sine series.
    """
    s = math.sin(theta)
    return GcNumber(math.cos(theta), s * math.cos(phi), s * math.sin(phi), table=table)


def exp_series(theta: float, phi: float, terms: int = 200, tol: float = 1e-12,
               table: StructureConstantsTable = GC_TABLE) -> GcNumber:
    """Partial sums of ``sum_n (theta u)^n / n!`` with left-folded powers.

    Each term is the previous one multiplied on the right by ``theta u`` and
    divided by ``n``.  Summation stops once a term's norm drops below
    ``tol`` times the running sum's norm.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    x = theta * unit_direction(phi, table)
    term = GcNumber(1.0, table=table)
    total = term
    for n in range(1, terms):
        term = (term * x) / n
        total = total + term
        if term.norm() < tol * total.norm():
            return total
    raise ConvergenceError(f"exp series did not converge in {terms} terms (theta={theta}, phi={phi})")


def euler_inequality_witness(theta: float, phi: float, table: StructureConstantsTable = GC_TABLE
                             ) -> tuple[GcNumber, GcNumber, float]:
    """``exp(theta u)`` against ``exp(theta cos(phi) i) exp(theta sin(phi) j)``.

    Returns both sides and their distance.
    """
    lhs = exp_closed(theta, phi, table)
    rhs = exp_closed(theta * math.cos(phi), 0.0, table) * exp_closed(theta * math.sin(phi), math.pi / 2, table)
    return lhs, rhs, lhs.distance(rhs)


@dataclass(frozen=True)
class SgcNumber:
    """``R exp(theta u(phi))`` in the sub-algebra of fixed azimuth ``phi``.

    ``theta`` is an unbounded phase here; it adds under multiplication.
    """

    R: float
    theta: float
    phi: float

    def __post_init__(self):
        if not (self.R >= 0 and math.isfinite(self.R)):
            raise DomainError(f"R must be finite and >= 0, got {self.R}")
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise DomainError("theta and phi must be finite")

    def to_gc(self, table: StructureConstantsTable = GC_TABLE) -> GcNumber:
        return self.R * exp_closed(self.theta, self.phi, table)

    def __mul__(self, other: "SgcNumber") -> "SgcNumber":
        if not isinstance(other, SgcNumber):
            return NotImplemented
        return sgc_mul(self, other)


def sgc_mul(x: SgcNumber, y: SgcNumber) -> SgcNumber:
    if abs(x.phi - y.phi) > PHI_TOL:
        raise DomainError(f"azimuths differ ({x.phi} vs {y.phi}); not in one SGc sub-algebra")
    return SgcNumber(x.R * y.R, x.theta + y.theta, x.phi)


class Verdict(str, enum.Enum):
    HOLDS = "holds-on-probes"
    FAILS = "fails"


@dataclass
class PostulateVerdict:
    verdict: Verdict
    probes: int
    witness: tuple = ()
    lhs: float | None = None
    rhs: float | None = None
    discrepancy: float = 0.0
    violations: int = 0

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def to_dict(self) -> dict:
        out = {"verdict": self.verdict.value, "probes": self.probes, "violations": self.violations}
        if not self.holds:
            out["witness"] = [_witness_json(w) for w in self.witness]
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
            out["discrepancy"] = self.discrepancy
        return out


def _witness_json(w):
    if isinstance(w, GcNumber):
        return w.to_dict()
    if isinstance(w, SgcNumber):
        return {"R": w.R, "theta": w.theta, "phi": w.phi}
    if isinstance(w, AlgebraElement):
        return list(w.coeffs)
    return w


@dataclass
class AdlerReport:
    """Verdicts for the five modulus postulates on Gc and two SGc checks.

    Postulates: N(0) = 0; N(x) > 0 for x != 0; N(rx) = |r| N(x);
    N(x + y) <= N(x) + N(y); N(xy) = N(x) N(y).
    """

    postulates: dict[int, PostulateVerdict]
    sgc_norm_multiplicative: PostulateVerdict
    sgc_associative: PostulateVerdict
    seed: int = 0
    samples: int = 0

    def to_dict(self) -> dict:
        out = {f"postulate_{k}": v.to_dict() for k, v in sorted(self.postulates.items())}
        out["sgc_postulate_5"] = self.sgc_norm_multiplicative.to_dict()
        out["sgc_associativity"] = self.sgc_associative.to_dict()
        out["samples"] = self.samples
        out["seed"] = self.seed
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


class _Tracker:
    """Collects probe outcomes and keeps the first violation as the witness."""

    def __init__(self):
        self.probes = 0
        self.violations = 0
        self.first = None

    def record(self, ok: bool, witness: tuple, lhs: float, rhs: float, discrepancy: float):
        self.probes += 1
        if not ok:
            self.violations += 1
            if self.first is None:
                self.first = (witness, lhs, rhs, discrepancy)

    def verdict(self) -> PostulateVerdict:
        if self.first is None:
            return PostulateVerdict(Verdict.HOLDS, self.probes)
        witness, lhs, rhs, disc = self.first
        return PostulateVerdict(Verdict.FAILS, self.probes, tuple(witness), lhs, rhs, disc, self.violations)


def _rel_close(u: float, v: float, tol: float = REL_TOL) -> bool:
    return abs(u - v) <= tol * max(abs(u), abs(v))


def _random_gc(rng: np.random.Generator, n: int, table: StructureConstantsTable) -> list[GcNumber]:
    return [GcNumber(*row, table=table) for row in rng.uniform(-10.0, 10.0, size=(n, 3))]


def _random_sgc(rng: np.random.Generator, n: int, phi: float) -> list[SgcNumber]:
    R = rng.uniform(0.1, 10.0, size=n)
    theta = rng.uniform(-math.pi, math.pi, size=n)
    return [SgcNumber(float(r), float(t), phi) for r, t in zip(R, theta)]


def adler_check(samples: int = 1000, seed: int = 0, table: StructureConstantsTable = GC_TABLE) -> AdlerReport:
    """Probe the modulus postulates on random Gc elements (components in [-10, 10]).

    Postulate 5 is first scanned on all pairs of imaginary basis units, so the
    reported witness on Gc is the zero-divisor pair ``(i, j)``, then on
    ``samples`` random pairs.  The SGc checks draw a random azimuth per probe
    and test norm multiplicativity on pairs and associativity on triples of
    the embedded elements.
    """
    if samples < 1:
        raise DomainError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    zero = GcNumber(table=table)
    xs = _random_gc(rng, samples, table)
    ys = _random_gc(rng, samples, table)
    rs = rng.uniform(-10.0, 10.0, size=samples)

    p1 = _Tracker()
    p1.record(norm(zero) == 0.0, (zero,), norm(zero), 0.0, norm(zero))

    p2 = _Tracker()
    basis = [GcNumber(*row, table=table) for row in np.eye(3)]
    for x in basis + xs:
        n = norm(x)
        p2.record(n > 0.0, (x,), n, 0.0, 0.0 if n > 0 else 1.0)

    p3 = _Tracker()
    for r, x in zip(rs, xs):
        lhs, rhs = norm(float(r) * x), abs(float(r)) * norm(x)
        p3.record(_rel_close(lhs, rhs), (float(r), x), lhs, rhs, abs(lhs - rhs))

    p4 = _Tracker()
    for x, y in zip(xs, ys):
        lhs, rhs = norm(x + y), norm(x) + norm(y)
        p4.record(lhs <= rhs * (1 + REL_TOL), (x, y), lhs, rhs, max(lhs - rhs, 0.0))

    p5 = _Tracker()
    for x in basis[1:]:
        for y in basis[1:]:
            lhs, rhs = norm(x * y), norm(x) * norm(y)
            p5.record(_rel_close(lhs, rhs), (x, y), lhs, rhs, abs(lhs - rhs))
    for x, y in zip(xs, ys):
        lhs, rhs = norm(x * y), norm(x) * norm(y)
        p5.record(_rel_close(lhs, rhs), (x, y), lhs, rhs, abs(lhs - rhs))

    sgc_norm = _Tracker()
    sgc_assoc = _Tracker()
    phis = rng.uniform(0.0, 2 * math.pi, size=samples)
    for phi in phis:
        x, y, z = _random_sgc(rng, 3, float(phi))
        gx, gy, gz = x.to_gc(table), y.to_gc(table), z.to_gc(table)
        lhs, rhs = norm(gx * gy), norm(gx) * norm(gy)
        sgc_norm.record(_rel_close(lhs, rhs), (x, y), lhs, rhs, abs(lhs - rhs))
        left, right = (gx * gy) * gz, gx * (gy * gz)
        d = left.distance(right)
        sgc_assoc.record(left.isclose(right), (x, y, z), norm(left), norm(right), d)

    return AdlerReport(
        postulates={1: p1.verdict(), 2: p2.verdict(), 3: p3.verdict(), 4: p4.verdict(), 5: p5.verdict()},
        sgc_norm_multiplicative=sgc_norm.verdict(),
        sgc_associative=sgc_assoc.verdict(),
        seed=seed,
        samples=samples,
    )
