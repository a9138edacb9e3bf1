"""
The two-dimensional Gc Dirac operator and its 1+1D plane-wave solution.

``H = gamma0 d_t + gamma1 d_x + gamma2 d_y + gamma3 d_z``.  Its formal square
is the Klein-Gordon symbol ``diag(d_x^2 + d_y^2 + d_z^2 - d_t^2)`` because the
gamma matrices square to -1, 1, 1, 1 and anticommute pairwise.

The plane wave ``psi = N ((E + p)/m, 1) exp(j (p x - E t))`` with
``E = +-sqrt(p^2 + m^2)`` solves ``(H - m) psi = 0``.  All its values lie in
span{1, j}, which is a copy of the complex numbers inside Gc; derivatives act
as left multiplication by ``j p`` (along x) and ``-j E`` (along t).
"""
from __future__ import annotations

import enum
import functools
import json
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .algebra import GC_TABLE, DomainError, StructureConstantsTable
from .gc import GcNumber
from .matrix import GcMatrix, GcVector2, gamma_matrices, identity, mat_apply, mat_mul

__all__ = [
    "AXES",
    "DiffOpPoly",
    "build_dirac_operator",
    "klein_gordon_symbol",
    "compose_symbol",
    "Branch",
    "PlaneWave",
    "spinor_ratio",
    "eval_plane_wave",
    "apply_operator",
    "apply_dirac_analytic",
    "apply_dirac_twice",
    "apply_dirac_fd",
    "ResidualReport",
    "residual_check",
]

# multi-index order
AXES = ("t", "x", "y", "z")
_ZERO = (0.0, 0.0, 0.0)


def _index(axis: str, order: int = 1) -> tuple[int, int, int, int]:
    idx = [0, 0, 0, 0]
    idx[AXES.index(axis)] = order
    return tuple(idx)


class DiffOpPoly:
    """Polynomial in commuting derivatives d_t, d_x, d_y, d_z with GcMatrix coefficients.

    Terms map a multi-index ``(n_t, n_x, n_y, n_z)`` to its coefficient;
    zero-matrix terms are dropped on construction.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int, int], GcMatrix]):
        clean = {}
        for idx, coeff in terms.items():
            idx = tuple(int(k) for k in idx)
            if len(idx) != 4 or min(idx) < 0:
                raise DomainError(f"bad multi-index {idx}")
            if not coeff.is_zero():
                clean[idx] = coeff
        self._terms = clean

    @property
    def terms(self) -> dict[tuple[int, int, int, int], GcMatrix]:
        return dict(self._terms)

    def coefficient(self, *axes: str) -> GcMatrix | None:
        """Coefficient of the monomial ``d_axes[0] d_axes[1] ...``, or None if absent."""
        idx = [0, 0, 0, 0]
        for a in axes:
            idx[AXES.index(a)] += 1
        return self._terms.get(tuple(idx))

    def order(self) -> int:
        return max((sum(k) for k in self._terms), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOpPoly):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "DiffOpPoly") -> "DiffOpPoly":
        out = dict(self._terms)
        for idx, coeff in other._terms.items():
            out[idx] = out[idx] + coeff if idx in out else coeff
        return DiffOpPoly(out)

    def __repr__(self) -> str:
        return f"DiffOpPoly({len(self._terms)} terms)"

    def __str__(self) -> str:
        parts = []
        for idx, coeff in sorted(self._terms.items(), reverse=True):
            mono = " ".join(f"d_{a}^{n}" if n > 1 else f"d_{a}" for a, n in zip(AXES, idx) if n) or "1"
            parts.append(f"{coeff} {mono}")
        return " + ".join(parts) or "0"


@functools.lru_cache(maxsize=32)
def build_dirac_operator(table: StructureConstantsTable = GC_TABLE) -> DiffOpPoly:
    """``H = gamma0 d_t + gamma1 d_x + gamma2 d_y + gamma3 d_z``; the mass term is kept separate."""
    g = gamma_matrices(table)
    return DiffOpPoly({_index(a): gm for a, gm in zip(AXES, g)})


def klein_gordon_symbol(table: StructureConstantsTable = GC_TABLE) -> DiffOpPoly:
    one = identity(table)
    return DiffOpPoly({
        _index("t", 2): -one,
        _index("x", 2): one,
        _index("y", 2): one,
        _index("z", 2): one,
    })


def compose_symbol(P: DiffOpPoly, Q: DiffOpPoly) -> DiffOpPoly:
    """Formal product of constant-coefficient operators.

    Monomials add their multi-indices and coefficients multiply as ``P_a Q_b``.
    Since the derivatives commute, the ``d_mu d_nu`` coefficient (mu != nu)
    of ``P P`` collects to the anticommutator ``{C_mu, C_nu}``; read as a
    symmetric quadratic form each ordered slot carries half of it.
    """
    out: dict = {}
    for ia, A in P._terms.items():
        for ib, B in Q._terms.items():
            idx = tuple(u + v for u, v in zip(ia, ib))
            prod = mat_mul(A, B)
            out[idx] = out[idx] + prod if idx in out else prod
    return DiffOpPoly(out)


class Branch(str, enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"

    @property
    def sign(self) -> float:
        return 1.0 if self is Branch.POSITIVE else -1.0


def _branch(b) -> Branch:
    return b if isinstance(b, Branch) else Branch(b)


def spinor_ratio(m: float, p: float, branch=Branch.POSITIVE) -> float:
    """``psi_1 / psi_2 = (E + p) / m`` with ``E = +-sqrt(p^2 + m^2)``.

    When ``E`` and ``p`` have opposite signs the sum cancels, so it is
    rewritten with ``(E + p)(E - p) = m^2``.
    """
    if not m > 0:
        raise DomainError(f"mass must be positive, got {m}")
    branch = _branch(branch)
    root = math.hypot(p, m)
    if branch is Branch.POSITIVE:
        return (root + p) / m if p >= 0 else m / (root - p)
    return -(root - p) / m if p <= 0 else -m / (root + p)


@dataclass(frozen=True)
class PlaneWave:
    """1+1D solution with mass ``m``, momentum ``p`` and energy branch; ``N`` scales it."""

    m: float
    p: float
    branch: Branch = Branch.POSITIVE
    N: float = 1.0

    def __post_init__(self):
        if not (self.m > 0 and math.isfinite(self.m)):
            raise DomainError(f"mass must be positive and finite, got {self.m}")
        if not (math.isfinite(self.p) and math.isfinite(self.N)):
            raise DomainError("p and N must be finite")
        object.__setattr__(self, "branch", _branch(self.branch))

    @property
    def energy(self) -> float:
        return self.branch.sign * math.hypot(self.p, self.m)

    @property
    def ratio(self) -> float:
        return spinor_ratio(self.m, self.p, self.branch)

    def wavevector(self, table: StructureConstantsTable = GC_TABLE) -> dict[str, GcNumber]:
        """Left multipliers of the derivatives: d_x -> j p, d_t -> -j E, d_y = d_z = 0."""
        return {
            "t": GcNumber(0.0, 0.0, -self.energy, table=table),
            "x": GcNumber(0.0, 0.0, self.p, table=table),
            "y": GcNumber(table=table),
            "z": GcNumber(table=table),
        }


def _wave_components(w: PlaneWave, x, t) -> np.ndarray:
    """``psi`` as coefficients of shape ``(..., 2, 3)``, in the dtype of ``x`` and ``t``."""
    phase = w.p * np.asarray(x) - w.energy * np.asarray(t)
    c, s = np.cos(phase), np.sin(phase)
    unit = np.stack([c, np.zeros_like(c), s], axis=-1)
    spin = np.array([w.ratio, 1.0]) * w.N
    return spin[:, None] * unit[..., None, :]


def _vector(arr, table: StructureConstantsTable) -> GcVector2:
    top, bottom = (GcNumber._make(tuple(float(v) for v in row), table) for row in arr)
    return GcVector2(top, bottom)


def eval_plane_wave(w: PlaneWave, x: float, t: float, table: StructureConstantsTable = GC_TABLE) -> GcVector2:
    """``N ((E + p)/m, 1) (cos(px - Et) + j sin(px - Et))``."""
    return _vector(_wave_components(w, float(x), float(t)), table)


def apply_operator(op: DiffOpPoly, derivatives: Mapping[tuple[int, int, int, int], GcVector2],
                   table: StructureConstantsTable = GC_TABLE) -> GcVector2:
    """``sum_a C_a (d^a psi)`` given the derivative values ``d^a psi`` per multi-index."""
    zero = GcNumber(table=table)
    out = GcVector2(zero, zero)
    for idx, coeff in op._terms.items():
        d = derivatives[idx]
        if d.top.coeffs == _ZERO and d.bottom.coeffs == _ZERO:
            continue
        out = out + mat_apply(coeff, d)
    return out


def _analytic_derivative(k: Mapping[str, GcNumber], psi: GcVector2, idx) -> GcVector2:
    out = psi
    for axis, n in zip(AXES, idx):
        for _ in range(n):
            out = out.left_mul(k[axis])
    return out


def apply_dirac_analytic(w: PlaneWave, x: float, t: float, table: StructureConstantsTable = GC_TABLE,
                         op: DiffOpPoly | None = None) -> GcVector2:
    """``(H - m) psi`` at ``(x, t)`` using exact derivatives of the exponential."""
    op = build_dirac_operator(table) if op is None else op
    psi = eval_plane_wave(w, x, t, table)
    k = w.wavevector(table)
    derivs = {idx: _analytic_derivative(k, psi, idx) for idx in op.terms}
    return apply_operator(op, derivs, table) - w.m * psi


def apply_dirac_twice(w: PlaneWave, x: float, t: float, table: StructureConstantsTable = GC_TABLE) -> GcVector2:
    """Pointwise ``H (H psi)``, differentiating ``H psi`` rather than squaring the symbol.

    ``H`` is real-linear with constant coefficients, so ``d_mu (H psi) = H (d_mu psi)``.
    """
    op = build_dirac_operator(table)
    psi = eval_plane_wave(w, x, t, table)
    k = w.wavevector(table)
    zero = GcNumber(table=table)
    out = GcVector2(zero, zero)
    for idx_mu, c_mu in op.terms.items():
        d_mu_psi = _analytic_derivative(k, psi, idx_mu)
        # H applied to d_mu psi: sum_nu C_nu (k_nu (k_mu psi))
        inner = apply_operator(op, {idx: _analytic_derivative(k, d_mu_psi, idx) for idx in op.terms}, table)
        out = out + mat_apply(c_mu, inner)
    return out


def apply_dirac_fd(w: PlaneWave, x: float, t: float, h: float = 1e-4,
                   table: StructureConstantsTable = GC_TABLE) -> GcVector2:
    """``(H - m) psi`` with central differences of step ``h`` along x and t.

    The wave is sampled in extended precision and the effective step is the
    distance between the two sample points actually used, so the only error
    left at ``h`` near 1e-4 is the O(h^2) truncation term.  d_y and d_z
    vanish for this wave.
    """
    if not h > 0:
        raise DomainError("h must be positive")
    xl, tl, hl = np.longdouble(x), np.longdouble(t), np.longdouble(h)
    derivs = {}
    for axis in ("x", "t"):
        if axis == "x":
            lo, hi = xl - hl, xl + hl
            f_hi, f_lo = _wave_components(w, hi, tl), _wave_components(w, lo, tl)
        else:
            lo, hi = tl - hl, tl + hl
            f_hi, f_lo = _wave_components(w, xl, hi), _wave_components(w, xl, lo)
        d = (f_hi - f_lo) / (hi - lo)
        derivs[_index(axis)] = _vector(d.astype(float), table)
    zero = GcNumber(table=table)
    for axis in ("y", "z"):
        derivs[_index(axis)] = GcVector2(zero, zero)
    psi = eval_plane_wave(w, x, t, table)
    return apply_operator(build_dirac_operator(table), derivs, table) - w.m * psi


def _matrix_array(A: GcMatrix) -> np.ndarray:
    return np.array([[A[r, c].coeffs for c in range(2)] for r in range(2)])


def _apply_batch(op: DiffOpPoly, derivs: Mapping, table: StructureConstantsTable) -> np.ndarray:
    """Array form of :func:`apply_operator`; derivative arrays have shape ``(n, 2, dim)``."""
    out = None
    for idx, coeff in op._terms.items():
        d = derivs.get(idx)
        if d is None:
            continue
        term = table.product_array(_matrix_array(coeff)[None], d[:, None]).sum(axis=2)
        out = term if out is None else out + term
    return out


def _residuals_analytic(w: PlaneWave, xs: np.ndarray, ts: np.ndarray, table: StructureConstantsTable) -> np.ndarray:
    psi = _wave_components(w, xs, ts)
    k = {axis: np.array(v.coeffs) for axis, v in w.wavevector(table).items()}
    derivs = {_index(a): table.product_array(k[a], psi) for a in ("x", "t")}
    res = _apply_batch(build_dirac_operator(table), derivs, table) - w.m * psi
    return np.sqrt((res ** 2).sum(axis=(-2, -1)))


def _residuals_fd(w: PlaneWave, xs: np.ndarray, ts: np.ndarray, h: float, table: StructureConstantsTable) -> np.ndarray:
    xl, tl, hl = xs.astype(np.longdouble), ts.astype(np.longdouble), np.longdouble(h)
    derivs = {}
    for axis in ("x", "t"):
        if axis == "x":
            lo, hi = xl - hl, xl + hl
            f_hi, f_lo = _wave_components(w, hi, tl), _wave_components(w, lo, tl)
        else:
            lo, hi = tl - hl, tl + hl
            f_hi, f_lo = _wave_components(w, xl, hi), _wave_components(w, xl, lo)
        derivs[_index(axis)] = ((f_hi - f_lo) / (hi - lo)[:, None, None]).astype(float)
    psi = _wave_components(w, xs, ts)
    res = _apply_batch(build_dirac_operator(table), derivs, table) - w.m * psi
    return np.sqrt((res ** 2).sum(axis=(-2, -1)))


@dataclass
class ResidualReport:
    """Residual norms of ``(H - m) psi`` at sample points, analytic and finite-difference.

    ``fd_ratio`` is the max FD residual at ``h`` over that at ``h / 2``; second
    order convergence puts it near 4.  ``fd_constant`` estimates ``C`` in
    ``residual ~ C h^2``.
    """

    wave: PlaneWave
    points: list[tuple[float, float]]
    analytic: list[float]
    fd: list[float]
    fd_half: list[float]
    h: float
    max_analytic: float = field(init=False)
    max_fd: float = field(init=False)
    max_fd_half: float = field(init=False)

    def __post_init__(self):
        self.max_analytic = max(self.analytic)
        self.max_fd = max(self.fd)
        self.max_fd_half = max(self.fd_half)

    @property
    def fd_ratio(self) -> float:
        return self.max_fd / self.max_fd_half if self.max_fd_half > 0 else math.inf

    @property
    def fd_constant(self) -> float:
        return self.max_fd / self.h ** 2

    def to_dict(self) -> dict:
        return {
            "m": self.wave.m,
            "p": self.wave.p,
            "branch": self.wave.branch.value,
            "N": self.wave.N,
            "h": self.h,
            "points": [list(pt) for pt in self.points],
            "analytic": self.analytic,
            "fd": self.fd,
            "fd_half": self.fd_half,
            "max_analytic": self.max_analytic,
            "max_fd": self.max_fd,
            "max_fd_half": self.max_fd_half,
            "fd_ratio": self.fd_ratio,
            "fd_constant": self.fd_constant,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def residual_check(w: PlaneWave, points: int = 20, seed: int = 0, h: float = 1e-4,
                   table: StructureConstantsTable = GC_TABLE) -> ResidualReport:
    """Residuals at ``points`` random ``(x, t)`` drawn from [-10, 10]^2."""
    if points < 1:
        raise DomainError("points must be >= 1")
    if not h > 0:
        raise DomainError("h must be positive")
    rng = np.random.default_rng(seed)
    xy = rng.uniform(-10.0, 10.0, size=(points, 2))
    xs, ts = xy[:, 0], xy[:, 1]
    return ResidualReport(
        w,
        [(float(x), float(t)) for x, t in xy],
        _residuals_analytic(w, xs, ts, table).tolist(),
        _residuals_fd(w, xs, ts, h, table).tolist(),
        _residuals_fd(w, xs, ts, h / 2, table).tolist(),
        h,
    )
