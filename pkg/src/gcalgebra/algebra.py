"""
Finite-dimensional real algebras defined by structure constants.

A table ``f`` of shape ``(dim, dim, dim)`` fixes the product of basis
elements, ``e_A e_B = sum_C f[A, B, C] e_C``, and the product of general
elements is its bilinear extension.  Nothing here assumes associativity,
so powers are always left-folded and every law has a brute-force checker
that returns explicit witnesses.

Built-in tables: the reals, the complex numbers, the quaternions and the
three-dimensional Gc algebra (basis 1, i, j with ii = jj = -1, ij = ji = 0).
"""
from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

import numpy as np

__all__ = [
    "DomainError",
    "ConvergenceError",
    "StructureConstantsTable",
    "AlgebraElement",
    "Law",
    "LawWitness",
    "mul",
    "add",
    "scale",
    "power",
    "check_commutative",
    "check_associative",
    "find_zero_divisors",
    "check_power_associative_sampled",
    "real_table",
    "complex_table",
    "quaternion_table",
    "gc_table",
    "GC_TABLE",
]

REL_TOL = 1e-12


class DomainError(ValueError):
    """Operands fall outside the domain of an operation."""


class ConvergenceError(ArithmeticError):
    """A series did not reach its stopping tolerance within the term cap."""


class StructureConstantsTable:
    """Multiplication table of a unital real algebra.

    Basis element 0 must be a two-sided unit; construction fails otherwise.
    Instances are immutable: the tensor is copied and marked read-only.
    """

    __slots__ = ("_f", "_names", "_entries")

    def __init__(self, f: Any, basis_names: Sequence[str] | None = None):
        arr = np.array(f, dtype=float)
        if arr.ndim != 3 or arr.shape[0] < 1 or len(set(arr.shape)) != 1:
            raise DomainError(f"structure constants must have shape (D, D, D), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise DomainError("structure constants must be finite")
        dim = arr.shape[0]
        eye = np.eye(dim)
        if not (np.array_equal(arr[0], eye) and np.array_equal(arr[:, 0, :], eye)):
            raise DomainError("basis element 0 is not a two-sided unit")
        if basis_names is None:
            basis_names = ["1"] + [f"e{k}" for k in range(1, dim)]
        names = tuple(str(n) for n in basis_names)
        if len(names) != dim:
            raise DomainError(f"expected {dim} basis names, got {len(names)}")
        arr.setflags(write=False)
        self._f = arr
        self._names = names
        # sparse form of the tensor; products of small tables are dominated by zeros
        self._entries = tuple(
            (int(a), int(b), int(c), float(arr[a, b, c])) for a, b, c in zip(*np.nonzero(arr))
        )

    @property
    def f(self) -> np.ndarray:
        return self._f

    @property
    def dim(self) -> int:
        return self._f.shape[0]

    @property
    def basis_names(self) -> tuple[str, ...]:
        return self._names

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StructureConstantsTable):
            return NotImplemented
        return self._names == other._names and np.array_equal(self._f, other._f)

    def __hash__(self) -> int:
        return hash((self._names, self._f.tobytes()))

    def __repr__(self) -> str:
        return f"StructureConstantsTable(dim={self.dim}, basis={list(self._names)})"

    def product(self, x: Sequence[float], y: Sequence[float]) -> tuple[float, ...]:
        """Bilinear product on raw coefficient sequences."""
        out = [0.0] * self.dim
        for a, b, c, v in self._entries:
            xa = x[a]
            yb = y[b]
            if xa and yb:
                out[c] += v * xa * yb
        return tuple(out)

    def product_array(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Bilinear product on coefficient arrays whose last axis has length ``dim``; broadcasts."""
        return np.einsum("...a,...b,abc->...c", x, y, self._f)

    def element(self, coeffs: Iterable[float]) -> "AlgebraElement":
        return AlgebraElement(coeffs, self)

    def basis(self, k: int) -> "AlgebraElement":
        coeffs = [0.0] * self.dim
        coeffs[k] = 1.0
        return AlgebraElement(coeffs, self)

    def unit(self) -> "AlgebraElement":
        return self.basis(0)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement([0.0] * self.dim, self)

    def with_entry(self, a: int, b: int, c: int, value: float) -> "StructureConstantsTable":
        """Copy of the table with one structure constant replaced."""
        arr = self._f.copy()
        arr[a, b, c] = value
        return StructureConstantsTable(arr, self._names)

    # JSON layout: {"dim": D, "basis": [...], "f": [[[...]]]}, row-major in (A, B, C)
    def to_dict(self) -> dict:
        return {"dim": self.dim, "basis": list(self._names), "f": self._f.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "StructureConstantsTable":
        try:
            dim = int(data["dim"])
            f = data["f"]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed structure-constants table: {exc!r}") from None
        basis = data.get("basis")
        table = cls(f, basis)
        if table.dim != dim:
            raise DomainError(f"declared dim {dim} does not match tensor dim {table.dim}")
        return table

    def to_json(self, **kwargs: Any) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> "StructureConstantsTable":
        return cls.from_dict(json.loads(text))


def _fmt_real(v: float) -> str:
    if float(v).is_integer():
        return str(int(v))
    return repr(float(v))


class AlgebraElement:
    """An element ``sum_A r_A e_A`` of the algebra given by ``table``."""

    __slots__ = ("_coeffs", "_table")

    def __init__(self, coeffs: Iterable[float], table: StructureConstantsTable):
        cs = tuple(float(v) for v in coeffs)
        if len(cs) != table.dim:
            raise DomainError(f"expected {table.dim} coefficients, got {len(cs)}")
        if not all(math.isfinite(v) for v in cs):
            raise DomainError("coefficients must be finite")
        self._coeffs = cs
        self._table = table

    @classmethod
    def _make(cls, coeffs: tuple[float, ...], table: StructureConstantsTable):
        obj = object.__new__(cls)
        obj._coeffs = coeffs
        obj._table = table
        return obj

    @property
    def coeffs(self) -> tuple[float, ...]:
        return self._coeffs

    @property
    def table(self) -> StructureConstantsTable:
        return self._table

    def _same(self, other: "AlgebraElement") -> None:
        if other._table is not self._table and other._table != self._table:
            raise DomainError("operands belong to different algebras")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return add(self, scale(-1.0, other))

    def __neg__(self):
        return scale(-1.0, self)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        if isinstance(other, (int, float, np.floating, np.integer)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return scale(other, self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return scale(1.0 / other, self)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._coeffs == other._coeffs and self._table == other._table

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def norm(self) -> float:
        """Euclidean length of the coefficient vector."""
        return math.sqrt(math.fsum(v * v for v in self._coeffs))

    def distance(self, other: "AlgebraElement") -> float:
        self._same(other)
        return math.sqrt(math.fsum((u - v) ** 2 for u, v in zip(self._coeffs, other._coeffs)))

    def isclose(self, other: "AlgebraElement", rel: float = REL_TOL, abs_tol: float = 0.0) -> bool:
        d = self.distance(other)
        return d <= max(rel * max(self.norm(), other.norm()), abs_tol)

    def is_integral(self) -> bool:
        return all(float(v).is_integer() for v in self._coeffs)

    def __str__(self) -> str:
        parts = []
        for v, name in zip(self._coeffs, self._table.basis_names):
            if v == 0:
                continue
            mag = abs(v)
            if name == "1":
                body = _fmt_real(mag)
            elif mag == 1:
                body = name
            else:
                body = _fmt_real(mag) + name
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self._coeffs)})"


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._same(y)
    return type(x)._make(x._table.product(x._coeffs, y._coeffs), x._table)


def add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._same(y)
    return type(x)._make(tuple(u + v for u, v in zip(x._coeffs, y._coeffs)), x._table)


def scale(r: float, x: AlgebraElement) -> AlgebraElement:
    r = float(r)
    return type(x)._make(tuple(r * v for v in x._coeffs), x._table)


def power(x: AlgebraElement, n: int) -> AlgebraElement:
    """Left-folded power ``(..((x x) x)..) x`` with ``power(x, 0)`` the unit.

    The fold direction matters only for algebras that are not power
    associative; see :func:`check_power_associative_sampled`.
    """
    if n < 0:
        raise DomainError("power exponent must be nonnegative")
    out = type(x)._make(x._table.unit()._coeffs, x._table)
    for _ in range(n):
        out = mul(out, x)
    return out


class Law(str, enum.Enum):
    COMMUTATIVITY = "commutativity"
    ASSOCIATIVITY = "associativity"
    ZERO_DIVISOR = "zero-divisor"
    NORM_MULTIPLICATIVITY = "norm-multiplicativity"
    POWER_ASSOCIATIVITY = "power-associativity"


@dataclass(frozen=True)
class LawWitness:
    """Outcome of one probe of an algebraic law.

    ``discrepancy > 0`` marks a violation; ``0`` means the law held on the probe.
    """

    law: Law
    operands: tuple
    lhs: Any
    rhs: Any
    discrepancy: float

    def describe(self) -> str:
        """Readable form; basis-index operands are shown by their basis names."""
        names = None
        for side in (self.lhs, self.rhs):
            if isinstance(side, AlgebraElement):
                names = side.table.basis_names
                break
        ops = [names[o] if names is not None and isinstance(o, int) else str(o) for o in self.operands]
        if self.law is Law.ASSOCIATIVITY and len(ops) == 3 and all(isinstance(o, int) for o in self.operands):
            a, b, c = ops
            return f"({a}{b}){c} = {self.lhs} != {self.rhs} = {a}({b}{c})"
        if self.law is Law.COMMUTATIVITY and len(ops) == 2:
            a, b = ops
            return f"{a}{b} = {self.lhs} != {self.rhs} = {b}{a}"
        if self.law is Law.ZERO_DIVISOR and len(ops) == 2:
            a, b = ops
            return f"{a}{b} = 0"
        return f"{self.law.value} ({', '.join(ops)}): {self.lhs} != {self.rhs} [discrepancy {self.discrepancy:.3g}]"


def _agree(x: AlgebraElement, y: AlgebraElement) -> bool:
    # basis arithmetic with integer constants is exact; anything else gets a relative tolerance
    if x.is_integral() and y.is_integral():
        return x == y
    return x.isclose(y, rel=REL_TOL)


def check_commutative(table: StructureConstantsTable) -> list[LawWitness]:
    """Basis pairs ``(A, B)``, ``A < B``, with ``e_A e_B != e_B e_A``."""
    out = []
    for a, b in itertools.combinations(range(table.dim), 2):
        ea, eb = table.basis(a), table.basis(b)
        lhs, rhs = ea * eb, eb * ea
        if not _agree(lhs, rhs):
            out.append(LawWitness(Law.COMMUTATIVITY, (a, b), lhs, rhs, lhs.distance(rhs)))
    return out


def check_associative(table: StructureConstantsTable) -> list[LawWitness]:
    """Basis triples ``(A, B, C)`` with ``(e_A e_B) e_C != e_A (e_B e_C)``.

    The associator is trilinear, so it vanishes identically iff it vanishes
    on every basis triple; this exhaustive scan is therefore a complete test.
    Triples are reported in lexicographic order.
    """
    out = []
    basis = [table.basis(k) for k in range(table.dim)]
    for a, b, c in itertools.product(range(table.dim), repeat=3):
        lhs = (basis[a] * basis[b]) * basis[c]
        rhs = basis[a] * (basis[b] * basis[c])
        if not _agree(lhs, rhs):
            out.append(LawWitness(Law.ASSOCIATIVITY, (a, b, c), lhs, rhs, lhs.distance(rhs)))
    return out


def find_zero_divisors(table: StructureConstantsTable) -> list[LawWitness]:
    """Ordered pairs of non-unit basis elements whose product is zero.

    Only basis pairs are scanned.  Composite zero divisors such as
    ``(i + j) * x = 0`` solutions are outside the scope of this scan.
    The discrepancy of each witness is ``N(e_A) N(e_B) - N(e_A e_B) = 1``.
    """
    out = []
    zero = table.zero()
    for a, b in itertools.product(range(1, table.dim), repeat=2):
        prod = table.basis(a) * table.basis(b)
        if prod == zero:
            out.append(LawWitness(Law.ZERO_DIVISOR, (a, b), prod, "nonzero", 1.0))
    return out


def check_power_associative_sampled(
    table: StructureConstantsTable, samples: int = 1000, seed: int = 0
) -> list[LawWitness]:
    """Compare parenthesizations of ``x^3`` and ``x^4`` for random ``x``.

    ``x^3``: ``(xx)x`` against ``x(xx)``.  ``x^4``: left fold, right fold and
    the balanced ``(xx)(xx)``.  Components are drawn uniformly from [-1, 1].
    An empty result means all probes agreed within relative tolerance 1e-12.
    """
    if samples < 1:
        raise DomainError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    out = []
    for row in rng.uniform(-1.0, 1.0, size=(samples, table.dim)):
        x = table.element(row)
        xx = x * x
        cube_l, cube_r = xx * x, x * xx
        if not cube_l.isclose(cube_r):
            out.append(LawWitness(Law.POWER_ASSOCIATIVITY, (x, 3), cube_l, cube_r, cube_l.distance(cube_r)))
        left = cube_l * x
        for other in (x * cube_r, xx * xx):
            if not left.isclose(other):
                out.append(LawWitness(Law.POWER_ASSOCIATIVITY, (x, 4), left, other, left.distance(other)))
    return out


def real_table() -> StructureConstantsTable:
    return StructureConstantsTable([[[1.0]]], ["1"])


def complex_table() -> StructureConstantsTable:
    f = np.zeros((2, 2, 2))
    f[0, 0, 0] = f[0, 1, 1] = f[1, 0, 1] = 1.0
    f[1, 1, 0] = -1.0
    return StructureConstantsTable(f, ["1", "i"])


def quaternion_table() -> StructureConstantsTable:
    f = np.zeros((4, 4, 4))
    for k in range(4):
        f[0, k, k] = f[k, 0, k] = 1.0
    for k in range(1, 4):
        f[k, k, 0] = -1.0
    # ij = k, jk = i, ki = j and the anticommuted partners
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        f[a, b, c] = 1.0
        f[b, a, c] = -1.0
    return StructureConstantsTable(f, ["1", "i", "j", "k"])


def gc_table() -> StructureConstantsTable:
    """Gc: basis (1, i, j), ii = jj = -1, ij = ji = 0."""
    f = np.zeros((3, 3, 3))
    for k in range(3):
        f[0, k, k] = f[k, 0, k] = 1.0
    f[1, 1, 0] = f[2, 2, 0] = -1.0
    return StructureConstantsTable(f, ["1", "i", "j"])


GC_TABLE = gc_table()
