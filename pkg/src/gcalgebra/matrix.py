"""
2x2 matrices over Gc and the four gamma matrices.

Only binary products are offered.  Gc is not associative, so ``A (B C)``
and ``(A B) C`` may differ, and so may ``A (B v)`` and ``(A B) v``; callers
spell out the association they want.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import GC_TABLE, StructureConstantsTable
from .gc import GcNumber

__all__ = [
    "GcMatrix",
    "GcVector2",
    "identity",
    "zeros",
    "gamma_matrices",
    "mat_mul",
    "anticommutator",
    "mat_apply",
    "operator_associator_probe",
]

ABS_TOL = 1e-12


@dataclass(frozen=True)
class GcVector2:
    """A pair ``(psi_1, psi_2)`` of Gc values."""

    top: GcNumber
    bottom: GcNumber

    def __iter__(self):
        yield self.top
        yield self.bottom

    def __add__(self, other: "GcVector2") -> "GcVector2":
        return GcVector2(self.top + other.top, self.bottom + other.bottom)

    def __sub__(self, other: "GcVector2") -> "GcVector2":
        return GcVector2(self.top - other.top, self.bottom - other.bottom)

    def __rmul__(self, r: float) -> "GcVector2":
        return GcVector2(r * self.top, r * self.bottom)

    def left_mul(self, k: GcNumber) -> "GcVector2":
        """Componentwise ``k * psi``."""
        return GcVector2(k * self.top, k * self.bottom)

    def norm(self) -> float:
        return math.hypot(self.top.norm(), self.bottom.norm())

    def to_list(self) -> list[dict]:
        return [self.top.to_dict(), self.bottom.to_dict()]

    def __str__(self) -> str:
        return f"({self.top}, {self.bottom})"


@dataclass(frozen=True)
class GcMatrix:
    entries: tuple[tuple[GcNumber, GcNumber], tuple[GcNumber, GcNumber]]

    @classmethod
    def of(cls, rows) -> "GcMatrix":
        (a, b), (c, d) = rows
        return cls(((a, b), (c, d)))

    def __getitem__(self, idx: tuple[int, int]) -> GcNumber:
        r, c = idx
        return self.entries[r][c]

    @property
    def table(self) -> StructureConstantsTable:
        return self.entries[0][0].table

    def __add__(self, other: "GcMatrix") -> "GcMatrix":
        return GcMatrix.of([[self[r, c] + other[r, c] for c in range(2)] for r in range(2)])

    def __sub__(self, other: "GcMatrix") -> "GcMatrix":
        return GcMatrix.of([[self[r, c] - other[r, c] for c in range(2)] for r in range(2)])

    def __neg__(self) -> "GcMatrix":
        return GcMatrix.of([[-self[r, c] for c in range(2)] for r in range(2)])

    def __rmul__(self, r: float) -> "GcMatrix":
        return GcMatrix.of([[r * self[i, k] for k in range(2)] for i in range(2)])

    def __matmul__(self, other):
        if isinstance(other, GcMatrix):
            return mat_mul(self, other)
        if isinstance(other, GcVector2):
            return mat_apply(self, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return all(v == 0.0 for row in self.entries for e in row for v in e.coeffs)

    def isclose(self, other: "GcMatrix", atol: float = ABS_TOL) -> bool:
        return all(self[r, c].distance(other[r, c]) <= atol for r in range(2) for c in range(2))

    def to_list(self) -> list[list[dict]]:
        return [[e.to_dict() for e in row] for row in self.entries]

    def __str__(self) -> str:
        return "[[{}, {}], [{}, {}]]".format(self[0, 0], self[0, 1], self[1, 0], self[1, 1])


def identity(table: StructureConstantsTable = GC_TABLE) -> GcMatrix:
    one, zero = GcNumber(1.0, table=table), GcNumber(table=table)
    return GcMatrix(((one, zero), (zero, one)))


def zeros(table: StructureConstantsTable = GC_TABLE) -> GcMatrix:
    zero = GcNumber(table=table)
    return GcMatrix(((zero, zero), (zero, zero)))


def gamma_matrices(table: StructureConstantsTable = GC_TABLE) -> tuple[GcMatrix, GcMatrix, GcMatrix, GcMatrix]:
    """``(gamma0, gamma1, gamma2, gamma3)``, the coefficients of d_t, d_x, d_y, d_z.

    gamma0 = [[0, j], [j, 0]], gamma1 = [[0, -j], [j, 0]],
    gamma2 = [[0, -i], [i, 0]], gamma3 = [[1, 0], [0, -1]].
    """
    z = GcNumber(table=table)
    one = GcNumber(1.0, table=table)
    i = GcNumber(0.0, 1.0, table=table)
    j = GcNumber(0.0, 0.0, 1.0, table=table)
    return (
        GcMatrix(((z, j), (j, z))),
        GcMatrix(((z, -j), (j, z))),
        GcMatrix(((z, -i), (i, z))),
        GcMatrix(((one, z), (z, -one))),
    )


def mat_mul(A: GcMatrix, B: GcMatrix) -> GcMatrix:
    """Row-by-column product; each entry is a sum of single binary Gc products."""
    return GcMatrix.of(
        [[A[r, 0] * B[0, c] + A[r, 1] * B[1, c] for c in range(2)] for r in range(2)]
    )


def anticommutator(A: GcMatrix, B: GcMatrix) -> GcMatrix:
    return mat_mul(A, B) + mat_mul(B, A)


def mat_apply(A: GcMatrix, v: GcVector2) -> GcVector2:
    return GcVector2(A[0, 0] * v.top + A[0, 1] * v.bottom, A[1, 0] * v.top + A[1, 1] * v.bottom)


def operator_associator_probe(A: GcMatrix, B: GcMatrix, v: GcVector2) -> tuple[GcVector2, float]:
    """``A (B v) - (A B) v`` and its norm.

    Zero exactly when composing the matrices first gives the same pointwise
    action on ``v`` as applying them one after the other.
    """
    diff = mat_apply(A, mat_apply(B, v)) - mat_apply(mat_mul(A, B), v)
    return diff, diff.norm()
