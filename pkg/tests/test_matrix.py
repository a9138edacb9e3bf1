import itertools

import numpy as np
import pytest

from gcalgebra.gc import GcNumber
from gcalgebra.matrix import (
    GcMatrix,
    GcVector2,
    anticommutator,
    gamma_matrices,
    identity,
    mat_apply,
    mat_mul,
    operator_associator_probe,
    zeros,
)

ZERO, ONE = GcNumber(), GcNumber(1)
I, J = GcNumber(0, 1, 0), GcNumber(0, 0, 1)
G0, G1, G2, G3 = gamma_matrices()
EYE = identity()


def m(rows):
    return GcMatrix.of(rows)


class TestGamma:
    def test_entries(self):
        assert G0 == m([[ZERO, J], [J, ZERO]])
        assert G1 == m([[ZERO, -J], [J, ZERO]])
        assert G2 == m([[ZERO, -I], [I, ZERO]])
        assert G3 == m([[ONE, ZERO], [ZERO, -ONE]])

    def test_squares_exact(self):
        assert mat_mul(G0, G0) == -EYE
        for g in (G1, G2, G3):
            assert mat_mul(g, g) == EYE

    def test_gamma1_gamma2_vanish(self):
        assert mat_mul(G1, G2).is_zero()
        assert mat_mul(G2, G1).is_zero()

    def test_gamma0_gamma3(self):
        assert mat_mul(G0, G3) == m([[ZERO, -J], [J, ZERO]])
        assert mat_mul(G3, G0) == m([[ZERO, J], [-J, ZERO]])
        assert anticommutator(G0, G3).is_zero()

    def test_anticommutator_self(self):
        assert anticommutator(G0, G0) == -2.0 * EYE

    @pytest.mark.parametrize("a, b", list(itertools.combinations(range(4), 2)))
    def test_anticommute(self, a, b):
        g = gamma_matrices()
        assert anticommutator(g[a], g[b]).is_zero()


class TestApply:
    def test_identity(self):
        v = GcVector2(GcNumber(1, 2, 3), GcNumber(-1, 0, 0.5))
        assert mat_apply(EYE, v) == v

    def test_gamma3(self):
        v = GcVector2(GcNumber(1, 2, 3), GcNumber(-1, 0, 0.5))
        assert mat_apply(G3, v) == GcVector2(v.top, -v.bottom)

    def test_gamma0(self):
        assert mat_apply(G0, GcVector2(ONE, J)) == GcVector2(-ONE, J)

    def test_matmul_operator(self):
        v = GcVector2(ONE, J)
        assert G0 @ v == mat_apply(G0, v)
        assert G0 @ G0 == mat_mul(G0, G0)


class TestAssociator:
    def test_witness_with_i(self):
        diff, d = operator_associator_probe(G1, G2, GcVector2(I, ZERO))
        # gamma2 (i, 0) = (0, -1), gamma1 (0, -1) = (j, 0), gamma1 gamma2 = 0
        assert diff == GcVector2(J, ZERO)
        assert d == 1.0

    def test_with_j_vanishes(self):
        # gamma2 (j, 0) = (0, ij) = 0, so both sides are zero here
        assert operator_associator_probe(G1, G2, GcVector2(J, ZERO))[1] == 0.0

    def test_gamma2_squared_on_j(self):
        # (gamma2 gamma2) v = v but gamma2 (gamma2 v) = 0 for v = (j, 0)
        assert operator_associator_probe(G2, G2, GcVector2(J, ZERO))[1] == 1.0

    def test_identity_trivial(self):
        v = GcVector2(GcNumber(1, 2, 3), GcNumber(0, -1, 1))
        assert operator_associator_probe(EYE, EYE, v)[1] == 0.0

    def test_span_1j_integer_sweep(self):
        values = [ZERO, ONE, -ONE, J, -J]
        vecs = [GcVector2(a, b) for a in (ONE, J, GcNumber(2, 0, -1)) for b in (ZERO, J, -ONE)]
        rng = np.random.default_rng(0)
        for _ in range(300):
            A = m([[values[k] for k in rng.integers(0, 5, 2)] for _ in range(2)])
            B = m([[values[k] for k in rng.integers(0, 5, 2)] for _ in range(2)])
            for v in vecs:
                assert operator_associator_probe(A, B, v)[1] == 0.0


def _span_1j_matrix(rng):
    return m([[GcNumber(rng.uniform(-1, 1), 0, rng.uniform(-1, 1)) for _ in range(2)] for _ in range(2)])


def test_matmul_associative_on_span_1j():
    rng = np.random.default_rng(4)
    for _ in range(1000):
        A, B, C = (_span_1j_matrix(rng) for _ in range(3))
        assert mat_mul(mat_mul(A, B), C).isclose(mat_mul(A, mat_mul(B, C)), atol=1e-12)


def test_matmul_not_associative_in_general():
    # (gamma2 gamma2) gamma1 = gamma1 but gamma2 (gamma2 gamma1) = 0
    assert mat_mul(mat_mul(G2, G2), G1) == G1
    assert mat_mul(G2, mat_mul(G2, G1)).is_zero()


def test_matmul_bilinear():
    rng = np.random.default_rng(9)

    def rand():
        return m([[GcNumber(*rng.uniform(-1, 1, 3)) for _ in range(2)] for _ in range(2)])

    for _ in range(100):
        A, B, C = rand(), rand(), rand()
        assert mat_mul(A + B, C).isclose(mat_mul(A, C) + mat_mul(B, C))
        assert mat_mul(C, A + B).isclose(mat_mul(C, A) + mat_mul(C, B))


def test_json_and_zero():
    assert zeros().is_zero()
    rows = G0.to_list()
    assert rows[0][1] == {"a": 0.0, "b": 0.0, "c": 1.0}
    assert len(rows) == 2 and len(rows[0]) == 2
