import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcalgebra.algebra import ConvergenceError, DomainError
from gcalgebra.gc import (
    GcNumber,
    PolarGc,
    SgcNumber,
    Verdict,
    adler_check,
    conj,
    euler_inequality_witness,
    exp_closed,
    exp_series,
    from_polar,
    norm,
    sgc_mul,
    to_polar,
)

comp = st.floats(min_value=-10, max_value=10, allow_nan=False)
gcs = st.builds(GcNumber, comp, comp, comp)
I, J = GcNumber(0, 1, 0), GcNumber(0, 0, 1)


def close(x, y, tol=1e-12):
    return x.distance(y) <= tol


class TestConjNorm:
    def test_conj(self):
        assert conj(GcNumber(1, 2, 3)) == GcNumber(1, -2, -3)
        assert conj(GcNumber(5)) == GcNumber(5)

    def test_conj_times_q(self):
        q = GcNumber(1, 1, 1)
        assert conj(q) * q == GcNumber(3, 0, 0)

    def test_norm_examples(self):
        assert norm(GcNumber(3, 0, 4)) == 5.0
        assert norm(I) == norm(J) == 1.0
        assert norm(I * J) == 0.0
        assert norm(GcNumber()) == 0.0

    @given(gcs)
    def test_conj_involution_and_norm(self, q):
        assert conj(conj(q)) == q
        cq = conj(q) * q
        assert cq.b == 0.0 and cq.c == 0.0
        assert math.isclose(math.sqrt(cq.a), norm(q), rel_tol=1e-12, abs_tol=1e-300)

    def test_conj_product_1000_random(self):
        rng = np.random.default_rng(11)
        for row in rng.uniform(-10, 10, size=(1000, 3)):
            q = GcNumber(*row)
            cq = conj(q) * q
            assert cq.b == 0.0 and cq.c == 0.0
            assert math.isclose(cq.a, norm(q) ** 2, rel_tol=1e-12)


class TestPolar:
    @pytest.mark.parametrize("q, want", [
        (GcNumber(1), (1.0, 0.0, 0.0)),
        (J, (1.0, math.pi / 2, math.pi / 2)),
        (GcNumber(-1), (1.0, math.pi, 0.0)),
        (I, (1.0, math.pi / 2, 0.0)),
        (GcNumber(0, 0, -2), (2.0, math.pi / 2, 3 * math.pi / 2)),
    ])
    def test_examples(self, q, want):
        p = to_polar(q)
        assert p.R == pytest.approx(want[0], abs=1e-15)
        assert p.theta == pytest.approx(want[1], abs=1e-15)
        assert p.phi == pytest.approx(want[2], abs=1e-15)

    def test_zero(self):
        assert to_polar(GcNumber()) == PolarGc(0.0, 0.0, 0.0)

    def test_validation(self):
        with pytest.raises(DomainError):
            PolarGc(-1.0, 0.0, 0.0)
        with pytest.raises(DomainError):
            PolarGc(1.0, 4.0, 0.0)
        with pytest.raises(DomainError):
            PolarGc(1.0, 0.0, 2 * math.pi)

    def test_roundtrip_1000_random(self):
        rng = np.random.default_rng(5)
        for row in rng.uniform(-10, 10, size=(1000, 3)):
            q = GcNumber(*row)
            back = from_polar(to_polar(q))
            assert max(abs(u - v) for u, v in zip(back.coeffs, q.coeffs)) <= 1e-12

    @given(gcs)
    def test_roundtrip_property(self, q):
        p = to_polar(q)
        assert 0 <= p.theta <= math.pi and 0 <= p.phi < 2 * math.pi
        assert close(from_polar(p), q, 1e-12 * 3)

    def test_polar_matches_exp_form(self):
        q = GcNumber(-0.4, 2.0, -1.3)
        p = to_polar(q)
        assert close(p.R * exp_closed(p.theta, p.phi), q)


class TestExponential:
    def test_theta_zero(self):
        assert exp_series(0.0, 1.2) == GcNumber(1.0)

    def test_euler_identity(self):
        assert close(exp_series(math.pi, 0.0), GcNumber(-1.0), 1e-11)

    def test_quarter_turn_along_j(self):
        assert close(exp_series(math.pi / 2, math.pi / 2), J, 1e-11)

    def test_closed_form_example(self):
        assert close(exp_closed(math.pi / 3, 0.0), GcNumber(0.5, math.sqrt(3) / 2, 0.0), 1e-15)

    @given(st.floats(-50, 50), st.floats(0, 2 * math.pi))
    def test_closed_form_unit_norm(self, theta, phi):
        assert abs(norm(exp_closed(theta, phi)) - 1.0) <= 1e-14

    def test_series_matches_closed_on_grid(self):
        worst = 0.0
        for theta in np.linspace(-10, 10, 100):
            for phi in np.arange(32) * (2 * math.pi / 32):
                worst = max(worst, exp_series(theta, phi).distance(exp_closed(theta, phi)))
        assert worst <= 1e-10

    def test_series_is_left_folded_power_sum(self):
        from gcalgebra.algebra import power

        theta, phi = 1.3, 0.7
        x = theta * GcNumber(0, math.cos(phi), math.sin(phi))
        total = GcNumber()
        for n in range(40):
            total = total + power(x, n) / math.factorial(n)
        # the series stops once a term falls below 1e-12 of the sum
        assert close(total, exp_series(theta, phi), 1e-11)

    def test_series_nonconvergence(self):
        with pytest.raises(ConvergenceError):
            exp_series(30.0, 0.5, terms=10)

    def test_series_large_theta_converges_within_cap(self):
        exp_series(50.0, 1.0, terms=200)

    def test_bad_tol(self):
        with pytest.raises(DomainError):
            exp_series(1.0, 0.0, tol=0.0)


class TestEulerInequality:
    def test_generic_point(self):
        lhs, rhs, d = euler_inequality_witness(1.0, math.pi / 4)
        a = 1 / math.sqrt(2)
        want_rhs = GcNumber(math.cos(a) ** 2, math.sin(a) * math.cos(a), math.cos(a) * math.sin(a))
        assert close(rhs, want_rhs, 1e-15)
        assert d == pytest.approx(0.14789280113477457, rel=1e-12)
        assert d > 0.1

    def test_degenerate(self):
        assert euler_inequality_witness(1.0, 0.0)[2] == 0.0
        assert euler_inequality_witness(0.0, math.pi / 4)[2] == 0.0

    @given(st.floats(0.1, 3.0), st.floats(0.1, 1.4))
    def test_generic_positive(self, theta, phi):
        assert euler_inequality_witness(theta, phi)[2] > 0


class TestSgc:
    def test_product_example(self):
        phi = math.pi / 4
        x, y = SgcNumber(2, math.pi / 6, phi), SgcNumber(3, math.pi / 3, phi)
        z = sgc_mul(x, y)
        assert z.R == 6 and z.theta == pytest.approx(math.pi / 2, abs=1e-15) and z.phi == phi
        assert close(z.to_gc(), x.to_gc() * y.to_gc(), 1e-14)
        # R = 6, theta = pi/2: 6 (cos(pi/4) i + sin(pi/4) j)
        assert close(z.to_gc(), GcNumber(0, 6 / math.sqrt(2), 6 / math.sqrt(2)), 1e-14)

    def test_unit(self):
        x = SgcNumber(2.5, 1.1, 0.3)
        assert sgc_mul(SgcNumber(1, 0, 0.3), x) == x

    def test_phi_mismatch(self):
        with pytest.raises(DomainError):
            sgc_mul(SgcNumber(1, 0, 0.3), SgcNumber(1, 0, 0.3 + 1e-9))
        sgc_mul(SgcNumber(1, 0, 0.3), SgcNumber(1, 0, 0.3 + 1e-13))

    def test_norm_multiplicative(self):
        x, y = SgcNumber(2, 0.4, 1.0), SgcNumber(0.5, -2.0, 1.0)
        assert norm(sgc_mul(x, y).to_gc()) == pytest.approx(norm(x.to_gc()) * norm(y.to_gc()), rel=1e-15)

    def test_associativity_1000_triples(self):
        rng = np.random.default_rng(2)
        for _ in range(1000):
            phi = float(rng.uniform(0, 2 * math.pi))
            x, y, z = (SgcNumber(float(r), float(t), phi)
                       for r, t in zip(rng.uniform(0.1, 10, 3), rng.uniform(-math.pi, math.pi, 3)))
            left, right = sgc_mul(sgc_mul(x, y), z), sgc_mul(x, sgc_mul(y, z))
            assert math.isclose(left.R, right.R, rel_tol=1e-12)
            assert math.isclose(left.theta, right.theta, rel_tol=1e-12, abs_tol=1e-12)
            gl = (x.to_gc() * y.to_gc()) * z.to_gc()
            gr = x.to_gc() * (y.to_gc() * z.to_gc())
            assert gl.isclose(gr, rel=1e-12)
            assert gl.isclose(left.to_gc(), rel=1e-12)

    def test_embedding_stays_in_plane(self):
        x = SgcNumber(1.7, 0.9, 2.2).to_gc() * SgcNumber(0.3, -2.1, 2.2).to_gc()
        assert to_polar(x).phi == pytest.approx(2.2, abs=1e-12) or to_polar(x).phi == pytest.approx(
            2.2 + math.pi, abs=1e-12)


@pytest.fixture(scope="module")
def report():
    return adler_check(1000, seed=0)


class TestModulusPostulates:
    def test_postulates_1_to_4_hold(self, report):
        for k in (1, 2, 3, 4):
            assert report.postulates[k].verdict is Verdict.HOLDS

    def test_postulate_5_fails_with_ij(self, report):
        p5 = report.postulates[5]
        assert p5.verdict is Verdict.FAILS
        assert p5.witness == (I, J)
        assert p5.lhs == 0.0 and p5.rhs == 1.0 and p5.discrepancy == 1.0
        assert p5.violations > 1  # random Gc pairs fail too

    def test_sgc_holds(self, report):
        assert report.sgc_norm_multiplicative.holds
        assert report.sgc_associative.holds
        assert report.sgc_associative.probes == 1000

    def test_homogeneity_example(self):
        phi = GcNumber(1, 1, 1)
        assert norm(-2 * phi) == pytest.approx(2 * math.sqrt(3), rel=1e-15)
        assert norm(-2 * phi) == pytest.approx(2 * norm(phi), rel=1e-15)

    def test_json(self, report):
        data = json.loads(report.to_json())
        assert set(data) >= {f"postulate_{k}" for k in range(1, 6)}
        assert data["postulate_5"]["verdict"] == "fails"
        assert data["postulate_5"]["witness"] == [{"a": 0.0, "b": 1.0, "c": 0.0}, {"a": 0.0, "b": 0.0, "c": 1.0}]
        assert data["postulate_3"]["verdict"] == "holds-on-probes"

    def test_deterministic(self):
        assert adler_check(50, seed=3).to_dict() == adler_check(50, seed=3).to_dict()


class TestSerialization:
    def test_gc_json_and_parse(self):
        q = GcNumber(1.5, -2, 0.25)
        assert GcNumber.from_dict(json.loads(json.dumps(q.to_dict()))) == q
        assert GcNumber.parse("1.5, -2, 0.25") == q
        with pytest.raises(ValueError):
            GcNumber.parse("1,2")

    def test_text_form(self):
        assert str(GcNumber(1, -2, 3)) == "1 - 2i + 3j"

    def test_polar_json(self):
        assert to_polar(J).to_dict() == {"R": 1.0, "theta": math.pi / 2, "phi": math.pi / 2}
