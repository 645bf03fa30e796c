"""Generalized inverses: defining identities, uniqueness, prescriptions."""

import numpy as np
import pytest

from mprod import (
    ExistenceViolated,
    Transform,
    check_subspaces,
    drazin_frd,
    drazin_qdr,
    fro_norm,
    m_identity,
    m_inverse,
    m_power,
    m_transpose,
    multi_index,
    outer_inverse_qdr,
    pinv_frd,
    pinv_qdr,
    residual_report,
)

from conftest import random_index_tensor, random_multirank_tensor

RNG = np.random.default_rng(20240814)


class TestPinvFRD:
    def test_dense_example_matches_known_inverse(self, pinv_dense_example):
        a, transform = pinv_dense_example
        expected = np.zeros((3, 3, 3), dtype=complex)
        expected[:, :, 0] = [[-0.1553, -1.7632, 1.9421],
                            [-1.1053, -0.2632, 2.3421],
                            [1.7447, 2.2368, -5.8579]]
        expected[:, :, 1] = [[-0.1053, -0.7632, 0.8421],
                            [-0.6053, -0.2632, 1.3421],
                            [0.8947, 1.2368, -3.1579]]
        expected[:, :, 2] = [[0, 1, -1], [1, 0, -1], [-1, -1, 3]]
        report = pinv_frd(a, transform)
        assert np.max(np.abs(report.x - expected)) <= 1e-3
        assert set(report.residuals) == {"EM1", "EM2", "EM3", "EM4"}
        assert all(v <= 1e-10 for v in report.residuals.values())

    def test_fractions_example_exact_targets(self, pinv_fractions_example):
        a, transform = pinv_fractions_example
        x = pinv_frd(a, transform).x
        assert abs(x[0, 0, 0] - (-11 / 516)) <= 1e-10
        assert abs(x[1, 1, 1] - (1 / 6)) <= 1e-10
        assert abs(x[2, 0, 1] - (1 / 3)) <= 1e-10
        assert abs(x[3, 2, 2] - (12 / 43)) <= 1e-10

    def test_p1_rank_one_formula(self):
        transform = Transform(np.array([[1.0]]))
        a = np.array([[1.0, 2.0], [2.0, 4.0]])[:, :, None]
        x = pinv_frd(a, transform).x
        np.testing.assert_allclose(x[:, :, 0], np.array([[1, 2], [2, 4]]) / 25.0, atol=1e-13)

    def test_zero_slice_maps_to_zero(self):
        transform = Transform.identity(2)
        a = np.zeros((2, 3, 2), dtype=complex)
        a[:, :, 0] = RNG.standard_normal((2, 3))
        x = pinv_frd(a, transform).x
        assert np.all(x[:, :, 1] == 0)
        assert x.shape == (3, 2, 2)


class TestZeroTensor:
    def test_pinv_of_zero_is_zero(self):
        transform = Transform.random(2, seed=29)
        rep = pinv_frd(np.zeros((3, 4, 2)), transform)
        assert np.all(rep.x == 0)
        assert rep.x.shape == (4, 3, 2)
        assert all(v == 0.0 for v in rep.residuals.values())

    def test_drazin_of_zero_is_zero(self):
        transform = Transform.random(2, seed=29)
        rep = drazin_frd(np.zeros((3, 3, 2)), transform)
        assert np.all(rep.x == 0)


class TestDrazinFRD:
    def test_graded_example_matches_known_inverse(self, drazin_example):
        a, transform = drazin_example
        expected = np.zeros((3, 3, 3), dtype=complex)
        expected[:, :, 0] = [[0.0625, 0.0625, 0], [0.1875, 0.1875, 0], [0, 0, 0]]
        expected[:, :, 1] = [[0.5, 0, 0], [0, 0, 0], [0, 0, 0]]
        report = drazin_frd(a, transform)
        assert np.max(np.abs(report.x - expected)) <= 1e-3
        assert set(report.residuals) == {"EM2", "EM5", "E1k"}
        assert all(v <= 1e-10 for v in report.residuals.values())

    def test_invertible_tensor_reduces_to_inverse(self):
        transform = Transform.random(2, seed=31)
        a = RNG.standard_normal((3, 3, 2)).astype(complex) + 4.0 * m_identity(3, 2, transform)
        y = drazin_frd(a, transform).x
        assert fro_norm(y - m_inverse(a, transform)) <= 1e-10

    def test_p1_nilpotent_is_zero(self):
        transform = Transform(np.array([[1.0]]))
        b = np.array([[0.0, 1.0], [0.0, 0.0]])[:, :, None]
        y = drazin_frd(b, transform).x
        assert np.all(y == 0)


class TestOuterInverse:
    def test_transpose_prescription_recovers_pinv(self):
        transform = Transform.random(3, seed=37)
        for trial in range(5):
            rng = np.random.default_rng(700 + trial)
            a, _ = random_multirank_tensor(rng, 4, 3, 3, transform)
            w = m_transpose(a, transform)
            z = outer_inverse_qdr(a, w, transform).x
            x = pinv_frd(a, transform).x
            assert fro_norm(z - x) <= 1e-9 * max(1.0, fro_norm(x))

    def test_index_power_prescription_recovers_drazin(self):
        transform = Transform.random(2, seed=41)
        for trial in range(5):
            rng = np.random.default_rng(800 + trial)
            b, _ = random_index_tensor(rng, 4, 2, transform)
            k = multi_index(b, transform).tubal_index
            w = m_power(b, k, transform)
            z = outer_inverse_qdr(b, w, transform).x
            y = drazin_frd(b, transform).x
            assert fro_norm(z - y) <= 1e-9 * max(1.0, fro_norm(y))

    def test_series_reciprocal_example_at_half(self):
        # Rational-function pair evaluated at z = 1/2; the nonzero result
        # entries are (z^3+3z^2+6z+6)/(6z) and (z^3+3z^2+6z+6)/(6z+6).
        z = 0.5
        f = z / (1 + z + z ** 2 / 2 + z ** 3 / 6)
        a = np.zeros((2, 2, 2), dtype=complex)
        a[0, 0, 0] = f
        a[1, 0, 1] = 2 * z
        w = np.zeros((2, 2, 2), dtype=complex)
        w[0, 0, 0] = 1 + z
        w[1, 0, 1] = z
        transform = Transform(np.array([[1.0, 2.0], [1.0, 1.0]]))
        out = outer_inverse_qdr(a, w, transform).x
        num = z ** 3 + 3 * z ** 2 + 6 * z + 6
        assert abs(out[0, 0, 0] - num / (6 * z)) <= 1e-9
        assert abs(out[1, 0, 1] - num / (6 * z + 6)) <= 1e-9
        mask = np.ones((2, 2, 2), dtype=bool)
        mask[0, 0, 0] = mask[1, 0, 1] = False
        assert np.max(np.abs(out[mask])) <= 1e-12

    def test_existence_guard_raises(self):
        transform = Transform.identity(2)
        rng = np.random.default_rng(900)
        a, _ = random_multirank_tensor(rng, 3, 3, 2, transform, ranks=(1, 1))
        w, _ = random_multirank_tensor(rng, 3, 3, 2, transform, ranks=(2, 2))
        with pytest.raises(ExistenceViolated):
            outer_inverse_qdr(a, w, transform)

    def test_idempotent_residual_bound(self):
        transform = Transform.random(2, seed=43)
        for trial in range(5):
            rng = np.random.default_rng(1000 + trial)
            a, ranks = random_multirank_tensor(rng, 4, 4, 2, transform)
            w_ranks = tuple(max(1, r - 1) for r in ranks)
            w, _ = random_multirank_tensor(rng, 4, 4, 2, transform, ranks=w_ranks)
            report = outer_inverse_qdr(a, w, transform)
            z = report.x
            assert report.residuals["EM2"] <= 1e-8 * max(1.0, fro_norm(z))

    def test_output_shares_subspaces_with_prescription(self):
        transform = Transform.random(2, seed=47)
        rng = np.random.default_rng(1100)
        a, _ = random_multirank_tensor(rng, 4, 3, 2, transform, ranks=(3, 3))
        w, _ = random_multirank_tensor(rng, 3, 4, 2, transform, ranks=(2, 2))
        z = outer_inverse_qdr(a, w, transform).x
        assert check_subspaces(z, w, transform).passed


class TestQDRBackedInverses:
    def test_pinv_methods_agree_on_dense_example(self, pinv_dense_example):
        a, transform = pinv_dense_example
        x1 = pinv_frd(a, transform).x
        x2 = pinv_qdr(a, transform).x
        assert fro_norm(x1 - x2) <= 1e-9

    def test_identity_maps_to_identity(self):
        transform = Transform.random(3, seed=53)
        eye = m_identity(3, 3, transform)
        assert fro_norm(pinv_qdr(eye, transform).x - eye) <= 1e-10

    def test_drazin_methods_agree_on_graded_example(self, drazin_example):
        a, transform = drazin_example
        y1 = drazin_frd(a, transform).x
        y2 = drazin_qdr(a, transform).x
        assert fro_norm(y1 - y2) <= 1e-9

    def test_methods_agree_on_random_inputs(self):
        transform = Transform.random(2, seed=59)
        for trial in range(10):
            rng = np.random.default_rng(1200 + trial)
            a, _ = random_multirank_tensor(rng, 4, 3, 2, transform,
                                           orthonormal_factors=True)
            assert fro_norm(pinv_frd(a, transform).x - pinv_qdr(a, transform).x) <= 1e-9
            b, _ = random_index_tensor(rng, 4, 2, transform)
            assert fro_norm(drazin_frd(b, transform).x - drazin_qdr(b, transform).x) <= 1e-9


class TestCheckSubspaces:
    def test_same_tensor_passes(self):
        transform = Transform.random(2, seed=61)
        z = RNG.standard_normal((3, 4, 2)).astype(complex)
        assert check_subspaces(z, z, transform).passed

    def test_scaling_invariance(self):
        transform = Transform.random(2, seed=67)
        z = RNG.standard_normal((3, 4, 2)).astype(complex)
        assert check_subspaces(z, 2.0 * z, transform).passed

    def test_disjoint_ranges_fail(self):
        transform = Transform.identity(1)
        z = np.zeros((2, 2, 1), dtype=complex)
        w = np.zeros((2, 2, 1), dtype=complex)
        z[0, 0, 0] = 1.0
        w[1, 1, 0] = 1.0
        report = check_subspaces(z, w, transform)
        assert not report.passed
        assert report.per_slice == (False,)


class TestResidualReport:
    def test_exact_inverse_scores_clean(self):
        transform = Transform.random(2, seed=71)
        a = RNG.standard_normal((3, 3, 2)).astype(complex) + 4.0 * m_identity(3, 2, transform)
        x = m_inverse(a, transform)
        for kind in ("pinv", "drazin", "outer"):
            rep = residual_report(a, x, transform, kind)
            assert all(v <= 1e-10 for v in rep.values())

    def test_zero_candidate_gives_input_norm(self):
        transform = Transform.random(2, seed=73)
        a = RNG.standard_normal((3, 4, 2)).astype(complex)
        rep = residual_report(a, np.zeros((4, 3, 2)), transform, "pinv")
        assert rep["EM1"] == pytest.approx(fro_norm(a), rel=0, abs=1e-14)

    def test_computed_pinv_on_dense_example(self, pinv_dense_example):
        a, transform = pinv_dense_example
        x = pinv_frd(a, transform).x
        rep = residual_report(a, x, transform, "pinv")
        assert rep["EM1"] <= 1e-10

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            residual_report(np.zeros((2, 2, 1)), np.zeros((2, 2, 1)),
                            Transform.identity(1), "group")


class TestPenroseAndDrazinSuites:
    def test_penrose_identities_on_mixed_profiles(self):
        transform = Transform.random(3, seed=79)
        for trial in range(10):
            rng = np.random.default_rng(1300 + trial)
            m, n = rng.integers(2, 6, size=2)
            a, _ = random_multirank_tensor(rng, int(m), int(n), 3, transform)
            rep = pinv_frd(a, transform)
            assert all(v <= 1e-8 for v in rep.residuals.values())

    def test_drazin_identities_on_mixed_indices(self):
        transform = Transform.random(2, seed=83)
        for trial in range(10):
            rng = np.random.default_rng(1400 + trial)
            b, _ = random_index_tensor(rng, 4, 2, transform)
            rep = drazin_frd(b, transform)
            assert all(v <= 1e-8 for v in rep.residuals.values())

    def test_p1_oracle_against_svd_pseudoinverse(self):
        transform = Transform(np.array([[1.0]]))
        for trial in range(20):
            rng = np.random.default_rng(1500 + trial)
            m, n = rng.integers(2, 6, size=2)
            r = int(rng.integers(1, min(m, n) + 1))
            mat = rng.standard_normal((m, r)) @ rng.standard_normal((r, n))
            a = mat[:, :, None].astype(complex)
            x = pinv_frd(a, transform).x[:, :, 0]
            oracle = np.linalg.pinv(mat)
            assert np.linalg.norm(x - oracle) <= 1e-10
