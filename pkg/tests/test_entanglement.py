import numpy as np
import pytest

import quditbloch as qb
from quditbloch import RegionLabel, WitnessMethod, WitnessVerdict

QUBIT_REGION_I = [(0.5, 0.0), (0.7, 0.0), (0.9, 0.0), (0.6, 0.2), (0.7, 0.25),
                  (0.6, -0.2), (0.8, -0.1), (0.5, 0.3), (0.55, -0.35), (0.95, 0.02)]
QUBIT_REGION_II = [(-0.7, -1.5), (-0.6, -1.4), (-0.75, -1.6), (-0.55, -1.3), (-0.8, -1.7),
                   (-0.9, -1.85), (-0.65, -1.45), (-0.72, -1.55), (-0.58, -1.35), (-0.85, -1.75)]
QUTRIT_REGION_I = [(0.5, 0.0), (0.7, 0.0), (0.9, 0.0), (0.6, 0.2), (0.5, 0.4),
                   (0.4, 0.1), (0.8, 0.05), (0.35, -0.15), (0.6, -0.08), (0.45, 0.5)]
QUTRIT_REGION_II = [(0.0, 0.6), (0.1, 0.6), (0.0, 0.7), (0.1, 0.7), (0.2, 0.7),
                    (0.05, 0.65), (0.15, 0.8), (0.0, 0.8), (0.1, 0.85), (0.05, 0.75)]


def qubit_region_i_distance(alpha, beta):
    return np.sqrt(3) / 2 * (alpha - 1 / 3 - beta / 3)


def qubit_region_ii_distance(alpha, beta):
    return (-alpha - 1 - beta) / (2 * np.sqrt(3))


def qutrit_region_i_distance(alpha, beta):
    return 2 * np.sqrt(2) / 3 * (alpha - 1 / 4 - beta / 8)


def qutrit_region_ii_distance(alpha, beta):
    return (-4 * alpha - 2 + 5 * beta) / (6 * np.sqrt(2))


class TestPPTVerdict:
    def test_entangled_isotropic_qubit(self):
        is_ppt, lo = qb.ppt_verdict(qb.isotropic_state(2, 0.5))
        assert not is_ppt and lo < -1e-3

    def test_product_state(self, rng):
        ra = qb.random_density_matrix(3, rng).matrix
        rb = qb.random_density_matrix(3, rng).matrix
        is_ppt, lo = qb.ppt_verdict(qb.tensor(ra, rb), subdim=3)
        assert is_ppt and lo > -1e-12

    def test_qutrit_ppt_boundary(self):
        for beta in (-0.1, 0.0, 0.2):
            rho = qb.two_param_qutrit(beta / 8 + 0.25, beta)
            _, lo = qb.ppt_verdict(rho)
            assert lo == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_isotropic_flip_located_by_bisection(self, d):
        def pt_min_eig(alpha):
            return qb.ppt_verdict(qb.isotropic_state(d, alpha))[1]

        lo, hi = 0.0, 1.0
        for _ in range(60):
            mid = (lo + hi) / 2
            if pt_min_eig(mid) > 0:
                lo = mid
            else:
                hi = mid
        assert (lo + hi) / 2 == pytest.approx(1 / (d + 1), abs=1e-9)


class TestWitnessCandidate:
    def test_qubit_region_i_form(self):
        alpha, beta = 0.8, 0.1
        rho_ent = qb.two_param_qubit(alpha, beta)
        rho_tilde = qb.two_param_qubit(1 / 3 + beta / 3, beta)
        c = qb.witness_candidate(rho_tilde, rho_ent)
        sigma = qb.composite_operator("sigma", 2)
        assert np.abs(c - (np.eye(4) - sigma) / (2 * np.sqrt(3))).max() <= 1e-12

    def test_qubit_region_ii_form(self):
        alpha, beta = -0.7, -1.5
        rho_ent = qb.two_param_qubit(alpha, beta)
        rho_tilde = qb.two_param_qubit((-1 + 2 * alpha - beta) / 3, (-2 - 2 * alpha + beta) / 3)
        c = qb.witness_candidate(rho_tilde, rho_ent)
        expected = (np.eye(4)
                    + qb.tensor(qb.PAULI[1], qb.PAULI[1])
                    - qb.tensor(qb.PAULI[2], qb.PAULI[2])
                    - qb.tensor(qb.PAULI[3], qb.PAULI[3])) / (2 * np.sqrt(3))
        assert np.abs(c - expected).max() <= 1e-12

    def test_qutrit_region_i_form(self):
        alpha, beta = 0.6, 0.2
        rho_ent = qb.two_param_qutrit(alpha, beta)
        rho_tilde = qb.two_param_qutrit(0.25 + beta / 8, beta)
        c = qb.witness_candidate(rho_tilde, rho_ent)
        u = qb.composite_operator("u", 3)
        assert np.abs(c - (2 * np.eye(9) - u) / (6 * np.sqrt(2))).max() <= 1e-12

    def test_qutrit_region_ii_form(self):
        alpha, beta = 0.1, 0.7
        rho_ent = qb.two_param_qutrit(alpha, beta)
        rho_tilde = qb.two_param_qutrit((-2 + 20 * alpha + 5 * beta) / 24, (2 + 4 * alpha + beta) / 6)
        c = qb.witness_candidate(rho_tilde, rho_ent)
        u1 = qb.composite_operator("u1", 3)
        u2 = qb.composite_operator("u2", 3)
        assert np.abs(c - (2 * np.eye(9) + u1 - u2) / (6 * np.sqrt(2))).max() <= 1e-12

    def test_construction_identity(self):
        # <rho_ent, C> = -||rho_tilde - rho_ent|| by construction
        rho_ent = qb.two_param_qubit(0.9, 0.0)
        rho_tilde = qb.two_param_qubit(1 / 3, 0.0)
        c = qb.witness_candidate(rho_tilde, rho_ent)
        dist = qb.hs_norm(rho_tilde.matrix - rho_ent.matrix)
        assert qb.hs_inner(rho_ent.matrix, c).real == pytest.approx(-dist, abs=1e-12)

    def test_zero_distance_error(self):
        rho = qb.two_param_qubit(0.5, 0.0)
        with pytest.raises(ValueError):
            qb.witness_candidate(rho, rho)


class TestVerifyWitness:
    def test_qubit_region_i_witness(self):
        alpha, beta = 0.8, 0.1
        sigma = qb.composite_operator("sigma", 2)
        c = (np.eye(4) - sigma) / (2 * np.sqrt(3))
        report = qb.verify_witness(c, qb.two_param_qubit(alpha, beta), WitnessMethod.LEMMA_QUBIT)
        assert report.verdict is WitnessVerdict.WITNESS
        expected = -np.sqrt(3) / 2 * (alpha - 1 / 3 - beta / 3)
        assert report.ent_expectation == pytest.approx(expected, abs=1e-12)
        assert report.sep_min_estimate == 0.0

    def test_positive_operator_is_not_witness(self):
        report = qb.verify_witness(np.eye(4) / 2, qb.two_param_qubit(0.9, 0.0),
                                   WitnessMethod.LEMMA_QUBIT)
        assert report.verdict is WitnessVerdict.NOT_WITNESS
        assert report.ent_expectation > 0

    def test_qutrit_region_ii_witness(self):
        alpha, beta = 0.0, 0.7
        u1 = qb.composite_operator("u1", 3)
        u2 = qb.composite_operator("u2", 3)
        c = (2 * np.eye(9) + u1 - u2) / (6 * np.sqrt(2))
        report = qb.verify_witness(c, qb.two_param_qutrit(alpha, beta), WitnessMethod.LEMMA_QUTRIT)
        assert report.verdict is WitnessVerdict.WITNESS
        expected = (4 * alpha + 2 - 5 * beta) / (6 * np.sqrt(2))
        assert report.ent_expectation == pytest.approx(expected, abs=1e-12)
        assert expected < 0

    def test_seesaw_refutes(self):
        a = -qb.tensor(qb.PAULI[3], qb.PAULI[3])
        report = qb.verify_witness(a, qb.two_param_qubit(0.9, 0.0), WitnessMethod.SEESAW)
        assert report.verdict is WitnessVerdict.NOT_WITNESS
        assert report.sep_min_estimate == pytest.approx(-1.0, abs=1e-9)

    def test_seesaw_cannot_certify(self):
        sigma = qb.composite_operator("sigma", 2)
        c = (np.eye(4) - sigma) / (2 * np.sqrt(3))
        report = qb.verify_witness(c, qb.two_param_qubit(0.9, 0.0), WitnessMethod.SEESAW)
        assert report.verdict is WitnessVerdict.INCONCLUSIVE
        assert report.sep_min_estimate > -1e-9

    def test_lemma_mismatch_falls_back_to_seesaw(self):
        # sigma_1 x sigma_3 is not of the lemma form; report must say so
        a = qb.tensor(qb.PAULI[1], qb.PAULI[3])
        report = qb.verify_witness(a, qb.two_param_qubit(0.9, 0.0), WitnessMethod.LEMMA_QUBIT)
        assert report.method is WitnessMethod.SEESAW
        assert report.verdict is WitnessVerdict.NOT_WITNESS   # products reach -1

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            qb.verify_witness(np.diag([1j, 0, 0, 0]), qb.two_param_qubit(0.9, 0.0))


class TestIsotropicMeasure:
    def test_qubit_value(self):
        res = qb.hs_measure_isotropic(2, 1.0)
        assert res.distance == pytest.approx(1 / np.sqrt(3), abs=1e-12)
        assert res.witness.verdict is WitnessVerdict.WITNESS
        assert res.witness.method is WitnessMethod.LEMMA_QUBIT

    def test_qutrit_value(self):
        res = qb.hs_measure_isotropic(3, 1.0)
        assert res.distance == pytest.approx(np.sqrt(2) / 2, abs=1e-12)
        assert res.witness.verdict is WitnessVerdict.WITNESS

    def test_boundary_continuity(self):
        for d in (2, 3, 4):
            eps = 1e-9
            res = qb.hs_measure_isotropic(d, 1 / (d + 1) + eps)
            assert res.distance == pytest.approx(0.0, abs=1e-8)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            qb.hs_measure_isotropic(3, 0.25)
        with pytest.raises(ValueError):
            qb.hs_measure_isotropic(3, 1.5)

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_bnt_identities(self, d):
        alpha = 0.9
        res = qb.hs_measure_isotropic(d, alpha)
        rho_ent = qb.isotropic_state(d, alpha)
        # distance against the matrix-norm oracle
        direct = qb.hs_norm(res.nearest_separable.matrix - rho_ent.matrix)
        assert res.distance == pytest.approx(direct, abs=1e-10)
        assert res.max_violation == pytest.approx(res.distance, abs=1e-10)
        a_opt = res.witness.operator
        assert qb.hs_inner(rho_ent.matrix, a_opt).real == pytest.approx(-res.distance, abs=1e-10)
        assert abs(qb.hs_inner(res.nearest_separable.matrix, a_opt).real) <= 1e-10

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_witness_basis_equivalent_forms(self, d):
        res = qb.hs_measure_isotropic(d, 0.8)
        shift = np.sqrt((d - 1) / (d + 1)) / d * np.eye(d * d)
        lam_form = shift - qb.composite_operator("lambda", d) / (2 * np.sqrt(d * d - 1))
        t_form = shift - qb.composite_operator("t", d) / np.sqrt(d * d - 1)
        u_form = shift - qb.composite_operator("u", d) / (d * np.sqrt(d * d - 1))
        for form in (lam_form, t_form, u_form):
            assert np.abs(res.witness.operator - form).max() <= 1e-10


class TestQubitPlane:
    def test_classification_points(self):
        assert qb.classify_qubit_plane(1.0, 0.0) is RegionLabel.ENTANGLED_I
        assert qb.classify_qubit_plane(0.0, 0.0) is RegionLabel.SEPARABLE
        assert qb.classify_qubit_plane(-0.7, -1.5) is RegionLabel.ENTANGLED_II
        # fails positivity (alpha < beta/3 - 1/3), PPT constraints notwithstanding
        assert qb.classify_qubit_plane(-0.9, 0.0) is RegionLabel.UNPHYSICAL
        assert qb.classify_qubit_plane(2.0, 0.0) is RegionLabel.UNPHYSICAL

    def test_boundary_assigned_separable(self):
        beta = 0.2
        assert qb.classify_qubit_plane(beta / 3 + 1 / 3, beta) is RegionLabel.SEPARABLE

    def test_measure_at_bell_point(self):
        label, res = qb.hs_measure_qubit_plane(1.0, 0.0)
        assert label is RegionLabel.ENTANGLED_I
        assert res.distance == pytest.approx(1 / np.sqrt(3), abs=1e-12)
        iso = qb.hs_measure_isotropic(2, 1.0)
        assert res.distance == pytest.approx(iso.distance, abs=1e-14)

    def test_separable_point_has_no_measure(self):
        label, res = qb.hs_measure_qubit_plane(0.0, 0.0)
        assert label is RegionLabel.SEPARABLE and res is None

    @pytest.mark.parametrize("alpha,beta", QUBIT_REGION_I)
    def test_region_i_closed_form(self, alpha, beta):
        label, res = qb.hs_measure_qubit_plane(alpha, beta)
        assert label is RegionLabel.ENTANGLED_I
        assert res.distance == pytest.approx(qubit_region_i_distance(alpha, beta), abs=1e-12)
        direct = qb.hs_norm(res.nearest_separable.matrix - qb.two_param_qubit(alpha, beta).matrix)
        assert res.distance == pytest.approx(direct, abs=1e-12)
        assert res.witness.verdict is WitnessVerdict.WITNESS

    @pytest.mark.parametrize("alpha,beta", QUBIT_REGION_II)
    def test_region_ii_closed_form(self, alpha, beta):
        label, res = qb.hs_measure_qubit_plane(alpha, beta)
        assert label is RegionLabel.ENTANGLED_II
        assert res.distance == pytest.approx(qubit_region_ii_distance(alpha, beta), abs=1e-12)
        direct = qb.hs_norm(res.nearest_separable.matrix - qb.two_param_qubit(alpha, beta).matrix)
        assert res.distance == pytest.approx(direct, abs=1e-12)
        assert res.witness.verdict is WitnessVerdict.WITNESS
        assert abs(qb.hs_inner(res.nearest_separable.matrix, res.witness.operator).real) < 1e-12

    def test_region_consistency_with_ppt(self):
        for alpha in np.linspace(-1.1, 1.1, 23):
            for beta in np.linspace(-2.1, 1.1, 33):
                label = qb.classify_qubit_plane(alpha, beta)
                if label is RegionLabel.UNPHYSICAL:
                    continue
                is_ppt, _ = qb.ppt_verdict(qb.two_param_qubit(alpha, beta, checked=False))
                if label is RegionLabel.SEPARABLE:
                    assert is_ppt, (alpha, beta)
                else:
                    assert not is_ppt, (alpha, beta, label)


class TestQutritPlane:
    def test_classification_points(self):
        assert qb.classify_qutrit_plane(1.0, 0.0) is RegionLabel.ENTANGLED_I
        assert qb.classify_qutrit_plane(0.0, 0.0) is RegionLabel.SEPARABLE
        assert qb.classify_qutrit_plane(0.1, 0.7) is RegionLabel.ENTANGLED_II
        # alpha < beta/8 - 1/8: fails positivity outright
        assert qb.classify_qutrit_plane(-0.4, 0.9) is RegionLabel.UNPHYSICAL

    def test_measure_at_bell_point(self):
        label, res = qb.hs_measure_qutrit_plane(1.0, 0.0)
        assert label is RegionLabel.ENTANGLED_I
        assert res.distance == pytest.approx(np.sqrt(2) / 2, abs=1e-12)

    @pytest.mark.parametrize("alpha,beta", QUTRIT_REGION_I)
    def test_region_i_closed_form(self, alpha, beta):
        label, res = qb.hs_measure_qutrit_plane(alpha, beta)
        assert label is RegionLabel.ENTANGLED_I
        assert res.distance == pytest.approx(qutrit_region_i_distance(alpha, beta), abs=1e-12)
        direct = qb.hs_norm(res.nearest_separable.matrix - qb.two_param_qutrit(alpha, beta).matrix)
        assert res.distance == pytest.approx(direct, abs=1e-12)
        assert res.witness.verdict is WitnessVerdict.WITNESS

    @pytest.mark.parametrize("alpha,beta", QUTRIT_REGION_II)
    def test_region_ii_closed_form(self, alpha, beta):
        label, res = qb.hs_measure_qutrit_plane(alpha, beta)
        assert label is RegionLabel.ENTANGLED_II
        assert res.distance == pytest.approx(qutrit_region_ii_distance(alpha, beta), abs=1e-12)
        direct = qb.hs_norm(res.nearest_separable.matrix - qb.two_param_qutrit(alpha, beta).matrix)
        assert res.distance == pytest.approx(direct, abs=1e-12)
        assert res.witness.verdict is WitnessVerdict.WITNESS
        assert abs(qb.hs_inner(res.nearest_separable.matrix, res.witness.operator).real) < 1e-12

    def test_nearest_separable_is_ppt(self):
        for alpha, beta in QUTRIT_REGION_I + QUTRIT_REGION_II:
            _, res = qb.hs_measure_qutrit_plane(alpha, beta)
            is_ppt, _ = qb.ppt_verdict(res.nearest_separable)
            assert is_ppt

    def test_region_consistency_with_ppt(self):
        for alpha in np.linspace(-0.3, 1.05, 19):
            for beta in np.linspace(-0.5, 1.05, 23):
                label = qb.classify_qutrit_plane(alpha, beta)
                if label is RegionLabel.UNPHYSICAL:
                    continue
                is_ppt, _ = qb.ppt_verdict(qb.two_param_qutrit(alpha, beta, checked=False))
                if label is RegionLabel.SEPARABLE:
                    assert is_ppt, (alpha, beta)
                else:
                    assert not is_ppt, (alpha, beta, label)


class TestSeparableExpectationLemmas:
    def test_lemma_qubit_monte_carlo_small(self, rng):
        sigma_ops = [qb.tensor(qb.PAULI[i], qb.PAULI[i]) for i in (1, 2, 3)]
        worst = np.inf
        for seed in range(1000):
            rho = qb.sample_separable(2, seed=seed, mixture_count=1 + seed % 6)
            t = [qb.hs_inner(op, rho.matrix).real for op in sigma_ops]
            for _ in range(10):
                a = rng.uniform(0.05, 2.0)
                c1, c2 = rng.uniform(-1, 1, size=2)
                worst = min(worst, a * (1 + c1 * (t[0] - t[1]) + c2 * t[2]))
        assert worst >= -1e-12

    def test_lemma_qutrit_monte_carlo_small(self, rng):
        u1 = qb.composite_operator("u1", 3)
        u2 = qb.composite_operator("u2", 3)
        worst = np.inf
        for seed in range(1000):
            rho = qb.sample_separable(3, seed=seed, mixture_count=1 + seed % 6)
            t1 = qb.hs_inner(u1, rho.matrix).real
            t2 = qb.hs_inner(u2, rho.matrix).real
            for _ in range(10):
                a = rng.uniform(0.05, 2.0)
                c1, c2 = rng.uniform(-1, 1, size=2)
                worst = min(worst, a * (2 + c1 * t1 + c2 * t2))
        assert worst >= -1e-12
