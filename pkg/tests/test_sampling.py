import numpy as np
import pytest

from einselect_lab.hilbert import StateVector, TensorSpace
from einselect_lab.sampling import (
    GUE_DENSE_CAP,
    SeedSpec,
    evolve_dense,
    model_seed,
    sample_gue_hamiltonian,
    sample_pure_state,
)

MASTER = 424242


class TestSamplePureState:
    def test_normalized(self):
        for k in range(10):
            psi = sample_pure_state(8, SeedSpec(MASTER, k))
            assert abs(np.linalg.norm(psi.amplitudes) - 1.0) < 1e-12

    def test_deterministic(self):
        a = sample_pure_state(16, SeedSpec(MASTER, 5))
        b = sample_pure_state(16, SeedSpec(MASTER, 5))
        assert np.array_equal(a.amplitudes, b.amplitudes)

    def test_distinct_samples_differ(self):
        a = sample_pure_state(16, SeedSpec(MASTER, 0))
        b = sample_pure_state(16, SeedSpec(MASTER, 1))
        assert not np.allclose(a.amplitudes, b.amplitudes)

    def test_first_moment_of_fixed_component(self):
        # Haar: E |<e_0|psi>|^2 = 1/dim.  Monte Carlo mean vs the analytic
        # value at 3 standard errors.
        dim, k_samples = 16, 100_000
        vals = np.empty(k_samples)
        for k in range(k_samples):
            psi = sample_pure_state(dim, SeedSpec(MASTER, k))
            vals[k] = abs(psi.amplitudes[0]) ** 2
        se = vals.std(ddof=1) / np.sqrt(k_samples)
        assert abs(vals.mean() - 1.0 / dim) < 3.0 * se

    def test_unitary_invariance_of_sampling(self):
        # The Monte Carlo mean of a bounded observable is unchanged when
        # every sample is rotated by a fixed unitary.
        dim, k_samples = 8, 10_000
        h = sample_gue_hamiltonian(dim, SeedSpec(MASTER, 999))
        v = np.linalg.eigh(h)[1]  # a fixed unitary
        proj = np.zeros((dim, dim))
        proj[0, 0] = 1.0
        raw = np.empty(k_samples)
        rotated = np.empty(k_samples)
        for k in range(k_samples):
            amps = sample_pure_state(dim, SeedSpec(MASTER, k)).amplitudes
            raw[k] = np.real(amps.conj() @ proj @ amps)
            r = v @ amps
            rotated[k] = np.real(r.conj() @ proj @ r)
        combined_se = np.sqrt(
            raw.var(ddof=1) / k_samples + rotated.var(ddof=1) / k_samples
        )
        assert abs(raw.mean() - rotated.mean()) < 3.0 * combined_se

    def test_custom_space(self):
        space = TensorSpace((2, 4))
        psi = sample_pure_state(8, SeedSpec(MASTER, 0), space=space)
        assert psi.space is space

    def test_rejects_dim_one(self):
        with pytest.raises(ValueError):
            sample_pure_state(1, SeedSpec(MASTER, 0))


class TestSeedSpec:
    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            SeedSpec(-1, 0)
        with pytest.raises(ValueError):
            SeedSpec(0, 2**64)

    def test_substreams_are_independent(self):
        spec = SeedSpec(MASTER, 3)
        a = spec.generator(0).standard_normal(8)
        b = spec.generator(1).standard_normal(8)
        assert not np.allclose(a, b)

    def test_model_seed_disjoint_from_samples(self):
        a = model_seed(MASTER).generator(0).standard_normal(4)
        b = SeedSpec(MASTER, 0).generator(0).standard_normal(4)
        assert not np.allclose(a, b)


class TestGueHamiltonian:
    def test_hermitian(self):
        h = sample_gue_hamiltonian(32, SeedSpec(MASTER, 0))
        assert np.max(np.abs(h - h.conj().T)) < 1e-14

    def test_deterministic(self):
        a = sample_gue_hamiltonian(16, SeedSpec(MASTER, 2))
        b = sample_gue_hamiltonian(16, SeedSpec(MASTER, 2))
        assert np.array_equal(a, b)

    def test_mean_trace_is_zero(self):
        dim, k_samples = 64, 200
        vals = np.array([
            np.real(np.trace(sample_gue_hamiltonian(dim, SeedSpec(MASTER, k)))) / dim
            for k in range(k_samples)
        ])
        se = vals.std(ddof=1) / np.sqrt(k_samples)
        assert abs(vals.mean()) < 3.0 * se

    def test_cap(self):
        with pytest.raises(ValueError, match="cap"):
            sample_gue_hamiltonian(GUE_DENSE_CAP + 1, SeedSpec(MASTER, 0))


class TestEvolveDense:
    def test_time_zero_is_identity(self):
        psi = sample_pure_state(8, SeedSpec(MASTER, 0))
        h = sample_gue_hamiltonian(8, SeedSpec(MASTER, 0))
        out = evolve_dense(psi, h, 0.0)
        np.testing.assert_allclose(out.amplitudes, psi.amplitudes, atol=1e-12)

    def test_forward_backward_recovers_state(self):
        psi = sample_pure_state(16, SeedSpec(MASTER, 1))
        h = sample_gue_hamiltonian(16, SeedSpec(MASTER, 1))
        roundtrip = evolve_dense(evolve_dense(psi, h, 1.7), h, -1.7)
        np.testing.assert_allclose(roundtrip.amplitudes, psi.amplitudes, atol=1e-10)

    def test_larmor_precession(self):
        # H = diag(1/2, -1/2) on (|0>+|1>)/sqrt(2): <sigma_x>(t) = cos t.
        h = np.diag([0.5, -0.5]).astype(complex)
        plus = StateVector(TensorSpace((2,)), np.array([1.0, 1.0]) / np.sqrt(2.0))
        sx = np.array([[0.0, 1.0], [1.0, 0.0]])
        for t in (0.0, 0.5, np.pi / 2.0, np.pi):
            amps = evolve_dense(plus, h, t).amplitudes
            got = np.real(amps.conj() @ sx @ amps)
            assert abs(got - np.cos(t)) < 1e-12

    def test_norm_and_energy_conserved_on_grid(self):
        psi = sample_pure_state(12, SeedSpec(MASTER, 4))
        h = sample_gue_hamiltonian(12, SeedSpec(MASTER, 4))
        e0 = np.real(psi.amplitudes.conj() @ h @ psi.amplitudes)
        for t in np.linspace(0.0, 10.0, 13):
            evolved = evolve_dense(psi, h, t)
            assert abs(np.linalg.norm(evolved.amplitudes) - 1.0) < 1e-10
            e_t = np.real(evolved.amplitudes.conj() @ h @ evolved.amplitudes)
            assert abs(e_t - e0) < 1e-10

    def test_dimension_mismatch(self):
        psi = sample_pure_state(8, SeedSpec(MASTER, 0))
        with pytest.raises(ValueError):
            evolve_dense(psi, np.eye(4), 1.0)


def test_partitioning_does_not_change_samples():
    # Chunked and sequential draws produce bit-identical ensembles.
    dims = 8
    sequential = [sample_pure_state(dims, SeedSpec(MASTER, k)).amplitudes for k in range(20)]
    chunks = [range(0, 7), range(7, 13), range(13, 20)]
    chunked = []
    for chunk in chunks:
        chunked.extend(sample_pure_state(dims, SeedSpec(MASTER, k)).amplitudes for k in chunk)
    for a, b in zip(sequential, chunked):
        assert np.array_equal(a, b)
