import numpy as np
import pytest

from eigenlink.graph import snapshots_by_time
from eigenlink.spectral import decompose
from eigenlink.synthetic import (
    SpectralScenario,
    TrajectorySpec,
    dense_sequence,
    eigenvalue_paths,
    generate_spectral_network,
    random_orthogonal_basis,
)


def scenario(**overrides):
    base = dict(
        n=30,
        steps=6,
        basis_seed=9,
        trajectory=TrajectorySpec(kind="linear", growth=0.2, jitter=0.5),
        density=0.08,
    )
    base.update(overrides)
    return SpectralScenario(**base)


class TestBasis:
    def test_orthonormal_and_deterministic(self):
        q1 = random_orthogonal_basis(20, 4)
        q2 = random_orthogonal_basis(20, 4)
        assert np.array_equal(q1, q2)
        assert np.allclose(q1.T @ q1, np.eye(20), atol=1e-10)

    def test_seed_changes_basis(self):
        assert not np.allclose(random_orthogonal_basis(10, 1), random_orthogonal_basis(10, 2))


class TestEigenvaluePaths:
    def test_constant(self):
        sc = scenario(trajectory=TrajectorySpec(kind="constant"))
        lams = eigenvalue_paths(sc)
        assert np.allclose(lams, lams[0][None, :])

    def test_linear_is_linear_per_dimension(self):
        sc = scenario()
        lams = eigenvalue_paths(sc)
        diffs = np.diff(lams, axis=0)
        assert np.allclose(diffs, diffs[0][None, :], atol=1e-12)

    def test_quadratic_has_constant_second_difference(self):
        sc = scenario(trajectory=TrajectorySpec(kind="quadratic", growth=0.05))
        lams = eigenvalue_paths(sc)
        second = np.diff(lams, n=2, axis=0)
        assert np.allclose(second, second[0][None, :], atol=1e-12)

    def test_irregular_deterministic(self):
        sc = scenario(trajectory=TrajectorySpec(kind="irregular", growth=0.1, noise=0.05))
        assert np.array_equal(eigenvalue_paths(sc), eigenvalue_paths(sc))


class TestDenseSequence:
    def test_decompose_recovers_spectrum(self):
        sc = scenario()
        seq = dense_sequence(sc)
        d = decompose(seq.matrices[sc.steps - 1])
        truth = seq.lambdas[sc.steps - 1]
        assert np.allclose(
            np.sort(np.abs(d.values))[::-1], np.sort(np.abs(truth))[::-1], atol=1e-8
        )
        # leading dimensions recover the basis up to sign
        order = np.argsort(-np.abs(truth))
        for rank in range(3):
            dot = abs(d.eigenvector(rank) @ seq.basis[:, order[rank]])
            assert dot == pytest.approx(1.0, abs=1e-8)

    def test_rotation_switches_basis(self):
        sc = scenario(rotate_basis_at=3)
        seq = dense_sequence(sc)
        d_before = decompose(seq.matrices[0])
        d_after = decompose(seq.matrices[4])
        dot = abs(d_before.eigenvector(0) @ d_after.eigenvector(0))
        assert dot < 0.9


class TestGenerateSpectralNetwork:
    def test_deterministic(self):
        g1 = generate_spectral_network(scenario()).graph
        g2 = generate_spectral_network(scenario()).graph
        assert g1 == g2

    def test_constant_trajectories_give_single_timestamp(self):
        sc = scenario(trajectory=TrajectorySpec(kind="constant"))
        net = generate_spectral_network(sc)
        times = {e.time for e in net.graph.edges}
        assert times == {1}
        for m in net.truth.snapshots.matrices:
            assert np.array_equal(m, net.truth.snapshots.final)

    def test_edge_counts_nondecreasing(self):
        net = generate_spectral_network(scenario())
        counts = [int(np.sum(m)) for m in net.truth.snapshots.matrices]
        assert counts == sorted(counts)

    def test_resnapshot_reproduces_generator_snapshots(self):
        sc = scenario()
        net = generate_spectral_network(sc)
        rebuilt = snapshots_by_time(net.graph, list(range(1, sc.steps + 1)))
        for ours, theirs in zip(rebuilt.matrices, net.truth.snapshots.matrices):
            assert np.array_equal(ours, theirs)

    def test_next_adjacency_contains_final_snapshot(self):
        net = generate_spectral_network(scenario())
        assert np.all(net.truth.snapshots.final <= net.truth.next_adjacency)

    def test_density_honored_at_final_step(self):
        sc = scenario()
        net = generate_spectral_network(sc)
        final_count = int(np.sum(net.truth.snapshots.final) // 2)
        assert sc.edge_target <= final_count <= sc.edge_target + net.truth.repaired_edge_count
        first_count = int(np.sum(net.truth.snapshots.matrices[0]) // 2)
        assert first_count < final_count

    def test_too_irregular_rejected(self):
        sc = scenario(
            trajectory=TrajectorySpec(kind="irregular", growth=0.0, noise=2.0, drift_bias=0.0)
        )
        with pytest.raises(ValueError, match="irregular"):
            generate_spectral_network(sc)

    def test_scenario_validation(self):
        with pytest.raises(ValueError):
            scenario(n=3)
        with pytest.raises(ValueError):
            scenario(steps=2)
        with pytest.raises(ValueError):
            scenario(density=0.0)
        with pytest.raises(ValueError):
            TrajectorySpec(kind="wavy")
