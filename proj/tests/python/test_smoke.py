"""End-to-end checks of the python bindings against pinned values."""

import numpy as np
import pytest

import meanx

PINNED = np.array([[1, 1], [-1, -2]], dtype=complex)
SWAP = np.array([[0, 1], [1, 0]], dtype=complex)


def test_polar_pinned():
    parts = meanx.polar(PINNED)
    assert np.allclose(parts["partial_isometry"], np.diag([1, -1]), atol=1e-10)
    assert np.allclose(parts["modulus"], [[1, 1], [1, 2]], atol=1e-10)
    assert parts["rank"] == 2
    assert parts["cutoff"] > 0


def test_transforms_pinned():
    assert np.allclose(meanx.mean_transform(PINNED), np.diag([1, -2]),
                       atol=1e-10)
    assert np.allclose(meanx.duggal_transform(PINNED), [[1, -1], [1, -2]],
                       atol=1e-10)
    half_swap = np.array([[0, 1.5], [0.5, 0]], dtype=complex)
    assert np.allclose(meanx.mean_transform(half_swap), SWAP, atol=1e-10)
    root3 = np.sqrt(3) / 2
    assert np.allclose(meanx.aluthge_transform(half_swap),
                       [[0, root3], [root3, 0]], atol=1e-10)


def test_normal_matrices_are_fixed_points():
    t = np.diag([1 + 1j, -2j]).astype(complex)
    assert np.allclose(meanx.mean_transform(t), t, atol=1e-9)
    assert np.allclose(meanx.duggal_transform(t), t, atol=1e-9)
    assert np.allclose(meanx.aluthge_transform(t), t, atol=1e-9)


def test_mean_polar_parts_factor_the_mean():
    v, q = meanx.mean_polar_parts(PINNED)
    assert np.allclose(v @ q, meanx.mean_transform(PINNED), atol=1e-9)
    assert np.allclose(q, np.diag([1, 2]), atol=1e-9)


def test_kernel_relation_names():
    assert meanx.kernel_relation(PINNED) == "equal"
    nil = np.array([[0, 1], [0, 0]], dtype=complex)
    assert meanx.kernel_relation(nil) == "none"


def test_classify_flags():
    flags = meanx.classify(np.eye(2, dtype=complex))
    assert flags["normal"]["holds"]
    assert flags["positive"]["holds"]
    assert flags["unitary"]["holds"]
    assert not flags["square_zero"]["holds"]
    assert flags["log_hyponormal"]["holds"]
    # Not evaluable on singular input: reported as None instead of a verdict.
    singular = np.diag([1.0, 0.0]).astype(complex)
    assert meanx.classify(singular)["log_hyponormal"] is None


def test_eigenvalues_sorted_lexicographically():
    t = np.diag([3.0, -1.0, 2.0]).astype(complex)
    evs = meanx.eigenvalues(t)
    assert evs == sorted(evs, key=lambda z: (z.real, z.imag))
    assert evs[0] == pytest.approx(-1.0)


def test_joint_spectrum_and_inclusion():
    t = np.diag([1.0, 2.0]).astype(complex)
    pts = meanx.joint_point_spectrum(t)
    assert len(pts) == 2
    for p in pts:
        assert np.linalg.norm(p["witness"]) == pytest.approx(1.0)
        assert p["residual_t"] <= 1e-10
    assert meanx.aj_inclusion_holds(t)
    nil = np.array([[0, 1], [0, 0]], dtype=complex)
    assert meanx.joint_point_spectrum(nil) == []
    assert meanx.aj_inclusion_holds(nil)  # vacuously


def test_generate_is_deterministic():
    a = meanx.generate("GINIBRE", 4, 11)
    assert np.array_equal(a, meanx.generate("GINIBRE", 4, 11))
    assert not np.array_equal(a, meanx.generate("GINIBRE", 4, 12))
    assert meanx.generate("SINGULAR", 5, 3, rank=2).shape == (5, 5)
    with pytest.raises(RuntimeError):
        meanx.generate("bogus", 2, 0)


def test_generator_kinds():
    kinds = meanx.generator_kinds()
    assert "GINIBRE" in kinds
    assert "SHIFT_LIKE" in kinds
    assert len(set(kinds)) == 10


def test_solve_rank_one_round_trip():
    x = np.array([1, 1j, 0], dtype=complex)
    y = np.array([0.5, 0, -2], dtype=complex)
    sol = meanx.solve_rank_one(x, y)
    assert sol["kind"] == "unique"
    assert np.allclose(sol["mean_of_solution"], np.outer(x, y.conj()),
                       atol=1e-9)


def test_solve_rank_two_family():
    fam = meanx.solve_rank_two_normal(2, -1)
    assert fam["kind"] == "family"
    assert fam["admissible_radius_sq"] == pytest.approx(2.0)
    member = meanx.solve_rank_two_normal(2, -1, beta=1.0)
    assert np.allclose(member["solution"], [[2, 1], [-1, -1]], atol=1e-9)
    assert np.allclose(member["mean_of_solution"], np.diag([2, -1]), atol=1e-9)


def test_solve_structured_targets():
    nil = np.array([[0, 3], [0, 0]], dtype=complex)
    assert np.allclose(meanx.solve_square_zero(nil)["solution"], 2 * nil)
    pos = np.array([[2, 1], [1, 2]], dtype=complex)
    fixed = meanx.solve_positive(pos)
    assert fixed["kind"] == "fixed_point"
    assert np.allclose(fixed["solution"], pos)
    with pytest.raises(RuntimeError):
        meanx.solve_positive(np.diag([1.0, -1.0]).astype(complex))
    with pytest.raises(RuntimeError):
        meanx.solve_square_zero(np.eye(2, dtype=complex))


def test_run_trials_accounting():
    r = meanx.run_trials("T4_4_POSITIVE", dims=[2, 3], trials=6, seed=3)
    assert r["theorem"] == "T4_4_POSITIVE"
    assert r["trials"] == r["passes"] + r["failures"] + r["skipped"]
    assert r["failures"] == 0
    assert r["vacuous_kinds"] == []
    assert r["counterexamples"] == []
    again = meanx.run_trials("T4_4_POSITIVE", dims=[2, 3], trials=6, seed=3)
    assert again == r


def test_theorem_catalog():
    names = meanx.theorems()
    assert len(names) == 15
    assert "P2_1_KERNELS" in names
    assert "X4_UNITARY_COUNTEREX" in names
