"""Tests for the deterministic instance generators."""

import numpy as np
import pytest

from opineq import linalg, sampling
from opineq.errors import InvalidSpec


def _cfg(dim=4, seed=0, lo=0.5, hi=2.0):
    return sampling.SamplerConfig(dim=dim, seed=seed, spectrum_lo=lo,
                                  spectrum_hi=hi)


# ----------------------------------------------------------------------
# configuration contract
# ----------------------------------------------------------------------

def test_config_accepts_full_dim_range():
    assert sampling.SamplerConfig(dim=1).dim == 1
    assert sampling.SamplerConfig(dim=sampling.MAX_DIM).dim == sampling.MAX_DIM


def test_config_rejects_bad_dims():
    with pytest.raises(InvalidSpec):
        sampling.SamplerConfig(dim=0)
    with pytest.raises(InvalidSpec):
        sampling.SamplerConfig(dim=sampling.MAX_DIM + 1)


def test_config_rejects_bad_window():
    with pytest.raises(InvalidSpec):
        sampling.SamplerConfig(dim=2, spectrum_lo=2.0, spectrum_hi=1.0)
    with pytest.raises(InvalidSpec):
        sampling.SamplerConfig(dim=2, spectrum_lo=0.0)


def test_config_rejects_bad_trials():
    with pytest.raises(InvalidSpec):
        sampling.SamplerConfig(dim=2, trials=0)
    assert sampling.SamplerConfig(dim=2, trials=500).trials == 500


# ----------------------------------------------------------------------
# determinism
# ----------------------------------------------------------------------

def test_rng_for_is_reproducible():
    a = sampling.rng_for(42, 7).uniform(size=8)
    b = sampling.rng_for(42, 7).uniform(size=8)
    assert np.array_equal(a, b)


def test_rng_for_streams_are_distinct():
    a = sampling.rng_for(42, 7).uniform(size=8)
    b = sampling.rng_for(42, 8).uniform(size=8)
    c = sampling.rng_for(43, 7).uniform(size=8)
    assert not np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_generators_replay_per_trial():
    cfg = _cfg()
    assert np.array_equal(sampling.random_spd(cfg, 5), sampling.random_spd(cfg, 5))
    assert not np.array_equal(sampling.random_spd(cfg, 5), sampling.random_spd(cfg, 6))
    a1, b1 = sampling.random_sandwich_pair(cfg, 2.0, trial=3)
    a2, b2 = sampling.random_sandwich_pair(cfg, 2.0, trial=3)
    assert np.array_equal(a1, a2) and np.array_equal(b1, b2)


# ----------------------------------------------------------------------
# constraint satisfaction
# ----------------------------------------------------------------------

def test_random_spd_spectrum_in_window():
    cfg = _cfg(dim=6, lo=0.3, hi=4.0)
    for trial in range(16):
        m = sampling.random_spd(cfg, trial)
        assert np.array_equal(m, m.T)
        lam = linalg.eigvals_sym(m)
        assert lam[0] >= 0.3 - 1e-10
        assert lam[-1] <= 4.0 + 1e-10


def test_random_orthogonal_is_orthogonal():
    q = sampling.random_orthogonal(5, sampling.rng_for(1, 2))
    assert np.max(np.abs(q.T @ q - np.eye(5))) < 1e-12


def test_spd_from_spectrum_keeps_eigenvalues():
    spectrum = [0.2, 1.0, 3.5]
    m = sampling.spd_from_spectrum(spectrum, sampling.rng_for(9, 0))
    assert np.allclose(linalg.eigvals_sym(m), sorted(spectrum), atol=1e-10)


def test_random_sandwich_pair_satisfies_window():
    cfg = _cfg(dim=5)
    for trial in range(16):
        a, b = sampling.random_sandwich_pair(cfg, M_target=3.0, trial=trial)
        _, inv_half = linalg.sqrt_factors(a)
        lam = linalg.eigvals_sym(linalg.symmetrize(inv_half @ b @ inv_half))
        assert lam[0] >= 1.0 - 1e-12
        assert lam[-1] <= 3.0 + 1e-9


def test_random_norm_dominated_pair_dominates():
    cfg = _cfg(dim=4)
    for trial in range(16):
        a, b = sampling.random_norm_dominated_pair(cfg, trial, gap=0.25)
        floor = linalg.norm_op(a) * np.eye(4)
        lam = linalg.eigvals_sym(b - floor)
        assert lam[0] >= 0.25 - 1e-12
        lam_diff = linalg.eigvals_sym(b - a)
        assert lam_diff[0] >= 0.25 - 1e-12


def test_random_norm_dominated_pair_rejects_negative_gap():
    with pytest.raises(InvalidSpec):
        sampling.random_norm_dominated_pair(_cfg(), 0, gap=-0.1)


def test_random_sandwich_pair_rejects_small_target():
    with pytest.raises(InvalidSpec):
        sampling.random_sandwich_pair(_cfg(), M_target=0.9)


def test_random_density_unit_trace():
    for trial in range(8):
        rho = sampling.random_density(_cfg(dim=3), trial)
        assert abs(float(np.trace(rho)) - 1.0) < 1e-12
        assert linalg.eigvals_sym(rho)[0] > 0.0


def test_random_unit_vector_normalized():
    for trial in range(8):
        v = sampling.random_unit_vector(_cfg(dim=6), trial)
        assert abs(float(np.linalg.norm(v)) - 1.0) < 1e-12


def test_random_isometry_columns_orthonormal():
    v = sampling.random_isometry(_cfg(dim=6), k=3, trial=2)
    assert v.shape == (6, 3)
    assert np.max(np.abs(v.T @ v - np.eye(3))) < 1e-12


def test_random_isometry_rejects_bad_width():
    with pytest.raises(InvalidSpec):
        sampling.random_isometry(_cfg(dim=3), k=4)
    with pytest.raises(InvalidSpec):
        sampling.random_isometry(_cfg(dim=3), k=0)


def test_random_square_is_generally_nonsymmetric():
    m = sampling.random_square(_cfg(dim=4), 0)
    assert m.shape == (4, 4)
    assert not np.array_equal(m, m.T)
