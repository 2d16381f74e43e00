import numpy as np
import pytest

from diffee.models.matrices import Condition, MatrixRole, SampleMatrix, SymMatrix


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_symmetric(rng, p, scale=1.0):
    a = rng.normal(scale=scale, size=(p, p))
    return (a + a.T) / 2.0


def random_spd(rng, p, ridge=0.5):
    a = rng.normal(size=(p, p))
    m = a @ a.T / p
    return (m + m.T) / 2.0 + ridge * np.eye(p)


@pytest.fixture
def make_sym():
    def _make(entries, role=MatrixRole.COVARIANCE):
        return SymMatrix.of(np.asarray(entries, dtype=float), role)
    return _make


@pytest.fixture
def sample_blocks(rng):
    """Two small Gaussian blocks with different covariances"""
    def _make(p=4, n_c=50, n_d=50):
        cov_c = random_spd(rng, p)
        cov_d = random_spd(rng, p)
        x_c = rng.multivariate_normal(np.zeros(p), cov_c, size=n_c)
        x_d = rng.multivariate_normal(np.zeros(p), cov_d, size=n_d)
        return SampleMatrix.of(x_c, Condition.CONTROL), SampleMatrix.of(x_d, Condition.CASE)
    return _make
