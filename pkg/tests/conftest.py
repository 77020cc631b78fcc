import numpy as np
import pytest


def random_symmetric(n, rng, kind="gauss"):
    """Random symmetric test matrix; kind 'graph' gives a 0/1 hollow matrix."""
    if kind == "graph":
        a = (rng.random((n, n)) < 0.3).astype(float)
        a = np.triu(a, k=1)
        return a + a.T
    m = rng.standard_normal((n, n))
    return (m + m.T) / 2.0


def exp_series(a, alpha, terms=41):
    """Truncated Taylor series of exp(alpha * A); independent kernel oracle."""
    out = np.eye(a.shape[0])
    power = np.eye(a.shape[0])
    fact = 1.0
    for k in range(1, terms):
        power = power @ a
        fact *= k
        out = out + (alpha**k / fact) * power
    return out


def neumann_series(a, alpha, terms=201):
    """Truncated geometric series of (I - alpha * A)^-1; independent oracle."""
    out = np.eye(a.shape[0])
    power = np.eye(a.shape[0])
    for _ in range(1, terms):
        power = alpha * (power @ a)
        out = out + power
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
