import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)


def chebyshev1_weight(x):
    return 1.0 / np.sqrt(np.clip(1.0 - np.asarray(x) ** 2, 1e-300, None))


def brute_force_lebesgue(nodes, z):
    """Direct-summation oracle for sum_j |l_j(z)|: explicit products, no
    shared code with the library's log-space path."""
    nodes = np.asarray(nodes)
    total = 0.0
    for j in range(len(nodes)):
        wprime = np.prod(nodes[j] - np.delete(nodes, j)) if len(nodes) > 1 else 1.0
        w = np.prod(z - nodes)
        total += abs(w / (wprime * (z - nodes[j])))
    return total


def brute_force_condition_ii(nodes, z):
    """Direct oracle for (|W(z)|^2/n^2) * sum_j 1/|z-z_j|^2."""
    nodes = np.asarray(nodes)
    n = len(nodes)
    w2 = abs(np.prod(z - nodes)) ** 2
    return w2 / n**2 * np.sum(1.0 / np.abs(z - nodes) ** 2)


def real_barycentric(xs, fxs):
    """Classical real barycentric Lagrange interpolation (second form), used
    as an independent oracle for the circle-lift interval interpolant."""
    xs = np.asarray(xs, dtype=float)
    fxs = np.asarray(fxs, dtype=float)
    w = np.ones(len(xs))
    for j in range(len(xs)):
        w[j] = 1.0 / np.prod(xs[j] - np.delete(xs, j))

    def p(x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.empty(len(x))
        for i, xi in enumerate(x):
            d = xi - xs
            hit = np.argmin(np.abs(d))
            if abs(d[hit]) < 1e-14:
                out[i] = fxs[hit]
            else:
                c = w / d
                out[i] = np.sum(c * fxs) / np.sum(c)
        return out

    return p
