"""Unimodular nodal systems and numerical condition diagnostics.

A nodal system is a set of distinct points on the unit circle together with
the derivative of the nodal polynomial W_n(z) = prod_j (z - z_j) at each
node.  The condition estimators measure, on a circle grid,

  (i)  a lower bound B_hat for |W_n'(z)| / n,
  (ii) an upper bound L_hat for (|W_n(z)|^2 / n^2) * sum_j 1/|z - z_j|^2,

which together bound the Lebesgue function by (sqrt(L_hat)/B_hat) sqrt(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegeneracyError, ValidationError
from .laurent import DegreePlan

__all__ = [
    "NodalSystem",
    "NodalConditionReport",
    "make_nodal_system",
    "roots_of_unimodular",
    "eval_nodal_poly",
    "scaled_to_complex",
    "estimate_conditions",
    "lebesgue_function",
    "default_grid_size",
]

UNIMODULAR_TOL = 1e-12
DISTINCT_TOL = 1e-10  # chordal; below this barycentric weights lose all digits
NEAR_NODE_TOL = 1e-8  # switch to the removable-singularity limit in (ii)


@dataclass(frozen=True)
class NodalSystem:
    """Distinct unimodular nodes z_j with cached derivatives W_n'(z_j)."""

    nodes: np.ndarray = field(repr=False)
    derivs: np.ndarray = field(repr=False)
    source: str = "user-supplied"

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def thetas(self) -> np.ndarray:
        """Node arguments in [0, 2*pi)."""
        return np.mod(np.angle(self.nodes), 2.0 * np.pi)


@dataclass(frozen=True)
class NodalConditionReport:
    n: int
    b_hat: float          # min over the full grid of |W'(z)|/n
    b_hat_nodes: float    # min over the nodes only (the reading used in the proof)
    l_hat: float          # max over the grid of the condition (ii) quantity
    lebesgue_max: float   # max over the grid of sum_j |l_j(z)|
    grid_size: int
    reliable: bool        # False when grid_size < n


def _validate_nodes(nodes: np.ndarray) -> None:
    if len(nodes) < 1:
        raise ValidationError("a nodal system needs at least one node")
    off = np.abs(np.abs(nodes) - 1.0)
    if np.max(off) > UNIMODULAR_TOL:
        j = int(np.argmax(off))
        raise ValidationError(
            f"node {j} is not unimodular: ||z|-1| = {off[j]:.3e} > {UNIMODULAR_TOL}"
        )
    if len(nodes) > 1:
        # On the circle the minimal pairwise chordal distance is attained by
        # angular neighbors, so sorting by argument suffices.
        order = np.argsort(np.mod(np.angle(nodes), 2.0 * np.pi))
        z = nodes[order]
        gaps = np.abs(np.diff(np.concatenate([z, z[:1]])))
        if np.min(gaps) <= DISTINCT_TOL:
            raise DegeneracyError(
                f"nodes are closer than {DISTINCT_TOL} (min gap {np.min(gaps):.3e})"
            )


def _derivs_product(nodes: np.ndarray) -> np.ndarray:
    """W_n'(z_j) = prod_{k != j} (z_j - z_k), accumulated in log space to
    dodge intermediate under/overflow for large n."""
    n = len(nodes)
    if n == 1:
        return np.ones(1, dtype=complex)
    diff = nodes[:, None] - nodes[None, :]
    np.fill_diagonal(diff, 1.0)
    logs = np.log(diff)
    np.fill_diagonal(logs, 0.0)
    return np.exp(logs.sum(axis=1))


def make_nodal_system(nodes, source: str = "user-supplied") -> NodalSystem:
    """Validate unimodularity/distinctness and cache W_n'(z_j)."""
    nodes = np.asarray(nodes, dtype=complex)
    _validate_nodes(nodes)
    return NodalSystem(nodes=nodes, derivs=_derivs_product(nodes), source=source)


def roots_of_unimodular(n: int, tau: complex) -> NodalSystem:
    """Nodal system of the n roots of z^n = tau with |tau| = 1.

    W_n(z) = z^n - tau, so the derivatives take the closed form
    W_n'(z_j) = n z_j^{n-1} = n tau / z_j.
    """
    if n < 1:
        raise ValidationError(f"need n >= 1, got {n}")
    tau = complex(tau)
    if abs(abs(tau) - 1.0) > UNIMODULAR_TOL:
        raise ValidationError(f"|tau| must equal 1 within {UNIMODULAR_TOL}, got |tau|={abs(tau)}")
    theta0 = np.angle(tau) / n
    nodes = np.exp(1j * (theta0 + 2.0 * np.pi * np.arange(n) / n))
    derivs = n * tau / nodes
    return NodalSystem(nodes=nodes, derivs=derivs, source="roots-of-unimodular")


def eval_nodal_poly(system: NodalSystem, z: complex) -> tuple[complex, int]:
    """Evaluate W_n(z) = prod_j (z - z_j) as (mantissa, exponent) with the
    value equal to mantissa * 2**exponent.

    The mantissa is renormalized every 64 factors, so |W_n| up to 2^n never
    over- or underflows.
    """
    z = complex(z)
    factors = z - system.nodes
    mant = 1.0 + 0.0j
    expo = 0
    for start in range(0, len(factors), 64):
        block = factors[start:start + 64]
        # 64 factors of magnitude <= |z| + 1 stay well inside double range
        mant *= complex(np.prod(block))
        if mant == 0:
            return 0.0 + 0.0j, 0
        _, e = math.frexp(abs(mant))
        mant = complex(math.ldexp(mant.real, -e), math.ldexp(mant.imag, -e))
        expo += e
    return mant, expo


def scaled_to_complex(mantissa: complex, exponent: int) -> complex:
    """Collapse a (mantissa, exponent) pair to a plain complex value."""
    return complex(math.ldexp(mantissa.real, exponent), math.ldexp(mantissa.imag, exponent))


def default_grid_size(n: int) -> int:
    return max(4096, 16 * n)


def _grid_points(system: NodalSystem, grid_size: int) -> np.ndarray:
    """Uniform angles plus midpoints between adjacent node arguments."""
    thetas = np.sort(system.thetas)
    mids = 0.5 * (thetas + np.roll(thetas, -1))
    mids[-1] = 0.5 * (thetas[-1] + thetas[0] + 2.0 * np.pi)  # wrap-around gap
    uniform = 2.0 * np.pi * np.arange(grid_size) / grid_size
    return np.exp(1j * np.concatenate([uniform, mids]))


def _condition_rows(z_chunk: np.ndarray, system: NodalSystem):
    """Per grid point: log|W|, |W'|, the condition (ii) quantity, and the
    Lebesgue function, with removable singularities patched near nodes."""
    nodes = system.nodes
    n = len(nodes)
    d = z_chunk[:, None] - nodes[None, :]
    absd = np.abs(d)
    near = absd < NEAR_NODE_TOL
    with np.errstate(divide="ignore", invalid="ignore"):
        logd = np.log(absd)
        logw = logd.sum(axis=1)
        # m[g, j] = log(|W(z_g)| / |z_g - z_j|) = log prod_{k != j} |z_g - z_k|
        m = logw[:, None] - logd
        recip = 1.0 / d
    log_abs_derivs = np.log(np.abs(system.derivs))
    if near.any():
        rows, cols = np.nonzero(near)
        m[rows, cols] = log_abs_derivs[cols]
        recip[rows, cols] = 0.0

    # condition (ii): sum_j exp(2 m_j) / n^2 via a log-sum-exp
    mmax = m.max(axis=1)
    with np.errstate(over="ignore"):
        cond2 = np.exp(2.0 * (m - mmax[:, None])).sum(axis=1)
        cond2 = np.exp(2.0 * (mmax - np.log(n))) * cond2

    # |W'(z)| = |W(z)| * |sum_j 1/(z - z_j)| away from nodes
    wprime = np.exp(logw) * np.abs(recip.sum(axis=1))
    if near.any():
        rows, cols = np.nonzero(near)
        wprime[rows] = np.abs(system.derivs)[cols]

    with np.errstate(over="ignore"):
        leb = np.exp(m - log_abs_derivs[None, :]).sum(axis=1)
    return logw, wprime, cond2, leb


def estimate_conditions(system: NodalSystem, grid_size: int | None = None) -> NodalConditionReport:
    """Estimate the sufficiency-condition constants on a circle grid.

    The grid is uniform plus node-argument midpoints.  Near a node the j-th
    summand of condition (ii) is replaced by its limit |W'(z_j)|^2 / n^2.
    """
    n = system.n
    if grid_size is None:
        grid_size = default_grid_size(n)
    if grid_size < 4:
        raise ValidationError(f"grid_size must be >= 4, got {grid_size}")
    z = _grid_points(system, grid_size)
    b_min = np.inf
    l_max = 0.0
    leb_max = 0.0
    for start in range(0, len(z), 2048):
        chunk = z[start:start + 2048]
        _, wprime, cond2, leb = _condition_rows(chunk, system)
        b_min = min(b_min, float(wprime.min()) / n)
        l_max = max(l_max, float(cond2.max()))
        leb_max = max(leb_max, float(leb.max()))
    b_nodes = float(np.min(np.abs(system.derivs))) / n
    return NodalConditionReport(
        n=n,
        b_hat=b_min,
        b_hat_nodes=b_nodes,
        l_hat=l_max,
        lebesgue_max=max(leb_max, 1.0),
        grid_size=grid_size,
        reliable=grid_size >= n,
    )


def lebesgue_function(system: NodalSystem, plan: DegreePlan, z: complex) -> float:
    """sum_j |l_{j,n-1}(z)| for |z| = 1; exactly 1 at a node.

    The z_j^p / z^p factors are unimodular on the circle, so only the
    magnitudes |W(z)| / (|W'(z_j)| |z - z_j|) enter.
    """
    if plan.n != system.n:
        raise ValidationError(f"plan is for n={plan.n} but system has n={system.n}")
    z = complex(z)
    _, _, _, leb = _condition_rows(np.array([z]), system)
    d = np.abs(z - system.nodes)
    if d.min() < 1e-13 * max(system.n, 1):
        return 1.0
    return float(leb[0])
