"""Orthogonal polynomials on the unit circle and para-orthogonal nodal systems.

Monic orthogonal polynomials are generated from Verblunsky coefficients by
the recurrence

    phi_{k+1}(z) = z phi_k(z) - conj(alpha_k) phi_k*(z),

where phi* is the conjugated coefficient reversal.  This convention is fixed
here once; moment-driven recovery is validated by numeric orthogonality, not
by a sign convention.  Para-orthogonal polynomials omega_n(z, tau) =
phi_n + tau phi_n* (|tau| = 1) have n simple unimodular zeros, which serve
as interpolation nodal systems.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (
    DegeneracyError,
    MeasureValidityError,
    QuadratureError,
    RootFindingError,
    ValidationError,
)
from .nodal import NodalSystem, make_nodal_system

__all__ = [
    "OpucState",
    "MeasureSpec",
    "ParaOrthogonalSpec",
    "lebesgue_measure",
    "finite_verblunsky",
    "quadrature_weight",
    "bernstein_szego",
    "load_measure_spec",
    "szego_recurrence",
    "trigonometric_moments",
    "moments_to_verblunsky",
    "verblunsky_coefficients",
    "paraorthogonal",
    "paraorthogonal_nodes",
]

ALPHA_LIMIT = 1.0 - 1e-8  # beyond this the analytic-extension hypothesis is implausible


@dataclass(frozen=True)
class OpucState:
    """Monic OPUC data through some degree N.

    phis[k] and phi_stars[k] are ascending coefficient vectors of length k+1.
    """

    alphas: np.ndarray = field(repr=False)
    phis: tuple = field(repr=False)
    phi_stars: tuple = field(repr=False)
    phi_at_zero: np.ndarray = field(repr=False)

    @property
    def degree(self) -> int:
        return len(self.phis) - 1


@dataclass(frozen=True)
class MeasureSpec:
    """A measure on [0, 2*pi): Lebesgue, a finite Verblunsky sequence, or a
    quadrature-computable nonnegative weight function of theta."""

    kind: str  # "lebesgue" | "finite-verblunsky" | "quadrature-weight"
    alphas: tuple = ()
    weight: Callable[[np.ndarray], np.ndarray] | None = None
    normalization: float = 1.0
    label: str = ""


def lebesgue_measure() -> MeasureSpec:
    return MeasureSpec(kind="lebesgue", label="lebesgue")


def finite_verblunsky(alphas: Sequence[complex]) -> MeasureSpec:
    alphas = tuple(complex(a) for a in alphas)
    for k, a in enumerate(alphas):
        if abs(a) >= 1.0:
            raise ValidationError(f"|alpha_{k}| must be < 1, got {abs(a)}")
    return MeasureSpec(kind="finite-verblunsky", alphas=alphas, label="verblunsky")


def quadrature_weight(w: Callable, label: str = "quadrature") -> MeasureSpec:
    return MeasureSpec(kind="quadrature-weight", weight=w, label=label)


def bernstein_szego(h_coeffs: Sequence[complex]) -> MeasureSpec:
    """Weight proportional to 1/|h(e^{i theta})|^2 for a polynomial h
    (ascending coefficients) nonvanishing on the closed disk."""
    h = np.asarray(list(h_coeffs), dtype=complex)
    if len(h) == 0 or np.all(h == 0):
        raise ValidationError("h must be a nonzero polynomial")

    def w(theta):
        z = np.exp(1j * np.asarray(theta))
        hv = np.zeros_like(z)
        for c in h[::-1]:
            hv = hv * z + c
        return 1.0 / np.abs(hv) ** 2

    return MeasureSpec(kind="quadrature-weight", weight=w, label="bernstein-szego")


def load_measure_spec(path) -> MeasureSpec:
    """Read a measure spec JSON file.

    Schema: {"kind": "lebesgue" | "verblunsky" | "bernstein-szego",
             "alphas": [[re, im], ...], "h_coeffs": [[re, im], ...]}.
    """
    with open(path) as fh:
        data = json.load(fh)
    kind = data.get("kind")
    if kind == "lebesgue":
        return lebesgue_measure()
    if kind == "verblunsky":
        return finite_verblunsky([complex(re, im) for re, im in data.get("alphas", [])])
    if kind == "bernstein-szego":
        return bernstein_szego([complex(re, im) for re, im in data.get("h_coeffs", [])])
    raise ValidationError(f"unknown measure kind {kind!r} in {path}")


def _reverse(coeffs: np.ndarray) -> np.ndarray:
    return np.conj(coeffs[::-1])


def szego_recurrence(alphas: Sequence[complex], N: int) -> OpucState:
    """Run the recurrence from alpha_0..alpha_{N-1}, storing all degrees <= N."""
    alphas = np.asarray([complex(a) for a in alphas], dtype=complex)
    if N < 0:
        raise ValidationError(f"N must be nonnegative, got {N}")
    if len(alphas) < N:
        raise ValidationError(f"need {N} Verblunsky coefficients, got {len(alphas)}")
    bad = np.nonzero(np.abs(alphas[:N]) >= 1.0)[0]
    if len(bad):
        k = int(bad[0])
        raise ValidationError(f"|alpha_{k}| must be < 1, got {abs(alphas[k])}")
    phis = [np.ones(1, dtype=complex)]
    stars = [np.ones(1, dtype=complex)]
    for k in range(N):
        shifted = np.concatenate([[0.0], phis[k]])  # z * phi_k
        star_padded = np.concatenate([stars[k], [0.0]])
        nxt = shifted - np.conj(alphas[k]) * star_padded
        phis.append(nxt)
        stars.append(_reverse(nxt))
    return OpucState(
        alphas=alphas[:N].copy(),
        phis=tuple(phis),
        phi_stars=tuple(stars),
        phi_at_zero=np.array([p[0] for p in phis]),
    )


def trigonometric_moments(spec: MeasureSpec, N: int, tol: float = 1e-12,
                          max_points: int = 2**20) -> np.ndarray:
    """Moments m_k = int_0^{2 pi} e^{i k theta} w(theta) dtheta for k = 0..N,
    by periodic trapezoid quadrature with point-count doubling.

    The grid is shifted by half a step (periodic midpoint rule, same spectral
    accuracy) so that removable singularities of Szego-transformed weights at
    theta = 0 and theta = pi are never sampled.  Convergence is declared when
    successive estimates differ by less than tol relative to the total mass.
    """
    if spec.kind != "quadrature-weight":
        raise ValidationError("trigonometric moments require a quadrature-weight measure")
    w = spec.weight
    prev = None
    m = 256
    while m <= N:  # need at least N+1 resolvable frequencies
        m *= 2
    while m <= max_points:
        theta = 2.0 * np.pi * (np.arange(m) + 0.5) / m
        vals = np.asarray(w(theta), dtype=float)
        if np.any(vals < -1e-12 * max(1.0, np.max(np.abs(vals)))):
            raise ValidationError("measure weight must be nonnegative on [0, 2*pi)")
        # (2 pi / m) * sum w_j e^{i k theta_j}, theta_j = 2 pi (j + 1/2) / m
        fft = np.fft.fft(vals)
        k = np.arange(N + 1)
        cur = (2.0 * np.pi / m) * np.exp(1j * np.pi * k / m) * np.conj(fft[: N + 1])
        if prev is not None and len(prev) == len(cur):
            scale = max(abs(cur[0].real), 1e-300)
            if np.max(np.abs(cur - prev)) < tol * scale:
                return cur
        prev = cur
        m *= 2
    raise QuadratureError(
        f"moment quadrature did not converge below {tol} with up to {max_points} points"
    )


def moments_to_verblunsky(spec: MeasureSpec, N: int) -> np.ndarray:
    """Recover alpha_0..alpha_{N-1} from trigonometric moments by the
    Levinson-type recursion

        conj(alpha_k) = <z phi_k, 1> / ||phi_k||^2,
        ||phi_{k+1}||^2 = (1 - |alpha_k|^2) ||phi_k||^2,

    where <f, g> = int f conj(g) dnu and <z^a, z^b> = m_{a-b}.
    """
    if N < 1:
        raise ValidationError(f"N must be >= 1, got {N}")
    m = trigonometric_moments(spec, N)
    mass = m[0].real
    if mass <= 0:
        raise ValidationError("measure has nonpositive total mass")
    alphas = np.zeros(N, dtype=complex)
    phi = np.ones(1, dtype=complex)
    norm2 = mass
    for k in range(N):
        ip = np.dot(phi, m[1:k + 2])  # <z phi_k, 1> = sum_j a_j m_{j+1}
        c = ip / norm2
        alpha = np.conj(c)
        if abs(alpha) >= ALPHA_LIMIT:
            raise MeasureValidityError(
                f"recovered |alpha_{k}| = {abs(alpha):.6f} >= {ALPHA_LIMIT}; "
                "measure is numerically outside the admissible class"
            )
        alphas[k] = alpha
        phi = np.concatenate([[0.0], phi]) - c * np.concatenate([_reverse(phi), [0.0]])
        norm2 *= 1.0 - abs(alpha) ** 2
    return alphas


def verblunsky_coefficients(spec: MeasureSpec, N: int) -> np.ndarray:
    """First N Verblunsky coefficients of any supported measure family."""
    if spec.kind == "lebesgue":
        return np.zeros(N, dtype=complex)
    if spec.kind == "finite-verblunsky":
        out = np.zeros(N, dtype=complex)
        head = min(N, len(spec.alphas))
        out[:head] = spec.alphas[:head]
        return out
    if spec.kind == "quadrature-weight":
        return moments_to_verblunsky(spec, N)
    raise ValidationError(f"unknown measure kind {spec.kind!r}")


@dataclass(frozen=True)
class ParaOrthogonalSpec:
    """Degree n and rotation tau with |tau| = 1."""

    n: int
    tau: complex

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"degree must be >= 1, got {self.n}")
        if abs(abs(complex(self.tau)) - 1.0) > 1e-12:
            raise ValidationError(f"|tau| must equal 1 within 1e-12, got {abs(self.tau)}")


def paraorthogonal(state: OpucState, spec: ParaOrthogonalSpec) -> np.ndarray:
    """Ascending coefficients of omega_n(z, tau) = phi_n + tau phi_n*."""
    if state.degree < spec.n:
        raise ValidationError(
            f"state holds degrees up to {state.degree}, need {spec.n}"
        )
    return state.phis[spec.n] + complex(spec.tau) * state.phi_stars[spec.n]


def _polyval_ascending(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(z) + coeffs[-1]
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc


def paraorthogonal_nodes(state: OpucState, spec: ParaOrthogonalSpec) -> NodalSystem:
    """Zeros of omega_n(z, tau) as a nodal system.

    Companion-matrix eigenvalues, projected to exact unit modulus and
    polished by one Newton step.  Zeros straying farther than 1e-6 from the
    circle indicate that the measure violates the theory's hypotheses.
    """
    omega = paraorthogonal(state, spec)
    roots = np.roots(omega[::-1])
    off = np.abs(np.abs(roots) - 1.0)
    if np.max(off) > 1e-6:
        raise RootFindingError(
            f"para-orthogonal zero strays {np.max(off):.3e} from the unit circle; "
            "measure assumptions look violated"
        )
    z = roots / np.abs(roots)
    deriv = np.polynomial.polynomial.polyder(omega)
    fz = _polyval_ascending(omega, z)
    dz = _polyval_ascending(deriv, z)
    step = np.where(dz != 0, fz / np.where(dz != 0, dz, 1.0), 0.0)
    z = z - step
    z = z / np.abs(z)
    residual = np.abs(_polyval_ascending(omega, z))
    scale = float(np.max(np.abs(omega)))
    if np.max(residual) > 1e-9 * scale:
        raise RootFindingError(
            f"polished zero residual {np.max(residual):.3e} exceeds 1e-9 * max|coeff|"
        )
    z = z[np.argsort(np.mod(np.angle(z), 2.0 * np.pi))]
    if len(z) > 1 and np.min(np.abs(np.diff(np.concatenate([z, z[:1]])))) <= 1e-10:
        raise DegeneracyError("para-orthogonal zeros collide within 1e-10")
    return make_nodal_system(z, source="para-orthogonal")
