"""Transfers between circle, interval, and trigonometric interpolation.

The Joukowski map x = (z + 1/z)/2 carries the unit circle two-to-one onto
[-1, 1].  An interval weight w(x) transforms to the circle weight
(1/2) w(cos theta) |sin theta|; the zeros of the associated para-orthogonal
polynomials project to classical interval node families:

    mu1 variant: omega_{2n}(z, +1)   -> n interior nodes,
    mu2 variant: omega_{2n+2}(z, -1) -> n interior nodes plus both endpoints,
    mu3 variant: omega_{2n+1}(z, -1) -> n interior nodes plus +1,
    mu4 variant: omega_{2n+1}(z, +1) -> n interior nodes plus -1.

Trigonometric interpolants arise as the real part of a circle interpolant
with a parity-matched exponent window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SymmetryError, ValidationError
from .interp import interpolant_coefficients, interpolate
from .laurent import DegreePlan
from .nodal import NodalSystem
from .opuc import (
    MeasureSpec,
    OpucState,
    ParaOrthogonalSpec,
    paraorthogonal_nodes,
    quadrature_weight,
    szego_recurrence,
    verblunsky_coefficients,
)

__all__ = [
    "IntervalNodalSystem",
    "TrigPolynomial",
    "szego_transform_weight",
    "interval_nodes_from_measure",
    "interval_interpolate",
    "trig_nodes_symmetric",
    "trig_interpolate_symmetric",
    "trig_interpolate_paraorthogonal",
    "interval_nodes_csv",
]

VARIANTS = ("mu1", "mu2", "mu3", "mu4")
_ENDPOINT_IM_TOL = 1e-12


@dataclass(frozen=True)
class IntervalNodalSystem:
    """Interior interval nodes plus the conjugate-closed circle system they
    came from; endpoints +-1 enter only through the flags."""

    xs: np.ndarray = field(repr=False)  # interior nodes, strictly increasing
    circle_system: NodalSystem = field(repr=False)
    has_minus_one: bool = False
    has_plus_one: bool = False
    variant: str = "mu1"

    @property
    def all_nodes(self) -> np.ndarray:
        """Interior nodes and flagged endpoints, increasing."""
        parts = []
        if self.has_minus_one:
            parts.append([-1.0])
        parts.append(self.xs)
        if self.has_plus_one:
            parts.append([1.0])
        return np.concatenate(parts)


@dataclass(frozen=True)
class TrigPolynomial:
    """a_0 + sum_k (a_k cos k theta + b_k sin k theta), all real."""

    a: np.ndarray = field(repr=False)  # a[0..m]
    b: np.ndarray = field(repr=False)  # b[k-1] multiplies sin(k theta)

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        b = np.asarray(self.b, dtype=float)
        if len(b) != len(a) - 1:
            raise ValidationError(f"need len(b) == len(a)-1, got {len(b)} and {len(a)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def degree(self) -> int:
        return len(self.a) - 1

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = np.full_like(theta, self.a[0], dtype=float)
        for k in range(1, len(self.a)):
            out = out + self.a[k] * np.cos(k * theta)
            if k - 1 < len(self.b):
                out = out + self.b[k - 1] * np.sin(k * theta)
        return float(out) if out.ndim == 0 else out


def szego_transform_weight(w, label: str = "szego-transform") -> MeasureSpec:
    """Circle weight theta -> (1/2) w(cos theta) |sin theta| of an interval
    weight w on [-1, 1]."""

    def circle_w(theta):
        theta = np.asarray(theta, dtype=float)
        return 0.5 * np.asarray(w(np.cos(theta)), dtype=float) * np.abs(np.sin(theta))

    return quadrature_weight(circle_w, label=label)


_VARIANT_TABLE = {
    # variant -> (degree for n interior nodes, tau, minus-one flag, plus-one flag)
    "mu1": (lambda n: 2 * n, 1.0, False, False),
    "mu2": (lambda n: 2 * n + 2, -1.0, True, True),
    "mu3": (lambda n: 2 * n + 1, -1.0, False, True),
    "mu4": (lambda n: 2 * n + 1, 1.0, True, False),
}


def _classify_zeros(nodes: np.ndarray):
    upper = nodes[nodes.imag > _ENDPOINT_IM_TOL]
    lower = nodes[nodes.imag < -_ENDPOINT_IM_TOL]
    real = nodes[np.abs(nodes.imag) <= _ENDPOINT_IM_TOL]
    return upper, lower, real


def interval_nodes_from_measure(w, n: int, variant: str = "mu1",
                                state: OpucState | None = None) -> IntervalNodalSystem:
    """Interval nodal system with n interior nodes from the weight w(x).

    Builds the OPUC state of the transformed measure (unless one is passed
    in), takes the para-orthogonal zeros of the variant's degree/rotation,
    and projects the upper-half-circle zeros to their real parts.
    """
    if variant not in VARIANTS:
        raise ValidationError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if n < 1:
        raise ValidationError(f"need n >= 1 interior nodes, got {n}")
    degree_of, tau, want_minus, want_plus = _VARIANT_TABLE[variant]
    m = degree_of(n)
    if state is None:
        nu = szego_transform_weight(w)
        state = szego_recurrence(verblunsky_coefficients(nu, m), m)
    elif state.degree < m:
        raise ValidationError(f"supplied state holds degrees up to {state.degree}, need {m}")
    system = paraorthogonal_nodes(state, ParaOrthogonalSpec(n=m, tau=tau))
    upper, lower, real = _classify_zeros(system.nodes)
    if len(upper) != len(lower):
        raise SymmetryError("zeros are not conjugate-symmetric: half-plane counts differ")
    up = upper[np.argsort(upper.real)]
    low = np.conj(lower[np.argsort(lower.real)])
    if len(up) and np.max(np.abs(up - low)) > 1e-9:
        raise SymmetryError(
            f"zeros fail conjugate symmetry by {np.max(np.abs(up - low)):.3e}"
        )
    got_minus = bool(np.any(real.real < 0))
    got_plus = bool(np.any(real.real > 0))
    if got_minus != want_minus or got_plus != want_plus or len(upper) != n:
        raise SymmetryError(
            f"variant {variant} expected {n} conjugate pairs with endpoints "
            f"(-1: {want_minus}, +1: {want_plus}); zeros disagree"
        )
    xs = np.sort(np.clip(up.real, -1.0, 1.0))
    return IntervalNodalSystem(
        xs=xs,
        circle_system=system,
        has_minus_one=want_minus,
        has_plus_one=want_plus,
        variant=variant,
    )


def _interval_plan(m: int) -> DegreePlan:
    # 2n nodes -> (p, q) = (n, n-1); 2n+2 -> (n+1, n); 2n+1 -> (n, n)
    p = math.ceil((m - 1) / 2)
    q = m - 1 - p
    r = p / (m - 1) if m > 1 else 0.5
    return DegreePlan(n=m, r=r, p=p, q=q, s=min(p, q))


def interval_interpolate(sys: IntervalNodalSystem, f):
    """Polynomial interpolant of f at the interval nodes via the circle lift.

    Lifts f to F(z) = f((z + 1/z)/2), interpolates F on the conjugate-closed
    circle system, and symmetrizes (L(z) + L(1/z))/2, which collapses to a
    real algebraic polynomial in x through z^k + z^-k = 2 T_k(x).

    Returns a numpy Chebyshev series (stable to evaluate at high degree;
    call .convert() for power-basis coefficients when the degree is modest).
    """
    system = sys.circle_system
    values = np.asarray(f(np.clip(system.nodes.real, -1.0, 1.0)), dtype=complex)
    plan = _interval_plan(system.n)
    I = interpolate(system, plan, values)
    L = interpolant_coefficients(I)
    kmax = max(plan.p, plan.q)
    d = np.array([0.5 * (L.coefficient(k) + L.coefficient(-k)) for k in range(kmax + 1)])
    scale = max(float(np.max(np.abs(values))), 1.0)
    if np.max(np.abs(d.imag)) > 1e-9 * scale:
        raise SymmetryError(
            f"symmetrized coefficients have imaginary residue {np.max(np.abs(d.imag)):.3e}"
        )
    cheb = np.concatenate([[d[0].real], 2.0 * d[1:].real])
    return np.polynomial.chebyshev.Chebyshev(cheb)


def trig_nodes_symmetric(w, n: int) -> np.ndarray:
    """2n angles: theta_j = arccos x_j in (0, pi) for the mu1 interval nodes,
    mirrored symmetrically about pi into (pi, 2 pi)."""
    sys = interval_nodes_from_measure(w, n, "mu1")
    xs = np.sort(sys.xs)[::-1]  # decreasing x -> increasing theta
    if np.any(np.abs(xs) >= 1.0):
        raise ValidationError("a node at +-1 cannot be mirrored into (pi, 2*pi)")
    theta = np.arccos(xs)
    mirrored = 2.0 * np.pi - theta[::-1]
    return np.concatenate([theta, mirrored])


def _trig_coeffs(L, degree: int) -> TrigPolynomial:
    """Real part identity: a_k = Re(c_k + c_{-k}), b_k = -Im(c_k - c_{-k})."""
    a = np.zeros(degree + 1)
    b = np.zeros(degree)
    a[0] = L.coefficient(0).real
    for k in range(1, degree + 1):
        ck, cmk = L.coefficient(k), L.coefficient(-k)
        a[k] = (ck + cmk).real
        b[k - 1] = -(ck - cmk).imag
    return TrigPolynomial(a=a, b=b)


def trig_interpolate_symmetric(w, n: int, f) -> TrigPolynomial:
    """Trig polynomial of degree <= n matching f at the 2n symmetric angles
    derived from the mu1 interval nodes of the weight w."""
    sys = interval_nodes_from_measure(w, n, "mu1")
    system = sys.circle_system
    # the circle system's nodes are exactly e^{i theta_j} for the 2n angles
    values = np.asarray(f(system.thetas), dtype=float)
    plan = DegreePlan(n=2 * n, r=n / (2 * n - 1), p=n, q=n - 1, s=n - 1)
    I = interpolate(system, plan, values.astype(complex))
    return _trig_coeffs(interpolant_coefficients(I), n)


def trig_interpolate_paraorthogonal(state: OpucState, tau: complex, n: int, f) -> TrigPolynomial:
    """Trig polynomial of degree <= floor(n/2) matching f at the angles of the
    n para-orthogonal zeros; the window is (n/2, n/2-1) for even n and
    ((n-1)/2, (n-1)/2) for odd n."""
    system = paraorthogonal_nodes(state, ParaOrthogonalSpec(n=n, tau=tau))
    if n % 2 == 0:
        p, q = n // 2, n // 2 - 1
    else:
        p = q = (n - 1) // 2
    plan = DegreePlan(n=n, r=p / (n - 1) if n > 1 else 0.5, p=p, q=q, s=min(p, q))
    values = np.asarray(f(system.thetas), dtype=float)
    I = interpolate(system, plan, values.astype(complex))
    return _trig_coeffs(interpolant_coefficients(I), n // 2)


def interval_nodes_csv(sys: IntervalNodalSystem) -> str:
    """CSV export with columns (j, x_j, theta_j, endpoint_flag)."""
    lines = ["j,x_j,theta_j,endpoint_flag"]
    xs = sys.all_nodes
    for j, x in enumerate(xs):
        x = float(x)
        flag = int((x == -1.0 and sys.has_minus_one) or (x == 1.0 and sys.has_plus_one))
        lines.append(f"{j},{x!r},{math.acos(max(-1.0, min(1.0, x)))!r},{flag}")
    return "\n".join(lines) + "\n"
