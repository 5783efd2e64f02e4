"""Laurent polynomials on the punctured plane and degree planning.

A Laurent polynomial here lives in the span of z^k for -p <= k <= q, stored
as a dense coefficient vector indexed by exponent.  The degree plan splits
n interpolation conditions into (p, q) with p + q = n - 1 according to a
target ratio r, keeping track of s = min(p, q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

__all__ = [
    "LaurentPolynomial",
    "DegreePlan",
    "make_degree_plan",
    "eval_laurent",
    "coefficients_from_samples",
]


@dataclass(frozen=True)
class DegreePlan:
    """Bookkeeping for the window [-p, q] used with n nodes.

    Invariants: p + q == n - 1 and s == min(p, q).  The ratio r is
    informational; make_degree_plan additionally guarantees p = floor(r*(n-1)).
    """

    n: int
    r: float
    p: int
    q: int
    s: int

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"need at least one node, got n={self.n}")
        if self.p < 0 or self.q < 0:
            raise ValidationError(f"window exponents must be nonnegative: p={self.p}, q={self.q}")
        if self.p + self.q != self.n - 1:
            raise ValidationError(f"p + q must equal n - 1: p={self.p}, q={self.q}, n={self.n}")
        if self.s != min(self.p, self.q):
            raise ValidationError(f"s must equal min(p, q), got s={self.s}")


def make_degree_plan(n: int, r: float) -> DegreePlan:
    """Build the plan with p = floor(r*(n-1)), q = n-1-p, s = min(p, q).

    Requires n >= 2 and 0 < r < 1.  The floor rounding is deterministic and
    monotone in n, and |p/(n-1) - r| <= 1/(n-1).
    """
    if n < 2:
        raise ValidationError(f"need n >= 2 nodes for a degree plan, got {n}")
    if not (0.0 < r < 1.0):
        raise ValidationError(f"ratio r must lie in (0, 1), got {r}")
    p = math.floor(r * (n - 1))
    q = n - 1 - p
    return DegreePlan(n=n, r=r, p=p, q=q, s=min(p, q))


@dataclass(frozen=True)
class LaurentPolynomial:
    """Element of span{z^k : -p <= k <= q}.

    coeffs has length p + q + 1; coeffs[i] multiplies z^(i - p).
    """

    p: int
    q: int
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValidationError(f"window exponents must be nonnegative: p={self.p}, q={self.q}")
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 1 or len(c) != self.p + self.q + 1:
            raise ValidationError(
                f"coefficient vector must have length p+q+1={self.p + self.q + 1}, got {len(c)}"
            )
        object.__setattr__(self, "coeffs", c)

    def coefficient(self, k: int) -> complex:
        """Coefficient of z^k (zero outside the window)."""
        if -self.p <= k <= self.q:
            return complex(self.coeffs[k + self.p])
        return 0.0 + 0.0j

    @property
    def exponents(self) -> np.ndarray:
        return np.arange(-self.p, self.q + 1)

    def __call__(self, z):
        return eval_laurent(self, z)


def eval_laurent(L: LaurentPolynomial, z):
    """Evaluate L at z != 0 (scalar or array).

    The nonnegative-exponent part runs Horner in z and the negative part
    Horner in 1/z, so no power larger than needed is ever formed.
    """
    z = np.asarray(z, dtype=complex)
    if np.any(z == 0):
        raise ValidationError("Laurent polynomials are undefined at z = 0")
    # a_k z^k for k = 0..q
    pos = L.coeffs[L.p:]
    acc = np.full_like(z, pos[-1])
    for c in pos[-2::-1]:
        acc = acc * z + c
    if L.p > 0:
        # c_{-1} u + c_{-2} u^2 + ... with u = 1/z
        u = 1.0 / z
        neg = L.coeffs[:L.p]  # exponents -p..-1
        nacc = np.full_like(z, neg[0])
        for c in neg[1:]:
            nacc = nacc * u + c
        acc = acc + nacc * u
    return complex(acc) if acc.ndim == 0 else acc


def coefficients_from_samples(samples, p: int) -> LaurentPolynomial:
    """Recover the unique L in the window [-p, m-1-p] from m values at the
    m-th roots of unity e^{2*pi*i*j/m}, j = 0..m-1.

    z^p * L(z) is an ordinary polynomial of degree <= m-1, so its
    coefficients follow from one discrete Fourier inversion of the samples.
    """
    samples = np.asarray(samples, dtype=complex)
    if samples.ndim != 1 or len(samples) < 1:
        raise ValidationError("need a one-dimensional, nonempty sample vector")
    m = len(samples)
    if not (0 <= p <= m - 1):
        raise ValidationError(f"p must satisfy 0 <= p <= m-1={m - 1}, got {p}")
    roots = np.exp(2j * np.pi * np.arange(m) / m)
    shifted = samples * roots**p  # values of the degree <= m-1 polynomial z^p L
    # g_k = (1/m) sum_j shifted_j z_j^{-k} is exactly the forward FFT / m
    g = np.fft.fft(shifted) / m
    return LaurentPolynomial(p=p, q=m - 1 - p, coeffs=g)
