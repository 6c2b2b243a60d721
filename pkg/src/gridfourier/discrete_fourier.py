"""Discrete Fourier coefficients on the 2n-point grid and exact inversion.

Conventions (circle of circumference 2, modes m = -n .. n-1):

    ghat(m) = (1/n) * sum_{j=-n}^{n-1} g(j/n) exp(-i pi j m / n)
    g(j/n)  = (1/2) * sum_{m=-n}^{n-1} ghat(m) exp(+i pi j m / n)

The reference transform is the direct O(n^2) sum, accumulated in ascending
index order with compensated (Kahan) summation so residuals are
deterministic and reproducible.  Character phases are reduced exactly via
j*m mod 2n before exponentiation: the kernel exp(i pi j m / n) is a
character of the cyclic group of order 2n, so the reduction is lossless.

An optional fast path (``fast=True``) uses a radix-2 FFT over the 2n
points when 2n is a power of two; it must agree with the direct path to
1e-12 and is never used by the lemma-verification engine.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .grid import GridFunction, build_grid

__all__ = [
    "Spectrum",
    "discrete_coefficients",
    "invert",
    "character",
    "alias_fold",
]


@dataclass(frozen=True)
class Spectrum:
    """Discrete Fourier data: coefficient for each mode m = -n .. n-1."""

    n: int
    coefficients: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"spectrum needs n >= 1, got n={self.n}")
        coeffs = np.array(self.coefficients, dtype=np.complex128, copy=True).reshape(-1)
        if coeffs.shape != (2 * self.n,):
            raise ValueError(
                f"expected {2 * self.n} coefficients for n={self.n}, got {coeffs.shape[0]}"
            )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coefficients", coeffs)

    def modes(self) -> np.ndarray:
        return np.arange(-self.n, self.n)

    def coeff(self, m: int) -> complex:
        if not -self.n <= m <= self.n - 1:
            raise ValueError(f"mode {m} outside [{-self.n}, {self.n - 1}]")
        return complex(self.coefficients[m + self.n])

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coefficients)))


def _root_table(n: int) -> np.ndarray:
    # exp(i pi r / n) for r = 0 .. 2n-1: all 2n-th roots of unity
    return np.exp(1j * np.pi * np.arange(2 * n) / n)


def _character_sum(weights: np.ndarray, n: int, sign: int) -> np.ndarray:
    """sum_j weights[j] exp(sign * i pi j k / n) for every output k = -n .. n-1.

    Ascending-j accumulation with Kahan compensation; the per-k sums are
    independent, so the whole row update is vectorized over k.
    """
    out_idx = np.arange(-n, n)
    roots = _root_table(n)
    acc = np.zeros(2 * n, dtype=np.complex128)
    comp = np.zeros(2 * n, dtype=np.complex128)
    for pos, j in enumerate(range(-n, n)):
        r = (sign * j * out_idx) % (2 * n)
        term = weights[pos] * roots[r]
        y = term - comp
        t = acc + y
        comp = (t - acc) - y
        acc = t
    return acc


def _is_power_of_two(k: int) -> bool:
    return k >= 1 and (k & (k - 1)) == 0


def _fast_coefficients(values: np.ndarray, n: int) -> np.ndarray:
    # index shift p = j + n, q = m + n turns the character kernel into the
    # standard DFT kernel up to alternating signs and a global (-1)^n
    N = 2 * n
    signs = np.where(np.arange(N) % 2 == 0, 1.0, -1.0)
    transformed = np.fft.fft(values * signs)
    parity = -1.0 if n % 2 else 1.0
    return signs * transformed * (parity / n)


def discrete_coefficients(gf: GridFunction, *, fast: bool = False) -> Spectrum:
    """Transform a grid function into its 2n discrete coefficients.

    Parameters
    ----------
    gf : GridFunction
    fast : bool
        When True and the point count 2n is a power of two, use the FFT
        path; otherwise fall back to the direct reference sum.

    Returns
    -------
    Spectrum
        coefficients[m] = (1/n) sum_j gf[j] exp(-i pi (j/n) m).
    """
    n = gf.grid.n
    if fast and _is_power_of_two(2 * n):
        return Spectrum(n, _fast_coefficients(gf.values, n))
    return Spectrum(n, _character_sum(gf.values, n, -1) / n)


def invert(s: Spectrum) -> GridFunction:
    """Exact inversion: values[j] = (1/2) sum_m coefficients[m] exp(i pi (j/n) m)."""
    return GridFunction(build_grid(s.n), 0.5 * _character_sum(s.coefficients, s.n, +1))


def character(n: int, m: int, j: int) -> complex:
    """Group character exp(i pi (j/n) m) of the 2n-point grid.

    Multiplicative in j modulo the 2n-point wraparound.  Rejects m or j
    outside -n .. n-1.
    """
    if n < 1:
        raise ValueError(f"n >= 1 required, got {n}")
    if not -n <= m <= n - 1:
        raise ValueError(f"mode {m} outside [{-n}, {n - 1}]")
    if not -n <= j <= n - 1:
        raise ValueError(f"index {j} outside [{-n}, {n - 1}]")
    r = (j * m) % (2 * n)
    return cmath.exp(1j * math.pi * r / n)


def alias_fold(f, n: int, m: int, cutoff: int) -> complex:
    """Sum of exact coefficients over all modes congruent to m mod 2n.

    Independent oracle for grid coefficients: for a trigonometric
    polynomial of degree below ``cutoff`` this equals
    ``discrete_coefficients(sample(f, grid))`` at mode m exactly.
    """
    if f.exact_coefficient is None:
        raise ValueError(f"{f.name}: no exact coefficient oracle available")
    if n < 1:
        raise ValueError(f"n >= 1 required, got {n}")
    if not -n <= m <= n - 1:
        raise ValueError(f"mode {m} outside [{-n}, {n - 1}]")
    if cutoff < 1:
        raise ValueError(f"cutoff >= 1 required, got {cutoff}")
    period = 2 * n
    t_low = math.ceil((-cutoff - m) / period)
    t_high = math.floor((cutoff - m) / period)
    total = 0.0 + 0.0j
    for t in range(t_low, t_high + 1):
        total += complex(f.exact_coefficient(m + period * t))
    return total
