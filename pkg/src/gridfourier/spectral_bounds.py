"""Boundary-term algebra and explicit decay bounds for grid coefficients.

The forward difference maps the mode exp(i pi x m) to psi_n(m) times
itself, where psi_n(m) = n*(exp(i pi m / n) - 1) plays the role of i*pi*m
on the grid; its conjugate phi_n(m) = n*(exp(-i pi m / n) - 1) shows up
when the difference is summed by parts.  Because the derivative and shift
are forced to zero at the last grid point, summation by parts leaves
boundary corrections C, D (values of g) and C', D' (values of g'), which
combine into E and F so that, exactly,

    psi * ghat(m)   = ghat'(m)  + E(m)
    psi^2 * ghat(m) = ghat''(m) + F(m)      (m != 0)

From these and |psi_n(m)|^2 >= 4 m^2 follow the uniform bounds
|F| <= 5*D_norm, |ghat''| <= M + 2*B and the decay |ghat(m)| <= H/m^2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .discrete_calculus import derivative
from .discrete_fourier import Spectrum, discrete_coefficients
from .functions import SmoothPeriodicFunction, function_norms
from .grid import GridFunction, build_grid, sample

__all__ = [
    "BoundaryTerms",
    "DecayCheck",
    "UniformBoundReport",
    "forward_symbol",
    "adjoint_symbol",
    "boundary_terms",
    "dft_identity_residuals",
    "dft_identity_residual_arrays",
    "tail_threshold",
    "tail_sum",
    "decay_bound_check",
    "unifbounded_checks",
    "ZERO_DECAY_FLOOR",
]

# When the decay constant H is zero, every nonzero-mode coefficient must
# vanish; this floor budgets the rounding of that exact statement.
ZERO_DECAY_FLOOR = 1e-12

_UNIFORM_BOUND_TOL = 1e-9
_ENDPOINT_TOL = 1e-12


def forward_symbol(n: int, m):
    """psi_n(m) = n*(exp(i pi m / n) - 1): the forward-difference multiplier.

    Satisfies |psi_n(m)|^2 = 4 n^2 sin^2(pi m / 2n) >= 4 m^2 for |m| <= n.
    Accepts a scalar or an array of modes.
    """
    return n * (np.exp(1j * np.pi * np.asarray(m) / n) - 1.0)


def adjoint_symbol(n: int, m):
    """phi_n(m) = n*(exp(-i pi m / n) - 1): conjugate symbol from parts."""
    return n * (np.exp(-1j * np.pi * np.asarray(m) / n) - 1.0)


@dataclass(frozen=True)
class BoundaryTerms:
    """Edge corrections of summation by parts at mode m.

    C, D come from the values of g at the two ends of the grid, Cp and Dp
    from the values of the discrete derivative; E = phi*D - C and
    F = psi*phi*D - psi*C + phi*Dp - Cp are the combinations entering the
    transform identities.
    """

    m: int
    C: complex
    D: complex
    Cp: complex
    Dp: complex
    E: complex
    F: complex


def _exact_parity(m: int) -> float:
    # exp(+-i pi m) for integer m, without trig rounding
    return -1.0 if m % 2 else 1.0


def boundary_terms(gf: GridFunction, m: int) -> BoundaryTerms:
    """All six boundary terms of gf at mode m (requires -n <= m <= n-1)."""
    n = gf.grid.n
    if not -n <= m <= n - 1:
        raise ValueError(f"mode {m} outside [{-n}, {n - 1}]")
    g_last = complex(gf.values[-1])
    g_first = complex(gf.values[0])
    gp = derivative(gf)
    gp_first = complex(gp.values[0])

    par = _exact_parity(m)
    # exp(-i pi (n-1) m / n), phase reduced exactly modulo 2n
    e_right = cmath.exp(1j * math.pi * ((-(n - 1) * m) % (2 * n)) / n)
    e_step = cmath.exp(1j * math.pi * (m % (2 * n)) / n)

    C = g_last * e_right - g_first * par
    D = -(1.0 / n) * g_first * e_step * par
    Cp = -gp_first * par
    Dp = -(1.0 / n) * gp_first * e_step * par

    phi = complex(adjoint_symbol(n, m))
    psi = complex(forward_symbol(n, m))
    E = phi * D - C
    F = psi * phi * D - psi * C + phi * Dp - Cp
    return BoundaryTerms(m=m, C=C, D=D, Cp=Cp, Dp=Dp, E=E, F=F)


def _boundary_E_F_arrays(gf: GridFunction) -> tuple[np.ndarray, np.ndarray]:
    """E(m) and F(m) for every mode m = -n .. n-1 at once."""
    n = gf.grid.n
    modes = np.arange(-n, n)
    g_last = complex(gf.values[-1])
    g_first = complex(gf.values[0])
    gp_first = complex(derivative(gf).values[0])

    par = np.where(modes % 2 == 0, 1.0, -1.0)
    e_right = np.exp(1j * np.pi * ((-(n - 1) * modes) % (2 * n)) / n)
    e_step = np.exp(1j * np.pi * (modes % (2 * n)) / n)

    C = g_last * e_right - g_first * par
    D = -(1.0 / n) * g_first * e_step * par
    Cp = -gp_first * par
    Dp = -(1.0 / n) * gp_first * e_step * par

    phi = adjoint_symbol(n, modes)
    psi = forward_symbol(n, modes)
    E = phi * D - C
    F = psi * phi * D - psi * C + phi * Dp - Cp
    return E, F


def dft_identity_residuals(gf: GridFunction, m: int) -> tuple[complex, complex]:
    """Residuals of the two transform identities at mode m != 0.

    Returns (r1, r2) with

        r1 = ghat(m) - (ghat'(m) + E(m)) / psi(m)
        r2 = ghat(m) - (ghat''(m) + F(m)) / psi(m)^2

    computed on the multiplied-through form and normalized afterwards, to
    avoid cancellation in the reported values.  Rejects m = 0, where psi
    vanishes and the identities are undefined.
    """
    n = gf.grid.n
    if m == 0:
        raise ValueError("identities are undefined at m = 0 (symbol vanishes)")
    if not -n <= m <= n - 1:
        raise ValueError(f"mode {m} outside [{-n}, {n - 1}]")
    ghat = discrete_coefficients(gf).coeff(m)
    ghat1 = discrete_coefficients(derivative(gf)).coeff(m)
    ghat2 = discrete_coefficients(derivative(derivative(gf))).coeff(m)
    bt = boundary_terms(gf, m)
    psi = complex(forward_symbol(n, m))
    r1 = (ghat * psi - (ghat1 + bt.E)) / psi
    r2 = (ghat * psi * psi - (ghat2 + bt.F)) / (psi * psi)
    return r1, r2


def dft_identity_residual_arrays(gf: GridFunction) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized residuals over all modes; the m = 0 slot is set to 0."""
    n = gf.grid.n
    modes = np.arange(-n, n)
    s0 = discrete_coefficients(gf).coefficients
    s1 = discrete_coefficients(derivative(gf)).coefficients
    s2 = discrete_coefficients(derivative(derivative(gf))).coefficients
    E, F = _boundary_E_F_arrays(gf)
    psi = forward_symbol(n, modes)
    r1 = np.zeros(2 * n, dtype=np.complex128)
    r2 = np.zeros(2 * n, dtype=np.complex128)
    nz = modes != 0
    r1[nz] = (s0[nz] * psi[nz] - (s1[nz] + E[nz])) / psi[nz]
    r2[nz] = (s0[nz] * psi[nz] ** 2 - (s2[nz] + F[nz])) / psi[nz] ** 2
    return r1, r2


def tail_threshold(H: float, epsilon: float) -> float:
    """Mode threshold 2H/epsilon + 1 beyond which coefficient tails sum below epsilon."""
    if H < 0:
        raise ValueError(f"H must be nonnegative, got {H}")
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    return 2.0 * H / epsilon + 1.0


def tail_sum(s: Spectrum, L: int, Lp: int) -> float:
    """sum_{m=L}^{Lp} |coefficients[m]| over a same-sign mode range."""
    if L > Lp:
        raise ValueError(f"need L <= Lp, got L={L}, Lp={Lp}")
    if L * Lp <= 0:
        raise ValueError(f"range [{L}, {Lp}] must not contain or touch 0")
    if not (-s.n <= L and Lp <= s.n - 1):
        raise ValueError(f"range [{L}, {Lp}] outside [{-s.n}, {s.n - 1}]")
    block = s.coefficients[L + s.n : Lp + s.n + 1]
    return float(np.sum(np.abs(block)))


def canonical_mode_order(n: int, include_zero: bool = False) -> list[int]:
    """Modes ordered by |m| ascending, negative before positive.

    Worst-case selections iterate this order with strict improvement, so
    ties resolve to the smallest |m| and then to the negative mode.
    """
    ms = sorted(range(-n, n), key=lambda m: (abs(m), m > 0))
    if not include_zero:
        ms.remove(0)
    return ms


def _worst_mode(values_by_mode: np.ndarray, n: int, include_zero: bool = False):
    order = canonical_mode_order(n, include_zero)
    positions = np.asarray(order) + n
    vals = values_by_mode[positions]
    k = int(np.argmax(vals))
    return float(vals[k]), int(order[k])


@dataclass(frozen=True)
class DecayCheck:
    """Result of the quadratic-decay test |coefficients[m]| <= H/m^2.

    worst_ratio is max_m |c(m)| m^2 / H (or max_m |c(m)| / 1e-12 when
    H = 0, where the bound degenerates to exact vanishing); the bound
    holds iff worst_ratio <= 1.
    """

    worst_ratio: float
    worst_m: int
    passed: bool


def decay_bound_check(s: Spectrum, H: float) -> DecayCheck:
    """Check |coefficients[m]| <= H / m^2 for every mode m != 0."""
    if H < 0:
        raise ValueError(f"H must be nonnegative, got {H}")
    modes = s.modes()
    mags = np.abs(s.coefficients)
    if H == 0.0:
        ratios = mags / ZERO_DECAY_FLOOR
    else:
        ratios = mags * modes.astype(float) ** 2 / H
    worst, worst_m = _worst_mode(ratios, s.n, include_zero=False)
    return DecayCheck(worst_ratio=worst, worst_m=worst_m, passed=worst <= 1.0)


@dataclass(frozen=True)
class UniformBoundReport:
    """Uniform boundedness of F(m) and ghat''(m) for a zero-endpoint function.

    The two inequalities are |F(m)| <= 5*sup_derivative + 1e-9 and
    |ghat''(m)| <= l1_second + 2*sup_value + 1e-9, for every mode at the
    given grid size; the slacks record the remaining margin (negative
    slack means the bound failed).
    """

    n: int
    sup_value: float
    sup_derivative: float
    l1_second: float
    max_F: float
    worst_F_mode: int
    max_second_hat: float
    worst_second_mode: int
    F_slack: float
    second_hat_slack: float
    passed: bool


def unifbounded_checks(f: SmoothPeriodicFunction, n: int) -> UniformBoundReport:
    """Verify the n-independent bounds on F and the second-difference spectrum.

    Requires f(1) and f(-1) to vanish (within 1e-12); the norms entering
    the bounds are then computed from f itself rather than from an
    endpoint-shifted copy.
    """
    if abs(complex(f.eval(1.0))) > _ENDPOINT_TOL or abs(complex(f.eval(-1.0))) > _ENDPOINT_TOL:
        raise ValueError(f"{f.name}: endpoint values must vanish (within {_ENDPOINT_TOL})")
    sup_f, sup_d1, l1_d2 = function_norms(f)

    gf = sample(f, build_grid(n))
    _, F = _boundary_E_F_arrays(gf)
    second_hat = discrete_coefficients(derivative(derivative(gf))).coefficients

    max_F, worst_F_mode = _worst_mode(np.abs(F), n, include_zero=True)
    max_g2, worst_g2_mode = _worst_mode(np.abs(second_hat), n, include_zero=True)

    f_bound = 5.0 * sup_d1 + _UNIFORM_BOUND_TOL
    g2_bound = l1_d2 + 2.0 * sup_f + _UNIFORM_BOUND_TOL
    return UniformBoundReport(
        n=n,
        sup_value=sup_f,
        sup_derivative=sup_d1,
        l1_second=l1_d2,
        max_F=max_F,
        worst_F_mode=worst_F_mode,
        max_second_hat=max_g2,
        worst_second_mode=worst_g2_mode,
        F_slack=f_bound - max_F,
        second_hat_slack=g2_bound - max_g2,
        passed=(max_F <= f_bound) and (max_g2 <= g2_bound),
    )
