"""Hurwitz and Lerch zeta functions on vertical lines.

Evaluation strategy
-------------------
``zeta_H(s, a) = sum_{m>=0} (m+a)^(-s)`` is continued by Euler-Maclaurin:
an explicit sum of ``N`` terms, the integral tail ``(N+a)^(1-s)/(s-1)``, the
midpoint term ``(N+a)^(-s)/2`` and ``em_depth`` Bernoulli corrections

    B(2k)/(2k)! * s(s+1)...(s+2k-2) * (N+a)^(-s-2k+1),

with the remainder estimated by the first omitted correction.  The shift
count ``N = ceil(shift_count_factor*(|t|+10))`` keeps the correction ratio
``(|s+2k| / (2*pi*(N+a)))^2`` far below one over the whole supported region,
so the default depth reaches ~1e-15 relative accuracy.

The Lerch function ``zeta_L(s, a, lambda) = sum_m e^(2*pi*i*m*lambda) (m+a)^(-s)``
is evaluated for rational ``lambda = p/q`` by the exact q-fold reduction

    zeta_L(s, a, p/q) = q^(-s) * sum_{j=0}^{q-1} e^(2*pi*i*j*p/q) zeta_H(s, (j+a)/q)

which inherits the full analytic continuation; irrational ``lambda`` is
summed directly (absolutely convergent region only) with an Abel-summation
tail bound.

Vertical-line batches (`hurwitz_line`, `hurwitz_line_batch`) share one phase
matrix ``exp(-i*t*log(m+a))`` across all requested real parts, which is what
makes the mean-square integrals over tens of thousands of nodes affordable.
All reductions use numpy pairwise summation in a fixed order, so repeated
runs are bit-identical.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

import numpy as np

from .combinatorics import bernoulli
from .errors import (
    AccuracyError,
    DomainError,
    PoleError,
    ResourceBudgetError,
    UnsupportedRegionError,
)

__all__ = [
    "Precision",
    "DEFAULT_PRECISION",
    "hurwitz_zeta",
    "hurwitz_zeta_bounded",
    "hurwitz_line",
    "hurwitz_line_batch",
    "riemann_zeta",
    "hurwitz_finite_approx",
    "lerch_zeta",
    "lerch_zeta_bounded",
    "periodic_zeta",
    "functional_equation_residual",
    "gen_euler_constant",
    "log_abs_gamma",
    "gamma_abs",
    "gamma_complex",
    "gamma_envelope",
]

LambdaLike = Union[int, float, Fraction]

_POLE_GUARD = 1e-8


@dataclass(frozen=True)
class Precision:
    """Tuning knobs of the Euler-Maclaurin kernel.

    rel_tol:            target relative accuracy (>= 1e-13).
    em_depth:           number of Bernoulli correction terms.
    shift_count_factor: N = ceil(factor * (|t| + 10)) explicit terms.
    """

    rel_tol: float = 1e-12
    em_depth: int = 12
    shift_count_factor: float = 1.2

    def __post_init__(self):
        if not (1e-13 <= self.rel_tol <= 1e-2):
            raise DomainError("Precision.rel_tol must lie in [1e-13, 1e-2]")
        if not (2 <= self.em_depth <= 30):
            raise DomainError("Precision.em_depth must lie in [2, 30]")
        if not (0.6 <= self.shift_count_factor <= 8.0):
            raise DomainError("Precision.shift_count_factor must lie in [0.6, 8]")


DEFAULT_PRECISION = Precision()

# B(2k)/(2k)! as floats, k = 0..30 (index k)
_BERN_FAC = tuple(
    float(bernoulli(2 * k) / math.factorial(2 * k)) for k in range(0, 32)
)

# chunk size target for the (t x m) phase matrix, in elements
_CHUNK_ELEMS = 4_000_000


def _shift_count(prec: Precision, t_scale: float) -> int:
    return max(4, int(math.ceil(prec.shift_count_factor * (t_scale + 10.0))))


def _em_kernel(
    sigmas: Sequence[float],
    a: float,
    ts: np.ndarray,
    n_terms: int,
    prec: Precision,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Euler-Maclaurin evaluation of zeta_H(sigma_i + i t_j, a).

    Returns (values[S, T], err[S], cancel[S]): err is the max over t of the
    first omitted correction plus summation rounding, relative to the scale
    max(|value|, (N+a)^(-sigma)); cancel is the rounding estimate relative
    to |value| itself, which flags the cancellation-dominated corner
    (deeply negative sigma at small |t|) and zeros of the function.
    """
    ts = np.asarray(ts, dtype=float)
    S = len(sigmas)
    nt = ts.size
    N = n_terms
    depth = prec.em_depth

    m = np.arange(N, dtype=float)
    base = m + a
    logv = np.log(base)
    z = N + a
    logz = math.log(z)

    amps = [np.power(base, -sig) for sig in sigmas]
    out = np.empty((S, nt), dtype=complex)
    errs = np.zeros(S)
    cancels = np.zeros(S)

    chunk = max(1, _CHUNK_ELEMS // max(N, 1))
    for lo in range(0, nt, chunk):
        hi = min(nt, lo + chunk)
        tc = ts[lo:hi]
        phases = np.exp((-1j) * np.multiply.outer(tc, logv))
        for i, sig in enumerate(sigmas):
            s = sig + 1j * tc
            if np.any(np.abs(s - 1.0) < _POLE_GUARD):
                raise PoleError(
                    f"zeta_H pole guard: s within {_POLE_GUARD} of 1 "
                    f"(sigma={sig})",
                    distance=float(np.min(np.abs(s - 1.0))),
                )
            main = (phases * amps[i]).sum(axis=1)
            val = main + np.exp((1.0 - s) * logz) / (s - 1.0)
            val += 0.5 * np.exp(-s * logz)
            poch = s.astype(complex)
            zpow = np.exp(-(s + 1.0) * logz)
            invz2 = z ** -2.0
            for k in range(1, depth + 1):
                val += (_BERN_FAC[k] * zpow) * poch
                poch = poch * ((s + (2 * k - 1)) * (s + 2 * k))
                zpow = zpow * invz2
            out[i, lo:hi] = val
            omitted = _BERN_FAC[depth + 1] * np.abs(poch) * (
                z ** (-sig - 2 * depth - 1)
            )
            top = max(a ** (-sig), z ** (-sig))
            rounding = 1e-16 * math.log2(N + 2.0) * top
            scale = np.maximum(np.abs(val), z ** (-sig))
            mag = np.maximum(np.abs(val), 1e-300)
            errs[i] = max(
                errs[i], float(np.max((omitted + rounding) / scale))
            )
            cancels[i] = max(cancels[i], float(np.max(rounding / mag)))
    return out, errs, cancels


def _hurwitz_scalar(s: complex, a: float, prec: Precision) -> Tuple[complex, float]:
    """Internal continuation kernel without public-domain clamps."""
    if a <= 0:
        raise DomainError(f"zeta_H needs a > 0, got a={a}")
    if abs(s - 1.0) < _POLE_GUARD:
        raise PoleError("zeta_H has a pole at s = 1", distance=abs(s - 1.0))
    n = _shift_count(prec, abs(s.imag))
    vals, errs, cancels = _em_kernel([s.real], a, np.array([s.imag]), n, prec)
    val, err = complex(vals[0, 0]), float(errs[0])
    if s.real < -0.5 and float(cancels[0]) > 8.0 * prec.rel_tol:
        # cancellation-dominated corner (deeply negative sigma, small |t|):
        # reflect to Re = 1 - sigma where the series side converges fast
        return _hurwitz_reflected(s, a, prec)
    return val, err


def _hurwitz_reflected(
    s: complex, a: float, prec: Precision
) -> Tuple[complex, float]:
    shift_sum = 0.0 + 0.0j
    aa = a
    while aa > 1.0:
        aa -= 1.0
        shift_sum += cmath.exp(-s * cmath.log(aa))
    sp = 1.0 - s
    log_pref = _lgamma_right(sp) - sp * math.log(2.0 * math.pi)
    if aa == 1.0:
        f_plus, ep = _hurwitz_scalar(sp, 1.0, prec)
        f_minus, em_ = f_plus, ep
    else:
        f_plus, ep = _lerch_direct(sp, 1.0, aa, prec, 1 << 25)
        f_plus *= cmath.exp(2j * math.pi * aa)
        f_minus, em_ = _lerch_direct(sp, 1.0, 1.0 - aa, prec, 1 << 25)
        f_minus *= cmath.exp(2j * math.pi * (1.0 - aa))
    c_plus = cmath.exp(log_pref - 0.5j * math.pi * sp)
    c_minus = cmath.exp(log_pref + 0.5j * math.pi * sp)
    val = c_plus * f_plus + c_minus * f_minus - shift_sum
    # relative to the term scale: near zeros of the function the value is
    # still absolutely accurate at scale * err
    term_scale = abs(c_plus * f_plus) + abs(c_minus * f_minus) + abs(shift_sum)
    err = abs(c_plus) * ep + abs(c_minus) * em_
    scale = max(abs(val), term_scale, 1e-300)
    return val, err / scale + 1e-15


def hurwitz_zeta_bounded(
    s: complex, a: float, prec: Precision = DEFAULT_PRECISION
) -> Tuple[complex, float]:
    """zeta_H(s, a) together with the Euler-Maclaurin remainder estimate."""
    s = complex(s)
    if not (0.0 < a <= 1e4):
        raise DomainError(f"hurwitz_zeta supports 0 < a <= 1e4, got a={a}")
    if not (-10.0 <= s.real <= 10.0):
        raise DomainError(f"hurwitz_zeta supports -10 <= Re s <= 10, got {s.real}")
    if abs(s.imag) > 1e5:
        raise DomainError(f"hurwitz_zeta supports |Im s| <= 1e5, got {s.imag}")
    val, err = _hurwitz_scalar(s, a, prec)
    if err > 64.0 * prec.rel_tol:
        raise AccuracyError(
            f"hurwitz_zeta: remainder estimate {err:.3e} above tolerance",
            achieved=err,
        )
    return val, err


def hurwitz_zeta(s: complex, a: float, prec: Precision = DEFAULT_PRECISION) -> complex:
    """Hurwitz zeta zeta_H(s, a), continued to all s away from the pole s=1."""
    return hurwitz_zeta_bounded(s, a, prec)[0]


def riemann_zeta(s: complex, prec: Precision = DEFAULT_PRECISION) -> complex:
    """Riemann zeta as the a=1 Hurwitz value (single code path)."""
    s = complex(s)
    return _hurwitz_scalar(s, 1.0, prec)[0]


def hurwitz_line(
    sigma: float,
    a: float,
    ts: np.ndarray,
    prec: Precision = DEFAULT_PRECISION,
    n_terms: int | None = None,
) -> np.ndarray:
    """zeta_H(sigma + i t, a) for an array of ordinates t.

    One shift count (from max |t|) serves the whole batch so the integrand
    of a quadrature run is a single smooth family.
    """
    return hurwitz_line_batch([sigma], a, ts, prec, n_terms)[0]


def hurwitz_line_batch(
    sigmas: Sequence[float],
    a: float,
    ts: np.ndarray,
    prec: Precision = DEFAULT_PRECISION,
    n_terms: int | None = None,
) -> np.ndarray:
    """Rows zeta_H(sigma_i + i t, a) sharing one phase matrix across sigma_i."""
    if a <= 0:
        raise DomainError(f"hurwitz_line needs a > 0, got a={a}")
    ts = np.asarray(ts, dtype=float)
    if ts.size == 0:
        return np.zeros((len(sigmas), 0), dtype=complex)
    t_scale = float(np.max(np.abs(ts)))
    n = n_terms if n_terms is not None else _shift_count(prec, t_scale)
    vals, errs, _ = _em_kernel(list(sigmas), a, ts, n, prec)
    worst = float(np.max(errs)) if len(sigmas) else 0.0
    if worst > 64.0 * prec.rel_tol:
        raise AccuracyError(
            f"hurwitz_line: remainder estimate {worst:.3e} above tolerance",
            achieved=worst,
        )
    return vals


def hurwitz_finite_approx(
    s: complex, a: float, x: float, prec: Precision = DEFAULT_PRECISION
) -> Tuple[complex, float]:
    """Finite main sum plus integral tail: sum_{m<=x}(m+a)^(-s) + x^(1-s)/(s-1).

    Valid for 0 < Re s <= 2 and x >= |Im s|/pi; the returned bound
    2*(1+|s|/sigma)*x^(-sigma) dominates the discarded remainder.
    """
    s = complex(s)
    sigma = s.real
    if a <= 0:
        raise DomainError("hurwitz_finite_approx needs a > 0")
    if not (0.0 < sigma <= 2.0):
        raise DomainError(
            f"hurwitz_finite_approx is supported for 0 < Re s <= 2, got {sigma}"
        )
    if abs(s - 1.0) < _POLE_GUARD:
        raise PoleError("hurwitz_finite_approx: pole at s = 1", distance=abs(s - 1.0))
    if x < max(abs(s.imag) / math.pi, 1.0):
        raise DomainError(
            f"hurwitz_finite_approx needs x >= max(|t|/pi, 1), got x={x}"
        )
    count = int(math.floor(x)) + 1
    if count > 100_000_000:
        raise ResourceBudgetError(
            f"hurwitz_finite_approx: {count} terms exceed the 1e8 budget"
        )
    total = 0.0 + 0.0j
    block = 1 << 20
    for lo in range(0, count, block):
        hi = min(count, lo + block)
        mm = np.arange(lo, hi, dtype=float) + a
        total += complex(np.sum(np.exp((-s) * np.log(mm))))
    total += cmath.exp((1.0 - s) * math.log(x)) / (s - 1.0)
    bound = 2.0 * (1.0 + abs(s) / sigma) * x ** (-sigma)
    return total, bound


# ---------------------------------------------------------------------------
# Lerch zeta


def _as_unit_fraction(lam: Fraction) -> Fraction:
    fr = lam - math.floor(lam)
    return Fraction(fr)


def lerch_zeta_bounded(
    s: complex,
    a: float,
    lam: LambdaLike,
    prec: Precision = DEFAULT_PRECISION,
    max_terms: int = 1 << 25,
) -> Tuple[complex, float]:
    """zeta_L(s, a, lambda) with an error estimate.

    Rational lambda: exact q-fold Hurwitz reduction (valid for all s != 1
    carried by the continued zeta_H).  Other lambda: direct series, needs
    Re s > 1; raises UnsupportedRegionError otherwise and AccuracyError when
    the Abel tail bound cannot reach the tolerance within ``max_terms``.
    """
    s = complex(s)
    if a <= 0:
        raise DomainError(f"lerch_zeta needs a > 0, got a={a}")
    if isinstance(lam, (int, Fraction)) and not isinstance(lam, bool):
        fr = _as_unit_fraction(Fraction(lam))
        if fr == 0:
            return _hurwitz_scalar(s, a, prec)
        q, p = fr.denominator, fr.numerator
        if q > 1024:
            raise ResourceBudgetError(
                f"lerch_zeta: rational reduction limited to denominators <= 1024, got {q}"
            )
        total = 0.0 + 0.0j
        err = 0.0
        for j in range(q):
            v, e = _hurwitz_scalar(s, (j + a) / q, prec)
            root = cmath.exp(2j * math.pi * ((j * p) % q) / q)
            total += root * v
            err += abs(e * v)
        scale = cmath.exp(-s * math.log(q))
        return scale * total, abs(scale) * err
    lam_f = float(lam)
    if abs(lam_f - round(lam_f)) < 1e-15:
        return _hurwitz_scalar(s, a, prec)
    return _lerch_direct(s, a, lam_f, prec, max_terms)


def lerch_zeta(
    s: complex,
    a: float,
    lam: LambdaLike,
    prec: Precision = DEFAULT_PRECISION,
) -> complex:
    """Lerch zeta zeta_L(s, a, lambda) = sum_m e^(2*pi*i*m*lambda)(m+a)^(-s)."""
    return lerch_zeta_bounded(s, a, lam, prec)[0]


def _lerch_direct(
    s: complex, a: float, lam: float, prec: Precision, max_terms: int
) -> Tuple[complex, float]:
    """Direct series with accelerated oscillatory tail, Re s > 1 only.

    After the explicit sum over m < M the remainder T = sum_{m>=M} e(m lam) g(m),
    g(m) = (m+a)^(-s), is collapsed by L rounds of partial summation

        T_k = [e((M+k) lam) D^k g(M+k) + T_{k+1}] / (1 - u),   u = e(lam),

    where D is the backward difference.  The dropped T_L obeys the exact
    mean-value bound |D^L g(m)| <= |s|(|s|+1)...(|s|+L-1) (m-L+a)^(-sigma-L).
    """
    sigma = s.real
    if sigma <= 1.0 + 1e-3:
        raise UnsupportedRegionError(
            "lerch_zeta: direct series for non-rational lambda needs Re s > 1"
        )
    frac = lam - math.floor(lam)
    u = cmath.exp(2j * math.pi * frac)
    gap = abs(1.0 - u)
    depth = 6
    rise = 1.0
    for j in range(depth):
        rise *= abs(s) + j
    scale = a ** (-sigma)

    def tail_bound(m_cut: float) -> float:
        body = (m_cut + a - depth) ** (1.0 - sigma - depth)
        body *= 1.0 / (sigma + depth - 1.0) + 1.0 / (m_cut + a - depth)
        return rise * body / gap ** depth

    m_need = 64.0 + depth
    target = prec.rel_tol * scale
    while tail_bound(m_need) > target and m_need < max_terms:
        m_need *= 2.0
    if tail_bound(m_need) > target:
        raise AccuracyError(
            f"lerch_zeta: accelerated tail bound {tail_bound(m_need):.3e} "
            f"above tolerance within the {max_terms}-term budget",
            achieved=tail_bound(m_need),
        )
    m_cut = int(m_need)
    total = 0.0 + 0.0j
    block = 1 << 18
    for lo in range(0, m_cut, block):
        hi = min(m_cut, lo + block)
        mm = np.arange(lo, hi, dtype=float)
        phase_arg = np.mod(mm * frac, 1.0)
        terms = np.exp(2j * np.pi * phase_arg) * np.exp((-s) * np.log(mm + a))
        total += complex(terms.sum())
    # acceleration rounds
    inv = 1.0 / (1.0 - u)
    tail = 0.0 + 0.0j
    coef = inv
    for k in range(depth):
        diff = 0.0 + 0.0j
        sign = 1.0
        for j in range(k + 1):
            diff += sign * math.comb(k, j) * cmath.exp(
                -s * math.log(m_cut + k - j + a)
            )
            sign = -sign
        phase = cmath.exp(2j * math.pi * (((m_cut + k) * frac) % 1.0))
        tail += coef * phase * diff
        coef *= inv
    total += tail
    return total, tail_bound(float(m_cut))


def periodic_zeta(
    x: LambdaLike, s: complex, prec: Precision = DEFAULT_PRECISION
) -> complex:
    """Periodic zeta F(x, s) = sum_{m>=1} e^(2*pi*i*m*x) m^(-s).

    Rational x uses the exact reduction q^(-s) sum_{j=1}^{q} e(j p/q) zeta_H(s, j/q)
    (valid on the whole continued plane); other x needs Re s > 1.
    """
    s = complex(s)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        fr = _as_unit_fraction(Fraction(x))
        if fr == 0:
            return _hurwitz_scalar(s, 1.0, prec)[0]
        q, p = fr.denominator, fr.numerator
        if q > 1024:
            raise ResourceBudgetError(
                f"periodic_zeta: denominator limited to 1024, got {q}"
            )
        total = 0.0 + 0.0j
        for j in range(1, q + 1):
            root = cmath.exp(2j * math.pi * ((j * p) % q) / q)
            total += root * _hurwitz_scalar(s, j / q, prec)[0]
        return cmath.exp(-s * math.log(q)) * total
    xf = float(x)
    if abs(xf - round(xf)) < 1e-15:
        return _hurwitz_scalar(s, 1.0, prec)[0]
    val, _ = _lerch_direct(s, 1.0, xf, prec, 1 << 25)
    return cmath.exp(2j * math.pi * (xf - math.floor(xf))) * val


def functional_equation_residual(
    s: complex,
    a: LambdaLike,
    lam: LambdaLike = 1,
    prec: Precision = DEFAULT_PRECISION,
) -> float:
    """Scaled residual of the reflection formula relating 1-s to s.

    For lambda = 1 (Hurwitz case) the classical formula

        zeta_H(1-s, a) = Gamma(s) (2*pi)^(-s) *
            { e^(-pi*i*s/2) F(a, s) + e^(pi*i*s/2) F(-a, s) }

    with the periodic zeta F is checked; for rational lambda in (0, 1) the
    Lerch transformation formula

        zeta_L(1-s, a, lambda) = Gamma(s) (2*pi)^(-s) *
            { e^(pi*i*s/2 - 2*pi*i*a*lambda) zeta_L(s, lambda, 1-a)
            + e^(-pi*i*s/2 + 2*pi*i*a*(1-lambda)) zeta_L(s, 1-lambda, a) }

    is checked.  Returns |LHS - RHS| / max(|LHS|, |RHS|, 1e-6).  Requires
    0 < a < 1 and Re s > 1 so every series-side factor is evaluable.
    """
    s = complex(s)
    a_val = float(a)
    a_is_rat = isinstance(a, (int, Fraction)) and not isinstance(a, bool)
    if not (0.0 < a_val < 1.0):
        raise DomainError("functional_equation_residual needs 0 < a < 1")
    if s.real <= 1.0:
        raise DomainError("functional_equation_residual needs Re s > 1")
    if abs(s.imag) > 1e3:
        raise DomainError("functional_equation_residual supports |Im s| <= 1e3")
    lam_is_rat = isinstance(lam, (int, Fraction)) and not isinstance(lam, bool)
    if not lam_is_rat and abs(float(lam) - round(float(lam))) > 1e-15:
        raise UnsupportedRegionError(
            "functional_equation_residual needs rational lambda "
            "(pass a Fraction); the 1-s side has no convergent series otherwise"
        )
    lam_frac = _as_unit_fraction(Fraction(lam))

    log_pref = _lgamma_right(s) - s * math.log(2.0 * math.pi)
    if lam_frac == 0:
        lhs = _hurwitz_scalar(1.0 - s, a_val, prec)[0]
        f_plus = periodic_zeta(a if a_is_rat else a_val, s, prec)
        f_minus = periodic_zeta(1 - Fraction(a) if a_is_rat else 1.0 - a_val, s, prec)
        rhs = (
            cmath.exp(log_pref - 0.5j * math.pi * s) * f_plus
            + cmath.exp(log_pref + 0.5j * math.pi * s) * f_minus
        )
    else:
        lam_v = float(lam_frac)
        comp_a = 1 - Fraction(a) if a_is_rat else 1.0 - a_val
        lhs = lerch_zeta(1.0 - s, a_val, lam_frac, prec)
        term1 = cmath.exp(
            log_pref + 0.5j * math.pi * s - 2j * math.pi * a_val * lam_v
        ) * lerch_zeta(s, lam_v, comp_a, prec)
        term2 = cmath.exp(
            log_pref - 0.5j * math.pi * s + 2j * math.pi * a_val * (1.0 - lam_v)
        ) * lerch_zeta(s, 1.0 - lam_v, Fraction(a) if a_is_rat else a_val, prec)
        rhs = term1 + term2
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-6)


# ---------------------------------------------------------------------------
# Gamma modulus and generalized Euler constants

# B(2k) / (2k (2k-1)) for the Stirling series of log Gamma
_LGAM_COEF = tuple(
    float(bernoulli(2 * k) / (2 * k * (2 * k - 1))) for k in range(1, 16)
)


def _lgamma_right(z: complex) -> complex:
    """log Gamma on Re z > 0 (analytic branch), by shift + Stirling series."""
    shift = 0.0 + 0.0j
    while abs(z) < 24.0:
        shift -= cmath.log(z)
        z += 1.0
    zi = 1.0 / z
    zi2 = zi * zi
    ser = 0.0 + 0.0j
    for c in reversed(_LGAM_COEF):
        ser = ser * zi2 + c
    ser = ser * zi
    return (
        (z - 0.5) * cmath.log(z)
        - z
        + 0.5 * math.log(2.0 * math.pi)
        + ser
        + shift
    )


def gamma_complex(s: complex) -> complex:
    """Gamma(s) for Re s > 0 (sufficient for the reflection-formula checks)."""
    s = complex(s)
    if s.real <= 0.0:
        raise DomainError("gamma_complex is implemented for Re s > 0")
    return cmath.exp(_lgamma_right(s))


def log_abs_gamma(s: complex) -> float:
    """log |Gamma(s)| everywhere away from the poles 0, -1, -2, ..."""
    s = complex(s)
    if s.real >= 0.5:
        return _lgamma_right(s).real
    # reflection on the modulus: |Gamma(s)| = pi / (|sin(pi s)| |Gamma(1-s)|)
    if abs(s.imag) < _POLE_GUARD and abs(s.real - round(s.real)) < _POLE_GUARD:
        raise PoleError(
            "log_abs_gamma: pole at nonpositive integer",
            distance=abs(s.real - round(s.real)) + abs(s.imag),
        )
    x, y = s.real, s.imag
    ay = abs(y)
    # log |sin(pi s)| computed in a overflow-free form
    if ay > 1.0:
        log_sin = (
            math.pi * ay
            - math.log(2.0)
            + math.log(abs(1.0 - cmath.exp(-2.0 * math.pi * ay + 2j * math.pi * x)))
        )
    else:
        log_sin = math.log(abs(cmath.sin(math.pi * s)))
    return math.log(math.pi) - log_sin - _lgamma_right(1.0 - s).real


def gamma_abs(s: complex) -> float:
    """|Gamma(s)|; underflows to 0 gracefully for large |Im s|."""
    return math.exp(log_abs_gamma(s))


def gamma_envelope(sigma: float, t: float) -> float:
    """Asymptotic modulus envelope sqrt(2*pi) t^(sigma-1/2) e^(-pi t/2), t > 0."""
    if t <= 0:
        raise DomainError("gamma_envelope needs t > 0")
    return math.sqrt(2.0 * math.pi) * t ** (sigma - 0.5) * math.exp(-math.pi * t / 2.0)


def gen_euler_constant(a: float) -> float:
    """Generalized Euler constant gamma(a) = lim_M (sum_{m<=M} 1/(m+a) - log(M+a)).

    Computed digamma-style: shift a upward by unit steps, then the asymptotic
    series log x - 1/(2x) - sum_k B(2k)/(2k) x^(-2k); gamma(1) is Euler's
    constant and gamma(1/2) = gamma + 2 log 2.
    """
    if a <= 0:
        raise DomainError("gen_euler_constant needs a > 0")
    acc = 0.0
    x = float(a)
    while x < 16.0:
        acc += 1.0 / x
        x += 1.0
    x2 = 1.0 / (x * x)
    ser = 0.0
    for k in range(8, 0, -1):
        ser = ser * x2 + float(bernoulli(2 * k)) / (2 * k)
    ser *= x2
    psi_x = math.log(x) - 0.5 / x - ser
    return acc - psi_x
