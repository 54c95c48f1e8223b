"""Barnes multiple zeta functions and their truncated representations.

Two families are implemented.

* ``multi_hurwitz``: the equal-weight multiple sum
  ``zeta_r(s, a) = sum_{m1..mr>=0} (a + m1 + ... + mr)^(-s)``, collapsed
  exactly through the binomial lattice count to
  ``sum_{j<r} p_{r,j}(a) zeta_H(s - j, a)`` with the reduction coefficients
  from :mod:`zetaline.combinatorics`.  This form inherits the full analytic
  continuation of the Hurwitz zeta (poles at s = 1, ..., r).

* ``barnes_direct`` / ``barnes_truncated``: general positive weights ``w``.
  The direct evaluator needs ``Re s > r + 0.1`` and collapses the lattice one
  coordinate at a time: level j holds an asymptotic expansion
  ``F_j(y) ~ sum_c coef_c y^(-(s+c))`` composed through Euler-Maclaurin, the
  explicit window below the expansion's validity threshold recurses, and the
  infinite tail of each window is an exact Hurwitz power sum.  The truncated
  evaluator sums the finite box ``{0..floor(x)}^r`` (through a compressed
  ``LatticeProfile``) and adds the alternating boundary corrections

      - sum_{E nonempty} (-1)^(#E) (a + x*sum_{e in E} w_e)^(r-s)
        / ((s-1)...(s-r) w_1...w_r),

  which approximates the full sum with error O(x^(r-1-Re s)) as long as
  ``|t| <= 2*pi*x / c_factor`` (the policy window).
"""

from __future__ import annotations

import cmath
import math
import struct
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

import numpy as np

from .combinatorics import bernoulli, reduction_coefficients
from .errors import (
    DomainError,
    PoleError,
    ProfileCacheError,
    ResourceBudgetError,
    TruncationValidityError,
    UnsupportedRegionError,
)
from .zetacore import DEFAULT_PRECISION, Precision, _hurwitz_scalar, hurwitz_line_batch

__all__ = [
    "MAX_RANK",
    "TruncationPolicy",
    "LatticeProfile",
    "build_lattice_profile",
    "save_profile",
    "load_profile",
    "multi_hurwitz",
    "multi_hurwitz_line",
    "barnes_direct",
    "barnes_truncated",
    "barnes_truncated_line",
]

MAX_RANK = 16

_POLE_GUARD = 1e-8
_PROFILE_MAGIC = b"MZLP"
_PROFILE_VERSION = 1


def _check_weights(w: Sequence[float]) -> Tuple[float, ...]:
    w = tuple(float(x) for x in w)
    if not (1 <= len(w) <= MAX_RANK):
        raise DomainError(f"weights must have rank 1..{MAX_RANK}, got {len(w)}")
    if any(x <= 0 for x in w):
        raise DomainError(f"weights must be positive, got {w}")
    return w


def _check_pole(s: complex, r: int) -> None:
    for k in range(1, r + 1):
        if abs(s - k) < _POLE_GUARD:
            raise PoleError(
                f"rank-{r} multiple zeta has a pole at s = {k}",
                distance=abs(s - k),
            )


# ---------------------------------------------------------------------------
# equal weights: exact binomial collapse


def multi_hurwitz(
    s: complex, a: float, r: int, prec: Precision = DEFAULT_PRECISION
) -> complex:
    """zeta_r(s, a) = sum_{j=0}^{r-1} p_{r,j}(a) zeta_H(s - j, a)."""
    s = complex(s)
    if a <= 0:
        raise DomainError(f"multi_hurwitz needs a > 0, got a={a}")
    if not (1 <= r <= MAX_RANK):
        raise DomainError(f"multi_hurwitz supports rank 1..{MAX_RANK}, got {r}")
    _check_pole(s, r)
    table = reduction_coefficients(r, a)
    total = 0.0 + 0.0j
    for j, coef in enumerate(table.coeffs):
        cf = float(coef)
        if cf == 0.0:
            continue
        total += cf * _hurwitz_scalar(s - j, a, prec)[0]
    return total


def multi_hurwitz_line(
    sigma: float,
    a: float,
    r: int,
    ts: np.ndarray,
    prec: Precision = DEFAULT_PRECISION,
    n_terms: int | None = None,
) -> np.ndarray:
    """zeta_r(sigma + i t, a) on a t-grid; all j-shifts share one phase matrix."""
    if a <= 0:
        raise DomainError(f"multi_hurwitz_line needs a > 0, got a={a}")
    if not (1 <= r <= MAX_RANK):
        raise DomainError(f"multi_hurwitz_line supports rank 1..{MAX_RANK}, got {r}")
    ts = np.asarray(ts, dtype=float)
    if ts.size and float(np.min(np.abs(ts))) < _POLE_GUARD * 2:
        for k in range(1, r + 1):
            if abs(sigma - k) < _POLE_GUARD:
                raise PoleError(
                    f"rank-{r} multiple zeta has a pole at s = {k}",
                    distance=abs(sigma - k),
                )
    table = reduction_coefficients(r, a)
    coefs = [float(c) for c in table.coeffs]
    rows = hurwitz_line_batch(
        [sigma - j for j in range(r)], a, ts, prec, n_terms
    )
    out = np.zeros(ts.shape, dtype=complex)
    for j in range(r):
        if coefs[j] != 0.0:
            out += coefs[j] * rows[j]
    return out


# ---------------------------------------------------------------------------
# general weights, direct evaluation (Re s > r)

_EXP_DEPTH = 10  # Bernoulli orders per composition level
_EXP_CAP = 24  # highest kept power shift c in y^(-(s+c))
_ATOM_BUDGET = 2_000_000


def _level_one_expansion(s: complex, w1: float) -> Dict[int, complex]:
    """Large-y series of F_1(y) = w1^(-s) zeta_H(s, y/w1) in powers y^(-(s+c))."""
    exp_: Dict[int, complex] = {}
    exp_[-1] = 1.0 / ((s - 1.0) * w1)
    exp_[0] = 0.5 + 0.0j
    poch = s
    for k in range(1, _EXP_DEPTH + 1):
        c = 2 * k - 1
        if c > _EXP_CAP:
            break
        bf = float(bernoulli(2 * k) / math.factorial(2 * k))
        exp_[c] = bf * poch * w1 ** (2 * k - 1)
        poch = poch * (s + (2 * k - 1)) * (s + 2 * k)
    return exp_


def _compose_expansion(
    prev: Dict[int, complex], s: complex, wj: float
) -> Dict[int, complex]:
    """Asymptotic series of G(y) = sum_{m>=0} F(y + m wj) from that of F."""
    out: Dict[int, complex] = {}

    def add(c: int, v: complex) -> None:
        if c <= _EXP_CAP:
            out[c] = out.get(c, 0.0 + 0.0j) + v

    for c, coef in prev.items():
        q = s + c
        add(c - 1, coef / ((q - 1.0) * wj))
        add(c, 0.5 * coef)
        poch = q
        for k in range(1, _EXP_DEPTH + 1):
            cc = c + 2 * k - 1
            if cc > _EXP_CAP:
                break
            bf = float(bernoulli(2 * k) / math.factorial(2 * k))
            add(cc, coef * bf * poch * wj ** (2 * k - 1))
            poch = poch * (q + (2 * k - 1)) * (q + 2 * k)
    return out


@dataclass
class _DirectState:
    s: complex
    w: Tuple[float, ...]
    prec: Precision
    y_req: float
    expansions: list  # expansions[j] = series of F_{j+1}
    atoms: int = 0
    err: float = 0.0

    def spend(self, n: int = 1) -> None:
        self.atoms += n
        if self.atoms > _ATOM_BUDGET:
            raise ResourceBudgetError(
                f"barnes_direct exceeded the {_ATOM_BUDGET} elementary-evaluation budget"
            )


def _expansion_eval(st: _DirectState, level: int, y: float) -> complex:
    """Evaluate F_level via its asymptotic series (valid for y >= y_req)."""
    exp_ = st.expansions[level - 1]
    s = st.s
    logy = math.log(y)
    total = 0.0 + 0.0j
    top = 0.0
    for c, coef in sorted(exp_.items()):
        term = coef * cmath.exp(-(s + c) * logy)
        total += term
        if c >= _EXP_CAP - 1:
            top = max(top, abs(term))
    st.err += 2.0 * top
    st.spend()
    return total


def _tail_power_sums(st: _DirectState, level: int, base_y: float, wj: float) -> complex:
    """sum_{m>=0} F_level(base_y + m wj) via exact Hurwitz power sums."""
    exp_ = st.expansions[level - 1]
    s = st.s
    total = 0.0 + 0.0j
    top = 0.0
    logw = math.log(wj)
    for c, coef in sorted(exp_.items()):
        hv, he = _hurwitz_scalar(s + c, base_y / wj, st.prec)
        term = coef * cmath.exp(-(s + c) * logw) * hv
        total += term
        st.err += abs(he * term)
        if c >= _EXP_CAP - 1:
            top = max(top, abs(term))
        st.spend()
    st.err += 2.0 * top
    return total


def _F(st: _DirectState, level: int, y: float) -> complex:
    if level == 1:
        w1 = st.w[0]
        hv, he = _hurwitz_scalar(st.s, y / w1, st.prec)
        val = cmath.exp(-st.s * math.log(w1)) * hv
        st.err += abs(he * val)
        st.spend()
        return val
    if y >= st.y_req:
        return _expansion_eval(st, level, y)
    wj = st.w[level - 1]
    k_cut = max(0, int(math.ceil((st.y_req - y) / wj)))
    total = 0.0 + 0.0j
    for m in range(k_cut):
        total += _F(st, level - 1, y + m * wj)
    total += _tail_power_sums(st, level - 1, y + k_cut * wj, wj)
    return total


def barnes_direct(
    s: complex,
    a: float,
    w: Sequence[float],
    prec: Precision = DEFAULT_PRECISION,
) -> Tuple[complex, float]:
    """Barnes zeta zeta_r(s, a, w) for Re s > r + 0.1, with an error estimate.

    The estimate combines the Hurwitz remainders of every atom with twice the
    magnitude of the last kept expansion order at each use site.
    """
    s = complex(s)
    w = _check_weights(w)
    r = len(w)
    if a <= 0:
        raise DomainError(f"barnes_direct needs a > 0, got a={a}")
    if s.real <= r + 0.1:
        raise UnsupportedRegionError(
            f"barnes_direct needs Re s > r + 0.1 = {r + 0.1}; "
            "use barnes_truncated for smaller real parts"
        )
    wmax = max(w)
    y_req = 0.75 * (abs(s.imag) + abs(s.real) + 2 * _EXP_CAP + 4.0) * wmax
    expansions = [_level_one_expansion(s, w[0])]
    for j in range(1, r):
        expansions.append(_compose_expansion(expansions[-1], s, w[j]))
    st = _DirectState(s=s, w=w, prec=prec, y_req=y_req, expansions=expansions)
    val = _F(st, r, a)
    return val, st.err


# ---------------------------------------------------------------------------
# lattice profiles and the truncated representation


@dataclass(frozen=True)
class LatticeProfile:
    """Compressed multiset of box-lattice values a + m.w, m in {0..floor(x)}^r.

    values are strictly increasing; counts[i] is the number of lattice points
    sharing values[i] (within relative 1e-12); total == (floor(x)+1)^r.
    """

    r: int
    a: float
    w: Tuple[float, ...]
    x: float
    values: np.ndarray
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def _compress(values: np.ndarray, counts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    order = np.argsort(values, kind="stable")
    values = values[order]
    counts = counts[order]
    if values.size == 0:
        return values, counts
    keep = np.empty(values.size, dtype=bool)
    keep[0] = True
    np.greater(np.diff(values), 1e-12 * values[1:], out=keep[1:])
    idx = np.flatnonzero(keep)
    grouped = np.add.reduceat(counts, idx)
    return values[idx], grouped


def build_lattice_profile(
    a: float,
    w: Sequence[float],
    x: float,
    budget: int = 100_000_000,
) -> LatticeProfile:
    """Group the box lattice one coordinate at a time, compressing en route."""
    w = _check_weights(w)
    if a <= 0:
        raise DomainError(f"build_lattice_profile needs a > 0, got a={a}")
    if x < 0:
        raise DomainError(f"build_lattice_profile needs x >= 0, got x={x}")
    k = int(math.floor(x)) + 1
    if k ** len(w) > budget:
        raise ResourceBudgetError(
            f"lattice profile would hold {k ** len(w)} points, budget is {budget}"
        )
    values = np.array([a], dtype=float)
    counts = np.array([1], dtype=np.uint64)
    for wj in w:
        if values.size * k > budget:
            raise ResourceBudgetError(
                f"intermediate lattice profile exceeds the {budget}-point budget"
            )
        offs = wj * np.arange(k, dtype=float)
        values = np.add.outer(values, offs).ravel()
        counts = np.repeat(counts, k)
        values, counts = _compress(values, counts)
    return LatticeProfile(
        r=len(w), a=a, w=w, x=float(x), values=values, counts=counts
    )


def save_profile(profile: LatticeProfile, path) -> None:
    """Write the MZLP binary layout (little-endian, interleaved value/count)."""
    try:
        with open(path, "wb") as fh:
            fh.write(_PROFILE_MAGIC)
            fh.write(struct.pack("<II", _PROFILE_VERSION, profile.r))
            fh.write(struct.pack("<d", profile.a))
            fh.write(struct.pack(f"<{profile.r}d", *profile.w))
            fh.write(struct.pack("<d", profile.x))
            fh.write(struct.pack("<Q", profile.values.size))
            inter = np.empty(profile.values.size * 2, dtype=np.float64)
            inter[0::2] = profile.values
            inter[1::2] = profile.counts.astype(np.uint64).view(np.float64)
            fh.write(inter.astype("<f8").tobytes())
    except OSError as exc:
        raise ProfileCacheError(f"cannot write profile cache: {exc}") from exc


def load_profile(path) -> LatticeProfile:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ProfileCacheError(f"cannot read profile cache: {exc}") from exc
    if len(raw) < 4 or raw[:4] != _PROFILE_MAGIC:
        raise ProfileCacheError("profile cache: bad magic")
    off = 4
    try:
        version, r = struct.unpack_from("<II", raw, off)
        off += 8
        if version != _PROFILE_VERSION:
            raise ProfileCacheError(
                f"profile cache: unsupported version {version}"
            )
        (a,) = struct.unpack_from("<d", raw, off)
        off += 8
        w = struct.unpack_from(f"<{r}d", raw, off)
        off += 8 * r
        (x,) = struct.unpack_from("<d", raw, off)
        off += 8
        (n,) = struct.unpack_from("<Q", raw, off)
        off += 8
        need = n * 16
        if len(raw) - off != need:
            raise ProfileCacheError(
                f"profile cache: expected {need} payload bytes, got {len(raw) - off}"
            )
        inter = np.frombuffer(raw, dtype="<f8", offset=off, count=2 * n)
        values = inter[0::2].copy()
        counts = inter[1::2].copy().view(np.uint64)
    except struct.error as exc:
        raise ProfileCacheError(f"profile cache: truncated header: {exc}") from exc
    return LatticeProfile(r=r, a=a, w=tuple(w), x=x, values=values, counts=counts)


@dataclass(frozen=True)
class TruncationPolicy:
    """x(t) = c_factor * |t| / (2 pi); validity demands |t| <= 2 pi x / c_factor."""

    c_factor: float = 2.0 * math.pi

    def __post_init__(self):
        if self.c_factor <= 0:
            raise DomainError("TruncationPolicy.c_factor must be positive")

    def x_for(self, t_max: float) -> float:
        return max(1.0, self.c_factor * abs(t_max) / (2.0 * math.pi))

    def t_limit(self, x: float) -> float:
        return 2.0 * math.pi * x / self.c_factor


def _check_truncation_window(
    policy: TruncationPolicy, x: float, t_max: float
) -> None:
    if abs(t_max) > policy.t_limit(x) * (1.0 + 1e-9):
        raise TruncationValidityError(
            f"truncated representation valid only for |t| <= {policy.t_limit(x):.6g} "
            f"at x = {x:.6g}; got |t| = {abs(t_max):.6g}"
        )


def _boundary_corrections(
    s_arr: np.ndarray, a: float, w: Tuple[float, ...], x: float
) -> np.ndarray:
    """- sum over nonempty subsets E of (-1)^#E (a + x sum w_E)^(r-s) / denom."""
    r = len(w)
    denom = np.ones_like(s_arr)
    for k in range(1, r + 1):
        denom = denom * (s_arr - k)
    denom = denom * math.prod(w)
    out = np.zeros_like(s_arr)
    for mask in range(1, 1 << r):
        ssum = sum(w[i] for i in range(r) if mask >> i & 1)
        sign = -1.0 if bin(mask).count("1") % 2 else 1.0
        base = a + x * ssum
        out += (-sign) * np.exp((r - s_arr) * math.log(base))
    return out / denom


def barnes_truncated(
    s: complex,
    a: float,
    w: Sequence[float],
    x: float,
    policy: TruncationPolicy | None = None,
    profile: LatticeProfile | None = None,
) -> Tuple[complex, float]:
    """Box sum to floor(x) plus boundary corrections; error scale x^(r-1-sigma)."""
    s = complex(s)
    w = _check_weights(w)
    r = len(w)
    if policy is None:
        policy = TruncationPolicy()
    _check_pole(s, r)
    _check_truncation_window(policy, x, s.imag)
    if profile is None:
        profile = build_lattice_profile(a, w, x)
    else:
        _check_profile_match(profile, a, w, x)
    logv = np.log(profile.values)
    weights = profile.counts.astype(float)
    terms = weights * np.exp((-s) * logv)
    box = complex(terms.sum())
    corr = _boundary_corrections(np.array([s], dtype=complex), a, w, x)[0]
    err = x ** (r - 1 - s.real)
    return box + corr, err


def _check_profile_match(
    profile: LatticeProfile, a: float, w: Tuple[float, ...], x: float
) -> None:
    if (
        profile.r != len(w)
        or abs(profile.a - a) > 1e-12 * max(1.0, abs(a))
        or any(abs(pw - ww) > 1e-12 * ww for pw, ww in zip(profile.w, w))
        or abs(profile.x - x) > 1e-9 * max(1.0, x)
    ):
        raise DomainError(
            "supplied LatticeProfile does not match (a, w, x) of this evaluation"
        )


def barnes_truncated_line(
    sigma: float,
    a: float,
    w: Sequence[float],
    ts: np.ndarray,
    x: float | None = None,
    policy: TruncationPolicy | None = None,
    profile: LatticeProfile | None = None,
) -> Tuple[np.ndarray, float]:
    """Truncated Barnes values on a t-grid sharing one lattice profile.

    When x is omitted it is fixed from max |t| through the policy, so a whole
    mean-square run reuses a single box.
    """
    w = _check_weights(w)
    r = len(w)
    ts = np.asarray(ts, dtype=float)
    if policy is None:
        policy = TruncationPolicy()
    t_max = float(np.max(np.abs(ts))) if ts.size else 0.0
    if x is None:
        x = policy.x_for(t_max)
    _check_truncation_window(policy, x, t_max)
    for k in range(1, r + 1):
        if abs(sigma - k) < _POLE_GUARD and (ts.size and np.min(np.abs(ts)) < 1e-6):
            raise PoleError(f"pole at s = {k}", distance=abs(sigma - k))
    if profile is None:
        profile = build_lattice_profile(a, w, x)
    else:
        _check_profile_match(profile, a, w, x)
    logv = np.log(profile.values)
    amp = profile.counts.astype(float) * np.exp(-sigma * logv)
    out = np.empty(ts.size, dtype=complex)
    chunk = max(1, 4_000_000 // max(logv.size, 1))
    for lo in range(0, ts.size, chunk):
        hi = min(ts.size, lo + chunk)
        phases = np.exp((-1j) * np.multiply.outer(ts[lo:hi], logv))
        out[lo:hi] = (phases * amp).sum(axis=1)
    s_arr = sigma + 1j * ts
    out += _boundary_corrections(s_arr, a, w, x)
    err = x ** (r - 1 - sigma)
    return out, err
