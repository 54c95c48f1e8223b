"""Tests for the multiple/Barnes zeta evaluators and lattice profiles."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaline import barnes as bz
from zetaline import zetacore as zc
from zetaline.errors import (
    DomainError,
    PoleError,
    ProfileCacheError,
    ResourceBudgetError,
    TruncationValidityError,
    UnsupportedRegionError,
)


# ---------------------------------------------------------------------------
# multi_hurwitz (equal weights)


def test_multi_rank_one_is_hurwitz():
    s = complex(2.5, 7.0)
    assert bz.multi_hurwitz(s, 0.7, 1) == zc.hurwitz_zeta(s, 0.7)


def test_multi_matches_cumulative_count_oracle():
    # rank 3: the number of lattice points with m1+m2+m3 = n is C(n+2,2),
    # obtainable independently as a double cumulative sum of ones
    s, a, r = complex(4.5, 0.0), 0.7, 3
    M = 4000
    counts = np.cumsum(np.cumsum(np.ones(M)))
    partial = float(np.sum(counts * (np.arange(M) + a) ** (-s.real)))
    got = bz.multi_hurwitz(s, a, r)
    # integral bound on the dropped tail: sum_{n>=M} C(n+2,2) (n+a)^-sigma
    tail = (M + 2) ** 2 / 2.0 * (M + a) ** (1 - s.real) / (s.real - 3.0) * 1.5
    assert abs(got.imag) < 1e-12
    assert abs(got.real - partial) <= tail
    assert tail < 2e-4  # the check is actually sharp


def test_multi_pole_guard():
    for r in (1, 2, 3):
        for k in range(1, r + 1):
            with pytest.raises(PoleError):
                bz.multi_hurwitz(complex(k, 0.0), 0.5, r)


def test_multi_line_matches_scalar():
    ts = np.linspace(1.0, 60.0, 241)
    row = bz.multi_hurwitz_line(1.75, 0.7, 2, ts)
    for idx in (0, 120, 240):
        want = bz.multi_hurwitz(complex(1.75, ts[idx]), 0.7, 2)
        assert abs(row[idx] - want) <= 1e-10 * abs(want)


# ---------------------------------------------------------------------------
# barnes_direct


def brute_box_sum(s, a, w, m_cut):
    grids = np.meshgrid(*[np.arange(m_cut) for _ in w], indexing="ij")
    vals = a + sum(wi * g for wi, g in zip(w, grids))
    return complex(np.sum(np.exp(-s * np.log(vals.ravel()))))


def test_direct_matches_brute_sum_with_tail_interval():
    s, a, w = complex(4.5, 2.0), 0.7, (1.0, math.sqrt(2.0))
    got, est = bz.barnes_direct(s, a, w)
    m_cut = 800
    partial = brute_box_sum(s, a, w, m_cut)
    # everything outside the box is positive-measure controlled by an integral
    tail = 6.0 * (m_cut * min(w)) ** (2 - s.real)
    assert abs(got - partial) <= tail
    assert est < 1e-10


def test_direct_agrees_with_binomial_collapse():
    # equal weights: entirely independent evaluation route
    for r in (1, 2, 3, 4):
        s = complex(r + 2.5, 3.0)
        v_direct, est = bz.barnes_direct(s, 0.7, (1.0,) * r)
        v_multi = bz.multi_hurwitz(s, 0.7, r)
        assert abs(v_direct - v_multi) <= max(1e-11 * abs(v_multi), 1e-13)


def test_direct_homogeneity():
    # zeta_r(s, c a, c w) = c^(-s) zeta_r(s, a, w)
    s, a, w, c = complex(3.7, 4.0), 0.6, (1.0, 0.8), 1.9
    v1, _ = bz.barnes_direct(s, c * a, tuple(c * x for x in w))
    v2, _ = bz.barnes_direct(s, a, w)
    scale = np.exp(-s * np.log(c))
    assert abs(v1 - scale * v2) <= 1e-10 * abs(v1)


def test_direct_permutation_invariance():
    s, a = complex(3.4, 1.5), 0.9
    v1, _ = bz.barnes_direct(s, a, (0.5, 1.0, 1.7))
    v2, _ = bz.barnes_direct(s, a, (1.7, 0.5, 1.0))
    assert abs(v1 - v2) <= 1e-10 * abs(v1)


def test_direct_region_guard():
    with pytest.raises(UnsupportedRegionError):
        bz.barnes_direct(complex(2.05, 1.0), 0.7, (1.0, 1.0))
    with pytest.raises(DomainError):
        bz.barnes_direct(complex(4.0, 0.0), -0.5, (1.0, 1.0))


# ---------------------------------------------------------------------------
# lattice profiles


def test_profile_counts_equal_weights():
    p = bz.build_lattice_profile(0.3, (1.0, 1.0), 2.0)
    assert p.counts.tolist() == [1, 2, 3, 2, 1]
    assert p.total == 9
    assert np.all(np.diff(p.values) > 0)


def test_profile_commensurate_collapse():
    # w = (1, 2): values a + i + 2j over 0..10 squared collapse to 31 levels
    p = bz.build_lattice_profile(0.5, (1.0, 2.0), 10.0)
    assert p.total == 121
    assert p.values.size == 31


def test_profile_generic_weights_do_not_collapse():
    p = bz.build_lattice_profile(0.5, (1.0, math.sqrt(2.0)), 9.0)
    assert p.total == 100
    assert p.values.size == 100


def test_profile_budget():
    with pytest.raises(ResourceBudgetError):
        bz.build_lattice_profile(0.5, (1.0, math.e, math.pi), 2000.0, budget=10**6)


def test_profile_cache_round_trip(tmp_path):
    p = bz.build_lattice_profile(0.7, (1.0, math.sqrt(2.0)), 30.0)
    path = tmp_path / "box.mzlp"
    bz.save_profile(p, path)
    q = bz.load_profile(path)
    assert q.values.tobytes() == p.values.tobytes()
    assert q.counts.tobytes() == p.counts.tobytes()
    assert (q.r, q.a, q.w, q.x) == (p.r, p.a, p.w, p.x)


def test_profile_cache_rejects_corruption(tmp_path):
    p = bz.build_lattice_profile(0.7, (1.0,), 5.0)
    path = tmp_path / "box.mzlp"
    bz.save_profile(p, path)
    raw = path.read_bytes()
    (tmp_path / "magic.mzlp").write_bytes(b"XXXX" + raw[4:])
    with pytest.raises(ProfileCacheError):
        bz.load_profile(tmp_path / "magic.mzlp")
    (tmp_path / "short.mzlp").write_bytes(raw[:-8])
    with pytest.raises(ProfileCacheError):
        bz.load_profile(tmp_path / "short.mzlp")
    with pytest.raises(ProfileCacheError):
        bz.load_profile(tmp_path / "missing.mzlp")


# ---------------------------------------------------------------------------
# barnes_truncated


def test_truncated_overlaps_direct():
    pol = bz.TruncationPolicy()
    for r, w in ((1, (1.0,)), (2, (1.0, 2.0)), (2, (1.0, math.sqrt(2.0)))):
        sigma = r + 0.4
        for t in (6.0, 18.0):
            x = pol.x_for(t)
            s = complex(sigma, t)
            vd, _ = bz.barnes_direct(s, 0.7, w)
            vt, scale = bz.barnes_truncated(s, 0.7, w, x)
            assert abs(vd - vt) <= 10.0 * scale


def test_truncated_validity_window():
    with pytest.raises(TruncationValidityError):
        bz.barnes_truncated(complex(2.5, 50.0), 0.7, (1.0, 1.0), 10.0)


def test_truncated_pole_guard():
    with pytest.raises(PoleError):
        bz.barnes_truncated(complex(2.0, 0.0), 0.7, (1.0, 1.0), 10.0)


def test_truncated_line_matches_scalar():
    ts = np.array([3.0, 11.0, 19.5])
    x = 25.0
    w = (1.0, 1.5)
    prof = bz.build_lattice_profile(0.7, w, x)
    row, _ = bz.barnes_truncated_line(1.5, 0.7, w, ts, x=x, profile=prof)
    for i, t in enumerate(ts):
        want, _ = bz.barnes_truncated(complex(1.5, t), 0.7, w, x, profile=prof)
        assert abs(row[i] - want) <= 1e-11 * abs(want)


def test_truncated_line_default_x_from_policy():
    ts = np.linspace(1.0, 40.0, 17)
    row, scale = bz.barnes_truncated_line(1.5, 0.7, (1.0, 1.0), ts)
    assert row.shape == (17,)
    assert scale == pytest.approx(40.0 ** (2 - 1 - 1.5), rel=1e-12)


def test_truncated_profile_mismatch_rejected():
    prof = bz.build_lattice_profile(0.7, (1.0, 1.0), 10.0)
    with pytest.raises(DomainError):
        bz.barnes_truncated(complex(2.5, 3.0), 0.9, (1.0, 1.0), 10.0, profile=prof)


def test_truncated_reruns_bit_identical():
    ts = np.linspace(1.0, 30.0, 301)
    r1, _ = bz.barnes_truncated_line(1.25, 0.7, (1.0, 2.0), ts)
    r2, _ = bz.barnes_truncated_line(1.25, 0.7, (1.0, 2.0), ts)
    assert r1.tobytes() == r2.tobytes()


# ---------------------------------------------------------------------------
# structural properties


@settings(max_examples=25, deadline=None)
@given(
    a=st.floats(min_value=0.2, max_value=2.0),
    scale=st.floats(min_value=0.5, max_value=3.0),
    t=st.floats(min_value=-10.0, max_value=10.0),
)
def test_homogeneity_property(a, scale, t):
    s = complex(3.6, t)
    w = (1.0, 1.3)
    v1, _ = bz.barnes_direct(s, scale * a, tuple(scale * x for x in w))
    v2, _ = bz.barnes_direct(s, a, w)
    pref = np.exp(-s * np.log(scale))
    assert abs(v1 - pref * v2) <= 1e-9 * max(abs(v1), 1e-12)


@settings(max_examples=25, deadline=None)
@given(
    x=st.floats(min_value=0.0, max_value=12.0),
    w2=st.floats(min_value=0.3, max_value=3.0),
)
def test_profile_total_is_exact_power(x, w2):
    p = bz.build_lattice_profile(0.4, (1.0, w2), x)
    assert p.total == (int(math.floor(x)) + 1) ** 2
