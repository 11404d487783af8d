from __future__ import annotations

import random
from fractions import Fraction

import pytest

from fanodescent.coeffs import CoeffTable
from fanodescent.descent import SplitChernVector, projective_space, quadric
from fanodescent.exact import bernoulli_table
from fanodescent.theorems import (
    COVERED_BY_PROJECTIVE_M,
    COVERED_BY_PROJECTIVE_M_MINUS_1,
    COVERED_BY_RATIONAL_M_FOLDS,
    N_LOWER_GE_M,
    N_UPPER_GE_M,
    THM4,
    THM5,
    THM5_STRONG,
    CertificateError,
    check_hypotheses,
    check_thm4,
    check_thm5,
    hypothesis_threshold,
    max_m,
    proof_trace_thm4,
    proof_trace_thm5,
)


def test_thresholds():
    assert hypothesis_threshold(THM4, 3, 2) == 2
    assert hypothesis_threshold(THM5, 3, 1) == 5
    assert hypothesis_threshold(THM5, 4, 3) == Fraction(1, 6)
    assert hypothesis_threshold(THM5_STRONG, 4, 1) == 8
    with pytest.raises(ValueError):
        hypothesis_threshold("thm6", 2, 1)


# --- thm4 ---------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 11))
def test_thm4_projective_space_tight(n):
    report = check_thm4(projective_space(n).vector, n)
    assert report.passed
    assert all(row.margin == 0 for row in report.per_k)
    assert report.conclusions == frozenset({N_LOWER_GE_M, COVERED_BY_RATIONAL_M_FOLDS})


def test_thm4_projective_space_any_smaller_m():
    v = projective_space(8).vector
    for m in range(1, 9):
        assert check_thm4(v, m).passed


def test_thm4_degree_one_cover_flag():
    report = check_thm4(projective_space(4).vector, 4, degree_one_cover=True)
    assert COVERED_BY_PROJECTIVE_M in report.conclusions


def test_thm4_rejects_m_beyond_dimension():
    with pytest.raises(ValueError):
        check_thm4(projective_space(3).vector, 4)
    with pytest.raises(ValueError):
        check_thm4(projective_space(3).vector, 0)


def test_thm4_quadric_six_fails_at_k3():
    report = check_thm4(quadric(6).vector, 3)
    assert not report.passed
    assert report.conclusions == frozenset()
    margins = {row.k: row.margin for row in report.per_k}
    assert margins[1] == 2  # 6 >= 4
    assert margins[2] == 0  # 2 >= 2
    assert margins[3] == Fraction(-2, 3)  # 0 < 4/6


# --- thm5 ---------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 13))
def test_thm5_quadric_at_half_dimension(n):
    m = (n + 1) // 2
    report = check_thm5(quadric(n).vector, m)
    assert report.passed
    # k = 1 margin is (n+2) - (2m+1): 1 for even n, 0 for odd n.
    assert report.per_k[0].margin == (1 if n % 2 == 0 else 0)
    assert report.conclusions == frozenset(
        {N_UPPER_GE_M, COVERED_BY_RATIONAL_M_FOLDS, COVERED_BY_PROJECTIVE_M_MINUS_1}
    )
    if m + 1 <= n:
        assert not check_thm5(quadric(n).vector, m + 1).passed


def test_thm5_all_families_flag():
    report = check_thm5(quadric(4).vector, 2, all_families_degree_one=True)
    assert N_LOWER_GE_M in report.conclusions


@pytest.mark.parametrize("n", range(2, 13))
def test_thm5_strong_boundary(n):
    v = quadric(n).vector
    assert check_thm5(v, n // 2, strong=True).passed
    if n // 2 + 1 <= n:
        assert not check_thm5(v, n // 2 + 1, strong=True).passed


def test_thm5_strong_adds_projective_cover():
    report = check_thm5(quadric(6).vector, 3, strong=True)
    assert report.passed
    assert COVERED_BY_PROJECTIVE_M in report.conclusions


@pytest.mark.parametrize("n", range(2, 11))
def test_thm5_strong_projective_space_at_half(n):
    # n+1 >= 2m+2-2^k for all k >= 1 whenever 2m <= n+1.
    assert check_thm5(projective_space(n).vector, (n + 1) // 2, strong=True).passed


# --- max_m -------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 13))
def test_max_m_tables(n):
    assert max_m(projective_space(n).vector, THM4) == n
    assert max_m(quadric(n).vector, THM5) == (n + 1) // 2
    assert max_m(quadric(n).vector, THM5_STRONG) == n // 2


def test_max_m_zero_when_nothing_passes():
    v = SplitChernVector((Fraction(1),))
    assert max_m(v, THM4) == 0


def test_monotonicity_in_m():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 8)
        v = SplitChernVector(
            tuple(Fraction(rng.randint(-8, 12), rng.randint(1, 4)) for _ in range(n))
        )
        for theorem in (THM4, THM5, THM5_STRONG):
            passes = [check_hypotheses(v, m, theorem).passed for m in range(1, n + 1)]
            # once it fails it must keep failing upward
            assert all(a or not b for a, b in zip(passes, passes[1:]))


# --- certificates ---------------------------------------------------------------


def test_trace_thm4_frozen_levels():
    cert = proof_trace_thm4(projective_space(3).vector, 3)
    assert cert.mode == "threshold"
    assert cert.all_positive
    by_level = {lv.level: lv for lv in cert.per_level}
    assert by_level[2].dim_bound == 1  # -1 + 4 - 2
    assert by_level[1].t2ch2_bound == 2  # (3 - 1 + 2)/2
    cert2 = proof_trace_thm4(projective_space(2).vector, 2)
    assert cert2.per_level[0].c1_margin == Fraction(1, 2)  # -1 + (1 - 1/2)*3


@pytest.mark.parametrize("n", range(1, 11))
def test_trace_thm4_projective_all_levels(n):
    cert = proof_trace_thm4(projective_space(n).vector, n)
    assert cert.all_positive
    assert len(cert.per_level) == n - 1
    for lv in cert.per_level:
        assert lv.dim_bound == n - lv.level
        assert lv.t2ch2_bound == Fraction(n - lv.level + 2, 2)
        assert lv.t2ch2_asserted


@pytest.mark.parametrize("n", range(1, 11))
def test_trace_thm5_quadric_all_levels(n):
    m = (n + 1) // 2
    cert = proof_trace_thm5(quadric(n).vector, m)
    assert cert.all_positive
    for lv in cert.per_level:
        assert lv.dim_bound == 2 * m - 2 * lv.level - 1
        assert lv.c1_margin == 2 * m - 2 * lv.level - 1
        assert lv.t2ch2_bound == Fraction(2 * m - 2 * lv.level - 1, 2)
        assert lv.t2ch2_asserted == (lv.level + 1 < m)


def test_trace_thm5_frozen_values():
    # dim bound at (m, i) = (4, 2): -(2-1) + (2*4+1) - (2+1) - 2 = 3
    cert = proof_trace_thm5(quadric(7).vector, 4)
    by_level = {lv.level: lv for lv in cert.per_level}
    assert by_level[2].dim_bound == 3
    # t2 bound at (m, i) = (3, 1): (2*3 - 2 - 1)/2 = 3/2 > 1
    cert3 = proof_trace_thm5(quadric(5).vector, 3)
    assert cert3.per_level[0].t2ch2_bound == Fraction(3, 2)


def test_trace_thm5_strong_levels():
    v = quadric(8).vector
    cert = proof_trace_thm5(v, 4, strong=True)
    assert cert.theorem == THM5_STRONG
    for lv in cert.per_level:
        assert lv.dim_bound == 8 - 2 * lv.level
        assert lv.t2ch2_bound == 4 - lv.level
        assert lv.t2ch2_asserted
    # the final level sits exactly at the non-strict threshold
    assert cert.per_level[-1].t2ch2_bound == 1


def test_trace_requires_passing_gate():
    with pytest.raises(ValueError):
        proof_trace_thm4(quadric(6).vector, 3)


def test_trace_actual_mode_dominates_threshold_mode():
    # A vector strictly above the thresholds: actual-mode bounds must
    # dominate the threshold-mode ones at every level.
    m = 4
    scalars = tuple(
        hypothesis_threshold(THM4, m, k) + Fraction(1, k) for k in range(1, 7)
    )
    v = SplitChernVector(scalars)
    thr = proof_trace_thm4(v, m)
    act = proof_trace_thm4(v, m, at_actual=True)
    assert act.mode == "actual"
    for a, t in zip(act.per_level, thr.per_level):
        assert a.dim_bound >= t.dim_bound
        assert a.c1_margin >= t.c1_margin
        assert a.t2ch2_bound >= t.t2ch2_bound


def test_trace_actual_mode_equals_threshold_mode_on_tight_input():
    n = 6
    thr = proof_trace_thm4(projective_space(n).vector, n)
    act = proof_trace_thm4(projective_space(n).vector, n, at_actual=True)
    assert [
        (a.dim_bound, a.c1_margin, a.t2ch2_bound) for a in act.per_level
    ] == [(t.dim_bound, t.c1_margin, t.t2ch2_bound) for t in thr.per_level]


def test_trace_detects_corrupted_table():
    seed = bernoulli_table(2)
    seed[1] = -seed[1]
    bad = CoeffTable(seed)
    with pytest.raises(CertificateError) as excinfo:
        proof_trace_thm4(projective_space(5).vector, 5, table=bad)
    assert excinfo.value.level >= 1
    assert excinfo.value.quantity in {"dim_bound", "c1_margin", "t2ch2_bound"}


def test_trace_m_equals_one_is_trivially_positive():
    cert = proof_trace_thm4(projective_space(4).vector, 1)
    assert cert.per_level == ()
    assert cert.all_positive
