"""Hypothesis gates and exact proof-trace certificates.

Two families of positivity hypotheses on a split Chern vector are
checked exactly, degree by degree:

* gate ``thm4``:  r_k >= (m+1)/k!            for 1 <= k <= m
* gate ``thm5``:  r_k >= (2m+1-2^k)/k!       for 1 <= k <= m
* gate ``thm5_strong``:  r_k >= (2m+2-2^k)/k!

A passing gate entails conclusions about chains of minimal families and
coverings, reported as flags.  The certificate replays the inequality
chain behind those conclusions level by level, computing every bound
twice: once through the full coefficient sums and once through the
simplified closed expressions; the two routes must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .coeffs import CoeffTable, shared_table
from .descent import SplitChernVector

__all__ = [
    "THM4",
    "THM5",
    "THM5_STRONG",
    "THEOREMS",
    "N_LOWER_GE_M",
    "N_UPPER_GE_M",
    "COVERED_BY_RATIONAL_M_FOLDS",
    "COVERED_BY_PROJECTIVE_M_MINUS_1",
    "COVERED_BY_PROJECTIVE_M",
    "MarginRow",
    "HypothesisReport",
    "hypothesis_threshold",
    "check_thm4",
    "check_thm5",
    "check_hypotheses",
    "max_m",
    "CertificateError",
    "CertificateLevel",
    "Certificate",
    "proof_trace_thm4",
    "proof_trace_thm5",
]

THM4 = "thm4"
THM5 = "thm5"
THM5_STRONG = "thm5_strong"
THEOREMS = (THM4, THM5, THM5_STRONG)

N_LOWER_GE_M = "N_lower_ge_m"
N_UPPER_GE_M = "N_upper_ge_m"
COVERED_BY_RATIONAL_M_FOLDS = "covered_by_rational_m_folds"
COVERED_BY_PROJECTIVE_M_MINUS_1 = "covered_by_projective_m_minus_1"
COVERED_BY_PROJECTIVE_M = "covered_by_projective_m"


def hypothesis_threshold(theorem: str, m: int, k: int) -> Fraction:
    """The lower bound the gate demands of r_k at level m."""
    if theorem == THM4:
        return Fraction(m + 1, factorial(k))
    if theorem == THM5:
        return Fraction(2 * m + 1 - 2**k, factorial(k))
    if theorem == THM5_STRONG:
        return Fraction(2 * m + 2 - 2**k, factorial(k))
    raise ValueError(f"unknown theorem gate {theorem!r}; choose from {THEOREMS}")


@dataclass(frozen=True)
class MarginRow:
    k: int
    threshold: Fraction
    actual: Fraction

    @property
    def margin(self) -> Fraction:
        return self.actual - self.threshold


@dataclass(frozen=True)
class HypothesisReport:
    theorem: str
    m: int
    per_k: tuple[MarginRow, ...]
    passed: bool
    conclusions: frozenset[str]


def _margin_rows(v: SplitChernVector, m: int, theorem: str) -> tuple[MarginRow, ...]:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m > v.dim:
        raise ValueError(
            f"m = {m} exceeds the manifold dimension {v.dim}: the degree-k "
            "Chern scalar vanishes for k > dim, so a positive threshold "
            "there can never be met"
        )
    return tuple(
        MarginRow(k, hypothesis_threshold(theorem, m, k), v.ch(k))
        for k in range(1, m + 1)
    )


def check_thm4(
    v: SplitChernVector, m: int, degree_one_cover: bool = False
) -> HypothesisReport:
    """Gate thm4: r_k >= (m+1)/k! for every k <= m.

    On pass the chain invariant N is at least m for every chain (flag
    ``N_lower_ge_m``) and the manifold is covered by rational m-folds.
    If the caller additionally asserts a cover by degree-1 rational
    curves, the cover upgrades to projective m-spaces.
    """
    per_k = _margin_rows(v, m, THM4)
    passed = all(row.margin >= 0 for row in per_k)
    conclusions: set[str] = set()
    if passed:
        conclusions = {N_LOWER_GE_M, COVERED_BY_RATIONAL_M_FOLDS}
        if degree_one_cover:
            conclusions.add(COVERED_BY_PROJECTIVE_M)
    return HypothesisReport(THM4, m, per_k, passed, frozenset(conclusions))


def check_thm5(
    v: SplitChernVector,
    m: int,
    strong: bool = False,
    all_families_degree_one: bool = False,
) -> HypothesisReport:
    """Gate thm5: r_k >= (2m+1-2^k)/k! for every k <= m (2m+2 when strong).

    The gate presumes the manifold is covered by degree-1 rational
    curves in the chosen polarization; that is part of invoking it and
    cannot be checked in the scalar model.  On pass: some chain reaches
    depth m (``N_upper_ge_m``), plus coverings by rational m-folds and
    projective (m-1)-spaces; the strong thresholds upgrade the cover to
    projective m-spaces.  ``N_lower_ge_m`` needs the further caller
    assertion that every minimal family parametrizes degree-1 curves.
    """
    theorem = THM5_STRONG if strong else THM5
    per_k = _margin_rows(v, m, theorem)
    passed = all(row.margin >= 0 for row in per_k)
    conclusions: set[str] = set()
    if passed:
        conclusions = {
            N_UPPER_GE_M,
            COVERED_BY_RATIONAL_M_FOLDS,
            COVERED_BY_PROJECTIVE_M_MINUS_1,
        }
        if strong:
            conclusions.add(COVERED_BY_PROJECTIVE_M)
        if all_families_degree_one:
            conclusions.add(N_LOWER_GE_M)
    return HypothesisReport(theorem, m, per_k, passed, frozenset(conclusions))


def check_hypotheses(
    v: SplitChernVector,
    m: int,
    theorem: str,
    degree_one_cover: bool = False,
    all_families_degree_one: bool = False,
) -> HypothesisReport:
    """Dispatch to the named gate."""
    if theorem == THM4:
        return check_thm4(v, m, degree_one_cover=degree_one_cover)
    if theorem == THM5:
        return check_thm5(v, m, all_families_degree_one=all_families_degree_one)
    if theorem == THM5_STRONG:
        return check_thm5(
            v, m, strong=True, all_families_degree_one=all_families_degree_one
        )
    raise ValueError(f"unknown theorem gate {theorem!r}; choose from {THEOREMS}")


def max_m(v: SplitChernVector, theorem: str) -> int:
    """Largest m <= dim for which the gate passes; 0 when none does.

    Thresholds decrease pointwise in m, so the first pass scanning
    downward is the maximum.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem gate {theorem!r}; choose from {THEOREMS}")
    for m in range(v.dim, 0, -1):
        if check_hypotheses(v, m, theorem).passed:
            return m
    return 0


class CertificateError(Exception):
    """A certificate bound failed: either the two evaluation routes
    disagreed or a bound missed its proof threshold."""

    def __init__(self, level: int, quantity: str, message: str):
        super().__init__(f"level {level}, {quantity}: {message}")
        self.level = level
        self.quantity = quantity


@dataclass(frozen=True)
class CertificateLevel:
    """Exact bounds certifying that the chain extends past level i:
    the family dimension stays positive, the first Chern scalar stays
    positive, and (when asserted) the twice-descended second Chern
    scalar is large enough to force the next curve degree to 1."""

    level: int
    dim_bound: Fraction
    c1_margin: Fraction
    t2ch2_bound: Fraction
    t2ch2_asserted: bool


@dataclass(frozen=True)
class Certificate:
    theorem: str
    m: int
    mode: str
    per_level: tuple[CertificateLevel, ...]
    all_positive: bool


def _certify(
    level: int,
    quantity: str,
    full: Fraction,
    closed: Fraction,
    at_actual: bool,
) -> Fraction:
    if at_actual:
        if full < closed:
            raise CertificateError(
                level,
                quantity,
                f"actual-input value {full} fell below the threshold-input value {closed}",
            )
    elif full != closed:
        raise CertificateError(
            level,
            quantity,
            f"coefficient-sum route gives {full}, closed expression gives {closed}",
        )
    return full


def _require(level: int, quantity: str, value: Fraction, bound: Fraction, strict: bool):
    ok = value > bound if strict else value >= bound
    if not ok:
        rel = ">" if strict else ">="
        raise CertificateError(
            level, quantity, f"bound {value} fails the requirement {rel} {bound}"
        )


def _trace(
    v: SplitChernVector,
    m: int,
    theorem: str,
    table: CoeffTable | None,
    at_actual: bool,
) -> Certificate:
    report = check_hypotheses(v, m, theorem)
    if not report.passed:
        raise ValueError(
            f"gate {theorem} fails for m = {m}; no certificate can be issued"
        )
    tab = table or shared_table()

    def x(k: int) -> Fraction:
        return v.ch(k) if at_actual else hypothesis_threshold(theorem, m, k)

    levels = []
    for i in range(1, m):
        dim_full = (
            Fraction(-(i - 1))
            + sum(tab.coefficient(i - 1, 1, k) * x(k) for k in range(1, i + 1))
            - 2
        )
        if theorem == THM4:
            # c1 keeps the top descent term aside: it is a positive class
            # on its own, so positivity only needs the remaining sum.
            c1_full = Fraction(-i) + sum(
                tab.coefficient(i, 1, k) * x(k) for k in range(1, i + 1)
            )
            dim_closed = Fraction(m - i)
            c1_closed = -i + (1 - Fraction(1, factorial(i + 1))) * (m + 1)
            t2_closed = Fraction(m - i + 2, 2)
            t2_asserted = True
        else:
            c1_full = Fraction(-i) + sum(
                tab.coefficient(i, 1, k) * x(k) for k in range(1, i + 2)
            )
            total = 2 * m + 2 if theorem == THM5_STRONG else 2 * m + 1
            dim_closed = Fraction(total - 2 * i - 2)
            c1_closed = Fraction(total - 2 * i - 2)
            t2_closed = Fraction(total - 2 * i - 2, 2)
            t2_asserted = True if theorem == THM5_STRONG else (i + 1 < m)
        t2_full = Fraction(-(i - 1), 2) + sum(
            tab.coefficient(i - 1, 2, k) * x(k) for k in range(1, i + 2)
        )

        dim_bound = _certify(i, "dim_bound", dim_full, dim_closed, at_actual)
        c1_margin = _certify(i, "c1_margin", c1_full, c1_closed, at_actual)
        t2_bound = _certify(i, "t2ch2_bound", t2_full, t2_closed, at_actual)

        _require(i, "dim_bound", dim_bound, Fraction(0), strict=True)
        _require(i, "c1_margin", c1_margin, Fraction(0), strict=True)
        if t2_asserted:
            strict = theorem != THM5_STRONG
            _require(i, "t2ch2_bound", t2_bound, Fraction(1), strict=strict)
        levels.append(
            CertificateLevel(i, dim_bound, c1_margin, t2_bound, t2_asserted)
        )
    mode = "actual" if at_actual else "threshold"
    return Certificate(theorem, m, mode, tuple(levels), all_positive=True)


def proof_trace_thm4(
    v: SplitChernVector,
    m: int,
    table: CoeffTable | None = None,
    at_actual: bool = False,
) -> Certificate:
    """Replay the inequality chain behind gate thm4 at levels 1..m-1.

    At each level the certificate checks, with exact arithmetic at the
    hypothesis thresholds (the proof's worst case):

    * family dimension bound  -(i-1) + sum_k c(i-1,1,k)(m+1)/k! - 2,
      which the weight identities collapse to m - i  (must be > 0);
    * first Chern margin  -i + (1 - 1/(i+1)!)(m+1)  (must be > 0);
    * twice-descended ch_2 bound  (m-i+2)/2  (must be > 1, which pins
      the next curve degree to 1).

    ``at_actual`` evaluates the same sums at the vector's own scalars
    instead; those values must dominate the threshold-mode ones.
    """
    return _trace(v, m, THM4, table, at_actual)


def proof_trace_thm5(
    v: SplitChernVector,
    m: int,
    strong: bool = False,
    table: CoeffTable | None = None,
    at_actual: bool = False,
) -> Certificate:
    """Replay the inequality chain behind gate thm5 at levels 1..m-1.

    Threshold-mode closed values are 2m-2i-1 for the dimension bound and
    the first Chern margin and (2m-2i-1)/2 for the twice-descended ch_2
    bound, asserted > 1 only while i+1 < m.  The strong gate shifts all
    three by the larger thresholds (2m-2i, 2m-2i, m-i) and asserts the
    ch_2 bound >= 1 at every level, which pins every curve degree to 1.
    """
    return _trace(v, m, THM5_STRONG if strong else THM5, table, at_actual)
