"""Theorem gates: positivity thresholds and certificate replays.

Gate thm4 asks r_k >= (m+1)/k! for k = 1..m; gate thm5 asks
r_k >= (2m+1-2^k)/k! (its strong variant shifts to 2m+2).  A passing
gate guarantees chains of minimal families of length at least m and
coverings by rational m-folds, and the certificate replays the exact
inequality chain that proves it, level by level.
"""

from fanodescent import (
    SplitChernVector,
    THM4,
    THM5,
    THM5_STRONG,
    check_thm4,
    check_thm5,
    max_m,
    projective_space,
    proof_trace_thm4,
    proof_trace_thm5,
    quadric,
)

# P^n meets gate thm4 exactly at m = n: every margin is zero.
report = check_thm4(projective_space(6).vector, 6)
print("thm4 on P^6 at m = 6:", "PASS" if report.passed else "FAIL")
for row in report.per_k:
    print(f"  k={row.k}: threshold {row.threshold}, actual {row.actual}, margin {row.margin}")
print("  conclusions:", ", ".join(sorted(report.conclusions)))
print()

# Quadrics pass gate thm5 up to half their dimension (rounded up), and
# the strong gate up to half rounded down.
print("maximal passing levels:")
for n in (5, 6, 9, 12):
    print(
        f"  Q^{n}: thm5 -> m = {max_m(quadric(n).vector, THM5)}, "
        f"thm5_strong -> m = {max_m(quadric(n).vector, THM5_STRONG)}; "
        f"P^{n}: thm4 -> m = {max_m(projective_space(n).vector, THM4)}"
    )
print()

# The certificate evaluates every bound twice, once through the full
# coefficient sums and once through the simplified closed expressions,
# and insists on exact agreement before asserting positivity.
cert = proof_trace_thm5(quadric(9).vector, 5)
print("thm5 certificate for Q^9 at m = 5 (threshold inputs):")
for lv in cert.per_level:
    mark = "(pins next degree to 1)" if lv.t2ch2_asserted else "(last level, not asserted)"
    print(
        f"  level {lv.level}: dim bound {lv.dim_bound}, c1 margin {lv.c1_margin}, "
        f"ch2 bound {lv.t2ch2_bound} {mark}"
    )
print("  all positive:", cert.all_positive)
print()

# Gates work on any split vector.  This one passes thm5 at m = 2 but
# misses thm4 at m = 2 because its second scalar is too small.
v = SplitChernVector((5, 1, "1/2"), label="custom")
print("custom vector (5, 1, 1/2):")
print("  thm5 at m = 2:", "PASS" if check_thm5(v, 2).passed else "FAIL")
report = check_thm4(v, 2)
print("  thm4 at m = 2:", "PASS" if report.passed else "FAIL",
      "- margins", [str(row.margin) for row in report.per_k])
print()

# Evaluating the certificate at the vector's own scalars instead of the
# thresholds can only increase every bound.
thr = proof_trace_thm4(projective_space(5).vector, 4)
act = proof_trace_thm4(projective_space(5).vector, 4, at_actual=True)
print("thm4 on P^5 at m = 4, level 1 bounds:")
print("  threshold inputs:", thr.per_level[0].dim_bound, thr.per_level[0].c1_margin)
print("  actual inputs:   ", act.per_level[0].dim_bound, act.per_level[0].c1_margin)
