"""Descent chains: walking from a manifold down to a point.

A split Chern vector models a polarized Fano manifold by the scalars
r_k with ch_k = r_k c1(L)^k.  Each descent step moves to the minimal
family of rational curves through a general point; the chain ends at
the first member that is not Fano.  The index of that member is the
chain invariant N.
"""

from fanodescent import (
    SplitChernVector,
    descend,
    descend_chain,
    descend_direct,
    grassmannian,
    projective_space,
    quadric,
)


def show_chain(entry):
    report = descend_chain(entry.vector, entry.degrees)
    print(f"{entry.label}: expected", " -> ".join(entry.chains[0]))
    dims = [entry.vector.dim] + [s.family_dim for s in report.steps]
    print(f"  dims {dims}, terminal {report.terminal}, N = {report.n_first_non_fano}")


# Projective space loses one dimension per step; a quadric loses two.
show_chain(projective_space(5))
show_chain(quadric(6))
show_chain(quadric(7))
print()

# The scalars themselves descend exactly: one step down from P^4 gives
# the split vector of P^3, entry by entry.
step = descend(projective_space(4).vector, 1)
print("P^4 descends to scalars", step.descended.scalars)
print("P^3 catalogue scalars:  ", projective_space(3).vector.scalars)
print()

# The odd quadric chain needs a final curve degree of 2: the last
# positive-dimensional member has r_1 = 1, so degree-1 curves would
# give a negative family dimension.
report = descend_chain(quadric(5).vector)  # all degrees 1
print("Q^5 with all degrees 1:", report.terminal, "after", len(report.steps), "steps")
report = descend_chain(quadric(5).vector, (1, 1, 2))
print("Q^5 with degrees (1,1,2): N =", report.n_first_non_fano)
print()

# Depth-i descent in a single evaluation agrees with iterating steps,
# and works for any split vector, not just the catalogue ones.
v = SplitChernVector((6, 2, 0, "-1/3", "-1/5", "-7/90"), label="custom")
iterated = descend(descend(v, 1).descended, 1).descended
print("iterated twice:        ", iterated.scalars)
print("descend_direct(v, 2, 1):", descend_direct(v, 2, 1).scalars)
print()

# Grassmannians leave the scalar model after one step (their first
# family is a product of projective spaces), so only the chain shapes
# and the two invariants are catalogued.
entry = grassmannian(2, 5)
for chain in entry.chains:
    print("G(2,5) chain:", " -> ".join(chain))
print("N_lower =", entry.n_lower, " N_upper =", entry.n_upper)
