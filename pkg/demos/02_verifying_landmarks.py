"""Resolving sets, certificates, and the two independent verifiers.

A set W of landmarks resolves the graph when every vertex is pinned
down by its distances to the landmarks.  At diameter 2 that collapses
to a combinatorial statement: the landmarks at distance 2 from a
non-landmark v are exactly the members sharing a coordinate with v
(the union of v's three "blocks"), so W resolves iff those unions are
pairwise distinct across non-landmarks.
"""

from hammingdim import (
    LandmarkSet,
    block_sum_violations,
    fixture,
    hamming_graph,
    is_resolving,
    is_resolving_by_distance,
    loop_profile,
    lower_bound,
)

W = fixture("n3")
print("landmarks:", W.members)

cert = is_resolving(W)
print("verdict:", cert.verdict.value)
print(cert.to_json())

# The distance verifier recomputes everything from raw distance
# vectors.  It exists to keep the fast block-union verifier honest.
assert is_resolving_by_distance(W).verdict is cert.verdict

# A failing set gets a witness: the lexicographically least pair of
# non-landmarks with identical codes.
g = hamming_graph(3, 3, 3)
bad = LandmarkSet(g, ((1, 1, 1), (2, 2, 2)))
print("\ntwo landmarks:", is_resolving(bad).verdict.value,
      "witness:", is_resolving(bad).witness)

# Blocks with too few members betray a non-resolving set without any
# search: every resolving set needs |block(i,a)| + |block(i,b)| >= 3.
print("violations in the bad set:", block_sum_violations(bad)[:4], "...")
print("violations in the fixture:", block_sum_violations(W))

# That inequality also yields the general lower bound 2*max(dims) - 1.
print("\nlower bound for HG(5,7,11;3):", lower_bound(5, 7, 11))
big = fixture("hg_5_7_11")
print("fixture size:", len(big.members),
      "verdict:", is_resolving(big).verdict.value)

# Minimum sets of size 2n-1 on the n-diagonal graph always show the
# same block-size profile per coordinate: one singleton, n-1 pairs.
from hammingdim import metric_basis

print("\nloop profile of metric_basis(7):", loop_profile(metric_basis(7)))
