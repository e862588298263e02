"""Explicit minimum resolving sets for every diagonal size.

The construction pipeline: build a cubic properly 3-edge-colored graph
on 2(n-1) vertices whose forbidden-configuration scan is clean, read
its colored edges back as landmark coordinates on HG(n-1,n-1,n-1;3),
then append the loop vertex (n,n,n) to land on HG(n,n,n;3) with
2n - 1 landmarks.  Sizes 3 and 4 need one extra landmark (2n total);
everything from n = 5 up hits the lower bound 2n - 1.
"""

from hammingdim import (
    FIXTURE_NAMES,
    Unsupported,
    construct_cubic,
    fixture,
    graph_to_landmarks,
    is_resolving,
    metric_basis,
)

for n in (3, 4, 5, 6, 9, 40):
    W = metric_basis(n)
    print(f"n={n}: {len(W.members)} landmarks,",
          is_resolving(W).verdict.value)

print("\nmetric_basis(5):")
for w in metric_basis(5).members:
    print(" ", w)

# The cubic building block, by order.  k = 4 is a Moebius ladder on an
# octagon; general even and odd k >= 6 come from a doubled-cycle
# pattern; k = 5 has no clean cubic graph and is refused.
G = construct_cubic(6)
print("\nconstruct_cubic(6): order", G.order)
print("pink cycle edges:", G.edges_of_color(3))

try:
    construct_cubic(5)
except Unsupported as e:
    print("construct_cubic(5):", e)

# Colored edges -> landmarks: edge number j of color i contributes
# coordinate value j in position i to both endpoints.
W = graph_to_landmarks(G, 7)
print("\nas landmarks on", W.graph.format() + ":", len(W.members), "members")

# Hand-checked sets ship as fixtures, including one non-diagonal graph
# where the lower bound 2*max - 1 is still attained exactly.
print("\nfixtures:", FIXTURE_NAMES)
big = fixture("hg_5_7_11")
print("hg_5_7_11 on", big.graph.format() + ":",
      len(big.members), "landmarks,", is_resolving(big).verdict.value)
