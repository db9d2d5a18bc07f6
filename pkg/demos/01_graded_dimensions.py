"""Graded dimensions of the three standard filtrations.

Walks through the rose with two petals, where every count has a closed
form, then prints the first few dimensions for a small acyclic graph to
show how finite dimensionality looks.
"""

from gael import dim_sequence
from gael.corpus import a2, fibonacci, rose

g = rose(2)
print("rose with two petals: vertices", g.vertices, "edges", [e[0] for e in g.edges])
for kind in ("path", "leavitt", "cohn"):
    seq = dim_sequence(g, kind, 10)
    print(f"  {kind:8s}", [int(d) for d in seq.dims])

# path: 2^k, Cohn: (k+1) 2^k, Leavitt: 1, 4, then 2^(k-2)(3k+5)
print("  expected Leavitt", [1, 4] + [2 ** (k - 2) * (3 * k + 5) for k in range(2, 11)])

print()
print("Fibonacci graph")
for kind in ("path", "leavitt", "cohn"):
    print(f"  {kind:8s}", [int(d) for d in dim_sequence(fibonacci(), kind, 10).dims])

print()
seq = dim_sequence(a2(), "cohn", 6)
print("A_2 is acyclic, so the algebra is finite dimensional:", seq.finite_dimensional)
print("  cohn", [int(d) for d in seq.dims])
