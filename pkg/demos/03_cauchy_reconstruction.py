"""Recovering A^k from resolvent samples on a circle.

The trapezoidal rule on |z| = r misses A^k by exactly the aliasing tail
sum_j A^(k+jM) / r^(jM), so doubling the node count squares the error
ratio until roundoff takes over.
"""

from gael.corpus import fibonacci
from gael.exact import entry_norm, mat_pow
from gael.graph import adjacency_matrix
from gael.resolvent import aliasing_bound, cauchy_error_report

A = adjacency_matrix(fibonacci())
k, r = 8, 4.0
print("exact A^8:", mat_pow(A, k).tolist())
print(f"{'M':>5s} {'measured error':>15s} {'aliasing bound':>15s}")
for M in (16, 32, 64, 128, 256):
    rep = cauchy_error_report(A, k, r, M)
    print(f"{M:5d} {rep.max_error:15.3e} {aliasing_bound(entry_norm(A), k, r, M):15.3e}")

rep = cauchy_error_report(A, k, r, 512)
print("rounded reconstruction matches the exact power:", rep.rounded_exact)
print("double vs extended precision at k=10, r=7 for [[6]]:")
for precision in ("double", "extended"):
    rep = cauchy_error_report([[6]], 10, 7.0, 512, precision=precision)
    print(f"  {precision:9s} error {rep.max_error:.2e}")
