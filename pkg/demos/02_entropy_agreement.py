"""Path, Leavitt and Cohn entropies all converge to log rho(A).

The per-k values log(d_k)/k approach the limit slowly because of the
polynomial factor in front of rho^k. The tail estimate fits that factor
out, which is why it lands much closer than the raw maximum.
"""

import math

from gael import entropy_estimate, spectral_radius, verify_chain
from gael.corpus import acceptance_corpus
from gael.filtration import dim_sequence
from gael.graph import adjacency_matrix

corpus = acceptance_corpus()

g = corpus["rose-2"]
print("rose-2, per-k estimates of the Cohn entropy")
rep = entropy_estimate(dim_sequence(g, "cohn", 200))
for k, h in rep.per_k[::40]:
    print(f"  k={k:3d}  log(d_k)/k = {h:.5f}")
print(f"  window max {rep.window_max:.5f}, tail fit {rep.tail_estimate:.7f}, ln 2 = {math.log(2):.7f}")

print()
print(f"{'graph':12s} {'rho':>10s} {'path':>9s} {'leavitt':>9s} {'cohn':>9s}  ok")
for name, g in corpus.items():
    est = spectral_radius(adjacency_matrix(g))
    chain = verify_chain(g, kmax=200)
    t = chain.tails
    print(f"{name:12s} {est.rho:10.6f} {t['path']:9.5f} {t['leavitt']:9.5f} {t['cohn']:9.5f}  {chain.chain_ok}")
