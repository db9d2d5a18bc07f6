"""Counting basis words by rewriting, and comparing with the formula.

Every element of a relative Cohn algebra is a combination of words
lam mu*. Picking one special edge per vertex of X turns the relation
v = sum e e* into a rewrite rule, and the words it cannot touch form a
basis. Counting them by brute force gives an independent check of the
closed-form graded dimensions.
"""

from gael.corpus import fibonacci, rose, subsets
from gael.filtration import graded_dim_relative
from gael.graph import adjacency_matrix
from gael.oracle import (
    AlgebraElement,
    NormalFormWord,
    SpecialEdgeChoice,
    choice_independence_check,
    graded_dim_bruteforce,
    multiply,
    reduce,
)

g = rose(2)
choice = SpecialEdgeChoice.default(g, {"v"})
w = AlgebraElement.word(NormalFormWord(("e2", "e1"), ("e1",), "v"))
print("rewrite", w, "->", reduce(w, choice))

e1 = AlgebraElement.word(NormalFormWord(("e1",), (), "v"))
e1_star = AlgebraElement.word(NormalFormWord((), ("e1",), "v"))
print("e1* e1 =", multiply(e1_star, e1, choice))
print("e1 e1* =", multiply(e1, e1_star, choice))

print()
g = fibonacci()
A = adjacency_matrix(g)
for X in subsets(g.regular):
    brute = [graded_dim_bruteforce(g, X, k) for k in range(6)]
    formula = [graded_dim_relative(A, g.x_indices(X), k) for k in range(6)]
    print(f"X = {sorted(X)!s:12s} rewriting {brute}  formula {[int(d) for d in formula]}")

rep = choice_independence_check(g, {"v", "w"}, 4)
print("counts agree for every choice of special edges:", rep.independent, len(rep.counts), "choices")
