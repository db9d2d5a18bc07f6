"""Graded dimensions dim(V_k / V_{k-1}) of the standard filtrations.

Three algebra kinds share one graph:

* ``path``      -- the path algebra KE, graded by path length;
* ``cohn``      -- the Cohn path algebra, spanned by words lam mu* with
                   r(lam) = r(mu), graded by len(lam) + len(mu);
* ``relative``  -- the relative Cohn algebra for a subset X of regular
                   vertices (``leavitt`` is X = Reg(E)).

For the relative algebra the basis drops every word (a g, b g) whose two
halves end in the same special edge g emitted by a vertex of X. There are
P_{s-1}(v) P_{t-1}(v) such words of bidegree (s, t) for each v in X, and
the count does not depend on which edge is special.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from gael.exact import (
    ExactMatrix,
    entry_norm,
    is_nilpotent,
    mat_mul,
    mat_pow,
    path_count_vectors,
    prefix_powers,
)
from gael.graph import Graph, GraphError, adjacency_matrix

KINDS = ("path", "cohn", "leavitt", "relative")


@dataclass(frozen=True)
class DimSequence:
    kind: str
    graph_id: str
    dims: tuple[int, ...]
    finite_dimensional: bool
    X: tuple[str, ...] = ()

    @property
    def kmax(self) -> int:
        return len(self.dims) - 1


def graded_dim_path(A: ExactMatrix, k: int) -> int:
    """Number of paths of length exactly ``k`` (vertices when k = 0)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return entry_norm(mat_pow(A, k))


def graded_dim_cohn(A: ExactMatrix, k: int, powers: list[ExactMatrix] | None = None) -> int:
    """``sum_{s=0}^k ||A^s (A^T)^(k-s)||`` evaluated with exact matrix products."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if powers is None:
        powers = prefix_powers(A, k)
    # (A^T)^t = (A^t)^T
    return sum(entry_norm(mat_mul(powers[s], powers[k - s].T)) for s in range(k + 1))


def path_pair_count(A: ExactMatrix, k: int, counts=None) -> int:
    """``sum_{s+t=k} sum_v P_s(v) P_t(v)``: pairs of paths with a common range."""
    if counts is None:
        counts = path_count_vectors(A, k)
    return sum(
        sum(p * q for p, q in zip(counts[s], counts[k - s])) for s in range(k + 1)
    )


def _check_x(A: ExactMatrix, X: Iterable[int]) -> frozenset[int]:
    X = frozenset(X)
    for v in X:
        if not 0 <= v < A.n:
            raise GraphError(f"X contains unknown vertex index {v}")
        if not any(A.rows[v]):
            raise GraphError(f"X contains sink vertex index {v}")
    return X


def graded_dim_relative(A: ExactMatrix, X: Iterable[int], k: int, counts=None) -> int:
    """Graded dimension of the relative Cohn algebra for vertex indices ``X``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    X = _check_x(A, X)
    if counts is None:
        counts = path_count_vectors(A, k)
    total = path_pair_count(A, k, counts)
    for s in range(1, k):
        t = k - s
        total -= sum(counts[s - 1][v] * counts[t - 1][v] for v in X)
    return total


def dim_sequence(g: Graph, kind: str, kmax: int, X: Iterable[str] | None = None) -> DimSequence:
    """Graded dimensions ``d_0 .. d_kmax`` of one standard filtration.

    ``X`` overrides the graph's own subset for ``kind='relative'``.
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    if kind not in KINDS:
        raise GraphError(f"unknown algebra kind {kind!r}; expected one of {KINDS}")
    A = adjacency_matrix(g)
    if kind == "relative" and X is not None:
        xs = frozenset(X)
        g.with_x(xs)  # validates membership in Reg(E)
    else:
        xs = g.resolve_x(kind) if kind != "path" else frozenset()

    if kind == "path":
        dims = [entry_norm(P) for P in prefix_powers(A, kmax)]
    elif kind == "cohn":
        powers = prefix_powers(A, kmax)
        dims = [graded_dim_cohn(A, k, powers) for k in range(kmax + 1)]
    else:
        counts = path_count_vectors(A, kmax)
        xi = g.x_indices(xs)
        dims = [graded_dim_relative(A, xi, k, counts) for k in range(kmax + 1)]

    # low degrees come straight from the graph
    expected = [g.n, len(g.edges) if kind == "path" else 2 * len(g.edges)]
    for k, d in enumerate(expected[: kmax + 1]):
        if dims[k] != d:
            raise AssertionError(f"{kind}: d_{k} = {dims[k]} but graph gives {d}")

    ordered_x = tuple(v for v in g.vertices if v in xs)
    return DimSequence(kind, g.graph_id, tuple(dims), is_nilpotent(A), ordered_x)
