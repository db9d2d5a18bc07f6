"""Exact integer matrices backed by Python ints.

Graded dimensions grow like rho**k and pass any fixed-width integer type
long before k = 200, so nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable square matrix of Python integers (row-major)."""

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("ExactMatrix must be square")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)) if self.rows else [])

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)


def identity(n: int) -> ExactMatrix:
    return ExactMatrix([[int(i == j) for j in range(n)] for i in range(n)])


def zeros(n: int) -> ExactMatrix:
    return ExactMatrix([[0] * n for _ in range(n)])


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n}x{a.n} @ {b.n}x{b.n}")
    cols = list(zip(*b.rows))
    return ExactMatrix(
        [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a.rows]
    )


def prefix_powers(a: ExactMatrix, k: int) -> list[ExactMatrix]:
    """``[A^0, A^1, ..., A^k]`` by iterated multiplication."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    powers = [identity(a.n)]
    for _ in range(k):
        powers.append(mat_mul(powers[-1], a))
    return powers


def mat_pow(a: ExactMatrix, k: int) -> ExactMatrix:
    """Exact ``A^k`` with ``A^0 = I`` (binary powering)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    result, base = identity(a.n), a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def entry_norm(a: ExactMatrix) -> int:
    """Sum of absolute values of all entries."""
    return sum(abs(x) for row in a.rows for x in row)


def column_sums(a: ExactMatrix) -> tuple[int, ...]:
    return tuple(sum(col) for col in zip(*a.rows)) if a.n else ()


def path_count_vector(a: ExactMatrix, k: int) -> tuple[int, ...]:
    """Number of length-``k`` paths ending at each vertex (column sums of A^k).

    Computed by the recurrence P_{k+1}(w) = sum_v P_k(v) A[v][w] starting
    from P_0 = 1, without forming A^k.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return path_count_vectors(a, k)[k]


def path_count_vectors(a: ExactMatrix, k: int) -> list[tuple[int, ...]]:
    """``[P_0, ..., P_k]`` in one pass."""
    counts = [tuple([1] * a.n)]
    cols = list(zip(*a.rows))
    for _ in range(k):
        prev = counts[-1]
        counts.append(tuple(sum(p * x for p, x in zip(prev, col)) for col in cols))
    return counts


def is_nilpotent(a: ExactMatrix) -> bool:
    """A nonnegative integer matrix is nilpotent iff A^n = 0."""
    return mat_pow(a, a.n).is_zero()
