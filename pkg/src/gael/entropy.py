"""Entropy estimates from graded dimensions and the closed form log rho(A).

All logarithms are natural; entropies are in nats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.sparse.csgraph import connected_components

from gael.exact import ExactMatrix, entry_norm, is_nilpotent, mat_mul, prefix_powers
from gael.filtration import DimSequence, dim_sequence
from gael.graph import Graph, adjacency_matrix

_LN2 = math.log(2.0)


def log_int(d: int) -> float:
    """Natural log of a positive integer of any size, without a float cast of ``d``."""
    if d <= 0:
        raise ValueError("log_int needs a positive integer")
    bits = d.bit_length()
    if bits <= 64:
        return math.log(d)
    shift = bits - 64
    return math.log(d >> shift) + shift * _LN2


@dataclass(frozen=True)
class EntropyReport:
    kind: str
    per_k: tuple[tuple[int, float], ...]
    tail_estimate: float
    window_max: float
    window: tuple[int, int]
    finite_dimensional: bool
    window_fraction: float = 0.5


def _growth_fit(ks: list[int], logs: list[float]) -> float:
    """Least-squares growth rate h from log d_k ~ h k + p log k + c."""
    if len(ks) >= 4:
        k = np.asarray(ks, dtype=float)
        design = np.column_stack([k, np.log(k), np.ones_like(k)])
        coef, *_ = np.linalg.lstsq(design, np.asarray(logs), rcond=None)
        return float(coef[0])
    if len(ks) >= 2:
        return (logs[-1] - logs[0]) / (ks[-1] - ks[0])
    return logs[-1] / ks[-1]


def entropy_estimate(d: DimSequence, window_fraction: float = 0.5) -> EntropyReport:
    """Estimate ``limsup log(d_k)/k`` from a finite dimension sequence.

    ``window_max`` is the literal max of log(d_k)/k over the tail window
    ``[ceil(window_fraction * kmax), kmax]``. It converges like log(k)/k
    when d_k carries a polynomial factor, which is the normal case for the
    Cohn and Leavitt filtrations, so ``tail_estimate`` instead fits
    ``log d_k = h k + p log k + c`` over the same window and reports h.
    Finite-dimensional algebras have entropy 0 by definition.
    """
    dims = d.dims
    if not dims:
        raise ValueError("empty dimension sequence")
    kmax = len(dims) - 1
    k0 = max(1, math.ceil(window_fraction * kmax))
    if d.finite_dimensional:
        return EntropyReport(d.kind, (), 0.0, 0.0, (k0, kmax), True, window_fraction)
    if not any(dims[1:]):
        raise ValueError("all-zero dimension sequence not flagged finite dimensional")

    per_k = tuple((k, log_int(x) / k) for k, x in enumerate(dims) if k >= 1 and x > 0)
    in_window = [(k, h) for k, h in per_k if k >= k0]
    if not in_window:
        in_window = [per_k[-1]]
    window_max = max(h for _, h in in_window)
    ks = [k for k, _ in in_window]
    tail = max(0.0, _growth_fit(ks, [h * k for k, h in in_window]))
    return EntropyReport(d.kind, per_k, tail, window_max, (k0, kmax), False, window_fraction)


@dataclass(frozen=True)
class SpectralEstimate:
    rho: float
    lower: float
    upper: float
    iterations: int
    converged: bool


def _down(x: Fraction | float) -> float:
    f = float(x)
    return math.nextafter(f, -math.inf) if Fraction(f) > Fraction(x) else f


def _up(x: Fraction | float) -> float:
    f = float(x)
    return math.nextafter(f, math.inf) if Fraction(f) < Fraction(x) else f


def _gelfand_brackets(A: ExactMatrix, doublings: int = 6) -> tuple[float, float]:
    """Bounds from exact powers.

    lower: rho(A)^k >= (A^k)_{ii}, i.e. closed walks of length k;
    upper: rho(A) <= ||A^(2^m)||^(1/2^m) since the entrywise norm is
    submultiplicative.
    """
    lower = 0.0
    for k, P in enumerate(prefix_powers(A, 2 * A.n)[1:], 1):
        diag = max(P[i, i] for i in range(A.n))
        if diag > 0:
            lower = max(lower, math.exp(log_int(diag) / k) * (1 - 1e-14))
    upper = math.inf
    P, m = A, 1
    for _ in range(doublings + 1):
        norm = entry_norm(P)
        if norm == 0:
            return 0.0, 0.0
        upper = min(upper, math.exp(log_int(norm) / m) * (1 + 1e-14))
        P, m = mat_mul(P, P), 2 * m
    return lower, upper


def _block_perron(block: list[list[int]], rel_tol: float, max_iter: int):
    """Power iteration on B + I for an irreducible block B.

    Returns exact Collatz-Wielandt bounds min/max (Bx)_i/x_i, valid for any
    positive x, plus the float estimate and iteration count.
    """
    m = len(block)
    if m == 1 and block[0][0] == 0:
        return Fraction(0), Fraction(0), 0.0, 0
    B = np.array(block, dtype=float)
    x = np.ones(m)
    it = 0
    for it in range(1, max_iter + 1):
        y = B @ x
        ratios = y / x
        lo, hi = ratios.min(), ratios.max()
        if lo > 0 and hi / lo - 1 <= rel_tol / 4:
            break
        x = y + x
        x /= x.max()
    xs = [Fraction(float(v)) for v in x]
    ys = [sum(Fraction(b) * v for b, v in zip(row, xs)) for row in block]
    exact = [yi / xi for yi, xi in zip(ys, xs)]
    est = float(sum(ys) / sum(xs))
    return min(exact), max(exact), est, it


def strong_components(A: ExactMatrix) -> list[list[int]]:
    n_comp, labels = connected_components(np.array(A.tolist()), directed=True, connection="strong")
    return [[i for i in range(A.n) if labels[i] == c] for c in range(n_comp)]


def spectral_radius(A: ExactMatrix, rel_tol: float = 1e-12, max_iter: int = 20000) -> SpectralEstimate:
    """Perron root of a nonnegative integer matrix with rigorous brackets.

    rho(A) is the max over strongly connected blocks. Each block is refined
    by power iteration on the shifted block B + I, whose Perron value is
    strictly dominant. Brackets combine the exact Collatz-Wielandt bounds
    of every block with the Gelfand bounds of the whole matrix.
    """
    if is_nilpotent(A):
        return SpectralEstimate(0.0, 0.0, 0.0, 0, True)
    g_lo, g_hi = _gelfand_brackets(A)
    lower, upper, rho, iters = Fraction(0), Fraction(0), 0.0, 0
    for comp in strong_components(A):
        block = [[A[i, j] for j in comp] for i in comp]
        lo, hi, est, it = _block_perron(block, rel_tol, max_iter)
        iters += it
        if hi > upper:
            upper = hi
        if lo > lower:
            lower, rho = lo, est
    lo_f = max(_down(lower), g_lo)
    hi_f = min(_up(upper), g_hi)
    rho = min(max(rho, lo_f), hi_f)
    converged = lo_f > 0 and hi_f / lo_f - 1 <= rel_tol
    return SpectralEstimate(rho, lo_f, hi_f, iters, converged)


def closed_form_entropy(A: ExactMatrix) -> float:
    """``log rho(A)``; 0 when A is nilpotent (finite-dimensional algebras)."""
    est = spectral_radius(A, rel_tol=1e-13)
    if est.rho == 0.0:
        return 0.0
    return math.log(est.rho)


@dataclass
class ChainReport:
    graph_id: str
    kmax: int
    tol: float
    closed_form: float
    tails: dict[str, float]
    sandwich_ok: bool
    sandwich_violations: list[int] = field(default_factory=list)
    deviations: dict[str, float] = field(default_factory=dict)
    chain_ok: bool = False

    @property
    def spread(self) -> float:
        return max(self.tails.values()) - min(self.tails.values())


def verify_chain(g: Graph, kmax: int = 200, tol: float = 0.05, window_fraction: float = 0.5) -> ChainReport:
    """Check path <= Leavitt <= Cohn degree by degree and that all three
    entropy estimates sit within ``tol`` of log rho(A)."""
    if kmax < 10:
        raise ValueError("verify_chain needs kmax >= 10")
    seqs = {kind: dim_sequence(g, kind, kmax) for kind in ("path", "leavitt", "cohn")}
    p, l, c = (seqs[kind].dims for kind in ("path", "leavitt", "cohn"))
    bad = [k for k in range(kmax + 1) if not (p[k] <= l[k] <= c[k])]
    closed = closed_form_entropy(adjacency_matrix(g))
    tails = {kind: entropy_estimate(s, window_fraction).tail_estimate for kind, s in seqs.items()}
    devs = {kind: abs(h - closed) for kind, h in tails.items()}
    ok = not bad and all(dv <= tol for dv in devs.values())
    return ChainReport(g.graph_id, kmax, tol, closed, tails, not bad, bad, devs, ok)


@dataclass
class NormBoundReport:
    r: Fraction
    kmax: int
    constant: Fraction | None
    asserted: bool
    violations: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def norm_bound_check(A: ExactMatrix, r, kmax: int, observe: bool = False) -> NormBoundReport:
    """Exact check of ||A^k|| <= r^k C and of the summed Cohn bound
    sum_s ||A^s (A^T)^(k-s)|| <= r^k C^2 (k+1), with C = n + ||A||/(r - ||A||).

    The geometric-series argument behind C needs r > ||A||. Radii in
    (rho(A), ||A||] are only accepted with ``observe=True``; the result is
    then marked ``asserted=False``.
    """
    r = Fraction(r)
    norm_a = entry_norm(A)
    if r <= norm_a:
        if not observe:
            raise ValueError(f"r = {r} must exceed ||A|| = {norm_a}")
        if r <= spectral_radius(A).upper:
            raise ValueError(f"r = {r} must exceed the spectral radius")
    constant = None if r == norm_a else A.n + Fraction(norm_a) / (r - norm_a)
    report = NormBoundReport(r, kmax, constant, asserted=r > norm_a)
    if constant is None:
        return report
    powers = prefix_powers(A, kmax)
    transposes = [P.T for P in powers]
    for k in range(kmax + 1):
        scale = r**k
        if entry_norm(powers[k]) > scale * constant:
            report.violations.append((k, "power"))
        total = sum(entry_norm(mat_mul(powers[s], transposes[k - s])) for s in range(k + 1))
        if total > scale * constant**2 * (k + 1):
            report.violations.append((k, "cohn_sum"))
    return report
