"""Property checks bundled per graph, as run by ``gael verify``."""

from __future__ import annotations

from gael.corpus import subsets
from gael.entropy import norm_bound_check, verify_chain
from gael.exact import entry_norm, path_count_vectors, prefix_powers
from gael.filtration import dim_sequence, graded_dim_cohn, graded_dim_relative, path_pair_count
from gael.graph import Graph, adjacency_matrix
from gael.oracle import OracleTooLarge, graded_dim_bruteforce
from gael.resolvent import cauchy_error_report


def _verdict(ok: bool, **detail) -> dict:
    return {"ok": bool(ok), **detail}


def check_norm_sum_identity(g: Graph, kmax: int = 30, corrupt: bool = False) -> dict:
    A = adjacency_matrix(g)
    powers, counts = prefix_powers(A, kmax), path_count_vectors(A, kmax)
    bad = []
    for k in range(kmax + 1):
        lhs = graded_dim_cohn(A, k, powers) + (1 if corrupt and k == kmax // 2 else 0)
        if lhs != path_pair_count(A, k, counts):
            bad.append(k)
    return _verdict(not bad, kmax=kmax, failing_k=bad)


def check_sandwich(g: Graph, kmax: int) -> dict:
    p, l, c = (dim_sequence(g, kind, kmax).dims for kind in ("path", "leavitt", "cohn"))
    bad = [k for k in range(kmax + 1) if not p[k] <= l[k] <= c[k]]
    return _verdict(not bad, kmax=kmax, failing_k=bad)


def check_monotone_x(g: Graph, kmax: int = 30) -> dict:
    """X inside Y implies relative dims for Y never exceed those for X."""
    A = adjacency_matrix(g)
    counts = path_count_vectors(A, kmax)
    path = [entry_norm(P) for P in prefix_powers(A, kmax)]

    def dims(X):
        xi = g.x_indices(X)
        return [graded_dim_relative(A, xi, k, counts) for k in range(kmax + 1)]

    table = {X: dims(X) for X in subsets(g.regular)}
    cohn = table[frozenset()]
    bad = []
    for X, dx in table.items():
        if any(not path[k] <= dx[k] <= cohn[k] for k in range(kmax + 1)):
            bad.append(sorted(X))
        for v in g.regular:
            if v not in X:
                dy = table[X | {v}]
                if any(dy[k] > dx[k] for k in range(kmax + 1)):
                    bad.append([sorted(X), sorted(X | {v})])
    return _verdict(not bad, kmax=kmax, subsets=len(table), violations=bad)


def check_oracle(g: Graph, kmax: int, max_words: int | None = None) -> dict:
    A = adjacency_matrix(g)
    mismatches, compared = [], 0
    try:
        for X in subsets(g.regular):
            xi = g.x_indices(X)
            for k in range(kmax + 1):
                compared += 1
                if graded_dim_relative(A, xi, k) != graded_dim_bruteforce(g, X, k, max_words=max_words):
                    mismatches.append([sorted(X), k])
    except OracleTooLarge as exc:
        return _verdict(not mismatches, kmax=kmax, compared=compared, skipped=str(exc), mismatches=mismatches)
    return _verdict(not mismatches, kmax=kmax, compared=compared, mismatches=mismatches)


def check_norm_bounds(g: Graph, kmax: int = 20) -> dict:
    A = adjacency_matrix(g)
    norm = entry_norm(A)
    found = []
    for r in (norm + 1, 2 * norm + 1):
        rep = norm_bound_check(A, r, kmax)
        found += [[r, k, which] for k, which in rep.violations]
    return _verdict(not found, kmax=kmax, violations=found)


def check_cauchy(g: Graph, kmax: int = 10, nodes: int = 512) -> dict:
    A = adjacency_matrix(g)
    r = entry_norm(A) + 1
    worst_err = worst_imag = 0.0
    bad = []
    for k in range(kmax + 1):
        rep = cauchy_error_report(A, k, r, nodes)
        worst_err, worst_imag = max(worst_err, rep.max_error), max(worst_imag, rep.max_imag)
        if not (rep.ok and rep.rounded_exact and rep.max_error < 0.5 and rep.max_imag <= 1e-8):
            bad.append(k)
    return _verdict(not bad, kmax=kmax, r=r, nodes=nodes, max_error=worst_err, max_imag=worst_imag, failing_k=bad)


def check_chain(g: Graph, kmax: int, tol: float) -> dict:
    rep = verify_chain(g, kmax, tol)
    return _verdict(
        rep.chain_ok,
        closed_form=rep.closed_form,
        tails=rep.tails,
        deviations=rep.deviations,
        sandwich_ok=rep.sandwich_ok,
    )


def run_checks(
    g: Graph,
    kmax: int = 200,
    oracle_k: int = 4,
    tol: float = 0.05,
    corrupt: bool = False,
    max_words: int | None = None,
) -> dict[str, dict]:
    """Every check for one graph; ``corrupt`` perturbs one Cohn dimension."""
    return {
        "sandwich": check_sandwich(g, kmax),
        "norm_sum_identity": check_norm_sum_identity(g, min(kmax, 30), corrupt),
        "oracle_equivalence": check_oracle(g, oracle_k, max_words),
        "monotone_in_X": check_monotone_x(g, min(kmax, 30)),
        "norm_bounds": check_norm_bounds(g),
        "cauchy_reconstruction": check_cauchy(g),
        "entropy_chain": check_chain(g, kmax, tol),
    }
