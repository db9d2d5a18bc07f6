"""The nine acceptance criteria, each at its stated tolerance.

Every test records one PASS/FAIL line, printed in the terminal summary.
"""

import io
import csv
import math

import pytest

from conftest import ACCEPTANCE_LINES
from gael.cli import main
from gael.corpus import fibonacci, rose, small_graphs, subsets
from gael.entropy import closed_form_entropy, norm_bound_check, spectral_radius, verify_chain
from gael.exact import entry_norm, path_count_vectors, prefix_powers
from gael.filtration import dim_sequence, graded_dim_cohn, graded_dim_relative, path_pair_count
from gael.graph import adjacency_matrix, serialize
from gael.oracle import graded_dim_bruteforce, product_closure_check
from gael.resolvent import cauchy_error_report


def record(number, title, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail


def test_1_entropy_agreement(corpus):
    worst_dev = worst_spread = 0.0
    bad = []
    for name, g in corpus.items():
        rep = verify_chain(g, kmax=200, tol=0.05)
        worst_dev = max(worst_dev, max(rep.deviations.values()))
        worst_spread = max(worst_spread, rep.spread)
        if not (rep.chain_ok and rep.spread <= 0.02):
            bad.append(name)
    record(1, "entropy agreement at kmax=200", not bad,
           f"{len(corpus)} graphs, max |tail - ln rho| = {worst_dev:.2e}, max spread = {worst_spread:.2e}, failing {bad}")


def test_2_closed_form_anchor():
    r2 = spectral_radius(adjacency_matrix(rose(2)), rel_tol=1e-9)
    fib = spectral_radius(adjacency_matrix(fibonacci()), rel_tol=1e-9)
    phi = (1 + math.sqrt(5)) / 2
    h = closed_form_entropy(adjacency_matrix(rose(2)))
    ok_r2 = r2.lower <= 2.0 <= r2.upper and (r2.upper - r2.lower) <= 1e-9 * 2.0
    ok_fib = fib.lower <= 1.6180339887 <= fib.upper and abs(fib.rho - phi) <= 1e-9 * phi
    ok_h = abs(h - math.log(2)) <= 1e-12
    record(2, "spectral brackets and closed form", ok_r2 and ok_fib and ok_h,
           f"rose-2 [{r2.lower!r}, {r2.upper!r}], fibonacci [{fib.lower!r}, {fib.upper!r}], "
           f"|h - ln 2| = {abs(h - math.log(2)):.1e}")


def test_3_norm_sum_identity(corpus):
    bad = []
    for name, g in corpus.items():
        A = adjacency_matrix(g)
        powers, counts = prefix_powers(A, 30), path_count_vectors(A, 30)
        bad += [(name, k) for k in range(31) if graded_dim_cohn(A, k, powers) != path_pair_count(A, k, counts)]
    record(3, "norm sum equals path-pair count, k <= 30", not bad,
           f"{len(corpus) * 31} exact comparisons, mismatches {bad}")


def test_4_oracle_gate():
    compared, bad, graphs = 0, [], 0
    for g in small_graphs(3, 4):
        graphs += 1
        A = adjacency_matrix(g)
        counts = path_count_vectors(A, 6)
        for X in subsets(g.regular):
            xi = g.x_indices(X)
            for k in range(7):
                compared += 1
                if graded_dim_relative(A, xi, k, counts) != graded_dim_bruteforce(g, X, k, max_words=10**6):
                    bad.append((g.graph_id, sorted(X), k))
    record(4, "oracle gate, <= 3 vertices, <= 4 edges, all X, k <= 6", not bad,
           f"{graphs} graphs, {compared} comparisons, mismatches {bad[:5]}")


def test_5_sandwich_and_monotonicity(corpus):
    bad, chains = [], 0
    for name, g in corpus.items():
        A = adjacency_matrix(g)
        counts = path_count_vectors(A, 30)
        path = [entry_norm(P) for P in prefix_powers(A, 30)]
        cohn = [graded_dim_cohn(A, k) for k in range(31)]
        rel = {X: [graded_dim_relative(A, g.x_indices(X), k, counts) for k in range(31)] for X in subsets(g.regular)}
        for X in rel:
            for Y in rel:
                if X <= Y:
                    chains += 1
                    if any(not path[k] <= rel[Y][k] <= rel[X][k] <= cohn[k] for k in range(31)):
                        bad.append((name, sorted(X), sorted(Y)))
    record(5, "sandwich and monotonicity in X, k <= 30", not bad,
           f"{chains} pairs X <= Y, violations {bad}")


def test_6_cauchy_reconstruction(corpus):
    bad, worst_err, worst_imag = [], 0.0, 0.0
    for name, g in corpus.items():
        A = adjacency_matrix(g)
        r = entry_norm(A) + 1
        for k in range(11):
            rep = cauchy_error_report(A, k, r, 512)
            worst_err, worst_imag = max(worst_err, rep.max_error), max(worst_imag, rep.max_imag)
            if not (rep.max_error < 0.5 and rep.rounded_exact and rep.ok and rep.max_imag <= 1e-8):
                bad.append((name, k))
    record(6, "Cauchy reconstruction, k <= 10, M = 512", not bad,
           f"max error {worst_err:.1e}, max imaginary part {worst_imag:.1e}, failing {bad}")


def test_7_norm_bound(corpus):
    bad, checked = [], 0
    for name, g in corpus.items():
        A = adjacency_matrix(g)
        norm = entry_norm(A)
        for r in (norm + 1, 2 * norm + 1):
            checked += 1
            rep = norm_bound_check(A, r, 20)
            bad += [(name, r, k, which) for k, which in rep.violations]
    record(7, "exact norm bound, k <= 20", not bad, f"{checked} (graph, r) pairs, violations {bad}")


def test_8_product_closure():
    bad, products, cases = [], 0, 0
    for g in small_graphs(2, 3):
        for X in subsets(g.regular):
            for n in range(3):
                for m in range(3):
                    cases += 1
                    rep = product_closure_check(g, X, n, m, max_words=10**6)
                    products += rep.checked
                    if not rep.ok:
                        bad.append((g.graph_id, sorted(X), n, m))
    record(8, "filtration closure V_n V_m in V_(n+m), n, m <= 2", not bad,
           f"{cases} cases, {products} word products, violations {bad}")


def test_9_known_sequences(tmp_path, capsys):
    path = tmp_path / "rose2.json"
    path.write_text(serialize(rose(2)))
    expected = {
        "path": [2**k for k in range(21)],
        "cohn": [(k + 1) * 2**k for k in range(21)],
        "leavitt": [1, 4] + [2 ** (k - 2) * (3 * k + 5) for k in range(2, 21)],
    }
    bad = []
    for kind, want in expected.items():
        code = main(["dims", str(path), "--kind", kind, "--kmax", "20", "--format", "csv"])
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))[1:]
        got = [int(d) for _, d in rows]
        if code != 0 or got != want:
            bad.append(kind)
    record(9, "rose-2 rows from the dims command, k <= 20", not bad, f"kinds checked {list(expected)}, mismatched {bad}")
