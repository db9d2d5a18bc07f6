"""Named graphs and seeded test corpora."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

import numpy as np

from gael.graph import Graph, random_graph


def rose(petals: int) -> Graph:
    """One vertex with ``petals`` loops."""
    return Graph(("v",), tuple((f"e{i}", "v", "v") for i in range(1, petals + 1)), frozenset({"v"}) if petals else None)


def line(length: int = 1) -> Graph:
    """The acyclic line graph A_{length+1}: v0 -> v1 -> ... ."""
    vs = tuple(f"v{i}" for i in range(length + 1))
    return Graph(vs, tuple((f"e{i}", vs[i], vs[i + 1]) for i in range(length)))


def a2() -> Graph:
    return Graph(("v", "w"), (("e", "v", "w"),))


def cycle(n: int = 2) -> Graph:
    vs = tuple(f"v{i}" for i in range(n))
    return Graph(vs, tuple((f"e{i}", vs[i], vs[(i + 1) % n]) for i in range(n)))


def fibonacci() -> Graph:
    """Adjacency matrix [[1, 1], [1, 0]]."""
    return Graph(("v", "w"), (("f", "v", "v"), ("g", "v", "w"), ("h", "w", "v")))


def named_graphs() -> dict[str, Graph]:
    return {
        "rose-2": rose(2),
        "rose-3": rose(3),
        "fibonacci": fibonacci(),
        "2-cycle": cycle(2),
        "A_2": a2(),
    }


def random_corpus(count: int, seed: int, max_vertices: int = 4, max_edges: int = 6) -> list[Graph]:
    """``count`` random graphs with 1..max_vertices vertices and 1..max_edges edges."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, max_vertices + 1))
        m = int(rng.integers(1, max_edges + 1))
        out.append(random_graph(n, m, int(rng.integers(2**31))))
    return out


def acceptance_corpus(seed: int = 2024) -> dict[str, Graph]:
    corpus = named_graphs()
    for i, g in enumerate(random_corpus(10, seed)):
        corpus[f"random-{i}"] = g
    return corpus


def _canonical(n: int, slots: tuple[tuple[int, int], ...]) -> tuple:
    return min(
        tuple(sorted((p[s], p[r]) for s, r in slots)) for p in itertools.permutations(range(n))
    )


def small_graphs(max_vertices: int, max_edges: int) -> Iterator[Graph]:
    """Every multigraph with at most the given sizes, one per isomorphism class.

    Edges are named e0, e1, ... in sorted (source, range) order.
    """
    for n in range(1, max_vertices + 1):
        cells = [(s, r) for s in range(n) for r in range(n)]
        seen = set()
        for m in range(max_edges + 1):
            for slots in itertools.combinations_with_replacement(cells, m):
                key = _canonical(n, slots)
                if key in seen:
                    continue
                seen.add(key)
                vs = tuple(f"v{i}" for i in range(n))
                yield Graph(vs, tuple((f"e{j}", vs[s], vs[r]) for j, (s, r) in enumerate(key)))


def subsets(items: Iterable) -> Iterator[frozenset]:
    items = list(items)
    for size in range(len(items) + 1):
        for combo in itertools.combinations(items, size):
            yield frozenset(combo)
