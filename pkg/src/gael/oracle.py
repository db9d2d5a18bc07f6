"""Brute-force model of relative Cohn algebras by rewriting lam mu* words.

Elements are finite rational combinations of words ``(lam, mu)`` with
r(lam) = r(mu). The relation e* f = delta_{e,f} r(e) is built into
:func:`multiply`. For each v in X one emitted edge g_v is special, and

    (a g_v, b g_v)  ->  (a, b) - sum_{e in s^-1(v), e != g_v} (a e, b e),

which is the identity v = sum_e e e* conjugated by a and b*. Words with no
such rewrite are irreducible and are counted as basis elements.

Everything here is slow on purpose and independent of the closed-form
counts in :mod:`gael.filtration`.
"""

from __future__ import annotations

import itertools
import os
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from gael.graph import Graph, GraphError

DEFAULT_MAX_WORDS = 20_000


class OracleTooLarge(RuntimeError):
    pass


def max_words_default() -> int:
    return int(os.environ.get("GAEL_MAX_ORACLE_WORDS", DEFAULT_MAX_WORDS))


class NormalFormWord(NamedTuple):
    """The word ``lam mu*``; ``vertex`` is the common range r(lam) = r(mu)."""

    lam: tuple[str, ...]
    mu: tuple[str, ...]
    vertex: str

    @property
    def weight(self) -> int:
        return len(self.lam) + len(self.mu)

    def __str__(self):
        bar = f"{self.vertex}̄"
        return f"({' '.join(self.lam) or bar}, {' '.join(self.mu) or bar})"


def vertex_word(v: str) -> NormalFormWord:
    return NormalFormWord((), (), v)


@dataclass(frozen=True)
class SpecialEdgeChoice:
    """Graph, relative subset X and the special edge g_v for each v in X."""

    graph: Graph
    gamma: dict[str, str] = field(hash=False)

    @classmethod
    def default(cls, g: Graph, X: Iterable[str]) -> "SpecialEdgeChoice":
        return cls.build(g, {v: g.emitted(v)[0] for v in _check_x(g, X)})

    @classmethod
    def build(cls, g: Graph, gamma: dict[str, str]) -> "SpecialEdgeChoice":
        for v, e in gamma.items():
            if g.source(e) != v:
                raise GraphError(f"special edge {e!r} is not emitted by {v!r}")
        return cls(g, dict(gamma))

    @property
    def X(self) -> frozenset[str]:
        return frozenset(self.gamma)

    def is_reducible(self, w: NormalFormWord) -> bool:
        if not w.lam or not w.mu or w.lam[-1] != w.mu[-1]:
            return False
        e = w.lam[-1]
        return self.gamma.get(self.graph.source(e)) == e


def all_choices(g: Graph, X: Iterable[str]) -> Iterator[SpecialEdgeChoice]:
    xs = [v for v in g.vertices if v in _check_x(g, X)]
    for picks in itertools.product(*(g.emitted(v) for v in xs)):
        yield SpecialEdgeChoice.build(g, dict(zip(xs, picks)))


def _check_x(g: Graph, X: Iterable[str]) -> frozenset[str]:
    X = frozenset(X)
    reg = set(g.regular)
    for v in X:
        if v not in reg:
            raise GraphError(f"{v!r} is not a regular vertex")
    return X


class AlgebraElement:
    """Finitely supported map word -> Fraction; zero coefficients are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[NormalFormWord, Fraction] = {}
        for w, c in (terms or {}).items():
            self._add(w, Fraction(c))

    @classmethod
    def word(cls, w: NormalFormWord, coeff=1) -> "AlgebraElement":
        return cls({w: coeff})

    def _add(self, w, c):
        total = self.terms.get(w, 0) + c
        if total:
            self.terms[w] = total
        else:
            self.terms.pop(w, None)

    def __add__(self, other):
        out = AlgebraElement(self.terms)
        for w, c in other.terms.items():
            out._add(w, c)
        return out

    def __neg__(self):
        return AlgebraElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return AlgebraElement({w: scalar * c for w, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{w}" for w, c in sorted(self.terms.items()))

    @property
    def max_weight(self) -> int:
        return max((w.weight for w in self.terms), default=-1)


def reduce(x: AlgebraElement, choice: SpecialEdgeChoice) -> AlgebraElement:
    """Rewrite until no reducible word is left, heaviest reducible word first."""
    terms = dict(x.terms)
    g = choice.graph
    while True:
        reducible = [w for w in terms if choice.is_reducible(w)]
        if not reducible:
            return AlgebraElement(terms)
        w = max(reducible, key=lambda u: (u.weight, u))
        c = terms.pop(w)
        gamma = w.lam[-1]
        v = g.source(gamma)
        a, b = w.lam[:-1], w.mu[:-1]
        updates = [(NormalFormWord(a, b, v), c)]
        updates += [
            (NormalFormWord(a + (e,), b + (e,), g.range(e)), -c)
            for e in g.emitted(v)
            if e != gamma
        ]
        for u, d in updates:
            total = terms.get(u, 0) + d
            if total:
                terms[u] = total
            else:
                terms.pop(u, None)


def _path_source(g: Graph, path: tuple[str, ...], vertex: str) -> str:
    return g.source(path[0]) if path else vertex


def multiply_words(g: Graph, x: NormalFormWord, y: NormalFormWord) -> NormalFormWord | None:
    """``(lam mu*)(alpha beta*)`` as a single word, or None when it vanishes."""
    lam, mu, v1 = x
    alpha, beta, v2 = y
    if _path_source(g, mu, v1) != _path_source(g, alpha, v2):
        return None
    if alpha[: len(mu)] == mu:
        return NormalFormWord(lam + alpha[len(mu) :], beta, v2)
    if mu[: len(alpha)] == alpha:
        return NormalFormWord(lam, beta + mu[len(alpha) :], v1)
    return None


def multiply(a: AlgebraElement, b: AlgebraElement, choice: SpecialEdgeChoice) -> AlgebraElement:
    out: dict[NormalFormWord, Fraction] = defaultdict(Fraction)
    for x, c in a:
        for y, d in b:
            w = multiply_words(choice.graph, x, y)
            if w is not None:
                out[w] += c * d
    return reduce(AlgebraElement(out), choice)


def path_levels(g: Graph, k: int) -> list[dict[str, list[tuple[str, ...]]]]:
    """Paths of each length 0..k, grouped by range vertex."""
    levels = [{v: [()] for v in g.vertices}]
    for _ in range(k):
        nxt: dict[str, list[tuple[str, ...]]] = {v: [] for v in g.vertices}
        for v, paths in levels[-1].items():
            for e in g.emitted(v):
                nxt[g.range(e)].extend(p + (e,) for p in paths)
        levels.append(nxt)
    return levels


def paths_by_range(g: Graph, length: int) -> dict[str, list[tuple[str, ...]]]:
    """All paths of exactly ``length`` edges, grouped by range vertex."""
    return path_levels(g, length)[length]


def _word_count(g: Graph, k: int, exact_weight: bool = True) -> int:
    sizes = [{v: len(ps) for v, ps in lvl.items()} for lvl in path_levels(g, k)]
    weights = [k] if exact_weight else range(k + 1)
    return sum(sizes[s][v] * sizes[w - s][v] for w in weights for s in range(w + 1) for v in g.vertices)


def _guard(g: Graph, k: int, max_words: int | None, exact_weight: bool = True) -> None:
    cap = max_words_default() if max_words is None else max_words
    count = _word_count(g, k, exact_weight)
    if count > cap:
        raise OracleTooLarge(f"{count} spanning words exceed the cap of {cap}")


def spanning_words(g: Graph, k: int) -> Iterator[NormalFormWord]:
    """Words of weight exactly ``k``, ordered by len(lam) then document order."""
    paths = path_levels(g, k)
    for s in range(k + 1):
        for v in g.vertices:
            for lam in paths[s][v]:
                for mu in paths[k - s][v]:
                    yield NormalFormWord(lam, mu, v)


def enumerate_spanning(g: Graph, k: int, max_words: int | None = None) -> list[NormalFormWord]:
    """All words of weight at most ``k``; vertices appear as weight-0 words."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    _guard(g, k, max_words, exact_weight=False)
    return [w for weight in range(k + 1) for w in spanning_words(g, weight)]


def irreducible_words(g: Graph, choice: SpecialEdgeChoice, k: int) -> list[NormalFormWord]:
    return [w for weight in range(k + 1) for w in spanning_words(g, weight) if not choice.is_reducible(w)]


def graded_dim_bruteforce(
    g: Graph,
    X: Iterable[str],
    k: int,
    strong: bool = False,
    choice: SpecialEdgeChoice | None = None,
    max_words: int | None = None,
) -> int:
    """Count irreducible words of weight exactly ``k``.

    With ``strong=True`` every reducible word of weight k is also rewritten
    and must land on irreducible words of weight <= k.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if choice is None:
        choice = SpecialEdgeChoice.default(g, X)
    _guard(g, k, max_words)
    count = 0
    for w in spanning_words(g, k):
        if not choice.is_reducible(w):
            count += 1
        elif strong:
            red = reduce(AlgebraElement.word(w), choice)
            if red.max_weight > k or any(choice.is_reducible(u) for u, _ in red):
                raise AssertionError(f"{w} reduced to {red}")
    return count


@dataclass
class ClosureReport:
    n: int
    m: int
    checked: int = 0
    violations: list[tuple[NormalFormWord, NormalFormWord]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def product_closure_check(
    g: Graph, X: Iterable[str], n: int, m: int, max_words: int | None = None
) -> ClosureReport:
    """Check V_n V_m inside V_{n+m} over all irreducible word pairs."""
    choice = SpecialEdgeChoice.default(g, X)
    _guard(g, max(n, m), max_words, exact_weight=False)
    left = irreducible_words(g, choice, n)
    right = left if m == n else irreducible_words(g, choice, m)
    report = ClosureReport(n, m)
    for a in left:
        for b in right:
            report.checked += 1
            prod = multiply(AlgebraElement.word(a), AlgebraElement.word(b), choice)
            if prod.max_weight > n + m:
                report.violations.append((a, b))
    return report


@dataclass
class ChoiceReport:
    k: int
    counts: dict[tuple[tuple[str, str], ...], tuple[int, ...]]

    @property
    def independent(self) -> bool:
        return len(set(self.counts.values())) <= 1


def choice_independence_check(
    g: Graph, X: Iterable[str], k: int, max_words: int | None = None
) -> ChoiceReport:
    """Irreducible counts per weight under every admissible special-edge choice."""
    counts = {}
    for choice in all_choices(g, X):
        key = tuple(sorted(choice.gamma.items()))
        counts[key] = tuple(
            graded_dim_bruteforce(g, X, j, choice=choice, max_words=max_words) for j in range(k + 1)
        )
    return ChoiceReport(k, counts)
