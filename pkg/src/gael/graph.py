"""Finite directed multigraphs: parsing, validation, serialization.

Vertex and edge order is always document order; every matrix and report
in the package is indexed against it.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from gael.exact import ExactMatrix

_DOC_KEYS = {"vertices", "edges", "X"}
_EDGE_LINE = re.compile(r"^\s*(\S+)\s*->\s*(\S+)(?:\s+(\S+))?\s*$")


class GraphError(ValueError):
    """Raised for malformed graph documents or invalid graph data."""


@dataclass(frozen=True)
class Graph:
    """A finite directed multigraph with a distinguished vertex subset X.

    ``X`` is ``None`` when the source document omitted it; see
    :meth:`resolve_x` for how that is interpreted.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]
    X: frozenset[str] | None = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.X is not None:
            object.__setattr__(self, "X", frozenset(self.X))
        self._validate()

    def _validate(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex names")
        names = [e[0] for e in self.edges]
        if len(set(names)) != len(names):
            raise GraphError("duplicate edge names")
        vset = set(self.vertices)
        if vset & set(names):
            raise GraphError("vertex and edge names must be disjoint")
        for e in self.edges:
            if len(e) != 3:
                raise GraphError(f"edge {e!r} is not a [name, source, range] triple")
            for end in e[1:]:
                if end not in vset:
                    raise GraphError(f"edge {e[0]!r} uses unknown vertex {end!r}")
        if self.X is not None:
            reg = set(self.regular)
            for v in self.X:
                if v not in vset:
                    raise GraphError(f"X member {v!r} is not a vertex")
                if v not in reg:
                    raise GraphError(f"X member {v!r} is not a regular vertex")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index(self, v: str) -> int:
        return self._index[v]

    def source(self, edge: str) -> str:
        return self.edge_map[edge][0]

    def range(self, edge: str) -> str:
        return self.edge_map[edge][1]

    @cached_property
    def edge_map(self) -> dict[str, tuple[str, str]]:
        return {name: (s, r) for name, s, r in self.edges}

    def emitted(self, v: str) -> list[str]:
        """Edges with source ``v``, in document order."""
        return [name for name, s, _ in self.edges if s == v]

    @property
    def sinks(self) -> tuple[str, ...]:
        emitters = {s for _, s, _ in self.edges}
        return tuple(v for v in self.vertices if v not in emitters)

    @property
    def sources(self) -> tuple[str, ...]:
        receivers = {r for _, _, r in self.edges}
        return tuple(v for v in self.vertices if v not in receivers)

    @property
    def regular(self) -> tuple[str, ...]:
        # finite graph: no infinite emitters, so Reg(E) = E^0 minus sinks
        sinks = set(self.sinks)
        return tuple(v for v in self.vertices if v not in sinks)

    def resolve_x(self, kind: str = "relative") -> frozenset[str]:
        """The subset X used for an algebra kind.

        ``leavitt`` always means X = Reg(E), ``cohn`` means X = {}, and
        ``relative`` uses the document's X (empty when omitted).
        """
        if kind == "leavitt":
            return frozenset(self.regular)
        if kind == "cohn":
            return frozenset()
        if kind == "relative":
            return self.X if self.X is not None else frozenset()
        raise GraphError(f"unknown algebra kind {kind!r}")

    def x_indices(self, X: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(v) for v in X)

    def with_x(self, X: Iterable[str] | None) -> "Graph":
        return Graph(self.vertices, self.edges, None if X is None else frozenset(X))

    @property
    def graph_id(self) -> str:
        """Short content hash of the canonical document."""
        text = json.dumps(to_document(self), sort_keys=True, separators=(",", ":"))
        return hashlib.sha1(text.encode("utf-8")).hexdigest()[:12]


def adjacency_matrix(g: Graph) -> ExactMatrix:
    """Rows index sources, columns ranges; entry = number of parallel edges."""
    rows = [[0] * g.n for _ in range(g.n)]
    for _, s, r in g.edges:
        rows[g.index(s)][g.index(r)] += 1
    return ExactMatrix(rows)


def classify_vertices(g: Graph) -> tuple[frozenset[str], frozenset[str], frozenset[str]]:
    """Return ``(sinks, sources, regular)``."""
    return frozenset(g.sinks), frozenset(g.sources), frozenset(g.regular)


def parse_graph(text: str | bytes) -> Graph:
    """Parse a canonical JSON graph document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed graph document: {exc}") from None
    return from_document(doc)


def from_document(doc) -> Graph:
    if not isinstance(doc, dict):
        raise GraphError("graph document must be a JSON object")
    unknown = set(doc) - _DOC_KEYS
    if unknown:
        raise GraphError(f"unknown fields: {sorted(unknown)}")
    if "vertices" not in doc or "edges" not in doc:
        raise GraphError("graph document needs 'vertices' and 'edges'")
    vertices, edges = doc["vertices"], doc["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise GraphError("'vertices' must be an array of strings")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 3 and all(isinstance(p, str) for p in e)
        for e in edges
    ):
        raise GraphError("'edges' must be an array of [name, source, range] string triples")
    X = doc.get("X")
    if X is not None and (
        not isinstance(X, list) or not all(isinstance(v, str) for v in X)
    ):
        raise GraphError("'X' must be an array of strings")
    if X is not None and len(set(X)) != len(X):
        raise GraphError("duplicate names in 'X'")
    return Graph(tuple(vertices), tuple(tuple(e) for e in edges), X)


def to_document(g: Graph) -> dict:
    doc = {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}
    if g.X is not None:
        # keep X in vertex order so serialization is deterministic
        doc["X"] = [v for v in g.vertices if v in g.X]
    return doc


def serialize(g: Graph) -> str:
    return json.dumps(to_document(g))


def parse_edge_list(text: str) -> Graph:
    """Parse ``src -> dst [name]`` lines; ``#`` starts a comment.

    Vertices are inferred in order of first appearance. Unnamed edges get
    ``e1, e2, ...`` by line position among edges.
    """
    vertices: list[str] = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _EDGE_LINE.match(line)
        if m is None:
            raise GraphError(f"line {lineno}: expected 'src -> dst [name]', got {raw!r}")
        src, dst, name = m.groups()
        for v in (src, dst):
            if v not in vertices:
                vertices.append(v)
        edges.append((name or f"e{len(edges) + 1}", src, dst))
    return Graph(tuple(vertices), tuple(edges), None)


def random_graph(n_vertices: int, n_edges: int, seed: int, X: Iterable[str] | None = None) -> Graph:
    """Seeded random multigraph with uniform endpoints; X defaults to Reg(E)."""
    if n_vertices < 1 or n_edges < 0:
        raise GraphError("need n_vertices >= 1 and n_edges >= 0")
    rng = np.random.default_rng(seed)
    vertices = tuple(f"v{i}" for i in range(n_vertices))
    ends = rng.integers(0, n_vertices, size=(n_edges, 2))
    edges = tuple((f"e{j}", vertices[s], vertices[r]) for j, (s, r) in enumerate(ends.tolist()))
    g = Graph(vertices, edges, None)
    return g.with_x(g.regular if X is None else X)
