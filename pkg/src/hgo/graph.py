"""Colored (di)graph data model, key codec and basic operations.

Vertex colors are 0-based. Edge colors are 1-based and 0 means "no edge".
In matrix form the diagonal holds vertex colors and the off-diagonal entries
hold edge colors, so a colored graph is just a square matrix of
non-negative integers.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    AsymmetricUndirectedEdge,
    BadLength,
    BadPermutation,
    DuplicateVertex,
    NegativeColor,
    SelfLoop,
    ValidationError,
    VertexOutOfRange,
)

Key = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``0..n-1``; ``mapping[v]`` is the image of ``v``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.mapping)
        if sorted(m) != list(range(len(m))):
            raise BadPermutation(f"not a bijection on 0..{len(m) - 1}: {m}")
        object.__setattr__(self, "mapping", m)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        m = list(range(n))
        m[a], m[b] = m[b], m[a]
        return cls(tuple(m))

    def __len__(self) -> int:
        return len(self.mapping)

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self.mapping[other.mapping[v]] for v in range(len(self))))

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for v, w in enumerate(self.mapping):
            inv[w] = v
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class ColoredGraph:
    order: int
    directed: bool
    vertex_color: tuple[int, ...]
    edge_color: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise BadLength("a graph needs at least one vertex")
        if len(self.vertex_color) != n or len(self.edge_color) != n:
            raise BadLength("color arrays do not match the order")
        if any(c < 0 for c in self.vertex_color):
            raise NegativeColor("vertex colors must be >= 0")
        for i, row in enumerate(self.edge_color):
            if len(row) != n:
                raise BadLength("edge matrix is not square")
            for j, c in enumerate(row):
                if c < 0:
                    raise NegativeColor(f"edge ({i},{j}) has negative color {c}")
                if i == j and c != 0:
                    raise SelfLoop(f"self-loop at vertex {i}")
                if not self.directed and c != self.edge_color[j][i]:
                    raise AsymmetricUndirectedEdge(f"edge ({i},{j}) differs from ({j},{i})")

    @classmethod
    def from_matrix(cls, matrix, directed: bool) -> ColoredGraph:
        """Build from a square matrix with vertex colors on the diagonal."""
        a = np.asarray(matrix, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise BadLength(f"expected a square matrix, got shape {a.shape}")
        n = a.shape[0]
        colors = tuple(int(x) for x in np.diagonal(a))
        edges = tuple(tuple(0 if i == j else int(a[i, j]) for j in range(n)) for i in range(n))
        return cls(n, bool(directed), colors, edges)

    @property
    def matrix(self) -> np.ndarray:
        a = np.array(self.edge_color, dtype=np.int64).reshape(self.order, self.order)
        np.fill_diagonal(a, self.vertex_color)
        return a

    def edges(self) -> list[tuple[int, int, int]]:
        """Present edges as ``(u, v, color)``; ``u < v`` when undirected."""
        out = []
        for u in range(self.order):
            for v in range(self.order):
                c = self.edge_color[u][v]
                if c and (self.directed or u < v):
                    out.append((u, v, c))
        return out

    def as_directed(self) -> ColoredGraph:
        """Same graph with every undirected edge read as a pair of arcs."""
        return ColoredGraph(self.order, True, self.vertex_color, self.edge_color)


def build(
    order: int,
    directed: bool,
    vertex_colors: Sequence[int] | None = None,
    edge_entries: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]] = (),
) -> ColoredGraph:
    """Validated constructor.

    ``edge_entries`` is either a mapping ``(u, v) -> color`` or an iterable of
    ``(u, v, color)`` triples. Undirected pairs may be given once or twice, as
    long as both mentions agree.
    """
    if vertex_colors is None:
        vertex_colors = [0] * order
    if len(vertex_colors) != order:
        raise BadLength(f"{len(vertex_colors)} vertex colors for order {order}")
    if isinstance(edge_entries, Mapping):
        triples = [(u, v, c) for (u, v), c in edge_entries.items()]
    else:
        triples = list(edge_entries)
    m = [[0] * order for _ in range(order)]
    seen: dict[tuple[int, int], int] = {}
    for u, v, c in triples:
        if not (0 <= u < order and 0 <= v < order):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{order - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if c < 0:
            raise NegativeColor(f"edge ({u},{v}) has negative color {c}")
        slot = (u, v) if directed else (min(u, v), max(u, v))
        if slot in seen and seen[slot] != c:
            if directed:
                raise ValidationError(f"arc ({u},{v}) given twice with different colors")
            raise AsymmetricUndirectedEdge(f"edge {slot} given with colors {seen[slot]} and {c}")
        seen[slot] = c
        m[u][v] = c
        if not directed:
            m[v][u] = c
    return ColoredGraph(order, bool(directed), tuple(int(c) for c in vertex_colors),
                        tuple(tuple(r) for r in m))


@lru_cache(maxsize=None)
def key_layout(n: int, directed: bool) -> tuple[np.ndarray, np.ndarray]:
    """Row and column index arrays giving the serialization order.

    Undirected: lower triangle including the diagonal, row by row.
    Directed: the full matrix, row by row.
    """
    if directed:
        rows, cols = np.divmod(np.arange(n * n), n)
    else:
        rows, cols = np.tril_indices(n)
    rows.setflags(write=False)
    cols.setflags(write=False)
    return rows, cols


def key_length(n: int, directed: bool) -> int:
    return n * n if directed else n * (n + 1) // 2


def order_from_length(length: int, directed: bool) -> int:
    if directed:
        n = math.isqrt(length)
    else:
        n = (math.isqrt(8 * length + 1) - 1) // 2
    if n < 1 or key_length(n, directed) != length:
        raise BadLength(f"no {'directed' if directed else 'undirected'} order has key length {length}")
    return n


def serialize_matrix(a: np.ndarray, directed: bool) -> Key:
    rows, cols = key_layout(a.shape[0], directed)
    return tuple(a[rows, cols].tolist())


def serialize(g: ColoredGraph) -> Key:
    return serialize_matrix(g.matrix, g.directed)


def key_to_matrix(key: Sequence[int], directed: bool) -> np.ndarray:
    n = order_from_length(len(key), directed)
    a = np.zeros((n, n), dtype=np.int64)
    rows, cols = key_layout(n, directed)
    a[rows, cols] = key
    if not directed:
        a[cols, rows] = key
    return a


def deserialize(key: Sequence[int], directed: bool) -> ColoredGraph:
    return ColoredGraph.from_matrix(key_to_matrix(key, directed), directed)


def induced_subgraph(g: ColoredGraph, vertices: Sequence[int]) -> ColoredGraph:
    """Subgraph on ``vertices``; position ``i`` of the result is ``vertices[i]``."""
    if len(vertices) == 0:
        raise BadLength("vertex sequence is empty")
    for v in vertices:
        if not 0 <= v < g.order:
            raise VertexOutOfRange(f"vertex {v} outside 0..{g.order - 1}")
    if len(set(vertices)) != len(vertices):
        raise DuplicateVertex(f"repeated vertex in {list(vertices)}")
    idx = np.asarray(vertices)
    return ColoredGraph.from_matrix(g.matrix[np.ix_(idx, idx)], g.directed)


def matrix_is_connected(a: np.ndarray) -> bool:
    """Weak connectivity of the off-diagonal support of ``a``."""
    n = a.shape[0]
    if n <= 1:
        return True
    adj = (a != 0) | (a.T != 0)
    np.fill_diagonal(adj, False)
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in np.flatnonzero(adj[u] & ~seen):
            seen[w] = True
            queue.append(int(w))
    return bool(seen.all())


def is_connected(g: ColoredGraph) -> bool:
    return matrix_is_connected(g.matrix)


def permute_matrix(a: np.ndarray, mapping: Sequence[int]) -> np.ndarray:
    """Matrix of the graph in which vertex ``v`` is relabeled ``mapping[v]``."""
    n = a.shape[0]
    inv = np.empty(n, dtype=np.intp)
    inv[np.asarray(mapping)] = np.arange(n)
    return a[np.ix_(inv, inv)]


def permute(g: ColoredGraph, perm: Permutation | Sequence[int]) -> ColoredGraph:
    if not isinstance(perm, Permutation):
        perm = Permutation(tuple(perm))
    if len(perm) != g.order:
        raise BadPermutation(f"permutation of size {len(perm)} for order {g.order}")
    return ColoredGraph.from_matrix(permute_matrix(g.matrix, perm.mapping), g.directed)
