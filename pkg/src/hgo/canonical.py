"""Canonical keys of colored graphs and anchored orbits.

The canonical key of a graph is the lexicographically smallest serialization
over all relabelings of its vertices. The key of the orbit of vertex ``ref``
is obtained by first swapping ``ref`` into position 0 and then minimizing over
the relabelings that keep position 0 fixed.

Two search routes produce the same minimum:

* ``"brute"`` evaluates every relabeling (vectorized, chunked);
* ``"pruned"`` builds the relabeling position by position and keeps only the
  partial relabelings whose already-determined key prefix is minimal. Twin
  vertices (whose transposition is an automorphism fixing the partial
  relabeling) are expanded once.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT_LIMITS, Limits
from .errors import OrderTooLarge, VertexOutOfRange
from .graph import ColoredGraph, Key, Permutation, key_layout

OrderedPartition = tuple[tuple[int, ...], ...]

# Number of key minimizations performed, for cache and profiling checks.
stats: Counter = Counter()

_BRUTE_MAX = 8
_CHUNK = 1 << 16


@dataclass(frozen=True)
class OrbitClass:
    key: Key
    member_vertices: frozenset[int]


@lru_cache(maxsize=None)
def _perm_table(n: int, fix_first: bool) -> np.ndarray:
    if fix_first:
        rest = itertools.permutations(range(1, n))
        table = np.array([(0,) + p for p in rest], dtype=np.intp).reshape(-1, n)
    else:
        table = np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)
    table.setflags(write=False)
    return table


def _perm_chunks(n: int, fix_first: bool) -> Iterable[np.ndarray]:
    if n <= _BRUTE_MAX:
        yield _perm_table(n, fix_first)
        return
    if fix_first:
        it = ((0,) + p for p in itertools.permutations(range(1, n)))
    else:
        it = itertools.permutations(range(n))
    while True:
        chunk = list(itertools.islice(it, _CHUNK))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.intp)


def _argmin_rows(rows: np.ndarray) -> np.ndarray:
    """Indices of all rows equal to the lexicographically smallest row."""
    cand = np.arange(rows.shape[0])
    for j in range(rows.shape[1]):
        col = rows[cand, j]
        cand = cand[col == col.min()]
        if cand.size == 1:
            break
    return cand


def min_key_brute(a: np.ndarray, directed: bool, fix_first: bool = False) -> Key:
    n = a.shape[0]
    rows, cols = key_layout(n, directed)
    best = None
    for perms in _perm_chunks(n, fix_first):
        keys = a[perms[:, rows], perms[:, cols]]
        cand = keys[_argmin_rows(keys)[0]]
        if best is None or tuple(cand) < best:
            best = tuple(cand.tolist())
    return best


@lru_cache(maxsize=None)
def _prefix_bounds(n: int, directed: bool) -> tuple[int, ...]:
    # bounds[d]: how many leading key entries are fixed once positions 0..d are chosen
    rows, cols = key_layout(n, directed)
    running = np.maximum.accumulate(np.maximum(rows, cols))
    return tuple(int(np.searchsorted(running, d, side="right")) for d in range(n))


def _twin_classes(a: np.ndarray) -> list[int]:
    """rep[v] = smallest w such that transposing v and w is an automorphism."""
    n = a.shape[0]
    rep = list(range(n))
    for v in range(n):
        if rep[v] != v:
            continue
        for w in range(v + 1, n):
            if rep[w] != w or a[v, v] != a[w, w]:
                continue
            if a[v, w] != a[w, v]:
                continue
            others = [x for x in range(n) if x != v and x != w]
            if (np.array_equal(a[v, others], a[w, others])
                    and np.array_equal(a[others, v], a[others, w])):
                rep[w] = v
    return rep


def min_key_pruned(a: np.ndarray, directed: bool, fix_first: bool = False) -> Key:
    n = a.shape[0]
    rows, cols = key_layout(n, directed)
    bounds = _prefix_bounds(n, directed)
    rep = _twin_classes(a)
    if fix_first:
        partials = [(0,)]
    else:
        partials = [(v,) for v in range(n) if rep[v] == v]
    lo = 0
    for d in range(n):
        if d > 0:
            grown = []
            for p in partials:
                used = set(p)
                for v in range(n):
                    if v in used:
                        continue
                    # a twin of an unused smaller vertex gives the same subtree
                    r = rep[v]
                    if r != v and r not in used:
                        continue
                    grown.append(p + (v,))
            partials = grown
        hi = bounds[d]
        if hi > lo:
            perms = np.array(partials, dtype=np.intp)
            seg = a[perms[:, rows[lo:hi]], perms[:, cols[lo:hi]]]
            partials = [partials[i] for i in _argmin_rows(seg)]
            lo = hi
    p = np.array(partials[0], dtype=np.intp)
    return tuple(a[p[rows], p[cols]].tolist())


def _check_order(n: int, limits: Limits | None) -> None:
    limits = limits or DEFAULT_LIMITS
    if n > limits.max_canonical_order:
        raise OrderTooLarge(
            f"order {n} exceeds max_canonical_order={limits.max_canonical_order}")


def min_key(a: np.ndarray, directed: bool, fix_first: bool = False,
            method: str = "auto") -> Key:
    """Smallest serialization of matrix ``a`` over relabelings (no guards)."""
    stats["canonical"] += 1
    if method == "auto":
        method = "brute" if a.shape[0] <= 6 else "pruned"
    if method == "brute":
        return min_key_brute(a, directed, fix_first)
    if method == "pruned":
        return min_key_pruned(a, directed, fix_first)
    raise ValueError(f"unknown method {method!r}")


def anchor(a: np.ndarray, ref: int) -> np.ndarray:
    """Swap vertex ``ref`` into position 0."""
    idx = np.arange(a.shape[0])
    idx[0], idx[ref] = ref, 0
    return a[np.ix_(idx, idx)]


def canonical_graph(g: ColoredGraph, method: str = "auto",
                    limits: Limits | None = None) -> Key:
    _check_order(g.order, limits)
    return min_key(g.matrix, g.directed, False, method)


def canonical_orbit(g: ColoredGraph, ref: int, method: str = "auto",
                    limits: Limits | None = None) -> Key:
    if not 0 <= ref < g.order:
        raise VertexOutOfRange(f"ref {ref} outside 0..{g.order - 1}")
    _check_order(g.order, limits)
    return min_key(anchor(g.matrix, ref), g.directed, True, method)


def color_partition(g: ColoredGraph) -> OrderedPartition:
    by_color = defaultdict(list)
    for v, c in enumerate(g.vertex_color):
        by_color[c].append(v)
    return tuple(tuple(by_color[c]) for c in sorted(by_color))


def refine_partition(g: ColoredGraph,
                     partition: Sequence[Iterable[int]] | None = None) -> OrderedPartition:
    """Coarsest equitable refinement of ``partition`` (default: one cell).

    The degree of ``v`` into a cell is the sum of matrix entries in row ``v``
    over the cell's columns (diagonal included); directed graphs also use the
    column sums. Cells split stably, sub-cells ordered by signature.
    """
    n = g.order
    cells = [tuple(sorted(c)) for c in (partition or [range(n)])]
    flat = sorted(v for c in cells for v in c)
    if flat != list(range(n)) or any(not c for c in cells):
        raise ValueError("not an ordered partition of the vertex set")
    a = g.matrix
    while True:
        member = np.zeros((n, len(cells)), dtype=np.int64)
        for i, c in enumerate(cells):
            member[list(c), i] = 1
        sig = a @ member
        if g.directed:
            sig = np.hstack([sig, a.T @ member])
        split = []
        for c in cells:
            groups = defaultdict(list)
            for v in c:
                groups[tuple(sig[v].tolist())].append(v)
            split.extend(tuple(groups[s]) for s in sorted(groups))
        if len(split) == len(cells):
            return tuple(split)
        cells = split


def _cell_preserving_perms(cells: OrderedPartition, n: int) -> Iterable[tuple[int, ...]]:
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        m = [0] * n
        for cell, image in zip(cells, choice):
            for v, w in zip(cell, image):
                m[v] = w
        yield tuple(m)


def automorphisms(g: ColoredGraph, method: str = "refined",
                  limits: Limits | None = None) -> set[Permutation]:
    """All relabelings fixing ``g``.

    ``"refined"`` only tries relabelings that map each cell of the equitable
    refinement of the color partition onto itself; every automorphism does.
    """
    _check_order(g.order, limits)
    n = g.order
    a = g.matrix
    if method == "brute":
        candidates = itertools.permutations(range(n))
    elif method == "refined":
        candidates = _cell_preserving_perms(refine_partition(g, color_partition(g)), n)
    else:
        raise ValueError(f"unknown method {method!r}")
    out = set()
    for m in candidates:
        p = np.asarray(m)
        if np.array_equal(a[np.ix_(p, p)], a):
            out.add(Permutation(m))
    return out


def vertex_orbit_partition(g: ColoredGraph, method: str = "auto",
                           limits: Limits | None = None) -> tuple[OrbitClass, ...]:
    """Vertices grouped by anchored-orbit key, sorted by key."""
    _check_order(g.order, limits)
    a = g.matrix
    groups: dict[Key, set[int]] = defaultdict(set)
    for v in range(g.order):
        groups[min_key(anchor(a, v), g.directed, True, method)].add(v)
    return tuple(OrbitClass(k, frozenset(vs)) for k, vs in sorted(groups.items()))
