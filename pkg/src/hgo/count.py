"""Exact orbit and graphlet census of a host graph."""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .canonical import min_key
from .catalog import Catalog, CatalogDescriptor
from .config import Limits
from .errors import ColorOutOfBounds, KExceedsOrder, VertexOutOfRange
from .generate import generate_graphs, generate_orbits
from .graph import ColoredGraph, Key, matrix_is_connected
from .store import CatalogStore


@dataclass(frozen=True)
class CountVector:
    descriptor: CatalogDescriptor
    counts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def nonzero(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.counts) if c}

    @property
    def total(self) -> int:
        return sum(self.counts)


def check_palette(g: ColoredGraph, v_c: int, e_c: int) -> None:
    bad_v = [c for c in g.vertex_color if c >= v_c]
    if bad_v:
        raise ColorOutOfBounds(f"host uses vertex color {max(bad_v)} but vcolors={v_c}")
    top = max((c for row in g.edge_color for c in row), default=0)
    if top > e_c:
        raise ColorOutOfBounds(f"host uses edge color {top} but ecolors={e_c}")


def _census(a: np.ndarray, directed: bool, subsets, fix_first: bool,
            connected_only: bool, method: str) -> dict[Key, int]:
    tally: dict[Key, int] = {}
    memo: dict[bytes, Key] = {}
    for idx in subsets:
        sub = a[np.ix_(idx, idx)]
        raw = sub.tobytes()
        key = memo.get(raw)
        if key is None:
            if connected_only and not matrix_is_connected(sub):
                key = memo[raw] = ()
            else:
                key = memo[raw] = min_key(sub, directed, fix_first, method)
        if key:
            tally[key] = tally.get(key, 0) + 1
    return tally


def _tally_to_vector(tally: dict[Key, int], catalog: Catalog) -> CountVector:
    counts = [0] * len(catalog)
    for key, c in tally.items():
        if key not in catalog.index:
            raise AssertionError(f"subgraph key {key} missing from catalog {catalog.descriptor}")
        counts[catalog.index[key]] += c
    return CountVector(catalog.descriptor, tuple(counts))


def _run(a, directed, pool_subsets, fix_first, connected_only, method, jobs):
    if jobs <= 1:
        return _census(a, directed, itertools.chain.from_iterable(pool_subsets), fix_first,
                       connected_only, method)
    merged: dict[Key, int] = {}
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        futures = [ex.submit(_census, a, directed, list(chunk), fix_first, connected_only, method)
                   for chunk in pool_subsets]
        for f in futures:
            for k, c in f.result().items():
                merged[k] = merged.get(k, 0) + c
    return merged


def _chunks(it, size: int):
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


def count_orbits(g: ColoredGraph, ref: int, k: int, v_c: int, e_c: int,
                 connected_only: bool = False, *,
                 catalog: Catalog | None = None,
                 store: CatalogStore | str | os.PathLike | None = None,
                 limits: Limits | None = None, method: str = "auto",
                 jobs: int = 1) -> CountVector:
    """Occurrences at ``ref`` of every orbit of the ``(k, v_c, e_c)`` catalog.

    Each (k-1)-subset ``S`` of the other vertices contributes one occurrence
    of the anchored orbit of ``[ref] + sorted(S)``.
    """
    if not 0 <= ref < g.order:
        raise VertexOutOfRange(f"ref {ref} outside 0..{g.order - 1}")
    if not 1 <= k <= g.order:
        raise KExceedsOrder(f"k={k} but host order is {g.order}")
    check_palette(g, v_c, e_c)
    if catalog is None:
        catalog = generate_orbits(k, v_c, e_c, g.directed, connected_only, store=store,
                                  limits=limits, method=method)
    a = g.matrix
    others = [v for v in range(g.order) if v != ref]
    subsets = ((ref,) + s for s in itertools.combinations(others, k - 1))
    tally = _run(a, g.directed, _chunks(subsets, 20000), True, connected_only, method, jobs)
    return _tally_to_vector(tally, catalog)


def count_graphlets(g: ColoredGraph, k: int, v_c: int, e_c: int,
                    connected_only: bool = False, *,
                    catalog: Catalog | None = None,
                    store: CatalogStore | str | os.PathLike | None = None,
                    limits: Limits | None = None, method: str = "auto",
                    jobs: int = 1) -> CountVector:
    """Occurrences of every graph of the ``(k, v_c, e_c)`` catalog as induced subgraphs."""
    if not 1 <= k <= g.order:
        raise KExceedsOrder(f"k={k} but host order is {g.order}")
    check_palette(g, v_c, e_c)
    if catalog is None:
        catalog = generate_graphs(k, v_c, e_c, g.directed, connected_only, store=store,
                                  limits=limits, method=method)
    subsets = itertools.combinations(range(g.order), k)
    tally = _run(g.matrix, g.directed, _chunks(subsets, 20000), False, connected_only, method, jobs)
    return _tally_to_vector(tally, catalog)


def expected_orbit_total(order: int, k: int) -> int:
    """Number of (k-1)-subsets around one vertex."""
    return math.comb(order - 1, k - 1)
