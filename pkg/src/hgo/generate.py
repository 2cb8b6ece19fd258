"""Isomorph-free generation of graph and orbit catalogs.

Graphs of type (n, v_c, e_c) are built bottom-up:

1. order min(n, 3), one vertex color, min(e_c, 2) edge colors by brute force;
2. one edge color added per round up to e_c;
3. one vertex added per round up to order n;
4. vertices colored with up to v_c colors.

Every round ends with deduplication by canonical key. The orbit catalog
collects the anchored-orbit key of every vertex of every graph. Intermediate
catalogs are themselves complete catalogs of smaller types, so with a store
attached they are cached and reused.
"""

from __future__ import annotations

import itertools
import logging
import os
import time
from typing import Iterable

import numpy as np

from .canonical import anchor, min_key
from .catalog import Catalog, CatalogDescriptor
from .config import DEFAULT_LIMITS, Limits
from .errors import TypeTooLarge
from .graph import Key, key_to_matrix, matrix_is_connected
from .store import CatalogStore

log = logging.getLogger(__name__)


def _slots(n: int, directed: bool) -> list[tuple[int, int]]:
    if directed:
        return [(i, j) for i in range(n) for j in range(n) if i != j]
    return [(i, j) for i in range(n) for j in range(i)]


def _fill(a: np.ndarray, slots, values, directed: bool) -> None:
    for (i, j), c in zip(slots, values):
        a[i, j] = c
        if not directed:
            a[j, i] = c


def labeled_matrices(n: int, v_c: int, e_c: int, directed: bool) -> Iterable[np.ndarray]:
    """Every labeled colored graph of order ``n`` (exponential; small types only)."""
    slots = _slots(n, directed)
    for colors in itertools.product(range(v_c), repeat=n):
        for edges in itertools.product(range(e_c + 1), repeat=len(slots)):
            a = np.zeros((n, n), dtype=np.int64)
            np.fill_diagonal(a, colors)
            _fill(a, slots, edges, directed)
            yield a


def _dedup(mats: Iterable[np.ndarray], directed: bool, method: str) -> set[Key]:
    return {min_key(a, directed, False, method) for a in mats}


def _check_size(n_keys: int, desc: CatalogDescriptor, limits: Limits) -> None:
    if n_keys > limits.max_catalog_size:
        raise TypeTooLarge(
            f"catalog {desc} has {n_keys} keys, above max_catalog_size="
            f"{limits.max_catalog_size} (override with --max-catalog)")


def brute_force_graphs(n: int, v_c: int, e_c: int, directed: bool = False,
                       method: str = "auto") -> Catalog:
    desc = CatalogDescriptor("graphs", directed, n, v_c, e_c, False)
    return Catalog(desc, tuple(_dedup(labeled_matrices(n, v_c, e_c, directed), directed, method)))


def expand_edge_color(catalog: Catalog, method: str = "auto") -> Catalog:
    """Add color ``e_c + 1``: every subset of edge slots may switch to it."""
    d = catalog.descriptor
    new = d.replace(max_edge_colors=d.max_edge_colors + 1)
    color = new.max_edge_colors
    slots = _slots(d.order, d.directed)

    def candidates():
        for key in catalog.keys:
            base = key_to_matrix(key, d.directed)
            for mask in itertools.product((False, True), repeat=len(slots)):
                a = base.copy()
                _fill(a, [s for s, m in zip(slots, mask) if m], itertools.repeat(color), d.directed)
                yield a

    return Catalog(new, tuple(_dedup(candidates(), d.directed, method)))


def expand_vertex(catalog: Catalog, method: str = "auto") -> Catalog:
    """Add one vertex joined to the old ones by every edge-color pattern."""
    d = catalog.descriptor
    n = d.order
    new = d.replace(order=n + 1)
    width = 2 * n if d.directed else n

    def candidates():
        for key in catalog.keys:
            base = key_to_matrix(key, d.directed)
            for color in range(d.max_vertex_colors):
                for pattern in itertools.product(range(d.max_edge_colors + 1), repeat=width):
                    a = np.zeros((n + 1, n + 1), dtype=np.int64)
                    a[:n, :n] = base
                    a[n, n] = color
                    a[n, :n] = pattern[:n]
                    a[:n, n] = pattern[n:] if d.directed else pattern
                    yield a

    return Catalog(new, tuple(_dedup(candidates(), d.directed, method)))


def expand_vertex_colors(catalog: Catalog, v_c: int, method: str = "auto") -> Catalog:
    """Recolor the vertices of every graph in all ways with ``v_c`` colors."""
    d = catalog.descriptor
    n = d.order

    def candidates():
        for key in catalog.keys:
            base = key_to_matrix(key, d.directed)
            for colors in itertools.product(range(v_c), repeat=n):
                a = base.copy()
                np.fill_diagonal(a, colors)
                yield a

    return Catalog(d.replace(max_vertex_colors=v_c), tuple(_dedup(candidates(), d.directed, method)))


def orbit_keys_of(key: Key, directed: bool, method: str = "auto") -> set[Key]:
    """Distinct anchored-orbit keys of the graph with key ``key``."""
    a = key_to_matrix(key, directed)
    return {min_key(anchor(a, v), directed, True, method) for v in range(a.shape[0])}


class _Builder:
    def __init__(self, store, limits: Limits, method: str):
        if store is not None and not isinstance(store, CatalogStore):
            store = CatalogStore(store)
        self.store = store
        self.limits = limits
        self.method = method

    def cached(self, desc: CatalogDescriptor, build) -> Catalog:
        if self.store is not None:
            hit = self.store.load(desc)
            if hit is not None:
                return hit
        start = time.perf_counter()
        catalog = build()
        _check_size(len(catalog), desc, self.limits)
        assert catalog.descriptor == desc, (catalog.descriptor, desc)
        log.info("built %s: %d keys in %.3fs", desc, len(catalog), time.perf_counter() - start)
        if self.store is not None:
            self.store.store(catalog)
        return catalog

    def graphs(self, n: int, v_c: int, e_c: int, directed: bool, connected: bool) -> Catalog:
        desc = CatalogDescriptor("graphs", directed, n, v_c, e_c, connected)
        if connected:
            def build():
                full = self.graphs(n, v_c, e_c, directed, False)
                keep = [k for k in full.keys if matrix_is_connected(key_to_matrix(k, directed))]
                return Catalog(desc, tuple(keep))
        elif v_c > 1:
            def build():
                return expand_vertex_colors(self.graphs(n, 1, e_c, directed, False), v_c, self.method)
        elif n > 3:
            def build():
                return expand_vertex(self.graphs(n - 1, 1, e_c, directed, False), self.method)
        elif e_c > 2:
            def build():
                return expand_edge_color(self.graphs(n, 1, e_c - 1, directed, False), self.method)
        else:
            def build():
                return brute_force_graphs(n, 1, e_c, directed, self.method)
        return self.cached(desc, build)

    def orbits(self, n: int, v_c: int, e_c: int, directed: bool, connected: bool) -> Catalog:
        desc = CatalogDescriptor("orbits", directed, n, v_c, e_c, connected)

        def build():
            keys: set[Key] = set()
            for key in self.graphs(n, v_c, e_c, directed, connected).keys:
                keys |= orbit_keys_of(key, directed, self.method)
            return Catalog(desc, tuple(keys))

        return self.cached(desc, build)


def _guard(n: int, v_c: int, e_c: int, limits: Limits) -> None:
    if n < 1 or v_c < 1 or e_c < 1:
        raise ValueError(f"type ({n},{v_c},{e_c}) needs n, v_c, e_c >= 1")
    if n > limits.max_generate_order:
        raise TypeTooLarge(
            f"order {n} above max_generate_order={limits.max_generate_order} "
            f"(override with --max-order)")


def generate_graphs(n: int, v_c: int, e_c: int, directed: bool = False,
                    connected_only: bool = False,
                    store: CatalogStore | str | os.PathLike | None = None,
                    limits: Limits | None = None, method: str = "auto") -> Catalog:
    """All graphs of order ``n`` with up to ``v_c`` vertex and ``e_c`` edge colors."""
    limits = limits or DEFAULT_LIMITS
    _guard(n, v_c, e_c, limits)
    return _Builder(store, limits, method).graphs(n, v_c, e_c, directed, connected_only)


def generate_orbits(n: int, v_c: int, e_c: int, directed: bool = False,
                    connected_only: bool = False,
                    store: CatalogStore | str | os.PathLike | None = None,
                    limits: Limits | None = None, method: str = "auto") -> Catalog:
    """All anchored orbits of graphs of type ``(n, v_c, e_c)``."""
    limits = limits or DEFAULT_LIMITS
    _guard(n, v_c, e_c, limits)
    return _Builder(store, limits, method).orbits(n, v_c, e_c, directed, connected_only)


def generate(kind: str, *args, **kwargs) -> Catalog:
    if kind == "graphs":
        return generate_graphs(*args, **kwargs)
    if kind == "orbits":
        return generate_orbits(*args, **kwargs)
    raise ValueError(f"kind must be 'graphs' or 'orbits', not {kind!r}")
