import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from hgo.graph import ColoredGraph, build

# six vertices, six edges: a triangle with a pendant vertex and a pendant path
SAMPLE6 = [
    [0, 1, 1, 0, 0, 0],
    [1, 0, 1, 0, 0, 0],
    [1, 1, 0, 1, 1, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 1],
    [0, 0, 0, 0, 1, 0],
]


def path(n):
    return build(n, False, None, [(i, i + 1, 1) for i in range(n - 1)])


def complete(n):
    return build(n, False, None, [(i, j, 1) for i in range(n) for j in range(i)])


def star(leaves):
    return build(leaves + 1, False, None, [(0, i, 1) for i in range(1, leaves + 1)])


@pytest.fixture
def sample6():
    return ColoredGraph.from_matrix(SAMPLE6, directed=False)


@st.composite
def colored_graphs(draw, min_order=1, max_order=6, v_c=2, e_c=2, directed=None):
    n = draw(st.integers(min_order, max_order))
    if directed is None:
        directed = draw(st.booleans())
    colors = draw(st.lists(st.integers(0, v_c - 1), min_size=n, max_size=n))
    if directed:
        slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    else:
        slots = [(i, j) for i in range(n) for j in range(i)]
    values = draw(st.lists(st.integers(0, e_c), min_size=len(slots), max_size=len(slots)))
    return build(n, directed, colors, [(i, j, c) for (i, j), c in zip(slots, values) if c])


@st.composite
def graph_and_perm(draw, **kw):
    g = draw(colored_graphs(**kw))
    perm = draw(st.permutations(range(g.order)))
    return g, tuple(perm)


# ---- independent oracles: plain Python, no numpy, no library internals ----

def ref_serialize(m, directed):
    n = len(m)
    if directed:
        return tuple(m[i][j] for i in range(n) for j in range(n))
    return tuple(m[i][j] for i in range(n) for j in range(i + 1))


def ref_relabel(m, order):
    """Matrix whose position i holds vertex order[i]."""
    return [[m[u][v] for v in order] for u in order]


def ref_canonical(m, directed, anchor=None):
    n = len(m)
    m = [list(map(int, row)) for row in m]
    if anchor is None:
        orders = itertools.permutations(range(n))
    else:
        rest = [v for v in range(n) if v != anchor]
        orders = ((anchor,) + p for p in itertools.permutations(rest))
    return min(ref_serialize(ref_relabel(m, o), directed) for o in orders)


def ref_automorphisms(m):
    n = len(m)
    return [p for p in itertools.permutations(range(n))
            if all(m[p[u]][p[v]] == m[u][v] for u in range(n) for v in range(n))]


def ref_orbits(m):
    auts = ref_automorphisms(m)
    return {frozenset(p[v] for p in auts) for v in range(len(m))}


def ref_connected(m):
    n = len(m)
    seen, stack = {0}, [0]
    while stack:
        u = stack.pop()
        for w in range(n):
            if w not in seen and (m[u][w] or m[w][u]):
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def ref_labeled(n, v_c, e_c, directed):
    """All labeled colored graphs as nested lists."""
    slots = [(i, j) for i in range(n) for j in range(n) if i != j] if directed \
        else [(i, j) for i in range(n) for j in range(i)]
    for colors in itertools.product(range(v_c), repeat=n):
        for vals in itertools.product(range(e_c + 1), repeat=len(slots)):
            m = [[0] * n for _ in range(n)]
            for i in range(n):
                m[i][i] = colors[i]
            for (i, j), c in zip(slots, vals):
                m[i][j] = c
                if not directed:
                    m[j][i] = c
            yield m


def ref_catalog(n, v_c, e_c, directed, kind="graphs", connected=False):
    keys = set()
    for m in ref_labeled(n, v_c, e_c, directed):
        if connected and not ref_connected(m):
            continue
        if kind == "graphs":
            keys.add(ref_canonical(m, directed))
        else:
            keys.update(ref_canonical(m, directed, v) for v in range(n))
    return sorted(keys)


def as_lists(g):
    return np.asarray(g.matrix).tolist()
