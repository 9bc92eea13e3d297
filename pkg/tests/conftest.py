"""Shared oracles and graph strategies.

The oracles here are deliberately independent of the package's shortest-path
code: Floyd-Warshall for distances, exhaustive path enumeration for the
canonical-path rule, and a rebuild-from-scratch greedy simulation.  Expected
values in the tests are computed by these, never by the code under test.
"""

from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from hypothesis import strategies as st

from wspan import GenSpec, WeightedGraph, generate


def brute_force_apsp(g: WeightedGraph) -> np.ndarray:
    """Floyd-Warshall on a dense matrix; cubic and Dijkstra-free."""
    n = g.n
    d = np.full((n, n), math.inf)
    np.fill_diagonal(d, 0.0)
    for u, v, w in g.edge_items():
        d[u, v] = d[v, u] = w
    for k in range(n):
        d = np.minimum(d, d[:, k, None] + d[None, k, :])
    return d


def enumerate_shortest_paths(g: WeightedGraph, u: int, v: int) -> list[tuple[int, ...]]:
    """All simple u-v paths of minimum total weight (tiny graphs only)."""
    adj = g.adjacency()
    best = [math.inf]
    found: list[tuple[tuple[int, ...], float]] = []

    def walk(x: int, seen: set[int], acc: float, trail: list[int]):
        if acc > best[0]:
            return
        if x == v:
            if acc < best[0]:
                best[0] = acc
                found.clear()
            if acc == best[0]:
                found.append((tuple(trail), acc))
            return
        for y, w in adj[x]:
            if y not in seen:
                seen.add(y)
                trail.append(y)
                walk(y, seen, acc + w, trail)
                trail.pop()
                seen.remove(y)

    walk(u, {u}, 0.0, [u])
    return [p for p, acc in found if acc == best[0]]


def oracle_canonical_path(g: WeightedGraph, u: int, v: int) -> tuple[int, ...]:
    """Apply the documented rule to the enumerated shortest paths.

    Minimum hop count first, then the lexicographically smallest sorted
    edge-key list.
    """

    def key(path: tuple[int, ...]):
        eks = sorted((min(a, b), max(a, b)) for a, b in zip(path, path[1:]))
        return (len(path) - 1, eks)

    cands = enumerate_shortest_paths(g, u, v)
    assert cands, f"no path between {u} and {v}"
    return min(cands, key=key)


def greedy_mult_oracle(g: WeightedGraph, k: int) -> set[tuple[int, int]]:
    """Simulate the multiplicative greedy with full recomputation."""
    stretch = 2 * k - 1
    kept: list[tuple[int, int, float]] = []
    for u, v, w in sorted(g.edge_items(), key=lambda e: (e[2], e[0], e[1])):
        d = brute_force_apsp(WeightedGraph(g.n, kept))[u, v]
        if d > stretch * w:
            kept.append((u, v, w))
    return {(u, v) for u, v, _ in kept}


def connected_pairs(g: WeightedGraph) -> list[tuple[int, int]]:
    d = brute_force_apsp(g)
    return [
        (u, v)
        for u, v in itertools.combinations(range(g.n), 2)
        if math.isfinite(d[u, v])
    ]


@st.composite
def small_graphs(draw, max_n: int = 10, integer_weights: bool = True, connected: bool = False):
    """Random small weighted graphs; integer weights make ties exact."""
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    if integer_weights:
        wgen = st.integers(min_value=1, max_value=5).map(float)
    else:
        wgen = st.floats(min_value=1.0, max_value=50.0, allow_nan=False, allow_infinity=False)
    edges = []
    for (u, v), k in zip(pairs, keep):
        if k:
            edges.append((u, v, draw(wgen)))
    if connected:
        present = {e[:2] for e in edges}
        for v in range(1, n):
            if not any(v in p for p in present):
                u = draw(st.integers(min_value=0, max_value=v - 1))
                if (u, v) not in present:
                    edges.append((u, v, draw(wgen)))
                    present.add((u, v))
    return WeightedGraph(n, edges)


@pytest.fixture(scope="session")
def medium_gnp() -> WeightedGraph:
    return generate(GenSpec(family="gnp", n=50, p=0.15, wmodel="uniform", seed=11))


@pytest.fixture(scope="session")
def medium_grid() -> WeightedGraph:
    return generate(GenSpec(family="grid", n=49, rows=7, cols=7, wmodel="unit", seed=4))
