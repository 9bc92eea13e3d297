"""Undirected weighted graph with strictly positive edge weights.

Vertices are integer ids 0..n-1.  Edges are unordered pairs stored under the
key (min(u,v), max(u,v)).  Instances are immutable after construction and
safe to share between threads.
"""

from __future__ import annotations

from collections.abc import Iterable


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Normalized dict key for the undirected edge {u, v}."""
    return (u, v) if u < v else (v, u)


class WeightedGraph:
    """Simple undirected graph with positive real edge weights.

    Rejects self-loops, parallel edges, out-of-range vertex ids, and
    non-positive weights at construction time.
    """

    __slots__ = ("n", "_w", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, float]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        w: dict[tuple[int, int], float] = {}
        for u, v, weight in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = edge_key(u, v)
            if key in w:
                raise ValueError(f"parallel edge {key}")
            weight = float(weight)
            if not weight > 0:
                raise ValueError(f"non-positive weight {weight} on edge {key}")
            w[key] = weight
        self._w = w
        self._adj: tuple[tuple[tuple[int, float], ...], ...] | None = None

    @property
    def m(self) -> int:
        return len(self._w)

    def weight(self, u: int, v: int) -> float:
        return self._w[edge_key(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._w

    def edge_items(self) -> list[tuple[int, int, float]]:
        """Edges as (u, v, w) with u < v, in sorted order."""
        return [(u, v, w) for (u, v), w in sorted(self._w.items())]

    def edge_keys(self) -> set[tuple[int, int]]:
        return set(self._w)

    def weights(self) -> dict[tuple[int, int], float]:
        return dict(self._w)

    def adjacency(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        """Per-vertex tuple of (neighbor, weight), sorted by neighbor id."""
        if self._adj is None:
            lists: list[list[tuple[int, float]]] = [[] for _ in range(self.n)]
            for (u, v), w in sorted(self._w.items()):
                lists[u].append((v, w))
                lists[v].append((u, w))
            for lst in lists:
                lst.sort()
            self._adj = tuple(tuple(lst) for lst in lists)
        return self._adj

    def degree(self, u: int) -> int:
        return len(self.adjacency()[u])

    def subgraph(self, keys: Iterable[tuple[int, int]]) -> "WeightedGraph":
        """Graph on the same vertex set keeping only the given edge keys."""
        return WeightedGraph(self.n, [(u, v, self._w[edge_key(u, v)]) for u, v in keys])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self._w == other._w

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"


def normalize_weights(g: WeightedGraph) -> WeightedGraph:
    """Rescale all weights so the minimum edge weight is exactly 1.

    Distance ratios are preserved; a graph whose minimum weight is already 1
    is returned unchanged (same weights, new object).
    """
    if g.m == 0:
        raise ValueError("no edges to normalize")
    w_min = min(g.weights().values())
    if not w_min > 0:
        raise ValueError(f"non-positive minimum weight {w_min}")
    if w_min == 1.0:
        return WeightedGraph(g.n, g.edge_items())
    return WeightedGraph(g.n, [(u, v, w / w_min) for u, v, w in g.edge_items()])
