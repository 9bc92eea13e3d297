"""Exact brute-force certification of stretch bounds and size scaling.

Every check recomputes full all-pairs distances on both graphs, so a passing
report is a proof for the instance at hand (up to the stated float
tolerance).  Pairs that are connected in the base graph but not in the
candidate are reported as a distinct "unreachable" violation kind so that
construction bugs are not conflated with stretch failures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .graph import WeightedGraph
from .shortest import ShortestPathIndex, build_index, distance_matrix

REL_TOL = 1e-9


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    d_g: float
    d_h: float
    w_heavy: float
    slack: float
    kind: str = "stretch"

    def to_dict(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "d_g": self.d_g,
            "d_h": self.d_h,
            "w_heavy": self.w_heavy,
            "slack": self.slack,
            "kind": self.kind,
        }


@dataclass
class StretchReport:
    """Outcome of one verification pass."""

    bound_kind: str
    params: dict
    pairs_checked: int
    violations: list[Violation] = field(default_factory=list)
    max_slack_ratio: float = math.nan
    size: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "bound_kind": self.bound_kind,
            "params": self.params,
            "pairs_checked": self.pairs_checked,
            "passed": self.passed,
            "violation_count": len(self.violations),
            "violations": [v.to_dict() for v in self.violations[:50]],
            "max_slack_ratio": None if math.isnan(self.max_slack_ratio) else self.max_slack_ratio,
            "size": self.size,
        }


def _h_distances(h: WeightedGraph) -> np.ndarray:
    return distance_matrix(h.n, h.edge_items())


def _pair_mask(n: int, subset: list[int] | None) -> np.ndarray:
    """Upper-triangle mask of the pairs in the checked class."""
    mask = np.zeros((n, n), dtype=bool)
    if subset is None:
        mask[np.triu_indices(n, k=1)] = True
    else:
        vs = np.array(sorted(set(subset)))
        mask[np.ix_(vs, vs)] = True
        mask &= np.triu(np.ones((n, n), dtype=bool), k=1)
    return mask


def _slack_ratio(dg: np.ndarray, dh: np.ndarray, W: np.ndarray, mask: np.ndarray) -> float:
    sel = mask & np.isfinite(dg) & np.isfinite(dh) & (W > 0) & np.isfinite(W)
    if not sel.any():
        return math.nan
    return float(((dh[sel] - dg[sel]) / W[sel]).max())


def _collect(
    report: StretchReport,
    dg: np.ndarray,
    dh: np.ndarray,
    W: np.ndarray,
    mask: np.ndarray,
    bound: np.ndarray,
) -> StretchReport:
    """Shared violation sweep: bound holds, up to relative tolerance."""
    connected = mask & np.isfinite(dg)
    report.pairs_checked = int(connected.sum())
    unreachable = connected & ~np.isfinite(dh)
    with np.errstate(invalid="ignore"):  # inf-inf on pairs the masks discard
        tol = REL_TOL * np.maximum(1.0, np.abs(bound))
        over = connected & np.isfinite(dh) & (dh - bound > tol)
    for u, v in np.argwhere(unreachable):
        report.violations.append(
            Violation(int(u), int(v), float(dg[u, v]), math.inf, float(W[u, v]), math.inf, "unreachable")
        )
    for u, v in np.argwhere(over):
        report.violations.append(
            Violation(
                int(u), int(v), float(dg[u, v]), float(dh[u, v]), float(W[u, v]),
                float(dh[u, v] - bound[u, v]),
            )
        )
    report.max_slack_ratio = _slack_ratio(dg, dh, W, mask)
    return report


def verify_additive_W(
    g: WeightedGraph,
    h: WeightedGraph,
    c_of_n: float | Callable[[int], float],
    pair_class: list[int] | None = None,
    idx: ShortestPathIndex | None = None,
) -> StretchReport:
    """Check d_H <= d_G + c * W(u,v) for every connected pair in the class.

    W(u,v) is the heaviest edge on the canonical shortest u-v path of g.
    c_of_n may be a constant or a function of the vertex count (for bounds
    like c * sqrt(n) * log n).  pair_class None means all pairs; otherwise
    only pairs inside the given subset are checked.
    """
    if h.n != g.n:
        raise ValueError(f"vertex set mismatch: g has n={g.n}, h has n={h.n}")
    if idx is None:
        idx = build_index(g)
    c = float(c_of_n(g.n)) if callable(c_of_n) else float(c_of_n)
    dh = _h_distances(h)
    mask = _pair_mask(g.n, pair_class)
    bound = idx.dist + c * np.where(np.isfinite(idx.W), idx.W, 0.0)
    report = StretchReport(
        bound_kind="additive-cW",
        params={"c": c, "pair_class": "all" if pair_class is None else "subset"},
        pairs_checked=0,
        size=h.m,
    )
    return _collect(report, idx.dist, dh, idx.W, mask, bound)


def verify_multiplicative(
    g: WeightedGraph,
    h: WeightedGraph,
    alpha: float,
    idx: ShortestPathIndex | None = None,
) -> StretchReport:
    """Check d_H <= alpha * d_G for every connected pair."""
    if h.n != g.n:
        raise ValueError(f"vertex set mismatch: g has n={g.n}, h has n={h.n}")
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    if idx is None:
        idx = build_index(g)
    dh = _h_distances(h)
    mask = _pair_mask(g.n, None)
    bound = alpha * idx.dist
    report = StretchReport(
        bound_kind="multiplicative-alpha", params={"alpha": alpha}, pairs_checked=0, size=h.m
    )
    return _collect(report, idx.dist, dh, idx.W, mask, bound)


def verify_subgraph(g: WeightedGraph, h: WeightedGraph) -> bool:
    """True iff every edge of h exists in g with an identical weight."""
    if h.n != g.n:
        return False
    gw = g.weights()
    return all(gw.get(k) == w for k, w in h.weights().items())


def verify_non_contracting(
    g: WeightedGraph,
    h: WeightedGraph,
    idx: ShortestPathIndex | None = None,
) -> StretchReport:
    """Check d_H >= d_G (within relative tolerance) for all pairs.

    The lower-bound side of the emulator contract; unreachable pairs in h
    trivially satisfy it.
    """
    if h.n != g.n:
        raise ValueError(f"vertex set mismatch: g has n={g.n}, h has n={h.n}")
    if idx is None:
        idx = build_index(g)
    dh = _h_distances(h)
    mask = _pair_mask(g.n, None)
    report = StretchReport(bound_kind="exact", params={"direction": "lower"}, pairs_checked=0, size=h.m)
    connected = mask & np.isfinite(idx.dist)
    report.pairs_checked = int(connected.sum())
    # connecting a pair that g keeps apart shortens an infinite distance
    for u, v in np.argwhere(mask & ~np.isfinite(idx.dist) & np.isfinite(dh)):
        report.violations.append(
            Violation(int(u), int(v), math.inf, float(dh[u, v]), math.inf, math.inf, "contraction")
        )
    with np.errstate(invalid="ignore"):
        contracted = connected & np.isfinite(dh) & (idx.dist - dh > REL_TOL * np.maximum(1.0, idx.dist))
    for u, v in np.argwhere(contracted):
        report.violations.append(
            Violation(
                int(u), int(v), float(idx.dist[u, v]), float(dh[u, v]), float(idx.W[u, v]),
                float(idx.dist[u, v] - dh[u, v]), "contraction",
            )
        )
    report.max_slack_ratio = _slack_ratio(idx.dist, dh, idx.W, mask)
    return report


def minimax_path_weight(g: WeightedGraph, idx: ShortestPathIndex | None = None) -> np.ndarray:
    """Per-pair minimum, over all shortest paths, of the heaviest edge.

    Used as a small-n cross-check: the canonical path's heaviest edge can
    only be >= this value, and the gap measures how much slack the canonical
    choice grants the additive bounds.  Computed by dynamic programming over
    the shortest-path DAG of every source; intended for n <= ~50.
    """
    if idx is None:
        idx = build_index(g)
    n = g.n
    adj = g.adjacency()
    out = np.full((n, n), math.inf)
    np.fill_diagonal(out, 0.0)
    for s in range(n):
        dist = idx.dist[s]
        order = np.argsort(dist, kind="stable")
        best = [math.inf] * n
        best[s] = 0.0
        for v in order.tolist():
            if v == s or not np.isfinite(dist[v]):
                continue
            for u, w in adj[v]:
                if np.isfinite(dist[u]) and dist[u] + w == dist[v]:
                    cand = best[u] if best[u] >= w else w
                    if cand < best[v]:
                        best[v] = cand
        out[s] = best
    return out


def size_scaling_fit(records: list[tuple[int, int]]) -> float:
    """Least-squares slope of log(edge_count) against log(n).

    Needs at least three distinct n values with positive edge counts.
    """
    ns = [n for n, _ in records]
    ms = [m for _, m in records]
    if len(set(ns)) < 3:
        raise ValueError("need at least 3 distinct n values to fit an exponent")
    if any(m <= 0 for m in ms) or any(n <= 0 for n in ns):
        raise ValueError("n and edge counts must be positive for a log-log fit")
    slope = np.polyfit(np.log(np.array(ns, dtype=float)), np.log(np.array(ms, dtype=float)), 1)[0]
    return float(slope)
