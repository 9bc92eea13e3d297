"""Text formats: edge lists, tagged emulator edge lists, subsets, JSON lines.

Graph files: first line "n m", then m lines "u v w" with 0-based ids and a
decimal weight.  Weights are written with repr(), so read/write round-trips
are lossless.  Emulator files carry a fourth column, "g" for an original
graph edge and "v" for a virtual one.  Malformed input is rejected with the
offending path and line number.
"""

from __future__ import annotations

import json
from pathlib import Path

from .emulator import EmulatorResult
from .graph import WeightedGraph, edge_key


class GraphFormatError(ValueError):
    """Raised for malformed graph/subset files; message carries location."""


def _fail(path, lineno: int, msg: str) -> None:
    raise GraphFormatError(f"{path}:{lineno}: {msg}")


def _parse_header(path, line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        _fail(path, 1, f"expected header 'n m', got {line.strip()!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        _fail(path, 1, f"non-integer header {line.strip()!r}")
    if n < 0 or m < 0:
        _fail(path, 1, "negative counts in header")
    return n, m


def _parse_edge_line(path, lineno: int, line: str, n: int, columns: int) -> tuple[int, int, float, str]:
    parts = line.split()
    if len(parts) != columns:
        _fail(path, lineno, f"expected {columns} fields, got {len(parts)}")
    try:
        u, v = int(parts[0]), int(parts[1])
        w = float(parts[2])
    except ValueError:
        _fail(path, lineno, f"malformed edge line {line.strip()!r}")
    if not (0 <= u < n and 0 <= v < n):
        _fail(path, lineno, f"vertex id out of range in ({u}, {v}) for n={n}")
    if u == v:
        _fail(path, lineno, f"self-loop at vertex {u}")
    if not w > 0:
        _fail(path, lineno, f"non-positive weight {w}")
    tag = parts[3] if columns == 4 else "g"
    if tag not in ("g", "v"):
        _fail(path, lineno, f"edge tag must be 'g' or 'v', got {tag!r}")
    return u, v, w, tag


def _read_edge_lines(path: str | Path, columns: int) -> tuple[int, list[tuple[int, int, float, str]]]:
    path = Path(path)
    lines = path.read_text().splitlines()
    if not lines:
        _fail(path, 1, "empty file")
    n, m = _parse_header(path, lines[0])
    body = [(i + 2, ln) for i, ln in enumerate(lines[1:]) if ln.strip()]
    if len(body) != m:
        raise GraphFormatError(f"{path}: header promises {m} edges, found {len(body)}")
    seen: set[tuple[int, int]] = set()
    out = []
    for lineno, ln in body:
        u, v, w, tag = _parse_edge_line(path, lineno, ln, n, columns)
        key = edge_key(u, v)
        if key in seen:
            _fail(path, lineno, f"duplicate edge {key}")
        seen.add(key)
        out.append((u, v, w, tag))
    return n, out


def read_graph(path: str | Path) -> WeightedGraph:
    n, rows = _read_edge_lines(path, columns=3)
    return WeightedGraph(n, [(u, v, w) for u, v, w, _ in rows])


def write_graph(g: WeightedGraph, path: str | Path) -> None:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v} {w!r}" for u, v, w in g.edge_items()]
    Path(path).write_text("\n".join(lines) + "\n")


def read_emulator(path: str | Path) -> EmulatorResult:
    """Read a tagged edge list; the sampled set is not stored in the file."""
    n, rows = _read_edge_lines(path, columns=4)
    edges = {edge_key(u, v): (w, tag) for u, v, w, tag in rows}
    return EmulatorResult(n=n, edges=edges, S=(), params={})


def write_emulator(em: EmulatorResult, path: str | Path) -> None:
    lines = [f"{em.n} {em.m}"]
    lines += [f"{u} {v} {w!r} {tag}" for (u, v), (w, tag) in sorted(em.edges.items())]
    Path(path).write_text("\n".join(lines) + "\n")


def read_subset(path: str | Path) -> list[int]:
    """One vertex id per line; duplicates rejected."""
    path = Path(path)
    out: list[int] = []
    seen = set()
    for lineno, ln in enumerate(path.read_text().splitlines(), start=1):
        if not ln.strip():
            continue
        try:
            v = int(ln)
        except ValueError:
            _fail(path, lineno, f"malformed vertex id {ln.strip()!r}")
        if v < 0:
            _fail(path, lineno, f"negative vertex id {v}")
        if v in seen:
            _fail(path, lineno, f"duplicate vertex id {v}")
        seen.add(v)
        out.append(v)
    return out


def write_subset(subset: list[int], path: str | Path) -> None:
    Path(path).write_text("\n".join(str(v) for v in subset) + "\n")


def write_jsonl(records: list[dict], path: str | Path) -> None:
    Path(path).write_text("".join(json.dumps(r, sort_keys=True) + "\n" for r in records))


def read_jsonl(path: str | Path) -> list[dict]:
    return [json.loads(ln) for ln in Path(path).read_text().splitlines() if ln.strip()]
