"""Simple undirected graphs on vertices ``0 .. n-1``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import BadParameters, OutOfRange, SelfLoop

__all__ = [
    "Graph",
    "new_graph",
    "adjacency_matrix",
    "degree",
    "degrees",
    "is_regular",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``. Construct
    through :func:`new_graph`, which validates and normalizes arbitrary input.
    """

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise BadParameters(f"vertex count must be a positive integer, got {self.n!r}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise BadParameters(f"edge {(u, v)} is not normalized for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> list[int]:
        _check_vertex(self, v)
        return sorted(b if a == v else a for a, b in self.edges if v in (a, b))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def new_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph, dropping duplicate and reversed pairs.

    Raises OutOfRange for an endpoint outside ``[0, n)`` and SelfLoop for ``u == v``.
    """
    if n < 1:
        raise BadParameters(f"vertex count must be >= 1, got {n}")
    normalized = set()
    for u, v in edges:
        u, v = int(u), int(v)
        for x in (u, v):
            if not 0 <= x < n:
                raise OutOfRange(f"endpoint {x} outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        normalized.add((u, v) if u < v else (v, u))
    return Graph(int(n), frozenset(normalized))


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense symmetric 0/1 ``int64`` matrix; returned read-only."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    a.flags.writeable = False
    return a


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise OutOfRange(f"vertex {v} outside [0, {g.n})")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return sum(1 for e in g.edges if v in e)


def degrees(g: Graph) -> list[int]:
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def is_regular(g: Graph) -> int | None:
    """Common degree ``r`` if every vertex has degree ``r``, else ``None``."""
    deg = set(degrees(g))
    return deg.pop() if len(deg) == 1 else None
