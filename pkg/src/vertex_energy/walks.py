"""Exact closed-walk counts ``(A^k)_ii``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParameters, OutOfRange, Overflow
from .graph import Graph, adjacency_matrix

__all__ = ["WalkTable", "walk_table", "moments_for_vertex"]

INT64_MAX = np.iinfo(np.int64).max


@dataclass(frozen=True)
class WalkTable:
    """``counts[k, i]`` = number of closed walks of length ``k`` at vertex ``i``."""

    n: int
    kmax: int
    counts: np.ndarray

    def row(self, k: int) -> list[int]:
        return [int(x) for x in self.counts[k]]


def walk_table(g: Graph, kmax: int) -> WalkTable:
    """Diagonals of ``A^0 .. A^kmax``.

    Powers are formed with Python integers, so nothing wraps; any diagonal
    entry that does not fit in int64 raises :class:`Overflow`.
    """
    if kmax < 0:
        raise BadParameters(f"kmax must be >= 0, got {kmax}")
    a = adjacency_matrix(g).astype(object)
    power = np.identity(g.n, dtype=np.int64).astype(object)
    counts = np.zeros((kmax + 1, g.n), dtype=np.int64)
    for k in range(kmax + 1):
        if k:
            power = power.dot(a)
        for i in range(g.n):
            value = power[i, i]
            if value > INT64_MAX:
                raise Overflow(k, i)
            counts[k, i] = value
    counts.flags.writeable = False
    return WalkTable(g.n, kmax, counts)


def moments_for_vertex(t: WalkTable, v: int) -> list[int]:
    if not 0 <= v < t.n:
        raise OutOfRange(f"vertex {v} outside [0, {t.n})")
    return [int(x) for x in t.counts[:, v]]
