"""Constructions for the named regular graphs and the families behind them."""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from .errors import BadParameters, InvalidLCF
from .graph import Graph, new_graph

__all__ = [
    "NamedGraphId",
    "lcf_graph",
    "generalized_petersen",
    "shrikhande",
    "named_graph",
    "VERTEX_TRANSITIVE",
]


class NamedGraphId(str, Enum):
    FRUCHT = "frucht"
    DESARGUES = "desargues"
    TUTTE_COXETER = "tutte_coxeter"
    HEAWOOD = "heawood"
    SHRIKHANDE = "shrikhande"
    PETERSEN = "petersen"


VERTEX_TRANSITIVE = frozenset(NamedGraphId) - {NamedGraphId.FRUCHT}


def lcf_graph(shifts: Sequence[int], repeats: int) -> Graph:
    """Cubic Hamiltonian graph from LCF notation ``[shifts]^repeats``.

    Vertex ``i`` sits on the cycle ``0 .. m-1`` and gets one chord to
    ``i + shifts[i % len(shifts)] (mod m)``. The chords must form a perfect
    matching in which every chord is written as a ``+s`` / ``-s`` pair at its
    two endpoints; anything else raises :class:`InvalidLCF`.
    """
    if not shifts or repeats < 1:
        raise InvalidLCF("need at least one shift and a positive repeat count")
    m = len(shifts) * repeats
    if m < 3:
        raise InvalidLCF(f"cycle length {m} < 3")
    shift_at = [int(shifts[i % len(shifts)]) for i in range(m)]
    for i, s in enumerate(shift_at):
        if not 0 < abs(s) < m:
            raise InvalidLCF(f"shift {s} at vertex {i} not in 0 < |s| < {m}")

    chords = set()
    for i, s in enumerate(shift_at):
        j = (i + s) % m
        if (j - i) % m in (1, m - 1):
            raise InvalidLCF(f"chord {i}-{j} duplicates a cycle edge")
        if shift_at[j] != -s:
            raise InvalidLCF(
                f"chord {i}->{j} (shift {s}) is not answered by shift {-s} at vertex {j}"
            )
        chords.add((min(i, j), max(i, j)))
    if len(chords) != m // 2 or m % 2:
        raise InvalidLCF("chords do not form a perfect matching")

    cycle = [(i, (i + 1) % m) for i in range(m)]
    return new_graph(m, cycle + sorted(chords))


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer cycle ``0..n-1``, spokes ``i - (n+i)``, inner edges ``(n+i) - (n+i+k)``."""
    if n < 3 or not 1 <= k < n / 2:
        raise BadParameters(f"generalized Petersen needs n >= 3 and 1 <= k < n/2, got ({n}, {k})")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return new_graph(2 * n, edges)


def shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.

    Vertex ``(a, b)`` gets index ``4a + b``.
    """
    gens = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = []
    for a in range(4):
        for b in range(4):
            for da, db in gens:
                edges.append((4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4))
    return new_graph(16, edges)


def named_graph(name: NamedGraphId | str) -> Graph:
    gid = NamedGraphId(name)
    if gid is NamedGraphId.FRUCHT:
        return lcf_graph([-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2], 1)
    if gid is NamedGraphId.DESARGUES:
        return lcf_graph([5, -5, 9, -9], 5)
    if gid is NamedGraphId.TUTTE_COXETER:
        return lcf_graph([-13, -9, 7, -7, 9, 13], 5)
    if gid is NamedGraphId.HEAWOOD:
        return lcf_graph([5, -5], 7)
    if gid is NamedGraphId.PETERSEN:
        return generalized_petersen(5, 2)
    return shrikhande()
