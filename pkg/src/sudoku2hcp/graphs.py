"""Simple directed and undirected graphs over vertex ids 1..n.

Both containers validate simplicity on construction (no self-loops, no
duplicate arcs or edges) and iterate their arc/edge sets in ascending
order, so everything built on top of them is reproducible byte for byte.
Instances are treated as immutable; transforms return new graphs.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class DirectedGraph:
    __slots__ = ("n", "m", "_succ")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        succ: dict[int, set[int]] = {}
        m = 0
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"arc ({u}, {v}) out of range 1..{n}")
            outs = succ.setdefault(u, set())
            if v in outs:
                raise ValueError(f"duplicate arc ({u}, {v})")
            outs.add(v)
            m += 1
        self.m = m
        self._succ = succ

    def has_arc(self, u: int, v: int) -> bool:
        return v in self._succ.get(u, ())

    def successors(self, u: int) -> list[int]:
        return sorted(self._succ.get(u, ()))

    def out_degree(self, u: int) -> int:
        return len(self._succ.get(u, ()))

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in sorted(self._succ):
            for v in sorted(self._succ[u]):
                yield (u, v)

    def arc_set(self) -> set[tuple[int, int]]:
        return {(u, v) for u, outs in self._succ.items() for v in outs}

    def in_degrees(self) -> list[int]:
        """In-degree of every vertex, indexed 1..n (slot 0 unused)."""
        deg = [0] * (self.n + 1)
        for outs in self._succ.values():
            for v in outs:
                deg[v] += 1
        return deg

    def without_arcs(self, removed: Iterable[tuple[int, int]]) -> "DirectedGraph":
        """New graph with the given arcs removed; all must be present."""
        gone = set(removed)
        for u, v in gone:
            if not self.has_arc(u, v):
                raise ValueError(f"arc ({u}, {v}) not in graph")
        keep = [a for a in self.arcs() if a not in gone]
        return DirectedGraph(self.n, keep)

    def __eq__(self, other):
        return (
            isinstance(other, DirectedGraph)
            and self.n == other.n
            and self.arc_set() == other.arc_set()
        )

    def __repr__(self):
        return f"DirectedGraph(n={self.n}, m={self.m})"


class UndirectedGraph:
    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        adj: dict[int, set[int]] = {}
        m = 0
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"edge ({a}, {b}) out of range 1..{n}")
            na = adj.setdefault(a, set())
            if b in na:
                raise ValueError(f"duplicate edge ({a}, {b})")
            na.add(b)
            adj.setdefault(b, set()).add(a)
            m += 1
        self.m = m
        self._adj = adj

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adj.get(a, ())

    def neighbors(self, v: int) -> list[int]:
        return sorted(self._adj.get(v, ()))

    def degree(self, v: int) -> int:
        return len(self._adj.get(v, ()))

    def edges(self) -> Iterator[tuple[int, int]]:
        for a in sorted(self._adj):
            for b in sorted(self._adj[a]):
                if a < b:
                    yield (a, b)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(a, b) for a, nbrs in self._adj.items() for b in nbrs if a < b}

    def __eq__(self, other):
        return (
            isinstance(other, UndirectedGraph)
            and self.n == other.n
            and self.edge_set() == other.edge_set()
        )

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={self.m})"
