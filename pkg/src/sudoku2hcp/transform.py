"""Graph transforms and the journal that lifts cycles back through them.

Three transforms are provided: the directed-to-undirected triplication,
removal of the redundant middle vertex inside every candidate triple, and
a degree-2 reduction heuristic.  Each returns a new graph together with a
CycleLifter journal; replaying the journal backwards maps a Hamiltonian
cycle of the transformed graph to one of the original graph.

Record id semantics: every record is expressed in the vertex numbering of
the graph it was applied to.  A record that deletes vertex v renumbers all
ids above v down by one, so a journal replays mechanically in both
directions without global bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import DirectedGraph, UndirectedGraph
from .labels import label_cand, label_dup, vertex_count


@dataclass(frozen=True)
class Triplication:
    """Directed graph on n vertices became an undirected one on 3n."""

    n: int


@dataclass(frozen=True)
class GadgetRemoval:
    """Degree-2 vertex `removed` deleted, its neighbours `left` and `right`
    bridged by a new edge."""

    removed: int
    left: int
    right: int


@dataclass(frozen=True)
class Contraction:
    """Adjacent degree-2 vertices merged: `absorbed` folded into `survivor`.

    attach_survivor / attach_absorbed are the outer neighbours at each end
    of the contracted pair, which makes re-expansion unambiguous.
    """

    survivor: int
    absorbed: int
    attach_survivor: int
    attach_absorbed: int


@dataclass(frozen=True)
class EdgeDeletion:
    """Edges removed without touching any vertex."""

    edges: tuple[tuple[int, int], ...]


Record = Triplication | GadgetRemoval | Contraction | EdgeDeletion


@dataclass(frozen=True)
class Infeasible:
    """Certificate that the input graph has no Hamiltonian cycle."""

    reason: str


@dataclass(frozen=True)
class CycleLifter:
    """Journal of transform records, applied first to last."""

    records: tuple[Record, ...] = ()

    def __add__(self, other: "CycleLifter") -> "CycleLifter":
        return CycleLifter(self.records + other.records)

    def lift(self, cycle: list[int]) -> list[int]:
        return lift_cycle(self, cycle)


def in_copy(v: int) -> int:
    """Triplication id receiving the arcs into directed vertex v."""
    return 3 * v - 2


def mid_copy(v: int) -> int:
    return 3 * v - 1


def out_copy(v: int) -> int:
    """Triplication id emitting the arcs out of directed vertex v."""
    return 3 * v


def undirect(g: DirectedGraph) -> tuple[UndirectedGraph, CycleLifter]:
    """Undirected equivalent of a directed graph.

    Each vertex becomes an in-copy, middle and out-copy chained together;
    each arc (u, v) becomes the edge (out-copy of u, in-copy of v).  The
    result has 3n vertices and 2n + m edges and is Hamiltonian exactly
    when the directed graph is.
    """
    n = g.n
    edges: list[tuple[int, int]] = []
    for v in range(1, n + 1):
        mid = mid_copy(v)
        edges.append((mid - 1, mid))
        edges.append((mid, mid + 1))
    for u, v in g.arcs():
        edges.append((out_copy(u), in_copy(v)))
    return UndirectedGraph(3 * n, edges), CycleLifter((Triplication(n),))


def triplicate_cycle(cycle: list[int]) -> list[int]:
    """The undirected cycle corresponding to a directed one (test helper and
    inverse of orient_and_project)."""
    out: list[int] = []
    for v in cycle:
        out.extend((in_copy(v), mid_copy(v), out_copy(v)))
    return out


def _project_triplication(cycle: list[int], n: int) -> list[int]:
    """Collapse a Hamiltonian cycle of the triplication to a directed cycle."""
    total = 3 * n
    if len(cycle) != total:
        raise ValueError(f"cycle has {len(cycle)} vertices, expected {total}")
    if set(cycle) != set(range(1, total + 1)):
        raise ValueError("cycle is not a permutation of the triplicated vertices")
    # orient so every triple reads in-copy, middle, out-copy
    t0 = next(idx for idx, lab in enumerate(cycle) if lab % 3 == 2)
    mid = cycle[t0]
    if cycle[(t0 + 1) % total] == mid + 1:
        oriented = cycle
    elif cycle[t0 - 1] == mid + 1:
        oriented = cycle[::-1]
    else:
        raise ValueError("cycle does not keep vertex triples intact")
    s0 = next(idx for idx, lab in enumerate(oriented) if lab % 3 == 1)
    oriented = oriented[s0:] + oriented[:s0]
    out: list[int] = []
    for t in range(0, total, 3):
        a, b, c = oriented[t], oriented[t + 1], oriented[t + 2]
        if a % 3 != 1 or b != a + 1 or c != a + 2:
            raise ValueError("cycle does not keep vertex triples intact")
        out.append((a + 2) // 3)
    low = out.index(min(out))
    return out[low:] + out[:low]


def orient_and_project(cycle: list[int], lifter: CycleLifter) -> list[int]:
    """Map a cycle of the triplicated graph back to the directed graph."""
    if len(lifter.records) != 1 or not isinstance(lifter.records[0], Triplication):
        raise ValueError("lifter is not a plain triplication journal")
    return _project_triplication(cycle, lifter.records[0].n)


def compress_triples(
    g: UndirectedGraph, order: int
) -> tuple[UndirectedGraph, CycleLifter]:
    """Drop the removable middle vertex of every candidate-triple gadget.

    In the triplication of an encoding graph, the nine vertices of each
    candidate triple form a gadget that is always entered at one end and
    left at the other; the middle copy of the slot-2 vertex can be removed
    and its two neighbours bridged without changing which cycles exist.
    Removes exactly 2N^3 vertices and 2N^3 edges; surviving vertices are
    renumbered in order.
    """
    n = order
    if g.n != 3 * vertex_count(n):
        raise ValueError(
            f"graph has {g.n} vertices, not the triplication of an order-{n} encoding"
        )
    mids: list[int] = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                mids.append(mid_copy(label_cand(i, j, k, 2, n)))
                mids.append(mid_copy(label_dup(i, j, k, 2, n)))
    mids.sort(reverse=True)
    removed = set()
    records: list[Record] = []
    for mv in mids:
        if g.neighbors(mv) != [mv - 1, mv + 1]:
            raise ValueError(f"vertex {mv} is not a removable gadget middle")
        if g.has_edge(mv - 1, mv + 1):
            raise ValueError(f"bridge ({mv - 1}, {mv + 1}) already present")
        # descending removal order keeps every record's current ids equal
        # to the ids in g itself
        records.append(GadgetRemoval(mv, mv - 1, mv + 1))
        removed.add(mv)

    alive = [v for v in range(1, g.n + 1) if v not in removed]
    new_id = {v: idx + 1 for idx, v in enumerate(alive)}
    edges = [
        (new_id[a], new_id[b])
        for a, b in g.edges()
        if a not in removed and b not in removed
    ]
    edges.extend((new_id[mv - 1], new_id[mv + 1]) for mv in mids)
    out = UndirectedGraph(len(alive), edges)
    assert out.m == g.m - len(mids)
    return out, CycleLifter(tuple(records))


class _Fenwick:
    """Prefix counts of deleted ids, for original-to-current renumbering."""

    def __init__(self, n: int):
        self.n = n
        self.tree = [0] * (n + 1)

    def add(self, i: int) -> None:
        while i <= self.n:
            self.tree[i] += 1
            i += i & (-i)

    def prefix(self, i: int) -> int:
        s = 0
        while i > 0:
            s += self.tree[i]
            i -= i & (-i)
        return s


def reduce_graph(
    g: UndirectedGraph,
) -> tuple[UndirectedGraph, CycleLifter] | Infeasible:
    """Shrink a graph with two cycle-preserving rules, run to a fixpoint.

    Rule 1: two adjacent degree-2 vertices contract to a single vertex.
    Rule 2: a vertex with two degree-2 neighbours keeps only the edges to
    them; its other edges can never be used and are deleted.

    Passes scan vertices in ascending id and apply rule 2 before rule 1,
    since rule 2 creates the chains that rule 1 collapses.  Returns
    Infeasible when the rules certify that no Hamiltonian cycle exists:
    a vertex with three or more degree-2 neighbours, a vertex left with
    fewer than two edges, or a contraction that would double an edge in
    a graph larger than a triangle (a forced short cycle).
    """
    if g.n < 4:
        raise ValueError("reduction expects at least 4 vertices")
    adj: dict[int, set[int]] = {v: set(g.neighbors(v)) for v in range(1, g.n + 1)}
    for v, nbrs in adj.items():
        if len(nbrs) < 2:
            return Infeasible(f"vertex {v} has degree {len(nbrs)}")
    alive = set(adj)
    bit = _Fenwick(g.n)

    def cur(x: int) -> int:
        return x - bit.prefix(x - 1)

    records: list[Record] = []
    changed = True
    while changed:
        changed = False

        for v in sorted(alive):
            nbrs = adj[v]
            deg2 = [u for u in nbrs if len(adj[u]) == 2]
            if len(deg2) >= 3:
                return Infeasible(
                    f"vertex {v} has {len(deg2)} degree-2 neighbours"
                )
            if len(deg2) == 2 and len(nbrs) > 2:
                others = sorted(nbrs.difference(deg2))
                dropped = []
                for w in others:
                    adj[v].discard(w)
                    adj[w].discard(v)
                    cv, cw = cur(v), cur(w)
                    dropped.append((cv, cw) if cv < cw else (cw, cv))
                records.append(EdgeDeletion(tuple(sorted(dropped))))
                changed = True

        for v in sorted(alive):
            if v not in alive:
                continue
            node = v
            while len(adj.get(node, ())) == 2:
                partners = sorted(u for u in adj[node] if len(adj[u]) == 2)
                if not partners:
                    break
                s, t = (node, partners[0]) if node < partners[0] else (partners[0], node)
                p = next(iter(adj[s] - {t}))
                q = next(iter(adj[t] - {s}))
                if p == q:
                    if len(alive) > 3:
                        return Infeasible(
                            f"contracting ({s}, {t}) would double edge to {p}"
                        )
                    break  # a bare triangle is terminal and Hamiltonian
                records.append(Contraction(cur(s), cur(t), cur(p), cur(q)))
                adj[s].discard(t)
                adj[s].add(q)
                adj[q].discard(t)
                adj[q].add(s)
                del adj[t]
                alive.discard(t)
                bit.add(t)
                changed = True
                node = s

    alive_sorted = sorted(alive)
    new_id = {v: idx + 1 for idx, v in enumerate(alive_sorted)}
    edges = [
        (new_id[a], new_id[b]) for a in alive_sorted for b in adj[a] if a < b
    ]
    return UndirectedGraph(len(alive_sorted), edges), CycleLifter(tuple(records))


def _normalize_records(
    lifter: CycleLifter, cycle_len: int
) -> tuple[int, int | None, list[Record], list[int]]:
    """Rewrite deleting records in the ids of the journal's base graph.

    Returns (base size, directed size if the journal starts with a
    triplication, records with base ids, final alive list mapping current
    ids to base ids).
    """
    records = list(lifter.records)
    directed_n = None
    if records and isinstance(records[0], Triplication):
        directed_n = records[0].n
        records = records[1:]
    if any(isinstance(r, Triplication) for r in records):
        raise ValueError("triplication record allowed only at the start of a journal")
    deletions = sum(isinstance(r, (GadgetRemoval, Contraction)) for r in records)
    base = cycle_len + deletions
    if directed_n is not None and base != 3 * directed_n:
        raise ValueError(
            f"cycle length {cycle_len} inconsistent with journal "
            f"({deletions} deletions from {3 * directed_n} vertices)"
        )
    alive = list(range(1, base + 1))

    def base_id(idx: int) -> int:
        if not 1 <= idx <= len(alive):
            raise ValueError("journal refers to vertices outside the graph")
        return alive[idx - 1]

    normalized: list[Record] = []
    for rec in records:
        if isinstance(rec, GadgetRemoval):
            normalized.append(
                GadgetRemoval(
                    base_id(rec.removed), base_id(rec.left), base_id(rec.right)
                )
            )
            alive.pop(rec.removed - 1)
        elif isinstance(rec, Contraction):
            normalized.append(
                Contraction(
                    base_id(rec.survivor),
                    base_id(rec.absorbed),
                    base_id(rec.attach_survivor),
                    base_id(rec.attach_absorbed),
                )
            )
            alive.pop(rec.absorbed - 1)
        else:
            normalized.append(rec)
    return base, directed_n, normalized, alive


def lift_cycle(lifter: CycleLifter, cycle: list[int]) -> list[int]:
    """Replay a journal backwards over a cycle of the final graph.

    Re-inserts gadget middles between their bridged neighbours, re-expands
    contractions using the recorded end attachments, and finally projects
    a leading triplication back to the directed graph.  Raises ValueError
    when the cycle cannot have come from the journal's final graph.
    """
    if not cycle:
        raise ValueError("empty cycle")
    base, directed_n, records, alive = _normalize_records(lifter, len(cycle))
    if sorted(cycle) != list(range(1, len(cycle) + 1)):
        raise ValueError("cycle is not a permutation of the final graph's vertices")
    base_cycle = [alive[c - 1] for c in cycle]

    nxt: dict[int, int] = {}
    prv: dict[int, int] = {}
    for idx, v in enumerate(base_cycle):
        w = base_cycle[(idx + 1) % len(base_cycle)]
        nxt[v] = w
        prv[w] = v

    def splice(new: int, a: int, b: int) -> None:
        if new in nxt:
            raise ValueError(
                f"cycle not consistent with journal: {new} inserted twice"
            )
        if nxt.get(a) == b:
            nxt[a] = new
            nxt[new] = b
            prv[b] = new
            prv[new] = a
        elif nxt.get(b) == a:
            nxt[b] = new
            nxt[new] = a
            prv[a] = new
            prv[new] = b
        else:
            raise ValueError(
                f"cycle not consistent with journal: {a} and {b} not adjacent"
            )

    for rec in reversed(records):
        if isinstance(rec, GadgetRemoval):
            splice(rec.removed, rec.left, rec.right)
        elif isinstance(rec, Contraction):
            around = {nxt[rec.survivor], prv[rec.survivor]}
            if around != {rec.attach_survivor, rec.attach_absorbed}:
                raise ValueError(
                    "cycle not consistent with journal: contraction "
                    f"survivor {rec.survivor} has neighbours {sorted(around)}"
                )
            splice(rec.absorbed, rec.survivor, rec.attach_absorbed)

    out = [base_cycle[0]]
    while True:
        w = nxt[out[-1]]
        if w == out[0]:
            break
        out.append(w)
    if len(out) != base:
        raise ValueError("lifted cycle does not cover the base graph")
    if directed_n is not None:
        return _project_triplication(out, directed_n)
    return out
