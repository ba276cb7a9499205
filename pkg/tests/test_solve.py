import random

import pytest

from sudoku2hcp import (
    Contradiction,
    DirectedGraph,
    SolveBudget,
    SolveState,
    UndirectedGraph,
    blank_instance,
    build_hcp,
    propagate,
    solve_directed,
    solve_hcp,
    undirect,
    verify_cycle,
    witness_cycle,
)
from _support import (
    all_order4_solutions,
    all_undirected_hamiltonian_cycles,
    brute_undirected_hamiltonian,
    dodecahedron,
    petersen,
    random_undirected,
)


class TestVerifyCycle:
    def test_triangle(self):
        g = UndirectedGraph(3, [(1, 2), (2, 3), (1, 3)])
        assert verify_cycle(g, [1, 2, 3])
        assert verify_cycle(g, [3, 1, 2])

    def test_not_spanning(self):
        g = UndirectedGraph(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
        assert not verify_cycle(g, [1, 2, 3])

    def test_non_edges_rejected(self):
        g = UndirectedGraph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
        assert verify_cycle(g, [1, 2, 3, 4])
        assert not verify_cycle(g, [1, 3, 2, 4])

    def test_directed_respects_orientation(self):
        g = DirectedGraph(3, [(1, 2), (2, 3), (3, 1)])
        assert verify_cycle(g, [1, 2, 3])
        assert not verify_cycle(g, [3, 2, 1])

    def test_witness_on_construction(self):
        g = build_hcp(4)
        w = witness_cycle(blank_instance(4), all_order4_solutions()[0])
        assert verify_cycle(g, w)

    def test_duplicates_rejected(self):
        g = UndirectedGraph(3, [(1, 2), (2, 3), (1, 3)])
        assert not verify_cycle(g, [1, 2, 2])


class TestPropagate:
    def test_five_cycle_fully_forced(self):
        g = UndirectedGraph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
        state = propagate(SolveState(g))
        assert state.complete()
        assert all(state.edge_state(u, v) == 1 for u, v in g.edges())

    def test_k4_exclusion(self):
        g = UndirectedGraph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        state = SolveState(g)
        state.force(1, 2)
        state.force(1, 3)
        propagate(state)
        assert state.edge_state(1, 4) == -1

    def test_triplication_middles_all_forced(self):
        g = build_hcp(4)
        ug, _ = undirect(g)
        state = propagate(SolveState(ug))
        forced = sum(1 for s in state.state if s == 1)
        assert forced >= 2 * g.n
        for v in range(1, g.n + 1):
            mid = 3 * v - 1
            assert state.edge_state(mid - 1, mid) == 1
            assert state.edge_state(mid, mid + 1) == 1

    def test_contradiction_on_low_degree(self):
        g = UndirectedGraph(4, [(1, 2), (2, 3), (3, 4), (4, 2)])
        with pytest.raises(Contradiction):
            propagate(SolveState(g))

    def test_short_cycle_edge_excluded(self):
        # square with one diagonal: forcing 1-2 and 2-3 must exclude 1-3
        g = UndirectedGraph(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
        state = SolveState(g)
        state.force(1, 2)
        state.force(2, 3)
        propagate(state)
        assert state.edge_state(1, 3) == -1

    def test_never_excludes_cycle_edges(self):
        rng = random.Random(909)
        graphs = 0
        for _ in range(60):
            g = random_undirected(rng, rng.randint(6, 10), 0.55)
            cycles = all_undirected_hamiltonian_cycles(g.n, g.edge_set())
            state = SolveState(g)
            try:
                propagate(state)
            except Contradiction:
                assert not cycles
                continue
            graphs += 1
            cycle_edges = set()
            for cyc in cycles:
                for t in range(len(cyc)):
                    a, b = cyc[t - 1], cyc[t]
                    cycle_edges.add((a, b) if a < b else (b, a))
            for (u, v) in g.edges():
                if state.edge_state(u, v) == -1:
                    assert (u, v) not in cycle_edges
                if state.edge_state(u, v) == 1 and cycles:
                    # forced edges must lie on every cycle
                    for cyc in cycles:
                        edges = {
                            tuple(sorted((cyc[t - 1], cyc[t])))
                            for t in range(len(cyc))
                        }
                        assert (u, v) in edges
        assert graphs > 20


class TestSolve:
    def test_petersen_no_cycle(self):
        assert brute_undirected_hamiltonian(10, petersen().edge_set()) is None
        assert solve_hcp(petersen()).status == "no_cycle"

    def test_dodecahedron_cycle(self):
        g = dodecahedron()
        assert brute_undirected_hamiltonian(20, g.edge_set()) is not None
        out = solve_hcp(g)
        assert out.status == "cycle"
        assert verify_cycle(g, out.cycle)

    def test_agreement_with_brute_force(self):
        rng = random.Random(314159)
        for _ in range(60):
            g = random_undirected(rng, rng.randint(4, 10), 0.4)
            expected = brute_undirected_hamiltonian(g.n, g.edge_set())
            out = solve_hcp(g)
            if expected is None:
                assert out.status == "no_cycle"
            else:
                assert out.status == "cycle"
                assert verify_cycle(g, out.cycle)

    def test_deterministic(self):
        rng = random.Random(12)
        g = random_undirected(rng, 10, 0.4)
        a = solve_hcp(g)
        b = solve_hcp(g)
        assert a.status == b.status
        assert a.cycle == b.cycle
        assert a.stats.nodes == b.stats.nodes
        assert a.stats.depth == b.stats.depth

    def test_budget_outcome(self):
        ug, _ = undirect(build_hcp(9))
        out = solve_hcp(ug, SolveBudget(max_nodes=5, max_ms=60_000))
        assert out.status == "budget"
        assert out.cycle is None
        assert out.stats.nodes >= 5

    def test_propagation_only_solve_beats_zero_budget(self):
        g = UndirectedGraph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
        out = solve_hcp(g, SolveBudget(max_nodes=0, max_ms=60_000))
        assert out.status == "cycle"
        assert out.stats.nodes == 0

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            solve_hcp(UndirectedGraph(2, [(1, 2)]))


class TestSolveDirected:
    def test_directed_triangle(self):
        g = DirectedGraph(3, [(1, 2), (2, 3), (3, 1)])
        out = solve_directed(g)
        assert out.status == "cycle"
        assert out.cycle == [1, 2, 3]

    def test_out_degree_zero_no_cycle(self):
        g = DirectedGraph(3, [(1, 2), (2, 3), (2, 1), (3, 2)])
        assert solve_directed(g).status == "no_cycle"

    def test_blank_order4_graph(self):
        g = build_hcp(4)
        out = solve_directed(g)
        assert out.status == "cycle"
        assert verify_cycle(g, out.cycle)
        from sudoku2hcp import recover_solution

        assert recover_solution(out.cycle, 4) in all_order4_solutions()

    def test_pruned_order9_within_desk_budget(self):
        from sudoku2hcp import parse_sudoku, prune_fixed, recover_solution, validate_grid
        from _support import PUZZLE_35

        inst = parse_sudoku(PUZZLE_35, "line")
        g, _ = prune_fixed(build_hcp(9), inst)
        out = solve_directed(g, SolveBudget(max_ms=600_000))
        assert out.status == "cycle"
        grid = recover_solution(out.cycle, 9)
        assert validate_grid(inst, grid) == []
