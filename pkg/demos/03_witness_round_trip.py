"""Every solution is a cycle, and every cycle decodes back to its solution.

A known solution can be written down directly as a Hamiltonian cycle of
the encoding graph: walk the blocks committing each value at its solved
cell, then collect the remaining candidate triples row by row and column
by column.  Reading the cycle back at each cell_end vertex recovers the
grid.  The 4x4 puzzle is small enough to do this for all 288 solutions.
"""

from sudoku2hcp import (
    blank_instance,
    build_hcp,
    enumerate_solutions,
    format_grid,
    recover_solution,
    verify_cycle,
    witness_cycle,
)

blank = blank_instance(4)
solutions = enumerate_solutions(blank, 10**6)
print(f"the blank 4x4 puzzle has {len(solutions)} solutions")

g = build_hcp(4)
for sol in solutions:
    cycle = witness_cycle(blank, sol)
    assert verify_cycle(g, cycle)
    assert recover_solution(cycle, 4) == sol
print(f"all {len(solutions)} witness cycles verify on the {g.n}-vertex graph "
      "and decode back to their own grids")

sample = solutions[137]
cycle = witness_cycle(blank, sample)
print()
print("one sample solution:")
print(format_grid(sample))
print(f"its witness cycle starts {cycle[:6]} ... and ends ... {cycle[-3:]}")
print("(vertex 1 is the start marker, vertex 2 the finish marker)")
