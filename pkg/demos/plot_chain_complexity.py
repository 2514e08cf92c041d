"""
Worst-case work on a chain
==========================

Block k is locked to k+1 and k+2 along alternating axes, so each level of
the recursion can only peel off a single block.  The tree is as deep as it
can be, and the measured work still stays below n * p * (n + m).
"""

from assemblyplan import ModelGraph, WorkMeter, h_max_pfd, tree_stats


def chain(n):
    edges = [(k, j, k % 2) for k in range(n - 1) for j in (k + 1, k + 2) if j < n]
    return ModelGraph.from_edges([(1, 0, 0), (0, 1, 0)], edges, blocks=range(n))


print(f"{'n':>5} {'height':>7} {'visits':>9} {'ratio':>7}")
for n in (25, 50, 100, 200, 400):
    g = chain(n)
    meter = WorkMeter()
    height = tree_stats(h_max_pfd(g, meter=meter)).height
    ratio = meter.visits / (n * g.p * (n + g.m))
    print(f"{n:>5} {height:>7} {meter.visits:>9} {ratio:>7.3f}")
