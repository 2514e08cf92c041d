"""
Projection, strong components and the condensation
==================================================

Splitting along one direction is a graph question.  Links on other axes
cannot slide, so they are made two-way; blocks that end up mutually
reachable must move together.
"""

from assemblyplan import (
    ModelGraph,
    condense,
    project_along,
    strongly_connected_components,
    topological_order,
)

edges = [(2, 3, 0), (1, 5, 0), (4, 5, 0), (2, 1, 1), (4, 2, 1), (3, 1, 1), (4, 3, 1)]
g = ModelGraph.from_edges([(1, 0, 0), (0, 1, 0)], edges)

for d in range(g.p):
    proj = project_along(g, d)
    sccs = strongly_connected_components(proj)
    dag = condense(proj, sccs)
    order = topological_order(dag)
    print(f"direction {g.directions[d]}")
    print(f"  projection has {len(proj.arcs)} arcs")
    print(f"  strong components: {[g.source_ids(c) for c in sccs]}")
    print(f"  condensation: {len(dag.vertices)} nodes, arcs {sorted(dag.arcs)}")
    print(f"  removal order: {[g.source_ids(sccs[i]) for i in order]}")
