"""
Taking a small bridge apart
===========================

Five blocks: a deck made of blocks 1 to 4, and block 5 slid onto its end.
Blocks 2 and 3 sit between 1 and 4, so they are trapped vertically.
"""

from assemblyplan import ModelGraph, emit_plan, h_max_pfd, max_pfd, render_plan

horizontal, vertical = (1, 0, 0), (0, 1, 0)
edges = [(2, 3, 0), (1, 5, 0), (4, 5, 0), (2, 1, 1), (4, 2, 1), (3, 1, 1), (4, 3, 1)]
g = ModelGraph.from_edges([horizontal, vertical], edges)

# one flat split per direction
for d in range(g.p):
    res = max_pfd(g, d)
    parts = [g.source_ids(c) for c in res.components]
    cut = sorted(g.source_pair(e) for e in res.removed)
    print(f"along {g.directions[d]}: {parts}, cut {cut}")

# the horizontal link 2 -> 3 is never cut at the top level: 1 and 4 hold it
# in place until the deck itself is taken apart vertically

tree = h_max_pfd(g)
for node in tree.walk():
    if node.children:
        kids = [g.source_ids(c.node) for c in node.children]
        print(f"{g.source_ids(node.node)} -> {kids} along {g.directions[node.dir]}")

print()
print(render_plan(emit_plan(tree), g), end="")
