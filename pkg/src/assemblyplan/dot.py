"""Graphviz DOT text for models, projections, CCGs and decomposition trees."""

from __future__ import annotations

from .decomposition import Ccg, Digraph
from .hierarchy import PfdTree
from .model import ModelGraph


def _ids(g: ModelGraph, comp) -> str:
    return "{" + ",".join(map(str, g.source_ids(comp))) + "}"


def model_dot(g: ModelGraph) -> str:
    lines = ["digraph model {"]
    for b in g.blocks:
        label = str(b.source_id) if b.label is None else f"{b.source_id}: {b.label}"
        lines.append(f'  b{b.source_id} [label="{_esc(label)}"];')
    for e in g.edges:
        u, v = g.source_pair(e)
        lines.append(f'  b{u} -> b{v} [label="d{e.dir}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_dot(g: ModelGraph, d: Digraph, name: str) -> str:
    """A digraph over block indices, drawn with input block ids."""
    lines = [f"digraph {name} {{"]
    for v in sorted(d.vertices):
        sid = g.blocks[v].source_id
        lines.append(f'  b{sid} [label="{sid}"];')
    for u, v in sorted(d.arcs):
        lines.append(f"  b{g.blocks[u].source_id} -> b{g.blocks[v].source_id};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ccg_dot(g: ModelGraph, c: Ccg) -> str:
    lines = [f"digraph ccg_d{c.dir} {{"]
    for i, comp in enumerate(c.nodes):
        lines.append(f'  c{i} [label="{_ids(g, comp)}"];')
    for i, j in sorted(c.arcs):
        lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_dot(g: ModelGraph, t: PfdTree) -> str:
    lines = ["digraph tree {"]
    ids: dict[int, int] = {}
    for node in t.walk():
        ids[id(node)] = len(ids)
        attrs = f'label="{_ids(g, node.node)}"'
        if node.stuck:
            attrs += ", color=red"
        lines.append(f"  t{ids[id(node)]} [{attrs}];")
    for node in t.walk():
        for child in node.children:
            lines.append(f'  t{ids[id(node)]} -> t{ids[id(child)]} [label="d{node.dir}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _esc(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')
