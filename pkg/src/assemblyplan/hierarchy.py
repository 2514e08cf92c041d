"""Hierarchical decomposition of a whole model into single blocks."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .decomposition import Ccg, CycleFound, WorkMeter, _max_pfd, topological_order
from .model import Connection, ModelGraph


@dataclass(frozen=True)
class PfdTree:
    """One node of the hierarchical decomposition.

    ``dir`` and ``removed`` describe how ``node`` was split into ``children``.
    A node with several blocks that no direction can split has no children
    and ``stuck=True``.
    """

    node: frozenset[int]
    dir: int | None = None
    removed: frozenset[Connection] = frozenset()
    children: tuple[PfdTree, ...] = ()
    stuck: bool = False

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def walk(self) -> Iterator[PfdTree]:
        """Preorder iteration over all nodes."""
        stack = [self]
        while stack:
            t = stack.pop()
            yield t
            stack.extend(reversed(t.children))

    def stuck_components(self) -> list[frozenset[int]]:
        return [t.node for t in self.walk() if t.stuck]


_Split = tuple[int, frozenset[Connection], tuple[frozenset[int], ...]]


class StuckComponent(ValueError):
    def __init__(self, components: list[frozenset[int]]):
        self.components = components
        super().__init__(
            "irreducible components: " + "; ".join(str(sorted(c)) for c in components)
        )


def h_max_pfd(g: ModelGraph, *, strict: bool = False, meter: WorkMeter | None = None) -> PfdTree:
    """Recursively split ``g`` by maximal PFDs until single blocks remain.

    At each component the directions are tried in index order and the first
    one that yields two or more components is used; children are kept in the
    topological order of that split.  Components that no direction splits
    come back flagged ``stuck``; with ``strict=True`` they raise
    :class:`StuckComponent` instead.
    """
    # explicit stack: chain-like models produce trees as deep as the block count
    splits: dict[frozenset[int], _Split | None] = {}
    pending = [(g.vertices, g.edges)]
    while pending:
        vertices, edges = pending.pop()
        if len(vertices) == 1:
            splits[vertices] = None
            continue
        for i in range(g.p):
            res = _max_pfd(vertices, edges, i, meter)
            if res.k > 1:
                splits[vertices] = (i, res.removed, res.components)
                owner = {v: j for j, comp in enumerate(res.components) for v in comp}
                parts: list[list[Connection]] = [[] for _ in res.components]
                for e in edges:
                    if owner[e.src] == owner[e.dst]:
                        parts[owner[e.src]].append(e)
                pending.extend(zip(res.components, parts))
                break
        else:
            splits[vertices] = None

    tree = _assemble_iteratively(g.vertices, splits)
    if strict and (stuck := tree.stuck_components()):
        raise StuckComponent(stuck)
    return tree


def _assemble_iteratively(root: frozenset[int], splits: dict[frozenset[int], _Split | None]) -> PfdTree:
    built: dict[frozenset[int], PfdTree] = {}
    stack = [(root, False)]
    while stack:
        vertices, expanded = stack.pop()
        split = splits[vertices]
        if split is None:
            built[vertices] = PfdTree(vertices, stuck=len(vertices) > 1)
        elif expanded:
            dir, removed, comps = split
            built[vertices] = PfdTree(vertices, dir, removed, tuple(built.pop(c) for c in comps))
        else:
            stack.append((vertices, True))
            stack.extend((c, False) for c in split[2])
    return built[root]


@dataclass(frozen=True)
class TreeStats:
    height: int
    internal_count: int
    leaf_count: int


def tree_stats(t: PfdTree) -> TreeStats:
    height = internal = leaves = 0
    stack = [(t, 0)]
    while stack:
        node, depth = stack.pop()
        height = max(height, depth)
        if node.children:
            internal += 1
            stack.extend((c, depth + 1) for c in node.children)
        else:
            leaves += 1
    return TreeStats(height, internal, leaves)


# -- binary view of one k-PFD ------------------------------------------------


@dataclass(frozen=True)
class BinaryPfdTree:
    """Full ordered binary tree over CCG node indices.

    At every internal node the connections run from the left child's
    components to the right child's.
    """

    node: frozenset[int]
    left: BinaryPfdTree | None = None
    right: BinaryPfdTree | None = None

    def leaves(self) -> list[frozenset[int]]:
        if self.left is None:
            return [self.node]
        return self.left.leaves() + self.right.leaves()


class NotADag(ValueError):
    pass


def kpfd_binary_tree(c: Ccg) -> BinaryPfdTree:
    """Peel off CCG components one at a time in topological order."""
    if len(c.nodes) < 2:
        raise ValueError("a k-PFD needs at least two components")
    try:
        order = topological_order(c.as_digraph())
    except CycleFound as exc:
        raise NotADag(f"CCG has a cycle {exc.cycle}") from exc
    tree = BinaryPfdTree(frozenset([order[-1]]))
    for idx in reversed(order[:-1]):
        tree = BinaryPfdTree(tree.node | {idx}, BinaryPfdTree(frozenset([idx])), tree)
    return tree
