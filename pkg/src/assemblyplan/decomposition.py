"""Physically feasible decomposition along a single direction.

A set of co-linear connections can be pulled apart only if the component
connectivity graph (CCG) it induces is acyclic.  The finest such split along
direction ``i`` is obtained from the strongly connected components of the
projection ``G_i``: every connection not on ``i`` is made bidirectional,
since it locks its two blocks together for any motion along ``i``.
"""

from __future__ import annotations

import heapq
from collections.abc import Collection, Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .model import Components, Connection, ModelGraph, weak_components

Arc = tuple[int, int]


@dataclass
class WorkMeter:
    """Counts vertex and arc visits made by the SCC search."""

    visits: int = 0


@dataclass(frozen=True)
class Digraph:
    vertices: frozenset[int]
    arcs: frozenset[Arc]

    def __post_init__(self) -> None:
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"loop arc at {u}")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"arc {(u, v)} leaves the vertex set")

    @classmethod
    def of(cls, vertices: Iterable[int], arcs: Iterable[Arc]) -> Digraph:
        return cls(frozenset(vertices), frozenset(arcs))

    @cached_property
    def successors(self) -> dict[int, list[int]]:
        succ: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.arcs:
            succ[u].append(v)
        for targets in succ.values():
            targets.sort()
        return succ


@dataclass(frozen=True)
class Ccg:
    """Component connectivity graph implied by removing ``removed`` along ``dir``."""

    nodes: Components
    arcs: frozenset[Arc]
    removed: frozenset[Connection]
    dir: int

    def as_digraph(self) -> Digraph:
        return Digraph(frozenset(range(len(self.nodes))), self.arcs)


@dataclass(frozen=True)
class MaxPfdResult:
    components: Components
    removed: frozenset[Connection]
    ccg: Ccg
    dir: int

    @property
    def k(self) -> int:
        return len(self.components)


class EmptyRemoval(ValueError):
    pass


class EdgeNotInDirection(ValueError):
    pass


class CycleFound(ValueError):
    """No topological order exists; ``cycle`` is a closed vertex walk ``[a, ..., a]``."""

    def __init__(self, cycle: Sequence[int]):
        self.cycle = list(cycle)
        super().__init__(f"cycle: {' -> '.join(map(str, self.cycle))}")


def project_along(g: ModelGraph, dir: int, vertices: Collection[int] | None = None) -> Digraph:
    """Projection of ``g`` (or its subgraph induced by ``vertices``) along ``dir``.

    All original arcs are kept and every arc off ``dir`` is added reversed.
    """
    _check_dir(g, dir)
    if vertices is None:
        vs, edges = g.vertices, g.edges
    else:
        vs = frozenset(vertices)
        edges = g.induced_edges(vs)
    return Digraph(vs, frozenset(_projected_arcs(edges, dir)))


def _projected_arcs(edges: Iterable[Connection], dir: int) -> set[Arc]:
    arcs: set[Arc] = set()
    for e in edges:
        arcs.add((e.src, e.dst))
        if e.dir != dir:
            arcs.add((e.dst, e.src))
    return arcs


def strongly_connected_components(d: Digraph, meter: WorkMeter | None = None) -> Components:
    """Tarjan's algorithm, iterative.

    Roots are tried in ascending vertex order and successors in ascending
    order, so the output is deterministic.  Components come out in reverse
    topological order of the condensation: every arc between two distinct
    components points from a later one to an earlier one.
    """
    succ = d.successors
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    out: list[frozenset[int]] = []
    counter = 0
    visits = 0

    for root in sorted(d.vertices):
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        visits += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(succ[root]))]
        while work:
            v, it = work[-1]
            for w in it:
                visits += 1
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    visits += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    break
                if w in on_stack and index[w] < low[v]:
                    low[v] = index[w]
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                if low[v] == index[v]:
                    comp = set()
                    while True:
                        w = stack.pop()
                        on_stack.discard(w)
                        comp.add(w)
                        if w == v:
                            break
                    out.append(frozenset(comp))

    if meter is not None:
        meter.visits += visits
    return tuple(out)


def condense(d: Digraph, sccs: Components) -> Digraph:
    """Condensation of ``d`` over the indices of ``sccs``."""
    owner = {v: i for i, comp in enumerate(sccs) for v in comp}
    arcs = {(owner[u], owner[v]) for u, v in d.arcs if owner[u] != owner[v]}
    return Digraph(frozenset(range(len(sccs))), frozenset(arcs))


def build_ccg(
    g: ModelGraph,
    removed: Iterable[Connection],
    dir: int,
    vertices: Collection[int] | None = None,
) -> Ccg:
    """CCG implied by removing ``removed`` (all on ``dir``) from ``g``.

    With ``vertices`` the model is first restricted to that induced subgraph.
    """
    _check_dir(g, dir)
    removed = frozenset(removed)
    if not removed:
        raise EmptyRemoval("the removal set must be non-empty")
    for e in removed:
        if e.dir != dir:
            raise EdgeNotInDirection(f"edge {e.pair} lies on direction {e.dir}, not {dir}")
    if vertices is None:
        vs, edges = g.vertices, g.edges
    else:
        vs = frozenset(vertices)
        edges = g.induced_edges(vs)
    nodes = weak_components(vs, (e for e in edges if e not in removed))
    owner = {v: i for i, comp in enumerate(nodes) for v in comp}
    arcs = frozenset(
        (owner[e.src], owner[e.dst])
        for e in removed
        if e.src in owner and e.dst in owner and owner[e.src] != owner[e.dst]
    )
    return Ccg(nodes, arcs, removed, dir)


def has_cycle(d: Digraph) -> bool:
    try:
        topological_order(d)
    except CycleFound:
        return True
    return False


def is_pfd(c: Ccg) -> bool:
    """True iff the removal is a k-PFD with k >= 2, i.e. the CCG is a DAG."""
    return len(c.nodes) >= 2 and not has_cycle(c.as_digraph())


def is_2pfd(c: Ccg) -> bool:
    # two-component removal is feasible iff exactly one of the two arcs is present
    return len(c.nodes) == 2 and len(c.arcs) == 1


def max_pfd(
    g: ModelGraph,
    dir: int,
    vertices: Collection[int] | None = None,
    meter: WorkMeter | None = None,
) -> MaxPfdResult:
    """Maximal physically feasible decomposition along ``dir``.

    The components are the SCCs of the projection, listed in topological
    order (first detachable first).  ``removed`` holds the physically
    removable connections: those on ``dir`` whose endpoints land in
    different components.
    """
    _check_dir(g, dir)
    if vertices is None:
        vs, edges = g.vertices, g.edges
    else:
        vs = frozenset(vertices)
        edges = g.induced_edges(vs)
    return _max_pfd(vs, edges, dir, meter)


def _max_pfd(
    vertices: frozenset[int],
    edges: Sequence[Connection],
    dir: int,
    meter: WorkMeter | None = None,
) -> MaxPfdResult:
    proj = Digraph(vertices, frozenset(_projected_arcs(edges, dir)))
    comps = strongly_connected_components(proj, meter)[::-1]
    owner = {v: i for i, comp in enumerate(comps) for v in comp}
    removed = frozenset(e for e in edges if owner[e.src] != owner[e.dst])
    arcs = frozenset((owner[e.src], owner[e.dst]) for e in removed)
    return MaxPfdResult(comps, removed, Ccg(comps, arcs, removed, dir), dir)


def physically_removable_edges(
    g: ModelGraph, dir: int, vertices: Collection[int] | None = None
) -> frozenset[Connection]:
    return max_pfd(g, dir, vertices).removed


def topological_order(d: Digraph) -> list[int]:
    """Kahn's algorithm, smallest available vertex first.

    Raises :class:`CycleFound` with a witness cycle if ``d`` is not a DAG.
    """
    indeg = {v: 0 for v in d.vertices}
    for _, v in d.arcs:
        indeg[v] += 1
    ready = [v for v, k in indeg.items() if k == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in d.successors[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if len(order) < len(d.vertices):
        raise CycleFound(_witness_cycle(d, {v for v, k in indeg.items() if k > 0}))
    return order


def _witness_cycle(d: Digraph, remaining: set[int]) -> list[int]:
    # every leftover vertex keeps a leftover predecessor, so walking backwards
    # inside the leftover set must revisit a vertex
    preds: dict[int, list[int]] = {v: [] for v in remaining}
    for u, v in d.arcs:
        if u in remaining and v in remaining:
            preds[v].append(u)
    v = min(remaining)
    pos: dict[int, int] = {}
    walk: list[int] = []
    while v not in pos:
        pos[v] = len(walk)
        walk.append(v)
        v = min(preds[v])
    cycle = walk[pos[v]:] + [v]
    return cycle[::-1]


def _check_dir(g: ModelGraph, dir: int) -> None:
    if not 0 <= dir < g.p:
        raise IndexError(f"direction index {dir} out of range for p={g.p}")
