"""Brute-force checker that applies the recursive k-PFD definition literally.

This is a test instrument.  It never calls into the SCC machinery: a removal
set is judged feasible by searching for a sequence of two-way splits, each of
which must leave exactly one arc between its two halves.  Everything is
exponential, so inputs are capped.
"""

from __future__ import annotations

from collections.abc import Collection, Iterable
from dataclasses import dataclass
from itertools import combinations

from .decomposition import build_ccg, is_pfd, max_pfd
from .model import Connection, ModelGraph

MAX_BLOCKS = 12
MAX_DIR_EDGES = 16


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class RemovalCandidate:
    dir: int
    removed: frozenset[Connection]

    def __post_init__(self) -> None:
        if not self.removed:
            raise ValueError("a removal candidate must be non-empty")
        if any(e.dir != self.dir for e in self.removed):
            raise ValueError("every removed edge must lie on the candidate's direction")


@dataclass(frozen=True)
class Agreement:
    recursive: bool
    dag: bool

    @property
    def agree(self) -> bool:
        return self.recursive == self.dag


def _guard(g: ModelGraph, dir: int, max_blocks: int = MAX_BLOCKS) -> None:
    if g.n > min(max_blocks, MAX_BLOCKS):
        raise InstanceTooLarge(f"{g.n} blocks exceeds the oracle limit of {min(max_blocks, MAX_BLOCKS)}")
    k = len(g.edges_along(dir))
    if k > MAX_DIR_EDGES:
        raise InstanceTooLarge(f"{k} edges on direction {dir} exceeds the oracle limit of {MAX_DIR_EDGES}")


def _components(vertices: Iterable[int], edges: Iterable[Connection]) -> list[frozenset[int]]:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for e in edges:
        adj[e.src].append(e.dst)
        adj[e.dst].append(e.src)
    seen: set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            for w in adj[frontier.pop()]:
                if w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


class _Search:
    """Memoized recursive feasibility over (component, removal inside it)."""

    def __init__(self, g: ModelGraph):
        self.g = g
        self.memo: dict[tuple[frozenset[int], frozenset[Connection]], bool] = {}

    def inside(self, vertices: frozenset[int], edges: Iterable[Connection]) -> list[Connection]:
        return [e for e in edges if e.src in vertices and e.dst in vertices]

    def feasible(self, vertices: frozenset[int], removed: frozenset[Connection]) -> bool:
        """Can ``vertices`` be taken apart into its final pieces by 2-PFD steps?"""
        key = (vertices, removed)
        if key not in self.memo:
            self.memo[key] = self._feasible(vertices, removed)
        return self.memo[key]

    def _feasible(self, vertices: frozenset[int], removed: frozenset[Connection]) -> bool:
        edges = self.inside(vertices, self.g.edges)
        final = _components(vertices, (e for e in edges if e not in removed))
        if len(final) == 1:
            return True
        piece = {v: i for i, comp in enumerate(final) for v in comp}
        # removed edges inside one final piece never change connectivity
        crossing = [e for e in removed if piece[e.src] != piece[e.dst]]
        for size in range(1, len(crossing) + 1):
            for first in combinations(crossing, size):
                first = frozenset(first)
                halves = _components(vertices, (e for e in edges if e not in first))
                if len(halves) != 2:
                    continue
                side = {v: i for i, comp in enumerate(halves) for v in comp}
                arcs = {(side[e.src], side[e.dst]) for e in first if side[e.src] != side[e.dst]}
                if len(arcs) != 1:
                    continue
                if all(
                    self.feasible(h, frozenset(self.inside(h, removed))) for h in halves
                ):
                    return True
        return False

    def is_kpfd(self, removed: frozenset[Connection], vertices: frozenset[int]) -> bool:
        edges = self.inside(vertices, self.g.edges)
        if len(_components(vertices, (e for e in edges if e not in removed))) < 2:
            return False
        return self.feasible(vertices, frozenset(self.inside(vertices, removed)))


def is_kpfd_recursive(
    g: ModelGraph,
    cand: RemovalCandidate,
    vertices: Collection[int] | None = None,
    *,
    _search: _Search | None = None,
) -> bool:
    """Does removing ``cand.removed`` take the model apart into k >= 2 pieces
    through a sequence of two-component feasible separations?"""
    _guard(g, cand.dir)
    vs = g.vertices if vertices is None else frozenset(vertices)
    search = _search or _Search(g)
    return search.is_kpfd(cand.removed, vs)


def theorem3_equivalence(
    g: ModelGraph, cand: RemovalCandidate, *, _search: _Search | None = None
) -> Agreement:
    """Recursive-definition verdict next to the CCG acyclicity verdict."""
    recursive = is_kpfd_recursive(g, cand, _search=_search)
    dag = is_pfd(build_ccg(g, cand.removed, cand.dir))
    return Agreement(recursive, dag)


def _subsets(edges: tuple[Connection, ...]) -> Iterable[tuple[int, frozenset[Connection]]]:
    for mask in range(1, 1 << len(edges)):
        yield mask, frozenset(e for i, e in enumerate(edges) if mask >> i & 1)


def all_candidates(g: ModelGraph, dir: int) -> list[RemovalCandidate]:
    """Every non-empty subset of the edges along ``dir``."""
    _guard(g, dir)
    return [RemovalCandidate(dir, s) for _, s in _subsets(g.edges_along(dir))]


def _refines(fine: frozenset[frozenset[int]], coarse: frozenset[frozenset[int]]) -> bool:
    return fine != coarse and all(any(x <= y for y in coarse) for x in fine)


def maximal_removals(g: ModelGraph, dir: int) -> set[RemovalCandidate]:
    """Feasible removals along ``dir`` whose piece partition is not strictly
    refined by the partition of any other feasible removal.

    Comparing only against supersets is not enough: a removal that also cuts
    edges inside a piece can be impossible to extend while still splitting
    the model more coarsely than it could be split.
    """
    _guard(g, dir)
    search = _Search(g)
    by_partition: dict[frozenset[frozenset[int]], list[frozenset[Connection]]] = {}
    for _, subset in _subsets(g.edges_along(dir)):
        if search.is_kpfd(subset, g.vertices):
            parts = frozenset(_components(g.vertices, (e for e in g.edges if e not in subset)))
            by_partition.setdefault(parts, []).append(subset)
    return {
        RemovalCandidate(dir, r)
        for parts, removals in by_partition.items()
        if not any(_refines(other, parts) for other in by_partition)
        for r in removals
    }


def partition_of(g: ModelGraph, cand: RemovalCandidate) -> frozenset[frozenset[int]]:
    return frozenset(_components(g.vertices, (e for e in g.edges if e not in cand.removed)))


@dataclass
class DirectionReport:
    dir: int
    candidates: int
    disagreements: list[RemovalCandidate]
    maximal_partitions: set[frozenset[frozenset[int]]]
    max_pfd_partition: frozenset[frozenset[int]]

    @property
    def maximal_ok(self) -> bool:
        if len(self.max_pfd_partition) == 1:
            return not self.maximal_partitions
        return self.maximal_partitions == {self.max_pfd_partition}

    @property
    def ok(self) -> bool:
        return not self.disagreements and self.maximal_ok


def check_model(g: ModelGraph, max_blocks: int = MAX_BLOCKS) -> list[DirectionReport]:
    """Run the equivalence and maximality checks on every direction."""
    for d in range(g.p):
        _guard(g, d, max_blocks)
    reports = []
    for d in range(g.p):
        search = _Search(g)
        cands = all_candidates(g, d)
        bad = [c for c in cands if not theorem3_equivalence(g, c, _search=search).agree]
        maximal = {partition_of(g, c) for c in maximal_removals(g, d)}
        fast = frozenset(max_pfd(g, d).components)
        reports.append(DirectionReport(d, len(cands), bad, maximal, fast))
    return reports
