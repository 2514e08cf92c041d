"""Model generators and brute-force reference computations shared by the tests."""

from __future__ import annotations

import random
from itertools import product

from hypothesis import strategies as st

from assemblyplan import ModelGraph, validate_model

AXES = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, -1, 0), (0, 1, 1)]

BRIDGE_EDGES = [(2, 3, 0), (1, 5, 0), (4, 5, 0), (2, 1, 1), (4, 2, 1), (3, 1, 1), (4, 3, 1)]


def bridge() -> ModelGraph:
    return ModelGraph.from_edges([(1, 0, 0), (0, 1, 0)], BRIDGE_EDGES)


def random_model(rng: random.Random, max_blocks: int = 7, max_dirs: int = 3, max_edges: int = 10) -> ModelGraph:
    """Weakly connected random model: a random spanning tree plus extra edges."""
    n = rng.randint(1, max_blocks)
    p = rng.randint(1, max_dirs)
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        a, b = (u, v) if rng.random() < 0.5 else (v, u)
        edges.append((a, b, rng.randrange(p)))
    extra = rng.randint(0, max(0, max_edges - len(edges)))
    for _ in range(extra if n > 1 else 0):
        a, b = rng.sample(range(n), 2)
        edges.append((a, b, rng.randrange(p)))
    return ModelGraph.from_edges(AXES[:p], edges, blocks=range(n))


@st.composite
def models(draw, max_blocks: int = 7, max_dirs: int = 3, max_edges: int = 10) -> ModelGraph:
    seed = draw(st.integers(0, 2**32 - 1))
    return random_model(random.Random(seed), max_blocks, max_dirs, max_edges)


@st.composite
def raw_models(draw, max_blocks: int = 6) -> dict:
    """Raw documents with unsorted ids, non-canonical and antiparallel vectors."""
    n = draw(st.integers(1, max_blocks))
    ids = draw(st.lists(st.integers(0, 1000), min_size=n, max_size=n, unique=True))
    vec = st.tuples(*[st.integers(-3, 3)] * 3).filter(any)
    dirs = draw(st.lists(vec, min_size=1, max_size=4))
    conns = []
    for k in range(1, n):
        u = ids[draw(st.integers(0, k - 1))]
        v = ids[k]
        if draw(st.booleans()):
            u, v = v, u
        conns.append({"from": u, "to": v, "direction": draw(st.integers(0, len(dirs) - 1))})
    for _ in range(draw(st.integers(0, 4)) if n > 1 else 0):
        u, v = draw(st.lists(st.sampled_from(ids), min_size=2, max_size=2, unique=True))
        conns.append({"from": u, "to": v, "direction": draw(st.integers(0, len(dirs) - 1))})
    return {
        "directions": [list(d) for d in dirs],
        "blocks": [{"id": i, "label": f"part-{i}"} for i in ids],
        "connections": conns,
    }


def random_raw(rng: random.Random, max_blocks: int = 6) -> dict:
    """Seeded counterpart of :func:`raw_models` for plain loops."""
    n = rng.randint(1, max_blocks)
    ids = rng.sample(range(1000), n)
    dirs = []
    while len(dirs) < rng.randint(1, 4):
        v = [rng.randint(-3, 3) for _ in range(3)]
        if any(v):
            dirs.append(v)
    conns = []
    for k in range(1, n):
        u, v = ids[rng.randrange(k)], ids[k]
        if rng.random() < 0.5:
            u, v = v, u
        conns.append({"from": u, "to": v, "direction": rng.randrange(len(dirs))})
    for _ in range(rng.randint(0, 4) if n > 1 else 0):
        u, v = rng.sample(ids, 2)
        conns.append({"from": u, "to": v, "direction": rng.randrange(len(dirs))})
    return {
        "directions": dirs,
        "blocks": [{"id": i, "label": f"part-{i}"} for i in ids],
        "connections": conns,
    }


def random_digraph(rng: random.Random, max_vertices: int = 8, density: float | None = None):
    n = rng.randint(0, max_vertices)
    q = rng.random() if density is None else density
    arcs = {(u, v) for u, v in product(range(n), repeat=2) if u != v and rng.random() < q}
    return set(range(n)), arcs


def reachability(vertices, arcs) -> dict[int, set[int]]:
    """Reflexive transitive closure by Floyd-Warshall on a boolean table."""
    vs = sorted(vertices)
    reach = {u: {u} | {v for a, v in arcs if a == u} for u in vs}
    for k in vs:
        for i in vs:
            if k in reach[i]:
                reach[i] |= reach[k]
    return reach


def scc_classes(vertices, arcs) -> set[frozenset[int]]:
    reach = reachability(vertices, arcs)
    return {frozenset(v for v in vertices if v in reach[u] and u in reach[v]) for u in vertices}


def has_directed_cycle(vertices, arcs) -> bool:
    reach = reachability(vertices, arcs)
    return any(u in reach[v] for u, v in arcs)


def chain_model(n: int) -> ModelGraph:
    """Model whose decomposition peels off one block per level.

    Block k is joined to k+1 and k+2 along axis k mod 2.  Along that axis
    block k has only outgoing connections, while the rest stays locked
    together by the other axis' connections.
    """
    edges = []
    for k in range(n - 1):
        for j in (k + 1, k + 2):
            if j < n:
                edges.append((k, j, k % 2))
    return ModelGraph.from_edges([(1, 0, 0), (0, 1, 0)], edges, blocks=range(n))
