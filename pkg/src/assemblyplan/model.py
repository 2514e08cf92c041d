"""Model graph of an assembled toy: blocks, axis directions and connections.

Every connection is aligned to one of a finite set of spatial axes and stored
as a directed edge ``src -> dst`` such that the physical vector from ``src``
to ``dst`` points along ``+direction``.  Raw input is normalized by
:func:`validate_model`; everything downstream works on the immutable
:class:`ModelGraph` it returns.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from math import gcd
from typing import Any

Vector = tuple[int, int, int]
Components = tuple[frozenset[int], ...]


def canonicalize(vector: Sequence[int]) -> Vector:
    """Reduce an integer 3-vector to its canonical axis representative.

    Components are divided by their gcd and the sign is flipped so that the
    first nonzero component is positive.

    >>> canonicalize((0, -4, 2))
    (0, 2, -1)
    """
    if len(vector) != 3:
        raise ValueError(f"direction must have 3 components, got {len(vector)}")
    x, y, z = (int(c) for c in vector)
    g = gcd(gcd(abs(x), abs(y)), abs(z))
    if g == 0:
        raise ValueError("zero vector has no direction")
    x, y, z = x // g, y // g, z // g
    first = next(c for c in (x, y, z) if c != 0)
    if first < 0:
        x, y, z = -x, -y, -z
    return (x, y, z)


@dataclass(frozen=True)
class Direction:
    vector: Vector

    def __post_init__(self) -> None:
        if canonicalize(self.vector) != tuple(self.vector):
            raise ValueError(f"{self.vector} is not in canonical form")

    def __str__(self) -> str:
        return "({}, {}, {})".format(*self.vector)


@dataclass(frozen=True)
class Block:
    """A single rigid piece.

    ``index`` is the compacted id in ``0..n-1``; ``source_id`` is the id the
    block carried in the input and is what reports show to people.
    """

    index: int
    source_id: int
    label: str | None = None
    meta: dict[str, Any] | None = field(default=None, hash=False)


@dataclass(frozen=True)
class Connection:
    """Directed edge ``src -> dst`` along ``directions[dir]``.

    ``key`` is the edge's position in the model, which keeps parallel
    duplicates distinct inside sets.
    """

    src: int
    dst: int
    dir: int
    key: int
    meta: dict[str, Any] | None = field(default=None, hash=False, compare=False)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.src, self.dst)


@dataclass(frozen=True)
class ModelGraph:
    blocks: tuple[Block, ...]
    directions: tuple[Direction, ...]
    edges: tuple[Connection, ...]

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def p(self) -> int:
        return len(self.directions)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def edges_along(self, dir: int) -> tuple[Connection, ...]:
        return tuple(e for e in self.edges if e.dir == dir)

    def induced_edges(self, vertices: Iterable[int]) -> tuple[Connection, ...]:
        vs = vertices if isinstance(vertices, (set, frozenset)) else set(vertices)
        return tuple(e for e in self.edges if e.src in vs and e.dst in vs)

    def index_of(self, source_id: int) -> int:
        for b in self.blocks:
            if b.source_id == source_id:
                return b.index
        raise KeyError(source_id)

    def indices(self, source_ids: Iterable[int]) -> frozenset[int]:
        """Map input block ids to compacted indices."""
        return frozenset(self.index_of(s) for s in source_ids)

    def source_ids(self, vertices: Iterable[int]) -> list[int]:
        """Sorted input ids of a set of compacted indices."""
        return sorted(self.blocks[v].source_id for v in vertices)

    def source_pair(self, edge: Connection) -> tuple[int, int]:
        return (self.blocks[edge.src].source_id, self.blocks[edge.dst].source_id)

    @classmethod
    def from_edges(
        cls,
        directions: Sequence[Sequence[int]],
        edges: Iterable[tuple[int, int, int]],
        blocks: Iterable[int] | None = None,
    ) -> ModelGraph:
        """Build and validate a model from ``(from, to, direction)`` triples.

        Block ids default to every id mentioned by an edge.
        """
        edges = list(edges)
        if blocks is None:
            blocks = sorted({u for u, _, _ in edges} | {v for _, v, _ in edges})
        raw = {
            "directions": [list(d) for d in directions],
            "blocks": [{"id": b} for b in blocks],
            "connections": [{"from": u, "to": v, "direction": d} for u, v, d in edges],
        }
        return validate_model(raw)


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class ModelError(ValueError):
    """Raised when a raw model fails validation; carries every diagnostic found."""

    def __init__(self, diagnostics: Sequence[Diagnostic]):
        self.diagnostics = tuple(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


def validate_model(raw: Mapping[str, Any]) -> ModelGraph:
    """Normalize a raw model mapping into a :class:`ModelGraph`.

    ``raw`` has the keys ``directions`` (integer 3-vectors), ``blocks``
    (``{"id", "label"?, "meta"?}``) and ``connections``
    (``{"from", "to", "direction", "meta"?}``).  Block ids are compacted to
    ``0..n-1`` in ascending id order.  Directions are canonicalized and
    merged when they name the same axis; a connection whose raw vector is the
    negative of its canonical axis is reversed.

    Raises
    ------
    ModelError
        With one diagnostic per problem (DuplicateBlockId, ZeroDirection,
        LoopEdge, UnknownBlockRef, UnknownDirectionRef, EmptyModel,
        DisconnectedModel).
    """
    diags: list[Diagnostic] = []

    # directions: canonical axis -> merged index, plus per-raw-index sign
    canon: list[Direction] = []
    axis_index: dict[Vector, int] = {}
    dir_map: dict[int, tuple[int, int]] = {}
    for i, vec in enumerate(raw.get("directions", [])):
        vec = tuple(int(c) for c in vec)
        if len(vec) != 3 or not any(vec):
            diags.append(Diagnostic("ZeroDirection", f"direction {i} {list(vec)}"))
            continue
        c = canonicalize(vec)
        # canonical form only ever flips the sign of the reduced vector
        sign = 1 if _same_sense(vec, c) else -1
        if c not in axis_index:
            axis_index[c] = len(canon)
            canon.append(Direction(c))
        dir_map[i] = (axis_index[c], sign)

    seen: dict[int, dict[str, Any]] = {}
    for b in raw.get("blocks", []):
        bid = int(b["id"])
        if bid in seen:
            diags.append(Diagnostic("DuplicateBlockId", f"block {bid}"))
            continue
        seen[bid] = b
    order = sorted(seen)
    index = {bid: i for i, bid in enumerate(order)}
    blocks = tuple(
        Block(i, bid, seen[bid].get("label"), _copy_meta(seen[bid].get("meta")))
        for i, bid in enumerate(order)
    )
    if not blocks:
        diags.append(Diagnostic("EmptyModel", "model has no blocks"))

    edges: list[Connection] = []
    for k, c in enumerate(raw.get("connections", [])):
        u, v, d = int(c["from"]), int(c["to"]), int(c["direction"])
        bad = False
        for end in (u, v):
            if end not in index:
                diags.append(Diagnostic("UnknownBlockRef", f"connection {k} references block {end}"))
                bad = True
        if u == v:
            diags.append(Diagnostic("LoopEdge", f"block {u}"))
            bad = True
        if d not in dir_map:
            if not (0 <= d < len(raw.get("directions", []))):
                diags.append(Diagnostic("UnknownDirectionRef", f"connection {k} references direction {d}"))
            bad = True
        if bad:
            continue
        axis, sign = dir_map[d]
        src, dst = (index[u], index[v]) if sign > 0 else (index[v], index[u])
        edges.append(Connection(src, dst, axis, len(edges), _copy_meta(c.get("meta"))))

    if not diags and len(blocks) > 1:
        comps = weak_components(range(len(blocks)), edges)
        if len(comps) > 1:
            parts = " | ".join(
                "[" + ",".join(str(order[v]) for v in sorted(comp)) + "]" for comp in comps
            )
            diags.append(Diagnostic("DisconnectedModel", f"{len(comps)} components: {parts}"))

    if diags:
        raise ModelError(diags)
    return ModelGraph(blocks, tuple(canon), tuple(edges))


def _same_sense(vec: Sequence[int], axis: Vector) -> bool:
    return sum(a * b for a, b in zip(vec, axis)) > 0


def _copy_meta(meta: Any) -> dict[str, Any] | None:
    return dict(meta) if meta else None


def to_raw(g: ModelGraph) -> dict[str, Any]:
    """Inverse of :func:`validate_model` up to normalization."""
    blocks = []
    for b in g.blocks:
        entry: dict[str, Any] = {"id": b.source_id}
        if b.label is not None:
            entry["label"] = b.label
        if b.meta:
            entry["meta"] = dict(b.meta)
        blocks.append(entry)
    conns = []
    for e in g.edges:
        u, v = g.source_pair(e)
        entry = {"from": u, "to": v, "direction": e.dir}
        if e.meta:
            entry["meta"] = dict(e.meta)
        conns.append(entry)
    return {
        "directions": [list(d.vector) for d in g.directions],
        "blocks": blocks,
        "connections": conns,
    }


# -- basic queries ----------------------------------------------------------------


def partition_edges(g: ModelGraph) -> dict[int, tuple[Connection, ...]]:
    """Group the edges by direction index; every index ``0..p-1`` is a key."""
    parts: dict[int, list[Connection]] = {i: [] for i in range(g.p)}
    for e in g.edges:
        parts[e.dir].append(e)
    return {i: tuple(es) for i, es in parts.items()}


def weak_components(vertices: Iterable[int], edges: Iterable[Connection | tuple[int, int]]) -> Components:
    """Weakly connected components, ordered by their smallest vertex."""
    parent: dict[int, int] = {v: v for v in vertices}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for e in edges:
        u, v = (e.src, e.dst) if isinstance(e, Connection) else e
        ru, rv = find(u), find(v)
        if ru != rv:
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv

    groups: dict[int, set[int]] = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return tuple(frozenset(groups[r]) for r in sorted(groups))
