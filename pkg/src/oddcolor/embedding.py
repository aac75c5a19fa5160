"""Planarized rotation systems for 1-plane drawings.

A drawing of a graph with each edge crossed at most once is stored after
planarization: every crossing is a degree-4 "virtual" vertex, and the plane
structure is a rotation system over real + virtual vertices.  Each edge of
the planarization ("segment") is a pair of darts; dart d's twin is d ^ 1.
At a virtual vertex the rotation alternates between the two crossing edges,
so rotation positions (0, 2) belong to one original edge and (1, 3) to the
other.

Segments joining two virtual vertices cannot occur (every original edge has
at most one crossing, so each segment keeps a real endpoint).  Parallel
segments between a real and a virtual vertex are representable: they arise
when two edges sharing an endpoint cross each other, and the reduction
engine removes them (they bound a 2-face or enclose further structure).

Face traversal convention: the successor of dart d is the rotation successor
of twin(d) at d's target.  For a rotation system of a planar drawing the
orbits are the faces and Euler's formula holds on every connected component;
that check is the planarity validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, NotAnEdgeError

REAL = "real"
VIRTUAL = "virtual"


class InvalidEmbeddingError(ValueError):
    """The embedding cannot represent a valid 1-plane drawing."""


@dataclass(frozen=True)
class Violation:
    """One validation failure with its witness vertex/edge."""

    code: str
    subject: tuple
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.code}{self.subject}{': ' + self.detail if self.detail else ''}"


@dataclass(frozen=True)
class Face:
    """A face as the cyclic dart sequence produced by the traversal."""

    darts: tuple[int, ...]

    @property
    def len(self) -> int:
        return len(self.darts)

    @property
    def fid(self) -> int:
        """Stable face id: the minimal dart on the boundary."""
        return min(self.darts)


class OnePlaneGraph:
    """Immutable rotation system over real and virtual vertices.

    Construction arguments:
      kinds: vertex id -> REAL | VIRTUAL
      edges: segment list; segment i joins edges[i][0] and edges[i][1]
      rot:   vertex id -> cyclic sequence of segment indices (one entry per
             incidence; loops are not representable and are rejected)

    Dart i of segment e is 2e (at edges[e][0]) or 2e+1 (at edges[e][1]).
    """

    __slots__ = ("_kind", "_edges", "_rot", "_origin")

    def __init__(
        self,
        kinds: dict[int, str],
        edges: Sequence[tuple[int, int]],
        rot: dict[int, Sequence[int]],
    ):
        kind = {int(v): k for v, k in kinds.items()}
        for v, k in kind.items():
            if k not in (REAL, VIRTUAL):
                raise InvalidEmbeddingError(f"unknown vertex kind {k!r} at {v}")
        edges_t = tuple((int(u), int(v)) for u, v in edges)
        for i, (u, v) in enumerate(edges_t):
            if u == v:
                raise InvalidEmbeddingError(f"loop segment {i} at vertex {u}")
            if u not in kind or v not in kind:
                raise InvalidEmbeddingError(f"segment {i} touches unknown vertex")
        rot_d: dict[int, tuple[int, ...]] = {}
        seen: dict[int, list[bool]] = {i: [False, False] for i in range(len(edges_t))}
        for v in kind:
            darts = []
            for e in rot.get(v, ()):
                e = int(e)
                if not 0 <= e < len(edges_t):
                    raise InvalidEmbeddingError(f"rotation of {v} names segment {e}")
                u0, u1 = edges_t[e]
                if v == u0 and not seen[e][0]:
                    seen[e][0] = True
                    darts.append(2 * e)
                elif v == u1 and not seen[e][1]:
                    seen[e][1] = True
                    darts.append(2 * e + 1)
                else:
                    raise InvalidEmbeddingError(
                        f"segment {e} misplaced in rotation of {v}"
                    )
            rot_d[v] = tuple(darts)
        for e, flags in seen.items():
            if not all(flags):
                raise InvalidEmbeddingError(f"segment {e} missing from a rotation")
        origin = {}
        for v, darts in rot_d.items():
            for d in darts:
                origin[d] = v
        object.__setattr__(self, "_kind", kind)
        object.__setattr__(self, "_edges", edges_t)
        object.__setattr__(self, "_rot", rot_d)
        object.__setattr__(self, "_origin", origin)

    # -- basic structure -------------------------------------------------

    def vertices(self) -> list[int]:
        return sorted(self._kind)

    def kind(self, v: int) -> str:
        return self._kind[v]

    def is_virtual(self, v: int) -> bool:
        return self._kind[v] == VIRTUAL

    def real_vertices(self) -> list[int]:
        return sorted(v for v, k in self._kind.items() if k == REAL)

    def virtual_vertices(self) -> list[int]:
        return sorted(v for v, k in self._kind.items() if k == VIRTUAL)

    def segments(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def num_segments(self) -> int:
        return len(self._edges)

    def rotation(self, v: int) -> tuple[int, ...]:
        return self._rot[v]

    def degree(self, v: int) -> int:
        return len(self._rot[v])

    def darts(self) -> list[int]:
        return list(range(2 * len(self._edges)))

    def origin(self, d: int) -> int:
        return self._origin[d]

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    def target(self, d: int) -> int:
        return self._origin[d ^ 1]

    def rot_next(self, d: int) -> int:
        r = self._rot[self._origin[d]]
        return r[(r.index(d) + 1) % len(r)]

    def face_next(self, d: int) -> int:
        return self.rot_next(d ^ 1)

    def crossing_count(self) -> int:
        return sum(1 for k in self._kind.values() if k == VIRTUAL)

    def virtual_pairs(self, w: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Dart pairs at virtual w belonging to the two crossing edges."""
        r = self._rot[w]
        if self._kind[w] != VIRTUAL or len(r) != 4:
            raise InvalidEmbeddingError(f"{w} is not a degree-4 virtual vertex")
        return (r[0], r[2]), (r[1], r[3])

    def crossing_edges(self, w: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two original edges crossing at w, as endpoint pairs (u < v)."""
        (d0, d2), (d1, d3) = self.virtual_pairs(w)
        a, b = self.target(d0), self.target(d2)
        c, d = self.target(d1), self.target(d3)
        return (min(a, b), max(a, b)), (min(c, d), max(c, d))

    # -- faces -----------------------------------------------------------

    def faces(self) -> list[Face]:
        """All faces; every dart lies on exactly one."""
        seen = set()
        out = []
        for d0 in range(2 * len(self._edges)):
            if d0 in seen:
                continue
            cyc = []
            d = d0
            while True:
                cyc.append(d)
                seen.add(d)
                d = self.face_next(d)
                if d == d0:
                    break
            out.append(Face(tuple(cyc)))
        return sorted(out, key=lambda f: f.fid)

    def face_vertices(self, f: Face) -> list[int]:
        return [self.origin(d) for d in f.darts]

    def faces_at(self, v: int) -> list[Face]:
        """Faces incident to v, one per corner, in rotation order."""
        by_dart = {}
        for f in self.faces():
            for d in f.darts:
                by_dart[d] = f
        return [by_dart[d] for d in self._rot[v]]

    def components(self) -> list[list[int]]:
        """Connected components of the planarization (vertex ids, sorted)."""
        seen: set[int] = set()
        comps = []
        for root in self.vertices():
            if root in seen:
                continue
            stack, comp = [root], []
            seen.add(root)
            while stack:
                v = stack.pop()
                comp.append(v)
                for d in self._rot[v]:
                    u = self.target(d)
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def __repr__(self) -> str:
        return (
            f"OnePlaneGraph(reals={len(self.real_vertices())}, "
            f"crossings={self.crossing_count()}, segments={len(self._edges)})"
        )


# ----------------------------------------------------------------------
# Validation and recovery of the underlying graph
# ----------------------------------------------------------------------


def validate(emb: OnePlaneGraph) -> list[Violation]:
    """All invariant violations; empty iff the embedding is a valid 1-plane
    drawing of a simple graph."""
    out: list[Violation] = []
    for w in emb.virtual_vertices():
        if emb.degree(w) != 4:
            out.append(Violation("VirtualDegree", (w,), f"degree {emb.degree(w)}"))
    for i, (u, v) in enumerate(emb.segments()):
        if emb.is_virtual(u) and emb.is_virtual(v):
            out.append(Violation("VirtualVirtualEdge", (u, v), f"segment {i}"))
    # the underlying graph must be simple once crossings are smoothed out
    try:
        _smooth(emb)
    except InvalidEmbeddingError as exc:
        out.append(Violation("UnderlyingNotSimple", exc.args[1], str(exc.args[0])))
    # genus check: Euler's formula per connected component
    comps = emb.components()
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    v_cnt = [len(c) for c in comps]
    e_cnt = [0] * len(comps)
    f_cnt = [0] * len(comps)
    for u, v in emb.segments():
        e_cnt[comp_of[u]] += 1
    for f in emb.faces():
        f_cnt[comp_of[emb.origin(f.darts[0])]] += 1
    for i, comp in enumerate(comps):
        if len(comp) == 1 and e_cnt[i] == 0:
            continue  # isolated vertex: no darts, no faces
        if v_cnt[i] - e_cnt[i] + f_cnt[i] != 2:
            out.append(
                Violation(
                    "EulerViolation",
                    (comp[0],),
                    f"V-E+F = {v_cnt[i]}-{e_cnt[i]}+{f_cnt[i]} != 2",
                )
            )
    return out


def _smooth(emb: OnePlaneGraph) -> dict[int, set[int]]:
    """Adjacency of the underlying simple graph; raises InvalidEmbeddingError
    (with a witness in args[1]) if smoothing is not simple."""
    adj: dict[int, set[int]] = {v: set() for v in emb.real_vertices()}
    seen_edges: set[tuple[int, int]] = set()

    def add(a: int, b: int, what) -> None:
        if a == b:
            raise InvalidEmbeddingError("smoothed loop", (a, what))
        e = (min(a, b), max(a, b))
        if e in seen_edges:
            raise InvalidEmbeddingError("parallel original edge", e)
        seen_edges.add(e)
        adj[a].add(b)
        adj[b].add(a)

    for u, v in emb.segments():
        if not emb.is_virtual(u) and not emb.is_virtual(v):
            add(u, v, None)
    for w in emb.virtual_vertices():
        if emb.degree(w) != 4:
            continue  # reported separately by validate()
        for a, b in emb.crossing_edges(w):
            if emb.is_virtual(a) or emb.is_virtual(b):
                continue  # virtual-virtual segment, reported separately
            add(a, b, w)
    return adj


def underlying_graph(emb: OnePlaneGraph) -> Graph:
    """Recover the abstract graph: smooth every virtual vertex into its two
    crossing original edges."""
    return Graph({v: frozenset(ns) for v, ns in _smooth(emb).items()})


def g_edges(emb: OnePlaneGraph) -> dict[tuple[int, int], int | None]:
    """Original edges -> the virtual vertex crossing them (None if uncrossed)."""
    out: dict[tuple[int, int], int | None] = {}
    for u, v in emb.segments():
        if not emb.is_virtual(u) and not emb.is_virtual(v):
            out[(min(u, v), max(u, v))] = None
    for w in emb.virtual_vertices():
        for e in emb.crossing_edges(w):
            out[e] = w
    return out


# ----------------------------------------------------------------------
# Construction helpers
# ----------------------------------------------------------------------


def plane_from_rotations(n: int, rot: dict[int, Sequence[int]]) -> OnePlaneGraph:
    """Crossing-free embedding of a simple graph given neighbor rotations."""
    edges: list[tuple[int, int]] = []
    eid: dict[tuple[int, int], int] = {}
    for v in range(n):
        for u in rot.get(v, ()):
            key = (min(u, v), max(u, v))
            if key not in eid:
                eid[key] = len(edges)
                edges.append(key)
    rot_e = {
        v: [eid[(min(u, v), max(u, v))] for u in rot.get(v, ())] for v in range(n)
    }
    return OnePlaneGraph({v: REAL for v in range(n)}, edges, rot_e)


class EmbeddingBuilder:
    """Mutable counterpart of OnePlaneGraph used by surgeries and generators.

    Edges carry stable keys; rotations are lists of edge keys.  ``build``
    renumbers segments canonically (vertex-id order, rotation order).
    """

    def __init__(self) -> None:
        self.kind: dict[int, str] = {}
        self.ends: dict[int, tuple[int, int]] = {}
        self.rot: dict[int, list[int]] = {}
        self._next = 0

    @classmethod
    def from_embedding(cls, emb: OnePlaneGraph) -> "EmbeddingBuilder":
        b = cls()
        b.kind = {v: emb.kind(v) for v in emb.vertices()}
        b.ends = {i: e for i, e in enumerate(emb.segments())}
        b.rot = {v: [d // 2 for d in emb.rotation(v)] for v in emb.vertices()}
        b._next = len(emb.segments())
        return b

    def add_vertex(self, v: int, kind: str) -> int:
        if v in self.kind:
            raise InvalidEmbeddingError(f"vertex {v} already present")
        self.kind[v] = kind
        self.rot[v] = []
        return v

    def fresh_vertex_id(self) -> int:
        return max(self.kind, default=-1) + 1

    def add_edge(self, u: int, v: int, pos_u: int | None = None, pos_v: int | None = None) -> int:
        """Insert segment u-v at the given rotation positions (append if None)."""
        e = self._next
        self._next += 1
        self.ends[e] = (u, v)
        self.rot[u].insert(pos_u if pos_u is not None else len(self.rot[u]), e)
        self.rot[v].insert(pos_v if pos_v is not None else len(self.rot[v]), e)
        return e

    def other_end(self, e: int, v: int) -> int:
        a, b = self.ends[e]
        return b if a == v else a

    def new_edge_key(self, u: int, v: int) -> int:
        """Allocate a segment without touching any rotation; the caller
        places it with replace_in_rot or explicit list edits."""
        e = self._next
        self._next += 1
        self.ends[e] = (u, v)
        return e

    def replace_in_rot(self, v: int, old: int, new: int) -> None:
        self.rot[v][self.rot[v].index(old)] = new

    def drop_edge_key(self, e: int) -> None:
        """Forget a segment already removed from all rotations."""
        del self.ends[e]

    def delete_edge(self, e: int) -> None:
        u, v = self.ends.pop(e)
        self.rot[u].remove(e)
        self.rot[v].remove(e)

    def delete_isolated_vertex(self, v: int) -> None:
        if self.rot[v]:
            raise InvalidEmbeddingError(f"vertex {v} still has segments")
        del self.rot[v], self.kind[v]

    def replace_endpoint(self, e: int, old: int, new: int) -> None:
        a, b = self.ends[e]
        self.ends[e] = (new, b) if a == old else (a, new)

    def build(self) -> OnePlaneGraph:
        order: list[int] = []
        index: dict[int, int] = {}
        for v in sorted(self.kind):
            for e in self.rot[v]:
                if e not in index:
                    index[e] = len(order)
                    order.append(e)
        edges = [self.ends[e] for e in order]
        rot = {v: [index[e] for e in self.rot[v]] for v in self.kind}
        return OnePlaneGraph(dict(self.kind), edges, rot)


# ----------------------------------------------------------------------
# Embedding surgery
# ----------------------------------------------------------------------


def _fuse_through(b: EmbeddingBuilder, w: int, e1: int, e2: int) -> int:
    """Remove virtual w from an edge it subdivides: segments e1 (x-w) and
    e2 (w-y) become one segment x-y keeping the far rotation slots."""
    x = b.other_end(e1, w)
    y = b.other_end(e2, w)
    px = b.rot[x].index(e1)
    py = b.rot[y].index(e2)
    b.delete_edge(e1)
    b.delete_edge(e2)
    return b.add_edge(x, y, px, py)


def _g_edge_segments(b: EmbeddingBuilder, x: int, y: int) -> tuple[list[int], int | None]:
    """Segments of original edge xy in a builder: ([e], None) if uncrossed,
    ([ex, ey], w) if crossed at w (ex at x, ey at y)."""
    for e in b.rot[x]:
        u = b.other_end(e, x)
        if u == y and b.kind[u] == REAL:
            return [e], None
        if b.kind[u] == VIRTUAL:
            # opposite rotation position at the virtual belongs to the same edge
            r = b.rot[u]
            e_opp = r[(r.index(e) + 2) % 4]
            if b.other_end(e_opp, u) == y:
                return [e, e_opp], u
    raise NotAnEdgeError((x, y))


def delete_real_vertices(emb: OnePlaneGraph, drop: Iterable[int]) -> OnePlaneGraph:
    """Delete real vertices and all their original edges.  Crossings on a
    deleted edge disappear; the edge that crossed it is fused whole again."""
    dropped = set(drop)
    b = EmbeddingBuilder.from_embedding(emb)
    for v in dropped:
        if b.kind.get(v) != REAL:
            raise InvalidEmbeddingError(f"{v} is not a real vertex")
    # classify every virtual by how many of its two crossing edges die
    for w in emb.virtual_vertices():
        r = list(b.rot[w])  # four segments, rotation order
        far = [b.other_end(e, w) for e in r]
        die_a = far[0] in dropped or far[2] in dropped
        die_b = far[1] in dropped or far[3] in dropped
        if die_a and die_b:
            for e in list(b.rot[w]):
                b.delete_edge(e)
            b.delete_isolated_vertex(w)
        elif die_a or die_b:
            keep = (r[1], r[3]) if die_a else (r[0], r[2])
            kill = (r[0], r[2]) if die_a else (r[1], r[3])
            for e in kill:
                b.delete_edge(e)
            _fuse_through(b, w, keep[0], keep[1])
            b.delete_isolated_vertex(w)
    for v in dropped:
        for e in list(b.rot[v]):
            b.delete_edge(e)
        b.delete_isolated_vertex(v)
    return b.build()


def delete_g_edge(emb: OnePlaneGraph, x: int, y: int) -> OnePlaneGraph:
    """Delete one original edge, restoring whatever crossed it."""
    b = EmbeddingBuilder.from_embedding(emb)
    segs, w = _g_edge_segments(b, x, y)
    for e in segs:
        b.delete_edge(e)
    if w is not None:
        rest = list(b.rot[w])
        _fuse_through(b, w, rest[0], rest[1])
        b.delete_isolated_vertex(w)
    return b.build()


def contract_uncrossed_edge(emb: OnePlaneGraph, x: int, y: int) -> OnePlaneGraph:
    """Contract a crossing-free original edge xy in the plane drawing.

    x is merged into y.  The merged rotation interleaves the two old
    rotations at the contracted corner, which keeps the drawing planar.
    """
    b = EmbeddingBuilder.from_embedding(emb)
    segs, w = _g_edge_segments(b, x, y)
    if w is not None:
        raise InvalidEmbeddingError(f"edge ({x}, {y}) has a crossing")
    e = segs[0]
    rx, ry = b.rot[x], b.rot[y]
    ix, iy = rx.index(e), ry.index(e)
    merged = ry[iy + 1 :] + ry[:iy] + rx[ix + 1 :] + rx[:ix]
    b.delete_edge(e)
    for f in list(b.rot[x]):
        b.replace_endpoint(f, x, y)
    b.rot[y] = merged
    b.rot[x] = []
    b.delete_isolated_vertex(x)
    return b.build()


def split_components(emb: OnePlaneGraph) -> list[OnePlaneGraph]:
    """One embedding per connected component of the planarization."""
    comps = emb.components()
    if len(comps) == 1:
        return [emb]
    out = []
    for comp in comps:
        comp_set = set(comp)
        kinds = {v: emb.kind(v) for v in comp}
        keep = [i for i, (u, v) in enumerate(emb.segments()) if u in comp_set]
        remap = {e: i for i, e in enumerate(keep)}
        edges = [emb.segments()[e] for e in keep]
        rot = {v: [remap[d // 2] for d in emb.rotation(v)] for v in comp}
        out.append(OnePlaneGraph(kinds, edges, rot))
    return out


def relabel_embedding(emb: OnePlaneGraph, mapping: dict[int, int]) -> OnePlaneGraph:
    """Rename vertices by a bijection; structure is otherwise unchanged."""
    if sorted(mapping) != emb.vertices() or len(set(mapping.values())) != len(mapping):
        raise ValueError("mapping must be a bijection on the vertex set")
    kinds = {mapping[v]: emb.kind(v) for v in emb.vertices()}
    edges = [(mapping[u], mapping[v]) for u, v in emb.segments()]
    rot = {mapping[v]: [d // 2 for d in emb.rotation(v)] for v in emb.vertices()}
    return OnePlaneGraph(kinds, edges, rot)


def insert_crossing(emb: OnePlaneGraph, d_ab: int, d_cd: int) -> OnePlaneGraph:
    """Reroute edge ab to cross edge cd, given darts of the two edges on a
    common face.  Both edges must be uncrossed with four distinct real
    endpoints.  The abstract graph is unchanged."""
    face = {d_ab}
    d = emb.face_next(d_ab)
    while d != d_ab:
        face.add(d)
        d = emb.face_next(d)
    if d_cd not in face:
        raise InvalidEmbeddingError("darts do not share a face")
    a, bb = emb.origin(d_ab), emb.target(d_ab)
    c, dd = emb.origin(d_cd), emb.target(d_cd)
    if len({a, bb, c, dd}) != 4 or any(
        emb.is_virtual(v) for v in (a, bb, c, dd)
    ):
        raise InvalidEmbeddingError("need disjoint uncrossed real edges")
    b = EmbeddingBuilder.from_embedding(emb)
    e_ab, e_cd = d_ab // 2, d_cd // 2
    pa = b.rot[a].index(e_ab)
    pb = b.rot[bb].index(e_ab)
    pc = b.rot[c].index(e_cd)
    pd = b.rot[dd].index(e_cd)
    w = b.add_vertex(b.fresh_vertex_id(), VIRTUAL)
    b.delete_edge(e_ab)
    b.delete_edge(e_cd)
    # walking the face from a's corner, edge cd is met c-first; the rerouted
    # curve a-w-b leaves the cd side of the face, giving rotation (a, c, b, d)
    ea = b.add_edge(a, w, pa)
    ec = b.add_edge(c, w, pc)
    eb = b.add_edge(bb, w, pb)
    ed = b.add_edge(dd, w, pd)
    b.rot[w] = [ea, ec, eb, ed]
    return b.build()
