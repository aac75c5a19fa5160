"""Constructive odd coloring of 1-plane graphs by reducible configurations.

The engine repeatedly finds one of seven local configurations in a valid
connected 1-plane embedding, shrinks the instance (or improves the drawing),
solves the smaller instance, and extends the coloring back.  The fixed
priority matters: later configurations are only correct once the earlier
ones are absent (for example, handling a vertex with 2-valent neighbors
assumes no two small vertices are adjacent, so each 2-valent neighbor's
other endpoint is big and survives the deletion).

  1. Bridge            split at a cut edge, color the sides, align anchors
  2. OddLowVertex      odd degree <= 11: delete, extend greedily
  3. SmallPair         adjacent degrees <= 10: delete both, extend in order
  4. UncrossedSmallEdge  crossing-free edge at a small vertex: contract it
  5. TwoFaceUncross    two edges at one vertex crossing: redraw uncrossed
  6. D2Vertex          2d(v) < d2(v) + K: delete v and its 2-valent
                        neighbors, color v first, then the 2-vertices
  7. SixFourSwap       the 6-face/4-face pattern: swap two 2-vertices,
                        removing their mutual crossing

A connected valid embedding larger than the palette always contains one of
these: otherwise the discharging rules would leave every vertex and face
nonnegative while the total charge is -8.  Exhausting the list therefore
raises, attaching the discharging audit as the bug report.
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass, field
from typing import Union

from . import discharging
from .coloring import (
    Coloring,
    greedy_extend,
    is_odd_coloring,
    odd_colors,
    tau_o,
    union,
)
from .embedding import (
    EmbeddingBuilder,
    InvalidEmbeddingError,
    OnePlaneGraph,
    contract_uncrossed_edge,
    delete_g_edge,
    delete_real_vertices,
    g_edges,
    split_components,
    underlying_graph,
    validate,
)
from .graphs import Graph, bridges

log = logging.getLogger("oddcolor.reduction")


class PatternNotFoundError(ValueError):
    """The requested surgery pattern is absent from the embedding."""


class NoConfigFoundError(RuntimeError):
    """No reducible configuration exists: impossible on valid input, so
    either the input or the engine is broken.  Carries the discharging
    audit explaining which structural guarantee failed."""

    def __init__(self, report: discharging.AuditReport):
        self.report = report
        super().__init__(f"no reducible configuration; audit:\n{report}")


class EngineInvariantError(RuntimeError):
    """A counting argument that guarantees an extension step failed."""


@dataclass(frozen=True)
class Thresholds:
    K: int = 23  # palette size
    BIG: int = 12  # big-vertex degree threshold
    ODD_MAX: int = 11  # largest reducible odd degree

    def __post_init__(self):
        if self.K < 2 * self.ODD_MAX + 1:
            raise ValueError("need K >= 2*ODD_MAX + 1")
        if self.BIG != self.ODD_MAX + 1:
            raise ValueError("need BIG == ODD_MAX + 1")


# -- the configuration union -------------------------------------------


@dataclass(frozen=True)
class Bridge:
    x: int
    y: int


@dataclass(frozen=True)
class OddLowVertex:
    v: int


@dataclass(frozen=True)
class SmallPair:
    v: int
    w: int


@dataclass(frozen=True)
class UncrossedSmallEdge:
    x: int  # the small endpoint
    y: int


@dataclass(frozen=True)
class TwoFaceUncross:
    w: int  # the virtual vertex on the 2-face


@dataclass(frozen=True)
class D2Vertex:
    v: int


@dataclass(frozen=True)
class SixFourSwap:
    u: int
    w: int
    v: int
    z: int
    c: int


ReducibleConfig = Union[
    Bridge, OddLowVertex, SmallPair, UncrossedSmallEdge, TwoFaceUncross,
    D2Vertex, SixFourSwap,
]


@dataclass(frozen=True)
class TraceStep:
    tag: str
    witness: tuple
    before: tuple[int, int]  # (|V| of underlying, crossings)
    after: tuple[tuple[int, int], ...]  # one entry per resulting piece


@dataclass
class ReductionTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def record(self, tag, witness, before, after) -> None:
        step = TraceStep(tag, tuple(witness), before, tuple(after))
        self.steps.append(step)
        log.debug(
            "step %s witness=%s before=%s after=%s", tag, witness, before, after
        )


def _metrics(emb: OnePlaneGraph) -> tuple[int, int]:
    return len(emb.real_vertices()), emb.crossing_count()


# ----------------------------------------------------------------------
# Configuration search
# ----------------------------------------------------------------------


def _d2(g: Graph, v: int) -> int:
    return sum(1 for u in g.neighbors(v) if g.degree(u) == 2)


def _find_two_face(emb: OnePlaneGraph) -> TwoFaceUncross | None:
    for f in emb.faces():
        if f.len != 2:
            continue
        a, b = emb.origin(f.darts[0]), emb.origin(f.darts[1])
        if emb.is_virtual(a) != emb.is_virtual(b):
            return TwoFaceUncross(a if emb.is_virtual(a) else b)
    return None


def _find_six_four(emb: OnePlaneGraph) -> SixFourSwap | None:
    def is_two(v: int) -> bool:
        return not emb.is_virtual(v) and emb.degree(v) == 2

    face_of_dart = {}
    faces = emb.faces()
    for f in faces:
        for d in f.darts:
            face_of_dart[d] = f
    for f in faces:
        if f.len != 6:
            continue
        vs = [emb.origin(d) for d in f.darts]
        if len(set(vs)) != 6:
            continue
        for r in range(6):
            v, y1, u, z, w, y2 = (vs[(r + i) % 6] for i in range(6))
            if not (is_two(v) and is_two(u) and is_two(w)):
                continue
            if not all(emb.is_virtual(x) for x in (y1, z, y2)):
                continue
            # the other face at v must be a 4-face with one real corner c
            d1, d2 = emb.rotation(v)
            f1, f2 = face_of_dart[d1], face_of_dart[d2]
            fp = f2 if f1 is f else f1
            if fp is f or fp.len != 4:
                continue
            others = {emb.origin(d) for d in fp.darts} - {v, y1, y2}
            if len(others) != 1:
                continue
            c = others.pop()
            if emb.is_virtual(c):
                continue
            return SixFourSwap(u=u, w=w, v=v, z=z, c=c)
    return None


def find_reducible(emb: OnePlaneGraph, t: Thresholds = Thresholds()) -> ReducibleConfig:
    """First configuration under the fixed priority.

    The underlying graph must be connected (split components first).  A
    valid connected 1-plane embedding always yields one; exhausting the
    priority list raises NoConfigFoundError with the discharging audit.
    """
    g = underlying_graph(emb)
    if g.n and len(emb.components()) != 1:
        raise ValueError("underlying graph must be connected")

    br = bridges(g)
    if br:
        return Bridge(*br[0])

    for v in g.vertices():
        d = g.degree(v)
        if d % 2 == 1 and d <= t.ODD_MAX:
            return OddLowVertex(v)

    for v, w in g.edges():
        if g.degree(v) <= t.ODD_MAX - 1 and g.degree(w) <= t.ODD_MAX - 1:
            return SmallPair(v, w)

    for (a, b), cross in sorted(g_edges(emb).items()):
        if cross is None:
            if g.degree(a) <= t.ODD_MAX:
                return UncrossedSmallEdge(a, b)
            if g.degree(b) <= t.ODD_MAX:
                return UncrossedSmallEdge(b, a)

    two_face = _find_two_face(emb)
    if two_face is not None:
        return two_face

    for v in g.vertices():
        d2 = _d2(g, v)
        if d2 >= 1 and 2 * g.degree(v) < d2 + t.K:
            return D2Vertex(v)

    six_four = _find_six_four(emb)
    if six_four is not None:
        return six_four

    _, _, report = discharging.discharge(emb, t.BIG, t.K)
    raise NoConfigFoundError(report)


def check_config(emb: OnePlaneGraph, t: Thresholds, cfg: ReducibleConfig) -> None:
    """Independent hypothesis check; raises AssertionError on mismatch."""
    g = underlying_graph(emb)
    if isinstance(cfg, Bridge):
        assert (min(cfg.x, cfg.y), max(cfg.x, cfg.y)) in bridges(g)
    elif isinstance(cfg, OddLowVertex):
        d = g.degree(cfg.v)
        assert d % 2 == 1 and d <= t.ODD_MAX
    elif isinstance(cfg, SmallPair):
        assert g.has_edge(cfg.v, cfg.w)
        assert g.degree(cfg.v) <= t.ODD_MAX - 1
        assert g.degree(cfg.w) <= t.ODD_MAX - 1
    elif isinstance(cfg, UncrossedSmallEdge):
        assert g_edges(emb)[(min(cfg.x, cfg.y), max(cfg.x, cfg.y))] is None
        assert g.degree(cfg.x) <= t.ODD_MAX
    elif isinstance(cfg, TwoFaceUncross):
        assert emb.is_virtual(cfg.w)
        assert any(
            f.len == 2 and cfg.w in (emb.origin(f.darts[0]), emb.origin(f.darts[1]))
            for f in emb.faces()
        )
    elif isinstance(cfg, D2Vertex):
        d2 = _d2(g, cfg.v)
        assert d2 >= 1 and 2 * g.degree(cfg.v) < d2 + t.K
    elif isinstance(cfg, SixFourSwap):
        for x in (cfg.u, cfg.w, cfg.v):
            assert not emb.is_virtual(x) and emb.degree(x) == 2
        assert emb.is_virtual(cfg.z) and not emb.is_virtual(cfg.c)
        # z is the crossing of u's and w's second edges
        e1, e2 = emb.crossing_edges(cfg.z)
        assert (cfg.u in e1 and cfg.w in e2) or (cfg.u in e2 and cfg.w in e1)
        assert g.has_edge(cfg.u, cfg.c) and g.has_edge(cfg.w, cfg.c)
    else:
        raise AssertionError(f"unknown config {cfg!r}")


# ----------------------------------------------------------------------
# The two drawing-improving surgeries
# ----------------------------------------------------------------------


def uncross_two_face(emb: OnePlaneGraph, w: int) -> OnePlaneGraph:
    """Remove the crossing of two edges that share an endpoint and bound a
    2-face at virtual w.  The same two abstract edges come back uncrossed;
    the crossing count drops by one."""
    if w not in emb.vertices() or not emb.is_virtual(w):
        raise PatternNotFoundError(f"{w} is not a virtual vertex")
    two_face = None
    for f in emb.faces():
        if f.len == 2 and w in (emb.origin(f.darts[0]), emb.origin(f.darts[1])):
            two_face = f
            break
    if two_face is None:
        raise PatternNotFoundError(f"no 2-face at {w}")
    v = next(x for x in map(emb.origin, two_face.darts) if x != w)

    b = EmbeddingBuilder.from_embedding(emb)
    rw = list(b.rot[w])
    # the 2-face uses two rotation-consecutive segments toward v
    i = next(
        i
        for i in range(4)
        if b.other_end(rw[i], w) == v and b.other_end(rw[(i + 1) % 4], w) == v
    )
    e1, e2 = rw[i], rw[(i + 1) % 4]
    e1_opp, e2_opp = rw[(i + 2) % 4], rw[(i + 3) % 4]
    a = b.other_end(e1_opp, w)
    bb = b.other_end(e2_opp, w)
    # swap continuations at the crossing: v's e1 stub joins b's stub, v's e2
    # stub joins a's stub, leaving the same abstract edges {va, vb} uncrossed
    vb_edge = b.new_edge_key(v, bb)
    va_edge = b.new_edge_key(v, a)
    b.replace_in_rot(v, e1, vb_edge)
    b.replace_in_rot(v, e2, va_edge)
    b.replace_in_rot(a, e1_opp, va_edge)
    b.replace_in_rot(bb, e2_opp, vb_edge)
    for e in (e1, e2, e1_opp, e2_opp):
        b.drop_edge_key(e)
    b.rot[w] = []
    b.delete_isolated_vertex(w)
    return b.build()


def uncross_six_four(emb: OnePlaneGraph, cfg: SixFourSwap) -> OnePlaneGraph:
    """Swap the 2-vertices u and w of the 6-face/4-face pattern.

    u takes over w's crossed corridor toward c and vice versa, and their
    remaining edges reconnect directly, so the crossing between them
    disappears.  The abstract graph is unchanged and the crossing count
    drops by one."""
    u, w, v, z, c = cfg.u, cfg.w, cfg.v, cfg.z, cfg.c
    if len({u, w, v, z, c}) != 5:
        raise PatternNotFoundError("pattern vertices must be distinct")
    for x, virtual in ((u, False), (w, False), (v, False), (z, True), (c, False)):
        if x not in emb.vertices() or emb.is_virtual(x) != virtual:
            raise PatternNotFoundError(f"vertex {x} does not fit the pattern")
    if emb.degree(u) != 2 or emb.degree(w) != 2 or emb.degree(v) != 2:
        raise PatternNotFoundError("u, w, v must be 2-vertices")

    b = EmbeddingBuilder.from_embedding(emb)

    def crossing_slots(virt: int, end: int) -> tuple[int, int]:
        """(segment to `end`, its opposite segment) at a virtual vertex."""
        r = b.rot[virt]
        for i in range(4):
            if b.other_end(r[i], virt) == end:
                return r[i], r[(i + 2) % 4]
        raise PatternNotFoundError(f"no segment {virt}-{end}")

    # y1 carries u's corridor toward c, y2 carries w's
    y1 = next(
        b.other_end(e, u) for e in b.rot[u] if b.other_end(e, u) != z
    )
    y2 = next(
        b.other_end(e, w) for e in b.rot[w] if b.other_end(e, w) != z
    )
    if y1 == y2 or not (b.kind[y1] == "virtual" and b.kind[y2] == "virtual"):
        raise PatternNotFoundError("u and w must hang on distinct crossings")
    u_y1, y1_c = crossing_slots(y1, u)
    w_y2, y2_c = crossing_slots(y2, w)
    if b.other_end(y1_c, y1) != c or b.other_end(y2_c, y2) != c:
        raise PatternNotFoundError("corridors do not meet at c")
    u_z, z_p = crossing_slots(z, u)
    w_z, z_q = crossing_slots(z, w)
    p = b.other_end(z_p, z)
    q = b.other_end(z_q, z)

    # u takes w's slot at y2, w takes u's slot at y1
    wy1 = b.new_edge_key(w, y1)
    uy2 = b.new_edge_key(u, y2)
    b.replace_in_rot(y1, u_y1, wy1)
    b.replace_in_rot(y2, w_y2, uy2)
    # the second edges of u and w no longer cross: connect them directly
    up = b.new_edge_key(u, p)
    wq = b.new_edge_key(w, q)
    b.replace_in_rot(p, z_p, up)
    b.replace_in_rot(q, z_q, wq)
    for e in (u_y1, w_y2, u_z, w_z, z_p, z_q):
        b.drop_edge_key(e)
    b.rot[u] = [uy2, up]
    b.rot[w] = [wy1, wq]
    b.rot[z] = []
    b.delete_isolated_vertex(z)
    return b.build()


# ----------------------------------------------------------------------
# The coloring engine
# ----------------------------------------------------------------------


def odd_color_1planar(
    emb: OnePlaneGraph, t: Thresholds = Thresholds()
) -> tuple[Coloring, ReductionTrace]:
    """Total odd coloring of the underlying graph with at most K colors.

    K below 23 voids the completeness guarantee and is rejected."""
    if t.K < 23:
        raise ValueError("palette below 23 voids the completeness guarantee")
    bad = validate(emb)
    if bad:
        raise InvalidEmbeddingError(f"invalid embedding: {bad[0]}")
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 12 * len(emb.real_vertices()) + 1000))
    try:
        trace = ReductionTrace()
        c = _solve(emb, t, trace)
        g = underlying_graph(emb)
        if g.n and not is_odd_coloring(g, c):
            raise EngineInvariantError("engine emitted a non-odd coloring")
        return c, trace
    finally:
        sys.setrecursionlimit(old_limit)


def _solve(emb: OnePlaneGraph, t: Thresholds, trace: ReductionTrace) -> Coloring:
    parts = split_components(emb)
    if len(parts) > 1:
        return union(*(_solve_connected(p, t, trace) for p in parts))
    return _solve_connected(emb, t, trace)


def _rainbow(g: Graph, k: int) -> Coloring:
    return Coloring(k, {v: i + 1 for i, v in enumerate(g.vertices())})


def _solve_connected(
    emb: OnePlaneGraph, t: Thresholds, trace: ReductionTrace
) -> Coloring:
    while True:
        g = underlying_graph(emb)
        before = _metrics(emb)
        if g.n <= t.K:
            trace.record("BaseCase", (g.n,), before, [])
            return _rainbow(g, t.K)
        cfg = find_reducible(emb, t)
        if isinstance(cfg, TwoFaceUncross):
            emb2 = uncross_two_face(emb, cfg.w)
            trace.record("TwoFaceUncross", (cfg.w,), before, [_metrics(emb2)])
            emb = emb2
            continue
        if isinstance(cfg, SixFourSwap):
            emb2 = uncross_six_four(emb, cfg)
            trace.record(
                "SixFourSwap",
                (cfg.u, cfg.w, cfg.v, cfg.z, cfg.c),
                before,
                [_metrics(emb2)],
            )
            emb = emb2
            continue
        return _reduce_and_extend(emb, g, t, cfg, trace, before)


def _extend_or_die(
    g: Graph, c: Coloring, v: int, extra=(), why: str = ""
) -> Coloring:
    color = greedy_extend(g, c, v, extra)
    if color is None:
        raise EngineInvariantError(
            f"greedy extension failed at vertex {v} ({why}); "
            f"forbidden covers the whole palette of {c.k}"
        )
    return c.set(v, color)


def _reduce_and_extend(
    emb: OnePlaneGraph,
    g: Graph,
    t: Thresholds,
    cfg: ReducibleConfig,
    trace: ReductionTrace,
    before: tuple[int, int],
) -> Coloring:
    if isinstance(cfg, Bridge):
        return _reduce_bridge(emb, g, t, cfg, trace, before)

    if isinstance(cfg, OddLowVertex):
        v = cfg.v
        emb2 = delete_real_vertices(emb, [v])
        trace.record("OddLowVertex", (v,), before, [_metrics(emb2)])
        c = _solve(emb2, t, trace)
        return _extend_or_die(g, c, v, why="odd low vertex")

    if isinstance(cfg, SmallPair):
        v, w = cfg.v, cfg.w
        emb2 = delete_real_vertices(emb, [v, w])
        trace.record("SmallPair", (v, w), before, [_metrics(emb2)])
        c = _solve(emb2, t, trace)
        tw = tau_o(g, c, w)
        c = _extend_or_die(g, c, v, {tw} if tw is not None else (), "small pair v")
        tv = tau_o(g, c, v)
        return _extend_or_die(
            g, c, w, {tv} if tv is not None else (), "small pair w"
        )

    if isinstance(cfg, UncrossedSmallEdge):
        x, y = cfg.x, cfg.y
        emb2 = emb
        for z in sorted(g.neighbors(x) & g.neighbors(y)):
            emb2 = delete_g_edge(emb2, x, z)
        emb2 = contract_uncrossed_edge(emb2, x, y)
        trace.record("UncrossedSmallEdge", (x, y), before, [_metrics(emb2)])
        c = _solve(emb2, t, trace)
        c = _extend_or_die(g, c, x, why="uncrossed small edge")
        kept = sum(1 for u in g.neighbors(x) if c.assign[u] == c.assign[y])
        assert kept == 1, f"color of {y} appears {kept} times on N({x})"
        return c

    if isinstance(cfg, D2Vertex):
        v = cfg.v
        twos = sorted(u for u in g.neighbors(v) if g.degree(u) == 2)
        others = {}
        for u in twos:
            other = next(x for x in g.neighbors(u) if x != v)
            if g.degree(other) == 2 or other == v:
                raise EngineInvariantError(
                    f"2-vertex {u} lacks a surviving big neighbor"
                )
            others[u] = other
        emb2 = delete_real_vertices(emb, [v, *twos])
        trace.record("D2Vertex", (v,), before, [_metrics(emb2)])
        c = _solve(emb2, t, trace)
        extra = {c.assign[x] for x in others.values()}
        c = _extend_or_die(g, c, v, extra, "d2 vertex")
        for u in twos:
            c = _extend_or_die(g, c, u, why="d2 pendant 2-vertex")
        return c

    raise AssertionError(f"unhandled configuration {cfg!r}")


def _anchor_permutation(
    k: int, fixed: dict[int, int]
) -> dict[int, int]:
    """A palette permutation realizing the given color -> color anchors,
    filling the rest in ascending order (deterministic)."""
    perm = dict(fixed)
    free_src = [c for c in range(1, k + 1) if c not in perm]
    free_dst = [c for c in range(1, k + 1) if c not in set(perm.values())]
    perm.update(zip(free_src, free_dst))
    return perm


def _anchored_side(
    g_side: Graph, c: Coloring, end: int, color_anchor: int, odd_anchor: int
) -> Coloring:
    """Permute a side's coloring so the bridge endpoint gets color_anchor
    and, when the endpoint keeps neighbors on its side, one of its odd
    neighborhood colors gets odd_anchor."""
    fixed = {c.assign[end]: color_anchor}
    if g_side.degree(end) >= 1:
        odd = odd_colors(g_side, c, end)
        if not odd:
            raise EngineInvariantError(
                f"side coloring is not odd at bridge endpoint {end}"
            )
        pick = min(odd)
        if pick not in fixed:
            fixed[pick] = odd_anchor
    return c.relabel(_anchor_permutation(c.k, fixed))


def _reduce_bridge(
    emb: OnePlaneGraph,
    g: Graph,
    t: Thresholds,
    cfg: Bridge,
    trace: ReductionTrace,
    before: tuple[int, int],
) -> Coloring:
    x, y = cfg.x, cfg.y
    emb2 = delete_g_edge(emb, x, y)
    parts = split_components(emb2)
    if len(parts) != 2:
        raise EngineInvariantError(f"deleting bridge ({x}, {y}) left {len(parts)} parts")
    part_x = next(p for p in parts if x in p.vertices())
    part_y = next(p for p in parts if y in p.vertices())
    trace.record(
        "Bridge", (x, y), before, [_metrics(part_x), _metrics(part_y)]
    )
    gx, gy = underlying_graph(part_x), underlying_graph(part_y)
    cx = _anchored_side(gx, _solve(part_x, t, trace), x, 1, 2)
    cy = _anchored_side(gy, _solve(part_y, t, trace), y, 3, 4)
    merged = union(cx, cy)
    if gx.degree(x) >= 1:
        # the literal proof-step check: color 2 is odd on N(x) minus y
        assert 2 in odd_colors(gx, merged, x)
    if gy.degree(y) >= 1:
        assert 4 in odd_colors(gy, merged, y)
    return merged
