"""Complete search for odd k-colorings and the odd chromatic number.

Backtracking over a fixed vertex order (highest degree first within a
connected traversal), with color-symmetry breaking and a parity forward
check: after coloring v, any vertex u adjacent to v whose neighborhood just
became fully colored must already see a color an odd number of times --
u's own color can never repair its neighborhood, so such a branch is dead.
The subdivided complete graphs die immediately under this check whenever
two branch vertices share a color, which is what makes the lower-bound
searches practical.

Results are three-valued: a witness coloring, None for a completed refutation,
or INCONCLUSIVE when the node limit was hit before the search finished.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass

from .coloring import Coloring, OddTracker, is_odd_coloring
from .graphs import Graph


class Inconclusive:
    """Search exhausted its node budget; the answer is unknown."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INCONCLUSIVE"

    def __bool__(self) -> bool:
        return False


INCONCLUSIVE = Inconclusive()


@dataclass(frozen=True)
class SearchConfig:
    max_k: int | None = None
    node_limit: int | None = None
    vertex_order: tuple[int, ...] | None = None  # None = automatic
    forward_check: bool = True
    symmetry_breaking: bool = True
    jobs: int = 1

    def __post_init__(self):
        if self.max_k is not None and self.max_k < 1:
            raise ValueError("max_k must be >= 1")


def auto_order(g: Graph) -> list[int]:
    """Descending-degree order within a connected traversal.

    Start each component at its highest-degree vertex; repeatedly take the
    highest-degree vertex adjacent to the ordered prefix (lowest id on ties).
    """
    remaining = set(g.vertices())
    order: list[int] = []
    frontier: set[int] = set()
    key = lambda v: (-g.degree(v), v)
    while remaining:
        v = min(frontier, key=key) if frontier else min(remaining, key=key)
        order.append(v)
        remaining.discard(v)
        frontier.discard(v)
        frontier |= g.neighbors(v) & remaining
    return order


def _search(
    g: Graph,
    k: int,
    order: list[int],
    cfg: SearchConfig,
    root_colors: list[int] | None = None,
) -> Coloring | None | Inconclusive:
    n = len(order)
    tracker = OddTracker(g, k)
    nodes = 0
    limit = cfg.node_limit
    hit_limit = False

    def allowed(v: int, max_used: int) -> list[int]:
        top = min(k, max_used + 1) if cfg.symmetry_breaking else k
        banned = {c for c, m in tracker.neighbor_colors(v).items() if m > 0}
        return [c for c in range(1, top + 1) if c not in banned]

    def consistent_after(v: int) -> bool:
        # a vertex whose whole neighborhood is colored with no odd color is
        # beyond repair: its own pending color never enters its neighborhood
        if not cfg.forward_check:
            return True
        if g.degree(v) > 0 and tracker.neighborhood_complete(v) and tracker.num_odd(v) == 0:
            return False
        for u in g.neighbors(v):
            if tracker.neighborhood_complete(u) and tracker.num_odd(u) == 0:
                return False
        return True

    def rec(i: int, max_used: int) -> Coloring | None:
        nonlocal nodes, hit_limit
        if i == n:
            c = tracker.as_coloring()
            if cfg.forward_check or is_odd_coloring(g, c):
                return c
            return None
        v = order[i]
        colors = allowed(v, max_used)
        if i == 0 and root_colors is not None:
            colors = [c for c in colors if c in root_colors]
        for color in colors:
            nodes += 1
            if limit is not None and nodes > limit:
                hit_limit = True
                return None
            tracker.assign(v, color)
            if consistent_after(v):
                got = rec(i + 1, max(max_used, color))
                if got is not None:
                    return got
            tracker.unassign(v)
            if hit_limit:
                return None
        return None

    witness = rec(0, 0)
    if witness is not None:
        assert is_odd_coloring(g, witness)
        return witness
    return INCONCLUSIVE if hit_limit else None


def _root_worker(args) -> tuple[str, dict[int, int] | None]:
    g, k, order, cfg, color = args
    got = _search(g, k, order, cfg, root_colors=[color])
    if isinstance(got, Coloring):
        return "witness", got.assign
    return ("inconclusive", None) if got is INCONCLUSIVE else ("none", None)


def exists_odd_k_coloring(
    g: Graph, k: int, cfg: SearchConfig = SearchConfig()
) -> Coloring | None | Inconclusive:
    """A witness odd k-coloring, None if provably none exists, or
    INCONCLUSIVE when the node limit stopped the search."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n == 0:
        return Coloring(k, {})
    order = list(cfg.vertex_order) if cfg.vertex_order else auto_order(g)
    if sorted(order) != g.vertices():
        raise ValueError("vertex_order must enumerate all vertices")
    if cfg.jobs <= 1:
        return _search(g, k, order, cfg)

    # Root color branches are independent; the reported witness is the one
    # with the smallest root color, so results do not depend on scheduling.
    roots = list(range(1, (min(k, 1) if cfg.symmetry_breaking else k) + 1))
    tasks = [(g, k, order, cfg, c) for c in roots]
    results: list[tuple[str, dict[int, int] | None]] = []
    with concurrent.futures.ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        results = list(pool.map(_root_worker, tasks))
    for tag, assign in results:
        if tag == "witness":
            return Coloring(k, assign)
    if any(tag == "inconclusive" for tag, _ in results):
        return INCONCLUSIVE
    return None


def chi_o(
    g: Graph, cfg: SearchConfig = SearchConfig()
) -> int | Inconclusive:
    """The odd chromatic number by ascending complete searches.

    Never exceeds |G| (coloring every vertex with its own color is odd).
    Returns INCONCLUSIVE if a level hits the node limit, or if max_k was
    reached without a witness.
    """
    if g.n == 0:
        return 0
    top = min(cfg.max_k, g.n) if cfg.max_k is not None else g.n
    for k in range(1, top + 1):
        got = exists_odd_k_coloring(g, k, cfg)
        if isinstance(got, Coloring):
            return k
        if got is INCONCLUSIVE:
            return INCONCLUSIVE
    if top < g.n:
        return INCONCLUSIVE
    raise AssertionError("no odd coloring found at k = |G|")  # unreachable
