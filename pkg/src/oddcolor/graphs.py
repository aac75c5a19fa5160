"""Simple undirected graphs with set-based adjacency.

Vertices are integer ids. Graphs built from an edge list use ids 0..n-1;
operations that shrink a graph (vertex deletion, edge contraction) keep the
surviving original ids, so partial colorings computed on a subgraph apply
directly to the parent graph.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class NotAVertexError(KeyError):
    """Operation referenced a vertex id not present in the graph."""


class NotAnEdgeError(ValueError):
    """Operation referenced an edge not present in the graph."""


class Graph:
    """Immutable simple undirected graph.

    No loops, no parallel edges; adjacency is symmetric by construction.
    """

    __slots__ = ("_adj",)

    def __init__(self, adj: dict[int, Iterable[int]]):
        built: dict[int, frozenset[int]] = {}
        for v, nbrs in adj.items():
            ns = frozenset(nbrs)
            if v in ns:
                raise ValueError(f"loop at vertex {v}")
            built[int(v)] = ns
        for v, ns in built.items():
            for u in ns:
                if u not in built or v not in built[u]:
                    raise ValueError(f"asymmetric adjacency at edge ({v}, {u})")
        self._adj = built

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Graph on vertex ids 0..n-1 with the given edges."""
        adj: dict[int, set[int]] = {v: set() for v in range(n)}
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise NotAVertexError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj)

    # ------------------------------------------------------------------
    # Basic queries
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise NotAVertexError(v) from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted."""
        return sorted((u, v) for u in self._adj for v in self._adj[u] if u < v)

    def num_edges(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(frozenset((v, ns) for v, ns in self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------

    def delete_vertices(self, drop: Iterable[int]) -> "Graph":
        """Induced subgraph on the remaining vertices; original ids kept."""
        dropped = set(drop)
        for v in dropped:
            if v not in self._adj:
                raise NotAVertexError(v)
        return Graph(
            {v: ns - dropped for v, ns in self._adj.items() if v not in dropped}
        )

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        kept = set(keep)
        for v in kept:
            if v not in self._adj:
                raise NotAVertexError(v)
        return Graph({v: self._adj[v] & kept for v in kept})

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise NotAnEdgeError((u, v))
        adj = {w: set(ns) for w, ns in self._adj.items()}
        adj[u].discard(v)
        adj[v].discard(u)
        return Graph(adj)

    def contract(self, x: int, y: int) -> tuple["Graph", int]:
        """Contract edge xy; x is merged into y. Returns (graph, merged id).

        Loops vanish and parallel edges collapse, so the result is simple.
        """
        if not self.has_edge(x, y):
            raise NotAnEdgeError((x, y))
        adj = {w: set(ns) for w, ns in self._adj.items() if w != x}
        adj[y] = (set(self._adj[y]) | set(self._adj[x])) - {x, y}
        for w in self._adj[x]:
            if w != y:
                adj[w].discard(x)
                adj[w].add(y)
        return Graph(adj), y


# ----------------------------------------------------------------------
# Traversals and structure
# ----------------------------------------------------------------------


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by min id."""
    seen: set[int] = set()
    comps: list[list[int]] = []
    for root in g.vertices():
        if root in seen:
            continue
        stack = [root]
        seen.add(root)
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def degeneracy_order(g: Graph) -> tuple[int, list[int]]:
    """Repeatedly delete a minimum-degree vertex (lowest id on ties).

    Returns (d, order) where d is the largest degree seen at deletion time
    and order is the deletion sequence.  Reading the order forwards, every
    vertex has at most d neighbors that come later; the reverse order is
    the usual smallest-last coloring order.
    """
    deg = {v: g.degree(v) for v in g.vertices()}
    alive: dict[int, set[int]] = {v: set(g.neighbors(v)) for v in g.vertices()}
    buckets: dict[int, set[int]] = {}
    for v, d in deg.items():
        buckets.setdefault(d, set()).add(v)
    order: list[int] = []
    dmax = 0
    for _ in range(g.n):
        d = min(b for b in buckets if buckets[b])
        v = min(buckets[d])
        buckets[d].remove(v)
        dmax = max(dmax, d)
        order.append(v)
        for u in alive[v]:
            alive[u].remove(v)
            buckets[deg[u]].remove(u)
            deg[u] -= 1
            buckets.setdefault(deg[u], set()).add(u)
        del alive[v], deg[v]
    return dmax, order


def bridges(g: Graph) -> list[tuple[int, int]]:
    """All bridges, as (u, v) with u < v, sorted.  Iterative DFS low-points."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[tuple[int, int]] = []
    counter = 0
    for root in g.vertices():
        if root in index:
            continue
        # stack entries: (v, parent, iterator over neighbors)
        index[root] = low[root] = counter
        counter += 1
        stack: list[tuple[int, int, Iterator[int]]] = [
            (root, -1, iter(sorted(g.neighbors(root))))
        ]
        parent_edge_used: dict[int, bool] = {root: False}
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent and not parent_edge_used[v]:
                    # skip the tree edge back to the parent exactly once,
                    # so parallel edges (impossible here) would still work
                    parent_edge_used[v] = True
                    continue
                if u in index:
                    low[v] = min(low[v], index[u])
                else:
                    index[u] = low[u] = counter
                    counter += 1
                    parent_edge_used[u] = False
                    stack.append((u, v, iter(sorted(g.neighbors(u)))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > index[p]:
                        out.append((min(p, v), max(p, v)))
        # root done
    return sorted(out)


# ----------------------------------------------------------------------
# Named constructions used throughout the tests and generators
# ----------------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def subdivided_complete(p: int) -> Graph:
    """K_p with every edge subdivided once.

    Originals are 0..p-1; the subdivision vertex of edge (i, j) follows in
    sorted edge order.
    """
    edges = []
    nxt = p
    for i in range(p):
        for j in range(i + 1, p):
            edges.append((i, nxt))
            edges.append((nxt, j))
            nxt += 1
    return Graph.from_edges(nxt, edges)
