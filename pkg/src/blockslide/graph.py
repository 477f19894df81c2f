"""Simple undirected graphs and independent token placements.

Vertices are dense integer ids 0..n-1.  Any 1-based external labelling is
translated at the I/O boundary (see blockslide.instance).  Both Graph and
TokenSet are immutable after construction and safe to share.
"""

from __future__ import annotations

from .errors import (
    DuplicateEdgeError,
    NotIndependentError,
    SelfLoopError,
    VertexOutOfRangeError,
)


class Graph:
    """Immutable simple undirected graph with array-indexed adjacency."""

    __slots__ = ("n", "edges", "adjacency", "adjacency_mask")

    def __init__(self, n, edge_list):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        seen = set()
        adjacency = [[] for _ in range(n)]
        adjacency_mask = [0] * n
        for u, v in edge_list:
            if not (0 <= u < n):
                raise VertexOutOfRangeError(u, n)
            if not (0 <= v < n):
                raise VertexOutOfRangeError(v, n)
            if u == v:
                raise SelfLoopError(u)
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdgeError(*e)
            seen.add(e)
            adjacency[u].append(v)
            adjacency[v].append(u)
            adjacency_mask[u] |= 1 << v
            adjacency_mask[v] |= 1 << u
        self.edges = frozenset(seen)
        self.adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        self.adjacency_mask = tuple(adjacency_mask)

    def neighbors(self, u):
        self._check_vertex(u)
        return self.adjacency[u]

    def degree(self, u):
        self._check_vertex(u)
        return len(self.adjacency[u])

    def has_edge(self, u, v):
        self._check_vertex(u)
        self._check_vertex(v)
        return (min(u, v), max(u, v)) in self.edges

    def _check_vertex(self, u):
        if not (0 <= u < self.n):
            raise VertexOutOfRangeError(u, self.n)

    def induced(self, vertices):
        """Induced subgraph on `vertices`.

        Returns (subgraph, to_sub, to_orig) where to_sub maps original ids to
        subgraph ids and to_orig is the inverse (a list).
        """
        to_orig = sorted(set(vertices))
        for u in to_orig:
            self._check_vertex(u)
        to_sub = {u: i for i, u in enumerate(to_orig)}
        sub_edges = [
            (to_sub[u], to_sub[v])
            for (u, v) in self.edges
            if u in to_sub and v in to_sub
        ]
        return Graph(len(to_orig), sub_edges), to_sub, to_orig

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def new_graph(n, edge_list):
    return Graph(n, edge_list)


class TokenSet:
    """An independent set of a host graph, i.e. a legal token placement.

    Stores a sorted vertex tuple plus a bitmask for O(1) membership; both
    views are kept because the bitmask is the hot path in the capacity
    recursion and the state-space oracle.
    """

    __slots__ = ("vertices", "mask")

    def __init__(self, graph, vertices, which="set"):
        vs = sorted(set(vertices))
        mask = 0
        for v in vs:
            graph._check_vertex(v)
            mask |= 1 << v
        for v in vs:
            if graph.adjacency_mask[v] & mask:
                raise NotIndependentError(which)
        self.vertices = tuple(vs)
        self.mask = mask

    @classmethod
    def _from_mask(cls, mask):
        """Unchecked constructor for internal use on already-validated masks."""
        ts = object.__new__(cls)
        ts.mask = mask
        vs = []
        m = mask
        while m:
            low = m & -m
            vs.append(low.bit_length() - 1)
            m ^= low
        ts.vertices = tuple(vs)
        return ts

    def __contains__(self, v):
        return bool(self.mask >> v & 1)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return isinstance(other, TokenSet) and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def __repr__(self):
        return f"TokenSet({list(self.vertices)})"


def is_independent(g, s):
    """True iff no edge of g joins two vertices of s."""
    mask = 0
    for v in s:
        g._check_vertex(v)
        mask |= 1 << v
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if g.adjacency_mask[v] & mask:
            return False
        m ^= low
    return True


def is_under_attack(g, c, v):
    """True iff some neighbour of v carries a token.  A vertex carrying a
    token itself is never under attack (its neighbourhood is token-free)."""
    g._check_vertex(v)
    return bool(g.adjacency_mask[v] & c.mask)


def connected_components(g):
    """Partition of V(g) into maximal connected vertex sets, ordered by
    minimum vertex id."""
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        components.append(frozenset(comp))
    return components
