"""Blocks, cut vertices, the block-cut tree, and directed tree-edge pairs.

Block ids are canonical: blocks are sorted lexicographically by their sorted
member lists and numbered in that order.  Every downstream iteration order
(depth/ua tables, the fixed-point pass order, CLI output) derives from this,
so fuzz failures replay bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidPairError

TO_VERTEX = "to_vertex"  # (B, u): the side kept is B's side of u
TO_BLOCK = "to_block"  # (u, B): the side kept is everything except B's side


@dataclass(frozen=True)
class Pair:
    """A directed edge of the block-cut tree: (u, B) or (B, u).

    direction TO_BLOCK encodes (u, B); TO_VERTEX encodes (B, u).
    `base` is the cut vertex u in either orientation.
    """

    direction: str
    base: int
    block: int

    def reverse(self):
        other = TO_BLOCK if self.direction == TO_VERTEX else TO_VERTEX
        return Pair(other, self.base, self.block)

    @property
    def is_to_vertex(self):
        return self.direction == TO_VERTEX

    def sort_key(self):
        # ToVertex before ToBlock at equal (base, block)
        return (self.base, self.block, 0 if self.is_to_vertex else 1)

    def __repr__(self):
        if self.is_to_vertex:
            return f"(B{self.block},{self.base})"
        return f"({self.base},B{self.block})"


class BlockDecomposition:
    """Result of the articulation-point DFS over a Graph.

    Immutable after construction; all queries are pure.
    """

    def __init__(self, graph):
        self.graph = graph
        raw_blocks = _biconnected_blocks(graph)
        raw_blocks.sort(key=lambda b: sorted(b))
        self.blocks = tuple(frozenset(b) for b in raw_blocks)
        self.block_masks = tuple(
            sum(1 << v for v in b) for b in self.blocks
        )
        blocks_of = [[] for _ in range(graph.n)]
        for bid, b in enumerate(self.blocks):
            for v in b:
                blocks_of[v].append(bid)
        self.blocks_of = tuple(tuple(bs) for bs in blocks_of)
        self.cut_vertices = frozenset(
            v for v in range(graph.n) if len(self.blocks_of[v]) >= 2
        )
        self._side_cache = {}
        self._pairs = None

    # --- block-cut tree queries -------------------------------------------

    def tree_neighbors_of_block(self, bid):
        """Cut vertices incident to block `bid` in the block-cut tree."""
        return tuple(v for v in sorted(self.blocks[bid]) if v in self.cut_vertices)

    def tree_neighbors_of_cut(self, u):
        """Block ids incident to cut vertex `u` in the block-cut tree."""
        return self.blocks_of[u]

    def pairs(self):
        """Both orientations of every tree edge, in canonical order."""
        if self._pairs is None:
            out = []
            for u in sorted(self.cut_vertices):
                for bid in self.blocks_of[u]:
                    out.append(Pair(TO_VERTEX, u, bid))
                    out.append(Pair(TO_BLOCK, u, bid))
            out.sort(key=Pair.sort_key)
            self._pairs = tuple(out)
        return self._pairs

    def check_pair(self, p):
        if (
            p.base not in self.cut_vertices
            or not (0 <= p.block < len(self.blocks))
            or p.base not in self.blocks[p.block]
        ):
            raise InvalidPairError(f"pair {p} is not valid for this decomposition")

    def kappa(self, bid, u):
        """Cut vertices of G[B,u] lying in B; closed form (B ∩ V_cut) \\ {u}.

        The closed form is enforced against the definitional computation by
        test, not assumed silently.
        """
        self.check_pair(Pair(TO_VERTEX, u, bid))
        return frozenset(
            v for v in self.blocks[bid] if v != u and v in self.cut_vertices
        )

    def beta(self, u, bid):
        """Blocks of G[u,B] containing u; closed form blocks_of[u] \\ {B}."""
        self.check_pair(Pair(TO_BLOCK, u, bid))
        return tuple(b for b in self.blocks_of[u] if b != bid)

    def side_vertices(self, p):
        """Vertex set of G[p], computed by block-tree traversal and memoized.

        For (B,u): all vertices of blocks on B's side of the tree edge u--B.
        For (u,B): all vertices of blocks on u's side, plus u itself.
        """
        self.check_pair(p)
        key = (p.direction, p.base, p.block)
        cached = self._side_cache.get(key)
        if cached is not None:
            return cached
        u, b0 = p.base, p.block
        # Walk the block-cut tree from the appropriate endpoint of the
        # removed edge u--B.  Nodes: ('c', vertex) and ('b', block id).
        if p.is_to_vertex:
            start = ("b", b0)
        else:
            start = ("c", u)
        seen = {start}
        stack = [start]
        block_ids = []
        while stack:
            kind, x = stack.pop()
            if kind == "b":
                block_ids.append(x)
                for v in self.tree_neighbors_of_block(x):
                    node = ("c", v)
                    if (x, v) == (b0, u):
                        continue
                    if node not in seen:
                        seen.add(node)
                        stack.append(node)
            else:
                for bid in self.blocks_of[x]:
                    node = ("b", bid)
                    if (x, bid) == (u, b0):
                        continue
                    if node not in seen:
                        seen.add(node)
                        stack.append(node)
        verts = set()
        for bid in block_ids:
            verts |= self.blocks[bid]
        verts.add(u)
        result = frozenset(verts)
        self._side_cache[key] = result
        return result

    def side_mask(self, p):
        verts = self.side_vertices(p)
        return sum(1 << v for v in verts)

    def blocks_in_side(self, p):
        """Number of blocks of G[p] (used for the potential upper bound).

        For (B,u) this counts blocks in the tree component on B's side; for
        (u,B) the blocks on u's side.  A base vertex alone contributes none.
        """
        self.check_pair(p)
        u, b0 = p.base, p.block
        start = ("b", b0) if p.is_to_vertex else ("c", u)
        seen = {start}
        stack = [start]
        count = 0
        while stack:
            kind, x = stack.pop()
            if kind == "b":
                count += 1
                for v in self.tree_neighbors_of_block(x):
                    if (x, v) == (b0, u):
                        continue
                    node = ("c", v)
                    if node not in seen:
                        seen.add(node)
                        stack.append(node)
            else:
                for bid in self.blocks_of[x]:
                    if (x, bid) == (u, b0):
                        continue
                    node = ("b", bid)
                    if node not in seen:
                        seen.add(node)
                        stack.append(node)
        return count


def _biconnected_blocks(graph):
    """Maximal 2-connected vertex sets via iterative Hopcroft-Tarjan DFS.

    Isolated vertices become singleton blocks.  Linear in |V|+|E|.
    """
    n = graph.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    edge_stack = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not graph.adjacency[root]:
            blocks.append({root})
            continue
        # frame: (vertex, parent, iterator index)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, parent, i = stack.pop()
            adj = graph.adjacency[u]
            advanced = False
            while i < len(adj):
                v = adj[i]
                i += 1
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    stack.append((u, parent, i))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, 0))
                    advanced = True
                    break
                elif v != parent and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            # u finished; propagate low and pop a block if u's subtree
            # cannot reach above its parent
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    members = set()
                    while edge_stack:
                        a, b = edge_stack[-1]
                        if disc[a] >= disc[u] or (a, b) == (parent, u):
                            edge_stack.pop()
                            members.add(a)
                            members.add(b)
                            if (a, b) == (parent, u):
                                break
                        else:
                            break
                    if members:
                        blocks.append(members)
    return blocks


def decompose(g):
    return BlockDecomposition(g)


def is_block_graph(g):
    """True iff every block induces a complete subgraph."""
    bd = decompose(g)
    for b in bd.blocks:
        members = sorted(b)
        for i, u in enumerate(members):
            mask = g.adjacency_mask[u]
            for v in members[i + 1 :]:
                if not (mask >> v & 1):
                    return False
    return True


def pairs(bd):
    return bd.pairs()


def side_vertices(bd, p):
    return bd.side_vertices(p)


def kappa(bd, bid, u):
    return bd.kappa(bid, u)


def beta(bd, u, bid):
    return bd.beta(u, bid)
