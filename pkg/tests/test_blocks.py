import pytest

from blockslide import (
    Graph,
    InvalidPairError,
    Pair,
    TO_BLOCK,
    TO_VERTEX,
    decompose,
    is_block_graph,
)
from conftest import fuzz_corpus, slow_beta, slow_kappa


def test_path3_decomposition(path3):
    bd = decompose(path3)
    assert bd.blocks == (frozenset({0, 1}), frozenset({1, 2}))
    assert bd.cut_vertices == frozenset({1})
    assert bd.pairs() == (
        Pair(TO_VERTEX, 1, 0),
        Pair(TO_BLOCK, 1, 0),
        Pair(TO_VERTEX, 1, 1),
        Pair(TO_BLOCK, 1, 1),
    )


def test_single_clique_has_no_pairs():
    g = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    bd = decompose(g)
    assert bd.blocks == (frozenset({0, 1, 2, 3}),)
    assert bd.cut_vertices == frozenset()
    assert bd.pairs() == ()


def test_isolated_vertices_are_singleton_blocks():
    g = Graph(3, [(0, 1)])
    bd = decompose(g)
    assert frozenset({2}) in bd.blocks


def test_star_decomposition(star):
    bd = decompose(star)
    assert bd.blocks == (
        frozenset({0, 1}),
        frozenset({0, 2}),
        frozenset({0, 3}),
    )
    assert bd.cut_vertices == frozenset({0})
    assert len(bd.pairs()) == 6


def test_k4_pendant_sides(k4_pendant):
    bd = decompose(k4_pendant)
    # blocks sorted lexicographically: K4 before the pendant edge
    assert bd.blocks == (frozenset({0, 1, 2, 3}), frozenset({0, 4}))
    p = Pair(TO_VERTEX, 0, 0)  # the K4 seen from cut vertex 0
    assert bd.side_vertices(p) == frozenset({0, 1, 2, 3})
    q = Pair(TO_BLOCK, 0, 0)  # everything but the K4's interior
    assert bd.side_vertices(q) == frozenset({0, 4})
    assert bd.kappa(0, 0) == frozenset()
    assert bd.beta(0, 0) == (1,)


def test_check_pair_rejects_non_cut_base(k4_pendant):
    bd = decompose(k4_pendant)
    with pytest.raises(InvalidPairError):
        bd.check_pair(Pair(TO_VERTEX, 1, 0))
    with pytest.raises(InvalidPairError):
        bd.check_pair(Pair(TO_VERTEX, 0, 7))


def test_is_block_graph():
    assert is_block_graph(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert not is_block_graph(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))  # C4
    assert is_block_graph(Graph(1, []))


def test_diamond_is_single_non_clique_block():
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    bd = decompose(g)
    assert bd.blocks == (frozenset({0, 1, 2, 3}),)
    assert not is_block_graph(g)


CORPUS = fuzz_corpus(120, seed=11)


@pytest.mark.parametrize("idx", range(0, 120, 3))
def test_block_edge_partition(idx):
    """Every edge lies in exactly one block (blocks partition the edges)."""
    g = CORPUS[idx].graph
    bd = decompose(g)
    for u, v in g.edges:
        homes = [b for b in bd.blocks if u in b and v in b]
        assert len(homes) == 1


@pytest.mark.parametrize("idx", range(0, 120, 3))
def test_kappa_beta_match_definitional_recomputation(idx):
    """The closed forms agree with re-decomposing the actual side graphs."""
    g = CORPUS[idx].graph
    bd = decompose(g)
    for p in bd.pairs():
        if p.is_to_vertex:
            assert bd.kappa(p.block, p.base) == slow_kappa(bd, p.block, p.base)
        else:
            assert frozenset(bd.beta(p.base, p.block)) == slow_beta(
                bd, p.base, p.block
            )


@pytest.mark.parametrize("idx", range(0, 120, 4))
def test_opposite_sides_cover_graph(idx):
    """G[B,u] and G[u,B] overlap exactly in u and cover all of V."""
    g = CORPUS[idx].graph
    bd = decompose(g)
    for u in sorted(bd.cut_vertices):
        for bid in bd.blocks_of[u]:
            a = bd.side_vertices(Pair(TO_VERTEX, u, bid))
            b = bd.side_vertices(Pair(TO_BLOCK, u, bid))
            assert a & b == frozenset({u})
            # corpus graphs are connected, so the two sides cover V
            assert a | b == frozenset(range(g.n))


@pytest.mark.parametrize("idx", range(0, 120, 4))
def test_blocks_in_side_counts(idx):
    g = CORPUS[idx].graph
    bd = decompose(g)
    m = len(bd.blocks)
    for p in bd.pairs():
        k = bd.blocks_in_side(p)
        assert 1 <= k <= m
        # the two orientations split the block set exactly
        assert k + bd.blocks_in_side(p.reverse()) == m
