import pytest
from hypothesis import given, settings, strategies as st

from blockslide import (
    GenParams,
    InvalidParamsError,
    SplitMix64,
    connected_components,
    decompose,
    gen_block_graph,
    gen_independent_set,
    is_block_graph,
    is_independent,
    Graph,
    TokenSet,
)


def test_splitmix64_reference_vectors():
    r = SplitMix64(0)
    assert [r.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]
    r = SplitMix64(1234567)
    assert r.next_u64() == 6457827717110365317
    assert r.next_u64() == 3203168211198807973


def test_splitmix64_seed_masked_to_64_bits():
    assert SplitMix64(1 << 64).next_u64() == SplitMix64(0).next_u64()


def test_shuffle_is_permutation():
    r = SplitMix64(5)
    items = list(range(20))
    r.shuffle(items)
    assert sorted(items) == list(range(20))
    assert items != list(range(20))  # overwhelmingly likely


def test_params_validation():
    with pytest.raises(InvalidParamsError):
        GenParams(0, 0, 4)
    with pytest.raises(InvalidParamsError):
        GenParams(0, 3, 1)
    with pytest.raises(InvalidParamsError):
        GenParams(0, 3, 4, token_count=-1)


def test_graph_generation_deterministic():
    a = gen_block_graph(GenParams(314, 5, 4))
    b = gen_block_graph(GenParams(314, 5, 4))
    assert a == b


@settings(max_examples=40, deadline=None)
@given(
    seed=st.integers(0, 2**32),
    blocks=st.integers(1, 8),
    max_clique=st.integers(2, 5),
)
def test_generated_graphs_are_connected_block_graphs(seed, blocks, max_clique):
    g = gen_block_graph(GenParams(seed, blocks, max_clique))
    assert is_block_graph(g)
    assert len(connected_components(g)) == 1
    bd = decompose(g)
    assert len(bd.blocks) == blocks
    assert max(len(b) for b in bd.blocks) <= max_clique


def test_independent_set_valid():
    g = gen_block_graph(GenParams(8, 6, 4))
    for size in range(4):
        c = gen_independent_set(99, g, size)
        if c is not None:
            assert len(c) == size
            assert is_independent(g, c)


def test_independent_set_deterministic():
    g = gen_block_graph(GenParams(8, 6, 4))
    assert gen_independent_set(3, g, 2) == gen_independent_set(3, g, 2)


def test_independent_set_size_zero():
    g = gen_block_graph(GenParams(8, 2, 3))
    c = gen_independent_set(0, g, 0)
    assert c == TokenSet(g, [])


def test_infeasible_size_returns_none():
    k4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert gen_independent_set(0, k4, 2) is None
    assert gen_independent_set(0, k4, 1) is not None
