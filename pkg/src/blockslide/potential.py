"""Capacity of per-pair token restrictions and the fixed-point potential
computation.

capacity() evaluates the two-branch recursion over the block-cut tree for a
single pair.  compute_potentials() is a faithful transcription of the
fixed-point procedure: initialise every pair to 0, sweep the pairs in
canonical order, recompute a candidate value per pair, and on the first
strict increase assign it and restart the sweep.  Final values are
order-independent; the recorded iteration_count is order-dependent and only
meaningful against its stated upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import TO_BLOCK, TO_VERTEX, Pair
from .errors import NotConnectedError
from .graph import TokenSet, connected_components
from .invariants import _postorder


@dataclass(frozen=True)
class Restriction:
    pair: Pair
    tokens_in_side: TokenSet
    interior: TokenSet


def restrict(bd, c, p):
    """Tokens of c lying in the side G[p], and the same minus the base."""
    bd.check_pair(p)
    side = bd.side_mask(p)
    tokens = c.mask & side
    interior = tokens & ~(1 << p.base)
    return Restriction(p, TokenSet._from_mask(tokens), TokenSet._from_mask(interior))


def _tokens_in_block_interior(bd, mask, bid, base):
    """|B ∩ interior(C[B,u])|: tokens inside block B other than the base."""
    return (mask & bd.block_masks[bid] & ~(1 << base)).bit_count()


def capacity_table(bd, ua, mask, order=None):
    """Capacity of C[p] for every pair p, as a dict, for token bitmask C.

    `order` is a cached dependency-respecting pair order (see _postorder);
    passing it in lets callers amortise it across many token sets.
    """
    if order is None:
        order = _postorder(bd)
    cap = {}
    for p in order:
        if p.is_to_vertex:
            bid, u = p.block, p.base
            total = sum(cap[Pair(TO_BLOCK, v, bid)] for v in bd.kappa(bid, u))
            value = total + int(ua[p]) - _tokens_in_block_interior(bd, mask, bid, u)
        else:
            u, bid = p.base, p.block
            children = [Pair(TO_VERTEX, u, b) for b in bd.beta(u, bid)]
            if any(cap[q] == 0 and ua[q] for q in children):
                value = 0
            else:
                value = sum(cap[q] - int(ua[q]) for q in children) + int(ua[p])
        assert value >= 0, f"negative capacity at {p}; implementation bug"
        cap[p] = value
    return cap


def capacity(bd, ua, c, p):
    """cap(C[p]) for the restriction of token set c to pair p."""
    bd.check_pair(p)
    return capacity_table(bd, ua, c.mask)[p]


@dataclass(frozen=True)
class PotentialTable:
    values: dict
    iteration_count: int

    def __getitem__(self, p):
        return self.values[p]


def compute_potentials(bd, ua, c):
    """Fixed-point potentials for every pair, plus the number of sweep
    passes executed.  Requires a connected host graph."""
    g = bd.graph
    if g.n > 0 and len(connected_components(g)) != 1:
        raise NotConnectedError("compute_potentials requires a connected graph")

    pair_list = bd.pairs()
    index = {p: i for i, p in enumerate(pair_list)}
    npairs = len(pair_list)
    ua_arr = [int(ua[p]) for p in pair_list]

    # Per-pair precomputation: dependency indices and constants.
    deps = [None] * npairs
    const = [0] * npairs
    siblings = [None] * npairs  # for (u,B): indices of (B',u) over ALL blocks of u
    for i, p in enumerate(pair_list):
        if p.is_to_vertex:
            deps[i] = [
                index[Pair(TO_BLOCK, v, p.block)] for v in bd.kappa(p.block, p.base)
            ]
            const[i] = ua_arr[i] - _tokens_in_block_interior(
                bd, c.mask, p.block, p.base
            )
        else:
            deps[i] = [
                index[Pair(TO_VERTEX, p.base, b)] for b in bd.beta(p.base, p.block)
            ]
            siblings[i] = [
                index[Pair(TO_VERTEX, p.base, b)] for b in bd.blocks_of[p.base]
            ]
            const[i] = ua_arr[i]

    y = [0] * npairs
    iterations = 0
    updated = True
    while updated:
        iterations += 1
        updated = False
        for i, p in enumerate(pair_list):
            if p.is_to_vertex:
                candidate = sum(y[j] for j in deps[i]) + const[i]
            else:
                blocked = (
                    sum(1 for j in siblings[i] if y[j] == 0 and ua_arr[j]) >= 2
                )
                if blocked:
                    continue
                candidate = sum(y[j] - ua_arr[j] for j in deps[i]) + const[i]
            if y[i] < candidate:
                y[i] = candidate
                updated = True
                break

    return PotentialTable({p: y[i] for i, p in enumerate(pair_list)}, iterations)
