"""Token-independent per-pair quantities: depth d(p) and the boolean ua(p).

Both are defined by mutual recursion over the block-cut tree: a (B,u) pair
depends on the (v,B) pairs for v in kappa(B,u), and a (u,B) pair depends on
the (B',u) pairs for B' in beta(u,B).  Every dependency is strictly deeper
in the tree, so the recursion is well founded.  Evaluation uses an explicit
work stack so path-like graphs with depth on the order of n cannot blow the
call stack.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import TO_BLOCK, TO_VERTEX, Pair


def _dependencies(bd, p):
    if p.is_to_vertex:
        return [Pair(TO_BLOCK, v, p.block) for v in sorted(bd.kappa(p.block, p.base))]
    deps = [Pair(TO_VERTEX, p.base, b) for b in bd.beta(p.base, p.block)]
    # A cut vertex lies in at least two blocks, so beta is never empty here.
    assert deps, "beta(u,B) empty for a cut vertex; decomposition is broken"
    return deps


def _postorder(bd):
    """All pairs in an order where dependencies precede dependents."""
    order = []
    state = {}  # pair -> 1 (open) or 2 (done)
    for start in bd.pairs():
        if state.get(start) == 2:
            continue
        stack = [(start, False)]
        while stack:
            p, expanded = stack.pop()
            if expanded:
                state[p] = 2
                order.append(p)
                continue
            if state.get(p) == 2:
                continue
            state[p] = 1
            stack.append((p, True))
            for dep in _dependencies(bd, p):
                if state.get(dep) != 2:
                    stack.append((dep, False))
    return order


@dataclass(frozen=True)
class DepthTable:
    values: dict

    def __getitem__(self, p):
        return self.values[p]


@dataclass(frozen=True)
class UaTable:
    values: dict

    def __getitem__(self, p):
        return self.values[p]


def compute_depths(bd):
    d = {}
    for p in _postorder(bd):
        if p.is_to_vertex:
            kap = bd.kappa(p.block, p.base)
            if not kap:
                d[p] = 0
            else:
                d[p] = 1 + max(d[Pair(TO_BLOCK, v, p.block)] for v in kap)
        else:
            bet = bd.beta(p.base, p.block)
            d[p] = 1 + max(d[Pair(TO_VERTEX, p.base, b)] for b in bet)
    return DepthTable(d)


def compute_ua(bd, depths):
    ua = {}
    for p in _postorder(bd):
        if depths[p] == 0:
            ua[p] = True
        elif p.is_to_vertex:
            kap = bd.kappa(p.block, p.base)
            all_inner = all(ua[Pair(TO_BLOCK, v, p.block)] for v in kap)
            block_is_cuts = bd.blocks[p.block] == kap | {p.base}
            ua[p] = not (all_inner and block_is_cuts)
        else:
            bet = bd.beta(p.base, p.block)
            ua[p] = any(ua[Pair(TO_VERTEX, p.base, b)] for b in bet)
    return UaTable(ua)
