"""Command-line surface.

Exit codes: 0 for a clean run (both YES and NO answers), 1 for a fuzz
discrepancy, 2 for input errors, 3 for a non-block-graph input.
"""

from __future__ import annotations

import argparse
import sys

from .blocks import decompose, is_block_graph
from .decide import decide
from .errors import BlockslideError, NotABlockGraphError
from .fuzz import FuzzEnvelope, gen_fuzz_instance, check_instance
from .gen import GenParams, SplitMix64, gen_block_graph, gen_independent_set
from .graph import TokenSet, connected_components
from .instance import Instance, parse_instance, render_instance
from .invariants import compute_depths, compute_ua
from .oracle import NO, UNKNOWN, YES, OracleLimits, oracle_reachable
from .potential import compute_potentials

EXIT_OK = 0
EXIT_FUZZ_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_NOT_BLOCK_GRAPH = 3


def _load_instance(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_instance(fh.read())


def cmd_decide(args, out):
    instance = _load_instance(args.file)
    verdict = decide(instance.graph, instance.source, instance.target)
    print("YES" if verdict.reachable else "NO", file=out)
    print(f"reason: {verdict.reason.value}", file=out)
    return EXIT_OK


def _print_component_potentials(g, tokens, out, labels=None):
    """One line per pair in canonical order for a connected (sub)graph."""
    if labels is None:
        labels = {v: v + 1 for v in range(g.n)}
    bd = decompose(g)
    depths = compute_depths(bd)
    ua = compute_ua(bd, depths)
    pot = compute_potentials(bd, ua, tokens)
    for p in bd.pairs():
        u = labels[p.base]
        if p.is_to_vertex:
            arrow = f"B{p.block}->{u}"
        else:
            arrow = f"{u}->B{p.block}"
        print(
            f"pot {arrow} = {pot[p]} ua={int(ua[p])} d={depths[p]}",
            file=out,
        )


def cmd_potentials(args, out):
    instance = _load_instance(args.file)
    g = instance.graph
    if not is_block_graph(g):
        raise NotABlockGraphError("input graph has a non-clique block")
    tokens = instance.source if args.set == "source" else instance.target
    components = connected_components(g)
    if len(components) <= 1:
        _print_component_potentials(g, tokens, out)
        return EXIT_OK
    for idx, comp in enumerate(components):
        members = sorted(comp)
        sub, to_sub, to_orig = g.induced(members)
        sub_tokens = TokenSet(sub, [to_sub[v] for v in tokens if v in comp])
        print(f"# component {idx}", file=out)
        _print_component_potentials(
            sub, sub_tokens, out, labels={i: v + 1 for i, v in enumerate(to_orig)}
        )
    return EXIT_OK


def cmd_oracle(args, out):
    instance = _load_instance(args.file)
    lim = OracleLimits(max_states=args.max_states, max_millis=args.max_millis)
    answer = oracle_reachable(instance.graph, instance.source, instance.target, lim)
    print({YES: "YES", NO: "NO", UNKNOWN: "UNKNOWN"}[answer], file=out)
    return EXIT_OK


def cmd_gen(args, out):
    g = gen_block_graph(GenParams(args.seed, args.blocks, args.max_clique))
    rng = SplitMix64(args.seed ^ 0xD1B54A32D192ED03)
    seed_src = rng.next_u64()
    seed_tgt = rng.next_u64()
    k = min(args.tokens, g.n)
    while k > 0:
        src = gen_independent_set(seed_src, g, k)
        tgt = gen_independent_set(seed_tgt, g, k)
        if src is not None and tgt is not None:
            break
        k -= 1
    else:
        src = tgt = TokenSet(g, [])
    out.write(render_instance(Instance(g, src, tgt)))
    return EXIT_OK


def cmd_fuzz(args, out):
    env = FuzzEnvelope(
        max_blocks=args.max_blocks,
        max_clique=args.max_clique,
        max_tokens=args.max_tokens,
        max_vertices=args.max_vertices,
    )
    for i in range(args.count):
        seed = args.seed + i
        inst = gen_fuzz_instance(seed, env)
        failures = check_instance(inst)
        if failures:
            dump = f"fuzz-failure-seed{seed}.ts"
            with open(dump, "w", encoding="ascii") as fh:
                fh.write(f"# fuzz seed {seed}\n")
                fh.write(render_instance(inst))
            print(f"{i}/{args.count} ok, then seed {seed} failed:", file=out)
            for f in failures:
                print(f"  {f}", file=out)
            print(f"instance dumped to {dump}", file=out)
            return EXIT_FUZZ_FAILURE
    print(f"{args.count}/{args.count} ok", file=out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="blockslide",
        description="Token-sliding independent-set reconfiguration on block graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide reachability for an instance file")
    p.add_argument("file")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("potentials", help="print per-pair potentials")
    p.add_argument("file")
    p.add_argument("--set", choices=["source", "target"], default="source")
    p.set_defaults(func=cmd_potentials)

    p = sub.add_parser("oracle", help="brute-force reachability check")
    p.add_argument("file")
    p.add_argument("--max-states", type=int, default=2_000_000)
    p.add_argument("--max-millis", type=int, default=30_000)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="emit a random instance to stdout")
    p.add_argument("--blocks", type=int, default=6)
    p.add_argument("--max-clique", type=int, default=4)
    p.add_argument("--tokens", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="cross-validate solver against the oracle")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-blocks", type=int, default=6)
    p.add_argument("--max-clique", type=int, default=4)
    p.add_argument("--max-tokens", type=int, default=4)
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_fuzz)

    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except NotABlockGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_BLOCK_GRAPH
    except (BlockslideError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
