"""Exhaustive enumeration of the combinatorial structures on small graphs.

Every enumerator returns a list sorted by the canonical literal of the
produced object, so listings, iteration orders, and reports are
deterministic across runs and platforms.  These are desk-scale algorithms:
subset filters and straightforward recursion, exact and exhaustive.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .errors import InputError
from .graphs import Graph, VertexPartition, components_partition
from .keys import AcyclicOrientation, LinearOrder, SetCompositionKey


def _sorted_edges(g: Graph):
    return sorted(g.edges)


# ---------------------------------------------------------------- splits


def ordered_bipartitions(labels) -> list[tuple[frozenset, frozenset]]:
    """All 2^n ordered pairs (S, T) with S disjoint-union T = labels."""
    vs = sorted(labels)
    out = []
    for mask in range(1 << len(vs)):
        s = frozenset(v for i, v in enumerate(vs) if mask >> i & 1)
        out.append((s, frozenset(vs) - s))
    out.sort(key=lambda st: (sorted(st[0]), sorted(st[1])))
    return out


def ordered_tripartitions(labels) -> list[tuple[frozenset, frozenset, frozenset]]:
    """All 3^n ordered triples of disjoint (possibly empty) covering parts."""
    vs = sorted(labels)
    out = []
    for assign in product(range(3), repeat=len(vs)):
        parts = [[], [], []]
        for v, a in zip(vs, assign):
            parts[a].append(v)
        out.append(tuple(frozenset(p) for p in parts))
    out.sort(key=lambda abc: tuple(sorted(p) for p in abc))
    return out


# ---------------------------------------------------------------- orders


def linear_orders(labels) -> list[LinearOrder]:
    return [LinearOrder(p) for p in permutations(sorted(labels))]


# ---------------------------------------------------------------- orientations


def _is_acyclic(arcs) -> bool:
    # Kahn peeling on the arc set.
    indeg: dict[str, int] = {}
    out: dict[str, list[str]] = {}
    for u, v in arcs:
        indeg[v] = indeg.get(v, 0) + 1
        indeg.setdefault(u, 0)
        out.setdefault(u, []).append(v)
        out.setdefault(v, [])
    queue = [v for v, d in indeg.items() if d == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(indeg)


def acyclic_orientations(g: Graph) -> list[AcyclicOrientation]:
    edges = _sorted_edges(g)
    out = []
    for mask in range(1 << len(edges)):
        arcs = tuple(
            (u, v) if mask >> i & 1 == 0 else (v, u)
            for i, (u, v) in enumerate(edges)
        )
        if _is_acyclic(arcs):
            out.append(AcyclicOrientation(arcs))
    out.sort(key=lambda k: k.literal())
    return out


# ---------------------------------------------------------------- compositions


def set_compositions(labels) -> list[SetCompositionKey]:
    """All set compositions into nonempty blocks (one empty composition for
    the empty label set)."""
    out = [
        SetCompositionKey(blocks)
        for blocks in _ordered_block_sequences(frozenset(labels))
    ]
    out.sort(key=lambda k: k.literal())
    return out


def _ordered_block_sequences(labels: frozenset):
    if not labels:
        yield ()
        return
    vs = sorted(labels)
    n = len(vs)
    # Choose the first block as any nonempty subset, recurse on the rest.
    for mask in range(1, 1 << n):
        first = tuple(v for i, v in enumerate(vs) if mask >> i & 1)
        rest = frozenset(v for i, v in enumerate(vs) if not mask >> i & 1)
        for tail in _ordered_block_sequences(rest):
            yield (first,) + tail


def stable_compositions(g: Graph) -> list[SetCompositionKey]:
    """Compositions all of whose blocks are independent sets of g."""
    return [
        c
        for c in set_compositions(g.vertices)
        if all(_independent(g, b) for b in c.blocks)
    ]


def _independent(g: Graph, block) -> bool:
    bs = set(block)
    return not any(u in bs and v in bs for u, v in g.edges)


def composition_refines(fine: SetCompositionKey, coarse: SetCompositionKey) -> bool:
    """True when coarse is obtained from fine by merging consecutive blocks."""
    fine_ground = {v for b in fine.blocks for v in b}
    coarse_ground = {v for b in coarse.blocks for v in b}
    if fine_ground != coarse_ground:
        raise InputError("compositions have different ground sets")
    i = 0
    for block in coarse.blocks:
        target = set(block)
        got: set[str] = set()
        while got != target:
            if i >= len(fine.blocks):
                return False
            nxt = set(fine.blocks[i])
            if not nxt <= target - got:
                return False
            got |= nxt
            i += 1
    return i == len(fine.blocks)


def compositions_refining(coarse: SetCompositionKey) -> list[SetCompositionKey]:
    """All compositions below coarse: each block split into its own
    composition, concatenated in block order."""
    per_block = [
        [c.blocks for c in set_compositions(b)] for b in coarse.blocks
    ]
    out = []
    for choice in product(*per_block):
        blocks = tuple(b for piece in choice for b in piece)
        out.append(SetCompositionKey(blocks))
    out.sort(key=lambda k: k.literal())
    return out


# ---------------------------------------------------------------- partitions


def _partitions_of(vs: tuple[str, ...]):
    if not vs:
        yield ()
        return
    first, rest = vs[0], vs[1:]
    for tail in _partitions_of(rest):
        # first joins an existing block or starts its own
        for i in range(len(tail)):
            yield tail[:i] + ((first,) + tail[i],) + tail[i + 1 :]
        yield ((first,),) + tail


def set_partitions(labels) -> list[VertexPartition]:
    out = [VertexPartition(blocks) for blocks in _partitions_of(tuple(sorted(labels)))]
    out.sort(key=str)
    return out


def stable_partitions(g: Graph) -> list[VertexPartition]:
    return [
        p for p in set_partitions(g.vertices) if all(_independent(g, b) for b in p.blocks)
    ]


def partitions_refining(p: VertexPartition) -> list[VertexPartition]:
    """All partitions below p: each block partitioned independently."""
    per_block = [[q.blocks for q in set_partitions(b)] for b in p.blocks]
    out = []
    for choice in product(*per_block):
        out.append(VertexPartition([b for piece in choice for b in piece]))
    out.sort(key=str)
    return out


def partition_refines(fine: VertexPartition, coarse: VertexPartition) -> bool:
    return fine.refines(coarse)


# ---------------------------------------------------------------- flats


def is_flat(g: Graph, edges) -> bool:
    """A flat is an edge set closed under connectivity: every g-edge inside
    one of its components already belongs to it."""
    es = frozenset(edges)
    if not es <= g.edges:
        raise InputError("not a subset of the graph's edges")
    comp = components_partition(g.vertices, es)
    where = {v: i for i, b in enumerate(comp.blocks) for v in b}
    return all(e in es for e in g.edges if where[e[0]] == where[e[1]])


def is_matching(edges) -> bool:
    seen: set[str] = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def _edge_subsets(g: Graph):
    edges = _sorted_edges(g)
    for mask in range(1 << len(edges)):
        yield frozenset(e for i, e in enumerate(edges) if mask >> i & 1)


@lru_cache(maxsize=None)
def _flat_sets(g: Graph) -> tuple[frozenset, ...]:
    out = [es for es in _edge_subsets(g) if is_flat(g, es)]
    out.sort(key=lambda es: sorted(es))
    return tuple(out)


def flats(g: Graph) -> list[frozenset]:
    """All flats of g as edge sets."""
    return list(_flat_sets(g))


def matchings(g: Graph) -> list[frozenset]:
    out = [es for es in _edge_subsets(g) if is_matching(es)]
    out.sort(key=lambda es: sorted(es))
    return out


def flat_leq(a, b, g: Graph) -> bool:
    """Containment in the flat order; both arguments must be flats of g."""
    fa, fb = frozenset(a), frozenset(b)
    if not is_flat(g, fa) or not is_flat(g, fb):
        raise InputError("flat_leq arguments must be flats")
    return fa <= fb


def flat_closure_partition(g: Graph, edges) -> VertexPartition:
    """Components of (V(g), edges): the partition a flat induces."""
    return components_partition(g.vertices, edges)


# ---------------------------------------------------------------- counting


def bell_number(n: int) -> int:
    """Bell number via the Bell triangle (independent of set_partitions)."""
    if n == 0:
        return 1
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[-1]


def fubini_number(n: int) -> int:
    """Ordered Bell number via the double-sum recurrence."""
    from math import comb

    memo = [1]
    for m in range(1, n + 1):
        memo.append(sum(comb(m, k) * memo[m - k] for k in range(1, m + 1)))
    return memo[n]
