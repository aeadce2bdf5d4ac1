"""The catalog of thirteen bimonoid structures on graph-indexed bases.

Every structure exposes the same key-level interface: a finite basis per
graph, a product component per ordered vertex bipartition (always a single
key with coefficient one), and a coproduct component per bipartition (at
most one key pair, with a monomial coefficient).  Element-level wrappers
extend these linearly and validate their inputs.

Deformation is per structure: linear orders and set compositions pick up a
q power per crossing edge and a t power per crossing non-edge, orientations
only the q power, and the partition/flat/matching/unit structures none.
The `uses_q` / `uses_t` flags drive both the coproduct statistics and the
braiding used in the compatibility axiom.

Identifiers: L, AO, Sigma, SSigma, Pi_m, Pi_p, SPi_m, SPi_p, FL_M, FL_P,
Match_M, Match_P, E.
"""

from __future__ import annotations

from functools import lru_cache

from . import enumerators, keys
from .elements import Element, TensorElement
from .errors import InputError
from .graphs import Graph, VertexPartition, components_partition
from .keys import (
    AcyclicOrientation,
    BasisKey,
    FlatM,
    FlatP,
    LinearOrder,
    MatchingM,
    MatchingP,
    PartitionM,
    PartitionP,
    SetCompositionKey,
    UnitKey,
)
from .qtpoly import QTPolynomial

EMPTY_GRAPH = Graph(())


# ---------------------------------------------------------------- statistics


def order_edge_inversions(seq, edges, S, T) -> int:
    """Edges st with s in S, t in T, and s placed after t in seq."""
    pos = {v: i for i, v in enumerate(seq)}
    count = 0
    for a, b in edges:
        if a in S and b in T:
            if pos[a] > pos[b]:
                count += 1
        elif b in S and a in T:
            if pos[b] > pos[a]:
                count += 1
    return count


def order_pair_inversions(seq, S, T) -> int:
    """All pairs (s, t) in S x T with s after t in seq, adjacent or not."""
    count = 0
    running_t = 0
    for v in seq:
        if v in T:
            running_t += 1
        elif v in S:
            count += running_t
    return count


def composition_edge_inversions(blocks, edges, S, T) -> int:
    """Edges st, s in S, t in T, with s in a strictly later block than t."""
    pos = {v: i for i, b in enumerate(blocks) for v in b}
    count = 0
    for a, b in edges:
        if a in S and b in T:
            if pos[a] > pos[b]:
                count += 1
        elif b in S and a in T:
            if pos[b] > pos[a]:
                count += 1
    return count


def composition_pair_inversions(blocks, S, T) -> int:
    """Pairs (s, t) in S x T with s in a strictly later block than t."""
    count = 0
    t_seen = 0
    for b in blocks:
        s_here = sum(1 for v in b if v in S)
        count += s_here * t_seen
        t_seen += sum(1 for v in b if v in T)
    return count


def composition_crossing_edges(blocks, edges) -> int:
    """Edges whose endpoints lie in different blocks."""
    pos = {v: i for i, b in enumerate(blocks) for v in b}
    return sum(1 for a, b in edges if pos[a] != pos[b])


def composition_crossing_pairs(blocks) -> int:
    """Vertex pairs in different blocks."""
    sizes = [len(b) for b in blocks]
    total = sum(sizes)
    return (total * (total - 1) - sum(s * (s - 1) for s in sizes)) // 2


def arc_count_from_to(arcs, A, B) -> int:
    """Arcs with tail in A and head in B."""
    return sum(1 for u, v in arcs if u in A and v in B)


def braiding_coeff(g: Graph, S, T) -> QTPolynomial:
    """Graph braiding weight: q per crossing edge, t per crossing non-edge."""
    s, t = frozenset(S), frozenset(T)
    cross = g.crossing_edges(s, t)
    return QTPolynomial.monomial(cross, len(s) * len(t) - cross)


# ---------------------------------------------------------------- catalog


class MonoidSpec:
    """One bimonoid structure; subclasses fill in the key-level maps."""

    id: str = ""
    key_kind: str = ""
    uses_q: bool = False
    uses_t: bool = False

    # -- basis and validity

    def basis(self, g: Graph) -> tuple[BasisKey, ...]:
        return _basis_cached(self.id, g)

    def _enumerate_basis(self, g: Graph):
        raise NotImplementedError

    def empty_key(self) -> BasisKey:
        raise NotImplementedError

    def validate_key(self, g: Graph, key: BasisKey) -> None:
        raise NotImplementedError

    def _expect_kind(self, key, cls):
        if not isinstance(key, cls):
            raise InputError(
                f"{self.id} expects {cls.kind} keys, got {key!r}"
            )

    # -- structure maps (key level)

    def product_key(self, g: Graph, S, T, x: BasisKey, y: BasisKey) -> BasisKey:
        raise NotImplementedError

    def coproduct_key(self, g: Graph, S, T, key: BasisKey):
        """None, or (left_key, right_key, coefficient)."""
        raise NotImplementedError

    def braiding(self, g: Graph, S, T) -> QTPolynomial:
        """The structure's own braiding weight on the (S, T) crossing."""
        qe = g.crossing_edges(S, T) if self.uses_q else 0
        te = (len(S) * len(T) - g.crossing_edges(S, T)) if self.uses_t else 0
        return QTPolynomial.monomial(qe, te)

    def parse_key(self, text: str) -> BasisKey:
        return keys.parse_key(self.key_kind, text)


class _OrderMonoid(MonoidSpec):
    id = "L"
    key_kind = "order"
    uses_q = True
    uses_t = True

    def _enumerate_basis(self, g):
        return enumerators.linear_orders(g.vertices)

    def empty_key(self):
        return LinearOrder(())

    def validate_key(self, g, key):
        self._expect_kind(key, LinearOrder)
        if len(key.seq) != g.n or set(key.seq) != g.vertex_set:
            raise InputError(f"{key.literal()} is not an order of {sorted(g.vertex_set)}")

    def product_key(self, g, S, T, x, y):
        return LinearOrder(x.seq + y.seq)

    def coproduct_key(self, g, S, T, key):
        qe = order_edge_inversions(key.seq, g.edges, S, T)
        te = order_pair_inversions(key.seq, S, T) - qe
        left = LinearOrder(v for v in key.seq if v in S)
        right = LinearOrder(v for v in key.seq if v in T)
        return left, right, QTPolynomial.monomial(qe, te)


class _OrientationMonoid(MonoidSpec):
    id = "AO"
    key_kind = "orientation"
    uses_q = True
    uses_t = False

    def _enumerate_basis(self, g):
        return enumerators.acyclic_orientations(g)

    def empty_key(self):
        return AcyclicOrientation(())

    def validate_key(self, g, key):
        self._expect_kind(key, AcyclicOrientation)
        undirected = frozenset(
            (u, v) if u < v else (v, u) for u, v in key.arcs
        )
        if undirected != g.edges or len(key.arcs) != len(g.edges):
            raise InputError(f"{key.literal()} does not orient every edge exactly once")
        if not enumerators._is_acyclic(key.arcs):
            raise InputError(f"{key.literal()} has a directed cycle")

    def product_key(self, g, S, T, x, y):
        cross = []
        for a, b in g.edges:
            if a in S and b in T:
                cross.append((a, b))
            elif b in S and a in T:
                cross.append((b, a))
        return AcyclicOrientation(tuple(x.arcs) + tuple(y.arcs) + tuple(cross))

    def coproduct_key(self, g, S, T, key):
        qe = arc_count_from_to(key.arcs, T, S)
        left = AcyclicOrientation((u, v) for u, v in key.arcs if u in S and v in S)
        right = AcyclicOrientation((u, v) for u, v in key.arcs if u in T and v in T)
        return left, right, QTPolynomial.monomial(qe, 0)


class _CompositionMonoid(MonoidSpec):
    key_kind = "composition"
    uses_q = True
    uses_t = True

    def __init__(self, mid: str, stable: bool):
        self.id = mid
        self.stable = stable

    def _enumerate_basis(self, g):
        if self.stable:
            return enumerators.stable_compositions(g)
        return enumerators.set_compositions(g.vertices)

    def empty_key(self):
        return SetCompositionKey(())

    def validate_key(self, g, key):
        self._expect_kind(key, SetCompositionKey)
        ground = {v for b in key.blocks for v in b}
        if ground != g.vertex_set:
            raise InputError(f"{key.literal()} does not compose {sorted(g.vertex_set)}")
        if self.stable:
            for b in key.blocks:
                if not enumerators._independent(g, b):
                    raise InputError(f"block {','.join(b)} is not independent")

    def product_key(self, g, S, T, x, y):
        return SetCompositionKey(x.blocks + y.blocks)

    def coproduct_key(self, g, S, T, key):
        qe = composition_edge_inversions(key.blocks, g.edges, S, T)
        te = composition_pair_inversions(key.blocks, S, T) - qe
        left = SetCompositionKey(
            bb for b in key.blocks if (bb := tuple(v for v in b if v in S))
        )
        right = SetCompositionKey(
            bb for b in key.blocks if (bb := tuple(v for v in b if v in T))
        )
        return left, right, QTPolynomial.monomial(qe, te)


class _PartitionMonoid(MonoidSpec):
    def __init__(self, mid: str, basis_tag: str, stable: bool):
        self.id = mid
        self.basis_tag = basis_tag
        self.stable = stable
        self.key_cls = PartitionM if basis_tag == "m" else PartitionP
        self.key_kind = self.key_cls.kind

    def _enumerate_basis(self, g):
        parts = (
            enumerators.stable_partitions(g)
            if self.stable
            else enumerators.set_partitions(g.vertices)
        )
        return [self.key_cls(p) for p in parts]

    def empty_key(self):
        return self.key_cls(VertexPartition(()))

    def validate_key(self, g, key):
        self._expect_kind(key, self.key_cls)
        if key.partition.ground() != g.vertex_set:
            raise InputError(f"{key.literal()} does not partition {sorted(g.vertex_set)}")
        if self.stable:
            for b in key.partition.blocks:
                if not enumerators._independent(g, b):
                    raise InputError(f"block {','.join(b)} is not independent")

    def product_key(self, g, S, T, x, y):
        return self.key_cls(x.partition.union(y.partition))

    def coproduct_key(self, g, S, T, key):
        if self.basis_tag == "p":
            for b in key.partition.blocks:
                hit_s = any(v in S for v in b)
                hit_t = any(v in T for v in b)
                if hit_s and hit_t:
                    return None
        return (
            self.key_cls(key.partition.restrict(S)),
            self.key_cls(key.partition.restrict(T)),
            QTPolynomial.one(),
        )


class _FlatMonoid(MonoidSpec):
    def __init__(self, mid: str, basis_tag: str, matchings_only: bool):
        self.id = mid
        self.basis_tag = basis_tag
        self.matchings_only = matchings_only
        if matchings_only:
            self.key_cls = MatchingM if basis_tag == "M" else MatchingP
        else:
            self.key_cls = FlatM if basis_tag == "M" else FlatP
        self.key_kind = self.key_cls.kind

    def _enumerate_basis(self, g):
        sets = enumerators.matchings(g) if self.matchings_only else enumerators.flats(g)
        return [self.key_cls(es) for es in sets]

    def empty_key(self):
        return self.key_cls(())

    def validate_key(self, g, key):
        self._expect_kind(key, self.key_cls)
        if not key.edges <= g.edges:
            raise InputError(f"{key.literal()} uses edges outside the graph")
        if self.matchings_only:
            if not enumerators.is_matching(key.edges):
                raise InputError(f"{key.literal()} is not a matching")
        elif not enumerators.is_flat(g, key.edges):
            raise InputError(f"{key.literal()} is not a flat")

    def product_key(self, g, S, T, x, y):
        return self.key_cls(x.edges | y.edges)

    def coproduct_key(self, g, S, T, key):
        left = frozenset(e for e in key.edges if e[0] in S and e[1] in S)
        right = frozenset(e for e in key.edges if e[0] in T and e[1] in T)
        if self.basis_tag == "P" and left | right != key.edges:
            return None
        return self.key_cls(left), self.key_cls(right), QTPolynomial.one()


class _UnitSpeciesMonoid(MonoidSpec):
    id = "E"
    key_kind = "unit"

    def _enumerate_basis(self, g):
        return [UnitKey()]

    def empty_key(self):
        return UnitKey()

    def validate_key(self, g, key):
        self._expect_kind(key, UnitKey)

    def product_key(self, g, S, T, x, y):
        return UnitKey()

    def coproduct_key(self, g, S, T, key):
        return UnitKey(), UnitKey(), QTPolynomial.one()


MONOIDS: dict[str, MonoidSpec] = {
    m.id: m
    for m in (
        _OrderMonoid(),
        _OrientationMonoid(),
        _CompositionMonoid("Sigma", stable=False),
        _CompositionMonoid("SSigma", stable=True),
        _PartitionMonoid("Pi_m", "m", stable=False),
        _PartitionMonoid("Pi_p", "p", stable=False),
        _PartitionMonoid("SPi_m", "m", stable=True),
        _PartitionMonoid("SPi_p", "p", stable=True),
        _FlatMonoid("FL_M", "M", matchings_only=False),
        _FlatMonoid("FL_P", "P", matchings_only=False),
        _FlatMonoid("Match_M", "M", matchings_only=True),
        _FlatMonoid("Match_P", "P", matchings_only=True),
        _UnitSpeciesMonoid(),
    )
}

MONOID_IDS = tuple(MONOIDS)


def get_monoid(mid: str) -> MonoidSpec:
    try:
        return MONOIDS[mid]
    except KeyError:
        raise InputError(
            f"unknown monoid {mid!r}; choose from {', '.join(MONOID_IDS)}"
        ) from None


@lru_cache(maxsize=None)
def _basis_cached(mid: str, g: Graph) -> tuple[BasisKey, ...]:
    return tuple(MONOIDS[mid]._enumerate_basis(g))


# ---------------------------------------------------------------- wrappers


def _check_split(g: Graph, S, T):
    s, t = frozenset(S), frozenset(T)
    if s & t:
        raise InputError("S and T overlap")
    if s | t != g.vertex_set:
        raise InputError("S and T do not cover the vertex set")
    return s, t


def make_element(mid: str, g: Graph, key_or_terms, coeff=1) -> Element:
    """Validated Element constructor."""
    spec = get_monoid(mid)
    if isinstance(key_or_terms, BasisKey):
        terms = [(key_or_terms, coeff)]
    else:
        terms = list(key_or_terms)
    for k, _c in terms:
        spec.validate_key(g, k)
    return Element(mid, g, terms)


def product(mid: str, g: Graph, S, T, x: Element, y: Element) -> Element:
    """The (S, T) product component applied to elements on G_S and G_T."""
    spec = get_monoid(mid)
    s, t = _check_split(g, S, T)
    gs, gt = g.induced(s), g.induced(t)
    if x.graph != gs or y.graph != gt:
        raise InputError("factors do not live on the induced subgraphs of the split")
    if x.monoid != mid or y.monoid != mid:
        raise InputError("factors belong to a different monoid")
    out = Element.zero(mid, g)
    terms: dict = {}
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            k = spec.product_key(g, s, t, kx, ky)
            c = cx * cy
            acc = terms.get(k)
            acc = c if acc is None else acc + c
            if acc:
                terms[k] = acc
            elif k in terms:
                del terms[k]
    out.terms = terms
    return out


def coproduct_component(mid: str, g: Graph, S, T, x: Element) -> TensorElement:
    """The (S, T) coproduct component applied to an element on g."""
    spec = get_monoid(mid)
    s, t = _check_split(g, S, T)
    if x.monoid != mid or x.graph != g:
        raise InputError("element does not live on this graph/monoid")
    out = TensorElement.zero(mid, g.induced(s), g.induced(t))
    terms: dict = {}
    for k, c in x.terms.items():
        res = spec.coproduct_key(g, s, t, k)
        if res is None:
            continue
        lk, rk, cc = res
        c2 = c * cc
        pair = (lk, rk)
        acc = terms.get(pair)
        acc = c2 if acc is None else acc + c2
        if acc:
            terms[pair] = acc
        elif pair in terms:
            del terms[pair]
    out.terms = terms
    return out


def unit_element(mid: str) -> Element:
    """The unit: the empty structure on the empty graph."""
    spec = get_monoid(mid)
    return Element.of(mid, EMPTY_GRAPH, spec.empty_key())


def counit_value(x: Element) -> QTPolynomial:
    """The counit: defined on the empty-graph component only."""
    if x.graph.n != 0:
        raise InputError("counit applies to empty-graph elements only")
    spec = get_monoid(x.monoid)
    return x.coefficient(spec.empty_key())


# ---------------------------------------------------------------- basis change

_BASIS_PAIRS = {
    ("Pi_m", "Pi_p"),
    ("Pi_p", "Pi_m"),
    ("SPi_m", "SPi_p"),
    ("SPi_p", "SPi_m"),
    ("FL_M", "FL_P"),
    ("FL_P", "FL_M"),
    ("Match_M", "Match_P"),
    ("Match_P", "Match_M"),
}


def _partition_m_in_p(partition: VertexPartition) -> list[VertexPartition]:
    # m = sum of p over all refinements.
    return enumerators.partitions_refining(partition)


@lru_cache(maxsize=None)
def _partition_p_in_m(partition: VertexPartition) -> tuple[tuple[VertexPartition, int], ...]:
    # p_pi = m_pi - sum of p_tau over strict refinements tau, recursively.
    acc: dict[VertexPartition, int] = {partition: 1}
    for tau in enumerators.partitions_refining(partition):
        if tau == partition:
            continue
        for sigma, c in _partition_p_in_m(tau):
            acc[sigma] = acc.get(sigma, 0) - c
            if not acc[sigma]:
                del acc[sigma]
    return tuple(sorted(acc.items(), key=lambda kv: str(kv[0])))


def _flats_below(g: Graph, edge_set: frozenset) -> list[frozenset]:
    # Flats of g contained in the flat F are exactly the flats of (V, F).
    sub = Graph(g.vertices, edge_set)
    return enumerators.flats(sub)


@lru_cache(maxsize=None)
def _flat_p_in_m(g: Graph, edge_set: frozenset) -> tuple[tuple[frozenset, int], ...]:
    acc: dict[frozenset, int] = {edge_set: 1}
    for sub in _flats_below(g, edge_set):
        if sub == edge_set:
            continue
        for f, c in _flat_p_in_m(g, sub):
            acc[f] = acc.get(f, 0) - c
            if not acc[f]:
                del acc[f]
    return tuple(sorted(acc.items(), key=lambda kv: sorted(kv[0])))


def basis_change(mid_from: str, mid_to: str, g: Graph, x: Element) -> Element:
    """Rewrite x between the m/p (or M/P) bases of the same family."""
    if (mid_from, mid_to) not in _BASIS_PAIRS:
        raise InputError(f"no basis change from {mid_from} to {mid_to}")
    if x.monoid != mid_from or x.graph != g:
        raise InputError("element does not match the stated source basis")
    src = get_monoid(mid_from)
    dst = get_monoid(mid_to)
    for k in x.terms:
        src.validate_key(g, k)
    out = Element.zero(mid_to, g)
    terms: dict = {}

    def _add(key, c):
        acc = terms.get(key)
        acc = c if acc is None else acc + c
        if acc:
            terms[key] = acc
        elif key in terms:
            del terms[key]

    for k, c in x.terms.items():
        if isinstance(k, (PartitionM, PartitionP)):
            if mid_from.endswith("_m"):
                for tau in _partition_m_in_p(k.partition):
                    _add(dst.key_cls(tau), c)
            else:
                for tau, n in _partition_p_in_m(k.partition):
                    _add(dst.key_cls(tau), c * n)
        else:
            if mid_from.endswith("_M"):
                for f in _flats_below(g, k.edges):
                    _add(dst.key_cls(f), c)
            else:
                for f, n in _flat_p_in_m(g, k.edges):
                    _add(dst.key_cls(f), c * n)
    out.terms = terms
    return out
