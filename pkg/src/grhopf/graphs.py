"""Finite simple graphs with labeled vertices, and set partitions of labels.

Vertices are distinct nonempty strings kept in declaration order; edges are
unordered pairs stored as lexicographically sorted 2-tuples.  All derived
canonical forms (blocks, serializations, quotient labels) use lexicographic
label order, so equal graphs serialize identically.

The text format, one declaration per line::

    # comment
    v a
    v b
    e a b

Duplicate vertices or edges, loops, and undeclared endpoints are hard parse
errors carrying a line/column position.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import GraphParseError, InputError


def edge_pair(u: str, v: str) -> tuple[str, str]:
    """Canonical undirected edge: sorted endpoint pair, loops rejected."""
    if u == v:
        raise InputError(f"loop at {u!r}")
    return (u, v) if u < v else (v, u)


class Graph:
    __slots__ = ("vertices", "edges", "_vset", "_hash")

    def __init__(self, vertices, edges=()):
        vset = set()
        for v in vertices:
            if not isinstance(v, str) or not v or any(ch.isspace() for ch in v):
                raise InputError(f"bad vertex label {v!r}")
            if v in vset:
                raise InputError(f"duplicate vertex {v!r}")
            vset.add(v)
        es = set()
        for e in edges:
            u, v = e
            if u not in vset or v not in vset:
                raise InputError(f"edge endpoint not a vertex: {e!r}")
            es.add(edge_pair(u, v))
        # a graph is its vertex set plus edge set; the listing order in which
        # vertices arrived is presentation only, so canonicalize it away
        self.vertices = tuple(sorted(vset))
        self.edges = frozenset(es)
        self._vset = frozenset(vset)
        self._hash = hash((self.vertices, self.edges))

    # ------------------------------------------------------------ basics

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset:
        return self._vset

    def has_edge(self, u, v) -> bool:
        return edge_pair(u, v) in self.edges

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        es = ",".join(f"{u}{v}" for u, v in sorted(self.edges))
        return f"Graph({','.join(self.vertices)};{es})"

    # ------------------------------------------------------------ operations

    def induced(self, subset) -> "Graph":
        s = frozenset(subset)
        bad = s - self._vset
        if bad:
            raise InputError(f"not vertices of this graph: {sorted(bad)}")
        return _induced(self, s)

    def complement(self) -> "Graph":
        return _complement(self)

    def quotient(self, partition: "VertexPartition") -> "Graph":
        """Merge each block to one vertex labeled by its sorted concatenation.

        Edges are set-semantic: parallel edges collapse, internal edges drop.
        """
        if partition.ground() != self._vset:
            raise InputError("partition does not cover the vertex set")
        label = {}
        for block in partition.blocks:
            bl = "".join(block)
            for v in block:
                label[v] = bl
        new_vertices = sorted({label[v] for v in self.vertices})
        new_edges = set()
        for u, v in self.edges:
            if label[u] != label[v]:
                new_edges.add(edge_pair(label[u], label[v]))
        return Graph(new_vertices, new_edges)

    def crossing_edges(self, S, T) -> int:
        """Number of edges with one endpoint in S and the other in T."""
        s, t = frozenset(S), frozenset(T)
        if s & t:
            raise InputError("S and T overlap")
        bad = (s | t) - self._vset
        if bad:
            raise InputError(f"not vertices of this graph: {sorted(bad)}")
        count = 0
        for u, v in self.edges:
            if (u in s and v in t) or (v in s and u in t):
                count += 1
        return count

    # ------------------------------------------------------------ text format

    def to_text(self) -> str:
        lines = [f"v {v}" for v in self.vertices]
        lines += [f"e {u} {v}" for u, v in sorted(self.edges)]
        return "\n".join(lines) + ("\n" if lines else "")

    @staticmethod
    def from_text(text: str) -> "Graph":
        vertices: list[str] = []
        vset: set[str] = set()
        edges: set[tuple[str, str]] = set()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0]
            if not line.strip():
                continue
            tokens = line.split()
            col = raw.index(tokens[0]) + 1
            kind = tokens[0]
            if kind == "v":
                if len(tokens) != 2:
                    raise GraphParseError("expected: v <label>", lineno, col)
                v = tokens[1]
                if v in vset:
                    raise GraphParseError(f"duplicate vertex {v!r}", lineno, col)
                vertices.append(v)
                vset.add(v)
            elif kind == "e":
                if len(tokens) != 3:
                    raise GraphParseError("expected: e <a> <b>", lineno, col)
                a, b = tokens[1], tokens[2]
                if a == b:
                    raise GraphParseError(f"loop at {a!r}", lineno, col)
                for x in (a, b):
                    if x not in vset:
                        raise GraphParseError(f"undeclared endpoint {x!r}", lineno, col)
                e = edge_pair(a, b)
                if e in edges:
                    raise GraphParseError(f"duplicate edge {a!r} {b!r}", lineno, col)
                edges.add(e)
            else:
                raise GraphParseError(f"unknown declaration {kind!r}", lineno, col)
        return Graph(vertices, edges)


@lru_cache(maxsize=None)
def _induced(g: Graph, s: frozenset) -> Graph:
    return Graph(
        (v for v in g.vertices if v in s),
        (e for e in g.edges if e[0] in s and e[1] in s),
    )


@lru_cache(maxsize=None)
def _complement(g: Graph) -> Graph:
    vs = sorted(g.vertices)
    non_edges = [
        (vs[i], vs[j])
        for i in range(len(vs))
        for j in range(i + 1, len(vs))
        if (vs[i], vs[j]) not in g.edges
    ]
    return Graph(g.vertices, non_edges)


def complete_graph(labels) -> Graph:
    vs = sorted(labels)
    return Graph(
        labels, [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]
    )


def discrete_graph(labels) -> Graph:
    return Graph(labels, ())


# ---------------------------------------------------------------- partitions


class VertexPartition:
    """Set partition of a label set: sorted blocks of sorted labels."""

    __slots__ = ("blocks", "_hash")

    def __init__(self, blocks):
        seen: set[str] = set()
        canon = []
        for b in blocks:
            bb = tuple(sorted(b))
            if not bb:
                raise InputError("empty block")
            for v in bb:
                if v in seen:
                    raise InputError(f"label {v!r} appears in two blocks")
                seen.add(v)
            canon.append(bb)
        canon.sort()
        self.blocks = tuple(canon)
        self._hash = hash(self.blocks)

    @staticmethod
    def singletons(labels) -> "VertexPartition":
        return VertexPartition([(v,) for v in labels])

    def ground(self) -> frozenset:
        return frozenset(v for b in self.blocks for v in b)

    def restrict(self, subset) -> "VertexPartition":
        s = frozenset(subset)
        return VertexPartition(
            [bb for b in self.blocks if (bb := tuple(v for v in b if v in s))]
        )

    def union(self, other: "VertexPartition") -> "VertexPartition":
        if self.ground() & other.ground():
            raise InputError("ground sets overlap")
        return VertexPartition(self.blocks + other.blocks)

    def refines(self, other: "VertexPartition") -> bool:
        if self.ground() != other.ground():
            raise InputError("ground sets differ")
        where = {v: i for i, b in enumerate(other.blocks) for v in b}
        return all(len({where[v] for v in b}) == 1 for b in self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, VertexPartition) and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __str__(self):
        return "/".join(",".join(b) for b in self.blocks) if self.blocks else "()"

    def __repr__(self):
        return f"VertexPartition({self})"


def components_partition(vertices, edges) -> VertexPartition:
    """Connected components of (vertices, edges) as a partition."""
    vs = list(vertices)
    vset = set(vs)
    parent = {v: v for v in vs}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        if u not in vset or v not in vset:
            raise InputError(f"edge endpoint not a vertex: {(u, v)!r}")
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[str, list[str]] = {}
    for v in vs:
        groups.setdefault(find(v), []).append(v)
    return VertexPartition(groups.values())


# ---------------------------------------------------------------- chromatic


@lru_cache(maxsize=None)
def chromatic_polynomial(g: Graph) -> tuple[int, ...]:
    """Coefficients of the proper-coloring counting polynomial, index = power.

    Deletion-contraction with set-semantic contraction; independent of any
    orientation enumeration, so it can serve as a counting oracle.
    """
    if not g.edges:
        return (0,) * g.n + (1,)
    e = min(g.edges)
    deleted = Graph(g.vertices, g.edges - {e})
    merged = g.quotient(
        VertexPartition([set(e)] + [(v,) for v in g.vertices if v not in e])
    )
    a = chromatic_polynomial(deleted)
    b = chromatic_polynomial(merged)
    size = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)
    )


def chromatic_value(g: Graph, x: int) -> int:
    coeffs = chromatic_polynomial(g)
    total = 0
    for c in reversed(coeffs):
        total = total * x + c
    return total
