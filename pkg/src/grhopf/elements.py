"""Free Z[q,t]-modules over basis keys, attached to a graph component.

An Element is a formal linear combination of keys of one monoid's basis over
one graph; a TensorElement is the same over pairs of keys on a pair of
induced subgraphs.  Zero coefficients are dropped on construction, so
equality of term maps is equality of elements.  Arithmetic on mismatched
contexts (monoid or graph differs) is an input error.
"""

from __future__ import annotations

from .errors import InputError
from .graphs import Graph
from .keys import BasisKey, key_from_json
from .qtpoly import QTPolynomial


def _coeff(c) -> QTPolynomial:
    if isinstance(c, QTPolynomial):
        return c
    if isinstance(c, int):
        return QTPolynomial.const(c)
    raise InputError(f"bad coefficient {c!r}")


def _merged(pairs):
    data: dict = {}
    for k, c in pairs:
        c = _coeff(c)
        if not c:
            continue
        acc = data.get(k)
        acc = c if acc is None else acc + c
        if acc:
            data[k] = acc
        elif k in data:
            del data[k]
    return data


class Element:
    __slots__ = ("monoid", "graph", "terms")

    def __init__(self, monoid: str, graph: Graph, terms=()):
        self.monoid = monoid
        self.graph = graph
        self.terms = _merged(terms.items() if isinstance(terms, dict) else terms)

    @staticmethod
    def zero(monoid: str, graph: Graph) -> "Element":
        return Element(monoid, graph)

    @staticmethod
    def of(monoid: str, graph: Graph, key: BasisKey, coeff=1) -> "Element":
        return Element(monoid, graph, [(key, coeff)])

    # ------------------------------------------------------------ arithmetic

    def _check_context(self, other: "Element"):
        if self.monoid != other.monoid or self.graph != other.graph:
            raise InputError(
                f"context mismatch: {self.monoid} on {self.graph!r} vs "
                f"{other.monoid} on {other.graph!r}"
            )

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._check_context(other)
        out = Element.zero(self.monoid, self.graph)
        data = dict(self.terms)
        for k, c in other.terms.items():
            acc = data.get(k)
            acc = c if acc is None else acc + c
            if acc:
                data[k] = acc
            elif k in data:
                del data[k]
        out.terms = data
        return out

    def __sub__(self, other: "Element") -> "Element":
        return self + other.scale(-1)

    def __neg__(self) -> "Element":
        return self.scale(-1)

    def scale(self, c) -> "Element":
        c = _coeff(c)
        out = Element.zero(self.monoid, self.graph)
        if c:
            out.terms = {k: v for k, v in ((k, v * c) for k, v in self.terms.items()) if v}
        return out

    def __rmul__(self, c) -> "Element":
        return self.scale(c)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.monoid == other.monoid
            and self.graph == other.graph
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key: BasisKey) -> QTPolynomial:
        return self.terms.get(key, QTPolynomial.zero())

    def specialize(self, q_one: bool = False, t_one: bool = False) -> "Element":
        return Element(
            self.monoid,
            self.graph,
            ((k, c.specialize(q_one, t_one)) for k, c in self.terms.items()),
        )

    # ------------------------------------------------------------ rendering

    def items(self):
        """Terms in canonical order (sorted by key literal)."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].literal())

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) {k.literal()}" for k, c in self.items())

    def __repr__(self):
        return f"Element[{self.monoid}]({self})"

    def to_json(self):
        return {
            "monoid": self.monoid,
            "graph": self.graph.to_text(),
            "terms": [
                {"key": k.to_json(), "coeff": c.to_json()} for k, c in self.items()
            ],
        }

    @staticmethod
    def from_json(obj) -> "Element":
        return Element(
            obj["monoid"],
            Graph.from_text(obj["graph"]),
            (
                (key_from_json(t["key"]), QTPolynomial.from_json(t["coeff"]))
                for t in obj["terms"]
            ),
        )


class TensorElement:
    __slots__ = ("monoid", "left_graph", "right_graph", "terms")

    def __init__(self, monoid: str, left_graph: Graph, right_graph: Graph, terms=()):
        self.monoid = monoid
        self.left_graph = left_graph
        self.right_graph = right_graph
        self.terms = _merged(terms.items() if isinstance(terms, dict) else terms)

    @staticmethod
    def zero(monoid, left_graph, right_graph) -> "TensorElement":
        return TensorElement(monoid, left_graph, right_graph)

    def _check_context(self, other: "TensorElement"):
        if (
            self.monoid != other.monoid
            or self.left_graph != other.left_graph
            or self.right_graph != other.right_graph
        ):
            raise InputError("tensor context mismatch")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_context(other)
        out = TensorElement.zero(self.monoid, self.left_graph, self.right_graph)
        data = dict(self.terms)
        for k, c in other.terms.items():
            acc = data.get(k)
            acc = c if acc is None else acc + c
            if acc:
                data[k] = acc
            elif k in data:
                del data[k]
        out.terms = data
        return out

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-1)

    def scale(self, c) -> "TensorElement":
        c = _coeff(c)
        out = TensorElement.zero(self.monoid, self.left_graph, self.right_graph)
        if c:
            out.terms = {k: v for k, v in ((k, v * c) for k, v in self.terms.items()) if v}
        return out

    def __rmul__(self, c) -> "TensorElement":
        return self.scale(c)

    def swapped(self) -> "TensorElement":
        """Plain tensor swap: x (x) y -> y (x) x, graphs exchanged."""
        return TensorElement(
            self.monoid,
            self.right_graph,
            self.left_graph,
            (((r, l), c) for (l, r), c in self.terms.items()),
        )

    def specialize(self, q_one: bool = False, t_one: bool = False) -> "TensorElement":
        return TensorElement(
            self.monoid,
            self.left_graph,
            self.right_graph,
            ((k, c.specialize(q_one, t_one)) for k, c in self.terms.items()),
        )

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.monoid == other.monoid
            and self.left_graph == other.left_graph
            and self.right_graph == other.right_graph
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(
            self.terms.items(), key=lambda kv: (kv[0][0].literal(), kv[0][1].literal())
        )

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c}) {l.literal()} (x) {r.literal()}" for (l, r), c in self.items()
        )

    def __repr__(self):
        return f"TensorElement[{self.monoid}]({self})"

    def to_json(self):
        return {
            "monoid": self.monoid,
            "left_graph": self.left_graph.to_text(),
            "right_graph": self.right_graph.to_text(),
            "terms": [
                {"left": l.to_json(), "right": r.to_json(), "coeff": c.to_json()}
                for (l, r), c in self.items()
            ],
        }


def combine(a: Element, b: Element, ca=1, cb=1) -> Element:
    """ca*a + cb*b in one context."""
    return a.scale(ca) + b.scale(cb)


def linear_extend(f, x: Element, empty=None):
    """Extend a key-level map linearly: sum of coeff * f(key).

    f maps a BasisKey to an Element or TensorElement.  For the zero input the
    target space is unknowable, so `empty` supplies the zero of the codomain;
    without it the zero input maps to itself.
    """
    acc = empty
    for k, c in x.terms.items():
        piece = f(k).scale(c)
        acc = piece if acc is None else acc + piece
    if acc is None:
        return x
    return acc
