"""Exact arithmetic in Z[q, t], the coefficient ring of every structure map.

A polynomial is stored as a map from (q-exponent, t-exponent) to a nonzero
integer coefficient; the zero polynomial is the empty map.  Exponents are
nonnegative.  Python integers keep every coefficient exact at any size.
Instances are immutable and hash-consistent, so they can key dicts and be
compared for exact equality.
"""

from __future__ import annotations


class QTPolynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (qe, te), c in items:
            if qe < 0 or te < 0:
                raise ValueError("exponents must be nonnegative")
            if not c:
                continue
            key = (qe, te)
            acc = data.get(key, 0) + c
            if acc:
                data[key] = acc
            elif key in data:
                del data[key]
        self._terms = data
        self._hash = None

    # ------------------------------------------------------------ constructors

    @staticmethod
    def zero() -> "QTPolynomial":
        return _ZERO

    @staticmethod
    def one() -> "QTPolynomial":
        return _ONE

    @staticmethod
    def const(c: int) -> "QTPolynomial":
        if c == 0:
            return _ZERO
        if c == 1:
            return _ONE
        return QTPolynomial([((0, 0), c)])

    @staticmethod
    def monomial(qe: int, te: int, c: int = 1) -> "QTPolynomial":
        return QTPolynomial([((qe, te), c)])

    # ------------------------------------------------------------ inspection

    def terms(self):
        """Canonical term list: ((qe, te), coeff) sorted by exponent pair."""
        return tuple(sorted(self._terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def q_free(self) -> bool:
        return all(qe == 0 for (qe, _te) in self._terms)

    @property
    def t_free(self) -> bool:
        return all(te == 0 for (_qe, te) in self._terms)

    def constant_value(self) -> int:
        """The integer value, if the polynomial is constant."""
        if not self._terms:
            return 0
        if set(self._terms) == {(0, 0)}:
            return self._terms[(0, 0)]
        raise ValueError(f"not a constant polynomial: {self}")

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, QTPolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == QTPolynomial.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms())
        return self._hash

    # ------------------------------------------------------------ arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, QTPolynomial):
            return other
        if isinstance(other, int):
            return QTPolynomial.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        data = dict(self._terms)
        for k, c in o._terms.items():
            acc = data.get(k, 0) + c
            if acc:
                data[k] = acc
            elif k in data:
                del data[k]
        out = QTPolynomial.__new__(QTPolynomial)
        out._terms = data
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = QTPolynomial.__new__(QTPolynomial)
        out._terms = {k: -c for k, c in self._terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return _ZERO
        data = {}
        for (q1, t1), c1 in self._terms.items():
            for (q2, t2), c2 in o._terms.items():
                k = (q1 + q2, t1 + t2)
                acc = data.get(k, 0) + c1 * c2
                if acc:
                    data[k] = acc
                elif k in data:
                    del data[k]
        out = QTPolynomial.__new__(QTPolynomial)
        out._terms = data
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        acc = _ONE
        for _ in range(n):
            acc = acc * self
        return acc

    # ------------------------------------------------------------ maps

    def evaluate(self, q_value, t_value):
        """Value at a point; exact for int/Fraction arguments."""
        total = 0
        for (qe, te), c in self._terms.items():
            total += c * q_value**qe * t_value**te
        return total

    def specialize(self, q_one: bool = False, t_one: bool = False) -> "QTPolynomial":
        """Substitute q=1 and/or t=1, staying inside Z[q, t]."""
        if not (q_one or t_one):
            return self
        return QTPolynomial(
            (((0 if q_one else qe), (0 if t_one else te)), c)
            for (qe, te), c in self._terms.items()
        )

    def swap_qt(self) -> "QTPolynomial":
        """The image under exchanging q and t."""
        return QTPolynomial((((te, qe), c) for (qe, te), c in self._terms.items()))

    # ------------------------------------------------------------ serialization

    def to_json(self):
        """Sorted [q-exponent, t-exponent, coefficient] triples."""
        return [[qe, te, c] for (qe, te), c in self.terms()]

    @staticmethod
    def from_json(data) -> "QTPolynomial":
        return QTPolynomial((((qe, te), c) for qe, te, c in data))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (qe, te), c in sorted(self._terms.items(), reverse=True):
            body = "*".join(
                ([f"q^{qe}" if qe > 1 else "q"] if qe else [])
                + ([f"t^{te}" if te > 1 else "t"] if te else [])
            )
            if not body:
                frag = str(abs(c))
            elif abs(c) == 1:
                frag = body
            else:
                frag = f"{abs(c)}*{body}"
            if not parts:
                parts.append(frag if c > 0 else f"-{frag}")
            else:
                parts.append(f"+ {frag}" if c > 0 else f"- {frag}")
        return " ".join(parts)

    def __repr__(self):
        return f"QTPolynomial({self})"


_ZERO = QTPolynomial()
_ONE = QTPolynomial([((0, 0), 1)])

ZERO = _ZERO
ONE = _ONE
Q = QTPolynomial.monomial(1, 0)
T = QTPolynomial.monomial(0, 1)
