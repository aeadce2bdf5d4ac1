"""The named structure-preserving maps between the thirteen monoids.

Each map sends a basis key to a single basis key with coefficient one and
extends linearly.  A map may serve several source bases (the sub-partition
inclusion works in both the m and p bases), so a morphism carries a route
table from source monoid id to target monoid id.

A morphism respects products and coproducts after the deformation
parameters not shared by both ends are set to one: q survives only if both
ends deform along edges, t only if both deform along non-edges.  The
verifier uses `specialization(...)` for exactly that comparison.
"""

from __future__ import annotations

from .elements import Element
from .errors import InputError
from .graphs import Graph, components_partition
from .keys import (
    AcyclicOrientation,
    FlatM,
    PartitionM,
    PartitionP,
    SetCompositionKey,
    UnitKey,
)
from .monoids import MONOIDS, get_monoid


class Morphism:
    __slots__ = ("name", "routes", "_key_map")

    def __init__(self, name: str, routes: dict[str, str], key_map):
        self.name = name
        self.routes = dict(routes)
        self._key_map = key_map

    def codomain(self, mid_from: str) -> str:
        if mid_from not in self.routes:
            raise InputError(
                f"{self.name} does not apply to {mid_from}; "
                f"sources: {', '.join(sorted(self.routes))}"
            )
        return self.routes[mid_from]

    def map_key(self, g: Graph, key):
        return self._key_map(g, key)

    def specialization(self, mid_from: str) -> tuple[bool, bool]:
        """(set q to 1?, set t to 1?) for the structure-map comparison."""
        dom = get_monoid(mid_from)
        cod = get_monoid(self.codomain(mid_from))
        return (not (dom.uses_q and cod.uses_q), not (dom.uses_t and cod.uses_t))


def _order_to_composition(g, key):
    return SetCompositionKey((v,) for v in key.seq)


def _composition_identity(g, key):
    return key


def _order_to_orientation(g, key):
    pos = {v: i for i, v in enumerate(key.seq)}
    return AcyclicOrientation(
        (u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges
    )


def _composition_to_orientation(g, key):
    pos = {v: i for i, b in enumerate(key.blocks) for v in b}
    arcs = []
    for u, v in g.edges:
        if pos[u] == pos[v]:
            raise InputError(
                f"edge {u}-{v} lies inside a block; key is not stable"
            )
        arcs.append((u, v) if pos[u] < pos[v] else (v, u))
    return AcyclicOrientation(arcs)


def _to_unit(g, key):
    return UnitKey()


def _composition_to_partition(g, key):
    return PartitionM(key.blocks)


def _partition_identity(g, key):
    return key


def _flat_to_partition(g, key):
    return PartitionP(components_partition(g.vertices, key.edges))


def _partition_to_flat(g, key):
    where = {v: i for i, b in enumerate(key.partition.blocks) for v in b}
    return FlatM(e for e in g.edges if where[e[0]] == where[e[1]])


def _unit_to_flat(g, key):
    return FlatM(())


MORPHISMS: dict[str, Morphism] = {
    m.name: m
    for m in (
        Morphism("iota_L_SSigma", {"L": "SSigma"}, _order_to_composition),
        Morphism("iota_SSigma_Sigma", {"SSigma": "Sigma"}, _composition_identity),
        Morphism("pi_arrow_L", {"L": "AO"}, _order_to_orientation),
        Morphism("pi_arrow_SSigma", {"SSigma": "AO"}, _composition_to_orientation),
        Morphism("pi_abelianize", {"L": "E"}, _to_unit),
        Morphism("pi_AO_E", {"AO": "E"}, _to_unit),
        Morphism("pi_Sigma_Pi", {"Sigma": "Pi_m"}, _composition_to_partition),
        Morphism("pi_SSigma_SPi", {"SSigma": "SPi_m"}, _composition_to_partition),
        Morphism(
            "iota_SPi_Pi", {"SPi_m": "Pi_m", "SPi_p": "Pi_p"}, _partition_identity
        ),
        Morphism("iota_FL_Pi", {"FL_P": "Pi_p"}, _flat_to_partition),
        Morphism("phi_Pi_FL", {"Pi_m": "FL_M"}, _partition_to_flat),
        Morphism("rho_SPi_E", {"SPi_m": "E"}, _to_unit),
        Morphism("iota_E_FL", {"E": "FL_M"}, _unit_to_flat),
    )
}

MORPHISM_NAMES = tuple(MORPHISMS)

# Composite identities the verifier pastes together.  Each entry compares
# two morphism paths out of one source monoid; the private direct map below
# closes the order-to-composition triangle.
_DIRECT_ORDER_TO_SIGMA = Morphism(
    "_iota_L_Sigma", {"L": "Sigma"}, _order_to_composition
)

DIAGRAMS: tuple[tuple[str, str, tuple, tuple], ...] = (
    ("order_composition_triangle", "L",
     ("iota_L_SSigma", "iota_SSigma_Sigma"), ("_iota_L_Sigma",)),
    ("order_orientation_triangle", "L",
     ("iota_L_SSigma", "pi_arrow_SSigma"), ("pi_arrow_L",)),
    ("orientation_counting_triangle", "L",
     ("pi_arrow_L", "pi_AO_E"), ("pi_abelianize",)),
    ("partition_flat_square", "SPi_m",
     ("iota_SPi_Pi", "phi_Pi_FL"), ("rho_SPi_E", "iota_E_FL")),
    ("composition_partition_square", "SSigma",
     ("pi_SSigma_SPi", "iota_SPi_Pi"), ("iota_SSigma_Sigma", "pi_Sigma_Pi")),
    ("counting_map_factorization", "L",
     ("iota_L_SSigma", "pi_SSigma_SPi", "rho_SPi_E"), ("pi_abelianize",)),
)


def get_morphism(name: str) -> Morphism:
    if name == "_iota_L_Sigma":
        return _DIRECT_ORDER_TO_SIGMA
    if name not in MORPHISMS:
        raise InputError(
            f"unknown morphism {name!r}; choose from {', '.join(MORPHISM_NAMES)}"
        )
    return MORPHISMS[name]


def morphism_apply(name: str, g: Graph, x: Element) -> Element:
    """Apply a named morphism to an element, validating the route."""
    f = get_morphism(name)
    cod = f.codomain(x.monoid)
    if x.graph != g:
        raise InputError("element does not live on the stated graph")
    dom_spec = MONOIDS[x.monoid]
    for k in x.terms:
        dom_spec.validate_key(g, k)
    out = Element.zero(cod, g)
    terms: dict = {}
    for k, c in x.terms.items():
        nk = f.map_key(g, k)
        acc = terms.get(nk)
        acc = c if acc is None else acc + c
        if acc:
            terms[nk] = acc
        elif nk in terms:
            del terms[nk]
    out.terms = terms
    return out


def apply_path(path: tuple[str, ...], mid_from: str, g: Graph, x: Element) -> Element:
    """Compose morphisms left to right along a route starting at mid_from."""
    cur = x
    for name in path:
        cur = morphism_apply(name, g, cur)
    return cur
