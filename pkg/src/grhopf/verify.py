"""Mechanical verification harness.

Every algebraic law the package claims is rechecked here by brute force on
exhaustive corpora of small labeled graphs: bimonoid axioms, antipode method
agreement and convolution identities, (co)commutativity flavors, morphism
axioms and pasted diagrams, complementation functor identities, the
orientation-count/chromatic-polynomial identity, and basis-change round trips.

Checks are grouped into named suites.  `run_suite` returns a
`VerificationReport` holding one `CheckRecord` per (check, monoid, graph)
triple; record order is deterministic for a given (suite, n_max, seed),
including under --jobs parallelism.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .antipode import (
    CLOSED_FORM_IDS,
    ORACLE_GATED_IDS,
    AntipodeCache,
    antipode_closed_form,
    antipode_takeuchi,
)
from .elements import Element
from .enumerators import (
    acyclic_orientations,
    bell_number,
    ordered_bipartitions,
    ordered_tripartitions,
)
from .errors import InputError
from .graphs import Graph, chromatic_value
from .monoids import (
    MONOID_IDS,
    MONOIDS,
    _basis_cached,
    braiding_coeff,
    get_monoid,
)
from .morphisms import DIAGRAMS, MORPHISM_NAMES, apply_path, get_morphism
from .qtpoly import ONE

MAX_CORPUS_N = 5

SUITES = (
    "bimonoid",
    "antipode",
    "commutativity",
    "morphisms",
    "functors",
    "stanley",
    "basis-change",
    "all",
)

# suites whose per-graph cost explodes at n=5; they run on a seeded sample
# of 5-vertex graphs with a per-basis key cap instead of the full 1024
EXPENSIVE_SUITES = frozenset({"bimonoid", "antipode", "commutativity", "morphisms"})
SAMPLE_GRAPHS_5 = 16
KEY_CAP_5 = 8

BASIS_CHANGE_IDS = (
    "Pi_m",
    "Pi_p",
    "SPi_m",
    "SPi_p",
    "FL_M",
    "FL_P",
    "Match_M",
    "Match_P",
)

COMMUTATIVE_FAMILY = (
    "Pi_m",
    "Pi_p",
    "SPi_m",
    "SPi_p",
    "FL_M",
    "FL_P",
    "Match_M",
    "Match_P",
    "E",
)

# sub-monoids whose bases are proper subsets of an ambient basis; closure of
# the structure maps is a claim worth rechecking, not a tautology
CLOSURE_IDS = ("SSigma", "SPi_m", "SPi_p", "Match_M", "Match_P")

COMMUTATIVITY_FLAVORS = (
    "commutative_exact",
    "commutative_plain",
    "cocommutative_exact",
    "cocommutative_plain",
    "disjoint_commutative",
    "join_commutative",
)

# flavors that provably hold on every graph, per monoid
_ALL_FLAVORS = frozenset(COMMUTATIVITY_FLAVORS)
EXPECTED_ALWAYS: dict[str, frozenset[str]] = {
    "L": frozenset({"cocommutative_plain"}),
    "AO": frozenset({"cocommutative_plain", "disjoint_commutative"}),
    "Sigma": frozenset({"cocommutative_plain"}),
    "SSigma": frozenset({"cocommutative_plain"}),
    "Pi_m": _ALL_FLAVORS,
    "Pi_p": _ALL_FLAVORS,
    "SPi_m": _ALL_FLAVORS,
    "SPi_p": _ALL_FLAVORS,
    "FL_M": _ALL_FLAVORS,
    "FL_P": _ALL_FLAVORS,
    "Match_M": _ALL_FLAVORS,
    "Match_P": _ALL_FLAVORS,
    "E": _ALL_FLAVORS,
}

# flavors that fail on some corpus graph; the suite must find a witness
EXPECTED_FAILING: dict[str, frozenset[str]] = {
    mid: _ALL_FLAVORS - flavors for mid, flavors in EXPECTED_ALWAYS.items()
}


@dataclass
class CheckRecord:
    check: str
    monoid: str
    graph: str
    passed: bool
    detail: dict | None = None

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "monoid": self.monoid,
            "graph": self.graph,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    suite: str
    n_max: int
    seed: int
    selection: tuple[str, ...]
    graph_count: int
    records: list[CheckRecord] = field(default_factory=list)
    wall_time_s: float = 0.0

    @property
    def passed_count(self) -> int:
        return sum(1 for r in self.records if r.passed)

    @property
    def failed_count(self) -> int:
        return sum(1 for r in self.records if not r.passed)

    @property
    def ok(self) -> bool:
        return self.failed_count == 0

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    def to_json(self) -> dict:
        return {
            "schema": "grhopf.report/1",
            "suite": self.suite,
            "n_max": self.n_max,
            "seed": self.seed,
            "selection": list(self.selection),
            "graph_count": self.graph_count,
            "records": [r.to_json() for r in self.records],
            "summary": {
                "checks": len(self.records),
                "passed": self.passed_count,
                "failed": self.failed_count,
            },
            "wall_time_s": self.wall_time_s,
        }

    def summary_text(self) -> str:
        # deterministic: never includes timing
        lines = []
        for rec in self.failures():
            graph_one_line = rec.graph.replace("\n", "; ")
            lines.append(
                f"FAIL {rec.check} monoid={rec.monoid or '-'} graph=[{graph_one_line}]"
            )
        verdict = "PASS" if self.ok else "FAIL"
        lines.append(
            f"suite={self.suite} n_max={self.n_max} graphs={self.graph_count} "
            f"checks={len(self.records)} passed={self.passed_count} "
            f"failed={self.failed_count} -> {verdict}"
        )
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# corpora


def corpus(n_max: int) -> list[Graph]:
    """All labeled graphs on vertex sets {v1..vn} for 0 <= n <= n_max."""
    if n_max < 0:
        raise InputError(f"n_max must be nonnegative, got {n_max}")
    if n_max > MAX_CORPUS_N:
        raise InputError(
            f"exhaustive corpus is capped at n_max={MAX_CORPUS_N} "
            f"({2 ** math.comb(MAX_CORPUS_N, 2)} graphs at n={MAX_CORPUS_N}); "
            f"use sampled_graphs for larger sizes"
        )
    graphs = []
    for n in range(n_max + 1):
        names = [f"v{i}" for i in range(1, n + 1)]
        pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
        for mask in range(1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if (mask >> i) & 1]
            graphs.append(Graph(names, edges))
    return graphs


def sampled_graphs(n: int, count: int, seed: int) -> list[Graph]:
    """`count` seeded random graphs on {v1..vn}, edge probability 1/2."""
    if n < 0 or count < 0:
        raise InputError("n and count must be nonnegative")
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(1, n + 1)]
    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    out = []
    for _ in range(count):
        out.append(Graph(names, [p for p in pairs if rng.random() < 0.5]))
    return out


def _capped_basis(mid: str, g: Graph, key_cap: int | None):
    basis = _basis_cached(mid, g)
    if key_cap is not None and len(basis) > key_cap:
        return basis[:key_cap]
    return basis


# ---------------------------------------------------------------------------
# bimonoid axioms


def _tensor_eq(a, b) -> bool:
    # 0-or-1-term tensors as Optional[(left key, right key, coeff)]
    if a is None or b is None:
        return a is None and b is None
    return a[0] == b[0] and a[1] == b[1] and a[2] == b[2]


def _tensor_str(t) -> str:
    if t is None:
        return "0"
    return f"({t[2]}) {t[0].literal()} (x) {t[1].literal()}"


def _assoc_witness(spec, g: Graph, key_cap=None) -> dict | None:
    for a_set, b_set, c_set in ordered_tripartitions(g.vertices):
        ga, gb, gc = g.induced(a_set), g.induced(b_set), g.induced(c_set)
        gab = g.induced(a_set | b_set)
        gbc = g.induced(b_set | c_set)
        for x in _capped_basis(spec.id, ga, key_cap):
            for y in _capped_basis(spec.id, gb, key_cap):
                xy = spec.product_key(gab, a_set, b_set, x, y)
                for z in _capped_basis(spec.id, gc, key_cap):
                    left = spec.product_key(g, a_set | b_set, c_set, xy, z)
                    yz = spec.product_key(gbc, b_set, c_set, y, z)
                    right = spec.product_key(g, a_set, b_set | c_set, x, yz)
                    if left != right:
                        return {
                            "axiom": "associativity",
                            "parts": [sorted(a_set), sorted(b_set), sorted(c_set)],
                            "keys": [x.literal(), y.literal(), z.literal()],
                            "left": left.literal(),
                            "right": right.literal(),
                        }
    return None


def _coassoc_witness(spec, g: Graph, key_cap=None) -> dict | None:
    for a_set, b_set, c_set in ordered_tripartitions(g.vertices):
        gab = g.induced(a_set | b_set)
        gbc = g.induced(b_set | c_set)
        for key in _capped_basis(spec.id, g, key_cap):
            # split off A first, then cut B|C
            first = spec.coproduct_key(g, a_set, b_set | c_set, key)
            path1 = None
            if first is not None:
                ka, kbc, c1 = first
                second = spec.coproduct_key(gbc, b_set, c_set, kbc)
                if second is not None:
                    kb, kc, c2 = second
                    path1 = (ka, kb, kc, c1 * c2)
            # cut C off first, then split A|B
            first = spec.coproduct_key(g, a_set | b_set, c_set, key)
            path2 = None
            if first is not None:
                kab, kc, c1 = first
                second = spec.coproduct_key(gab, a_set, b_set, kab)
                if second is not None:
                    ka, kb, c2 = second
                    path2 = (ka, kb, kc, c1 * c2)
            if (path1 is None) != (path2 is None) or (
                path1 is not None and path1 != path2
            ):
                return {
                    "axiom": "coassociativity",
                    "parts": [sorted(a_set), sorted(b_set), sorted(c_set)],
                    "key": key.literal(),
                    "path_first_then_rest": _triple_str(path1),
                    "path_rest_then_first": _triple_str(path2),
                }
    return None


def _triple_str(t) -> str:
    if t is None:
        return "0"
    ka, kb, kc, c = t
    return f"({c}) {ka.literal()} (x) {kb.literal()} (x) {kc.literal()}"


def _unit_counit_witness(spec, g: Graph, key_cap=None) -> dict | None:
    empty = frozenset()
    full = g.vertex_set
    e_key = spec.empty_key()
    for key in _capped_basis(spec.id, g, key_cap):
        if spec.product_key(g, empty, full, e_key, key) != key:
            return {"axiom": "left_unit", "key": key.literal()}
        if spec.product_key(g, full, empty, key, e_key) != key:
            return {"axiom": "right_unit", "key": key.literal()}
        left = spec.coproduct_key(g, empty, full, key)
        if left is None or left[0] != e_key or left[1] != key or left[2] != ONE:
            return {
                "axiom": "left_counit",
                "key": key.literal(),
                "got": _tensor_str(left),
            }
        right = spec.coproduct_key(g, full, empty, key)
        if right is None or right[0] != key or right[1] != e_key or right[2] != ONE:
            return {
                "axiom": "right_counit",
                "key": key.literal(),
                "got": _tensor_str(right),
            }
    return None


def _compat_witness(spec, g: Graph, key_cap=None) -> dict | None:
    bips = ordered_bipartitions(g.vertices)
    for s_set, t_set in bips:
        gs, gt = g.induced(s_set), g.induced(t_set)
        sb = _capped_basis(spec.id, gs, key_cap)
        tb = _capped_basis(spec.id, gt, key_cap)
        for a_set, b_set in bips:
            ga, gb = g.induced(a_set), g.induced(b_set)
            sa, sb_part = s_set & a_set, s_set & b_set
            ta, tb_part = t_set & a_set, t_set & b_set
            beta = spec.braiding(g, sb_part, ta)
            for x in sb:
                left_x = spec.coproduct_key(gs, sa, sb_part, x)
                for y in tb:
                    prod = spec.product_key(g, s_set, t_set, x, y)
                    lhs = spec.coproduct_key(g, a_set, b_set, prod)
                    rhs = None
                    if left_x is not None:
                        right_y = spec.coproduct_key(gt, ta, tb_part, y)
                        if right_y is not None:
                            xa, xb, c1 = left_x
                            ya, yb, c2 = right_y
                            ka = spec.product_key(ga, sa, ta, xa, ya)
                            kb = spec.product_key(gb, sb_part, tb_part, xb, yb)
                            rhs = (ka, kb, c1 * c2 * beta)
                    if not _tensor_eq(lhs, rhs):
                        return {
                            "axiom": "product_coproduct_compatibility",
                            "product_split": [sorted(s_set), sorted(t_set)],
                            "coproduct_split": [sorted(a_set), sorted(b_set)],
                            "keys": [x.literal(), y.literal()],
                            "coproduct_of_product": _tensor_str(lhs),
                            "braided_exchange": _tensor_str(rhs),
                        }
    return None


def _closure_witness(spec, g: Graph, key_cap=None) -> dict | None:
    # products of basis keys and coproduct factors must land back in the basis
    for s_set, t_set in ordered_bipartitions(g.vertices):
        gs, gt = g.induced(s_set), g.induced(t_set)
        for x in _capped_basis(spec.id, gs, key_cap):
            for y in _capped_basis(spec.id, gt, key_cap):
                prod = spec.product_key(g, s_set, t_set, x, y)
                try:
                    spec.validate_key(g, prod)
                except InputError as exc:
                    return {
                        "axiom": "product_closure",
                        "split": [sorted(s_set), sorted(t_set)],
                        "keys": [x.literal(), y.literal()],
                        "error": str(exc),
                    }
        for key in _capped_basis(spec.id, g, key_cap):
            res = spec.coproduct_key(g, s_set, t_set, key)
            if res is None:
                continue
            lk, rk, _ = res
            try:
                spec.validate_key(gs, lk)
                spec.validate_key(gt, rk)
            except InputError as exc:
                return {
                    "axiom": "coproduct_closure",
                    "split": [sorted(s_set), sorted(t_set)],
                    "key": key.literal(),
                    "error": str(exc),
                }
    return None


def check_bimonoid(mid: str, g: Graph, key_cap: int | None = None) -> CheckRecord:
    """Associativity, coassociativity, (co)unit laws, braided compatibility,
    and (for sub-monoids) closure, on one graph.  One record; the detail
    carries the first failing axiom's counterexample."""
    spec = get_monoid(mid)
    axioms = [
        _assoc_witness,
        _coassoc_witness,
        _unit_counit_witness,
        _compat_witness,
    ]
    if mid in CLOSURE_IDS:
        axioms.append(_closure_witness)
    for fn in axioms:
        witness = fn(spec, g, key_cap)
        if witness is not None:
            return CheckRecord("bimonoid", mid, g.to_text(), False, witness)
    return CheckRecord("bimonoid", mid, g.to_text(), True)


# ---------------------------------------------------------------------------
# antipode checks


def check_antipode(mid: str, g: Graph, key_cap: int | None = None) -> list[CheckRecord]:
    """Recompute the antipode of every basis key by all applicable methods
    and assert they agree; assert both convolution identities; for the
    commutative family assert the antipode is an involution.

    Returns the main `antipode` record plus, for monoids whose closed form
    is oracle-gated, a separate `antipode_closed_form_verdict` record."""
    spec = get_monoid(mid)
    gtext = g.to_text()
    left_cache = AntipodeCache(mid, "left")
    right_cache = AntipodeCache(mid, "right")
    has_closed = mid in CLOSED_FORM_IDS
    gated = mid in ORACLE_GATED_IDS
    closed_ok = True
    closed_witness: dict | None = None
    records: list[CheckRecord] = []

    basis = _capped_basis(mid, g, key_cap)
    tables: dict = {}
    for key in basis:
        reference = antipode_takeuchi(mid, g, key)
        tables[key] = reference
        for name, other in (
            ("milnor-moore-left", left_cache.of(g, key)),
            ("milnor-moore-right", right_cache.of(g, key)),
        ):
            if other != reference:
                records.append(
                    CheckRecord(
                        "antipode",
                        mid,
                        gtext,
                        False,
                        {
                            "law": "method_agreement",
                            "key": key.literal(),
                            "takeuchi": str(reference),
                            name: str(other),
                        },
                    )
                )
                if gated:
                    records.append(
                        CheckRecord(
                            "antipode_closed_form_verdict",
                            mid,
                            gtext,
                            False,
                            {"verdict": "skipped: methods disagree"},
                        )
                    )
                return records
        if has_closed:
            closed = antipode_closed_form(mid, g, key)
            if closed != reference:
                if gated:
                    if closed_ok:
                        closed_ok = False
                        closed_witness = {
                            "key": key.literal(),
                            "takeuchi": str(reference),
                            "closed": str(closed),
                        }
                else:
                    records.append(
                        CheckRecord(
                            "antipode",
                            mid,
                            gtext,
                            False,
                            {
                                "law": "method_agreement",
                                "key": key.literal(),
                                "takeuchi": str(reference),
                                "closed": str(closed),
                            },
                        )
                    )
                    return records

    # convolution: summing mu o (s (x) id) o Delta over all ordered
    # bipartitions gives unit o counit (zero on every nonempty graph)
    if g.n > 0:
        bips = ordered_bipartitions(g.vertices)
        for key in basis:
            for law, cache, s_on_left in (
                ("convolution_left", left_cache, True),
                ("convolution_right", right_cache, False),
            ):
                acc: dict = {}
                for s_set, t_set in bips:
                    res = spec.coproduct_key(g, s_set, t_set, key)
                    if res is None:
                        continue
                    lk, rk, coeff = res
                    if s_on_left:
                        pairs = (
                            (spec.product_key(g, s_set, t_set, sk, rk), sc)
                            for sk, sc in cache.of(g.induced(s_set), lk).terms.items()
                        )
                    else:
                        pairs = (
                            (spec.product_key(g, s_set, t_set, lk, sk), sc)
                            for sk, sc in cache.of(g.induced(t_set), rk).terms.items()
                        )
                    for pk, sc in pairs:
                        cur = acc.get(pk)
                        cur = coeff * sc if cur is None else cur + coeff * sc
                        if cur.is_zero:
                            acc.pop(pk, None)
                        else:
                            acc[pk] = cur
                if acc:
                    leftover = Element.zero(mid, g)
                    leftover.terms = acc
                    records.append(
                        CheckRecord(
                            "antipode",
                            mid,
                            gtext,
                            False,
                            {"law": law, "key": key.literal(), "got": str(leftover)},
                        )
                    )
                    return records

    if mid in COMMUTATIVE_FAMILY:
        for key in basis:
            twice = left_cache.of_element(tables[key])
            if twice != Element.of(mid, g, key):
                records.append(
                    CheckRecord(
                        "antipode",
                        mid,
                        gtext,
                        False,
                        {
                            "law": "involution",
                            "key": key.literal(),
                            "s_of_s": str(twice),
                        },
                    )
                )
                return records

    records.append(CheckRecord("antipode", mid, gtext, True))
    if gated:
        records.append(
            CheckRecord(
                "antipode_closed_form_verdict",
                mid,
                gtext,
                closed_ok,
                closed_witness,
            )
        )
    return records


# ---------------------------------------------------------------------------
# commutativity flavors


def check_commutativity(
    mid: str, g: Graph, key_cap: int | None = None
) -> dict[str, tuple[bool, dict | None]]:
    """Evaluate all six (co)commutativity flavors on one graph.

    Returns {flavor: (holds, witness-or-None)}.  Interpretation against the
    per-monoid expectation tables happens in the suite driver, which also
    aggregates corpus-wide witnesses for the must-fail flavors."""
    spec = get_monoid(mid)
    results: dict[str, tuple[bool, dict | None]] = {}
    comm_exact: dict | None = None
    comm_plain: dict | None = None
    comm_disjoint: dict | None = None
    comm_join: dict | None = None
    cocomm_exact: dict | None = None
    cocomm_plain: dict | None = None
    bips = ordered_bipartitions(g.vertices)

    for s_set, t_set in bips:
        gs, gt = g.induced(s_set), g.induced(t_set)
        crossing = g.crossing_edges(s_set, t_set)
        all_pairs = len(s_set) * len(t_set)
        beta = spec.braiding(g, s_set, t_set)
        sb = _capped_basis(mid, gs, key_cap)
        tb = _capped_basis(mid, gt, key_cap)
        for x in sb:
            for y in tb:
                fwd = spec.product_key(g, s_set, t_set, x, y)
                bwd = spec.product_key(g, t_set, s_set, y, x)
                keys_match = fwd == bwd
                braided_ok = keys_match and beta == ONE
                witness = {
                    "split": [sorted(s_set), sorted(t_set)],
                    "keys": [x.literal(), y.literal()],
                    "forward": fwd.literal(),
                    "backward": bwd.literal(),
                    "braiding": str(beta),
                }
                if comm_exact is None and not braided_ok:
                    comm_exact = witness
                if comm_plain is None and not keys_match:
                    comm_plain = witness
                if comm_disjoint is None and crossing == 0 and not braided_ok:
                    comm_disjoint = witness
                if comm_join is None and crossing == all_pairs and not braided_ok:
                    comm_join = witness
        for key in _capped_basis(mid, g, key_cap):
            fwd = spec.coproduct_key(g, s_set, t_set, key)
            bwd = spec.coproduct_key(g, t_set, s_set, key)
            swapped = None if bwd is None else (bwd[1], bwd[0], bwd[2] * beta)
            plain_fwd = None if fwd is None else (fwd[0], fwd[1])
            plain_swapped = None if bwd is None else (bwd[1], bwd[0])
            witness = {
                "split": [sorted(s_set), sorted(t_set)],
                "key": key.literal(),
                "coproduct": _tensor_str(fwd),
                "braided_swap_of_reverse": _tensor_str(swapped),
            }
            if cocomm_exact is None and not _tensor_eq(fwd, swapped):
                cocomm_exact = witness
            if cocomm_plain is None and plain_fwd != plain_swapped:
                cocomm_plain = witness

    results["commutative_exact"] = (comm_exact is None, comm_exact)
    results["commutative_plain"] = (comm_plain is None, comm_plain)
    results["cocommutative_exact"] = (cocomm_exact is None, cocomm_exact)
    results["cocommutative_plain"] = (cocomm_plain is None, cocomm_plain)
    results["disjoint_commutative"] = (comm_disjoint is None, comm_disjoint)
    results["join_commutative"] = (comm_join is None, comm_join)
    return results


# ---------------------------------------------------------------------------
# morphisms and diagrams


def check_morphism(name: str, g: Graph, key_cap: int | None = None) -> CheckRecord:
    """One morphism, one graph: the induced map must intertwine products and
    coproducts on every route, with deformation parameters specialized away
    whenever the two ends disagree on them."""
    morphism = get_morphism(name)
    gtext = g.to_text()
    bips = ordered_bipartitions(g.vertices)
    for dom_id in sorted(morphism.routes):
        cod_id = morphism.routes[dom_id]
        dom, cod = MONOIDS[dom_id], MONOIDS[cod_id]
        q_one, t_one = morphism.specialization(dom_id)
        for s_set, t_set in bips:
            gs, gt = g.induced(s_set), g.induced(t_set)
            sb = _capped_basis(dom_id, gs, key_cap)
            tb = _capped_basis(dom_id, gt, key_cap)
            for x in sb:
                fx = morphism.map_key(gs, x)
                for y in tb:
                    # products have unit coefficients, so this is key equality
                    mapped = morphism.map_key(g, dom.product_key(g, s_set, t_set, x, y))
                    direct = cod.product_key(g, s_set, t_set, fx, morphism.map_key(gt, y))
                    if mapped != direct:
                        return CheckRecord(
                            "morphism",
                            name,
                            gtext,
                            False,
                            {
                                "law": "product_intertwines",
                                "route": [dom_id, cod_id],
                                "split": [sorted(s_set), sorted(t_set)],
                                "keys": [x.literal(), y.literal()],
                                "map_of_product": mapped.literal(),
                                "product_of_maps": direct.literal(),
                            },
                        )
            for key in _capped_basis(dom_id, g, key_cap):
                res_dom = dom.coproduct_key(g, s_set, t_set, key)
                if res_dom is None:
                    pushed = None
                else:
                    lk, rk, coeff = res_dom
                    pushed = (
                        morphism.map_key(gs, lk),
                        morphism.map_key(gt, rk),
                        coeff.specialize(q_one, t_one),
                    )
                res_cod = cod.coproduct_key(g, s_set, t_set, morphism.map_key(g, key))
                if res_cod is not None:
                    lk, rk, coeff = res_cod
                    res_cod = (lk, rk, coeff.specialize(q_one, t_one))
                if not _tensor_eq(pushed, res_cod):
                    return CheckRecord(
                        "morphism",
                        name,
                        gtext,
                        False,
                        {
                            "law": "coproduct_intertwines",
                            "route": [dom_id, cod_id],
                            "split": [sorted(s_set), sorted(t_set)],
                            "key": key.literal(),
                            "map_then_coproduct": _tensor_str(res_cod),
                            "coproduct_then_map": _tensor_str(pushed),
                        },
                    )
    return CheckRecord("morphism", name, gtext, True)


def check_diagram(diagram_name: str, g: Graph, key_cap: int | None = None) -> CheckRecord:
    """Both composites around one pasted diagram agree on every basis key."""
    for name, dom_id, path_a, path_b in DIAGRAMS:
        if name == diagram_name:
            break
    else:
        raise InputError(f"unknown diagram {diagram_name!r}")
    gtext = g.to_text()
    for key in _capped_basis(dom_id, g, key_cap):
        x = Element.of(dom_id, g, key)
        via_a = apply_path(path_a, dom_id, g, x)
        via_b = apply_path(path_b, dom_id, g, x)
        if via_a != via_b:
            return CheckRecord(
                "diagram",
                diagram_name,
                gtext,
                False,
                {
                    "key": key.literal(),
                    "path": list(path_a),
                    "other_path": list(path_b),
                    "via_path": str(via_a),
                    "via_other_path": str(via_b),
                },
            )
    return CheckRecord("diagram", diagram_name, gtext, True)


# ---------------------------------------------------------------------------
# functor identities, orientation counts, basis changes


def _is_complete(g: Graph) -> bool:
    return len(g.edges) == math.comb(g.n, 2)


def _is_discrete(g: Graph) -> bool:
    return len(g.edges) == 0


def check_functors(mid: str, g: Graph) -> CheckRecord:
    """Complementation identities for one monoid on one graph: the braiding
    swaps its parameters under complement, complement is an involution, and
    on complete (resp. discrete) graphs every structure constant is t-free
    (resp. q-free).  On complete/discrete graphs also recheck the closed
    basis-count identities."""
    spec = get_monoid(mid)
    gtext = g.to_text()
    comp = g.complement()
    if comp.complement() != g:
        return CheckRecord(
            "functors", mid, gtext, False, {"law": "complement_involution"}
        )
    for s_set, t_set in ordered_bipartitions(g.vertices):
        # the full two-parameter braiding statistic, before per-monoid
        # specialization, must swap its parameters under complement
        full_here = braiding_coeff(g, s_set, t_set)
        full_there = braiding_coeff(comp, s_set, t_set)
        if full_there != full_here.swap_qt():
            return CheckRecord(
                "functors",
                mid,
                gtext,
                False,
                {
                    "law": "complement_swaps_parameters",
                    "split": [sorted(s_set), sorted(t_set)],
                    "braiding": str(full_here),
                    "complement_braiding": str(full_there),
                },
            )

    checks: list[tuple[str, bool]] = []
    if _is_complete(g):
        checks.append(("complete_t_free", True))
    if _is_discrete(g):
        checks.append(("discrete_q_free", False))
    for law, want_t_free in checks:
        for s_set, t_set in ordered_bipartitions(g.vertices):
            coeff = spec.braiding(g, s_set, t_set)
            ok = coeff.t_free if want_t_free else coeff.q_free
            if not ok:
                return CheckRecord(
                    "functors",
                    mid,
                    gtext,
                    False,
                    {"law": law, "where": "braiding", "coefficient": str(coeff)},
                )
            for key in _basis_cached(mid, g):
                res = spec.coproduct_key(g, s_set, t_set, key)
                if res is None:
                    continue
                coeff = res[2]
                ok = coeff.t_free if want_t_free else coeff.q_free
                if not ok:
                    return CheckRecord(
                        "functors",
                        mid,
                        gtext,
                        False,
                        {
                            "law": law,
                            "where": "coproduct",
                            "split": [sorted(s_set), sorted(t_set)],
                            "key": key.literal(),
                            "coefficient": str(coeff),
                        },
                    )

    count = len(_basis_cached(mid, g))
    expected: int | None = None
    if _is_complete(g):
        expected = {
            "L": math.factorial(g.n),
            "AO": math.factorial(g.n),
            "SSigma": math.factorial(g.n),
            "FL_M": bell_number(g.n),
            "FL_P": bell_number(g.n),
            "SPi_m": 1,
            "SPi_p": 1,
        }.get(mid)
    if expected is None and _is_discrete(g):
        expected = {
            "AO": 1,
            "SPi_m": bell_number(g.n),
            "SPi_p": bell_number(g.n),
            "FL_M": 1,
            "FL_P": 1,
        }.get(mid)
    if expected is not None and count != expected:
        return CheckRecord(
            "functors",
            mid,
            gtext,
            False,
            {"law": "basis_count", "expected": expected, "got": count},
        )
    return CheckRecord("functors", mid, gtext, True)


def check_stanley(g: Graph) -> CheckRecord:
    """Orientation count equals the chromatic polynomial at -1 up to sign.
    The two sides come from independent algorithms."""
    count = len(acyclic_orientations(g))
    chrom = (-1) ** g.n * chromatic_value(g, -1)
    passed = count == chrom
    detail = None if passed else {"orientations": count, "signed_chromatic": chrom}
    return CheckRecord("stanley", "AO", g.to_text(), passed, detail)


def check_basis_change(mid: str, g: Graph) -> CheckRecord:
    """Round trip through the partner basis is the identity on every key."""
    from .monoids import basis_change

    spec = get_monoid(mid)
    partner = {
        "Pi_m": "Pi_p",
        "Pi_p": "Pi_m",
        "SPi_m": "SPi_p",
        "SPi_p": "SPi_m",
        "FL_M": "FL_P",
        "FL_P": "FL_M",
        "Match_M": "Match_P",
        "Match_P": "Match_M",
    }[mid]
    gtext = g.to_text()
    for key in spec.basis(g):
        x = Element.of(mid, g, key)
        over = basis_change(mid, partner, g, x)
        back = basis_change(partner, mid, g, over)
        if back != x:
            return CheckRecord(
                "basis_change",
                mid,
                gtext,
                False,
                {
                    "key": key.literal(),
                    "partner_basis": partner,
                    "round_trip": str(back),
                },
            )
    return CheckRecord("basis_change", mid, gtext, True)


# ---------------------------------------------------------------------------
# suite driver


def _graph_records(
    suite: str,
    mids: tuple[str, ...],
    morphism_names: tuple[str, ...],
    diagram_names: tuple[str, ...],
    g: Graph,
    key_cap: int | None,
) -> tuple[list[CheckRecord], list[tuple[str, str, dict]]]:
    """All records for one concrete suite on one graph, plus observed
    (monoid, flavor, witness) commutativity failures for corpus aggregation."""
    records: list[CheckRecord] = []
    observed_failures: list[tuple[str, str, dict]] = []
    if suite == "bimonoid":
        for mid in mids:
            records.append(check_bimonoid(mid, g, key_cap))
    elif suite == "antipode":
        for mid in mids:
            records.extend(check_antipode(mid, g, key_cap))
    elif suite == "commutativity":
        for mid in mids:
            flavor_results = check_commutativity(mid, g, key_cap)
            bad = None
            for flavor in sorted(EXPECTED_ALWAYS[mid]):
                holds, witness = flavor_results[flavor]
                if not holds and bad is None:
                    bad = {"flavor": flavor, **(witness or {})}
            records.append(
                CheckRecord(
                    "commutativity",
                    mid,
                    g.to_text(),
                    bad is None,
                    bad
                    if bad is not None
                    else {
                        "holds": sorted(
                            f for f, (ok, _) in flavor_results.items() if ok
                        )
                    },
                )
            )
            for flavor in sorted(EXPECTED_FAILING[mid]):
                holds, witness = flavor_results[flavor]
                if not holds:
                    observed_failures.append((mid, flavor, witness or {}))
    elif suite == "morphisms":
        for name in morphism_names:
            records.append(check_morphism(name, g, key_cap))
        for name in diagram_names:
            records.append(check_diagram(name, g, key_cap))
    elif suite == "functors":
        for mid in mids:
            records.append(check_functors(mid, g))
    elif suite == "stanley":
        records.append(check_stanley(g))
    elif suite == "basis-change":
        for mid in mids:
            if mid in BASIS_CHANGE_IDS:
                records.append(check_basis_change(mid, g))
    else:
        raise InputError(f"unknown concrete suite {suite!r}")
    return records, observed_failures


def _worker(task):
    suite, mids, morphism_names, diagram_names, g, key_cap = task
    return _graph_records(suite, mids, morphism_names, diagram_names, g, key_cap)


def _suite_graphs(
    suite: str, all_graphs: list[Graph], seed: int
) -> list[tuple[Graph, int | None]]:
    """The (graph, key cap) work list for one concrete suite.

    Expensive suites keep every graph on at most 4 vertices but replace the
    1024 five-vertex graphs by a seeded sample with a per-basis key cap."""
    if suite in EXPENSIVE_SUITES:
        small = [g for g in all_graphs if g.n <= 4]
        big = [g for g in all_graphs if g.n >= 5]
        tasks: list[tuple[Graph, int | None]] = [(g, None) for g in small]
        if big:
            rng = random.Random(seed)
            chosen = (
                big
                if len(big) <= SAMPLE_GRAPHS_5
                else rng.sample(big, SAMPLE_GRAPHS_5)
            )
            tasks.extend((g, KEY_CAP_5) for g in chosen)
        return tasks
    return [(g, None) for g in all_graphs]


def run_suite(
    suite: str,
    n_max: int,
    monoids: list[str] | None = None,
    seed: int = 0,
    jobs: int = 1,
    samples6: int = 0,
) -> VerificationReport:
    """Run one named suite (or "all") over the exhaustive corpus.

    `monoids` filters which monoids (and, for the morphisms suite, which
    morphisms by domain) are exercised.  `samples6` appends that many seeded
    random 6-vertex graphs to the stanley suite's corpus.  `jobs` > 1
    distributes graphs over worker processes; record order is identical to
    the serial run."""
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    if jobs < 1:
        raise InputError(f"jobs must be positive, got {jobs}")
    if samples6 < 0:
        raise InputError(f"samples6 must be nonnegative, got {samples6}")
    if monoids is None:
        mids = MONOID_IDS
    else:
        for mid in monoids:
            get_monoid(mid)
        seen = set()
        mids = tuple(m for m in monoids if not (m in seen or seen.add(m)))
        if not mids:
            raise InputError("empty monoid selection")
    selected = frozenset(mids)
    morphism_names = tuple(
        name
        for name in MORPHISM_NAMES
        if monoids is None or any(d in selected for d in get_morphism(name).routes)
    )
    diagram_names = tuple(
        name for name, dom, _, _ in DIAGRAMS if monoids is None or dom in selected
    )

    start = time.perf_counter()
    base_graphs = corpus(n_max)
    concrete = [s for s in SUITES if s != "all"] if suite == "all" else [suite]

    tasks: list[tuple[str, tuple, tuple, tuple, Graph, int | None]] = []
    for sub in concrete:
        graphs = _suite_graphs(sub, base_graphs, seed)
        if sub == "stanley" and samples6 > 0:
            graphs = graphs + [(g, None) for g in sampled_graphs(6, samples6, seed)]
        for g, cap in graphs:
            tasks.append((sub, mids, morphism_names, diagram_names, g, cap))

    records: list[CheckRecord] = []
    observed: list[tuple[str, str, dict]] = []
    if jobs == 1 or len(tasks) <= 1:
        results = map(_worker, tasks)
    else:
        executor = ProcessPoolExecutor(max_workers=jobs)
        try:
            results = list(executor.map(_worker, tasks, chunksize=8))
        finally:
            executor.shutdown()
    for recs, obs in results:
        records.extend(recs)
        observed.extend(obs)

    # corpus-level witness records: flavors expected to fail must actually
    # fail somewhere, provided the corpus contains graphs that can show it
    if ("commutativity" in concrete) and any(g.n >= 2 for g in base_graphs):
        found: dict[tuple[str, str], dict] = {}
        for mid, flavor, witness in observed:
            found.setdefault((mid, flavor), witness)
        for mid in mids:
            for flavor in sorted(EXPECTED_FAILING[mid]):
                witness = found.get((mid, flavor))
                records.append(
                    CheckRecord(
                        "commutativity_witness",
                        mid,
                        "",
                        witness is not None,
                        {"flavor": flavor, **(witness or {})}
                        if witness is not None
                        else {
                            "flavor": flavor,
                            "error": "no failing witness found in corpus",
                        },
                    )
                )

    graph_count = len(base_graphs) + (samples6 if "stanley" in concrete else 0)
    return VerificationReport(
        suite=suite,
        n_max=n_max,
        seed=seed,
        selection=mids,
        graph_count=graph_count,
        records=records,
        wall_time_s=time.perf_counter() - start,
    )
