"""Acceptance gate: the headline exactness claims, each timed and printed.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.  Every check is exact integer/polynomial arithmetic; the time
budgets bound the full computation including any alternating-sum route.
"""

import time

import pytest

from grhopf import (
    Graph,
    METHODS,
    QTPolynomial,
    TensorElement,
    antipode,
    coproduct_component,
    get_monoid,
    make_element,
    morphism_apply,
    run_suite,
)

SEVEN_VERTICES = ("f", "u", "n", "m", "a", "t", "h")
SEVEN_EDGES = (
    ("f", "u"),
    ("f", "n"),
    ("u", "n"),
    ("m", "a"),
    ("a", "t"),
    ("t", "h"),
    ("m", "h"),
    ("a", "n"),
    ("m", "u"),
    ("a", "u"),
)


def seven_vertex_graph():
    return Graph(SEVEN_VERTICES, SEVEN_EDGES)


def _report(num, label, elapsed, budget):
    print(f"ACCEPTANCE {num} PASS ({elapsed:.2f}s / budget {budget:.0f}s): {label}")
    assert elapsed < budget, f"criterion {num} exceeded its {budget}s budget"


def test_criterion_1_orientation_antipode_seven_vertices():
    budget, start = 30.0, time.perf_counter()
    g = seven_vertex_graph()
    spec = get_monoid("AO")
    key = spec.parse_key("f>u,f>n,u>n,m>a,a>t,t>h,m>h,a>n,m>u,a>u")
    reverse = spec.parse_key("u>f,n>f,n>u,a>m,t>a,h>t,h>m,n>a,u>m,u>a")
    want = make_element("AO", g, reverse, QTPolynomial.monomial(10, 0, -1))
    for method in METHODS:
        assert antipode("AO", g, key, method) == want, method
    _report(
        1,
        "7-vertex orientation antipode = -q^10 times the reversed orientation, "
        "all four methods",
        time.perf_counter() - start,
        budget,
    )


def test_criterion_2_orientation_coproduct_seven_vertices():
    budget, start = 1.0, time.perf_counter()
    g = seven_vertex_graph()
    spec = get_monoid("AO")
    key = spec.parse_key("f>u,f>n,u>n,m>a,a>t,t>h,m>h,a>n,m>u,u>a")
    s, t = frozenset("fun"), frozenset("math")
    got = coproduct_component("AO", g, s, t, make_element("AO", g, key))
    gs, gt = g.induced(s), g.induced(t)
    left = get_monoid("AO").parse_key("f>u,f>n,u>n")
    right = get_monoid("AO").parse_key("m>a,a>t,t>h,m>h")
    want = TensorElement(
        "AO", gs, gt, [((left, right), QTPolynomial.monomial(2, 0))]
    )
    assert got == want
    _report(
        2,
        "coproduct at the fun|math split keeps both restrictions with "
        "coefficient q^2",
        time.perf_counter() - start,
        budget,
    )


def test_criterion_3_flat_partition_images_seven_vertices():
    budget, start = 1.0, time.perf_counter()
    g = seven_vertex_graph()
    flat_in = make_element("FL_P", g, get_monoid("FL_P").parse_key("un,fu,fn,ma,at"))
    part_out = make_element("Pi_p", g, get_monoid("Pi_p").parse_key("f,u,n/m,a,t/h"))
    assert morphism_apply("iota_FL_Pi", g, flat_in) == part_out

    part_in = make_element("Pi_m", g, get_monoid("Pi_m").parse_key("u,n/f,m,a,t/h"))
    flat_out = make_element("FL_M", g, get_monoid("FL_M").parse_key("un,ma,at"))
    assert morphism_apply("phi_Pi_FL", g, part_in) == flat_out
    _report(
        3,
        "flat-to-partition and partition-to-flat images on the 7-vertex example",
        time.perf_counter() - start,
        budget,
    )


def test_criterion_4_antipode_method_equivalence_corpus():
    budget, start = 600.0, time.perf_counter()
    rep = run_suite("antipode", 4)
    assert rep.ok, rep.summary_text()
    verdicts = [r for r in rep.records if r.check == "antipode_closed_form_verdict"]
    assert len(verdicts) == 3 * 76
    assert all(v.passed for v in verdicts)
    _report(
        4,
        "all antipode routes agree on every key of every corpus graph; "
        "gated closed forms verified",
        time.perf_counter() - start,
        budget,
    )


def test_criterion_5_bimonoid_axioms_corpus():
    budget, start = 600.0, time.perf_counter()
    rep = run_suite("bimonoid", 4)
    assert rep.ok, rep.summary_text()
    assert len(rep.records) == 13 * 76
    _report(
        5,
        "bimonoid axioms hold for all 13 monoids over the 4-vertex corpus",
        time.perf_counter() - start,
        budget,
    )


def test_criterion_6_orientation_counts_match_chromatic_values():
    budget, start = 120.0, time.perf_counter()
    rep = run_suite("stanley", 5, samples6=100)
    assert rep.ok, rep.summary_text()
    assert len(rep.records) == 1100 + 100
    _report(
        6,
        "acyclic-orientation counts equal the signed chromatic value on all "
        "1100 graphs up to 5 vertices plus 100 seeded 6-vertex graphs",
        time.perf_counter() - start,
        budget,
    )


def test_criterion_7_morphisms_and_diagrams_corpus():
    budget, start = 600.0, time.perf_counter()
    rep = run_suite("morphisms", 4)
    assert rep.ok, rep.summary_text()
    assert len(rep.records) == (13 + 6) * 76
    _report(
        7,
        "all 13 catalogued maps intertwine both structures and all 6 pasted "
        "diagrams commute over the 4-vertex corpus",
        time.perf_counter() - start,
        budget,
    )


def test_criterion_8_functor_identities():
    budget, start = 60.0, time.perf_counter()
    rep = run_suite("functors", 5)
    assert rep.ok, rep.summary_text()
    assert len(rep.records) == 13 * 1100
    _report(
        8,
        "complement/complete/discrete functor identities and basis counts up "
        "to 5 vertices",
        time.perf_counter() - start,
        budget,
    )


def test_criterion_9_basis_change_round_trips():
    budget, start = 60.0, time.perf_counter()
    rep = run_suite("basis-change", 4)
    assert rep.ok, rep.summary_text()
    assert len(rep.records) == 8 * 76
    _report(
        9,
        "partner-basis changes round-trip exactly over the 4-vertex corpus",
        time.perf_counter() - start,
        budget,
    )
