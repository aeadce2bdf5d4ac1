"""Monoid structure maps: braiding weights, products, coproducts, bases."""

import math

import pytest

from grhopf import (
    EMPTY_GRAPH,
    MONOID_IDS,
    MONOIDS,
    Element,
    Graph,
    InputError,
    Q,
    QTPolynomial,
    T,
    TensorElement,
    basis_change,
    bell_number,
    braiding_coeff,
    complete_graph,
    coproduct_component,
    counit_value,
    discrete_graph,
    fubini_number,
    get_monoid,
    make_element,
    product,
    unit_element,
)

from .test_graphs import fun_graph


def p3():
    return Graph("abc", [("a", "b"), ("b", "c")])


def key(mid, text):
    return get_monoid(mid).parse_key(text)


def one_term(mid, g, text, coeff=1):
    return make_element(mid, g, key(mid, text), coeff)


def test_catalog_ids_and_flags():
    assert MONOID_IDS == (
        "L",
        "AO",
        "Sigma",
        "SSigma",
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
    flags = {mid: (MONOIDS[mid].uses_q, MONOIDS[mid].uses_t) for mid in MONOID_IDS}
    assert flags["L"] == (True, True)
    assert flags["Sigma"] == (True, True)
    assert flags["SSigma"] == (True, True)
    assert flags["AO"] == (True, False)
    for mid in ("Pi_m", "Pi_p", "SPi_m", "SPi_p", "FL_M", "FL_P", "Match_M", "Match_P", "E"):
        assert flags[mid] == (False, False)


def test_braiding_weight_counts_crossing_edges_and_nonedges():
    g = p3()
    assert braiding_coeff(g, {"a"}, {"b", "c"}) == Q * T
    assert braiding_coeff(g, {"b"}, {"a", "c"}) == Q * Q
    assert braiding_coeff(g, {"a", "c"}, {"b"}) == Q * Q
    assert braiding_coeff(complete_graph("abc"), {"a"}, {"b", "c"}) == Q * Q
    assert braiding_coeff(discrete_graph("abc"), {"a"}, {"b", "c"}) == T * T
    assert braiding_coeff(g, set(), {"a", "b", "c"}) == 1


def test_monoid_braiding_drops_unused_parameters():
    g = p3()
    s, t = frozenset("a"), frozenset("bc")
    assert get_monoid("L").braiding(g, s, t) == Q * T
    assert get_monoid("AO").braiding(g, s, t) == Q
    assert get_monoid("Pi_m").braiding(g, s, t) == 1
    assert get_monoid("E").braiding(g, s, t) == 1


def test_basis_sizes_small():
    g = p3()
    sizes = {mid: len(get_monoid(mid).basis(g)) for mid in MONOID_IDS}
    assert sizes == {
        "L": 6,
        "AO": 4,
        "Sigma": 13,
        "SSigma": 8,
        "Pi_m": 5,
        "Pi_p": 5,
        "SPi_m": 2,
        "SPi_p": 2,
        "FL_M": 4,
        "FL_P": 4,
        "Match_M": 3,
        "Match_P": 3,
        "E": 1,
    }
    k4 = complete_graph("wxyz")
    assert len(get_monoid("L").basis(k4)) == math.factorial(4)
    assert len(get_monoid("AO").basis(k4)) == math.factorial(4)
    assert len(get_monoid("Sigma").basis(k4)) == fubini_number(4)
    assert len(get_monoid("SSigma").basis(k4)) == math.factorial(4)
    assert len(get_monoid("FL_M").basis(k4)) == bell_number(4)
    assert len(get_monoid("SPi_m").basis(k4)) == 1


def test_order_product_concatenates():
    g = p3()
    x = one_term("L", g.induced({"a"}), "a")
    y = one_term("L", g.induced({"b", "c"}), "c<b")
    res = product("L", g, {"a"}, {"b", "c"}, x, y)
    assert res == one_term("L", g, "a<c<b")


def test_order_coproduct_counts_crossing_inversions():
    g = p3()
    x = one_term("L", g, "a<b<c")
    # S={b}: edge ab crosses and a precedes b, so one q-inversion; the
    # complement pair ac stays inside T
    res = coproduct_component("L", g, {"b"}, {"a", "c"}, x)
    want = TensorElement(
        "L",
        g.induced({"b"}),
        g.induced({"a", "c"}),
        [((key("L", "b"), key("L", "a<c")), Q)],
    )
    assert res == want
    # leading-prefix split never creates inversions
    res2 = coproduct_component("L", g, {"a"}, {"b", "c"}, x)
    assert res2.terms == {(key("L", "a"), key("L", "b<c")): QTPolynomial.one()}
    # K2 complement pair: splitting b|a on a<b costs one t on the empty graph
    d2 = discrete_graph("ab")
    res3 = coproduct_component("L", d2, {"b"}, {"a"}, one_term("L", d2, "a<b"))
    assert list(res3.terms.values()) == [T]


def test_orientation_product_adds_left_to_right_arcs():
    g = fun_graph()
    s = {"f", "u", "n"}
    t = {"m", "a", "t", "h"}
    x = one_term("AO", g.induced(s), "f>u,f>n,u>n")
    y = one_term("AO", g.induced(t), "m>a,a>t,t>h,m>h")
    res = product("AO", g, s, t, x, y)
    assert res == one_term("AO", g, "f>u,f>n,u>n,m>a,a>t,t>h,m>h,n>a,u>m,u>a")


def test_orientation_coproduct_figure_value():
    # the coproduct figure's orientation: crossing arcs a->n, m->u, u->a;
    # two of them point from the right side into the left, hence q^2
    g = fun_graph()
    o = one_term("AO", g, "f>u,f>n,u>n,m>a,a>t,t>h,m>h,a>n,m>u,u>a")
    s = {"f", "u", "n"}
    t = {"m", "a", "t", "h"}
    res = coproduct_component("AO", g, s, t, o)
    want = TensorElement(
        "AO",
        g.induced(s),
        g.induced(t),
        [((key("AO", "f>u,f>n,u>n"), key("AO", "m>a,a>t,t>h,m>h")), Q * Q)],
    )
    assert res == want
    # the antipode figure's variant reverses u>a, giving a third inward arc
    o2 = one_term("AO", g, "f>u,f>n,u>n,m>a,a>t,t>h,m>h,a>n,m>u,a>u")
    res2 = coproduct_component("AO", g, s, t, o2)
    assert list(res2.terms.values()) == [Q * Q * Q]


def test_composition_product_concatenates_blocks():
    g = p3()
    x = one_term("Sigma", g.induced({"b"}), "b")
    y = one_term("Sigma", g.induced({"a", "c"}), "a,c")
    res = product("Sigma", g, {"b"}, {"a", "c"}, x, y)
    assert res == one_term("Sigma", g, "b|a,c")


def test_composition_coproduct_counts_block_inversions():
    k2 = complete_graph("ab")
    x = one_term("Sigma", k2, "a|b")
    # b sits in a later block than a across the edge ab
    res = coproduct_component("Sigma", k2, {"b"}, {"a"}, x)
    assert list(res.terms.values()) == [Q]
    res2 = coproduct_component("Sigma", k2, {"a"}, {"b"}, x)
    assert list(res2.terms.values()) == [QTPolynomial.one()]
    # single block: no strictly-later pairs in either direction
    y = one_term("Sigma", k2, "a,b")
    res3 = coproduct_component("Sigma", k2, {"b"}, {"a"}, y)
    assert list(res3.terms.values()) == [QTPolynomial.one()]
    # non-edge pair costs t instead of q
    d2 = discrete_graph("ab")
    res4 = coproduct_component("Sigma", d2, {"b"}, {"a"}, one_term("Sigma", d2, "a|b"))
    assert list(res4.terms.values()) == [T]


def test_partition_m_coproduct_restricts_unconditionally():
    g = p3()
    x = one_term("Pi_m", g, "a,b/c")
    res = coproduct_component("Pi_m", g, {"a", "c"}, {"b"}, x)
    assert res.terms == {
        (key("Pi_m", "a/c"), key("Pi_m", "b")): QTPolynomial.one()
    }


def test_partition_p_coproduct_vanishes_on_split_blocks():
    g = p3()
    x = one_term("Pi_p", g, "a,b/c")
    assert coproduct_component("Pi_p", g, {"a", "c"}, {"b"}, x).terms == {}
    # compatible split passes through with coefficient one
    res = coproduct_component("Pi_p", g, {"a", "b"}, {"c"}, x)
    assert res.terms == {
        (key("Pi_p", "a,b"), key("Pi_p", "c")): QTPolynomial.one()
    }


def test_flat_m_coproduct_restricts_edges():
    g = p3()
    x = one_term("FL_M", g, "ab")
    res = coproduct_component("FL_M", g, {"a"}, {"b", "c"}, x)
    assert res.terms == {
        (key("FL_M", "()"), key("FL_M", "()")): QTPolynomial.one()
    }
    assert coproduct_component("FL_P", g, {"a"}, {"b", "c"}, one_term("FL_P", g, "ab")).terms == {}


def test_flat_product_is_union():
    g = p3()
    x = one_term("FL_M", g.induced({"a", "b"}), "ab")
    y = one_term("FL_M", g.induced({"c"}), "()")
    res = product("FL_M", g, {"a", "b"}, {"c"}, x, y)
    assert res == one_term("FL_M", g, "ab")


def test_unit_and_counit():
    for mid in MONOID_IDS:
        u = unit_element(mid)
        assert u.graph == EMPTY_GRAPH
        assert counit_value(u) == 1
        g = p3()
        x = Element.of(mid, g, get_monoid(mid).basis(g)[0])
        with pytest.raises(InputError):
            counit_value(x)


def test_stable_monoids_reject_unstable_keys():
    g = p3()
    with pytest.raises(InputError):
        make_element("SPi_m", g, key("SPi_m", "a,b/c"))
    with pytest.raises(InputError):
        make_element("SSigma", g, key("SSigma", "a,b|c"))
    with pytest.raises(InputError):
        make_element("Match_M", g, key("Match_M", "ab,bc"))
    # stable inputs pass
    make_element("SPi_m", g, key("SPi_m", "a,c/b"))
    make_element("Match_M", g, key("Match_M", "ab"))


def test_orientation_keys_validated():
    g = p3()
    with pytest.raises(InputError):
        make_element("AO", g, key("AO", "a>b"))  # missing edge bc
    with pytest.raises(InputError):
        make_element("AO", g, key("AO", "a>b,b>c,c>a"))  # not an edge ca
    make_element("AO", g, key("AO", "a>b,c>b"))


def test_flat_keys_validated():
    g = p3()
    with pytest.raises(InputError):
        make_element("FL_M", g, key("FL_M", "ac"))  # not an edge
    k3 = complete_graph("abc")
    with pytest.raises(InputError):
        make_element("FL_M", k3, key("FL_M", "ab,bc"))  # not closed
    make_element("FL_M", k3, key("FL_M", "ab,bc,ac"))


def test_basis_change_hand_values():
    g = p3()
    m = one_term("Pi_m", g, "a,b/c")
    p = basis_change("Pi_m", "Pi_p", g, m)
    assert p == one_term("Pi_p", g, "a,b/c") + one_term("Pi_p", g, "a/b/c")
    back = basis_change("Pi_p", "Pi_m", g, p)
    assert back == one_term("Pi_m", g, "a,b/c")
    # inverting a single p key subtracts the refinement
    p_single = one_term("Pi_p", g, "a,b/c")
    m_of_p = basis_change("Pi_p", "Pi_m", g, p_single)
    assert m_of_p == one_term("Pi_m", g, "a,b/c") - one_term("Pi_m", g, "a/b/c")


def test_flat_basis_change_hand_values():
    g = p3()
    m = one_term("FL_M", g, "ab")
    p = basis_change("FL_M", "FL_P", g, m)
    assert p == one_term("FL_P", g, "()") + one_term("FL_P", g, "ab")
    assert basis_change("FL_P", "FL_M", g, p) == one_term("FL_M", g, "ab")
    p0 = one_term("FL_P", g, "ab")
    assert basis_change("FL_P", "FL_M", g, p0) == one_term(
        "FL_M", g, "ab"
    ) - one_term("FL_M", g, "()")


def test_basis_change_rejects_non_partners():
    g = p3()
    x = one_term("Pi_m", g, "a/b/c")
    with pytest.raises(InputError):
        basis_change("Pi_m", "FL_M", g, x)
    with pytest.raises(InputError):
        basis_change("Pi_m", "Pi_m", g, x)
    with pytest.raises(InputError):
        basis_change("L", "AO", g, one_term("L", g, "a<b<c"))


def test_product_validates_split_and_factors():
    g = p3()
    x = one_term("L", g.induced({"a"}), "a")
    y = one_term("L", g.induced({"b", "c"}), "b<c")
    with pytest.raises(InputError):
        product("L", g, {"a"}, {"b"}, x, y)  # split misses c
    with pytest.raises(InputError):
        product("L", g, {"a", "b"}, {"c"}, x, y)  # factors on wrong graphs


def test_unit_species_collapses_everything():
    g = p3()
    spec = get_monoid("E")
    assert len(spec.basis(g)) == 1
    x = one_term("E", g.induced({"a"}), "unit")
    y = one_term("E", g.induced({"b", "c"}), "unit")
    assert product("E", g, {"a"}, {"b", "c"}, x, y) == one_term("E", g, "unit")
    res = coproduct_component("E", g, {"b"}, {"a", "c"}, one_term("E", g, "unit"))
    assert list(res.terms.values()) == [QTPolynomial.one()]
