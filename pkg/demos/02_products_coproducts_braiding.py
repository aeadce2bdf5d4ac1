"""Products, coproducts, and the two-parameter braiding.

Run: python3 demos/02_products_coproducts_braiding.py
Walks one 7-vertex graph through the main structure maps.
"""

from grhopf import (
    Graph,
    QTPolynomial,
    braiding_coeff,
    coproduct_component,
    get_monoid,
    make_element,
    product,
)

g = Graph(
    "funmath",
    [
        ("f", "u"), ("f", "n"), ("u", "n"),
        ("m", "a"), ("a", "t"), ("t", "h"), ("m", "h"),
        ("a", "n"), ("m", "u"), ("a", "u"),
    ],
)
S, T = frozenset("fun"), frozenset("math")
print("graph has", g.n, "vertices and", len(g.edges), "edges")

# the braiding weight counts edges (q) and non-edges (t) across the split
beta = braiding_coeff(g, S, T)
print("braiding weight for fun|math:", beta)
assert beta == QTPolynomial.monomial(3, 12 - 3)

# orientation product: keep both sides, orient every crossing edge S -> T
ao = get_monoid("AO")
left = make_element("AO", g.induced(S), ao.parse_key("f>u,f>n,u>n"))
right = make_element("AO", g.induced(T), ao.parse_key("m>a,a>t,t>h,m>h"))
prod = product("AO", g, S, T, left, right)
print("AO product:", prod)
assert prod == make_element("AO", g, ao.parse_key("f>u,f>n,u>n,m>a,a>t,t>h,m>h,n>a,u>m,u>a"))

# orientation coproduct: restrict, weighting by arcs that point T -> S
full = make_element("AO", g, ao.parse_key("f>u,f>n,u>n,m>a,a>t,t>h,m>h,a>n,m>u,u>a"))
cop = coproduct_component("AO", g, S, T, full)
print("AO coproduct at fun|math:", cop)
((pair, coeff),) = cop.terms.items()
assert coeff == QTPolynomial.monomial(2, 0)

# linear orders concatenate; their coproduct shuffles apart with inversions
lo = get_monoid("L")
x = make_element("L", g.induced(S), lo.parse_key("n<u<f"))
y = make_element("L", g.induced(T), lo.parse_key("m<a<t<h"))
print("L product:", product("L", g, S, T, x, y))

word = make_element("L", g, lo.parse_key("m<n<u<a<f<t<h"))
print("L coproduct at fun|math:", coproduct_component("L", g, S, T, word))

# partition coproducts vanish unless the split respects every block
pi = get_monoid("Pi_p")
blocks = make_element("Pi_p", g, pi.parse_key("f,u,n/m,a,t/h"))
ok = coproduct_component("Pi_p", g, S, T, blocks)
print("Pi_p coproduct at fun|math:", ok)
assert ok.terms

bad = coproduct_component("Pi_p", g, frozenset("fum"), frozenset("nath"), blocks)
print("Pi_p coproduct at fum|nath:", bad)
assert not bad.terms

print("ok")
