from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from boxideal.poly import (
    MonomialOrder,
    ParseError,
    Polynomial,
    StructuralError,
    VarTable,
    box_var,
    compare,
    lex_exponents,
    mono_divides,
    mono_lcm,
    parse_multi_index,
    parse_polynomial,
)

NAMES = ("a", "b", "c", "d")
DEGREVLEX = MonomialOrder(VarTable(NAMES))
LEX = MonomialOrder(VarTable(NAMES), "lex")

exponents = st.tuples(*[st.integers(0, 3)] * len(NAMES))
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(exponents, coeffs, max_size=5)


def mono(order, exps):
    return order.monomial(dict(zip(NAMES, exps)))


def poly(order, terms):
    return Polynomial(order, {mono(order, e): c for e, c in terms.items()})


def to_sympy(p):
    syms = sympy.symbols(NAMES)
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator)
                            * sympy.Mul(*[syms[p.table.position(n)] ** e for n, e in _powers(p, m)])
                            for c, m in p.terms))


def _powers(p, m):
    return [(p.table.names[i], e) for i, e in m]


def test_box_table_lists_largest_index_first():
    t = VarTable.box((2, 2))
    assert t.names == ("x[2,2]", "x[2,1]", "x[1,2]", "x[1,1]")
    o = MonomialOrder(t)
    assert compare(o.var("x[1,2]").leading_monomial(), o.var("x[1,1]").leading_monomial(), o) == 1


def test_box_var_roundtrip():
    assert box_var((1, 12, 3)) == "x[1,12,3]"
    assert parse_multi_index("x[1,12,3]") == ("x", (1, 12, 3))
    assert parse_multi_index("w1") is None


def test_lex_exponents():
    assert lex_exponents(0) == [(0, 0, 0)]
    assert lex_exponents(2) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


def test_degrevlex_versus_lex():
    # same degree: degrevlex prefers b^2, lex prefers a*c
    ac = mono(DEGREVLEX, (1, 0, 1, 0))
    bb = mono(DEGREVLEX, (0, 2, 0, 0))
    assert compare(bb, ac, DEGREVLEX) == 1
    assert compare(ac, bb, LEX) == 1


def test_text_roundtrip():
    o = MonomialOrder(VarTable.box((2, 2)))
    f = o.var("x[1,2]") * o.var("x[2,1]") - o.var("x[1,1]") * o.var("x[2,2]")
    assert str(f) == "x[1,2]*x[2,1] - x[1,1]*x[2,2]"
    assert parse_polynomial(str(f), o) == f
    g = parse_polynomial("1/2*x[1,1]^3 - 3", o)
    assert g.leading_coefficient() == Fraction(1, 2)
    assert str(g) == "1/2*x[1,1]^3 - 3"


def test_parse_errors():
    o = MonomialOrder(VarTable.box((2, 2)))
    with pytest.raises(ParseError):
        parse_polynomial("x[1,1] +", o)
    with pytest.raises(ParseError):
        parse_polynomial("y*x[1,1]", o)


def test_mixed_tables_rejected():
    other = MonomialOrder(VarTable(("p", "q")))
    with pytest.raises(StructuralError):
        DEGREVLEX.var("a") + other.var("p")


def test_substitute_requires_every_variable():
    with pytest.raises(KeyError):
        DEGREVLEX.var("a").substitute({"b": DEGREVLEX.var("a")}, DEGREVLEX)


@given(exponents, exponents, exponents)
def test_order_is_multiplicative(a, b, c):
    for order in (DEGREVLEX, LEX):
        ma, mb, mc = mono(order, a), mono(order, b), mono(order, c)
        prod_a = Polynomial(order, {ma: 1}) * Polynomial(order, {mc: 1})
        prod_b = Polynomial(order, {mb: 1}) * Polynomial(order, {mc: 1})
        assert compare(prod_a.leading_monomial(), prod_b.leading_monomial(), order) == compare(ma, mb, order)


@given(exponents, exponents)
def test_lcm_is_divided_by_both(a, b):
    ma, mb = mono(DEGREVLEX, a), mono(DEGREVLEX, b)
    lcm = mono_lcm(ma, mb)
    assert mono_divides(ma, lcm) and mono_divides(mb, lcm)
    assert lcm == mono(DEGREVLEX, tuple(max(x, y) for x, y in zip(a, b)))


@given(polys, polys)
def test_arithmetic_matches_sympy(f, g):
    p, q = poly(DEGREVLEX, f), poly(DEGREVLEX, g)
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))
    assert to_sympy(p - q) == sympy.expand(to_sympy(p) - to_sympy(q))


@given(polys, polys, polys, polys)
def test_substitute_is_a_ring_homomorphism(f, g, h1, h2):
    p, q = poly(DEGREVLEX, f), poly(DEGREVLEX, g)
    img = {"a": poly(DEGREVLEX, h1), "b": poly(DEGREVLEX, h2), "c": DEGREVLEX.var("a"), "d": DEGREVLEX.one()}
    assert (p * q).substitute(img, DEGREVLEX) == p.substitute(img, DEGREVLEX) * q.substitute(img, DEGREVLEX)
    assert (p + q).substitute(img, DEGREVLEX) == p.substitute(img, DEGREVLEX) + q.substitute(img, DEGREVLEX)


@given(polys)
def test_text_and_order_roundtrip(f):
    p = poly(DEGREVLEX, f)
    assert parse_polynomial(str(p), DEGREVLEX) == p
    assert p.to_order(LEX).to_order(DEGREVLEX) == p
    if p:
        assert p.monic().monic() == p.monic()
        assert p.monic().leading_coefficient() == 1


@given(polys, st.tuples(*[st.integers(-3, 3)] * 4))
def test_evaluate_matches_sympy(f, pt):
    p = poly(DEGREVLEX, f)
    vals = dict(zip(NAMES, pt))
    expect = to_sympy(p).subs({sympy.Symbol(n): v for n, v in vals.items()})
    assert p.evaluate(vals) == Fraction(str(expect))
