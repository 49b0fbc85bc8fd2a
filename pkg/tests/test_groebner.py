from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from boxideal.groebner import (
    Budget,
    BudgetExhausted,
    GBStats,
    HilbertSample,
    Ideal,
    InsufficientSamples,
    NotAGroebnerBasis,
    colon,
    divide_exact,
    eliminate,
    fit_hilbert_polynomial,
    hilbert_dimension_degree,
    hilbert_numerator,
    hilbert_samples,
    ideals_equal,
    intersect,
    is_groebner_basis,
    normal_form,
    saturate,
)
from boxideal.poly import MonomialOrder, Polynomial, VarTable

NAMES = ("a", "b", "c")
R = MonomialOrder(VarTable(NAMES))
RLEX = MonomialOrder(VarTable(NAMES), "lex")
a, b, c = (R.var(n) for n in NAMES)
SYMS = sympy.symbols(NAMES)


def to_sympy(p):
    return sum(sympy.Rational(k.numerator, k.denominator)
               * sympy.Mul(*[SYMS[i] ** e for i, e in m]) for k, m in p.terms)


def from_sympy(expr, order):
    poly = sympy.Poly(expr, *SYMS)
    return Polynomial(order, {tuple((i, e) for i, e in enumerate(mon) if e): Fraction(int(k.p), int(k.q))
                              for mon, k in poly.terms()})


quad_exps = [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
quadrics = st.lists(st.integers(-3, 3), min_size=6, max_size=6).map(
    lambda cs: Polynomial(R, {tuple((i, e) for i, e in enumerate(x) if e): k for x, k in zip(quad_exps, cs)}))


def test_small_groebner_basis():
    G = Ideal.of([a, a + b]).groebner()
    assert list(G.generators) == [a, b]
    assert G.is_groebner


def test_reduced_basis_matches_sympy_twisted_cubic():
    gens = [a * a - b * c, a * b - c * c, b * b - a * c]
    for order, name in ((R, "grevlex"), (RLEX, "lex")):
        ours = Ideal.of([g.to_order(order) for g in gens]).groebner()
        theirs = sympy.groebner([to_sympy(g) for g in gens], *SYMS, order=name)
        assert set(ours.generators) == {from_sympy(e, order).monic() for e in theirs.exprs}


@settings(max_examples=25)
@given(st.lists(quadrics, min_size=1, max_size=3))
def test_reduced_basis_matches_sympy_random(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    ours = Ideal.of(gens).groebner()
    theirs = sympy.groebner([to_sympy(g) for g in gens], *SYMS, order="grevlex")
    assert set(ours.generators) == {from_sympy(e, R).monic() for e in theirs.exprs}
    assert is_groebner_basis(list(ours.generators)).ok
    for g in gens:
        assert ours.contains(g)


@settings(max_examples=25)
@given(st.lists(quadrics, min_size=1, max_size=3))
def test_groebner_is_idempotent_and_canonical(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    G = Ideal.of(gens).groebner()
    again = Ideal.of(list(reversed(G.generators))).groebner()
    assert again.generators == G.generators
    lms = G.leading_monomials()
    assert lms == sorted(lms, key=R.key, reverse=True)
    assert all(g.leading_coefficient() == 1 for g in G.generators)


def test_membership_needs_a_basis():
    with pytest.raises(NotAGroebnerBasis):
        Ideal.of([a * b]).contains(a)


def test_normal_form_remainder():
    assert normal_form(a * b + c, [a]) == c


def test_certificate_reports_failing_pair():
    cert = is_groebner_basis([a * b - c * c, a * c - b * b])
    assert not cert.ok
    assert cert.pair == (0, 1)
    assert cert.remainder is not None and cert.remainder


def test_budget_exhaustion():
    gens = [a * a - b * c, a * b - c * c, b * b - a * c]
    with pytest.raises(BudgetExhausted):
        Ideal.of(gens).groebner(Budget(max_pairs=1))


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv("BOXIDEAL_BUDGET_SPAIRS", "17")
    assert Budget.from_env().max_pairs == 17
    assert Budget.from_env(max_pairs=5).max_pairs == 5


def test_degree_truncation_is_flagged():
    stats = GBStats()
    G = Ideal.of([a * a - b * c, a * b - c * c]).groebner(Budget(max_degree=2), stats)
    assert stats.truncated
    assert G.truncated_at == 2 and not G.is_groebner


def test_eliminate_conic():
    # (s^2, s*t, t^2) parameterise a conic; eliminate s, t
    T = MonomialOrder(VarTable(("s", "t", "x", "y", "z")))
    s, t, x, y, z = (T.var(n) for n in T.table.names)
    E = eliminate(Ideal.of([x - s * s, y - s * t, z - t * t]), ["s", "t"])
    assert [str(g) for g in E.generators] == ["y^2 - x*z"]


def test_intersect_and_colon():
    assert intersect(Ideal.of([a]), Ideal.of([b])).generators == (a * b,)
    assert colon(Ideal.of([a * b]), a).generators == (b,)
    sat, rounds = saturate(Ideal.of([a * a * b]), a)
    assert sat.generators == (b,) and rounds >= 1


def test_intersect_matches_sympy_membership():
    I, J = Ideal.of([a * a, b]), Ideal.of([a, b * b])
    K = intersect(I, J)
    # a^2, a*b, b^2 generate the intersection
    assert ideals_equal(K, Ideal.of([a * a, a * b, b * b]))


def test_divide_exact():
    assert divide_exact(a * a - b * b, a + b) == a - b
    with pytest.raises(ValueError):
        divide_exact(a * a + b, a)


def test_hilbert_of_a_hyperplane():
    assert hilbert_dimension_degree(Ideal.of([a]).groebner()) == (2, 1)
    samples = hilbert_samples(Ideal.of([a]).groebner(), 3)
    assert [s.quotient_dim for s in samples] == [1, 2, 3, 4]


def test_hilbert_numerator_of_complete_intersection():
    # two quadrics in three variables: (1 - t^2)^2 / (1 - t)^3 -> numerator (1 + t)^2 (1 - t)
    G = Ideal.of([a * a, b * b]).groebner()
    assert hilbert_numerator(G.leading_monomials()) == [1, 0, -2, 0, 1]
    assert hilbert_dimension_degree(G) == (1, 4)


def test_three_coordinate_points():
    G = Ideal.of([a * b, a * c, b * c]).groebner()
    assert hilbert_dimension_degree(G) == (1, 3)


def test_fit_requires_enough_samples():
    with pytest.raises(InsufficientSamples) as exc:
        fit_hilbert_polynomial([HilbertSample(0, 1, 0)], 2)
    assert exc.value.required == 3 and exc.value.given == 1


def test_fit_linear_hilbert_polynomial():
    samples = [HilbertSample(t, 2 * t + 1, 0) for t in range(3)]
    assert fit_hilbert_polynomial(samples, 2) == [Fraction(1), Fraction(2)]


def test_ideal_json_roundtrip():
    G = Ideal.of([a * a - b * c, a * b]).groebner()
    assert Ideal.from_json(G.to_json()) == G


@settings(max_examples=20)
@given(st.lists(quadrics, min_size=1, max_size=3), st.integers(0, 3))
def test_hilbert_counts_match_linear_algebra(gens, t):
    gens = [g for g in gens if g]
    if not gens:
        return
    G = Ideal.of(gens).groebner()
    got = hilbert_samples(G, t)[t].ideal_dim
    # independent oracle: rank of all monomial multiples of the generators in degree t
    rows = []
    mons = list(sympy.itermonomials(SYMS, t - 2, t - 2)) if t >= 2 else []
    for g in gens:
        for m in mons:
            rows.append(sympy.Poly(sympy.expand(m * to_sympy(g)), *SYMS))
    basis = sorted(sympy.itermonomials(SYMS, t, t), key=str)
    mat = sympy.Matrix([[r.coeff_monomial(m) for m in basis] for r in rows]) if rows else sympy.zeros(0, 0)
    assert got == (mat.rank() if rows else 0)
