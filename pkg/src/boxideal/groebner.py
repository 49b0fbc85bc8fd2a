"""Gröbner bases and the ideal operations built on them.

Everything here works over the rationals with the orders from
:mod:`boxideal.poly`.  The Buchberger loop uses the Gebauer–Möller pair
update (coprime and chain criteria) with sugar-degree pair selection, so the
same code handles the homogeneous ideals of minors and the inhomogeneous
systems that appear in elimination.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, NamedTuple, Sequence

from .poly import (
    Monomial,
    MonomialOrder,
    Polynomial,
    VarTable,
    mono_coprime,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

ENV_PREFIX = "BOXIDEAL_"


class BudgetExhausted(RuntimeError):
    """A resource guard tripped; the computation was abandoned, not truncated."""


class NotAGroebnerBasis(ValueError):
    pass


class InsufficientSamples(ValueError):
    def __init__(self, required: int, given: int):
        super().__init__(f"need at least {required} Hilbert samples, got {given}")
        self.required = required
        self.given = given


def _env_int(name: str, default: int | None) -> int | None:
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw == "":
        return default
    return int(raw)


@dataclass(frozen=True)
class Budget:
    """Hard resource limits for Buchberger runs.

    ``max_degree`` switches on degree-truncated mode: S-pairs whose lcm has
    larger degree are skipped and the result is flagged as truncated.  Only
    meaningful for homogeneous input.
    """

    max_pairs: int | None = 200_000
    max_terms: int | None = 200_000
    max_degree: int | None = None

    @classmethod
    def from_env(cls, **overrides) -> "Budget":
        vals = {
            "max_pairs": _env_int("BUDGET_SPAIRS", cls.max_pairs),
            "max_terms": _env_int("BUDGET_TERMS", cls.max_terms),
            "max_degree": _env_int("BUDGET_DEGREE", None),
        }
        vals.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**vals)


DEFAULT_BUDGET = Budget()


@dataclass
class GBStats:
    pairs_reduced: int = 0
    pairs_skipped_degree: int = 0
    zero_reductions: int = 0

    @property
    def truncated(self) -> bool:
        return self.pairs_skipped_degree > 0


# ---------------------------------------------------------------------------
# raw dict-level kernels


def _lead(d: dict, key) -> Monomial:
    return max(d, key=key)


def _reduce_full(p: dict, basis: Sequence[tuple], key, max_terms: int | None = None) -> dict:
    """Fully reduce ``p`` by ``basis`` = [(lm, lc, dict), ...] in the given order.

    The divisor is always the first basis element whose leading monomial
    divides the current term.
    """
    p = dict(p)
    r: dict = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, lc, g in basis:
            if len(lm) <= len(m) and mono_divides(lm, m):
                q = mono_div(m, lm)
                f = c / lc
                for gm, gc in g.items():
                    mm = mono_mul(gm, q) if q else gm
                    v = p.get(mm, 0) - f * gc
                    if v:
                        p[mm] = v
                    else:
                        del p[mm]
                if max_terms is not None and len(p) > max_terms:
                    raise BudgetExhausted(f"intermediate polynomial exceeded {max_terms} terms")
                break
        else:
            r[m] = c
            del p[m]
    return r


def _monic(d: dict, key) -> dict:
    lc = d[_lead(d, key)]
    if lc == 1:
        return d
    inv = 1 / lc
    return {m: c * inv for m, c in d.items()}


def _spoly(f: dict, lf: Monomial, g: dict, lg: Monomial) -> dict:
    # both inputs monic
    lcm = mono_lcm(lf, lg)
    qf = mono_div(lcm, lf)
    qg = mono_div(lcm, lg)
    out: dict = {}
    for m, c in f.items():
        if m != lf:
            mm = mono_mul(m, qf)
            out[mm] = out.get(mm, 0) + c
    for m, c in g.items():
        if m != lg:
            mm = mono_mul(m, qg)
            v = out.get(mm, 0) - c
            out[mm] = v
    return {m: c for m, c in out.items() if c}


def _sugar(d: dict) -> int:
    return max(mono_degree(m) for m in d)


def _interreduce(polys: list[dict], key) -> list[dict]:
    """Reduced Gröbner basis from a Gröbner basis: minimalize, fully reduce, monic."""
    items = [(_lead(p, key), p) for p in polys if p]
    items.sort(key=lambda t: key(t[0]))
    minimal = []
    for i, (lm, p) in enumerate(items):
        if any(mono_divides(lm2, lm) for j, (lm2, _) in enumerate(items)
               if j != i and (lm2 != lm or j < i)):
            continue
        minimal.append((lm, p))
    out = []
    for i, (lm, p) in enumerate(minimal):
        others = [(l2, Fraction(1), _monic(q, key)) for j, (l2, q) in enumerate(minimal) if j != i]
        rest = {m: c for m, c in p.items() if m != lm}
        red = _reduce_full(rest, others, key)
        red[lm] = p[lm]
        out.append(_monic(red, key))
    out.sort(key=lambda d: key(_lead(d, key)), reverse=True)
    return out


def _buchberger_raw(polys: Iterable[dict], order: MonomialOrder,
                    budget: Budget = DEFAULT_BUDGET, stats: GBStats | None = None) -> list[dict]:
    key = order.key
    stats = stats if stats is not None else GBStats()
    f: list[dict] = []
    lms: list[Monomial] = []
    sugars: list[int] = []
    G: list[int] = []
    # pending pairs as (selection key, i, j, lcm)
    B: list[tuple] = []

    def pair_entry(i: int, j: int) -> tuple:
        lcm = mono_lcm(lms[i], lms[j])
        s = max(sugars[i] - mono_degree(lms[i]), sugars[j] - mono_degree(lms[j])) + mono_degree(lcm)
        return ((s, key(lcm), i, j), i, j, lcm)

    def update(h: int) -> None:
        nonlocal G, B
        mh = lms[h]
        C = [(g, mono_lcm(mh, lms[g])) for g in G]
        D: list[tuple] = []
        while C:
            g1, l1 = C.pop(0)
            if mono_coprime(mh, lms[g1]) or not any(
                mono_divides(l2, l1) for _, l2 in C
            ) and not any(mono_divides(l2, l1) for _, l2 in D):
                D.append((g1, l1))
        E = [g for g, _ in D if not mono_coprime(mh, lms[g])]
        newB = []
        for entry in B:
            _, g1, g2, l12 = entry
            if (not mono_divides(mh, l12) or mono_lcm(lms[g1], mh) == l12
                    or mono_lcm(lms[g2], mh) == l12):
                newB.append(entry)
        newB.extend(pair_entry(g, h) for g in E)
        B = newB
        G = [g for g in G if not mono_divides(mh, lms[g])] + [h]

    def basis() -> list[tuple]:
        return [(lms[g], Fraction(1), f[g]) for g in G]

    def add(p: dict, sugar: int) -> None:
        p = _monic(p, key)
        f.append(p)
        lms.append(_lead(p, key))
        sugars.append(sugar)
        update(len(f) - 1)

    inputs = [dict(p) for p in polys if p]
    inputs.sort(key=lambda d: (_sugar(d), key(_lead(d, key))))
    for p in inputs:
        r = _reduce_full(p, basis(), key, budget.max_terms)
        if r:
            add(r, _sugar(p))

    while B:
        best = min(range(len(B)), key=lambda k: B[k][0])
        (sugar, _, _, _), i, j, lcm = B.pop(best)
        if budget.max_degree is not None and mono_degree(lcm) > budget.max_degree:
            stats.pairs_skipped_degree += 1
            continue
        stats.pairs_reduced += 1
        if budget.max_pairs is not None and stats.pairs_reduced > budget.max_pairs:
            raise BudgetExhausted(f"S-pair budget of {budget.max_pairs} exhausted")
        s = _spoly(f[i], lms[i], f[j], lms[j])
        h = _reduce_full(s, basis(), key, budget.max_terms)
        if h:
            add(h, sugar)
        else:
            stats.zero_reductions += 1
    return _interreduce([f[g] for g in G], key)


# ---------------------------------------------------------------------------
# public polynomial-level API


def _raw(polys: Iterable[Polynomial], order: MonomialOrder) -> list[dict]:
    out = []
    for p in polys:
        if p.order is not order and p.order != order:
            p = p.to_order(order)
        if p:
            out.append(p.as_dict())
    return out


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` on full division by ``G``.

    Divisors are tried in the given sequence order; callers that want the
    canonical choice pass a reduced basis, which is already sorted.
    """
    order = order or f.order
    key = order.key
    basis = []
    for g in _raw(G, order):
        lm = _lead(g, key)
        basis.append((lm, g[lm], g))
    r = _reduce_full(_raw([f], order)[0] if f else {}, basis, key)
    return Polynomial._raw(order, r)


def buchberger_polys(polys: Sequence[Polynomial], order: MonomialOrder,
                     budget: Budget = DEFAULT_BUDGET, stats: GBStats | None = None) -> list[Polynomial]:
    return [Polynomial._raw(order, d) for d in _buchberger_raw(_raw(polys, order), order, budget, stats)]


@dataclass(frozen=True)
class GBCertificate:
    """Outcome of a Buchberger-criterion check.

    On failure ``pair`` holds the indices of the offending generators and
    ``remainder`` the nonzero reduced S-polynomial.
    """

    ok: bool
    pairs_checked: int
    pairs_skipped_coprime: int
    pair: tuple[int, int] | None = None
    remainder: Polynomial | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_groebner_basis(G: Sequence[Polynomial], order: MonomialOrder | None = None) -> GBCertificate:
    """Check that every S-polynomial of ``G`` reduces to zero modulo ``G``.

    Pairs with coprime leading monomials are skipped (their S-polynomials
    always reduce to zero).
    """
    if not G:
        return GBCertificate(True, 0, 0)
    order = order or G[0].order
    key = order.key
    polys = [_monic(d, key) for d in _raw(G, order)]
    lms = [_lead(d, key) for d in polys]
    basis = [(lm, Fraction(1), d) for lm, d in zip(lms, polys)]
    checked = skipped = 0
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if mono_coprime(lms[i], lms[j]):
                skipped += 1
                continue
            checked += 1
            s = _spoly(polys[i], lms[i], polys[j], lms[j])
            r = _reduce_full(s, basis, key)
            if r:
                return GBCertificate(False, checked, skipped, (i, j), Polynomial._raw(order, r))
    return GBCertificate(True, checked, skipped)


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class Ideal:
    """Generators in a fixed ring; ``is_groebner`` marks a reduced Gröbner basis."""

    generators: tuple
    order: MonomialOrder
    is_groebner: bool = False
    truncated_at: int | None = field(default=None, compare=False)

    def __post_init__(self):
        gens = tuple(g if g.order == self.order else g.to_order(self.order)
                     for g in self.generators if g)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, generators: Iterable[Polynomial], order: MonomialOrder | None = None) -> "Ideal":
        gens = list(generators)
        if order is None:
            if not gens:
                raise ValueError("need an order for an ideal with no generators")
            order = gens[0].order
        return cls(tuple(gens), order)

    @property
    def table(self) -> VarTable:
        return self.order.table

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def groebner(self, budget: Budget = DEFAULT_BUDGET, stats: GBStats | None = None) -> "Ideal":
        if self.is_groebner and budget.max_degree is None:
            return self
        stats = stats if stats is not None else GBStats()
        gens = buchberger_polys(self.generators, self.order, budget, stats)
        trunc = budget.max_degree if stats.truncated else None
        return Ideal(tuple(gens), self.order, is_groebner=trunc is None, truncated_at=trunc)

    def contains(self, f: Polynomial) -> bool:
        return ideal_member(f, self)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial() for g in self.generators]

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "variables": list(self.table.names),
            "order": self.order.descriptor(),
            "generators": [str(g) for g in self.generators],
            "is_groebner": self.is_groebner,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "Ideal":
        table = VarTable(doc["variables"])
        order = MonomialOrder.from_descriptor(table, doc["order"])
        gens = tuple(order.parse(s) for s in doc["generators"])
        return cls(gens, order, is_groebner=bool(doc.get("is_groebner", False)))


def buchberger(I: Ideal, budget: Budget = DEFAULT_BUDGET, stats: GBStats | None = None) -> Ideal:
    """Reduced Gröbner basis of ``I``, monic and sorted by descending leading term."""
    return Ideal(I.generators, I.order).groebner(budget, stats)


def ideal_member(f: Polynomial, I: Ideal) -> bool:
    if not I.is_groebner:
        raise NotAGroebnerBasis("membership test needs a Gröbner basis; call groebner() first")
    if f.order != I.order:
        f = f.to_order(I.order)
    return normal_form(f, I.generators, I.order).is_zero()


def ideals_equal(I: Ideal, J: Ideal, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Equality by mutual membership of generators in each other's Gröbner basis."""
    gi = I.groebner(budget)
    gj = J.groebner(budget) if J.order == I.order else Ideal(J.generators, I.order).groebner(budget)
    return (all(ideal_member(g, gj) for g in I.generators)
            and all(ideal_member(g.to_order(I.order), gi) for g in J.generators))


def _aux_name(table: VarTable, stem: str = "e") -> str:
    k = 1
    while f"{stem}{k}" in table:
        k += 1
    return f"{stem}{k}"


def _inner_kind(order: MonomialOrder) -> str:
    return order.inner if order.kind == "block" else order.kind


def eliminate(I: Ideal, drop: Iterable[str], budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """``I`` intersected with the subring in the remaining variables.

    The result lives over the sub-table of kept variables with the base order
    of ``I`` restricted to them, and is a reduced Gröbner basis there.
    """
    drop = [n for n in I.table.names if n in set(drop)]
    kept = VarTable(n for n in I.table.names if n not in set(drop))
    inner = _inner_kind(I.order)
    sub_order = MonomialOrder(kept, inner)
    if not drop:
        return Ideal(tuple(g.to_order(sub_order) for g in I.generators), sub_order).groebner(budget)
    block = MonomialOrder(I.table, "block", elim=drop, inner=inner)
    gb = buchberger_polys(I.generators, block, budget)
    dropped = {I.table.position(n) for n in drop}
    keep = [g for g in gb if not any(i in dropped for m in g.as_dict() for i, _ in m)]
    return Ideal(tuple(g.to_order(sub_order) for g in keep), sub_order, is_groebner=True)


def _extend(order: MonomialOrder, extra: str) -> MonomialOrder:
    return MonomialOrder(VarTable((extra,) + order.table.names), _inner_kind(order))


def intersect(I: Ideal, J: Ideal, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """``I ∩ J`` via ``e·I + (1 - e)·J`` with ``e`` eliminated."""
    if I.order != J.order:
        J = Ideal(J.generators, I.order)
    if not I.generators or not J.generators:
        return Ideal((), I.order, is_groebner=True)
    e = _aux_name(I.table)
    big = _extend(I.order, e)
    ev = big.var(e)
    one_minus = big.one() - ev
    gens = [ev * g.to_order(big) for g in I.generators] + \
           [one_minus * g.to_order(big) for g in J.generators]
    res = eliminate(Ideal(tuple(gens), big), [e], budget)
    return Ideal(tuple(g.to_order(I.order) for g in res.generators), I.order).groebner(budget)


def divide_exact(p: Polynomial, f: Polynomial) -> Polynomial:
    """Quotient of ``p`` by ``f``; raises if ``f`` does not divide ``p``."""
    key = p.order.key
    fd = f.as_dict()
    lf = _lead(fd, key)
    cf = fd[lf]
    rem = p.as_dict()
    q: dict = {}
    while rem:
        m = _lead(rem, key)
        if not mono_divides(lf, m):
            raise ValueError(f"{f} does not divide {p}")
        t = mono_div(m, lf)
        c = rem[m] / cf
        q[t] = c
        for gm, gc in fd.items():
            mm = mono_mul(gm, t)
            v = rem.get(mm, 0) - c * gc
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    return Polynomial._raw(p.order, q)


def colon(I: Ideal, f: Polynomial, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """Ideal quotient ``I : f`` computed as ``(I ∩ <f>) / f``."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    f = f.to_order(I.order)
    if f.total_degree() == 0:
        return I.groebner(budget)
    K = intersect(I, Ideal((f,), I.order), budget)
    return Ideal(tuple(divide_exact(g, f) for g in K.generators), I.order).groebner(budget)


def saturate(I: Ideal, f: Polynomial, budget: Budget = DEFAULT_BUDGET,
             max_rounds: int = 64) -> tuple[Ideal, int]:
    """``I : f^∞`` by iterated colons; also returns the number of rounds to stabilise."""
    cur = I.groebner(budget)
    for rounds in range(1, max_rounds + 1):
        nxt = colon(cur, f, budget)
        if nxt.generators == cur.generators:
            return cur, rounds
        cur = nxt
    raise BudgetExhausted(f"saturation did not stabilise in {max_rounds} rounds")


# ---------------------------------------------------------------------------
# Hilbert functions


class HilbertSample(NamedTuple):
    degree: int
    quotient_dim: int
    ideal_dim: int


def _lead_monomials(I: Ideal) -> list[Monomial]:
    if not I.is_groebner:
        raise NotAGroebnerBasis("Hilbert computations need a Gröbner basis")
    return [g.leading_monomial() for g in I.generators]


def standard_monomials_by_degree(lead: Sequence[Monomial], nvars: int, tmax: int) -> list[list[Monomial]]:
    """Standard monomials (outside the ideal of ``lead``) in degrees ``0..tmax``.

    Grows degree by degree: a standard monomial of degree t+1 is a standard
    monomial of degree t times a variable at least as far down the table as
    any variable it already has.
    """
    by_var: dict[int, list[Monomial]] = {}
    for lm in lead:
        for i, _ in lm:
            by_var.setdefault(i, []).append(lm)
    if any(not lm for lm in lead):
        return [[] for _ in range(tmax + 1)]
    levels = [[()]]
    for _ in range(tmax):
        nxt = []
        for m in levels[-1]:
            start = m[-1][0] if m else 0
            for v in range(start, nvars):
                mm = mono_mul(m, ((v, 1),))
                if any(mono_divides(lm, mm) for lm in by_var.get(v, ())):
                    continue
                nxt.append(mm)
        levels.append(nxt)
    return levels


def standard_monomial_count(I: Ideal, t: int) -> HilbertSample:
    nvars = len(I.table)
    q = len(standard_monomials_by_degree(_lead_monomials(I), nvars, t)[t])
    return HilbertSample(t, q, comb(nvars + t - 1, t) - q)


def hilbert_samples(I: Ideal, tmax: int) -> list[HilbertSample]:
    nvars = len(I.table)
    levels = standard_monomials_by_degree(_lead_monomials(I), nvars, tmax)
    return [HilbertSample(t, len(lv), comb(nvars + t - 1, t) - len(lv)) for t, lv in enumerate(levels)]


def _minimalize(gens: Iterable[Monomial]) -> list[Monomial]:
    gs = sorted(set(gens), key=lambda m: (mono_degree(m), m))
    out: list[Monomial] = []
    for m in gs:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def hilbert_numerator(lead: Iterable[Monomial]) -> list[int]:
    """Numerator ``N(t)`` of the Hilbert series ``N(t)/(1-t)^n`` of ``k[x]/<lead>``.

    Pivot recursion ``N(I) = N(I + <v>) + t·N(I : v)`` on the most frequent
    variable; pairwise coprime generators are the base case.
    """
    memo: dict = {}

    def rec(gens: tuple) -> list[int]:
        if not gens:
            return [1]
        if any(not g for g in gens):
            return [0]
        hit = memo.get(gens)
        if hit is not None:
            return hit
        seen: set[int] = set()
        coprime = True
        for g in gens:
            vs = {i for i, _ in g}
            if vs & seen:
                coprime = False
                break
            seen |= vs
        if coprime:
            res = [1]
            for g in gens:
                d = mono_degree(g)
                res = _poly_mul(res, [1] + [0] * (d - 1) + [-1])
        else:
            freq: dict[int, int] = {}
            for g in gens:
                for i, _ in g:
                    freq[i] = freq.get(i, 0) + 1
            v = max(sorted(freq), key=lambda i: freq[i])
            vm = ((v, 1),)
            plus = tuple(_minimalize([g for g in gens if not any(i == v for i, _ in g)] + [vm]))
            quot = tuple(_minimalize(mono_div(g, vm) if any(i == v for i, _ in g) else g for g in gens))
            res = _poly_add(rec(plus), [0] + rec(quot))
        while len(res) > 1 and res[-1] == 0:
            res.pop()
        memo[gens] = res
        return res

    return rec(tuple(_minimalize(lead)))


class DimensionDegree(NamedTuple):
    dimension: int
    degree: int


def _divide_by_one_minus_t(a: list[int]) -> list[int] | None:
    # synthetic division of a(t) by (1 - t); None if not divisible
    if sum(a) != 0:
        return None
    q = []
    acc = 0
    for c in a[:-1]:
        acc += c
        q.append(acc)
    return q or [0]


def series_dimension_degree(lead: Sequence[Monomial], nvars: int) -> tuple[int, int, list[int]]:
    """Krull dimension, degree and reduced numerator from the Hilbert series."""
    num = hilbert_numerator(lead)
    if num == [0]:
        return 0, 0, [0]
    dim = nvars
    while dim > 0:
        q = _divide_by_one_minus_t(num)
        if q is None:
            break
        num = q
        dim -= 1
    return dim, sum(num), num


def fit_hilbert_polynomial(samples: Sequence[HilbertSample], dimension: int) -> list[Fraction]:
    """Newton-interpolate the Hilbert polynomial through consecutive samples.

    Needs ``dimension + 1`` samples: ``dimension`` to determine a polynomial
    of degree ``dimension - 1`` and one more to confirm it.  Returns the
    coefficients in the binomial basis ``C(t - t0, k)``.
    """
    need = dimension + 1
    if len(samples) < need:
        raise InsufficientSamples(need, len(samples))
    vals = [Fraction(s.quotient_dim) for s in samples]
    diffs = []
    row = vals
    for _ in range(len(vals)):
        diffs.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
        if not row:
            break
    if any(d != 0 for d in diffs[dimension:]):
        raise ValueError("samples do not fit a polynomial of the expected degree")
    return diffs[:dimension]


def hilbert_dimension_degree(I: Ideal) -> DimensionDegree:
    """Krull dimension and degree of ``k[x]/I`` for homogeneous ``I`` (a Gröbner basis).

    The Hilbert series numerator fixes where the Hilbert function turns
    polynomial; the polynomial is then fitted through standard-monomial
    counts sampled from that degree on and its leading coefficient read off.
    """
    lead = _lead_monomials(I)
    nvars = len(I.table)
    dim, deg, num = series_dimension_degree(lead, nvars)
    if dim == 0:
        return DimensionDegree(0, deg)
    t0 = max(0, len(num) - dim)
    samples = hilbert_samples(I, t0 + dim)[t0:]
    coeffs = fit_hilbert_polynomial(samples, dim)
    # leading coefficient of sum_k c_k C(t - t0, k) is c_{dim-1}/(dim-1)!
    fitted = coeffs[dim - 1]
    if fitted != deg:
        raise ArithmeticError(f"sampled degree {fitted} disagrees with series degree {deg}")
    return DimensionDegree(dim, int(fitted))


def hilbert_polynomial_value(coeffs: Sequence[Fraction], t0: int, t: int) -> Fraction:
    return sum((c * comb(t - t0, k) for k, c in enumerate(coeffs)), Fraction(0))


__all__ = [
    "Budget", "BudgetExhausted", "DEFAULT_BUDGET", "DimensionDegree", "GBCertificate",
    "GBStats", "HilbertSample", "Ideal", "InsufficientSamples", "NotAGroebnerBasis",
    "buchberger", "buchberger_polys", "colon", "divide_exact", "eliminate",
    "fit_hilbert_polynomial", "hilbert_dimension_degree", "hilbert_numerator",
    "hilbert_samples", "ideal_member", "ideals_equal", "intersect", "is_groebner_basis",
    "normal_form", "saturate", "series_dimension_degree", "standard_monomial_count",
    "standard_monomials_by_degree",
]
