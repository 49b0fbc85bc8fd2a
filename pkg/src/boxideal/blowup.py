"""Defining ideals of P^2 blown up at C(d+1, 2) generic points, embedded by I_{d+n}.

Pipeline: seeded generic points -> basis ``F`` of the degree-d forms through
them -> Hilbert–Burch matrix ``L`` of linear syzygies -> linear relations
among the ``w^alpha F_j`` (matrix ``E``) -> catalecticant-patterned 3-D box
``A`` -> ideal generated by the relations and the 2x2 minors of ``A``.

Coordinates are ``x[i,j] = z_i F_j`` with ``z_1 = w1^n, ..., z_u = w3^n`` in lex
order, ``1 <= i <= u`` and ``1 <= j <= d+1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .box import BoxMatrix, all_minor_list, catalecticant_pattern, positions, weak_box_check
from .groebner import (
    DEFAULT_BUDGET,
    Budget,
    BudgetExhausted,
    Ideal,
    hilbert_dimension_degree,
    hilbert_samples,
)
from .linalg import nullspace, rank
from .poly import MonomialOrder, Polynomial, VarTable, box_var, lex_exponents

W = MonomialOrder(VarTable(("w1", "w2", "w3")), "lex")
COORD_RANGE = (-9, 9)


class GenericityError(RuntimeError):
    """The point configuration (or something derived from it) is not generic."""


def w_monomial(alpha: Sequence[int]) -> Polynomial:
    return Polynomial(W, {tuple((i, e) for i, e in enumerate(alpha) if e): 1})


def _coeff_vector(f: Polynomial, degree: int) -> list[Fraction]:
    return [f.coefficient(w_monomial(a).leading_monomial()) for a in lex_exponents(degree)]


def _eval_monomial(alpha: Sequence[int], pt: Sequence[Fraction]) -> Fraction:
    v = Fraction(1)
    for a, c in zip(alpha, pt):
        v *= Fraction(c) ** a
    return v


def _point_values(pt: Sequence[Fraction]) -> dict[str, Fraction]:
    return {"w1": Fraction(pt[0]), "w2": Fraction(pt[1]), "w3": Fraction(pt[2])}


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True)
class PointSet:
    d: int
    seed: int
    points: tuple  # tuple of (a, b, c) Fractions
    attempts: int
    certificate: tuple  # (degree, rank, expected) for every degree <= d

    @property
    def s(self) -> int:
        return len(self.points)


def genericity_certificate(points: Sequence[Sequence], d: int) -> list[tuple[int, int, int]]:
    s = len(points)
    out = []
    for tau in range(d + 1):
        mat = [[_eval_monomial(a, p) for a in lex_exponents(tau)] for p in points]
        out.append((tau, rank(mat) if mat else 0, min(comb(tau + 2, 2), s)))
    return out


def gen_points(d: int, seed: int, max_attempts: int = 100) -> PointSet:
    """``C(d+1, 2)`` seeded points ``(a, b, 1)`` whose Hilbert function is generic up to degree d."""
    if d < 1:
        raise ValueError("d must be at least 1")
    s = comb(d + 1, 2)
    rng = random.Random(seed)
    lo, hi = COORD_RANGE
    for attempt in range(1, max_attempts + 1):
        pts = [(Fraction(rng.randint(lo, hi)), Fraction(rng.randint(lo, hi)), Fraction(1)) for _ in range(s)]
        if len(set(pts)) != s:
            continue
        cert = genericity_certificate(pts, d)
        if all(r == e for _, r, e in cert):
            return PointSet(d, seed, tuple(pts), attempt, tuple(cert))
    raise GenericityError(f"no generic configuration for d={d}, seed={seed} in {max_attempts} attempts")


def interpolate_Id(pts: PointSet) -> list[Polynomial]:
    """Reduced-echelon basis of the degree-d forms vanishing at the points."""
    d = pts.d
    alphas = lex_exponents(d)
    mat = [[_eval_monomial(a, p) for a in alphas] for p in pts.points]
    basis = nullspace(mat, len(alphas))
    if len(basis) != d + 1:
        raise GenericityError(f"expected {d + 1} forms of degree {d}, found {len(basis)}")
    return [sum((w_monomial(a).scale(c) for a, c in zip(alphas, row) if c), W.zero()) for row in basis]


# ---------------------------------------------------------------------------
# Hilbert–Burch


def poly_det(mat: list[list[Polynomial]]) -> Polynomial:
    """Cofactor expansion along the first row (the matrices here are at most a few rows)."""
    n = len(mat)
    if n == 0:
        return W.one()
    if n == 1:
        return mat[0][0]
    total = W.zero()
    for c in range(n):
        if mat[0][c].is_zero():
            continue
        sub = [row[:c] + row[c + 1:] for row in mat[1:]]
        term = mat[0][c] * poly_det(sub)
        total = total + term if c % 2 == 0 else total - term
    return total


def signed_minors(L: list[list[Polynomial]]) -> list[Polynomial]:
    """``(-1)^(j+1) det(L without column j)`` for ``j = 1..d+1``."""
    ncols = len(L[0])
    out = []
    for j in range(ncols):
        D = poly_det([row[:j] + row[j + 1:] for row in L])
        out.append(D if j % 2 == 0 else -D)
    return out


@dataclass(frozen=True)
class HilbertBurchData:
    F: tuple
    L: tuple  # d rows of d+1 linear forms
    lam: tuple  # lam[l][j][k]: coefficient of w_{k+1} in L[l][j]
    rho: Fraction


def hilbert_burch(F: Sequence[Polynomial]) -> HilbertBurchData:
    """Linear syzygies of ``F`` arranged as the d x (d+1) Hilbert–Burch matrix."""
    F = list(F)
    d = len(F) - 1
    ws = [W.var(n) for n in ("w1", "w2", "w3")]
    cols = [_coeff_vector(w * f, d + 1) for f in F for w in ws]
    system = [list(row) for row in zip(*cols)]
    sols = nullspace(system, 3 * (d + 1))
    if len(sols) != d:
        raise GenericityError(f"syzygy space has dimension {len(sols)}, expected {d}")
    lam = tuple(tuple(tuple(v[3 * j + k] for k in range(3)) for j in range(d + 1)) for v in sols)
    L = tuple(tuple(sum((ws[k].scale(c) for k, c in enumerate(lam[l][j]) if c), W.zero())
                    for j in range(d + 1)) for l in range(d))
    D = signed_minors([list(r) for r in L])
    j0 = next((j for j, g in enumerate(D) if g), None)
    if j0 is None or not F[j0]:
        raise GenericityError("maximal minors of the syzygy matrix vanish")
    lm = D[j0].leading_monomial()
    rho = F[j0].coefficient(lm) / D[j0].coefficient(lm)
    if any(f - g.scale(rho) for f, g in zip(F, D)):
        raise GenericityError("forms are not proportional to the signed maximal minors")
    return HilbertBurchData(tuple(F), L, lam, rho)


# ---------------------------------------------------------------------------
# relations, catalecticant, box


def blowup_order(d: int, n: int) -> MonomialOrder:
    return MonomialOrder(VarTable.box([comb(n + 2, 2), d + 1]))


def xvar(i: int, j: int) -> str:
    return box_var((i, j))


@dataclass(frozen=True)
class RelationSet:
    n: int
    z_exponents: tuple
    betas: tuple
    relations: tuple  # linear forms in the x[i,j], ordered by (beta, l)
    E: tuple  # rows aligned with relations; column (i-1)(d+1) + (j-1)
    rank: int

    @property
    def u(self) -> int:
        return len(self.z_exponents)


def build_relations(hb: HilbertBurchData, n: int) -> RelationSet:
    """One linear form per ``(beta, l)``: the syzygy ``sum_j L_lj F_j = 0`` times ``w^beta``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    d = len(hb.L)
    zs = lex_exponents(n)
    zidx = {a: i for i, a in enumerate(zs, 1)}
    betas = lex_exponents(n - 1)
    order = blowup_order(d, n)
    u = len(zs)
    rows, rels = [], []
    for b in betas:
        for l in range(d):
            row = [Fraction(0)] * (u * (d + 1))
            for j in range(d + 1):
                for k in range(3):
                    alpha = list(b)
                    alpha[k] += 1
                    i = zidx[tuple(alpha)]
                    row[(i - 1) * (d + 1) + j] += hb.lam[l][j][k]
            rows.append(tuple(row))
            rel = Polynomial(order, {((order.table.position(xvar(c // (d + 1) + 1, c % (d + 1) + 1)), 1),): v
                                     for c, v in enumerate(row) if v})
            rels.append(rel)
    r = rank(rows)
    if r != len(rows):
        raise GenericityError(f"relation matrix E has rank {r} < {len(rows)}; maximal rank violated")
    return RelationSet(n, tuple(zs), tuple(betas), tuple(rels), tuple(rows), r)


def catalecticant(n: int) -> list[list[int]]:
    return catalecticant_pattern(n)


def build_box_A(d: int, n: int) -> BoxMatrix:
    """``(d+1) x 3 x C(n+1,2)`` box with entry ``(i, j, k) = x[cat(j,k), i]``."""
    cat = catalecticant(n)
    order = blowup_order(d, n)
    sizes = (d + 1, 3, comb(n + 1, 2))
    ents = {(i, j, k): xvar(cat[j - 1][k - 1], i) for (i, j, k) in positions(sizes)}
    return BoxMatrix(sizes, ents, order)


# ---------------------------------------------------------------------------
# model


@dataclass(frozen=True)
class BlowupModel:
    d: int
    n: int
    points: PointSet
    hb: HilbertBurchData
    rel: RelationSet
    cat: tuple
    box: BoxMatrix
    ideal: Ideal

    @property
    def t(self) -> int:
        return self.d + self.n

    @property
    def u(self) -> int:
        return comb(self.n + 2, 2)

    @property
    def p(self) -> int:
        return comb(self.n + 2, 2) * (self.d + 1) - 1

    @property
    def s(self) -> int:
        return self.points.s

    @property
    def order(self) -> MonomialOrder:
        return self.ideal.order

    def z(self, i: int) -> Polynomial:
        return w_monomial(self.rel.z_exponents[i - 1])

    def coordinate_images(self) -> dict[str, Polynomial]:
        """``x[i,j] -> z_i F_j``."""
        return {xvar(i, j): self.z(i) * self.hb.F[j - 1]
                for i in range(1, self.u + 1) for j in range(1, self.d + 2)}


def assemble_ideal(rel: RelationSet, A: BoxMatrix) -> Ideal:
    """Linear relations first, then the 2x2 minors of ``A``."""
    return Ideal(tuple(rel.relations) + tuple(all_minor_list(A)), A.order)


def build_model(d: int, n: int, seed: int) -> BlowupModel:
    pts = gen_points(d, seed)
    hb = hilbert_burch(interpolate_Id(pts))
    rel = build_relations(hb, n)
    A = build_box_A(d, n)
    cat = tuple(tuple(r) for r in catalecticant(n))
    return BlowupModel(d, n, pts, hb, rel, cat, A, assemble_ideal(rel, A))


# ---------------------------------------------------------------------------
# verification


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    status: str | None = None  # overrides pass/fail, e.g. "partial"

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status or ("pass" if self.passed else "fail"),
                "detail": self.detail}


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "", status: str | None = None) -> Check:
        c = Check(name, bool(passed), detail, status)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def partial(self) -> bool:
        return any(c.status == "partial" for c in self.checks)

    def to_json(self) -> list:
        return [c.to_json() for c in self.checks]


def structural_report(model: BlowupModel) -> Report:
    """Exact identities of the construction that do not need a Gröbner basis."""
    rep = Report()
    d, n = model.d, model.n
    hb = model.hb
    rep.add("genericity_certificate", all(r == e for _, r, e in model.points.certificate),
            "; ".join(f"deg {t}: rank {r}/{e}" for t, r, e in model.points.certificate))
    syz = [sum((a * f for a, f in zip(row, hb.F)), W.zero()) for row in hb.L]
    rep.add("syzygy_identity", all(s.is_zero() for s in syz), f"{len(syz)} rows of L")
    D = signed_minors([list(r) for r in hb.L])
    rep.add("signed_minor_identity", all((f - g.scale(hb.rho)).is_zero() for f, g in zip(hb.F, D)),
            f"rho = {hb.rho}")
    rng = random.Random(7919 * model.points.seed + 1)
    while True:
        pt = (Fraction(rng.randint(-50, 50)), Fraction(rng.randint(-50, 50)), Fraction(1))
        if hb.F[0].evaluate(_point_values(pt)):
            break
    Lpt = [[e.evaluate(_point_values(pt)) for e in row] for row in hb.L]
    rep.add("L_full_rank_off_curve", rank(Lpt) == d, f"rank {rank(Lpt)} at {[str(c) for c in pt]}")
    want = comb(n + 1, 2) * d
    rep.add("E_maximal_rank", model.rel.rank == want, f"rank(E) = {model.rel.rank}, expected {want}")
    rep.add("relation_count", len(model.rel.relations) == want, f"{len(model.rel.relations)} relations")
    nvars = len(model.order.table)
    rep.add("ambient_variable_count", nvars == comb(n + 2, 2) * (d + 1) == model.p + 1,
            f"{nvars} variables, p = {model.p}")
    # dimension of the degree-t piece of I_X
    t = model.t
    span = [_coeff_vector(w_monomial(a) * f, t) for a in lex_exponents(n) for f in hb.F]
    dim_it = rank(span)
    expect = (n + 1) * d + comb(n + 2, 2)
    rep.add("degree_t_piece_dimension",
            dim_it == expect == comb(t + 2, 2) - model.s == nvars - model.rel.rank,
            f"dim I_t = {dim_it}, expected {expect}")
    # (***): catalecticant minors vanish on the Veronese
    zt = MonomialOrder(VarTable([f"z{i}" for i in range(1, model.u + 1)]))
    cbox = BoxMatrix((3, len(model.cat[0])),
                     {(j, k): f"z{model.cat[j - 1][k - 1]}" for j in range(1, 4)
                      for k in range(1, len(model.cat[0]) + 1)}, zt)
    ver = {f"z{i}": model.z(i) for i in range(1, model.u + 1)}
    cat_minors = all_minor_list(cbox)
    rep.add("catalecticant_minors_vanish", all(g.substitute(ver, W).is_zero() for g in cat_minors),
            f"{len(cat_minors)} minors")
    # (**): the u x (d+1) matrix M has rank one on the image
    mbox = BoxMatrix((model.u, d + 1), {(i, j): xvar(i, j) for i in range(1, model.u + 1)
                                         for j in range(1, d + 2)}, model.order)
    imgs = model.coordinate_images()
    m_minors = all_minor_list(mbox)
    rep.add("flattening_minors_vanish", all(g.substitute(imgs, W).is_zero() for g in m_minors),
            f"{len(m_minors)} minors")
    if n == 1:
        rep.add("collapse_to_matrix", collapse_check(model.box), "n = 1: A is an ordinary 3 x (d+1) matrix")
    return rep


def collapse_check(A: BoxMatrix) -> bool:
    """For ``n = 1``: ``A`` is a 3 x (d+1) matrix of distinct variables with the same minors."""
    r1, r2, r3 = A.sizes
    if r2 != 3 or r3 != 1 or not A.is_injective():
        return False
    mat = BoxMatrix((3, r1), {(j, i): xvar(j, i) for j in range(1, 4) for i in range(1, r1 + 1)}, A.order)
    if any(A.entries[(i, j, 1)] != mat.entries[(j, i)] for i in range(1, r1 + 1) for j in range(1, 4)):
        return False
    return set(all_minor_list(A)) == set(all_minor_list(mat))


def verify_vanishing(model: BlowupModel, samples: int = 20) -> Report:
    """Every generator dies under ``x[i,j] -> z_i F_j``, symbolically and at sample points."""
    rep = Report()
    imgs = model.coordinate_images()
    gens = model.ideal.generators
    bad = [str(g) for g in gens if not g.substitute(imgs, W).is_zero()]
    rep.add("generators_vanish_identically", not bad,
            f"{len(gens)} generators" if not bad else f"nonzero image: {bad[0]}")

    rng = random.Random(104729 * model.points.seed + 17)
    names = [xvar(i, j) for i in range(1, model.u + 1) for j in range(1, model.d + 2)]
    ok_points = 0
    unique_ok = True
    tried = 0
    while ok_points < samples:
        tried += 1
        pt = tuple(Fraction(rng.randint(-30, 30), rng.randint(1, 7)) for _ in range(3))
        vals = _point_values(pt)
        Fv = [f.evaluate(vals) for f in model.hb.F]
        if not any(Fv) or not any(pt):
            continue  # on the base locus or not a projective point
        zv = [_eval_monomial(a, pt) for a in model.rel.z_exponents]
        xv = {xvar(i, j): zv[i - 1] * Fv[j - 1] for i in range(1, model.u + 1) for j in range(1, model.d + 2)}
        if any(g.evaluate(xv) for g in gens):
            rep.add("generators_vanish_at_image_points", False, f"failure at w = {[str(c) for c in pt]}")
            return rep
        # rank-one flattening recovers z up to scale
        M = [[xv[xvar(i, j)] for j in range(1, model.d + 2)] for i in range(1, model.u + 1)]
        col = next(j for j in range(model.d + 1) if any(M[i][j] for i in range(model.u)))
        rec = [M[i][col] for i in range(model.u)]
        unique_ok &= rank(M) == 1 and rank([rec, zv]) == 1
        ok_points += 1
    rep.add("generators_vanish_at_image_points", True, f"{samples} points off the base locus")
    rep.add("flattening_recovers_veronese_point", unique_ok, "M(Q) has rank 1 and its column is z(P)")

    nonzero = 0
    for _ in range(samples):
        xv = {nm: Fraction(rng.randint(-20, 20)) for nm in names}
        if any(g.evaluate(xv) for g in gens):
            nonzero += 1
    rep.add("nonzero_at_random_points", nonzero == samples,
            f"{nonzero}/{samples} random points violate some generator")
    return rep


DEFAULT_SURFACE_BUDGET = Budget(max_pairs=4000, max_terms=20_000)


def verify_surface(model: BlowupModel, budget: Budget = DEFAULT_SURFACE_BUDGET) -> Report:
    """Krull dimension 3 and degree ``t^2 - s`` of the quotient, when the budget allows.

    On budget exhaustion the dimension/degree check is reported as partial and
    the degree-1 Hilbert value is checked from a degree-truncated basis instead.
    """
    rep = Report()
    expect_deg = model.t ** 2 - model.s
    try:
        gb = model.ideal.groebner(Budget(budget.max_pairs, budget.max_terms))
    except BudgetExhausted as exc:
        rep.add("surface_dimension_degree", True,
                f"not determined: {exc}; expected dimension 3, degree {expect_deg}", status="partial")
        trunc = model.ideal.groebner(Budget(budget.max_pairs, budget.max_terms, max_degree=2))
        h1 = hilbert_samples(Ideal(trunc.generators, trunc.order, is_groebner=True), 1)[1].quotient_dim
        want = (model.n + 1) * model.d + comb(model.n + 2, 2)
        rep.add("hilbert_degree_1", h1 == want, f"H(1) = {h1} from degree-2 truncated basis, expected {want}")
        return rep
    dim, deg = hilbert_dimension_degree(gb)
    rep.add("surface_dimension_degree", dim == 3 and deg == expect_deg,
            f"dimension {dim} (expected 3), degree {deg} (expected {expect_deg}); {len(gb)} basis elements")
    h1 = hilbert_samples(gb, 1)[1].quotient_dim
    want = (model.n + 1) * model.d + comb(model.n + 2, 2)
    rep.add("hilbert_degree_1", h1 == want, f"H(1) = {h1}, expected {want}")
    return rep


def weak_box_report(model: BlowupModel, gate: int | None = 24, budget: Budget = DEFAULT_BUDGET):
    return weak_box_check(model.box, gate, budget)


def model_to_json(model: BlowupModel) -> dict:
    def q(v: Fraction) -> str:
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    return {
        "d": model.d, "n": model.n, "t": model.t, "p": model.p, "seed": model.points.seed,
        "points": [[q(c) for c in pt] for pt in model.points.points],
        "point_attempts": model.points.attempts,
        "F": [str(f) for f in model.hb.F],
        "L": [[str(e) for e in row] for row in model.hb.L],
        "rho": q(model.hb.rho),
        "z": [str(model.z(i)) for i in range(1, model.u + 1)],
        "relations": [str(r) for r in model.rel.relations],
        "E": [[q(v) for v in row] for row in model.rel.E],
        "catalecticant": [list(r) for r in model.cat],
        "box": {"sizes": list(model.box.sizes),
                "entries": [[list(pos), model.box.entries[pos]] for pos in model.box.positions()]},
        "ideal": model.ideal.to_json(),
    }
