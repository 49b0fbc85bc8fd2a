"""Box-shaped matrices and their ideals of 2x2 minors."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb, prod
from typing import Mapping, Sequence

from .groebner import DEFAULT_BUDGET, Budget, Ideal, intersect
from .poly import MonomialOrder, Polynomial, VarTable, box_var, lex_exponents

Position = tuple  # tuple[int, ...], 1-based


def parse_box_spec(spec: str) -> tuple[int, ...]:
    """``"2x3x4"`` -> ``(2, 3, 4)``."""
    text = spec.strip().lower()
    if not re.fullmatch(r"\d+(x\d+)+", text):
        raise ValueError(f"malformed box spec {spec!r}; expected something like 2x3x4")
    sizes = tuple(int(s) for s in text.split("x"))
    if any(r < 1 for r in sizes):
        raise ValueError(f"box sizes must be positive: {spec!r}")
    return sizes


def format_box_spec(sizes: Sequence[int]) -> str:
    return "x".join(str(r) for r in sizes)


def positions(sizes: Sequence[int]) -> list[Position]:
    return list(product(*(range(1, r + 1) for r in sizes)))


@dataclass(frozen=True)
class BoxMatrix:
    """An ``r1 x ... x rn`` array of variables of a polynomial ring.

    ``entries`` maps each 1-based position to a variable name of ``order``'s
    table.  In the generic case the map is ``pos -> x[pos]`` and injective;
    weak boxes may repeat variables.
    """

    sizes: tuple
    entries: Mapping
    order: MonomialOrder = field(compare=False)

    def __post_init__(self):
        if len(self.sizes) < 2:
            raise ValueError("a box needs at least two axes")
        want = set(positions(self.sizes))
        if set(self.entries) != want:
            raise ValueError("entries must cover exactly the box positions")
        for name in self.entries.values():
            self.order.table.position(name)

    @classmethod
    def generic(cls, sizes: Sequence[int]) -> "BoxMatrix":
        sizes = tuple(sizes)
        order = MonomialOrder(VarTable.box(sizes))
        return cls(sizes, {p: box_var(p) for p in positions(sizes)}, order)

    @property
    def n(self) -> int:
        return len(self.sizes)

    @property
    def table(self) -> VarTable:
        return self.order.table

    def positions(self) -> list[Position]:
        return positions(self.sizes)

    def entry(self, pos: Sequence[int]) -> str:
        return self.entries[tuple(pos)]

    def is_injective(self) -> bool:
        return len(set(self.entries.values())) == len(self.entries)

    def variable_set(self) -> list[str]:
        used = set(self.entries.values())
        return [n for n in self.table.names if n in used]


def _swap(p: Position, q: Position, axis: int) -> tuple[Position, Position]:
    p2 = p[:axis] + (q[axis],) + p[axis + 1:]
    q2 = q[:axis] + (p[axis],) + q[axis + 1:]
    return p2, q2


def minor(A: BoxMatrix, p: Position, q: Position, axis: int) -> Polynomial:
    """``a_p a_q - a_p' a_q'`` where ``p', q'`` swap the coordinate ``axis`` (0-based)."""
    p2, q2 = _swap(p, q, axis)
    pos = A.table.position
    e = A.entries
    d: dict = {}
    for (u, v), c in (((p, q), 1), ((p2, q2), -1)):
        i, j = sorted((pos(e[u]), pos(e[v])))
        m = ((i, 2),) if i == j else ((i, 1), (j, 1))
        val = d.get(m, 0) + c
        if val:
            d[m] = Fraction(val)
        else:
            d.pop(m, None)
    return Polynomial._raw(A.order, d)


def _normalize_sign(f: Polynomial) -> Polynomial:
    return -f if f.leading_coefficient() < 0 else f


def minor_pairs(A: BoxMatrix, axis: int):
    """Yield ``(p, q, minor)`` over pairs ``p < q`` differing in ``axis``; zero minors are skipped."""
    ps = A.positions()
    for p, q in combinations(ps, 2):
        if p[axis] == q[axis]:
            continue
        f = minor(A, p, q, axis)
        if f:
            yield p, q, f


def minors(A: BoxMatrix, axis: int) -> list[Polynomial]:
    """Distinct nonzero 2x2 minors about ``axis`` (1-based), leading coefficient +1.

    Order of first appearance over position pairs in lexicographic order.
    """
    if not 1 <= axis <= A.n:
        raise ValueError(f"axis {axis} out of range 1..{A.n}")
    out: list[Polynomial] = []
    seen: set = set()
    for _, _, f in minor_pairs(A, axis - 1):
        f = _normalize_sign(f)
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


def all_minor_list(A: BoxMatrix) -> list[Polynomial]:
    out: list[Polynomial] = []
    seen: set = set()
    for axis in range(1, A.n + 1):
        for f in minors(A, axis):
            if f not in seen:
                seen.add(f)
                out.append(f)
    return out


def all_minors(A: BoxMatrix) -> Ideal:
    """The ideal of 2x2 minors, generators deduplicated across axes."""
    return Ideal(tuple(all_minor_list(A)), A.order)


def sub_box(A: BoxMatrix, axis: int) -> BoxMatrix:
    """Restriction to positions whose ``axis`` coordinate is below its maximum."""
    l = axis - 1
    if A.sizes[l] < 2:
        raise ValueError("sub-box along an axis of length 1 is empty")
    sizes = A.sizes[:l] + (A.sizes[l] - 1,) + A.sizes[l + 1:]
    ents = {p: A.entries[p] for p in positions(sizes)}
    return BoxMatrix(sizes, ents, A.order)


def face(A: BoxMatrix, axis: int) -> list[Position]:
    """Positions with coordinate ``axis`` at its maximum."""
    l = axis - 1
    return [p for p in A.positions() if p[l] == A.sizes[l]]


def face_ideal(A: BoxMatrix, axis: int) -> Ideal:
    """``<I2(A_l), entries on the face B_l>``."""
    gens: list[Polynomial] = []
    if A.sizes[axis - 1] >= 2:
        gens.extend(all_minor_list(sub_box(A, axis)))
    seen = set()
    for p in face(A, axis):
        name = A.entries[p]
        if name not in seen:
            seen.add(name)
            gens.append(A.order.var(name))
    return Ideal(tuple(gens), A.order)


def corner_ideal(A: BoxMatrix) -> Ideal:
    """``<I2(A), a_{r1...rn}>``."""
    gens = all_minor_list(A) + [A.order.var(A.entries[tuple(A.sizes)])]
    return Ideal(tuple(gens), A.order)


def intersect_faces(A: BoxMatrix, budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """Intersection of all face ideals ``I_l``."""
    result = face_ideal(A, 1)
    for axis in range(2, A.n + 1):
        result = intersect(result, face_ideal(A, axis), budget)
    return result.groebner(budget)


def per_axis_minor_count(sizes: Sequence[int], axis: int) -> int:
    """Closed form for the number of distinct minors about one axis of a generic box."""
    rl = sizes[axis - 1]
    rest = prod(sizes) // rl
    return comb(rl, 2) * comb(rest, 2)


# ---------------------------------------------------------------------------
# 3-dimensional boxes


@dataclass(frozen=True)
class Sections:
    x: list  # r1 matrices of size r2 x r3
    y: list  # r2 matrices of size r1 x r3
    z: list  # r3 matrices of size r1 x r2


def sections(A: BoxMatrix) -> Sections:
    if A.n != 3:
        raise ValueError("sections are defined for 3-dimensional boxes only")
    r1, r2, r3 = A.sizes
    e = A.entries
    xs = [[[e[(i, j, k)] for k in range(1, r3 + 1)] for j in range(1, r2 + 1)] for i in range(1, r1 + 1)]
    ys = [[[e[(i, j, k)] for k in range(1, r3 + 1)] for i in range(1, r1 + 1)] for j in range(1, r2 + 1)]
    zs = [[[e[(i, j, k)] for j in range(1, r2 + 1)] for i in range(1, r1 + 1)] for k in range(1, r3 + 1)]
    return Sections(xs, ys, zs)


def catalecticant_pattern(n: int) -> list[list[int]]:
    """``3 x C(n+1, 2)`` table of 1-based indices into the degree-n monomials of ``w1, w2, w3``.

    Rows follow ``w1, w2, w3``; columns the degree ``n-1`` monomials in lex order.
    Entry ``(j, k)`` is the index of ``w_j * w^beta_k`` in the lex list of degree-n
    monomials.
    """
    zs = lex_exponents(n)
    idx = {a: i + 1 for i, a in enumerate(zs)}
    betas = lex_exponents(n - 1)
    rows = []
    for j in range(3):
        row = []
        for b in betas:
            a = list(b)
            a[j] += 1
            row.append(idx[tuple(a)])
        rows.append(row)
    return rows


def _all_distinct(mat: list[list[str]]) -> bool:
    flat = [v for row in mat for v in row]
    return len(set(flat)) == len(flat)


def matches_catalecticant(mat: list[list[str]]) -> int | None:
    """The ``n`` for which ``mat`` is a relabelled Cat(1, n-1; 3), else None."""
    if len(mat) != 3:
        return None
    cols = len(mat[0])
    n = 1
    while comb(n + 1, 2) < cols:
        n += 1
    if comb(n + 1, 2) != cols:
        return None
    pat = catalecticant_pattern(n)
    fwd: dict = {}
    back: dict = {}
    for j in range(3):
        for k in range(cols):
            v, l = mat[j][k], pat[j][k]
            if fwd.setdefault(v, l) != l or back.setdefault(l, v) != v:
                return None
    return n


def classify_section(mat: list[list[str]], allow_catalecticant: bool) -> str | None:
    if allow_catalecticant:
        n = matches_catalecticant(mat)
        if n is not None:
            return f"Cat(1,{n - 1};3)"
    if _all_distinct(mat):
        return "generic"
    return None


@dataclass
class Verdict:
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""

    def to_json(self) -> dict:
        return {"status": self.status, "detail": self.detail}


@dataclass
class WeakBoxReport:
    a: Verdict
    b: Verdict
    c: Verdict
    d: Verdict
    x_sections: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.status == "pass" for v in (self.a, self.b, self.c, self.d))

    def to_json(self) -> dict:
        return {
            "a": self.a.to_json(), "b": self.b.to_json(),
            "c": self.c.to_json(), "d": self.d.to_json(),
            "x_sections": self.x_sections,
        }


DEFAULT_WEAK_GATE = 24


def _condition_c(A: BoxMatrix) -> tuple[bool, str]:
    gens = all_minor_list(A)
    for p in A.positions():
        v = A.entries[p]
        zero = {n: A.order.zero() for n in A.table.names}
        zero[v] = A.order.var(v)
        if all(g.substitute(zero, A.order).is_zero() for g in gens):
            return True, f"position {list(p)} ({v})"
    return False, "every position leaves a nonzero minor"


def weak_box_check(A: BoxMatrix, gate: int | None = DEFAULT_WEAK_GATE,
                   budget: Budget = DEFAULT_BUDGET) -> WeakBoxReport:
    """Check the four weak-box conditions for a 3-dimensional box of variables.

    (b) is an ideal equality decided by Gröbner bases and is skipped above
    ``gate`` positions.  (d) is a structural classification of sections into
    classes whose minor ideals are known to be prime: matrices of distinct
    variables, and (for x-sections) relabelled catalecticants.
    """
    if A.n != 3:
        raise ValueError("weak-box conditions are stated for 3-dimensional boxes")
    a = Verdict("pass", "all entries are ring variables")

    npos = prod(A.sizes)
    if gate is not None and npos > gate:
        b = Verdict("skipped", f"{npos} positions exceeds gate {gate}")
    else:
        lhs = corner_ideal(A).groebner(budget)
        rhs = intersect_faces(A, budget)
        extra = next((g for g in rhs.generators if not lhs.contains(g)), None)
        missing = next((g for g in lhs.generators if not rhs.contains(g)), None)
        if extra is not None:
            b = Verdict("fail", f"{extra} lies in every face ideal but not in <I2(A), corner>")
        elif missing is not None:
            b = Verdict("fail", f"{missing} lies in <I2(A), corner> but not in every face ideal")
        else:
            b = Verdict("pass", "<I2(A), corner> equals the intersection of face ideals")

    ok, where = _condition_c(A)
    c = Verdict("pass" if ok else "fail", where)

    secs = sections(A)
    bad = []
    xs_kinds = []
    for i, m in enumerate(secs.x, 1):
        kind = classify_section(m, allow_catalecticant=True)
        xs_kinds.append(kind)
        if kind is None:
            bad.append(f"x-section {i}")
    for j, m in enumerate(secs.y, 1):
        if classify_section(m, allow_catalecticant=False) is None:
            bad.append(f"y-section {j}")
    for k, m in enumerate(secs.z, 1):
        if classify_section(m, allow_catalecticant=False) is None:
            bad.append(f"z-section {k}")
    d = Verdict("fail", "unclassified: " + ", ".join(bad)) if bad else \
        Verdict("pass", "all sections are generic or catalecticant")
    return WeakBoxReport(a, b, c, d, xs_kinds)
