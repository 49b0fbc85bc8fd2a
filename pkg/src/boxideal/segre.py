"""Segre parameterisation, decomposable tensors and closed-form invariants."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Mapping, Sequence

from .box import BoxMatrix, all_minor_list, format_box_spec, positions
from .groebner import DEFAULT_BUDGET, Budget, Ideal, eliminate
from .linalg import rank
from .poly import MonomialOrder, Polynomial, VarTable, box_var

DEFAULT_KERNEL_GATE = 12


class GateExceeded(ValueError):
    """Input is larger than the configured size gate for an elimination oracle."""


# ---------------------------------------------------------------------------
# parameterisation


@dataclass(frozen=True)
class SegreInstance:
    sizes: tuple
    x_order: MonomialOrder
    y_order: MonomialOrder

    @classmethod
    def of(cls, sizes: Sequence[int]) -> "SegreInstance":
        sizes = tuple(sizes)
        ynames = [f"y[{l},{i}]" for l, r in enumerate(sizes, 1) for i in range(1, r + 1)]
        return cls(sizes, MonomialOrder(VarTable.box(sizes)), MonomialOrder(VarTable(ynames)))

    def image(self, pos: Sequence[int]) -> Polynomial:
        """``prod_l y[l, i_l]``."""
        out = self.y_order.one()
        for l, i in enumerate(pos, 1):
            out = out * self.y_order.var(f"y[{l},{i}]")
        return out

    def assignment(self) -> dict[str, Polynomial]:
        return {box_var(p): self.image(p) for p in positions(self.sizes)}


def segre_image(f: Polynomial, inst: SegreInstance) -> Polynomial:
    return f.substitute(inst.assignment(), inst.y_order)


def segre_vanishing(A: BoxMatrix | Sequence[Polynomial], sizes: Sequence[int] | None = None) -> bool:
    """True iff every given polynomial (default: the minors of ``A``) dies under the Segre map."""
    if isinstance(A, BoxMatrix):
        if not A.is_injective():
            raise ValueError("Segre substitution needs a generic box")
        gens, sizes = all_minor_list(A), A.sizes
    else:
        gens = list(A)
        if sizes is None:
            raise ValueError("sizes are required when passing polynomials")
    inst = SegreInstance.of(sizes)
    return all(segre_image(g, inst).is_zero() for g in gens)


def kernel_oracle(sizes: Sequence[int], gate: int | None = DEFAULT_KERNEL_GATE,
                  budget: Budget = DEFAULT_BUDGET) -> Ideal:
    """Kernel of ``x[pos] -> prod_l y[l, pos_l]`` by eliminating the ``y`` variables."""
    sizes = tuple(sizes)
    npos = prod(sizes)
    if gate is not None and npos > gate:
        raise GateExceeded(f"box {format_box_spec(sizes)} has {npos} positions, gate is {gate}")
    inst = SegreInstance.of(sizes)
    big = MonomialOrder(VarTable(inst.y_order.table.names + inst.x_order.table.names))
    gens = []
    for p in positions(sizes):
        gens.append(big.var(box_var(p)) - inst.image(p).to_order(big))
    res = eliminate(Ideal(tuple(gens), big), inst.y_order.table.names, budget)
    return Ideal(tuple(g.to_order(inst.x_order) for g in res.generators), inst.x_order).groebner(budget)


# ---------------------------------------------------------------------------
# closed forms


def hilbert_formula(sizes: Sequence[int], t: int) -> tuple[int, int]:
    """``(ideal_dim, quotient_dim)`` of the degree-``t`` piece for a generic box."""
    if t < 0:
        raise ValueError("degree must be non-negative")
    q = prod(comb(r + t - 1, t) for r in sizes)
    return comb(prod(sizes) + t - 1, t) - q, q


def grade_formula(sizes: Sequence[int]) -> int:
    return prod(sizes) - sum(sizes) + (len(sizes) - 1)


# ---------------------------------------------------------------------------
# localisation map


def phi_numerators(A: BoxMatrix, pivot: Sequence[int]) -> dict[str, Polynomial]:
    """Numerators of ``x_i -> prod_l x_{pivot with slot l set to i_l} / x_pivot^(n-1)``."""
    pivot = tuple(pivot)
    out = {}
    for p in A.positions():
        num = A.order.one()
        for l in range(A.n):
            q = pivot[:l] + (p[l],) + pivot[l + 1:]
            num = num * A.order.var(A.entries[q])
        out[A.entries[p]] = num
    return out


def phi_kills_minors(A: BoxMatrix, pivot: Sequence[int]) -> bool:
    """Every minor maps to zero once the common power of ``x_pivot`` is cleared.

    Minors are quadrics, so each term of the image carries the same
    denominator ``x_pivot^(2(n-1))`` and only the numerators need comparing.
    """
    if tuple(pivot) not in A.entries:
        raise ValueError(f"pivot {pivot} is not a box position")
    nums = phi_numerators(A, pivot)
    return all(g.substitute(nums, A.order).is_zero() for g in all_minor_list(A))


# ---------------------------------------------------------------------------
# concrete tensors


@dataclass(frozen=True)
class ConcreteTensor:
    sizes: tuple
    values: Mapping  # position -> Fraction, zeros omitted

    @classmethod
    def from_dict(cls, sizes: Sequence[int], values: Mapping) -> "ConcreteTensor":
        sizes = tuple(sizes)
        valid = set(positions(sizes))
        vals = {}
        for p, v in values.items():
            p = tuple(p)
            if p not in valid:
                raise ValueError(f"position {list(p)} outside box {format_box_spec(sizes)}")
            v = Fraction(v)
            if v:
                vals[p] = v
        return cls(sizes, vals)

    @classmethod
    def outer(cls, factors: Sequence[Sequence]) -> "ConcreteTensor":
        sizes = tuple(len(f) for f in factors)
        vals = {p: prod((Fraction(factors[l][i - 1]) for l, i in enumerate(p)), start=Fraction(1))
                for p in positions(sizes)}
        return cls.from_dict(sizes, vals)

    def __getitem__(self, pos) -> Fraction:
        return self.values.get(tuple(pos), Fraction(0))

    def is_zero(self) -> bool:
        return not self.values

    def to_json(self) -> dict:
        return {
            "sizes": list(self.sizes),
            "entries": [{"pos": list(p), "value": _fmt(v)} for p, v in sorted(self.values.items())],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "ConcreteTensor":
        vals = {tuple(e["pos"]): Fraction(str(e["value"])) for e in doc["entries"]}
        return cls.from_dict(doc["sizes"], vals)

    @classmethod
    def load(cls, path: str) -> "ConcreteTensor":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class Decomposition:
    decomposable: bool
    factors: list | None = None  # list of lists of Fraction
    anchor: tuple | None = None
    witness: dict | None = None  # the first nonvanishing minor

    def to_json(self) -> dict:
        doc: dict = {"decomposable": self.decomposable}
        if self.factors is not None:
            doc["anchor"] = list(self.anchor)
            doc["factors"] = [[_fmt(v) for v in f] for f in self.factors]
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


def _first_nonvanishing_minor(T: ConcreteTensor) -> dict | None:
    ps = positions(T.sizes)
    for axis in range(len(T.sizes)):
        for p, q in combinations(ps, 2):
            if p[axis] == q[axis]:
                continue
            p2 = p[:axis] + (q[axis],) + p[axis + 1:]
            q2 = q[:axis] + (p[axis],) + q[axis + 1:]
            val = T[p] * T[q] - T[p2] * T[q2]
            if val:
                return {"axis": axis + 1, "p": list(p), "q": list(q), "value": _fmt(val)}
    return None


def is_decomposable(T: ConcreteTensor) -> Decomposition:
    """Decide ``T = v_1 ⊗ ... ⊗ v_n`` by evaluating all 2x2 minors at ``T``.

    When decomposable, factors are read off the axis-parallel fibres through
    the lexicographically first nonzero entry ``a``; the first factor absorbs
    the scalar ``T[a]^-(n-1)`` so that the outer product reproduces ``T``.
    """
    if T.is_zero():
        raise ValueError("the zero tensor has no decomposability witness")
    bad = _first_nonvanishing_minor(T)
    if bad is not None:
        return Decomposition(False, witness=bad)
    a = min(T.values)
    n = len(T.sizes)
    factors = []
    for l, r in enumerate(T.sizes):
        factors.append([T[a[:l] + (k,) + a[l + 1:]] for k in range(1, r + 1)])
    scale = T[a] ** (n - 1)
    factors[0] = [v / scale for v in factors[0]]
    if ConcreteTensor.outer(factors).values != T.values:
        raise ArithmeticError("minors vanish but the reconstructed outer product differs")
    return Decomposition(True, factors, a)


def flattening(T: ConcreteTensor, axis: int) -> list[list[Fraction]]:
    """Matrix with rows indexed by coordinate ``axis`` (1-based), columns by the rest."""
    l = axis - 1
    rest = [p for p in positions(T.sizes[:l] + T.sizes[l + 1:])]
    return [[T[c[:l] + (i,) + c[l:]] for c in rest] for i in range(1, T.sizes[l] + 1)]


def flattening_ranks(T: ConcreteTensor) -> list[int]:
    return [rank(flattening(T, l)) for l in range(1, len(T.sizes) + 1)]
