"""Sparse multivariate polynomials over the rationals.

A monomial is a tuple of ``(position, exponent)`` pairs sorted by position,
with no zero exponents.  Position 0 of a :class:`VarTable` is the *largest*
variable; every monomial order below respects that convention.  Box tables
therefore list ``x[r1,...,rn]`` first and ``x[1,...,1]`` last, so that
``x[1,...,1]`` is the smallest variable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from itertools import product as _cartesian
from typing import Callable, Iterable, Mapping, Sequence, Union

Monomial = tuple  # tuple[tuple[int, int], ...]
Coefficient = Union[int, Fraction]

ONE_MONOMIAL: Monomial = ()


class StructuralError(ValueError):
    """Operands live over different variable tables or orders."""


# ---------------------------------------------------------------------------
# monomial arithmetic


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for i, e in b:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    if len(a) > len(b):
        return False
    db = dict(b)
    for i, e in a:
        if db.get(i, 0) < e:
            return False
    return True


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient ``a / b``; the caller guarantees ``b | a``."""
    d = dict(a)
    for i, e in b:
        r = d[i] - e
        if r:
            d[i] = r
        else:
            del d[i]
    return tuple(sorted(d.items()))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a)
    for i, e in b:
        if d.get(i, 0) < e:
            d[i] = e
    return tuple(sorted(d.items()))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    da = dict(a)
    return not any(i in da for i, _ in b)


def lex_exponents(degree: int, nvars: int = 3) -> list[tuple[int, ...]]:
    """Exponent vectors of total ``degree``, lex order with the first variable largest."""
    if degree < 0:
        return []

    def rec(k: int, left: int):
        if k == 1:
            yield (left,)
            return
        for a in range(left, -1, -1):
            for rest in rec(k - 1, left - a):
                yield (a,) + rest

    return list(rec(nvars, degree))


def mono_from_exponents(exps: Sequence[int]) -> Monomial:
    return tuple((i, e) for i, e in enumerate(exps) if e)


# ---------------------------------------------------------------------------
# variable tables


def box_var(index: Sequence[int], prefix: str = "x") -> str:
    return f"{prefix}[{','.join(str(i) for i in index)}]"


_MULTI = re.compile(r"^([A-Za-z_]\w*)\[(\d+(?:,\d+)*)\]$")


def parse_multi_index(name: str) -> tuple[str, tuple[int, ...]] | None:
    m = _MULTI.match(name)
    if not m:
        return None
    return m.group(1), tuple(int(s) for s in m.group(2).split(","))


class VarTable:
    """Ordered, duplicate-free list of variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        self._index = {n: i for i, n in enumerate(self.names)}
        if len(self._index) != len(self.names):
            raise ValueError("duplicate variable names in table")

    @classmethod
    def box(cls, sizes: Sequence[int], prefix: str = "x") -> "VarTable":
        """Variables ``x[i1,...,in]``, largest index tuple first."""
        idx = sorted(_cartesian(*(range(1, r + 1) for r in sizes)), reverse=True)
        return cls(box_var(t, prefix) for t in idx)

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VarTable({list(self.names)!r})"

    def position(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None


# ---------------------------------------------------------------------------
# monomial orders


def _degrevlex_key(m: Monomial):
    return (sum(e for _, e in m), tuple((-i, -e) for i, e in reversed(m)))


def _lex_key(m: Monomial):
    return tuple((-i, e) for i, e in m)


_BASE_KEYS = {"degrevlex": _degrevlex_key, "lex": _lex_key}


class MonomialOrder:
    """A monomial order over a fixed :class:`VarTable`.

    ``kind`` is ``"degrevlex"``, ``"lex"`` or ``"block"``.  A block order
    compares first the part of the monomial in ``elim`` (by degrevlex), then
    the remaining part by ``inner`` (``"degrevlex"`` or ``"lex"``).  Any
    variable in ``elim`` beats every monomial in the other variables, which is
    what elimination needs.
    """

    __slots__ = ("table", "kind", "elim", "inner", "key", "__weakref__")

    def __init__(self, table: VarTable, kind: str = "degrevlex",
                 elim: Iterable[str] = (), inner: str = "degrevlex"):
        if kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown order kind {kind!r}")
        self.table = table
        self.kind = kind
        if kind == "block":
            if inner not in _BASE_KEYS:
                raise ValueError(f"unknown inner order {inner!r}")
            elim_pos = frozenset(table.position(n) for n in elim)
            self.elim = tuple(n for n in table.names if table.position(n) in elim_pos)
            self.inner = inner
            inner_key = _BASE_KEYS[inner]

            def raw(m):
                head = tuple(p for p in m if p[0] in elim_pos)
                tail = tuple(p for p in m if p[0] not in elim_pos)
                return (_degrevlex_key(head), inner_key(tail))
        else:
            self.elim = ()
            self.inner = None
            raw = _BASE_KEYS[kind]
        self.key: Callable[[Monomial], object] = lru_cache(maxsize=None)(raw)

    def _ident(self):
        return (self.table, self.kind, self.elim, self.inner)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self) -> int:
        return hash(self._ident())

    def __repr__(self) -> str:
        if self.kind == "block":
            return f"MonomialOrder(block, elim={list(self.elim)}, inner={self.inner}, n={len(self.table)})"
        return f"MonomialOrder({self.kind}, n={len(self.table)})"

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def descriptor(self) -> dict:
        if self.kind == "block":
            return {"kind": "block", "elim": list(self.elim), "inner": self.inner}
        return {"kind": self.kind}

    @classmethod
    def from_descriptor(cls, table: VarTable, desc: Mapping) -> "MonomialOrder":
        return cls(table, desc["kind"], desc.get("elim", ()), desc.get("inner") or "degrevlex")

    # convenience constructors -------------------------------------------

    def var(self, name: str) -> "Polynomial":
        return Polynomial(self, {((self.table.position(name), 1),): Fraction(1)})

    def const(self, c: Coefficient) -> "Polynomial":
        return Polynomial(self, {ONE_MONOMIAL: Fraction(c)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def monomial(self, powers: Mapping[str, int]) -> Monomial:
        return tuple(sorted((self.table.position(n), e) for n, e in powers.items() if e))


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    return order.compare(m1, m2)


# ---------------------------------------------------------------------------
# polynomials


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


class Polynomial:
    """Immutable polynomial with rational coefficients.

    Internally a ``{monomial: Fraction}`` dict with no zero entries.
    :attr:`terms` exposes the canonical list of ``(coefficient, monomial)``
    pairs in strictly descending order.
    """

    __slots__ = ("order", "_d", "_terms", "_hash")

    def __init__(self, order: MonomialOrder, data: Mapping[Monomial, Coefficient] | None = None):
        self.order = order
        self._d = {m: _frac(c) for m, c in (data or {}).items() if c}
        self._terms = None
        self._hash = None

    @classmethod
    def _raw(cls, order: MonomialOrder, d: dict) -> "Polynomial":
        # trusted constructor: d already zero-free with Fraction values
        p = cls.__new__(cls)
        p.order = order
        p._d = d
        p._terms = None
        p._hash = None
        return p

    # -- accessors ----------------------------------------------------------

    @property
    def table(self) -> VarTable:
        return self.order.table

    @property
    def terms(self) -> list[tuple[Fraction, Monomial]]:
        if self._terms is None:
            key = self.order.key
            self._terms = [(self._d[m], m) for m in sorted(self._d, key=key, reverse=True)]
        return self._terms

    def as_dict(self) -> dict:
        return dict(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self) -> bool:
        return bool(self._d)

    def __len__(self) -> int:
        return len(self._d)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._d.get(m, Fraction(0))

    def leading_monomial(self) -> Monomial:
        if not self._d:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._d, key=self.order.key)

    def leading_coefficient(self) -> Fraction:
        return self._d[self.leading_monomial()]

    def total_degree(self) -> int:
        if not self._d:
            return -1
        return max(mono_degree(m) for m in self._d)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self._d}) <= 1

    def variables(self) -> list[str]:
        pos = sorted({i for m in self._d for i, _ in m})
        return [self.table.names[i] for i in pos]

    def monic(self) -> "Polynomial":
        if not self._d:
            return self
        return self.scale(1 / self.leading_coefficient())

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.order is not other.order and self.order != other.order:
            if self.table != other.table:
                raise StructuralError("polynomials over different variable tables")
            raise StructuralError("polynomials under different monomial orders")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.order.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._d)
        for m, c in other._d.items():
            v = d.get(m, 0) + c
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Polynomial._raw(self.order, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.order, {m: -c for m, c in self._d.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coefficient) -> "Polynomial":
        c = _frac(c)
        if not c:
            return self.order.zero()
        return Polynomial._raw(self.order, {m: v * c for m, v in self._d.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d: dict = {}
        for m1, c1 in self._d.items():
            for m2, c2 in other._d.items():
                m = mono_mul(m1, m2)
                v = d.get(m, 0) + c1 * c2
                if v:
                    d[m] = v
                else:
                    d.pop(m, None)
        return Polynomial._raw(self.order, d)

    __rmul__ = __mul__

    def mul_term(self, c: Fraction, m: Monomial) -> "Polynomial":
        return Polynomial._raw(self.order, {mono_mul(k, m): v * c for k, v in self._d.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.order.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.order.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.table == other.table and self._d == other._d

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self._d.items())))
        return self._hash

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, values: Mapping[str, Coefficient]) -> Fraction:
        names = self.table.names
        total = Fraction(0)
        for m, c in self._d.items():
            term = c
            for i, e in m:
                try:
                    term *= _frac(values[names[i]]) ** e
                except KeyError:
                    raise KeyError(f"no value for variable {names[i]!r}") from None
            total += term
        return total

    def substitute(self, assignment: Mapping[str, "Polynomial"],
                   target: MonomialOrder | None = None) -> "Polynomial":
        """Ring homomorphism sending each variable to a polynomial of ``target``.

        Every variable occurring in ``self`` must be assigned.
        """
        if target is None:
            target = next(iter(assignment.values())).order if assignment else self.order
        names = self.table.names
        powers: dict[tuple[int, int], Polynomial] = {}
        result = target.zero()
        for m, c in self._d.items():
            term = target.const(c)
            for i, e in m:
                name = names[i]
                if name not in assignment:
                    raise KeyError(f"variable {name!r} is not assigned")
                img = assignment[name]
                if img.order != target:
                    raise StructuralError(f"image of {name!r} is not over the target ring")
                pw = powers.get((i, e))
                if pw is None:
                    pw = powers[(i, e)] = img ** e
                term = term * pw
            result = result + term
        return result

    def to_order(self, order: MonomialOrder) -> "Polynomial":
        """Same polynomial read in another ring; variables are matched by name."""
        if order == self.order:
            return self
        src = self.table.names
        tgt = order.table
        d = {}
        for m, c in self._d.items():
            try:
                nm = tuple(sorted((tgt.position(src[i]), e) for i, e in m))
            except KeyError as exc:
                raise StructuralError(f"variable missing from target table: {exc}") from None
            d[nm] = c
        return Polynomial._raw(order, d)

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


# ---------------------------------------------------------------------------
# text grammar


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


_TRAILING_DIGITS = re.compile(r"^(.*?)(\d+)$")


@lru_cache(maxsize=None)
def _name_sort_key(name: str):
    mi = parse_multi_index(name)
    if mi:
        return (mi[0], mi[1])
    m = _TRAILING_DIGITS.match(name)
    if m:
        return (m.group(1), (int(m.group(2)),))
    return (name, ())


def format_monomial(m: Monomial, table: VarTable) -> str:
    """Factors are written in natural name order (``x[1,2]*x[2,1]``, ``w1*w3``)."""
    parts = []
    for i, e in sorted(m, key=lambda p: _name_sort_key(table.names[p[0]])):
        parts.append(table.names[i] if e == 1 else f"{table.names[i]}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for k, (c, m) in enumerate(p.terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = format_monomial(m, p.table)
        if not body:
            text = _format_coeff(a)
        elif a == 1:
            text = body
        else:
            text = f"{_format_coeff(a)}*{body}"
        if k == 0:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


_TERM = re.compile(r"\s*([+-]?)\s*([^+\-\s][^+\-]*)")
_NUMBER = re.compile(r"^\d+(?:/\d+)?$")
_FACTOR = re.compile(r"^([A-Za-z_]\w*(?:\[\d+(?:,\d+)*\])?)(?:\^(\d+))?$")


class ParseError(ValueError):
    pass


def parse_polynomial(text: str, order: MonomialOrder) -> Polynomial:
    """Parse the ``+``/``-``/``*``/``^`` grammar produced by :func:`format_polynomial`."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    pos = 0
    d: dict = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot parse near {s[pos:]!r}")
        sign, body = m.group(1), m.group(2).strip()
        if not sign and not first:
            raise ParseError(f"missing operator before {body!r}")
        first = False
        pos = m.end()
        coeff = Fraction(-1 if sign == "-" else 1)
        powers: dict[int, int] = {}
        for factor in body.split("*"):
            factor = factor.strip()
            if _NUMBER.match(factor):
                coeff *= Fraction(factor)
                continue
            fm = _FACTOR.match(factor)
            if not fm:
                raise ParseError(f"bad factor {factor!r}")
            try:
                idx = order.table.position(fm.group(1))
            except KeyError as exc:
                raise ParseError(str(exc)) from None
            powers[idx] = powers.get(idx, 0) + int(fm.group(2) or 1)
        mono = tuple(sorted((i, e) for i, e in powers.items() if e))
        v = d.get(mono, 0) + coeff
        if v:
            d[mono] = v
        else:
            d.pop(mono, None)
    return Polynomial._raw(order, d)
