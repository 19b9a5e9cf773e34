"""Exact sparse polynomial arithmetic over the integers, in half-unit exponents.

Monomials are keyed by exponent vectors stored in *half units*: the tuple
entry ``2c`` stands for the exponent ``c``.  Weights of type-B root systems
live on the half-integer lattice, so doubling keeps every exponent an exact
Python int; ordinary polynomials simply use even entries.  Entries may be
negative (Laurent monomials), coefficients are arbitrary-precision ints,
and nothing here ever divides approximately: the only division offered is
``exact_div``, which raises unless the quotient is exact.

Serialization uses the stored (doubled) integers verbatim:
``[{"exp": [...], "coef": "<decimal string>"}, ...]`` sorted by total degree
and then lexicographically on the exponent vector, which is also the
canonical term order used everywhere else in the package.

``TruncatedSeries`` pairs a polynomial with the total degree through which
its coefficients are trusted; products propagate the weaker bound.  Series
are restricted to non-negative exponents so that truncation by total degree
is sound.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

__all__ = [
    "MultiPoly",
    "TruncatedSeries",
    "series_truncated_mul",
    "expand_inverse_product",
    "homogeneous_component",
]


def _term_key(e: tuple[int, ...]):
    """Canonical (graded, then lexicographic) order on exponent vectors."""
    return (sum(e), e)


def _fmt_half(d: int) -> str:
    return str(d // 2) if d % 2 == 0 else f"{d}/2"


class MultiPoly:
    """Sparse multivariate Laurent polynomial with integer coefficients.

    Treat instances as immutable values: all arithmetic returns new objects.
    ``terms`` maps doubled exponent tuples to non-zero int coefficients.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = int(nvars)
        if self.nvars < 0:
            raise ValueError(f"nvars must be non-negative, got {nvars}")
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != self.nvars:
                    raise ValueError(
                        f"exponent vector {e} has length {len(e)}, expected {self.nvars}"
                    )
                c = int(c)
                if c:
                    clean[e] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def term(cls, nvars: int, exponents: Iterable[int], coef: int = 1) -> "MultiPoly":
        """Single term from whole-integer exponents (doubled internally)."""
        e = tuple(2 * int(x) for x in exponents)
        return cls(nvars, {e: coef})

    @classmethod
    def half_term(cls, nvars: int, doubled: Iterable[int], coef: int = 1) -> "MultiPoly":
        """Single term from an exponent vector already in half units."""
        return cls(nvars, {tuple(int(x) for x in doubled): coef})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for nvars={nvars}")
        e = [0] * nvars
        e[i] = 2
        return cls(nvars, {tuple(e): 1})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda t: _term_key(t[0]))

    def max_degree2(self) -> int | None:
        """Largest total degree in half units, None for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=None)

    def min_degree2(self) -> int | None:
        return min((sum(e) for e in self.terms), default=None)

    def coefficient(self, exponents: Iterable[int]) -> int:
        """Coefficient at whole-integer exponents."""
        return self.terms.get(tuple(2 * int(x) for x in exponents), 0)

    def component2(self, d2: int) -> "MultiPoly":
        """Homogeneous component of total degree d2/2."""
        return MultiPoly(
            self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d2}
        )

    def sum_of_coefficients(self) -> int:
        """Value at all variables = 1."""
        return sum(self.terms.values())

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"mixed variable counts: {self.nvars} vs {other.nvars}"
                )
            return other
        if isinstance(other, int):
            return MultiPoly.constant(self.nvars, other)
        return None

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = MultiPoly(self.nvars)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        res = MultiPoly(self.nvars)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            res = MultiPoly(self.nvars)
            if other:
                res.terms = {e: c * other for e, c in self.terms.items()}
            return res
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        res = MultiPoly(self.nvars)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def permute_variables(self, images: Iterable[int]) -> "MultiPoly":
        """Relabel variables: variable i becomes variable images[i]."""
        images = tuple(images)
        if sorted(images) != list(range(self.nvars)):
            raise ValueError(f"{images} is not a permutation of 0..{self.nvars - 1}")
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, x in enumerate(e):
                ne[images[i]] = x
            out[tuple(ne)] = c
        res = MultiPoly(self.nvars)
        res.terms = out
        return res

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact polynomial quotient; raises ValueError if it does not divide.

        Both operands must have non-negative exponents (the graded order is
        only well founded on the polynomial cone).
        """
        divisor = self._coerce(divisor)
        if divisor is None or not isinstance(divisor, MultiPoly):
            raise ValueError("divisor must be a MultiPoly")
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        for poly in (self, divisor):
            if any(x < 0 for e in poly.terms for x in e):
                raise ValueError("exact_div requires non-negative exponents")
        dlead = max(divisor.terms, key=_term_key)
        dcoef = divisor.terms[dlead]
        rem = dict(self.terms)
        quot: dict[tuple[int, ...], int] = {}
        while rem:
            rlead = max(rem, key=_term_key)
            q, r = divmod(rem[rlead], dcoef)
            mono = tuple(a - b for a, b in zip(rlead, dlead))
            if r != 0 or any(x < 0 for x in mono):
                raise ValueError("polynomial division is not exact")
            quot[mono] = quot.get(mono, 0) + q
            for de, dc in divisor.terms.items():
                e = tuple(x + y for x, y in zip(mono, de))
                s = rem.get(e, 0) - q * dc
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        res = MultiPoly(self.nvars)
        res.terms = {e: c for e, c in quot.items() if c}
        return res

    # -- serialization and display ----------------------------------------

    def to_json_obj(self) -> list[dict]:
        return [
            {"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()
        ]

    @classmethod
    def from_json_obj(cls, nvars: int, obj) -> "MultiPoly":
        terms: dict[tuple[int, ...], int] = {}
        for item in obj:
            e = tuple(int(x) for x in item["exp"])
            terms[e] = terms.get(e, 0) + int(item["coef"])
        return cls(nvars, terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MultiPoly.constant(self.nvars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e, c in self.sorted_terms():
            factors = []
            for i, x in enumerate(e):
                if x == 0:
                    continue
                if x == 2:
                    factors.append(f"x{i + 1}")
                else:
                    factors.append(f"x{i + 1}^({_fmt_half(x)})")
            mono = "*".join(factors)
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        out = " + ".join(bits)
        return out.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self})"


class TruncatedSeries:
    """A polynomial trusted through a total-degree bound.

    ``valid_degree`` may be ``math.inf`` for exact (finite) sums.  Terms of
    total degree above the bound are dropped on construction; products take
    the weaker of the two bounds.  Exponents must be non-negative.
    """

    __slots__ = ("poly", "valid_degree")

    def __init__(self, poly: MultiPoly, valid_degree):
        if valid_degree != math.inf:
            valid_degree = int(valid_degree)
            if valid_degree < 0:
                raise ValueError(f"valid_degree must be >= 0, got {valid_degree}")
        if any(x < 0 for e in poly.terms for x in e):
            raise ValueError("series exponents must be non-negative")
        if valid_degree == math.inf:
            kept = dict(poly.terms)
        else:
            kept = {e: c for e, c in poly.terms.items() if sum(e) <= 2 * valid_degree}
        p = MultiPoly(poly.nvars)
        p.terms = kept
        self.poly = p
        self.valid_degree = valid_degree

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    def component(self, d: int) -> MultiPoly:
        if self.valid_degree != math.inf and d > self.valid_degree:
            raise ValueError(
                f"component {d} requested beyond valid degree {self.valid_degree}"
            )
        return self.poly.component2(2 * d)

    def truncate(self, valid_degree) -> "TruncatedSeries":
        if valid_degree > self.valid_degree:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.poly, valid_degree)

    def _coerce(self, other) -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (MultiPoly, int)):
            p = other if isinstance(other, MultiPoly) else MultiPoly.constant(self.nvars, other)
            return TruncatedSeries(p, math.inf)
        return None

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries(
            self.poly + other.poly, min(self.valid_degree, other.valid_degree)
        )

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries(
            self.poly - other.poly, min(self.valid_degree, other.valid_degree)
        )

    def __mul__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        bound = min(self.valid_degree, other.valid_degree)
        if bound == math.inf:
            return TruncatedSeries(self.poly * other.poly, bound)
        cut = 2 * bound
        a = self.poly.terms
        b = sorted(other.poly.terms.items(), key=lambda t: sum(t[0]))
        out: dict[tuple[int, ...], int] = {}
        for ea, ca in a.items():
            da = sum(ea)
            for eb, cb in b:
                if da + sum(eb) > cut:
                    break
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        p = MultiPoly(self.nvars)
        p.terms = out
        return TruncatedSeries(p, bound)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.valid_degree == other.valid_degree
            and self.poly == other.poly
        )

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.poly}, valid_degree={self.valid_degree})"


def series_truncated_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product of truncated series, valid through the weaker bound."""
    return a * b


def homogeneous_component(poly: MultiPoly, d) -> MultiPoly:
    """Terms of ``poly`` of total degree exactly ``d`` (may be half-integral)."""
    d2 = 2 * d
    if d2 != int(d2):
        raise ValueError(f"degree must be a multiple of 1/2, got {d}")
    return poly.component2(int(d2))


def _geometric_factor(factor: MultiPoly) -> tuple[tuple[int, ...], int]:
    """Validate a ``1 - c*monomial`` factor; return (doubled exponent, c)."""
    zero = (0,) * factor.nvars
    if len(factor.terms) != 2 or factor.terms.get(zero) != 1:
        raise ValueError(f"factor must be 1 minus a single monomial, got {factor}")
    (e, c) = next((e, c) for e, c in factor.terms.items() if e != zero)
    if sum(e) <= 0 or any(x < 0 for x in e):
        raise ValueError(
            f"factor monomial must have positive total degree, got {factor}"
        )
    return e, -c


def expand_inverse_product(
    factors: list[MultiPoly], valid_degree, nvars: int | None = None
) -> TruncatedSeries:
    """Expand prod 1/(1 - c_k * x^(a_k)) as a series through ``valid_degree``.

    Every factor must literally be 1 minus a single monomial of positive
    total degree; each contributes a geometric series, multiplied out with
    truncation.
    """
    if valid_degree == math.inf:
        raise ValueError("expand_inverse_product needs a finite degree bound")
    if not factors:
        if nvars is None:
            raise ValueError("empty factor list needs an explicit nvars")
        return TruncatedSeries(MultiPoly.one(nvars), valid_degree)
    nv = factors[0].nvars
    result = TruncatedSeries(MultiPoly.one(nv), valid_degree)
    for f in factors:
        if f.nvars != nv:
            raise ValueError("factors must share one variable set")
        e, c = _geometric_factor(f)
        step = sum(e)
        terms: dict[tuple[int, ...], int] = {}
        k = 0
        coef = 1
        while k * step <= 2 * valid_degree:
            terms[tuple(k * x for x in e)] = coef
            coef *= c
            k += 1
        geo = MultiPoly(nv)
        geo.terms = terms
        result = result * TruncatedSeries(geo, valid_degree)
    return result
