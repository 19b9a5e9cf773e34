"""Schur, skew Schur and hook (supersymmetric) Schur polynomials.

Polynomials live in ``n + m`` variables: the n "even" variables come first
(indices 0..n-1), the m "odd" ones after them (indices n..n+m-1).  Plain
Schur polynomials use only the even block; hook Schur polynomials use both.
This even-then-odd ordering is a fixed convention of the package and is
what the CLI prints.

Three independent engines compute s_lambda:

* ``jt``  - Jacobi-Trudi determinant in complete homogeneous polynomials
  (the default),
* ``alt`` - bialternant: quotient of two antisymmetrized monomial sums,
  computed by exact polynomial division (cost grows like n!, intended as a
  cross-check for small n),
* ``tab`` - monomial sum over semistandard tableaux.

Hook Schur polynomials come either from the outer-product expansion over
sub-diagrams (``br``: sum of s_mu(even) * s_{lambda'/mu'}(odd)) or from
super-semistandard tableaux (``tab``).  hs_lambda vanishes exactly when the
diagram does not fit in the (n|m) hook.
"""

from __future__ import annotations

import math
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from .partitions import (
    Partition,
    as_partition,
    enumerate_partitions,
    hook_condition,
)
from .polyring import MultiPoly, TruncatedSeries

__all__ = [
    "SchurContext",
    "schur",
    "skew_schur",
    "hook_schur",
    "schur_sum",
]


class SchurContext:
    """Variable bookkeeping plus a cache of complete homogeneous polynomials."""

    def __init__(self, n: int, m: int = 0):
        if n < 0 or m < 0:
            raise ValueError(f"variable counts must be non-negative, got n={n}, m={m}")
        self.n = int(n)
        self.m = int(m)
        self.nvars = self.n + self.m
        self._h_cache: dict[tuple[str, int], MultiPoly] = {}

    def block(self, which: str) -> range:
        if which == "even":
            return range(0, self.n)
        if which == "odd":
            return range(self.n, self.nvars)
        raise ValueError(f"unknown block {which!r}")

    def h(self, k: int, which: str = "even") -> MultiPoly:
        """Complete homogeneous polynomial of degree k in one variable block."""
        if k < 0:
            return MultiPoly.zero(self.nvars)
        key = (which, k)
        cached = self._h_cache.get(key)
        if cached is not None:
            return cached
        terms: dict[tuple[int, ...], int] = {}
        for combo in combinations_with_replacement(self.block(which), k):
            e = [0] * self.nvars
            for i in combo:
                e[i] += 2
            e = tuple(e)
            terms[e] = terms.get(e, 0) + 1
        poly = MultiPoly(self.nvars)
        poly.terms = terms
        self._h_cache[key] = poly
        return poly

    def __repr__(self) -> str:
        return f"SchurContext(n={self.n}, m={self.m})"


def _det(mat: list[list[MultiPoly]], nvars: int) -> MultiPoly:
    """Determinant of a square matrix of polynomials, minors memoized."""
    size = len(mat)
    if size == 0:
        return MultiPoly.one(nvars)
    memo: dict[tuple[int, ...], MultiPoly] = {}

    def minor(cols: tuple[int, ...]) -> MultiPoly:
        row = size - len(cols)
        if not cols:
            return MultiPoly.one(nvars)
        got = memo.get(cols)
        if got is not None:
            return got
        acc = MultiPoly.zero(nvars)
        for idx, col in enumerate(cols):
            entry = mat[row][col]
            if entry.is_zero():
                continue
            sub = minor(cols[:idx] + cols[idx + 1:])
            term = entry * sub
            acc = acc + term if idx % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return minor(tuple(range(size)))


def _jt_det(
    outer: Partition, inner: Partition, h: Callable[[int], MultiPoly], nvars: int
) -> MultiPoly:
    """Jacobi-Trudi determinant det h(outer_i - inner_j - i + j)."""
    size = len(outer)
    if size == 0:
        return MultiPoly.one(nvars)
    mat = [
        [h(outer[i] - inner.part(j) - i + j) for j in range(size)]
        for i in range(size)
    ]
    return _det(mat, nvars)


def _sn_alternant(exponents: list[int], ctx: SchurContext) -> MultiPoly:
    """Antisymmetrized monomial det ||x_j^(e_i)|| over the even block."""
    n = ctx.n
    terms: dict[tuple[int, ...], int] = {}

    def place(remaining: list[int], cols: list[int], sign: int):
        if not remaining:
            e = [0] * ctx.nvars
            for col, ex in zip(cols, exponents):
                e[col] = 2 * ex
            e = tuple(e)
            s = terms.get(e, 0) + sign
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
            return
        # expand over which column receives the next exponent
        for idx, col in enumerate(remaining):
            place(
                remaining[:idx] + remaining[idx + 1:],
                cols + [col],
                sign if idx % 2 == 0 else -sign,
            )

    place(list(range(n)), [], 1)
    poly = MultiPoly(ctx.nvars)
    poly.terms = terms
    return poly


def _row_fillings(
    width: int, lower: list[int], nletters: int
) -> Iterator[tuple[int, ...]]:
    """Weakly increasing rows of given width with per-cell lower bounds."""
    row = [0] * width

    def rec(t: int, minval: int) -> Iterator[tuple[int, ...]]:
        if t == width:
            yield tuple(row)
            return
        for v in range(max(minval, lower[t]), nletters):
            row[t] = v
            yield from rec(t + 1, v)

    yield from rec(0, 0)


def _iter_ssyt_contents(
    outer: Partition, inner: Partition, nletters: int
) -> Iterator[list[int]]:
    """Content vectors of column-strict tableaux of shape outer/inner."""
    rows = len(outer)
    if any(inner.part(i) > outer.part(i) for i in range(len(inner))):
        return
    if rows == 0:
        yield [0] * nletters
        return

    content = [0] * nletters
    prev: dict[int, int] = {}

    def rec(r: int, prev_row: dict[int, int]) -> Iterator[list[int]]:
        if r == rows:
            yield list(content)
            return
        lo, hi = inner.part(r), outer[r]
        width = hi - lo
        if width < 0:
            return
        if width == 0:
            yield from rec(r + 1, {})
            return
        lower = [
            prev_row[c] + 1 if c in prev_row else 0 for c in range(lo, hi)
        ]
        if any(b >= nletters for b in lower):
            return
        for filling in _row_fillings(width, lower, nletters):
            for v in filling:
                content[v] += 1
            yield from rec(r + 1, {c: v for c, v in zip(range(lo, hi), filling)})
            for v in filling:
                content[v] -= 1

    yield from rec(0, prev)


def _iter_super_contents(lam: Partition, n: int, m: int) -> Iterator[list[int]]:
    """Content vectors of super-semistandard tableaux on n even + m odd letters.

    Letters 0..n-1 are even, n..n+m-1 odd, totally ordered by value.  Rows
    and columns weakly increase; even letters repeat only along rows, odd
    letters only down columns.
    """
    cells = [(r, c) for r, row_len in enumerate(lam) for c in range(row_len)]
    grid: dict[tuple[int, int], int] = {}
    content = [0] * (n + m)

    def ok(r: int, c: int, v: int) -> bool:
        left = grid.get((r, c - 1))
        if left is not None:
            if v < left or (v == left and left >= n):
                return False
        above = grid.get((r - 1, c))
        if above is not None:
            if v < above or (v == above and above < n):
                return False
        return True

    def rec(idx: int) -> Iterator[list[int]]:
        if idx == len(cells):
            yield list(content)
            return
        r, c = cells[idx]
        for v in range(n + m):
            if ok(r, c, v):
                grid[(r, c)] = v
                content[v] += 1
                yield from rec(idx + 1)
                content[v] -= 1
                del grid[(r, c)]

    yield from rec(0)


def _content_sum(contents: Iterator[list[int]], nvars: int) -> MultiPoly:
    # Content vectors may cover only a prefix block of the variables.
    terms: dict[tuple[int, ...], int] = {}
    for content in contents:
        e = tuple(2 * x for x in content) + (0,) * (nvars - len(content))
        terms[e] = terms.get(e, 0) + 1
    poly = MultiPoly(nvars)
    poly.terms = terms
    return poly


def schur(lam, ctx: SchurContext, algorithm: str = "jt") -> MultiPoly:
    """Schur polynomial in the even variables of ``ctx``.

    Vanishes exactly when the diagram has more rows than even variables.
    """
    lam = as_partition(lam)
    if algorithm == "jt":
        if len(lam) > ctx.n:
            return MultiPoly.zero(ctx.nvars)
        return _jt_det(lam, Partition(), lambda k: ctx.h(k, "even"), ctx.nvars)
    if algorithm == "alt":
        if len(lam) > ctx.n:
            return MultiPoly.zero(ctx.nvars)
        delta = [ctx.n - 1 - i for i in range(ctx.n)]
        shifted = [lam.part(i) + d for i, d in enumerate(delta)]
        numerator = _sn_alternant(shifted, ctx)
        denominator = _sn_alternant(delta, ctx)
        return numerator.exact_div(denominator)
    if algorithm == "tab":
        return _content_sum(_iter_ssyt_contents(lam, Partition(), ctx.n), ctx.nvars)
    raise ValueError(f"unknown algorithm {algorithm!r} (expected jt, alt or tab)")


def skew_schur(lam, mu, ctx: SchurContext, algorithm: str = "jt") -> MultiPoly:
    """Skew Schur polynomial s_{lam/mu} in the even variables of ``ctx``."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not lam.contains(mu):
        raise ValueError(f"{mu!r} is not contained in {lam!r}")
    if algorithm == "jt":
        return _jt_det(lam, mu, lambda k: ctx.h(k, "even"), ctx.nvars)
    if algorithm == "tab":
        return _content_sum(_iter_ssyt_contents(lam, mu, ctx.n), ctx.nvars)
    raise ValueError(f"unknown algorithm {algorithm!r} (expected jt or tab)")


def _iter_subdiagrams(lam: Partition, max_rows: int) -> Iterator[Partition]:
    rows = min(len(lam), max_rows)

    def rec(i: int, bound: int) -> Iterator[list[int]]:
        if i == rows:
            yield []
            return
        for v in range(min(lam[i], bound), -1, -1):
            for rest in rec(i + 1, v):
                yield [v, *rest]

    for parts in rec(0, lam[0] if rows else 0):
        yield Partition(parts)


def hook_schur(lam, ctx: SchurContext, algorithm: str = "br") -> MultiPoly:
    """Hook (supersymmetric) Schur polynomial hs_lambda(x_even; x_odd).

    Zero exactly when the diagram violates the (n|m) hook condition.
    """
    lam = as_partition(lam)
    if algorithm == "br":
        lamc = lam.conjugate()
        h_odd = lambda k: ctx.h(k, "odd")  # noqa: E731
        total = MultiPoly.zero(ctx.nvars)
        for mu in _iter_subdiagrams(lam, ctx.n):
            inner = schur(mu, ctx, "jt")
            if inner.is_zero():
                continue
            outer = _jt_det(lamc, mu.conjugate(), h_odd, ctx.nvars)
            if outer.is_zero():
                continue
            total = total + inner * outer
        return total
    if algorithm == "tab":
        return _content_sum(_iter_super_contents(lam, ctx.n, ctx.m), ctx.nvars)
    raise ValueError(f"unknown algorithm {algorithm!r} (expected br or tab)")


def schur_sum(constraint: tuple[str, int], ctx: SchurContext, valid_degree) -> TruncatedSeries:
    """Sum of (hook) Schur polynomials over a constrained family of diagrams.

    ``constraint`` is one of

    * ``("max_columns", p)``: all lambda with at most p columns; requires
      m = 0, where the family is finite (lambda inside the p^n rectangle)
      and the sum is exact, so ``valid_degree`` may be ``math.inf``;
    * ``("max_rows", p)``: all lambda with at most p rows (m = 0, finite
      degree bound required);
    * ``("hook", p)``: hook Schur sum over all lambda with at most p
      columns (finite degree bound required).
    """
    kind, p = constraint
    p = int(p)
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    if kind in ("max_columns", "max_rows") and ctx.m != 0:
        raise ValueError(f"constraint {kind!r} needs a context with m=0")
    if kind == "max_columns":
        total = MultiPoly.zero(ctx.nvars)
        for lam in enumerate_partitions(max_part=p, max_length=ctx.n):
            total = total + schur(lam, ctx, "jt")
        return TruncatedSeries(total, valid_degree)
    if valid_degree == math.inf:
        raise ValueError(f"constraint {kind!r} needs a finite degree bound")
    bound = int(valid_degree)
    if kind == "max_rows":
        total = MultiPoly.zero(ctx.nvars)
        for lam in enumerate_partitions(max_length=min(p, ctx.n), max_size=bound):
            total = total + schur(lam, ctx, "jt")
        return TruncatedSeries(total, bound)
    if kind == "hook":
        total = MultiPoly.zero(ctx.nvars)
        for lam in enumerate_partitions(max_part=p, max_size=bound):
            if not hook_condition(lam, ctx.n, ctx.m):
                continue
            total = total + hook_schur(lam, ctx, "br")
        return TruncatedSeries(total, bound)
    raise ValueError(f"unknown constraint kind {kind!r}")
