"""Cohomology tables of the abelian nilradical and exact character identities.

The degree-k cohomology of the nilradical acting on the level-p module
decomposes into gl(n) modules indexed by self-conjugate diagrams mu inside
the n x n square, with k = (|mu| + r(mu)) / 2 and highest weight read from
the arm-augmented diagram mu^(p).  Two independent routes produce the
table:

* ``cohomology_via_w1``: walk the 2^n minimal-length coset representatives
  of the hyperoctahedral group, compute sigma(rho + p theta) - rho and
  reflect it to a dominant diagram;
* ``cohomology_via_partitions``: enumerate self-conjugate diagrams in the
  square and augment their arms by p.

On top of the tables sit exact verdicts for three Schur-polynomial
identities (parafermionic, parabosonic, parastatistics) and for the
Weyl-character/branching consistency check.  Everything is compared by
cross-multiplied integer polynomial arithmetic; nothing is ever divided
or rounded, and a failure reports the first offending monomial.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import combinations

from .partitions import (
    Partition,
    augment_arms,
    enumerate_self_conjugate_in_square,
    enumeration_key,
    frobenius_decompose,
    hook_condition,
)
from .polyring import MultiPoly, TruncatedSeries, expand_inverse_product, _term_key
from .schur import SchurContext, hook_schur, schur, schur_sum
from .weyl import (
    ALTERNANT_RANK_LIMIT,
    Weight,
    alternant,
    phi_sigma,
    RootSystemB,
    kostant_weight,
    w1_element,
    weight_monomial,
)

__all__ = [
    "CohomologyEntry",
    "CohomologyTable",
    "VerificationReport",
    "cohomology_via_w1",
    "cohomology_via_partitions",
    "branching_character",
    "resolution_character",
    "verify_weyl_character",
    "verify_parafermion_identity",
    "verify_paraboson_identity",
    "verify_parastat_identity",
]


@dataclass(frozen=True)
class CohomologyEntry:
    """One summand: degree k, dominant diagram mu^(p), and its origin."""

    k: int
    diagram: Partition
    source: tuple[int, ...] | Partition

    def to_json_obj(self) -> dict:
        if isinstance(self.source, Partition):
            src = {"mu": self.source.to_json()}
        else:
            src = {"I": list(self.source)}
        return {"k": self.k, "mu": self.diagram.to_json(), "source": src}


@dataclass
class CohomologyTable:
    n: int
    p: int
    entries: list[CohomologyEntry] = field(default_factory=list)

    def sort(self) -> None:
        self.entries.sort(key=lambda e: (e.k, enumeration_key(e.diagram)))

    def degree_diagram_pairs(self) -> list[tuple[int, tuple[int, ...]]]:
        """Multiset of (k, diagram) pairs, the route-independent content."""
        return sorted((e.k, e.diagram.parts) for e in self.entries)

    def entries_at(self, k: int) -> list[CohomologyEntry]:
        return [e for e in self.entries if e.k == k]

    def max_degree(self) -> int:
        return self.n * (self.n + 1) // 2

    def to_json_obj(self) -> list[dict]:
        return [e.to_json_obj() for e in self.entries]


def cohomology_via_w1(n: int, p: int) -> CohomologyTable:
    """Cohomology table from the 2^n coset representatives."""
    _validate_np(n, p)
    rs = RootSystemB(n)
    highest = Weight.p_theta(n, p)
    table = CohomologyTable(n, p)
    for r in range(n + 1):
        for I in combinations(range(1, n + 1), r):
            sigma = w1_element(I, n)
            phis = phi_sigma(sigma, rs)
            if not all(rs.is_nilradical_root(x) for x in phis):
                raise ArithmeticError(
                    f"representative for I={I} left the nilradical; convention bug"
                )
            w = kostant_weight(sigma, highest, n)
            # Reflect the lowest-weight-style vector to a dominant diagram and
            # shift by the p/2 vacuum offset.
            shifted = w.reversed_negated() + Weight.p_theta(n, p)
            table.entries.append(
                CohomologyEntry(k=len(phis), diagram=shifted.to_partition(), source=I)
            )
    table.sort()
    return table


def cohomology_via_partitions(n: int, p: int) -> CohomologyTable:
    """Cohomology table from self-conjugate diagrams in the n x n square."""
    _validate_np(n, p)
    table = CohomologyTable(n, p)
    for mu in enumerate_self_conjugate_in_square(n):
        r = frobenius_decompose(mu).rank
        k, rem = divmod(mu.size + r, 2)
        if rem:
            raise ArithmeticError(f"|mu|+r odd for self-conjugate {mu!r}; bug")
        table.entries.append(
            CohomologyEntry(k=k, diagram=augment_arms(mu, p), source=mu)
        )
    table.sort()
    return table


def _validate_np(n: int, p: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")


def branching_character(n: int, p: int) -> MultiPoly:
    """Character of the level-p module as a gl(n) sum: all s_lambda with
    lambda inside the p^n rectangle.  Exact polynomial."""
    _validate_np(n, p)
    ctx = SchurContext(n)
    return schur_sum(("max_columns", p), ctx, math.inf).poly


def _sign_exponent(mu: Partition) -> int:
    return (mu.size + frobenius_decompose(mu).rank) // 2


def _denominator_factors(n: int, nvars: int | None = None) -> list[MultiPoly]:
    """Factors 1 - x_i and 1 - x_i x_j (i < j) in the first n variables."""
    nv = n if nvars is None else nvars
    one = MultiPoly.one(nv)
    fs = [one - MultiPoly.variable(nv, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            fs.append(one - MultiPoly.variable(nv, i) * MultiPoly.variable(nv, j))
    return fs


def _product(factors: list[MultiPoly], nvars: int) -> MultiPoly:
    out = MultiPoly.one(nvars)
    for f in factors:
        out = out * f
    return out


def _paraboson_denominator(n: int, symmetric: bool) -> MultiPoly:
    fs = _denominator_factors(n)
    if symmetric:
        one = MultiPoly.one(n)
        for i in range(n):
            xi = MultiPoly.variable(n, i)
            fs.append(one - xi * xi)
    return _product(fs, n)


def _parastat_denominator(n: int, m: int) -> MultiPoly:
    """prod_i (1 - x_i) over all variables, times 1 - x_i x_j over
    same-parity pairs i < j."""
    nv = n + m
    one = MultiPoly.one(nv)
    fs = [one - MultiPoly.variable(nv, i) for i in range(nv)]
    for block in (range(0, n), range(n, nv)):
        for i, j in combinations(block, 2):
            fs.append(one - MultiPoly.variable(nv, i) * MultiPoly.variable(nv, j))
    return _product(fs, nv)


def _parastat_mixed_pairs(n: int, m: int) -> MultiPoly:
    """prod (1 + x_i x_j) over opposite-parity pairs."""
    nv = n + m
    one = MultiPoly.one(nv)
    out = one
    for i in range(0, n):
        for j in range(n, nv):
            out = out * (one + MultiPoly.variable(nv, i) * MultiPoly.variable(nv, j))
    return out


def resolution_character(n: int, p: int, k: int, valid_degree) -> TruncatedSeries:
    """Character of the k-th term of the resolution: (sum of s_{mu^(p)} at
    degree k) times the character of the nilradical's symmetric algebra."""
    table = cohomology_via_partitions(n, p)
    if not 0 <= k <= table.max_degree():
        raise ValueError(f"k={k} outside 0..{table.max_degree()}")
    ctx = SchurContext(n)
    numerator = MultiPoly.zero(n)
    for entry in table.entries_at(k):
        numerator = numerator + schur(entry.diagram, ctx, "jt")
    universal = expand_inverse_product(_denominator_factors(n), valid_degree)
    return TruncatedSeries(numerator, math.inf) * universal


@dataclass
class VerificationReport:
    """Outcome of one identity check.

    ``degree`` is None for exact (cross-multiplied) comparisons and the
    truncation bound otherwise.  ``first_discrepancy`` names the smallest
    offending monomial when the check fails.  The optional trailing fields
    label the paraboson denominator variant and the conjectural status of
    the parastatistics identity.
    """

    identity: str
    n: int
    m: int | None
    p: int
    degree: int | None
    status: str
    first_discrepancy: dict | None
    millis: int
    denominator: str | None = None
    conjecture: bool = False

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_obj(self) -> dict:
        out = {
            "identity": self.identity,
            "n": self.n,
            "m": self.m,
            "p": self.p,
            "degree": self.degree,
            "status": self.status,
            "first_discrepancy": self.first_discrepancy,
            "millis": self.millis,
        }
        if self.denominator is not None:
            out["denominator"] = self.denominator
        if self.conjecture:
            out["conjecture"] = True
        return out


def _first_discrepancy(
    lhs: MultiPoly, rhs: MultiPoly, max_degree2: int | None = None
) -> dict | None:
    keys = set(lhs.terms) | set(rhs.terms)
    bad = [
        e
        for e in keys
        if (max_degree2 is None or sum(e) <= max_degree2)
        and lhs.terms.get(e, 0) != rhs.terms.get(e, 0)
    ]
    if not bad:
        return None
    e = min(bad, key=_term_key)
    d2 = sum(e)
    return {
        "degree": d2 // 2 if d2 % 2 == 0 else d2 / 2,
        "monomial": list(e),
        "lhs": str(lhs.terms.get(e, 0)),
        "rhs": str(rhs.terms.get(e, 0)),
    }


def _finish(
    identity: str,
    n: int,
    m: int | None,
    p: int,
    degree: int | None,
    lhs: MultiPoly,
    rhs: MultiPoly,
    t0: float,
    **extra,
) -> VerificationReport:
    cut = None if degree is None else 2 * degree
    disc = _first_discrepancy(lhs, rhs, cut)
    return VerificationReport(
        identity=identity,
        n=n,
        m=m,
        p=p,
        degree=degree,
        status="pass" if disc is None else "fail",
        first_discrepancy=disc,
        millis=int((time.perf_counter() - t0) * 1000),
        **extra,
    )


def verify_weyl_character(
    n: int, p: int, max_rank: int = ALTERNANT_RANK_LIMIT
) -> VerificationReport:
    """Check D_{rho + p theta} = D_rho * exp(p theta) * branching character.

    Both sides are Laurent polynomials built from the full 2^n n! group;
    the comparison is exact (no division of alternants is performed).
    """
    _validate_np(n, p)
    t0 = time.perf_counter()
    rho = Weight.rho(n)
    theta_p = Weight.p_theta(n, p)
    lhs = alternant(rho + theta_p, max_rank)
    rhs = alternant(rho, max_rank) * weight_monomial(theta_p) * branching_character(n, p)
    return _finish("weyl-character", n, None, p, None, lhs, rhs, t0)


def verify_parafermion_identity(n: int, p: int) -> VerificationReport:
    """Exact check of the parafermionic character identity.

    sum over self-conjugate mu in the n x n square of
    (-1)^((|mu|+r)/2) s_{mu^(p)}  equals
    prod(1-x_i) prod_{i<j}(1-x_i x_j) times sum_{lambda inside p^n} s_lambda.
    """
    _validate_np(n, p)
    t0 = time.perf_counter()
    ctx = SchurContext(n)
    lhs = MultiPoly.zero(n)
    for mu in enumerate_self_conjugate_in_square(n):
        term = schur(augment_arms(mu, p), ctx, "jt")
        lhs = lhs + term if _sign_exponent(mu) % 2 == 0 else lhs - term
    rhs = _paraboson_denominator(n, symmetric=False) * branching_character(n, p)
    return _finish("parafermion", n, None, p, None, lhs, rhs, t0)


def _paraboson_numerator_diagrams(n: int, p: int) -> list[Partition]:
    """Self-conjugate mu whose conjugated augmentation still fits in n rows.

    [mu^(p)]' has mu_1 + p rows ... precisely: first row of mu^(p) is
    alpha_1 + p + 1, so the survivors are exactly the self-conjugate
    diagrams inside the (n-p) x (n-p) square.
    """
    q = n - p
    if q < 1:
        return [Partition()]
    return enumerate_self_conjugate_in_square(q)


def verify_paraboson_identity(
    n: int, p: int, valid_degree: int, denominator: str = "printed"
) -> VerificationReport:
    """Truncated check of the parabosonic character identity.

    sum over self-conjugate mu of (-1)^((|mu|+r)/2) s_{[mu^(p)]'} equals
    the denominator times sum over lambda with at most p rows of s_lambda,
    compared through total degree ``valid_degree``.  The printed
    denominator is prod(1-x_i) prod_{i<j}(1-x_i x_j); the "symmetric"
    variant also includes the diagonal factors 1-x_i^2.
    """
    _validate_np(n, p)
    if denominator not in ("printed", "symmetric"):
        raise ValueError(f"unknown denominator variant {denominator!r}")
    t0 = time.perf_counter()
    D = int(valid_degree)
    if D < 0:
        raise ValueError(f"degree bound must be >= 0, got {valid_degree}")
    ctx = SchurContext(n)
    lhs = MultiPoly.zero(n)
    for mu in _paraboson_numerator_diagrams(n, p):
        term = schur(augment_arms(mu, p).conjugate(), ctx, "jt")
        lhs = lhs + term if _sign_exponent(mu) % 2 == 0 else lhs - term
    tail = schur_sum(("max_rows", p), ctx, D)
    rhs = TruncatedSeries(_paraboson_denominator(n, denominator == "symmetric"), math.inf) * tail
    return _finish(
        "paraboson", n, None, p, D, lhs, rhs.poly, t0, denominator=denominator
    )


def verify_parastat_identity(n: int, m: int, p: int, valid_degree: int) -> VerificationReport:
    """Truncated check of the parastatistics character identity (conjecture).

    prod over opposite-parity pairs of (1 + x_i x_j), times the alternating
    sum of hs_{mu^(p)} over self-conjugate mu, equals prod(1 - x_i) times
    prod over same-parity pairs of (1 - x_i x_j), times the hook Schur sum
    over lambda with at most p columns; compared through ``valid_degree``.
    Setting m=0 reproduces the parafermionic check, n=0 the parabosonic one
    in the odd variables.
    """
    if n < 0 or m < 0 or n + m < 1:
        raise ValueError(f"need n, m >= 0 with n + m >= 1, got n={n}, m={m}")
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    t0 = time.perf_counter()
    D = int(valid_degree)
    if D < 0:
        raise ValueError(f"degree bound must be >= 0, got {valid_degree}")
    ctx = SchurContext(n, m)
    nv = n + m
    total = MultiPoly.zero(nv)
    for mu in enumerate_self_conjugate_in_square(max(D, 1)):
        diagram = augment_arms(mu, p)
        if diagram.size > D or not hook_condition(diagram, n, m):
            continue
        term = hook_schur(diagram, ctx, "br")
        total = total + term if _sign_exponent(mu) % 2 == 0 else total - term
    lhs = _parastat_mixed_pairs(n, m) * total
    tail = schur_sum(("hook", p), ctx, D)
    rhs = TruncatedSeries(_parastat_denominator(n, m), math.inf) * tail
    return _finish(
        "parastat", n, m, p, D, lhs, rhs.poly, t0, conjecture=True
    )
