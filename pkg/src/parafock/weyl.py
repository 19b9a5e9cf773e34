"""Type-B_n root system, signed permutations, alternants and dimension formulas.

Weights are vectors in the standard orthonormal basis e_1..e_n, stored in
half units (the tuple entry ``2c`` means coordinate ``c``), so the weights
of spinor-like modules stay exact integers.

A signed permutation sigma acts by sigma(e_j) = signs[j] * e_{word[j]},
i.e. signs flip first, then positions permute; ``word`` is one-line image
notation.  Its sign is the permutation parity times the product of the
coordinate signs.

Monomials encode formal exponentials through the fixed convention
x_i = exp(-e_i): the monomial of a weight v is prod_i x_i^(-v_i).  Under
it the character of the level-p module is a Laurent polynomial whose
positive-degree part collects the states above the vacuum.
"""

from __future__ import annotations

from itertools import permutations, product

from .partitions import Partition, as_partition

__all__ = [
    "Weight",
    "SignedPermutation",
    "RootSystemB",
    "weight_monomial",
    "omega_I",
    "w1_element",
    "phi_sigma",
    "kostant_weight",
    "alternant",
    "dim_so",
    "dim_gl",
    "ALTERNANT_RANK_LIMIT",
]

from .polyring import MultiPoly

ALTERNANT_RANK_LIMIT = 6


def _fmt_half(d: int) -> str:
    return str(d // 2) if d % 2 == 0 else f"{d}/2"


class Weight:
    """Vector in the e-basis, coordinates stored in half units."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords: tuple[int, ...] = tuple(int(c) for c in coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * n)

    @classmethod
    def basis(cls, i: int, n: int) -> "Weight":
        """The unit vector e_i (1-based i)."""
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        c = [0] * n
        c[i - 1] = 2
        return cls(c)

    @classmethod
    def rho(cls, n: int) -> "Weight":
        """Half-sum of the positive roots: coordinates (2n-2i+1)/2."""
        return cls(2 * (n - i) + 1 for i in range(1, n + 1))

    @classmethod
    def p_theta(cls, n: int, p: int) -> "Weight":
        """p/2 times the all-ones vector (the level-p highest weight)."""
        return cls((p,) * n)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(a + b for a, b in zip(self.coords, other.coords, strict=True))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(a - b for a, b in zip(self.coords, other.coords, strict=True))

    def __neg__(self) -> "Weight":
        return Weight(-c for c in self.coords)

    def pairing(self, other: "Weight") -> int:
        """Standard inner product, scaled by 4 (exact; ratios are unscaled)."""
        return sum(a * b for a, b in zip(self.coords, other.coords, strict=True))

    def is_dominant(self) -> bool:
        return all(
            a >= b for a, b in zip(self.coords, self.coords[1:])
        ) and (not self.coords or self.coords[-1] >= 0)

    def reversed_negated(self) -> "Weight":
        """Negate and reverse the coordinates (lowest-to-highest reflection)."""
        return Weight(-c for c in reversed(self.coords))

    def to_partition(self) -> Partition:
        if any(c % 2 for c in self.coords):
            raise ValueError(f"{self!r} has half-integer coordinates")
        return Partition(c // 2 for c in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return hash(("Weight", self.coords))

    def __repr__(self) -> str:
        return "Weight(" + ", ".join(_fmt_half(c) for c in self.coords) + ")"


def weight_monomial(v: Weight) -> MultiPoly:
    """Monomial of exp(v) under x_i = exp(-e_i): prod x_i^(-v_i)."""
    return MultiPoly.half_term(v.n, tuple(-c for c in v.coords))


class SignedPermutation:
    """Element of the hyperoctahedral group: sigma(e_j) = signs[j] e_{word[j]}."""

    __slots__ = ("word", "signs")

    def __init__(self, word, signs):
        self.word: tuple[int, ...] = tuple(int(w) for w in word)
        self.signs: tuple[int, ...] = tuple(int(s) for s in signs)
        n = len(self.word)
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"{self.word} is not a permutation of 1..{n}")
        if len(self.signs) != n or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +-1 of length {n}, got {self.signs}")

    @property
    def n(self) -> int:
        return len(self.word)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(range(1, n + 1), (1,) * n)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """Composition: (self * other)(v) = self(other(v))."""
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        word = tuple(self.word[other.word[j] - 1] for j in range(self.n))
        signs = tuple(
            other.signs[j] * self.signs[other.word[j] - 1] for j in range(self.n)
        )
        return SignedPermutation(word, signs)

    def inverse(self) -> "SignedPermutation":
        iw = [0] * self.n
        for j, im in enumerate(self.word):
            iw[im - 1] = j + 1
        isg = tuple(self.signs[iw[i] - 1] for i in range(self.n))
        return SignedPermutation(iw, isg)

    def epsilon(self) -> int:
        """Sign character: permutation parity times the product of signs."""
        sign = 1
        seen = [False] * self.n
        for i in range(self.n):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = self.word[j] - 1
                length += 1
            if length % 2 == 0:
                sign = -sign
        for s in self.signs:
            sign *= s
        return sign

    def apply(self, v: Weight) -> Weight:
        if v.n != self.n:
            raise ValueError(f"rank mismatch: {self.n} vs {v.n}")
        out = [0] * self.n
        for j in range(self.n):
            out[self.word[j] - 1] = self.signs[j] * v.coords[j]
        return Weight(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedPermutation)
            and self.word == other.word
            and self.signs == other.signs
        )

    def __hash__(self):
        return hash((self.word, self.signs))

    def __repr__(self) -> str:
        return f"SignedPermutation(word={list(self.word)}, signs={list(self.signs)})"


class RootSystemB:
    """Positive roots e_i, e_i +- e_j (i<j) and the abelian-nilradical subset."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"rank must be >= 1, got {n}")
        self.n = n
        pos: list[Weight] = []
        for i in range(1, n + 1):
            pos.append(Weight.basis(i, n))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                ei, ej = Weight.basis(i, n), Weight.basis(j, n)
                pos.append(ei - ej)
                pos.append(ei + ej)
        self.positive_roots: tuple[Weight, ...] = tuple(pos)
        self.nilradical_roots: tuple[Weight, ...] = tuple(
            w for w in pos if all(c >= 0 for c in w.coords)
        )
        self._pos_set = frozenset(w.coords for w in self.positive_roots)
        self._nil_set = frozenset(w.coords for w in self.nilradical_roots)

    def is_positive_root(self, w: Weight) -> bool:
        return w.coords in self._pos_set

    def is_nilradical_root(self, w: Weight) -> bool:
        return w.coords in self._nil_set


def omega_I(I, n: int) -> SignedPermutation:
    """Unsigned permutation sending the complement of I (ascending) to 1..n-r
    and I = {i_1 < ... < i_r} to n, n-1, ..., n-r+1.

    Its inverse reads, in one-line notation, as the complement ascending
    followed by I descending.
    """
    I = _validate_subset(I, n)
    word = [0] * n
    comp = [x for x in range(1, n + 1) if x not in I]
    for pos, c in enumerate(comp, start=1):
        word[c - 1] = pos
    for k, i in enumerate(sorted(I), start=1):
        word[i - 1] = n - k + 1
    return SignedPermutation(word, (1,) * n)


def _validate_subset(I, n: int) -> frozenset[int]:
    I = frozenset(int(i) for i in I)
    if not I <= set(range(1, n + 1)):
        raise ValueError(f"I={sorted(I)} is not a subset of 1..{n}")
    return I


def w1_element(I, n: int) -> SignedPermutation:
    """Coset representative: flip signs on I, then rearrange by omega_I."""
    I = _validate_subset(I, n)
    om = omega_I(I, n)
    signs = tuple(-1 if j in I else 1 for j in range(1, n + 1))
    return SignedPermutation(om.word, signs)


def phi_sigma(sigma: SignedPermutation, rs: RootSystemB) -> list[Weight]:
    """Positive roots sent to negative roots by sigma^{-1}."""
    inv = sigma.inverse()
    return [
        alpha
        for alpha in rs.positive_roots
        if not rs.is_positive_root(inv.apply(alpha))
    ]


def kostant_weight(sigma: SignedPermutation, highest: Weight, n: int) -> Weight:
    """sigma(rho + highest) - rho."""
    rho = Weight.rho(n)
    return sigma.apply(rho + highest) - rho


def alternant(chi: Weight, max_rank: int = ALTERNANT_RANK_LIMIT) -> MultiPoly:
    """Antisymmetrized exponential sum over the full hyperoctahedral group.

    D_chi = sum over the 2^n n! group elements of epsilon(w) exp(w chi),
    returned as a Laurent polynomial under x_i = exp(-e_i).  Guarded by
    ``max_rank`` because the group is exponential in n.
    """
    n = chi.n
    if n > max_rank:
        raise ValueError(
            f"rank {n} exceeds the alternant limit {max_rank}; raise max_rank to force"
        )
    terms: dict[tuple[int, ...], int] = {}
    for word in permutations(range(1, n + 1)):
        base = SignedPermutation(word, (1,) * n)
        parity = base.epsilon()
        for signs in product((1, -1), repeat=n):
            eps = parity
            for s in signs:
                eps *= s
            out = [0] * n
            for j in range(n):
                out[word[j] - 1] = -signs[j] * chi.coords[j]
            e = tuple(out)
            s = terms.get(e, 0) + eps
            if s:
                terms[e] = s
            else:
                del terms[e]
    poly = MultiPoly(n)
    poly.terms = terms
    return poly


def dim_so(highest: Weight, n: int) -> int:
    """Dimension of the so(2n+1) module with the given dominant highest weight.

    Product over positive roots of <L + rho, a> / <rho, a>, evaluated as an
    exact integer quotient.
    """
    if highest.n != n:
        raise ValueError(f"weight rank {highest.n} does not match n={n}")
    if not highest.is_dominant():
        raise ValueError(f"{highest!r} is not dominant")
    rs = RootSystemB(n)
    rho = Weight.rho(n)
    shifted = highest + rho
    num = den = 1
    for alpha in rs.positive_roots:
        num *= shifted.pairing(alpha)
        den *= rho.pairing(alpha)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("dimension product is not integral; convention bug")
    return q


def dim_gl(lam, n: int) -> int:
    """Dimension of the gl(n) module with highest weight lambda (hook-content)."""
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam!r} has more than {n} rows")
    conj = lam.conjugate()
    num = den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= (row - j) + (conj[j] - (i + 1))
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("hook-content product is not integral; bug")
    return q
