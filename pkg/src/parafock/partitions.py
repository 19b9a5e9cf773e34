"""Partition and Young-diagram calculus.

A partition is a weakly decreasing tuple of positive integers; trailing
zeros are stripped on construction so that equality of ``Partition``
values is equality of diagrams.  Frobenius coordinates describe a diagram
by its diagonal hooks, ``(arms | legs)``, both strictly decreasing and of
equal length r (the number of diagonal boxes).

Self-conjugate diagrams (arms == legs) inside the square ``(n^n)`` are in
bijection with subsets of ``{0, ..., n-1}``: choose the arm lengths.  That
is how ``enumerate_self_conjugate_in_square`` produces all ``2^n`` of them
directly, without scanning the square.

Enumerations are deterministic: diagrams are ordered by total size and,
within a size, by descending lexicographic order on the part lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "FrobeniusForm",
    "conjugate",
    "frobenius_decompose",
    "frobenius_compose",
    "augment_arms",
    "enumerate_self_conjugate_in_square",
    "enumerate_partitions",
    "hook_condition",
    "enumeration_key",
]


class Partition:
    """A weakly decreasing tuple of positive integers (a Young diagram)."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()) -> None:
        ps = [int(x) for x in parts]
        while ps and ps[-1] == 0:
            ps.pop()
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {ps}")
        if ps and ps[-1] < 0:
            raise ValueError(f"parts must be non-negative, got {ps}")
        self.parts: tuple[int, ...] = tuple(ps)

    @property
    def size(self) -> int:
        """Number of boxes."""
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def part(self, i: int) -> int:
        """The i-th part, 0-based, 0 beyond the last row."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Transpose the diagram: column lengths become row lengths."""
        if not self.parts:
            return Partition()
        return Partition(
            sum(1 for p in self.parts if p > j) for j in range(self.parts[0])
        )

    def is_self_conjugate(self) -> bool:
        return self.parts == self.conjugate().parts

    def contains(self, other: "Partition") -> bool:
        """Diagram inclusion: every row of ``other`` fits inside this one."""
        return all(other[i] <= self.part(i) for i in range(len(other)))

    def frobenius_rank(self) -> int:
        """Number of diagonal boxes."""
        return sum(1 for i, p in enumerate(self.parts) if p >= i + 1)

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, obj) -> "Partition":
        return cls(obj)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(("Partition", self.parts))

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


@dataclass(frozen=True)
class FrobeniusForm:
    """Frobenius coordinates (arms | legs) of a diagram with r diagonal boxes.

    ``arms[i]`` counts boxes strictly right of diagonal box i, ``legs[i]``
    boxes strictly below it; both sequences are strictly decreasing and
    non-negative.
    """

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        arms = tuple(int(a) for a in self.arms)
        legs = tuple(int(b) for b in self.legs)
        object.__setattr__(self, "arms", arms)
        object.__setattr__(self, "legs", legs)
        if len(arms) != len(legs):
            raise ValueError("arms and legs must have the same length")
        for seq, name in ((arms, "arms"), (legs, "legs")):
            if any(x < 0 for x in seq):
                raise ValueError(f"{name} must be non-negative: {seq}")
            if any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{name} must be strictly decreasing: {seq}")

    @property
    def rank(self) -> int:
        return len(self.arms)

    def to_json(self) -> dict:
        return {"arms": list(self.arms), "legs": list(self.legs)}

    @classmethod
    def from_json(cls, obj) -> "FrobeniusForm":
        return cls(tuple(obj["arms"]), tuple(obj["legs"]))


def conjugate(lam: Partition) -> Partition:
    return as_partition(lam).conjugate()


def as_partition(lam) -> Partition:
    """Coerce an iterable of parts (or a Partition) to a Partition."""
    return lam if isinstance(lam, Partition) else Partition(lam)


def frobenius_decompose(lam: Partition) -> FrobeniusForm:
    """Diagonal-hook coordinates of a diagram."""
    lam = as_partition(lam)
    conj = lam.conjugate()
    r = lam.frobenius_rank()
    arms = tuple(lam[i] - (i + 1) for i in range(r))
    legs = tuple(conj[i] - (i + 1) for i in range(r))
    return FrobeniusForm(arms, legs)


def frobenius_compose(form: FrobeniusForm) -> Partition:
    """Rebuild the diagram from diagonal-hook coordinates."""
    r = form.rank
    rows = [form.arms[i] + i + 1 for i in range(r)]
    # Rows below the diagonal block are cut out by the legs: row i (1-based)
    # meets leg j exactly when legs[j] + j + 1 >= i.
    depth = form.legs[0] + 1 if r else 0
    for i in range(r + 1, depth + 1):
        rows.append(sum(1 for j in range(r) if form.legs[j] + j + 1 >= i))
    return Partition(rows)


def augment_arms(mu: Partition, p: int) -> Partition:
    """Lengthen every diagonal arm of a self-conjugate diagram by p.

    In Frobenius coordinates, (alpha | alpha) becomes (alpha + p | alpha).
    """
    mu = as_partition(mu)
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    form = frobenius_decompose(mu)
    if form.arms != form.legs:
        raise ValueError(f"{mu!r} is not self-conjugate")
    return frobenius_compose(
        FrobeniusForm(tuple(a + p for a in form.arms), form.legs)
    )


def enumeration_key(lam: Partition):
    """Sort key: by size, then descending lexicographic on part lists."""
    lam = as_partition(lam)
    return (lam.size, tuple(-p for p in lam.parts))


def enumerate_self_conjugate_in_square(n: int) -> list[Partition]:
    """All 2^n self-conjugate diagrams inside the n x n square.

    Produced through Frobenius coordinates: each strictly decreasing arm
    set inside {0, ..., n-1} gives one diagram (arms == legs).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = []
    for r in range(n + 1):
        for arm_set in combinations(range(n), r):
            arms = tuple(sorted(arm_set, reverse=True))
            out.append(frobenius_compose(FrobeniusForm(arms, arms)))
    out.sort(key=enumeration_key)
    return out


def _partitions_of(d: int, max_part: int, max_length: int) -> Iterator[tuple[int, ...]]:
    """Partitions of d, parts <= max_part, at most max_length rows, descending lex."""
    if d == 0:
        yield ()
        return
    if max_length <= 0 or max_part <= 0:
        return
    for first in range(min(d, max_part), 0, -1):
        if d - first > first * (max_length - 1):
            continue
        for rest in _partitions_of(d - first, first, max_length - 1):
            yield (first, *rest)


def enumerate_partitions(
    max_part: int | None = None,
    max_length: int | None = None,
    max_size: int | None = None,
) -> Iterator[Partition]:
    """Stream all partitions obeying the given bounds (None = unbounded).

    Ordered by size, then descending lexicographic within a size.  At least
    one of the bounds must make the stream's grading well defined: when
    max_part and max_length are both unbounded, max_size must be finite.
    """
    for name, v in (("max_part", max_part), ("max_length", max_length), ("max_size", max_size)):
        if v is not None and v < 0:
            raise ValueError(f"{name} must be non-negative, got {v}")
    if max_size is None and (max_part is None and max_length is None):
        raise ValueError("unbounded request: give max_size, or max_part and max_length")
    if max_size is None:
        if max_part is None or max_length is None:
            # One finite shape bound still leaves infinitely many sizes; the
            # stream is lazy and graded, so it is well defined and usable.
            size_cap = None
        else:
            size_cap = max_part * max_length
    else:
        size_cap = max_size
        if max_part is not None and max_length is not None:
            size_cap = min(size_cap, max_part * max_length)
    d = 0
    while size_cap is None or d <= size_cap:
        mp = d if max_part is None else min(max_part, d)
        ml = d if max_length is None else min(max_length, d)
        for parts in _partitions_of(d, mp, ml):
            yield Partition(parts)
        d += 1


def hook_condition(lam: Partition, n: int, m: int) -> bool:
    """True when the diagram fits in the (n|m) hook: row n+1 has at most m boxes."""
    if n < 0 or m < 0:
        raise ValueError(f"n and m must be non-negative, got n={n}, m={m}")
    return as_partition(lam).part(n) <= m
