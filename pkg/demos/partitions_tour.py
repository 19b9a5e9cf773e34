#!/usr/bin/env python3
"""Tour of the partition layer: diagrams, Frobenius coordinates, augmentation.

Run it top to bottom; every step prints what it just computed.
"""

from parafock import (
    FrobeniusForm,
    Partition,
    augment_arms,
    enumerate_partitions,
    enumerate_self_conjugate_in_square,
    frobenius_compose,
    frobenius_decompose,
)


def main():
    lam = Partition([4, 3, 1])
    print(f"diagram        {lam.parts}, {lam.size} boxes, {len(lam)} rows")
    print(f"conjugate      {lam.conjugate().parts}")

    # Frobenius coordinates read the diagram along its diagonal hooks.
    form = frobenius_decompose(lam)
    print(f"frobenius      (arms|legs) = ({form.arms}|{form.legs}), rank {form.rank}")
    print(f"recomposed     {frobenius_compose(form).parts}")

    # A diagram is self-conjugate exactly when arms == legs.
    mu = Partition([3, 2, 1])
    print(f"\n{mu.parts} self-conjugate? {mu.is_self_conjugate()}")
    print(f"arms == legs?  {frobenius_decompose(mu).arms == frobenius_decompose(mu).legs}")

    # The 2^n self-conjugate diagrams inside the n x n square, one per
    # subset of possible arm lengths.
    n = 3
    square = enumerate_self_conjugate_in_square(n)
    print(f"\nself-conjugate diagrams in the {n}x{n} square ({len(square)}):")
    for d in square:
        print(f"  {list(d.parts)}")

    # Lengthening every arm by p turns (alpha|alpha) into (alpha+p|alpha);
    # this is the diagram that indexes degree-k cohomology at level p.
    p = 2
    print(f"\narm augmentation by p={p}:")
    for d in square:
        print(f"  {list(d.parts)} -> {list(augment_arms(d, p).parts)}")

    # Building a diagram directly from hook coordinates.
    tall = frobenius_compose(FrobeniusForm((4, 1), (2, 0)))
    print(f"\n(4,1|2,0) composes to {tall.parts}")

    # Graded enumeration: by size, then descending lexicographic.
    print("\nall diagrams with at most 2 rows and 3 columns:")
    print([list(d.parts) for d in enumerate_partitions(max_part=3, max_length=2)])


if __name__ == "__main__":
    main()
