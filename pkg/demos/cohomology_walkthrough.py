#!/usr/bin/env python3
"""From signed permutations to the cohomology table, two independent ways.

The degree-k cohomology of the abelian nilradical acting on the level-p
module is a sum of gl(n) modules.  One construction walks the 2^n
distinguished coset representatives of the hyperoctahedral group; the
other enumerates self-conjugate diagrams in the n x n square and lengthens
their arms.  They must agree, and the alternating sum of the resolution
characters must reproduce the branching character.
"""

from itertools import combinations

from parafock import (
    MultiPoly,
    RootSystemB,
    branching_character,
    cohomology_via_partitions,
    cohomology_via_w1,
    phi_sigma,
    resolution_character,
    w1_element,
)

N, P = 3, 1


def main():
    rs = RootSystemB(N)
    print(f"rank {N}: {len(rs.positive_roots)} positive roots, "
          f"{len(rs.nilradical_roots)} in the nilradical\n")

    # Each subset I of {1..n} yields one representative; its inversion set
    # stays inside the nilradical and its size is the cohomological degree.
    print("I          word       signs        #Phi")
    for r in range(N + 1):
        for I in combinations(range(1, N + 1), r):
            sigma = w1_element(I, N)
            phi = phi_sigma(sigma, rs)
            print(f"{str(list(I)):10} {str(list(sigma.word)):10} "
                  f"{str(list(sigma.signs)):12} {len(phi)}")

    # The two table constructions.
    via_w = cohomology_via_w1(N, P)
    via_mu = cohomology_via_partitions(N, P)
    print(f"\ncohomology table at n={N}, p={P} (k, diagram):")
    for e in via_mu.entries:
        print(f"  k={e.k}  mu^(p)={list(e.diagram.parts)}   from mu={list(e.source.parts)}")
    print(f"routes agree? {via_w.degree_diagram_pairs() == via_mu.degree_diagram_pairs()}")

    # Euler characteristic of the resolution: alternating sum over k of
    # (numerator at k) x (symmetric-algebra character), compared to the
    # branching character through a degree bound.
    D = 5
    euler = MultiPoly.zero(N)
    for k in range(via_mu.max_degree() + 1):
        ch = resolution_character(N, P, k, D).poly
        euler = euler + ch if k % 2 == 0 else euler - ch
    target = branching_character(N, P)
    agree = all(
        euler.component2(2 * d) == target.component2(2 * d) for d in range(D + 1)
    )
    print(f"\nalternating sum of resolution characters == branching character "
          f"through degree {D}? {agree}")
    print(f"branching character: {target}")


if __name__ == "__main__":
    main()
