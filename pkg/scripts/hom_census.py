#!/usr/bin/env python3
"""Census of homomorphisms between corpus extensions.

For every ordered pair of corpus monoids and every index-size pair, counts
the non-trivial homomorphisms found by brute force, the ones the triple
parametrization generates, and how many brute-force maps move the zero.
The last column is the visible witness that the parametrization is complete
exactly at rank two and captures the zero-preserving maps at rank one.
"""

import argparse

from brandt import brandt_extension, enumerate_homs, enumerate_triples, induced_hom
from brandt.corpus import acceptance_corpus


def census(lam_pairs):
    corpus = acceptance_corpus()
    rows = []
    for s_name, S in corpus.items():
        for t_name, T in corpus.items():
            for l1, l2 in lam_pairs:
                src = brandt_extension(S, l1)
                dst = brandt_extension(T, l2)
                brute = {
                    h.mapping
                    for h in enumerate_homs(
                        src.carrier, dst.carrier, nontrivial_only=True
                    )
                }
                generated = {
                    induced_hom(t, src, dst).mapping
                    for t in enumerate_triples(S, T, l1, l2)
                }
                moved = sum(1 for m in brute if m[0] != 0)
                rows.append(
                    (s_name, t_name, l1, l2, len(brute), len(generated), moved)
                )
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--rank-two-only",
        action="store_true",
        help="restrict the grid to lam1 = lam2 = 2",
    )
    args = parser.parse_args()
    pairs = ((2, 2),) if args.rank_two_only else ((1, 1), (1, 2), (2, 2))
    rows = census(pairs)
    header = ("source", "target", "l1", "l2", "brute", "triples", "zero-moved")
    widths = [max(len(str(r[i])) for r in rows + [header]) for i in range(7)]
    print("  ".join(str(h).ljust(w) for h, w in zip(header, widths)))
    for r in rows:
        print("  ".join(str(v).ljust(w) for v, w in zip(r, widths)))
    mismatched = [r for r in rows if r[4] != r[5]]
    print()
    print(f"{len(rows)} grid points, {len(mismatched)} with brute != triples")
    if mismatched and all(r[4] - r[5] == r[6] for r in mismatched):
        print("every gap consists exactly of the maps that move the zero")


if __name__ == "__main__":
    main()
