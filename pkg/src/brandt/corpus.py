"""Small monoids with zero used throughout the tests and fixtures."""

from __future__ import annotations

from functools import lru_cache

from .core import FiniteSemigroup, build_semigroup, with_adjoined_identity, with_adjoined_zero
from .construct import matrix_units


@lru_cache(maxsize=None)
def two_element() -> FiniteSemigroup:
    """The monoid {1, 0}."""
    return build_semigroup([[0, 1], [1, 1]], ["1", "0"])


@lru_cache(maxsize=None)
def chain(n: int) -> FiniteSemigroup:
    """Chain semilattice x0 > x1 > ... with meet; top is the identity,
    bottom the zero."""
    table = [[max(i, j) for j in range(n)] for i in range(n)]
    return build_semigroup(table, [f"x{i}" for i in range(n)])


@lru_cache(maxsize=None)
def example_e() -> FiniteSemigroup:
    """The three-chain semilattice a > b > c with unity a and zero c."""
    table = [[max(i, j) for j in range(3)] for i in range(3)]
    return build_semigroup(table, ["a", "b", "c"])


@lru_cache(maxsize=None)
def cyclic_group_with_zero(n: int) -> FiniteSemigroup:
    """The cyclic group of order n with an adjoined zero at the last index."""
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["1"] + [f"g{i}" if i > 1 else "g" for i in range(1, n)]
    return with_adjoined_zero(build_semigroup(table, labels))


@lru_cache(maxsize=None)
def rect_band_with_unit_and_zero() -> FiniteSemigroup:
    """The 2x2 rectangular band (i,j)(k,l) = (i,l) with adjoined unity and zero."""
    pairs = [(1, 1), (1, 2), (2, 1), (2, 2)]
    pos = {p: i for i, p in enumerate(pairs)}
    table = [
        [pos[(pairs[i][0], pairs[j][1])] for j in range(4)] for i in range(4)
    ]
    band = build_semigroup(table, [f"({i},{j})" for i, j in pairs])
    return with_adjoined_zero(with_adjoined_identity(band))


@lru_cache(maxsize=None)
def b2_with_identity() -> FiniteSemigroup:
    """The five-element 2x2 matrix units with an adjoined identity."""
    return with_adjoined_identity(matrix_units(2))


@lru_cache(maxsize=None)
def matrix_units_with_identity_and_new_zero(lam: int) -> FiniteSemigroup:
    """Rank-lam matrix units with an adjoined identity and then a fresh zero.

    The matrix units' own zero stops being absorbing; the fresh element z is
    the zero of the result.
    """
    return with_adjoined_zero(
        with_adjoined_identity(matrix_units(lam), label="i1"), label="z"
    )


def acceptance_corpus() -> dict[str, FiniteSemigroup]:
    """The fixed desk-scale corpus the acceptance sweeps run over."""
    return {
        "two-element": two_element(),
        "chain3": chain(3),
        "semilattice-abc": example_e(),
        "z2-with-zero": cyclic_group_with_zero(2),
    }


def semilattice_corpus() -> dict[str, FiniteSemigroup]:
    """Corpus members that are semilattices with unity and zero."""
    return {
        "two-element": two_element(),
        "chain3": chain(3),
        "semilattice-abc": example_e(),
    }
