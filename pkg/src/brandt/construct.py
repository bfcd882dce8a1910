"""Brandt extensions, matrix-unit semigroups, orthogonal sums.

The extension of a semigroup S with zero over an index set of size lam has
carrier {(a, s, b) : a, b < lam, s in S minus its zero} plus one zero, with
(a, s, b)(c, t, d) = (a, st, d) when b = c and st is nonzero, and the zero
otherwise.  The carrier zero sits at index 0 and the remaining elements are
ordered lexicographically by (a, b, s).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    ConformanceError,
    FiniteSemigroup,
    FunctionSemigroup,
    NoZero,
    build_semigroup,
)
from .homs import Homomorphism, check_homomorphism


@dataclass(frozen=True)
class BrandtExtension:
    """A constructed extension together with its coordinate maps."""

    base: FiniteSemigroup
    lam: int
    carrier: FiniteSemigroup
    base_has_identity: bool
    nonzero_base: tuple[int, ...]  # base indices, ascending, zero omitted

    def encode(self, a: int, s: int, b: int) -> int:
        """Carrier index of (a, s, b); s is a nonzero base index."""
        m = len(self.nonzero_base)
        pos = self.nonzero_base.index(s)
        return 1 + (a * self.lam + b) * m + pos

    def decode(self, idx: int) -> tuple[int, int, int]:
        """Coordinates (a, s, b) of a nonzero carrier index."""
        if idx == 0:
            raise ValueError("the zero has no coordinates")
        m = len(self.nonzero_base)
        block, pos = divmod(idx - 1, m)
        a, b = divmod(block, self.lam)
        return a, self.nonzero_base[pos], b

    @property
    def zero(self) -> int:
        return 0

    def unit_index(self, a: int, b: int) -> int:
        """Carrier index of (a, 1_S, b)."""
        if self.base.identity is None:
            raise NoZero("base has no identity")
        return self.encode(a, self.base.identity, b)

    def __repr__(self) -> str:
        return f"BrandtExtension(lam={self.lam}, base={self.base!r})"


def brandt_extension(S: FiniteSemigroup, lam: int, carrier_labels=None) -> BrandtExtension:
    """Build the extension of a semigroup with zero over lam indices.

    The base need not be a monoid (orthogonal sums of monoids are not), so
    only the zero is required here; operations that need 1_S check for it
    themselves.
    """
    if S.zero is None:
        raise NoZero("Brandt extensions need a base zero")
    if lam < 1:
        raise ValueError("lam must be positive")
    nonzero = tuple(s for s in range(S.order) if s != S.zero)
    m = len(nonzero)
    n = lam * lam * m + 1
    pos = {s: p for p, s in enumerate(nonzero)}

    table = [[0] * n for _ in range(n)]
    st = S.table
    zero_s = S.zero
    coords = [None] + [
        (a, s, b) for a in range(lam) for b in range(lam) for s in nonzero
    ]
    for i in range(1, n):
        a, s, b = coords[i]
        row = table[i]
        for j in range(1, n):
            c, t, d = coords[j]
            if b != c:
                continue
            prod = st[s][t]
            if prod == zero_s:
                continue
            row[j] = 1 + (a * lam + d) * m + pos[prod]

    if carrier_labels is None:
        carrier_labels = ["0"] + [
            f"({a},{S.labels[s]},{b})" for (a, s, b) in coords[1:]
        ]
    carrier = build_semigroup(table, carrier_labels, zero=0)
    return BrandtExtension(
        base=S,
        lam=lam,
        carrier=carrier,
        base_has_identity=S.identity is not None,
        nonzero_base=nonzero,
    )


_TWO_ELEMENT = build_semigroup([[0, 1], [1, 1]], ["1", "0"])


def matrix_units_extension(lam: int) -> BrandtExtension:
    """The rank-lam matrix units, kept with their extension coordinates."""
    if lam < 1:
        raise ValueError("lam must be positive")
    labels = ["0"] + [
        f"({a + 1},{b + 1})" for a in range(lam) for b in range(lam)
    ]
    return brandt_extension(_TWO_ELEMENT, lam, carrier_labels=labels)


def matrix_units(lam: int) -> FiniteSemigroup:
    """The semigroup of lam-by-lam matrix units, labelled "(i,j)" and "0"."""
    return matrix_units_extension(lam).carrier


def double_extension_witness(
    S: FiniteSemigroup, lam1: int, lam2: int
) -> Homomorphism:
    """The explicit isomorphism from the twice-extended semigroup to the
    single extension over lam1*lam2 indices.

    Index pairs flatten as (outer, inner) -> outer*lam1 + inner on both
    sides, which makes the witness deterministic.  The result is verified to
    be a bijective homomorphism before return.
    """
    inner = brandt_extension(S, lam1)
    outer = brandt_extension(inner.carrier, lam2)
    flat = brandt_extension(S, lam1 * lam2)

    mapping = [0] * outer.carrier.order
    for idx in range(1, outer.carrier.order):
        a2, mid, b2 = outer.decode(idx)
        a1, s, b1 = inner.decode(mid)
        mapping[idx] = flat.encode(a2 * lam1 + a1, s, b2 * lam1 + b1)
    witness = check_homomorphism(mapping, outer.carrier, flat.carrier)
    if not (witness.is_injective and witness.is_surjective):
        raise ConformanceError("double-extension witness is not bijective")
    return witness


def orthogonal_sum(parts) -> tuple[FiniteSemigroup, list[Homomorphism]]:
    """Glue semigroups with zero at a shared zero; cross products vanish.

    Returns the sum and one injection per part, each verified.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("need at least one part")
    for k, P in enumerate(parts):
        if P.zero is None:
            raise NoZero(f"part {k} has no zero")
    offsets = []
    labels = ["0"]
    total = 1
    for k, P in enumerate(parts):
        offsets.append(total)
        labels.extend(
            f"{k}.{P.labels[x]}" for x in range(P.order) if x != P.zero
        )
        total += P.order - 1

    # global index of a part element
    def glob(k, x):
        P = parts[k]
        if x == P.zero:
            return 0
        skip = sum(1 for y in range(x) if y == P.zero)
        return offsets[k] + x - skip

    table = [[0] * total for _ in range(total)]
    for k, P in enumerate(parts):
        for x in range(P.order):
            for y in range(P.order):
                table[glob(k, x)][glob(k, y)] = glob(k, P.table[x][y])
    sum_sg = build_semigroup(table, labels, zero=0)
    injections = [
        check_homomorphism(
            [glob(k, x) for x in range(P.order)], P, sum_sg
        )
        for k, P in enumerate(parts)
    ]
    return sum_sg, injections


def primitive_inverse_check_extension(
    S: FiniteSemigroup, lam: int
) -> tuple[bool, bool]:
    """Primitive-inverse flag of the base and of its extension.

    The two flags agree for every base; the pair is exposed so the agreement
    can be asserted by name.
    """
    from .classify import is_primitive_inverse

    if S.zero is None:
        raise NoZero("base has no zero")
    ext = brandt_extension(S, lam)
    return is_primitive_inverse(S), is_primitive_inverse(ext.carrier)


BICYCLIC_ZERO = "0"


def bicyclic_with_zero() -> FunctionSemigroup:
    """The monoid on pairs (i, j), meaning q^i p^j with pq = 1, plus a zero.

    (i, j)(k, l) = (i + k - min(j, k), j + l - min(j, k)); the token "0"
    absorbs and (0, 0) is the identity.
    """

    def mul(x, y):
        if x == BICYCLIC_ZERO or y == BICYCLIC_ZERO:
            return BICYCLIC_ZERO
        i, j = x
        k, l = y
        m = min(j, k)
        return (i + k - m, j + l - m)

    return FunctionSemigroup(
        name="bicyclic-with-zero", multiply=mul, zero=BICYCLIC_ZERO, identity=(0, 0)
    )


def function_brandt_extension(fs: FunctionSemigroup, lam: int) -> FunctionSemigroup:
    """Extension of a function-backed semigroup with zero; tokens are
    (a, s, b) triples over nonzero base tokens, plus the token "0"."""
    if lam < 1:
        raise ValueError("lam must be positive")
    base_zero = fs.zero

    def mul(x, y):
        if x == "0" or y == "0":
            return "0"
        a, s, b = x
        c, t, d = y
        if b != c:
            return "0"
        prod = fs.multiply(s, t)
        if prod == base_zero:
            return "0"
        return (a, prod, d)

    ident = None
    if lam == 1 and fs.identity is not None:
        ident = (0, fs.identity, 0)
    return FunctionSemigroup(
        name=f"extension-{lam}({fs.name})", multiply=mul, zero="0", identity=ident
    )
