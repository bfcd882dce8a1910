"""Finite semigroups as Cayley tables, plus the structural basics built on them.

Elements are integer indices into a square multiplication table; labels are
display-only.  All objects are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence


class AlgebraError(Exception):
    """Base class for errors raised by this package."""


class ShapeError(AlgebraError):
    pass


class NonAssociative(AlgebraError):
    """The table fails associativity; carries the first witnessing triple."""

    def __init__(self, i: int, j: int, k: int):
        self.witness = (i, j, k)
        super().__init__(
            f"not associative: witness ({i},{j},{k}) has (i*j)*k != i*(j*k)"
        )


class BadZero(AlgebraError):
    pass


class BadIdentity(AlgebraError):
    pass


class NotIdempotent(AlgebraError):
    pass


class NoZero(AlgebraError):
    pass


class NoIdentity(AlgebraError):
    pass


class TooLarge(AlgebraError):
    pass


class BudgetExceeded(AlgebraError):
    pass


class Mismatch(AlgebraError):
    pass


class TrivialInput(AlgebraError):
    pass


class IllFormedTriple(AlgebraError):
    pass


class HypothesisUnmet(AlgebraError):
    """A conformance check was skipped because its hypotheses do not hold."""


class ConformanceError(AlgebraError):
    """A guaranteed structural fact failed to verify; indicates a bug."""


class NotHomomorphism(AlgebraError):
    """The map breaks the product law; carries the first witnessing pair."""

    def __init__(self, i: int, j: int, detail: str = ""):
        self.witness = (i, j)
        msg = f"product law fails at pair ({i},{j})"
        super().__init__(msg + (": " + detail if detail else ""))


class ParseError(AlgebraError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class FiniteSemigroup:
    """A semigroup on {0..order-1} given by its full multiplication table."""

    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    zero: Optional[int] = None
    identity: Optional[int] = None

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def label(self, i: int) -> str:
        return self.labels[i]

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(e for e in range(self.order) if self.table[e][e] == e)

    def is_idempotent(self, e: int) -> bool:
        return self.table[e][e] == e

    def __repr__(self) -> str:
        bits = [f"order={self.order}"]
        if self.zero is not None:
            bits.append(f"zero={self.labels[self.zero]!r}")
        if self.identity is not None:
            bits.append(f"identity={self.labels[self.identity]!r}")
        return f"FiniteSemigroup({', '.join(bits)})"


@dataclass(frozen=True)
class FunctionSemigroup:
    """A semigroup given by a computable multiplication on opaque tokens.

    Used for infinite carriers; only supports pointwise product evaluation,
    never enumeration.  ``multiply`` must be total on the tokens a caller
    actually feeds it, and ``zero`` must absorb.
    """

    name: str
    multiply: Callable
    zero: object
    identity: object = None

    def __repr__(self) -> str:
        return f"FunctionSemigroup({self.name!r})"


def _find_associativity_witness(table) -> Optional[tuple[int, int, int]]:
    n = len(table)
    rng = range(n)
    for i in rng:
        ti = table[i]
        for j in rng:
            tij = table[ti[j]]
            tj = table[j]
            for k in rng:
                if tij[k] != ti[tj[k]]:
                    return (i, j, k)
    return None


def _detect_zero(table) -> Optional[int]:
    n = len(table)
    for z in range(n):
        if all(table[z][i] == z and table[i][z] == z for i in range(n)):
            return z
    return None


def _detect_identity(table) -> Optional[int]:
    n = len(table)
    for e in range(n):
        if all(table[e][i] == i and table[i][e] == i for i in range(n)):
            return e
    return None


def build_semigroup(
    table: Sequence[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
    zero: Optional[int] = None,
    identity: Optional[int] = None,
) -> FiniteSemigroup:
    """Validate a Cayley table and wrap it as a FiniteSemigroup.

    Zero and identity are verified when declared and auto-detected when not;
    both are unique whenever they exist, so detection is unambiguous.
    """
    n = len(table)
    if n == 0:
        raise ShapeError("empty table")
    rows = []
    for r, row in enumerate(table):
        row = tuple(row)
        if len(row) != n:
            raise ShapeError(f"row {r} has length {len(row)}, expected {n}")
        for v in row:
            if not isinstance(v, int) or not (0 <= v < n):
                raise ShapeError(f"row {r} entry {v!r} out of range 0..{n - 1}")
        rows.append(row)
    tab = tuple(rows)

    if labels is None:
        labels = tuple(f"e{i}" for i in range(n))
    else:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ShapeError(f"{len(labels)} labels for {n} elements")
        if len(set(labels)) != n:
            raise ShapeError("duplicate labels")

    witness = _find_associativity_witness(tab)
    if witness is not None:
        raise NonAssociative(*witness)

    if zero is not None:
        if not (0 <= zero < n):
            raise BadZero(f"zero index {zero} out of range")
        if any(tab[zero][i] != zero or tab[i][zero] != zero for i in range(n)):
            raise BadZero(f"element {labels[zero]!r} is not absorbing")
    else:
        zero = _detect_zero(tab)

    if identity is not None:
        if not (0 <= identity < n):
            raise BadIdentity(f"identity index {identity} out of range")
        if any(tab[identity][i] != i or tab[i][identity] != i for i in range(n)):
            raise BadIdentity(f"element {labels[identity]!r} is not an identity")
    else:
        identity = _detect_identity(tab)

    return FiniteSemigroup(order=n, table=tab, labels=labels, zero=zero, identity=identity)


def subsemigroup(S: FiniteSemigroup, members: Iterable[int]) -> FiniteSemigroup:
    """Restrict S to a product-closed subset, reindexed in ascending order."""
    members = sorted(set(members))
    pos = {x: i for i, x in enumerate(members)}
    for x in members:
        for y in members:
            if S.table[x][y] not in pos:
                raise AlgebraError(
                    f"subset not closed: {S.labels[x]}*{S.labels[y]} escapes"
                )
    table = tuple(tuple(pos[S.table[x][y]] for y in members) for x in members)
    labels = tuple(S.labels[x] for x in members)
    return build_semigroup(table, labels)


def with_adjoined_identity(S: FiniteSemigroup, label: str = "1") -> FiniteSemigroup:
    """Adjoin a fresh identity element at the last index."""
    n = S.order
    table = [list(row) + [i] for i, row in enumerate(S.table)]
    table.append(list(range(n + 1)))
    return build_semigroup(table, S.labels + (label,), zero=S.zero, identity=n)


def with_adjoined_zero(S: FiniteSemigroup, label: str = "0") -> FiniteSemigroup:
    """Adjoin a fresh absorbing element at the last index.

    Any previous zero of S stops being absorbing in the result.
    """
    n = S.order
    table = [list(row) + [n] for row in S.table]
    table.append([n] * (n + 1))
    return build_semigroup(table, S.labels + (label,), zero=n, identity=S.identity)


def require_monoid_with_zero(S: FiniteSemigroup, what: str = "semigroup"):
    if S.zero is None:
        raise NoZero(f"{what} has no zero")
    if S.identity is None:
        raise NoIdentity(f"{what} has no identity")


@dataclass(frozen=True)
class IdempotentOrder:
    """E(S) with its natural partial order and the primitive idempotents.

    When S has no zero, minimality is taken over all of E(S) and
    ``zero_missing`` records that caveat.
    """

    idempotents: tuple[int, ...]
    pairs: frozenset
    primitives: tuple[int, ...]
    zero: Optional[int]
    zero_missing: bool

    def le(self, e: int, f: int) -> bool:
        return (e, f) in self.pairs


def idempotent_order(S: FiniteSemigroup) -> IdempotentOrder:
    """Compute e <= f iff ef = fe = e on E(S)."""
    idem = S.idempotents
    t = S.table
    pairs = frozenset(
        (e, f) for e in idem for f in idem if t[e][f] == e and t[f][e] == e
    )
    nonzero = [e for e in idem if e != S.zero]
    primitives = tuple(
        e
        for e in nonzero
        if not any(f != e and (f, e) in pairs for f in nonzero)
    )
    return IdempotentOrder(
        idempotents=idem,
        pairs=pairs,
        primitives=primitives,
        zero=S.zero,
        zero_missing=S.zero is None,
    )


@dataclass(frozen=True)
class MaximalSubgroup:
    """The largest subgroup of the ambient semigroup with a given identity."""

    identity: int
    members: tuple[int, ...]
    group: FiniteSemigroup

    def inverse(self, S: FiniteSemigroup, x: int) -> int:
        # exhaustive search; subgroups stay tiny at desk scale
        e = self.identity
        for y in self.members:
            if S.table[x][y] == e and S.table[y][x] == e:
                return y
        raise AlgebraError(f"{S.labels[x]} has no inverse in H({S.labels[e]})")


def maximal_subgroup(S: FiniteSemigroup, e: int) -> MaximalSubgroup:
    """H(e) computed as the group of units of the local monoid eSe."""
    t = S.table
    if t[e][e] != e:
        raise NotIdempotent(f"element {S.labels[e]!r} is not idempotent")
    local = sorted({t[t[e][x]][e] for x in range(S.order)})
    members = tuple(
        x for x in local if any(t[x][y] == e and t[y][x] == e for y in local)
    )
    return MaximalSubgroup(identity=e, members=members, group=subsemigroup(S, members))
