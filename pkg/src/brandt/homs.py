"""Homomorphism checking and brute-force enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

from .core import (
    BudgetExceeded,
    FiniteSemigroup,
    FunctionSemigroup,
    Mismatch,
    MaximalSubgroup,
    NotHomomorphism,
    ShapeError,
    maximal_subgroup,
    require_monoid_with_zero,
)

DEFAULT_BUDGET = 10_000_000

Target = Union[FiniteSemigroup, FunctionSemigroup]


@dataclass(frozen=True)
class Homomorphism:
    """A verified total map between semigroups.

    ``mapping[i]`` is the image of source element i: an index for table
    targets, a token for function-backed targets.
    """

    source: FiniteSemigroup
    target: Target
    mapping: tuple

    def __call__(self, i: int):
        return self.mapping[i]

    @cached_property
    def image(self) -> frozenset:
        return frozenset(self.mapping)

    @property
    def is_trivial(self) -> bool:
        return len(self.image) == 1

    @property
    def preserves_zero(self) -> Optional[bool]:
        if self.source.zero is None or self.target.zero is None:
            return None
        return self.mapping[self.source.zero] == self.target.zero

    @property
    def is_injective(self) -> bool:
        return len(self.image) == self.source.order

    @property
    def is_surjective(self) -> bool:
        if not isinstance(self.target, FiniteSemigroup):
            return False
        return len(self.image) == self.target.order

    def __repr__(self) -> str:
        return f"Homomorphism({list(self.mapping)!r})"


def check_homomorphism(mapping, source: FiniteSemigroup, target: Target) -> Homomorphism:
    """Verify the product law over every source pair and wrap the map."""
    mapping = tuple(mapping)
    if len(mapping) != source.order:
        raise ShapeError(
            f"map covers {len(mapping)} elements, source has {source.order}"
        )
    finite = isinstance(target, FiniteSemigroup)
    if finite:
        for v in mapping:
            if not isinstance(v, int) or not (0 <= v < target.order):
                raise ShapeError(f"image {v!r} outside the target")
    n = source.order
    st = source.table
    for i in range(n):
        for j in range(n):
            got = (
                target.table[mapping[i]][mapping[j]]
                if finite
                else target.multiply(mapping[i], mapping[j])
            )
            want = mapping[st[i][j]]
            if got != want:
                raise NotHomomorphism(
                    i,
                    j,
                    f"f({source.labels[i]})*f({source.labels[j]}) != f({source.labels[i]}*{source.labels[j]})",
                )
    return Homomorphism(source=source, target=target, mapping=mapping)


def compose_homs(first: Homomorphism, then: Homomorphism) -> Homomorphism:
    """Apply ``first``, then ``then``."""
    if first.target != then.source:
        raise Mismatch("middle semigroups differ")
    mapping = tuple(then.mapping[v] for v in first.mapping)
    return Homomorphism(source=first.source, target=then.target, mapping=mapping)


def mulclose(table, gens, n) -> set:
    els = set(gens)
    frontier = list(els)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(els):
                for c in (table[a][b], table[b][a]):
                    if c not in els:
                        els.add(c)
                        fresh.append(c)
        frontier = fresh
    return els


def generating_set(S: FiniteSemigroup) -> list[int]:
    """Greedy generators: repeatedly add the element whose closure grows most."""
    n = S.order
    t = S.table
    gens: list[int] = []
    closed: set = set()
    while len(closed) < n:
        best, best_closure = None, None
        for e in range(n):
            if e in closed:
                continue
            clo = mulclose(t, gens + [e], n)
            if best_closure is None or len(clo) > len(best_closure):
                best, best_closure = e, clo
        gens.append(best)
        closed = best_closure
    return gens


def enumerate_homs(
    S: FiniteSemigroup,
    T: FiniteSemigroup,
    nontrivial_only: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> list[Homomorphism]:
    """Every homomorphism S -> T, by backtracking over generator images.

    Partial maps are closed under forced products as the search goes, so a
    contradiction prunes the branch immediately.  Output is sorted by map
    table.  Raises BudgetExceeded past ``budget`` propagation steps.
    """
    n, m = S.order, T.order
    st, tt = S.table, T.table
    gens = generating_set(S)
    partial: dict = {}
    results: list[tuple] = []
    steps = 0

    def propagate(x, y):
        nonlocal steps
        added = []
        stack = [(x, y)]
        ok = True
        while stack:
            steps += 1
            if steps > budget:
                raise BudgetExceeded(f"search exceeded {budget} steps")
            a, b = stack.pop()
            cur = partial.get(a)
            if cur is not None:
                if cur != b:
                    ok = False
                    break
                continue
            partial[a] = b
            added.append(a)
            for c, d in list(partial.items()):
                stack.append((st[a][c], tt[b][d]))
                if c != a:
                    stack.append((st[c][a], tt[d][b]))
        if not ok:
            for a in added:
                del partial[a]
            return None
        return added

    def dfs(i):
        if i == len(gens):
            results.append(tuple(partial[x] for x in range(n)))
            return
        g = gens[i]
        if g in partial:
            dfs(i + 1)
            return
        for y in range(m):
            added = propagate(g, y)
            if added is not None:
                dfs(i + 1)
                for a in added:
                    del partial[a]

    dfs(0)
    maps = sorted(results)
    if nontrivial_only:
        maps = [f for f in maps if len(set(f)) > 1]
    return [Homomorphism(source=S, target=T, mapping=f) for f in maps]


@dataclass(frozen=True)
class HomInvariants:
    """Zero-preserving homomorphisms with the idempotents and subgroups they hit."""

    hom0: tuple
    e1: tuple
    h1: dict


def hom_invariants(
    S: FiniteSemigroup, T: FiniteSemigroup, budget: int = DEFAULT_BUDGET
) -> HomInvariants:
    """Hom0(S,T) with the realized identity images and their maximal subgroups."""
    require_monoid_with_zero(S, "source")
    require_monoid_with_zero(T, "target")
    hom0 = tuple(
        h
        for h in enumerate_homs(S, T, budget=budget)
        if h.mapping[S.zero] == T.zero
    )
    e1 = tuple(sorted({h.mapping[S.identity] for h in hom0}))
    h1 = {e: maximal_subgroup(T, e) for e in e1}
    return HomInvariants(hom0=hom0, e1=e1, h1=h1)
