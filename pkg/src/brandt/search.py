"""Combinatorial search kernels: congruences, matrix-unit copies, isomorphism.

All searches are deterministic: candidates are tried in ascending index order,
so the first witness found is the lexicographically smallest one the search
order can produce.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import (
    AlgebraError,
    ConformanceError,
    FiniteSemigroup,
    NoZero,
    ShapeError,
    TooLarge,
)

DEFAULT_CONGRUENCE_BOUND = 40


def _normalize_partition(parent, find, n) -> tuple[int, ...]:
    ids = {}
    out = []
    for i in range(n):
        r = find(i)
        if r not in ids:
            ids[r] = len(ids)
        out.append(ids[r])
    return tuple(out)


def congruence_closure(S: FiniteSemigroup, pairs) -> tuple[int, ...]:
    """Smallest congruence containing the given pairs, as a partition tuple.

    Pair-closure: whenever a pair merges, its left and right translates are
    queued, which suffices because merged chains translate elementwise.
    """
    n = S.order
    t = S.table
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work = list(pairs)
    while work:
        a, b = work.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[rb] = ra
        for x in range(n):
            xa, xb = t[x][a], t[x][b]
            if find(xa) != find(xb):
                work.append((xa, xb))
            ax, bx = t[a][x], t[b][x]
            if find(ax) != find(bx):
                work.append((ax, bx))
    return _normalize_partition(parent, find, n)


def principal_congruence(S: FiniteSemigroup, a: int, b: int) -> tuple[int, ...]:
    return congruence_closure(S, [(a, b)])


def identity_partition(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def universal_partition(n: int) -> tuple[int, ...]:
    return (0,) * n


def is_congruence(S: FiniteSemigroup, partition) -> bool:
    """Check closure under all left and right translations."""
    n = S.order
    t = S.table
    if len(partition) != n:
        return False
    for a in range(n):
        for b in range(a + 1, n):
            if partition[a] != partition[b]:
                continue
            for x in range(n):
                if partition[t[x][a]] != partition[t[x][b]]:
                    return False
                if partition[t[a][x]] != partition[t[b][x]]:
                    return False
    return True


def congruence_lattice(
    S: FiniteSemigroup, bound: int = DEFAULT_CONGRUENCE_BOUND
) -> list[tuple[int, ...]]:
    """All congruences of S, as the join closure of the principal ones.

    Refuses orders above ``bound`` rather than degrade silently.
    """
    n = S.order
    if n > bound:
        raise TooLarge(f"order {n} exceeds the congruence bound {bound}")
    found = {identity_partition(n)}
    for a in range(n):
        for b in range(a + 1, n):
            found.add(principal_congruence(S, a, b))

    def join(p, q):
        pairs = []
        first_of_class = {}
        for part in (p, q):
            seen = {}
            for i, c in enumerate(part):
                if c in seen:
                    pairs.append((seen[c], i))
                else:
                    seen[c] = i
        return congruence_closure(S, pairs)

    frontier = list(found)
    while frontier:
        fresh = []
        for p in frontier:
            for q in list(found):
                j = join(p, q)
                if j not in found:
                    found.add(j)
                    fresh.append(j)
        frontier = fresh
    return sorted(found)


def is_congruence_free(
    S: FiniteSemigroup, bound: int = DEFAULT_CONGRUENCE_BOUND
) -> bool:
    """Exactly two congruences exist: the identity and the universal one.

    Equivalent to every principal congruence of a distinct pair being
    universal, which avoids building the whole lattice.
    """
    n = S.order
    if n > bound:
        raise TooLarge(f"order {n} exceeds the congruence bound {bound}")
    if n < 2:
        return False
    universal = universal_partition(n)
    for a in range(n):
        for b in range(a + 1, n):
            if principal_congruence(S, a, b) != universal:
                return False
    return True


@dataclass(frozen=True)
class MatrixUnitCopy:
    """An embedded copy of the matrix-unit semigroup of a given rank.

    ``unit_images[i][j]`` is the ambient element playing the (i+1,j+1) unit;
    ``zero_image`` plays the copy's zero and need not be the ambient zero.
    """

    lam: int
    zero_image: int
    unit_images: tuple[tuple[int, ...], ...]

    def image_set(self) -> set:
        out = {self.zero_image}
        for row in self.unit_images:
            out.update(row)
        return out


def _verify_copy(T: FiniteSemigroup, lam, w, units) -> bool:
    t = T.table
    elems = {w}
    for row in units:
        elems.update(row)
    if len(elems) != lam * lam + 1:
        return False
    if t[w][w] != w:
        return False
    for i in range(lam):
        for j in range(lam):
            x = units[i][j]
            if t[x][w] != w or t[w][x] != w:
                return False
            for k in range(lam):
                for l in range(lam):
                    y = units[k][l]
                    want = units[i][l] if j == k else w
                    if t[x][y] != want:
                        return False
    return True


def find_matrix_unit_copy(
    T: FiniteSemigroup, lam: int, anchor_zero: bool = False
) -> Optional[MatrixUnitCopy]:
    """Search T for a subsemigroup isomorphic to the rank-lam matrix units.

    Backtracks over the diagonal idempotent images first, then the first row
    and column; the remaining units are forced as products.  With
    ``anchor_zero`` the copy's zero must be T's own zero.
    """
    if lam < 2:
        raise ShapeError("matrix-unit rank must be at least 2")
    n = T.order
    if lam * lam + 1 > n:
        return None
    if anchor_zero and T.zero is None:
        raise NoZero("anchored search needs a zero")
    t = T.table
    idem = T.idempotents
    zero_candidates = (T.zero,) if anchor_zero else idem

    for w in zero_candidates:
        diag_pool = [
            e for e in idem if e != w and t[e][w] == w and t[w][e] == w
        ]
        for diag in itertools.combinations(diag_pool, lam):
            if any(
                t[diag[i]][diag[j]] != w or t[diag[j]][diag[i]] != w
                for i in range(lam)
                for j in range(i + 1, lam)
            ):
                continue
            copy = _extend_rows_cols(T, lam, w, diag)
            if copy is not None:
                return copy
    return None


def _extend_rows_cols(T, lam, w, diag) -> Optional[MatrixUnitCopy]:
    t = T.table
    n = T.order
    f0 = diag[0]
    # candidate (a, b) pairs per column j: a plays unit (0,j), b plays (j,0)
    options = []
    for j in range(1, lam):
        fj = diag[j]
        pairs = []
        for a in range(n):
            if a == w or t[f0][a] != a or t[a][fj] != a:
                continue
            for b in range(n):
                if b == w or t[fj][b] != b or t[b][f0] != b:
                    continue
                if t[a][b] == f0 and t[b][a] == fj:
                    pairs.append((a, b))
        if not pairs:
            return None
        options.append(pairs)

    for choice in itertools.product(*options):
        row0 = [f0] + [a for a, _ in choice]
        col0 = [f0] + [b for _, b in choice]
        units = [
            [t[col0[i]][row0[j]] if i or j else f0 for j in range(lam)]
            for i in range(lam)
        ]
        for j in range(lam):
            units[0][j] = row0[j]
            units[j][0] = col0[j]
        units = tuple(tuple(r) for r in units)
        if _verify_copy(T, lam, w, units):
            return MatrixUnitCopy(lam=lam, zero_image=w, unit_images=units)
    return None


def matrix_unit_exclusion(T: FiniteSemigroup, lam: int) -> tuple[bool, bool]:
    """(no rank-2 copy at all, no rank-lam copy and no rank-2 copy at the zero).

    The first flag is the membership test used for classifiable targets; the
    second is the rank-dependent variant with its anchored condition.
    """
    if T.zero is None:
        raise NoZero("the rank-dependent exclusion needs a zero")
    plain = find_matrix_unit_copy(T, 2, anchor_zero=False) is None
    lam_free = (
        find_matrix_unit_copy(T, lam, anchor_zero=False) is None
        and find_matrix_unit_copy(T, 2, anchor_zero=True) is None
    )
    return plain, lam_free


def excludes_b2(T: FiniteSemigroup) -> bool:
    """No subsemigroup of T is a copy of the five-element matrix units."""
    return find_matrix_unit_copy(T, 2, anchor_zero=False) is None


def _power_profile(t, x):
    seen = {x: 0}
    y = x
    k = 0
    while True:
        y = t[y][x]
        k += 1
        if y in seen:
            return (seen[y], k - seen[y])  # (tail, period)
        seen[y] = k


def _element_profiles(S: FiniteSemigroup):
    t = S.table
    n = S.order
    out = []
    for x in range(n):
        row = {t[x][y] for y in range(n)}
        col = {t[y][x] for y in range(n)}
        out.append(
            (
                t[x][x] == x,
                _power_profile(t, x),
                len(row),
                len(col),
                x in row,
                x in col,
            )
        )
    return out


def iso_search(A: FiniteSemigroup, B: FiniteSemigroup):
    """Find an isomorphism A -> B, or None.

    Prunes by order and per-element invariants, then backtracks in index
    order with forced-product propagation; the returned map is the
    lexicographically smallest witness.  Returns the map as a tuple.
    """
    if A.order != B.order:
        return None
    n = A.order
    pa, pb = _element_profiles(A), _element_profiles(B)
    from collections import Counter

    if Counter(pa) != Counter(pb):
        return None
    candidates = [
        [y for y in range(n) if pb[y] == pa[x]] for x in range(n)
    ]
    ta, tb = A.table, B.table
    fwd: list = [None] * n
    used: list = [None] * n

    def propagate(x, y):
        added = []
        stack = [(x, y)]
        ok = True
        while stack:
            a, b = stack.pop()
            cur = fwd[a]
            if cur is not None:
                if cur != b:
                    ok = False
                    break
                continue
            if used[b] is not None:
                ok = False
                break
            fwd[a] = b
            used[b] = a
            added.append(a)
            for c in range(n):
                d = fwd[c]
                if d is None:
                    continue
                stack.append((ta[a][c], tb[b][d]))
                stack.append((ta[c][a], tb[d][b]))
        if not ok:
            for a in added:
                used[fwd[a]] = None
                fwd[a] = None
            return None
        return added

    def next_free():
        for x in range(n):
            if fwd[x] is None:
                return x
        return None

    def dfs():
        x = next_free()
        if x is None:
            return True
        for y in candidates[x]:
            if used[y] is not None:
                continue
            added = propagate(x, y)
            if added is None:
                continue
            if dfs():
                return True
            for a in added:
                used[fwd[a]] = None
                fwd[a] = None
        return False

    if dfs():
        return tuple(fwd)
    return None
