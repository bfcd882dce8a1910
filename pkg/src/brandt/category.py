"""Morphism triples between Brandt extensions.

A triple (base, weights, index_map) packages a zero-preserving monoid
homomorphism h: S -> T, a weighting u of the source index set into the
maximal subgroup H(e) at e = (1_S)h, and an injective index map.  It induces
a homomorphism between the extensions by

    (a, s, b)  |->  (phi(a), u(a) * h(s) * u(b)^-1, phi(b))

with everything whose middle would vanish sent to the zero.  For targets
whose base monoid has central idempotents and no embedded rank-2 matrix
units, every non-trivial homomorphism between extensions arises this way and
can be recovered from its values on the unit blocks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

from .core import (
    ConformanceError,
    FiniteSemigroup,
    HypothesisUnmet,
    IllFormedTriple,
    MaximalSubgroup,
    Mismatch,
    NotHomomorphism,
    TrivialInput,
    maximal_subgroup,
    require_monoid_with_zero,
    subsemigroup,
)
from .construct import BrandtExtension, brandt_extension
from .homs import (
    DEFAULT_BUDGET,
    Homomorphism,
    check_homomorphism,
    compose_homs,
    enumerate_homs,
)
from .search import matrix_unit_exclusion


@dataclass(frozen=True)
class MorphismTriple:
    """Validated (base, weights, index_map) data.

    A trivial base (the constant-zero map) is represented uniformly: its
    anchor idempotent is the target zero and the weights all equal it.
    """

    base: Homomorphism
    weights: tuple[int, ...]
    index_map: tuple[int, ...]
    index_codomain: int

    @property
    def idempotent(self) -> int:
        return self.base.mapping[self.base.source.identity]

    @property
    def is_trivial(self) -> bool:
        return self.base.is_trivial

    @property
    def lam(self) -> int:
        return len(self.weights)

    def __repr__(self) -> str:
        return (
            f"MorphismTriple(h={list(self.base.mapping)}, u={list(self.weights)}, "
            f"phi={list(self.index_map)})"
        )


def make_triple(
    base: Homomorphism,
    weights,
    index_map,
    index_codomain: int,
) -> MorphismTriple:
    """Validate triple data; raises IllFormedTriple on any violation."""
    S, T = base.source, base.target
    require_monoid_with_zero(S, "triple source")
    require_monoid_with_zero(T, "triple target")
    if base.preserves_zero is not True:
        raise IllFormedTriple("base map does not send zero to zero")
    weights = tuple(weights)
    index_map = tuple(index_map)
    if not weights or len(weights) != len(index_map):
        raise IllFormedTriple("weights and index map must cover the same index set")
    if len(set(index_map)) != len(index_map):
        raise IllFormedTriple("index map is not injective")
    if any(not (0 <= v < index_codomain) for v in index_map):
        raise IllFormedTriple("index map leaves the target index set")
    e = base.mapping[S.identity]
    if e == T.zero:
        if not base.is_trivial:
            raise IllFormedTriple("identity collapses to zero but the map is not constant")
        if any(w != T.zero for w in weights):
            raise IllFormedTriple("weights of a trivial base must equal the zero")
    else:
        members = set(maximal_subgroup(T, e).members)
        bad = [w for w in weights if w not in members]
        if bad:
            raise IllFormedTriple(
                f"weight {T.labels[bad[0]]!r} outside the maximal subgroup at {T.labels[e]!r}"
            )
    return MorphismTriple(
        base=base,
        weights=weights,
        index_map=index_map,
        index_codomain=index_codomain,
    )


def identity_triple(S: FiniteSemigroup, lam: int) -> MorphismTriple:
    """The neutral morphism: identity base, identity weights and index map."""
    require_monoid_with_zero(S)
    base = Homomorphism(source=S, target=S, mapping=tuple(range(S.order)))
    return make_triple(
        base, (S.identity,) * lam, tuple(range(lam)), lam
    )


def _subgroup_inverses(T: FiniteSemigroup, e: int) -> dict:
    H = maximal_subgroup(T, e)
    return {x: H.inverse(T, x) for x in H.members}


def induced_hom(
    triple: MorphismTriple,
    source_ext: Optional[BrandtExtension] = None,
    target_ext: Optional[BrandtExtension] = None,
) -> Homomorphism:
    """The extension homomorphism induced by a triple (the functor's action).

    A trivial base induces the constant-to-zero map.  The result is verified
    against the full product law before being returned; a verification
    failure cannot happen for well-formed input and aborts loudly.
    """
    S, T = triple.base.source, triple.base.target
    if source_ext is None:
        source_ext = brandt_extension(S, triple.lam)
    if target_ext is None:
        target_ext = brandt_extension(T, triple.index_codomain)
    if source_ext.base != S or source_ext.lam != triple.lam:
        raise IllFormedTriple("source extension does not match the triple")
    if target_ext.base != T or target_ext.lam != triple.index_codomain:
        raise IllFormedTriple("target extension does not match the triple")
    if source_ext.lam > target_ext.lam:
        raise IllFormedTriple("source index set larger than the target one")

    n = source_ext.carrier.order
    mapping = [0] * n
    if not triple.is_trivial:
        h = triple.base.mapping
        tz = T.zero
        tt = T.table
        inv = _subgroup_inverses(T, triple.idempotent)
        u = triple.weights
        phi = triple.index_map
        for idx in range(1, n):
            a, s, b = source_ext.decode(idx)
            hs = h[s]
            if hs == tz:
                continue
            middle = tt[tt[u[a]][hs]][inv[u[b]]]
            if middle == tz:
                raise ConformanceError("induced middle vanished on a nonzero image")
            mapping[idx] = target_ext.encode(phi[a], middle, phi[b])
    try:
        return check_homomorphism(mapping, source_ext.carrier, target_ext.carrier)
    except NotHomomorphism as exc:  # pragma: no cover - guarded by construction
        raise ConformanceError(f"induced map failed verification: {exc}") from exc


@dataclass(frozen=True)
class NotClassifiable:
    """Returned when a homomorphism does not fit the triple parametrization."""

    reason: str


def recover_triple(
    sigma: Homomorphism,
    source_ext: BrandtExtension,
    target_ext: BrandtExtension,
) -> Union[MorphismTriple, NotClassifiable]:
    """Recover triple data from a non-trivial extension homomorphism.

    Anchors at source index 0, reads the base map off the (0, s, 0) block and
    the weights off the (b, 1_S, 0) column, then demands that the rebuilt
    homomorphism reproduce ``sigma`` exactly.
    """
    if sigma.is_trivial:
        raise TrivialInput("cannot classify a constant map")
    if sigma.source != source_ext.carrier or sigma.target != target_ext.carrier:
        raise Mismatch("homomorphism does not connect the given extensions")
    if source_ext.lam > target_ext.lam:
        raise Mismatch("source index set larger than the target one")
    S, T = source_ext.base, target_ext.base
    require_monoid_with_zero(S, "source base")
    require_monoid_with_zero(T, "target base")

    lam1 = source_ext.lam
    diag = sigma.mapping[source_ext.unit_index(0, 0)]
    if diag == 0:
        return NotClassifiable("anchor unit maps to zero")
    a_prime, e, b_prime = target_ext.decode(diag)
    if a_prime != b_prime:
        return NotClassifiable("anchor unit image is off the diagonal")
    if T.table[e][e] != e:
        return NotClassifiable("anchor image middle is not idempotent")
    members = set(maximal_subgroup(T, e).members)

    phi = []
    u = []
    for b in range(lam1):
        img = sigma.mapping[source_ext.unit_index(b, 0)]
        if img == 0:
            return NotClassifiable(f"unit ({b},1,0) maps to zero")
        x, t, y = target_ext.decode(img)
        if y != a_prime:
            return NotClassifiable(f"unit ({b},1,0) image leaves the anchor column")
        if t not in members:
            return NotClassifiable(
                f"weight {T.labels[t]!r} outside the maximal subgroup at {T.labels[e]!r}"
            )
        phi.append(x)
        u.append(t)
    if len(set(phi)) != lam1:
        return NotClassifiable("recovered index map is not injective")

    h = [T.zero] * S.order
    for s in range(S.order):
        if s == S.zero:
            continue
        img = sigma.mapping[source_ext.encode(0, s, 0)]
        if img == 0:
            continue
        x, t, y = target_ext.decode(img)
        if x != a_prime or y != a_prime:
            return NotClassifiable("diagonal block image leaks outside the anchor block")
        h[s] = t
    try:
        base = check_homomorphism(h, S, T)
    except NotHomomorphism as exc:
        return NotClassifiable(f"recovered base map fails the product law: {exc}")
    try:
        triple = make_triple(base, tuple(u), tuple(phi), target_ext.lam)
    except IllFormedTriple as exc:
        return NotClassifiable(str(exc))
    rebuilt = induced_hom(triple, source_ext, target_ext)
    if rebuilt.mapping != sigma.mapping:
        first = next(
            i for i in range(len(sigma.mapping)) if rebuilt.mapping[i] != sigma.mapping[i]
        )
        return NotClassifiable(f"reconstruction differs at carrier index {first}")
    return triple


def compose_triples(t1: MorphismTriple, t2: MorphismTriple) -> MorphismTriple:
    """Composite morphism: bases compose, weights combine as
    u''(a) = u'(phi(a)) * h'(u(a)), index maps compose."""
    if t1.base.target != t2.base.source:
        raise Mismatch("middle monoid differs")
    if t1.index_codomain != t2.lam:
        raise Mismatch("middle index set differs")
    base = compose_homs(t1.base, t2.base)
    T2 = t2.base.target
    tt = T2.table
    h2 = t2.base.mapping
    weights = tuple(
        tt[t2.weights[t1.index_map[a]]][h2[t1.weights[a]]]
        for a in range(t1.lam)
    )
    index_map = tuple(t2.index_map[t1.index_map[a]] for a in range(t1.lam))
    return make_triple(base, weights, index_map, t2.index_codomain)


def enumerate_triples(
    S: FiniteSemigroup,
    T: FiniteSemigroup,
    lam1: int,
    lam2: int,
    nontrivial_only: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> list[MorphismTriple]:
    """All well-formed triples for the given bases and index sizes.

    Weights range over the full maximal subgroup at the realized idempotent,
    index maps over all injections; distinct triples may induce the same
    extension homomorphism.
    """
    require_monoid_with_zero(S)
    require_monoid_with_zero(T)
    if lam1 > lam2:
        raise Mismatch("source index set larger than the target one")
    injections = list(itertools.permutations(range(lam2), lam1))
    out = []
    for h in enumerate_homs(S, T, budget=budget):
        if h.mapping[S.zero] != T.zero:
            continue
        if h.is_trivial:
            if nontrivial_only:
                continue
            weight_choices = [(T.zero,) * lam1]
        else:
            e = h.mapping[S.identity]
            members = maximal_subgroup(T, e).members
            weight_choices = itertools.product(members, repeat=lam1)
        for w in weight_choices:
            for phi in injections:
                out.append(make_triple(h, tuple(w), phi, lam2))
    return out


def compose_and_check(
    s1: Homomorphism,
    s2: Homomorphism,
    source_ext: BrandtExtension,
) -> tuple[Homomorphism, bool, bool]:
    """Compose two non-trivial extension homomorphisms and test the
    kernel-avoidance predicate against the composite's non-triviality.

    The predicate: some unit-block image under s1 escapes the set of elements
    s2 kills.  It must coincide with the composite being non-trivial; a
    disagreement aborts loudly.
    """
    if s1.target != s2.source:
        raise Mismatch("middle semigroups differ")
    if s1.is_trivial or s2.is_trivial:
        raise TrivialInput("composition test expects non-trivial maps")
    if s1.source != source_ext.carrier:
        raise Mismatch("source extension does not match s1")
    if not source_ext.base_has_identity:
        raise Mismatch("source base must be a monoid")
    composite = compose_homs(s1, s2)
    nontrivial = not composite.is_trivial
    zero3 = s2.target.zero
    lam = source_ext.lam
    predicate = any(
        s2.mapping[s1.mapping[source_ext.unit_index(a, b)]] != zero3
        for a in range(lam)
        for b in range(lam)
    )
    if predicate != nontrivial:
        raise ConformanceError(
            "kernel-avoidance predicate disagrees with the composite's triviality"
        )
    return composite, nontrivial, predicate


def image_decomposition(
    sigma: Homomorphism,
    source_ext: BrandtExtension,
) -> tuple[FiniteSemigroup, Homomorphism]:
    """Exhibit the image of a non-trivial extension homomorphism as an
    extension itself.

    Returns the diagonal-block image monoid T0 and a verified isomorphism
    from the extension of T0 onto the image subsemigroup.  The witness is
    assembled directly from the coordinate transport maps of the image, so a
    failure here contradicts the guaranteed image structure and aborts loudly.
    """
    if sigma.is_trivial:
        raise TrivialInput("a constant map has no extension structure")
    if not isinstance(sigma.target, FiniteSemigroup):
        raise Mismatch("decomposition needs a table-backed target")
    if sigma.source != source_ext.carrier:
        raise Mismatch("homomorphism does not start at the given extension")
    if not source_ext.base_has_identity:
        raise Mismatch("source base must be a monoid")
    S = source_ext.base
    lam = source_ext.lam
    big = sigma.target

    z = sigma.mapping[0]
    diag_images = {}
    for s in source_ext.nonzero_base:
        g = sigma.mapping[source_ext.encode(0, s, 0)]
        if g != z and g not in diag_images:
            diag_images[g] = s
    t0_globals = sorted(diag_images) + [z]
    t0_globals.sort()
    T0 = subsemigroup(big, t0_globals)
    local0 = {g: i for i, g in enumerate(t0_globals)}
    if T0.zero != local0[z]:
        raise ConformanceError("image zero is not the zero of the diagonal block")
    if T0.identity is None:
        raise ConformanceError("diagonal block image is not a monoid")

    ext0 = brandt_extension(T0, lam)
    image_globals = sorted(set(sigma.mapping))
    if ext0.carrier.order != len(image_globals):
        raise ConformanceError(
            f"image order {len(image_globals)} differs from the rebuilt "
            f"extension order {ext0.carrier.order}"
        )
    image_sg = subsemigroup(big, image_globals)
    loc = {g: i for i, g in enumerate(image_globals)}

    mapping = [0] * ext0.carrier.order
    mapping[0] = loc[z]
    for idx in range(1, ext0.carrier.order):
        a, t_local, b = ext0.decode(idx)
        rep = diag_images[t0_globals[t_local]]
        mapping[idx] = loc[sigma.mapping[source_ext.encode(a, rep, b)]]
    try:
        witness = check_homomorphism(mapping, ext0.carrier, image_sg)
    except NotHomomorphism as exc:
        raise ConformanceError(f"decomposition witness failed: {exc}") from exc
    if not (witness.is_injective and witness.is_surjective):
        raise ConformanceError("decomposition witness is not bijective")
    return T0, witness


@dataclass(frozen=True)
class BlockReport:
    """Outcome of the zero-image and block-separation checks."""

    zero_preserved: bool
    unit_blocks: tuple
    blocks_disjoint: bool
    confined: bool
    uniform_zero_pattern: bool


def check_block_separation(
    sigma: Homomorphism,
    source_ext: BrandtExtension,
    target_ext: BrandtExtension,
) -> BlockReport:
    """Assert the guaranteed image geometry of a non-trivial homomorphism
    into an extension whose base excludes the relevant matrix units.

    Checks: the zero maps to the zero; distinct unit images occupy pairwise
    distinct coordinate blocks; each (a, b) block's images stay inside one
    target block; and an element's vanishing pattern is uniform across index
    pairs.  Raises HypothesisUnmet when the target base fails the exclusion
    hypotheses and ConformanceError when a guaranteed assertion fails.
    """
    if sigma.is_trivial:
        raise TrivialInput("block checks expect a non-trivial map")
    if sigma.source != source_ext.carrier or sigma.target != target_ext.carrier:
        raise Mismatch("homomorphism does not connect the given extensions")
    if not source_ext.base_has_identity:
        raise Mismatch("source base must be a monoid")
    lam1 = source_ext.lam
    if lam1 < 2:
        raise HypothesisUnmet("matrix-unit exclusion is defined for rank >= 2 only")
    _, lam_free = matrix_unit_exclusion(target_ext.base, lam1)
    if not lam_free:
        raise HypothesisUnmet(
            "target base contains the excluded matrix units; nothing is guaranteed"
        )

    if sigma.mapping[0] != 0:
        raise ConformanceError("zero image is not the zero")

    unit_blocks = {}
    for a in range(lam1):
        for b in range(lam1):
            img = sigma.mapping[source_ext.unit_index(a, b)]
            if img == 0:
                raise ConformanceError(f"unit ({a},1,{b}) maps to zero")
            mu, _, nu = target_ext.decode(img)
            unit_blocks[(a, b)] = (mu, nu)
    if len(set(unit_blocks.values())) != lam1 * lam1:
        raise ConformanceError("distinct units share a coordinate block")

    for (a, b), block in unit_blocks.items():
        for s in source_ext.nonzero_base:
            img = sigma.mapping[source_ext.encode(a, s, b)]
            if img == 0:
                continue
            mu, _, nu = target_ext.decode(img)
            if (mu, nu) != block:
                raise ConformanceError(
                    f"image of ({a},{_base_label(source_ext, s)},{b}) leaves its block"
                )

    for s in source_ext.nonzero_base:
        vanish = {
            sigma.mapping[source_ext.encode(a, s, b)] == 0
            for a in range(lam1)
            for b in range(lam1)
        }
        if len(vanish) != 1:
            raise ConformanceError(
                f"vanishing pattern of {_base_label(source_ext, s)} is not uniform"
            )

    return BlockReport(
        zero_preserved=True,
        unit_blocks=tuple(sorted(unit_blocks.items())),
        blocks_disjoint=True,
        confined=True,
        uniform_zero_pattern=True,
    )


def _base_label(ext: BrandtExtension, s: int) -> str:
    return ext.base.labels[s]
