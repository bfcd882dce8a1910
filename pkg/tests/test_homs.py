import itertools

import pytest

from brandt import (
    BudgetExceeded,
    NotHomomorphism,
    build_semigroup,
    check_homomorphism,
    compose_homs,
    enumerate_homs,
    hom_invariants,
)
from brandt.construct import (
    bicyclic_with_zero,
    brandt_extension,
    function_brandt_extension,
    matrix_units,
)
from brandt.corpus import cyclic_group_with_zero, example_e, two_element
from brandt.fixtures import ex2_5_data, EX2_12_ENTRIES
from brandt.construct import matrix_units_extension


def brute_force_homs(S, T):
    """Oracle: test every map from S to T against the product law."""
    out = set()
    n = S.order
    for mapping in itertools.product(range(T.order), repeat=n):
        if all(
            T.table[mapping[i]][mapping[j]] == mapping[S.table[i][j]]
            for i in range(n)
            for j in range(n)
        ):
            out.add(mapping)
    return out


def test_embedded_17_entry_map_is_a_homomorphism():
    src, dst, mapping = ex2_5_data()
    hom = check_homomorphism(mapping, src.carrier, dst.carrier)
    assert not hom.is_trivial and hom.preserves_zero


def test_constant_to_zero_is_trivial():
    b2 = matrix_units(2)
    hom = check_homomorphism([0] * 5, b2, b2)
    assert hom.is_trivial and hom.preserves_zero


def test_map_into_function_backed_codomain():
    src = matrix_units_extension(2)
    dst = function_brandt_extension(bicyclic_with_zero(), 2)
    mapping = ["0"] * 5
    for (i, j), token in EX2_12_ENTRIES.items():
        mapping[src.encode(i - 1, 0, j - 1)] = token
    hom = check_homomorphism(mapping, src.carrier, dst)
    assert not hom.is_trivial
    assert hom.preserves_zero
    assert not hom.is_surjective


def test_not_homomorphism_reports_pair():
    b2 = matrix_units(2)
    mapping = list(range(5))
    mapping[1] = 2
    with pytest.raises(NotHomomorphism) as exc:
        check_homomorphism(mapping, b2, b2)
    i, j = exc.value.witness
    assert 0 <= i < 5 and 0 <= j < 5


def test_enumerate_matches_brute_force_oracle():
    cases = [
        (matrix_units(2), matrix_units(2)),
        (example_e(), example_e()),
        (two_element(), cyclic_group_with_zero(2)),
        (cyclic_group_with_zero(2), example_e()),
    ]
    for S, T in cases:
        expected = brute_force_homs(S, T)
        got = {h.mapping for h in enumerate_homs(S, T)}
        assert got == expected


def test_matrix_unit_endomorphisms():
    b2 = matrix_units(2)
    homs = enumerate_homs(b2, b2, nontrivial_only=True)
    assert len(homs) == 2
    maps = [h.mapping for h in homs]
    assert tuple(range(5)) in maps  # identity
    # the other one permutes both unit coordinates by the index swap
    swapped = tuple(
        0 if i == 0 else b2.index_of(relabel(b2.labels[i])) for i in range(5)
    )
    assert swapped in maps
    # coordinate transposition alone is an antiautomorphism, not a witness
    transpose = (0, 1, 3, 2, 4)
    assert transpose not in maps


def relabel(label):
    i, j = label.strip("()").split(",")
    flip = {"1": "2", "2": "1"}
    return f"({flip[i]},{flip[j]})"


def test_trivial_semigroup_has_one_endomorphism():
    one = build_semigroup([[0]])
    homs = enumerate_homs(one, one)
    assert len(homs) == 1 and homs[0].is_trivial


def test_collapsing_endomorphism_is_found():
    E = example_e()
    ext = brandt_extension(E, 2)
    homs = enumerate_homs(ext.carrier, ext.carrier, nontrivial_only=True)
    expected = [0] * 9
    for a in range(2):
        for b in range(2):
            expected[ext.encode(a, 0, b)] = ext.encode(a, 1, b)
    assert tuple(expected) in {h.mapping for h in homs}


def test_output_is_sorted_and_unique():
    E = example_e()
    homs = enumerate_homs(E, E)
    maps = [h.mapping for h in homs]
    assert maps == sorted(maps)
    assert len(set(maps)) == len(maps)


def test_budget_exceeded():
    E = example_e()
    ext = brandt_extension(E, 2)
    with pytest.raises(BudgetExceeded):
        enumerate_homs(ext.carrier, ext.carrier, budget=3)


def test_hom_invariants_two_element():
    S = two_element()
    inv = hom_invariants(S, S)
    assert len(inv.hom0) == 2  # identity and constant-to-zero
    assert set(inv.e1) == {0, 1}
    assert set(inv.h1[S.identity].members) == {S.identity}


def test_hom_invariants_realize_middle_idempotent():
    E = example_e()
    inv = hom_invariants(E, E)
    assert 1 in inv.e1  # the map a->b, b->c, c->c realizes b
    assert (1, 2, 2) in {h.mapping for h in inv.hom0}


def test_hom_invariants_group_target():
    S = example_e()
    G = cyclic_group_with_zero(2)
    inv = hom_invariants(S, G)
    for h in inv.hom0:
        if not h.is_trivial:
            assert h.mapping[S.identity] == G.identity
    assert set(inv.e1) <= {G.identity, G.zero}


def test_compose_homs():
    E = example_e()
    f = check_homomorphism((1, 2, 2), E, E)
    g = compose_homs(f, f)
    assert g.mapping == (2, 2, 2)
    assert g.is_trivial
