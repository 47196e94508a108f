from itertools import product

import pytest
from hypothesis import given, strategies as st

from oracles import (
    brute_force_Pn,
    fermat_form,
    h0_dim_closed_form,
    hn_dim_closed_form,
    hypersurface_cohomology_linear_algebra,
)
from sodcert.chars import CharMultiset, Character
from sodcert.equivariant_cohomology import (
    HypersurfaceSpec,
    IndeterminateRank,
    NegativeMultiplicity,
    WeightedProjSpace,
    cohomology_Pn,
    cohomology_hypersurface,
    cohomology_product,
    multiset_difference,
)


def _space(*weights: int) -> WeightedProjSpace:
    return WeightedProjSpace(tuple(Character(w) for w in weights))


def _graded(graded):
    return {l: dict(V.items()) for l, V in graded.items() if V.items()}


def test_space_validation():
    with pytest.raises(ValueError):
        WeightedProjSpace((Character(0),))


def test_hypersurface_validation():
    P = _space(0, 0, 1)
    with pytest.raises(ValueError):
        HypersurfaceSpec(P, 0, Character(0))


def test_h0_of_p2_weighted():
    # Sections of O(2) on P^2 with weights (0,0,1): six monomials split 3/2/1.
    out = cohomology_Pn(_space(0, 0, 1), 2)
    assert _graded(out) == {0: {0: 3, 1: 2, 2: 1}}


def test_twist_zero_gives_constants_only():
    out = cohomology_Pn(_space(0, 1, 2), 0)
    assert _graded(out) == {0: {0: 1}}


def test_intermediate_twists_vanish():
    P = _space(0, 1)
    assert cohomology_Pn(P, -1) == {}


def test_top_cohomology_dual_characters():
    # H^1(P^1, O(-3)), weights (0,1): classes 1/(x^2 y) and 1/(x y^2).
    out = cohomology_Pn(_space(0, 1), -3)
    assert _graded(out) == {1: {1: 1, 2: 1}}


@given(
    st.integers(1, 3).flatmap(
        lambda n: st.tuples(
            st.lists(st.integers(0, 2), min_size=n + 1, max_size=n + 1),
            st.integers(-8, 8),
        )
    )
)
def test_total_dims_match_closed_forms(case):
    weights, d = case
    n = len(weights) - 1
    out = cohomology_Pn(_space(*weights), d)
    h0 = out.get(0, CharMultiset({})).total_dim()
    hn = out.get(n, CharMultiset({})).total_dim()
    assert h0 == h0_dim_closed_form(n, d)
    assert hn == hn_dim_closed_form(n, d)


def test_brute_force_oracle_spot():
    weights, d = (1, 2, 2, 0), -6
    got = _graded(cohomology_Pn(_space(*weights), d))
    assert got == brute_force_Pn(weights, d)


def test_multiset_difference_raises_when_not_contained():
    big = CharMultiset({0: 1})
    small = CharMultiset({0: 2})
    with pytest.raises(NegativeMultiplicity):
        multiset_difference(big, small)


def test_hypersurface_needs_surface_or_bigger_ambient():
    P1 = _space(0, 1)
    H = HypersurfaceSpec(P1, 3, Character(0))
    with pytest.raises(IndeterminateRank):
        cohomology_hypersurface(H, 0)


def test_plane_cubic_structure_sheaf():
    # Frozen from the linear-algebra oracle: an invariant cubic curve in P^2
    # with weights (0,0,1) has H^0 = chi_0 and H^1 = chi_2.
    H = HypersurfaceSpec(_space(0, 0, 1), 3, Character(0))
    assert _graded(cohomology_hypersurface(H, 0)) == {0: {0: 1}, 1: {2: 1}}


def test_plane_cubic_against_linear_algebra_oracle():
    for weights in ((0, 0, 1), (0, 1, 1)):
        H = HypersurfaceSpec(_space(*weights), 3, Character(0))
        for d in range(-4, 5):
            got = _graded(cohomology_hypersurface(H, d))
            want = hypersurface_cohomology_linear_algebra(weights, fermat_form(3), 3, d)
            assert got == want, (weights, d)


def test_fourfold_against_linear_algebra_oracle():
    weights = (0, 0, 0, 1, 1, 1)
    H = HypersurfaceSpec(_space(*weights), 3, Character(0))
    for d in range(-3, 4):
        got = _graded(cohomology_hypersurface(H, d))
        want = hypersurface_cohomology_linear_algebra(weights, fermat_form(6), 3, d)
        assert got == want, d


def test_fourfold_middle_cohomology_of_twists_vanishes():
    H = HypersurfaceSpec(_space(0, 0, 0, 1, 1, 1), 3, Character(0))
    for d in range(-2, 3):
        graded = cohomology_hypersurface(H, d)
        assert all(l in (0, 3) for l in _graded(graded)), d


def test_product_cohomology_profiles():
    # External products of O(k1) and O(k2) on the plane product.
    assert cohomology_product(0, 0) == {0: 1}
    assert cohomology_product(1, 1) == {0: 9}
    assert cohomology_product(-1, 0) == {}
    assert cohomology_product(-3, 0) == {2: 1}
    assert cohomology_product(-3, -3) == {4: 1}
    assert cohomology_product(2, -3) == {2: 6}


def test_product_profile_matches_factorwise_enumeration():
    for k1, k2 in product(range(-5, 5), repeat=2):
        want = {}
        f1 = brute_force_Pn((0, 0, 0), k1)
        f2 = brute_force_Pn((0, 0, 0), k2)
        for l1, c1 in f1.items():
            for l2, c2 in f2.items():
                dim = sum(c1.values()) * sum(c2.values())
                if dim:
                    want[l1 + l2] = want.get(l1 + l2, 0) + dim
        assert cohomology_product(k1, k2) == want, (k1, k2)
