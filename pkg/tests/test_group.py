import pytest
from hypothesis import given, settings, strategies as st

from pertinency.algebra import SkewPolyRing, apply_automorphism
from pertinency.coeff import CyclotomicField
from pertinency.group import (
    GroupTooLarge,
    MonomialAutomorphism,
    cyclic_group,
    cyclic_permutation,
    group_closure,
    hdet,
    invariant_dimension_direct,
    molien_series,
    odd_cycle_oracle,
    pole_order,
    rational_trace,
    reflection_number,
    reflection_number_group,
    reflection_report,
    trace_on_degree,
    trace_on_degree_direct,
    trace_series,
)


def test_composition_matches_action():
    R = SkewPolyRing.minus_one(3)
    g = MonomialAutomorphism(R, [1, 2, 0], [1, -1, 1])
    h = MonomialAutomorphism(R, [0, 2, 1], [-1, 1, 1])
    x = R.gens()
    a = x[0] * x[1] * x[1] + x[2]
    assert apply_automorphism(g @ h, a) == apply_automorphism(g, apply_automorphism(h, a))
    assert (g @ g.inverse()).is_identity()


def test_cyclic_group_order():
    for n in range(2, 7):
        R = SkewPolyRing.minus_one(n)
        G = cyclic_group(R)
        assert G.order == n and G.is_abelian()
        assert G.elements[0].is_identity()


def test_closure_cap():
    R = SkewPolyRing.commutative(5)
    gens = [MonomialAutomorphism(R, [1, 0, 2, 3, 4]), MonomialAutomorphism(R, [1, 2, 3, 4, 0])]
    with pytest.raises(GroupTooLarge):
        group_closure(gens, cap=50)
    assert group_closure(gens).order == 120


def test_identity_trace_is_hilbert_series():
    R = SkewPolyRing.minus_one(3)
    f = rational_trace(MonomialAutomorphism.identity(R))
    assert str(f) == "1/(1 - 3*t + 3*t^2 - t^3)"
    assert pole_order(MonomialAutomorphism.identity(R)) == 3


def test_swap_on_skew_plane():
    R = SkewPolyRing.minus_one(2)
    g = cyclic_permutation(R)
    assert str(rational_trace(g)) == "1/(1 + t^2)"
    assert reflection_number(g) == 2
    assert hdet(g) == 1


def test_swap_on_commutative_plane():
    R = SkewPolyRing.commutative(2)
    g = cyclic_permutation(R)
    assert str(rational_trace(g)) == "1/(1 - t^2)"
    assert reflection_number(g) == 1
    assert hdet(g) == -1


def test_diagonal_reflection():
    R = SkewPolyRing.commutative(2)
    g = MonomialAutomorphism(R, [0, 1], [-1, 1])
    assert reflection_number(g) == 1
    assert hdet(g) == -1


@pytest.mark.parametrize("n", range(2, 9))
def test_pole_orders_match_odd_cycles(n):
    R = SkewPolyRing.minus_one(n)
    for g in cyclic_group(R).nontrivial():
        assert pole_order(g) == odd_cycle_oracle(g)


def test_odd_cycle_oracle_needs_permutation():
    R = SkewPolyRing.minus_one(2)
    with pytest.raises(ValueError):
        odd_cycle_oracle(MonomialAutomorphism(R, [1, 0], [-1, 1]))


def test_reflection_report_n3():
    R = SkewPolyRing.minus_one(3)
    rep = reflection_report(cyclic_group(R))
    assert rep["group_reflection_number"] == 2
    assert rep["quasi_bireflections"] == [1, 2]


def test_trivial_group_reflection_number():
    R = SkewPolyRing.minus_one(2)
    assert reflection_number_group(group_closure([], ring=R)) is None


def test_molien_matches_reynolds_rank():
    R = SkewPolyRing.minus_one(3)
    G = cyclic_group(R)
    series = molien_series(G, 8)
    assert [invariant_dimension_direct(G, d) for d in range(9)] == list(series)


def test_molien_over_cyclotomic_field():
    F = CyclotomicField(4)
    R = SkewPolyRing.commutative(2, F)
    g = MonomialAutomorphism(R, [0, 1], [F.gen(), F.gen() ** 3])  # diag(i, -i)
    G = group_closure([g])
    assert G.order == 4
    series = molien_series(G, 8)
    assert [invariant_dimension_direct(G, d) for d in range(9)] == list(series)
    # x^a y^b is invariant iff a = b mod 4
    assert list(series) == [1, 0, 1, 0, 3, 0, 3, 0, 5]


perms3 = st.permutations([0, 1, 2])
signs = st.lists(st.sampled_from([1, -1]), min_size=3, max_size=3)


@settings(max_examples=40, deadline=None)
@given(perm=perms3, scalars=signs, d=st.integers(0, 6))
def test_trace_formula_matches_direct(perm, scalars, d):
    R = SkewPolyRing.minus_one(3)
    g = MonomialAutomorphism(R, perm, scalars)
    assert trace_on_degree(g, d) == trace_on_degree_direct(g, d)


@settings(max_examples=30, deadline=None)
@given(perm=perms3, scalars=signs)
def test_hdet_is_a_sign(perm, scalars):
    R = SkewPolyRing.minus_one(3)
    g = MonomialAutomorphism(R, perm, scalars)
    assert hdet(g) in (1, -1)


@settings(max_examples=30, deadline=None)
@given(scalars=st.lists(st.sampled_from([1, -1, 2]), min_size=3, max_size=3))
def test_diagonal_fast_path_matches_enumeration(scalars):
    R = SkewPolyRing.minus_one(3)
    g = MonomialAutomorphism(R, [0, 1, 2], scalars)
    assert list(trace_series(g, 7)) == [trace_on_degree(g, d) for d in range(8)]
