"""Linear forms, operator closures, documented tables, membership, and boxes."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rank2crystal import (
    CartanRank2,
    FamilyName,
    LambdaVector,
    LinearForm,
    Weight,
    a_prime_seq,
    a_seq,
    beta_bar,
    bfs_component,
    check_pn_assumptions,
    closure,
    enumerate_box,
    f_tilde,
    first_violation,
    half_closure,
    highest_vector,
    is_member,
    k_plus,
    phi_chain_closed,
    phi_chain_iterated,
    regime_generators,
    regime_table,
    s_bar,
    sigma,
    undocumented_forms,
    xi_closure,
    xi_displayed,
    xi_family,
    xi_generators,
)
from rank2crystal.errors import (
    EnumerationBudgetExceeded,
    IndexZeroError,
    RegimeMismatch,
    WindowViolation,
)

C22 = CartanRank2(2, 2)
C23 = CartanRank2(2, 3)


def form(coeffs, const=(0, 0)):
    return LinearForm.make(coeffs, const)


def test_linear_form_canonicalization():
    f = form({2: 1, 1: 0, -1: 3}, (0, 1))
    assert f.coeffs == ((-1, 3), (2, 1))
    assert f.coefficient(1) == 0 and f.coefficient(-1) == 3
    assert f.constant_value(Weight(5, -2)) == -2
    with pytest.raises(IndexZeroError):
        form({0: 1})


def test_linear_form_json_round_trip():
    f = form({-1: 3, 4: -2}, (1, -1))
    assert LinearForm.from_json(f.to_json()) == f


def test_beta_bar_examples():
    assert beta_bar(C22, 1) == form({1: 1, 2: -2, 3: 1})
    assert beta_bar(C22, -1) == form({-1: 1, 1: -2, 2: 1}, (0, -1))
    assert beta_bar(C22, -3) == form({-3: 1, -2: -2, -1: 1})
    assert beta_bar(C23, -2) == form({-2: 1, -1: -2, 1: 1}, (-1, 0))
    with pytest.raises(IndexZeroError):
        beta_bar(C22, 0)


@given(st.sampled_from([C22, C23, CartanRank2(1, 4)]),
       st.integers(-7, 7).filter(lambda k: k != 0),
       st.tuples(st.integers(-5, 6), st.integers(-6, 5)),
       st.dictionaries(st.integers(-8, 8).filter(lambda k: k != 0),
                       st.integers(-4, 4), max_size=6))
@settings(max_examples=200, deadline=None)
def test_beta_bar_is_sigma_difference(cartan, k, lam, entries):
    x = LambdaVector.make(cartan, Weight(*lam), entries)
    assert beta_bar(cartan, k).evaluate(x) == sigma(x, k) - sigma(x, k_plus(k))


def test_s_bar_chain_examples():
    f1 = s_bar(C22, 1, form({1: 1}))
    assert f1 == form({2: 2, 3: -1})  # c1*x_2 - x_3
    f2 = s_bar(C22, 2, f1)
    assert f2 == form({3: 3, 4: -2})  # a_3*x_3 - a_2*x_4
    unchanged = form({5: 1})
    assert s_bar(C22, 3, unchanged) == unchanged


forms_strategy = st.builds(
    lambda coeffs, p, q: LinearForm.make(coeffs, (p, q)),
    st.dictionaries(st.integers(-6, 6).filter(lambda k: k != 0),
                    st.integers(-5, 5), max_size=5),
    st.integers(-3, 3), st.integers(-3, 3))


@given(st.sampled_from([C22, C23]), st.integers(-6, 6).filter(lambda k: k != 0),
       forms_strategy)
@settings(max_examples=250, deadline=None)
def test_s_bar_idempotent(cartan, k, f):
    once = s_bar(cartan, k, f)
    assert s_bar(cartan, k, once) == once


def test_xi_closure_contains_displayed_chains():
    family = xi_closure(C22, window=8, max_depth=10)
    have = family.as_set()
    for f in xi_displayed(C22, 5).forms:
        assert f in have
    # complementary-parity chain from the generator x_2
    assert form({3: 2, 4: -1}) in have


def test_xi_closure_depth_zero_is_generators():
    family = xi_closure(C23, window=4, max_depth=0)
    assert set(family.forms) == set(xi_generators(C23, 4))


def test_closure_is_stable_under_the_operator():
    family = xi_closure(C23, window=6, max_depth=30)
    have = family.as_set()
    for f in family.forms:
        for k in range(-6, 7):
            if k == 0:
                continue
            image = s_bar(C23, k, f)
            if image.support() and max(abs(s) for s in image.support()) <= 6:
                assert image in have


def test_xi_family_examples():
    # HighestOdd(1) instance: generator and first table row coincide.
    generators, table = xi_family(C22, Weight(2, -1), 1, window=8, j_max=2, i_max=4)
    first = form({-1: 1}, (0, -1))  # x_{-1} - lambda_2
    assert first in generators.as_set()
    assert first in table.as_set()
    assert generators.name is FamilyName.XI1 and generators.k == 1

    # HighestEven(1) generator set: two shifted coordinates and the plains.
    generators, _ = xi_family(C22, Weight(3, -2), 2, window=5)
    expected = {
        form({-1: 1}, (0, -1)),
        form({-2: 1}, (-1, -2)),
        form({-3: 1}),
        form({-4: 1}),
        form({-5: 1}),
    }
    assert generators.as_set() == expected

    with pytest.raises(RegimeMismatch):
        xi_family(C22, Weight(3, -2), 1)
    with pytest.raises(RegimeMismatch):
        xi_family(C22, Weight(3, -2), 2, k=2)


TABLE_INSTANCES = (
    (C22, Weight(7, -5), 1),    # HighestOdd(2)
    (C22, Weight(3, -2), 2),    # HighestEven(1)
    (C22, Weight(7, -10), 3),   # LowestOdd(2)
    (C22, Weight(3, -5), 4),    # LowestEven(1)
    (C23, Weight(13, -8), 1),   # hyperbolic HighestOdd(2)
    (C23, Weight(2, -5), 4),    # hyperbolic LowestEven(1)
)


@pytest.mark.parametrize("cartan,weight,which", TABLE_INSTANCES)
def test_table_rows_inside_generator_closure(cartan, weight, which):
    generators, table = xi_family(cartan, weight, which, j_max=4, i_max=8, window=14)
    grown = closure(cartan, generators.forms, window=14, max_depth=12)
    have = grown.as_set()
    missing = [f for f in table.forms if f not in have]
    assert not missing


@pytest.mark.parametrize("cartan,weight,which", TABLE_INSTANCES)
def test_regime_constants_nonnegative(cartan, weight, which):
    generators, table = xi_family(cartan, weight, which, j_max=4, i_max=8, window=14)
    grown = closure(cartan, generators.forms, window=14, max_depth=12)
    for family in (table, grown):
        assert all(f.constant_value(weight) >= 0 for f in family.forms)


def test_phi_chain_examples():
    assert phi_chain_closed(C22, 1, 3) == form({-2: 2, -1: -1})
    assert phi_chain_closed(C22, 2, 3) == form({-1: 3, 1: -2}, (2, 0))
    assert phi_chain_closed(C22, 3, 3) == form({1: 4, 2: -3}, (2, 3))
    a = lambda n: a_seq(C23, n)
    ap = lambda n: a_prime_seq(C23, n)
    assert phi_chain_closed(C23, 3, 3) == form({1: ap(4), 2: -ap(3)}, (ap(2), ap(3)))
    assert phi_chain_closed(C23, 2, 2) == form({1: a(3), 2: -a(2)}, (a(1), a(2)))


@pytest.mark.parametrize("cartan", [C22, C23, CartanRank2(1, 4), CartanRank2(3, 3)])
def test_phi_chain_matches_iterated_operator(cartan):
    for k in range(1, 10):
        for l in range(0, 13):
            assert phi_chain_closed(cartan, l, k) == phi_chain_iterated(cartan, l, k)


def test_membership_examples():
    weight = Weight(3, -2)
    xi = xi_closure(C22, window=10, max_depth=10)
    generators, _ = xi_family(C22, weight, 2, window=10)
    reg = closure(C22, generators.forms, window=10, max_depth=10,
                  name=generators.name, k=1)

    zero = LambdaVector.make(C22, weight)
    assert is_member(zero, xi, reg)

    h = highest_vector(C22, weight)
    assert is_member(h, xi, reg)
    for g in generators.forms:
        assert g.evaluate(h) == 0  # extremal vector saturates every generator

    bad = LambdaVector.make(C22, weight, {1: -1})
    assert not is_member(bad, xi)
    assert first_violation(bad, xi) == form({1: 1})

    wide = LambdaVector.make(C22, weight, {11: 1})
    with pytest.raises(WindowViolation):
        is_member(wide, xi)


def test_enumerate_box_height_slices():
    weight = Weight(3, -2)
    xi = xi_closure(C22, window=8, max_depth=10)
    generators, _ = xi_family(C22, weight, 2, window=8)
    reg = closure(C22, generators.forms, window=8, max_depth=10)
    h = highest_vector(C22, weight)

    only_h = enumerate_box(C22, weight, [xi, reg], 8, 0, h, +1)
    assert only_h == (h,)

    children = {f_tilde(h, i) for i in (1, 2)} - {None}
    one_up = enumerate_box(C22, weight, [xi, reg], 8, 1, h, +1)
    assert set(one_up) == {h} | children

    dom = Weight(2, 1)
    zero = LambdaVector.make(C22, dom)
    assert enumerate_box(C22, dom, [xi_closure(C22, 0, 0)], 0, 0, zero, +1) == (zero,)


def test_members_stay_members_under_lowering():
    # The cut-out set carries the crystal structure: operator images of
    # members remain members.
    weight = Weight(3, -2)
    xi = xi_closure(C22, window=10, max_depth=10)
    generators, _ = xi_family(C22, weight, 2, window=10)
    reg = closure(C22, generators.forms, window=10, max_depth=10)
    graph = bfs_component(highest_vector(C22, weight), 4)
    for node in graph.nodes:
        assert is_member(node, xi, reg)
        for i in (1, 2):
            image = f_tilde(node, i)
            if image is not None:
                assert is_member(image, xi, reg)


def test_finite_type_component_equals_box():
    # so(5) instance: the saturated 16-node component is exactly the
    # inequality slice between its extremal vectors.
    cartan, weight = CartanRank2(2, 1), Weight(3, -2)
    h = highest_vector(cartan, weight)
    graph = bfs_component(h, 40)
    assert graph.saturated and len(graph.nodes) == 16
    xi = xi_closure(cartan, window=12, max_depth=12)
    generators, _ = xi_family(cartan, weight, 2, window=12)
    reg = closure(cartan, generators.forms, window=12, max_depth=12)
    box = enumerate_box(cartan, weight, [xi, reg], 12, 40, h, +1)
    assert set(box) == set(graph.nodes)


def test_undocumented_closure_forms_are_reported():
    family = xi_closure(C22, window=6, max_depth=10)
    extra = undocumented_forms(family, xi_displayed(C22, 7))
    assert form({3: 2, 4: -1}) in extra  # the x_2 chain is not in the tables
    assert set(extra) | xi_displayed(C22, 7).as_set() >= family.as_set()


def test_enumerate_box_unbounded_detection():
    weight = Weight(2, 1)
    xi = xi_closure(C22, window=4, max_depth=8)
    zero = LambdaVector.make(C22, weight)
    # Coordinate forms alone leave the negative side unbounded below.
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_box(C22, weight, [xi], 4, 0, zero, +1)


def test_half_closures_and_pn_assumptions():
    pos = half_closure(C22, True, window=6, max_depth=10)
    assert form({1: 1}) in pos.as_set()
    assert form({2: 2, 3: -1}) in pos.as_set()
    neg = half_closure(C22, False, window=6, max_depth=10)
    assert form({-1: -1}) in neg.as_set()
    assert form({-2: -2, -3: 1}) in neg.as_set()

    for c in ((2, 2), (2, 3), (3, 2), (1, 4), (1, 5), (3, 3), (1, 1), (2, 1), (1, 3)):
        assert check_pn_assumptions(CartanRank2(*c), depth=8, window=8)
    assert check_pn_assumptions(C22, depth=0, window=6)


def test_regime_generators_window_guard():
    with pytest.raises(WindowViolation):
        regime_generators(C22, 2, 3, window=5)


def test_regime_table_family_metadata():
    table = regime_table(C22, 3, 2, j_max=3, i_max=5)
    assert table.name is FamilyName.XI3
    assert table.k == 2
    data = table.to_json()
    assert data["name"] == "Xi3" and data["k"] == 2
    assert all("coeffs" in f and "const" in f for f in data["forms"])
