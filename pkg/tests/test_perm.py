import pytest
from hypothesis import given
from hypothesis import strategies as st

from piclass.errors import DegreeMismatchError
from piclass.perm import Permutation, compose, conjugate, parse_cycle_text

perms = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.permutations(list(range(n))).map(Permutation)
)


def same_degree_pairs(n_max=8):
    return st.integers(min_value=1, max_value=n_max).flatmap(
        lambda n: st.tuples(
            st.permutations(list(range(n))).map(Permutation),
            st.permutations(list(range(n))).map(Permutation),
        )
    )


def test_compose_convention_pinned():
    # (0 1) applied after (1 2) is the 3-cycle 0 -> 1 -> 2 -> 0
    a = parse_cycle_text("(0 1)", 3)
    b = parse_cycle_text("(1 2)", 3)
    assert compose(a, b) == parse_cycle_text("(0 1 2)", 3)
    # and the other convention would give (0 2 1); make sure we did not pick it
    assert compose(b, a) == parse_cycle_text("(0 2 1)", 3)


def test_identity_composition():
    b = parse_cycle_text("(0 2 3)", 5)
    e = Permutation.identity(5)
    assert compose(e, b) == b
    assert compose(b, e) == b


def test_involution_squares_to_identity():
    a = parse_cycle_text("(0 1)", 3)
    assert compose(a, a).is_identity()


def test_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_not_a_permutation_rejected():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_element_orders():
    assert Permutation.identity(4).order() == 1
    assert parse_cycle_text("(0 1 2)(3 4)", 5).order() == 6
    assert parse_cycle_text("(0 1 2 3 4)", 5).order() == 5


def test_cycle_string_round_trip():
    for text in ["()", "(0 1)", "(0 1 2)(3 4)", "(1 3)(2 6 4)"]:
        p = parse_cycle_text(text, 7)
        assert parse_cycle_text(p.cycle_string(), 7) == p


def test_parse_rejects_repeats_and_garbage():
    with pytest.raises(ValueError):
        parse_cycle_text("(0 0 1)", 3)
    with pytest.raises(ValueError):
        parse_cycle_text("(0 1)(1 2)", 3)
    with pytest.raises(ValueError):
        parse_cycle_text("swizzle", 3)
    with pytest.raises(ValueError):
        parse_cycle_text("(0 5)", 3)


@given(perms)
def test_inverse_is_two_sided(p):
    assert compose(p, p.inverse()).is_identity()
    assert compose(p.inverse(), p).is_identity()


@given(same_degree_pairs())
def test_inverse_antihomomorphism(pair):
    a, b = pair
    assert compose(a, b).inverse() == compose(b.inverse(), a.inverse())


@given(perms, st.integers(min_value=-6, max_value=6))
def test_power_matches_repeated_composition(p, k):
    expected = Permutation.identity(p.degree)
    step = p if k >= 0 else p.inverse()
    for _ in range(abs(k)):
        expected = compose(expected, step)
    assert p**k == expected


@given(same_degree_pairs())
def test_conjugation_preserves_order(pair):
    g, x = pair
    assert conjugate(g, x).order() == x.order()


@given(perms)
def test_order_annihilates(p):
    assert (p ** p.order()).is_identity()
