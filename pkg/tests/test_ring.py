from fractions import Fraction

import pytest
from conftest import ring_elems
from hypothesis import given
from hypothesis import strategies as st

from tetrabox.errors import DomainError
from tetrabox.ring import (
    ONE,
    ZERO,
    T,
    RingElem,
    canon_expand,
    format_rational,
    frame_subspaces,
    in_subspace,
    reassemble,
    ring_add,
    ring_mul,
    ring_prime,
    split_frame,
)

SAMPLES = [Fraction(2), Fraction(3), Fraction(5), Fraction(-7, 3), Fraction(11, 2)]


def values_agree(a, b, points=SAMPLES):
    return all(a.evaluate(x) == b.evaluate(x) for x in points)


# --- arithmetic and normal form


def test_additive_inverse_and_identity():
    assert ring_add(T, -T) == ZERO
    assert ring_add(T**2, ZERO) == T**2


def test_sum_of_inverses():
    got = ring_add(T**-1, (T - 1) ** -1)
    assert got == (2 * T - 1) / (T * (T - 1))
    assert (got.num, got.pow_t, got.pow_tm1) == ((Fraction(-1), Fraction(2)), 1, 1)
    # independent check by evaluation
    for x in SAMPLES:
        assert got.evaluate(x) == 1 / x + 1 / (x - 1)


def test_products():
    p1 = 2 * T - 1
    assert ring_mul(p1, p1) == (2 * T - 1) ** 2
    assert ring_mul(T, T**-1) == ONE
    got = ring_mul((T - 1) ** -1, (T - 1) ** 2)
    assert got == T - 1
    assert values_agree(got, T - 1)


def test_normal_form_is_reduced():
    a = RingElem((Fraction(0), Fraction(0), Fraction(1)), 3, 0)  # t^2 / t^3
    assert (a.num, a.pow_t, a.pow_tm1) == ((Fraction(1),), 1, 0)
    b = (T - 1) ** 2 / (T - 1) ** 3
    assert (b.pow_t, b.pow_tm1) == (0, 1)
    assert RingElem((Fraction(0),), 2, 2) == ZERO
    assert (ZERO.num, ZERO.pow_t, ZERO.pow_tm1) == ((), 0, 0)


def test_exact_division_inside_a():
    a = (T**3 - 5) * T
    assert a / (T**2 * (T - 1) ** 3) == (T**3 - 5) / (T * (T - 1) ** 3)
    assert (T**2 - 4) / (T - 2) == T + 2


def test_division_leaving_a_is_rejected():
    with pytest.raises(DomainError):
        ONE / (T**2 - 4)
    with pytest.raises(DomainError):
        (T**2 - 4) ** -1
    with pytest.raises(ZeroDivisionError):
        T / ZERO


def test_units():
    u = 3 * T**2 * (T - 1) ** -1
    assert u.is_unit()
    assert u * u.inverse() == ONE
    assert not (T + 1).is_unit()


def test_rendering():
    a = (2 * T**2 - 3 * T + 1) / (T * (T - 1) ** 3)
    assert str(a) == "(2*t - 1)/(t^1*(t-1)^2)"
    assert str((2 * T**2 - 3 * T + 1) / (T * (T - 1) ** 3) * (T - 1) ** 2 * T) == "2*t - 1"
    assert str(RingElem.const(Fraction(-3, 4)) * T) == "-3/4*t"
    assert str(ZERO) == "0"
    assert format_rational(Fraction(5, -10)) == "-1/2"


# --- the automorphism t -> 1 - 1/t


def test_prime_values():
    assert ring_prime(T, 1) == (T - 1) / T
    assert ring_prime(T, 2) == (1 - T) ** -1
    assert ring_prime(T, 3) == T
    assert ring_prime(T, 5) == ring_prime(T, 2)


@given(ring_elems(), ring_elems())
def test_prime_is_a_ring_homomorphism(a, b):
    assert ring_prime(a + b, 1) == ring_prime(a, 1) + ring_prime(b, 1)
    assert ring_prime(a * b, 1) == ring_prime(a, 1) * ring_prime(b, 1)
    assert ring_prime(a, 3) == a


@given(ring_elems())
def test_prime_agrees_with_substitution(a):
    for x in SAMPLES:
        image = 1 - 1 / x
        if image in (0, 1):
            continue
        assert ring_prime(a, 1).evaluate(x) == a.evaluate(image)


# --- ring axioms and canonical equality


@given(ring_elems(), ring_elems(), ring_elems())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@given(ring_elems(), ring_elems())
def test_equality_matches_evaluation(a, b):
    # enough points to separate numerators of the combined degree
    points = [Fraction(k, 7) for k in range(2, 40) if k != 7]
    same = all(a.evaluate(x) == b.evaluate(x) for x in points)
    assert (a == b) == same
    assert ((a - b) == ZERO) == (a == b)


@given(st.fractions(max_denominator=50).filter(lambda q: q != 0))
def test_rational_field_inverse(q):
    c = RingElem.const(q)
    assert c * c.inverse() == ONE


# --- canonical expansion


def test_canonical_expansion_examples():
    e = canon_expand(T**-1)
    assert e.c0 == 1 and e.tp_part == {1: -1} and not e.t_part and not e.tpp_part
    e = canon_expand((T - 1) ** -1)
    assert e.c0 == 0 and e.tpp_part == {1: -1} and not e.t_part and not e.tp_part
    e = canon_expand(T**2)
    assert e.t_part == {2: 1} and e.c0 == 0 and not e.tp_part and not e.tpp_part


@given(ring_elems())
def test_canonical_expansion_round_trip(a):
    e = canon_expand(a)
    assert reassemble(e) == a
    assert canon_expand(reassemble(e)) == e
    for part in (e.t_part, e.tp_part, e.tpp_part):
        assert all(k >= 1 and v for k, v in part.items())


# --- the three direct sums


def test_split_examples():
    assert split_frame(T**-1, 0) == (ZERO, 1 - ring_prime(T, 1), ZERO)
    assert split_frame(ONE, 0) == (ONE, ZERO, ZERO)
    assert split_frame(T, 1) == (ZERO, ZERO, T)
    for frame in range(3):
        assert split_frame(ZERO, frame) == (ZERO, ZERO, ZERO)


@pytest.mark.parametrize("frame", [0, 1, 2])
@given(a=ring_elems())
def test_split_sums_back_and_respects_membership(frame, a):
    parts = split_frame(a, frame)
    assert parts[0] + parts[1] + parts[2] == a
    for part, (kind, level) in zip(parts, frame_subspaces(frame)):
        assert in_subspace(part, kind, level)


@pytest.mark.parametrize("frame", [0, 1, 2])
def test_split_is_unique(frame):
    # moving a summand out of its subspace must break membership
    a = (T**3 - 2 * T + 5) / (T**2 * (T - 1))
    parts = list(split_frame(a, frame))
    subspaces = frame_subspaces(frame)
    for j in range(3):
        kind, level = subspaces[j]
        bumped = parts[j] + T ** -1 + (T - 1) ** -2 + T**2
        assert not all(in_subspace(p, k, l) for p, (k, l) in zip(parts[:j] + [bumped] + parts[j + 1 :], subspaces))


def test_membership_predicates():
    tp = ring_prime(T, 1)
    assert in_subspace(1 - tp, "one_minus", 1)
    assert not in_subspace(tp, "one_minus", 1)
    assert in_subspace(T, "times", 0)
    assert not in_subspace(T + 1, "times", 0)
    assert not in_subspace(T**-1, "poly", 0)
