from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tetrabox.errors import NotInSubalgebra
from tetrabox.loop import LoopElem, bracket, is_like_definitional, is_like_structural, loop_prime, std_gen
from tetrabox.onsager import (
    SLOTS,
    Basis,
    Coords,
    basis_vector,
    bracket_oracle,
    bracket_oracle_ab,
    bracket_oracle_delta,
    bracket_oracle_xyz,
    coords,
    delta_vec,
    op_G,
    op_G_bracket,
    op_H,
    op_H_bracket,
    p,
    reassemble,
    reconstruct_xyz,
    seq_ab,
    seq_xyz,
    transition,
    u_space_basis,
)
from tetrabox.ring import T

X12, X03 = std_gen((1, 2)), std_gen((0, 3))


def C(basis, entries, level=0):
    return Coords(basis, level, entries)


# --- p_i calculus


def test_p_identities():
    assert p(-1).is_zero() and p(-2).is_zero()
    for i in range(5):
        for j in range(5):
            assert p(i) * p(j) == p(i + j)
        assert 2 * T * p(i) == p(i) + p(i + 1)
        assert 2 * (1 - T) * p(i) == p(i) - p(i + 1)


# --- operators


def test_operator_examples():
    assert op_G(LoopElem(1, 0, 0)) == LoopElem(2 * T - 1, T, T - 1) * -4
    assert op_H(LoopElem(0, T, T - 1)) == LoopElem(1, T * (2 * T - 1), (T - 1) * (2 * T - 1)) * -4
    assert op_G(LoopElem(0, 1, 0)) == LoopElem(0, T - 1, 1 - T) * -4
    assert op_G(LoopElem(0, 1, 0)) == op_G_bracket(LoopElem(0, 1, 0))


def test_operators_generate_even_terms():
    for i in range(6):
        assert op_G(seq_ab("a", 2 * i)) == seq_ab("a", 2 * i + 2)
        assert op_H(seq_ab("b", 2 * i)) == seq_ab("b", 2 * i + 2)
        assert bracket(X03, seq_ab("a", 2 * i)) == seq_ab("a", 2 * i + 1)


def test_operators_match_double_brackets_on_mixed_input():
    u = LoopElem(T**-2 + 3, (T - 1) ** -1 * T**4, T**3 - T)
    assert op_G(u) == op_G_bracket(u)
    assert op_H(u) == op_H_bracket(u)


# --- sequences


def test_sequence_examples():
    odd = LoopElem(1, T, 1 - T)
    assert seq_ab("a", 1) == odd * -2
    assert seq_ab("b", 1) == odd * 2
    assert seq_ab("a", 0, "recursive") == LoopElem(1, 0, 0)
    assert seq_ab("a", -1).is_zero() and seq_ab("b", -2).is_zero()


@pytest.mark.parametrize("level", [0, 1, 2])
def test_recursive_and_closed_sequences_agree(level):
    for kind in "ab":
        for n in range(14):
            assert seq_ab(kind, n, "recursive", level) == seq_ab(kind, n, "closed", level)


def test_primed_sequences_start_from_primed_generators():
    assert seq_ab("a", 0, "recursive", 1) == std_gen((2, 3))
    assert seq_ab("b", 0, "recursive", 1) == std_gen((0, 1))
    assert seq_ab("a", 0, "recursive", 2) == std_gen((3, 1))
    assert seq_ab("b", 0, "recursive", 2) == std_gen((0, 2))


def test_like_basis_examples():
    assert seq_xyz("x", 0) == LoopElem(1, 0, 0)
    assert seq_xyz("y", 0) == LoopElem(0, T, 0) * -4
    assert seq_xyz("x", 1, "combination") == LoopElem(2 * T - 1, 0, 0) * -4
    assert seq_ab("a", 2) + seq_ab("b", 0) * 4 == seq_xyz("x", 1)


@pytest.mark.parametrize("level", [0, 1, 2])
def test_like_basis_modes_agree(level):
    for kind in "xyz":
        for i in range(8):
            assert seq_xyz(kind, i, "combination", level) == seq_xyz(kind, i, "closed", level)


def test_generators_in_like_basis():
    assert seq_xyz("x", 0) == X12
    assert (seq_xyz("z", 0) - seq_xyz("y", 0)) * Fraction(1, 4) == X03


@pytest.mark.parametrize(
    "kind, pair, level",
    [
        ("x", (1, 2), 0),
        ("y", (2, 3), 0),
        ("z", (3, 1), 0),
        ("x", (2, 3), 1),
        ("y", (3, 1), 1),
        ("z", (1, 2), 1),
        ("x", (3, 1), 2),
        ("y", (1, 2), 2),
        ("z", (2, 3), 2),
    ],
)
def test_like_basis_vectors_are_like(kind, pair, level):
    for i in range(6):
        v = seq_xyz(kind, i, "closed", level)
        assert is_like_structural(pair, v)
        assert is_like_definitional(pair, v)


def test_delta_vectors():
    assert delta_vec("x", 0) == LoopElem(1, 0, 0)
    assert delta_vec("y", 1) == LoopElem(0, T * (2 * T - 1), 0)
    assert delta_vec("z", 0) == LoopElem(0, 0, 1 - T)
    assert delta_vec("x", 2, 1) == loop_prime(delta_vec("x", 2), 1)


def test_odd_terms():
    for i in range(10):
        a = seq_ab("a", 2 * i + 1)
        assert not a.is_zero()
        assert (a + seq_ab("b", 2 * i + 1)).is_zero()


def test_u_spaces():
    assert u_space_basis(1) == [LoopElem(1, T, 1 - T) * -2]
    assert u_space_basis(0) == [X12, X03]
    assert len(u_space_basis(2)) == 2
    # the concatenated bases have independent delta coordinates
    vectors = [v for n in range(9) for v in u_space_basis(n)]
    rows = [coords(v, Basis.DELTA).entries for v in vectors]
    keys = sorted({k for r in rows for k in r})
    assert _rank([[r.get(k, 0) for k in keys] for r in rows]) == len(vectors)


def _rank(matrix):
    m = [[Fraction(x) for x in row] for row in matrix]
    rank, col = 0, 0
    while rank < len(m) and col < len(m[0]):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


# --- coordinates


def test_coords_examples():
    assert coords(seq_ab("a", 2), Basis.XYZ) == C(Basis.XYZ, {("X", 1): 1, ("Y", 0): 1, ("Z", 0): -1})
    assert coords(X12, Basis.AB) == C(Basis.AB, {("A_even", 0): 1})
    assert coords(LoopElem(0, T * (2 * T - 1), 0), Basis.DELTA) == C(Basis.DELTA, {("Y", 1): 1})


def test_coords_outside_subalgebra():
    with pytest.raises(NotInSubalgebra) as info:
        coords(LoopElem(0, 1, 0), Basis.AB)
    assert ("X23", "O'") in info.value.offending
    with pytest.raises(NotInSubalgebra):
        coords(X12, Basis.AB, prime_level=1)


def test_coords_at_primed_levels():
    assert coords(std_gen((0, 1)), Basis.AB, 1) == C(Basis.AB, {("B_even", 0): 1}, 1)
    assert coords(std_gen((3, 1)), Basis.XYZ, 2) == C(Basis.XYZ, {("X", 0): 1}, 2)


def test_coords_serialization():
    c = C(Basis.XYZ, {("Z", 0): Fraction(-1, 2), ("X", 3): 2, ("Y", 0): 0})
    assert c.to_json() == {"basis": "xyz", "prime_level": 0, "entries": [["X", 3, "2"], ["Z", 0, "-1/2"]]}
    assert ("Y", 0) not in c.entries


def test_coords_validation():
    with pytest.raises(ValueError):
        C(Basis.AB, {("X", 0): 1})
    with pytest.raises(ValueError):
        C(Basis.XYZ, {("X", -1): 1})


coords_strategy = st.builds(
    lambda basis, level, items: Coords(basis, level, {(SLOTS[basis][s], i): c for s, i, c in items}),
    st.sampled_from(list(Basis)),
    st.integers(0, 2),
    st.lists(
        st.tuples(st.integers(0, 2), st.integers(0, 7), st.fractions(min_value=-9, max_value=9, max_denominator=5)),
        max_size=6,
    ),
)


@given(coords_strategy)
def test_coords_reassemble_round_trip(c):
    assert coords(reassemble(c), c.basis, c.prime_level) == c


# --- transitions


def test_transition_examples():
    assert transition(C(Basis.DELTA, {("X", 1): 1}), Basis.XYZ) == C(Basis.XYZ, {("X", 1): Fraction(-1, 4)})
    got = transition(C(Basis.AB, {("A_odd", 0): 1}), Basis.XYZ)
    assert got == C(Basis.XYZ, {("Y", 0): Fraction(1, 2), ("Z", 0): Fraction(1, 2), ("X", 0): -2})


@given(coords_strategy, st.sampled_from(list(Basis)))
def test_transitions_match_extraction_and_invert(c, target):
    moved = transition(c, target)
    assert moved == coords(reassemble(c), target, c.prime_level)
    assert transition(moved, c.basis) == c


# --- bracket tables


def test_ab_table_examples():
    assert bracket_oracle_ab("A_even", 0, "A_even", 1) == C(Basis.AB, {("A_odd", 0): 4})
    assert bracket_oracle_ab("A_odd", 0, "A_odd", 1) == C(Basis.AB, {})
    assert bracket_oracle_ab("B_even", 0, "A_even", 0) == C(Basis.AB, {("A_odd", 0): 1})
    assert bracket_oracle_ab("B_even", 2, "A_even", 3) == C(Basis.AB, {("A_odd", 5): 1, ("A_odd", 3): -16})


def test_xyz_table_examples():
    assert bracket_oracle_xyz("X", 0, "Y", 0) == C(Basis.XYZ, {("X", 1): 1, ("Y", 0): 2, ("X", 0): -4})
    assert bracket_oracle_xyz("Y", 0, "Z", 0) == C(Basis.XYZ, {("Z", 1): 1, ("Y", 1): -1})
    assert bracket_oracle_xyz("X", 3, "X", 5) == C(Basis.XYZ, {})


def test_delta_table_examples():
    assert bracket_oracle_delta("X", 0, "Y", 0) == C(Basis.DELTA, {("X", 0): 1, ("X", 1): 1, ("Y", 0): 2})
    assert bracket_oracle_delta("X", 2, "X", 5) == C(Basis.DELTA, {})
    assert bracket_oracle_delta("Y", 0, "Z", 0) == C(
        Basis.DELTA, {("Y", 0): 1, ("Y", 1): -1, ("Z", 0): 1, ("Z", 1): 1}
    )


@pytest.mark.parametrize("basis", list(Basis))
def test_tables_match_direct_brackets(basis):
    # every case boundary lies below index 3
    for s, s2 in product(SLOTS[basis], repeat=2):
        for i, j in product(range(5), repeat=2):
            direct = bracket(basis_vector(basis, s, i), basis_vector(basis, s2, j))
            assert coords(direct, basis) == bracket_oracle(basis, s, i, s2, j), (s, i, s2, j)


@pytest.mark.parametrize("basis", list(Basis))
def test_tables_hold_at_primed_levels(basis):
    for s, s2 in product(SLOTS[basis], repeat=2):
        for i, j in ((0, 0), (1, 2), (3, 1)):
            for level in (1, 2):
                direct = bracket(basis_vector(basis, s, i, level), basis_vector(basis, s2, j, level))
                assert coords(direct, basis, level) == bracket_oracle(basis, s, i, s2, j, level)


def test_table_input_validation():
    with pytest.raises(ValueError):
        bracket_oracle_ab("X", 0, "A_even", 0)
    with pytest.raises(ValueError):
        bracket_oracle_delta("X", -1, "Y", 0)


# --- recursive reconstruction


def test_reconstruction():
    report = reconstruct_xyz(6)
    names = [name for name, *_ in report]
    assert "x1 alternatives agree" in names and "x3 alternatives agree" in names
    assert [name for name, ok, *_ in report if not ok] == []
    with pytest.raises(ValueError):
        reconstruct_xyz(1)
