"""Mechanical verification sweeps over the library's identities.

Each suite returns a list of :class:`Check`.  Randomized suites draw from a
seeded ``random.Random`` so reports are reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .loop import (
    COLUMNS,
    PAIRS,
    ROWS,
    LoopElem,
    bracket,
    cell_contains,
    decompose_X,
    decompose_nine,
    is_like_definitional,
    is_like_structural,
    loop_prime,
    permute_generator,
    std_gen,
    verify_tetra_relations,
)
from .onsager import (
    SLOTS,
    Basis,
    Coords,
    basis_vector,
    bracket_oracle,
    coords,
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
from .ring import T, RingElem, ring_prime

SUITES = (
    "tetra",
    "sequences",
    "operators",
    "ab-table",
    "xyz-table",
    "delta-table",
    "transitions",
    "grid",
    "appendix",
)

DEFAULT_MAX = 20
DEFAULT_PAIR_DEPTH = 8


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: str
    rhs: str

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "lhs": self.lhs, "rhs": self.rhs}


def _check(name, lhs, rhs, passed=None) -> Check:
    if passed is None:
        passed = lhs == rhs
    return Check(name, bool(passed), str(lhs), str(rhs))


# ---------------------------------------------------------------------------
# random elements


def random_ring_elem(rng: random.Random, max_deg: int = 6, max_pow: int = 3, coeff: int = 5) -> RingElem:
    """Random ``num / (t^a (t-1)^b)`` with small integer coefficients."""
    deg = rng.randint(0, max_deg)
    num = tuple(Fraction(rng.randint(-coeff, coeff)) for _ in range(deg + 1))
    return RingElem(num, rng.randint(0, max_pow), rng.randint(0, max_pow))


def random_loop_elem(rng: random.Random, max_deg: int = 6, max_pow: int = 3) -> LoopElem:
    return LoopElem(*(random_ring_elem(rng, max_deg, max_pow) for _ in range(3)))


def random_onsager_elem(rng: random.Random, level: int = 0, depth: int = 6) -> LoopElem:
    entries = {}
    for slot in SLOTS[Basis.DELTA]:
        for i in range(depth + 1):
            if rng.random() < 0.5:
                entries[slot, i] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return reassemble(Coords(Basis.DELTA, level, entries))


# ---------------------------------------------------------------------------
# suites


def suite_tetra(max_n=DEFAULT_MAX, pair_depth=DEFAULT_PAIR_DEPTH, seed=0, samples=100):
    """Defining relations, the (123) intertwining, Jacobi, and ′ as automorphism."""
    out = [_check(name, lhs, rhs, ok) for name, ok, lhs, rhs in verify_tetra_relations()]
    for i, j in itertools.permutations(range(4), 2):
        lhs = std_gen(permute_generator((i, j)))
        rhs = loop_prime(std_gen((i, j)), 1)
        out.append(_check(f"sigma(x{i}{j} under (123)) = prime(sigma(x{i}{j}))", lhs, rhs))
    rng = random.Random(seed)
    jac_ok = prime_ok = order_ok = True
    first_bad = ("", "")
    for _ in range(samples):
        u, v, w = (random_loop_elem(rng, 4, 2) for _ in range(3))
        jac = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))
        if jac:
            jac_ok = False
            first_bad = (jac, LoopElem())
        if loop_prime(bracket(u, v), 1) != bracket(loop_prime(u, 1), loop_prime(v, 1)):
            prime_ok = False
        if loop_prime(u, 3) != u or loop_prime(loop_prime(u, 1), 2) != u:
            order_ok = False
    out.append(Check(f"Jacobi identity on {samples} random triples", jac_ok, str(first_bad[0]), str(first_bad[1])))
    out.append(Check(f"prime preserves the bracket on {samples} random pairs", prime_ok, "", ""))
    out.append(Check(f"prime has order three on {samples} random elements", order_ok, "", ""))
    for _ in range(samples):
        a = random_ring_elem(rng, 4, 2)
        if ring_prime(a, 3) != a:
            order_ok = False
            break
    out.append(Check("ring prime has order three", order_ok, "", ""))
    return out


# the five displayed tables, written out with t and p_i = (2t-1)^i
def _table_entries():
    rows = []
    for i in range(5):
        s = (-4) ** i
        rows.append((f"a_{2 * i}", seq_ab("a", 2 * i), LoopElem(p(i), T * p(i - 1), (T - 1) * p(i - 1)) * s))
        rows.append((f"b_{2 * i}", seq_ab("b", 2 * i), LoopElem(p(i - 1), T * p(i), (T - 1) * p(i)) * s))
        odd = LoopElem(p(i), T * p(i), (1 - T) * p(i)) * (2 * 4 ** i)
        sign = -1 if i % 2 == 0 else 1
        rows.append((f"a_{2 * i + 1}", seq_ab("a", 2 * i + 1), odd * sign))
        rows.append((f"b_{2 * i + 1}", seq_ab("b", 2 * i + 1), odd * -sign))
    return rows


def suite_sequences(max_n=DEFAULT_MAX, pair_depth=DEFAULT_PAIR_DEPTH, seed=0):
    out = []
    for level in range(3):
        for kind in "ab":
            for n in range(max_n + 1):
                out.append(
                    _check(
                        f"{kind}{n} recursive = closed at prime level {level}",
                        seq_ab(kind, n, "recursive", level),
                        seq_ab(kind, n, "closed", level),
                    )
                )
        for kind in "xyz":
            for i in range(max_n // 2 + 1):
                out.append(
                    _check(
                        f"{kind}{i} combination = closed at prime level {level}",
                        seq_xyz(kind, i, "combination", level),
                        seq_xyz(kind, i, "closed", level),
                    )
                )
    for name, got, want in _table_entries():
        out.append(_check(f"table entry {name}", got, want))
    for i in range(max_n // 2 + 1):
        a, b = seq_ab("a", 2 * i + 1), seq_ab("b", 2 * i + 1)
        out.append(_check(f"b{2 * i + 1} + a{2 * i + 1} = 0", a + b, LoopElem()))
        out.append(Check(f"a{2 * i + 1} != 0", not a.is_zero(), str(a), "nonzero"))
    for n in range(max_n + 1):
        try:
            basis = u_space_basis(n)
            out.append(Check(f"U_{n} has a basis of size {len(basis)}", len(basis) == 2 - n % 2, "", ""))
        except AssertionError as exc:
            out.append(Check(f"U_{n} basis", False, str(exc), ""))
    out.append(_check("x0 = x12", seq_xyz("x", 0), std_gen((1, 2))))
    out.append(_check("(z0 - y0)/4 = x03", (seq_xyz("z", 0) - seq_xyz("y", 0)) * Fraction(1, 4), std_gen((0, 3))))
    return out


def suite_operators(max_n=DEFAULT_MAX, pair_depth=DEFAULT_PAIR_DEPTH, seed=0, samples=50):
    out = []
    rng = random.Random(seed)
    for k in range(samples):
        u = random_loop_elem(rng, 6, 3)
        out.append(_check(f"G formula on random element {k}", op_G(u), op_G_bracket(u)))
        out.append(_check(f"H formula on random element {k}", op_H(u), op_H_bracket(u)))
    for i in range(max_n // 2):
        out.append(_check(f"G(a{2 * i}) = a{2 * i + 2}", op_G(seq_ab("a", 2 * i)), seq_ab("a", 2 * i + 2)))
        out.append(_check(f"H(b{2 * i}) = b{2 * i + 2}", op_H(seq_ab("b", 2 * i)), seq_ab("b", 2 * i + 2)))
    return out


def _table_suite(basis: Basis, pair_depth: int):
    out = []
    slots = SLOTS[basis]
    for s, s2 in itertools.product(slots, repeat=2):
        for i in range(pair_depth + 1):
            for j in range(pair_depth + 1):
                direct = coords(bracket(basis_vector(basis, s, i), basis_vector(basis, s2, j)), basis)
                table = bracket_oracle(basis, s, i, s2, j)
                out.append(_check(f"[{s}{i}, {s2}{j}] in {basis.value}", direct, table))
    return out


def suite_ab_table(max_n=DEFAULT_MAX, pair_depth=DEFAULT_PAIR_DEPTH, seed=0):
    return _table_suite(Basis.AB, pair_depth)


def suite_xyz_table(max_n=DEFAULT_MAX, pair_depth=DEFAULT_PAIR_DEPTH, seed=0):
    out = _table_suite(Basis.XYZ, pair_depth)
    for name, ok, lhs, rhs in reconstruct_xyz(max(2, pair_depth)):
        out.append(_check(f"reconstruction: {name}", lhs, rhs, ok))
    return out


def suite_delta_table(max_n=DEFAULT_MAX, pair_depth=DEFAULT_PAIR_DEPTH, seed=0):
    return _table_suite(Basis.DELTA, pair_depth)


def suite_transitions(max_n=DEFAULT_MAX, pair_depth=DEFAULT_PAIR_DEPTH, seed=0, samples=20):
    """Transition formulas against extraction, on unit vectors and random round trips."""
    out = []
    depth = pair_depth
    for level in range(3):
        for src, dst in itertools.permutations(Basis, 2):
            ok, bad = True, ("", "")
            for slot in SLOTS[src]:
                for i in range(depth + 1):
                    c = Coords(src, level, {(slot, i): 1})
                    via_formula = transition(c, dst)
                    via_extract = coords(reassemble(c), dst, level)
                    if via_formula != via_extract:
                        ok, bad = False, (via_formula, via_extract)
            out.append(
                Check(
                    f"{src.value} -> {dst.value} formulas = extraction at prime level {level}",
                    ok,
                    str(bad[0]),
                    str(bad[1]),
                )
            )
    rng = random.Random(seed)
    for k in range(samples):
        src = rng.choice(list(Basis))
        level = rng.randrange(3)
        entries = {
            (rng.choice(SLOTS[src]), rng.randint(0, depth)): Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            for _ in range(rng.randint(1, 6))
        }
        c = Coords(src, level, entries)
        for dst in Basis:
            back = transition(transition(c, dst), src)
            out.append(_check(f"round trip {src.value} -> {dst.value} -> {src.value} (sample {k})", back, c))
        out.append(_check(f"coords(reassemble(c)) = c (sample {k})", coords(reassemble(c), src, level), c))
    return out


# 3x3 table of like-basis families: row pair, column level -> kind
_LIKE_ROWS = ((1, 2), (2, 3), (3, 1))
LIKE_TABLE = {
    ((1, 2), 0): "x",
    ((1, 2), 1): "z",
    ((1, 2), 2): "y",
    ((2, 3), 0): "y",
    ((2, 3), 1): "x",
    ((2, 3), 2): "z",
    ((3, 1), 0): "z",
    ((3, 1), 1): "y",
    ((3, 1), 2): "x",
}


def suite_grid(max_n=DEFAULT_MAX, pair_depth=DEFAULT_PAIR_DEPTH, seed=0, samples=100, like_depth=None):
    out = []
    rng = random.Random(seed)
    sums = members = rows = cols = True
    for _ in range(samples):
        u = random_loop_elem(rng, 6, 3)
        grid = decompose_nine(u)
        sums &= grid.total() == u
        members &= all(cell_contains(r, c, grid[r, c]) for r in range(3) for c in range(3))
        rows &= tuple(grid.row_sum(r) for r in range(3)) == decompose_X(u)
        for c in range(3):
            part = grid.column_sum(c)
            cols &= all(
                not g[r2, c2] for g in (decompose_nine(part),) for r2 in range(3) for c2 in range(3) if c2 != c
            )
    out.append(Check(f"grid entries sum to the input ({samples} samples)", sums, "", ""))
    out.append(Check(f"grid entries lie in their cells ({samples} samples)", members, "", ""))
    out.append(Check(f"grid rows reproduce decompose_X ({samples} samples)", rows, "", ""))
    out.append(Check(f"grid columns lie in O, O', O'' ({samples} samples)", cols, "", ""))
    # likeness of the basis table; the structural and definitional tests must agree
    like_depth = max_n // 2 + 2 if like_depth is None else like_depth
    for (pair, level), kind in LIKE_TABLE.items():
        col = COLUMNS[level]
        row_index = _LIKE_ROWS.index(pair)
        row = ROWS[row_index]
        struct = defin = cell = True
        for i in range(like_depth + 1):
            v = seq_xyz(kind, i, "closed", level)
            struct &= is_like_structural(pair, v)
            defin &= is_like_definitional(pair, v)
            cell &= cell_contains(row_index, level, v)
        prime_mark = "'" * level
        out.append(Check(f"{kind}{prime_mark}_i structurally {row}-like, i<={like_depth}", struct, "", ""))
        out.append(Check(f"{kind}{prime_mark}_i definitionally {row}-like, i<={like_depth}", defin, "", ""))
        out.append(Check(f"{kind}{prime_mark}_i lies in {row} ∩ {col}, i<={like_depth}", cell, "", ""))
    agree = True
    for pair in PAIRS:
        gen = std_gen(pair)
        for _ in range(10):
            a = random_ring_elem(rng, 4, 2)
            agree &= is_like_structural(pair, gen * a) and is_like_definitional(pair, gen * a)
            w = random_loop_elem(rng, 3, 1)
            agree &= is_like_structural(pair, w) == is_like_definitional(pair, w)
    out.append(Check("structural and definitional likeness agree on random elements", agree, "", ""))
    return out


def _pp(i, level):
    """(2s - 1)^i in the primed variable s = t' or t''."""
    s = ring_prime(T, level)
    return RingElem() if i < 0 else (2 * s - 1) ** i


def suite_appendix(max_n=DEFAULT_MAX, pair_depth=DEFAULT_PAIR_DEPTH, seed=0):
    """Explicit primed closed forms, written in t' and t'' independently of loop_prime."""
    out = []
    tp, tpp = ring_prime(T, 1), ring_prime(T, 2)

    def q1(i):
        return _pp(i, 1)

    def q2(i):
        return _pp(i, 2)

    for i in range(max_n // 2 + 1):
        s = (-4) ** i
        o = -2 * s
        forms = {
            ("a", 2 * i, 1): LoopElem((tp - 1) * q1(i - 1), q1(i), tp * q1(i - 1)) * s,
            ("b", 2 * i, 1): LoopElem((tp - 1) * q1(i), q1(i - 1), tp * q1(i)) * s,
            ("a", 2 * i + 1, 1): LoopElem((1 - tp) * q1(i), q1(i), tp * q1(i)) * o,
            ("a", 2 * i, 2): LoopElem(tpp * q2(i - 1), (tpp - 1) * q2(i - 1), q2(i)) * s,
            ("b", 2 * i, 2): LoopElem(tpp * q2(i), (tpp - 1) * q2(i), q2(i - 1)) * s,
            ("a", 2 * i + 1, 2): LoopElem(tpp * q2(i), (1 - tpp) * q2(i), q2(i)) * o,
        }
        for (kind, n, level), want in forms.items():
            marks = "'" * level
            out.append(_check(f"{kind}{marks}_{n} explicit form", seq_ab(kind, n, "recursive", level), want))
        r = (-4) ** (i + 1)
        xyz = {
            ("x", 1): LoopElem.y((q1(i) - q1(i - 2)) * s),
            ("y", 1): LoopElem.z((tp * q1(i) - tp * q1(i - 1)) * r),
            ("z", 1): LoopElem.x(((1 - tp) * q1(i) + (1 - tp) * q1(i - 1)) * r),
            ("x", 2): LoopElem.z((q2(i) - q2(i - 2)) * s),
            ("y", 2): LoopElem.x((tpp * q2(i) - tpp * q2(i - 1)) * r),
            ("z", 2): LoopElem.y(((1 - tpp) * q2(i) + (1 - tpp) * q2(i - 1)) * r),
        }
        for (kind, level), want in xyz.items():
            marks = "'" * level
            out.append(_check(f"{kind}{marks}_{i} explicit form", seq_xyz(kind, i, "combination", level), want))
    return out


_RUNNERS = {
    "tetra": suite_tetra,
    "sequences": suite_sequences,
    "operators": suite_operators,
    "ab-table": suite_ab_table,
    "xyz-table": suite_xyz_table,
    "delta-table": suite_delta_table,
    "transitions": suite_transitions,
    "grid": suite_grid,
    "appendix": suite_appendix,
}


def run_suite(name: str, max_n: int = DEFAULT_MAX, pair_depth: int = DEFAULT_PAIR_DEPTH, seed: int = 0):
    """Run one suite, or every suite in order for ``name == "all"``."""
    if name == "all":
        return [c for suite in SUITES for c in _RUNNERS[suite](max_n, pair_depth, seed)]
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}") from None
    return runner(max_n, pair_depth, seed)
