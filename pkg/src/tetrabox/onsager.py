"""The Onsager subalgebra generated by x12 and x03, and its images under prime.

Three bases are available for each prime level:

``ab``
    ``a_{2i}, b_{2i}, a_{2i+1}`` built from alternating brackets of the two
    generators (slots ``A_even``, ``B_even``, ``A_odd``).
``xyz``
    the like-element basis ``bx_i, by_i, bz_i`` (slots ``X``, ``Y``, ``Z``);
    each vector is x12-, x23- or x31-like respectively.
``delta``
    ``x(x)p_i, y(x)t p_i, z(x)(1-t)p_i`` with ``p_i = (2t-1)**i``
    (slots ``X``, ``Y``, ``Z``).

Coordinates are extracted by rewriting components in powers of ``2t - 1`` and
eliminating top-down against the closed forms.  ``transition`` instead uses
explicit summation formulas, so the two routes check each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from . import kernels as K
from .errors import NotInSubalgebra
from .loop import COLUMNS, ROWS, LoopElem, bracket, decompose_nine, loop_prime, std_gen
from .ring import ONE, T, ZERO, RingElem, as_rational, format_rational

__all__ = [
    "Basis",
    "Coords",
    "SLOTS",
    "p",
    "op_G",
    "op_H",
    "op_G_bracket",
    "op_H_bracket",
    "seq_ab",
    "seq_xyz",
    "delta_vec",
    "basis_vector",
    "generators",
    "reassemble",
    "coords",
    "transition",
    "bracket_oracle",
    "bracket_oracle_ab",
    "bracket_oracle_xyz",
    "bracket_oracle_delta",
    "reconstruct_xyz",
    "u_space_basis",
]


class Basis(str, Enum):
    AB = "ab"
    XYZ = "xyz"
    DELTA = "delta"


SLOTS = {
    Basis.AB: ("A_even", "B_even", "A_odd"),
    Basis.XYZ: ("X", "Y", "Z"),
    Basis.DELTA: ("X", "Y", "Z"),
}


@dataclass(frozen=True)
class Coords:
    """Sparse coordinates ``{(slot, i): coefficient}`` in a (primed) basis."""

    basis: Basis
    prime_level: int = 0
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        basis = Basis(self.basis)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "prime_level", self.prime_level % 3)
        clean = {}
        for (slot, i), c in self.entries.items():
            if slot not in SLOTS[basis]:
                raise ValueError(f"slot {slot!r} does not belong to basis {basis.value}")
            if i < 0:
                raise ValueError("basis indices are non-negative")
            c = as_rational(c)
            if c:
                clean[slot, i] = c
        object.__setattr__(self, "entries", clean)

    def __eq__(self, other):
        if not isinstance(other, Coords):
            return NotImplemented
        return (self.basis, self.prime_level, self.entries) == (
            other.basis,
            other.prime_level,
            other.entries,
        )

    def __hash__(self):
        return hash((self.basis, self.prime_level, frozenset(self.entries.items())))

    def sorted_entries(self):
        order = SLOTS[self.basis]
        return sorted(self.entries.items(), key=lambda kv: (order.index(kv[0][0]), kv[0][1]))

    def get(self, slot, i):
        return self.entries.get((slot, i), Fraction(0))

    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "prime_level": self.prime_level,
            "entries": [[slot, i, format_rational(c)] for (slot, i), c in self.sorted_entries()],
        }

    def render(self) -> str:
        if not self.entries:
            return "0"
        return ", ".join(f"{slot}[{i}]={format_rational(c)}" for (slot, i), c in self.sorted_entries())

    def __str__(self):
        return self.render()


def _combine(*terms):
    """Sum of ``coef * {key: value}`` dictionaries, dropping zeros."""
    out: dict = {}
    for coef, vec in terms:
        for key, val in vec.items():
            out[key] = out.get(key, Fraction(0)) + coef * val
    return {k: v for k, v in out.items() if v}


def _unit(slot, i):
    return {} if i < 0 else {(slot, i): Fraction(1)}


# ---------------------------------------------------------------------------
# polynomials p_i and closed forms


@lru_cache(maxsize=None)
def p(i: int) -> RingElem:
    """``(2t - 1)**i``, with ``p(-1) = p(-2) = 0``."""
    if i < 0:
        return ZERO
    return (2 * T - 1) ** i


_ONE_MINUS_T = 1 - T
_T_MINUS_1 = T - 1


def _sign4(i: int) -> int:
    """(-1)**i * 4**i."""
    return (-4) ** i


def op_G(u: LoopElem) -> LoopElem:
    f, g, h = u.components()
    return LoopElem(
        (2 * T - 1) * f,
        T * f + _T_MINUS_1 * g - T * h,
        _T_MINUS_1 * f + _ONE_MINUS_T * g + T * h,
    ) * (-4)


def op_H(u: LoopElem) -> LoopElem:
    f, g, h = u.components()
    return LoopElem(g - h, (2 * T - 1) * g, (2 * T - 1) * h) * (-4)


def op_G_bracket(u: LoopElem) -> LoopElem:
    return bracket(std_gen((1, 2)), bracket(std_gen((0, 3)), u))


def op_H_bracket(u: LoopElem) -> LoopElem:
    return bracket(std_gen((0, 3)), bracket(std_gen((1, 2)), u))


def _closed_ab(kind: str, n: int) -> LoopElem:
    i, odd = divmod(n, 2)
    if odd:
        vec = LoopElem(p(i), T * p(i), _ONE_MINUS_T * p(i)) * (2 * -_sign4(i))
        return vec if kind == "a" else -vec
    s = _sign4(i)
    if kind == "a":
        return LoopElem(p(i), T * p(i - 1), _T_MINUS_1 * p(i - 1)) * s
    return LoopElem(p(i - 1), T * p(i), _T_MINUS_1 * p(i)) * s


def generators(prime_level: int = 0):
    """The two standard generators ``(a_0, b_0)`` of O, O' or O''."""
    return {
        0: (std_gen((1, 2)), std_gen((0, 3))),
        1: (std_gen((2, 3)), std_gen((0, 1))),
        2: (std_gen((3, 1)), std_gen((0, 2))),
    }[prime_level % 3]


@lru_cache(maxsize=None)
def _recursive_ab(kind: str, n: int, level: int) -> LoopElem:
    a0, b0 = generators(level)
    if n == 0:
        return a0 if kind == "a" else b0
    prev = _recursive_ab(kind, n - 1, level)
    # a: odd steps bracket with b0, even steps with a0; b: the reverse
    use_b0 = (n % 2 == 1) == (kind == "a")
    return bracket(b0 if use_b0 else a0, prev)


def seq_ab(kind: str, n: int, mode: str = "closed", prime_level: int = 0) -> LoopElem:
    """``a_n`` or ``b_n`` (image), negative indices giving zero."""
    if kind not in ("a", "b"):
        raise ValueError("kind must be 'a' or 'b'")
    if n < 0:
        return LoopElem()
    level = prime_level % 3
    if mode == "recursive":
        return _recursive_ab(kind, n, level)
    if mode != "closed":
        raise ValueError(f"unknown mode {mode!r}")
    return loop_prime(_closed_ab(kind, n), level)


def _closed_xyz(kind: str, i: int) -> LoopElem:
    if kind == "x":
        return LoopElem.x((p(i) - p(i - 2)) * _sign4(i))
    s = _sign4(i + 1)
    if kind == "y":
        return LoopElem.y(T * (p(i) - p(i - 1)) * s)
    return LoopElem.z(_ONE_MINUS_T * (p(i) + p(i - 1)) * s)


def _combination_xyz(kind: str, i: int, level: int) -> LoopElem:
    def a(n):
        return seq_ab("a", n, "recursive", level)

    def b(n):
        return seq_ab("b", n, "recursive", level)

    if kind == "x":
        return a(2 * i) + b(2 * i - 2) * 4
    if kind == "y":
        return a(2 * i + 1) + a(2 * i) * 2 + a(2 * i - 1) * 4 - b(2 * i) * 2
    return a(2 * i + 1) + a(2 * i) * 2 - a(2 * i - 1) * 4 + b(2 * i) * 2


def seq_xyz(kind: str, i: int, mode: str = "closed", prime_level: int = 0) -> LoopElem:
    """The like-element basis vectors ``bx_i``, ``by_i``, ``bz_i``."""
    if kind not in ("x", "y", "z"):
        raise ValueError("kind must be 'x', 'y' or 'z'")
    if i < 0:
        return LoopElem()
    level = prime_level % 3
    if mode == "combination":
        return _combination_xyz(kind, i, level)
    if mode != "closed":
        raise ValueError(f"unknown mode {mode!r}")
    return loop_prime(_closed_xyz(kind, i), level)


def delta_vec(kind: str, i: int, prime_level: int = 0) -> LoopElem:
    if i < 0:
        return LoopElem()
    if kind == "x":
        vec = LoopElem.x(p(i))
    elif kind == "y":
        vec = LoopElem.y(T * p(i))
    elif kind == "z":
        vec = LoopElem.z(_ONE_MINUS_T * p(i))
    else:
        raise ValueError("kind must be 'x', 'y' or 'z'")
    return loop_prime(vec, prime_level)


_AB_SLOT = {"A_even": ("a", 0), "B_even": ("b", 0), "A_odd": ("a", 1)}


def basis_vector(basis, slot: str, i: int, prime_level: int = 0) -> LoopElem:
    basis = Basis(basis)
    if slot not in SLOTS[basis]:
        raise ValueError(f"slot {slot!r} does not belong to basis {basis.value}")
    if basis is Basis.AB:
        kind, odd = _AB_SLOT[slot]
        return seq_ab(kind, 2 * i + odd, "closed", prime_level)
    if basis is Basis.XYZ:
        return seq_xyz(slot.lower(), i, "closed", prime_level)
    return delta_vec(slot.lower(), i, prime_level)


def reassemble(c: Coords) -> LoopElem:
    total = LoopElem()
    for (slot, i), coef in c.sorted_entries():
        total = total + basis_vector(c.basis, slot, i, c.prime_level) * coef
    return total


# ---------------------------------------------------------------------------
# coordinate extraction


def _p_basis(poly: tuple) -> tuple:
    """Coefficients of ``poly(t)`` in powers of ``2t - 1``."""
    half = Fraction(1, 2)
    scaled = tuple(c * half ** k for k, c in enumerate(poly))
    return K.shift(scaled, 1)


def _delta_entries(v: LoopElem) -> dict:
    """DELTA coordinates of a level-0 element already known to lie in O."""
    f, g, h = v.components()
    assert f.is_polynomial() and g.is_polynomial() and h.is_polynomial()
    out = {}
    for k, c in enumerate(_p_basis(f.num)):
        out["X", k] = c
    if g.num:
        assert not g.num[0]
        for k, c in enumerate(_p_basis(g.num[1:])):
            out["Y", k] = c
    if h.num:
        quo, rem = K.divide_linear(h.num, 1)
        assert not rem
        for k, c in enumerate(_p_basis(K.neg(quo))):
            out["Z", k] = c
    return {k: c for k, c in out.items() if c}


def _solve_small(matrix, rhs):
    """Exact Gauss-Jordan solve of a square system over Q."""
    n = len(rhs)
    m = [list(row) + [rhs[r]] for r, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / Fraction(m[col][col])
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


@lru_cache(maxsize=None)
def _delta_expansion(basis: Basis, slot: str, i: int) -> tuple:
    return tuple(sorted(_delta_entries(basis_vector(basis, slot, i)).items()))


def _blocks(basis: Basis):
    """Weight function on DELTA keys and the basis elements leading at a weight.

    Every basis element expands into DELTA keys of weight at most its own, and
    at each weight the leading block is square and invertible.
    """
    if basis is Basis.XYZ:
        order = {"X": 0, "Y": 1, "Z": 2}

        def weight(key):
            slot, i = key
            return 3 * i + order[slot]

        def block(w):
            i, r = divmod(w, 3)
            slot = "XYZ"[r]
            return [(slot, i)], [(slot, i)]

        return weight, block

    def weight(key):
        slot, i = key
        return 2 * i if slot == "X" else 2 * i + 1

    def block(w):
        i, odd = divmod(w, 2)
        if odd:
            return [("Y", i), ("Z", i)], [("B_even", i), ("A_odd", i)]
        return [("X", i)], [("A_even", i)]

    return weight, block


def _from_delta(entries: dict, basis: Basis) -> dict:
    weight, block = _blocks(basis)
    rest = dict(entries)
    out = {}
    while rest:
        w = max(weight(k) for k in rest)
        keys, elems = block(w)
        expansions = [dict(_delta_expansion(basis, slot, i)) for slot, i in elems]
        matrix = [[e.get(k, Fraction(0)) for e in expansions] for k in keys]
        sol = _solve_small(matrix, [rest.get(k, Fraction(0)) for k in keys])
        for elem, coef, exp in zip(elems, sol, expansions):
            if coef:
                out[elem] = coef
                rest = _combine((1, rest), (-coef, exp))
    return out


def coords(u: LoopElem, basis, prime_level: int = 0) -> Coords:
    """Coordinates of ``u`` in a basis of the Onsager subalgebra at ``prime_level``."""
    basis = Basis(basis)
    level = prime_level % 3
    grid = decompose_nine(u)
    offending = {
        (ROWS[r], COLUMNS[c]): grid[r, c]
        for r in range(3)
        for c in range(3)
        if c != level and grid[r, c]
    }
    if offending:
        raise NotInSubalgebra(
            f"element is not in {COLUMNS[level]}; nonzero cells: "
            + ", ".join(f"{r}∩{c}" for r, c in offending),
            offending,
        )
    delta = _delta_entries(loop_prime(u, -level))
    if basis is Basis.DELTA:
        return Coords(basis, level, delta)
    return Coords(basis, level, _from_delta(delta, basis))


# ---------------------------------------------------------------------------
# explicit transition formulas


def _e_vec(i):
    """bx_i + by_{i-1} - bz_{i-1} - 4 by_{i-2} - 4 bz_{i-2}."""
    return _combine(
        (1, _unit("X", i)),
        (1, _unit("Y", i - 1)),
        (-1, _unit("Z", i - 1)),
        (-4, _unit("Y", i - 2)),
        (-4, _unit("Z", i - 2)),
    )


def _a_even_in_xyz(i):
    return _combine(*((16 ** k, _e_vec(i - 2 * k)) for k in range(i // 2 + 1)))


def _ab_to_xyz(slot, i):
    if slot == "A_even":
        return _a_even_in_xyz(i)
    if slot == "B_even":
        terms = []
        for k in range(i // 2 + 1):
            m = i - 2 * k
            terms.append(
                (
                    16 ** k,
                    _combine(
                        (Fraction(-1, 4), _unit("Y", m)),
                        (Fraction(1, 4), _unit("Z", m)),
                        (-4, _unit("X", m - 1)),
                        (1, _unit("Y", m - 1)),
                        (1, _unit("Z", m - 1)),
                    ),
                )
            )
        return _combine(*terms)
    return _combine(
        (Fraction(1, 2), _unit("Y", i)),
        (Fraction(1, 2), _unit("Z", i)),
        (-2, _a_even_in_xyz(i)),
    )


def _a(n):
    """``a_n`` as an AB key vector (odd n -> A_odd, even -> A_even)."""
    if n < 0:
        return {}
    return _unit("A_odd", n // 2) if n % 2 else _unit("A_even", n // 2)


def _b_even(n):
    return {} if n < 0 else _unit("B_even", n // 2)


def _xyz_to_ab(slot, i):
    if slot == "X":
        return _combine((1, _a(2 * i)), (4, _b_even(2 * i - 2)))
    sign = 1 if slot == "Y" else -1
    return _combine(
        (1, _a(2 * i + 1)),
        (2, _a(2 * i)),
        (4 * sign, _a(2 * i - 1)),
        (-2 * sign, _b_even(2 * i)),
    )


def _xyz_to_delta(slot, i):
    if slot == "X":
        return _combine((_sign4(i), _unit("X", i)), (-_sign4(i), _unit("X", i - 2)))
    s = _sign4(i + 1)
    if slot == "Y":
        return _combine((s, _unit("Y", i)), (-s, _unit("Y", i - 1)))
    return _combine((s, _unit("Z", i)), (s, _unit("Z", i - 1)))


def _delta_to_xyz(slot, i):
    if slot == "X":
        return _combine(*((Fraction(1, _sign4(i - 2 * j)), _unit("X", i - 2 * j)) for j in range(i // 2 + 1)))
    if slot == "Y":
        return _combine(*((Fraction(1, _sign4(j + 1)), _unit("Y", j)) for j in range(i + 1)))
    sign = (-1) ** (i + 1)
    return _combine(*((Fraction(sign, 4 ** (j + 1)), _unit("Z", j)) for j in range(i + 1)))


def _delta_to_ab(slot, i):
    if slot == "X":
        terms = []
        for j in range(i // 2 + 1):
            n = 2 * i - 4 * j
            terms.append((Fraction(1, _sign4(i - 2 * j)), _combine((1, _a(n)), (4, _b_even(n - 2)))))
        return _combine(*terms)
    terms = []
    sign = 1 if slot == "Y" else -1
    for j in range(i + 1):
        inner = _combine(
            (1, _a(2 * j + 1)),
            (2, _a(2 * j)),
            (4 * sign, _a(2 * j - 1)),
            (-2 * sign, _b_even(2 * j)),
        )
        if slot == "Y":
            coef = Fraction(1, _sign4(j + 1))
        else:
            coef = Fraction((-1) ** (i + 1), 4 ** (j + 1))
        terms.append((coef, inner))
    return _combine(*terms)


def _ab_to_delta(slot, i):
    s = _sign4(i)
    if slot == "A_even":
        return _combine((s, _unit("X", i)), (s, _unit("Y", i - 1)), (-s, _unit("Z", i - 1)))
    if slot == "B_even":
        return _combine((s, _unit("X", i - 1)), (s, _unit("Y", i)), (-s, _unit("Z", i)))
    c = -2 * s
    return _combine((c, _unit("X", i)), (c, _unit("Y", i)), (c, _unit("Z", i)))


_TRANSITIONS = {
    (Basis.AB, Basis.XYZ): _ab_to_xyz,
    (Basis.XYZ, Basis.AB): _xyz_to_ab,
    (Basis.XYZ, Basis.DELTA): _xyz_to_delta,
    (Basis.DELTA, Basis.XYZ): _delta_to_xyz,
    (Basis.DELTA, Basis.AB): _delta_to_ab,
    (Basis.AB, Basis.DELTA): _ab_to_delta,
}


def transition(c: Coords, to_basis) -> Coords:
    """Re-express coordinates in another basis at the same prime level."""
    to_basis = Basis(to_basis)
    if to_basis is c.basis:
        return c
    rule = _TRANSITIONS[c.basis, to_basis]
    entries = _combine(*((coef, rule(slot, i)) for (slot, i), coef in c.entries.items()))
    return Coords(to_basis, c.prime_level, entries)


# ---------------------------------------------------------------------------
# structure constants


def _ab_table(s, i, s2, j):
    """[s_i, s2_j] for the AB basis; None if the pair is handled by antisymmetry."""
    A_e, B_e, A_o = "A_even", "B_even", "A_odd"
    if s == A_e and s2 == A_e:
        if i == j or (i >= 1 and j >= 1):
            return {}
        if i == 0:
            return _combine((4, _unit(A_o, j - 1)))
        return None
    if s == B_e and s2 == A_e:
        if j == 0:
            return _unit(A_o, i)
        if i == 0:
            return _unit(A_o, j)
        return _combine((1, _unit(A_o, i + j)), (-16, _unit(A_o, i + j - 2)))
    if s == B_e and s2 == B_e:
        if i == j or (i >= 1 and j >= 1):
            return {}
        if j == 0:
            return _combine((4, _unit(A_o, i - 1)))
        return None
    if s == A_e and s2 == A_o:
        if i == 0:
            return _unit(A_e, j + 1)
        return _combine((1, _unit(A_e, i + j + 1)), (4, _unit(B_e, i + j)))
    if s == A_o and s2 == B_e:
        if j == 0:
            return _unit(B_e, i + 1)
        return _combine((1, _unit(B_e, i + j + 1)), (4, _unit(A_e, i + j)))
    if s == A_o and s2 == A_o:
        return {}
    return None


def _xyz_table(s, i, s2, j):
    if s == s2:
        return {}
    X, Y, Z = "X", "Y", "Z"
    if s == X and s2 in (Y, Z):
        o = s2
        sg = 1 if o == Y else -1  # the z-table flips the sign of every o-term and of 4 x_i
        if j == 0:
            if i == 0:
                return _combine((1, _unit(X, 1)), (2 * sg, _unit(o, 0)), (-4 * sg, _unit(X, 0)))
            if i == 1:
                return _combine(
                    (1, _unit(X, 2)),
                    (2 * sg, _unit(o, 1)),
                    (-4 * sg, _unit(X, 1)),
                    (-8, _unit(o, 0)),
                    (16, _unit(X, 0)),
                )
            return _combine(
                (1, _unit(X, i + 1)),
                (2 * sg, _unit(o, i)),
                (-4 * sg, _unit(X, i)),
                (-8, _unit(o, i - 1)),
            )
        if i <= 1:
            return _combine((1, _unit(X, i + j + 1)), (2 * sg, _unit(o, i + j)))
        return _combine(
            (1, _unit(X, i + j + 1)),
            (2 * sg, _unit(o, i + j)),
            (-16, _unit(X, i + j - 1)),
            (-32 * sg, _unit(o, i + j - 2)),
        )
    if s == Y and s2 == Z:
        if i == 0 and j == 0:
            return _combine((1, _unit(Z, 1)), (-1, _unit(Y, 1)))
        if j == 0:
            return _combine(
                (1, _unit(Z, i + 1)), (-1, _unit(Y, i + 1)), (4, _unit(Z, i)), (-4, _unit(Y, i))
            )
        if i == 0:
            return _combine(
                (1, _unit(Z, j + 1)), (-1, _unit(Y, j + 1)), (-4, _unit(Z, j)), (4, _unit(Y, j))
            )
        return _combine(
            (1, _unit(Z, i + j + 1)),
            (-1, _unit(Y, i + j + 1)),
            (-16, _unit(Z, i + j - 1)),
            (16, _unit(Y, i + j - 1)),
        )
    return None


def _delta_table(s, i, s2, j):
    if s == s2:
        return {}
    n = i + j
    if (s, s2) == ("X", "Y"):
        return _combine((1, _unit("X", n)), (1, _unit("X", n + 1)), (2, _unit("Y", n)))
    if (s, s2) == ("X", "Z"):
        return _combine((1, _unit("X", n + 1)), (-1, _unit("X", n)), (-2, _unit("Z", n)))
    if (s, s2) == ("Y", "Z"):
        return _combine(
            (1, _unit("Y", n)), (-1, _unit("Y", n + 1)), (1, _unit("Z", n)), (1, _unit("Z", n + 1))
        )
    return None


_TABLES = {Basis.AB: _ab_table, Basis.XYZ: _xyz_table, Basis.DELTA: _delta_table}


def bracket_oracle(basis, s: str, i: int, s2: str, j: int, prime_level: int = 0) -> Coords:
    """Tabulated bracket of two basis vectors; reversed pairs use antisymmetry."""
    basis = Basis(basis)
    for slot in (s, s2):
        if slot not in SLOTS[basis]:
            raise ValueError(f"slot {slot!r} does not belong to basis {basis.value}")
    if i < 0 or j < 0:
        raise ValueError("basis indices are non-negative")
    table = _TABLES[basis]
    entries = table(s, i, s2, j)
    if entries is None:
        swapped = table(s2, j, s, i)
        if swapped is None:
            raise AssertionError(f"no table entry for [{s}{i}, {s2}{j}]")
        entries = _combine((-1, swapped))
    return Coords(basis, prime_level, entries)


def bracket_oracle_ab(s, i, s2, j, prime_level=0):
    return bracket_oracle(Basis.AB, s, i, s2, j, prime_level)


def bracket_oracle_xyz(s, i, s2, j, prime_level=0):
    return bracket_oracle(Basis.XYZ, s, i, s2, j, prime_level)


def bracket_oracle_delta(s, i, s2, j, prime_level=0):
    return bracket_oracle(Basis.DELTA, s, i, s2, j, prime_level)


# ---------------------------------------------------------------------------
# recursion for the like-element basis, and the spaces U_n


def reconstruct_xyz(max_i: int = 8):
    """Rebuild bx_i, by_i, bz_i from the generators by brackets alone.

    Returns ``(name, passed, lhs, rhs)`` checks comparing each step, and
    each pair of alternative recursions, against the closed forms.
    """
    if max_i < 2:
        raise ValueError("max_i must be at least 2")
    x12, x03 = std_gen((1, 2)), std_gen((0, 3))
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    checks = []

    def check(name, got, want):
        checks.append((name, got == want, got, want))

    def closed(kind, i):
        return seq_xyz(kind, i, "closed")

    bx = {0: x12}
    by = {0: bracket(x03, x12) + x12 * 2 - x03 * 2}
    bz = {0: bracket(x03, x12) + x12 * 2 + x03 * 2}
    for kind, table in (("x", bx), ("y", by), ("z", bz)):
        check(f"{kind}0 from generators", table[0], closed(kind, 0))

    x0, y0, z0 = bx[0], by[0], bz[0]
    x1a = bracket(x0, y0) - y0 * 2 + x0 * 4
    x1b = bracket(x0, z0) + z0 * 2 - x0 * 4
    check("x1 via [x0,y0]", x1a, closed("x", 1))
    check("x1 via [x0,z0]", x1b, closed("x", 1))
    check("x1 alternatives agree", x1a, x1b)
    bx[1] = x1a

    common = bx[1] * 2 + y0 * 2 - z0 * 2 + bracket(bx[1], y0) * quarter - bracket(bx[1], z0) * quarter
    by[1] = common - bracket(y0, z0) * half
    bz[1] = common + bracket(y0, z0) * half
    check("y1 recursion", by[1], closed("y", 1))
    check("z1 recursion", bz[1], closed("z", 1))

    x2a = bracket(bx[1], y0) - by[1] * 2 + bx[1] * 4 + y0 * 8 - x0 * 16
    x2b = bracket(bx[1], z0) + bz[1] * 2 - bx[1] * 4 + z0 * 8 - x0 * 16
    check("x2 via [x1,y0]", x2a, closed("x", 2))
    check("x2 via [x1,z0]", x2b, closed("x", 2))
    check("x2 alternatives agree", x2a, x2b)
    bx[2] = x2a

    for i in range(2, max_i + 1):
        base = bx[i] * 2 + bracket(bx[i], y0) * quarter - bracket(bx[i], z0) * quarter
        by[i] = base - bracket(by[i - 1], z0) * half
        bz[i] = base + bracket(y0, bz[i - 1]) * half
        check(f"y{i} recursion", by[i], closed("y", i))
        check(f"z{i} recursion", bz[i], closed("z", i))
        if i == max_i:
            break
        nxt_a = bracket(bx[i], y0) - by[i] * 2 + bx[i] * 4 + by[i - 1] * 8
        nxt_b = bracket(bx[i], z0) + bz[i] * 2 - bx[i] * 4 + bz[i - 1] * 8
        check(f"x{i + 1} via [x{i},y0]", nxt_a, closed("x", i + 1))
        check(f"x{i + 1} via [x{i},z0]", nxt_b, closed("x", i + 1))
        check(f"x{i + 1} alternatives agree", nxt_a, nxt_b)
        bx[i + 1] = nxt_a
    return checks


def _proportional(u: LoopElem, v: LoopElem) -> bool:
    """Whether u, v are linearly dependent over Q."""
    if u.is_zero() or v.is_zero():
        return True
    # find a component where u is nonzero and compare the ratio elsewhere
    for cu, cv in zip(u.components(), v.components()):
        if cu:
            if not cv:
                return False
            # the ratio must be a rational constant
            try:
                ratio = cv / cu
            except ArithmeticError:
                return False
            if not (ratio.is_polynomial() and len(ratio.num) <= 1):
                return False
            c = ratio.num[0] if ratio.num else Fraction(0)
            return u * c == v
    return False


def u_space_basis(n: int, prime_level: int = 0):
    """Basis of U_n = span{a_n, b_n}: ``[a_n]`` for odd n, ``[a_n, b_n]`` for even n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    a = seq_ab("a", n, "closed", prime_level)
    b = seq_ab("b", n, "closed", prime_level)
    if n % 2:
        assert not a.is_zero() and b == -a, "odd-index elements must satisfy b_n = -a_n != 0"
        return [a]
    assert not _proportional(a, b), "even-index elements must be independent"
    return [a, b]
