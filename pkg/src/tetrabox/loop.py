"""The three-point sl2 loop algebra in vector-valued form.

An element ``x (x) f + y (x) g + z (x) h`` is stored as ``LoopElem(f, g, h)``
where ``x, y, z`` is the equitable basis of sl2::

    [x, y] = 2x + 2y,   [y, z] = 2y + 2z,   [z, x] = 2z + 2x.

Standard generators are given through the isomorphism from the tetrahedron
algebra (``std_gen``), so every tetrahedron computation here happens on the
loop side.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import UnsupportedPermutation
from .ring import ONE, T, ZERO, RingElem, frame_subspaces, in_subspace, ring_prime, split_frame

__all__ = [
    "LoopElem",
    "NineGrid",
    "ROWS",
    "COLUMNS",
    "PAIRS",
    "bracket",
    "loop_prime",
    "std_gen",
    "permute_generator",
    "canonical_pair",
    "verify_tetra_relations",
    "is_like",
    "is_like_structural",
    "is_like_definitional",
    "decompose_X",
    "decompose_nine",
    "is_in_onsager",
    "cell_contains",
]


@dataclass(frozen=True)
class LoopElem:
    f: RingElem = ZERO
    g: RingElem = ZERO
    h: RingElem = ZERO

    def __post_init__(self):
        for name in ("f", "g", "h"):
            value = getattr(self, name)
            if not isinstance(value, RingElem):
                object.__setattr__(self, name, RingElem.coerce(value))

    @classmethod
    def x(cls, a=ONE):
        return cls(RingElem.coerce(a), ZERO, ZERO)

    @classmethod
    def y(cls, a=ONE):
        return cls(ZERO, RingElem.coerce(a), ZERO)

    @classmethod
    def z(cls, a=ONE):
        return cls(ZERO, ZERO, RingElem.coerce(a))

    def components(self):
        return (self.f, self.g, self.h)

    def is_zero(self) -> bool:
        return not (self.f or self.g or self.h)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        if not isinstance(other, LoopElem):
            return NotImplemented
        return LoopElem(self.f + other.f, self.g + other.g, self.h + other.h)

    def __radd__(self, other):
        # lets sum() start from 0
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return LoopElem(-self.f, -self.g, -self.h)

    def __sub__(self, other):
        if not isinstance(other, LoopElem):
            return NotImplemented
        return LoopElem(self.f - other.f, self.g - other.g, self.h - other.h)

    def __mul__(self, c):
        """Scalar or right A-module action ``u * a``."""
        if isinstance(c, LoopElem):
            return NotImplemented
        try:
            return LoopElem(self.f * c, self.g * c, self.h * c)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def prime(self, k: int = 1) -> "LoopElem":
        return loop_prime(self, k)

    def __str__(self):
        return f"x⊗({self.f}) + y⊗({self.g}) + z⊗({self.h})"

    def __repr__(self):
        return f"LoopElem({self.f!s}, {self.g!s}, {self.h!s})"

    def to_json(self) -> dict:
        return {"f": str(self.f), "g": str(self.g), "h": str(self.h)}


def bracket(u: LoopElem, v: LoopElem) -> LoopElem:
    p = u.f * v.g - u.g * v.f
    q = u.g * v.h - u.h * v.g
    r = u.h * v.f - u.f * v.h
    return LoopElem(2 * (p + r), 2 * (p + q), 2 * (q + r))


def loop_prime(u: LoopElem, k: int = 1) -> LoopElem:
    """``(f, g, h) -> (h', f', g')`` applied ``k mod 3`` times."""
    k %= 3
    if k == 0:
        return u
    comps = [ring_prime(c, k) for c in u.components()]
    # each application rotates components one slot to the right
    return LoopElem(*(comps[(j - k) % 3] for j in range(3)))


# ---------------------------------------------------------------------------
# standard generators

_TM = T - 1
_BASE_GENS = {
    (1, 2): LoopElem.x(),
    (2, 3): LoopElem.y(),
    (3, 1): LoopElem.z(),
    (0, 3): LoopElem(ZERO, T, _TM),
    (0, 1): LoopElem(ring_prime(T, 1) - 1, ZERO, ring_prime(T, 1)),
    (0, 2): LoopElem(ring_prime(T, 2), ring_prime(T, 2) - 1, ZERO),
}

# the six unordered generator pairs, in display order
PAIRS = ((1, 2), (2, 3), (3, 1), (0, 3), (0, 1), (0, 2))


def canonical_pair(pair) -> tuple:
    """Representative in PAIRS and the sign relating them."""
    i, j = pair
    if i == j or not {i, j} <= {0, 1, 2, 3}:
        raise ValueError(f"x_{i}{j} is not a standard generator")
    if (i, j) in _BASE_GENS:
        return (i, j), 1
    return (j, i), -1


def std_gen(pair) -> LoopElem:
    """Image of the standard generator x_ij; reversed pairs give the negation."""
    rep, sign = canonical_pair(pair)
    gen = _BASE_GENS[rep]
    return gen if sign == 1 else -gen


_CYCLE = {0: 0, 1: 2, 2: 3, 3: 1}


def permute_generator(pair, perm=(1, 2, 3)):
    """Apply a power of the permutation (123) to the indices of x_ij.

    ``perm`` is a cycle tuple; only (), (1, 2, 3) and (1, 3, 2) (and their
    rotations) are supported.
    """
    cyc = tuple(perm)
    if cyc in ((), (1,), (2,), (3,)):
        power = 0
    elif cyc in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        power = 1
    elif cyc in ((1, 3, 2), (3, 2, 1), (2, 1, 3)):
        power = 2
    else:
        raise UnsupportedPermutation(f"permutation {perm} is outside the cyclic group <(123)>")
    i, j = pair
    for _ in range(power):
        i, j = _CYCLE[i], _CYCLE[j]
    return i, j


def _complement(pair):
    rest = sorted({0, 1, 2, 3} - set(pair))
    return tuple(rest)


def verify_tetra_relations():
    """Check the defining relations on the twelve generator images.

    Returns a list of ``(name, passed, lhs, rhs)`` tuples.
    """
    checks = []
    gens = {p: std_gen(p) for p in permutations(range(4), 2)}
    for i, j in permutations(range(4), 2):
        lhs = gens[i, j] + gens[j, i]
        checks.append((f"antisymmetry x{i}{j}+x{j}{i}=0", lhs.is_zero(), lhs, LoopElem()))
    for h, i, j in permutations(range(4), 3):
        lhs = bracket(gens[h, i], gens[i, j])
        rhs = gens[h, i] * 2 + gens[i, j] * 2
        checks.append((f"[x{h}{i},x{i}{j}]=2x{h}{i}+2x{i}{j}", lhs == rhs, lhs, rhs))
    for h, i in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
        j, k = _complement((h, i))
        a, b = gens[h, i], gens[j, k]
        ab = bracket(a, b)
        lhs = bracket(a, bracket(a, ab))
        rhs = ab * 4
        checks.append((f"Dolan-Grady x{h}{i} on x{j}{k}", lhs == rhs, lhs, rhs))
    t = T
    images = {
        ((1, 2), (0, 3)): LoopElem(RingElem.const(2), 2 * t, 2 * (1 - t)),
        ((2, 3), (0, 1)): LoopElem(2 * (1 - ring_prime(t, 1)), RingElem.const(2), 2 * ring_prime(t, 1)),
        ((3, 1), (0, 2)): LoopElem(2 * ring_prime(t, 2), 2 * (1 - ring_prime(t, 2)), RingElem.const(2)),
    }
    for (p, q), expected in images.items():
        lhs = bracket(gens[p], gens[q])
        name = f"[x{p[0]}{p[1]},x{q[0]}{q[1]}] image"
        checks.append((name, lhs == expected, lhs, expected))
    return checks


# ---------------------------------------------------------------------------
# x_ij-likeness

# pair -> (base pair, number of primes taking the base pair to it)
_ROTATION = {
    (1, 2): ((1, 2), 0),
    (2, 3): ((1, 2), 1),
    (3, 1): ((1, 2), 2),
    (0, 3): ((0, 3), 0),
    (0, 1): ((0, 3), 1),
    (0, 2): ((0, 3), 2),
}


def is_like_structural(pair, u: LoopElem) -> bool:
    """Membership of ``u`` in x_ij * A, decided componentwise."""
    rep, _ = canonical_pair(pair)
    base, k = _ROTATION[rep]
    v = loop_prime(u, -k)
    if base == (1, 2):
        return not v.g and not v.h
    return not v.f and T * v.h == (T - 1) * v.g


def is_like_definitional(pair, u: LoopElem) -> bool:
    """Commutes with x_ij and satisfies Dolan-Grady with x_hk."""
    rep, _ = canonical_pair(pair)
    gen = std_gen(rep)
    if bracket(gen, u):
        return False
    other = std_gen(_complement(rep))
    once = bracket(other, u)
    return bracket(other, bracket(other, once)) == once * 4


def is_like(pair, u: LoopElem) -> bool:
    return is_like_structural(pair, u)


# ---------------------------------------------------------------------------
# decompositions

ROWS = ("X12", "X23", "X31")
COLUMNS = ("O", "O'", "O''")

# row -> (component index, frame); frame summand j lands in column _COLUMN_OF[row][j]
_ROW_FRAME = {0: 0, 1: 1, 2: 2}
_COLUMN_OF = {
    0: (0, 1, 2),  # f: F[t] -> O, (1-t')F[t'] -> O', t''F[t''] -> O''
    1: (1, 2, 0),  # g: F[t'] -> O', (1-t'')F[t''] -> O'', tF[t] -> O
    2: (2, 0, 1),  # h: F[t''] -> O'', (1-t)F[t] -> O, t'F[t'] -> O'
}


def _embed(row: int, a: RingElem) -> LoopElem:
    comps = [ZERO, ZERO, ZERO]
    comps[row] = a
    return LoopElem(*comps)


def decompose_X(u: LoopElem):
    """Unique split into X12 + X23 + X31."""
    return (_embed(0, u.f), _embed(1, u.g), _embed(2, u.h))


def _cell_subspace(row: int, col: int):
    frame = _ROW_FRAME[row]
    j = _COLUMN_OF[row].index(col)
    return frame_subspaces(frame)[j]


def cell_contains(row: int, col: int, v: LoopElem) -> bool:
    """Whether ``v`` lies in the grid cell (row, column)."""
    comps = v.components()
    if any(comps[r] for r in range(3) if r != row):
        return False
    kind, level = _cell_subspace(row, col)
    return in_subspace(comps[row], kind, level)


@dataclass(frozen=True)
class NineGrid:
    """3x3 array of LoopElem; rows X12, X23, X31 and columns O, O', O''."""

    cells: tuple

    def __getitem__(self, rc):
        r, c = rc
        return self.cells[r][c]

    def row_sum(self, r: int) -> LoopElem:
        return sum(self.cells[r], LoopElem())

    def column_sum(self, c: int) -> LoopElem:
        return sum((self.cells[r][c] for r in range(3)), LoopElem())

    def total(self) -> LoopElem:
        return sum((self.row_sum(r) for r in range(3)), LoopElem())

    def nonzero_cells(self):
        return [(ROWS[r], COLUMNS[c]) for r in range(3) for c in range(3) if self.cells[r][c]]

    def to_json(self) -> dict:
        return {
            "rows": list(ROWS),
            "columns": list(COLUMNS),
            "cells": [[self.cells[r][c].to_json() for c in range(3)] for r in range(3)],
        }

    def render(self) -> str:
        lines = []
        for r in range(3):
            for c in range(3):
                lines.append(f"{ROWS[r]} ∩ {COLUMNS[c]}: {self.cells[r][c]}")
        return "\n".join(lines)


def decompose_nine(u: LoopElem) -> NineGrid:
    cells = [[LoopElem()] * 3 for _ in range(3)]
    for row, comp in enumerate(u.components()):
        parts = split_frame(comp, _ROW_FRAME[row])
        for j, part in enumerate(parts):
            cells[row][_COLUMN_OF[row][j]] = _embed(row, part)
    return NineGrid(tuple(tuple(r) for r in cells))


def is_in_onsager(u: LoopElem, k: int = 0) -> bool:
    """Membership in O, O' or O'' (k = 0, 1, 2)."""
    grid = decompose_nine(u)
    k %= 3
    return all(not grid[r, c] for r in range(3) for c in range(3) if c != k)
