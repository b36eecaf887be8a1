"""Exact computer algebra for the tetrahedron algebra.

Everything is computed on the loop side: elements are ``LoopElem`` triples
over ``A = F[t, 1/t, 1/(t-1)]`` with rational coefficients, and the
standard generators enter through ``std_gen``.
"""

from .errors import (
    DomainError,
    ExprSyntaxError,
    LinearityError,
    NotInSubalgebra,
    TetraboxError,
    UnsupportedPermutation,
)
from .kernels import BACKEND
from .loop import (
    LoopElem,
    NineGrid,
    bracket,
    decompose_nine,
    decompose_X,
    is_in_onsager,
    is_like,
    loop_prime,
    std_gen,
    verify_tetra_relations,
)
from .onsager import Basis, Coords, coords, reassemble, seq_ab, seq_xyz, delta_vec, transition
from .parse import parse, parse_value
from .ring import ONE, T, ZERO, CanonExpansion, RingElem, canon_expand, ring_prime, split_frame

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Basis",
    "CanonExpansion",
    "Coords",
    "DomainError",
    "ExprSyntaxError",
    "LinearityError",
    "LoopElem",
    "NineGrid",
    "NotInSubalgebra",
    "ONE",
    "RingElem",
    "T",
    "TetraboxError",
    "UnsupportedPermutation",
    "ZERO",
    "bracket",
    "canon_expand",
    "coords",
    "decompose_X",
    "decompose_nine",
    "delta_vec",
    "is_in_onsager",
    "is_like",
    "loop_prime",
    "parse",
    "parse_value",
    "reassemble",
    "ring_prime",
    "seq_ab",
    "seq_xyz",
    "split_frame",
    "std_gen",
    "transition",
    "verify_tetra_relations",
]
