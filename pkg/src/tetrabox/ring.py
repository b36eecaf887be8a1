"""The coefficient ring A = F[t, 1/t, 1/(t-1)] over the rationals.

Every element is stored as ``num(t) / (t**a * (t-1)**b)`` with ``num`` coprime
to both ``t`` (unless ``a == 0``) and ``t - 1`` (unless ``b == 0``).  That form
is unique, so equality is structural.

The order-three automorphism ``prime`` sends ``t`` to ``1 - 1/t``; writing
``t', t''`` for the images of ``t``, the space A has the basis
``{1} + {t^i, t'^i, t''^i : i >= 1}`` and splits three ways (frames 0, 1, 2)::

    A = F[t]   + (1 - t')F[t']  + t''F[t'']
      = F[t']  + (1 - t'')F[t'']+ tF[t]
      = F[t''] + (1 - t)F[t]    + t'F[t']
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational

from . import kernels as K
from .errors import DomainError

__all__ = [
    "RingElem",
    "CanonExpansion",
    "ZERO",
    "ONE",
    "T",
    "as_rational",
    "ring_add",
    "ring_mul",
    "ring_prime",
    "poly_in",
    "as_poly_in",
    "canon_expand",
    "reassemble",
    "split_frame",
    "split_frame_polys",
    "frame_subspaces",
    "in_subspace",
    "format_rational",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected a rational number, got {type(x).__name__}")


def format_rational(q: Fraction) -> str:
    q = as_rational(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@lru_cache(maxsize=None)
def _tm1_pow(k: int) -> tuple:
    """Coefficients of (t - 1)**k."""
    return tuple(Fraction((-1) ** (k - j) * comb(k, j)) for j in range(k + 1))


def _t_pow_times(poly: tuple, k: int) -> tuple:
    if not poly or not k:
        return poly
    return (Fraction(0),) * k + poly


def _strip_linear_factors(num: tuple):
    """Write nonzero ``num`` as ``core * t**m * (t-1)**n`` with core coprime to both."""
    m = n = 0
    while len(num) > 1 and not num[0]:
        num, m = num[1:], m + 1
    while len(num) > 1:
        quo, rem = K.divide_linear(num, 1)
        if rem:
            break
        num, n = quo, n + 1
    return num, m, n


class RingElem:
    """An element of A in reduced form ``num / (t**pow_t * (t-1)**pow_tm1)``."""

    __slots__ = ("num", "pow_t", "pow_tm1", "_hash")

    def __init__(self, num=(), pow_t: int = 0, pow_tm1: int = 0):
        if pow_t < 0 or pow_tm1 < 0:
            raise ValueError("denominator exponents must be non-negative")
        coeffs = K.trim(tuple(as_rational(c) for c in num))
        if not coeffs:
            pow_t = pow_tm1 = 0
        else:
            while pow_t and not coeffs[0]:
                coeffs = coeffs[1:]
                pow_t -= 1
            while pow_tm1:
                quo, rem = K.divide_linear(coeffs, 1)
                if rem:
                    break
                coeffs = quo
                pow_tm1 -= 1
        object.__setattr__(self, "num", coeffs)
        object.__setattr__(self, "pow_t", pow_t)
        object.__setattr__(self, "pow_tm1", pow_tm1)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    @classmethod
    def const(cls, c) -> "RingElem":
        return cls((as_rational(c),))

    @classmethod
    def poly(cls, coeffs) -> "RingElem":
        """The polynomial with ``coeffs`` (constant term first)."""
        return cls(coeffs)

    @classmethod
    def coerce(cls, x) -> "RingElem":
        if isinstance(x, RingElem):
            return x
        return cls.const(x)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.pow_t == 0 and self.pow_tm1 == 0

    def _unit_parts(self):
        """(c, m, n) with self == c * t**m * (t-1)**n, or None if not a unit."""
        if not self.num:
            return None
        core, m, n = _strip_linear_factors(self.num)
        if len(core) > 1:
            return None
        return core[0], m - self.pow_t, n - self.pow_tm1

    def is_unit(self) -> bool:
        return self._unit_parts() is not None

    @property
    def degree(self) -> int:
        """Degree of the numerator (-1 for zero)."""
        return len(self.num) - 1

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RingElem):
            try:
                other = RingElem.coerce(other)
            except TypeError:
                return NotImplemented
        return (self.num, self.pow_t, self.pow_tm1) == (other.num, other.pow_t, other.pow_tm1)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.num, self.pow_t, self.pow_tm1)))
        return self._hash

    def __add__(self, other):
        try:
            other = RingElem.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        a = max(self.pow_t, other.pow_t)
        b = max(self.pow_tm1, other.pow_tm1)
        return RingElem(K.add(self._lift(a, b), other._lift(a, b)), a, b)

    __radd__ = __add__

    def _lift(self, a: int, b: int) -> tuple:
        """Numerator over the wider denominator t**a (t-1)**b."""
        num = self.num
        if b > self.pow_tm1:
            num = K.mul(num, _tm1_pow(b - self.pow_tm1))
        return _t_pow_times(num, a - self.pow_t)

    def __neg__(self):
        return RingElem(K.neg(self.num), self.pow_t, self.pow_tm1)

    def __sub__(self, other):
        try:
            other = RingElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RingElem.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RingElem):
            return RingElem(K.mul(self.num, other.num), self.pow_t + other.pow_t,
                            self.pow_tm1 + other.pow_tm1)
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return RingElem(K.scale(self.num, c), self.pow_t, self.pow_tm1)

    __rmul__ = __mul__

    def inverse(self) -> "RingElem":
        """Inverse of a unit ``c * t**m * (t-1)**n``; DomainError otherwise."""
        parts = self._unit_parts()
        if parts is None:
            raise DomainError(f"{self} is not invertible in F[t, 1/t, 1/(t-1)]")
        c, m, n = parts
        num = K.scale(_tm1_pow(max(-n, 0)), 1 / c)
        return RingElem(_t_pow_times(num, max(-m, 0)), max(m, 0), max(n, 0))

    def __truediv__(self, other):
        """Exact division; the quotient must lie in A."""
        try:
            other = RingElem.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in A")
        core, m, n = _strip_linear_factors(other.num)
        quo, rem = K.divmod_(self.num, core)
        if rem:
            raise DomainError(f"({self}) / ({other}) is not an element of F[t, 1/t, 1/(t-1)]")
        # self / other == quo * t**(a - m) * (t-1)**(b - n) / (t**pow_t (t-1)**pow_tm1)
        a, b = other.pow_t - m, other.pow_tm1 - n
        num = _t_pow_times(K.mul(quo, _tm1_pow(max(b, 0))), max(a, 0))
        return RingElem(num, self.pow_t + max(-a, 0), self.pow_tm1 + max(-b, 0))

    def __rtruediv__(self, other):
        return RingElem.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def prime(self, k: int = 1) -> "RingElem":
        return ring_prime(self, k)

    def evaluate(self, x) -> Fraction:
        """Value at a rational point other than 0 and 1."""
        x = as_rational(x)
        den = x ** self.pow_t * (x - 1) ** self.pow_tm1
        if not den:
            raise ZeroDivisionError(f"element has a pole at t = {x}")
        return K.evaluate(self.num, x) / den

    # -- rendering --------------------------------------------------------

    def __repr__(self):
        return f"RingElem({self})"

    def __str__(self):
        numer = render_poly(self.num)
        if self.is_polynomial():
            return numer
        factors = []
        if self.pow_t:
            factors.append(f"t^{self.pow_t}")
        if self.pow_tm1:
            factors.append(f"(t-1)^{self.pow_tm1}")
        return f"({numer})/({'*'.join(factors)})"


def render_poly(coeffs, var: str = "t") -> str:
    """Descending-degree rendering, e.g. ``2*t^2 - 3*t + 1``."""
    terms = [(k, c) for k, c in enumerate(coeffs) if c]
    if not terms:
        return "0"
    parts = []
    for idx, (k, c) in enumerate(reversed(terms)):
        mag = format_rational(abs(c))
        if k == 0:
            body = mag
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == "1" else f"{mag}*{mono}"
        if idx == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


ZERO = RingElem()
ONE = RingElem.const(1)
T = RingElem((0, 1))


def ring_add(a: RingElem, b: RingElem) -> RingElem:
    return a + b


def ring_mul(a: RingElem, b: RingElem) -> RingElem:
    return a * b


def ring_prime(a: RingElem, k: int = 1) -> RingElem:
    """Apply ``t -> 1 - 1/t`` exactly ``k mod 3`` times."""
    k %= 3
    for _ in range(k):
        a = _prime_once(a)
    return a


def _prime_once(a: RingElem) -> RingElem:
    if not a.num:
        return a
    # num(1 - 1/t) = N(t) / t**d with N the reversal of num(1 - s)
    d = len(a.num) - 1
    shifted = K.shift(a.num, 1)
    flipped = [(-c if k & 1 else c) for k, c in enumerate(shifted)]
    flipped += [Fraction(0)] * (d + 1 - len(flipped))
    big_n = tuple(reversed(flipped))
    # t'**a (t'-1)**b = (t-1)**a t**-a (-1)**b t**-b
    if a.pow_tm1 & 1:
        big_n = K.neg(big_n)
    e = a.pow_t + a.pow_tm1 - d
    if e >= 0:
        return RingElem(_t_pow_times(big_n, e), 0, a.pow_t)
    return RingElem(big_n, -e, a.pow_t)


def poly_in(coeffs, k: int) -> RingElem:
    """The polynomial ``sum coeffs[i] * (t^{(k)})**i`` where t^{(k)} is t primed k times."""
    return ring_prime(RingElem(coeffs), k)


def as_poly_in(a: RingElem, k: int):
    """Coefficients of ``a`` as a polynomial in t primed ``k`` times, or None."""
    back = ring_prime(a, -k)
    return back.num if back.is_polynomial() else None


# ---------------------------------------------------------------------------
# canonical basis {1, t^i, t'^i, t''^i}


@dataclass(frozen=True)
class CanonExpansion:
    """Coordinates in the basis ``{1} + {t^i, t'^i, t''^i : i >= 1}``.

    The three maps hold nonzero coefficients only.
    """

    c0: Fraction = Fraction(0)
    t_part: dict = field(default_factory=dict)
    tp_part: dict = field(default_factory=dict)
    tpp_part: dict = field(default_factory=dict)

    def part(self, k: int) -> dict:
        return (self.t_part, self.tp_part, self.tpp_part)[k]

    def part_poly(self, k: int) -> tuple:
        """Constant-free polynomial (coefficient tuple) carried by part ``k``."""
        d = self.part(k)
        if not d:
            return ()
        out = [Fraction(0)] * (max(d) + 1)
        for i, c in d.items():
            out[i] = c
        return tuple(out)


def _series_inv_power(n_terms: int, m: int, sign: int):
    """First ``n_terms`` coefficients of (1 - sign*s)**-m (sign = +1 or -1)."""
    return [Fraction(comb(n + m - 1, m - 1) * sign ** n) for n in range(n_terms)]


def _truncated_product(p, series, n_terms):
    out = [Fraction(0)] * n_terms
    for i, c in enumerate(p[:n_terms]):
        if not c:
            continue
        for j in range(n_terms - i):
            out[i + j] += c * series[j]
    return out


def canon_expand(a: RingElem) -> CanonExpansion:
    """Unique coordinates of ``a`` in the basis ``{1, t^i, t'^i, t''^i}``."""
    pa, pb = a.pow_t, a.pow_tm1
    num = a.num
    # principal part at t = 0: num(t)/(t-1)**b as a series in t
    if pa:
        series = _series_inv_power(pa, pb, 1) if pb else [Fraction(1)] + [Fraction(0)] * (pa - 1)
        if pb & 1:
            series = [-c for c in series]
        low = _truncated_product(num, series, pa)  # low[k] multiplies t**(k - pa)
    else:
        low = []
    # principal part at t = 1: num(1+s)/(1+s)**a as a series in s = t - 1
    if pb:
        series = _series_inv_power(pb, pa, -1) if pa else [Fraction(1)] + [Fraction(0)] * (pb - 1)
        high = _truncated_product(K.shift(num, 1), series, pb)  # high[k] multiplies s**(k - pb)
    else:
        high = []

    # polynomial part: (num - low*(t-1)**b - high(t-1)*t**a) / (t**a (t-1)**b)
    rest = num
    if low:
        rest = K.sub(rest, K.mul(K.trim(low), _tm1_pow(pb)))
    if high:
        rest = K.sub(rest, _t_pow_times(K.shift(K.trim(high), -1), pa))
    den = _t_pow_times(_tm1_pow(pb), pa)
    poly, rem = K.divmod_(rest, den)
    assert not rem, "partial fraction remainder must vanish"

    c0 = poly[0] if poly else Fraction(0)
    t_part = {k: c for k, c in enumerate(poly) if k and c}
    tp_part: dict = {}
    tpp_part: dict = {}
    # t**-i = (1 - t')**i
    for k, alpha in enumerate(low):
        if not alpha:
            continue
        i = pa - k
        c0 += alpha
        for j in range(1, i + 1):
            tp_part[j] = tp_part.get(j, Fraction(0)) + alpha * comb(i, j) * (-1) ** j
    # (t-1)**-j = (-t'')**j
    for k, beta in enumerate(high):
        if beta:
            j = pb - k
            tpp_part[j] = beta * (-1) ** j
    return CanonExpansion(
        c0=c0,
        t_part=t_part,
        tp_part={k: v for k, v in tp_part.items() if v},
        tpp_part=tpp_part,
    )


def reassemble(e: CanonExpansion) -> RingElem:
    total = RingElem.const(e.c0)
    for k in range(3):
        poly = e.part_poly(k)
        if poly:
            total = total + poly_in(poly, k)
    return total


# ---------------------------------------------------------------------------
# the three direct-sum splittings

# kinds: "poly" -> F[x], "one_minus" -> (1 - x)F[x], "times" -> xF[x]
_FRAME_KINDS = ("poly", "one_minus", "times")


def frame_subspaces(frame: int):
    """(kind, prime level) of the three summands of ``frame``."""
    frame %= 3
    return tuple((kind, (frame + j) % 3) for j, kind in enumerate(_FRAME_KINDS))


def split_frame_polys(a: RingElem, frame: int):
    """Summands of ``a`` in ``frame`` as coefficient tuples.

    Returns ``(P, Q, R)`` where ``P`` is a polynomial in t^{(frame)}, ``Q``
    in t^{(frame+1)} vanishing at 1 and ``R`` in t^{(frame+2)} vanishing
    at 0 (superscripts count primes).
    """
    frame %= 3
    e = canon_expand(a)
    # constant-free parts carried by t^{(frame)}, t^{(frame+1)}, t^{(frame+2)}
    own = e.part_poly(frame)
    nxt = e.part_poly((frame + 1) % 3)
    last = e.part_poly((frame + 2) % 3)
    shift_const = K.evaluate(nxt, 1)
    p = K.add((e.c0 + shift_const,), own)
    q = K.sub(nxt, (shift_const,))
    return p, q, last


def split_frame(a: RingElem, frame: int):
    """The unique decomposition of ``a`` along the direct sum ``frame``."""
    frame %= 3
    polys = split_frame_polys(a, frame)
    return tuple(poly_in(p, (frame + j) % 3) for j, p in enumerate(polys))


def in_subspace(a: RingElem, kind: str, level: int) -> bool:
    """Membership in F[x], (1-x)F[x] or xF[x] for x = t primed ``level`` times."""
    coeffs = as_poly_in(a, level)
    if coeffs is None:
        return False
    if kind == "poly":
        return True
    if kind == "one_minus":
        return not K.evaluate(coeffs, 1)
    if kind == "times":
        return not coeffs or not coeffs[0]
    raise ValueError(f"unknown subspace kind {kind!r}")
