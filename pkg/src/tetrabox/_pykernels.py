"""Pure-Python polynomial kernels.

Polynomials are tuples of coefficients ordered from the constant term up,
with no trailing zeros; the zero polynomial is ``()``.  Coefficients are
:class:`fractions.Fraction` (ints are accepted on input).

``_speedups.pyx`` implements the same functions; keep the two in step.
"""

from fractions import Fraction

ZERO = Fraction(0)


def trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return trim(out)


def sub(a, b):
    n = max(len(a), len(b))
    out = [ZERO] * n
    for k, c in enumerate(a):
        out[k] = c
    for k, c in enumerate(b):
        out[k] -= c
    return trim(out)


def neg(a):
    return tuple(-c for c in a)


def scale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def mul(a, b):
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def divmod_(a, b):
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = Fraction(b[-1])
    if len(rem) <= db:
        return (), trim(rem)
    quo = [ZERO] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        q = c / lead
        quo[k - db] = q
        for j in range(db + 1):
            rem[k - db + j] -= q * b[j]
    return trim(quo), trim(rem[:db])


def divide_linear(a, r):
    """Synthetic division by ``t - r``; returns (quotient, remainder value)."""
    if not a:
        return (), ZERO
    n = len(a)
    quo = [ZERO] * (n - 1)
    acc = ZERO
    for k in range(n - 1, 0, -1):
        acc = acc * r + a[k]
        quo[k - 1] = acc
    rem = acc * r + a[0]
    return trim(quo), rem


def evaluate(a, x):
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def shift(a, c):
    """Coefficients of ``a(t + c)`` (Taylor shift)."""
    out = list(a)
    n = len(out)
    if not c:
        return tuple(out)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            out[k] += c * out[k + 1]
    return trim(out)
