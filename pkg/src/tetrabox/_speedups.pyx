# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernels; same contract as ``_pykernels``."""

from fractions import Fraction
from math import lcm

cdef object ZERO = Fraction(0)


cpdef tuple trim(object coeffs):
    cdef Py_ssize_t n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


cpdef tuple add(tuple a, tuple b):
    cdef Py_ssize_t k
    cdef list out
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k in range(len(b)):
        out[k] = out[k] + b[k]
    return trim(out)


cpdef tuple sub(tuple a, tuple b):
    cdef Py_ssize_t k
    cdef Py_ssize_t n = max(len(a), len(b))
    cdef list out = [ZERO] * n
    for k in range(len(a)):
        out[k] = a[k]
    for k in range(len(b)):
        out[k] = out[k] - b[k]
    return trim(out)


cpdef tuple neg(tuple a):
    return tuple([-c for c in a])


cpdef tuple scale(tuple a, object c):
    if not c:
        return ()
    return tuple([x * c for x in a])


cdef tuple _to_ints(tuple a):
    """Integer numerators over a common denominator."""
    cdef object den = 1
    cdef object c
    for c in a:
        den = lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in a], den


cdef tuple _from_ints(list nums, object den):
    return trim([Fraction(n, den) for n in nums])


cpdef tuple mul(tuple a, tuple b):
    # integer convolution, normalising each coefficient once at the end
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    cdef list ia, ib, out
    cdef object da, db, x
    if na == 0 or nb == 0:
        return ()
    ia, da = _to_ints(a)
    ib, db = _to_ints(b)
    out = [0] * (na + nb - 1)
    for i in range(na):
        x = ia[i]
        if not x:
            continue
        for j in range(nb):
            out[i + j] += x * ib[j]
    return _from_ints(out, da * db)


cpdef tuple divmod_(tuple a, tuple b):
    cdef Py_ssize_t db, k, j
    cdef list rem, quo
    cdef object lead, c, q
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = Fraction(b[db])
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
            rem[k - db + j] = rem[k - db + j] - q * b[j]
    return trim(quo), trim(rem[:db])


cpdef tuple divide_linear(tuple a, object r):
    cdef Py_ssize_t n = len(a), k
    cdef list quo, ia
    cdef object acc, den
    if n == 0:
        return (), ZERO
    if Fraction(r).denominator == 1:
        # integer root: synthetic division stays in the integers
        r = int(r)
        ia, den = _to_ints(a)
        quo = [0] * (n - 1)
        acc = 0
        for k in range(n - 1, 0, -1):
            acc = acc * r + ia[k]
            quo[k - 1] = acc
        return _from_ints(quo, den), Fraction(acc * r + ia[0], den)
    quo = [ZERO] * (n - 1)
    acc = ZERO
    for k in range(n - 1, 0, -1):
        acc = acc * r + a[k]
        quo[k - 1] = acc
    return trim(quo), acc * r + a[0]


cpdef object evaluate(tuple a, object x):
    cdef Py_ssize_t k, n = len(a)
    cdef list ia
    cdef object den, p, q, acc, qpow
    if n == 0:
        return ZERO
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    ia, den = _to_ints(a)
    # sum ia[k] p^k q^(n-1-k) by Horner in integers
    acc = 0
    qpow = 1
    for k in range(n - 1, -1, -1):
        acc = acc * p + ia[k] * qpow
        qpow *= q
    return Fraction(acc, den * qpow // q)


cpdef tuple shift(tuple a, object c):
    """Taylor shift a(t + c) using integer arithmetic throughout."""
    cdef Py_ssize_t n = len(a), i, k
    cdef list b
    cdef object den, p, q, top
    if not c or n == 0:
        return trim(a)
    c = Fraction(c)
    p, q = c.numerator, c.denominator
    b, den = _to_ints(a)
    # b(t) <- a(t / q) * q^(n-1), then shift by the integer p, then undo
    if q != 1:
        for k in range(n):
            b[k] *= q ** (n - 1 - k)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            b[k] += p * b[k + 1]
    if q == 1:
        return _from_ints(b, den)
    top = den * q ** (n - 1)
    return trim([Fraction(b[k] * q ** k, top) for k in range(n)])
