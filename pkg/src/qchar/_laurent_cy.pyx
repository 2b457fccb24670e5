# cython: language_level=3
"""Cython kernels for Laurent term dictionaries.

Same contract as `_laurent_py`: term dictionaries map integer exponents to
nonzero integer coefficients.  Coefficients stay Python ints (they grow
without bound in bar-matrix products), so the speedup comes from compiled
dictionary iteration, not from machine arithmetic.
"""


def term_add(dict a, dict b):
    """Return the sum of two term dictionaries, with zero entries dropped."""
    cdef dict out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def term_mul(dict a, dict b):
    """Return the product of two term dictionaries, with zero entries dropped."""
    cdef dict out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def term_scale(dict a, c):
    """Return ``c * a``; the empty dictionary when ``c`` is zero."""
    cdef dict out = {}
    if c == 0:
        return out
    for e, ca in a.items():
        out[e] = c * ca
    return out


def term_addmul(dict acc, dict a, dict b):
    """In-place update ``acc += a * b``, dropping entries that cancel."""
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = acc.get(e, 0) + ca * cb
            if s:
                acc[e] = s
            else:
                del acc[e]
