"""Pure-Python kernels for Laurent term dictionaries.

A term dictionary maps integer exponents to nonzero integer coefficients.
These functions are the hot inner loops of the whole package; the module
`_laurent_cy` provides the same four functions compiled with Cython, and
`laurent` picks whichever is available at import time.
"""


def term_add(a: dict, b: dict) -> dict:
    """Return the sum of two term dictionaries, with zero entries dropped."""
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def term_mul(a: dict, b: dict) -> dict:
    """Return the product of two term dictionaries, with zero entries dropped."""
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def term_scale(a: dict, c: int) -> dict:
    """Return ``c * a``; the empty dictionary when ``c`` is zero."""
    if c == 0:
        return {}
    return {e: c * ca for e, ca in a.items()}


def term_addmul(acc: dict, a: dict, b: dict) -> None:
    """In-place update ``acc += a * b``, dropping entries that cancel."""
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = acc.get(e, 0) + ca * cb
            if s:
                acc[e] = s
            else:
                del acc[e]
