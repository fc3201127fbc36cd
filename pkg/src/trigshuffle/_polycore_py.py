"""Pure-Python kernel for integer-coefficient sparse Laurent polynomials.

A polynomial is a dict mapping exponent tuples (fixed width, ints, possibly
negative) to nonzero Python ints.  The zero polynomial is the empty dict.
These functions are the hot loop of every shuffle computation; a compiled
twin lives in _polycore_cy.pyx with the exact same signatures.
"""

IMPL = "python"


def padd(a, b):
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def psub(a, b):
    if not b:
        return dict(a)
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) - v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pneg(a):
    return {k: -v for k, v in a.items()}


def pscale(a, c):
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    return {k: v * c for k, v in a.items()}


def pmul(a, b):
    if not a or not b:
        return {}
    if len(b) < len(a):
        a, b = b, a
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            s = out.get(k, 0) + va * vb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def pmul_term(a, mono, c):
    """a * (c * X^mono)."""
    if not a or c == 0:
        return {}
    if any(mono):
        return {tuple(x + y for x, y in zip(k, mono)): v * c for k, v in a.items()}
    return pscale(a, c)
