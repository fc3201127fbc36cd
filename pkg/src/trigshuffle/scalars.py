"""The exact coefficient field F = Q(q, t, x_1..x_n) with t = qbar^(1/n).

Scalars are reduced fractions of integer-coefficient Laurent polynomials in
the generators q < t < x_1 < ... < x_n (exponent tuples of width 2+n).
Canonical form: numerator and denominator share no polynomial factor or
integer content, the denominator has per-variable minimum exponent 0, and
the lexicographically least denominator monomial has positive coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

from .polycore import padd, psub, pneg, pscale, pmul, pmul_term


# ---------------------------------------------------------------------------
# polynomial helpers (dict[tuple[int,...], int])

def _int_content(p):
    g = 0
    for v in p.values():
        g = igcd(g, abs(v))
        if g == 1:
            return 1
    return g


def _idiv(p, c):
    if c == 1:
        return p
    return {k: v // c for k, v in p.items()}


def _min_exps(p, width):
    mins = [None] * width
    for k in p:
        for i, e in enumerate(k):
            if mins[i] is None or e < mins[i]:
                mins[i] = e
    return tuple(0 if m is None else m for m in mins)


def _shift(p, mono):
    if not any(mono):
        return p
    return {tuple(a + b for a, b in zip(k, mono)): v for k, v in p.items()}


def _deg_in(p, i):
    return max(k[i] for k in p)


def _coeffs_in(p, i, width):
    """Split p as a dict: exponent of variable i -> sub-polynomial (var i zeroed)."""
    out = {}
    for k, v in p.items():
        e = k[i]
        kk = k[:i] + (0,) + k[i + 1:]
        d = out.setdefault(e, {})
        d[kk] = v
    return out


def _join_coeffs(coeffs, i):
    out = {}
    for e, sub in coeffs.items():
        for k, v in sub.items():
            out[k[:i] + (e,) + k[i + 1:]] = v
    return out


def _lex_min_key(p):
    return min(p)


def _sign_fix(p):
    """Flip sign so the lex-least monomial has positive coefficient."""
    if p and p[_lex_min_key(p)] < 0:
        return pneg(p), -1
    return p, 1


def poly_divexact(a, b):
    """Exact division of a by b (both nonneg-exponent, b != 0); None if inexact."""
    if not a:
        return {}
    rem = dict(a)
    lb = max(b)
    cb = b[lb]
    q = {}
    while rem:
        la = max(rem)
        m = tuple(x - y for x, y in zip(la, lb))
        if any(e < 0 for e in m):
            return None
        ca = rem[la]
        if ca % cb:
            return None
        c = ca // cb
        q[m] = c
        rem = psub(rem, pmul_term(b, m, c))
    return q


def _prem(a, b, i, width):
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, wrt variable i."""
    ca = _coeffs_in(a, i, width)
    cb = _coeffs_in(b, i, width)
    db = max(cb)
    lcb = cb[db]
    steps_left = max(ca) - db + 1
    while ca:
        da = max(ca)
        if da < db:
            break
        lca = ca[da]
        # ca = ca*lcb - cb*lca*x_i^(da-db)
        new = {}
        for e, sub in ca.items():
            new[e] = pmul(sub, lcb)
        for e, sub in cb.items():
            t = pmul(sub, lca)
            ee = e + da - db
            new[ee] = psub(new.get(ee, {}), t)
        ca = {e: s for e, s in new.items() if s}
        steps_left -= 1
    if steps_left > 0 and ca:
        f = _ppow(lcb, steps_left)
        ca = {e: pmul(sub, f) for e, sub in ca.items()}
    return _join_coeffs(ca, i)


def poly_gcd(a, b, width):
    """gcd of two nonneg-exponent integer polynomials, positive-lex-least-normalized."""
    if not a:
        g, _ = _sign_fix(dict(b))
        return g
    if not b:
        g, _ = _sign_fix(dict(a))
        return g
    ma, mb = _min_exps(a, width), _min_exps(b, width)
    gm = tuple(min(x, y) for x, y in zip(ma, mb))
    a = _shift(a, tuple(-e for e in ma))
    b = _shift(b, tuple(-e for e in mb))
    ca, cb = _int_content(a), _int_content(b)
    gi = igcd(ca, cb)
    a, b = _idiv(a, ca), _idiv(b, cb)
    g = _gcd_primitive(a, b, width)
    g = pmul_term(g, gm, gi)
    g, _ = _sign_fix(g)
    return g


def _ppow(p, e):
    out = None
    base = p
    while True:
        if e & 1:
            out = dict(base) if out is None else pmul(out, base)
        e >>= 1
        if not e:
            return out
        base = pmul(base, base)


def _pp_in(p, i, width):
    """Primitive part of p wrt variable i (divide out gcd of i-coefficients)."""
    cp = _coeffs_in(p, i, width)
    cont = _multi_gcd(list(cp.values()), width)
    if len(cont) == 1 and not any(next(iter(cont))) and cont[next(iter(cont))] == 1:
        return p, cont
    return _join_coeffs({e: poly_divexact(s, cont) for e, s in cp.items()}, i), cont


def _gcd_primitive(a, b, width):
    """gcd of two primitive (integer-content 1, nonneg) polynomials.

    Subresultant PRS in one variable at a time; contents recurse.
    """
    if a == b:
        return dict(a)
    if len(a) == 1 and len(b) == 1:
        ka, kb = next(iter(a)), next(iter(b))
        return {tuple(min(x, y) for x, y in zip(ka, kb)): 1}
    one = {(0,) * width: 1}
    shared = [i for i in range(width)
              if any(k[i] for k in a) and any(k[i] for k in b)]
    if not shared:
        return one
    i = min(shared, key=lambda v: min(_deg_in(a, v), _deg_in(b, v)))
    ppa, conta = _pp_in(a, i, width)
    ppb, contb = _pp_in(b, i, width)
    gamma = _gcd_primitive(conta, contb, width)
    if _deg_in(ppa, i) < _deg_in(ppb, i):
        ppa, ppb = ppb, ppa
    g, h = one, one
    while True:
        if _deg_in(ppb, i) == 0:
            return gamma
        delta = _deg_in(ppa, i) - _deg_in(ppb, i)
        r = _prem(ppa, ppb, i, width)
        if not r:
            break
        divisor = pmul(g, _ppow(h, delta)) if delta else g
        ppa, ppb = ppb, poly_divexact(r, divisor)
        g = _coeffs_in(ppa, i, width)[_deg_in(ppa, i)]
        if delta == 1:
            h = dict(g)
        elif delta > 1:
            h = poly_divexact(_ppow(g, delta), _ppow(h, delta - 1))
    ppb, _ = _pp_in(ppb, i, width)
    mb = _min_exps(ppb, width)
    ppb = _shift(ppb, tuple(-e for e in mb))
    ppb = _idiv(ppb, _int_content(ppb))
    res = pmul(gamma, ppb)
    return res


def _multi_gcd(polys, width):
    g = {}
    for p in polys:
        g = poly_gcd(g, p, width)
        if len(g) == 1 and not any(next(iter(g))) and g[next(iter(g))] == 1:
            return g
    return g


# ---------------------------------------------------------------------------

class Scalar:
    """An element of F in canonical reduced form.  Immutable."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den, _canonical=False):
        self.field = field
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = field._normalize(num, den)
        self._hash = None

    # -- predicates --------------------------------------------------------
    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.den == self.field._one_poly and self.num == self.field._one_poly

    def is_monomial(self):
        return len(self.num) == 1 and self.den == self.field._one_poly

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        f = self.field
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return Scalar(f, padd(self.num, other.num), self.den)
        return Scalar(f, padd(pmul(self.num, other.den), pmul(other.num, self.den)),
                      pmul(self.den, other.den))

    def __sub__(self, other):
        f = self.field
        if not other.num:
            return self
        if not self.num:
            return -other
        if self.den == other.den:
            return Scalar(f, psub(self.num, other.num), self.den)
        return Scalar(f, psub(pmul(self.num, other.den), pmul(other.num, self.den)),
                      pmul(self.den, other.den))

    def __neg__(self):
        return Scalar(self.field, pneg(self.num), self.den, _canonical=True)

    def __mul__(self, other):
        f = self.field
        if not self.num or not other.num:
            return f.zero
        one = f._one_poly
        if self.den is one is other.den or (self.den == one and other.den == one):
            return Scalar(f, pmul(self.num, other.num), one)
        return Scalar(f, pmul(self.num, other.num), pmul(self.den, other.den))

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.field, self.den, self.num)

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, e):
        f = self.field
        if e == 0:
            return f.one
        if e < 0:
            return self.inv() ** (-e)
        base, out = self, f.one
        while True:
            if e & 1:
                out = out * base
            e >>= 1
            if not e:
                return out
            base = base * base

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()),
                               frozenset(self.den.items())))
        return self._hash

    # -- output -------------------------------------------------------------
    def serialize(self):
        f = self.field
        s = _poly_text(self.num, f)
        if self.den != f._one_poly:
            s += " / " + _poly_text(self.den, f)
        return s

    def __repr__(self):
        return f"Scalar({self.serialize()})"


def _poly_text(p, field):
    if not p:
        return "0"
    names = ["q", "t"] + [f"x{i}" for i in range(1, field.n + 1)]
    parts = []
    for k in sorted(p):
        c = p[k]
        atoms = [str(c)]
        for name, e in zip(names, k):
            if e:
                atoms.append(f"{name}^{e}")
        parts.append(" * ".join(atoms))
    return " + ".join(parts)


class Field:
    """Constructors for Scalars at a fixed rank n (t means qbar^(1/n))."""

    def __init__(self, n):
        if n < 2:
            raise ValueError("rank n must be at least 2")
        self.n = n
        self.width = 2 + n
        self._zero_mono = (0,) * self.width
        self._one_poly = {self._zero_mono: 1}
        self.zero = Scalar(self, {}, self._one_poly, _canonical=True)
        self.one = Scalar(self, dict(self._one_poly), dict(self._one_poly),
                          _canonical=True)

    # -- canonicalization ---------------------------------------------------
    def _normalize(self, num, den):
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return {}, self._one_poly
        w = self.width
        if den == self._one_poly:
            return num, self._one_poly
        if len(den) == 1:
            (mono, c), = den.items()
            num = _shift(num, tuple(-e for e in mono))
            if c < 0:
                num, c = pneg(num), -c
            g = igcd(_int_content(num), c)
            return _idiv(num, g), {self._zero_mono: c // g}
        mn, md = _min_exps(num, w), _min_exps(den, w)
        base = tuple(min(a, b, 0) for a, b in zip(mn, md))
        a = _shift(num, tuple(-e for e in base))
        b = _shift(den, tuple(-e for e in base))
        g = poly_gcd(a, b, w)
        if len(g) > 1 or any(next(iter(g))) or g[next(iter(g))] != 1:
            a = poly_divexact(a, g)
            b = poly_divexact(b, g)
        gi = igcd(_int_content(a), _int_content(b))
        if gi > 1:
            a, b = _idiv(a, gi), _idiv(b, gi)
        mb = _min_exps(b, w)
        if any(mb):
            b = _shift(b, tuple(-e for e in mb))
            a = _shift(a, tuple(-e for e in mb))
        b, sgn = _sign_fix(b)
        if sgn < 0:
            a = pneg(a)
        return a, b

    # -- constructors -------------------------------------------------------
    def scalar(self, num, den=None):
        return Scalar(self, num, den if den is not None else dict(self._one_poly))

    def integer(self, c):
        if c == 0:
            return self.zero
        return Scalar(self, {self._zero_mono: int(c)}, self._one_poly,
                      _canonical=True)

    def fraction(self, fr):
        fr = Fraction(fr)
        return Scalar(self, {self._zero_mono: fr.numerator},
                      {self._zero_mono: fr.denominator})

    def monomial(self, c=1, qe=0, te=0, xe=None):
        if c == 0:
            return self.zero
        exps = [qe, te] + list(xe if xe is not None else [0] * self.n)
        return Scalar(self, {tuple(exps): int(c)}, self._one_poly)

    def q(self, e=1):
        return self.monomial(1, qe=e)

    def t(self, e=1):
        return self.monomial(1, te=e)

    def x(self, i, e=1):
        xe = [0] * self.n
        xe[i - 1] = e
        return self.monomial(1, xe=xe)

    def x_ext(self, i, e=1):
        """x_i for any integer i, via x_{i+n} = x_i * qbar^{-2}."""
        r = (i - 1) % self.n + 1
        shift = (i - r) // self.n  # x_i = x_r * qbar^{-2*shift}
        xe = [0] * self.n
        xe[r - 1] = e
        return self.monomial(1, te=-2 * self.n * shift * e, xe=xe)

    def qbar_power(self, m):
        """qbar^m = t^{m n}; m rational with m*n integral."""
        m = Fraction(m)
        e = m * self.n
        if e.denominator != 1:
            raise ValueError(f"qbar^{m} is not in the field (n={self.n})")
        return self.t(int(e))

    def qbar_pm(self, sign, m):
        """qbar_+^m = t^{mn}; qbar_-^m = (q t)^{-mn}."""
        m = Fraction(m)
        e = m * self.n
        if e.denominator != 1:
            raise ValueError(f"qbar_pm^{m} is not in the field (n={self.n})")
        e = int(e)
        if sign > 0:
            return self.t(e)
        return self.monomial(1, qe=-e, te=-e)
