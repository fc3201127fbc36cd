"""Rational functions in colored variables over the scalar field.

A value is num / prod(den) where num is a sparse Laurent polynomial in
abstract variables (Scalar coefficients) and den is a multiset of binomial
factors z_u - c*z_v whose coefficients c are invertible q,t,x-monomials.
Variables are 3-tuples (kind, a, b); kind 0 = element variable (color,
copy), 1 = window slot, 2/3 = left/right tensor slot, 4 = auxiliary.
"""

from __future__ import annotations

from collections import Counter

from .scalars import Field, Scalar

# -- variables and monomials -------------------------------------------------

VK_Z = 0        # (0, color, copy): shuffle-element variable
VK_SLOT = 1     # (1, slot, 0): window slot before reindexing
VK_L = 2        # (2, color, copy): left tensor factor
VK_R = 3        # (3, color, copy): right tensor factor
VK_AUX = 4      # (4, tag, 0): auxiliary (wheel w, residue temporaries)

EMPTY_MONO = ()


def zvar(color, copy):
    return (VK_Z, color, copy)


def mono_from(var, e=1):
    return ((var, e),)


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        s = d.get(v, 0) + e
        if s:
            d[v] = s
        else:
            del d[v]
    return tuple(sorted(d.items()))


def mono_degree(m, pred=None):
    if pred is None:
        return sum(e for _, e in m)
    return sum(e for v, e in m if pred(v))


def mono_pow(m, k):
    if k == 1:
        return m
    return tuple((v, e * k) for v, e in m)


# -- monomial scalars inside binomials ----------------------------------------

def monos_make(c, qe=0, te=0, xe=None, n=0):
    return (c, qe, te, tuple(xe) if xe else (0,) * n)


def monos_mul(a, b):
    return (a[0] * b[0], a[1] + b[1], a[2] + b[2],
            tuple(x + y for x, y in zip(a[3], b[3])))


def monos_div(a, b):
    if a[0] % b[0]:
        raise ValueError("non-integral binomial coefficient ratio")
    return (a[0] // b[0], a[1] - b[1], a[2] - b[2],
            tuple(x - y for x, y in zip(a[3], b[3])))


def monos_neg(a):
    return (-a[0],) + a[1:]


def monos_scalar(field, m):
    return field.monomial(m[0], m[1], m[2], list(m[3]))


# -- binomial factors ----------------------------------------------------------
# Binomial = (u, v, coef) meaning z_u - coef*z_v; v may be None (z_u - coef).

def bino_key(b):
    u, v, c = b
    return (u, v if v is not None else (9, 0, 0), c)


def normalize_linear(field, terms):
    """terms: list of (var_or_None, MonoS).  Returns (unit Scalar, binomial,
    or ('mono', var) when the form degenerates to a single monomial)."""
    agg = {}
    for var, m in terms:
        if m[0] == 0:
            continue
        prev = agg.get(var)
        if prev is None:
            agg[var] = m
        else:
            if prev[1:] != m[1:]:
                raise ValueError("same variable with different q,t prefactors")
            c = prev[0] + m[0]
            if c:
                agg[var] = (c,) + m[1:]
            else:
                del agg[var]
    items = sorted(agg.items(), key=lambda kv: (kv[0] is None, kv[0]))
    if not items:
        return field.zero, None
    if len(items) == 1:
        var, m = items[0]
        if var is None:
            return monos_scalar(field, m), ("const",)
        return monos_scalar(field, m), ("mono", var)
    if len(items) != 2:
        raise ValueError("not a binomial")
    (u, mu), (v, mv) = items
    unit = monos_scalar(field, mu)
    coef = monos_neg(monos_div(mv, mu))
    return unit, (u, v, coef)


def bino_expand(field, b):
    """Binomial as a 2-term polynomial dict."""
    u, v, c = b
    out = {mono_from(u): field.one}
    mv = mono_from(v) if v is not None else EMPTY_MONO
    out[mv] = -monos_scalar(field, c)
    return out


def bino_degree(b):
    return 1 if b[1] is not None else 1  # both endpoints have z-degree <= 1


# -- polynomial helpers (dict Mono -> Scalar) ---------------------------------

def zp_add(field, a, b):
    out = dict(a)
    for k, v in b.items():
        s = out.get(k)
        s = v if s is None else s + v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def zp_neg(a):
    return {k: -v for k, v in a.items()}


def zp_scale(a, s):
    if s.is_zero():
        return {}
    if s.is_one():
        return a
    return {k: v * s for k, v in a.items()}


def zp_mul(field, a, b):
    if not a or not b:
        return {}
    if len(b) < len(a):
        a, b = b, a
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = mono_mul(ka, kb)
            c = va * vb
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
    return out


def zp_mul_mono(a, mono, s=None):
    out = {}
    for k, v in a.items():
        out[mono_mul(k, mono)] = v if s is None else v * s
    return out


class ResidualPole(Exception):
    """A denominator factor vanished and did not divide the numerator."""


def zp_divexact_binomial(field, num, b):
    """Exact division of num by binomial b; None if not divisible."""
    u, v, c = b
    if not num:
        return {}
    cs = monos_scalar(field, c)
    # layers by exponent of u
    layers = {}
    for k, val in num.items():
        d = dict(k)
        e = d.pop(u, 0)
        rest = tuple(sorted(d.items()))
        layers.setdefault(e, {})[rest] = val
    lo = min(layers)
    hi = max(layers)
    if lo == hi:
        return None  # constant in u cannot be divisible by (z_u - c)
    mv = mono_from(v) if v is not None else EMPTY_MONO
    quot_layers = {}
    carry = {}
    for e in range(hi, lo, -1):
        p_e = zp_add(field, layers.get(e, {}), carry)
        quot_layers[e - 1] = p_e
        carry = zp_mul_mono(p_e, mv, cs)
    rem = zp_add(field, layers.get(lo, {}), carry)
    if rem:
        return None
    out = {}
    for e, sub in quot_layers.items():
        for rest, val in sub.items():
            k = mono_mul(rest, ((u, e),)) if e else rest
            out[k] = val
    return out


# -- the rational function -----------------------------------------------------

class RF:
    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den=()):
        self.field = field
        self.num = num
        self.den = tuple(sorted(den, key=bino_key))

    @staticmethod
    def const(field, s):
        if s.is_zero():
            return RF(field, {})
        return RF(field, {EMPTY_MONO: s})

    @staticmethod
    def zero(field):
        return RF(field, {})

    def is_zero(self):
        return not self.num

    def copy(self):
        return RF(self.field, dict(self.num), self.den)

    # -- arithmetic -------------------------------------------------------
    def mul(self, other):
        return RF(self.field, zp_mul(self.field, self.num, other.num),
                  self.den + other.den)

    def mul_scalar(self, s):
        return RF(self.field, zp_scale(self.num, s), self.den)

    def mul_mono(self, mono, s=None):
        return RF(self.field, zp_mul_mono(self.num, mono, s), self.den)

    def neg(self):
        return RF(self.field, zp_neg(self.num), self.den)

    def add(self, other):
        f = self.field
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return RF(f, zp_add(f, self.num, other.num), self.den)
        ca, cb = Counter(self.den), Counter(other.den)
        common = ca | cb
        na = self.num
        for b, k in (common - ca).items():
            for _ in range(k):
                na = zp_mul(f, na, bino_expand(f, b))
        nb = other.num
        for b, k in (common - cb).items():
            for _ in range(k):
                nb = zp_mul(f, nb, bino_expand(f, b))
        return RF(f, zp_add(f, na, nb), tuple(common.elements()))

    def sub(self, other):
        return self.add(other.neg())

    def mul_linear_factors(self, num_factors, den_factors):
        """Multiply by prod(num_factors)/prod(den_factors); factors are lists
        of (var_or_None, MonoS) linear forms."""
        f = self.field
        num = self.num
        den = list(self.den)
        extra = f.one
        for lf in num_factors:
            unit, b = normalize_linear(f, lf)
            if b is None:
                return RF.zero(f)
            if b[0] == "mono":
                num = zp_mul_mono(num, mono_from(b[1]), unit)
            else:
                num = zp_mul(f, num, bino_expand(f, b))
                extra = extra * unit
        inv_mono = EMPTY_MONO
        for lf in den_factors:
            unit, b = normalize_linear(f, lf)
            if b is None:
                raise ZeroDivisionError("zero linear factor in denominator")
            if b[0] == "mono":
                inv_mono = mono_mul(inv_mono, mono_from(b[1], -1))
                extra = extra / unit
            else:
                den.append(b)
                extra = extra / unit
        if inv_mono:
            num = zp_mul_mono(num, inv_mono)
        if not extra.is_one():
            num = zp_scale(num, extra)
        return RF(f, num, den)

    # -- canonical form ----------------------------------------------------
    def canonicalize(self):
        """Divide the numerator by denominator binomials wherever exact."""
        f = self.field
        num = self.num
        if not num:
            return RF(f, {})
        den = list(self.den)
        changed = True
        while changed and den:
            changed = False
            for i, b in enumerate(den):
                q = zp_divexact_binomial(f, num, b)
                if q is not None:
                    num = q
                    del den[i]
                    changed = True
                    break
        return RF(f, num, den)

    def cancel_same_var_pairs(self):
        """Strip binomials whose endpoints coincide after substitutions."""
        return self

    def equals(self, other):
        return self.sub(other).canonicalize().is_zero()

    # -- substitution ------------------------------------------------------
    def substitute(self, mapping, cancel_first=False):
        """mapping: var -> (Scalar, var_or_None).  Unmapped vars unchanged.

        In cancel_first mode, denominator binomials that vanish under the
        (total) assignment are divided out of the numerator first; a
        residual pole raises ResidualPole.
        """
        f = self.field
        num = self.num
        den = list(self.den)
        if cancel_first:
            progress = True
            while progress:
                progress = False
                for i, b in enumerate(den):
                    if self._bino_vanishes(b, mapping):
                        q = zp_divexact_binomial(f, num, b)
                        if q is None:
                            raise ResidualPole(f"pole at {b}")
                        num = q
                        del den[i]
                        progress = True
                        break
        # substitute numerator
        new_num = {}
        for k, val in num.items():
            mono = EMPTY_MONO
            s = val
            for var, e in k:
                img = mapping.get(var)
                if img is None:
                    mono = mono_mul(mono, ((var, e),))
                else:
                    sc, w = img
                    s = s * sc ** e
                    if w is not None:
                        mono = mono_mul(mono, ((w, e),))
            if s.is_zero():
                continue
            prev = new_num.get(mono)
            s2 = s if prev is None else prev + s
            if s2.is_zero():
                new_num.pop(mono, None)
            else:
                new_num[mono] = s2
        # substitute denominator
        new_den = []
        extra = f.one
        extra_mono = EMPTY_MONO
        for b in den:
            u, v, c = b
            iu = mapping.get(u)
            iv = mapping.get(v) if v is not None else None
            cu, wu = iu if iu is not None else (f.one, u)
            if v is None:
                cv, wv = monos_scalar(f, c), None
            else:
                cv, wv = iv if iv is not None else (f.one, v)
                cv = cv * monos_scalar(f, c)
            if wu == wv and wu is not None:
                val = cu - cv
                if val.is_zero():
                    raise ResidualPole(f"denominator vanished at {b}")
                extra = extra * val
                extra_mono = mono_mul(extra_mono, ((wu, 1),))
            elif wu is None and wv is None:
                val = cu - cv
                if val.is_zero():
                    raise ResidualPole(f"denominator vanished at {b}")
                extra = extra * val
            else:
                # rebuild a binomial from the image linear form
                terms = []
                terms.append((wu, _as_monos(f, cu)))
                terms.append((wv, monos_neg(_as_monos(f, cv))))
                unit, nb = normalize_linear(f, terms)
                extra = extra * unit
                if nb[0] == "mono":
                    extra_mono = mono_mul(extra_mono, mono_from(nb[1]))
                else:
                    new_den.append(nb)
        if extra_mono:
            new_num = zp_mul_mono(new_num, tuple((v, -e) for v, e in extra_mono))
        if not extra.is_one():
            inv = extra.inv()
            new_num = zp_scale(new_num, inv)
        return RF(f, new_num, new_den)

    def _bino_vanishes(self, b, mapping):
        f = self.field
        u, v, c = b
        iu = mapping.get(u)
        iv = mapping.get(v) if v is not None else (monos_scalar(f, (1, 0, 0, (0,) * f.n)), None)
        if iu is None or (v is not None and iv is None):
            return False
        cu, wu = iu
        if v is None:
            cv, wv = monos_scalar(f, c), None
        else:
            cv, wv = iv
            cv = cv * monos_scalar(f, c)
        if wu != wv:
            return False
        return (cu - cv).is_zero()

    # -- degrees -----------------------------------------------------------
    def total_degree(self):
        """z-degree of the (assumed homogeneous) value."""
        if not self.num:
            return 0
        degs = {mono_degree(k) for k in self.num}
        if len(degs) != 1:
            raise ValueError("numerator not homogeneous")
        return degs.pop() - len(self.den)

    def num_vars(self):
        out = set()
        for k in self.num:
            out.update(v for v, _ in k)
        for u, v, _ in self.den:
            out.add(u)
            if v is not None:
                out.add(v)
        return out

    # -- output --------------------------------------------------------------
    def serialize(self):
        parts = []
        for k in sorted(self.num):
            atoms = [f"({self.num[k].serialize()})"]
            for (kind, a, b), e in k:
                atoms.append(f"z[{kind};{a},{b}]^{e}")
            parts.append(" * ".join(atoms))
        s = " + ".join(parts) if parts else "0"
        if self.den:
            ds = []
            for u, v, c in self.den:
                uu = f"z[{u[0]};{u[1]},{u[2]}]"
                if v is None:
                    ds.append(f"({uu} - {c[0]}*q^{c[1]}*t^{c[2]}*x^{list(c[3])})")
                else:
                    vv = f"z[{v[0]};{v[1]},{v[2]}]"
                    ds.append(f"({uu} - {c[0]}*q^{c[1]}*t^{c[2]}*x^{list(c[3])}*{vv})")
            s = s + " / " + " ".join(ds)
        return s


def _as_monos(field, s):
    """Scalar (which must be a single monomial) -> MonoS tuple."""
    if len(s.num) != 1 or s.den != field._one_poly:
        raise ValueError("expected a monomial scalar")
    (k, c), = s.num.items()
    return (c, k[0], k[1], tuple(k[2:]))
