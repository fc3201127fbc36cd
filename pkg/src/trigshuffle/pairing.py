"""The bialgebra pairing by iterated residues.

The integrand R+ R- / prod zeta(z_ia/z_jb) is integrated variable by
variable (innermost first).  The contour of a color-i variable encloses
poles at z_{i,b} q^2, z_{i-1,b}, z_{i+1,b} q^{-2} (extended colors carry
t-powers which do not affect enclosure) together with the origin; all
other pole locations lie outside.
"""

from __future__ import annotations

from math import factorial

from .rf import RF, mono_from, mono_mul, monos_scalar, zvar
from .shuffle import zeta_linear_factors


class PairingError(Exception):
    pass


def _v_factors(rf, v):
    """Split den into factors involving v and the rest."""
    mine, rest = [], []
    for b in rf.den:
        u, w, c = b
        if u == v or w == v:
            mine.append(b)
        else:
            rest.append(b)
    return mine, rest


def _pole_of(field, b, v):
    """Pole location of binomial b in variable v: returns (w_or_None, C MonoS)
    with the pole at v = C*z_w (or v = C), plus the monic unit of the factor."""
    u, w, c = b
    if u == v:
        # (v - c z_w): monic in v; pole at v = c z_w
        return w, c, field.one
    # (z_u - c v) = -c (v - z_u / c)
    cc = (c[0], c[1], c[2], c[3])
    inv = (1 if cc[0] == 1 else -1, -cc[1], -cc[2], tuple(-x for x in cc[3]))
    if abs(cc[0]) != 1:
        raise PairingError("non-unit binomial coefficient in residue step")
    unit = field.monomial(-cc[0], cc[1], cc[2], list(cc[3]))
    return u, inv, unit


def _enclosed(field, vcolor, w, C):
    """Is the pole at v = C*z_w (w outer, C a q,t-monomial) inside v's contour?"""
    if w is None:
        return False
    n = field.n
    wcolor = w[1]
    qe, te = C[1], C[2]
    if any(C[3]):
        raise PairingError(f"pole location involves parameters: {C}")
    if C[0] != 1:
        return False
    if (wcolor - vcolor) % n == 0 and qe == 2 and te == 0:
        return True
    if (wcolor - (vcolor - 1)) % n == 0 and qe == 0 and \
            te == (2 * n if vcolor == 1 else 0):
        return True
    if (wcolor - (vcolor + 1)) % n == 0 and qe == -2 and \
            te == (-2 * n if vcolor == n else 0):
        return True
    return False


def _derivative(rf, v):
    """d/dv of a rational function (quotient rule over the den multiset)."""
    f = rf.field
    num_d = {}
    for mono, val in rf.num.items():
        d = dict(mono)
        e = d.get(v, 0)
        if not e:
            continue
        dd = dict(d)
        if e == 1:
            del dd[v]
        else:
            dd[v] = e - 1
        key = tuple(sorted(dd.items()))
        c = val * f.integer(e)
        prev = num_d.get(key)
        s = c if prev is None else prev + c
        if s.is_zero():
            num_d.pop(key, None)
        else:
            num_d[key] = s
    out = RF(f, num_d, rf.den)
    neg_one = f.integer(-1)
    for b in rf.den:
        u, w, c = b
        if u == v:
            term_num = {k: val * neg_one for k, val in rf.num.items()}
        elif w == v:
            cs = monos_scalar(f, c)
            term_num = {k: val * cs for k, val in rf.num.items()}
        else:
            continue
        out = out.add(RF(f, term_num, rf.den + (b,)))
    return out


def _residue_at(rf, v, w, C, mult):
    """Residue of rf/v at the order-mult pole v = C*z_w (or constant C)."""
    f = rf.field
    # divide by v: add v^{-1} to num
    g = rf.mul_mono(mono_from(v, -1))
    # multiply by (v - p)^mult: remove matching den factors, times units
    remaining = []
    removed = 0
    unit_total = f.one
    for b in g.den:
        if removed < mult:
            u, ww, c = b
            if u == v or ww == v:
                pw, pc, unit = _pole_of(f, b, v)
                if pw == w and pc == C:
                    removed += 1
                    unit_total = unit_total * unit
                    continue
        remaining.append(b)
    if removed != mult:
        raise PairingError("pole multiplicity mismatch")
    g = RF(f, g.num, remaining)
    for _ in range(mult - 1):
        g = _derivative(g, v)
    # substitute v = C z_w
    val = monos_scalar(f, C)
    g = g.substitute({v: (val, w)})
    pref = f.fraction(1) / (unit_total * f.integer(factorial(mult - 1)))
    return g.mul_scalar(pref)


def _zero_residue(rf, v):
    """Res_{v=0} rf/v: the v^0 coefficient of the expansion around v = 0."""
    f = rf.field
    mine, rest = _v_factors(rf, v)
    # layers of num by v-exponent
    layers = {}
    for mono, val in rf.num.items():
        d = dict(mono)
        e = d.pop(v, 0)
        key = tuple(sorted(d.items()))
        lay = layers.setdefault(e, {})
        prev = lay.get(key)
        s = val if prev is None else prev + val
        if s.is_zero():
            lay.pop(key, None)
        else:
            lay[key] = s
    layers = {e: lay for e, lay in layers.items() if lay}
    if not layers:
        return RF.zero(f)
    lo = min(layers)
    if lo > 0:
        return RF.zero(f)
    order = -lo
    # each factor (v - p)^... rewritten: 1/(v - p) = -(1/p) sum (v/p)^m
    # each (z_u - C v): 1/(z_u - Cv) = (1/z_u) sum (Cv/z_u)^m
    series = {0: RF(f, {(): f.one}, tuple(rest))}

    def series_mul(s1, s2up):
        out = {}
        for e1, r1 in s1.items():
            for e2, r2 in s2up.items():
                if e1 + e2 > order:
                    continue
                cur = out.get(e1 + e2)
                t = r1.mul(r2)
                out[e1 + e2] = t if cur is None else cur.add(t)
        return out

    for b in mine:
        u, w, c = b
        fac = {}
        if u == v:
            # 1/(v - c z_w) = -sum_m v^m (c z_w)^{-(m+1)}
            cs = monos_scalar(f, c).inv()
            for m in range(order + 1):
                mono = ((w, -(m + 1)),) if w is not None else ()
                coef = (cs ** (m + 1)) * f.integer(-1)
                fac[m] = RF(f, {mono: coef})
        else:
            # 1/(z_u - C v) = (1/z_u) sum_m (C v / z_u)^m
            cs = monos_scalar(f, c)
            for m in range(order + 1):
                mono = ((u, -(m + 1)),)
                fac[m] = RF(f, {mono: cs ** m})
        series = series_mul(series, fac)
    out = RF.zero(f)
    for e, lay in layers.items():
        if e > 0:
            continue
        s = series.get(-e)
        if s is not None:
            out = out.add(RF(f, lay).mul(s))
    return out


def integrate_variable(rf, v, include_zero=True):
    """The dz/(2 pi i z) integral over v's contour."""
    f = rf.field
    rf = rf.canonicalize()
    mine, _ = _v_factors(rf, v)
    # group poles by location
    locs = {}
    for b in mine:
        w, C, _unit = _pole_of(f, b, v)
        locs.setdefault((w, C), 0)
        locs[(w, C)] += 1
    total = RF.zero(f)
    for (w, C), mult in locs.items():
        if _enclosed(f, v[1], w, C):
            total = total.add(_residue_at(rf, v, w, C, mult))
    if include_zero:
        total = total.add(_zero_residue(rf, v))
    return total


def pair(Rp, Rm, guard_vars=4, include_zero=True):
    """<R+, R->: zero unless degrees are opposite; iterated residues."""
    f = Rp.field
    if Rp.sign < 0:
        Rp, Rm = Rm, Rp
    if Rp.sign < 0 or Rm.sign > 0:
        raise ValueError("pair requires one element of each sign")
    if Rp.hdeg != Rm.hdeg or Rp.is_zero() or Rm.is_zero():
        return f.zero
    if Rp.vdeg + Rm.vdeg != 0:
        return f.zero
    k = Rp.hdeg
    if sum(k) > guard_vars:
        raise ValueError("pairing variable guard exceeded")
    n = f.n
    allvars = [(i, a) for i in range(1, n + 1) for a in range(1, k[i - 1] + 1)]
    # elimination order: colors with more copies first (validated on pair1)
    allvars.sort(key=lambda ia: (-k[ia[0] - 1], ia[0], ia[1]))
    g = Rp.rf.mul(Rm.rf)
    num_f, den_f = [], []
    for (i, a) in allvars:
        for (j, b) in allvars:
            if (i, a) == (j, b):
                continue
            fn, fd = zeta_linear_factors(f, i, j, zvar(i, a), zvar(j, b))
            num_f.extend(fd)   # dividing by zeta
            den_f.extend(fn)
    g = g.mul_linear_factors(num_f, den_f).canonicalize()
    for (i, a) in allvars:
        g = integrate_variable(g, zvar(i, a), include_zero)
        g = g.canonicalize()
    if g.den or set(g.num) - {()}:
        raise PairingError("pairing did not reduce to a scalar")
    val = g.num.get((), f.zero)
    pref = (f.one - f.q(-2)) ** sum(k)
    for ki in k:
        pref = pref * f.fraction(1) / f.integer(factorial(ki))
    return val * pref


def pairing_via_alpha(R, i, j):
    """<R, E^mu_{-sign}> via the alpha functional (Eq. bonnie shape)."""
    from fractions import Fraction
    from math import gcd as igcd
    from .linmaps import alpha
    f = R.field
    a = alpha(R, i, j)
    h = R.vdeg
    g = igcd(h, j - i)
    return a * f.qbar_pm(R.sign, Fraction(g, f.n))
