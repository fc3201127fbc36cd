"""Color-symmetric rational functions and the shuffle product.

Elements live in the canonical pole form: a Laurent numerator over a
sub-multiset of the adjacent-color grid binomials (z_{i,a} q - z_{i+1,b}/q),
with wrap-around colors carrying the t-powers of the reindexing convention.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, product as iproduct

from .rf import (RF, ResidualPole, VK_Z, bino_expand, mono_degree, mono_from,
                 normalize_linear, zp_mul, zp_scale, zvar)


def _ceil_div(a, b):
    return -((-a) // b)


def _floor_div(a, b):
    return a // b


def reindex(field, a, window_start):
    """Window slot a (any integer color) -> ((color, copy), multiplier).

    The variable is z_{color, copy} and the slot equals multiplier * variable,
    with multiplier = t^(-2 n floor((a-1)/n)).
    """
    n = field.n
    color = (a - 1) % n + 1
    copy = _ceil_div(a - window_start + 1, n)
    mult = field.t(-2 * n * _floor_div(a - 1, n))
    return (color, copy), mult


def zeta_exponent(n, i, j):
    d1 = 1 if (i - j) % n == 0 else 0
    d2 = 1 if (i + 1 - j) % n == 0 else 0
    return d1 - d2


def zeta_linear_factors(field, iu, iv, varu, varv):
    """zeta(z_u / z_v) for raw integer colors iu, iv -> (num_forms, den_forms).

    Each form is a list of (var, MonoS) terms.
    """
    n = field.n
    e = zeta_exponent(n, iu, iv)
    if e == 0:
        return [], []
    t2 = 2 * n * _ceil_div(iu - iv, n)
    zeros = (0,) * n
    f_top = [(varu, (1, 1, t2, zeros)), (varv, (-1, -1, 0, zeros))]
    f_bot = [(varu, (1, 0, t2, zeros)), (varv, (-1, 0, 0, zeros))]
    if e == 1:
        return [f_top], [f_bot]
    return [f_bot], [f_top]


def zeta_value(field, iu, valu, iv, valv):
    """zeta at scalar arguments (value of a color-iu variable over color-iv)."""
    n = field.n
    e = zeta_exponent(n, iu, iv)
    if e == 0:
        return field.one
    tpow = field.t(2 * n * _ceil_div(iu - iv, n))
    q = field.q()
    top = valu * q * tpow - valv * q.inv()
    bot = valu * tpow - valv
    if e == 1:
        return top / bot
    return bot / top


def grid_binomials(field, hdeg):
    """Full canonical denominator multiset of Eq.-shuf shape for degree hdeg."""
    n = field.n
    out = []
    zeros = (0,) * n
    for i in range(1, n + 1):
        inext = i % n + 1
        wrap = -2 * n if i == n else 0
        for a in range(1, hdeg[i - 1] + 1):
            for b in range(1, hdeg[inext - 1] + 1):
                form = [(zvar(i, a), (1, 1, 0, zeros)),
                        (zvar(inext, b), (-1, -1, wrap, zeros))]
                _, bino = normalize_linear(field, form)
                out.append(bino)
    return out


class ShuffleElement:
    __slots__ = ("field", "sign", "hdeg", "rf")

    def __init__(self, field, sign, hdeg, rf):
        self.field = field
        self.sign = sign
        self.hdeg = tuple(hdeg)
        self.rf = rf

    # -- basics -------------------------------------------------------------
    @staticmethod
    def unit(field, sign):
        return ShuffleElement(field, sign, (0,) * field.n, RF.const(field, field.one))

    @staticmethod
    def zero(field, sign, hdeg=None):
        return ShuffleElement(field, sign, hdeg or (0,) * field.n, RF.zero(field))

    @staticmethod
    def from_monomial(field, sign, color, exponent, coeff=None):
        """Single-variable element coeff * z_{color,1}^exponent."""
        hdeg = [0] * field.n
        hdeg[color - 1] = 1
        num = {mono_from(zvar(color, 1), exponent) if exponent else ():
               coeff if coeff is not None else field.one}
        return ShuffleElement(field, sign, tuple(hdeg), RF(field, num))

    def is_zero(self):
        return self.rf.is_zero()

    @property
    def vdeg(self):
        return self.rf.total_degree()

    def nvars(self):
        return sum(self.hdeg)

    def varlist(self):
        return [zvar(i, a) for i in range(1, self.field.n + 1)
                for a in range(1, self.hdeg[i - 1] + 1)]

    def scale(self, s):
        return ShuffleElement(self.field, self.sign, self.hdeg, self.rf.mul_scalar(s))

    def add(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.sign != other.sign or self.hdeg != other.hdeg:
            raise ValueError("cannot add elements of different degree or sign")
        return ShuffleElement(self.field, self.sign, self.hdeg,
                              self.rf.add(other.rf).canonicalize())

    def sub(self, other):
        return self.add(ShuffleElement(other.field, other.sign, other.hdeg,
                                       other.rf.neg()))

    def equals(self, other):
        if self.is_zero() and other.is_zero():
            return True
        if self.sign != other.sign or self.hdeg != other.hdeg:
            return False
        return self.rf.equals(other.rf)

    def canonicalize(self):
        return ShuffleElement(self.field, self.sign, self.hdeg,
                              self.rf.canonicalize())

    def serialize(self):
        return (f"sign={'+' if self.sign > 0 else '-'} hdeg={list(self.hdeg)} "
                f"value= {self.rf.serialize()}")

    def __repr__(self):
        return f"ShuffleElement({self.serialize()})"


def shuffle_mul(R, S, guard_vars=10):
    """The zeta-twisted symmetrized product, over minimal coset representatives.

    For minus-sign elements the algebra is the opposite one, so the formula
    is applied to the swapped pair.
    """
    if R.sign != S.sign:
        raise ValueError("shuffle product requires matching sign tags")
    if R.sign < 0:
        R, S = S, R
    f = R.field
    if R.is_zero() or S.is_zero():
        return ShuffleElement.zero(f, R.sign,
                                   tuple(a + b for a, b in zip(R.hdeg, S.hdeg)))
    n = f.n
    k, kp = R.hdeg, S.hdeg
    K = tuple(a + b for a, b in zip(k, kp))
    if sum(K) > guard_vars:
        raise ValueError(f"variable guard exceeded: {sum(K)} > {guard_vars}")
    if R.nvars() == 0:
        return S.scale(R.rf.num.get((), f.zero))
    if S.nvars() == 0:
        return R.scale(S.rf.num.get((), f.zero))

    per_color = []
    for i in range(n):
        per_color.append(list(combinations(range(1, K[i] + 1), k[i])))
    acc = RF.zero(f)
    for choice in iproduct(*per_color):
        mapR, mapS = {}, {}
        rvars, svars = [], []
        for i in range(1, n + 1):
            chosen = choice[i - 1]
            rest = [c for c in range(1, K[i - 1] + 1) if c not in chosen]
            for j, c in enumerate(chosen, start=1):
                mapR[zvar(i, j)] = (f.one, zvar(i, c))
                rvars.append((i, c))
            for j, c in enumerate(rest, start=1):
                mapS[zvar(i, j)] = (f.one, zvar(i, c))
                svars.append((i, c))
        term = R.rf.substitute(mapR).mul(S.rf.substitute(mapS))
        zf_num, zf_den = [], []
        for (iu, au) in rvars:
            for (iv, av) in svars:
                fn, fd = zeta_linear_factors(f, iu, iv, zvar(iu, au), zvar(iv, av))
                zf_num.extend(fn)
                zf_den.extend(fd)
        term = term.mul_linear_factors(zf_num, zf_den)
        acc = acc.add(term)
    acc = acc.canonicalize()
    for (u, v, _) in acc.den:
        if v is not None and u[1] == v[1]:
            raise ArithmeticError("same-color pole failed to cancel in shuffle product")
    return ShuffleElement(f, R.sign, K, acc)


def wheel_check(R):
    """Feigin-Odesskii wheel conditions on the Eq.-shuf numerator."""
    if R.is_zero():
        return True
    f = R.field
    n = f.n
    grid = Counter(grid_binomials(f, R.hdeg))
    own = Counter(R.rf.den)
    extra = own - grid
    if extra:
        raise ValueError("denominator is not a sub-multiset of the canonical grid")
    missing = list((grid - own).elements())
    w = (4, 1, 0)  # auxiliary wheel variable
    for i in range(1, n + 1):
        if R.hdeg[i - 1] < 2:
            continue
        for eps in (1, -1):
            m = i - eps  # z_{i-1} for eps=+1, z_{i+1} for eps=-1
            mcolor = (m - 1) % n + 1
            if R.hdeg[mcolor - 1] < 1:
                continue
            tsh = 2 * n * _floor_div(m - 1, n)
            if mcolor == i:
                continue
            sub = {
                zvar(i, 1): (f.one, w),
                zvar(i, 2): (f.q(2 * eps), w),
                zvar(mcolor, 1): (f.t(tsh), w),
            }
            num = RF(f, R.rf.num).substitute(sub)
            for b in missing:
                bf = RF(f, bino_expand(f, b)).substitute(sub)
                num = num.mul(bf)
            if not num.is_zero():
                return False
    return True


def naive_slope(R):
    total = sum(R.hdeg) * R.sign
    if total == 0:
        raise ValueError("naive slope undefined in horizontal degree 0")
    return Fraction(R.vdeg, total)


def has_slope_at_most(R, mu):
    """Existence of all scaling limits of Def. slope at threshold mu."""
    if R.is_zero():
        return True
    mu = Fraction(mu)
    f = R.field
    n = f.n
    ranges = [range(0, R.hdeg[i] + 1) for i in range(n)]
    for l in iproduct(*ranges):
        tl = sum(l)
        if tl == 0:
            continue
        scaled = {zvar(i + 1, a) for i in range(n) for a in range(1, l[i] + 1)}
        pred = scaled.__contains__
        dden_top = 0
        dden_min = 0
        for (u, v, _) in R.rf.den:
            su = u in scaled
            sv = v in scaled if v is not None else False
            dden_top += 1 if (su or sv) else 0
            dden_min += 1 if (su and sv) else 0
        if R.sign > 0:
            dnum = max(mono_degree(k, pred) for k in R.rf.num)
            if Fraction(dnum - dden_top) > mu * tl:
                return False
        else:
            dnum = min(mono_degree(k, pred) for k in R.rf.num)
            if Fraction(dnum - dden_min) < -mu * tl:
                return False
    return True


def specialize(R, assignment, mode="strict"):
    """Total or partial substitution; cancel-first divides vanishing poles."""
    rf = R.rf.substitute(assignment, cancel_first=(mode == "cancel-first"))
    if not rf.den and set(rf.num) <= {()}:
        return rf.num.get((), R.field.zero)
    return rf
