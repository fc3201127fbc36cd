"""Evaluation maps on shuffle elements: the window functionals alpha and the
parameter map rho, plus their multiplicativity laws."""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

from .rf import RF, ResidualPole, zvar
from .generators import window_vector
from .shuffle import reindex, zeta_linear_factors, zeta_value


def _ceil(x):
    return -((-x.numerator) // x.denominator)


def _floor(x):
    return x.numerator // x.denominator


def _mono_key(field, scalar):
    """Scalar monomial -> MonoS tuple."""
    (k, c), = scalar.num.items()
    return (c, k[0], k[1], tuple(k[2:]))


def window_zeta_forms(field, i, j, order="ba"):
    """Linear forms of prod zeta(z_b/z_a) (order 'ba') or zeta(z_a/z_b) over
    window pairs i <= a < b < j, written in element variables."""
    num_forms, den_forms = [], []
    for a in range(i, j):
        (ca, pa), ma = reindex(field, a, i)
        for b in range(a + 1, j):
            (cb, pb), mb = reindex(field, b, i)
            if order == "ba":
                fn, fd = zeta_linear_factors(field, b, a, ("B",), ("A",))
            else:
                fn, fd = zeta_linear_factors(field, a, b, ("A",), ("B",))
            subs = {("A",): (zvar(ca, pa), _mono_key(field, ma)),
                    ("B",): (zvar(cb, pb), _mono_key(field, mb))}
            for form in fn:
                num_forms.append(_map_form(form, subs))
            for form in fd:
                den_forms.append(_map_form(form, subs))
    return num_forms, den_forms


def _map_form(form, subs):
    out = []
    for var, m in form:
        tvar, tm = subs[var]
        c = (m[0] * tm[0], m[1] + tm[1], m[2] + tm[2],
             tuple(x + y for x, y in zip(m[3], tm[3])))
        out.append((tvar, c))
    return out


def alpha(R, i, j):
    """The linear maps of the window functionals (plus and minus cases)."""
    f = R.field
    n = f.n
    sign = R.sign
    if i == j:
        if sum(R.hdeg) == 0:
            return R.rf.num.get((), f.zero)
        return f.zero
    if R.hdeg != window_vector(n, i, j) or R.is_zero():
        return f.zero
    h = R.vdeg
    ln = j - i
    g = igcd(h, ln)
    # divide by the zeta product, then specialize
    num_f, den_f = window_zeta_forms(f, i, j, "ba" if sign > 0 else "ab")
    G = R.rf.mul_linear_factors(den_f, num_f)
    assign = {}
    for a in range(i, j):
        (c, p), mult = reindex(f, a, i)
        val = mult.inv()
        if sign < 0:
            val = val * f.q(2 * a)
        assign[zvar(c, p)] = (val, None)
    res = G.substitute(assign, cancel_first=True)
    if res.den or set(res.num) - {()}:
        raise ResidualPole("alpha specialization left unresolved variables")
    val = res.num.get((), f.zero)
    pref = (f.one - f.q(-2)) ** ln * f.qbar_pm(sign, Fraction(-g, n))
    corr = f.one
    for a in range(i, j):
        if sign > 0:
            e = _floor(Fraction(h * (a - i + 1), ln)) - _floor(Fraction(h * (a - i), ln))
            corr = corr * f.qbar_pm(+1, Fraction(-2 * a * e, n))
        else:
            e = _ceil(Fraction(h * (a - i), ln)) - _ceil(Fraction(h * (a - i + 1), ln))
            corr = corr * f.qbar_pm(-1, Fraction(-2 * a * e, n))
    return val * pref * corr


def alpha_on_window(R, u, v):
    """alpha at every window representative [u;v) mod (n,n); zero on mismatch."""
    return alpha(R, u, v)


def pseudo_splitting(n, i, j, hd1, hd2):
    """The unique s with hdeg1 = [s;j), hdeg2 = [i;s) if it exists, else None."""
    for s in range(i, j + 1):
        if window_vector(n, s, j) == tuple(hd1) and \
           window_vector(n, i, s) == tuple(hd2):
            return s
    return None


def alpha_pseudo_rhs(R1, R2, i, j):
    """RHS of the alpha multiplicativity law for the product R1*R2 on [i;j)."""
    f = R1.field
    n = f.n
    sign = R1.sign
    s = pseudo_splitting(n, i, j, R1.hdeg, R2.hdeg)
    if s is None:
        return f.zero
    h1 = R1.vdeg if sign > 0 else -R1.vdeg
    h2 = R2.vdeg if sign > 0 else -R2.vdeg
    a1 = alpha(R1, s, j)
    a2 = alpha(R2, i, s)
    return a1 * a2 * f.qbar_pm(sign, Fraction(h1 * (s - i) - h2 * (j - s), n))


# ---------------------------------------------------------------------------
# rho: specialization z_{i,a} -> x_i q^{2(a-1)}, with a fractional q-power tag.

class QFrac:
    """A Scalar together with an extra q^(fraction) tag (exact bookkeeping)."""

    __slots__ = ("scalar", "qexp")

    def __init__(self, scalar, qexp=Fraction(0)):
        qexp = Fraction(qexp)
        f = scalar.field
        ip = _floor(qexp)
        if ip:
            scalar = scalar * f.q(ip)
            qexp -= ip
        self.scalar = scalar
        self.qexp = qexp

    def __mul__(self, other):
        if isinstance(other, QFrac):
            return QFrac(self.scalar * other.scalar, self.qexp + other.qexp)
        return QFrac(self.scalar * other, self.qexp)

    def __truediv__(self, other):
        if isinstance(other, QFrac):
            return QFrac(self.scalar / other.scalar, self.qexp - other.qexp)
        return QFrac(self.scalar / other, self.qexp)

    def __eq__(self, other):
        return self.qexp == other.qexp and self.scalar == other.scalar

    def is_zero(self):
        return self.scalar.is_zero()

    def serialize(self):
        tag = f" * q^({self.qexp})" if self.qexp else ""
        return self.scalar.serialize() + tag


def rho(R):
    """The x-parameter evaluation map; returns a QFrac."""
    f = R.field
    n = f.n
    if R.is_zero():
        return QFrac(f.zero)
    h = R.vdeg
    k = R.hdeg
    assign = {}
    for i in range(1, n + 1):
        for a in range(1, k[i - 1] + 1):
            assign[zvar(i, a)] = (f.x(i) * f.q(2 * (a - 1)), None)
    res = R.rf.substitute(assign, cancel_first=True)
    if res.den or set(res.num) - {()}:
        raise ResidualPole("rho specialization left unresolved variables")
    val = res.num.get((), f.zero)
    zp = f.one
    for i in range(1, n + 1):
        for ip in range(1, n + 1):
            for a in range(1, k[i - 1] + 1):
                for ap in range(1, k[ip - 1] + 1):
                    if a > ap:
                        zp = zp * zeta_value(f, i, f.x(i) * f.q(2 * a),
                                             ip, f.x(ip) * f.q(2 * ap))
    return QFrac(val / zp, Fraction(-h * sum(k), n))


def rho_product_power(field, hdeg1, vdeg1, l, vdeg2):
    """q^{(h1 n l - h2 |k|)/n} of the rho multiplicativity law."""
    return QFrac(field.one,
                 Fraction(vdeg1 * field.n * l - vdeg2 * sum(hdeg1), field.n))


# ---------------------------------------------------------------------------
# Closed forms of rho on the window families, with their exponent constants.

def rho_exp_const(family, mu, i, j, n):
    """The rational q-exponent constants of the rho closed forms."""
    mu = Fraction(mu)
    ln = j - i
    if family in ("A", "Abar"):
        m = ln // n
        if family == "A":
            s = sum(_ceil(mu * n * k) for k in range(1, m + 1))
            return (2 * mu * ln + 1) * m - 2 * s - Fraction(mu * ln * ln, n)
        s = sum(_floor(mu * n * k) for k in range(1, m + 1))
        return (2 * mu * ln - 1) * m - 2 * s - Fraction(mu * ln * ln, n)
    m = -((-ln) // n) - 1  # ceil(ln/n) - 1
    if family == "B":
        s = sum(_ceil(mu * n * k) for k in range(1, m + 1))
        return (2 * mu * ln + 1) * m + 1 - 2 * s - Fraction(mu * ln * ln, n) - ln
    s = sum(_floor(mu * n * k) for k in range(1, m + 1))
    return (2 * mu * ln - 1) * m - 1 - 2 * s - Fraction(mu * ln * ln, n) + ln


def rho_closed_form(field, family, i, j, h):
    """Closed form of rho on the family element of window [i;j) and vdeg h."""
    f = field
    n = f.n
    ln = j - i
    mu = Fraction(h, ln)
    dji = 1 if ln % n == 0 else 0
    use_ceil = family in ("A", "Bbar")
    num = f.one
    for a in range(i, j):
        if use_ceil:
            e = _ceil(mu * (a - i + 1)) - _ceil(mu * (a - i))
        else:
            e = _floor(mu * (a - i + 1)) - _floor(mu * (a - i))
        if e:
            abar = (a - 1) % n + 1
            num = num * (f.x(abar) * f.t(2 * abar)) ** e
    den = f.one
    q2 = f.q(2)
    for a in range(i + 1, j):
        xa1, xa = f.x_ext(a - 1), f.x_ext(a)
        if family in ("A", "Bbar"):
            den = den * (f.one - xa1 * q2 / xa)
        else:
            den = den * (f.one - xa / (xa1 * q2))
    val = num / den
    if dji and family in ("A", "Abar"):
        xi1, xi = f.x_ext(i - 1), f.x_ext(i)
        if family == "A":
            val = val * (f.one - xi1 / xi) / (f.one - xi1 * q2 / xi)
        else:
            val = val * (f.one - xi / xi1) / (f.one - xi / (xi1 * q2))
    c = rho_exp_const(family, mu, i, j, n)
    return QFrac(val, c)
