"""Constructors for the explicit generator families of the algebra.

The window families are built symbolically in slot space (one slot per
integer a in [i, j)), reindexed to colored variables, and symmetrized over
copy permutations within each color.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product as iproduct
from math import gcd as igcd

from .rf import RF, VK_SLOT, zvar
from .scalars import Field
from .shuffle import (ShuffleElement, reindex, shuffle_mul, zeta_linear_factors)


def window_vector(n, i, j):
    v = [0] * n
    for a in range(i, j):
        v[(a - 1) % n] += 1
    return tuple(v)


def _ceil(x):
    return -((-x.numerator) // x.denominator) if isinstance(x, Fraction) else x


def _floor(x):
    return x.numerator // x.denominator if isinstance(x, Fraction) else x


def _slot(a):
    return (VK_SLOT, a, 0)


_CHAINS = {
    # factor for consecutive slots (a, a+1): returns (num_form, den_form)
    # each form is a list of (var, MonoS); num_form may be a bare monomial.
    "A": lambda a, zs: ([(_slot(a + 1), (1, 0, 0, zs))],
                        [(_slot(a + 1), (1, 0, 0, zs)), (_slot(a), (-1, 2, 0, zs))]),
    "Abar": lambda a, zs: ([(_slot(a), (1, 2, 0, zs))],
                           [(_slot(a), (1, 2, 0, zs)), (_slot(a + 1), (-1, 0, 0, zs))]),
    "B": lambda a, zs: ([(_slot(a), (1, 0, 0, zs))],
                        [(_slot(a), (1, 0, 0, zs)), (_slot(a + 1), (-1, 0, 0, zs))]),
    "Bbar": lambda a, zs: ([(_slot(a + 1), (1, 0, 0, zs))],
                           [(_slot(a + 1), (1, 0, 0, zs)), (_slot(a), (-1, 0, 0, zs))]),
}

_FAMILY_EXP = {"A": "ceil", "Bbar": "ceil", "Abar": "floor", "B": "floor"}
_FAMILY_ZETA = {"A": "ba", "Abar": "ba", "B": "ab", "Bbar": "ab"}


def build_ABBbar(field, family, sign, i, j, mu, guard_vars=10):
    """One of the four symmetrized window kernels (families A, Abar, B, Bbar)."""
    n = field.n
    mu = Fraction(mu)
    if j < i:
        raise ValueError("window must have i <= j")
    hdeg = window_vector(n, i, j)
    if (mu * (j - i)).denominator != 1:
        return ShuffleElement.zero(field, sign, hdeg)
    if j == i:
        return ShuffleElement.unit(field, sign)
    if j - i > guard_vars:
        raise ValueError("variable guard exceeded")
    zs = (0,) * n
    rnd = _ceil if _FAMILY_EXP[family] == "ceil" else _floor
    smu = mu if sign > 0 else -mu

    kernel = RF.const(field, field.one)
    mono = []
    tshift = 0
    for a in range(i, j):
        e = rnd(smu * (a - i + 1)) - rnd(smu * (a - i))
        if e:
            mono.append((_slot(a), e))
            tshift += 2 * a * e
    if mono:
        kernel = kernel.mul_mono(tuple(sorted(mono)))
    if tshift:
        kernel = kernel.mul_scalar(field.t(tshift))

    num_forms, den_forms = [], []
    chain = _CHAINS[family]
    for a in range(i, j - 1):
        nf, df = chain(a, zs)
        num_forms.append(nf)
        den_forms.append(df)
    for a in range(i, j):
        for b in range(a + 1, j):
            if _FAMILY_ZETA[family] == "ba":
                fn, fd = zeta_linear_factors(field, b, a, _slot(b), _slot(a))
            else:
                fn, fd = zeta_linear_factors(field, a, b, _slot(a), _slot(b))
            num_forms.extend(fn)
            den_forms.extend(fd)
    kernel = kernel.mul_linear_factors(num_forms, den_forms)

    # symmetrize over copy permutations within each color
    slot_data = []
    for a in range(i, j):
        (color, copy), mult = reindex(field, a, i)
        slot_data.append((a, color, copy, mult))
    perms_per_color = [list(permutations(range(1, hdeg[r] + 1))) for r in range(n)]
    acc = RF.zero(field)
    for sigma in iproduct(*perms_per_color):
        mapping = {}
        for a, color, copy, mult in slot_data:
            new_copy = sigma[color - 1][copy - 1]
            mapping[_slot(a)] = (mult, zvar(color, new_copy))
        acc = acc.add(kernel.substitute(mapping))
    acc = acc.canonicalize()
    return ShuffleElement(field, sign, hdeg, acc)


def build_E(field, sign, i, j, mu, guard_vars=10):
    """E family: Abar for +, Bbar for -."""
    if sign > 0:
        return build_ABBbar(field, "Abar", +1, i, j, mu, guard_vars)
    return build_ABBbar(field, "Bbar", -1, i, j, mu, guard_vars)


def build_Ebar(field, sign, i, j, mu, guard_vars=10):
    """Ebar family: A (resp. B) with the (-qbar_mp^(2/n))^(i-j) prefactor."""
    if sign > 0:
        base = build_ABBbar(field, "A", +1, i, j, mu, guard_vars)
        pref = (field.integer(-1) * field.qbar_pm(-1, Fraction(2, field.n))) ** (i - j)
    else:
        base = build_ABBbar(field, "B", -1, i, j, mu, guard_vars)
        pref = (field.integer(-1) * field.qbar_pm(+1, Fraction(2, field.n))) ** (i - j)
    return base.scale(pref)


def build_F_shuffle(field, sign, i, j, k, guard_vars=10):
    """F family for k < 0 (pure shuffle, Eqs. two 5-two 8 shape); for k >= 0
    the dressed version lives in cartan.build_F."""
    mu = Fraction(k, j - i)
    if sign > 0:
        base = build_ABBbar(field, "B", +1, i, j, mu, guard_vars)
        return base.scale(field.q(j - i))
    base = build_ABBbar(field, "A", -1, i, j, mu, guard_vars)
    return base.scale(field.q(j - i))


def build_Fbar_shuffle(field, sign, i, j, k, guard_vars=10):
    mu = Fraction(k, j - i)
    if sign > 0:
        base = build_ABBbar(field, "Bbar", +1, i, j, mu, guard_vars)
        pref = field.q(j - i) * (field.integer(-1) *
                                 field.qbar_pm(+1, Fraction(2, field.n))) ** (j - i)
    else:
        base = build_ABBbar(field, "Abar", -1, i, j, mu, guard_vars)
        pref = field.q(j - i) * (field.integer(-1) *
                                 field.qbar_pm(-1, Fraction(2, field.n))) ** (j - i)
    return base.scale(pref)


def build_P(field, sign, i, j, k, guard_vars=10):
    """Simple root generator: the stated scalar multiple of E."""
    if igcd(k, j - i) != 1:
        raise ValueError("P requires gcd(k, j-i) = 1")
    mu = Fraction(k, j - i)
    E = build_E(field, sign, i, j, mu, guard_vars)
    if sign > 0:
        pref = (field.q() * field.qbar_power(Fraction(1, field.n))) / \
               (field.q() - field.q(-1))
    else:
        pref = field.qbar_power(Fraction(-1, field.n)) / (field.q(-1) - field.q())
    return E.scale(pref)


def build_P_from_Ebar(field, sign, i, j, k, guard_vars=10):
    """The second closed form of the simple P, through Ebar."""
    if igcd(k, j - i) != 1:
        raise ValueError("P requires gcd(k, j-i) = 1")
    mu = Fraction(k, j - i)
    Eb = build_Ebar(field, sign, i, j, mu, guard_vars)
    if sign > 0:
        pref = (field.q() * field.qbar_power(Fraction(1, field.n))).inv() / \
               (field.q(-1) - field.q())
    else:
        pref = field.qbar_power(Fraction(1, field.n)) / (field.q() - field.q(-1))
    return Eb.scale(pref)


def build_Ptilde(field, sign, i, j, k, guard_vars=10):
    """tilde-P as the x-sum of simple P's with the bracket coefficients."""
    n = field.n
    out = None
    for x in range(n):
        coeff = tilde_bracket(field, sign, i, j, k, x)
        if coeff.is_zero():
            continue
        Px = build_P(field, sign, i + x, j + x, k, guard_vars).scale(coeff)
        out = Px if out is None else out.add(Px)
    return out


def tilde_bracket(field, sign, i, j, k, x, invert=False):
    """q^{-d_j^i} d_x^0 + d_j^i (q-q^{-1}) qbar_pm^{(2/n) ol(-kx)} / (qbar_pm^2 - 1).

    invert=True gives the bracket of the inverse transform (qbar_mp, +kx).
    """
    n = field.n
    dji = 1 if (j - i) % n == 0 else 0
    s = sign if not invert else -sign
    kk = -k if not invert else k
    term1 = field.q(-dji) if x % n == 0 else field.zero
    if not dji:
        return term1
    ol = (kk * x - 1) % n + 1
    qb2 = field.qbar_pm(s, 2)
    term2 = (field.q() - field.q(-1)) * field.qbar_pm(s, Fraction(2 * ol, n)) / \
            (qb2 - field.one)
    return term1 + term2


def antipode_sum(field, sign, i, j, mu, guard_vars=10):
    """Sum over s of Ebar_{[s;j)} * E_{[i;s)} * qbar_mp^{2(i-s)/(n h)}."""
    mu = Fraction(mu)
    k = mu * (j - i)
    if k.denominator != 1:
        raise ValueError("mu (j-i) must be integral")
    h = (j - i) // igcd(int(k), j - i)
    total = None
    for s in range(i, j + 1):
        if (mu * (s - i)).denominator != 1 or (mu * (j - s)).denominator != 1:
            continue
        eb = build_Ebar(field, sign, s, j, mu, guard_vars)
        e = build_E(field, sign, i, s, mu, guard_vars)
        if eb.is_zero() or e.is_zero():
            continue
        term = shuffle_mul(eb, e, guard_vars)
        pref = field.qbar_pm(-sign, Fraction(2 * (i - s), field.n * h))
        term = term.scale(pref)
        total = term if total is None else total.add(term)
    return total


def slope_window_sequences(n, mu, target):
    """All ordered window sequences with integral slope steps summing to target."""
    mu = Fraction(mu)
    total = sum(target)
    wins = []
    for u in range(1, n + 1):
        for ln in range(1, total + 1):
            if (mu * ln).denominator == 1:
                wins.append((u, u + ln))
    out = []

    def rec(cur, remaining):
        if all(x == 0 for x in remaining):
            out.append(tuple(cur))
            return
        for w in wins:
            vec = window_vector(n, *w)
            if all(rv >= wv for rv, wv in zip(remaining, vec)):
                rec(cur + [w], tuple(rv - wv for rv, wv in zip(remaining, vec)))
    rec([], tuple(target))
    return out


def build_P_imaginary(field, sign, l, r, kprime, guard_vars=8):
    """Imaginary root generator of degree (sign*l*delta, sign*k'), solved from
    primitivity of the leading coproduct plus the alpha normalization."""
    from .linsolve import solve_linear
    from .linmaps import alpha
    from .tensor import delta_mu
    n = field.n
    if l < 1:
        raise ValueError("l must be at least 1")
    if n * l > guard_vars:
        raise ValueError("degree guard exceeded")
    mu = Fraction(kprime, n * l)
    g = igcd(n, mu.denominator)
    target = (l,) * n
    seqs = slope_window_sequences(n, mu, target)
    spanning = []
    seen = set()
    for seq in seqs:
        el = None
        for (u, v) in seq:
            e = build_E(field, sign, u, v, mu, guard_vars)
            el = e if el is None else shuffle_mul(el, e, guard_vars)
            if el.is_zero():
                break
        if el is None or el.is_zero():
            continue
        key = el.rf.serialize()
        if key in seen:
            continue
        seen.add(key)
        spanning.append(el)
    if not spanning:
        raise ValueError("empty spanning set for the imaginary generator")
    # linear conditions
    rows, rhs = [], []
    deltas = [delta_mu(S, mu).intermediate(target) for S in spanning]
    keys = set()
    for d in deltas:
        keys.update(d.terms)
    for key in sorted(keys, key=repr):
        rfs = [d.terms.get(key) for d in deltas]
        from collections import Counter
        common = Counter()
        for rf in rfs:
            if rf is not None:
                common |= Counter(rf.den)
        monos = {}
        cols = []
        for rf in rfs:
            if rf is None:
                cols.append({})
                continue
            from .rf import bino_expand, zp_mul
            num = rf.num
            extra = Counter(common) - Counter(rf.den)
            for b, m in extra.items():
                for _ in range(m):
                    num = zp_mul(field, num, bino_expand(field, b))
            cols.append(num)
            monos.update(num)
        for mono in monos:
            rows.append([c.get(mono, field.zero) for c in cols])
            rhs.append(field.zero)
    for u in range(1, n + 1):
        rows.append([alpha(S, u, u + n * l) for S in spanning])
        want = field.one if (u - r) % g == 0 else field.zero
        rhs.append(want if sign > 0 else (field.zero - want))
    coeffs = solve_linear(field, rows, rhs)
    X = None
    for c, S in zip(coeffs, spanning):
        if c.is_zero():
            continue
        term = S.scale(c)
        X = term if X is None else X.add(term)
    if X is None:
        raise ValueError("imaginary generator solve returned zero")
    # verify the defining conditions on the solution
    if not delta_mu(X, mu).intermediate(target).is_zero():
        raise ArithmeticError("imaginary generator is not primitive")
    for u in range(1, n + 1):
        want = field.one if (u - r) % g == 0 else field.zero
        if sign < 0:
            want = field.zero - want
        if alpha(X, u, u + n * l) != want:
            raise ArithmeticError("imaginary generator normalization failed")
    return X


def build_Y(field, kind, sign, i, j, ip, jp, mu, guard_vars=10):
    """The window-shifted sums of E/Ebar (kind 'Y' or 'Ybar') or of the
    pure-shuffle F/Fbar (kind 'Z' or 'Zbar'), for mu < 0."""
    n = field.n
    mu = Fraction(mu)
    lo = -((jp - i + n - 1) // n)
    hi = (j - ip) // n
    total = None
    for lshift in range(lo, hi + 1):
        s = ip + n * lshift
        t = jp + n * lshift
        if s > j or t < i:
            continue
        if (mu * (j - s)).denominator != 1 or (mu * (t - i)).denominator != 1:
            continue
        if kind == "Y":
            first = build_Ebar(field, sign, s, j, mu, guard_vars)
            second = build_E(field, sign, i, t, mu, guard_vars)
        elif kind == "Ybar":
            first = build_E(field, sign, s, j, mu, guard_vars)
            second = build_Ebar(field, sign, i, t, mu, guard_vars)
        elif kind == "Z":
            first = build_F_shuffle(field, sign, i, t, int(mu * (t - i)), guard_vars) \
                if t > i else ShuffleElement.unit(field, sign)
            second = build_Fbar_shuffle(field, sign, s, j, int(mu * (j - s)), guard_vars) \
                if j > s else ShuffleElement.unit(field, sign)
        elif kind == "Zbar":
            first = build_Fbar_shuffle(field, sign, i, t, int(mu * (t - i)), guard_vars) \
                if t > i else ShuffleElement.unit(field, sign)
            second = build_F_shuffle(field, sign, s, j, int(mu * (j - s)), guard_vars) \
                if j > s else ShuffleElement.unit(field, sign)
        else:
            raise ValueError(kind)
        if first.is_zero() or second.is_zero():
            continue
        term = shuffle_mul(first, second, guard_vars)
        total = term if total is None else total.add(term)
    if total is None:
        hd = tuple(a + b for a, b in zip(window_vector(n, i, j),
                                         window_vector(n, ip, jp)))
        return ShuffleElement.zero(field, sign, hd)
    return total


def solve_G_series(F, sign, mu, rhat, order, guard_vars=8):
    """Coefficients G_{+-k, rhat} determined degree-by-degree from the
    minimal-window instances of the E-to-F expansion (mu = b/a < 0)."""
    mu = Fraction(mu)
    b, a = mu.numerator, mu.denominator
    if b >= 0:
        raise ValueError("G series requires mu < 0")
    n = F.n
    g = igcd(n, a)
    step = n * a // g
    i = rhat
    Gs = [ShuffleElement.unit(F, sign)]
    for K in range(1, order + 1):
        j = i + step * K
        if j - i > guard_vars:
            raise ValueError("G series guard exceeded")
        acc = build_E(F, sign, i, j, mu, guard_vars)
        for kp in range(0, K):
            jj = j - step * kp
            Fel = build_F_shuffle(F, sign, i, jj, int(mu * (jj - i)), guard_vars)
            term = shuffle_mul(Fel, Gs[kp], guard_vars)
            acc = acc.sub(term)
        Gs.append(acc)
    return Gs


def inverse_series(F, sign, Gs, guard_vars=8):
    Gbars = [ShuffleElement.unit(F, sign)]
    for K in range(1, len(Gs)):
        acc = None
        for m in range(1, K + 1):
            t = shuffle_mul(Gs[m], Gbars[K - m], guard_vars)
            acc = t if acc is None else acc.add(t)
        Gbars.append(ShuffleElement(F, sign, acc.hdeg, acc.rf.neg()))
    return Gbars
