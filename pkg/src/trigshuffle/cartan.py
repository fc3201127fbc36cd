"""Cartan monomials, Heisenberg symbols, and normal-ordered dressed elements.

Within one half, the fixed normal order of a term is
[Heisenberg word][shuffle body][Cartan monomial].  psi-indices and
Heisenberg color indices outside {1..n} are rewritten on construction
(psi_{s+n} = c psi_s, a_{s+n,d} = a_{s,d} t^{-2nd}).
"""

from __future__ import annotations

from fractions import Fraction

from .rf import RF, mono_from, zvar
from .shuffle import ShuffleElement, shuffle_mul


# -- Cartan monomials: (psi exponent vector, c exponent, cbar exponent) -------

def cartan_one(n):
    return ((0,) * n, 0, 0)


def cartan_mul(a, b):
    return (tuple(x + y for x, y in zip(a[0], b[0])), a[1] + b[1], a[2] + b[2])


def cartan_inv(a):
    return (tuple(-x for x in a[0]), -a[1], -a[2])


def cartan_pow(a, e):
    return (tuple(x * e for x in a[0]), a[1] * e, a[2] * e)


def cartan_psi(n, s, e=1):
    """psi_s^e for any integer s, via psi_{s+n} = c psi_s."""
    r = (s - 1) % n + 1
    shift = (s - r) // n
    psi = [0] * n
    psi[r - 1] = e
    return (tuple(psi), shift * e, 0)


def cartan_c(n, e=1):
    return ((0,) * n, e, 0)


def cartan_cbar(n, e=1):
    return ((0,) * n, 0, e)


def cartan_cross_qexp(cartan, hdeg, sign):
    """q-exponent picked up when the Cartan monomial crosses a body of the
    given hdeg from left to right (psi_s R = q^{+-(k_{s-1}-k_s)} R psi_s)."""
    n = len(hdeg)
    tot = 0
    for r in range(1, n + 1):
        e = cartan[0][r - 1]
        if e:
            km1 = hdeg[(r - 2) % n]
            tot += e * (km1 - hdeg[r - 1])
    return sign * tot


# -- Heisenberg symbols --------------------------------------------------------

def heis_atom(field, s, d):
    """a_{s,d} for any integer s -> ((color, d), scalar multiplier)."""
    n = field.n
    r = (s - 1) % n + 1
    shift = (s - r) // n
    return (r, d), field.t(-2 * n * d * shift)


def heis_mul(w1, w2):
    return tuple(sorted(w1 + w2))


EMPTY_HEIS = ()


# -- dressed elements ----------------------------------------------------------

class Dressed:
    """Finite sum of normal-ordered terms heis * body * cartan."""

    __slots__ = ("field", "sign", "terms")

    def __init__(self, field, sign, terms=None):
        self.field = field
        self.sign = sign
        self.terms = terms if terms is not None else {}
        # terms: dict[(heis, cartan, hdeg)] -> ShuffleElement

    @staticmethod
    def from_body(body, heis=EMPTY_HEIS, cartan=None):
        f = body.field
        cartan = cartan if cartan is not None else cartan_one(f.n)
        if body.is_zero():
            return Dressed(f, body.sign)
        return Dressed(f, body.sign, {(heis, cartan, body.hdeg): body})

    @staticmethod
    def unit(field, sign):
        return Dressed.from_body(ShuffleElement.unit(field, sign))

    @staticmethod
    def from_cartan(field, sign, cartan, coeff=None):
        body = ShuffleElement.unit(field, sign)
        if coeff is not None:
            body = body.scale(coeff)
        return Dressed.from_body(body, EMPTY_HEIS, cartan)

    @staticmethod
    def from_heis(field, sign, s, d, coeff=None):
        atom, mult = heis_atom(field, s, d)
        body = ShuffleElement.unit(field, sign).scale(mult)
        if coeff is not None:
            body = body.scale(coeff)
        return Dressed.from_body(body, (atom,), cartan_one(field.n))

    def is_zero(self):
        return all(b.is_zero() for b in self.terms.values())

    def add(self, other):
        out = dict(self.terms)
        for k, b in other.terms.items():
            if k in out:
                s = out[k].add(b)
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = b
        return Dressed(self.field, self.sign, out)

    def scale(self, s):
        return Dressed(self.field, self.sign,
                       {k: b.scale(s) for k, b in self.terms.items()})

    def neg(self):
        return self.scale(self.field.integer(-1))

    def sub(self, other):
        return self.add(other.neg())

    def map_bodies(self, fn):
        out = {}
        for k, b in self.terms.items():
            nb = fn(b)
            if not nb.is_zero():
                key = (k[0], k[1], nb.hdeg)
                prev = out.get(key)
                out[key] = nb if prev is None else prev.add(nb)
        return Dressed(self.field, self.sign, out)

    def mul_cartan(self, cartan):
        """Multiply by a Cartan monomial on the right."""
        return Dressed(self.field, self.sign,
                       {(h, cartan_mul(c, cartan), hd): b
                        for (h, c, hd), b in self.terms.items()})

    def mul(self, other, guard_vars=10):
        """Normal-ordered product within one half."""
        if self.sign != other.sign:
            raise ValueError("dressed product requires one half")
        f = self.field
        sign = self.sign
        out = Dressed(f, sign)
        for (h1, c1, hd1), b1 in self.terms.items():
            for (h2, c2, hd2), b2 in other.terms.items():
                qx = cartan_cross_qexp(c1, hd2, sign)
                cc = cartan_mul(c1, c2)
                for hmoved, bmoved in _move_heis_left(f, sign, b1, h2):
                    body = shuffle_mul(bmoved, b2, guard_vars).scale(f.q(qx))
                    if body.is_zero():
                        continue
                    key = (heis_mul(h1, hmoved), cc, body.hdeg)
                    prev = out.terms.get(key)
                    out.terms[key] = body if prev is None else prev.add(body)
        return out

    def equals(self, other):
        return self.sub(other).is_zero()

    def serialize(self):
        lines = []
        for (h, c, hd) in sorted(self.terms, key=_term_sort_key):
            b = self.terms[(h, c, hd)]
            hs = " ".join(f"a[{s},{d}]" for s, d in h) or "1"
            psis = " ".join(f"psi[{r+1}]^{e}" for r, e in enumerate(c[0]) if e)
            cs = f" c^{c[1]}" if c[1] else ""
            cb = f" cbar^{c[2]}" if c[2] else ""
            lines.append(f"  [{hs}] * ({b.serialize()}) * [{psis}{cs}{cb}]")
        return "\n".join(lines) if lines else "  0"


def _term_sort_key(k):
    return (k[0], k[1][0], k[1][1], k[1][2], k[2])


def _move_heis_left(field, sign, body, heis):
    """body * prod(a) -> list of (heis_word_on_left, body') using the stated
    commutation relations within one half."""
    if not heis or body.nvars() == 0:
        return [(heis, body)]
    first, rest = heis[0], heis[1:]
    out = []
    for h, b in _move_heis_left(field, sign, body, rest):
        out.append((heis_mul((first,), h), b))
        comm = commutator_a_body(field, sign, first[0], first[1], b)
        if not comm.is_zero():
            out.append((h, comm.scale(field.integer(-1))))
    # merge duplicate heis words
    merged = {}
    for h, b in out:
        if b.is_zero():
            continue
        key = (h, b.hdeg)
        merged[key] = b if key not in merged else merged[key].add(b)
    return [(h, b) for (h, _), b in merged.items()]


def body_mul_powersum(field, body, color_ext, d):
    """body * sum_t z_{color_ext, t}^d with the extended-color convention."""
    n = field.n
    r = (color_ext - 1) % n + 1
    shift = (color_ext - r) // n
    k = body.hdeg[r - 1]
    if k == 0:
        return ShuffleElement.zero(field, body.sign, body.hdeg)
    mult = field.t(-2 * n * d * shift)
    num = {}
    for t in range(1, k + 1):
        m = mono_from(zvar(r, t), d)
        num[m] = mult
    ps = RF(field, num)
    return ShuffleElement(field, body.sign, body.hdeg, body.rf.mul(ps))


def commutator_a_body(field, sign, s, d, body):
    """[a_{s,d}, body] within one half (sign of d matches the half)."""
    if (d > 0) != (sign > 0):
        raise ValueError("cross-sign commutator does not live inside one half")
    if sign > 0:
        p1 = body_mul_powersum(field, body, s - 1, d)
        p2 = body_mul_powersum(field, body, s, d)
        return p1.sub(p2)
    dd = -d
    p1 = body_mul_powersum(field, body, s - 1, -dd).scale(field.q(-dd))
    p2 = body_mul_powersum(field, body, s, -dd).scale(field.q(dd))
    return p1.sub(p2)


def commutator_a_body_cross(field, s, d, body):
    """[a_{s,d}, body] when the signs differ: returns (body', cbar_power)."""
    if d > 0 and body.sign < 0:
        p1 = body_mul_powersum(field, body, s, d)
        p2 = body_mul_powersum(field, body, s - 1, d)
        return p1.sub(p2), d
    if d < 0 and body.sign > 0:
        dd = -d
        p1 = body_mul_powersum(field, body, s, -dd).scale(field.q(dd))
        p2 = body_mul_powersum(field, body, s - 1, -dd).scale(field.q(-dd))
        return p1.sub(p2), -dd
    raise ValueError("not a cross-sign pair")


def heisenberg_commutator(field, s, d, sp, dp):
    """[a_{s,d}, a_{s',d'}]: zero or the central cbar term as a Dressed pair.

    Returns (scalar_coefficient, cbar_exponent_pos, cbar_exponent_neg) data:
    the commutator is d*(cbar^d - cbar^(-d))/(q^(-d) - q^d) when s'=s, d'=-d.
    """
    n = field.n
    if (s - sp) % n != 0 or d + dp != 0:
        return None
    den = field.q(-d) - field.q(d)
    return (field.integer(d) / den, d, -d)


# -- exponential series ---------------------------------------------------------

def exp_series(field, sign, u_coeffs, order):
    """exp(sum_{d>=1} u_d w^d) up to w^order; u_coeffs[d] is a Dressed element.

    All u_d commute (same-sign Heisenberg plus central Cartan), so the
    power-series recursion m S_m = sum_d d u_d S_{m-d} applies.
    """
    S = [Dressed.unit(field, sign)]
    for m in range(1, order + 1):
        acc = Dressed(field, sign)
        for d in range(1, m + 1):
            if d in u_coeffs:
                term = u_coeffs[d].mul(S[m - d]).scale(field.fraction(Fraction(d, m)))
                acc = acc.add(term)
        S.append(acc)
    return S


def phi_series(field, s, sign, order):
    """Coefficients phi_{s, +-d} for d = 0..order as Dressed elements."""
    n = field.n
    u = {}
    for d in range(1, order + 1):
        fac = (field.q(-d) - field.q(d)) * field.fraction(Fraction(1, d))
        if sign > 0:
            t1 = Dressed.from_heis(field, sign, s, d, field.q(d) * fac)
            t2 = Dressed.from_heis(field, sign, s + 1, d, field.q(-d) * fac)
            u[d] = t1.sub(t2)
        else:
            t1 = Dressed.from_heis(field, sign, s, -d, fac)
            t2 = Dressed.from_heis(field, sign, s + 1, -d, fac)
            u[d] = t1.sub(t2)
    S = exp_series(field, sign, u, order)
    ratio = cartan_mul(cartan_psi(n, s + 1, +1 if sign > 0 else -1),
                       cartan_psi(n, s, -1 if sign > 0 else +1))
    return [c.mul_cartan(ratio) for c in S]


def cartan_series(field, family, sign, r, order):
    """Degree-0 window series coefficients (E or Ebar at the empty window)."""
    u = {}
    for d in range(1, order + 1):
        inv_d = field.fraction(Fraction(1, d))
        if sign > 0:
            if family == "E":
                coeff = (field.one - field.q(-2 * d)) * inv_d * field.t(2 * (r - 1) * d)
            else:
                coeff = (field.one - field.q(2 * d)) * inv_d * field.t(2 * r * d)
            u[d] = Dressed.from_heis(field, sign, r, d, coeff)
        else:
            if family == "E":
                coeff = (field.q(d) - field.q(-d)) * inv_d * field.t(-2 * (r - 1) * d)
            else:
                coeff = (field.q(-d) - field.q(d)) * inv_d * field.t(-2 * r * d)
            u[d] = Dressed.from_heis(field, sign, r, -d, coeff)
    return exp_series(field, sign, u, order)


def vertical_P0(field, sign, r, k):
    """P at the vertical axis: +-a_{r,+-k} qbar^{+-(2r-1)k/n}."""
    coeff = field.t((2 * r - 1) * k) if sign > 0 else field.t(-(2 * r - 1) * k)
    el = Dressed.from_heis(field, sign, r, k if sign > 0 else -k, coeff)
    return el if sign > 0 else el.neg()


def build_F(field, sign, i, j, k, guard_vars=10):
    """Dressed F for k >= 0: psi_i^# Ebar psi_j^-# cbar^-#k, normal ordered."""
    from .generators import build_Ebar
    if k < 0:
        raise ValueError("use generators.build_F_shuffle for k < 0")
    n = field.n
    if j == i:
        raise ValueError("empty window F comes from cartan_series")
    mu = Fraction(k, j - i)
    body = build_Ebar(field, sign, i, j, mu, guard_vars)
    e = 1 if sign > 0 else -1
    qx = cartan_cross_qexp(cartan_psi(n, i, e), body.hdeg, sign)
    cartan = cartan_mul(cartan_psi(n, i, e), cartan_psi(n, j, -e))
    cartan = cartan_mul(cartan, cartan_cbar(n, -sign * k))
    return Dressed.from_body(body.scale(field.q(qx)), EMPTY_HEIS, cartan)


def build_Fbar(field, sign, i, j, k, guard_vars=10):
    """Dressed Fbar for k >= 0: psi-dressed E, normal ordered."""
    from .generators import build_E
    if k < 0:
        raise ValueError("use generators.build_Fbar_shuffle for k < 0")
    n = field.n
    mu = Fraction(k, j - i)
    body = build_E(field, sign, i, j, mu, guard_vars)
    e = 1 if sign > 0 else -1
    qx = cartan_cross_qexp(cartan_psi(n, i, e), body.hdeg, sign)
    cartan = cartan_mul(cartan_psi(n, i, e), cartan_psi(n, j, -e))
    cartan = cartan_mul(cartan, cartan_cbar(n, -sign * k))
    return Dressed.from_body(body.scale(field.q(qx)), EMPTY_HEIS, cartan)


def move_psi_across(field, s, R, direction=1):
    """The scalar picked up when psi_s crosses the body R (left to right for
    direction=+1, right to left for -1)."""
    qx = cartan_cross_qexp(cartan_psi(field.n, s), R.hdeg, R.sign)
    return field.q(qx if direction > 0 else -qx)


def commute_a_with_shuffle(field, s, d, R):
    """[a_{s,d}, R] as a Dressed element (cbar powers in the cross-sign case)."""
    if (d > 0) == (R.sign > 0):
        body = commutator_a_body(field, R.sign, s, d, R)
        return Dressed.from_body(body)
    body, cbar_exp = commutator_a_body_cross(field, s, d, R)
    return Dressed.from_body(body, EMPTY_HEIS, cartan_cbar(field.n, cbar_exp))


def normal_order(field, sign, factors, guard_vars=10):
    """Normal-order an arbitrary product of atoms into a Dressed element.

    factors: sequence of ('psi', s, e) | ('a', s, d) | ('c', e) | ('cbar', e)
    | ('body', ShuffleElement) | ('scalar', Scalar), multiplied left to
    right.  Idempotent on already-ordered input.
    """
    out = Dressed.unit(field, sign)
    for f in factors:
        kind = f[0]
        if kind == "psi":
            term = Dressed.from_cartan(field, sign, cartan_psi(field.n, f[1],
                                                               f[2]))
        elif kind == "a":
            term = Dressed.from_heis(field, sign, f[1], f[2])
        elif kind == "c":
            term = Dressed.from_cartan(field, sign, cartan_c(field.n, f[1]))
        elif kind == "cbar":
            term = Dressed.from_cartan(field, sign, cartan_cbar(field.n, f[1]))
        elif kind == "body":
            term = Dressed.from_body(f[1])
        elif kind == "scalar":
            out = out.scale(f[1])
            continue
        else:
            raise ValueError(kind)
        out = out.mul(term, guard_vars)
    return out
