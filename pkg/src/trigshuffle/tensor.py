"""Tensor sums of dressed elements and the leading coproducts Delta_mu.

A tensor term is keyed by (left hdeg split, left Heisenberg word, left
Cartan, right Heisenberg word, right Cartan); its value is the joint
rational function in disjoint left/right variable spaces.  Comparisons
merge by key and test the joint functions, so regrouped but equal tensors
compare equal.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cartan import (Dressed, cartan_cbar, cartan_cross_qexp, cartan_mul,
                     cartan_one, cartan_psi)
from .rf import RF, VK_L, VK_R, VK_Z, mono_degree, mono_mul, monos_scalar
from .shuffle import ShuffleElement


def _embed_map(field, hdeg, kind):
    return {(VK_Z, i + 1, a): (field.one, (kind, i + 1, a))
            for i in range(len(hdeg)) for a in range(1, hdeg[i] + 1)}


def embed_rf(rf, hdeg, kind, field):
    return rf.substitute(_embed_map(field, hdeg, kind))


class TensorSum:
    __slots__ = ("field", "sign", "terms")

    def __init__(self, field, sign, terms=None):
        self.field = field
        self.sign = sign
        self.terms = terms if terms is not None else {}
        # terms: dict[(lsplit, heisL, cartanL, heisR, cartanR)] -> joint RF

    def add_term(self, lsplit, heisL, cartanL, heisR, cartanR, joint):
        if joint.is_zero():
            return
        key = (tuple(lsplit), heisL, cartanL, heisR, cartanR)
        prev = self.terms.get(key)
        self.terms[key] = joint if prev is None else prev.add(joint)

    def add(self, other):
        out = TensorSum(self.field, self.sign, dict(self.terms))
        for key, j in other.terms.items():
            prev = out.terms.get(key)
            out.terms[key] = j if prev is None else prev.add(j)
        return out

    def neg(self):
        return TensorSum(self.field, self.sign,
                         {k: j.neg() for k, j in self.terms.items()})

    def scale(self, s):
        return TensorSum(self.field, self.sign,
                         {k: j.mul_scalar(s) for k, j in self.terms.items()})

    def equals(self, other):
        keys = set(self.terms) | set(other.terms)
        for k in keys:
            a = self.terms.get(k)
            b = other.terms.get(k)
            if a is None:
                if not b.canonicalize().is_zero():
                    return False
            elif b is None:
                if not a.canonicalize().is_zero():
                    return False
            elif not a.equals(b):
                return False
        return True

    def is_zero(self):
        return all(j.canonicalize().is_zero() for j in self.terms.values())

    def intermediate(self, total_hdeg):
        """Drop the two extreme splits (l = 0 and l = k)."""
        zero = (0,) * self.field.n
        full = tuple(total_hdeg)
        out = {k: j for k, j in self.terms.items()
               if k[0] != zero and k[0] != full}
        return TensorSum(self.field, self.sign, out)

    def serialize(self):
        lines = []
        for key in sorted(self.terms, key=repr):
            lines.append(f"  split={key[0]} heisL={key[1]} cartanL={key[2]} "
                         f"heisR={key[3]} cartanR={key[4]}:")
            lines.append("    " + self.terms[key].serialize())
        return "\n".join(lines) if lines else "  0"


def tensor_of(left, right):
    """Tensor of two normal-ordered Dressed elements (same sign)."""
    f = left.field
    out = TensorSum(f, left.sign)
    for (h1, c1, hd1), b1 in left.terms.items():
        for (h2, c2, hd2), b2 in right.terms.items():
            joint = embed_rf(b1.rf, hd1, VK_L, f).mul(
                embed_rf(b2.rf, hd2, VK_R, f))
            out.add_term(hd1, h1, c1, h2, c2, joint)
    return out


def cartan_pow_phi(n, i, e):
    """(psi_{i+1}/psi_i)^e with the extended-index convention."""
    return cartan_mul(cartan_psi(n, i + 1, e), cartan_psi(n, i, -e))


def inner_form(n, a, b):
    """<a, b> = sum_i (a_i b_i - a_i b_{i+1}), indices cyclic."""
    return sum(a[i] * b[i] - a[i] * b[(i + 1) % n] for i in range(n))


def delta_mu(R, mu):
    """The leading coproduct Delta_mu of a slope <= mu element."""
    f = R.field
    out = TensorSum(f, R.sign)
    if R.is_zero():
        return out
    mu = Fraction(mu)
    ranges = [range(0, R.hdeg[i] + 1) for i in range(f.n)]
    for l in itertools.product(*ranges):
        term = _delta_mu_term(R, mu, l)
        if term is not None:
            out = out.add(term)
    return out


def _delta_mu_term(R, mu, l):
    f = R.field
    n = f.n
    k = R.hdeg
    sign = R.sign
    kl = tuple(a - b for a, b in zip(k, l))
    if sign > 0:
        scaled = {(VK_Z, i + 1, a) for i in range(n)
                  for a in range(l[i] + 1, k[i] + 1)}
        target = mu * sum(kl)
    else:
        scaled = {(VK_Z, i + 1, a) for i in range(n)
                  for a in range(1, l[i] + 1)}
        target = -mu * sum(l)
    pred = scaled.__contains__
    den_keep = []
    mono_shift = ()
    shift_scalar = f.one
    den_scaled_deg = 0
    for (u, v, c) in R.rf.den:
        su = u in scaled
        sv = v in scaled if v is not None else False
        if su == sv:
            den_keep.append((u, v, c))
            if su:
                den_scaled_deg += 1
            continue
        # mixed binomial: replaced by its dominant endpoint in the limit
        dominant_scaled = (sign > 0)
        if (su and dominant_scaled) or (sv and not dominant_scaled):
            # z_u survives
            mono_shift = mono_mul(mono_shift, ((u, -1),))
            if su:
                den_scaled_deg += 1
        else:
            # -c z_v survives
            mono_shift = mono_mul(mono_shift, ((v, -1),))
            shift_scalar = shift_scalar * (-monos_scalar(f, c)).inv()
            if sv:
                den_scaled_deg += 1
    want = target + den_scaled_deg
    if not R.rf.num:
        return None
    degs = [mono_degree(m, pred) for m in R.rf.num]
    if sign > 0 and Fraction(max(degs)) > want:
        raise ArithmeticError("slope precondition violated in delta_mu")
    if sign < 0 and Fraction(min(degs)) < want:
        raise ArithmeticError("slope precondition violated in delta_mu")
    if want.denominator != 1:
        return None
    want = int(want)
    num_slice = {m: val for m, val in R.rf.num.items()
                 if mono_degree(m, pred) == want}
    if not num_slice:
        return None
    sliced = RF(f, num_slice, den_keep)
    if mono_shift:
        sliced = sliced.mul_mono(mono_shift)
    if not shift_scalar.is_one():
        sliced = sliced.mul_scalar(shift_scalar)
    mapping = {}
    for i in range(n):
        for a in range(1, l[i] + 1):
            mapping[(VK_Z, i + 1, a)] = (f.one, (VK_L, i + 1, a))
        for a in range(l[i] + 1, k[i] + 1):
            mapping[(VK_Z, i + 1, a)] = (f.one, (VK_R, i + 1, a - l[i]))
    joint = sliced.substitute(mapping)
    out = TensorSum(f, sign)
    if sign > 0:
        cbar_exp = int(target)  # right-factor vertical degree
        cartanL = cartan_cbar(n, cbar_exp)
        for i in range(n):
            if kl[i]:
                cartanL = cartan_mul(cartanL, cartan_pow_phi(n, i + 1, kl[i]))
        qx = cartan_cross_qexp(cartanL, l, +1)
        joint = joint.mul_scalar(f.q(qx - inner_form(n, kl, l)))
        out.add_term(l, (), cartanL, (), cartan_one(n), joint)
    else:
        cbar_exp = int(target)  # left-factor vertical degree (= -mu |l|)
        cartanR = cartan_cbar(n, cbar_exp)
        for i in range(n):
            if l[i]:
                cartanR = cartan_mul(cartanR, cartan_pow_phi(n, i + 1, -l[i]))
        joint = joint.mul_scalar(f.q(inner_form(n, l, kl)))
        out.add_term(l, (), cartan_one(n), (), cartanR, joint)
    return out


def dressed_to_tensor_left(field, sign, dressed_left, dressed_right):
    """Expected-side helper: tensor of two dressed elements."""
    return tensor_of(dressed_left, dressed_right)


def delta_mu_dressed(D, mu):
    """Delta_mu of a dressed element whose terms carry no Heisenberg atoms:
    group-like Cartan tails distribute to both tensor factors."""
    f = D.field
    out = TensorSum(f, D.sign)
    for (heis, cartan, hd), body in D.terms.items():
        if heis:
            raise ValueError("delta_mu_dressed expects Cartan-dressed terms only")
        from .shuffle import ShuffleElement
        dm = delta_mu(ShuffleElement(f, D.sign, hd, body.rf), mu)
        for (l, hL, cL, hR, cR), joint in dm.terms.items():
            out.add_term(l, hL, cartan_mul(cL, cartan), hR,
                         cartan_mul(cR, cartan), joint)
    return out
