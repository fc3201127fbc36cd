"""Exact coefficients of the topological coproduct at a requested bidegree.

The coproduct's right-hand side is expanded in nonnegative powers of
(left variable / right variable); the expansion order needed for a
requested right vertical degree is derived exactly by degree counting,
so the returned coefficient is exact, never truncated short.
"""

from __future__ import annotations

import itertools

from .cartan import cartan_cbar, cartan_cross_qexp, cartan_mul, cartan_one, phi_series
from .rf import RF, VK_L, VK_R, mono_degree, mono_mul, monos_scalar, zp_mul, zvar
from .shuffle import zeta_exponent, _ceil_div
from .tensor import TensorSum


class TruncationBudget(Exception):
    pass


def delta_component(R, l, vdeg_right, budget_cap=None):
    """Terms of Delta(R+) at left split l and right vertical degree
    vdeg_right, as a TensorSum (phi atoms resolved into Heisenberg words)."""
    f = R.field
    n = f.n
    if R.sign < 0:
        raise NotImplementedError("the verifier drives the plus case only")
    k = R.hdeg
    l = tuple(l)
    if any(a > b for a, b in zip(l, k)):
        raise ValueError("split exceeds hdeg")
    left_vars = {zvar(i + 1, a): (VK_L, i + 1, a)
                 for i in range(n) for a in range(1, l[i] + 1)}
    right_vars = {zvar(i + 1, a): (VK_R, i + 1, a - l[i])
                  for i in range(n) for a in range(l[i] + 1, k[i] + 1)}
    rename = {v: (f.one, w) for v, w in {**left_vars, **right_vars}.items()}
    base = RF(f, R.rf.num, ()).substitute(rename)

    def is_right(v):
        return v[0] == VK_R

    pure_den = []
    series_factors = []   # (lead_mono, lead_scalar, ratio_mono, ratio_scalar)
    for (u, v, c) in R.rf.den:
        uu = rename[u][1]
        vv = rename[v][1]
        cs = monos_scalar(f, c)
        ru, rv = is_right(uu), is_right(vv)
        if ru == rv:
            _, nb = _rebino(f, uu, vv, c)
            pure_den.append(nb)
        elif ru:
            # 1/(zR - c zL) = (1/zR) sum (c zL / zR)^m
            series_factors.append((((uu, 1),), f.one,
                                   ((vv, 1), (uu, -1)), cs))
        else:
            # 1/(zL - c zR) = (1/(-c zR)) sum (zL / (c zR))^m
            series_factors.append((((vv, 1),), f.zero - cs,
                                   ((uu, 1), (vv, -1)), cs.inv()))

    num = base.num
    for lv, lw in left_vars.items():
        for rv, rw in right_vars.items():
            icolor, ipcolor = lv[1], rv[1]
            e = zeta_exponent(n, ipcolor, icolor)
            if e == 0:
                continue
            t2 = 2 * n * _ceil_div(ipcolor - icolor, n)
            top = {((lw, 1),): -f.q(-1), ((rw, 1),): f.q(1) * f.t(t2)}
            bot = {((lw, 1),): -f.one, ((rw, 1),): f.t(t2)}
            if e == 1:
                num = zp_mul(f, num, bot)
                lead_s = f.q(1) * f.t(t2)
                series_factors.append((((rw, 1),), lead_s,
                                       ((lw, 1), (rw, -1)),
                                       f.q(-1) / lead_s))
            else:
                num = zp_mul(f, num, top)
                series_factors.append((((rw, 1),), f.t(t2),
                                       ((lw, 1), (rw, -1)), f.t(-t2)))

    def right_deg(mono):
        return mono_degree(mono, is_right)

    if not num:
        return TensorSum(f, +1)
    n_right_den = sum(1 for (u, v, _) in pure_den if is_right(u))
    top_right = max(right_deg(m) for m in num)
    top_right -= len(series_factors)
    top_right -= n_right_den
    max_drop = top_right - vdeg_right
    if max_drop < 0:
        return TensorSum(f, +1)
    if budget_cap is not None and max_drop > budget_cap:
        raise TruncationBudget(f"needed order {max_drop} exceeds cap {budget_cap}")

    expanded = dict(num)
    for (lead_m, lead_s, ratio_m, ratio_s) in series_factors:
        inv_mono = tuple((v, -e) for v, e in lead_m)
        cur_mono, cur_s = inv_mono, lead_s.inv()
        terms = []
        for m in range(max_drop + 1):
            terms.append((cur_mono, cur_s))
            cur_mono = mono_mul(cur_mono, ratio_m)
            cur_s = cur_s * ratio_s
        new = {}
        for km, vv in expanded.items():
            for mono, sc in terms:
                kk = mono_mul(km, mono)
                c = vv * sc
                prev = new.get(kk)
                s = c if prev is None else prev + c
                if s.is_zero():
                    new.pop(kk, None)
                else:
                    new[kk] = s
        expanded = new

    right_list = sorted(right_vars.values())
    phi_opts = []
    for rw in right_list:
        phis = phi_series(f, rw[1], +1, max_drop)
        phi_opts.append([(d, rw, phis[d]) for d in range(max_drop + 1)])

    out = TensorSum(f, +1)
    combos = itertools.product(*phi_opts) if phi_opts else [()]
    for combo in combos:
        dphi = sum(c[0] for c in combo)
        if dphi > max_drop:
            continue
        phi_dressed = None
        phi_mono = ()
        for (d, rw, coeff) in combo:
            phi_dressed = coeff if phi_dressed is None else phi_dressed.mul(coeff)
            if d:
                phi_mono = mono_mul(phi_mono, ((rw, -d),))
        sliced = {}
        for km, vv in expanded.items():
            if right_deg(km) - dphi - n_right_den != vdeg_right:
                continue
            sliced[mono_mul(km, phi_mono)] = vv
        if not sliced:
            continue
        joint = RF(f, sliced, tuple(pure_den))
        if phi_dressed is None:
            out.add_term(l, (), cartan_cbar(n, vdeg_right), (),
                         cartan_one(n), joint)
            continue
        for (h, c, hd), b in phi_dressed.terms.items():
            if sum(hd):
                raise ArithmeticError("phi atoms must be body-free")
            coef = b.rf.num.get((), f.zero)
            cart = cartan_mul(c, cartan_cbar(n, vdeg_right))
            qx = cartan_cross_qexp(cart, l, +1)
            out.add_term(l, h, cart, (), cartan_one(n),
                         joint.mul_scalar(coef * f.q(qx)))
    return out


def _rebino(field, u, v, c):
    """Rebuild a binomial after variable renaming (orientation may flip)."""
    from .rf import normalize_linear
    zeros = (0,) * field.n
    form = [(u, (1, 0, 0, zeros)), (v, (-c[0], c[1], c[2], c[3]))]
    unit, nb = normalize_linear(field, form)
    if not unit.is_one():
        raise ArithmeticError("unexpected unit while renaming a binomial")
    return unit, nb
