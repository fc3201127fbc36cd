import json
import os
from fractions import Fraction

import pytest

from trigshuffle.scalars import Field
from trigshuffle.rf import RF, zvar, mono_from
from trigshuffle.shuffle import (ShuffleElement, has_slope_at_most, reindex,
                                 shuffle_mul, wheel_check,
                                 zeta_linear_factors)
from trigshuffle.generators import (antipode_sum, build_ABBbar, build_E,
                                    build_Ebar, build_F_shuffle, build_P,
                                    build_P_from_Ebar, build_P_imaginary,
                                    build_Ptilde, inverse_series,
                                    solve_G_series, tilde_bracket,
                                    window_vector)
from trigshuffle.linmaps import alpha
from trigshuffle.cartan import build_F, build_Fbar, cartan_cbar, cartan_mul, cartan_psi


F = Field(2)
F3 = Field(3)
GOLDEN = os.path.join(os.path.dirname(__file__), "goldens", "goldens.json")


def test_A_single_variable():
    for k in (0, 2, -1):
        A = build_ABBbar(F, "A", +1, 1, 2, Fraction(k))
        want = ShuffleElement(F, +1, (1, 0),
                              RF(F, {mono_from(zvar(1, 1), k) if k else ():
                                     F.t(2 * k)}))
        assert A.equals(want)


def test_Abar_nonintegral_is_zero():
    A = build_ABBbar(F, "Abar", +1, 1, 3, Fraction(1, 3))
    assert A.is_zero()
    assert build_E(F, -1, 1, 4, Fraction(1, 2)).is_zero()


def test_E_single_variable():
    for k in (1, -2):
        E = build_E(F, +1, 1, 2, Fraction(k))
        want = ShuffleElement(F, +1, (1, 0),
                              RF(F, {mono_from(zvar(1, 1), k): F.t(2 * k)}))
        assert E.equals(want)
        Eb = build_Ebar(F, +1, 1, 2, Fraction(k))
        pref = (F.integer(-1) * F.qbar_pm(-1, Fraction(2, F.n))).inv()
        assert Eb.equals(want.scale(pref))
        Em = build_E(F, -1, 1, 2, Fraction(k))
        wantm = ShuffleElement(F, -1, (1, 0),
                               RF(F, {mono_from(zvar(1, 1), -k): F.t(-2 * k)}))
        assert Em.equals(wantm)


def test_goldens_match():
    with open(GOLDEN) as fh:
        goldens = json.load(fh)
    from trigshuffle.verifier import Config, generator_goldens
    got = generator_goldens(Config(n=2))
    for key, val in got.items():
        assert goldens[key] == val, key


def test_membership_all_families():
    for fam in ("A", "Abar", "B", "Bbar"):
        for (i, j, mu) in [(1, 3, Fraction(1)), (2, 4, Fraction(-1, 2)),
                           (1, 4, Fraction(1, 3))]:
            el = build_ABBbar(F, fam, +1, i, j, mu)
            assert wheel_check(el)
            assert has_slope_at_most(el, mu)


def test_P_two_closed_forms_and_normalization():
    for sign in (+1, -1):
        for (i, j, k) in [(1, 2, 2), (1, 3, 1), (2, 4, -3)]:
            P1 = build_P(F, sign, i, j, k)
            P2 = build_P_from_Ebar(F, sign, i, j, k)
            assert P1.equals(P2)
            want = F.one if sign > 0 else F.zero - F.one
            assert alpha(P1, i, j) == want
    with pytest.raises(ValueError):
        build_P(F, +1, 1, 3, 2)


def test_antipode_telescoping():
    for sign in (+1, -1):
        for mu in (Fraction(0), Fraction(1), Fraction(-1, 2)):
            if (mu * 2).denominator != 1:
                continue
            s = antipode_sum(F, sign, 1, 3, mu)
            assert s.canonicalize().is_zero()


def test_elementary_alternative_form():
    """Ebar equals its telescoped alternative symmetrization (windows <= 4)."""
    for FF in (F, F3):
        n = FF.n
        for (i, j) in [(1, 3), (1, 4), (2, 5)]:
            if j - i > 4:
                continue
            for mu in (Fraction(0), Fraction(1), Fraction(-1),
                       Fraction(1, j - i)):
                if (mu * (j - i)).denominator != 1:
                    continue
                got = build_Ebar(FF, +1, i, j, mu)
                want = _elementary_form(FF, i, j, mu)
                assert got.equals(want), (FF.n, i, j, mu)


def _elementary_form(FF, i, j, mu):
    """-q^2 qbar^{2/n} Sym[ prod_{mu(s-i) in Z} (z_s qbar^{2/n} / z_{s-1})
    * Abar kernel ]."""
    from itertools import permutations, product as iproduct
    from trigshuffle.rf import VK_SLOT
    n = FF.n

    def slot(a):
        return (VK_SLOT, a, 0)

    zeros = (0,) * n
    kernel = RF.const(FF, FF.one)
    mono = []
    tsh = 0
    for a in range(i, j):
        e = (mu * (a - i + 1)).__floor__() - (mu * (a - i)).__floor__()
        if e:
            mono.append((slot(a), e))
            tsh += 2 * a * e
    extra_scalar = FF.one
    for s in range(i + 1, j):
        if (mu * (s - i)).denominator == 1:
            mono.append((slot(s), 1))
            mono.append((slot(s - 1), -1))
            extra_scalar = extra_scalar * FF.t(2)
    md = {}
    for v, e in mono:
        md[v] = md.get(v, 0) + e
    kernel = kernel.mul_mono(tuple(sorted((v, e) for v, e in md.items() if e)))
    kernel = kernel.mul_scalar(FF.t(tsh) * extra_scalar)
    num_forms, den_forms = [], []
    for a in range(i, j - 1):
        num_forms.append([(slot(a), (1, 2, 0, zeros))])
        den_forms.append([(slot(a), (1, 2, 0, zeros)), (slot(a + 1), (-1, 0, 0, zeros))])
    for a in range(i, j):
        for b in range(a + 1, j):
            fn, fd = zeta_linear_factors(FF, b, a, slot(b), slot(a))
            num_forms.extend(fn)
            den_forms.extend(fd)
    kernel = kernel.mul_linear_factors(num_forms, den_forms)
    hdeg = window_vector(n, i, j)
    slot_data = []
    for a in range(i, j):
        (color, copy), mult = reindex(FF, a, i)
        slot_data.append((a, color, copy, mult))
    perms = [list(permutations(range(1, hdeg[r] + 1))) for r in range(n)]
    acc = RF.zero(FF)
    for sigma in iproduct(*perms):
        mapping = {}
        for a, color, copy, mult in slot_data:
            mapping[slot(a)] = (mult, zvar(color, sigma[color - 1][copy - 1]))
        acc = acc.add(kernel.substitute(mapping))
    pref = FF.integer(-1) * FF.q(2) * FF.qbar_power(Fraction(2, n))
    return ShuffleElement(FF, +1, hdeg, acc.canonicalize()).scale(pref)


def test_F_matches_dressed_Ebar():
    # F^{(k)} = psi_i Ebar psi_j^{-1} cbar^{-k} for k >= 0
    D = build_F(F, +1, 1, 3, 1)
    ((heis, cart, hd),) = tuple(D.terms)
    assert heis == ()
    assert cart == cartan_mul(cartan_mul(cartan_psi(2, 1, 1),
                                         cartan_psi(2, 3, -1)),
                              cartan_cbar(2, -1))
    # F^{(-k)} = B^{(-k)} q^{j-i}
    Fm = build_F_shuffle(F, +1, 1, 3, -1)
    B = build_ABBbar(F, "B", +1, 1, 3, Fraction(-1, 2))
    assert Fm.equals(B.scale(F.q(2)))


def test_tilde_roundtrip_and_bracket():
    for sign in (+1, -1):
        for (i, j, k) in [(1, 3, 1), (1, 2, 1)]:
            back = None
            for x in range(F.n):
                coeff = tilde_bracket(F, sign, i, j, k, x, invert=True)
                if coeff.is_zero():
                    continue
                term = build_Ptilde(F, sign, i + x, j + x, k).scale(coeff)
                back = term if back is None else back.add(term)
            assert back.equals(build_P(F, sign, i, j, k))


def test_imaginary_P_solver():
    for sign in (+1, -1):
        P0 = build_P_imaginary(F, sign, 1, 0, 0)
        assert wheel_check(P0)
        assert has_slope_at_most(P0, 0)
        want = F.one if sign > 0 else F.zero - F.one
        for u in (1, 2):
            assert alpha(P0, u, u + 2) == want
        # scaling the normalization scales the solution (linearity)
        assert alpha(P0.scale(F.integer(2)), 1, 3) == want * F.integer(2)
    # coprime degrees reproduce the simple generator
    P1 = build_P_imaginary(F, +1, 1, 1, 1)
    assert P1.equals(build_P(F, +1, 1, 3, 1))


def test_G_series_small():
    mu = Fraction(-1)
    Gs = solve_G_series(F, +1, mu, 1, 2)
    assert Gs[0].equals(ShuffleElement.unit(F, +1))
    assert not Gs[1].is_zero()
    Gbars = inverse_series(F, +1, Gs)
    acc = None
    for m in range(0, 2):
        t = shuffle_mul(Gs[m], Gbars[1 - m])
        acc = t if acc is None else acc.add(t)
    assert acc.canonicalize().is_zero()
