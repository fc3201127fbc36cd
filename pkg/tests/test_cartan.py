from fractions import Fraction

import pytest

from trigshuffle.scalars import Field
from trigshuffle.shuffle import ShuffleElement, shuffle_mul
from trigshuffle.cartan import (Dressed, cartan_cbar, cartan_mul, cartan_one,
                                cartan_psi, cartan_series,
                                commute_a_with_shuffle, heisenberg_commutator,
                                move_psi_across, normal_order, phi_series,
                                vertical_P0)
from trigshuffle.generators import build_E
from trigshuffle.rf import mono_from, zvar, RF


F = Field(2)


def el_of_color(s, e=0):
    return ShuffleElement.from_monomial(F, +1, s, e)


def test_move_psi_across_examples():
    R = el_of_color(1)
    assert move_psi_across(F, 1, R) == F.q(-1)
    unit = ShuffleElement.unit(F, +1)
    assert move_psi_across(F, 1, unit).is_one()
    R2 = build_E(F, +1, 2, 4, Fraction(0))  # hdeg s-1, s with s = 1 wrapped
    # hdeg (1,1): k_{s-1} - k_s = 0 for every s
    assert move_psi_across(F, 1, R2).is_one()
    assert move_psi_across(F, 2, R2).is_one()


def test_commute_a_examples():
    unit = ShuffleElement.unit(F, +1)
    assert commute_a_with_shuffle(F, 1, 1, unit).is_zero()
    s = 1
    R = el_of_color(s)
    got = commute_a_with_shuffle(F, s, 1, R)
    # [a_{s,1}, R+] = R+ (sum z_{s-1,t} - sum z_{s,t}) = -R z_{s,1} + R z_{s-1,...}
    # for hdeg = sigma^s the s-1 sum is empty
    want_rf = R.rf.mul_mono(mono_from(zvar(s, 1), 1)).neg()
    want = Dressed.from_body(ShuffleElement(F, +1, R.hdeg, want_rf))
    assert got.equals(want)
    # cross-sign: [a_{s,-1}, R+] = R+ cbar^{-1} (q z_{s,1}^{-1} - ...)
    got = commute_a_with_shuffle(F, s, -1, R)
    body_rf = R.rf.mul_mono(mono_from(zvar(s, 1), -1), F.q(1))
    want = Dressed.from_body(ShuffleElement(F, +1, R.hdeg, body_rf),
                             cartan=cartan_cbar(F.n, -1))
    assert got.equals(want)


def test_heisenberg_commutator():
    assert heisenberg_commutator(F, 1, 1, 2, -1) is None
    coeff, e1, e2 = heisenberg_commutator(F, 1, 1, 1, -1)
    assert coeff == F.one / (F.q(-1) - F.q())
    assert (e1, e2) == (1, -1)
    assert heisenberg_commutator(F, 1, 1, 1, 1) is None


def test_phi_series_examples():
    phis = phi_series(F, 1, +1, 1)
    # phi_{s,0} = psi_{s+1} psi_s^{-1}
    want0 = Dressed.from_cartan(F, +1, cartan_mul(cartan_psi(2, 2, 1),
                                                  cartan_psi(2, 1, -1)))
    assert phis[0].equals(want0)
    # phi_{s,1} = psi-ratio (q a_{s,1} - q^-1 a_{s+1,1}) (q^-1 - q)
    fac = F.q(-1) - F.q()
    t1 = Dressed.from_heis(F, +1, 1, 1, F.q() * fac)
    t2 = Dressed.from_heis(F, +1, 2, 1, F.q(-1) * fac)
    ratio_p = cartan_mul(cartan_psi(2, 2, 1), cartan_psi(2, 1, -1))
    assert phis[1].equals(t1.sub(t2).mul_cartan(ratio_p))
    # minus mirror
    phis_m = phi_series(F, 1, -1, 1)
    ratio = cartan_mul(cartan_psi(2, 1, 1), cartan_psi(2, 2, -1))
    s1 = Dressed.from_heis(F, -1, 1, -1, fac)
    s2 = Dressed.from_heis(F, -1, 2, -1, fac)
    assert phis_m[1].equals(s1.sub(s2).mul_cartan(ratio))


def test_normal_order_examples():
    s = 1
    R = el_of_color(s)
    # psi_s R+ with hdeg sigma^s: q^{-1} R+ psi_s
    got = normal_order(F, +1, [("psi", s, 1), ("body", R)])
    want = Dressed.from_body(R.scale(F.q(-1)), (),
                             cartan_psi(2, s, 1))
    assert got.equals(want)
    # idempotence: ordering an ordered product changes nothing
    again = normal_order(F, +1, [("body", R.scale(F.q(-1))), ("psi", s, 1)])
    assert again.equals(want)
    # psi_{s+n} X = c (psi_s X)
    got = normal_order(F, +1, [("psi", s + F.n, 1), ("body", R)])
    want = Dressed.from_body(R.scale(F.q(-1)), (),
                             cartan_mul(cartan_psi(2, s, 1), ((0, 0), 1, 0)))
    assert got.equals(want)


def test_normal_order_a_past_body():
    s = 1
    R = el_of_color(s, 2)
    got = normal_order(F, +1, [("body", R), ("a", s, 1)])
    # R a = a R - [a, R]
    comm = commute_a_with_shuffle(F, s, 1, R)
    want = Dressed.from_body(R, ((s, 1),), cartan_one(2)).sub(comm)
    assert got.equals(want)


def test_commutator_derivation_property():
    # [a, R*S] = [a,R]*S + R*[a,S] within the plus half
    R = build_E(F, +1, 1, 2, Fraction(1))
    S = build_E(F, +1, 2, 4, Fraction(0))
    s, d = 2, 1
    prod = shuffle_mul(R, S)
    lhs = commute_a_with_shuffle(F, s, d, prod)
    t1 = commute_a_with_shuffle(F, s, d, R).mul(Dressed.from_body(S))
    t2 = Dressed.from_body(R).mul(commute_a_with_shuffle(F, s, d, S))
    assert lhs.equals(t1.add(t2))


def test_psi_cross_additivity():
    R = build_E(F, +1, 1, 2, Fraction(0))
    S = build_E(F, +1, 1, 3, Fraction(1))
    prod = shuffle_mul(R, S)
    for s in (1, 2):
        assert move_psi_across(F, s, prod) == \
            move_psi_across(F, s, R) * move_psi_across(F, s, S)


def test_cartan_series_examples():
    for sign in (+1, -1):
        ser = cartan_series(F, "E", sign, 1, 2)
        assert ser[0].equals(Dressed.unit(F, sign))
    r = 2
    ser = cartan_series(F, "E", +1, r, 1)
    want = Dressed.from_heis(F, +1, r, 1,
                             (F.one - F.q(-2)) * F.t(2 * (r - 1)))
    assert ser[1].equals(want)
    p0 = vertical_P0(F, +1, r, 3)
    want = Dressed.from_heis(F, +1, r, 3, F.t((2 * r - 1) * 3))
    assert p0.equals(want)
    p0m = vertical_P0(F, -1, r, 2)
    want = Dressed.from_heis(F, -1, r, -2, F.t(-(2 * r - 1) * 2)).neg()
    assert p0m.equals(want)


def test_normal_order_linear():
    R = el_of_color(1)
    S = el_of_color(2)
    a = normal_order(F, +1, [("psi", 1, 1), ("body", R.add(R))])
    b = normal_order(F, +1, [("psi", 1, 1), ("body", R)])
    assert a.equals(b.add(b))
