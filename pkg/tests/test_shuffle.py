import random
from fractions import Fraction

import pytest

from trigshuffle.scalars import Field
from trigshuffle.rf import RF, ResidualPole, zvar
from trigshuffle.shuffle import (ShuffleElement, grid_binomials,
                                 has_slope_at_most, naive_slope, reindex,
                                 shuffle_mul, specialize, wheel_check,
                                 zeta_exponent, zeta_linear_factors)
from trigshuffle.generators import build_E, window_vector


F2 = Field(2)
F3 = Field(3)


def test_reindex_examples():
    (cv, mult) = reindex(F2, 1, 1)
    assert cv == (1, 1) and mult.is_one()
    (cv, mult) = reindex(F2, 3, 1)
    assert cv == (1, 2) and mult == F2.t(-4)
    (cv, mult) = reindex(F3, 5, 1)
    assert cv == (2, 2) and mult == F3.t(-6)


def test_zeta_examples():
    # same color: (z1 q - z2 q^-1) / (z1 - z2)
    fn, fd = zeta_linear_factors(F2, 1, 1, zvar(1, 1), zvar(1, 2))
    assert len(fn) == 1 and len(fd) == 1
    zeros = (0, 0)
    assert fn[0] == [(zvar(1, 1), (1, 1, 0, zeros)), (zvar(1, 2), (-1, -1, 0, zeros))]
    assert fd[0] == [(zvar(1, 1), (1, 0, 0, zeros)), (zvar(1, 2), (-1, 0, 0, zeros))]
    # j = i+1 for n >= 3: inverted factor, no t powers
    fn, fd = zeta_linear_factors(F3, 1, 2, zvar(1, 1), zvar(2, 1))
    assert fn[0][0] == (zvar(1, 1), (1, 0, 0, (0, 0, 0)))
    # color difference 2 mod 3: trivial
    fn, fd = zeta_linear_factors(F3, 1, 3, zvar(1, 1), zvar(3, 1))
    assert fn == [] and fd == []
    assert zeta_exponent(3, 1, 1) == 1
    assert zeta_exponent(3, 1, 2) == -1
    assert zeta_exponent(3, 1, 3) == 0


def test_shuffle_unit_and_kernel():
    one_i = ShuffleElement.from_monomial(F2, +1, 1, 0)
    prod = shuffle_mul(one_i, one_i)
    expect = ShuffleElement(F2, +1, (2, 0),
                            RF.const(F2, F2.q() + F2.q(-1)))
    assert prod.equals(expect)
    unit = ShuffleElement.unit(F2, +1)
    assert shuffle_mul(prod, unit).equals(prod)
    assert shuffle_mul(unit, prod).equals(prod)


def test_shuffle_window_commutator():
    # Golden relation in degree ((1,1), 0), solved once by brute force:
    # E0_[1;2) E0_[2;3) - E0_[2;3) E0_[1;2) = (q^-2 - 1)(E0_[1;3) - E0_[2;4))
    mu = Fraction(0)
    a = shuffle_mul(build_E(F2, +1, 1, 2, mu), build_E(F2, +1, 2, 3, mu))
    c = shuffle_mul(build_E(F2, +1, 2, 3, mu), build_E(F2, +1, 1, 2, mu))
    b = build_E(F2, +1, 1, 3, mu)
    d = build_E(F2, +1, 2, 4, mu)
    lam = F2.q(-2) - F2.one
    assert a.sub(c).equals(b.sub(d).scale(lam))


def test_wheel_examples():
    one_var = ShuffleElement.from_monomial(F2, +1, 1, 3)
    assert wheel_check(one_var)
    mu = Fraction(1, 2)
    E = build_E(F2, +1, 1, 3, mu)
    prod = shuffle_mul(E, ShuffleElement.from_monomial(F2, +1, 1, 1))
    assert wheel_check(prod)
    bad = ShuffleElement(F2, +1, (2, 1),
                         RF(F2, {(): F2.one}, grid_binomials(F2, (2, 1))))
    assert not wheel_check(bad)


def test_slope_examples():
    mu = Fraction(1, 2)
    E = build_E(F2, +1, 1, 3, mu)
    assert has_slope_at_most(E, mu)
    assert not has_slope_at_most(E, mu - 1)
    one_i = ShuffleElement.from_monomial(F2, +1, 1, 0)
    assert naive_slope(one_i) == 0
    qq = shuffle_mul(one_i, one_i)
    assert not has_slope_at_most(qq, Fraction(-1))
    # minus side: degree (-k, d) has naive slope d / (-|k|)
    Em = build_E(F2, -1, 1, 3, Fraction(1, 2))
    assert Em.vdeg == -1
    assert naive_slope(Em) == Fraction(1, 2)
    assert has_slope_at_most(Em, Fraction(1, 2))


def test_specialize_examples():
    # same-color zeta at z1 -> q^2, z2 -> 1: (q^3 - q^-1)/(q^2 - 1)
    kernel = RF.const(F2, F2.one).mul_linear_factors(
        *zeta_linear_factors(F2, 1, 1, zvar(1, 1), zvar(1, 2)))
    got = kernel.substitute({zvar(1, 1): (F2.q(2), None),
                             zvar(1, 2): (F2.one, None)})
    want = (F2.q(3) - F2.q(-1)) / (F2.q(2) - F2.one)
    assert got.num.get((), F2.zero) == want and not got.den
    unit = ShuffleElement.unit(F2, +1)
    assert specialize(unit, {}) == F2.one
    # strict mode propagates a residual pole
    E = build_E(F2, +1, 1, 3, Fraction(0))
    bad = {zvar(1, 1): (F2.q(-2), None), zvar(2, 1): (F2.one, None)}
    with pytest.raises(ResidualPole):
        specialize(E, bad, mode="strict")


def test_degree_additivity_and_closure():
    rng = random.Random(7)
    mus = [Fraction(0), Fraction(1), Fraction(-1)]
    for _ in range(10):
        i, ln = rng.randint(1, 2), rng.randint(1, 2)
        mu1, mu2 = rng.choice(mus), rng.choice(mus)
        R = build_E(F2, +1, i, i + ln, mu1)
        S = build_E(F2, +1, 1, 2, mu2)
        prod = shuffle_mul(R, S)
        assert prod.hdeg == tuple(a + b for a, b in zip(R.hdeg, S.hdeg))
        if not prod.is_zero():
            assert prod.vdeg == R.vdeg + S.vdeg
            assert wheel_check(prod)
            mu = max(mu1, mu2)
            assert has_slope_at_most(prod, mu) or not (
                has_slope_at_most(R, mu) and has_slope_at_most(S, mu))


def test_slope_subalgebra_closure():
    for mu in (Fraction(0), Fraction(1, 2)):
        R = build_E(F2, +1, 1, 3, mu)
        S = build_E(F2, +1, 2, 4, mu)
        assert has_slope_at_most(R, mu) and has_slope_at_most(S, mu)
        assert has_slope_at_most(shuffle_mul(R, S), mu)


def test_canonicalize_idempotent():
    E = build_E(F2, +1, 1, 4, Fraction(1, 3))
    c1 = E.canonicalize()
    c2 = c1.canonicalize()
    assert c1.rf.num == c2.rf.num and c1.rf.den == c2.rf.den


def test_window_vector():
    assert window_vector(2, 1, 4) == (2, 1)
    assert window_vector(3, 2, 4) == (0, 1, 1)
