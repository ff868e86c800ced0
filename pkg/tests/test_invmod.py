"""InverseMod: modulus construction, windowed inverses, ice cream days."""

import random
from math import gcd

import pytest

from orbhilb import (
    LaurentPoly,
    NotCoprimeError,
    build_modulus,
    divides,
    integer_inverse,
    inv_mod,
    reduce_to_window,
)

LP = LaurentPoly


class TestBuildModulus:
    def test_coprime_single_weight(self):
        md = build_modulus(7, (5,))
        assert md.A == LP.one_minus(5)
        assert md.h == LP.one_minus(1)
        assert md.F == LP.geometric(7)
        assert md.d == 6

    def test_x40_modulus(self):
        md = build_modulus(15, (2, 5, 8))
        assert md.F == LP({0: 1, 5: 1, 10: 1})
        assert md.d == 10
        assert md.h * md.F == LP.one_minus(15)
        # h has simple roots only: it is 1-t^5 (1 is a simple root of 1-t^15)
        assert md.h == LP.one_minus(5)

    def test_degenerate_period(self):
        md = build_modulus(1, (3, 4))
        assert md.F == LP.term(1)
        assert md.d == 0

    def test_invariants_random(self):
        rng = random.Random(7)
        for _ in range(40):
            r = rng.randint(1, 30)
            a = tuple(rng.randint(1, 25) for _ in range(rng.randint(1, 4)))
            md = build_modulus(r, a)
            assert md.h * md.F == LP.one_minus(r)
            assert md.F.coeff(0) != 0
            if md.d > 0:
                assert md.F.coeff(md.F.degree) == 1


class TestIntegerInverse:
    def test_examples(self):
        assert integer_inverse(3, 7) == 5
        assert integer_inverse(2, 5) == 3
        assert integer_inverse(5, 1) == 0

    def test_not_invertible(self):
        with pytest.raises(ValueError):
            integer_inverse(6, 9)


class TestInvMod:
    def test_fun_calculation_window(self):
        got = inv_mod(LP.geometric(5), LP.geometric(7), 3, 7)
        assert got == LP({3: 1, 5: 1, 7: 1})

    def test_negative_window(self):
        got = inv_mod(LP.geometric(2), LP.geometric(5), -4, 5)
        assert got == LP({-4: -1, -2: -1})

    def test_half_point(self):
        assert inv_mod(LP.term(1), LP({0: 1, 1: 1}), 3, 2) == LP({3: -1})

    def test_degenerate_modulus(self):
        assert inv_mod(LP.term(1), LP.term(1), 0, 1) == LP()

    def test_noncoprime_rejected(self):
        with pytest.raises(NotCoprimeError):
            inv_mod(LP.one_minus(5), LP.geometric(5), 0, 5)

    def test_random_inverse_properties(self):
        rng = random.Random(20240819)
        for _ in range(60):
            r = rng.randint(2, 30)
            n = rng.randint(1, 3)
            a = tuple(rng.randint(1, 3 * r) for _ in range(n))
            md = build_modulus(r, a)
            if md.d == 0:
                continue
            folded = {}
            for gamma in (-7, -1, 0, 3):
                B = inv_mod(md.A, md.F, gamma, r)
                # support inside the window of d consecutive exponents
                assert gamma <= B.valuation and B.degree <= gamma + md.d - 1
                # defining congruence A*B == 1 mod F
                prod = md.A * B
                low = reduce_to_window(prod, md.F, 0)
                assert low == LP.term(1)
                folded[gamma] = reduce_to_window(B, md.F, 0)
            # all windows represent the same residue class
            assert len(set(folded.values())) == 1


class TestIceCreamDays:
    """One-dimensional numerators are sums over ice cream days.

    For coprime 0 < a < r, k == -a mod r and b the inverse of a mod r, the
    windowed inverse of (1-t^a)/(1-t) modulo (1-t^r)/(1-t) starting at
    floor(c/2)+1 (c = k+2) is either +sum t^j over exponents whose class
    mod r lies in {0, a, ..., a(b-1)} or -sum t^j over the complementary
    classes {1, a+1, ..., a(r-b-1)+1}.
    """

    @staticmethod
    def day_classes(a, r):
        b = integer_inverse(a, r)
        ice = {(a * i) % r for i in range(b)}
        non = {(a * i + 1) % r for i in range(r - b)}
        return ice, non

    def test_all_small_periods(self):
        for r in range(2, 31):
            for a in range(1, r):
                if gcd(a, r) != 1:
                    continue
                for j in (0, 1, 3):
                    k = j * r - a
                    c = k + 2
                    gamma = c // 2 + 1
                    hi = (c - 1) // 2 + r - 1
                    B = inv_mod(LP.geometric(a), LP.geometric(r), gamma, r)
                    ice, non = self.day_classes(a, r)
                    window = range(gamma, hi + 1)
                    bounty = LP({e: 1 for e in window if e % r in ice})
                    famine = LP({e: -1 for e in window if e % r in non})
                    assert B in (bounty, famine), (r, a, k)
