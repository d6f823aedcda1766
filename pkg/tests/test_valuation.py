"""Prime ideals, certified valuations, Rouquier-ring membership."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from heckefam.cyclotomic import make, one, rat, zeta
from heckefam.laurent import LaurentPoly, ratfun_reduce
from heckefam.ntheory import euler_phi, prime_to_part
from heckefam.valuation import (
    INF,
    NO,
    UNSUPPORTED,
    YES,
    op_member,
    primes_above,
    val,
    val_at_least,
)

L = LaurentPoly.from_x_coeffs


class TestPrimesAbove:
    def test_split_prime(self):
        specs = primes_above(7, 3)
        assert len(specs) == 2
        assert {s.factor for s in specs} == {(3, 1), (5, 1)}  # t-4 and t-2 mod 7
        assert all(s.e == 1 and s.f == 1 for s in specs)

    def test_ramified_prime(self):
        (s,) = primes_above(3, 3)
        assert s.e == 2 and s.f == 1

    def test_conductor_one(self):
        (s,) = primes_above(2, 1)
        assert s.e == 1 and s.f == 1

    def test_inert(self):
        (s,) = primes_above(2, 3)
        assert s.f == 2 and s.factor == (1, 1, 1)

    def test_not_prime_rejected(self):
        with pytest.raises(ValueError):
            primes_above(6, 5)

    @pytest.mark.parametrize("p,n", [(2, 15), (3, 20), (5, 12), (7, 9), (3, 9)])
    def test_efg_sums_to_phi(self, p, n):
        specs = primes_above(p, n)
        nprime, ppart = prime_to_part(n, p)
        assert sum(s.e * s.f for s in specs) == euler_phi(nprime) * euler_phi(ppart)
        assert all(s.e == euler_phi(ppart) for s in specs)

    def test_deterministic_order(self):
        a = primes_above(7, 3)
        b = primes_above(7, 3)
        assert list(a) == sorted(a, key=lambda s: s.factor) == list(b)


class TestVal:
    def test_totally_ramified(self):
        (s,) = primes_above(3, 3)
        assert val(s, 1 - zeta(3)) == 1
        assert val(s, 3) == 2

    def test_unramified(self):
        s = primes_above(7, 3)[0]
        assert val(s, 7) == 1

    def test_units(self):
        for s in primes_above(5, 12) + primes_above(2, 5):
            assert val(s, zeta(s.conductor)) == 0

    def test_zero(self):
        (s,) = primes_above(3, 3)
        assert val(s, 0) == INF

    def test_incompatible_conductor(self):
        (s,) = primes_above(3, 3)
        with pytest.raises(ValueError):
            val(s, zeta(5))

    def test_fraction_shift(self):
        (s,) = primes_above(3, 3)
        assert val(s, Fraction(1, 3)) == -2
        assert val(s, Fraction(5, 27)) == -6

    def test_val_at_least_agrees(self):
        (s,) = primes_above(3, 9)
        a = (1 - zeta(9)) ** 4
        v = val(s, a)
        assert val_at_least(s, a, v) and not val_at_least(s, a, v + 1)


@st.composite
def conductor12_elements(draw):
    size = draw(st.integers(1, 3))
    raw = {
        draw(st.integers(0, 11)): draw(st.fractions(min_value=-3, max_value=3, max_denominator=4))
        for _ in range(size)
    }
    return make(12, raw)


class TestValProperties:
    @settings(max_examples=60, deadline=None)
    @given(conductor12_elements(), conductor12_elements())
    def test_additivity_and_ultrametric(self, a, b):
        for p in (2, 3):
            s = primes_above(p, 12)[0]
            va, vb = val(s, a), val(s, b)
            if not a.is_zero() and not b.is_zero():
                assert val(s, a * b) == va + vb
            assert val(s, a + b) >= min(va, vb)

    def test_galois_robustness(self):
        # answers at the two primes above 7 in Q(zeta_3) are exchanged by Galois
        s1, s2 = primes_above(7, 3)
        a = rat(2) - zeta(3)
        assert sorted([val(s1, a), val(s2, a)]) == sorted(
            [val(s2, a.galois(2)), val(s1, a.galois(2))]
        )


class TestOpMember:
    def test_half_at_two(self):
        (p2,) = primes_above(2, 1)
        S = ratfun_reduce(L([1]), L([2]))
        assert op_member(S, p2) == NO

    def test_one_plus_x_over_one_minus_x(self):
        S = ratfun_reduce(L([1, 1]), L([1, -1]))
        for spec in (primes_above(2, 1)[0], primes_above(3, 3)[0], primes_above(5, 5)[0]):
            assert op_member(S, spec) == YES

    def test_golden_ratio_style_failure(self):
        (p5,) = primes_above(5, 5)
        sqrt5 = 1 + 2 * zeta(5) + 2 * zeta(5, 4)
        assert sqrt5 * sqrt5 == 5
        S = ratfun_reduce(LaurentPoly.const(rat(5) - sqrt5), LaurentPoly.const(rat(10)))
        assert op_member(S, p5) == NO
        assert val(p5, rat(5) - sqrt5) == 2 and val(p5, 10) == 4

    def test_non_unit_denominator_unsupported(self):
        S = ratfun_reduce(L([1]), L([1, 2]))
        (p2,) = primes_above(2, 1)
        assert op_member(S, p2) == UNSUPPORTED

    def test_zero_numerator(self):
        (p2,) = primes_above(2, 1)
        assert op_member(ratfun_reduce(LaurentPoly({}), L([2])), p2) == YES

    def test_ring_closure(self):
        # yes-elements are closed under + and *
        (p3,) = primes_above(3, 3)
        z = zeta(3)
        elems = [
            ratfun_reduce(L([1, 1]), L([1, -1])),
            ratfun_reduce(LaurentPoly.const(z), L([1, 0, 1])),
            ratfun_reduce(LaurentPoly.const(rat(Fraction(1, 2))), L([1])),
            ratfun_reduce(LaurentPoly.const(1 - z), L([1, 1])),
        ]
        yes = [S for S in elems if op_member(S, p3) == YES]
        assert len(yes) >= 3
        for a in yes:
            for b in yes:
                assert op_member(a + b, p3) == YES
                assert op_member(a * b, p3) == YES


class TestGaloisRobustnessMembership:
    def test_op_member_answers_permute_with_galois(self):
        # the two primes above 7 at conductor 3: applying the Galois twist to
        # the input swaps the per-prime yes/no pattern
        s1, s2 = primes_above(7, 3)
        z = zeta(3)
        for scalar in (rat(7) * (2 - z), (rat(2) - z) ** 2, rat(1) - 2 * z):
            S = ratfun_reduce(LaurentPoly.const(one), LaurentPoly.const(scalar))
            T = ratfun_reduce(
                LaurentPoly.const(one), LaurentPoly.const(scalar.galois(2))
            )
            assert {op_member(S, s1), op_member(S, s2)} == {
                op_member(T, s1),
                op_member(T, s2),
            }
            assert op_member(S, s1) == op_member(T, s2)
