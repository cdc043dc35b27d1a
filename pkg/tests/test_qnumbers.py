"""Tests for the q-analog scalar families."""

import random

import pytest

from qexpand.exactarith import IntPolynomial, ONE, RF_ONE, RationalFunction, ZERO
from qexpand.qnumbers import (
    even_product,
    phi_closed,
    phi_recursive,
    psi,
    q_factorial,
    q_int,
    theta_a,
    theta_b,
    xi,
)
from qexpand.verify import gaussian_binomial, q2_multinomial

P = IntPolynomial


def rf(num, den=(1,)):
    return RationalFunction(P(num), P(den))


class TestQInt:
    def test_base_q(self):
        assert q_int(4) == P((1, 1, 1, 1))

    def test_zero_is_empty_sum(self):
        assert q_int(0) == ZERO

    def test_base_q_squared(self):
        assert q_int(3, 2) == P((1, 0, 1, 0, 1))

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            q_int(-1)
        with pytest.raises(ValueError):
            q_int(2, 3)


class TestQFactorial:
    def test_empty_product(self):
        assert q_factorial(0) == ONE

    def test_two(self):
        assert q_factorial(2) == P((1, 1))

    def test_three(self):
        assert q_factorial(3) == P((1, 2, 2, 1))

    def test_base_q_squared(self):
        assert q_factorial(2, 2) == P((1, 0, 1))


class TestEvenProduct:
    def test_empty(self):
        assert even_product(0) == ONE

    def test_single(self):
        assert even_product(1) == P((1, 1))

    def test_two_factors(self):
        assert even_product(2) == P((1, 2, 2, 2, 1))


class TestXi:
    def test_canonical_value(self):
        assert xi() == rf((0, 1, 1), (1, -1))

    def test_numeric_at_two(self):
        assert xi().evaluate(2) == pytest.approx(-6)

    def test_numeric_at_i(self):
        assert xi().evaluate(1j) == pytest.approx(-1)

    def test_matches_uncleared_form_at_random_points(self):
        # xi was cleared of 1/q by hand; cross-check against the raw form
        rng = random.Random(20260810)
        for _ in range(20):
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            if abs(z) < 0.1 or abs(z - 1) < 0.1 or abs(z + 1) < 0.1:
                continue
            raw = -((1 + z) ** 2) / (z - 1 / z)
            assert xi().evaluate(z) == pytest.approx(raw, rel=1e-9)


class TestThetaA:
    def test_boundary_values(self):
        assert theta_a(1, 0, 0) == RF_ONE
        assert theta_a(0, 0, 1) == RF_ONE

    def test_single_pair(self):
        assert theta_a(1, 0, 1) == rf((1, 1))

    def test_pure_c_term(self):
        assert theta_a(0, 1, 0) == RF_ONE

    def test_recurrence_small_range(self):
        def ext(a, b, g):
            return theta_a(a, b, g) if min(a, b, g) >= 0 else RationalFunction()

        def qpow(k):
            return RationalFunction(P.monomial(k))

        for alpha in range(7):
            for beta in range(4):
                for gamma in range(7):
                    n = alpha + 2 * beta + gamma
                    if not 1 <= n <= 6:
                        continue
                    rhs = (
                        ext(alpha, beta, gamma - 1)
                        + qpow(gamma + 2 * beta) * ext(alpha - 1, beta, gamma)
                        + qpow(gamma)
                        * RationalFunction(q_int(gamma + 1))
                        * ext(alpha, beta - 1, gamma + 1)
                    )
                    assert theta_a(alpha, beta, gamma) == rhs

    def test_beta_zero_is_gaussian_binomial(self):
        for alpha in range(13):
            for gamma in range(13 - alpha):
                expected = RationalFunction(gaussian_binomial(alpha + gamma, alpha))
                assert theta_a(alpha, 0, gamma) == expected

    def test_polynomiality_observation(self):
        # every value in range reduces to a polynomial; recorded, not promised
        polynomial = total = 0
        for alpha in range(11):
            for beta in range(6):
                for gamma in range(11):
                    if alpha + 2 * beta + gamma > 10:
                        continue
                    total += 1
                    polynomial += theta_a(alpha, beta, gamma).den == ONE
        print(f"theta_a polynomial in {polynomial}/{total} cases within bound 10")
        assert total > 0


class TestPhi:
    def test_base_cases(self):
        assert phi_recursive(0) == RF_ONE
        assert phi_recursive(1) == RF_ONE
        assert phi_closed(0) == RF_ONE
        assert phi_closed(1) == RF_ONE

    def test_beta_two(self):
        expected = rf((1, 0, 1), (1, -1))
        assert phi_recursive(2) == expected
        assert phi_closed(2) == expected

    def test_beta_three(self):
        expected = RationalFunction(q_int(3)) * phi_closed(2)
        assert phi_recursive(3) == expected
        assert phi_closed(3) == expected

    def test_beta_four_closed_form_shape(self):
        num = P((1, 0, 1)) * q_int(3) * P((1, 0, 0, 0, 1))
        assert phi_closed(4) == RationalFunction(num, P((1, -1)) ** 2)
        assert phi_closed(4) == phi_recursive(4)

    def test_routes_agree_through_sixteen(self):
        for beta in range(17):
            assert phi_recursive(beta) == phi_closed(beta)


class TestPsi:
    def test_first_factor(self):
        assert psi(1) == rf((1, 0, 1))

    def test_second(self):
        expected = RationalFunction(P((1, 0, 1)) * q_int(3) * P((1, 0, 0, 0, 1)))
        assert psi(2) == expected

    def test_numeric(self):
        assert psi(1).evaluate(2) == pytest.approx(5)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            psi(0)


class TestThetaB:
    def test_boundary_values(self):
        assert theta_b(1, 0, 0) == RF_ONE
        assert theta_b(0, 1, 0) == RF_ONE
        assert theta_b(0, 0, 1) == RF_ONE

    def test_pure_b_square(self):
        assert theta_b(0, 2, 0) == phi_closed(2)

    def test_outer_pair(self):
        assert theta_b(1, 0, 1) == rf((1, 0, 1))

    def test_recurrence_small_range(self):
        def ext(a, b, g):
            return theta_b(a, b, g) if min(a, b, g) >= 0 else RationalFunction()

        def qpow(k):
            return RationalFunction(P.monomial(k))

        for alpha in range(6):
            for beta in range(6):
                for gamma in range(6):
                    n = alpha + beta + gamma
                    if not 1 <= n <= 5:
                        continue
                    rhs = (
                        ext(alpha, beta, gamma - 1)
                        + qpow(2 * gamma) * ext(alpha, beta - 1, gamma)
                        + qpow(2 * gamma + 2 * beta) * ext(alpha - 1, beta, gamma)
                        + xi()
                        * qpow(2 * gamma)
                        * RationalFunction(q_int(gamma + 1, 2))
                        * ext(alpha, beta - 2, gamma + 1)
                    )
                    assert theta_b(alpha, beta, gamma) == rhs

    def test_xi_zero_variant_is_q2_multinomial(self):
        # theta_b with the phi factor forced to 1
        for alpha in range(9):
            for beta in range(9 - alpha):
                for gamma in range(9 - alpha - beta):
                    n = alpha + beta + gamma
                    plain = RationalFunction(
                        q_factorial(n, 2),
                        q_factorial(alpha, 2)
                        * q_factorial(beta, 2)
                        * q_factorial(gamma, 2),
                    )
                    assert plain == RationalFunction(
                        q2_multinomial(alpha, beta, gamma)
                    )


class TestEvenOddIdentity:
    def test_identity_through_twenty(self):
        one_plus_q = P((1, 1))
        for i in range(1, 21):
            assert one_plus_q * q_int(2 * i + 1, 2) == q_int(4 * i + 2)

    def test_degrees_match(self):
        for i in (1, 5, 20):
            lhs = P((1, 1)) * q_int(2 * i + 1, 2)
            assert lhs.degree == q_int(4 * i + 2).degree == 4 * i + 1
