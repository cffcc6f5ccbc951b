from math import comb

import pytest
from sympy.functions.combinatorial.numbers import stirling

from src.qcomb import (
    P_poly,
    Q_poly,
    falling,
    gauss_binomial,
    mixed_binomial,
    mixed_number,
    q_factorial,
    q_int,
    rising,
    stirling2,
    stirling_row,
    theta,
    trig_split,
    unipoly_ring,
)
from src.scalars import default_field, symbol


@pytest.fixture
def K():
    return default_field()


class TestQIntegers:
    """q-integers, q-factorials and Gaussian binomials"""

    def test_q_one(self, K):
        """[r]_1 is a sum of ones"""
        assert q_int(4, K.one) == 4

    def test_q_int_zero(self, K):
        assert q_int(0, symbol(K, "beta")) == 0

    def test_gauss_two_one(self, K):
        beta = symbol(K, "beta")
        assert gauss_binomial(2, 1, beta) == 1 + beta

    def test_gauss_out_of_range(self, K):
        assert gauss_binomial(3, 4, symbol(K, "beta")) == 0

    @pytest.mark.parametrize("r", range(8))
    def test_second_pascal_rule(self, K, r):
        """[r+1, k] = q^(r+1-k) [r, k-1] + [r, k]"""
        q = symbol(K, "beta")
        for k in range(1, r + 1):
            lhs = gauss_binomial(r + 1, k, q)
            rhs = q ** (r + 1 - k) * gauss_binomial(r, k - 1, q) + gauss_binomial(r, k, q)
            assert lhs == rhs

    @pytest.mark.parametrize("r", range(1, 8))
    def test_factorial_quotient(self, K, r):
        q = symbol(K, "beta")
        for k in range(r + 1):
            assert gauss_binomial(r, k, q) * q_factorial(k, q) * q_factorial(r - k, q) == q_factorial(r, q)

    def test_gauss_at_one_is_binomial(self, K):
        for k in range(6):
            assert gauss_binomial(5, k, K.one) == comb(5, k)


class TestMixedNumbers:
    """Two-parameter mixed numbers"""

    @pytest.mark.parametrize("r", range(1, 9))
    def test_sigma_one(self, K, r):
        beta = symbol(K, "beta")
        assert mixed_number(r, beta, K.one) == q_int(r, beta)

    @pytest.mark.parametrize("r", range(1, 9))
    def test_scaling(self, K, r):
        """<r>_{rho,sigma} = sigma^(r-1) [r]_{rho/sigma}"""
        rho, sigma = symbol(K, "beta"), symbol(K, "alpha")
        assert mixed_number(r, rho, sigma) == sigma ** (r - 1) * q_int(r, rho / sigma)

    @pytest.mark.parametrize("r", range(0, 9))
    def test_difference_of_powers(self, K, r):
        """<r>_{rho,sigma} (rho - sigma) = rho^r - sigma^r"""
        rho, sigma = symbol(K, "beta"), symbol(K, "gamma")
        assert mixed_number(r, rho, sigma) * (rho - sigma) == rho**r - sigma**r

    def test_mixed_binomial_sigma_one(self, K):
        beta = symbol(K, "beta")
        assert mixed_binomial(4, 2, beta, K.one) == gauss_binomial(4, 2, beta)


class TestStirling:
    """Stirling numbers of the second kind"""

    def test_diagonal(self):
        assert all(stirling2(n, n) == 1 for n in range(7))

    def test_rows_match_sympy(self):
        for n in range(1, 6):
            assert stirling_row(n) == [int(stirling(n, k)) for k in range(1, n + 1)]

    def test_row_four(self):
        assert stirling_row(4) == [1, 7, 6, 1]

    @pytest.mark.parametrize("n, bell", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)])
    def test_row_sums_are_bell_numbers(self, n, bell):
        assert sum(stirling2(n, k) for k in range(n + 1)) == bell


class TestFactorials:
    def test_falling(self):
        assert falling(5, 2) == 20

    def test_rising(self):
        assert rising(3, 2) == 12

    def test_falling_with_step(self, K):
        a = symbol(K, "a")
        _, y = unipoly_ring(K, "y")
        assert falling(y, 2, a) == y**2 - y * a


class TestPolynomialFamilies:
    """Q, P, theta and the trig split"""

    def test_q_two(self, K):
        beta = symbol(K, "beta")
        _, y = unipoly_ring(K, "y")
        assert Q_poly(2, beta) == y * (beta + 1) - 1

    def test_p_reduces_to_q_free(self, K):
        """b = 0 and alpha = 1 leave [r]_beta y"""
        beta = symbol(K, "beta")
        _, y = unipoly_ring(K, "y")
        assert P_poly(3, beta, K.one, K.zero) == y * q_int(3, beta)

    def test_theta_k_zero(self, K):
        beta, b = symbol(K, "beta"), symbol(K, "b")
        assert theta(3, 2, 0, beta, b) == beta**6

    def test_theta_one_one(self, K):
        """z x = beta x z + b"""
        beta, b = symbol(K, "beta"), symbol(K, "b")
        assert theta(1, 1, 1, beta, b) == b

    def test_trig_split(self, K):
        _, u = unipoly_ring(K, "u")
        cosine, sine = trig_split(3, u)
        assert cosine == u**3 - 3 * u
        assert sine == 3 * u**2 - 1

    @pytest.mark.parametrize("m", range(8))
    def test_trig_split_recursion(self, K, m):
        """C_{m+1} = u C_m - S_m and S_{m+1} = u S_m + C_m"""
        _, u = unipoly_ring(K, "u")
        cosine, sine = trig_split(m, u)
        assert trig_split(m + 1, u) == (u * cosine - sine, u * sine + cosine)
