import random
from fractions import Fraction

import pytest

from src.errors import DenominatorVanishes, DivisionByZero, InvalidSpecialization, ParseError
from src.scalars import (
    canonical_string,
    default_field,
    factored_string,
    inverse,
    parse_rational,
    rational,
    scalar_arith,
    scalar_field,
    substitute,
    symbol,
)


@pytest.fixture
def K():
    return default_field()


NAMES = ("alpha", "beta", "gamma", "a", "b")
BINDINGS = {"alpha": "2", "beta": "1/3", "b": "5/2"}


def random_scalar(rng: random.Random, K):
    """A quotient whose denominator stays positive at positive specializations"""

    def monomial():
        value = K.one
        for _ in range(rng.randint(0, 2)):
            value = value * symbol(K, rng.choice(NAMES))
        return value

    numer = sum((monomial() * rng.randint(-3, 3) for _ in range(3)), K.zero)
    denom = sum((monomial() * rng.randint(1, 3) for _ in range(2)), K.one)
    return numer / denom


class TestArithmetic:
    """Field operations on scalars"""

    def test_cancellation(self, K):
        """beta/(alpha*gamma) times alpha*gamma is beta"""
        alpha, beta, gamma = symbol(K, "alpha"), symbol(K, "beta"), symbol(K, "gamma")
        assert scalar_arith("mul", beta / (alpha * gamma), alpha * gamma) == beta

    def test_add_and_negate(self, K):
        beta = symbol(K, "beta")
        assert scalar_arith("add", beta, scalar_arith("neg", beta)) == K.zero

    def test_inverse(self, K):
        alpha = symbol(K, "alpha")
        assert inverse(alpha) * alpha == K.one

    def test_inverse_of_zero(self, K):
        with pytest.raises(DivisionByZero):
            inverse(K.zero)

    def test_unknown_operation(self, K):
        with pytest.raises(ValueError):
            scalar_arith("pow", K.one, K.one)

    def test_extra_symbols(self):
        """A field can carry symbols beyond the base set"""
        K = scalar_field(("q",))
        assert symbol(K, "q") + symbol(K, "beta") != symbol(K, "q")

    def test_reserved_symbol_rejected(self):
        with pytest.raises(ParseError):
            scalar_field(("x",))

    @pytest.mark.parametrize("seed", range(5))
    def test_associativity(self, K, seed):
        rng = random.Random(seed)
        a, b, c = (random_scalar(rng, K) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c

    @pytest.mark.parametrize("seed", range(5))
    def test_inverse_of_random(self, K, seed):
        rng = random.Random(100 + seed)
        s = random_scalar(rng, K)
        while not s:
            s = random_scalar(rng, K)
        assert s * inverse(s) == K.one


class TestRationals:
    """Rational literals"""

    def test_parse(self):
        assert parse_rational("3/4") == Fraction(3, 4)
        assert parse_rational(-2) == Fraction(-2)

    def test_parse_error(self):
        with pytest.raises(ParseError):
            parse_rational("x")

    def test_embed(self, K):
        assert rational(K, "1/2") * 2 == K.one


class TestSubstitute:
    """Specializing symbols to rationals"""

    def test_power(self, K):
        beta = symbol(K, "beta")
        assert substitute(beta**2, {"beta": 2}) == rational(K, 4)

    def test_partial(self, K):
        beta, b = symbol(K, "beta"), symbol(K, "b")
        assert substitute(beta * b, {"beta": "1/3"}) == b / 3

    def test_pole(self, K):
        beta = symbol(K, "beta")
        with pytest.raises(DenominatorVanishes):
            substitute(K.one / (beta - 1), {"beta": 1})

    def test_unit_to_zero(self, K):
        with pytest.raises(InvalidSpecialization):
            substitute(symbol(K, "alpha"), {"alpha": 0})

    def test_unknown_symbol(self, K):
        with pytest.raises(InvalidSpecialization):
            substitute(K.one, {"q": 1})

    @pytest.mark.parametrize("seed", range(5))
    def test_commutes_with_arithmetic(self, K, seed):
        rng = random.Random(200 + seed)
        a, b = random_scalar(rng, K), random_scalar(rng, K)
        assert substitute(a + b, BINDINGS) == substitute(a, BINDINGS) + substitute(b, BINDINGS)
        assert substitute(a * b, BINDINGS) == substitute(a, BINDINGS) * substitute(b, BINDINGS)
        assert substitute(-a, BINDINGS) == -substitute(a, BINDINGS)


class TestCanonicalString:
    """Deterministic text of scalars"""

    def test_one(self, K):
        assert canonical_string(K.one) == "1"

    def test_sum(self, K):
        assert canonical_string(symbol(K, "beta") + 1) == "(beta + 1)"

    def test_quotient(self, K):
        beta, alpha = symbol(K, "beta"), symbol(K, "alpha")
        assert canonical_string(beta / alpha) == "beta/alpha"

    def test_equal_values_equal_text(self, K):
        beta = symbol(K, "beta")
        assert canonical_string((beta**2 - 1) / (beta - 1)) == canonical_string(beta + 1)

    def test_factored(self, K):
        beta, b = symbol(K, "beta"), symbol(K, "b")
        assert factored_string(b * beta + b) == "b*(beta + 1)"
