"""Exact scalars: the rational function field in the algebra parameters.

Scalars are sympy ``FracElement`` values over ``ZZ`` with graded-lex monomial
order. Every arithmetic result is cancelled, and the denominator keeps a
positive leading coefficient, so equal values compare and hash equal.
"""

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from sympy import ZZ
from sympy.polys.fields import FracElement, FracField, field
from sympy.polys.orderings import grlex

from .errors import DenominatorVanishes, DivisionByZero, InvalidSpecialization, ParseError

Scalar = FracElement
RationalLike = Union[int, str, Fraction]

BASE_SYMBOLS = (
    "alpha", "beta", "gamma", "a", "b",
    "a1", "b1", "c1", "d1",
    "a2", "b2", "c2", "d2",
    "a3", "b3", "c3", "d3",
)
UNIT_SYMBOLS = ("alpha", "beta", "gamma")
RESERVED = ("x", "y", "z")


@lru_cache(maxsize=None)
def scalar_field(extra: Tuple[str, ...] = ()) -> FracField:
    """Return the coefficient field over the base symbols plus ``extra``"""
    for name in extra:
        if name in RESERVED or not name.isidentifier():
            raise ParseError(f"invalid symbol name {name!r}")
    names = sorted(set(BASE_SYMBOLS) | set(extra))
    K, *_ = field(",".join(names), ZZ, grlex)
    return K


def default_field() -> FracField:
    return scalar_field(())


@lru_cache(maxsize=None)
def symbol_map(K: FracField) -> Dict[str, Scalar]:
    """Map symbol names to the generators of ``K``"""
    return {str(sym): gen for sym, gen in zip(K.symbols, K.gens)}


def symbol_names(K: FracField) -> Tuple[str, ...]:
    return tuple(str(sym) for sym in K.symbols)


def symbol(K: FracField, name: str) -> Scalar:
    try:
        return symbol_map(K)[name]
    except KeyError:
        raise ParseError(f"unknown symbol {name!r}") from None


def parse_rational(text: RationalLike) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise ParseError(f"not a rational number: {text!r}") from None


def rational(K: FracField, value: RationalLike) -> Scalar:
    """Embed an integer or rational into ``K``"""
    q = parse_rational(value)
    return K(q.numerator) / K(q.denominator)


def scalar_arith(op: str, lhs: Scalar, rhs: Optional[Scalar] = None) -> Scalar:
    """Apply one of add, mul, neg, inv"""
    if op == "add":
        return lhs + rhs
    if op == "mul":
        return lhs * rhs
    if op == "neg":
        return -lhs
    if op == "inv":
        return inverse(lhs)
    raise ValueError(f"unknown scalar operation {op!r}")


def inverse(s: Scalar) -> Scalar:
    if not s:
        raise DivisionByZero("cannot invert the zero scalar")
    return s.field.one / s


def _evaluate(poly, values, K: FracField) -> Scalar:
    total = K.zero
    for monom, coeff in poly.terms():
        term = K(int(coeff))
        for value, exp in zip(values, monom):
            if exp:
                term = term * value**exp
        total = total + term
    return total


def substitute(s: Scalar, bindings: Mapping[str, RationalLike]) -> Scalar:
    """Specialize the bound symbols of ``s`` to rationals"""
    K = s.field
    known = symbol_map(K)
    values = []
    for name, value in bindings.items():
        if name not in known:
            raise InvalidSpecialization(f"unknown symbol {name!r}")
        if name in UNIT_SYMBOLS and parse_rational(value) == 0:
            raise InvalidSpecialization(f"{name} must stay nonzero")
    for name, gen in known.items():
        values.append(rational(K, bindings[name]) if name in bindings else gen)

    denom = _evaluate(s.denom, values, K)
    if not denom:
        raise DenominatorVanishes(f"denominator vanishes under {dict(bindings)}")
    return _evaluate(s.numer, values, K) / denom


def _monomial_text(names: Iterable[str], monom) -> str:
    return "*".join(
        name if exp == 1 else f"{name}^{exp}" for name, exp in zip(names, monom) if exp
    )


def _term_text(names, monom, coeff) -> str:
    mono = _monomial_text(names, monom)
    c = int(coeff)
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _terms_text(names, terms) -> str:
    if not terms:
        return "0"
    (monom, coeff), rest = terms[0], terms[1:]
    out = _term_text(names, monom, coeff)
    for monom, coeff in rest:
        sign = " - " if coeff < 0 else " + "
        out += sign + _term_text(names, monom, -coeff if coeff < 0 else coeff)
    return out


def _denominator_text(names, denom) -> str:
    terms = denom.terms()
    text = _terms_text(names, terms)
    if len(terms) == 1:
        monom, coeff = terms[0]
        if not any(monom) or (coeff == 1 and sum(1 for e in monom if e) == 1):
            return text
    return f"({text})"


def canonical_string(s: Scalar) -> str:
    """Deterministic text of a scalar, parseable by the expression grammar"""
    names = symbol_names(s.field)
    terms = s.numer.terms()
    num = _terms_text(names, terms)
    if len(terms) > 1:
        num = f"({num})"
    if s.denom == 1:
        return num
    return f"{num}/{_denominator_text(names, s.denom)}"


def factored_string(s: Scalar) -> str:
    """Like ``canonical_string`` but with the monomial content of the numerator pulled out"""
    names = symbol_names(s.field)
    terms = s.numer.terms()
    if len(terms) <= 1:
        num = _terms_text(names, terms)
    else:
        content = tuple(min(monom[i] for monom, _ in terms) for i in range(len(names)))
        g = reduce(gcd, (abs(int(c)) for _, c in terms))
        if terms[0][1] < 0:
            g = -g
        inner = [
            (tuple(e - c for e, c in zip(monom, content)), int(coeff) // g)
            for monom, coeff in terms
        ]
        prefix = _term_text(names, content, g)
        body = f"({_terms_text(names, inner)})"
        if prefix == "1":
            num = body
        elif prefix == "-1":
            num = "-" + body
        else:
            num = f"{prefix}*{body}"
    if s.denom == 1:
        return num
    return f"{num}/{_denominator_text(names, s.denom)}"


def is_negative(s: Scalar) -> bool:
    """True when the leading numerator coefficient is negative"""
    return bool(s) and s.numer.LC < 0
