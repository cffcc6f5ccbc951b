from typing import Dict, Iterable, Iterator, Tuple

from sympy.polys.fields import FracField

from ..scalars import Scalar

ALPHABET = "xyz"
FORBIDDEN = ("yx", "zy", "zx")

Word = str


def check_word(word: str) -> Word:
    if any(letter not in ALPHABET for letter in word):
        raise ValueError(f"word {word!r} has letters outside {ALPHABET}")
    return word


def inversions(word: Word) -> int:
    """Number of letter pairs out of x < y < z order"""
    count = 0
    seen = {"x": 0, "y": 0, "z": 0}
    for letter in reversed(word):
        if letter == "y":
            count += seen["x"]
        elif letter == "z":
            count += seen["x"] + seen["y"]
        seen[letter] += 1
    return count


def leftmost_forbidden(word: Word) -> int:
    """Index of the leftmost forbidden adjacent pair, or -1"""
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            return i
    return -1


class FreeExpr:
    """Finite linear combination of words with scalar coefficients"""

    __slots__ = ("field", "terms")

    def __init__(self, field: FracField, terms: Dict[Word, Scalar] = None):
        self.field = field
        self.terms: Dict[Word, Scalar] = {}
        for word, coeff in (terms or {}).items():
            if coeff:
                self.terms[check_word(word)] = coeff

    @classmethod
    def word(cls, field: FracField, word: Word, coeff: Scalar = None) -> "FreeExpr":
        return cls(field, {word: field.one if coeff is None else coeff})

    @classmethod
    def scalar(cls, field: FracField, value: Scalar) -> "FreeExpr":
        return cls(field, {"": value})

    def items(self) -> Iterator[Tuple[Word, Scalar]]:
        return iter(sorted(self.terms.items()))

    def is_scalar(self) -> bool:
        return all(word == "" for word in self.terms)

    def scalar_value(self) -> Scalar:
        return self.terms.get("", self.field.zero)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FreeExpr) and self.terms == other.terms

    def __add__(self, other: "FreeExpr") -> "FreeExpr":
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms[word] + coeff if word in terms else coeff
        return FreeExpr(self.field, terms)

    def __neg__(self) -> "FreeExpr":
        return FreeExpr(self.field, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreeExpr") -> "FreeExpr":
        return self + (-other)

    def scale(self, factor: Scalar) -> "FreeExpr":
        return FreeExpr(self.field, {w: c * factor for w, c in self.terms.items()})

    def __mul__(self, other: "FreeExpr") -> "FreeExpr":
        terms: Dict[Word, Scalar] = {}
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                word = left + right
                terms[word] = terms[word] + a * b if word in terms else a * b
        return FreeExpr(self.field, terms)

    def __pow__(self, exponent: int) -> "FreeExpr":
        result = FreeExpr.word(self.field, "")
        for _ in range(exponent):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"FreeExpr({dict(self.items())!r})"


def linear_combination(field: FracField, parts: Iterable[Tuple[Word, Scalar]]) -> FreeExpr:
    expr = FreeExpr(field)
    for word, coeff in parts:
        expr = expr + FreeExpr.word(field, word, coeff)
    return expr
