from typing import Dict, Iterable, Iterator, NamedTuple, Tuple

from sympy.polys.fields import FracField

from ..scalars import Scalar


class PBWMonomial(NamedTuple):
    """Standard monomial x^i y^j z^k"""

    i: int
    j: int
    k: int

    def word(self) -> str:
        return "x" * self.i + "y" * self.j + "z" * self.k

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k


class PBWPoly:
    """Finite map from standard monomials to nonzero scalars"""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Tuple[int, int, int], Scalar] = None):
        self.terms: Dict[PBWMonomial, Scalar] = {}
        for mono, coeff in (terms or {}).items():
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            if coeff:
                self.terms[PBWMonomial(*mono)] = coeff

    @classmethod
    def unit(cls, field: FracField) -> "PBWPoly":
        return cls({(0, 0, 0): field.one})

    @classmethod
    def monomial(cls, i: int, j: int, k: int, coeff: Scalar) -> "PBWPoly":
        return cls({(i, j, k): coeff})

    @classmethod
    def collect(cls, parts: Iterable[Tuple[Tuple[int, int, int], Scalar]]) -> "PBWPoly":
        """Sum coefficients of repeated monomials"""
        terms: Dict[Tuple[int, int, int], Scalar] = {}
        for mono, coeff in parts:
            terms[mono] = terms[mono] + coeff if mono in terms else coeff
        return cls(terms)

    def items(self) -> Iterator[Tuple[PBWMonomial, Scalar]]:
        """Terms in descending lex order on (i, j, k)"""
        return iter(sorted(self.terms.items(), reverse=True))

    def coeff(self, i: int, j: int, k: int, default=0):
        return self.terms.get(PBWMonomial(i, j, k), default)

    @property
    def degree(self) -> int:
        return max((mono.degree for mono in self.terms), default=0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PBWPoly) and self.terms == other.terms

    def __add__(self, other: "PBWPoly") -> "PBWPoly":
        return PBWPoly.collect(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "PBWPoly":
        return PBWPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "PBWPoly") -> "PBWPoly":
        return self + (-other)

    def scale(self, factor: Scalar) -> "PBWPoly":
        return PBWPoly({m: c * factor for m, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"PBWPoly({dict(self.items())!r})"


def pbw_add(a: PBWPoly, b: PBWPoly, scale_a: Scalar, scale_b: Scalar) -> PBWPoly:
    """scale_a * a + scale_b * b"""
    return a.scale(scale_a) + b.scale(scale_b)
