from typing import Iterable, Sequence, Tuple

from ..scalars import Scalar, factored_string, is_negative
from .pbw import PBWMonomial, PBWPoly


def _power(name: str, exp: int) -> str:
    return name if exp == 1 else f"{name}^{exp}"


def render_monomial(mono: Sequence[int], names: Sequence[str] = ("x", "y", "z")) -> str:
    return "*".join(_power(name, exp) for name, exp in zip(names, mono) if exp)


def render_terms(terms: Iterable[Tuple[str, Scalar]]) -> str:
    """Join (monomial text, coefficient) pairs into input-grammar text"""
    out = ""
    for index, (mono, coeff) in enumerate(terms):
        negative = is_negative(coeff)
        magnitude = -coeff if negative else coeff
        scalar = "" if magnitude == 1 and mono else factored_string(magnitude)
        body = "*".join(part for part in (scalar, mono) if part)
        if index == 0:
            out = f"-{body}" if negative else body
        else:
            out += f" - {body}" if negative else f" + {body}"
    return out or "0"


def render_pbw(poly: PBWPoly) -> str:
    """Text form, x-powers first, e.g. beta^2*x*z^2 + b*(beta + 1)*z"""
    return render_terms((render_monomial(mono), coeff) for mono, coeff in poly.items())


def render_unipoly(p) -> str:
    name = str(p.ring.symbols[0])
    return render_terms((render_monomial(monom, (name,)), coeff) for monom, coeff in p.terms())


def render_affine(parts: Sequence[Scalar]) -> str:
    """Render coefficients of (x, y, z, 1) as a linear form"""
    monomials = (PBWMonomial(1, 0, 0), PBWMonomial(0, 1, 0), PBWMonomial(0, 0, 1), PBWMonomial(0, 0, 0))
    return render_pbw(PBWPoly(dict(zip(monomials, parts))))
