"""Recursions and closed formulas for the fifteen cases.

Every case class computes the PBW expansion of the identity families
independently of the rewriting engine, from coefficient recurrences alone.
"""

from functools import lru_cache
from typing import Dict, Mapping, Optional, Sequence, Set, Tuple, Type

from ..engine import AlgebraParams, PBWPoly
from ..errors import UnknownCase, UnknownFamily
from ..presets import CASE_IDS, preset
from .base import DEFAULT_BOUND, CaseFormulas
from .families import ALL_FAMILIES, CoeffTable, Family, IdentityFamily, Route, parse_family
from .kernels import flat
from .shifts import Case5iv, Case5v
from .type1 import TypeOne
from .type2 import Case2i, Case2ii, Case2iii, Case2iv, Case2v, Case2vi
from .type3 import Case3i, Case3ii
from .type4 import TypeFour
from .type5 import Case5i, Case5ii, Case5iii

CASE_CLASSES: Dict[str, Type[CaseFormulas]] = {
    cls.case_id: cls
    for cls in (
        TypeOne,
        Case2i, Case2ii, Case2iii, Case2iv, Case2v, Case2vi,
        Case3i, Case3ii,
        TypeFour,
        Case5i, Case5ii, Case5iii, Case5iv, Case5v,
    )
}


@lru_cache(maxsize=None)
def _preset_formulas(case: str) -> CaseFormulas:
    return CASE_CLASSES[case](preset(case).params)


def formulas_for(case: str, params: Optional[AlgebraParams] = None) -> CaseFormulas:
    """The formula set of a case, bound to its preset unless params are given"""
    if case not in CASE_CLASSES:
        raise UnknownCase(f"unknown case {case!r}; expected one of {', '.join(CASE_IDS)}")
    if params is None:
        return _preset_formulas(case)
    return CASE_CLASSES[case](params)


def compute(
    case: str,
    family,
    indices: Sequence[int],
    route=Route.RECURSION,
    params: Optional[AlgebraParams] = None,
) -> PBWPoly:
    return formulas_for(case, params).compute(family, indices, route)


def available_routes(case: str, family) -> Set[Route]:
    return formulas_for(case).routes(family)


def two_letter(case: str, pair: str, n: int, m: int, route=Route.RECURSION, params=None) -> PBWPoly:
    """y^n x^m, z^n x^m or z^n y^m"""
    family = parse_family(pair)
    if family not in (Family.YX, Family.ZX, Family.ZY):
        raise UnknownFamily(f"{pair!r} is not a two-letter family")
    return compute(case, family, (n, m), route, params)


def block_family(block: Sequence[int]) -> Tuple[Family, Tuple[int, ...]]:
    """The power family covering a block x^n y^m or x^n y^m z^t"""
    n, m, t = tuple(block) + (0,) * (3 - len(block))
    if (n, m, t) == (1, 1, 1):
        return Family.POW_XYZ, ()
    if t == 0:
        return Family.POW_XY, (n, m)
    if m == 0:
        return Family.POW_XZ, (n, t)
    if n == 0:
        return Family.POW_YZ, (m, t)
    return Family.POW_BLOCK, (n, m, t)


def block_power(case: str, block: Sequence[int], s: int, route=Route.RECURSION, params=None) -> PBWPoly:
    """(x^n y^m z^t)^s, with zero slots picking the two-letter power families"""
    if len(block) not in (2, 3):
        raise ValueError(f"a block has two or three exponents, got {tuple(block)}")
    family, indices = block_family(block)
    return compute(case, family, indices + (s,), route, params)


def binomial_sum(case: str, pair: str, n: int, route=Route.RECURSION, params=None) -> PBWPoly:
    """(x + y)^n, (x + z)^n or (y + z)^n"""
    return compute(case, f"binom_{pair}", (n,), route, params)


def coefficient_table(
    case: str, name: str, ranges: Optional[Mapping[str, int]] = None, params=None, default: int = DEFAULT_BOUND
) -> CoeffTable:
    return formulas_for(case, params).coefficient_table(name, ranges, default)


def table_names(case: str) -> Tuple[str, ...]:
    return tuple(sorted(formulas_for(case).tables()))


def struct_constants(params: AlgebraParams, kind: str, depth: int) -> CoeffTable:
    """The Y, Z or Pi structure constants of a type 4 algebra"""
    if kind not in ("Y", "Z", "Pi"):
        raise UnknownFamily(f"structure constants are Y, Z or Pi, got {kind!r}")
    ranges = {name: depth for name in ("i", "j", "k")}
    return TypeFour(params).coefficient_table(kind, ranges)


def left_mul_kernels(params: AlgebraParams, a: int, b: int, c: int) -> Tuple[CoeffTable, CoeffTable, CoeffTable]:
    """M^x, M^y, M^z of x^a y^b z^c in case 5i, indexed by the exponents (i, j, k)"""
    formulas = Case5i(params)
    return tuple(
        CoeffTable(
            case=formulas.case_id,
            family=f"M{letter}",
            index_names=("i", "j", "k"),
            entries=flat(formulas.kernel(letter, (a, b, c))),
            zero=formulas.zero,
        )
        for letter in "xyz"
    )


__all__ = [
    "ALL_FAMILIES",
    "CASE_CLASSES",
    "CaseFormulas",
    "CoeffTable",
    "Family",
    "IdentityFamily",
    "Route",
    "available_routes",
    "binomial_sum",
    "block_family",
    "block_power",
    "coefficient_table",
    "compute",
    "formulas_for",
    "left_mul_kernels",
    "struct_constants",
    "table_names",
    "two_letter",
]
