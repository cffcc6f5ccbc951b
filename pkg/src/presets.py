"""Catalog of the fifteen classified three-dimensional skew polynomial algebras.

Affine parts are written as (x, y, z, 1) coefficient tuples for
lam (yz - alpha zy), mu (zx - beta xz) and nu (xy - gamma yx).
"""

from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict
from sympy.polys.fields import FracField

from .engine import AlgebraParams, PBWPoly, overlap_obstruction, render_affine, render_pbw
from .errors import BudgetExhausted, UnknownCase
from .scalars import canonical_string, default_field, symbol

CASE_IDS = (
    "1", "2i", "2ii", "2iii", "2iv", "2v", "2vi",
    "3i", "3ii", "4", "5i", "5ii", "5iii", "5iv", "5v",
)
CUSTOM = "custom"


class CasePreset(BaseModel):
    """Named binding of the relation constants"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    params: AlgebraParams
    free_symbols: FrozenSet[str]

    def relations(self) -> Tuple[str, str, str]:
        p = self.params
        return (
            f"yz - ({canonical_string(p.alpha)})*zy = {render_affine(p.lam)}",
            f"zx - ({canonical_string(p.beta)})*xz = {render_affine(p.mu)}",
            f"xy - ({canonical_string(p.gamma)})*yx = {render_affine(p.nu)}",
        )


class PresetReport(BaseModel):
    case: str
    obstruction: str
    unit_pattern_ok: bool
    passed: bool
    failures: List[str] = []


def _bindings(K: FracField) -> Dict[str, Callable[[], AlgebraParams]]:
    def s(name: str):
        return symbol(K, name)

    build = AlgebraParams.build
    return {
        "1": lambda: build(K, alpha=s("alpha"), beta=s("beta"), gamma=s("gamma")),
        "2i": lambda: build(K, beta=s("beta"), lam=(0, 0, 1, 0), mu=(0, 1, 0, 0), nu=(1, 0, 0, 0)),
        "2ii": lambda: build(K, beta=s("beta"), lam=(0, 0, 1, 0), mu=(0, 0, 0, s("b")), nu=(1, 0, 0, 0)),
        "2iii": lambda: build(K, beta=s("beta"), mu=(0, 1, 0, 0)),
        "2iv": lambda: build(K, beta=s("beta"), mu=(0, 0, 0, s("b"))),
        "2v": lambda: build(K, beta=s("beta"), lam=(0, 0, s("a"), 0), nu=(1, 0, 0, 0)),
        "2vi": lambda: build(K, beta=s("beta"), lam=(0, 0, 1, 0)),
        "3i": lambda: build(
            K, alpha=s("alpha"), beta=s("beta"), gamma=s("alpha"), mu=(0, 1, 0, s("b"))
        ),
        "3ii": lambda: build(
            K, alpha=s("alpha"), beta=s("beta"), gamma=s("alpha"), mu=(0, 0, 0, s("b"))
        ),
        "4": lambda: build(
            K,
            alpha=s("alpha"),
            beta=s("alpha"),
            gamma=s("alpha"),
            lam=(s("a1"), 0, 0, s("b1")),
            mu=(0, s("a2"), 0, s("b2")),
            nu=(0, 0, s("a3"), s("b3")),
        ),
        "5i": lambda: build(K, lam=(1, 0, 0, 0), mu=(0, 1, 0, 0), nu=(0, 0, 1, 0)),
        "5ii": lambda: build(K, nu=(0, 0, 1, 0)),
        "5iii": lambda: build(K, nu=(0, 0, 0, s("b"))),
        "5iv": lambda: build(K, lam=(0, -1, 0, 0), mu=(1, 1, 0, 0)),
        # zx - xz = z; the alternative zx - xz = x is not confluent
        "5v": lambda: build(K, lam=(0, 0, s("a"), 0), mu=(0, 0, 1, 0)),
    }


def preset(case_id: str, K: Optional[FracField] = None) -> CasePreset:
    """Return the binding for a case tag"""
    K = K or default_field()
    bindings = _bindings(K)
    if case_id not in bindings:
        raise UnknownCase(f"unknown case {case_id!r}; expected one of {', '.join(CASE_IDS)}")
    params = bindings[case_id]()
    return CasePreset(id=case_id, params=params, free_symbols=frozenset(params.free_symbols()))


def alternative_5v(K: Optional[FracField] = None) -> CasePreset:
    """Case 5v with zx - xz = x in place of zx - xz = z"""
    K = K or default_field()
    params = AlgebraParams.build(K, lam=(0, 0, symbol(K, "a"), 0), mu=(1, 0, 0, 0))
    return CasePreset(id="5v-code", params=params, free_symbols=frozenset(params.free_symbols()))


def all_presets(K: Optional[FracField] = None) -> List[CasePreset]:
    return [preset(case_id, K) for case_id in CASE_IDS]


def case_order(case_id: str) -> int:
    try:
        return CASE_IDS.index(case_id)
    except ValueError:
        return len(CASE_IDS)


def _unit_pattern_ok(p: CasePreset) -> bool:
    params = p.params
    one = params.field.one
    family = p.id[0] if p.id in CASE_IDS else None
    if family == "2":
        return params.alpha == one and params.gamma == one
    if family == "3":
        return params.alpha == params.gamma
    if family == "4":
        return params.alpha == params.beta == params.gamma
    if family == "5":
        return params.alpha == params.beta == params.gamma == one
    return True


def validate_preset(p: CasePreset, budget: Optional[int] = None) -> PresetReport:
    """Check the overlap obstruction and the case's unit pattern"""
    failures: List[str] = []
    try:
        obstruction = overlap_obstruction(p.params, budget)
        obstruction_text = render_pbw(obstruction)
        if obstruction:
            failures.append(f"overlap zyx is not resolvable: {obstruction_text}")
    except BudgetExhausted as e:
        obstruction_text = "budget-exhausted"
        failures.append(str(e))
    pattern_ok = _unit_pattern_ok(p)
    if not pattern_ok:
        failures.append("alpha, beta, gamma break the case pattern")
    return PresetReport(
        case=p.id,
        obstruction=obstruction_text,
        unit_pattern_ok=pattern_ok,
        passed=not failures,
        failures=failures,
    )


def custom_preset(params: AlgebraParams) -> CasePreset:
    return CasePreset(id=CUSTOM, params=params, free_symbols=frozenset(params.free_symbols()))
