from typing import Dict, Mapping, Sequence, Set, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator
from sympy.polys.fields import FracElement, FracField

from ..errors import InvalidSpecialization
from ..scalars import RationalLike, Scalar, canonical_string, rational, substitute, symbol_names

Coefficient = Union[Scalar, RationalLike]

AFFINE_FIELDS = (
    "lam_x", "lam_y", "lam_z", "lam_1",
    "mu_x", "mu_y", "mu_z", "mu_1",
    "nu_x", "nu_y", "nu_z", "nu_1",
)
UNIT_FIELDS = ("alpha", "beta", "gamma")


class AlgebraParams(BaseModel):
    """Relation constants of

    yz - alpha zy = lam_x x + lam_y y + lam_z z + lam_1
    zx - beta  xz = mu_x  x + mu_y  y + mu_z  z + mu_1
    xy - gamma yx = nu_x  x + nu_y  y + nu_z  z + nu_1
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: FracElement
    beta: FracElement
    gamma: FracElement
    lam_x: FracElement
    lam_y: FracElement
    lam_z: FracElement
    lam_1: FracElement
    mu_x: FracElement
    mu_y: FracElement
    mu_z: FracElement
    mu_1: FracElement
    nu_x: FracElement
    nu_y: FracElement
    nu_z: FracElement
    nu_1: FracElement

    @model_validator(mode="after")
    def _check_units(self) -> "AlgebraParams":
        K = self.alpha.field
        for name in UNIT_FIELDS + AFFINE_FIELDS:
            if getattr(self, name).field != K:
                raise ValueError(f"{name} lives in a different scalar field")
        for name in UNIT_FIELDS:
            if not getattr(self, name):
                raise ValueError(f"{name} must be a unit")
        return self

    @classmethod
    def build(
        cls,
        K: FracField,
        alpha: Coefficient = 1,
        beta: Coefficient = 1,
        gamma: Coefficient = 1,
        lam: Sequence[Coefficient] = (0, 0, 0, 0),
        mu: Sequence[Coefficient] = (0, 0, 0, 0),
        nu: Sequence[Coefficient] = (0, 0, 0, 0),
    ) -> "AlgebraParams":
        """Build params from scalars or rationals, affine parts as (x, y, z, 1)"""

        def lift(value: Coefficient) -> Scalar:
            return value if isinstance(value, FracElement) else rational(K, value)

        values = dict(alpha=lift(alpha), beta=lift(beta), gamma=lift(gamma))
        for prefix, parts in (("lam", lam), ("mu", mu), ("nu", nu)):
            for suffix, value in zip(("x", "y", "z", "1"), parts):
                values[f"{prefix}_{suffix}"] = lift(value)
        return cls(**values)

    @property
    def field(self) -> FracField:
        return self.alpha.field

    @property
    def lam(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.lam_x, self.lam_y, self.lam_z, self.lam_1)

    @property
    def mu(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.mu_x, self.mu_y, self.mu_z, self.mu_1)

    @property
    def nu(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.nu_x, self.nu_y, self.nu_z, self.nu_1)

    def values(self) -> Dict[str, Scalar]:
        return {name: getattr(self, name) for name in UNIT_FIELDS + AFFINE_FIELDS}

    def free_symbols(self) -> Set[str]:
        names = symbol_names(self.field)
        found: Set[str] = set()
        for value in self.values().values():
            for poly in (value.numer, value.denom):
                for monom in poly.monoms():
                    found.update(name for name, exp in zip(names, monom) if exp)
        return found

    def substitute(self, bindings: Mapping[str, RationalLike]) -> "AlgebraParams":
        """Specialize symbols in every coefficient"""
        values = {name: substitute(value, bindings) for name, value in self.values().items()}
        for name in UNIT_FIELDS:
            if not values[name]:
                raise InvalidSpecialization(f"{name} specializes to zero")
        return AlgebraParams(**values)

    def as_strings(self) -> Dict[str, str]:
        return {name: canonical_string(value) for name, value in self.values().items()}
