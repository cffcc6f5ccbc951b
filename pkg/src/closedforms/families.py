"""Identity families, routes and coefficient tables."""

from enum import Enum
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict
from sympy.polys.rings import PolyElement

from ..engine import render_unipoly
from ..errors import UnknownFamily
from ..scalars import canonical_string


class Family(str, Enum):
    YX = "yx"
    ZX = "zx"
    ZY = "zy"
    POW_XY = "pow_xy"
    POW_XZ = "pow_xz"
    POW_YZ = "pow_yz"
    POW_XYZ = "pow_xyz"
    POW_BLOCK = "pow_block"
    BINOM_XY = "binom_xy"
    BINOM_XZ = "binom_xz"
    BINOM_YZ = "binom_yz"

    @property
    def index_names(self) -> Tuple[str, ...]:
        return INDEX_NAMES[self]

    @property
    def is_power(self) -> bool:
        return self.value.startswith("pow_")


class Route(str, Enum):
    RECURSION = "recursion"
    CLOSED_FORM = "closed_form"


TWO_LETTER = (Family.YX, Family.ZX, Family.ZY)
POWERS = (Family.POW_XY, Family.POW_XZ, Family.POW_YZ, Family.POW_XYZ, Family.POW_BLOCK)
BINOMIALS = (Family.BINOM_XY, Family.BINOM_XZ, Family.BINOM_YZ)
ALL_FAMILIES = TWO_LETTER + POWERS + BINOMIALS

INDEX_NAMES: Dict[Family, Tuple[str, ...]] = {
    **{family: ("n", "m") for family in TWO_LETTER},
    Family.POW_XY: ("n", "m", "s"),
    Family.POW_XZ: ("n", "m", "s"),
    Family.POW_YZ: ("n", "m", "s"),
    Family.POW_XYZ: ("s",),
    Family.POW_BLOCK: ("n", "m", "t", "s"),
    **{family: ("n",) for family in BINOMIALS},
}


def parse_family(tag: str) -> Family:
    try:
        return Family(tag)
    except ValueError:
        raise UnknownFamily(f"unknown identity family {tag!r}") from None


def family_order(family: Family) -> int:
    return ALL_FAMILIES.index(family)


class IdentityFamily(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: Family
    route: Route


def value_string(value: Any) -> str:
    """Scalar or univariate polynomial entry as text"""
    if isinstance(value, PolyElement):
        return render_unipoly(value)
    return canonical_string(value)


class CoeffTable(BaseModel):
    """A named coefficient array; absent indices read as zero"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    case: str
    family: str
    index_names: Tuple[str, ...]
    entries: Dict[Tuple[int, ...], Any]
    zero: Any

    def get(self, *index: int) -> Any:
        return self.entries.get(tuple(index), self.zero)

    def rows(self) -> List[Tuple[Tuple[int, ...], str]]:
        """Entries in lex index order with values rendered"""
        return [(index, value_string(self.entries[index])) for index in sorted(self.entries)]

    def __len__(self) -> int:
        return len(self.entries)
