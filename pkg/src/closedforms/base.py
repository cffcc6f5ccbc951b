"""Shared machinery for the per-case formula sets."""

import itertools
from functools import wraps
from math import comb
from typing import Any, Callable, Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Set, Tuple

import structlog

from ..engine import AlgebraParams, PBWPoly
from ..errors import ClosedFormUnavailable, UnknownFamily
from ..qcomb import UniPoly, gauss_binomial, unipoly_ring
from ..scalars import Scalar
from .families import CoeffTable, Family, Route, parse_family

logger = structlog.get_logger()

Index = Tuple[int, ...]
Mono = Tuple[int, int, int]
DEFAULT_BOUND = 2

AXES = {"x": 0, "y": 1, "z": 2}


def memoized(method: Callable) -> Callable:
    """Cache a method's result per instance and positional arguments"""

    @wraps(method)
    def wrapper(self, *args):
        key = (method.__name__, args)
        if key not in self._cache:
            self._cache[key] = method(self, *args)
        return self._cache[key]

    return wrapper


class TableSpec(NamedTuple):
    """Parameters that select a row, the names of the row's keys, and the row builder"""

    params: Tuple[str, ...]
    keys: Tuple[str, ...]
    row: Callable[..., Mapping[Index, Any]]


def keyed(row: Mapping[Any, Any]) -> Dict[Index, Any]:
    """Normalize a row's keys to tuples"""
    return {key if isinstance(key, tuple) else (key,): value for key, value in row.items()}


def accumulate(target: Dict, key, value) -> None:
    target[key] = target[key] + value if key in target else value


def pruned(row: Dict) -> Dict:
    return {key: value for key, value in row.items() if value}


def spread(p: UniPoly, axis: int, base: Mono = (0, 0, 0), coeff=None) -> Iterator[Tuple[Mono, Scalar]]:
    """Terms of ``p`` placed on one generator of a base monomial"""
    for (e,), c in p.terms():
        mono = list(base)
        mono[axis] += e
        yield tuple(mono), (c * coeff if coeff is not None else c)


class CaseFormulas:
    """Recursions and closed formulas of one classified case.

    Subclasses provide ``<family>_recursion`` and ``<family>_closed_form``
    methods taking the family's indices. A missing method means the route
    does not exist for the case.
    """

    case_id = ""

    def __init__(self, params: AlgebraParams):
        self.params = params
        self.K = params.field
        self.one = self.K.one
        self.zero = self.K.zero
        self.ring, self.y = unipoly_ring(self.K, "y")
        self._cache: Dict = {}

    # -- dispatch

    def routes(self, family) -> Set[Route]:
        family = parse_family(family) if isinstance(family, str) else family
        return {route for route in Route if hasattr(self, f"{family.value}_{route.value}")}

    def compute(self, family, indices: Iterable[int], route=Route.RECURSION) -> PBWPoly:
        """PBW expansion of the family's word at the given indices"""
        family = parse_family(family) if isinstance(family, str) else family
        route = Route(route)
        indices = tuple(indices)
        if len(indices) != len(family.index_names):
            raise ValueError(f"{family.value} takes indices {family.index_names}, got {indices}")
        if any(i < 0 for i in indices):
            raise ValueError(f"indices must be nonnegative, got {indices}")
        method = getattr(self, f"{family.value}_{route.value}", None)
        if method is None:
            if route is Route.CLOSED_FORM:
                raise ClosedFormUnavailable(f"case {self.case_id} has no closed form for {family.value}")
            raise UnknownFamily(f"case {self.case_id} has no recursion for {family.value}")
        if family.is_power and indices[-1] == 0:
            return PBWPoly.unit(self.K)
        return method(*indices)

    # -- assembly helpers

    def mono(self, i: int, j: int, k: int, coeff: Optional[Scalar] = None) -> PBWPoly:
        return PBWPoly.monomial(i, j, k, self.one if coeff is None else coeff)

    def place(self, parts: Iterable[Tuple[int, UniPoly, int]]) -> PBWPoly:
        """Collect pieces x^i f(y) z^k"""
        return PBWPoly.collect(
            term for i, f, k in parts for term in spread(f, 1, (i, 0, k))
        )

    def scalars(self, parts: Iterable[Tuple[Mono, Scalar]]) -> PBWPoly:
        return PBWPoly.collect(parts)

    def q_binomial_sum(self, pair: str, n: int, q: Scalar) -> PBWPoly:
        """(a + b)^n for a pair with ba = q ab"""
        first, second = AXES[pair[0]], AXES[pair[1]]
        parts = []
        for k in range(n + 1):
            mono = [0, 0, 0]
            mono[first], mono[second] = k, n - k
            parts.append((tuple(mono), gauss_binomial(n, k, q)))
        return self.scalars(parts)

    # -- recursions for generators that commute

    @staticmethod
    def _raised(mono: Iterable[int], letter: str) -> Mono:
        raised = list(mono)
        raised[AXES[letter]] += 1
        return tuple(raised)

    @memoized
    def commuting_prefix(self, letter: str, n: int, base: Mono) -> PBWPoly:
        """letter^n * base, moving one letter at a time past a base it commutes with"""
        if n == 0:
            return self.mono(*base)
        prev = self.commuting_prefix(letter, n - 1, base)
        return self.scalars((self._raised(mono, letter), c) for mono, c in prev.items())

    @memoized
    def commuting_power(self, block: Mono, s: int) -> PBWPoly:
        """block^s for a block of commuting generators, one factor at a time"""
        if s == 0:
            return PBWPoly.unit(self.K)
        prev = self.commuting_power(block, s - 1)
        return self.scalars((tuple(e + d for e, d in zip(mono, block)), c) for mono, c in prev.items())

    @memoized
    def commuting_binomial(self, pair: str, n: int) -> PBWPoly:
        """(a + b)^n for a commuting pair, multiplied out one factor at a time"""
        if n == 0:
            return PBWPoly.unit(self.K)
        row: Dict[Mono, Scalar] = {}
        for mono, c in self.commuting_binomial(pair, n - 1).items():
            for letter in pair:
                accumulate(row, self._raised(mono, letter), c)
        return self.scalars(row.items())

    def ordinary_binomial_sum(self, pair: str, n: int) -> PBWPoly:
        first, second = AXES[pair[0]], AXES[pair[1]]
        parts = []
        for k in range(n + 1):
            mono = [0, 0, 0]
            mono[first], mono[second] = k, n - k
            parts.append((tuple(mono), self.one * comb(n, k)))
        return self.scalars(parts)

    # -- tables

    def tables(self) -> Dict[str, TableSpec]:
        return {}

    def coefficient_table(
        self, name: str, ranges: Optional[Mapping[str, int]] = None, default: int = DEFAULT_BOUND
    ) -> CoeffTable:
        """Populate a named array from its defining recursion, unnamed bounds falling back to ``default``"""
        specs = self.tables()
        if name not in specs:
            raise UnknownFamily(
                f"case {self.case_id} has no table {name!r}; expected one of {', '.join(sorted(specs))}"
            )
        spec = specs[name]
        ranges = dict(ranges or {})
        bounds = [ranges.get(param, default) for param in spec.params]
        if any(bound < 0 for bound in bounds):
            raise ValueError("table ranges must be nonnegative")
        logger.debug("Building coefficient table", case=self.case_id, table=name, bounds=bounds)

        entries: Dict[Index, Any] = {}
        for point in itertools.product(*(range(bound + 1) for bound in bounds)):
            for key, value in keyed(spec.row(*point)).items():
                if value and all(i >= 0 for i in key):
                    entries[tuple(point) + key] = value
        return CoeffTable(
            case=self.case_id,
            family=name,
            index_names=spec.params + spec.keys,
            entries=entries,
            zero=self.zero,
        )
