"""Rewriting to PBW normal form.

Each forbidden pair is replaced by its relation solved for that pair:

    yx -> gamma^-1 (xy - nu)
    zy -> alpha^-1 (yz - lam)
    zx -> beta xz + mu

Words are reduced right to left, one letter at a time. The product of a
letter with a standard monomial is reduced once per parameter set, and
every reduced suffix is kept, so (w)^s starts from (w)^(s-1).
"""

from typing import Dict, Mapping, Optional, Tuple

import structlog

from ..config import load_settings
from ..errors import BudgetExhausted, NotForbidden
from ..scalars import Scalar, inverse
from .params import AlgebraParams
from .pbw import PBWPoly
from .words import FreeExpr, Word, inversions, leftmost_forbidden

logger = structlog.get_logger()

Mono = Tuple[int, int, int]
Terms = Dict[Mono, Scalar]


class ReductionCache:
    """Normal forms of letter * monomial products and of reduced words, for one parameter set"""

    def __init__(self):
        self.letters: Dict[Tuple[str, Mono], Terms] = {}
        self.words: Dict[Word, Terms] = {}


def _affine(parts) -> Dict[Word, Scalar]:
    return dict(zip(("x", "y", "z", ""), parts))


def rewrite_pair(pair: str, params: AlgebraParams) -> FreeExpr:
    """Right-hand side of the rule for a forbidden pair"""
    K = params.field
    if pair == "yx":
        scale, lead, tail = inverse(params.gamma), "xy", params.nu
    elif pair == "zy":
        scale, lead, tail = inverse(params.alpha), "yz", params.lam
    elif pair == "zx":
        rhs = {"xz": params.beta}
        rhs.update(_affine(params.mu))
        return FreeExpr(K, rhs)
    else:
        raise NotForbidden(f"{pair!r} is not a forbidden pair")
    rhs = {lead: scale}
    for word, coeff in _affine(tail).items():
        rhs[word] = -scale * coeff
    return FreeExpr(K, rhs)


def _monomial_of(word: Word) -> Mono:
    i, j = word.count("x"), word.count("y")
    return (i, j, len(word) - i - j)


def embed(poly: PBWPoly, field) -> FreeExpr:
    """View a PBW polynomial as a combination of sorted words"""
    return FreeExpr(field, {mono.word(): coeff for mono, coeff in poly.terms.items()})


def _accumulate(target: Terms, terms: Mapping[Mono, Scalar], scale: Scalar) -> None:
    for mono, coeff in terms.items():
        value = coeff * scale
        target[mono] = target[mono] + value if mono in target else value


class Reducer:
    """Stateful reducer that counts rewrite steps against a budget.

    A step is one rule application on a (letter, monomial) product not yet
    in the cache. Reducers over the same params may share a ``cache``.
    """

    def __init__(self, params: AlgebraParams, budget: Optional[int] = None, cache: Optional[ReductionCache] = None):
        self.params = params
        self.budget = budget if budget is not None else load_settings().budget
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        self.steps = 0
        self.field = params.field
        self.cache = ReductionCache() if cache is None else cache
        self._rules = {pair: rewrite_pair(pair, params).terms for pair in ("yx", "zy", "zx")}
        self._alpha_inv = inverse(params.alpha)
        self._gamma_inv = inverse(params.gamma)

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            logger.warning("Rewrite budget exhausted", steps=self.steps, budget=self.budget)
            raise BudgetExhausted(self.steps, self.budget)

    # -- letter times standard monomial

    def letter_times(self, letter: str, mono: Mono) -> Terms:
        """Normal form of letter * x^i y^j z^k"""
        i, j, k = mono
        if letter == "x":
            return {(i + 1, j, k): self.field.one}
        if letter == "y" and i == 0:
            return {(0, j + 1, k): self.field.one}
        if letter == "z" and i == 0 and j == 0:
            return {(0, 0, k + 1): self.field.one}
        key = (letter, (i, j, k))
        cached = self.cache.letters.get(key)
        if cached is None:
            self._tick()
            cached = self._rewrite(letter, i, j, k)
            self.cache.letters[key] = cached
        return cached

    def _rewrite(self, letter: str, i: int, j: int, k: int) -> Terms:
        p = self.params
        out: Terms = {}
        if letter == "y":
            rest = (i - 1, j, k)
            _accumulate(out, self._shift_x(self.letter_times("y", rest)), self._gamma_inv)
            self._affine_times(out, p.nu, rest, -self._gamma_inv)
        elif i:
            rest = (i - 1, j, k)
            _accumulate(out, self._shift_x(self.letter_times("z", rest)), p.beta)
            self._affine_times(out, p.mu, rest, self.field.one)
        else:
            rest = (0, j - 1, k)
            _accumulate(out, self.apply("y", self.letter_times("z", rest)), self._alpha_inv)
            self._affine_times(out, p.lam, rest, -self._alpha_inv)
        return {mono: coeff for mono, coeff in out.items() if coeff}

    def _affine_times(self, out: Terms, parts, rest: Mono, scale: Scalar) -> None:
        """Add scale * (c_x x + c_y y + c_z z + c_1) * rest"""
        for letter, coeff in zip("xyz", parts[:3]):
            if coeff:
                _accumulate(out, self.letter_times(letter, rest), coeff * scale)
        if parts[3]:
            _accumulate(out, {rest: self.field.one}, parts[3] * scale)

    @staticmethod
    def _shift_x(terms: Terms) -> Terms:
        return {(i + 1, j, k): coeff for (i, j, k), coeff in terms.items()}

    def apply(self, letter: str, terms: Mapping[Mono, Scalar]) -> Terms:
        """Normal form of letter * sum c m"""
        out: Terms = {}
        for mono, coeff in terms.items():
            _accumulate(out, self.letter_times(letter, tuple(mono)), coeff)
        return {mono: coeff for mono, coeff in out.items() if coeff}

    def _word_times(self, word: Word, terms: Mapping[Mono, Scalar]) -> Terms:
        for letter in reversed(word):
            terms = self.apply(letter, terms)
        return dict(terms)

    # -- public operations

    def reduce_word(self, word: Word) -> Terms:
        """Normal form of a single word, resuming from its longest reduced suffix"""
        words = self.cache.words
        start = len(word)
        terms: Mapping[Mono, Scalar] = {(0, 0, 0): self.field.one}
        for pos in range(len(word)):
            if word[pos:] in words:
                start, terms = pos, words[word[pos:]]
                break
        for pos in range(start - 1, -1, -1):
            terms = self.apply(word[pos], terms)
            words[word[pos:]] = terms
        return dict(terms)

    def normal_form(self, expr: FreeExpr) -> PBWPoly:
        """Reduce every word to a combination of standard monomials"""
        total: Terms = {}
        for word, coeff in sorted(expr.terms.items()):
            _accumulate(total, self.reduce_word(word), coeff)
        return PBWPoly(total)

    def sweep_normal_form(self, expr: FreeExpr) -> PBWPoly:
        """Reduce by sweeps, rewriting the leftmost forbidden pair of each word in lex order.

        No caching: every rule application is a step.
        """
        pending: Dict[Word, Scalar] = dict(expr.terms)
        reduced: Terms = {}
        while pending:
            successors: Dict[Word, Scalar] = {}
            for word in sorted(pending):
                coeff = pending[word]
                pos = leftmost_forbidden(word)
                if pos < 0:
                    _accumulate(reduced, {_monomial_of(word): coeff}, self.field.one)
                    continue
                self._tick()
                prefix, suffix = word[:pos], word[pos + 2 :]
                for piece, factor in self._rules[word[pos : pos + 2]].items():
                    new = prefix + piece + suffix
                    if len(new) == len(word):
                        assert inversions(new) < inversions(word)
                    value = coeff * factor
                    successors[new] = successors[new] + value if new in successors else value
            pending = {word: coeff for word, coeff in successors.items() if coeff}
        return PBWPoly(reduced)

    def mul(self, a: PBWPoly, b: PBWPoly) -> PBWPoly:
        right = {tuple(mono): coeff for mono, coeff in b.terms.items()}
        total: Terms = {}
        for mono, coeff in a.items():
            _accumulate(total, self._word_times(mono.word(), right), coeff)
        return PBWPoly(total)

    def pow(self, a: PBWPoly, s: int) -> PBWPoly:
        if s < 0:
            raise ValueError("exponent must be nonnegative")
        if s == 0:
            return PBWPoly.unit(self.field)
        result = a
        for _ in range(s - 1):
            result = self.mul(result, a)
        return result

    def overlap_obstruction(self) -> PBWPoly:
        """NF((zy)x) - NF(z(yx)) on the single overlap zyx"""
        K = self.field
        zy_first = FreeExpr(K, self._rules["zy"]) * FreeExpr.word(K, "x")
        yx_first = FreeExpr.word(K, "z") * FreeExpr(K, self._rules["yx"])
        return self.normal_form(zy_first) - self.normal_form(yx_first)


def normal_form(expr: FreeExpr, params: AlgebraParams, budget: Optional[int] = None) -> PBWPoly:
    return Reducer(params, budget).normal_form(expr)


def pbw_mul(a: PBWPoly, b: PBWPoly, params: AlgebraParams, budget: Optional[int] = None) -> PBWPoly:
    return Reducer(params, budget).mul(a, b)


def pbw_pow(a: PBWPoly, s: int, params: AlgebraParams, budget: Optional[int] = None) -> PBWPoly:
    return Reducer(params, budget).pow(a, s)


def overlap_obstruction(params: AlgebraParams, budget: Optional[int] = None) -> PBWPoly:
    return Reducer(params, budget).overlap_obstruction()
