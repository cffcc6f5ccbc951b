"""Cases driven by the action of a single generator on PBW monomials."""

from typing import Dict

from ..engine import PBWPoly
from .base import CaseFormulas, Mono, TableSpec, accumulate, memoized


def shifted(poly: PBWPoly, di: int = 0, dj: int = 0, dk: int = 0) -> PBWPoly:
    return PBWPoly({(i + di, j + dj, k + dk): c for (i, j, k), c in poly.terms.items()})


def flat(poly: PBWPoly) -> Dict[Mono, object]:
    return {tuple(mono): c for mono, c in poly.terms.items()}


class KernelCase(CaseFormulas):
    """Families built by repeatedly multiplying by one generator.

    ``side`` is "left" when ``kernel(letter, mono)`` expands letter * mono and
    "right" when it expands mono * letter.
    """

    side = "left"

    def kernel(self, letter: str, mono: Mono) -> PBWPoly:
        raise NotImplementedError

    def act(self, letter: str, poly: PBWPoly) -> PBWPoly:
        out: Dict[Mono, object] = {}
        for mono, c in poly.terms.items():
            for image, d in self.kernel(letter, tuple(mono)).terms.items():
                accumulate(out, tuple(image), c * d)
        return PBWPoly(out)

    def times_word(self, poly: PBWPoly, word: str) -> PBWPoly:
        """word * poly on the left side, poly * word on the right"""
        letters = reversed(word) if self.side == "left" else word
        for letter in letters:
            poly = self.act(letter, poly)
        return poly

    @memoized
    def block_power(self, word: str, s: int) -> PBWPoly:
        if s == 0:
            return PBWPoly.unit(self.K)
        return self.times_word(self.block_power(word, s - 1), word)

    @memoized
    def binomial(self, pair: str, n: int) -> PBWPoly:
        if n == 0:
            return PBWPoly.unit(self.K)
        prev = self.binomial(pair, n - 1)
        return self.act(pair[0], prev) + self.act(pair[1], prev)

    def pow_xy_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self.block_power("x" * n + "y" * m, s)

    def pow_xz_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self.block_power("x" * n + "z" * m, s)

    def pow_yz_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self.block_power("y" * n + "z" * m, s)

    def pow_xyz_recursion(self, s: int) -> PBWPoly:
        return self.block_power("xyz", s)

    def pow_block_recursion(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        return self.block_power("x" * n + "y" * m + "z" * t, s)

    def binom_xy_recursion(self, n: int) -> PBWPoly:
        return self.binomial("xy", n)

    def binom_xz_recursion(self, n: int) -> PBWPoly:
        return self.binomial("xz", n)

    def binom_yz_recursion(self, n: int) -> PBWPoly:
        return self.binomial("yz", n)

    def tables(self) -> Dict[str, TableSpec]:
        keys = ("p", "q", "r")
        power = self.block_power
        return {
            "U": TableSpec(("n", "m", "s"), keys, lambda n, m, s: flat(power("x" * n + "y" * m, s))),
            "Utilde": TableSpec(("n", "m", "s"), keys, lambda n, m, s: flat(power("x" * n + "z" * m, s))),
            "Uhat": TableSpec(("n", "m", "s"), keys, lambda n, m, s: flat(power("y" * n + "z" * m, s))),
            "V": TableSpec(("s",), keys, lambda s: flat(power("xyz", s))),
            "R": TableSpec(
                ("n", "m", "t", "s"), keys, lambda n, m, t, s: flat(power("x" * n + "y" * m + "z" * t, s))
            ),
            "Exy": TableSpec(("n",), keys, lambda n: flat(self.binomial("xy", n))),
            "Exz": TableSpec(("n",), keys, lambda n: flat(self.binomial("xz", n))),
            "Eyz": TableSpec(("n",), keys, lambda n: flat(self.binomial("yz", n))),
        }
