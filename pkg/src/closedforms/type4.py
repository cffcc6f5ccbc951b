"""Type 4: alpha = beta = gamma with affine parts a1 x + b1, a2 y + b2, a3 z + b3.

Every family is built by left multiplication, using the structure
constants Y and Z of y and z acting on a standard monomial:

    y x^i y^j z^k = sum Y_{i,j,k}(p,q,r) x^p y^q z^r
    z x^i y^j z^k = sum Z_{i,j,k}(p,q,r) x^p y^q z^r
    z y^j         = sum Pi_j(p,q,r) x^p y^q z^r
"""

from typing import Dict

from ..engine import PBWPoly
from ..scalars import inverse
from .base import Mono, TableSpec, memoized
from .kernels import KernelCase, flat, shifted


class TypeFour(KernelCase):
    case_id = "4"
    side = "left"

    def __init__(self, params):
        super().__init__(params)
        self.alpha = params.alpha
        self.alpha_inv = inverse(params.alpha)
        self.a1, self.b1 = params.lam_x, params.lam_1
        self.a2, self.b2 = params.mu_y, params.mu_1
        self.a3, self.b3 = params.nu_z, params.nu_1

    @memoized
    def Y(self, i: int, j: int, k: int) -> PBWPoly:
        if i == 0:
            return self.mono(0, j + 1, k)
        ai = self.alpha_inv
        return (
            shifted(self.Y(i - 1, j, k), 1).scale(ai)
            - self.Z(i - 1, j, k).scale(ai * self.a3)
            - self.mono(i - 1, j, k, ai * self.b3)
        )

    @memoized
    def Z(self, i: int, j: int, k: int) -> PBWPoly:
        if i == 0:
            return shifted(self.Pi(j), 0, 0, k)
        return (
            shifted(self.Z(i - 1, j, k), 1).scale(self.alpha)
            + self.Y(i - 1, j, k).scale(self.a2)
            + self.mono(i - 1, j, k, self.b2)
        )

    @memoized
    def Pi(self, j: int) -> PBWPoly:
        if j == 0:
            return self.mono(0, 0, 1)
        ai = self.alpha_inv
        return (
            self.act("y", self.Pi(j - 1)).scale(ai)
            - self.mono(1, j - 1, 0, ai * self.a1)
            - self.mono(0, j - 1, 0, ai * self.b1)
        )

    def kernel(self, letter: str, mono: Mono) -> PBWPoly:
        if letter == "x":
            return self.mono(mono[0] + 1, mono[1], mono[2])
        return self.Y(*mono) if letter == "y" else self.Z(*mono)

    @memoized
    def W(self, m: int, n: int) -> PBWPoly:
        """y^n x^m"""
        return self.times_word(self.mono(m, 0, 0), "y" * n)

    @memoized
    def Wtilde(self, m: int, n: int) -> PBWPoly:
        """z^n x^m"""
        return self.times_word(self.mono(m, 0, 0), "z" * n)

    @memoized
    def What(self, m: int, n: int) -> PBWPoly:
        """z^n y^m"""
        return self.times_word(self.mono(0, m, 0), "z" * n)

    def yx_recursion(self, n: int, m: int) -> PBWPoly:
        return self.W(m, n)

    def zx_recursion(self, n: int, m: int) -> PBWPoly:
        return self.Wtilde(m, n)

    def zy_recursion(self, n: int, m: int) -> PBWPoly:
        return self.What(m, n)

    def tables(self) -> Dict[str, TableSpec]:
        keys = ("p", "q", "r")
        return {
            **super().tables(),
            "Y": TableSpec(("i", "j", "k"), keys, lambda i, j, k: flat(self.Y(i, j, k))),
            "Z": TableSpec(("i", "j", "k"), keys, lambda i, j, k: flat(self.Z(i, j, k))),
            "Pi": TableSpec(("j",), keys, lambda j: flat(self.Pi(j))),
            "W": TableSpec(("m", "n"), keys, lambda m, n: flat(self.W(m, n))),
            "Wtilde": TableSpec(("m", "n"), keys, lambda m, n: flat(self.Wtilde(m, n))),
            "What": TableSpec(("m", "n"), keys, lambda m, n: flat(self.What(m, n))),
        }
