"""The Lie-type algebras 5i, 5ii and 5iii."""

from math import comb, factorial
from typing import Dict

from ..engine import PBWPoly
from ..qcomb import falling, stirling2, trig_split, unipoly_ring
from ..scalars import Scalar
from .base import CaseFormulas, Mono, TableSpec, accumulate, keyed, memoized, pruned
from .kernels import KernelCase, flat


def _alternating(m: int, odd: bool):
    """(r, (-1)^r C(m, 2r + odd)) for the nonzero binomials"""
    for r in range((m - odd) // 2 + 1 if m >= odd else 0):
        yield r, (-1) ** r * comb(m, 2 * r + odd)


class Case5i(KernelCase):
    """yz - zy = x, zx - xz = y, xy - yx = z

    Families are built by right multiplication with the kernels
    x^a y^b z^c * g = sum M^g_{a,b,c}(i,j,k) x^i y^j z^k.
    """

    case_id = "5i"
    side = "right"

    @memoized
    def Mz(self, a: int, b: int, c: int) -> PBWPoly:
        return self.mono(a, b, c + 1)

    @memoized
    def My(self, a: int, b: int, c: int) -> PBWPoly:
        parts = [((a, b + 1, c - 2 * r), self.one * sign) for r, sign in _alternating(c, False)]
        for r, sign in _alternating(c, True):
            for (p, q, t), coeff in self.A(b).terms.items():
                parts.append(((a + p, q, t + c - 2 * r - 1), coeff * (-sign)))
        return self.scalars(parts)

    @memoized
    def Mx(self, a: int, b: int, c: int) -> PBWPoly:
        parts = []
        for r, sign in _alternating(c, False):
            for (p, q, t), coeff in self.A(b).terms.items():
                parts.append(((a + p, q, t + c - 2 * r), coeff * sign))
        parts.extend(((a, b + 1, c - 2 * r - 1), self.one * sign) for r, sign in _alternating(c, True))
        return self.scalars(parts)

    def A(self, b: int) -> PBWPoly:
        """y^b x"""
        return self.W(1, b)

    def kernel(self, letter: str, mono: Mono) -> PBWPoly:
        return {"x": self.Mx, "y": self.My, "z": self.Mz}[letter](*mono)

    def _combine(self, even_letter: str, odd_letter: str, odd_sign: int, family, m: int, n: int) -> PBWPoly:
        total = PBWPoly()
        for r, sign in _alternating(m, False):
            total = total + self.act(even_letter, family(m - 2 * r, n - 1)).scale(self.one * sign)
        for r, sign in _alternating(m, True):
            total = total + self.act(odd_letter, family(m - 2 * r - 1, n - 1)).scale(self.one * (odd_sign * sign))
        return total

    @memoized
    def W(self, m: int, n: int) -> PBWPoly:
        """y^n x^m"""
        if n == 0:
            return self.mono(m, 0, 0)
        return self._combine("y", "z", -1, self.W, m, n)

    @memoized
    def Wtilde(self, m: int, n: int) -> PBWPoly:
        """z^n x^m"""
        if n == 0:
            return self.mono(m, 0, 0)
        return self._combine("z", "y", 1, self.Wtilde, m, n)

    @memoized
    def What(self, m: int, n: int) -> PBWPoly:
        """z^n y^m"""
        if n == 0:
            return self.mono(0, m, 0)
        return self._combine("z", "x", -1, self.What, m, n)

    def yx_recursion(self, n: int, m: int) -> PBWPoly:
        return self.W(m, n)

    def zx_recursion(self, n: int, m: int) -> PBWPoly:
        return self.Wtilde(m, n)

    def zy_recursion(self, n: int, m: int) -> PBWPoly:
        return self.What(m, n)

    def split_row(self, m: int, odd: bool) -> Dict:
        _, u = unipoly_ring(self.K, "u")
        part = trig_split(m, u)[1 if odd else 0]
        return {(e,): c for (e,), c in part.terms()}

    def tables(self) -> Dict[str, TableSpec]:
        keys = ("i", "j", "k")
        return {
            **super().tables(),
            "Mx": TableSpec(("a", "b", "c"), keys, lambda a, b, c: flat(self.Mx(a, b, c))),
            "My": TableSpec(("a", "b", "c"), keys, lambda a, b, c: flat(self.My(a, b, c))),
            "Mz": TableSpec(("a", "b", "c"), keys, lambda a, b, c: flat(self.Mz(a, b, c))),
            "A": TableSpec(("b",), keys, lambda b: flat(self.A(b))),
            "W": TableSpec(("m", "n"), keys, lambda m, n: flat(self.W(m, n))),
            "Wtilde": TableSpec(("m", "n"), keys, lambda m, n: flat(self.Wtilde(m, n))),
            "What": TableSpec(("m", "n"), keys, lambda m, n: flat(self.What(m, n))),
            "Csplit": TableSpec(("m",), ("e",), lambda m: self.split_row(m, False)),
            "Ssplit": TableSpec(("m",), ("e",), lambda m: self.split_row(m, True)),
        }


class CentralCommutator(CaseFormulas):
    """z central and xy - yx = c z^e, so yx = xy - c z^e.

    5ii has c = 1, e = 1 and 5iii has c = b, e = 0.
    """

    def __init__(self, params, c: Scalar, e: int):
        super().__init__(params)
        self.c = c
        self.e = e

    @memoized
    def W(self, m: int, n: int) -> Dict[int, Scalar]:
        """y^n x^m = sum_k x^(m-k) W_{n,k} y^(n-k) (c z^e)^k / c^k"""
        if n == 0:
            return {0: self.one}
        prev = self.W(m, n - 1)
        row = {}
        for k in range(min(m, n) + 1):
            row[k] = prev.get(k, self.zero) - self.c * (m - k + 1) * prev.get(k - 1, self.zero)
        return pruned(row)

    def w(self, m: int, n: int, k: int, closed: bool) -> Scalar:
        if not closed:
            return self.W(m, n).get(k, self.zero)
        if k > min(m, n):
            return self.zero
        return self.c**k * ((-1) ** k * comb(n, k) * falling(m, k))

    @memoized
    def U(self, n: int, m: int, s: int, closed: bool = False) -> Dict[int, Scalar]:
        """(x^n y^m)^s = sum_l x^(ns-l) U_{s,l} y^(ms-l) z^(el)"""
        if s == 0:
            return {0: self.one}
        prev, r = self.U(n, m, s - 1, closed), s - 1
        row: Dict[int, Scalar] = {}
        for done, u in prev.items():
            for k in range(min(n, m * r - done) + 1):
                accumulate(row, done + k, u * self.w(n, m * r - done, k, closed))
        return pruned(row)

    @memoized
    def V(self, s: int) -> Dict[int, Scalar]:
        """(xy)^s = sum_l x^(s-l) V_{s,l} y^(s-l) z^(el)"""
        if s == 0:
            return {0: self.one}
        prev, r = self.V(s - 1), s - 1
        return pruned(
            {
                l: prev.get(l, self.zero) - self.c * (r + 1 - l) * prev.get(l - 1, self.zero)
                for l in range(s + 1)
            }
        )

    @memoized
    def E(self, n: int) -> Dict[tuple, Scalar]:
        """(x + y)^n = sum x^i E_{n;i,k} y^(n-i-2k) z^(ek)"""
        if n == 0:
            return {(0, 0): self.one}
        prev, r = self.E(n - 1), n - 1
        row: Dict[tuple, Scalar] = {}
        for (i, k), v in prev.items():
            j = r - i - 2 * k
            accumulate(row, (i + 1, k), v)
            accumulate(row, (i, k), v)
            if j:
                accumulate(row, (i, k + 1), -self.c * j * v)
        return pruned(row)

    def _from_W(self, n: int, m: int, closed: bool) -> PBWPoly:
        return self.scalars(
            ((m - k, n - k, self.e * k), self.w(m, n, k, closed)) for k in range(min(m, n) + 1)
        )

    def _from_U(self, n: int, m: int, t: int, s: int, closed: bool) -> PBWPoly:
        return self.scalars(
            ((n * s - l, m * s - l, t * s + self.e * l), u)
            for l, u in self.U(n, m, s, closed).items()
        )

    def yx_recursion(self, n: int, m: int) -> PBWPoly:
        return self._from_W(n, m, False)

    def yx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self._from_W(n, m, True)

    def zx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(m, 0, n)

    def zy_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(0, m, n)

    def pow_xy_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self._from_U(n, m, 0, s, False)

    def pow_xy_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self._from_U(n, m, 0, s, True)

    def pow_xz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(n * s, 0, m * s)

    def pow_yz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(0, n * s, m * s)

    def pow_xyz_recursion(self, s: int) -> PBWPoly:
        return self.scalars(((s - l, s - l, s + self.e * l), v) for l, v in self.V(s).items())

    def pow_block_recursion(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        return self._from_U(n, m, t, s, False)

    def pow_block_closed_form(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        return self._from_U(n, m, t, s, True)

    def binom_xy_recursion(self, n: int) -> PBWPoly:
        return self.scalars(((i, n - i - 2 * k, self.e * k), v) for (i, k), v in self.E(n).items())

    def binom_xz_closed_form(self, n: int) -> PBWPoly:
        return self.ordinary_binomial_sum("xz", n)

    def binom_yz_closed_form(self, n: int) -> PBWPoly:
        return self.ordinary_binomial_sum("yz", n)

    # z is central
    def zx_recursion(self, n: int, m: int) -> PBWPoly:
        return self.commuting_prefix("z", n, (m, 0, 0))

    def zy_recursion(self, n: int, m: int) -> PBWPoly:
        return self.commuting_prefix("z", n, (0, m, 0))

    def pow_xz_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self.commuting_power((n, 0, m), s)

    def pow_yz_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self.commuting_power((0, n, m), s)

    def binom_xz_recursion(self, n: int) -> PBWPoly:
        return self.commuting_binomial("xz", n)

    def binom_yz_recursion(self, n: int) -> PBWPoly:
        return self.commuting_binomial("yz", n)

    def tables(self) -> Dict[str, TableSpec]:
        return {
            "W": TableSpec(("m", "n"), ("k",), lambda m, n: keyed(self.W(m, n))),
            "U": TableSpec(("n", "m", "s"), ("l",), lambda n, m, s: keyed(self.U(n, m, s))),
            "V": TableSpec(("s",), ("l",), lambda s: keyed(self.V(s))),
            "E": TableSpec(("n",), ("i", "k"), lambda n: keyed(self.E(n))),
        }


class Case5ii(CentralCommutator):
    """yz = zy, zx = xz, xy - yx = z"""

    case_id = "5ii"

    def __init__(self, params):
        super().__init__(params, params.nu_z, 1)

    def pow_xyz_closed_form(self, s: int) -> PBWPoly:
        return self.scalars(
            ((s - l, s - l, s + l), self.one * ((-1) ** l * stirling2(s, s - l))) for l in range(s + 1)
        )

    def binom_xy_closed_form(self, n: int) -> PBWPoly:
        parts = []
        for k in range(n // 2 + 1):
            for i in range(n - 2 * k + 1):
                count = factorial(n) // (factorial(i) * factorial(n - i - 2 * k) * factorial(k) * 2**k)
                parts.append(((i, n - i - 2 * k, k), self.one * ((-1) ** k * count)))
        return self.scalars(parts)

    def tables(self) -> Dict[str, TableSpec]:
        return {
            **super().tables(),
            "Stirling": TableSpec(
                ("n",), ("k",), lambda n: {(k,): self.one * stirling2(n, k) for k in range(n + 1)}
            ),
        }


class Case5iii(CentralCommutator):
    """yz = zy, zx = xz, xy - yx = b"""

    case_id = "5iii"

    def __init__(self, params):
        super().__init__(params, params.nu_1, 0)

    def pow_xyz_closed_form(self, s: int) -> PBWPoly:
        # as displayed; the true coefficient is (-b)^l S(s, s-l)
        b = self.c
        return self.scalars(
            ((s - l, s - l, s), b**l * ((-1) ** l * comb(s, l) * factorial(s - l))) for l in range(s + 1)
        )

    def binom_xy_closed_form(self, n: int) -> PBWPoly:
        # as displayed; a homogeneous form cannot carry the b terms
        b = self.c
        return self.scalars(
            ((i, n - i, 0), (-b) ** (n - i) * (comb(n, i) * factorial(n - i))) for i in range(n + 1)
        )
