"""The solvable cases 5iv and 5v, where z acts on x and y by shifts.

In 5iv the generators x and y commute and
    z x = x (z + 1) + y,    z y = y (z + 1).
In 5v they commute and
    z x = (x + 1) z,        z y = (y - a) z.
"""

from math import comb
from typing import Dict

from ..engine import PBWPoly
from ..qcomb import falling, rising, unipoly_ring
from ..scalars import Scalar
from .base import CaseFormulas, Mono, TableSpec, accumulate, keyed, memoized, pruned, spread
from .kernels import KernelCase


class Case5iv(KernelCase):
    """yz - zy = -y, zx - xz = x + y, xy = yx

    x^a y^b z^c * x = x^(a+1) y^b (z+1)^c + c x^a y^(b+1) (z+1)^(c-1)
    x^a y^b z^c * y = x^a y^(b+1) (z+1)^c
    """

    case_id = "5iv"
    side = "right"

    def __init__(self, params):
        super().__init__(params)
        self.zring, self.z = unipoly_ring(self.K, "z")

    def kernel(self, letter: str, mono: Mono) -> PBWPoly:
        a, b, c = mono
        if letter == "z":
            return self.mono(a, b, c + 1)
        parts = [((a + (letter == "x"), b + (letter == "y"), e), self.one * comb(c, e)) for e in range(c + 1)]
        if letter == "x":
            parts.extend(((a, b + 1, e), self.one * (c * comb(c - 1, e))) for e in range(c))
        return self.scalars(parts)

    @memoized
    def Wnm(self, n: int, m: int, r: int) -> Dict[tuple, Scalar]:
        """z^r x^n y^m = sum_{k,q} Wnm_{r;k,q} x^(n-q) y^(m+q) z^(r-k)"""
        if r == 0:
            return {(0, 0): self.one}
        prev = self.Wnm(n, m, r - 1)
        row: Dict[tuple, Scalar] = {}
        for (k, q), w in prev.items():
            accumulate(row, (k, q), w)
            accumulate(row, (k + 1, q), w * (n + m))
            if q < n:
                accumulate(row, (k + 1, q + 1), w * (n - q))
        return pruned(row)

    def W(self, m: int, n: int) -> Dict[tuple, Scalar]:
        """z^n x^m = sum W_{n;k,j} x^(m-j) y^j z^(n-k)"""
        return self.Wnm(m, 0, n)

    @memoized
    def Uhat(self, n: int, m: int, s: int) -> Dict[int, Scalar]:
        """(y^n z^m)^s = y^(ns) sum_l Uhat_{s,l} z^(ms-l)"""
        if s == 0:
            return {0: self.one}
        prev, r = self.Uhat(n, m, s - 1), s - 1
        row: Dict[int, Scalar] = {}
        for l, u in prev.items():
            for k in range(m + 1):
                accumulate(row, l + k, u * (comb(m, k) * (n * r) ** k))
        return pruned(row)

    @memoized
    def R(self, n: int, m: int, t: int, s: int) -> Dict[tuple, Scalar]:
        """(x^n y^m z^t)^s = sum R_{s;l,j} x^(ns-j) y^(ms+j) z^(ts-l)"""
        if s == 0:
            return {(0, 0): self.one}
        prev, r = self.R(n, m, t, s - 1), s - 1
        row: Dict[tuple, Scalar] = {}
        for (l, j), u in prev.items():
            for (k, q), w in self.Wnm(n, m, t * r - l).items():
                accumulate(row, (l + k, j + q), u * w)
        return pruned(row)

    def Utilde(self, n: int, m: int, s: int) -> Dict[tuple, Scalar]:
        """(x^n z^m)^s = sum Utilde_{s;l,j} x^(ns-j) y^j z^(ms-l)"""
        return self.R(n, 0, m, s)

    @memoized
    def Eyz(self, n: int) -> Dict[tuple, Scalar]:
        """(y + z)^n = sum Eyz_{n;i,k} y^i z^k"""
        if n == 0:
            return {(0, 0): self.one}
        row: Dict[tuple, Scalar] = {}
        for (i, c), e in self.Eyz(n - 1).items():
            accumulate(row, (i, c + 1), e)
            for k in range(c + 1):
                accumulate(row, (i + 1, k), e * comb(c, k))
        return pruned(row)

    @memoized
    def Exz(self, n: int) -> Dict[tuple, Scalar]:
        """(x + z)^n = sum Exz_{n;i,j,k} x^i y^j z^k"""
        if n == 0:
            return {(0, 0, 0): self.one}
        row: Dict[tuple, Scalar] = {}
        for (i, j, c), e in self.Exz(n - 1).items():
            accumulate(row, (i, j, c + 1), e)
            for k in range(c + 1):
                accumulate(row, (i + 1, j, k), e * comb(c, k))
            for k in range(c):
                accumulate(row, (i, j + 1, k), e * (c * comb(c - 1, k)))
        return pruned(row)

    def yx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(m, n, 0)

    def yx_recursion(self, n: int, m: int) -> PBWPoly:
        return self.commuting_prefix("y", n, (m, 0, 0))

    def zx_recursion(self, n: int, m: int) -> PBWPoly:
        return self.scalars(((m - j, j, n - k), w) for (k, j), w in self.W(m, n).items())

    def zy_recursion(self, n: int, m: int) -> PBWPoly:
        g = self.zring.one
        for _ in range(n):
            g = (self.z + m) * g
        return PBWPoly.collect(spread(g, 2, (0, m, 0)))

    def zy_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.scalars(((0, m, n - k), self.one * (comb(n, k) * m**k)) for k in range(n + 1))

    def pow_xy_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(n * s, m * s, 0)

    def pow_xz_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self.scalars(((n * s - j, j, m * s - l), u) for (l, j), u in self.Utilde(n, m, s).items())

    def pow_yz_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self.scalars(((0, n * s, m * s - l), u) for l, u in self.Uhat(n, m, s).items())

    def pow_yz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        product = self.zring.one
        for r in range(s):
            product = product * (self.z + r * n) ** m
        return PBWPoly.collect(spread(product, 2, (0, n * s, 0)))

    def pow_block_recursion(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        return self.scalars(
            ((n * s - j, m * s + j, t * s - l), u) for (l, j), u in self.R(n, m, t, s).items()
        )

    def binom_xy_closed_form(self, n: int) -> PBWPoly:
        return self.ordinary_binomial_sum("xy", n)

    def binom_xz_recursion(self, n: int) -> PBWPoly:
        return self.scalars(self.Exz(n).items())

    def binom_yz_recursion(self, n: int) -> PBWPoly:
        return self.scalars(((0, i, k), e) for (i, k), e in self.Eyz(n).items())

    def tables(self) -> Dict[str, TableSpec]:
        return {
            **super().tables(),
            "W": TableSpec(("m", "n"), ("k", "j"), lambda m, n: keyed(self.W(m, n))),
            "Wnm": TableSpec(("n", "m", "r"), ("k", "q"), lambda n, m, r: keyed(self.Wnm(n, m, r))),
            "Uhat": TableSpec(("n", "m", "s"), ("l",), lambda n, m, s: keyed(self.Uhat(n, m, s))),
            "Utilde": TableSpec(("n", "m", "s"), ("l", "j"), lambda n, m, s: keyed(self.Utilde(n, m, s))),
            "R": TableSpec(("n", "m", "t", "s"), ("l", "j"), lambda n, m, t, s: keyed(self.R(n, m, t, s))),
            "Eyz": TableSpec(("n",), ("i", "k"), lambda n: keyed(self.Eyz(n))),
            "Exz": TableSpec(("n",), ("i", "j", "k"), lambda n: keyed(self.Exz(n))),
        }


class Case5v(CaseFormulas):
    """yz - zy = a z, zx - xz = z, xy = yx"""

    case_id = "5v"

    def __init__(self, params):
        super().__init__(params)
        self.a = params.lam_z
        self.xring, self.x = unipoly_ring(self.K, "x")

    @memoized
    def U(self, n: int, m: int, s: int) -> Dict[int, Scalar]:
        """(x^n z^m)^s = sum_l U_{s,l} x^(ns-l) z^(ms)"""
        if s == 0:
            return {0: self.one}
        prev, r = self.U(n, m, s - 1), s - 1
        row: Dict[int, Scalar] = {}
        for l, u in prev.items():
            for k in range(n + 1):
                accumulate(row, l + k, u * (comb(n, k) * (r * m) ** k))
        return pruned(row)

    @memoized
    def Uhat(self, n: int, m: int, s: int) -> Dict[int, Scalar]:
        """(y^n z^m)^s = sum_l Uhat_{s,l} y^(ns-l) z^(ms)"""
        if s == 0:
            return {0: self.one}
        prev, r = self.Uhat(n, m, s - 1), s - 1
        row: Dict[int, Scalar] = {}
        for l, u in prev.items():
            for k in range(n + 1):
                accumulate(row, l + k, u * self.a**k * (comb(n, k) * (-r * m) ** k))
        return pruned(row)

    @memoized
    def V(self, s: int) -> Dict[tuple, Scalar]:
        """(xyz)^s = sum V_{s;i,j} x^i y^j z^s"""
        if s == 0:
            return {(0, 0): self.one}
        prev, r = self.V(s - 1), s - 1
        row: Dict[tuple, Scalar] = {}
        for (i, j), v in prev.items():
            accumulate(row, (i + 1, j + 1), v)
            accumulate(row, (i, j + 1), v * r)
            accumulate(row, (i + 1, j), -v * self.a * r)
            accumulate(row, (i, j), -v * self.a * r**2)
        return pruned(row)

    @memoized
    def R(self, n: int, m: int, t: int, s: int) -> Dict[tuple, Scalar]:
        """(x^n y^m z^t)^s = sum R_{s;p,q} x^p y^q z^(ts)"""
        if s == 0:
            return {(0, 0): self.one}
        prev, r = self.R(n, m, t, s - 1), s - 1
        row: Dict[tuple, Scalar] = {}
        for (p, q), v in prev.items():
            for u in range(n + 1):
                for w in range(m + 1):
                    coeff = self.a**w * (comb(n, u) * comb(m, w) * (r * t) ** u * (-r * t) ** w)
                    accumulate(row, (p + n - u, q + m - w), v * coeff)
        return pruned(row)

    @memoized
    def E(self, n: int) -> Dict[tuple, Scalar]:
        """(x + z)^n = sum E_{n;i,k} x^i z^k"""
        if n == 0:
            return {(0, 0): self.one}
        row: Dict[tuple, Scalar] = {}
        for (i, k), e in self.E(n - 1).items():
            accumulate(row, (i + 1, k), e)
            accumulate(row, (i, k), e * k)
            accumulate(row, (i, k + 1), e)
        return pruned(row)

    @memoized
    def Ehat(self, n: int) -> Dict[tuple, Scalar]:
        """(y + z)^n = sum Ehat_{n;i,k} y^i z^k"""
        if n == 0:
            return {(0, 0): self.one}
        row: Dict[tuple, Scalar] = {}
        for (i, k), e in self.Ehat(n - 1).items():
            accumulate(row, (i + 1, k), e)
            accumulate(row, (i, k), -e * self.a * k)
            accumulate(row, (i, k + 1), e)
        return pruned(row)

    def yx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(m, n, 0)

    def yx_recursion(self, n: int, m: int) -> PBWPoly:
        return self.commuting_prefix("y", n, (m, 0, 0))

    def zx_recursion(self, n: int, m: int) -> PBWPoly:
        p = self.x**m
        for _ in range(n):
            p = p.compose(self.x, self.x + 1)
        return PBWPoly.collect(spread(p, 0, (0, 0, n)))

    def zx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.scalars(((m - k, 0, n), self.one * (comb(m, k) * n**k)) for k in range(m + 1))

    def zy_recursion(self, n: int, m: int) -> PBWPoly:
        h = self.y**m
        for _ in range(n):
            h = h.compose(self.y, self.y - self.a)
        return PBWPoly.collect(spread(h, 1, (0, 0, n)))

    def zy_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.scalars(
            ((0, m - k, n), self.a**k * (comb(m, k) * (-n) ** k)) for k in range(m + 1)
        )

    def pow_xy_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(n * s, m * s, 0)

    def pow_xy_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self.commuting_power((n, m, 0), s)

    def pow_xz_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self.scalars(((n * s - l, 0, m * s), u) for l, u in self.U(n, m, s).items())

    def pow_xz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        product = self.xring.one
        for r in range(s):
            product = product * (self.x + r * m) ** n
        return PBWPoly.collect(spread(product, 0, (0, 0, m * s)))

    def pow_yz_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self.scalars(((0, n * s - l, m * s), u) for l, u in self.Uhat(n, m, s).items())

    def pow_yz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        product = self.ring.one
        for r in range(s):
            product = product * (self.y - self.a * (r * m)) ** n
        return PBWPoly.collect(spread(product, 1, (0, 0, m * s)))

    def pow_xyz_recursion(self, s: int) -> PBWPoly:
        return self.scalars(((i, j, s), v) for (i, j), v in self.V(s).items())

    def pow_xyz_closed_form(self, s: int) -> PBWPoly:
        xs = rising(self.x, s)
        ys = falling(self.y, s, self.a)
        return PBWPoly.collect(
            ((i, j, s), c * d) for (i,), c in xs.terms() for (j,), d in ys.terms()
        )

    def pow_block_recursion(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        return self.scalars(((p, q, t * s), v) for (p, q), v in self.R(n, m, t, s).items())

    def pow_block_closed_form(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        xs, ys = self.xring.one, self.ring.one
        for r in range(s):
            xs = xs * (self.x + r * t) ** n
            ys = ys * (self.y - self.a * (r * t)) ** m
        return PBWPoly.collect(
            ((i, j, t * s), c * d) for (i,), c in xs.terms() for (j,), d in ys.terms()
        )

    def binom_xy_closed_form(self, n: int) -> PBWPoly:
        return self.ordinary_binomial_sum("xy", n)

    def binom_xy_recursion(self, n: int) -> PBWPoly:
        return self.commuting_binomial("xy", n)

    def binom_xz_recursion(self, n: int) -> PBWPoly:
        return self.scalars(((i, 0, k), e) for (i, k), e in self.E(n).items())

    def binom_yz_recursion(self, n: int) -> PBWPoly:
        return self.scalars(((0, i, k), e) for (i, k), e in self.Ehat(n).items())

    def tables(self) -> Dict[str, TableSpec]:
        return {
            "U": TableSpec(("n", "m", "s"), ("l",), lambda n, m, s: keyed(self.U(n, m, s))),
            "Uhat": TableSpec(("n", "m", "s"), ("l",), lambda n, m, s: keyed(self.Uhat(n, m, s))),
            "V": TableSpec(("s",), ("i", "j"), lambda s: keyed(self.V(s))),
            "R": TableSpec(("n", "m", "t", "s"), ("p", "q"), lambda n, m, t, s: keyed(self.R(n, m, t, s))),
            "E": TableSpec(("n",), ("i", "k"), lambda n: keyed(self.E(n))),
            "Ehat": TableSpec(("n",), ("i", "k"), lambda n: keyed(self.Ehat(n))),
        }
