"""The six algebras of type 2, where alpha = gamma = 1."""

from math import comb
from typing import Dict

from ..engine import PBWPoly
from ..qcomb import Q_poly, q_int, theta
from ..scalars import Scalar
from .base import TableSpec, keyed, memoized, pruned
from .twisted import TwistedCase, binom2, composition_sum


class UnitShifts:
    """Closed forms for tau_x(y) = tau_z(y) = y - 1"""

    def yx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.place([(m, (self.y - m) ** n, 0)])

    def zy_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.place([(0, (self.y - n) ** m, n)])

    def pow_xy_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.place([(n * s, self.shifted_product(n, s, m), 0)])

    def pow_yz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.place([(0, self.shifted_product(m, s, n), m * s)])


class CentralY:
    """Closed forms for the cases where y is central"""

    def yx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(m, n, 0)

    def zy_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(0, m, n)

    def pow_xy_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(n * s, m * s, 0)

    def pow_yz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(0, n * s, m * s)

    def binom_xy_closed_form(self, n: int) -> PBWPoly:
        return self.ordinary_binomial_sum("xy", n)

    def binom_yz_closed_form(self, n: int) -> PBWPoly:
        return self.ordinary_binomial_sum("yz", n)


class ThetaTable:
    """z^r x^n = sum_k Theta_{r,n}(k) x^(n-k) z^(r-k) when zx = beta xz + b"""

    def theta_row(self, r: int, n: int, b=None) -> Dict[int, Scalar]:
        b = self.b if b is None else b
        return pruned({k: theta(r, n, k, self.beta, b) for k in range(min(r, n) + 1)})

    def zx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.scalars(((m - k, 0, n - k), c) for k, c in self.theta_row(n, m).items())

    def tables(self):
        return {
            **super().tables(),
            "Theta": TableSpec(("r", "n"), ("k",), lambda r, n: keyed(self.theta_row(r, n))),
        }


class Case2i(UnitShifts, TwistedCase):
    """yz - zy = z, zx - beta xz = y, xy - yx = x"""

    case_id = "2i"

    def loss(self, r: int):
        return Q_poly(r, self.beta)

    def tables(self):
        return {**super().tables(), "Q": TableSpec(("r",), (), lambda r: {(): Q_poly(r, self.beta)})}


class Case2ii(UnitShifts, ThetaTable, TwistedCase):
    """yz - zy = z, zx - beta xz = b, xy - yx = x"""

    case_id = "2ii"

    def __init__(self, params):
        super().__init__(params)
        self.b = params.mu_1

    def loss(self, r: int):
        return self.ring.one * (self.b * q_int(r, self.beta))


class Case2iii(CentralY, TwistedCase):
    """yz = zy, zx - beta xz = y, xy = yx"""

    case_id = "2iii"

    def loss(self, r: int):
        return self.y * q_int(r, self.beta)

    def zx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.scalars(
            ((m - k, k, n - k), theta(n, m, k, self.beta, self.one)) for k in range(min(m, n) + 1)
        )


class Case2iv(CentralY, ThetaTable, TwistedCase):
    """yz = zy, zx - beta xz = b, xy = yx"""

    case_id = "2iv"

    def __init__(self, params):
        super().__init__(params)
        self.b = params.mu_1

    def loss(self, r: int):
        return self.ring.one * (self.b * q_int(r, self.beta))

    @memoized
    def V(self, s: int) -> Dict[int, Scalar]:
        """(xyz)^s = sum_l x^(s-l) V_{s,l} y^s z^(s-l)"""
        if s == 0:
            return {0: self.one}
        prev, r = self.V(s - 1), s - 1
        row = {}
        for l in range(r + 1):
            value = prev.get(l, self.zero) * self.beta ** (r - l)
            value += self.b * q_int(r - l + 1, self.beta) * prev.get(l - 1, self.zero)
            row[l] = value
        return pruned(row)

    def pow_xyz_recursion(self, s: int) -> PBWPoly:
        return self.scalars(((s - l, s, s - l), v) for l, v in self.V(s).items())

    @memoized
    def multisum(self, n: int, t: int, s: int) -> Dict[int, Scalar]:
        """(x^n z^t)^s = sum_l x^(ns-l) C_{s,l} z^(ts-l), summed over loss sequences"""
        return composition_sum(
            self.one, s, n, t, lambda j, k, done: theta(t * j - done, n, k, self.beta, self.b)
        )

    def pow_xz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.scalars(((n * s - l, 0, m * s - l), c) for l, c in self.multisum(n, m, s).items())

    def pow_xyz_closed_form(self, s: int) -> PBWPoly:
        return self.scalars(((s - l, s, s - l), c) for l, c in self.multisum(1, 1, s).items())

    def pow_block_closed_form(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        return self.scalars(
            ((n * s - l, m * s, t * s - l), c) for l, c in self.multisum(n, t, s).items()
        )

    def tables(self):
        return {
            **super().tables(),
            "C": TableSpec(("n", "t", "s"), ("l",), lambda n, t, s: keyed(self.multisum(n, t, s))),
        }


class Case2v(TwistedCase):
    """yz - zy = az, zx = beta xz, xy - yx = x"""

    case_id = "2v"

    def __init__(self, params):
        super().__init__(params)
        self.a = params.lam_z

    def loss(self, r: int):
        return self.ring.zero

    def yx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.place([(m, (self.y - m) ** n, 0)])

    def zx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(m, 0, n, self.beta ** (m * n))

    def zy_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.place([(0, (self.y - self.a * n) ** m, n)])

    def pow_xy_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.place([(n * s, self.shifted_product(n, s, m), 0)])

    def pow_xz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(n * s, 0, m * s, self.beta ** (n * m * binom2(s)))

    def pow_yz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.place([(0, self.shifted_product(self.a * m, s, n), m * s)])

    def pow_xyz_closed_form(self, s: int) -> PBWPoly:
        # as displayed: the x-shift of y is missing, wrong from s = 2
        f = self.shifted_product(self.a, s, 1) * self.beta ** binom2(s)
        return self.place([(s, f, s)])

    def pow_block_closed_form(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        # as displayed, same omission as pow_xyz
        f = self.shifted_product(self.a * t, s, m) * self.beta ** (n * t * binom2(s))
        return self.place([(n * s, f, t * s)])

    def binom_xz_closed_form(self, n: int) -> PBWPoly:
        return self.q_binomial_sum("xz", n, self.beta)


class Case2vi(TwistedCase):
    """yz - zy = z, zx = beta xz, xy = yx"""

    case_id = "2vi"

    def loss(self, r: int):
        return self.ring.zero

    def yx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(m, n, 0)

    def zx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(m, 0, n, self.beta ** (m * n))

    def zy_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.place([(0, (self.y - n) ** m, n)])

    def pow_xy_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(n * s, m * s, 0)

    def pow_xz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(n * s, 0, m * s, self.beta ** (n * m * binom2(s)))

    def pow_yz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.place([(0, self.shifted_product(m, s, n), m * s)])

    def pow_xyz_closed_form(self, s: int) -> PBWPoly:
        # the displayed alternating sum; the product over (y - j) is the true expansion
        c = self.beta ** binom2(s)
        return self.scalars(((s, s - k, s), c * ((-1) ** k * comb(s, k))) for k in range(s + 1))

    def pow_block_closed_form(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        f = self.shifted_product(t, s, m) * self.beta ** (n * t * binom2(s))
        return self.place([(n * s, f, t * s)])

    def binom_xy_closed_form(self, n: int) -> PBWPoly:
        return self.ordinary_binomial_sum("xy", n)

    def binom_xz_closed_form(self, n: int) -> PBWPoly:
        return self.q_binomial_sum("xz", n, self.beta)
