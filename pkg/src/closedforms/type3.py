"""The two algebras of type 3, where alpha = gamma."""

from typing import Dict

from ..engine import PBWPoly
from ..qcomb import P_poly, mixed_binomial, mixed_factorial, q_int, theta
from ..scalars import Scalar
from .base import TableSpec, keyed, memoized, pruned
from .twisted import TwistedCase, binom2, composition_sum
from .type2 import ThetaTable


class AlphaScaled:
    """Closed forms shared when xy and zy only rescale by alpha"""

    def yx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(m, n, 0, self.alpha_inv ** (m * n))

    def zy_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(0, m, n, self.alpha_inv ** (m * n))

    def pow_xy_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(n * s, m * s, 0, self.alpha_inv ** (n * m * binom2(s)))

    def pow_yz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(0, n * s, m * s, self.alpha_inv ** (n * m * binom2(s)))

    def binom_xy_closed_form(self, n: int) -> PBWPoly:
        return self.q_binomial_sum("xy", n, self.alpha_inv)

    def binom_yz_closed_form(self, n: int) -> PBWPoly:
        return self.q_binomial_sum("yz", n, self.alpha_inv)


class Case3i(AlphaScaled, TwistedCase):
    """yz - alpha zy = 0, zx - beta xz = y + b, xy - alpha yx = 0"""

    case_id = "3i"

    def __init__(self, params):
        super().__init__(params)
        self.b = params.mu_1

    def loss(self, r: int):
        return P_poly(r, self.beta, self.params.alpha, self.b)


class Case3ii(AlphaScaled, ThetaTable, TwistedCase):
    """yz - alpha zy = 0, zx - beta xz = b, xy - alpha yx = 0"""

    case_id = "3ii"

    def __init__(self, params):
        super().__init__(params)
        self.b = params.mu_1

    def loss(self, r: int):
        return self.ring.one * (self.b * q_int(r, self.beta))

    def zx_closed_form(self, n: int, m: int) -> PBWPoly:
        # displayed with mixed (beta, 1/alpha) numbers; b commutes with y, so only beta enters
        rho, sigma = self.beta, self.alpha_inv
        parts = []
        for k in range(min(m, n) + 1):
            c = (
                self.beta ** ((m - k) * (n - k))
                * self.b**k
                * mixed_binomial(m, k, rho, sigma)
                * mixed_binomial(n, k, rho, sigma)
                * mixed_factorial(k, rho, sigma)
            )
            parts.append(((m - k, 0, n - k), c))
        return self.scalars(parts)

    @memoized
    def V(self, s: int) -> Dict[int, Scalar]:
        """(xyz)^s = sum_l x^(s-l) V_{s,l} y^s z^(s-l)"""
        if s == 0:
            return {0: self.one}
        prev, r = self.V(s - 1), s - 1
        a = self.alpha_inv
        row = {}
        for l in range(r + 1):
            value = prev.get(l, self.zero) * self.beta ** (r - l) * a ** (2 * r - l)
            value += self.b * q_int(r - l + 1, self.beta) * a ** (r - l) * prev.get(l - 1, self.zero)
            row[l] = value
        return pruned(row)

    def pow_xyz_recursion(self, s: int) -> PBWPoly:
        return self.scalars(((s - l, s, s - l), v) for l, v in self.V(s).items())

    @memoized
    def C(self, n: int, m: int, t: int, s: int) -> Dict[int, Scalar]:
        """(x^n y^m z^t)^s = sum_l C_{s,l} x^(ns-l) y^(ms) z^(ts-l)"""
        if s == 0:
            return {0: self.one}
        prev, r = self.C(n, m, t, s - 1), s - 1
        a = self.alpha_inv
        row: Dict[int, Scalar] = {}
        for l in range(min(n * s, t * s) + 1):
            value = self.zero
            for k in range(min(n, l) + 1):
                if l - k in prev:
                    value += (
                        a ** (m * r * (n - k))
                        * prev[l - k]
                        * theta(t * r - (l - k), n, k, self.beta, self.b)
                    )
            row[l] = a ** (m * (t * r - l)) * value if t * r >= l else self.zero
        return pruned(row)

    @memoized
    def multisum(self, n: int, m: int, t: int, s: int) -> Dict[int, Scalar]:
        """C_{s,l} summed directly over loss sequences k_1..k_{s-1}"""
        a = self.alpha_inv

        def weight(j: int, k: int, done: int) -> Scalar:
            return (
                a ** (m * (t * j - done - k))
                * a ** (m * j * (n - k))
                * theta(t * j - done, n, k, self.beta, self.b)
            )

        return composition_sum(self.one, s, n, t, weight)

    def pow_block_recursion(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        return self.scalars(
            ((n * s - l, m * s, t * s - l), c) for l, c in self.C(n, m, t, s).items()
        )

    def pow_block_closed_form(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        return self.scalars(
            ((n * s - l, m * s, t * s - l), c) for l, c in self.multisum(n, m, t, s).items()
        )

    def pow_xz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.scalars(((n * s - l, 0, m * s - l), c) for l, c in self.multisum(n, 0, m, s).items())

    def pow_xyz_closed_form(self, s: int) -> PBWPoly:
        return self.scalars(((s - l, s, s - l), c) for l, c in self.multisum(1, 1, 1, s).items())

    def tables(self):
        return {
            **super().tables(),
            "C": TableSpec(
                ("n", "m", "t", "s"), ("l",), lambda n, m, t, s: keyed(self.C(n, m, t, s))
            ),
        }
