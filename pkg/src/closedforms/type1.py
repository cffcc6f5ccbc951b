from ..engine import PBWPoly
from .twisted import TwistedCase, binom2


class TypeOne(TwistedCase):
    """The q-commuting algebra yz = alpha zy, zx = beta xz, xy = gamma yx"""

    case_id = "1"

    def loss(self, r: int):
        return self.ring.zero

    def yx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(m, n, 0, self.gamma_inv ** (m * n))

    def zx_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(m, 0, n, self.beta ** (m * n))

    def zy_closed_form(self, n: int, m: int) -> PBWPoly:
        return self.mono(0, m, n, self.alpha_inv ** (m * n))

    def pow_xy_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(n * s, m * s, 0, self.gamma_inv ** (n * m * binom2(s)))

    def pow_xz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(n * s, 0, m * s, self.beta ** (n * m * binom2(s)))

    def pow_yz_closed_form(self, n: int, m: int, s: int) -> PBWPoly:
        return self.mono(0, n * s, m * s, self.alpha_inv ** (n * m * binom2(s)))

    def pow_xyz_closed_form(self, s: int) -> PBWPoly:
        q = self.beta * self.alpha_inv * self.gamma_inv
        return self.mono(s, s, s, q ** binom2(s))

    def pow_block_closed_form(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        c = binom2(s)
        coeff = self.beta ** (n * t * c) * self.gamma_inv ** (n * m * c) * self.alpha_inv ** (m * t * c)
        return self.mono(n * s, m * s, t * s, coeff)

    def binom_xy_closed_form(self, n: int) -> PBWPoly:
        return self.q_binomial_sum("xy", n, self.gamma_inv)

    def binom_xz_closed_form(self, n: int) -> PBWPoly:
        return self.q_binomial_sum("xz", n, self.beta)

    def binom_yz_closed_form(self, n: int) -> PBWPoly:
        return self.q_binomial_sum("yz", n, self.alpha_inv)
