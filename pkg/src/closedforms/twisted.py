"""Types 1 to 3: the y-twisted algebras.

Here xy and zy only rescale and shift y, and zx differs from beta xz by a
polynomial in y, so every normal form is a sum of pieces x^i f(y) z^k:

    f(y) x = x f(tau_x(y))
    z f(y) = f(tau_z(y)) z
    z x^j  = beta^j x^j z + x^(j-1) P_j(y)
"""

from math import comb
from typing import Dict, NamedTuple

from ..engine import PBWPoly
from ..qcomb import UniPoly, affine, q_int
from ..scalars import Scalar, inverse
from .base import CaseFormulas, TableSpec, accumulate, keyed, memoized, pruned


class Twist(NamedTuple):
    """The affine substitution y -> scale*y + offset"""

    scale: Scalar
    offset: Scalar

    def power(self, r: int) -> "Twist":
        return Twist(self.scale**r, self.offset * q_int(r, self.scale))

    def apply(self, p: UniPoly, r: int = 1) -> UniPoly:
        """p(tau^r(y))"""
        if r == 0:
            return p
        twist = self.power(r)
        return affine(p, twist.scale, twist.offset)

    def image(self, y: UniPoly, r: int = 1) -> UniPoly:
        """tau^r(y)"""
        twist = self.power(r)
        return y * twist.scale + twist.offset


class TwistedCase(CaseFormulas):
    def __init__(self, params):
        super().__init__(params)
        self.beta = params.beta
        self.alpha_inv = inverse(params.alpha)
        self.gamma_inv = inverse(params.gamma)
        self.tau_x = Twist(self.gamma_inv, -self.gamma_inv * params.nu_x)
        self.tau_z = Twist(self.alpha_inv, -self.alpha_inv * params.lam_z)
        self.mu = self.y * params.mu_y + params.mu_1

    def loss(self, r: int) -> UniPoly:
        """P_r(y), the x-free remainder of z x^r"""
        total = self.ring.zero
        for i in range(r):
            total += self.tau_x.apply(self.mu, r - 1 - i) * self.beta**i
        return total

    def shifted_product(self, step, count: int, exponent: int) -> UniPoly:
        """prod_{j<count} (y - j*step)^exponent"""
        result = self.ring.one
        for j in range(count):
            result *= (self.y - step * j) ** exponent
        return result

    # -- coefficient arrays

    @memoized
    def W(self, m: int, n: int) -> Dict[int, UniPoly]:
        """z^n x^m = sum_k x^(m-k) W_{n,k}(y) z^(n-k)"""
        if n == 0:
            return {0: self.ring.one}
        prev = self.W(m, n - 1)
        row = {}
        for k in range(min(m, n) + 1):
            value = self.ring.zero
            if k in prev:
                value += self.tau_z.apply(prev[k]) * self.beta ** (m - k)
            if k - 1 in prev:
                value += self.loss(m - k + 1) * prev[k - 1]
            row[k] = value
        return pruned(row)

    def single_loss(self, r: int) -> UniPoly:
        """Coefficient of z^(r-1) in z^r x"""
        return self.W(1, r).get(1, self.ring.zero)

    @memoized
    def U(self, n: int, m: int, s: int) -> Dict[int, UniPoly]:
        """(x^n z^m)^s = sum_l x^(ns-l) U_{s,l}(y) z^(ms-l)"""
        if s == 0:
            return {0: self.ring.one}
        prev, r = self.U(n, m, s - 1), s - 1
        row: Dict[int, UniPoly] = {}
        for done, u in prev.items():
            for k, w in self.W(n, m * r - done).items():
                # the shift acts on U before the product with W
                accumulate(row, done + k, self.tau_x.apply(u, n - k) * w)
        return pruned(row)

    @memoized
    def V(self, s: int) -> Dict[int, UniPoly]:
        """(xyz)^s = sum_l x^(s-l) V_{s,l}(y) z^(s-l)"""
        if s == 0:
            return {0: self.ring.one}
        prev, r = self.V(s - 1), s - 1
        row = {}
        for l in range(r + 1):
            inner = self.ring.zero
            if l in prev:
                inner += self.tau_x.apply(prev[l]) * self.beta ** (r - l)
            if l - 1 in prev:
                inner += self.single_loss(r - l + 1) * prev[l - 1]
            row[l] = self.tau_z.image(self.y, r - l) * inner
        return pruned(row)

    @memoized
    def R(self, n: int, m: int, t: int, s: int) -> Dict[int, UniPoly]:
        """(x^n y^m z^t)^s = sum_l x^(ns-l) R_{s,l}(y) z^(ts-l)"""
        if s == 0:
            return {0: self.ring.one}
        prev, r = self.R(n, m, t, s - 1), s - 1
        acc: Dict[int, UniPoly] = {}
        for done, u in prev.items():
            for k, w in self.W(n, t * r - done).items():
                accumulate(acc, done + k, self.tau_x.apply(u, n - k) * w)
        return pruned({l: v * self.tau_z.image(self.y, t * r - l) ** m for l, v in acc.items()})

    @memoized
    def S(self, n: int) -> Dict[int, UniPoly]:
        """(x + y)^n = sum_k x^k S_{n,k}(y)"""
        if n == 0:
            return {0: self.ring.one}
        prev = self.S(n - 1)
        row: Dict[int, UniPoly] = {}
        for k, v in prev.items():
            accumulate(row, k + 1, v)
            accumulate(row, k, self.tau_x.image(self.y, k) * v)
        return pruned(row)

    @memoized
    def T(self, n: int) -> Dict[int, UniPoly]:
        """(y + z)^n = sum_k T_{n,k}(y) z^k"""
        if n == 0:
            return {0: self.ring.one}
        prev = self.T(n - 1)
        row: Dict[int, UniPoly] = {}
        for k, v in prev.items():
            accumulate(row, k, self.y * v)
            accumulate(row, k + 1, self.tau_z.apply(v))
        return pruned(row)

    @memoized
    def E(self, n: int) -> Dict[tuple, UniPoly]:
        """(x + z)^n = sum x^i E_{n;i,k}(y) z^k"""
        if n == 0:
            return {(0, 0): self.ring.one}
        prev = self.E(n - 1)
        row: Dict[tuple, UniPoly] = {}
        for (i, k), v in prev.items():
            accumulate(row, (i, k + 1), v)
            accumulate(row, (i + 1, k), self.tau_x.apply(v) * self.beta**k)
            if k:
                accumulate(row, (i, k - 1), v * self.single_loss(k))
        return pruned(row)

    # -- recursion routes

    def yx_recursion(self, n: int, m: int) -> PBWPoly:
        f = self.ring.one
        for _ in range(n):
            f = self.tau_x.image(self.y, m) * f
        return self.place([(m, f, 0)])

    def zx_recursion(self, n: int, m: int) -> PBWPoly:
        return self.place((m - k, w, n - k) for k, w in self.W(m, n).items())

    def zy_recursion(self, n: int, m: int) -> PBWPoly:
        g = self.y**m
        for _ in range(n):
            g = self.tau_z.apply(g)
        return self.place([(0, g, n)])

    def pow_xy_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        f = self.ring.one
        for _ in range(s):
            f = self.tau_x.apply(f, n) * self.y**m
        return self.place([(n * s, f, 0)])

    def pow_xz_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        return self.place((n * s - l, u, m * s - l) for l, u in self.U(n, m, s).items())

    def pow_yz_recursion(self, n: int, m: int, s: int) -> PBWPoly:
        g = self.ring.one
        for r in range(s):
            g = g * self.tau_z.image(self.y, m * r) ** n
        return self.place([(0, g, m * s)])

    def pow_xyz_recursion(self, s: int) -> PBWPoly:
        return self.place((s - l, v, s - l) for l, v in self.V(s).items())

    def pow_block_recursion(self, n: int, m: int, t: int, s: int) -> PBWPoly:
        return self.place((n * s - l, v, t * s - l) for l, v in self.R(n, m, t, s).items())

    def binom_xy_recursion(self, n: int) -> PBWPoly:
        return self.place((k, v, 0) for k, v in self.S(n).items())

    def binom_yz_recursion(self, n: int) -> PBWPoly:
        return self.place((0, v, k) for k, v in self.T(n).items())

    def binom_xz_recursion(self, n: int) -> PBWPoly:
        return self.place((i, v, k) for (i, k), v in self.E(n).items())

    def tables(self) -> Dict[str, TableSpec]:
        return {
            "P": TableSpec(("r",), (), lambda r: {(): self.loss(r)}),
            "W": TableSpec(("m", "n"), ("k",), lambda m, n: keyed(self.W(m, n))),
            "U": TableSpec(("n", "m", "s"), ("l",), lambda n, m, s: keyed(self.U(n, m, s))),
            "V": TableSpec(("s",), ("l",), lambda s: keyed(self.V(s))),
            "R": TableSpec(("n", "m", "t", "s"), ("l",), lambda n, m, t, s: keyed(self.R(n, m, t, s))),
            "S": TableSpec(("n",), ("k",), lambda n: keyed(self.S(n))),
            "T": TableSpec(("n",), ("k",), lambda n: keyed(self.T(n))),
            "E": TableSpec(("n",), ("i", "k"), lambda n: keyed(self.E(n))),
        }


def binom2(s: int) -> int:
    return comb(s, 2)


def composition_sum(one, s: int, n: int, t: int, weight) -> Dict[int, Scalar]:
    """Sum over k_1..k_{s-1} of prod_j weight(j, k_j, L_{j-1}), grouped by L_{s-1}.

    Each k_j ranges over 0..min(n, t*j - L_{j-1}).
    """
    if s == 0:
        return {0: one}
    totals: Dict[int, Scalar] = {}

    def walk(j: int, done: int, acc: Scalar) -> None:
        if j == s:
            accumulate(totals, done, acc)
            return
        for k in range(min(n, t * j - done) + 1):
            w = weight(j, k, done)
            if w:
                walk(j + 1, done + k, acc * w)

    walk(1, 0, one)
    return pruned(totals)
