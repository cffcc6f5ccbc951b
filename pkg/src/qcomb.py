"""q-combinatorics and the commuting polynomial families used by the closed forms.

All q-objects are literal sums and products, so a symbolic q may later be
specialized to 1 (or any root of unity) without hitting a pole.
"""

from functools import lru_cache
from math import comb
from typing import List, Tuple

from sympy.polys.fields import FracField
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing, ring

from .scalars import Scalar, inverse

UniPoly = PolyElement


@lru_cache(maxsize=None)
def unipoly_ring(K: FracField, name: str = "y") -> Tuple[PolyRing, UniPoly]:
    """Univariate polynomial ring over the scalar field, with its generator"""
    R, gen = ring(name, K.to_domain(), lex)
    return R, gen


def affine(p: UniPoly, scale, offset) -> UniPoly:
    """p(scale*y + offset)"""
    gen = p.ring.gens[0]
    return p.compose(gen, gen * scale + offset)


def shift(p: UniPoly, c) -> UniPoly:
    """p(y + c)"""
    gen = p.ring.gens[0]
    return p.compose(gen, gen + c)


def q_int(r: int, q):
    """[r]_q = 1 + q + ... + q^(r-1), with [0]_q = 0"""
    total = q - q
    for i in range(r):
        total = total + q**i
    return total


def q_factorial(r: int, q):
    result = q**0
    for j in range(1, r + 1):
        result = result * q_int(j, q)
    return result


def gauss_binomial(r: int, k: int, q):
    """Gaussian binomial by the q-Pascal rule, valid at every q"""
    if k < 0 or k > r:
        return q - q
    one = q**0
    row: List = [one]
    for n in range(r):
        width = min(n + 2, k + 1)
        row = [
            (row[j - 1] if j >= 1 else q - q) + (q**j * row[j] if j < len(row) else q - q)
            for j in range(width)
        ]
    return row[k]


def mixed_number(r: int, rho, sigma):
    """<r>_{rho,sigma} = sum of rho^(r-1-j) sigma^j"""
    total = rho - rho
    for j in range(r):
        total = total + rho ** (r - 1 - j) * sigma**j
    return total


def mixed_factorial(r: int, rho, sigma):
    result = rho**0
    for j in range(1, r + 1):
        result = result * mixed_number(j, rho, sigma)
    return result


def mixed_binomial(r: int, k: int, rho: Scalar, sigma: Scalar) -> Scalar:
    # <r>_{rho,sigma} = sigma^(r-1) [r]_{rho/sigma}
    if k < 0 or k > r:
        return rho - rho
    return sigma ** (k * (r - k)) * gauss_binomial(r, k, rho * inverse(sigma))


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind, S(0,0) = 1"""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def stirling_row(n: int) -> List[int]:
    return [stirling2(n, k) for k in range(1, n + 1)]


def falling(base, k: int, step=1):
    """prod_{r<k} (base - r*step)"""
    result = base**0
    for r in range(k):
        result = result * (base - step * r)
    return result


def rising(base, s: int):
    return falling(base, s, -1)


def Q_poly(r: int, beta: Scalar) -> UniPoly:
    """Q_r(y) = [r]_beta y - sum_{i<r} [i]_beta"""
    _, y = unipoly_ring(beta.field, "y")
    constant = beta - beta
    for i in range(1, r):
        constant = constant + q_int(i, beta)
    return y * q_int(r, beta) - constant


def P_poly(r: int, beta: Scalar, alpha: Scalar, b: Scalar) -> UniPoly:
    """P_r(y) = <r>_{beta,1/alpha} y + b [r]_beta"""
    _, y = unipoly_ring(beta.field, "y")
    return y * mixed_number(r, beta, inverse(alpha)) + b * q_int(r, beta)


def theta(r: int, n: int, k: int, beta: Scalar, b: Scalar) -> Scalar:
    """Coefficient of x^(n-k) z^(r-k) in z^r x^n when zx = beta xz + b"""
    if k < 0 or k > min(r, n):
        return beta - beta
    return (
        beta ** ((n - k) * (r - k))
        * b**k
        * gauss_binomial(r, k, beta)
        * gauss_binomial(n, k, beta)
        * q_factorial(k, beta)
    )


def trig_split(m: int, u: UniPoly) -> Tuple[UniPoly, UniPoly]:
    """The alternating binomial pair (C_m(u), S_m(u))"""
    cosine = u - u
    sine = u - u
    for r in range(m // 2 + 1):
        cosine = cosine + u ** (m - 2 * r) * ((-1) ** r * comb(m, 2 * r))
    for r in range((m - 1) // 2 + 1 if m else 0):
        sine = sine + u ** (m - 2 * r - 1) * ((-1) ** r * comb(m, 2 * r + 1))
    return cosine, sine
