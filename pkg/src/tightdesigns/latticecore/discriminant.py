"""Discriminant groups of integral lattices and their Gauss sums.

Elements of ``L*/L`` are represented by integer vectors y in dual-basis
coordinates; the norm of the corresponding dual vector is ``y^T G^-1 y``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactnum import CycInt, cyc_root, cyc_sqrt, factorize
from .lattice import LatticeError, LatticeModel
from .normalforms import rational_inverse, smith_normal_form

DEFAULT_DISC_BOUND = 10 ** 4


class DiscriminantBoundExceeded(LatticeError):
    pass


def _mod(x: Fraction, m: int) -> Fraction:
    return x - m * math.floor(x / m)


@dataclass(frozen=True)
class DiscGroup:
    """A finite quadratic group ``L*/L``.

    ``norms`` maps each element (tuple of residues mod the invariant
    factors) to ``(z, z) mod 2`` for even lattices, so that
    ``q(g) = norms[g] / 2 mod 1``; it is None for odd lattices, where only
    ``bilinear`` (generator pairings mod 1) is well defined.
    """

    invariant_factors: tuple
    generators: tuple
    gram_inverse: tuple = field(repr=False)
    bilinear: tuple = field(repr=False)
    norms: dict | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.invariant_factors) if self.invariant_factors else 1

    def lift(self, element) -> list[int]:
        """Dual-basis coordinates of a lift of an element."""
        n = len(self.gram_inverse)
        y = [0] * n
        for a, g in zip(element, self.generators):
            for i in range(n):
                y[i] += a * g[i]
        return y

    def norm_of(self, y) -> Fraction:
        gi = self.gram_inverse
        n = len(gi)
        return sum(y[i] * gi[i][j] * y[j] for i in range(n) for j in range(n))

    def classify(self, y) -> tuple | None:
        """The element whose lifts include the dual-coordinate vector ``y``."""
        gi = self.gram_inverse
        n = len(gi)
        for g in self.elements():
            diff = [a - b for a, b in zip(y, self.lift(g))]
            c = [sum(gi[i][j] * diff[j] for j in range(n)) for i in range(n)]
            if all(x.denominator == 1 for x in c):
                return g
        return None

    def elements(self):
        return itertools.product(*(range(f) for f in self.invariant_factors))

    def sylow(self, p: int) -> list[tuple]:
        """Elements of the Sylow p-subgroup."""
        out = []
        for g in self.elements():
            order = math.lcm(*(f // math.gcd(f, a) for a, f in zip(g, self.invariant_factors))) if g else 1
            while order % p == 0:
                order //= p
            if order == 1:
                out.append(g)
        return out


def snf_invariants(lat: LatticeModel) -> DiscGroup:
    """Structure of ``L*/L`` from the Smith form of the Gram matrix (no q table)."""
    G = lat.int_gram()
    diag, U, _ = smith_normal_form(G)
    n = lat.n
    # Z^n / G Z^n  ->  (+) Z/d_i  via y -> U y; generators are columns of U^-1
    Uinv = rational_inverse(U)
    gens = []
    factors = []
    for i, f in enumerate(diag):
        if f > 1:
            factors.append(f)
            gens.append(tuple(int(Uinv[r][i]) for r in range(n)))
    gi = rational_inverse(lat.gram)
    bil = tuple(
        tuple(_mod(sum(g[i] * gi[i][j] * h[j] for i in range(n) for j in range(n)), 1) for h in gens)
        for g in gens
    )
    return DiscGroup(tuple(factors), tuple(gens), tuple(map(tuple, gi)), bil)


def discriminant_form(lat: LatticeModel, bound: int = DEFAULT_DISC_BOUND) -> DiscGroup:
    """Enumerate ``L*/L`` with norms mod 2 (even lattices only)."""
    if not lat.even:
        raise LatticeError("q is only defined mod 2Z for even lattices")
    base = snf_invariants(lat)
    if base.order > bound:
        raise DiscriminantBoundExceeded(f"|L*/L| = {base.order} exceeds bound {bound}")
    norms = {g: _mod(base.norm_of(base.lift(g)), 2) for g in base.elements()}
    return DiscGroup(base.invariant_factors, base.generators, base.gram_inverse, base.bilinear, norms)


@dataclass(frozen=True)
class GaussSum:
    """Unnormalized sum ``S = sum_g exp(pi i (z_g, z_g))``.

    ``sigma`` is the exponent with ``S = zeta_8^sigma * sqrt(|D|)`` (None if
    S is not of that shape); ``sylow`` maps primes to the sums over Sylow
    subgroups and ``sylow_sigma`` to their exponents in the same sense.
    """

    total: CycInt
    order: int
    sigma: int | None
    sylow: dict
    sylow_sigma: dict

    def normalized_is(self, k: int) -> bool:
        return self.sigma is not None and (self.sigma - k) % 8 == 0


def _sum_over(dg: DiscGroup, elements) -> CycInt:
    # exp(pi i N) with N = a/b: zeta_{2b}^a
    counts: dict[int, int] = {}
    den = 2
    for g in elements:
        den = math.lcm(den, 2 * dg.norms[g].denominator)
    for g in elements:
        x = dg.norms[g]
        k = int(x * den / 2)
        counts[k] = counts.get(k, 0) + 1
    return CycInt.from_exponents(den, counts)


def eighth_root_exponent(S: CycInt, order: int) -> int | None:
    root = cyc_sqrt(order)
    for k in range(8):
        if S == cyc_root(8, k) * root:
            return k
    return None


def gauss_sum(dg: DiscGroup) -> GaussSum:
    if dg.norms is None:
        raise LatticeError("Gauss sum needs the quadratic form (even lattice)")
    elements = list(dg.elements())
    S = _sum_over(dg, elements)
    if S * S.conjugate() != dg.order:
        raise LatticeError("|S|^2 != |L*/L|; the form is degenerate")
    primes = sorted(factorize(dg.order)) if dg.order > 1 else []
    sylow, sylow_sigma = {}, {}
    for p in primes:
        part = dg.sylow(p)
        sylow[p] = _sum_over(dg, part)
        sylow_sigma[p] = eighth_root_exponent(sylow[p], len(part))
    return GaussSum(S, dg.order, eighth_root_exponent(S, dg.order), sylow, sylow_sigma)


def milgram_check(lat: LatticeModel, bound: int = DEFAULT_DISC_BOUND) -> bool:
    """Does the Gauss sum of an even positive definite lattice equal zeta_8^rank * sqrt|det|?"""
    gs = gauss_sum(discriminant_form(lat, bound))
    return gs.normalized_is(lat.n)
