"""Moment identities of antipodal spherical designs.

``X u -X`` on the sphere ``(x, x) = d`` is a spherical ``t``-design (t odd)
iff for every even ``2k < t`` and every alpha

    sum_{x in X} (x, alpha)^{2k} = c_{2k} (alpha, alpha)^k,
    c_{2k} = (2k-1)!! s d^k / (n (n+2) ... (n+2k-2)).

Both sides are forms of degree 2k in alpha, so comparing coefficients is a
complete check.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactnum import ExactScalar
from .design import AntipodalDesign, dot


def tight_cardinality(n: int, t: int) -> int:
    """Lower bound on ``|X u -X|`` for a spherical t-design in R^n (met by tight designs)."""
    if t < 1 or n < 2:
        raise ValueError("need t >= 1 and n >= 2")
    m = t // 2
    if t % 2:
        return 2 * math.comb(n - 1 + m, m)
    return math.comb(n - 1 + m, m) + math.comb(n - 2 + m, m - 1)


def moment_constant(design: AntipodalDesign, degree: int):
    if degree % 2 or degree < 2:
        raise ValueError("degree must be a positive even integer")
    k = degree // 2
    num = math.prod(range(1, degree, 2)) * design.s
    den = math.prod(design.n + 2 * j for j in range(k))
    return Fraction(num, den) * design.d ** k


def moment_sum(design: AntipodalDesign, alpha, k: int):
    """``sum_{x in X} (x, alpha)^k`` over the stored half-set."""
    if len(alpha) != design.n:
        raise ValueError(f"alpha has {len(alpha)} coordinates, design has n = {design.n}")
    total = 0
    for x in design.vectors:
        total = total + dot(x, alpha) ** k
    return total


def _multinomial(exps) -> int:
    out = math.factorial(sum(exps))
    for e in exps:
        out //= math.factorial(e)
    return out


def _exponents(combo, n) -> tuple[int, ...]:
    e = [0] * n
    for i in combo:
        e[i] += 1
    return tuple(e)


@dataclass(frozen=True)
class SymmetricMomentTensor:
    """Coefficients of ``sum_x (x, alpha)^degree`` as a polynomial in alpha."""

    degree: int
    n: int
    coeffs: dict = field(repr=False)

    def evaluate(self, alpha):
        total = 0
        for exps, c in self.coeffs.items():
            term = c
            for a, e in zip(alpha, exps):
                if e:
                    term = term * a ** e
            total = total + term
        return total


def _power_sums(design: AntipodalDesign, degree: int) -> dict:
    combos = list(itertools.combinations_with_replacement(range(design.n), degree))
    if design.is_rational:
        # scale to integers; exact and much faster than Fraction products
        vecs = design.rational_vectors()
        L = math.lcm(*(c.denominator for v in vecs for c in v))
        ivecs = [[int(c * L) for c in v] for v in vecs]
        sums = [0] * len(combos)
        for v in ivecs:
            for j, combo in enumerate(combos):
                p = 1
                for i in combo:
                    p *= v[i]
                sums[j] += p
        scale = Fraction(1, L ** degree)
        return {combo: s * scale for combo, s in zip(combos, sums)}
    sums = {}
    for combo in combos:
        total = 0
        for v in design.vectors:
            p = 1
            for i in combo:
                p = p * v[i]
            total = total + p
        sums[combo] = total
    return sums


def moment_tensor(design: AntipodalDesign, degree: int) -> SymmetricMomentTensor:
    coeffs = {}
    for combo, s in _power_sums(design, degree).items():
        exps = _exponents(combo, design.n)
        coeffs[exps] = _multinomial(exps) * s
    return SymmetricMomentTensor(degree, design.n, coeffs)


def _norm_power_coeff(exps, c):
    # coefficient of alpha^exps in c * (alpha, alpha)^k
    if any(e % 2 for e in exps):
        return 0
    return c * _multinomial([e // 2 for e in exps])


@dataclass(frozen=True)
class Mismatch:
    degree: int
    index: tuple
    lhs: object
    rhs: object


@dataclass(frozen=True)
class StrengthCertificate:
    t: int
    passed: bool
    degrees: dict
    witness: Mismatch | None = None


def check_degree(design: AntipodalDesign, degree: int) -> Mismatch | None:
    """Compare the moment tensor of one even degree with ``c (alpha, alpha)^k``.

    Returns the first mismatching exponent vector, or None.
    """
    c = moment_constant(design, degree)
    tensor = moment_tensor(design, degree)
    for exps, lhs in tensor.coeffs.items():
        rhs = _norm_power_coeff(exps, c)
        if lhs != rhs:
            return Mismatch(degree, exps, lhs, rhs)
    return None


def design_strength_certificate(design: AntipodalDesign, t: int) -> StrengthCertificate:
    if t not in (5, 7):
        raise ValueError(f"strength t = {t} unsupported (5 or 7)")
    degrees = {}
    witness = None
    for degree in range(2, t, 2):
        miss = check_degree(design, degree)
        degrees[degree] = miss is None
        if miss is not None and witness is None:
            witness = miss
    return StrengthCertificate(t, witness is None, degrees, witness)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: object
    rhs: object

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def mixed_moment_report(design: AntipodalDesign, alpha, beta, t: int = 7) -> list[IdentityCheck]:
    """Evaluate the polarized moment identities at a concrete pair (alpha, beta).

    Strength 5 gives the (1,1), (1,3), (2,2) identities; strength 7 adds
    (1,5), (2,4), (3,3).
    """
    n = design.n
    if len(alpha) != n or len(beta) != n:
        raise ValueError("dimension mismatch")
    s, d = design.s, design.d
    aa, bb, ab = dot(alpha, alpha), dot(beta, beta), dot(alpha, beta)
    pa = [dot(x, alpha) for x in design.vectors]
    pb = [dot(x, beta) for x in design.vectors]

    def msum(i, j):
        total = 0
        for u, v in zip(pa, pb):
            total = total + u ** i * v ** j
        return total

    c2 = Fraction(s, n) * d
    c4 = Fraction(s, n * (n + 2)) * d ** 2
    c6 = Fraction(3 * s, n * (n + 2) * (n + 4)) * d ** 3
    checks = [
        IdentityCheck("D11", msum(1, 1), c2 * ab),
        IdentityCheck("D13", msum(1, 3), 3 * c4 * ab * bb),
        IdentityCheck("D22", msum(2, 2), c4 * (2 * ab ** 2 + aa * bb)),
    ]
    if t >= 7:
        checks += [
            IdentityCheck("D15", msum(1, 5), 5 * c6 * bb ** 2 * ab),
            IdentityCheck("D24", msum(2, 4), c6 * (bb ** 2 * aa + 4 * ab ** 2 * bb)),
            IdentityCheck("D33", msum(3, 3), c6 * (2 * ab ** 3 + 3 * aa * bb * ab)),
        ]
    return checks


@dataclass(frozen=True)
class Spectrum:
    values: Counter
    tight7: bool
    tight5: bool


def inner_product_spectrum(design: AntipodalDesign) -> Spectrum:
    """Multiset of ``(x, y)`` over unordered pairs of distinct stored vectors."""
    values: Counter = Counter()
    vecs = design.vectors
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            values[dot(vecs[i], vecs[j])] += 1
    keys = set(values)
    tight7 = keys <= {-1, 0, 1}
    tight5 = keys <= {-1, 1}
    return Spectrum(values, tight7, tight5)


def is_tight7_parameters(design: AntipodalDesign) -> bool:
    d = design.d
    if isinstance(d, ExactScalar):
        if not d.is_rational:
            return False
        d = d.rational
    n = design.n
    return n == 3 * d * d - 4 and design.s * 6 == n * (n + 1) * (n + 2)


@dataclass(frozen=True)
class MomentProfile:
    alpha: tuple
    counts: dict
    residuals: dict | None = None

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def power_sum(self, j: int) -> int:
        return sum(k ** j * c for k, c in self.counts.items())


def moment_profile(design: AntipodalDesign, alpha) -> MomentProfile:
    """Count stored vectors by ``|(x, alpha)|``.

    For a design with tight 7-design parameters, also returns the residuals
    ``sum k^{2j} n_k - target`` against the closed forms in d and
    ``(alpha, alpha)``.
    """
    from ..congruence import moment_targets

    if len(alpha) != design.n:
        raise ValueError("dimension mismatch")
    counts: Counter = Counter()
    for x in design.vectors:
        ip = dot(x, alpha)
        if isinstance(ip, ExactScalar):
            if not ip.is_rational:
                raise ValueError(f"irrational inner product with {x}")
            ip = ip.rational
        ip = Fraction(ip)
        if ip.denominator != 1:
            raise ValueError(f"non-integral inner product with {x}")
        counts[abs(int(ip))] += 1
    residuals = None
    if is_tight7_parameters(design):
        d = design.d.rational if isinstance(design.d, ExactScalar) else design.d
        norm = dot(alpha, alpha)
        targets = moment_targets(d, norm)
        residuals = {}
        for j, name in enumerate(("D0", "D2", "D4", "D6")):
            got = sum(k ** (2 * j) * c for k, c in counts.items())
            residuals[name] = got - targets[j]
    return MomentProfile(tuple(alpha), dict(sorted(counts.items())), residuals)
