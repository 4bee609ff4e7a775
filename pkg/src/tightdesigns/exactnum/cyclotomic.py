"""Elements of Q(zeta_N) in the power basis modulo the N-th cyclotomic polynomial."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .padic import factorize


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c:
            q[i] = c
            for j, dc in enumerate(den):
                num[i + j] -= c * dc
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_N, lowest degree first."""
    if N < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_poly(d)))
            assert not any(rem)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def euler_phi(N: int) -> int:
    result = N
    for p in factorize(N):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def _power_table(N: int) -> tuple[tuple[Fraction, ...], ...]:
    # reduced coordinates of zeta_N^k for k = 0..N-1
    phi = cyclotomic_poly(N)
    deg = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    for _ in range(N):
        rows.append(tuple(cur))
        # multiply by x and reduce
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi)]
    return tuple(rows)


class CycInt:
    """An element sum c_k zeta_N^k with rational coefficients, k < phi(N).

    Arithmetic between different conductors lifts both operands to the lcm.
    """

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs):
        deg = len(cyclotomic_poly(N)) - 1
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > deg:
            table = _power_table(N)
            reduced = [Fraction(0)] * deg
            for k, c in enumerate(coeffs):
                if c:
                    for j, t in enumerate(table[k % N]):
                        if t:
                            reduced[j] += c * t
            coeffs = reduced
        else:
            coeffs = coeffs + [Fraction(0)] * (deg - len(coeffs))
        self.N = N
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_exponents(cls, N: int, counts) -> "CycInt":
        """Build sum c_k zeta_N^k from a mapping k -> c_k (k taken mod N)."""
        full = [Fraction(0)] * N
        for k, c in dict(counts).items():
            full[k % N] += c
        return cls(N, full)

    def lift(self, M: int) -> "CycInt":
        if M % self.N:
            raise ValueError(f"{self.N} does not divide {M}")
        step = M // self.N
        return CycInt.from_exponents(M, {k * step: c for k, c in enumerate(self.coeffs) if c})

    def _pair(self, other):
        if isinstance(other, (int, Rational)):
            other = CycInt(self.N, [other])
        if not isinstance(other, CycInt):
            return None, None
        if other.N == self.N:
            return self, other
        M = math.lcm(self.N, other.N)
        return self.lift(M), other.lift(M)

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycInt(a.N, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.N, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycInt(a.N, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycInt(a.N, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("power must be a nonnegative integer")
        result = CycInt(self.N, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "CycInt":
        """Complex conjugate (zeta -> zeta^-1)."""
        return CycInt.from_exponents(self.N, {-k: c for k, c in enumerate(self.coeffs) if c})

    def __eq__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash(self.coeffs) if self.N == 1 else hash((self.N, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __complex__(self):
        z = complex(math.cos(2 * math.pi / self.N), math.sin(2 * math.pi / self.N))
        return sum(float(c) * z ** k for k, c in enumerate(self.coeffs))

    def __repr__(self):
        parts = [f"{c}*z{self.N}^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) if parts else "0"


def cyc_root(N: int, k: int) -> CycInt:
    """zeta_N^k."""
    if N < 1:
        raise ValueError("conductor must be positive")
    return CycInt.from_exponents(N, {k: 1})


def legendre(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def cyc_sqrt(m: int) -> CycInt:
    """The positive real square root of a positive integer as a cyclotomic number.

    Uses sqrt(2) = zeta_8 + zeta_8^-1 and the quadratic Gauss sum
    g_p = sum (a/p) zeta_p^a, which equals sqrt(p) for p = 1 mod 4 and
    i*sqrt(p) for p = 3 mod 4.
    """
    if m < 1 or Fraction(m).denominator != 1:
        raise ValueError("need a positive integer")
    m = int(m)
    result = CycInt(1, [1])
    for p, e in factorize(m).items() if m > 1 else ():
        result = result * (p ** (e // 2))
        if e % 2 == 0:
            continue
        if p == 2:
            root = cyc_root(8, 1) + cyc_root(8, -1)
        else:
            g = CycInt.from_exponents(p, {a: legendre(a, p) for a in range(1, p)})
            root = g if p % 4 == 1 else cyc_root(4, -1) * g
        result = result * root
    return result
