"""p-adic valuations and small-integer factorization by trial division."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


def _int_val(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_val(x, p: int):
    """Return the exponent of `p` in the rational `x`.

    Zero has valuation ``math.inf``. Raises ``ValueError`` if `p` is not
    prime or `x` is not rational.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    x = _as_fraction(x)
    if x == 0:
        return math.inf
    return _int_val(abs(x.numerator), p) - _int_val(x.denominator, p)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    # quadratic scalars with a vanishing radical part
    if getattr(x, "is_rational", False):
        return x.rational
    raise ValueError(f"expected a rational number, got {x!r}")


def factorize(n: int, trial_limit: int | None = None) -> dict[int, int]:
    """Factor a nonzero integer by trial division.

    With `trial_limit` set, raises ``ValueError`` when the cofactor left
    after dividing out all primes up to the limit is not provably prime
    (i.e. it exceeds ``trial_limit**2``).
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        if trial_limit is not None and p > trial_limit:
            raise ValueError(f"cofactor {n} not factored with trial bound {trial_limit}")
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def merge_factorizations(*facs: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for f in facs:
        for p, e in f.items():
            out[p] = out.get(p, 0) + e
    return out
