"""The known tight designs, built with exact coordinates."""

from __future__ import annotations

import itertools
from fractions import Fraction

from ..exactnum import ExactScalar, golden_ratio
from .design import AntipodalDesign

HALF = Fraction(1, 2)


def _positive_rep(v) -> bool:
    for c in v:
        if c:
            return c > 0
    return False


def e8_roots() -> list[tuple[Fraction, ...]]:
    """All 240 roots of E8: ``+-e_i +- e_j`` and ``(+-1/2)^8`` with an even number of minus signs."""
    roots = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            roots.append(tuple(v))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(s * HALF for s in signs))
    return roots


def e8() -> AntipodalDesign:
    reps = [r for r in e8_roots() if _positive_rep(r)]
    return AntipodalDesign(n=8, d=Fraction(2), vectors=tuple(reps), label="e8")


def e7dual() -> AntipodalDesign:
    """28 representatives of the 56 minimal vectors of E7*, rescaled to norm 3.

    Take the E8 roots x with (x, r) = 1 for r = e1 + e2; then y = x - r/2 has
    norm 3/2 and lies in r-perp. The map (u1, u2) -> (u1 + u2, u1 - u2) on
    coordinate pairs doubles norms and sends r to 2 e1, so the first image
    coordinate of y vanishes and the remaining seven are integers.
    """
    r = (1, 1, 0, 0, 0, 0, 0, 0)
    vecs = []
    for x in e8_roots():
        if sum(a * b for a, b in zip(x, r)) != 1:
            continue
        y = [a - HALF * b for a, b in zip(x, r)]
        img = []
        for k in range(0, 8, 2):
            img += [y[k] + y[k + 1], y[k] - y[k + 1]]
        assert img[0] == 0
        vecs.append(tuple(img[1:]))
    reps = [v for v in vecs if _positive_rep(v)]
    return AntipodalDesign(n=7, d=Fraction(3), vectors=tuple(reps), label="e7dual")


def icosahedron() -> AntipodalDesign:
    """6 representatives of the 12 vertices (0, +-1, +-phi) and cyclic shifts, over Q(sqrt 5)."""
    phi = golden_ratio()
    zero, one = ExactScalar(0, 0, 5), ExactScalar(1, 0, 5)
    verts = []
    for s1, s2 in itertools.product((1, -1), repeat=2):
        base = (zero, s1 * one, s2 * phi)
        for shift in range(3):
            verts.append(base[shift:] + base[:shift])
    reps = [v for v in verts if _positive_rep(v)]
    return AntipodalDesign(n=3, d=2 + phi, vectors=tuple(reps), D=5, label="icosahedron")


BUILTINS = {"e8": e8, "e7dual": e7dual, "icosahedron": icosahedron}


def builtin(name: str) -> AntipodalDesign:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise ValueError(f"unknown built-in design {name!r}; choose from {sorted(BUILTINS)}") from None
