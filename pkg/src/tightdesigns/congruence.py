"""Symbolic check of the 2-adic case analysis for tight 7-designs with odd d.

Let alpha be a characteristic vector of norm ``N = n + delta - 8a`` with
``n = 3d^2 - 4``, ``delta`` in {0, 2, 4, 6} and ``a`` a 2-adic integer. All
``(x, alpha)`` are odd, and the four moment sums over ``|(x, alpha)| = k``
are polynomials in d and a. Since ``(k^2-1)(k^2-9)`` is divisible by 2^7 and
``(k^2-1)(k^2-9)(k^2-25)`` by 2^10 for odd k,

    A = (P4 - 10 P2 + 9 P0) / 2^7,
    B = (P6 - 35 P4 + 259 P2 - 225 P0) / 2^10

must be 2-adically integral. Writing ``d = 16b + r`` and reading off the
coefficients of powers of a shows which (r, delta) cells are contradictory.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction

from .exactnum import MPoly, padic_val

RESIDUES = (3, 5, 7, -7, -5, -3)
DELTAS = (0, 2, 4, 6)
LABELS = ("a1", "a2", "b1", "b2", "c0", "c1", "c2")

EXPECTED_LABELS = {
    (3, 0): "c0", (5, 0): "a2", (7, 0): "b1", (-7, 0): "a1", (-5, 0): "c2", (-3, 0): "a2",
    (3, 2): "a2", (5, 2): "c2", (7, 2): "a1", (-7, 2): "b1", (-5, 2): "a2", (-3, 2): "c0",
    (3, 4): "c1", (5, 4): "a2", (7, 4): "b2", (-7, 4): "a1", (-5, 4): "c1", (-3, 4): "a2",
    (3, 6): "a2", (5, 6): "c1", (7, 6): "a1", (-7, 6): "b2", (-5, 6): "a2", (-3, 6): "c1",
}
SURVIVORS = {(3, 0), (-3, 2)}


class ClassificationError(RuntimeError):
    pass


def _check_delta(delta: int) -> None:
    if delta not in DELTAS:
        raise ValueError(f"delta must be one of {DELTAS}, got {delta}")


def moment_targets(d, norm) -> tuple:
    """Closed forms of sum n_k, sum k^2 n_k, sum k^4 n_k, sum k^6 n_k for a
    tight 7-design with parameter d and a vector of the given norm."""
    d, N = Fraction(d), Fraction(norm)
    e = d * d - 1
    return (
        (3 * d * d - 4) * (3 * d * d - 2) * e / 2,
        (3 * d * d - 2) * e * d * N / 2,
        3 * e * d * d * N * N / 2,
        5 * e * d * N ** 3 / 2,
    )


def combos_at(d, a, delta: int) -> tuple[Fraction, Fraction]:
    """A and B evaluated directly at rational d and a."""
    _check_delta(delta)
    d = Fraction(d)
    N = 3 * d * d - 4 + delta - 8 * Fraction(a)
    p0, p2, p4, p6 = moment_targets(d, N)
    return (p4 - 10 * p2 + 9 * p0) / 2 ** 7, (p6 - 35 * p4 + 259 * p2 - 225 * p0) / 2 ** 10


def moment_polys(delta: int) -> tuple[MPoly, MPoly, MPoly, MPoly]:
    """P0, P2, P4, P6 as polynomials in a and d."""
    _check_delta(delta)
    a, d = MPoly.ring("a", "d")
    N = 3 * d ** 2 - 4 + delta - 8 * a
    e = d ** 2 - 1
    half = Fraction(1, 2)
    P0 = (3 * d ** 2 - 4) * (3 * d ** 2 - 2) * e * half
    P2 = (3 * d ** 2 - 2) * e * d * N * half
    P4 = e * d ** 2 * N ** 2 * Fraction(3, 2)
    P6 = e * d * N ** 3 * Fraction(5, 2)
    return P0, P2, P4, P6


def combos(delta: int) -> tuple[MPoly, MPoly]:
    P0, P2, P4, P6 = moment_polys(delta)
    A = (P4 - 10 * P2 + 9 * P0) / 2 ** 7
    B = (P6 - 35 * P4 + 259 * P2 - 225 * P0) / 2 ** 10
    return A, B


@lru_cache(maxsize=None)
def substituted(r: int, delta: int) -> tuple[MPoly, MPoly]:
    """A and B after d := 16b + r, as polynomials in a and b."""
    (b,) = MPoly.ring("b")
    A, B = combos(delta)
    return A.substitute("d", 16 * b + r), B.substitute("d", 16 * b + r)


# -- shape predicates on coefficient polynomials in b -----------------------

def _b_coeffs(poly: MPoly) -> dict[int, Fraction]:
    return poly.univariate_coeffs()


def _a_layers(poly: MPoly) -> dict[int, dict[int, Fraction]]:
    return {k: _b_coeffs(c) for k, c in poly.coefficients("a").items()}


def _integral(c: Fraction) -> bool:
    return c.denominator == 1


def _exact_2power(c: Fraction, k: int) -> bool:
    # c = p + x / 2^k with p integral and x odd
    return c.denominator == 2 ** k


def in_Zb(p: dict) -> bool:
    return all(_integral(c) for c in p.values())


def in_half_plus_Zb(p: dict) -> bool:
    return _exact_2power(p.get(0, Fraction(0)), 1) and all(
        _integral(c) for e, c in p.items() if e != 0
    )


def has_shape(p: dict, b_half: bool, x_power: int | None) -> bool:
    """Is ``p(b) = q(b) [+ b/2] [+ x/2^x_power]`` with q in Z[b] and x odd?"""
    c0 = p.get(0, Fraction(0))
    c1 = p.get(1, Fraction(0))
    if b_half != _exact_2power(c1, 1) or (not b_half and not _integral(c1)):
        return False
    if x_power is None:
        if not _integral(c0):
            return False
    elif not _exact_2power(c0, x_power):
        return False
    return all(_integral(c) for e, c in p.items() if e >= 2)


def _layer(layers, k) -> dict:
    return layers.get(k, {})


def _a_case(A, x_power):
    return (
        max(A) <= 2
        and in_Zb(_layer(A, 1)) and in_Zb(_layer(A, 2))
        and has_shape(_layer(A, 0), True, x_power)
    )


def _bc_base(A, B):
    return all(in_Zb(p) for p in A.values()) and max(B) <= 3 and in_Zb(_layer(B, 3))


def _b_case(A, B, b_half, x_power):
    return (
        _bc_base(A, B)
        and in_Zb(_layer(B, 1)) and in_Zb(_layer(B, 2))
        and has_shape(_layer(B, 0), b_half, x_power)
    )


def _c_case(A, B, b_half, x_power):
    return (
        _bc_base(A, B)
        and in_half_plus_Zb(_layer(B, 1)) and in_half_plus_Zb(_layer(B, 2))
        and has_shape(_layer(B, 0), b_half, x_power)
    )


CASE_PREDICATES = {
    "a1": lambda A, B: _a_case(A, 2),
    "a2": lambda A, B: _a_case(A, 3),
    "b1": lambda A, B: _b_case(A, B, False, 1),
    "b2": lambda A, B: _b_case(A, B, True, 2),
    "c0": lambda A, B: _c_case(A, B, True, None),
    "c1": lambda A, B: _c_case(A, B, False, 3),
    "c2": lambda A, B: _c_case(A, B, True, 2),
}


@dataclass(frozen=True)
class CongruenceCase:
    r: int
    delta: int
    label: str
    matches: tuple
    diagnostics: dict = field(repr=False)

    @property
    def conclusion(self) -> str:
        return "b-even" if self.label == "c0" else "contradiction"


def _diagnostics(layers: dict) -> dict:
    out = {}
    for k, p in sorted(layers.items()):
        out[f"a^{k}"] = [
            {"b_power": e, "coeff": str(c), "v2": None if c == 0 else padic_val(c, 2)}
            for e, c in sorted(p.items())
        ]
    return out


def classify(r: int, delta: int, perturb: Fraction | None = None) -> CongruenceCase:
    """Label one (r, delta) cell.

    ``perturb`` is added to the constant term of A (a negative control).
    Raises ``ClassificationError`` unless exactly one case shape matches.
    """
    if r not in RESIDUES:
        raise ValueError(f"r must be one of {RESIDUES}")
    A, B = substituted(r, delta)
    if perturb:
        A = A + perturb
    la, lb = _a_layers(A), _a_layers(B)
    matches = tuple(lbl for lbl, pred in CASE_PREDICATES.items() if pred(la, lb))
    diag = {"A": _diagnostics(la), "B": _diagnostics(lb)}
    if len(matches) != 1:
        raise ClassificationError(f"cell r={r}, delta={delta}: matching cases {list(matches)}")
    return CongruenceCase(r, delta, matches[0], matches, diag)


def residue_scan(r: int, delta: int, modulus: int = 32) -> set[tuple[int, int]]:
    """Residues (a, b) mod ``modulus`` at which A and B are both integral.

    Denominators of A and B are at most 2^4, so integrality depends only on
    a and b mod 16; a scan mod 32 is therefore exhaustive.
    """
    out = set()
    for b in range(modulus):
        d = 16 * b + r
        for a in range(modulus):
            A, B = combos_at(d, a, delta)
            if A.denominator == 1 and B.denominator == 1:
                out.add((a, b))
    return out


@dataclass
class TableReport:
    cells: list
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def survivors(self) -> list[tuple[int, int]]:
        return [(c.r, c.delta) for c in self.cells if c.conclusion == "b-even"]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "survivors": [{"r": r, "delta": dl} for r, dl in self.survivors],
            "conclusion": (
                "only (r=3, delta=0) and (r=-3, delta=2) are possible, and then b is even"
                if self.passed else "table mismatch"
            ),
            "failures": [{"r": r, "delta": dl, "error": msg} for r, dl, msg in self.failures],
            "cells": [
                {
                    "r": c.r,
                    "delta": c.delta,
                    "label": c.label,
                    "expected": EXPECTED_LABELS[(c.r, c.delta)],
                    "conclusion": c.conclusion,
                    "diagnostics": c.diagnostics,
                }
                for c in self.cells
            ],
        }


def verify_table(perturb: dict | None = None) -> TableReport:
    """Classify all 24 cells and compare with :data:`EXPECTED_LABELS`.

    ``perturb`` maps cells to a rational shift of A's constant term.
    """
    perturb = perturb or {}
    cells, failures = [], []
    for delta in DELTAS:
        for r in RESIDUES:
            try:
                case = classify(r, delta, perturb.get((r, delta)))
            except ClassificationError as exc:
                failures.append((r, delta, str(exc)))
                continue
            cells.append(case)
            want = EXPECTED_LABELS[(r, delta)]
            if case.label != want:
                failures.append((r, delta, f"got {case.label}, expected {want}"))
    report = TableReport(cells, failures)
    if report.passed and set(report.survivors) != SURVIVORS:
        failures.append((0, 0, f"surviving cells {report.survivors} != {sorted(SURVIVORS)}"))
    return report
