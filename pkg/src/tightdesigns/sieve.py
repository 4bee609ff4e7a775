"""Arithmetic exclusion of dimensions for tight spherical 7- and 5-designs.

A tight 7-design lives in dimension ``n = 3d^2 - 4`` and a tight 5-design
in ``n = (2m+1)^2 - 2``. The verdict functions evaluate, for one parameter,
which nonexistence results have all their hypotheses satisfied.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .exactnum import factorize, merge_factorizations, padic_val

DEFAULT_FACTOR_BOUND = 10 ** 6

EXCLUDED = "Excluded"
OPEN = "Open"
KNOWN = "KnownExists"

KNOWN_EXISTS = {7: frozenset({2, 3}), 5: frozenset({1, 2})}


class FactorBoundExceeded(ValueError):
    pass


def _is_int(x) -> bool:
    return Fraction(x).denominator == 1


def _factor_consecutive(k: int, count: int, bound: int) -> dict[int, int]:
    # factor k * (k+1) * ... * (k+count-1) one factor at a time
    if k + count - 2 > bound:
        raise FactorBoundExceeded(f"parameter {k + count - 2} exceeds factorization bound {bound}")
    return merge_factorizations(*(factorize(j) for j in range(k, k + count) if j != 0))


def dimension(t: int, param: int) -> int:
    if t == 7:
        return 3 * param * param - 4
    if t == 5:
        return (2 * param + 1) ** 2 - 2
    raise ValueError(f"t = {t} unsupported (5 or 7)")


# -- divisibility predicates ------------------------------------------------

def check_D4mD2(n, d, s, norm_aa, ip_ab) -> dict:
    """Integrality consequences of k^4 - k^2 = 0 mod 12 and k^3 - k = 0 mod 6
    for a 5-design, at one pair of dual vectors.

    Summing over X with the degree-4 and degree-2 moment constants gives
    ``(sd/12n) (a,a) (3d/(n+2) (a,a) - 1)``; with tight 5-design parameters
    this is exactly :func:`check_div3`.
    """
    n, d, s = Fraction(n), Fraction(d), Fraction(s)
    norm_aa, ip_ab = Fraction(norm_aa), Fraction(ip_ab)
    shift = 3 * d / (n + 2) * norm_aa - 1
    first = s * d / (12 * n) * norm_aa * shift
    second = s * d / (6 * n) * ip_ab * shift
    return {"first": _is_int(first), "second": _is_int(second)}


def check_D15(n, d, s, norm_aa, norm_bb, ip_ab) -> dict:
    """The two integrality conditions available for a 7-design: one from
    products of five consecutive integers (divisible by 120), one from two
    products of three consecutive integers (divisible by 36)."""
    n, d, s = Fraction(n), Fraction(d), Fraction(s)
    aa, bb, ab = Fraction(norm_aa), Fraction(norm_bb), Fraction(ip_ab)
    c4 = s * d * d / (n * (n + 2))
    c2 = s * d / n
    first = ab * (15 * c4 * aa * (d / (n + 4) * aa - 1) + 4 * c2) / 120
    second = ab * (3 * c4 * (d / (n + 4) * (2 * ab * ab + 3 * aa * bb) - aa - bb) + c2) / 36
    return {"first": _is_int(first), "second": _is_int(second)}


def check_div(d, norm_aa, ip_ab, norm_bb=None) -> dict:
    """The 7-design conditions with ``n = 3d^2 - 4`` and ``s = n(n+1)(n+2)/6``
    substituted. ``second_diag`` is the second condition at beta = alpha."""
    d = Fraction(d)
    aa, ab = Fraction(norm_aa), Fraction(ip_ab)
    k = d ** 3 - d

    def second(x, y, z):  # (x, x), (y, y), (x, y)
        return k / 72 * z * (3 * x * y - 3 * d * (x + y) + 2 * z * z + 3 * d * d - 2)

    out = {
        "first": _is_int(k / 240 * ab * (12 * d * d - 8 - 15 * d * aa + 5 * aa * aa)),
        "second_diag": _is_int(second(aa, aa, aa)),
    }
    if norm_bb is not None:
        out["second"] = _is_int(second(aa, Fraction(norm_bb), ab))
    return out


def check_div3(m, norm_aa) -> bool:
    """``m(m+1) (a,a) (3(a,a) - (2m+1)) / 6`` is an integer."""
    aa = Fraction(norm_aa)
    return _is_int(Fraction(m * (m + 1)) * aa * (3 * aa - (2 * m + 1)) / 6)


# -- valuation hypotheses ---------------------------------------------------

@dataclass(frozen=True)
class KdivReport:
    """Which dual-lattice integrality statements are guaranteed for a given d.

    ``i`` covers every prime p >= 5 at once; ``i_failing`` lists the primes
    with ``v_p(d^3 - d) > 2``, for which nothing is claimed.
    """

    d: int
    i: bool
    i_failing: tuple
    ii: bool
    iii: bool
    iv: bool
    v: bool
    vi: bool


def kdiv_guarantees(d: int, bound: int = DEFAULT_FACTOR_BOUND) -> KdivReport:
    if d < 2:
        raise ValueError("need d >= 2")
    fac = _factor_consecutive(d - 1, 3, bound)
    failing = tuple(sorted(p for p, e in fac.items() if p >= 5 and e > 2))
    even = d % 2 == 0
    return KdivReport(
        d=d,
        i=not failing,
        i_failing=failing,
        ii=fac.get(3, 0) <= 4,
        iii=fac.get(2, 0) <= 6,
        iv=even and d % 8 != 0,
        v=even and d % 32 != 0,
        vi=not even and padic_val(d * d - 1, 2) <= 4,
    )


# -- verdicts ---------------------------------------------------------------

@dataclass(frozen=True)
class Reason:
    code: str
    statement: str
    hypotheses: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Verdict:
    param: int
    t: int
    n: int
    status: str
    reasons: tuple = ()
    registry_hits: tuple = ()
    notes: tuple = ()

    def to_dict(self) -> dict:
        out = asdict(self)
        out["reasons"] = [asdict(r) for r in self.reasons]
        return out


@dataclass(frozen=True)
class RegistryEntry:
    t: int
    param: int
    source: str


class PriorRegistry:
    """Exclusions taken from earlier work, as external data."""

    def __init__(self, entries=()):
        entries = tuple(entries)
        for e in entries:
            if e.t not in KNOWN_EXISTS:
                raise ValueError(f"registry entry for unsupported t = {e.t}")
            if e.param in KNOWN_EXISTS[e.t]:
                raise ValueError(
                    f"registry excludes t={e.t} param={e.param}, but that design exists"
                )
        self.entries = entries

    def hits(self, t: int, param: int) -> tuple[RegistryEntry, ...]:
        return tuple(e for e in self.entries if e.t == t and e.param == param)

    @classmethod
    def parse(cls, text: str) -> "PriorRegistry":
        entries = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = dict(tok.split("=", 1) for tok in line.split() if "=" in tok)
            if set(fields) != {"t", "param", "source"} or len(line.split()) != 3:
                raise ValueError(f"registry line {lineno}: expected 't=<5|7> param=<int> source=<tag>'")
            try:
                entries.append(RegistryEntry(int(fields["t"]), int(fields["param"]), fields["source"]))
            except ValueError:
                raise ValueError(f"registry line {lineno}: non-integer t or param") from None
        return cls(entries)

    @classmethod
    def load(cls, path=None) -> "PriorRegistry":
        """Read a registry file; ``None`` loads the bundled default."""
        if path is None:
            text = resources.files("tightdesigns").joinpath("data/prior_exclusions.txt").read_text()
        else:
            text = Path(path).read_text()
        return cls.parse(text)


def _registry_reasons(registry, t, param):
    hits = registry.hits(t, param) if registry is not None else ()
    reasons = tuple(
        Reason(f"REGISTRY:{h.source}", f"excluded in prior work ({h.source})", {"t": t, "param": param})
        for h in hits
    )
    return hits, reasons


def _squarefree_hypotheses(d: int, bound: int) -> dict:
    fac = _factor_consecutive(d - 1, 3, bound)
    big = {p: e for p, e in fac.items() if p >= 5}
    return {
        "v_p(d^3-d)<=2 for p>=5": all(e <= 2 for e in big.values()),
        "v_3(d^3-d)<=4": fac.get(3, 0) <= 4,
    }


def verdict7(d: int, registry: PriorRegistry | None = None,
             bound: int = DEFAULT_FACTOR_BOUND) -> Verdict:
    if d < 2:
        raise ValueError("need d >= 2")
    n = dimension(7, d)
    if d in KNOWN_EXISTS[7]:
        return Verdict(d, 7, n, KNOWN)
    hyp = _squarefree_hypotheses(d, bound)
    unimodular = all(hyp.values())
    reasons = []
    notes = []
    v2 = padic_val(d, 2)
    if v2 in (2, 3, 4) and unimodular:
        reasons.append(Reason(
            "T-v2deq3",
            "v_2(d) in {2,3,4}: the dual lattice is integral, so the lattice would be "
            "even unimodular in dimension n = 4 mod 8",
            {"v_2(d)": v2, **hyp},
        ))
    if d % 2:
        r16, r32 = d % 16, d % 32
        if r16 not in (1, 15) and r32 not in (3, 29):
            reasons.append(Reason(
                "T-oddd-a",
                "odd d with d != +-1 mod 16 must satisfy d = +-3 mod 32 "
                "(characteristic-vector moment congruences)",
                {"d mod 16": r16, "d mod 32": r32},
            ))
        if r32 == 29 and unimodular:
            reasons.append(Reason(
                "T-oddd-b",
                "d = -3 mod 32 is impossible once the square-free hypotheses make the lattice unimodular",
                {"d mod 32": r32, **hyp},
            ))
        if r32 == 3:
            notes.append("det(Lambda) in (Z_2^*)^2 (square class 1)")
        elif r32 == 29 and not unimodular:
            notes.append("det(Lambda) in 3(Z_2^*)^2 (square class 3)")
    hits, reg = _registry_reasons(registry, 7, d)
    reasons.extend(reg)
    status = EXCLUDED if reasons else OPEN
    return Verdict(d, 7, n, status, tuple(reasons), tuple(h.source for h in hits), tuple(notes))


def odd_prime_square_free(k: int, bound: int = DEFAULT_FACTOR_BOUND) -> bool:
    """Is ``k(k+1)`` free of squares of odd primes?"""
    fac = _factor_consecutive(k, 2, bound)
    return all(e < 2 for p, e in fac.items() if p > 2)


def verdict5(m: int, registry: PriorRegistry | None = None,
             bound: int = DEFAULT_FACTOR_BOUND) -> Verdict:
    if m < 1:
        raise ValueError("need m >= 1")
    n = dimension(5, m)
    if m in KNOWN_EXISTS[5]:
        return Verdict(m, 5, n, KNOWN)
    reasons = []
    sqfree = odd_prime_square_free(m, bound)
    if m % 2 == 0 and m % 8 != 0 and sqfree and m % 3 != 2:
        reasons.append(Reason(
            "T-5even",
            "m even, 8 does not divide m, m(m+1) free of odd prime squares: the "
            "discriminant group of the rescaled even sublattice is Z/6, forcing m = -1 mod 3",
            {"m mod 8": m % 8, "m(m+1) odd-square-free": sqfree, "m mod 3": m % 3},
        ))
    hits, reg = _registry_reasons(registry, 5, m)
    reasons.extend(reg)
    status = EXCLUDED if reasons else OPEN
    return Verdict(m, 5, n, status, tuple(reasons), tuple(h.source for h in hits))


def odd_d_category(d: int, bound: int = DEFAULT_FACTOR_BOUND) -> str:
    """Classify odd d >= 5 into exactly one bucket of the odd-d analysis."""
    if d % 2 == 0 or d < 5:
        raise ValueError("need odd d >= 5")
    if d % 16 in (1, 15):
        return "open:+-1 mod 16"
    r32 = d % 32
    if r32 not in (3, 29):
        return "excluded:a"
    if r32 == 3:
        return "open:det-constraint"
    if all(_squarefree_hypotheses(d, bound).values()):
        return "excluded:b"
    return "open:hypothesis-failure"


@dataclass(frozen=True)
class SieveTable:
    t: int
    verdicts: tuple

    def by_status(self, status: str) -> list[int]:
        return [v.param for v in self.verdicts if v.status == status]

    @property
    def summary(self) -> dict:
        return {s: len(self.by_status(s)) for s in (EXCLUDED, OPEN, KNOWN)}

    def to_dict(self) -> dict:
        return {"t": self.t, "summary": self.summary, "verdicts": [v.to_dict() for v in self.verdicts]}


def _one(args):
    t, param, registry, bound = args
    return (verdict7 if t == 7 else verdict5)(param, registry, bound)


def run_sieve(t: int, lo: int, hi: int, registry: PriorRegistry | None = None,
              bound: int = DEFAULT_FACTOR_BOUND, jobs: int = 1) -> SieveTable:
    """Verdicts for every parameter in ``[lo, hi]``, in increasing order."""
    if t not in (5, 7):
        raise ValueError(f"t = {t} unsupported (5 or 7)")
    floor = 2 if t == 7 else 1
    if not floor <= lo <= hi:
        raise ValueError(f"need {floor} <= lo <= hi, got lo={lo}, hi={hi}")
    if hi > bound:
        raise FactorBoundExceeded(f"hi = {hi} exceeds factorization bound {bound}")
    tasks = [(t, p, registry, bound) for p in range(lo, hi + 1)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(_one, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        verdicts = [_one(task) for task in tasks]
    return SieveTable(t, tuple(verdicts))


# -- checks on concrete designs --------------------------------------------

@dataclass
class LemmaReport:
    design: str
    checked: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def lemma_consistency(design, include_design_vectors: bool = True) -> LemmaReport:
    """Run the applicable divisibility predicates on dual-basis vectors, their
    pairwise sums and (optionally) the design vectors.

    This is a necessary check only: the predicates quantify over all of the
    dual lattice, which is infinite.
    """
    from .designcore import design_strength_certificate, dot
    from .latticecore import lattice_from_vectors

    lat = lattice_from_vectors(design.rational_vectors())
    dual = lat.dual_basis()
    probes = [list(v) for v in dual]
    probes += [[a + b for a, b in zip(dual[i], dual[j])]
               for i in range(len(dual)) for j in range(i + 1, len(dual))]
    if include_design_vectors:
        probes += design.rational_vectors()

    n, s = design.n, design.s
    d = Fraction(design.d.rational if hasattr(design.d, "rational") else design.d)
    strength7 = design_strength_certificate(design, 7).passed
    strength5 = strength7 or design_strength_certificate(design, 5).passed
    tight7 = d.denominator == 1 and n == 3 * d * d - 4 and 6 * s == n * (n + 1) * (n + 2)
    m = (d - 1) / 2
    tight5 = (d.denominator == 1 and d % 2 == 1 and n == d * d - 2 and 2 * s == n * (n + 1))

    report = LemmaReport(design.label or "design")
    norms = [dot(p, p) for p in probes]

    def record(name, ok, detail):
        report.checked[name] = report.checked.get(name, 0) + 1
        if not ok:
            report.failures.append((name, detail))

    for i, a in enumerate(probes):
        aa = norms[i]
        if tight5:
            record("div3", check_div3(int(m), aa), (i,))
        for j, b in enumerate(probes):
            ab = dot(a, b)
            bb = norms[j]
            if strength5:
                r = check_D4mD2(n, d, s, aa, ab)
                record("D4mD2", r["first"] and r["second"], (i, j))
            if strength7:
                r = check_D15(n, d, s, aa, bb, ab)
                record("D15", r["first"] and r["second"], (i, j))
            if tight7:
                r = check_div(d, aa, ab, bb)
                record("div", all(r.values()), (i, j))
    return report
