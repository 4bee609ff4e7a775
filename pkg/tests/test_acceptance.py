"""Acceptance checks. Each criterion prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``.
"""

import contextlib
import io
import json
import random
import time
from fractions import Fraction

import pytest

from tightdesigns import congruence
from tightdesigns.cli import main
from tightdesigns.designcore import (
    design_strength_certificate,
    e7dual,
    e8,
    icosahedron,
    inner_product_spectrum,
    moment_sum,
    moment_tensor,
    tight_cardinality,
)
from tightdesigns.exactnum import ExactScalar, cyc_root, cyc_sqrt
from tightdesigns.latticecore import (
    A2,
    D4,
    E8,
    LatticeModel,
    discriminant_form,
    dual_gram,
    even_sublattice,
    gauss_sum,
    lattice_from_vectors,
    milgram_check,
    rational_det,
    smith_normal_form,
)
from tightdesigns.latticecore.normalforms import matmul
from tightdesigns.sieve import lemma_consistency


def _cli_json(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(["--json", *argv])
    return code, json.loads(buf.getvalue())


def _by_status(data, status):
    return {v["param"] for v in data["verdicts"] if v["status"] == status}


def criterion_1():
    t0 = time.perf_counter()
    code, data = _cli_json("sieve", "--t", "7", "--from", "2", "--to", "21")
    dt = time.perf_counter() - t0
    ok = (
        code == 0
        and _by_status(data, "Excluded") == {4, 5, 7, 8, 9, 11, 12, 13, 16, 19, 20, 21}
        and _by_status(data, "KnownExists") == {2, 3}
        and _by_status(data, "Open") == {6, 10, 14, 15, 17, 18}
        and dt < 1
    )
    return ok, f"t=7 sieve 2..21 in {dt:.3f}s"


def criterion_2():
    t0 = time.perf_counter()
    code, data = _cli_json("sieve", "--t", "5", "--from", "2", "--to", "50")
    dt = time.perf_counter() - t0
    excluded = _by_status(data, "Excluded")
    ok = (
        code == 0
        and {3, 4, 6, 10, 12, 22, 28, 30, 34, 42, 46} <= excluded
        and not {1, 2} & excluded
        and dt < 1
    )
    return ok, f"t=5 sieve 2..50 in {dt:.3f}s, {len(excluded)} excluded"


def criterion_3():
    congruence.substituted.cache_clear()
    t0 = time.perf_counter()
    code, data = _cli_json("verify-table")
    dt = time.perf_counter() - t0
    labels = {(c["r"], c["delta"]): c["label"] for c in data["cells"]}
    survivors = {(s["r"], s["delta"]) for s in data["survivors"]}
    even_b = all(
        b % 2 == 0
        for cell in survivors
        for _, b in congruence.residue_scan(*cell)
    )
    ok = (
        code == 0
        and labels == congruence.EXPECTED_LABELS
        and survivors == {(3, 0), (-3, 2)}
        and even_b
        and dt < 5
    )
    return ok, f"24 cells, survivors {sorted(survivors)} in {dt:.3f}s"


def criterion_4():
    t0 = time.perf_counter()
    E = e8()
    lat = lattice_from_vectors(E.rational_vectors())
    spectrum = inner_product_spectrum(E)
    e8_ok = (
        design_strength_certificate(E, 7).passed
        and 2 * E.s == tight_cardinality(8, 7) == 240
        and set(spectrum.values) <= {0, 1, -1}
        and lat.even and lat.det == 1
        and milgram_check(lat)
    )
    X = e7dual()
    sub = even_sublattice(X)
    dg = discriminant_form(sub.gamma)
    gs = gauss_sum(dg)
    e7_ok = (
        design_strength_certificate(X, 5).passed
        and 2 * X.s == 56
        and dg.invariant_factors == (2,)
        and gs.sylow_sigma.get(2) == 7
    )
    dt = time.perf_counter() - t0
    return e8_ok and e7_ok and dt < 120, f"e8 {'ok' if e8_ok else 'bad'}, e7dual {'ok' if e7_ok else 'bad'} in {dt:.2f}s"


def _random_grams(rng, count):
    out = []
    while len(out) < count:
        n = rng.randint(1, 6)
        G = [[0] * n for _ in range(n)]
        for i in range(n):
            G[i][i] = rng.randint(1, 8)
            for j in range(i):
                G[i][j] = G[j][i] = rng.randint(-8, 8)
        if all(rational_det([r[:k] for r in G[:k]]) > 0 for k in range(1, n + 1)):
            out.append(G)
    return out


def _block_sum(g, h):
    n, m = len(g), len(h)
    out = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        out[i][:n] = list(g[i])
    for i in range(m):
        out[n + i][n:] = list(h[i])
    return out


def criterion_5():
    t0 = time.perf_counter()
    rng = random.Random(5)
    parts = {}

    parts["a"] = all(
        (k ** 4 - 10 * k ** 2 + 9) % 2 ** 7 == 0
        and (k ** 6 - 35 * k ** 4 + 259 * k ** 2 - 225) % (2 ** 10 * 3 ** 2 * 5) == 0
        for k in range(1, 1000, 2)
    )

    ok_b = True
    for G in (A2, D4, E8):
        lat = LatticeModel(G)
        gs = gauss_sum(discriminant_form(lat))
        ok_b &= milgram_check(lat) and gs.total == cyc_root(8, lat.n) * cyc_sqrt(lat.det)
    for g, h in ((A2, D4), (A2, A2), (D4, E8)):
        s1 = gauss_sum(discriminant_form(LatticeModel(g))).total
        s2 = gauss_sum(discriminant_form(LatticeModel(h))).total
        ok_b &= gauss_sum(discriminant_form(LatticeModel(_block_sum(g, h)))).total == s1 * s2
    parts["b"] = ok_b

    ok_c = True
    for G in _random_grams(rng, 100):
        diag, U, V = smith_normal_form(G)
        D = matmul(matmul(U, G), V)
        n = len(G)
        prod = 1
        for x in diag:
            prod *= x
        ok_c &= all(D[i][j] == (diag[i] if i == j else 0) for i in range(n) for j in range(n))
        ok_c &= prod == rational_det(G) and abs(rational_det(U)) == abs(rational_det(V)) == 1
        lat = LatticeModel(G)
        ok_c &= dual_gram(dual_gram(lat)).gram == lat.gram
    parts["c"] = ok_c

    ok_d = True
    for delta in congruence.DELTAS:
        for r in congruence.RESIDUES:
            A, B = congruence.substituted(r, delta)
            for _ in range(50):
                a, b = rng.randint(-1000, 1000), rng.randint(-1000, 1000)
                got = (A.evaluate({"a": a, "b": b}), B.evaluate({"a": a, "b": b}))
                ok_d &= got == congruence.combos_at(16 * b + r, a, delta)
    parts["d"] = ok_d

    ok_e = True
    for design in (e8(), e7dual(), icosahedron()):
        tensors = {k: moment_tensor(design, k) for k in (2, 4, 6)}
        for _ in range(20):
            if design.D:
                alpha = [ExactScalar(rng.randint(-3, 3), rng.randint(-3, 3), design.D) for _ in range(design.n)]
            else:
                alpha = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(design.n)]
            for k, tensor in tensors.items():
                ok_e &= tensor.evaluate(alpha) == moment_sum(design, alpha, k)
    parts["e"] = ok_e

    dt = time.perf_counter() - t0
    ok = all(parts.values()) and dt < 300
    return ok, " ".join(f"({k}) {'ok' if v else 'bad'}" for k, v in parts.items()) + f" in {dt:.2f}s"


def criterion_6():
    t0 = time.perf_counter()
    reports = [lemma_consistency(d, include_design_vectors=False) for d in (e8(), e7dual())]
    dt = time.perf_counter() - t0
    ok = all(r.ok and r.checked for r in reports) and dt < 10
    checked = sum(sum(r.checked.values()) for r in reports)
    return ok, f"{checked} predicate evaluations in {dt:.2f}s"


CRITERIA = [
    (1, "sieve t=7 reproduces the exclusion list", criterion_1),
    (2, "sieve t=5 reproduces the exclusion list", criterion_2),
    (3, "verify-table reproduces all 24 cells", criterion_3),
    (4, "known designs E8 and e7dual", criterion_4),
    (5, "property suites (a)-(e)", criterion_5),
    (6, "lemma consistency on E8 and e7dual", criterion_6),
]


def report_line(num, title, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title} ({detail})"


@pytest.mark.parametrize("num, title, check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + report_line(num, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, title, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(report_line(num, title, ok, detail))
    raise SystemExit(0 if all(results) else 1)
