import random
from fractions import Fraction

import pytest

from tightdesigns.designcore import (
    AntipodalDesign,
    DesignFormatError,
    DuplicateVectorError,
    NormMismatchError,
    builtin,
    check_degree,
    design_strength_certificate,
    dot,
    e7dual,
    e8,
    icosahedron,
    inner_product_spectrum,
    is_tight7_parameters,
    load_design,
    mixed_moment_report,
    moment_constant,
    moment_profile,
    moment_sum,
    moment_tensor,
    save_design,
    tight_cardinality,
)
from tightdesigns.exactnum import ExactScalar, golden_ratio


@pytest.fixture(scope="module")
def designs():
    return {"e8": e8(), "e7dual": e7dual(), "icosahedron": icosahedron()}


def _random_alpha(design, rng):
    if design.D:
        return [ExactScalar(rng.randint(-4, 4), rng.randint(-4, 4), design.D) for _ in range(design.n)]
    return [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(design.n)]


def test_tight_cardinalities():
    assert tight_cardinality(8, 7) == 240
    assert tight_cardinality(7, 5) == 56
    assert tight_cardinality(3, 5) == 12
    assert tight_cardinality(23, 7) == 2 * 2300
    assert tight_cardinality(3, 4) == 9


def test_builtin_sizes(designs):
    assert [designs[k].s for k in ("e8", "e7dual", "icosahedron")] == [120, 28, 6]
    assert designs["e7dual"].d == 3
    assert designs["icosahedron"].d == 2 + golden_ratio()
    with pytest.raises(ValueError):
        builtin("leech")


def test_e8_is_tight_7_design(designs):
    cert = design_strength_certificate(designs["e8"], 7)
    assert cert.passed and cert.degrees == {2: True, 4: True, 6: True}
    assert is_tight7_parameters(designs["e8"])


def test_e7dual_is_5_design_but_not_7(designs):
    assert design_strength_certificate(designs["e7dual"], 5).passed
    cert = design_strength_certificate(designs["e7dual"], 7)
    assert not cert.passed
    assert cert.witness.degree == 6


def test_icosahedron_is_5_design(designs):
    assert design_strength_certificate(designs["icosahedron"], 5).passed
    assert not design_strength_certificate(designs["icosahedron"], 7).passed


def test_strength_fails_after_dropping_a_vector(designs):
    e = designs["e8"]
    broken = AntipodalDesign(e.n, e.d, e.vectors[1:])
    cert = design_strength_certificate(broken, 7)
    assert not cert.passed and not cert.degrees[2]


def test_spectra(designs):
    sp = inner_product_spectrum(designs["e8"])
    assert dict(sp.values) == {0: 3780, 1: 2240, -1: 1120}
    assert sp.tight7 and not sp.tight5
    sp = inner_product_spectrum(designs["e7dual"])
    assert set(sp.values) == {1, -1} and sp.tight5
    sp = inner_product_spectrum(designs["icosahedron"])
    assert not sp.tight7 and not sp.tight5


@pytest.mark.parametrize("name", ["e8", "e7dual", "icosahedron"])
def test_tensor_matches_pointwise_moment_sums(designs, name):
    design = designs[name]
    rng = random.Random(name)
    tensors = {k: moment_tensor(design, k) for k in (2, 4, 6)}
    for _ in range(20):
        alpha = _random_alpha(design, rng)
        for k, tensor in tensors.items():
            assert tensor.evaluate(alpha) == moment_sum(design, alpha, k)


@pytest.mark.parametrize("name", ["e8", "e7dual", "icosahedron"])
def test_odd_moments_vanish_on_full_set(designs, name):
    design = designs[name]
    alpha = _random_alpha(design, random.Random(1))
    for k in (1, 3, 5):
        total = 0
        for x in design.full_set():
            total = total + dot(x, alpha) ** k
        assert total == 0


def test_laplace_implication_on_perturbed_designs(designs):
    # a degree-6 pass must bring degree 4 and 2 along
    base = designs["e8"]
    rng = random.Random(7)
    for _ in range(5):
        vecs = list(base.vectors)
        rng.shuffle(vecs)
        cand = AntipodalDesign(base.n, base.d, vecs[: rng.randint(60, 119)])
        if check_degree(cand, 6) is None:
            assert check_degree(cand, 4) is None and check_degree(cand, 2) is None
    assert check_degree(base, 6) is None and check_degree(base, 4) is None


def test_mixed_moment_identities(designs):
    rng = random.Random(3)
    for name, t in (("e8", 7), ("e7dual", 5), ("icosahedron", 5)):
        design = designs[name]
        for _ in range(3):
            a, b = _random_alpha(design, rng), _random_alpha(design, rng)
            assert all(c.holds for c in mixed_moment_report(design, a, b, t)), name


def test_mixed_moment_identity_detects_failure(designs):
    e = designs["e7dual"]
    checks = mixed_moment_report(e, [1, 0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 0], t=7)
    assert not all(c.holds for c in checks)


def test_moment_constant(designs):
    assert moment_constant(designs["e8"], 2) == 30
    assert moment_constant(designs["e8"], 4) == 18
    with pytest.raises(ValueError):
        moment_constant(designs["e8"], 3)


@pytest.mark.parametrize("alpha, counts", [
    ((1,) * 8, {0: 63, 2: 56, 4: 1}),
    ((2, 2, 0, 0, 0, 0, 0, 0), {0: 63, 2: 56, 4: 1}),
    ((1, 1, 0, 0, 0, 0, 0, 0), {0: 63, 1: 56, 2: 1}),
])
def test_e8_moment_profile(designs, alpha, counts):
    prof = moment_profile(designs["e8"], alpha)
    assert prof.counts == counts
    assert prof.total == 120
    assert all(r == 0 for r in prof.residuals.values())


def test_profile_requires_integral_products(designs):
    with pytest.raises(ValueError):
        moment_profile(designs["e8"], (Fraction(1, 3),) + (0,) * 7)
    assert moment_profile(designs["e7dual"], (1, 0, 0, 0, 0, 0, 0)).residuals is None


# -- file format ---------------------------------------------------------------

@pytest.mark.parametrize("name", ["e8", "e7dual", "icosahedron"])
def test_save_load_roundtrip(tmp_path, designs, name):
    path = tmp_path / f"{name}.txt"
    save_design(designs[name], path)
    back = load_design(path)
    assert back == designs[name]
    assert back.label == name


def test_format_errors_carry_line_numbers(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("n=2\nd=2\nD=0\ns=2\n1 1\n1 0\n")
    with pytest.raises(NormMismatchError) as exc:
        load_design(p)
    assert exc.value.line == 6

    p.write_text("n=2\nd=2\nD=0\ns=2\n1 1\n-1 -1\n")
    with pytest.raises(DuplicateVectorError) as exc:
        load_design(p)
    assert exc.value.line == 6

    p.write_text("n=2\nd=2\nD=0\ns=1\n# comment\n1 x\n")
    with pytest.raises(DesignFormatError) as exc:
        load_design(p)
    assert exc.value.line == 6

    p.write_text("n=2\nd=2\ns=1\n1 1\n")
    with pytest.raises(DesignFormatError):
        load_design(p)

    p.write_text("n=2\nd=2\nD=0\ns=2\n1 1\n")
    with pytest.raises(DesignFormatError):
        load_design(p)


def test_quadratic_entries_parse(tmp_path):
    p = tmp_path / "q.txt"
    p.write_text("n=2\nd=5/2+1/2*sqrt(5)\nD=5\ns=1\n1 1/2+1/2*sqrt(5)\n")
    design = load_design(p)
    assert design.vectors[0][1] == golden_ratio()
    assert not design.is_rational
