import cmath
import math
from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from tightdesigns.exactnum import (
    CycInt,
    ExactScalar,
    MPoly,
    cyc_root,
    cyc_sqrt,
    cyclotomic_poly,
    euler_phi,
    factorize,
    format_scalar,
    golden_ratio,
    is_prime,
    padic_val,
    parse_scalar,
)

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)


# -- p-adic valuations and factoring ------------------------------------------

def test_padic_val_basic():
    assert padic_val(48, 2) == 4
    assert padic_val(Fraction(3, 8), 2) == -3
    assert padic_val(Fraction(9, 2), 3) == 2
    assert padic_val(0, 5) == math.inf


def test_padic_val_rejects_composite_base():
    with pytest.raises(ValueError):
        padic_val(12, 4)


@given(rationals, rationals, st.sampled_from([2, 3, 5, 7]))
def test_padic_val_is_a_valuation(x, y, p):
    if x and y:
        assert padic_val(x * y, p) == padic_val(x, p) + padic_val(y, p)
    if x + y:
        assert padic_val(x + y, p) >= min(padic_val(x, p), padic_val(y, p))


@given(st.integers(2, 10 ** 7))
def test_factorize_matches_sympy(n):
    assert factorize(n) == sympy.factorint(n)
    assert is_prime(n) == sympy.isprime(n)


# -- Q(sqrt D) -----------------------------------------------------------------

def test_golden_ratio_identity():
    phi = golden_ratio()
    assert phi * phi == phi + 1
    assert phi.norm() == -1
    assert phi.inverse() == phi - 1


def test_icosahedral_norm_is_two_plus_phi():
    phi = golden_ratio()
    assert 1 + phi * phi == 2 + phi


def test_scalar_ordering_is_exact():
    phi = golden_ratio()
    assert phi > Fraction(1618033, 1000000)
    assert phi < Fraction(1618034, 1000000)
    assert (phi - phi).sign() == 0


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        ExactScalar(0, 1, 5) + ExactScalar(0, 1, 2)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        ExactScalar(0, 0, 5).inverse()


@given(rationals, rationals)
def test_format_parse_roundtrip(a, b):
    x = ExactScalar(a, b, 5)
    assert parse_scalar(format_scalar(x), 5) == x


@given(rationals, rationals, rationals, rationals)
def test_quadfield_matches_high_precision(a, b, c, e):
    x, y = ExactScalar(a, b, 5), ExactScalar(c, e, 5)
    mpmath.mp.dps = 50
    r5 = mpmath.sqrt(5)

    def mp(z):
        return mpmath.mpf(z.a.numerator) / z.a.denominator + mpmath.mpf(z.b.numerator) / z.b.denominator * r5

    assert abs(mp(x * y) - mp(x) * mp(y)) < mpmath.mpf(10) ** -30
    if y:
        assert abs(mp(x / y) - mp(x) / mp(y)) < mpmath.mpf(10) ** -30 * (1 + abs(mp(x) / mp(y)))


# -- polynomials -----------------------------------------------------------------

def test_substitution_of_linear_form():
    (d,) = MPoly.ring("d")
    (b,) = MPoly.ring("b")
    assert (d ** 2).substitute("d", 16 * b + 3) == 256 * b ** 2 + 96 * b + 9


def test_variable_mismatch_is_an_error():
    (x,) = MPoly.ring("x")
    (y,) = MPoly.ring("y")
    with pytest.raises(ValueError):
        x + y


def test_coefficients_by_variable():
    a, b = MPoly.ring("a", "b")
    p = 3 * a ** 2 * b + a * b ** 2 - Fraction(1, 2)
    layers = p.coefficients("a")
    assert layers[2].univariate_coeffs() == {1: 3}
    assert layers[1].univariate_coeffs() == {2: 1}
    assert p.constant_term() == Fraction(-1, 2)


small = st.integers(-5, 5)


@given(st.lists(st.tuples(small, small, small), max_size=5),
       st.lists(st.tuples(small, small, small), max_size=5), small, small)
def test_mpoly_agrees_with_sympy(t1, t2, xa, xb):
    a, b = MPoly.ring("a", "b")
    sa, sb = sympy.symbols("a b")

    def build(terms):
        p = 0 * a
        q = sympy.Integer(0)
        for c, i, j in terms:
            p = p + c * a ** abs(i) * b ** abs(j)
            q += c * sa ** abs(i) * sb ** abs(j)
        return p, q

    p1, q1 = build(t1)
    p2, q2 = build(t2)
    prod = p1 * p2 - p2
    expect = sympy.expand(q1 * q2 - q2).subs({sa: xa, sb: xb})
    assert prod.evaluate({"a": xa, "b": xb}) == Fraction(int(expect))


# -- cyclotomics -------------------------------------------------------------------

@pytest.mark.parametrize("N", [1, 2, 3, 4, 5, 8, 12, 15, 24])
def test_cyclotomic_degree(N):
    assert len(cyclotomic_poly(N)) - 1 == euler_phi(N)
    x = sympy.Symbol("x")
    assert sympy.Poly(sympy.cyclotomic_poly(N, x), x).all_coeffs()[::-1] == list(cyclotomic_poly(N))


def test_roots_of_unity():
    z = cyc_root(8, 1)
    assert z ** 8 == 1
    assert z ** 4 == -1
    assert z * z.conjugate() == 1


@pytest.mark.parametrize("m", [1, 2, 3, 5, 6, 7, 8, 12, 15, 64, 105])
def test_cyc_sqrt_squares(m):
    r = cyc_sqrt(m)
    assert r * r == m
    assert abs(complex(r) - math.sqrt(m)) < 1e-9


def test_mixed_conductor_lift():
    s = cyc_root(3, 1) + cyc_root(4, 1)
    assert s.N == 12
    assert abs(complex(s) - (cmath.exp(2j * cmath.pi / 3) + 1j)) < 1e-12


@settings(max_examples=50)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_cyclotomic_field_arithmetic(u, v):
    x, y = CycInt(8, u), CycInt(8, v)
    assert abs(complex(x * y) - complex(x) * complex(y)) < 1e-9
    assert (x + y) - y == x
