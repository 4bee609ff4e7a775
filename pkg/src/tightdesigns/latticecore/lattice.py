"""Lattices generated by rational vectors, their duals, parity, and
characteristic vectors."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..exactnum import ExactScalar
from .normalforms import hermite_rows, rational_det, rational_inverse


class LatticeError(ValueError):
    pass


class UnsupportedLattice(LatticeError):
    """The input lies outside what an operation handles (irrational, even det, ...)."""


def _to_fraction(c) -> Fraction:
    if isinstance(c, ExactScalar):
        if not c.is_rational:
            raise UnsupportedLattice(f"irrational coordinate {c}")
        return c.rational
    return Fraction(c)


def gram_of(rows) -> list[list[Fraction]]:
    return [[sum(a * b for a, b in zip(u, v)) for v in rows] for u in rows]


@dataclass(frozen=True)
class LatticeModel:
    """A full-rank lattice given by the Gram matrix of a basis.

    ``basis`` holds ambient coordinates of the basis vectors when the lattice
    came from explicit vectors; ``coordinates`` holds the input vectors'
    (integral) coordinates in that basis.
    """

    gram: tuple
    basis: tuple | None = field(default=None, compare=False)
    coordinates: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        g = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(r) != n for r in g):
            raise LatticeError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(i)):
            raise LatticeError("Gram matrix must be symmetric")
        # leading principal minors (Sylvester)
        for k in range(1, n + 1):
            if rational_det([r[:k] for r in g[:k]]) <= 0:
                raise LatticeError("Gram matrix is not positive definite")

    @property
    def n(self) -> int:
        return len(self.gram)

    @property
    def det(self) -> Fraction:
        return rational_det(self.gram)

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for r in self.gram for x in r)

    @property
    def even(self) -> bool:
        return self.integral and all(self.gram[i][i] % 2 == 0 for i in range(self.n))

    def int_gram(self) -> list[list[int]]:
        if not self.integral:
            raise LatticeError("Gram matrix is not integral")
        return [[int(x) for x in r] for r in self.gram]

    def scaled(self, factor) -> "LatticeModel":
        """The same basis with the form multiplied by ``factor``."""
        factor = Fraction(factor)
        return LatticeModel([[x * factor for x in r] for r in self.gram])

    def dual_basis(self) -> list[list[Fraction]]:
        """Ambient coordinates of the dual basis (needs ``basis``)."""
        if self.basis is None:
            raise LatticeError("lattice has no ambient basis")
        ginv = rational_inverse(self.gram)
        dim = len(self.basis[0])
        return [[sum(ginv[i][k] * self.basis[k][j] for k in range(self.n)) for j in range(dim)]
                for i in range(self.n)]


def lattice_from_vectors(vectors) -> LatticeModel:
    """Z-span of rational vectors, as a Hermite-reduced basis and its Gram matrix.

    Raises ``UnsupportedLattice`` for irrational input and ``LatticeError``
    when the vectors do not span the ambient space.
    """
    vecs = [[_to_fraction(c) for c in v] for v in vectors]
    if not vecs:
        raise LatticeError("no vectors")
    dim = len(vecs[0])
    L = math.lcm(*(c.denominator for v in vecs for c in v))
    ints = [[int(c * L) for c in v] for v in vecs]
    hnf = hermite_rows(ints)
    if len(hnf) != dim:
        raise LatticeError(f"vectors span rank {len(hnf)}, ambient dimension {dim}")
    basis = [[Fraction(x, L) for x in r] for r in hnf]
    binv = rational_inverse(basis)
    coords = []
    for v in vecs:
        c = [sum(v[k] * binv[k][i] for k in range(dim)) for i in range(dim)]
        if any(x.denominator != 1 for x in c):
            raise LatticeError(f"input vector {v} is not an integral combination of the basis")
        coords.append(tuple(int(x) for x in c))
    return LatticeModel(gram_of(basis), basis=tuple(map(tuple, basis)), coordinates=tuple(coords))


def dual_gram(lat: LatticeModel) -> LatticeModel:
    """Gram matrix of the dual basis, i.e. the inverse Gram matrix."""
    basis = None
    if lat.basis is not None:
        basis = tuple(map(tuple, lat.dual_basis()))
    return LatticeModel(rational_inverse(lat.gram), basis=basis)


def parity_and_det(lat: LatticeModel) -> dict:
    det = lat.det
    return {
        "integral": lat.integral,
        "even": lat.even,
        "det": det,
        "det_odd": det.denominator == 1 and det.numerator % 2 == 1,
    }


@dataclass(frozen=True)
class CharVector:
    """A characteristic vector ``sum c_i b_i`` with ``c_i`` in {0, 1}."""

    coords: tuple
    norm: Fraction

    @property
    def norm_mod8(self) -> int:
        return int(self.norm) % 8


def _solve_mod2(A: list[list[int]], b: list[int]) -> list[int] | None:
    n = len(A)
    M = [[x % 2 for x in row] + [b[i] % 2] for i, row in enumerate(A)]
    r = 0
    for c in range(n):
        p = next((i for i in range(r, n) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(n):
            if i != r and M[i][c]:
                M[i] = [x ^ y for x, y in zip(M[i], M[r])]
        r += 1
    if r < n:
        return None
    return [M[i][n] for i in range(n)]


def characteristic_vectors(lat: LatticeModel) -> CharVector:
    """Solve ``G c = diag(G) mod 2``; requires an integral Gram of odd determinant."""
    if not lat.integral:
        raise LatticeError("Gram matrix is not integral")
    G = lat.int_gram()
    det = lat.det
    if det.numerator % 2 == 0:
        raise UnsupportedLattice("characteristic vectors need odd determinant")
    c = _solve_mod2(G, [G[i][i] for i in range(lat.n)])
    norm = sum(Fraction(c[i] * c[j] * G[i][j]) for i in range(lat.n) for j in range(lat.n))
    return CharVector(tuple(c), norm)


def two_adic_square_class(x: int) -> int:
    """Class of an odd integer in Z_2^* / (Z_2^*)^2, as its residue in {1, 3, 5, 7}."""
    if x % 2 == 0:
        raise ValueError(f"{x} is even")
    return x % 8


@dataclass(frozen=True)
class EvenSublattice:
    """The even-sum sublattice of a tight-5 compatible design and its rescaling.

    ``gamma`` has Gram ``gram(plus) / 2``.
    """

    plus: LatticeModel
    gamma: LatticeModel
    index: int
    contained_in_2dual: bool


def even_sublattice(design) -> EvenSublattice:
    """Build ``{sum c_x x : sum c_x even}`` for a design whose distinct
    inner products are all +-1 with odd norm d."""
    from ..designcore import inner_product_spectrum

    spectrum = inner_product_spectrum(design)
    d = _to_fraction(design.d)
    if not spectrum.tight5 or d.denominator != 1 or d.numerator % 2 == 0:
        raise LatticeError("design is not tight-5 compatible ((x,y) = +-1, d odd)")
    vecs = [[_to_fraction(c) for c in v] for v in design.vectors]
    x0 = vecs[0]
    gens = [[a - b for a, b in zip(v, x0)] for v in vecs[1:]] + [[2 * a for a in x0]]
    lam = lattice_from_vectors(vecs)
    plus = lattice_from_vectors(gens)
    ratio = plus.det / lam.det
    index = math.isqrt(int(ratio))
    if index * index != ratio:
        raise LatticeError("sublattice index is not an integer")
    contained = all(
        sum(a * b for a, b in zip(bv, x)) % 2 == 0 for bv in plus.basis for x in vecs
    )
    gamma = LatticeModel([[x / 2 for x in r] for r in plus.gram])
    if not gamma.integral or not gamma.even:
        raise LatticeError("rescaled even sublattice is not even integral")
    return EvenSublattice(plus, gamma, index, contained)
