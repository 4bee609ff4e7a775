"""Integral lattices over exact rationals: bases, duals, parity, discriminant
forms, Gauss sums, even sublattices and characteristic vectors."""

from .discriminant import (
    DEFAULT_DISC_BOUND,
    DiscGroup,
    DiscriminantBoundExceeded,
    GaussSum,
    discriminant_form,
    gauss_sum,
    milgram_check,
    snf_invariants,
)
from .lattice import (
    CharVector,
    EvenSublattice,
    LatticeError,
    LatticeModel,
    UnsupportedLattice,
    characteristic_vectors,
    dual_gram,
    even_sublattice,
    gram_of,
    lattice_from_vectors,
    parity_and_det,
    two_adic_square_class,
)
from .normalforms import hermite_rows, rational_det, rational_inverse, smith_normal_form

A2 = ((2, -1), (-1, 2))
D4 = ((2, 0, -1, 0), (0, 2, -1, 0), (-1, -1, 2, -1), (0, 0, -1, 2))
E8 = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, -1),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, -1, 0, 0, 0, 0, 2),
)
