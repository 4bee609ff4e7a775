"""Antipodal spherical configurations and exact design-strength checks."""

from .builtins import BUILTINS, builtin, e8, e8_roots, e7dual, icosahedron
from .design import (
    AntipodalDesign,
    DesignError,
    DesignFormatError,
    DuplicateVectorError,
    NormMismatchError,
    dot,
    load_design,
    save_design,
)
from .moments import (
    IdentityCheck,
    Mismatch,
    MomentProfile,
    Spectrum,
    StrengthCertificate,
    SymmetricMomentTensor,
    check_degree,
    design_strength_certificate,
    inner_product_spectrum,
    is_tight7_parameters,
    mixed_moment_report,
    moment_constant,
    moment_profile,
    moment_sum,
    moment_tensor,
    tight_cardinality,
)
