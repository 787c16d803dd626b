"""Exact algebra for the natural (componentwise) matrix product.

Matrices of any one shape multiply entrywise (`A * B`), which extends the
row-vector product to columns, rectangles, squares and partitioned
("super") matrices, and makes matrix-coefficient polynomial rings with a
formal calculus possible.  Everything is exact: integers, rationals,
residues mod n, and the strict nonnegative cones.
"""

from .errors import (
    ConeViolation,
    DomainMismatch,
    NatProdError,
    NoRationalRoot,
    NotAUnit,
    NotClosed,
    NotInvertible,
    NotMember,
    NotMonicizable,
    NotSquare,
    ParseError,
    RaggedCuts,
    ShapeMismatch,
    SingularLead,
    TooLarge,
    TypeMismatch,
    UnsupportedDomain,
    ZeroDivisorEntry,
    ZeroLead,
)
from .matpoly import (
    MatPoly,
    RootSet,
    monicize_natural,
    monicize_usual,
    parse_poly,
    poly_add,
    poly_degree,
    poly_derivative,
    poly_evaluate_natural,
    poly_from_json,
    poly_integrate,
    poly_mul_natural,
    poly_mul_usual,
    poly_to_json,
    render_poly,
    solve_binomial,
    solve_quadratic,
)
from .matrix import (
    Matrix,
    Shape,
    SupportMask,
    diagonal,
    divides,
    identity,
    is_idempotent,
    is_orthogonal,
    is_prime_row,
    main_complement,
    mat_add,
    matrix_from_json,
    matrix_to_json,
    natural_inverse,
    nproduct,
    ones,
    parse_matrix,
    render_matrix,
    support,
    trivial_idempotent_count,
    trivial_idempotents,
    uproduct,
    zero_divisor_witness,
    zeros,
)
from .scalars import (
    Domain,
    Mod,
    Q,
    Q_PLUS,
    Scalar,
    Z,
    Z_PLUS,
    dom_add,
    dom_inv,
    dom_mul,
    domain_from_code,
    is_unit,
    kth_root,
)
from .structures import (
    ADDITION,
    Carrier,
    DIRECT,
    MaskSubspace,
    NATURAL_PRODUCT,
    NOT_SPANNING,
    PSEUDO_DIRECT,
    StructureReport,
    analyze,
    check_sum,
    cone_positivity_check,
    cone_zero_divisor_pair,
    ideal_generated,
    idempotents_in,
    is_ideal,
    is_smarandache,
    is_subsemigroup,
    orthogonal_space,
    subspace_complement,
)
from .supermatrix import (
    PartitionType,
    SuperMatrix,
    parse_super,
    render_super,
    same_type,
    super_add,
    super_from_json,
    super_inverse,
    super_nproduct,
    super_ones,
    super_to_json,
)

__version__ = "0.1.0"
