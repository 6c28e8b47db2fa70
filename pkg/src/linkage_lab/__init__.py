"""linkage-lab: exact root-datum, affine Weyl group, linkage, character and
quantum-number computations, with a verifying CLI."""

from .roots import (
    CartanMatrixError,
    CartanSpec,
    EllReport,
    RootSystem,
    build,
    parse_root,
    parse_weight,
    root_system,
)
from .weyl import BwbAnalysis, WeylElement, act, bwb_analysis, dot, length, longest_element, orbit
from .affine import (
    AffineWeylElement,
    StrongLinkageChain,
    TranslationLattice,
    ell_beta,
    enumerate_block,
    fundamental_alcove_position,
    in_principal_block,
    length_affine,
    linked,
    locate_alcove,
    reduced_word,
    strongly_linked,
    translation_lattice,
    weight_up,
)
from .characters import (
    Character,
    b_induced_character,
    dual,
    euler_characteristic,
    ext_b_dimension,
    kostant_partition,
    kostant_partition_with_parts,
    stabilization_nu,
    tensor,
    vanishing_threshold,
    verma_weight_mult,
    weyl_character,
    weyl_dimension,
    weyl_weight_mult,
)
from .quantum import CycNumber, LaurentPoly, chi_values, cyclotomic, qbinom, qfact, qint, specialize
from .translation import (
    TranslationAnalysis,
    WallDatum,
    WeightPatternViolation,
    classify_case,
    nu1,
    out_of_wall_weights,
    to_wall_weight,
    translation_reduced_word,
    triangle_euler_check,
    wall_datum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
