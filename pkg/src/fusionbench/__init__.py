"""Fusion rings, bicrossed products, and numerical pentagon verification."""

from .errors import (CapExceededError, FusionbenchError, InputError,
                     InternalInconsistencyError, NumericError,
                     OverflowLimitError, ParameterError, VerificationError)
from .report import Check, Report
from .rings import (FusionRing, RingElement, Subring, dual_element,
                    fpdim_basis, fpdim_ring, multiply, subring_generated,
                    validate_fusion_ring)
from .groups import (FiniteGroup, cyclic_group, direct_product,
                     find_isomorphism, parse_group_name, symmetric_group_3)
from .grading import (Grading, adjoint_subring, factor_through_universal,
                      is_nilpotent, pointed_subring, universal_grading,
                      verify_grading)
from .matched_pair import (GroupMatchedPair, RingMatchedPair, group_bicrossed,
                           ring_bicrossed, validate_group_matched_pair,
                           validate_ring_matched_pair)
from .factorization import (Factorization, canonical_matched_pair,
                            certify_theorem_iso, check_exact_factorization,
                            recover_actions)
from .category import (Bicharacter, FusionCategoryData, ThreeCocycle,
                       TYPointedParams, TYTYParams, build_pointed, build_TY,
                       build_TY_pointed_bicrossed, build_TY_TY_bicrossed,
                       check_pentagon, check_triangle, fibonacci_ring,
                       group_ring, standard_bicharacter, trivial_cocycle,
                       ty_ring, validate_bicharacter, validate_cocycle)

__version__ = "0.1.0"
