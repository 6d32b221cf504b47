# pylint: disable-all
# pylint: skip-file
from utilities.quadratic import (DomainError, Ordering, QuadraticValue, isqrt,
                                 qv_cmp, qv_floor, qv_is_integer)
from utilities.bundle import (ChernClasses, GeneralChernPair, StabilityClass,
                              BundleProfile, classify_stability, twist_chern,
                              delta, serre_dual_twist, split_by_delta,
                              instability_order)
from utilities.functions import (HilbertPolynomial, FactoredHilbertPolynomial,
                                 HilbertCubic, RootStructure, hilbert_coeffs,
                                 chi_p3, chi_p2, binomial, binom3,
                                 cubic_root_structure)
from utilities.identities import (IdentityResult, IdentityReport,
                                  h0_minus_h3_nonstable,
                                  verify_lemma_identities)
from utilities.constraints import (Constraint, LowVanishingConstraint,
                                   HighVanishingConstraint)
from utilities.cohomology import TableFormatError, TableRow, CohomologyTable
