"""Smoothness, tangent spaces and singular loci of Schubert varieties in the
flag variety, computed from permutation combinatorics alone."""

__version__ = "0.1.0"

from .exceptions import (
    OracleCapError,
    PermutationError,
    PreconditionError,
    SchubsingError,
    SizeMismatchError,
    SurgeryError,
)
from .perm import (
    Permutation,
    RankTable,
    Transposition,
    all_permutations,
    apply_transposition,
    bruhat_leq,
    covers_down,
    identity,
    interval_below,
    length,
    longest,
    make_permutation,
    parse_permutation,
    rank_table,
)
from .tangent import TangentReport, is_singular_at, is_smooth_tangent, tangent_dim, tangent_set
from .config import (
    RegionMask,
    TypeAConfig,
    TypeBConfig,
    check_prop2,
    configuration_count,
    transposition_region,
    type_A_configs,
    type_B_configs,
)
from .patterns import (
    MinimalConfiguration,
    PatternOccurrence,
    components_C,
    find_occurrences,
    is_smooth_LS,
    minimal_configurations,
    smoothness_witness,
    surgery,
)
from .locus import (
    SingularLocus,
    ZMembershipCertificate,
    is_component_maximal,
    maximal_elements,
    singular_locus,
    singular_locus_oracle,
    straighten,
    unstraighten,
    z_set,
)
from .verify import VerifyReport, verify
from .render import render
