"""Cohen-Macaulay primes of (signed) permutation invariant rings.

Given a finite group of (signed) permutations, this package constructs a
universal set of secondary invariants over the integers, computes the
deficiency of the group, and so determines exactly the primes p at which the
invariant ring over F_p stops being a free module over the ambient
invariants.
"""

from .deficiency import (
    DeficiencyReport,
    bad_primes,
    coset_matrix,
    deficiency_evaluated,
    deficiency_symbolic,
)
from .errors import (
    CmprimesError,
    DegeneratePointError,
    InternalCheckError,
    ParseError,
    UnsupportedSizeError,
)
from .frame import (
    AmbientFrame,
    HyperplaneOrbit,
    build_frame,
    delta_degree_check,
    discriminant_exponents,
    evaluate_discriminant,
    group_discriminant,
)
from .hilbert import (
    HilbertData,
    goebel_bound,
    invariant_dimension,
    secondary_degrees,
)
from .linalg import (
    IntMatrix,
    SNFResult,
    fraction_free_determinant,
    minor_gcd,
    rational_column_select,
    smith_normal_form,
)
from .modp import (
    ModPVerdict,
    is_good_prime,
    membership_denominator,
    module_membership,
    rho_surjective,
)
from .perm import (
    Group,
    Permutation,
    count_reflections,
    cycle_type_of_map,
    group_from_generators,
    hyperoctahedral_group,
    symmetric_group,
    young_group,
)
from .poly import (
    SparsePoly,
    apply_group_element,
    difference_product,
    elementary_symmetric,
    orbit_sum,
)
from .secondaries import (
    SecondarySet,
    candidate_complement,
    extend_secondaries,
    module_span_at_degree,
    universal_secondaries,
)
from .cli import analyze, parse_group

__all__ = [
    "AmbientFrame",
    "CmprimesError",
    "DeficiencyReport",
    "DegeneratePointError",
    "Group",
    "HilbertData",
    "HyperplaneOrbit",
    "IntMatrix",
    "InternalCheckError",
    "ModPVerdict",
    "ParseError",
    "Permutation",
    "SNFResult",
    "SecondarySet",
    "SparsePoly",
    "UnsupportedSizeError",
    "analyze",
    "apply_group_element",
    "bad_primes",
    "build_frame",
    "candidate_complement",
    "coset_matrix",
    "count_reflections",
    "cycle_type_of_map",
    "deficiency_evaluated",
    "deficiency_symbolic",
    "delta_degree_check",
    "difference_product",
    "discriminant_exponents",
    "elementary_symmetric",
    "evaluate_discriminant",
    "extend_secondaries",
    "fraction_free_determinant",
    "goebel_bound",
    "group_discriminant",
    "group_from_generators",
    "hyperoctahedral_group",
    "invariant_dimension",
    "is_good_prime",
    "membership_denominator",
    "minor_gcd",
    "module_membership",
    "module_span_at_degree",
    "orbit_sum",
    "parse_group",
    "rational_column_select",
    "rho_surjective",
    "secondary_degrees",
    "smith_normal_form",
    "symmetric_group",
    "universal_secondaries",
    "young_group",
]
