"""ringbench: a workbench for finite commutative rings.

Builds small rings (Z_n, products, idealizations, quotients, localizations,
raw tables), computes with their ideals (radical, residual, annihilator,
products, full lattice enumeration), decides the prime/primary/absorbing
family of ideal properties with explicit violation witnesses, and
exhaustively verifies a catalog of transfer theorems over a generated ring
corpus, including a counterexample miner for an open annihilator question.
"""

from .classifiers import (
    PREDICATES,
    PropertyRecord,
    TripleZero,
    Verdict,
    classify,
    find_triple_zeros,
    is_free_triple_zero,
    is_one_absorbing_primary,
    is_weakly_one_absorbing_primary,
)
from .dsl import BuiltRing, IdealExpr, RingExpr, build_ring, parse_ideal, parse_ring
from .errors import RingbenchError
from .ideal_algebra import (
    Ideal,
    IdealSpec,
    all_ideals,
    annihilator,
    ideal_generated,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    irreducible_elements,
    is_chained,
    is_divided,
    is_domain,
    is_field,
    is_quasilocal,
    is_reduced,
    is_u_ring,
    is_vnr,
    jacobson_radical,
    maximal_ideals,
    nilradical,
    prime_ideals,
    radical,
    residual,
    zero_divisors,
    z_relative,
)
from .ring_core import (
    DEFAULT_MAX_ORDER,
    FiniteRing,
    RingHom,
    hom_check,
    hom_image_ideal,
    hom_kernel,
    hom_preimage_ideal,
    mk_idealization,
    mk_localization,
    mk_product,
    mk_quotient,
    mk_table,
    mk_zn,
)

__version__ = "0.1.0"
