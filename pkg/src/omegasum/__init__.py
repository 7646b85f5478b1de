"""Countably-infinitary summation structures, executable and law-tested:
carriers for [0, inf] (exact dyadics, lower reals, extended naturals),
halving structure and the free magnitude module, subset-product sums on
rigs, paradoxical positive reals, and traced integer-set categories.
"""

from .base import ApproxLevel, CheckResult, Inconclusive, Outcome, TriState
from .families import (
    CountableFamily,
    FiniteInjection,
    FiniteSupport,
    Lazy,
    PairInjection,
    Subset,
    cantor_pairing,
    constant_family,
    finite_family,
    restrict,
)
from .monoid import (
    SeriesMonoidDescriptor,
    WitnessOutcome,
    binary_add,
    leq_witness,
    repeat_forever,
    series_sum,
    sum_over_subset,
    times,
)
from .numbers import (
    DYADIC_INF,
    DYADIC_ONE,
    DYADIC_ZERO,
    DyadicExt,
    EXTNAT_INF,
    EXTNAT_ONE,
    EXTNAT_ZERO,
    ExtNat,
    LowerReal,
    dyadic_parse,
    dyadic_render,
    lower_render,
)
from .instances import (
    Biproduct,
    FreeSeriesElem,
    SumOutcome,
    biproduct,
    boolean_lattice,
    chain_lattice,
    check_biproduct_equations,
    check_generator_evaluation,
    dyadic_core,
    extnat_max_monoid,
    extnat_monoid,
    extnat_sum,
    free_extend,
    free_monoid,
    lower_real_approx,
    lower_real_monoid,
    lower_real_sum,
    sup_lattice_sum_outcome,
)
from .magnitude import (
    BinaryExpansion,
    Endo,
    FormalMagnitude,
    ZenoModule,
    binary_expand,
    chi,
    expansion_value,
    formal_add,
    formal_congruent,
    formal_halve,
    formal_normalize,
    formal_value,
    halve,
    halving_endo,
    identity_endo,
    mul_extended,
    orbit_sum,
    render_expansion,
    scalar_action,
    verify_zeno_module,
    zeno_verify,
)
from .riglog import (
    LogElem,
    OmegaMonoid,
    OrderPreservingMap,
    RigDescriptor,
    geometric_inverse,
    log_add,
    log_of,
    log_series_sum,
    log_zero,
    omega_assoc_check,
    omega_from_rig,
    omega_from_series,
    p_monoid,
    p_sum,
    p_sum_by_subsets,
)
from .paradox import (
    ZP_ZERO,
    ZPElem,
    ZPKind,
    parse_literal,
    render_literal,
    to_nonterminating,
    zp_add,
    zp_leq,
    zp_nonterminating,
    zp_terminating,
    zp_value,
)
from .intsets import (
    Injection,
    IntMorphism,
    IntObject,
    cardinality,
    check_snake,
    embed_injection,
    int_compose,
    int_counit,
    int_dual,
    int_identity,
    int_tensor,
    int_unit,
    pre_trace_composite,
    trace_injection,
)
