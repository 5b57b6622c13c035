"""Symbolic dynamics on finite groups and subgroup towers.

Finite groups and towers, patterns, shifts of finite type by forbidden
patterns, free extensions along subgroup inclusions and their inverse,
exact entropy arithmetic, strong irreducibility, automorphisms, measures
of maximal entropy, and integer-line truncation demos — all cross-checked
against brute-force oracles at desk scale.
"""

from .errors import (
    ConfigurationError,
    DomainError,
    FinshiftError,
    FormatError,
    InputError,
    ResourceError,
    ValidationError,
)
from .groups import (
    CosetDecomposition,
    FiniteGroup,
    GroupTower,
    Subgroup,
    all_subgroups,
    build_tower,
    coset_action,
    cyclic,
    from_table,
    generated_subgroup,
    is_subgroup,
    make_group,
    product,
    right_cosets,
    z2_power_tower,
)
from .patterns import (
    BINARY,
    Alphabet,
    CosetFamily,
    Pattern,
    config_from_pattern,
    empty_pattern,
    extensions,
    join,
    make_pattern,
    pattern_from_config,
    restrict,
    shift_config,
    shift_pattern,
)
from .shiftspace import (
    BlockMap,
    SftSpec,
    ShiftSpace,
    apply_block_code,
    enumerate_sft,
    enumerate_sft_naive,
    enumerate_subshifts,
    forbidden_patterns,
    full_shift,
    is_shift_invariant,
    language,
    orbits,
    spec_from_space,
)
from .freext import (
    BaseExtractResult,
    ExtensionContext,
    all_families,
    assemble,
    base_extract,
    disassemble,
    extension_context,
    family_action,
    free_extension,
    free_extension_spec,
    subgroup_context,
    tower_context,
    tower_extend,
)
from .dynprops import (
    AutomorphismGroup,
    EntropyMinimalVerdict,
    EntropyValue,
    InvariantMeasure,
    MmeUniqueVerdict,
    SiVerdict,
    automorphism_group,
    entropy,
    entropy_set,
    is_entropy_minimal,
    measure_entropy,
    measure_from_orbit_masses,
    minimal_si_witnesses,
    mme,
    mme_unique_check,
    partition_entropy,
    strongly_irreducible_witness,
    zero_entropy_classify,
)
from .zline import (
    EvenCoverMismatch,
    even_cover_factor_check,
    even_shift_padded_oracle,
    even_shift_word_check,
    golden_mean_cyclic_count,
    golden_mean_entropy_estimate,
    golden_mean_spec,
    sft_gap_witness,
)
from .suites import SuiteReport, run_suite, suite_names

__version__ = "0.1.0"
