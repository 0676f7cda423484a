"""Exact arithmetic toolkit for alternate-base numeration systems."""
from .automata import (
    BuchiAutomaton,
    BuildOutcome,
    accepts,
    build_real_zero_automaton,
    build_zero_automaton,
    export,
    from_json,
    group_blocks,
)
from .expansion import (
    AlternateBase,
    ExpansionResult,
    greedy_expand,
    greedy_remainder,
    is_admissible,
    is_parry,
    quasi_greedy_expand_one,
    shift_base,
    value,
)
from .normalization import (
    build_converter,
    build_greedy_automaton,
    build_normalization_automaton,
    normalize,
)
from .numberfield import (
    ComplexInterval,
    FieldElement,
    NumberField,
    conjugate_embed,
    elem_arith,
    field_new,
    field_norm,
    floor_elem,
    is_pisot,
    sign,
)
from .polysystem import (
    align,
    associated_polynomial,
    build_matrix,
    check_series_identity,
    delta_polynomial,
    recover_bases,
)
from .spectrum import (
    AlphabetTuple,
    SpectrumLevel,
    bound_M,
    bound_m,
    grouped_alphabet,
    min_gap,
    parse_alphabets,
    separation_bound,
    spectrum_level,
)
from .words import (
    EventuallyPeriodicWord,
    FiniteWord,
    canonicalize,
    lex_less,
    parse_word,
    shift_word,
    word,
    zip_pair,
)

__version__ = "0.1.0"
