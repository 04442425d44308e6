"""Graded attribute implications over finite residuated chains with hedges."""
from .chain import (
    Hedge,
    ResiduatedChain,
    custom_chain,
    custom_hedge,
    globalization,
    identity,
    make_chain,
    make_hedge,
    verify_chain,
    verify_hedge,
)
from .context import (
    FormalContext,
    PseudoIntentSystem,
    closure,
    down,
    extract_base,
    is_complete,
    pseudo_intents,
    trivial_complete_set,
    truth_in_context,
    up,
    verify_pseudo_intent_system,
)
from .errors import (
    BudgetExceeded,
    ChainError,
    DegreeError,
    GradedError,
    InvariantViolation,
    NotApplicable,
    ParseError,
    PreconditionError,
    UniverseMismatch,
)
from .lset import LSet, Universe, enumerate_lsets, is_full_subset, multiple, subsethood, union
from .reduce import (
    ReductionStep,
    ReductionTrace,
    infl_construction,
    is_irreducible,
    prepare,
    reduce_to_irreducible,
    reduction_step,
    replay_trace,
)
from .theory import (
    Implication,
    Theory,
    entailment_degree,
    has_saturated_consequents,
    is_equivalent,
    is_model,
    is_nonredundant,
    is_witnessed,
    least_model,
    remove_redundant,
    saturate,
    truth_degree,
)

__version__ = "0.1.0"
