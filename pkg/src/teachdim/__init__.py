"""Teaching-dimension workbench for regular languages.

Concepts are regular languages given by canonical minimal DFAs over {0,1}
(complexity = state count), plus a toy bitstring-program class for the
budgeted-search learner. The package computes witness sets and biased
teaching dimensions, posterior updates over finite tabular classes,
expected teaching dimensions under batch-level sampling distributions,
and the universal-code machinery (gamma codec, budget series, dovetail
program search) that backs the budgeted learner.
"""

from importlib import resources

__version__ = "0.1.0"

from .automata import (
    Dfa,
    canonical_key,
    distinguishing_string,
    equivalent,
    format_dfa,
    is_canonical,
    minimize,
    parse_dfa,
    run,
    shortlex_key,
    strings_up_to,
    tightness_pair,
)
from .enumeration import (
    ENUMERATION_CAP,
    ConceptBatch,
    count_up_to,
    enumerate_batch,
    export_batch,
    parse_batch,
    random_concept,
)
from .errors import (
    ExhaustedSearchError,
    FormatError,
    NoWitnessError,
    NotCanonicalError,
    ResourceLimitError,
    TeachdimError,
)
from .teaching import (
    AMBIGUOUS,
    DEFAULT_SIZE_CAP,
    IDENTIFIED,
    NONE_CONSISTENT,
    ExampleSet,
    LabeledExample,
    LearnOutcome,
    PosteriorTrace,
    TabularClass,
    TeachingResult,
    btd,
    btd_tabular,
    consistent,
    examples_to_binary,
    format_examples,
    learn,
    parse_examples,
    parse_tabular,
    posterior,
    td_tabular,
)
from .sampling import (
    BatchDistribution,
    BoundSeries,
    BtdBoundProfile,
    ExactBtd,
    McEstimate,
    MonotoneResult,
    expected_btd_bound,
    expected_btd_exact,
    expected_btd_mc,
    format_dist,
    parse_dist,
    validate_monotone,
)
from .universal import (
    KtOutcome,
    KtTeachResult,
    TinyProgram,
    decode_program,
    disassemble,
    elias_decode,
    elias_encode,
    kt_learn,
    kt_teach,
    prop1_majorant,
    prop1_partial_sum,
    prop1_term,
    run_tiny,
    valid_programs,
)


def fixture_path(name: str):
    """Path of a bundled fixture file (tabular class, distributions, DFA pairs)."""
    return resources.files(__name__).joinpath("fixtures", name)
