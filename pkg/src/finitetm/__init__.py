"""Compile finite binary languages into Turing machines that halt within |w| + 1 steps."""

__version__ = "0.1.0"

from .compiler import (
    CompileGuardError,
    CompileOptions,
    compile_dense,
    compile_language,
    compile_trie,
    expected_dense_steps,
    prefix_state_index,
)
from .formats import MachineFormatError, machine_to_dot, parse_machine, serialize_machine
from .language import (
    FiniteLanguage,
    LanguageParseError,
    contains,
    max_word_length,
    parse_language,
    serialize_language,
)
from .tm import (
    Configuration,
    Direction,
    Machine,
    RunOutcome,
    StateId,
    Symbol,
    Verdict,
    initial_configuration,
    run,
    step,
    validate,
)
from .verifier import (
    VerificationReport,
    cross_check,
    flip_blank_read,
    random_language,
    verify_equivalence,
    verify_step_bound,
)
