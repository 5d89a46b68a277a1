from ._core import (
    CnfGrammar,
    Error,
    Grammar,
    ambiguity_identities_hold,
    enumerate,
    extract_dual,
    factor,
    find_recurrence,
    load_grammar,
    parse_grammar,
    parse_parity,
    quotient_grammar,
    run_cli,
    series_of_words,
    to_cnf,
    validate,
)

__all__ = [
    "CnfGrammar",
    "Error",
    "Grammar",
    "ambiguity_identities_hold",
    "enumerate",
    "extract_dual",
    "factor",
    "find_recurrence",
    "load_grammar",
    "parse_grammar",
    "parse_parity",
    "quotient_grammar",
    "run_cli",
    "series_of_words",
    "to_cnf",
    "validate",
]
