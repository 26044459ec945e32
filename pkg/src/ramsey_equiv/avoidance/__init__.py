from .arrows import (
    ARROWS,
    INCONCLUSIVE,
    NOT_ARROWS,
    STRATEGIES,
    ArrowingCertificate,
    decide_arrows,
    exhaustive_avoiding,
)
from .cnf import (
    CNF,
    SolverResult,
    decode_model,
    dpll_solve,
    encode_arrowing_cnf,
    parse_solver_output,
    read_dimacs,
    write_cnf_files,
)
from .known import (
    REGISTRY_NAMES,
    GuaranteeViolation,
    KnownColouring,
    best_construction,
    known_colouring,
    multicolour_step_up,
    two_colour_step_up,
)
from .search import (
    AvoidanceInfeasible,
    Target,
    contains_target,
    kn_free_complete_colouring,
    kn_free_with_source,
    search_avoiding_colouring,
)
