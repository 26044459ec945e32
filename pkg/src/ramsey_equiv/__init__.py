"""Executable constructions for the r-Ramsey equivalence of K_n and K_n + K_{n-1}."""

from .detect import BudgetExhausted, SearchBudget
from .graph import (
    CliqueWitness,
    DisjointPairWitness,
    EdgeColouring,
    Graph,
    ProblemSpec,
    complete_graph,
    validate_witness,
)

__version__ = "0.1.0"
