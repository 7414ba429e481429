"""Coppersmith's small-root method and the capacity calculus that decides when
its auxiliary polynomials can exist."""

from .capacity import LogCapacity, Status, Verdict, compare_to_one, coppersmith_feasibility
from .coppersmith import Problem, solve, solve_report
from .errors import BoundNotCertified, CopperscopeError
from .lattice import gram_schmidt, lll_reduce

__version__ = "0.1.0"

__all__ = [
    "BoundNotCertified",
    "CopperscopeError",
    "LogCapacity",
    "Problem",
    "Status",
    "Verdict",
    "compare_to_one",
    "coppersmith_feasibility",
    "gram_schmidt",
    "lll_reduce",
    "solve",
    "solve_report",
]
