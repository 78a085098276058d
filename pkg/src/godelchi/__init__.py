"""Generalised Euler characteristics and tautology checking for Gödel logic."""

from .characteristics import (
    ChiReport,
    chi,
    chi_vector,
    equivalent,
    is_tautology_Ginf,
    is_tautology_Gk,
)
from .counting import P, T, table, tree_table
from .estimator import GodelCharacteristic, check_formulas
from .formula import (
    And,
    Bot,
    Formula,
    Implies,
    Neg,
    Or,
    ParseError,
    Top,
    Var,
    max_var,
    parse,
    rename,
    to_string,
)
from .patterns import (
    OrderPattern,
    Permutation,
    ResourceGuardError,
    apply_perm,
    canonical_assignment,
    enumerate_patterns,
    parent,
    pattern_of,
    satisfies,
)
from .semantics import LevelAssignment, boolean_models, evaluate, is_true

__version__ = "0.1.0"
