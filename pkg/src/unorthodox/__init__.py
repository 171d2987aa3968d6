"""Workbench for the five unorthodox algebras A1..A5 and the variety/logic
they generate: validated operation tables, a term language, identity
checking, structural analysis, the 32-element subvariety lattice, and the
matching propositional logic with its 30 axiomatic-extension bases.
"""

from .algebra import (
    AlgebraError, FiniteAlgebra, axiom_profile, builtin, builtins, from_json,
    height, in_variety, trivial, validate,
)
from .identities import holds, holds_quasi, profile, verify_catalog
from .terms import Equation, eval_term, parse_equation, parse_term, term_to_text

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "FiniteAlgebra", "axiom_profile", "builtin", "builtins",
    "from_json", "height", "in_variety", "trivial", "validate",
    "holds", "holds_quasi", "profile", "verify_catalog",
    "Equation", "eval_term", "parse_equation", "parse_term", "term_to_text",
]
