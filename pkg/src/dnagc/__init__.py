"""DNA codes with constant GC-content: bounds, lexicographic and product constructions."""
from .bounds import Bound, Registry, best_bounds, johnson_upper
from .codes import Code, CodeParams, ConstraintKind
from .lexicode import construct, register_result
from .verify import exact_max_code, verify
from .words import DnaWord, Factored, Single, parse_word

__all__ = [
    "Bound",
    "Code",
    "CodeParams",
    "ConstraintKind",
    "DnaWord",
    "Factored",
    "Registry",
    "Single",
    "best_bounds",
    "construct",
    "exact_max_code",
    "johnson_upper",
    "parse_word",
    "register_result",
    "verify",
]
