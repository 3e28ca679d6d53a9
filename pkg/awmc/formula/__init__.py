"""The language of knowledge and awareness: syntax, parser and enumeration."""
from awmc.formula.enumeration import count_formulas, enumerate_formulas, iter_formulas
from awmc.formula.parser import check_vocabulary, parse
from awmc.formula.syntax import (
    TOP,
    And,
    Atom,
    Aware,
    Formula,
    Iff,
    Implies,
    Knows,
    Not,
    Or,
    Top,
    Unaware,
    agents_of,
    atoms,
    aware,
    big_and,
    conj,
    depth,
    disj,
    iff,
    iff_parts,
    implies,
    is_normalized,
    knows,
    neg,
    normalize,
    substitute,
    to_text,
    unaware,
)

__all__ = [
    "Formula",
    "Top",
    "Atom",
    "Not",
    "And",
    "Knows",
    "Or",
    "Implies",
    "Iff",
    "Aware",
    "Unaware",
    "TOP",
    "parse",
    "check_vocabulary",
    "to_text",
    "normalize",
    "is_normalized",
    "atoms",
    "agents_of",
    "depth",
    "substitute",
    "iff_parts",
    "neg",
    "conj",
    "disj",
    "implies",
    "iff",
    "knows",
    "aware",
    "unaware",
    "big_and",
    "enumerate_formulas",
    "iter_formulas",
    "count_formulas",
]
