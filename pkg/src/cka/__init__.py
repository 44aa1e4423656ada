"""Pomset model of Concurrent Kleene Algebra.

Partial strings (finite labelled partial orders) with sequential,
concurrent and weakly sequential composition; refinement decided by
exact monotone-bijection search; programs as downward-closed sets with
union, composition and bounded Kleene stars; linearization into word
languages; a term parser; and a brute-force-backed law suite.
"""

from .expr import (
    Expr,
    ExprError,
    LexicalError,
    Par,
    ParseError,
    ParStar,
    Seq,
    SeqStar,
    Sym,
    Token,
    Union,
    Zero,
    One,
    evaluate,
    parse,
    parse_text,
    pretty,
    tokenize,
)
from .language import Word, lang_subset, language, linearize
from .partial_string import (
    DependenceRelation,
    InvalidPartialString,
    Label,
    Morphism,
    PartialString,
    TextFormatError,
    chain,
    empty,
    exchange_holds,
    find_morphism,
    from_strict_pairs,
    from_text,
    hasse,
    isomorphic,
    par,
    refines,
    seq,
    singleton,
    to_dot,
    to_text,
    transitive_closure,
    validate,
    weakseq,
)
from .program import (
    Program,
    contains,
    equals,
    normalize_program,
    one,
    pcompose,
    program_from_text,
    program_of,
    program_to_text,
    punion,
    star,
    subset,
    zero,
)
from .testkit import (
    GenConfig,
    Law,
    LawReport,
    LawResult,
    LAWS,
    PROGRAM_ALGEBRA_LAW_NAMES,
    brute_force_refines,
    enumerate_all,
    law_suite,
    random_partial_string,
)

__version__ = "0.1.0"

__all__ = [
    "DependenceRelation",
    "Expr",
    "ExprError",
    "GenConfig",
    "InvalidPartialString",
    "Label",
    "Law",
    "LawReport",
    "LawResult",
    "LAWS",
    "LexicalError",
    "Morphism",
    "One",
    "Par",
    "ParseError",
    "ParStar",
    "PartialString",
    "Program",
    "Seq",
    "SeqStar",
    "Sym",
    "TextFormatError",
    "PROGRAM_ALGEBRA_LAW_NAMES",
    "Token",
    "Union",
    "Word",
    "Zero",
    "brute_force_refines",
    "chain",
    "contains",
    "empty",
    "enumerate_all",
    "equals",
    "evaluate",
    "exchange_holds",
    "find_morphism",
    "from_strict_pairs",
    "from_text",
    "hasse",
    "isomorphic",
    "lang_subset",
    "language",
    "law_suite",
    "linearize",
    "normalize_program",
    "one",
    "par",
    "parse",
    "parse_text",
    "pcompose",
    "pretty",
    "program_from_text",
    "program_of",
    "program_to_text",
    "punion",
    "random_partial_string",
    "refines",
    "seq",
    "singleton",
    "star",
    "subset",
    "to_dot",
    "to_text",
    "tokenize",
    "transitive_closure",
    "validate",
    "weakseq",
    "zero",
]
