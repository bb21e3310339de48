"""Reasoning tools for epistemic logics of knowing whether.

Submodules:
  formula    AST, parser, printer, language classification
  semantics  Kripke models, model checking, frame properties
  translate  Kw/K translations and announcement reduction
  decide     satisfiability and validity over frame classes
  proof      Hilbert-style derivation checking
  fixtures   small models used throughout the test suite and docs
"""

from kwl.formula import (
    And,
    Announce,
    BOT,
    Bot,
    Formula,
    Iff,
    Implies,
    K,
    Kw,
    Language,
    Not,
    Or,
    ParseError,
    Prop,
    TOP,
    Top,
    classify_language,
    complexity,
    parse,
    render,
    substitute,
)
from kwl.semantics import (
    FrameClass,
    FrameProperty,
    KripkeModel,
    ModelError,
    frame_properties,
    frame_valid,
    load_model,
    mc,
    model_valid,
    satisfies_class,
)
from kwl.translate import el_to_kw, kw_to_el, reduce
from kwl.decide import BudgetExceeded, Validity, sat, valid
from kwl.proof import (
    AXIOMS,
    SYSTEMS,
    Derivation,
    DerivationError,
    Step,
    check_derivation,
    format_derivation,
    gen_prop19,
    load_derivation,
    parse_derivation,
)

__all__ = [
    "And", "Announce", "BOT", "Bot", "Formula", "Iff", "Implies", "K", "Kw",
    "Language", "Not", "Or", "ParseError", "Prop", "TOP", "Top",
    "classify_language", "complexity", "parse", "render", "substitute",
    "FrameClass", "FrameProperty", "KripkeModel", "ModelError",
    "frame_properties", "frame_valid", "load_model", "mc", "model_valid",
    "satisfies_class",
    "el_to_kw", "kw_to_el", "reduce",
    "BudgetExceeded", "Validity", "sat", "valid",
    "AXIOMS", "SYSTEMS", "Derivation", "DerivationError", "Step",
    "check_derivation", "format_derivation", "gen_prop19", "load_derivation",
    "parse_derivation",
]

__version__ = "0.1.0"
