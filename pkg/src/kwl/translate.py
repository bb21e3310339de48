"""Embeddings between the Kw and K languages, and announcement elimination.

kw_to_el rewrites Kw[i]g as K[i]g | K[i]~g and is truth preserving on every
model.  el_to_kw rewrites K[i]g as g & Kw[i]g and is truth preserving on
reflexive models only (on a non-reflexive model the conjunct g can fail at
the evaluation world while K[i]g holds).  reduce eliminates announcements
with the usual reduction equivalences, asserting on every rewrite that the
weighted complexity of the redex strictly drops.
"""

from __future__ import annotations

from .formula import (
    TOP,
    And,
    Announce,
    Bot,
    Formula,
    Iff,
    Implies,
    K,
    Kw,
    Language,
    Not,
    Or,
    Prop,
    Top,
    complexity,
    in_language,
)


def kw_to_el(f: Formula) -> Formula:
    """Kw[i]g becomes K[i]g' | K[i]~g'; Boolean structure is untouched."""
    match f:
        case Top() | Bot() | Prop(_):
            return f
        case Not(sub):
            return Not(kw_to_el(sub))
        case And(a, b):
            return And(kw_to_el(a), kw_to_el(b))
        case Or(a, b):
            return Or(kw_to_el(a), kw_to_el(b))
        case Implies(a, b):
            return Implies(kw_to_el(a), kw_to_el(b))
        case Iff(a, b):
            return Iff(kw_to_el(a), kw_to_el(b))
        case Kw(agent, sub):
            inner = kw_to_el(sub)
            return Or(K(agent, inner), K(agent, Not(inner)))
    raise ValueError(f"kw_to_el is defined on the Kw language, got: {f}")


def el_to_kw(f: Formula) -> Formula:
    """K[i]g becomes g' & Kw[i]g'; faithful on reflexive models only."""
    match f:
        case Top() | Bot() | Prop(_):
            return f
        case Not(sub):
            return Not(el_to_kw(sub))
        case And(a, b):
            return And(el_to_kw(a), el_to_kw(b))
        case Or(a, b):
            return Or(el_to_kw(a), el_to_kw(b))
        case Implies(a, b):
            return Implies(el_to_kw(a), el_to_kw(b))
        case Iff(a, b):
            return Iff(el_to_kw(a), el_to_kw(b))
        case K(agent, sub):
            inner = el_to_kw(sub)
            return And(inner, Kw(agent, inner))
    raise ValueError(f"el_to_kw is defined on the K-only language, got: {f}")


# ---------------------------------------------------------------------------
# announcement elimination


def reduce(f: Formula) -> Formula:
    """Announcement-free equivalent of f; rejects formulas mentioning K."""
    if not in_language(f, Language.PLKwA):
        raise ValueError(f"reduce handles the Kw language with announcements, got: {f}")
    return _reduce(f)


def _reduce(f: Formula) -> Formula:
    match f:
        case Top() | Bot() | Prop(_):
            return f
        case Not(sub):
            return Not(_reduce(sub))
        case And(a, b):
            return And(_reduce(a), _reduce(b))
        case Or(a, b):
            return Or(_reduce(a), _reduce(b))
        case Implies(a, b):
            return Implies(_reduce(a), _reduce(b))
        case Iff(a, b):
            return Iff(_reduce(a), _reduce(b))
        case Kw(agent, sub):
            return Kw(agent, _reduce(sub))
        case Announce(announced, body):
            # innermost-first on the announced part, then peel the redex
            return _eliminate(_reduce(announced), body)
    raise TypeError(f"not a formula: {f!r}")


def _step(announced: Formula, body: Formula) -> Formula:
    """One rewrite of the redex [announced]body, dispatching on the body."""
    match body:
        case Top():
            return TOP
        case Bot():
            return Not(announced)
        case Prop(_):
            return Implies(announced, body)
        case Not(sub):
            return Implies(announced, Not(Announce(announced, sub)))
        case And(a, b):
            return And(Announce(announced, a), Announce(announced, b))
        case Or(a, b):
            return Or(Announce(announced, a), Announce(announced, b))
        case Implies(a, b):
            return Implies(Announce(announced, a), Announce(announced, b))
        case Iff(a, b):
            return Iff(Announce(announced, a), Announce(announced, b))
        case Kw(agent, sub):
            return Implies(
                announced,
                Or(Kw(agent, Announce(announced, sub)),
                   Kw(agent, Announce(announced, Not(sub)))))
        case Announce(inner, sub):
            return Announce(And(announced, Announce(announced, inner)), sub)
    raise TypeError(f"not a formula: {body!r}")


def _eliminate(announced: Formula, body: Formula) -> Formula:
    redex = Announce(announced, body)
    out = _step(announced, body)
    assert complexity(out) < complexity(redex), f"rewrite did not shrink: {redex}"
    return _reduce(out)
