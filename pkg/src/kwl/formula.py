"""Formula AST, concrete syntax, and structural operations.

The core language is built from top, propositions, negation and conjunction,
plus the modalities Kw[i] ("the agent knows whether") and K[i] ("the agent
knows that") and public announcements [f]g.  bot, |, -> and <-> are first
class nodes as well, so parse/render round-trips keep the shape the user
wrote; only operations that need a small core (reduction, enumeration)
normalise them away.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Sequence


class Formula:
    """Base class; all nodes are frozen dataclasses with structural equality."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Prop(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Kw(Formula):
    agent: str
    sub: Formula


@dataclass(frozen=True)
class K(Formula):
    agent: str
    sub: Formula


@dataclass(frozen=True)
class Announce(Formula):
    announced: Formula
    body: Formula


TOP = Top()
BOT = Bot()

BINARY_TYPES = (And, Or, Implies, Iff)


def conj(parts: Sequence[Formula]) -> Formula:
    """Left-associated conjunction of a non-empty-or-empty sequence."""
    if not parts:
        return TOP
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts: Sequence[Formula]) -> Formula:
    if not parts:
        return BOT
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


# ---------------------------------------------------------------------------
# language classification


class Language(Enum):
    EL = "EL"
    PLKw = "PLKw"
    PLKwK = "PLKwK"
    PLKwA = "PLKwA"
    PLKwAK = "PLKwAK"


# operators admitted by each language tag
_ALLOWED = {
    Language.EL: {K},
    Language.PLKw: {Kw},
    Language.PLKwK: {K, Kw},
    Language.PLKwA: {Kw, Announce},
    Language.PLKwAK: {K, Kw, Announce},
}


def _operators(f: Formula, acc: set) -> set:
    match f:
        case Kw(_, sub) | K(_, sub):
            acc.add(type(f))
            _operators(sub, acc)
        case Not(sub):
            _operators(sub, acc)
        case And(a, b) | Or(a, b) | Implies(a, b) | Iff(a, b):
            _operators(a, acc)
            _operators(b, acc)
        case Announce(a, b):
            acc.add(Announce)
            _operators(a, acc)
            _operators(b, acc)
    return acc


def in_language(f: Formula, lang: Language) -> bool:
    return _operators(f, set()) <= _ALLOWED[lang]


def classify_language(f: Formula) -> Language:
    """Least language tag containing f.

    A purely Boolean formula sits in both EL and PLKw; EL is returned as the
    canonical answer for that corner.
    """
    ops = _operators(f, set())
    has_kw, has_k, has_ann = Kw in ops, K in ops, Announce in ops
    if has_ann:
        if has_k:
            return Language.PLKwAK
        return Language.PLKwA
    if has_kw and has_k:
        return Language.PLKwK
    if has_kw:
        return Language.PLKw
    return Language.EL


def props_of(f: Formula) -> set[str]:
    match f:
        case Prop(name):
            return {name}
        case Not(sub) | Kw(_, sub) | K(_, sub):
            return props_of(sub)
        case And(a, b) | Or(a, b) | Implies(a, b) | Iff(a, b) | Announce(a, b):
            return props_of(a) | props_of(b)
    return set()


def agents_of(f: Formula) -> set[str]:
    match f:
        case Kw(agent, sub) | K(agent, sub):
            return {agent} | agents_of(sub)
        case Not(sub):
            return agents_of(sub)
        case And(a, b) | Or(a, b) | Implies(a, b) | Iff(a, b) | Announce(a, b):
            return agents_of(a) | agents_of(b)
    return set()


# ---------------------------------------------------------------------------
# substitution


def substitute(f: Formula, prop: str, replacement: Formula) -> Formula:
    """Uniform substitution f[replacement/prop]."""
    match f:
        case Prop(name):
            return replacement if name == prop else f
        case Top() | Bot():
            return f
        case Not(sub):
            return Not(substitute(sub, prop, replacement))
        case Kw(agent, sub):
            return Kw(agent, substitute(sub, prop, replacement))
        case K(agent, sub):
            return K(agent, substitute(sub, prop, replacement))
        case And(a, b):
            return And(substitute(a, prop, replacement), substitute(b, prop, replacement))
        case Or(a, b):
            return Or(substitute(a, prop, replacement), substitute(b, prop, replacement))
        case Implies(a, b):
            return Implies(substitute(a, prop, replacement), substitute(b, prop, replacement))
        case Iff(a, b):
            return Iff(substitute(a, prop, replacement), substitute(b, prop, replacement))
        case Announce(a, b):
            return Announce(substitute(a, prop, replacement), substitute(b, prop, replacement))
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# complexity

# Weight of an announcement prefix.  The multiplicative clause is the usual
# one for announcement logics; the modal clause must weigh Kw/K heavier than
# negation (2 + c rather than 1 + c) or the Kw reduction axiom, whose right
# hand side mentions both [f]g and [f]~g, would not shrink.  reduce() asserts
# the strict decrease on every rewrite it performs.


def complexity(f: Formula) -> int:
    match f:
        case Top() | Bot() | Prop(_):
            return 1
        case Not(sub):
            return 1 + complexity(sub)
        case Kw(_, sub) | K(_, sub):
            return 2 + complexity(sub)
        case And(a, b) | Or(a, b) | Implies(a, b) | Iff(a, b):
            return 1 + max(complexity(a), complexity(b))
        case Announce(a, b):
            return (4 + complexity(a)) * complexity(b)
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<iff><->)"
    r"|(?P<arrow>->)"
    r"|(?P<op>[~&|()\[\]])"
    r"|(?P<word>[A-Za-z][A-Za-z0-9_]*)"
)

_IDENT_RE = re.compile(r"[a-z][a-z0-9_]*\Z")

_RESERVED = {"top", "bot", "Kw", "K"}


class ParseError(ValueError):
    """Syntax error carrying the byte offset and the expected-token set."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        detail = f"{message} at offset {offset}"
        if expected:
            detail += " (expected " + ", ".join(expected) + ")"
        super().__init__(detail)
        self.offset = offset
        self.expected = expected


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            toks.append((kind, m.group(), pos))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


class _Parser:
    """Recursive descent over the token list.

    Precedence, loosest first: <->, -> (right associative), |, &, then the
    unary prefixes ~, Kw[i], K[i] and [f].
    """

    def __init__(self, toks, props, agents):
        self.toks = toks
        self.pos = 0
        self.props = props
        self.agents = agents

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str):
        tok = self.next()
        if tok[0] != kind and tok[1] != kind:
            raise ParseError(f"unexpected {tok[1]!r}" if tok[1] else "unexpected end of input",
                             tok[2], (what,))
        return tok

    def formula(self) -> Formula:
        left = self.implication()
        if self.peek()[0] == "iff":
            self.next()
            return Iff(left, self.formula())
        return left

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek()[0] == "arrow":
            self.next()
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.peek()[1] == "|":
            self.next()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.peek()[1] == "&":
            self.next()
            left = And(left, self.unary())
        return left

    def agent_name(self) -> str:
        tok = self.expect("word", "agent name")
        name = tok[1]
        if not _IDENT_RE.match(name):
            raise ParseError(f"bad agent name {name!r}", tok[2], ("agent name",))
        if self.agents is not None and name not in self.agents:
            raise ParseError(f"unknown agent {name!r}", tok[2])
        return name

    def unary(self) -> Formula:
        kind, text, offset = self.peek()
        if text == "~":
            self.next()
            return Not(self.unary())
        if text == "[":
            self.next()
            announced = self.formula()
            self.expect("]", "]")
            return Announce(announced, self.unary())
        if text == "(":
            self.next()
            inner = self.formula()
            self.expect(")", ")")
            return inner
        if kind == "word":
            self.next()
            if text == "Kw" or text == "K":
                self.expect("[", "[")
                agent = self.agent_name()
                self.expect("]", "]")
                sub = self.unary()
                return Kw(agent, sub) if text == "Kw" else K(agent, sub)
            if text == "top":
                return TOP
            if text == "bot":
                return BOT
            if not _IDENT_RE.match(text):
                raise ParseError(f"bad proposition name {text!r}", offset)
            if self.props is not None and text not in self.props:
                raise ParseError(f"unknown proposition {text!r}", offset)
            return Prop(text)
        raise ParseError(f"unexpected {text!r}" if text else "unexpected end of input",
                         offset, ("~", "[", "(", "Kw", "K", "top", "bot", "proposition"))


def parse(text: str, *, props: Optional[set] = None, agents: Optional[set] = None) -> Formula:
    """Parse the ASCII syntax.  props/agents, when given, restrict the
    identifiers accepted (a declared-symbol session)."""
    parser = _Parser(_tokenize(text), props, agents)
    f = parser.formula()
    tok = parser.peek()
    if tok[0] != "eof":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return f


# ---------------------------------------------------------------------------
# rendering

_PREC_IFF = 0
_PREC_IMPLIES = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_UNARY = 4


def _prec(f: Formula) -> int:
    match f:
        case Iff(_, _):
            return _PREC_IFF
        case Implies(_, _):
            return _PREC_IMPLIES
        case Or(_, _):
            return _PREC_OR
        case And(_, _):
            return _PREC_AND
    return _PREC_UNARY


def _wrap(f: Formula, limit: int) -> str:
    s = render(f)
    if _prec(f) < limit:
        return "(" + s + ")"
    return s


def render(f: Formula) -> str:
    """Minimal-parenthesis concrete syntax; parse(render(f)) == f."""
    match f:
        case Top():
            return "top"
        case Bot():
            return "bot"
        case Prop(name):
            return name
        case Not(sub):
            return "~" + _wrap(sub, _PREC_UNARY)
        case Kw(agent, sub):
            return f"Kw[{agent}]" + _wrap(sub, _PREC_UNARY)
        case K(agent, sub):
            return f"K[{agent}]" + _wrap(sub, _PREC_UNARY)
        case Announce(announced, body):
            return "[" + render(announced) + "]" + _wrap(body, _PREC_UNARY)
        case And(a, b):
            # left associative: left child may sit at the same level
            return _wrap(a, _PREC_AND) + " & " + _wrap(b, _PREC_AND + 1)
        case Or(a, b):
            return _wrap(a, _PREC_OR) + " | " + _wrap(b, _PREC_OR + 1)
        case Implies(a, b):
            # right associative
            return _wrap(a, _PREC_IMPLIES + 1) + " -> " + _wrap(b, _PREC_IMPLIES)
        case Iff(a, b):
            return _wrap(a, _PREC_IFF + 1) + " <-> " + _wrap(b, _PREC_IFF)
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# enumeration

_CORE_MODALS = {
    Language.EL: (K,),
    Language.PLKw: (Kw,),
    Language.PLKwK: (Kw, K),
    Language.PLKwA: (Kw,),
    Language.PLKwAK: (Kw, K),
}


def enumerate_formulas(props: Sequence[str], agents: Sequence[str],
                       lang: Language, max_size: int) -> Iterator[Formula]:
    """All core-connective formulas (top, p, ~, &, modalities, and for the
    announcement languages [f]g) with at most max_size AST nodes, smallest
    first.  Every tree is produced exactly once."""
    modals = _CORE_MODALS[lang]
    announcements = lang in (Language.PLKwA, Language.PLKwAK)
    by_size: list[list[Formula]] = [[]]  # index 0 unused

    for size in range(1, max_size + 1):
        layer: list[Formula] = []
        if size == 1:
            layer.append(TOP)
            layer.extend(Prop(p) for p in props)
        else:
            for sub in by_size[size - 1]:
                layer.append(Not(sub))
            for mod in modals:
                for agent in agents:
                    for sub in by_size[size - 1]:
                        layer.append(mod(agent, sub))
            for left_size in range(1, size - 1):
                right_size = size - 1 - left_size
                for a in by_size[left_size]:
                    for b in by_size[right_size]:
                        layer.append(And(a, b))
                        if announcements:
                            layer.append(Announce(a, b))
        by_size.append(layer)
        yield from layer
