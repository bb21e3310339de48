"""Frame-class-aware satisfiability and validity via a labelled tableau.

The input is first freed of announcements, then of Kw (Kw[i]g becomes
K[i]g | K[i]~g in general; over partial-functional frames Kw[i]g holds
everywhere and becomes top), taken to negation normal form and run
through a tableau whose accessibility relations are kept closed under
the frame conditions of the requested class.  A satisfiable verdict
carries a pointed model that has been re-checked against the original
formula with the model checker; nothing is returned on faith.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .formula import (
    BOT,
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
    agents_of,
    classify_language,
    props_of,
)
from .semantics import (
    FrameClass,
    FrameProperty,
    KripkeModel,
    frame_properties,
    mc,
)
from .translate import reduce


class BudgetExceeded(Exception):
    """The tableau ran out of node budget before reaching a verdict."""


@dataclass(frozen=True)
class DecisionResult:
    satisfiable: bool
    model: Optional[KripkeModel]
    prefixes: int
    branches: int


@dataclass(frozen=True)
class Validity:
    valid: bool
    countermodel: Optional[KripkeModel]
    prefixes: int
    branches: int


@dataclass(frozen=True)
class _Dia(Formula):
    """Internal NNF-only dual of K; never rendered."""

    agent: str
    sub: Formula


# ---------------------------------------------------------------------------
# preprocessing


def _kw_free(f: Formula) -> Formula:
    """Replace Kw[i]g by K[i]g' | K[i]~g' throughout (announcement-free input)."""
    match f:
        case Top() | Bot() | Prop(_):
            return f
        case Not(sub):
            return Not(_kw_free(sub))
        case And(a, b):
            return And(_kw_free(a), _kw_free(b))
        case Or(a, b):
            return Or(_kw_free(a), _kw_free(b))
        case Implies(a, b):
            return Implies(_kw_free(a), _kw_free(b))
        case Iff(a, b):
            return Iff(_kw_free(a), _kw_free(b))
        case K(agent, sub):
            return K(agent, _kw_free(sub))
        case Kw(agent, sub):
            inner = _kw_free(sub)
            return Or(K(agent, inner), K(agent, Not(inner)))
    raise TypeError(f"not a formula: {f!r}")


def _kw_top(f: Formula) -> Formula:
    """Replace every Kw subformula by top (an equivalence on partial-functional frames)."""
    match f:
        case Top() | Bot() | Prop(_):
            return f
        case Not(sub):
            return Not(_kw_top(sub))
        case And(a, b):
            return And(_kw_top(a), _kw_top(b))
        case Or(a, b):
            return Or(_kw_top(a), _kw_top(b))
        case Implies(a, b):
            return Implies(_kw_top(a), _kw_top(b))
        case Iff(a, b):
            return Iff(_kw_top(a), _kw_top(b))
        case K(agent, sub):
            return K(agent, _kw_top(sub))
        case Kw(_, _):
            return TOP
    raise TypeError(f"not a formula: {f!r}")


def _nnf(f: Formula) -> Formula:
    match f:
        case Top() | Bot() | Prop(_):
            return f
        case Not(sub):
            return _nnf_neg(sub)
        case And(a, b):
            return And(_nnf(a), _nnf(b))
        case Or(a, b):
            return Or(_nnf(a), _nnf(b))
        case Implies(a, b):
            return Or(_nnf_neg(a), _nnf(b))
        case Iff(a, b):
            return Or(And(_nnf(a), _nnf(b)), And(_nnf_neg(a), _nnf_neg(b)))
        case K(agent, sub):
            return K(agent, _nnf(sub))
    raise TypeError(f"not a formula: {f!r}")


def _nnf_neg(f: Formula) -> Formula:
    match f:
        case Top():
            return BOT
        case Bot():
            return TOP
        case Prop(_):
            return Not(f)
        case Not(sub):
            return _nnf(sub)
        case And(a, b):
            return Or(_nnf_neg(a), _nnf_neg(b))
        case Or(a, b):
            return And(_nnf_neg(a), _nnf_neg(b))
        case Implies(a, b):
            return And(_nnf(a), _nnf_neg(b))
        case Iff(a, b):
            return Or(And(_nnf(a), _nnf_neg(b)), And(_nnf_neg(a), _nnf(b)))
        case K(agent, sub):
            return _Dia(agent, _nnf_neg(sub))
    raise TypeError(f"not a formula: {f!r}")


def _compl(f: Formula) -> Formula:
    """Negation of a formula already in negation normal form, again in NNF."""
    match f:
        case Top():
            return BOT
        case Bot():
            return TOP
        case Prop(_):
            return Not(f)
        case Not(sub):
            return sub
        case And(a, b):
            return Or(_compl(a), _compl(b))
        case Or(a, b):
            return And(_compl(a), _compl(b))
        case K(agent, sub):
            return _Dia(agent, _compl(sub))
        case _Dia(agent, sub):
            return K(agent, _compl(sub))
    raise TypeError(f"not in negation normal form: {f!r}")


# ---------------------------------------------------------------------------
# relation closure


def _close(worlds, pairs, props) -> set:
    """Least superset of pairs closed under the Horn frame conditions in props."""
    closed = set(pairs)
    if FrameProperty.REFLEXIVE in props:
        closed |= {(w, w) for w in worlds}
    while True:
        new = set()
        if FrameProperty.SYMMETRIC in props:
            new |= {(t, s) for (s, t) in closed} - closed
        if FrameProperty.TRANSITIVE in props:
            new |= {(s, u) for (s, t) in closed for (t2, u) in closed if t == t2} - closed
        if FrameProperty.EUCLIDEAN in props:
            new |= {(t, u) for (s, t) in closed for (s2, u) in closed if s == s2} - closed
        if not new:
            return closed
        closed |= new


# ---------------------------------------------------------------------------
# branch state


class _Branch:
    __slots__ = ("worlds", "labels", "base", "boxes", "fired", "det", "splits", "next_id")

    def __init__(self):
        self.worlds: list[int] = []
        self.labels: dict[int, set] = {}
        self.base: dict[str, set] = {}
        self.boxes: dict[tuple, set] = {}
        self.fired: set = set()
        self.det: deque = deque()
        self.splits: list = []
        self.next_id = 0

    def copy(self) -> "_Branch":
        br = _Branch.__new__(_Branch)
        br.worlds = list(self.worlds)
        br.labels = {w: set(s) for w, s in self.labels.items()}
        br.base = {a: set(p) for a, p in self.base.items()}
        br.boxes = {k: set(s) for k, s in self.boxes.items()}
        br.fired = set(self.fired)
        br.det = deque(self.det)
        br.splits = list(self.splits)
        br.next_id = self.next_id
        return br


_CLOSED = "closed"


class _Tableau:
    def __init__(self, props, agents, budget, pf):
        self.props = props
        self.agents = agents
        self.budget = budget
        self.pf = pf
        self.blocking = bool(props & {FrameProperty.TRANSITIVE, FrameProperty.EUCLIDEAN})
        self.prefixes = 0
        self.branches = 0
        self.work = 0

    def _tick(self):
        self.work += 1
        if self.work > self.budget:
            raise BudgetExceeded(f"tableau budget of {self.budget} nodes exhausted")

    def _closed_rel(self, br, agent):
        return _close(br.worlds, br.base.get(agent, set()), self.props)

    def _new_world(self, br) -> int:
        w = br.next_id
        br.next_id += 1
        br.worlds.append(w)
        br.labels[w] = set()
        self.prefixes += 1
        self._tick()
        return w

    def _add(self, br, w, f):
        if f in br.labels[w]:
            return
        self._tick()
        br.labels[w].add(f)
        br.det.append((w, f))

    def _add_edge(self, br, agent, u, v):
        br.base.setdefault(agent, set()).add((u, v))
        # boxes re-fire over the whole closed relation; _add deduplicates
        closed = self._closed_rel(br, agent)
        for (x, y) in closed:
            for body in br.boxes.get((x, agent), ()):
                self._add(br, y, body)

    def _saturate(self, br) -> Optional[str]:
        while br.det:
            w, f = br.det.popleft()
            match f:
                case Bot():
                    return _CLOSED
                case Top():
                    pass
                case Prop(_):
                    if Not(f) in br.labels[w]:
                        return _CLOSED
                case Not(sub):
                    if sub in br.labels[w]:
                        return _CLOSED
                case And(a, b):
                    self._add(br, w, a)
                    self._add(br, w, b)
                case Or(_, _):
                    br.splits.append((w, f))
                case K(agent, body):
                    br.boxes.setdefault((w, agent), set()).add(body)
                    for (x, y) in self._closed_rel(br, agent):
                        if x == w:
                            self._add(br, y, body)
                case _Dia(_, _):
                    pass
        return None

    def _blocker(self, br, w) -> Optional[int]:
        for u in br.worlds:
            if u == w:
                return None
            if br.labels[u] == br.labels[w]:
                return u
        return None

    def _fire_one(self, br) -> bool:
        """Expand one diamond (or one seriality obligation); True when progress was made."""
        if self.pf:
            return self._fire_one_pf(br)
        for w in br.worlds:
            dias = [f for f in br.labels[w]
                    if isinstance(f, _Dia) and (w, f) not in br.fired]
            if not dias:
                continue
            if self.blocking and self._blocker(br, w) is not None:
                continue
            f = dias[0]
            v = self._new_world(br)
            br.fired.add((w, f))
            self._add(br, v, f.sub)
            self._add_edge(br, f.agent, w, v)
            return True
        if FrameProperty.SERIAL in self.props:
            for w in br.worlds:
                for agent in self.agents:
                    if not br.boxes.get((w, agent)):
                        continue
                    if any(x == w for (x, _) in self._closed_rel(br, agent)):
                        continue
                    v = self._new_world(br)
                    self._add_edge(br, agent, w, v)
                    return True
        return False

    def _fire_one_pf(self, br) -> bool:
        # at most one successor per world and agent: all diamonds share it
        for w in br.worlds:
            for agent in self.agents:
                dias = [f for f in br.labels[w]
                        if isinstance(f, _Dia) and f.agent == agent and (w, f) not in br.fired]
                if not dias:
                    continue
                succ = [y for (x, y) in br.base.get(agent, set()) if x == w]
                v = succ[0] if succ else self._new_world(br)
                if not succ:
                    self._add_edge(br, agent, w, v)
                for f in dias:
                    br.fired.add((w, f))
                    self._add(br, v, f.sub)
                return True
        return False

    def _resolve_splits(self, br):
        """Discharge pending disjunctions that need no branching.

        A split whose disjunct is already on the label is satisfied and
        dropped; one refuted disjunct forces the other (unit propagation);
        two refuted disjuncts close the branch.  Returns _CLOSED, True when
        something was propagated, or False when only genuine splits remain.
        """
        pending = []
        progress = False
        for w, f in br.splits:
            labs = br.labels[w]
            if f.left in labs or f.right in labs:
                continue
            left_out = _compl(f.left) in labs
            right_out = _compl(f.right) in labs
            if left_out and right_out:
                return _CLOSED
            if left_out:
                self._add(br, w, f.right)
                progress = True
            elif right_out:
                self._add(br, w, f.left)
                progress = True
            else:
                pending.append((w, f))
        br.splits = pending
        return progress

    def search(self, br) -> Optional[_Branch]:
        while True:
            if self._saturate(br) == _CLOSED:
                self.branches += 1
                return None
            resolved = self._resolve_splits(br)
            if resolved == _CLOSED:
                self.branches += 1
                return None
            if resolved:
                continue
            if br.splits:
                w, f = br.splits.pop()
                for piece in (f.left, f.right):
                    child = br.copy()
                    self._add(child, w, piece)
                    found = self.search(child)
                    if found is not None:
                        return found
                return None
            if not self._fire_one(br):
                self.branches += 1
                return br

    def solve(self, root: Formula) -> Optional[_Branch]:
        br = _Branch()
        w0 = self._new_world(br)
        self._add(br, w0, root)
        return self.search(br)

    def extract(self, br, original: Formula, requirements) -> KripkeModel:
        if self.blocking:
            rep = {w: next(u for u in br.worlds if br.labels[u] == br.labels[w])
                   for w in br.worlds}
        else:
            rep = {w: w for w in br.worlds}
        keep = [w for w in br.worlds if rep[w] == w]
        name = {w: f"w{idx}" for idx, w in enumerate(keep)}
        rel = {}
        for agent in self.agents:
            pairs = {(rep[x], rep[y]) for (x, y) in br.base.get(agent, set())}
            closed = _close(keep, pairs, self.props)
            if FrameProperty.SERIAL in self.props:
                for w in keep:
                    if not any(x == w for (x, _) in closed):
                        closed.add((w, w))
            rel[agent] = [(name[x], name[y]) for (x, y) in sorted(closed)]
        val = {p: [name[w] for w in keep if Prop(p) in br.labels[w]]
               for p in sorted(props_of(original))}
        point = name[rep[br.worlds[0]]]
        model = KripkeModel([name[w] for w in keep], self.agents, rel, val, point=point)
        if not mc(model, point, original):
            raise RuntimeError(f"internal error: extracted model fails {original}")
        if not requirements <= frame_properties(model):
            raise RuntimeError("internal error: extracted model leaves the frame class")
        return model


# ---------------------------------------------------------------------------
# entry points


def sat(f: Formula, frame_class: FrameClass, *, budget: int = 10**6) -> DecisionResult:
    """Satisfiability of f over the class; a SAT verdict carries a verified model."""
    lang = classify_language(f)
    if lang == Language.PLKwAK:
        raise ValueError("announcements together with K are not supported")
    g = reduce(f) if lang == Language.PLKwA else f
    requirements = frame_class.requirements
    pf = FrameProperty.PARTIAL_FUNCTIONAL in requirements
    root = _nnf(_kw_top(g) if pf else _kw_free(g))
    agents = sorted(agents_of(f))
    tab = _Tableau(requirements - {FrameProperty.PARTIAL_FUNCTIONAL}, agents, budget, pf)
    open_branch = tab.solve(root)
    if open_branch is None:
        return DecisionResult(False, None, tab.prefixes, tab.branches)
    model = tab.extract(open_branch, f, requirements)
    return DecisionResult(True, model, tab.prefixes, tab.branches)


def valid(f: Formula, frame_class: FrameClass, *, budget: int = 10**6) -> Validity:
    """Validity of f over the class; an invalid verdict carries a countermodel."""
    r = sat(Not(f), frame_class, budget=budget)
    return Validity(not r.satisfiable, r.model, r.prefixes, r.branches)
