"""Kripke models, model checking, announcements, and frame properties."""

from __future__ import annotations

import json
from enum import Enum
from typing import Iterable, Optional

from kwl.formula import (
    And,
    Announce,
    Bot,
    Formula,
    Iff,
    Implies,
    K,
    Kw,
    Not,
    Or,
    Prop,
    Top,
    props_of,
)


class FrameProperty(Enum):
    SERIAL = "serial"
    REFLEXIVE = "reflexive"
    SYMMETRIC = "symmetric"
    TRANSITIVE = "transitive"
    EUCLIDEAN = "euclidean"
    PARTIAL_FUNCTIONAL = "partial-functional"


class FrameClass(Enum):
    K = "K"
    D = "D"
    T = "T"
    B = "B"
    K4 = "K4"
    K5 = "K5"
    K45 = "K45"
    S4 = "S4"
    S5 = "S5"
    PF = "PF"

    @property
    def requirements(self) -> frozenset[FrameProperty]:
        return _CLASS_REQUIREMENTS[self]

    @classmethod
    def parse(cls, name: str) -> "FrameClass":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown frame class {name!r}; "
                             f"one of {', '.join(c.name for c in cls)}") from None


_P = FrameProperty
_CLASS_REQUIREMENTS = {
    FrameClass.K: frozenset(),
    FrameClass.D: frozenset({_P.SERIAL}),
    FrameClass.T: frozenset({_P.REFLEXIVE}),
    FrameClass.B: frozenset({_P.SYMMETRIC}),
    FrameClass.K4: frozenset({_P.TRANSITIVE}),
    FrameClass.K5: frozenset({_P.EUCLIDEAN}),
    FrameClass.K45: frozenset({_P.TRANSITIVE, _P.EUCLIDEAN}),
    FrameClass.S4: frozenset({_P.REFLEXIVE, _P.TRANSITIVE}),
    FrameClass.S5: frozenset({_P.REFLEXIVE, _P.EUCLIDEAN}),
    FrameClass.PF: frozenset({_P.PARTIAL_FUNCTIONAL}),
}


class ModelError(ValueError):
    pass


class KripkeModel:
    """Finite pointed-less Kripke model.

    worlds: ordered, duplicate-free world names.
    rel: agent -> set of (source, target) pairs.
    val: proposition -> set of worlds where it is true.
    Order of the worlds list is preserved through JSON round trips so that
    countermodels print stably.
    """

    def __init__(self, worlds: Iterable[str], agents: Iterable[str],
                 rel: dict[str, Iterable[tuple[str, str]]],
                 val: dict[str, Iterable[str]],
                 point: Optional[str] = None):
        self.worlds = tuple(worlds)
        self.agents = tuple(agents)
        if not self.worlds:
            raise ModelError("a model needs at least one world")
        if len(set(self.worlds)) != len(self.worlds):
            raise ModelError("duplicate world names")
        if len(set(self.agents)) != len(self.agents):
            raise ModelError("duplicate agent names")
        wset = set(self.worlds)
        self.rel: dict[str, frozenset[tuple[str, str]]] = {}
        for agent, pairs in rel.items():
            if agent not in self.agents:
                raise ModelError(f"relation for undeclared agent {agent!r}")
            pairs = frozenset((s, t) for s, t in pairs)
            for s, t in pairs:
                if s not in wset or t not in wset:
                    raise ModelError(f"edge ({s!r}, {t!r}) mentions an unknown world")
            self.rel[agent] = pairs
        for agent in self.agents:
            self.rel.setdefault(agent, frozenset())
        self.val: dict[str, frozenset[str]] = {}
        for prop, where in val.items():
            where = frozenset(where)
            if not where <= wset:
                raise ModelError(f"valuation of {prop!r} mentions unknown worlds")
            self.val[prop] = where
        if point is not None and point not in wset:
            raise ModelError(f"point {point!r} is not a world")
        self.point = point

    def successors(self, agent: str, world: str) -> frozenset[str]:
        return frozenset(t for s, t in self.rel.get(agent, ()) if s == world)

    def frame_props(self) -> set["FrameProperty"]:
        return frame_properties(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KripkeModel):
            return NotImplemented
        return (self.worlds == other.worlds and self.agents == other.agents
                and self.rel == other.rel and self.val == other.val
                and self.point == other.point)

    def __repr__(self) -> str:
        return (f"KripkeModel(worlds={list(self.worlds)}, agents={list(self.agents)}, "
                f"rel={{{', '.join(f'{a!r}: {sorted(p)}' for a, p in self.rel.items())}}}, "
                f"val={{{', '.join(f'{p!r}: {sorted(w)}' for p, w in sorted(self.val.items()))}}})")

    # -- JSON ----------------------------------------------------------------

    def to_dict(self) -> dict:
        order = {w: n for n, w in enumerate(self.worlds)}
        doc = {
            "worlds": list(self.worlds),
            "agents": list(self.agents),
            "rel": {a: sorted([list(e) for e in self.rel[a]],
                              key=lambda e: (order[e[0]], order[e[1]]))
                    for a in self.agents},
            "val": {p: sorted(self.val[p], key=order.__getitem__)
                    for p in sorted(self.val)},
        }
        if self.point is not None:
            doc["point"] = self.point
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "KripkeModel":
        try:
            worlds = data["worlds"]
            agents = data["agents"]
            rel = {a: [tuple(e) for e in edges] for a, edges in data.get("rel", {}).items()}
            val = data.get("val", {})
            point = data.get("point")
        except (TypeError, KeyError) as exc:
            raise ModelError(f"malformed model document: {exc}") from None
        return cls(worlds, agents, rel, val, point=point)

    @classmethod
    def from_json(cls, text: str) -> "KripkeModel":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ModelError(f"not valid JSON: {exc}") from None
        return cls.from_dict(data)


def load_model(path) -> KripkeModel:
    with open(path, encoding="utf-8") as fh:
        return KripkeModel.from_json(fh.read())


# ---------------------------------------------------------------------------
# model checking


def mc(model: KripkeModel, world: str, f: Formula) -> bool:
    """Truth of f at world.  Announcements restrict the model on the fly;
    the restriction is only entered when the announcement holds at world,
    so it is never empty."""
    if world not in model.worlds:
        raise ModelError(f"unknown world {world!r}")
    return _mc(model, world, f)


def _mc(m: KripkeModel, w: str, f: Formula) -> bool:
    match f:
        case Top():
            return True
        case Bot():
            return False
        case Prop(name):
            return w in m.val.get(name, frozenset())
        case Not(sub):
            return not _mc(m, w, sub)
        case And(a, b):
            return _mc(m, w, a) and _mc(m, w, b)
        case Or(a, b):
            return _mc(m, w, a) or _mc(m, w, b)
        case Implies(a, b):
            return (not _mc(m, w, a)) or _mc(m, w, b)
        case Iff(a, b):
            return _mc(m, w, a) == _mc(m, w, b)
        case K(agent, sub):
            return all(_mc(m, t, sub) for t in m.successors(agent, w))
        case Kw(agent, sub):
            values = {_mc(m, t, sub) for t in m.successors(agent, w)}
            return len(values) <= 1
        case Announce(announced, body):
            if not _mc(m, w, announced):
                return True
            sub = restrict(m, announced)
            assert sub is not None
            return _mc(sub, w, body)
    raise TypeError(f"not a formula: {f!r}")


def restrict(model: KripkeModel, f: Formula) -> Optional[KripkeModel]:
    """Submodel on the worlds satisfying f, or None when no world does."""
    keep = [w for w in model.worlds if _mc(model, w, f)]
    if not keep:
        return None
    kset = set(keep)
    return KripkeModel(
        keep,
        model.agents,
        {a: [(s, t) for s, t in pairs if s in kset and t in kset]
         for a, pairs in model.rel.items()},
        {p: where & kset for p, where in model.val.items()},
        point=model.point if model.point in kset else None,
    )


def model_valid(model: KripkeModel, f: Formula) -> bool:
    return all(_mc(model, w, f) for w in model.worlds)


def frame_valid(model: KripkeModel, f: Formula, *, max_bits: int = 20) -> bool:
    """Truth of f at every world under every valuation of its propositions
    over the model's frame.  Exhaustive, so the number of proposition/world
    bits is capped."""
    props = sorted(props_of(f))
    bits = len(props) * len(model.worlds)
    if bits > max_bits:
        raise ValueError(f"{bits} valuation bits exceed the cap of {max_bits}")
    for mask in range(1 << bits):
        val = {}
        for i, p in enumerate(props):
            chunk = (mask >> (i * len(model.worlds)))
            val[p] = [w for j, w in enumerate(model.worlds) if (chunk >> j) & 1]
        candidate = KripkeModel(model.worlds, model.agents, model.rel, val)
        if not model_valid(candidate, f):
            return False
    return True


# ---------------------------------------------------------------------------
# frame properties


def _relation_properties(worlds: tuple[str, ...], pairs: frozenset) -> set[FrameProperty]:
    succ = {w: set() for w in worlds}
    for s, t in pairs:
        succ[s].add(t)
    props = set()
    if all(succ[w] for w in worlds):
        props.add(FrameProperty.SERIAL)
    if all(w in succ[w] for w in worlds):
        props.add(FrameProperty.REFLEXIVE)
    if all((t, s) in pairs for s, t in pairs):
        props.add(FrameProperty.SYMMETRIC)
    if all(u in succ[s] for s, t in pairs for u in succ[t]):
        props.add(FrameProperty.TRANSITIVE)
    if all(u in succ[t] for s in worlds for t in succ[s] for u in succ[s]):
        # sRt and sRu imply tRu
        props.add(FrameProperty.EUCLIDEAN)
    if all(len(succ[w]) <= 1 for w in worlds):
        props.add(FrameProperty.PARTIAL_FUNCTIONAL)
    return props


def frame_properties(model: KripkeModel) -> set[FrameProperty]:
    """Properties holding for every agent's relation."""
    out = None
    for agent in model.agents:
        props = _relation_properties(model.worlds, model.rel[agent])
        out = props if out is None else out & props
    return out if out is not None else set(FrameProperty)


def satisfies_class(model: KripkeModel, frame_class: FrameClass) -> bool:
    return frame_class.requirements <= frame_properties(model)
