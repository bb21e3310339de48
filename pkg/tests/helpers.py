"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import pathlib

from kwl.formula import (
    BOT,
    TOP,
    And,
    Announce,
    Formula,
    Iff,
    Implies,
    K,
    Kw,
    Language,
    Not,
    Or,
    Prop,
)
from kwl.semantics import FrameClass, FrameProperty, KripkeModel, satisfies_class

ROOT = pathlib.Path(__file__).resolve().parent.parent


def node_count(f: Formula) -> int:
    """Number of AST nodes, the enumerator's notion of size."""
    match f:
        case Not(sub) | Kw(_, sub) | K(_, sub):
            return 1 + node_count(sub)
        case And(a, b) | Or(a, b) | Implies(a, b) | Iff(a, b):
            return 1 + node_count(a) + node_count(b)
        case Announce(a, b):
            return 1 + node_count(a) + node_count(b)
    return 1


def count_formulas(n_props: int, n_agents: int, lang: Language, max_size: int) -> int:
    """Closed-form count of the enumeration grammar, summed over sizes."""
    unary = 1 + n_agents * (2 if lang in (Language.PLKwK, Language.PLKwAK) else 1)
    binary = 2 if lang in (Language.PLKwA, Language.PLKwAK) else 1
    per_size = [0, 1 + n_props]
    for size in range(2, max_size + 1):
        total = unary * per_size[size - 1]
        total += binary * sum(per_size[i] * per_size[size - 1 - i]
                              for i in range(1, size - 1))
        per_size.append(total)
    return sum(per_size)


def close_relation(pairs, worlds, props):
    """Least extension of pairs satisfying the Horn frame properties in props."""
    rel = set(pairs)
    if FrameProperty.REFLEXIVE in props:
        rel |= {(w, w) for w in worlds}
    while True:
        add = set()
        if FrameProperty.SYMMETRIC in props:
            add |= {(t, s) for (s, t) in rel}
        if FrameProperty.TRANSITIVE in props:
            add |= {(s, u) for (s, t) in rel for (t2, u) in rel if t == t2}
        if FrameProperty.EUCLIDEAN in props:
            add |= {(t, u) for (s, t) in rel for (s2, u) in rel if s == s2}
        if add <= rel:
            return rel
        rel |= add


def random_model(rng, frame_class: FrameClass, max_worlds: int = 4,
                 props=("p", "q"), agents=("i",)) -> KripkeModel:
    """A random model whose relations satisfy the given frame class."""
    n = rng.randint(1, max_worlds)
    worlds = [f"w{k}" for k in range(n)]
    requirements = frame_class.requirements
    rel = {}
    for agent in agents:
        if FrameProperty.PARTIAL_FUNCTIONAL in requirements:
            pairs = {(w, rng.choice(worlds)) for w in worlds if rng.random() < 0.7}
        else:
            pairs = {(u, v) for u in worlds for v in worlds if rng.random() < 0.45}
            if FrameProperty.SERIAL in requirements:
                for w in worlds:
                    if not any(u == w for (u, _) in pairs):
                        pairs.add((w, rng.choice(worlds)))
            pairs = close_relation(pairs, worlds, requirements)
        rel[agent] = sorted(pairs)
    val = {p: [w for w in worlds if rng.random() < 0.5] for p in props}
    model = KripkeModel(worlds, list(agents), rel, val)
    assert satisfies_class(model, frame_class)
    return model


def random_formula(rng, depth: int, props=("p", "q"), agents=("i",),
                   lang: Language = Language.PLKw) -> Formula:
    """A random formula of the given language with nesting depth at most depth."""
    if depth == 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.85:
            return Prop(rng.choice(props))
        return TOP if r < 0.93 else BOT
    ops = ["not", "and", "or", "implies", "iff"]
    if lang != Language.EL:
        ops += ["kw", "kw"]
    if lang in (Language.EL, Language.PLKwK, Language.PLKwAK):
        ops += ["k", "k"]
    if lang in (Language.PLKwA, Language.PLKwAK):
        ops += ["announce", "announce"]
    op = rng.choice(ops)

    def sub():
        return random_formula(rng, depth - 1, props, agents, lang)

    if op == "not":
        return Not(sub())
    if op == "kw":
        return Kw(rng.choice(agents), sub())
    if op == "k":
        return K(rng.choice(agents), sub())
    if op == "announce":
        return Announce(sub(), sub())
    return {"and": And, "or": Or, "implies": Implies, "iff": Iff}[op](sub(), sub())


def enumerate_class_models(n_max: int, frame_class: FrameClass,
                           props=("p",), agent="i"):
    """Every pointed-free model with at most n_max worlds satisfying the class."""
    out = []
    for n in range(1, n_max + 1):
        worlds = [f"w{k}" for k in range(n)]
        pairs = list(itertools.product(worlds, worlds))
        for rel_bits in range(1 << len(pairs)):
            rel = {agent: [pairs[j] for j in range(len(pairs)) if rel_bits >> j & 1]}
            base = KripkeModel(worlds, [agent], rel, {p: [] for p in props})
            if not satisfies_class(base, frame_class):
                continue
            for val_bits in range(1 << (n * len(props))):
                val = {p: [worlds[k] for k in range(n) if val_bits >> (pi * n + k) & 1]
                       for pi, p in enumerate(props)}
                out.append(KripkeModel(worlds, [agent], rel, val))
    return out
