"""Regenerate the derivation corpus under proofs/.

Every derivation is built programmatically, replayed through the checker,
and its conclusion is confirmed valid (by the decision procedure) over the
frame class of the declared system before being written out.
"""

from __future__ import annotations

import pathlib
import sys

from kwl.formula import And, Iff, Implies, Kw, Not, Or, Prop, conj, parse
from kwl.proof import (
    AXIOMS,
    SYSTEMS,
    _Builder,
    _emit_discharge,
    _emit_transfer,
    check_derivation,
    format_derivation,
    gen_prop19,
    instantiate,
    parse_derivation,
)
from kwl.decide import valid

P = Prop("p")
Q = Prop("q")
R = Prop("r")
D = Prop("d")
C1 = Prop("c1")
C2 = Prop("c2")


def kw(f):
    return Kw("i", f)


def emit_case_join(b, chi, phi):
    """Derive Kw(chi & phi) & Kw(~chi & phi) -> Kw phi."""
    s1 = b.add(Iff(And(chi, phi), Not(Implies(chi, Not(phi)))), "taut")
    s2 = b.add(Iff(kw(And(chi, phi)), kw(Not(Implies(chi, Not(phi))))), f"rekw {s1} i")
    s3 = b.add(Iff(kw(Implies(chi, Not(phi))), kw(Not(Implies(chi, Not(phi))))),
               "axiom Kw<->")
    s4 = b.add(Iff(And(Not(chi), phi), Not(Implies(Not(chi), Not(phi)))), "taut")
    s5 = b.add(Iff(kw(And(Not(chi), phi)), kw(Not(Implies(Not(chi), Not(phi))))),
               f"rekw {s4} i")
    s6 = b.add(Iff(kw(Implies(Not(chi), Not(phi))), kw(Not(Implies(Not(chi), Not(phi))))),
               "axiom Kw<->")
    s7 = b.add(Implies(And(kw(Implies(chi, Not(phi))), kw(Implies(Not(chi), Not(phi)))),
                       kw(Not(phi))),
               "axiom KwCon")
    s8 = b.add(Iff(kw(phi), kw(Not(phi))), "axiom Kw<->")
    return b.add(Implies(And(kw(And(chi, phi)), kw(And(Not(chi), phi))), kw(phi)),
                 f"pc {s2},{s3},{s5},{s6},{s7},{s8}")


def emit_case_split(b, phi, psi, chi):
    """Derive Kw phi -> Kw(phi & psi) | Kw(~phi & chi)."""
    s1 = b.add(Iff(And(phi, psi), Not(Implies(phi, Not(psi)))), "taut")
    s2 = b.add(Iff(kw(And(phi, psi)), kw(Not(Implies(phi, Not(psi))))), f"rekw {s1} i")
    s3 = b.add(Iff(kw(Implies(phi, Not(psi))), kw(Not(Implies(phi, Not(psi))))),
               "axiom Kw<->")
    s4 = b.add(Iff(And(Not(phi), chi), Not(Implies(Not(phi), Not(chi)))), "taut")
    s5 = b.add(Iff(kw(And(Not(phi), chi)), kw(Not(Implies(Not(phi), Not(chi))))),
               f"rekw {s4} i")
    s6 = b.add(Iff(kw(Implies(Not(phi), Not(chi))), kw(Not(Implies(Not(phi), Not(chi))))),
               "axiom Kw<->")
    s7 = b.add(Implies(kw(phi), Or(kw(Implies(phi, Not(psi))),
                                   kw(Implies(Not(phi), Not(chi))))),
               "axiom KwDis")
    return b.add(Implies(kw(phi), Or(kw(And(phi, psi)), kw(And(Not(phi), chi)))),
                 f"pc {s2},{s3},{s5},{s6},{s7}")


def emit_kw_conj(b, f, g):
    """Derive Kw f & Kw g -> Kw(f & g)."""
    fg = And(f, g)
    a = emit_case_split(b, f, g, Not(fg))
    c = emit_case_split(b, g, f, f)
    t1 = b.add(Iff(fg, And(g, f)), "taut")
    r1 = b.add(Iff(kw(fg), kw(And(g, f))), f"rekw {t1} i")
    j1 = b.add(Implies(kw(g), Or(kw(fg), kw(And(Not(g), f)))), f"pc {c},{r1}")
    t2 = b.add(Iff(And(Not(g), f), And(f, Not(fg))), "taut")
    r2 = b.add(Iff(kw(And(Not(g), f)), kw(And(f, Not(fg)))), f"rekw {t2} i")
    j2 = b.add(Implies(kw(g), Or(kw(fg), kw(And(f, Not(fg))))), f"pc {j1},{r2}")
    k = emit_case_join(b, f, Not(fg))
    z = b.add(Iff(kw(fg), kw(Not(fg))), "axiom Kw<->")
    u = b.add(Implies(And(kw(And(f, Not(fg))), kw(And(Not(f), Not(fg)))), kw(fg)),
              f"pc {k},{z}")
    v = b.add(Implies(And(kw(f), kw(g)),
                      Or(kw(fg), And(kw(And(f, Not(fg))), kw(And(Not(f), Not(fg)))))),
              f"pc {a},{j2}")
    return b.add(Implies(And(kw(f), kw(g)), kw(fg)), f"pc {u},{v}")


# ---------------------------------------------------------------------------
# the corpus


def build_lemma17():
    b = _Builder("PLKw")
    _emit_transfer(b, P, Q, R)
    return b.derivation()


def build_lemma18():
    b = _Builder("PLKw")
    _emit_discharge(b, P, Q, R, D)
    return b.derivation()


def build_lemma48():
    b = _Builder("PLKw")
    emit_case_join(b, P, Q)
    return b.derivation()


def build_lemma49():
    b = _Builder("PLKw")
    emit_case_split(b, P, Q, R)
    return b.derivation()


def build_prop26_1():
    b = _Builder("PLKwS4")
    s1 = b.add(parse("Kw[i]p -> Kw[i]p | q"), "taut")
    s2 = b.add(parse("Kw[i](Kw[i]p -> Kw[i]p | q)"), f"neckw {s1} i")
    s3 = b.add(parse("Kw[i]Kw[i]p & Kw[i](Kw[i]p -> Kw[i]p | q) & Kw[i]p -> Kw[i](Kw[i]p | q)"),
               "axiom KwT")
    s4 = b.add(parse("Kw[i]Kw[i]p & Kw[i]p -> Kw[i](Kw[i]p | q)"), f"pc {s2},{s3}")
    s5 = b.add(parse("Kw[i]p -> Kw[i]Kw[i]p"), "axiom wKw4")
    b.add(parse("Kw[i]p -> Kw[i](Kw[i]p | q)"), f"pc {s4},{s5}")
    return b.derivation()


def build_prop26_2():
    b = _Builder("PLKwS5")
    s1 = b.add(parse("~Kw[i]p -> ~Kw[i]p | q"), "taut")
    s2 = b.add(parse("Kw[i](~Kw[i]p -> ~Kw[i]p | q)"), f"neckw {s1} i")
    s3 = b.add(parse("Kw[i]~Kw[i]p & Kw[i](~Kw[i]p -> ~Kw[i]p | q) & ~Kw[i]p -> Kw[i](~Kw[i]p | q)"),
               "axiom KwT")
    s4 = b.add(parse("Kw[i]~Kw[i]p & ~Kw[i]p -> Kw[i](~Kw[i]p | q)"), f"pc {s2},{s3}")
    s5 = b.add(parse("~Kw[i]p -> Kw[i]~Kw[i]p"), "axiom wKw5")
    b.add(parse("~Kw[i]p -> Kw[i](~Kw[i]p | q)"), f"pc {s4},{s5}")
    return b.derivation()


def build_prop50():
    b = _Builder("PLKw")
    emit_kw_conj(b, P, Q)
    return b.derivation()


def build_prop51():
    b = _Builder("PLKw")
    s1 = b.add(Iff(Not(And(C1, P)), Implies(P, Not(C1))), "taut")
    s2 = b.add(Iff(kw(Not(And(C1, P))), kw(Implies(P, Not(C1)))), f"rekw {s1} i")
    s3 = b.add(Iff(kw(And(C1, P)), kw(Not(And(C1, P)))), "axiom Kw<->")
    s4 = b.add(Implies(kw(P), Or(kw(Implies(P, Not(C1))), kw(Implies(Not(P), And(C1, P))))),
               "axiom KwDis")
    s5 = b.add(Implies(And(kw(P), Not(kw(And(C1, P)))), kw(Implies(Not(P), And(C1, P)))),
               f"pc {s2},{s3},{s4}")
    s11 = _emit_transfer(b, P, And(C1, P), Q)
    s12 = b.add(Implies(conj([kw(P), Not(kw(And(C1, P))), kw(Implies(P, Q))]), kw(Q)),
                f"pc {s5},{s11}")
    a = emit_kw_conj(b, P, Q)
    bb = emit_kw_conj(b, And(P, Q), And(C1, Q))
    d = emit_case_split(b, Implies(P, Q), C2, C1)
    t3 = b.add(Iff(And(Not(Implies(P, Q)), C1), And(Not(Q), And(P, C1))), "taut")
    r3 = b.add(Iff(kw(And(Not(Implies(P, Q)), C1)), kw(And(Not(Q), And(P, C1)))),
               f"rekw {t3} i")
    g = b.add(Implies(And(kw(Implies(P, Q)), Not(kw(And(Implies(P, Q), C2)))),
                      kw(And(Not(Q), And(P, C1)))),
              f"pc {d},{r3}")
    t4 = b.add(Iff(And(And(P, Q), And(C1, Q)), And(Q, And(P, C1))), "taut")
    r4 = b.add(Iff(kw(And(And(P, Q), And(C1, Q))), kw(And(Q, And(P, C1)))), f"rekw {t4} i")
    j = b.add(Implies(And(kw(And(P, Q)), kw(And(C1, Q))), kw(And(Q, And(P, C1)))),
              f"pc {bb},{r4}")
    k = emit_case_join(b, Q, And(P, C1))
    l = b.add(Implies(conj([kw(P), kw(Q), kw(And(C1, Q)), kw(Implies(P, Q)),
                            Not(kw(And(Implies(P, Q), C2)))]),
                      kw(And(P, C1))),
              f"pc {a},{j},{g},{k}")
    m = b.add(Implies(conj([kw(P), kw(Q), Not(kw(And(P, C1))), kw(Implies(P, Q)),
                            Not(kw(And(Implies(P, Q), C2)))]),
                      Not(kw(And(C1, Q)))),
              f"pc {l}")
    t5 = b.add(Iff(And(C1, P), And(P, C1)), "taut")
    r5 = b.add(Iff(kw(And(C1, P)), kw(And(P, C1))), f"rekw {t5} i")
    t6 = b.add(Iff(And(C2, Implies(P, Q)), And(Implies(P, Q), C2)), "taut")
    r6 = b.add(Iff(kw(And(C2, Implies(P, Q))), kw(And(Implies(P, Q), C2))), f"rekw {t6} i")
    r = b.add(Implies(conj([kw(P), kw(Q), Not(kw(And(C1, P))), kw(Implies(P, Q)),
                            Not(kw(And(C2, Implies(P, Q))))]),
                      Not(kw(And(C1, Q)))),
              f"pc {m},{r5},{r6}")
    b.add(instantiate(AXIOMS["I3"],
                      {"PHI": P, "PSI": Q, "CHI1": C1, "CHI2": C2, "I": "i"}),
          f"pc {s12},{r}")
    return b.derivation()


def build_prop52():
    b = _Builder("PLKw")
    s9 = emit_case_join(b, Q, P)
    t1 = b.add(parse("(p & q) <-> (q & p)"), "taut")
    r1 = b.add(parse("Kw[i](p & q) <-> Kw[i](q & p)"), f"rekw {t1} i")
    t2 = b.add(parse("(p & ~q) <-> (~q & p)"), "taut")
    r2 = b.add(parse("Kw[i](p & ~q) <-> Kw[i](~q & p)"), f"rekw {t2} i")
    s14 = b.add(parse("~Kw[i]p -> ~Kw[i](p & q) | ~Kw[i](p & ~q)"), f"pc {s9},{r1},{r2}")
    b.add(parse("Kw[i]q & ~Kw[i]p -> ~Kw[i](p & q) | ~Kw[i](p & ~q)"), f"pc {s14}")
    return b.derivation()


def build_prop53():
    b = _Builder("PLKw")
    s1 = b.add(parse("p -> p"), "taut")
    s2 = b.add(parse("Kw[i](p -> p)"), f"neckw {s1} i")
    s3 = b.add(parse("~(p -> p) -> ~q"), "taut")
    s4 = b.add(parse("Kw[i](~(p -> p) -> ~q)"), f"neckw {s3} i")
    s5 = b.add(parse("Kw[i]((p -> p) -> ~q) & Kw[i](~(p -> p) -> ~q) -> Kw[i]~q"),
               "axiom KwCon")
    s6 = b.add(parse("Kw[i]((p -> p) -> ~q) -> Kw[i]~q"), f"pc {s4},{s5}")
    s7 = b.add(parse("(q & (p -> p)) <-> ~((p -> p) -> ~q)"), "taut")
    s8 = b.add(parse("Kw[i](q & (p -> p)) <-> Kw[i]~((p -> p) -> ~q)"), f"rekw {s7} i")
    s9 = b.add(parse("Kw[i]((p -> p) -> ~q) <-> Kw[i]~((p -> p) -> ~q)"), "axiom Kw<->")
    s10 = b.add(parse("Kw[i]q <-> Kw[i]~q"), "axiom Kw<->")
    s11 = b.add(parse("Kw[i](q & (p -> p)) -> Kw[i]q"), f"pc {s6},{s8},{s9},{s10}")
    b.add(parse("Kw[i](p -> p) & (~Kw[i]q -> ~Kw[i](q & (p -> p)))"), f"pc {s2},{s11}")
    return b.derivation()


def build_prop54():
    b = _Builder("PLKw")
    s1 = b.add(parse("(p & q) <-> (q & p)"), "taut")
    b.add(parse("(Kw[i](p & q) | r) <-> (Kw[i](q & p) | r)"), f"sub {s1} Kw[i]x | r x")
    b.add(parse("Kw[i](p & q) <-> Kw[i](q & p)"), f"sub {s1} Kw[i]x x")
    return b.derivation()


def build_prop55_n():
    b = _Builder("PLKwS4")
    s1 = b.add(parse("top"), "taut")
    s2 = b.add(parse("Kw[i]top"), f"neckw {s1} i")
    b.add(parse("Kw[i]top <-> top"), f"pc {s2}")
    return b.derivation()


def build_prop55_z():
    b = _Builder("PLKwS4")
    b.add(parse("Kw[i]p <-> Kw[i]~p"), "axiom Kw<->")
    return b.derivation()


def build_prop55_r():
    b = _Builder("PLKwS4")
    emit_kw_conj(b, P, Q)
    return b.derivation()


def build_prop56():
    b = _Builder("PLKwS4")
    s1 = b.add(parse("Kw[i]p & p -> p | q"), "taut")
    s2 = b.add(parse("Kw[i](Kw[i]p & p -> p | q)"), f"neckw {s1} i")
    s3 = b.add(parse("Kw[i](Kw[i]p & p) & Kw[i](Kw[i]p & p -> p | q) & (Kw[i]p & p) -> Kw[i](p | q)"),
               "axiom KwT")
    s4 = b.add(parse("Kw[i](Kw[i]p & p) & (Kw[i]p & p) -> Kw[i](p | q)"), f"pc {s2},{s3}")
    s5 = b.add(parse("Kw[i]p -> Kw[i]Kw[i]p"), "axiom wKw4")
    s40 = emit_kw_conj(b, kw(P), P)
    b.add(parse("Kw[i]p & p -> Kw[i](p | q) & (p | q)"), f"pc {s1},{s4},{s5},{s40}")
    return b.derivation()


def build_lemma57():
    b = _Builder("LB")
    s1 = b.add(parse("Kw[i]p & p -> p | q"), "taut")
    s2 = b.add(parse("Kw[i]p & p -> Kw[i](p | q) & (p | q)"), f"wm {s1}")
    b.add(parse("Kw[i]p & p -> Kw[i](p | q)"), f"pc {s2}")
    return b.derivation()


def build_prop58():
    b = _Builder("LB")
    s1 = b.add(parse("((p -> q) & (~p -> q)) <-> q"), "taut")
    s2 = b.add(parse("Kw[i]((p -> q) & (~p -> q)) <-> Kw[i]q"), f"sub {s1} Kw[i]x x")
    s3 = b.add(parse("Kw[i](p -> q) & Kw[i](~p -> q) -> Kw[i]((p -> q) & (~p -> q))"),
               "axiom R")
    b.add(parse("Kw[i](p -> q) & Kw[i](~p -> q) -> Kw[i]q"), f"pc {s2},{s3}")
    return b.derivation()


def build_prop59():
    b = _Builder("LB")
    s1 = b.add(parse("p -> (~p -> r)"), "taut")
    s2 = b.add(parse("Kw[i]p & p -> (~p -> r)"), f"pc {s1}")
    s3 = b.add(parse("Kw[i]p & p -> Kw[i](~p -> r) & (~p -> r)"), f"wm {s2}")
    s4 = b.add(parse("Kw[i]p & p -> Kw[i](~p -> r)"), f"pc {s3}")
    s5 = b.add(parse("~p -> (p -> q)"), "taut")
    s6 = b.add(parse("Kw[i]~p & ~p -> (p -> q)"), f"pc {s5}")
    s7 = b.add(parse("Kw[i]~p & ~p -> Kw[i](p -> q) & (p -> q)"), f"wm {s6}")
    s8 = b.add(parse("Kw[i]~p & ~p -> Kw[i](p -> q)"), f"pc {s7}")
    s9 = b.add(parse("Kw[i]p <-> Kw[i]~p"), "axiom Z")
    s10 = b.add(parse("Kw[i]p & ~p -> Kw[i](p -> q)"), f"pc {s8},{s9}")
    b.add(parse("Kw[i]p -> Kw[i](p -> q) | Kw[i](~p -> r)"), f"pc {s4},{s10}")
    return b.derivation()


def build_prop60():
    b = _Builder("LB")
    s1 = b.add(parse("p & (p -> q) -> q"), "taut")
    s2 = b.add(parse("Kw[i](p & (p -> q)) & (p & (p -> q)) -> q"), f"pc {s1}")
    s3 = b.add(parse("Kw[i](p & (p -> q)) & (p & (p -> q)) -> Kw[i]q & q"), f"wm {s2}")
    s4 = b.add(parse("Kw[i](p & (p -> q)) & (p & (p -> q)) -> Kw[i]q"), f"pc {s3}")
    s5 = b.add(parse("Kw[i]p & Kw[i](p -> q) -> Kw[i](p & (p -> q))"), "axiom R")
    s6 = b.add(parse("Kw[i]p & Kw[i](p -> q) & p & (p -> q) -> Kw[i]q"), f"pc {s4},{s5}")
    s7 = b.add(parse("~(p -> q) -> ~q"), "taut")
    s8 = b.add(parse("Kw[i]~(p -> q) & ~(p -> q) -> ~q"), f"pc {s7}")
    s9 = b.add(parse("Kw[i]~(p -> q) & ~(p -> q) -> Kw[i]~q & ~q"), f"wm {s8}")
    s10 = b.add(parse("Kw[i]~(p -> q) & ~(p -> q) -> Kw[i]~q"), f"pc {s9}")
    s11 = b.add(parse("Kw[i](p -> q) <-> Kw[i]~(p -> q)"), "axiom Z")
    s12 = b.add(parse("Kw[i]q <-> Kw[i]~q"), "axiom Z")
    s13 = b.add(parse("Kw[i](p -> q) & ~(p -> q) -> Kw[i]q"), f"pc {s10},{s11},{s12}")
    b.add(parse("Kw[i]p & Kw[i](p -> q) & p -> Kw[i]q"), f"pc {s6},{s13}")
    return b.derivation()


def build_prop61():
    b = _Builder("LB")
    s1 = b.add(parse("Kw[i]p & p -> Kw[i]p"), "taut")
    s2 = b.add(parse("Kw[i]p & p -> Kw[i]Kw[i]p & Kw[i]p"), f"wm {s1}")
    s3 = b.add(parse("Kw[i]p & p -> Kw[i]Kw[i]p"), f"pc {s2}")
    s4 = b.add(parse("Kw[i]~p & ~p -> Kw[i]~p"), "taut")
    s5 = b.add(parse("Kw[i]p <-> Kw[i]~p"), "axiom Z")
    s6 = b.add(parse("Kw[i]~p & ~p -> Kw[i]p"), f"pc {s4},{s5}")
    s7 = b.add(parse("Kw[i]~p & ~p -> Kw[i]Kw[i]p & Kw[i]p"), f"wm {s6}")
    s8 = b.add(parse("Kw[i]~p & ~p -> Kw[i]Kw[i]p"), f"pc {s7}")
    s9 = b.add(parse("Kw[i]p & ~p -> Kw[i]Kw[i]p"), f"pc {s5},{s8}")
    b.add(parse("Kw[i]p -> Kw[i]Kw[i]p"), f"pc {s3},{s9}")
    return b.derivation()


def build_prop62():
    b = _Builder("LB")
    s1 = b.add(parse("p -> p"), "taut")
    s2 = b.add(parse("(p -> p) <-> top"), "taut")
    s3 = b.add(parse("Kw[i](p -> p) <-> Kw[i]top"), f"sub {s2} Kw[i]x x")
    s4 = b.add(parse("Kw[i]top <-> top"), "axiom N")
    b.add(parse("Kw[i](p -> p)"), f"pc {s3},{s4}")
    return b.derivation()


def build_prop63():
    b = _Builder("LB")
    s1 = b.add(parse("(p & q) <-> (q & p)"), "taut")
    b.add(parse("Kw[i](p & q) <-> Kw[i](q & p)"), f"sub {s1} Kw[i]x x")
    return b.derivation()


def build_ig_demo():
    b = _Builder("Ig")
    s1 = b.add(parse("p -> p"), "taut")
    s2 = b.add(parse("Kw[i](p -> p) & (~Kw[i]q -> ~Kw[i](q & (p -> p)))"), f"ri {s1} q")
    s3 = b.add(parse("~Kw[i](p & q) -> ~Kw[i]p | ~Kw[i]q"), "axiom I2")
    s4 = b.add(parse("~Kw[i]p <-> ~Kw[i]~p"), "axiom I1")
    b.add(parse("Kw[i](p -> p)"), f"pc {s2}")
    return b.derivation()


def build_plkwa_demo():
    b = _Builder("PLKwA")
    s1 = b.add(parse("[p]q <-> (p -> q)"), "axiom !ATOM")
    b.add(parse("[p]~q <-> (p -> ~[p]q)"), "axiom !NEG")
    b.add(parse("[p](q & r) <-> [p]q & [p]r"), "axiom !CON")
    b.add(parse("[p][q]r <-> [p & [p]q]r"), "axiom !!")
    b.add(parse("[p]Kw[i]q <-> (p -> Kw[i][p]q | Kw[i][p]~q)"), "axiom !Kw")
    b.add(parse("[p]q -> (p -> q)"), f"pc {s1}")
    return b.derivation()


def build_plkwas5_demo():
    b = _Builder("PLKwAS5")
    s1 = b.add(parse("Kw[i]p & Kw[i](p -> q) & p -> Kw[i]q"), "axiom KwT")
    s2 = b.add(parse("~Kw[i]p -> Kw[i]~Kw[i]p"), "axiom wKw5")
    s3 = b.add(parse("[p]q <-> (p -> q)"), "axiom !ATOM")
    b.add(parse("[p]q & p -> q"), f"pc {s3}")
    return b.derivation()


CORPUS = {
    "lemma17": build_lemma17,
    "lemma18": build_lemma18,
    "prop19_1": lambda: gen_prop19(1),
    "prop19_2": lambda: gen_prop19(2),
    "prop19_3": lambda: gen_prop19(3),
    "prop19_4": lambda: gen_prop19(4),
    "prop26_1": build_prop26_1,
    "prop26_2": build_prop26_2,
    "lemma48": build_lemma48,
    "lemma49": build_lemma49,
    "prop50": build_prop50,
    "prop51": build_prop51,
    "prop52": build_prop52,
    "prop53": build_prop53,
    "prop54": build_prop54,
    "prop55_n": build_prop55_n,
    "prop55_z": build_prop55_z,
    "prop55_r": build_prop55_r,
    "prop56": build_prop56,
    "lemma57": build_lemma57,
    "prop58": build_prop58,
    "prop59": build_prop59,
    "prop60": build_prop60,
    "prop61": build_prop61,
    "prop62": build_prop62,
    "prop63": build_prop63,
    "ig_demo": build_ig_demo,
    "plkwa_demo": build_plkwa_demo,
    "plkwas5_demo": build_plkwas5_demo,
}


def main() -> int:
    out = pathlib.Path(__file__).resolve().parent.parent / "proofs"
    out.mkdir(exist_ok=True)
    for name, build in CORPUS.items():
        d = build()
        conclusion = check_derivation(d)
        system = SYSTEMS[d.system]
        v = valid(conclusion, system.frame_class)
        if not v.valid:
            print(f"{name}: conclusion NOT valid over {system.frame_class.name}", file=sys.stderr)
            return 1
        text = format_derivation(d)
        assert parse_derivation(text) == d
        (out / f"{name}.prf").write_text(text)
        print(f"{name}.prf: {len(d.steps)} steps, {d.system}, "
              f"valid over {system.frame_class.name}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
