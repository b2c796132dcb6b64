"""Parser / pretty-printer round trips and error categories."""

import random

import pytest

from cutsim import (
    App,
    Const,
    Fn,
    I,
    Lam,
    O,
    ParseError,
    Sequent,
    Var,
    alpha_eq,
    andrews_eq,
    beta_normal,
    conj,
    disj,
    exists,
    fn,
    forall,
    iff,
    implies,
    leibniz,
    neg,
    parse_derivation,
    parse_problem,
    parse_sequent,
    parse_term,
    parse_type,
    print_derivation,
    print_problem,
    print_sequent,
    print_term,
    print_type,
)

from dgen import gb_derivation
from test_terms import _CONSTS, rand_term, rand_type

_SIG = {c.name: c.ty for tys in _CONSTS.values() for c in tys}


def test_term_round_trip_on_random_terms():
    rng = random.Random(21)
    for _ in range(500):
        t = beta_normal(rand_term(rng, rand_type(rng)))
        back = parse_term(print_term(t), dict(_SIG))
        assert alpha_eq(back, t), print_term(t)


def test_type_round_trip():
    rng = random.Random(22)
    for _ in range(200):
        ty = rand_type(rng, 3)
        assert parse_type(print_type(ty)) == ty
    assert print_type(fn(I, I, O)) == "i->i->o"
    assert print_type(Fn(Fn(I, O), O)) == "(i->o)->o"


def test_precedence_and_sugar():
    sig = dict(_SIG)
    a, b, c = Const("a", O), Const("b", O), Const("c", O)
    sig["c"] = O
    assert parse_term("~a | b", sig) == disj(neg(a), b)
    assert parse_term("a & b | c", sig) == disj(conj(a, b), c)
    assert parse_term("a => b => c", sig) == implies(a, implies(b, c))
    assert parse_term("a <=> b", sig) == iff(a, b)
    p = Const("p", Fn(I, O))
    assert parse_term("!x:i. p x | a", sig) == forall(
        "x", I, disj(App(p, Var("x", I)), a))
    assert parse_term("?x:i. p x", sig) == exists("x", I, App(p, Var("x", I)))
    assert parse_term("c == c @ o", {"c": O}) == leibniz(c, c, O)
    assert parse_term("c === c @ i", {"c": I}) == andrews_eq(
        Const("c", I), Const("c", I), I)
    # application binds tighter than negation, negation tighter than &
    q = Const("q", Fn(O, O))
    assert parse_term("~q a & b", sig) == conj(neg(App(q, a)), b)


def test_binders_extend_maximally_right():
    t = parse_term("\\x:o. x | a", {"a": O})
    assert t == Lam("x", O, disj(Var("x", O), Const("a", O)))
    u = parse_term("!x:o. x => !y:o. y", {})
    assert u == forall("x", O, implies(Var("x", O),
                                       forall("y", O, Var("y", O))))


def test_parse_errors_carry_category_and_position():
    with pytest.raises(ParseError) as e:
        parse_term("a |", {"a": O})
    assert e.value.category == "syntactic"
    with pytest.raises(ParseError) as e:
        parse_term("p a", {"p": Fn(I, O), "a": O})
    assert e.value.category == "typing"
    assert e.value.line == 1 and e.value.col >= 1
    # unknown names with undetermined types are typing errors, not crashes
    with pytest.raises(ParseError) as e:
        parse_term("zz", {})
    assert e.value.category == "typing"
    with pytest.raises(ParseError) as e:
        parse_term("a $ b", {"a": O, "b": O})
    assert e.value.category == "lexical"


def test_sequent_parsing_normalizes_and_infers_parameters():
    s = parse_sequent("{(\\x:o. x) a, a}", {"a": O})
    assert s == Sequent([Const("a", O)])
    # undeclared names become parameters when the context pins their type,
    # so sequent members are closed by construction
    sig = {"p": Fn(I, O)}
    s2 = parse_sequent("{p x}", sig)
    assert sig["x"] == I and s2 == Sequent([App(Const("p", Fn(I, O)), Const("x", I))])
    with pytest.raises(ParseError) as e:
        parse_sequent("{c}", {"c": I})
    assert e.value.category == "typing"


def test_sequent_round_trip():
    rng = random.Random(23)
    for _ in range(150):
        fs = [beta_normal(rand_term(rng, O, (), 3)) for _ in range(rng.randint(1, 4))]
        fs = [f for f in fs if not __import__("cutsim").free_vars(f)]
        if not fs:
            continue
        s = Sequent(fs)
        assert parse_sequent(print_sequent(s), dict(_SIG)) == s


def test_derivation_round_trip_on_random_trees():
    rng = random.Random(24)
    for _ in range(120):
        d = gb_derivation(rng)
        text = print_derivation(d)
        back = parse_derivation(text, {"x": O, "y": O, "z": O, "w": I})
        from cutsim import nodes_equal
        assert nodes_equal(back, d), text


def test_problem_files_with_comments_and_declarations():
    prob = parse_problem(
        "# a comment line\n"
        "const a : o.\n"
        "const p : i->o.   # trailing comment\n"
        "seq goal { ~a, a }\n"
        "derivation d gb\n"
        "(init :concl {~a, a})\n")
    assert prob.sig["p"] == Fn(I, O)
    assert "goal" in prob.sequents
    d = prob.derivations[0]
    assert d.name == "d" and d.calc_name == "gb"
    # and the whole thing round-trips through the printer
    back = parse_problem(print_problem(prob))
    assert back.sequents == prob.sequents
    assert back.derivations[0].root.concl == d.root.concl


def test_problem_scoping_errors():
    with pytest.raises(ParseError) as e:
        parse_problem("const a : o.\nconst a : i.\n")
    assert e.value.category == "scoping"
    with pytest.raises(ParseError) as e:
        parse_problem("seq s {a}\nseq s {a}\n")
    assert e.value.category == "scoping"
    with pytest.raises(ParseError) as e:
        parse_problem("const Neg : o.\n")
    assert e.value.category == "scoping"
    with pytest.raises(ParseError) as e:
        parse_problem("derivation d gbx\n(init :concl {a, ~a})\n")
    assert e.value.category == "syntactic"


def test_gbcuta_derivations_need_a_realizer():
    text = ("const a : o.\n"
            "derivation d gbcuta\n"
            "(init :concl {~a, a})\n")
    with pytest.raises(ParseError):
        parse_problem(text)
    ok = parse_problem(text.replace("gbcuta\n", "gbcuta :realizer (a)\n"))
    assert ok.derivations[0].realizer == Const("a", O)


def test_printer_output_is_stable():
    a = Const("a", O)
    assert print_term(iff(a, a)) == "a <=> a"
    assert print_term(leibniz(a, a, O)) == "a == a @ o"
    assert print_term(neg(forall("x", I, App(Const("p", Fn(I, O)), Var("x", I))))) \
        == "~(!x:i. p x)"
    assert print_sequent(Sequent([a, neg(a)])) == "{~a, a}"
