"""Derivation transformers: weakening, renaming, inversion, cut handling."""

import random

import pytest

from cutsim import (
    App,
    Const,
    Fn,
    GB,
    GB_CUT,
    GBE,
    GBE_CUT,
    I,
    InvalidExtra,
    Lam,
    Node,
    NotCutStrong,
    NotPresent,
    O,
    Sequent,
    TransformError,
    Var,
    check_derivation,
    disj,
    eliminate_cut_ge,
    eliminate_cuta,
    forall,
    gb_cuta,
    leibniz,
    neg,
    neg_invert,
    rename_params,
    simulate_cut,
    step_count,
    weaken,
)
from cutsim.schemas import leibniz_schema, tautology_schema

import dgen

x, y, z = (Const(n, O) for n in "xyz")


# ------------------------------------------------------------- weaken

def test_weaken_preserves_step_count_and_checks():
    rng = random.Random(41)
    for _ in range(200):
        d = dgen.gb_derivation(rng)
        extra = {rng.choice((y, neg(z), disj(x, y), forall("V", I, z)))}
        w = weaken(d, extra)
        assert step_count(w) == step_count(d)
        assert w.concl.formulas == d.concl.formulas | extra
        assert check_derivation(w, GB) == step_count(d)


def test_weaken_renames_clashing_eigen_parameters():
    p = Const("p", Fn(I, O))
    c = Const("c", I)
    s = Sequent([x, neg(x)])
    f = forall("V", I, App(p, Var("V", I)))
    d = Node("piR", s.add(f), (Node("init", s.add(f, App(p, c))),), eigen="c")
    assert check_derivation(d, GB) == 2
    # weakening by a formula mentioning the eigen-parameter forces a rename
    w = weaken(d, [App(p, c)])
    assert check_derivation(w, GB) == 2
    assert w.eigen != "c"


def test_weaken_rejects_bad_formulas():
    rng = random.Random(42)
    d = dgen.gb_derivation(rng)
    with pytest.raises(InvalidExtra):
        weaken(d, [Const("c", I)])
    with pytest.raises(InvalidExtra):
        weaken(d, [App(Lam("v", O, Var("v", O)), x)])
    with pytest.raises(InvalidExtra):
        weaken(d, ["x"])


def test_weaken_compiles_admissible_nodes_away():
    s = Sequent([x, neg(x)])
    d = Node("weak", s.add(y), (Node("init", s),))
    out = weaken(d, [z])
    # the weak node disappears; the result is weak-free and 1 node
    assert out.rule == "init" and step_count(out) == 1
    assert check_derivation(out, GB) == 1


# ------------------------------------------------------- rename_params

def test_rename_params_is_size_preserving():
    rng = random.Random(43)
    for _ in range(150):
        d = dgen.gb_derivation(rng)
        r = rename_params(d, {"x": "x9", "y": "y9", "w": "v"})
        assert step_count(r) == step_count(d)
        assert check_derivation(r, GB) == step_count(d)
        names = set()
        _collect_param_names(r, names)
        assert "x" not in names and "y" not in names


def _collect_param_names(node, out):
    out |= node.concl.params()
    for p in node.premises:
        _collect_param_names(p, out)


def test_rename_params_validates_the_mapping():
    s = Sequent([x, neg(x), y])
    d = Node("init", s)
    with pytest.raises(ValueError):
        rename_params(d, {"x": "Neg"})
    # merging parameters of different types is refused
    s2 = Sequent([x, neg(x), App(Const("p", Fn(I, O)), Const("c", I))])
    d2 = Node("init", s2)
    with pytest.raises(ValueError):
        rename_params(d2, {"c": "x"})
    # merging equal-typed parameters is allowed
    r = rename_params(d, {"y": "x"})
    assert r.concl == Sequent([x, neg(x)])
    assert check_derivation(r, GB) == 1


# ---------------------------------------------------------- neg_invert

def test_neg_invert_peels_a_double_negation():
    rng = random.Random(44)
    for _ in range(200):
        d = dgen.gb_derivation(rng)
        a = rng.choice(list(d.concl))
        wrapped = Node("neg", d.concl.add(neg(neg(a))), (d,))
        out = neg_invert(wrapped, a)
        assert step_count(out) <= step_count(wrapped)
        assert out.concl.formulas == \
            (wrapped.concl.formulas - {neg(neg(a))}) | {a}
        assert check_derivation(out, GB) == step_count(out)


def test_neg_invert_requires_the_double_negation():
    d = Node("init", Sequent([x, neg(x)]))
    with pytest.raises(NotPresent):
        neg_invert(d, x)


def test_neg_invert_through_a_cut():
    s = Sequent([x, neg(x), neg(neg(y))])
    inner = Node("init", s)
    d = Node("cut", s, (inner, Node("init", s)), cut_formula=x)
    out = neg_invert(d, y)
    assert out.concl.formulas == (s.formulas - {neg(neg(y))}) | {y}
    assert step_count(out) <= step_count(d)
    assert check_derivation(out, GB_CUT) == step_count(out)


def test_neg_invert_refuses_to_strip_the_anchored_realizer():
    # the corner case: the realizer is itself a negation ~x, so its negated
    # form ~~x is exactly the double negation being inverted
    realizer = neg(x)
    s = Sequent([y, neg(y), neg(realizer)])
    d = Node("cutA", s, (Node("init", s), Node("init", s)), cut_formula=y)
    assert check_derivation(d, gb_cuta(realizer)) == 3
    with pytest.raises(TransformError):
        neg_invert(d, x, realizer=realizer)
    # with a realizer that is not involved, the same inversion goes through
    out = neg_invert(d, x, realizer=y)
    assert x in out.concl.formulas


# ------------------------------------------------- cut simulation chain

def _leibniz_setup():
    m, n = Const("m", I), Const("n", I)
    return leibniz_schema(m, n, I)


def test_simulate_cut_swaps_cuts_at_equal_size():
    rng = random.Random(45)
    schema = _leibniz_setup()
    for _ in range(60):
        d = dgen.gbcut_derivation(rng, schema.formula, cuts=rng.randint(1, 3))
        sim = simulate_cut(d, schema)
        assert step_count(sim) == step_count(d)
        assert dgen.count_rule(sim, "cut") == 0
        assert dgen.count_rule(sim, "cutA") == dgen.count_rule(d, "cut")
        assert check_derivation(sim, gb_cuta(schema.formula)) == step_count(d)


def test_simulate_cut_requires_the_negated_realizer():
    rng = random.Random(46)
    schema = _leibniz_setup()
    d = dgen.grow(rng, (), 2, dgen.CUT_WRAPS, ("cut",))
    with pytest.raises(NotCutStrong):
        simulate_cut(d, schema)


def test_eliminate_cuta_respects_the_budget():
    rng = random.Random(47)
    schema = _leibniz_setup()
    for _ in range(60):
        d = dgen.gbcut_derivation(rng, schema.formula, cuts=rng.randint(1, 3))
        n = dgen.count_rule(d, "cut")
        out = eliminate_cuta(simulate_cut(d, schema), schema)
        assert dgen.count_rule(out, "cut") == 0
        assert dgen.count_rule(out, "cutA") == 0
        assert step_count(out) <= step_count(d) + n * schema.k
        assert check_derivation(out, GB) == step_count(out)
        assert out.concl == d.concl


def test_simulation_pipeline_with_other_schemas():
    rng = random.Random(48)
    schema = tautology_schema()
    for _ in range(30):
        d = dgen.gbcut_derivation(rng, schema.formula, cuts=1)
        n = dgen.count_rule(d, "cut")
        out = eliminate_cuta(simulate_cut(d, schema), schema)
        assert step_count(out) <= step_count(d) + n * schema.k
        assert check_derivation(out, GB) == step_count(out)


def test_eliminate_cut_ge_is_12_admissible():
    rng = random.Random(49)
    for _ in range(60):
        d = dgen.gbe_cut_derivation(rng, cuts=rng.randint(1, 2))
        n = dgen.count_rule(d, "cut")
        out = eliminate_cut_ge(d)
        assert dgen.count_rule(out, "cut") == 0
        assert step_count(out) <= step_count(d) + 12 * n
        assert check_derivation(out, GBE) == step_count(out)
        assert out.concl == d.concl
