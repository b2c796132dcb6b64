"""Cut-strong formulas with constructive realizer derivations.

Each schema pairs a closed formula A with a budget k and a constructor
that, given a context Δ, a cut formula C, and derivations of Δ*C and
Δ*¬C, assembles a derivation of Δ*¬A using exactly k extra inferences.
Anchored-cut elimination grafts these skeletons in place of cut nodes.

Also here: the two reusable building blocks (the 7-step reflexivity
derivation for the biconditional of an atom, the 3-step one for an
equation B ≐ B) and a 7-step closer for a sequent carrying an equation
together with its negation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .terms import (
    O, I, Fn, Term, Var, Const, App, Lam,
    beta_normal, is_beta_normal, is_atomic, free_vars, params_of, type_of,
    fresh_param, neg, disj, conj, implies, iff, forall, exists,
    leibniz, andrews_eq, split_neg, split_pi, split_leibniz, split_andrews,
    TermTypeError, canon,
)
from .calculus import Sequent, Node
from .transform import TransformError, weaken


class ShapeMismatch(TransformError):
    """realize was handed premises that do not fit Δ, C."""


class NotAtomic(TransformError):
    """The biconditional-reflexivity builder needs an atomic sentence."""


def _as_seq(delta):
    return delta if isinstance(delta, Sequent) else Sequent(delta)


def _weak_to(d, formulas):
    fs = frozenset(formulas)
    extra = fs - d.concl.formulas
    out = weaken(d, extra) if extra else d
    assert out.concl.formulas == fs
    return out


# --------------------------------------------------- small building blocks

def build_leib_refl(delta, b, alpha):
    """Derivation of Δ*(B ≐ B) in exactly 3 steps: introduce a fresh
    predicate parameter, split the disjunction, close on the clash."""
    delta = _as_seq(delta)
    if free_vars(b):
        raise TypeError("equation operand must be closed")
    if type_of(b) != alpha:
        raise TypeError("operand has type %r, not the stated %r"
                        % (type_of(b), alpha))
    eq = leibniz(b, b, alpha)
    S = Sequent(delta.formulas | {eq})
    p = fresh_param(Fn(alpha, O), S.params())
    pb = App(Const(p, Fn(alpha, O)), b)
    d1 = disj(neg(pb), pb)
    s2 = Sequent(S.formulas | {d1})
    s3 = Sequent(s2.formulas | {neg(pb), pb})
    return Node("piR", S,
                (Node("orR", s2, (Node("init", s3),)),),
                eigen=p)


def build_iff_refl(delta, a):
    """Derivation of Δ*(A ⇔ A) for atomic A in exactly 7 steps."""
    delta = _as_seq(delta)
    if free_vars(a) or not is_atomic(a):
        raise NotAtomic("need a closed atomic sentence, got %r" % (a,))
    f = iff(a, a)
    impl = implies(a, a)
    S = Sequent(delta.formulas | {f})
    s1 = Sequent(S.formulas | {neg(neg(impl))})
    s2 = Sequent(s1.formulas | {impl})
    s3 = Sequent(s2.formulas | {neg(a), a})

    def branch():
        return Node("neg", s1, (Node("orR", s2, (Node("init", s3),)),))

    return Node("orL", S, (branch(), branch()))


def build_leib_clash(s, m, n, alpha):
    """Close a sequent that contains both M ≐ N and ¬(M ≐ N), in exactly
    7 steps: open the positive equation with a fresh predicate, feed that
    predicate back as the witness for the negative one, and clash."""
    s = _as_seq(s)
    eq = leibniz(m, n, alpha)
    assert eq in s.formulas and neg(eq) in s.formulas
    p = fresh_param(Fn(alpha, O), s.params())
    pc = Const(p, Fn(alpha, O))
    pm = App(pc, m)
    pn = App(pc, n)
    d1 = disj(neg(pm), pn)
    s1 = Sequent(s.formulas | {d1})
    s2 = Sequent(s1.formulas | {neg(pm), pn})
    s3 = Sequent(s2.formulas | {neg(d1)})
    s4 = Sequent(s3.formulas | {neg(neg(pm))})
    s5 = Sequent(s4.formulas | {pm})
    s6 = Sequent(s3.formulas | {neg(pn)})
    left = Node("neg", s4, (Node("init", s5),))
    right = Node("init", s6)
    pil = Node("piL", s2, (Node("orL", s3, (left, right)),), witness=pc)
    return Node("piR", s, (Node("orR", s1, (pil,)),), eigen=p)


# ------------------------------------------------------------- the schemas

@dataclass(frozen=True)
class CutStrongSchema:
    """A formula A whose presence (negated) in a context lets the context
    simulate cut on any C at a fixed extra cost k."""
    name: str
    formula: Term
    k: int
    _build: Callable = field(repr=False, compare=False)

    def realize(self, delta, c, d_c, d_not_c):
        delta = _as_seq(delta)
        if free_vars(c):
            raise ShapeMismatch("cut formula must be closed")
        try:
            cty = type_of(c)
        except TermTypeError as e:
            raise ShapeMismatch("cut formula ill-typed: %s" % e) from None
        if cty != O:
            raise ShapeMismatch("cut formula must have type o")
        if not is_beta_normal(c):
            raise ShapeMismatch("cut formula must be β-normal")
        if d_c.concl.formulas != delta.formulas | {c}:
            raise ShapeMismatch(
                "first premise must conclude the context plus the cut formula")
        if d_not_c.concl.formulas != delta.formulas | {neg(c)}:
            raise ShapeMismatch(
                "second premise must conclude the context plus its negation")
        out = self._build(self, delta, c, d_c, d_not_c)
        assert out.concl.formulas == delta.formulas | {neg(self.formula)}
        return out


def realize(schema, delta, c, d_c, d_not_c):
    return schema.realize(delta, c, d_c, d_not_c)


def _graft_tail(concl, member, witness, c, d_c, d_not_c):
    """The recurring 3-step closer: instantiate the negated universal
    `member` with `witness` so the premise becomes ¬(¬C ∨ C), split it,
    and graft the two given derivations (weakened into place)."""
    ty, body = split_pi(split_neg(member))
    inst = neg(beta_normal(App(body, witness)))
    assert inst == neg(disj(neg(c), c)), "witness does not reduce to ¬(¬C∨C)"
    s1 = Sequent(concl.formulas | {inst})
    snn = Sequent(s1.formulas | {neg(neg(c))})
    left = Node("neg", snn, (_weak_to(d_c, s1.formulas | {c}),))
    right = _weak_to(d_not_c, s1.formulas | {neg(c)})
    return Node("piL", concl, (Node("orL", s1, (left, right)),),
                witness=witness)


def _simple_build(witness_of):
    """trivial / tautology / leibniz share one skeleton: a single
    instantiation of ¬A itself collapses to ¬(¬C ∨ C)."""
    def build(schema, delta, c, d_c, d_not_c):
        na = neg(schema.formula)
        concl = Sequent(delta.formulas | {na})
        return _graft_tail(concl, na, witness_of(schema, c), c, d_c, d_not_c)
    return build


def trivial_schema():
    f = forall("p", O, Var("p", O))
    return CutStrongSchema("trivial", f, 3,
                           _simple_build(lambda s, c: disj(neg(c), c)))


def tautology_schema():
    p = Var("p", O)
    f = forall("p", O, implies(p, p))
    return CutStrongSchema("tautology", f, 3,
                           _simple_build(lambda s, c: c))


def leibniz_schema(m, n, alpha):
    if free_vars(m) or free_vars(n):
        raise TypeError("equation operands must be closed")
    f = leibniz(m, n, alpha)
    return CutStrongSchema(
        "leibniz", f, 3,
        _simple_build(lambda s, c: Lam("X", alpha, c)))


def andrews_schema(m, n, alpha):
    if free_vars(m) or free_vars(n):
        raise TypeError("equation operands must be closed")
    f = andrews_eq(m, n, alpha)

    def build(schema, delta, c, d_c, d_not_c):
        na = neg(schema.formula)
        concl = Sequent(delta.formulas | {na})
        w = Lam("X", alpha, Lam("Y", alpha, c))
        ty, body = split_pi(split_neg(na))
        inst = neg(beta_normal(App(body, w)))
        refl = forall("Z", alpha, c)     # βnf of (λZ. w Z Z)-style premise
        assert inst == neg(disj(neg(refl), c))
        s1 = Sequent(concl.formulas | {inst})
        s2 = Sequent(s1.formulas | {neg(neg(refl))})
        s3 = Sequent(s2.formulas | {refl})
        eigen = fresh_param(alpha, s3.params() | params_of(c))
        left = Node(
            "neg", s2,
            (Node("piR", s3, (_weak_to(d_c, s3.formulas | {c}),), eigen=eigen),))
        right = _weak_to(d_not_c, s1.formulas | {neg(c)})
        return Node("piL", concl, (Node("orL", s1, (left, right)),), witness=w)

    return CutStrongSchema("andrewsEq", f, 4, build)


def func_ext_schema(alpha, beta):
    ab = Fn(alpha, beta)
    F = Var("F", ab)
    G = Var("G", ab)
    X = Var("X", alpha)
    f = forall("F", ab, forall("G", ab, implies(
        forall("X", alpha, leibniz(App(F, X), App(G, X), beta)),
        leibniz(F, G, ab))))

    def build(schema, delta, c, d_c, d_not_c):
        na = neg(schema.formula)
        concl = Sequent(delta.formulas | {na})
        fp = Const(fresh_param(ab, concl.params() | params_of(c)), ab)
        _, body1 = split_pi(split_neg(na))
        inst1 = neg(beta_normal(App(body1, fp)))
        s1 = Sequent(concl.formulas | {inst1})
        _, body2 = split_pi(split_neg(inst1))
        inst2 = neg(beta_normal(App(body2, fp)))
        s2 = Sequent(s1.formulas | {inst2})
        pointwise = beta_normal(
            forall("X", alpha, leibniz(App(fp, X), App(fp, X), beta)))
        eqff = leibniz(fp, fp, ab)
        assert inst2 == neg(disj(neg(pointwise), eqff))
        # left: prove the pointwise reflexivity
        s3 = Sequent(s2.formulas | {neg(neg(pointwise))})
        s4 = Sequent(s3.formulas | {pointwise})
        a2 = fresh_param(alpha, s4.params())
        inner = beta_normal(
            App(split_pi(pointwise)[1], Const(a2, alpha)))
        s5 = Sequent(s4.formulas | {inner})
        refl = build_leib_refl(Sequent(s4.formulas),
                               App(fp, Const(a2, alpha)), beta)
        assert refl.concl.formulas == s5.formulas
        left = Node("neg", s3, (Node("piR", s4, (refl,), eigen=a2),))
        # right: the negated equation hosts the 3-step closer
        s6 = Sequent(s2.formulas | {neg(eqff)})
        right = _graft_tail(s6, neg(eqff), Lam("X", ab, c), c, d_c, d_not_c)
        orl = Node("orL", s2, (left, right))
        pi2 = Node("piL", s1, (orl,), witness=fp)
        return Node("piL", concl, (pi2,), witness=fp)

    return CutStrongSchema("funcExt", f, 11, build)


def bool_ext_schema():
    X = Var("X", O)
    Y = Var("Y", O)
    f = forall("X", O, forall("Y", O,
                              implies(iff(X, Y), leibniz(X, Y, O))))

    def build(schema, delta, c, d_c, d_not_c):
        na = neg(schema.formula)
        concl = Sequent(delta.formulas | {na})
        a = Const(fresh_param(O, concl.params() | params_of(c)), O)
        _, body1 = split_pi(split_neg(na))
        inst1 = neg(beta_normal(App(body1, a)))
        s1 = Sequent(concl.formulas | {inst1})
        _, body2 = split_pi(split_neg(inst1))
        inst2 = neg(beta_normal(App(body2, a)))
        s2 = Sequent(s1.formulas | {inst2})
        iffaa = iff(a, a)
        eqaa = leibniz(a, a, O)
        assert inst2 == neg(disj(neg(iffaa), eqaa))
        s3 = Sequent(s2.formulas | {neg(neg(iffaa))})
        refl = build_iff_refl(Sequent(s3.formulas), a)
        left = Node("neg", s3, (refl,))
        s4 = Sequent(s2.formulas | {neg(eqaa)})
        right = _graft_tail(s4, neg(eqaa), Lam("X", O, c), c, d_c, d_not_c)
        orl = Node("orL", s2, (left, right))
        pi2 = Node("piL", s1, (orl,), witness=a)
        return Node("piL", concl, (pi2,), witness=a)

    return CutStrongSchema("boolExt", f, 14, build)


def comprehension_schema():
    P = Var("P", Fn(I, O))
    X = Var("X", I)
    f = beta_normal(exists("P", Fn(I, O), forall(
        "X", I, iff(App(P, X), leibniz(X, X, I)))))

    def build(schema, delta, c, d_c, d_not_c):
        na = neg(schema.formula)
        concl = Sequent(delta.formulas | {na})
        u = split_neg(split_neg(na))          # the universal under ¬∃
        s1 = Sequent(concl.formulas | {u})
        p = fresh_param(Fn(I, O), s1.params() | params_of(c))
        inst_p = beta_normal(App(split_pi(u)[1], Const(p, Fn(I, O))))
        s2 = Sequent(s1.formulas | {inst_p})
        a = Const(fresh_param(I, s2.params() | params_of(c)), I)
        inst_a = neg(beta_normal(App(split_pi(split_neg(inst_p))[1], a)))
        s3 = Sequent(s2.formulas | {inst_a})
        pa = App(Const(p, Fn(I, O)), a)
        eqaa = leibniz(a, a, I)
        impl1 = disj(neg(pa), eqaa)
        impl2 = disj(neg(eqaa), pa)
        pair = disj(neg(impl1), neg(impl2))
        assert inst_a == neg(neg(pair))
        s4 = Sequent(s3.formulas | {pair})
        s5 = Sequent(s4.formulas | {neg(impl1), neg(impl2)})
        # first split: on ¬impl2, reflexivity closes the left
        s6 = Sequent(s5.formulas | {neg(neg(eqaa))})
        refl = build_leib_refl(Sequent(s6.formulas), a, I)
        left1 = Node("neg", s6, (refl,))
        # right: park ¬(p a), split ¬impl1
        s7 = Sequent(s5.formulas | {neg(pa)})
        s8 = Sequent(s7.formulas | {neg(neg(pa))})
        s9 = Sequent(s8.formulas | {pa})
        left2 = Node("neg", s8, (Node("init", s9),))
        s10 = Sequent(s7.formulas | {neg(eqaa)})
        tail = _graft_tail(s10, neg(eqaa), Lam("X", I, c), c, d_c, d_not_c)
        orl2 = Node("orL", s7, (left2, tail))
        orl1 = Node("orL", s5, (left1, orl2))
        orr = Node("orR", s4, (orl1,))
        n4 = Node("neg", s3, (orr,))
        pil = Node("piL", s2, (n4,), witness=a)
        pir = Node("piR", s1, (pil,), eigen=p)
        return Node("neg", concl, (pir,))

    return CutStrongSchema("comprehension", f, 16, build)


def induction_schema():
    zero = Const("zero", I)
    succ = Const("succ", Fn(I, I))
    P = Var("P", Fn(I, O))
    X = Var("X", I)
    f = forall("P", Fn(I, O), implies(
        conj(App(P, zero),
             forall("X", I, implies(App(P, X), App(P, App(succ, X))))),
        forall("X", I, App(P, X))))

    def build(schema, delta, c, d_c, d_not_c):
        na = neg(schema.formula)
        concl = Sequent(delta.formulas | {na})
        a = Const(fresh_param(
            O, concl.params() | params_of(c) | {"zero", "succ"}), O)
        eqaa = leibniz(a, a, O)
        w = Lam("X", I, eqaa)
        _, body = split_pi(split_neg(na))
        inst = neg(beta_normal(App(body, w)))
        step = forall("X", I, disj(neg(eqaa), eqaa))
        k_conj = conj(eqaa, step)
        goal = forall("X", I, eqaa)
        assert inst == neg(disj(neg(k_conj), goal))
        s1 = Sequent(concl.formulas | {inst})
        # left: the instantiated hypothesis holds outright
        s2 = Sequent(s1.formulas | {neg(neg(k_conj))})
        s3 = Sequent(s2.formulas | {k_conj})
        s4 = Sequent(s3.formulas | {neg(neg(eqaa))})
        refl1 = build_leib_refl(Sequent(s4.formulas), a, O)
        left1 = Node("neg", s4, (refl1,))
        s5 = Sequent(s3.formulas | {neg(neg(step))})
        s6 = Sequent(s5.formulas | {step})
        ceig = fresh_param(I, s6.params())
        s7 = Sequent(s6.formulas | {disj(neg(eqaa), eqaa)})
        s8 = Sequent(s7.formulas | {neg(eqaa), eqaa})
        refl2 = build_leib_refl(Sequent(s8.formulas), a, O)
        left2 = Node("neg", s5,
                     (Node("piR", s6,
                           (Node("orR", s7, (refl2,)),), eigen=ceig),))
        hyp = Node("neg", s2, (Node("orL", s3, (left1, left2)),))
        # right: instantiate the conclusion at zero, then the 3-step closer
        s9 = Sequent(s1.formulas | {neg(goal)})
        s10 = Sequent(s9.formulas | {neg(eqaa)})
        tail = _graft_tail(s10, neg(eqaa), Lam("X", O, c), c, d_c, d_not_c)
        right = Node("piL", s9, (tail,), witness=zero)
        return Node("piL", concl, (Node("orL", s1, (hyp, right)),), witness=w)

    return CutStrongSchema("induction", f, 18, build)


def choice_schema(alpha):
    sel = Fn(Fn(alpha, O), alpha)
    Iv = Var("I", sel)
    Q = Var("Q", Fn(alpha, O))
    X = Var("X", alpha)
    f = beta_normal(exists("I", sel, forall(
        "Q", Fn(alpha, O),
        implies(exists("X", alpha, App(Q, X)), App(Q, App(Iv, Q))))))

    def build(schema, delta, c, d_c, d_not_c):
        na = neg(schema.formula)
        concl = Sequent(delta.formulas | {na})
        u = split_neg(split_neg(na))
        s1 = Sequent(concl.formulas | {u})
        i = fresh_param(sel, s1.params() | params_of(c))
        inst_i = beta_normal(App(split_pi(u)[1], Const(i, sel)))
        s2 = Sequent(s1.formulas | {inst_i})
        w = Lam("X", alpha, c)
        inst_w = neg(beta_normal(App(split_pi(split_neg(inst_i))[1], w)))
        exc = neg(forall("X", alpha, neg(c)))     # βnf of ∃X. (λX.C) X
        assert inst_w == neg(disj(neg(exc), c))
        s3 = Sequent(s2.formulas | {inst_w})
        # left: some witness satisfies the constant predicate
        s4 = Sequent(s3.formulas | {neg(neg(exc))})
        s5 = Sequent(s4.formulas | {exc})
        wit = Const(fresh_param(alpha, s5.params() | params_of(c)), alpha)
        s6 = Sequent(s5.formulas | {neg(neg(c))})
        left = Node(
            "neg", s4,
            (Node("piL", s5,
                  (Node("neg", s6, (_weak_to(d_c, s6.formulas | {c}),)),),
                  witness=wit),))
        right = _weak_to(d_not_c, s3.formulas | {neg(c)})
        orl = Node("orL", s3, (left, right))
        pil = Node("piL", s2, (orl,), witness=w)
        pir = Node("piR", s1, (pil,), eigen=i)
        return Node("neg", concl, (pir,))

    return CutStrongSchema("choice", f, 7, build)


def description_schema(alpha):
    sel = Fn(Fn(alpha, O), alpha)
    Iv = Var("I", sel)
    Q = Var("Q", Fn(alpha, O))
    X = Var("X", alpha)
    Y = Var("Y", alpha)
    f = beta_normal(exists("I", sel, forall(
        "Q", Fn(alpha, O),
        implies(
            exists("X", alpha,
                   conj(App(Q, X),
                        forall("Y", alpha,
                               implies(App(Q, Y), leibniz(X, Y, alpha))))),
            App(Q, App(Iv, Q))))))

    from .terms import split_or

    def build(schema, delta, c, d_c, d_not_c):
        na = neg(schema.formula)
        concl = Sequent(delta.formulas | {na})
        u = split_neg(split_neg(na))
        s1 = Sequent(concl.formulas | {u})
        i = fresh_param(sel, s1.params() | params_of(c))
        inst_i = beta_normal(App(split_pi(u)[1], Const(i, sel)))
        s2 = Sequent(s1.formulas | {inst_i})
        a = Const(fresh_param(alpha, s2.params() | params_of(c)), alpha)
        w = Lam("X", alpha, leibniz(a, Var("X", alpha), alpha))
        inst_w = neg(beta_normal(App(split_pi(split_neg(inst_i))[1], w)))
        s3 = Sequent(s2.formulas | {inst_w})
        lhs, eq_sel = split_or(split_neg(inst_w))
        exf = split_neg(lhs)            # ∃X. (a≐X) ∧ ∀Y. (a≐Y) ⇒ X≐Y
        # right: the description operator's output equals a
        s_r = Sequent(s3.formulas | {neg(eq_sel)})
        tail = _graft_tail(s_r, neg(eq_sel), Lam("X", alpha, c),
                           c, d_c, d_not_c)
        # left: a itself witnesses existence-with-uniqueness
        s4 = Sequent(s3.formulas | {neg(neg(exf))})
        s5 = Sequent(s4.formulas | {exf})
        inst2 = neg(beta_normal(App(split_pi(split_neg(exf))[1], a)))
        s6 = Sequent(s5.formulas | {inst2})
        ka = split_neg(split_neg(inst2))
        s7 = Sequent(s6.formulas | {ka})
        eqaa = leibniz(a, a, alpha)
        d1, d2 = split_or(split_neg(ka))
        step = split_neg(d2)            # ∀Y. (a≐Y) ⇒ (a≐Y)
        assert split_neg(d1) == eqaa
        s8 = Sequent(s7.formulas | {neg(neg(eqaa))})
        refl = build_leib_refl(Sequent(s8.formulas), a, alpha)
        l1 = Node("neg", s8, (refl,))
        s9 = Sequent(s7.formulas | {neg(neg(step))})
        s10 = Sequent(s9.formulas | {step})
        wpar = fresh_param(alpha, s10.params())
        body_inst = beta_normal(App(split_pi(step)[1], Const(wpar, alpha)))
        s11 = Sequent(s10.formulas | {body_inst})
        pl, pr = split_or(body_inst)
        s12 = Sequent(s11.formulas | {pl, pr})
        clash = build_leib_clash(s12, a, Const(wpar, alpha), alpha)
        l2 = Node("neg", s9,
                  (Node("piR", s10,
                        (Node("orR", s11, (clash,)),), eigen=wpar),))
        orl_k = Node("orL", s7, (l1, l2))
        n_k = Node("neg", s6, (orl_k,))
        pil_a = Node("piL", s5, (n_k,), witness=a)
        n_e = Node("neg", s4, (pil_a,))
        orl_top = Node("orL", s3, (n_e, tail))
        pil_w = Node("piL", s2, (orl_top,), witness=w)
        pir = Node("piR", s1, (pil_w,), eigen=i)
        return Node("neg", concl, (pir,))

    return CutStrongSchema("description", f, 25, build)


# -------------------------------------------------------------- registry

def builtin_schemas():
    """The ten built-in schemas under canonical instantiations (individual
    type for the type-parametric ones, fresh parameters m, n for the
    equation-based ones)."""
    m = Const("m", I)
    n = Const("n", I)
    return [
        trivial_schema(),
        tautology_schema(),
        leibniz_schema(m, n, I),
        andrews_schema(m, n, I),
        comprehension_schema(),
        bool_ext_schema(),
        func_ext_schema(I, I),
        induction_schema(),
        choice_schema(I),
        description_schema(I),
    ]


_NO_ARGS = {"trivial", "tautology", "comprehension", "boolExt", "induction"}

_CANON_NAMES = {
    "trivial": "trivial", "tautology": "tautology", "leibniz": "leibniz",
    "andrewseq": "andrewsEq", "boolext": "boolExt", "funcext": "funcExt",
    "comprehension": "comprehension", "comprehensioni": "comprehension",
    "induction": "induction", "choice": "choice", "description": "description",
}


def schema_by_name(ref, context=None):
    """Resolve a CLI-style schema name: bare for the fixed schemas, or
    name@type (funcExt@a,b takes two).  Names are case-insensitive.
    leibniz/andrewsEq pull their equation sides from a negated equation of
    the right type in the given context, falling back to fresh
    parameters."""
    from .syntax import parse_type

    name, _, args = ref.partition("@")
    name = _CANON_NAMES.get(name.strip().lower())
    if name is None:
        raise ValueError("unknown schema name %r" % ref.partition("@")[0])
    tys = []
    if args:
        for part in args.split(","):
            tys.append(parse_type(part))
    if name in _NO_ARGS:
        if tys:
            raise ValueError("schema %s takes no type arguments" % name)
        return {"trivial": trivial_schema, "tautology": tautology_schema,
                "comprehension": comprehension_schema,
                "boolExt": bool_ext_schema,
                "induction": induction_schema}[name]()
    if name == "funcExt":
        if len(tys) != 2:
            raise ValueError("funcExt needs two type arguments, e.g. funcExt@i,i")
        return func_ext_schema(*tys)
    if name in ("choice", "description"):
        if len(tys) != 1:
            raise ValueError("%s needs one type argument, e.g. %s@i"
                             % (name, name))
        return (choice_schema if name == "choice" else description_schema)(tys[0])
    if name in ("leibniz", "andrewsEq"):
        if len(tys) != 1:
            raise ValueError("%s needs one type argument, e.g. %s@o"
                             % (name, name))
        alpha = tys[0]
        splitter = split_leibniz if name == "leibniz" else split_andrews
        m = n = None
        if context is not None:
            for fm in sorted(context.formulas, key=canon):
                inner = split_neg(fm)
                if inner is None:
                    continue
                eq = splitter(inner)
                if eq is not None and eq[2] == alpha:
                    m, n = eq[0], eq[1]
                    break
        if m is None:
            avoid = context.params() if context is not None else set()
            mname = fresh_param(alpha, avoid)
            nname = fresh_param(alpha, avoid | {mname})
            m, n = Const(mname, alpha), Const(nname, alpha)
        make = leibniz_schema if name == "leibniz" else andrews_schema
        return make(m, n, alpha)
    raise ValueError("unknown schema name %r" % name)
