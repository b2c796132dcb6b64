"""One-sided sequent calculi and the derivation checker.

A sequent is a finite set of β-normal closed formulas, read disjunctively.
Adding a member already present leaves the sequent unchanged, and every rule
below is checked up to that set semantics: a node is accepted when SOME
instance of the rule matches, i.e. some choice of principal formula(s) in the
conclusion and some context Δ (the conclusion with or without the principals)
makes every premise equal Δ plus the rule's new formulas, with one consistent
Δ across all premises.

Derivations are trees whose nodes carry their concluded sequent explicitly;
the step count of a derivation is its number of nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from itertools import combinations

from .terms import (
    O, I, Fn, Term, Const, App, Lam, Var,
    beta_normal, is_beta_normal, type_of, free_vars, params_of,
    is_atomic, canon, neg, disj, forall, implies, iff, leibniz,
    split_neg, split_or, split_pi, split_leibniz, spine,
    is_logical_const, fresh_param, TermTypeError,
)


class SequentError(ValueError):
    pass


class Sequent:
    """Immutable set of β-normal closed type-o sentences."""

    __slots__ = ("formulas", "_sorted")

    def __init__(self, formulas=()):
        fs = frozenset(formulas)
        for f in fs:
            if free_vars(f):
                raise SequentError("open formula in sequent: %s" % canon(f))
            if type_of(f) != O:
                raise SequentError("non-propositional formula in sequent: %s" % canon(f))
            if not is_beta_normal(f):
                raise SequentError("formula not in normal form: %s" % canon(f))
        object.__setattr__(self, "formulas", fs)

    @classmethod
    def normalized(cls, formulas):
        """Build a sequent, normalizing each formula first."""
        return cls(beta_normal(f) for f in formulas)

    def add(self, *fs):
        return Sequent(self.formulas | frozenset(fs))

    def union(self, other):
        fs = other.formulas if isinstance(other, Sequent) else frozenset(other)
        return Sequent(self.formulas | fs)

    def without(self, *fs):
        return Sequent(self.formulas - frozenset(fs))

    def params(self):
        out = set()
        for f in self.formulas:
            out |= params_of(f)
        return out

    def __contains__(self, f):
        return f in self.formulas

    def __iter__(self):
        s = getattr(self, "_sorted", None)
        if s is None:
            s = tuple(sorted(self.formulas, key=canon))
            object.__setattr__(self, "_sorted", s)
        return iter(s)

    def __len__(self):
        return len(self.formulas)

    def __eq__(self, other):
        if not isinstance(other, Sequent):
            return NotImplemented
        return self.formulas == other.formulas

    def __hash__(self):
        return hash(self.formulas)

    def __setattr__(self, *a):
        raise AttributeError("sequents are immutable")

    def __repr__(self):
        return "Sequent{%s}" % ", ".join(canon(f) for f in self)


# ------------------------------------------------------------ calculi

RULE_NAMES = frozenset({
    "init", "neg", "negInv", "weak", "orL", "orR", "piL", "piR",
    "cut", "cutA", "extFAx", "extBAx", "propF", "propB", "initLeib", "dec",
})

ADMISSIBLE_ONLY = frozenset({"negInv", "weak"})

_BASE_RULES = frozenset({"init", "neg", "orL", "orR", "piL", "piR"})


@dataclass(frozen=True)
class Calculus:
    name: str
    rules: frozenset
    realizer: Term | None = None   # fixed formula A for the cutA rule


GB = Calculus("gb", _BASE_RULES)
GB_CUT = Calculus("gbcut", _BASE_RULES | {"cut"})
GBE = Calculus("gbe", _BASE_RULES | {"extFAx", "extBAx"})
GBE_CUT = Calculus("gbecut", GBE.rules | {"cut"})
GBFB_MINUS = Calculus("gbfbminus", _BASE_RULES | {"propF", "propB"})
GBFB = Calculus("gbfb", GBFB_MINUS.rules | {"initLeib", "dec"})


def gb_cuta(realizer):
    """The base calculus plus the fixed-realizer cut variant for `realizer`."""
    if type_of(realizer) != O or free_vars(realizer) or not is_beta_normal(realizer):
        raise SequentError("cutA realizer must be a β-normal sentence")
    return Calculus("gbcuta", _BASE_RULES | {"cutA"}, realizer)


#: calculi addressable by name in files and on the command line
CALCULI = {c.name: c for c in (GB, GB_CUT, GBE, GBE_CUT, GBFB_MINUS, GBFB)}


def calculus_by_name(name, realizer=None):
    if name == "gbcuta":
        if realizer is None:
            raise KeyError("calculus gbcuta needs a realizer formula")
        return gb_cuta(realizer)
    return CALCULI[name]


# ------------------------------------------------------------ axioms

def ext_fun_axiom(a, b):
    """Pointwise-equal functions a->b are equal."""
    fty = Fn(a, b)
    F = Var("F", fty)
    G = Var("G", fty)
    X = Var("X", a)
    pointwise = forall("X", a, leibniz(App(F, X), App(G, X), b))
    return forall("F", fty, forall("G", fty,
                                   implies(pointwise, leibniz(F, G, fty))))


def ext_bool_axiom():
    """Equivalent propositions are equal."""
    A = Var("A", O)
    B = Var("B", O)
    return forall("A", O, forall("B", O, implies(iff(A, B), leibniz(A, B, O))))


# ------------------------------------------------------------ derivations

class Node:
    """One derivation node: rule name, concluded sequent, premise subtrees,
    and the rule's parameters (only those relevant to the rule are set)."""

    __slots__ = ("rule", "concl", "premises", "witness", "eigen",
                 "cut_formula", "arg_count", "ty_a", "ty_b", "_size")

    def __init__(self, rule, concl, premises=(), *, witness=None, eigen=None,
                 cut_formula=None, arg_count=None, ty_a=None, ty_b=None):
        if rule not in RULE_NAMES:
            raise ValueError("unknown rule name: %r" % (rule,))
        if not isinstance(concl, Sequent):
            raise TypeError("node conclusion must be a Sequent")
        object.__setattr__(self, "rule", rule)
        object.__setattr__(self, "concl", concl)
        object.__setattr__(self, "premises", tuple(premises))
        object.__setattr__(self, "witness", witness)
        object.__setattr__(self, "eigen", eigen)
        object.__setattr__(self, "cut_formula", cut_formula)
        object.__setattr__(self, "arg_count", arg_count)
        object.__setattr__(self, "ty_a", ty_a)
        object.__setattr__(self, "ty_b", ty_b)
        object.__setattr__(self, "_size", None)

    def size(self):
        s = self._size
        if s is None:
            s = 1 + sum(p.size() for p in self.premises)
            object.__setattr__(self, "_size", s)
        return s

    def __setattr__(self, *a):
        raise AttributeError("derivation nodes are immutable")

    def __repr__(self):
        return "Node(%s, %d premises, concl=%r)" % (
            self.rule, len(self.premises), self.concl)


def step_count(node):
    """Number of rule applications in the derivation (one per node)."""
    return node.size()


def nodes_equal(a, b):
    """Structural equality of derivations up to alpha-equality of the
    formulas involved (used for golden-file comparisons)."""
    if a.rule != b.rule or a.concl != b.concl:
        return False
    if (a.witness != b.witness or a.eigen != b.eigen
            or a.cut_formula != b.cut_formula or a.arg_count != b.arg_count
            or a.ty_a != b.ty_a or a.ty_b != b.ty_b):
        return False
    if len(a.premises) != len(b.premises):
        return False
    return all(nodes_equal(x, y) for x, y in zip(a.premises, b.premises))


# ------------------------------------------------------------ checking

class CheckError(Exception):
    """A derivation node failed validation.

    reason is one of: rule-not-in-calculus, shape-mismatch,
    eigenvariable-violation, not-beta-normal, not-atomic, type-mismatch.
    path locates the node from the root by premise indices.
    """

    def __init__(self, reason, message, path=()):
        self.reason = reason
        self.message = message
        self.path = tuple(path)
        super().__init__(str(self))

    def __str__(self):
        where = ".".join(str(i) for i in self.path) or "root"
        return "%s: %s: %s" % (where, self.reason, self.message)

    def at(self, path):
        return CheckError(self.reason, self.message, path)


@dataclass(frozen=True)
class Matched:
    """How a node matched its rule: the conclusion formulas consumed as
    principals (empty for context-free rules like cut) and the context Δ."""
    principals: tuple
    delta: frozenset


def _delta_options(G, principals):
    seen = set()
    for r in range(len(principals), -1, -1):
        for combo in combinations(principals, r):
            d = G - frozenset(combo)
            if d not in seen:
                seen.add(d)
                yield d


def _premises_fit(node, principals, added_per_premise):
    """Find a context Δ making every premise equal Δ ∪ added-formulas."""
    G = node.concl.formulas
    kids = [p.concl.formulas for p in node.premises]
    if len(kids) != len(added_per_premise):
        return None
    for delta in _delta_options(G, principals):
        if all(kid == delta | add for kid, add in zip(kids, added_per_premise)):
            return Matched(tuple(principals), delta)
    return None


def _sorted_members(seq):
    return list(seq)


def _fail(reason, message):
    raise CheckError(reason, message)


def _need_premises(node, n):
    if len(node.premises) != n:
        _fail("shape-mismatch",
              "rule %s takes %d premise(s), node has %d"
              % (node.rule, n, len(node.premises)))


def _closed_formula(t, what):
    if free_vars(t):
        _fail("shape-mismatch", "%s must be closed" % what)
    try:
        ty = type_of(t)
    except TermTypeError as e:
        _fail("type-mismatch", "%s is ill-typed: %s" % (what, e))
    return ty


def _match_init(node, calc):
    _need_premises(node, 0)
    G = node.concl.formulas
    saw_pair = False
    for f in _sorted_members(node.concl):
        a = split_neg(f)
        if a is not None and a in G:
            saw_pair = True
            if is_atomic(a):
                return Matched((a, f), G - {a, f})
    if saw_pair:
        _fail("not-atomic", "clash pair exists but no member of it is atomic")
    _fail("shape-mismatch", "no clashing pair A, ~A in the conclusion")


def _match_neg(node, calc):
    _need_premises(node, 1)
    for f in _sorted_members(node.concl):
        inner = split_neg(f)
        if inner is None:
            continue
        a = split_neg(inner)
        if a is None:
            continue
        m = _premises_fit(node, (f,), [frozenset({a})])
        if m:
            return m
    _fail("shape-mismatch", "no doubly negated member matches the premise")


def _match_or_l(node, calc):
    _need_premises(node, 2)
    for f in _sorted_members(node.concl):
        inner = split_neg(f)
        if inner is None:
            continue
        ab = split_or(inner)
        if ab is None:
            continue
        a, b = ab
        m = _premises_fit(node, (f,), [frozenset({neg(a)}), frozenset({neg(b)})])
        if m:
            return m
    _fail("shape-mismatch", "no negated disjunction matches the premises")


def _match_or_r(node, calc):
    _need_premises(node, 1)
    for f in _sorted_members(node.concl):
        ab = split_or(f)
        if ab is None:
            continue
        a, b = ab
        m = _premises_fit(node, (f,), [frozenset({a, b})])
        if m:
            return m
    _fail("shape-mismatch", "no disjunction matches the premise")


def _match_pi_l(node, calc):
    _need_premises(node, 1)
    w = node.witness
    if w is None:
        _fail("shape-mismatch", "piL needs a witness term")
    # witnesses may have any type; check closedness and typability only
    if free_vars(w):
        _fail("shape-mismatch", "piL witness must be closed")
    try:
        wty = type_of(w)
    except TermTypeError as e:
        _fail("type-mismatch", "piL witness is ill-typed: %s" % e)
    candidates = False
    for f in _sorted_members(node.concl):
        inner = split_neg(f)
        if inner is None:
            continue
        p = split_pi(inner)
        if p is None:
            continue
        alpha, body = p
        candidates = True
        if wty != alpha:
            continue
        inst = neg(beta_normal(App(body, w)))
        m = _premises_fit(node, (f,), [frozenset({inst})])
        if m:
            return m
    if candidates:
        _fail("type-mismatch",
              "witness type %r fits no negated universal member" % (wty,))
    _fail("shape-mismatch", "no negated universal member in the conclusion")


def _match_pi_r(node, calc):
    _need_premises(node, 1)
    c = node.eigen
    if not c:
        _fail("shape-mismatch", "piR needs an eigen-parameter name")
    universals = [(f, p) for f in _sorted_members(node.concl)
                  if (p := split_pi(f)) is not None]
    if not universals:
        _fail("shape-mismatch", "no universal member in the conclusion")
    if c in node.concl.params():
        _fail("eigenvariable-violation",
              "eigen-parameter %s occurs in the conclusion" % c)
    for f, (alpha, body) in universals:
        inst = beta_normal(App(body, Const(c, alpha)))
        m = _premises_fit(node, (f,), [frozenset({inst})])
        if m:
            return m
    _fail("shape-mismatch", "no universal member matches the premise")


def _check_cut_formula(node):
    cf = node.cut_formula
    if cf is None:
        _fail("shape-mismatch", "cut needs a cut formula")
    if free_vars(cf):
        _fail("shape-mismatch", "cut formula must be closed")
    try:
        ty = type_of(cf)
    except TermTypeError as e:
        _fail("type-mismatch", "cut formula is ill-typed: %s" % e)
    if ty != O:
        _fail("type-mismatch", "cut formula must have type o, got %r" % (ty,))
    if not is_beta_normal(cf):
        _fail("not-beta-normal", "cut formula must be β-normal")
    return cf


def _match_cut(node, calc):
    _need_premises(node, 2)
    cf = _check_cut_formula(node)
    G = node.concl.formulas
    if (node.premises[0].concl.formulas == G | {cf}
            and node.premises[1].concl.formulas == G | {neg(cf)}):
        return Matched((), G)
    _fail("shape-mismatch", "cut premises must be Δ plus C and Δ plus ~C")


def _match_cut_a(node, calc):
    _need_premises(node, 2)
    a = calc.realizer
    if a is None:
        _fail("rule-not-in-calculus", "calculus has no fixed realizer for cutA")
    cf = _check_cut_formula(node)
    na = neg(a)
    if na not in node.concl.formulas:
        _fail("shape-mismatch",
              "cutA conclusion must contain the negated realizer")
    m = _premises_fit(node, (na,), [frozenset({cf}), frozenset({neg(cf)})])
    if m:
        return m
    _fail("shape-mismatch", "cutA premises must be Δ plus C and Δ plus ~C")


def _match_ext_f(node, calc):
    _need_premises(node, 1)
    if node.ty_a is None or node.ty_b is None:
        _fail("shape-mismatch", "extFAx needs its two type arguments")
    ax = ext_fun_axiom(node.ty_a, node.ty_b)
    G = node.concl.formulas
    if node.premises[0].concl.formulas == G | {neg(ax)}:
        return Matched((), G)
    _fail("shape-mismatch",
          "extFAx premise must add the negated function axiom at the given types")


def _match_ext_b(node, calc):
    _need_premises(node, 1)
    ax = ext_bool_axiom()
    G = node.concl.formulas
    if node.premises[0].concl.formulas == G | {neg(ax)}:
        return Matched((), G)
    _fail("shape-mismatch", "extBAx premise must add the negated claim axiom")


def _match_prop_f(node, calc):
    _need_premises(node, 1)
    for f in _sorted_members(node.concl):
        eq = split_leibniz(f)
        if eq is None:
            continue
        a, b, ty = eq
        if not isinstance(ty, Fn):
            continue
        X = Var("X", ty.dom)
        pointwise = beta_normal(
            forall("X", ty.dom, leibniz(App(a, X), App(b, X), ty.cod)))
        m = _premises_fit(node, (f,), [frozenset({pointwise})])
        if m:
            return m
    _fail("shape-mismatch", "no function-typed equation matches the premise")


def _match_prop_b(node, calc):
    _need_premises(node, 2)
    for f in _sorted_members(node.concl):
        eq = split_leibniz(f)
        if eq is None:
            continue
        a, b, ty = eq
        if ty != O:
            continue
        m = _premises_fit(node, (f,), [frozenset({neg(a), b}),
                                       frozenset({neg(b), a})])
        if m:
            return m
    _fail("shape-mismatch", "no propositional equation matches the premises")


def _match_init_leib(node, calc):
    _need_premises(node, 1)
    G = node.concl.formulas
    kid = node.premises[0].concl
    saw_eq = False
    saw_non_atomic = False
    for f in _sorted_members(kid):
        eq = split_leibniz(f)
        if eq is None:
            continue
        a, b, ty = eq
        if ty != O:
            continue
        saw_eq = True
        na = neg(a)
        if na not in G or b not in G:
            continue
        for delta in _delta_options(G, (na, b)):
            if kid.formulas == delta | {f}:
                if is_atomic(a) and is_atomic(b):
                    return Matched((na, b), delta)
                saw_non_atomic = True
                break
    if saw_non_atomic:
        _fail("not-atomic", "initLeib operands must be atomic")
    if saw_eq:
        _fail("shape-mismatch",
              "premise equation does not match a ~A, B pair in the conclusion")
    _fail("shape-mismatch", "premise adds no propositional equation")


def _match_dec(node, calc):
    if not node.premises:
        _fail("shape-mismatch", "dec needs at least one premise")
    for f in _sorted_members(node.concl):
        eq = split_leibniz(f)
        if eq is None:
            continue
        lhs, rhs, ty = eq
        if ty not in (O, I):
            continue
        h1, args1 = spine(lhs)
        h2, args2 = spine(rhs)
        if not (isinstance(h1, Const) and not is_logical_const(h1)):
            continue
        if h1 != h2 or len(args1) != len(args2) or not args1:
            continue
        n = len(args1)
        if node.arg_count is not None and node.arg_count != n:
            continue
        if len(node.premises) != n:
            continue
        try:
            added = [frozenset({leibniz(args1[i], args2[i], type_of(args1[i]))})
                     for i in range(n)]
        except TermTypeError:
            continue
        m = _premises_fit(node, (f,), added)
        if m:
            return m
    _fail("shape-mismatch",
          "no head-parameter equation matches the premise equations")


def _match_weak(node, calc):
    _need_premises(node, 1)
    if node.premises[0].concl.formulas <= node.concl.formulas:
        return Matched((), node.premises[0].concl.formulas)
    _fail("shape-mismatch", "weak premise must be a subset of the conclusion")


def _match_neg_inv(node, calc):
    _need_premises(node, 1)
    for f in _sorted_members(node.concl):
        m = _premises_fit(node, (f,), [frozenset({neg(neg(f))})])
        if m:
            return m
    _fail("shape-mismatch", "no member matches the doubly negated premise")


_MATCHERS = {
    "init": _match_init,
    "neg": _match_neg,
    "orL": _match_or_l,
    "orR": _match_or_r,
    "piL": _match_pi_l,
    "piR": _match_pi_r,
    "cut": _match_cut,
    "cutA": _match_cut_a,
    "extFAx": _match_ext_f,
    "extBAx": _match_ext_b,
    "propF": _match_prop_f,
    "propB": _match_prop_b,
    "initLeib": _match_init_leib,
    "dec": _match_dec,
    "weak": _match_weak,
    "negInv": _match_neg_inv,
}


def check_node(node, calculus, allow_admissible=False):
    """Validate one node locally (its rule, parameters and the relation of
    its conclusion to its premises' conclusions).  Returns the Matched
    record; raises CheckError."""
    r = node.rule
    if r in ADMISSIBLE_ONLY:
        if not allow_admissible:
            _fail("rule-not-in-calculus",
                  "%s is an admissible-format rule; pass allow_admissible to accept it" % r)
    elif r not in calculus.rules:
        _fail("rule-not-in-calculus",
              "rule %s is not part of calculus %s" % (r, calculus.name))
    return _MATCHERS[r](node, calculus)


def check_derivation(root, calculus, allow_admissible=False):
    """Check every node of the derivation; returns the step count or raises
    CheckError locating the first failing node in preorder."""
    def walk(node, path):
        try:
            check_node(node, calculus, allow_admissible)
        except CheckError as e:
            raise e.at(path) from None
        for i, p in enumerate(node.premises):
            walk(p, path + (i,))

    walk(root, ())
    return root.size()


def match_node(node, calculus, allow_admissible=False):
    """check_node under a name that reads better in the transformers."""
    return check_node(node, calculus, allow_admissible)


# ----------------------------------------------- backward rule instances

@dataclass(frozen=True)
class RuleInstance:
    """A rule application read backwards: what premises would be needed to
    conclude a given goal."""
    rule: str
    premises: tuple
    principals: tuple = ()
    witness: Term | None = None
    eigen: str | None = None
    cut_formula: Term | None = None
    arg_count: int | None = None
    ty_a: object = None
    ty_b: object = None

    def make_node(self, premise_trees, goal):
        return Node(self.rule, goal, premise_trees,
                    witness=self.witness, eigen=self.eigen,
                    cut_formula=self.cut_formula, arg_count=self.arg_count,
                    ty_a=self.ty_a, ty_b=self.ty_b)


def _variants(goal, principals, added_per_premise, *, maximal_only=False,
              **params):
    """Instances for each context choice: principal(s) dropped (smaller
    premises) and retained; both are sound under set semantics and both are
    needed for completeness of matching.  With maximal_only only the
    retained-principal instance is emitted: its premises are supersets of
    every dropped variant's premises, and weakening preserves step count,
    so restricting to it cannot change minimal proof sizes (that is the
    search-side setting)."""
    if maximal_only:
        deltas = [goal.formulas]
    else:
        deltas = _delta_options(goal.formulas, principals)
    out = []
    for delta in deltas:
        prems = tuple(Sequent(delta | add) for add in added_per_premise)
        out.append(RuleInstance(premises=prems, principals=tuple(principals),
                                **params))
    return out


def applicable_rule_instances(goal, calculus, pool=(), *, maximal_only=False):
    """All rule instances concluding exactly `goal`, complete for every rule
    except piL/cut/cutA, which are restricted to the witness/cut-formula
    pool.  extFAx type pairs are drawn from a small deterministic candidate
    set (base types plus function types visible in the goal).  maximal_only
    drops the principal-removing context variants; see _variants."""
    _variants_ = partial(_variants, maximal_only=maximal_only)
    out = []
    members = _sorted_members(goal)
    rules = calculus.rules

    if "init" in rules:
        for f in members:
            a = split_neg(f)
            if a is not None and a in goal.formulas and is_atomic(a):
                out.append(RuleInstance(rule="init", premises=(),
                                        principals=(a, f)))
                break

    if "initLeib" in rules:
        for f in members:
            a = split_neg(f)
            if a is None or not is_atomic(a):
                continue
            for g in members:
                if type_of(g) != O or not is_atomic(g):
                    continue
                eq = leibniz(a, g, O)
                out.extend(_variants_(goal, (f, g), [frozenset({eq})],
                                     rule="initLeib"))

    if "neg" in rules:
        for f in members:
            inner = split_neg(f)
            if inner is None:
                continue
            a = split_neg(inner)
            if a is None:
                continue
            out.extend(_variants_(goal, (f,), [frozenset({a})], rule="neg"))

    if "orR" in rules:
        for f in members:
            ab = split_or(f)
            if ab is None:
                continue
            out.extend(_variants_(goal, (f,), [frozenset({ab[0], ab[1]})],
                                 rule="orR"))

    if "orL" in rules:
        for f in members:
            inner = split_neg(f)
            if inner is None:
                continue
            ab = split_or(inner)
            if ab is None:
                continue
            out.extend(_variants_(goal, (f,),
                                 [frozenset({neg(ab[0])}), frozenset({neg(ab[1])})],
                                 rule="orL"))

    if "propB" in rules:
        for f in members:
            eq = split_leibniz(f)
            if eq is None or eq[2] != O:
                continue
            a, b, _ = eq
            out.extend(_variants_(goal, (f,),
                                 [frozenset({neg(a), b}), frozenset({neg(b), a})],
                                 rule="propB"))

    if "propF" in rules:
        for f in members:
            eq = split_leibniz(f)
            if eq is None or not isinstance(eq[2], Fn):
                continue
            a, b, ty = eq
            X = Var("X", ty.dom)
            pointwise = beta_normal(
                forall("X", ty.dom, leibniz(App(a, X), App(b, X), ty.cod)))
            out.extend(_variants_(goal, (f,), [frozenset({pointwise})],
                                 rule="propF"))

    if "dec" in rules:
        for f in members:
            eq = split_leibniz(f)
            if eq is None or eq[2] not in (O, I):
                continue
            lhs, rhs, _ = eq
            h1, args1 = spine(lhs)
            h2, args2 = spine(rhs)
            if not (isinstance(h1, Const) and not is_logical_const(h1)):
                continue
            if h1 != h2 or len(args1) != len(args2) or not args1:
                continue
            try:
                added = [frozenset({leibniz(args1[i], args2[i],
                                            type_of(args1[i]))})
                         for i in range(len(args1))]
            except TermTypeError:
                continue
            out.extend(_variants_(goal, (f,), added, rule="dec",
                                 arg_count=len(args1)))

    if "piR" in rules:
        for f in members:
            p = split_pi(f)
            if p is None:
                continue
            alpha, body = p
            c = fresh_param(alpha, goal.params())
            inst = beta_normal(App(body, Const(c, alpha)))
            out.extend(_variants_(goal, (f,), [frozenset({inst})],
                                 rule="piR", eigen=c))

    if "piL" in rules:
        for f in members:
            inner = split_neg(f)
            if inner is None:
                continue
            p = split_pi(inner)
            if p is None:
                continue
            alpha, body = p
            for w in pool:
                try:
                    if type_of(w) != alpha:
                        continue
                except TermTypeError:
                    continue
                if free_vars(w):
                    continue
                inst = neg(beta_normal(App(body, w)))
                out.extend(_variants_(goal, (f,), [frozenset({inst})],
                                     rule="piL", witness=w))

    if "extBAx" in rules:
        out.append(RuleInstance(
            rule="extBAx",
            premises=(goal.add(neg(ext_bool_axiom())),)))

    if "extFAx" in rules:
        for ta, tb in _ext_type_candidates(goal):
            out.append(RuleInstance(
                rule="extFAx", ty_a=ta, ty_b=tb,
                premises=(goal.add(neg(ext_fun_axiom(ta, tb))),)))

    if "cut" in rules:
        for cf in pool:
            try:
                if type_of(cf) != O:
                    continue
            except TermTypeError:
                continue
            if free_vars(cf) or not is_beta_normal(cf):
                continue
            out.append(RuleInstance(
                rule="cut", cut_formula=cf,
                premises=(goal.add(cf), goal.add(neg(cf)))))

    if "cutA" in rules and calculus.realizer is not None:
        na = neg(calculus.realizer)
        if na in goal.formulas:
            for cf in pool:
                try:
                    if type_of(cf) != O:
                        continue
                except TermTypeError:
                    continue
                if free_vars(cf) or not is_beta_normal(cf):
                    continue
                out.extend(_variants_(goal, (na,),
                                     [frozenset({cf}), frozenset({neg(cf)})],
                                     rule="cutA", cut_formula=cf))

    # dedupe: identical premise tuples under the same rule and parameters
    seen = set()
    deduped = []
    for inst in out:
        key = (inst.rule, inst.premises, inst.witness, inst.eigen,
               inst.cut_formula, inst.arg_count, inst.ty_a, inst.ty_b)
        if key not in seen:
            seen.add(key)
            deduped.append(inst)
    return deduped


def _ext_type_candidates(goal):
    """Deterministic, finite (α, β) candidates for the function axiom rule:
    the base pair (i, i) plus any function type visible in the goal."""
    cands = [(I, I)]
    seen = {(I, I)}

    def visit_ty(ty):
        if isinstance(ty, Fn):
            pair = (ty.dom, ty.cod)
            if pair not in seen:
                seen.add(pair)
                cands.append(pair)
            visit_ty(ty.dom)
            visit_ty(ty.cod)

    def visit(t):
        if isinstance(t, (Var, Const)):
            visit_ty(t.ty)
        elif isinstance(t, App):
            visit(t.fn)
            visit(t.arg)
        elif isinstance(t, Lam):
            visit_ty(t.ty)
            visit(t.body)

    for f in goal:
        visit(f)
    return cands
