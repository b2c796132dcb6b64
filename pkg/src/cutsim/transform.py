"""Structural derivation transformers.

All operations take a checking derivation and return a checking
derivation; none of them ever increases the step count.  weaken and
rename_params are exactly size-preserving; neg_invert can shrink the
tree; simulate_cut swaps every cut node for the realizer-anchored cut
variant at equal size; eliminate_cuta and eliminate_cut_ge splice the
realizer skeletons in place of the cut nodes within the advertised
budget.

The workhorse is a single recursion that simultaneously applies a
parameter renaming and grows every sequent toward a target conclusion,
re-choosing universal-right eigen-parameters on the way down whenever
the enlarged context could collide with them.
"""

from __future__ import annotations

from .terms import (
    O, Fn, I, Term, Var, Const, App, Lam,
    beta_normal, is_beta_normal, free_vars, type_of, params_of,
    neg, split_neg, fresh_param, LOGICAL_NAMES, TermTypeError,
)
from .calculus import Sequent, SequentError, Node


class TransformError(Exception):
    """Base for refused transformations."""


class NotPresent(TransformError):
    """The formula whose double negation should be inverted is missing."""


class InvalidExtra(TransformError):
    """Weakening formulas must be closed, β-normal sentences."""


class NotCutStrong(TransformError):
    """The conclusion lacks the negated realizer formula."""


class SchemaMismatch(TransformError):
    """The schema's formula does not anchor the given derivation's cutA
    nodes."""


# ----------------------------------------------------------- renaming

def _rename_term(t, ren):
    if not ren:
        return t
    if isinstance(t, Const):
        n = ren.get(t.name)
        return t if n is None else Const(n, t.ty)
    if isinstance(t, App):
        return App(_rename_term(t.fn, ren), _rename_term(t.arg, ren))
    if isinstance(t, Lam):
        return Lam(t.name, t.ty, _rename_term(t.body, ren))
    return t


def _image(formulas, ren):
    if not ren:
        return frozenset(formulas)
    return frozenset(_rename_term(f, ren) for f in formulas)


def _subtree_params(node, out):
    out |= node.concl.params()
    for t in (node.witness, node.cut_formula):
        if t is not None:
            out |= params_of(t)
    for p in node.premises:
        _subtree_params(p, out)
    return out


def _gather_eigens(node, out):
    if node.eigen is not None:
        out.add(node.eigen)
    for p in node.premises:
        _gather_eigens(p, out)
    return out


def _param_type(node, name):
    """Type of a parameter occurring somewhere in the subtree, or None."""
    def scan(t):
        if isinstance(t, Const):
            return t.ty if t.name == name else None
        if isinstance(t, App):
            return scan(t.fn) or scan(t.arg)
        if isinstance(t, Lam):
            return scan(t.body)
        return None

    for f in node.concl:
        ty = scan(f)
        if ty is not None:
            return ty
    for t in (node.witness, node.cut_formula):
        if t is not None:
            ty = scan(t)
            if ty is not None:
                return ty
    for p in node.premises:
        ty = _param_type(p, name)
        if ty is not None:
            return ty
    return None


# ------------------------------------------------------ the map worker

def _map(node, ren, target, cut_to_cuta=False):
    """Rebuild `node` so that it concludes exactly `target`, after applying
    the parameter renaming `ren`.  Requires target ⊇ renamed conclusion.
    Admissible-format nodes (weak, negInv) are compiled away."""
    img = _image(node.concl.formulas, ren)
    extra = target.formulas - img
    assert img <= target.formulas, "weakening target lost formulas"

    if node.rule == "weak":
        return _map(node.premises[0], ren, target, cut_to_cuta)

    if node.rule == "negInv":
        prem = node.premises[0]
        inv = _find_neg_inv_formula(node)
        mapped = _map(prem, ren,
                      Sequent(_image(prem.concl.formulas, ren) | extra),
                      cut_to_cuta)
        out = _invert(mapped, _rename_term(inv, ren))
        return _pad(out, target)

    if node.rule == "piR":
        prem = node.premises[0]
        c = node.eigen
        avoid = (target.params() | set(ren.values())
                 | {ren.get(n, n) for n in _subtree_params(prem, set())})
        cty = _param_type(prem, c) or I
        d = fresh_param(cty, avoid)
        ren2 = dict(ren)
        ren2[c] = d
        ptarget = Sequent(_image(prem.concl.formulas, ren2) | extra)
        return Node("piR", target, (_map(prem, ren2, ptarget, cut_to_cuta),),
                    eigen=d)

    rule = node.rule
    if rule == "cut" and cut_to_cuta:
        rule = "cutA"
    kids = tuple(
        _map(p, ren, Sequent(_image(p.concl.formulas, ren) | extra),
             cut_to_cuta)
        for p in node.premises)
    return Node(rule, target, kids,
                witness=_rename_term(node.witness, ren) if node.witness is not None else None,
                eigen=None,
                cut_formula=_rename_term(node.cut_formula, ren) if node.cut_formula is not None else None,
                arg_count=node.arg_count, ty_a=node.ty_a, ty_b=node.ty_b)


def _find_neg_inv_formula(node):
    """Which member of a negInv node's conclusion was produced by stripping
    a double negation from the premise."""
    G = node.concl.formulas
    kid = node.premises[0].concl.formulas
    for f in sorted(G, key=repr):
        nn = neg(neg(f))
        if kid == G | {nn} or kid == (G - {f}) | {nn}:
            return f
    raise AssertionError("negInv node does not relate to its premise")


def _pad(d, target):
    """Weaken a derivation so its conclusion becomes exactly target."""
    if d.concl.formulas == target.formulas:
        return d
    return _map(d, {}, target)


# ------------------------------------------------------ public operations

def weaken(root, extra):
    """Add the given closed β-normal sentences to every sequent of the
    derivation.  Size-preserving; eigen-parameters are renamed where the
    additions would violate their side condition."""
    extra = tuple(extra.formulas if isinstance(extra, Sequent) else extra)
    for f in extra:
        if not isinstance(f, Term):
            raise InvalidExtra("weakening formulas must be terms")
        if free_vars(f):
            raise InvalidExtra("weakening formula is open")
        if not is_beta_normal(f):
            raise InvalidExtra("weakening formula is not β-normal")
    try:
        target = Sequent(root.concl.formulas | frozenset(extra))
    except SequentError as e:
        raise InvalidExtra(str(e)) from None
    return _map(root, {}, target)


def rename_params(root, mapping):
    """Apply a parameter renaming throughout the tree.  Size-preserving.
    The mapping may merge parameters only when they share a type; images
    must not be reserved logical names.  On a derivation using the
    realizer-anchored cut rule, the result checks for the renamed
    realizer."""
    for k, v in mapping.items():
        if v in LOGICAL_NAMES:
            raise ValueError("cannot rename %s to reserved name %s" % (k, v))
    occurring = _subtree_params(root, set())
    eigens = _gather_eigens(root, set())
    types = {}
    for n in sorted(occurring):
        if n in eigens:
            continue        # re-chosen on the way down, collisions are fine
        ty = _param_type(root, n)
        img = mapping.get(n, n)
        if ty is None:
            continue
        if img in types and types[img] != ty:
            raise ValueError(
                "renaming maps parameters of different types onto %s" % img)
        types[img] = ty
    mapping = {k: v for k, v in mapping.items() if k in occurring and k != v}
    target = Sequent(_image(root.concl.formulas, mapping))
    return _map(root, mapping, target)


def neg_invert(root, a, realizer=None):
    """Turn a derivation of Δ*¬¬A into one of Δ*A without increasing the
    step count.  `a` is A itself.  Pass the anchored cut rule's realizer
    (if any) so the one unsupported corner — inverting the negated
    realizer out from under its own cutA nodes — is refused instead of
    producing a broken tree."""
    nn = neg(neg(a))
    if nn not in root.concl.formulas:
        raise NotPresent("conclusion does not contain the doubly negated formula")
    if realizer is not None and neg(realizer) == nn:
        raise TransformError(
            "cannot invert the negated realizer: the anchored cut nodes "
            "need it in their conclusions")
    return _invert(root, a)


def _invert(node, a):
    nn = neg(neg(a))
    G = node.concl.formulas
    target = Sequent((G - {nn}) | {a})

    if node.rule == "neg":
        prem = node.premises[0]
        if prem.concl.formulas == (G - {nn}) | {a}:
            return prem
        if prem.concl.formulas == G | {a}:
            # principal ¬¬A retained in the premise: invert the child and
            # the node itself disappears
            return _pad(_invert(prem, a) if nn in prem.concl.formulas else prem,
                        target)

    # a premise concluding a subset of the conclusion makes the whole node
    # redundant for the inverted goal (covers cut / piL instances whose
    # added formula coincides with ¬¬A)
    for prem in node.premises:
        if prem.concl.formulas <= G:
            sub = _invert(prem, a) if nn in prem.concl.formulas else prem
            return _pad(sub, target)

    kids = []
    for prem in node.premises:
        if nn not in prem.concl.formulas:
            if node.rule == "cutA":
                raise TransformError(
                    "cutA premise dropped the formula being inverted; "
                    "invert before anchoring the cut or keep the realizer "
                    "distinct")
            raise AssertionError("parked double negation missing from premise")
        kids.append(_invert(prem, a))
    return Node(node.rule, target, tuple(kids), witness=node.witness,
                eigen=node.eigen, cut_formula=node.cut_formula,
                arg_count=node.arg_count, ty_a=node.ty_a, ty_b=node.ty_b)


def simulate_cut(root, schema):
    """Replace every plain cut node by the realizer-anchored variant for
    schema.formula, weakening so the negated realizer stays available in
    every conclusion.  Step count is preserved exactly; the result checks
    in the anchored-cut calculus."""
    na = neg(schema.formula)
    if na not in root.concl.formulas:
        raise NotCutStrong(
            "conclusion does not contain the negated realizer %r" % (na,))
    return _map(root, {}, root.concl, cut_to_cuta=True)


def _count_rule(node, rule):
    return (node.rule == rule) + sum(_count_rule(p, rule) for p in node.premises)


def eliminate_cuta(root, schema):
    """Expand every realizer-anchored cut node into the schema's realizer
    skeleton.  For d steps and n such nodes the result is cut-free with at
    most d + n·schema.k steps."""
    na = neg(schema.formula)

    def go(node):
        kids = tuple(go(p) for p in node.premises)
        if node.rule != "cutA":
            return Node(node.rule, node.concl, kids, witness=node.witness,
                        eigen=node.eigen, cut_formula=node.cut_formula,
                        arg_count=node.arg_count, ty_a=node.ty_a,
                        ty_b=node.ty_b)
        if na not in node.concl.formulas:
            raise SchemaMismatch(
                "cutA conclusion lacks the schema's negated formula")
        C = node.cut_formula
        G = node.concl.formulas
        d_c = _pad(kids[0], Sequent(G | {C}))
        d_not_c = _pad(kids[1], Sequent(G | {neg(C)}))
        out = schema.realize(node.concl, C, d_c, d_not_c)
        # realize concludes Δ*¬A = G since ¬A ∈ G already
        assert out.concl.formulas == G
        return out

    return go(root)


def eliminate_cut_ge(root):
    """In the extensional calculus, compile every cut node away: each one
    becomes a function-extensionality axiom step feeding the 11-step
    realizer expansion, so d steps with n cuts end at most at d + 12n."""
    from .schemas import func_ext_schema
    schema = func_ext_schema(I, I)
    na = neg(schema.formula)

    def go(node):
        kids = tuple(go(p) for p in node.premises)
        if node.rule != "cut":
            return Node(node.rule, node.concl, kids, witness=node.witness,
                        eigen=node.eigen, cut_formula=node.cut_formula,
                        arg_count=node.arg_count, ty_a=node.ty_a,
                        ty_b=node.ty_b)
        C = node.cut_formula
        G = node.concl.formulas
        Gp = G | {na}
        d_c = _pad(kids[0], Sequent(Gp | {C}))
        d_not_c = _pad(kids[1], Sequent(Gp | {neg(C)}))
        inner = schema.realize(Sequent(Gp), C, d_c, d_not_c)
        assert inner.concl.formulas == Gp
        return Node("extFAx", node.concl, (inner,), ty_a=I, ty_b=I)

    return go(root)
