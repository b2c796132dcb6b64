"""Simply typed lambda-calculus kernel.

Types are generated from the base type of propositions `o`, the base type of
individuals `i`, and right-nested function types.  Terms are variables,
constants, applications and typed abstractions.  Three constant families are
logical and reserved: Neg : o->o, Or : o->o->o and the type-indexed
Pi : (a->o)->o used for universal quantification.  Every other constant is a
parameter.

Terms compare and hash up to renaming of bound variables; all equality checks
elsewhere in the package rely on that.  Everything here is immutable and
pure — in particular the fresh-name supply is a function of an explicit
avoid-set, not a global counter.
"""

from __future__ import annotations

from dataclasses import dataclass


class TermTypeError(TypeError):
    """An ill-typed application, substitution or constructor call."""


# ---------------------------------------------------------------- types

@dataclass(frozen=True)
class Base:
    name: str

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class Fn:
    dom: "Base | Fn"
    cod: "Base | Fn"

    def __repr__(self):
        d = repr(self.dom)
        if isinstance(self.dom, Fn):
            d = "(%s)" % d
        return "%s->%s" % (d, repr(self.cod))


O = Base("o")
I = Base("i")

Ty = (Base, Fn)


def fn(*tys):
    """Right-associated function type: fn(a, b, c) == a -> (b -> c)."""
    if not tys:
        raise ValueError("fn() needs at least one type")
    out = tys[-1]
    for t in reversed(tys[:-1]):
        out = Fn(t, out)
    return out


# ---------------------------------------------------------------- terms

class Term:
    # _key/_h/_ty/_canon/_fv/_pm/_bnf are lazily-filled caches; terms are
    # immutable, so every derived attribute is computed at most once.
    __slots__ = ("_key", "_h", "_ty", "_canon", "_fv", "_pm", "_bnf")

    def _alpha_key(self):
        k = getattr(self, "_key", None)
        if k is None:
            k = _key_of(self, {}, 0)
            object.__setattr__(self, "_key", k)
        return k

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Term):
            return NotImplemented
        return self._alpha_key() == other._alpha_key()

    def __hash__(self):
        h = getattr(self, "_h", None)
        if h is None:
            h = hash(self._alpha_key())
            object.__setattr__(self, "_h", h)
        return h

    def __repr__(self):
        return canon(self)


class Var(Term):
    __slots__ = ("name", "ty")

    def __init__(self, name, ty):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "ty", ty)

    def __setattr__(self, *a):
        raise AttributeError("terms are immutable")


class Const(Term):
    __slots__ = ("name", "ty")

    def __init__(self, name, ty):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "ty", ty)

    def __setattr__(self, *a):
        raise AttributeError("terms are immutable")


class App(Term):
    __slots__ = ("fn", "arg")

    def __init__(self, f, arg):
        object.__setattr__(self, "fn", f)
        object.__setattr__(self, "arg", arg)

    def __setattr__(self, *a):
        raise AttributeError("terms are immutable")


class Lam(Term):
    __slots__ = ("name", "ty", "body")

    def __init__(self, name, ty, body):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "ty", ty)
        object.__setattr__(self, "body", body)

    def __setattr__(self, *a):
        raise AttributeError("terms are immutable")


def _key_of(t, binders, depth):
    # Canonical key: bound variables become de-Bruijn-style offsets, so two
    # alpha-convertible terms produce identical keys.
    if isinstance(t, Var):
        d = binders.get(t.name)
        if d is None:
            return ("v", t.name, t.ty)
        return ("b", depth - d)
    if isinstance(t, Const):
        return ("c", t.name, t.ty)
    if isinstance(t, App):
        return ("a", _key_of(t.fn, binders, depth), _key_of(t.arg, binders, depth))
    if isinstance(t, Lam):
        old = binders.get(t.name)
        binders[t.name] = depth
        k = ("l", t.ty, _key_of(t.body, binders, depth + 1))
        if old is None:
            del binders[t.name]
        else:
            binders[t.name] = old
        return k
    raise TypeError("not a term: %r" % (t,))


def alpha_eq(t1, t2):
    """True iff t1 and t2 are identical up to bound-variable renaming."""
    return t1 == t2


def canon(t):
    """Deterministic structural string; used only for stable orderings
    and debug output (the pretty-printer lives in the syntax module)."""
    c = getattr(t, "_canon", None)
    if c is None:
        c = repr(t._alpha_key())
        object.__setattr__(t, "_canon", c)
    return c


# ------------------------------------------------------- logical constants

LOGICAL_NAMES = frozenset({"Neg", "Or", "Pi"})

NEG = Const("Neg", Fn(O, O))
OR = Const("Or", Fn(O, Fn(O, O)))


def pi_const(ty):
    """The universal quantifier constant at element type ty."""
    return Const("Pi", Fn(Fn(ty, O), O))


def is_logical_const(t):
    return isinstance(t, Const) and t.name in LOGICAL_NAMES


# ---------------------------------------------------------------- queries

def type_of(t):
    if isinstance(t, (Var, Const)):
        return t.ty
    ty = getattr(t, "_ty", None)
    if ty is not None:
        return ty
    if isinstance(t, App):
        ft = type_of(t.fn)
        at = type_of(t.arg)
        if not isinstance(ft, Fn) or ft.dom != at:
            raise TermTypeError(
                "cannot apply %r (type %r) to argument of type %r"
                % (t.fn, ft, at))
        ty = ft.cod
    elif isinstance(t, Lam):
        ty = Fn(t.ty, type_of(t.body))
    else:
        raise TypeError("not a term: %r" % (t,))
    object.__setattr__(t, "_ty", ty)
    return ty


def free_vars(t):
    """Names of free variables, as a frozenset."""
    fv = getattr(t, "_fv", None)
    if fv is not None:
        return fv
    if isinstance(t, Var):
        fv = frozenset({t.name})
    elif isinstance(t, Const):
        fv = frozenset()
    elif isinstance(t, App):
        fv = free_vars(t.fn) | free_vars(t.arg)
    else:
        fv = free_vars(t.body) - {t.name}
    object.__setattr__(t, "_fv", fv)
    return fv


def params_of(t):
    """Names of parameters (non-logical constants) occurring in t, as a
    frozenset."""
    pm = getattr(t, "_pm", None)
    if pm is not None:
        return pm
    if isinstance(t, Var):
        pm = frozenset()
    elif isinstance(t, Const):
        pm = (frozenset() if t.name in LOGICAL_NAMES
              else frozenset({t.name}))
    elif isinstance(t, App):
        pm = params_of(t.fn) | params_of(t.arg)
    else:
        pm = params_of(t.body)
    object.__setattr__(t, "_pm", pm)
    return pm


def spine(t):
    """Split nested applications: returns (head, [arg1, ..., argn])."""
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    args.reverse()
    return t, args


def mk_app(head, *args):
    for a in args:
        head = App(head, a)
    return head


def is_atomic(f):
    """A type-o term in β-normal form is atomic when the head of its
    application spine is not a logical constant."""
    if type_of(f) != O:
        raise TermTypeError("is_atomic expects a formula, got type %r" % (type_of(f),))
    head, _ = spine(f)
    return not is_logical_const(head)


def closed_subterms(t):
    """All closed subterms of t (terms containing no free variable),
    including t itself when closed.  Deduplicated up to alpha-equality."""
    out = set()

    def go(t):
        if not free_vars(t):
            out.add(t)
        if isinstance(t, App):
            go(t.fn)
            go(t.arg)
        elif isinstance(t, Lam):
            go(t.body)

    go(t)
    return out


# --------------------------------------------------------- fresh names

def fresh_var(base, avoid):
    """Fresh bound-variable name derived from base by appending primes."""
    n = base
    while n in avoid:
        n = n + "'"
    return n


_PREFIX_BY_RESULT = {O: "a", I: "c"}


def _prefix_for(ty):
    if isinstance(ty, Base):
        return _PREFIX_BY_RESULT[ty]
    # function types: prefix by result family
    cod = ty
    while isinstance(cod, Fn):
        cod = cod.cod
    if cod == O:
        return "p"
    if cod == I:
        return "f"
    return "g"


def fresh_param(ty, avoid):
    """Deterministic fresh parameter name for a type: the lowest unused name
    in a fixed per-type enumeration, relative to the explicit avoid-set."""
    base = _prefix_for(ty)
    if base not in avoid:
        return base
    k = 1
    while True:
        n = "%s%d" % (base, k)
        if n not in avoid:
            return n
        k += 1


# ------------------------------------------------------- substitution

def subst(body, name, value):
    """Capture-avoiding substitution of value for the free variable name."""
    vty = type_of(value)
    vfree = free_vars(value)

    def go(t):
        if isinstance(t, Var):
            if t.name == name:
                if t.ty != vty:
                    raise TermTypeError(
                        "substituting %r for %s:%r" % (vty, name, t.ty))
                return value
            return t
        if isinstance(t, Const):
            return t
        if isinstance(t, App):
            return App(go(t.fn), go(t.arg))
        # Lam
        if t.name == name:
            return t
        bfree = free_vars(t.body)
        if name not in bfree:
            return t
        if t.name in vfree:
            nn = fresh_var(t.name, vfree | bfree | {name})
            nb = subst(t.body, t.name, Var(nn, t.ty))
            return Lam(nn, t.ty, go(nb))
        return Lam(t.name, t.ty, go(t.body))

    return go(body)


# ------------------------------------------------------- normalization

def beta_normal(t):
    """The β-normal form (unique up to alpha for well-typed terms)."""
    if isinstance(t, (Var, Const)):
        return t
    if isinstance(t, Lam):
        return Lam(t.name, t.ty, beta_normal(t.body))
    f = beta_normal(t.fn)
    a = beta_normal(t.arg)
    if isinstance(f, Lam):
        return beta_normal(subst(f.body, f.name, a))
    return App(f, a)


def is_beta_normal(t):
    if isinstance(t, (Var, Const)):
        return True
    b = getattr(t, "_bnf", None)
    if b is None:
        if isinstance(t, Lam):
            b = is_beta_normal(t.body)
        elif isinstance(t.fn, Lam):
            b = False
        else:
            b = is_beta_normal(t.fn) and is_beta_normal(t.arg)
        object.__setattr__(t, "_bnf", b)
    return b


def _eta_pass(t):
    if isinstance(t, (Var, Const)):
        return t
    if isinstance(t, App):
        return App(_eta_pass(t.fn), _eta_pass(t.arg))
    b = _eta_pass(t.body)
    if (isinstance(b, App) and isinstance(b.arg, Var)
            and b.arg.name == t.name and b.arg.ty == t.ty
            and t.name not in free_vars(b.fn)):
        return b.fn
    return Lam(t.name, t.ty, b)


def beta_eta_normal(t):
    """βη-normal form: β-normalize, then η-contract, to a joint fixpoint."""
    t = beta_normal(t)
    while True:
        t2 = _eta_pass(t)
        if t2 == t:
            return t
        t = beta_normal(t2)


# ------------------------------------------------------- connective sugar

def neg(a):
    return App(NEG, a)


def disj(a, b):
    return App(App(OR, a), b)


def conj(a, b):
    return neg(disj(neg(a), neg(b)))


def implies(a, b):
    return disj(neg(a), b)


def iff(a, b):
    # left-to-right conjunct first; several step counts depend on this shape
    return conj(implies(a, b), implies(b, a))


def pi(ty, f):
    return App(pi_const(ty), f)


def forall(name, ty, body):
    return pi(ty, Lam(name, ty, body))


def exists(name, ty, body):
    return neg(pi(ty, Lam(name, ty, neg(body))))


def leibniz(a, b, ty):
    """The equation 'a equals b' at type ty in the indiscernibility reading:
    every predicate holding of a holds of b."""
    if type_of(a) != ty or type_of(b) != ty:
        raise TermTypeError("leibniz operands must both have type %r" % (ty,))
    p = fresh_var("P", free_vars(a) | free_vars(b))
    pv = Var(p, Fn(ty, O))
    return pi(Fn(ty, O), Lam(p, Fn(ty, O),
                             disj(neg(App(pv, a)), App(pv, b))))


def andrews_eq(a, b, ty):
    """The relational equality definition: the normal form of
    (λX λY. ∀Q. (∀Z. Q Z Z) ⇒ Q X Y) applied to a and b."""
    if type_of(a) != ty or type_of(b) != ty:
        raise TermTypeError("andrews_eq operands must both have type %r" % (ty,))
    qn = fresh_var("Q", free_vars(a) | free_vars(b))
    q = Var(qn, fn(ty, ty, O))
    raw = Lam("X", ty, Lam("Y", ty, pi(
        fn(ty, ty, O),
        Lam(qn, fn(ty, ty, O),
            disj(neg(forall("Z", ty, mk_app(q, Var("Z", ty), Var("Z", ty)))),
                 mk_app(q, Var("X", ty), Var("Y", ty)))))))
    return beta_normal(App(App(raw, a), b))


# ------------------------------------------------------- shape recognizers

def split_neg(t):
    if isinstance(t, App) and t.fn == NEG:
        return t.arg
    return None


def split_or(t):
    if (isinstance(t, App) and isinstance(t.fn, App)
            and t.fn.fn == OR):
        return t.fn.arg, t.arg
    return None


def split_pi(t):
    """Match App(Pi-at-ty, f); returns (element type, f) or None."""
    if (isinstance(t, App) and isinstance(t.fn, Const)
            and t.fn.name == "Pi" and isinstance(t.fn.ty, Fn)
            and isinstance(t.fn.ty.dom, Fn)):
        return t.fn.ty.dom.dom, t.arg
    return None


def split_leibniz(t):
    """Match the indiscernibility-equation shape built by leibniz();
    returns (a, b, ty) or None."""
    p = split_pi(t)
    if p is None:
        return None
    pty, f = p
    if not (isinstance(f, Lam) and isinstance(pty, Fn) and pty.cod == O):
        return None
    ty = pty.dom
    body = split_or(f.body)
    if body is None:
        return None
    l, r = body
    ln = split_neg(l)
    if ln is None or not isinstance(ln, App) or not isinstance(r, App):
        return None
    if not (isinstance(ln.fn, Var) and ln.fn.name == f.name and ln.fn.ty == pty):
        return None
    if not (isinstance(r.fn, Var) and r.fn.name == f.name and r.fn.ty == pty):
        return None
    a, b = ln.arg, r.arg
    if f.name in free_vars(a) | free_vars(b):
        return None
    return a, b, ty


def split_andrews(t):
    """Match the relational-equation normal form built by andrews_eq();
    returns (a, b, ty) or None."""
    p = split_pi(t)
    if p is None:
        return None
    qty, f = p
    if not (isinstance(f, Lam) and isinstance(qty, Fn)
            and isinstance(qty.cod, Fn) and qty.cod.cod == O):
        return None
    ty = qty.dom
    if qty.cod.dom != ty:
        return None
    body = split_or(f.body)
    if body is None:
        return None
    l, r = body
    ln = split_neg(l)
    if ln is None:
        return None
    ip = split_pi(ln)
    if ip is None:
        return None
    zty, zf = ip
    if zty != ty or not isinstance(zf, Lam):
        return None
    want = mk_app(Var(f.name, qty), Var(zf.name, ty), Var(zf.name, ty))
    if zf.body != want:
        return None
    rh, rargs = spine(r)
    if not (isinstance(rh, Var) and rh.name == f.name and rh.ty == qty
            and len(rargs) == 2):
        return None
    a, b = rargs
    if f.name in free_vars(a) | free_vars(b):
        return None
    return a, b, ty
