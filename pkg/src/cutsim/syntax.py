"""Concrete text syntax: parser and printer for types, terms, sequents,
derivation trees and problem files.

Grammar summary (tightest first: application, ~, &, |, =>, <=>; the
equation forms == @ T and === @ T bind loosest and are non-associative;
binders \\x:T. ..., !x:T. ..., ?x:T. ... extend as far right as possible):

    type  := 'o' | 'i' | type '->' type | '(' type ')'
    term  := application | '~' term | term '&' term | term '|' term
           | term '=>' term | term '<=>' term
           | term '==' term '@' type | term '===' term '@' type
           | '\\'x':'type'.' term | '!'x':'type'.' term | '?'x':'type'.' term
           | 'Neg' | 'Or' | 'Pi' '@' type | ident | '(' term ')'

Problem files hold `const name : T.` declarations, `seq name { F, ... }`
sequents and `derivation name calcname [:realizer (A)] node` trees, where
node is an S-expression

    ( rule param* :concl { F, ... } premise* )

with rule parameters `:w (term)` for the universal-left witness, `:c name`
for the universal-right eigen-parameter, `:f (term)` for cut formulas,
`:a type :b type` for the function-axiom types, and a bare integer argument
count for spine decomposition.  `#` starts a line comment.  Undeclared
identifiers get their types inferred from context where a simple
expected-type propagation suffices; anything genuinely ambiguous must be
declared.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .terms import (
    O, I, Base, Fn, Term, Var, Const, App, Lam,
    type_of, free_vars, params_of, beta_normal, is_logical_const,
    leibniz, andrews_eq, fresh_var, subst,
    split_neg, split_or, split_pi, split_leibniz, split_andrews, spine,
    canon, TermTypeError, LOGICAL_NAMES,
)
from .calculus import (
    Sequent, SequentError, Node, RULE_NAMES, CALCULI, calculus_by_name,
)


class ParseError(Exception):
    """category is one of: lexical, syntactic, typing, scoping."""

    def __init__(self, category, line, col, message):
        self.category = category
        self.line = line
        self.col = col
        self.message = message
        super().__init__("line %d, col %d: %s: %s" % (line, col, category, message))


# ---------------------------------------------------------------- lexer

_SYMBOLS = ["===", "<=>", "==", "=>", "->", "(", ")", "{", "}",
            ",", ".", ":", "@", "\\", "~", "|", "&", "!", "?"]
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_INT = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class Tok:
    kind: str       # 'ident', 'int', 'sym', 'eof'
    text: str
    line: int
    col: int


def _lex(src):
    toks = []
    i = 0
    line = 1
    start = 0  # index of line start
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            i += 1
            start = i
            continue
        if ch in " \t\r":
            i += 1
            continue
        if ch == "#":
            while i < n and src[i] != "\n":
                i += 1
            continue
        col = i - start + 1
        m = _IDENT.match(src, i)
        if m:
            toks.append(Tok("ident", m.group(), line, col))
            i = m.end()
            continue
        m = _INT.match(src, i)
        if m:
            toks.append(Tok("int", m.group(), line, col))
            i = m.end()
            continue
        for s in _SYMBOLS:
            if src.startswith(s, i):
                toks.append(Tok("sym", s, line, col))
                i += len(s)
                break
        else:
            raise ParseError("lexical", line, col, "unexpected character %r" % ch)
    toks.append(Tok("eof", "", line, (n - start) + 1))
    return toks


# ------------------------------------------------------------ parser core

class _P:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, text):
        t = self.peek()
        return t.kind == "sym" and t.text == text

    def at_ident(self, text=None):
        t = self.peek()
        return t.kind == "ident" and (text is None or t.text == text)

    def eat(self, text):
        if not self.at(text):
            t = self.peek()
            raise ParseError("syntactic", t.line, t.col,
                             "expected %r, found %r" % (text, t.text or "end of input"))
        return self.next()

    def eat_ident(self):
        t = self.peek()
        if t.kind != "ident":
            raise ParseError("syntactic", t.line, t.col,
                             "expected identifier, found %r" % (t.text or "end of input"))
        return self.next()

    def fail(self, msg, tok=None):
        t = tok or self.peek()
        raise ParseError("syntactic", t.line, t.col, msg)


# types -------------------------------------------------------------

def _parse_type(p):
    t = _parse_type_atom(p)
    if p.at("->"):
        p.next()
        return Fn(t, _parse_type(p))
    return t


def _parse_type_atom(p):
    if p.at("("):
        p.next()
        t = _parse_type(p)
        p.eat(")")
        return t
    tok = p.eat_ident()
    if tok.text == "o":
        return O
    if tok.text == "i":
        return I
    raise ParseError("syntactic", tok.line, tok.col,
                     "unknown base type %r (only o and i exist)" % tok.text)


# untyped term AST: tuples tagged by kind, each carrying the source token
# ('id', tok) ('app', f, x, tok) ('lam', name, ty, body, tok)
# ('picon', ty, tok) ('negcon', tok) ('orcon', tok)
# ('leib', l, r, ty, tok) ('andr', l, r, ty, tok)

_ATOM_STARTS = {"(", "\\", "!", "?", "~"}


def _mk_neg(m, tok):
    return ("app", ("negcon", tok), m, tok)


def _mk_or(l, r, tok):
    return ("app", ("app", ("orcon", tok), l, tok), r, tok)


def _parse_term(p):
    tok = p.peek()
    l = _parse_iff(p)
    if p.at("==") or p.at("==="):
        op = p.next()
        r = _parse_iff(p)
        p.eat("@")
        ty = _parse_type(p)
        kind = "leib" if op.text == "==" else "andr"
        return (kind, l, r, ty, tok)
    return l


def _parse_iff(p):
    tok = p.peek()
    l = _parse_imp(p)
    if p.at("<=>"):
        p.next()
        r = _parse_iff(p)
        # A <=> B unfolds to (A => B) & (B => A), left conjunct first
        f = _mk_or(_mk_neg(l, tok), r, tok)
        g = _mk_or(_mk_neg(r, tok), l, tok)
        return _mk_neg(_mk_or(_mk_neg(f, tok), _mk_neg(g, tok), tok), tok)
    return l


def _parse_imp(p):
    tok = p.peek()
    l = _parse_or(p)
    if p.at("=>"):
        p.next()
        r = _parse_imp(p)
        return _mk_or(_mk_neg(l, tok), r, tok)
    return l


def _parse_or(p):
    tok = p.peek()
    l = _parse_and(p)
    while p.at("|"):
        p.next()
        l = _mk_or(l, _parse_and(p), tok)
    return l


def _parse_and(p):
    tok = p.peek()
    l = _parse_neg(p)
    while p.at("&"):
        p.next()
        r = _parse_neg(p)
        l = _mk_neg(_mk_or(_mk_neg(l, tok), _mk_neg(r, tok), tok), tok)
    return l


def _parse_neg(p):
    if p.at("~"):
        tok = p.next()
        return _mk_neg(_parse_neg(p), tok)
    return _parse_app(p)


def _starts_atom(p):
    t = p.peek()
    if t.kind == "ident":
        return True
    return t.kind == "sym" and t.text in _ATOM_STARTS and t.text != "~"


def _parse_app(p):
    t = _parse_atom(p)
    while _starts_atom(p):
        tok = p.peek()
        t = ("app", t, _parse_atom(p), tok)
    return t


def _parse_binder(p, tok):
    name = p.eat_ident()
    p.eat(":")
    ty = _parse_type(p)
    p.eat(".")
    body = _parse_term(p)
    return name.text, ty, body


def _parse_atom(p):
    tok = p.peek()
    if p.at("("):
        p.next()
        t = _parse_term(p)
        p.eat(")")
        return t
    if p.at("\\"):
        p.next()
        name, ty, body = _parse_binder(p, tok)
        return ("lam", name, ty, body, tok)
    if p.at("!"):
        p.next()
        name, ty, body = _parse_binder(p, tok)
        return ("app", ("picon", ty, tok), ("lam", name, ty, body, tok), tok)
    if p.at("?"):
        p.next()
        name, ty, body = _parse_binder(p, tok)
        inner = ("app", ("picon", ty, tok), ("lam", name, ty, _mk_neg(body, tok), tok), tok)
        return _mk_neg(inner, tok)
    if tok.kind == "ident":
        p.next()
        if tok.text == "Pi":
            p.eat("@")
            ty = _parse_type(p)
            return ("picon", ty, tok)
        if tok.text == "Neg":
            return ("negcon", tok)
        if tok.text == "Or":
            return ("orcon", tok)
        return ("id", tok)
    p.fail("expected a term")


# ------------------------------------------------------------ elaboration

class _Uninferred(Exception):
    def __init__(self, tok):
        self.tok = tok


def _ty_str(ty):
    return print_type(ty)


def _check_expected(got, expected, tok):
    if expected is not None and got != expected:
        raise ParseError("typing", tok.line, tok.col,
                         "expected type %s, found %s" % (_ty_str(expected), _ty_str(got)))


def _elab(node, expected, env, sig):
    kind = node[0]
    if kind == "id":
        tok = node[1]
        name = tok.text
        if name in env:
            _check_expected(env[name], expected, tok)
            return Var(name, env[name])
        if name in sig:
            _check_expected(sig[name], expected, tok)
            return Const(name, sig[name])
        if expected is None:
            raise _Uninferred(tok)
        sig[name] = expected
        return Const(name, expected)
    if kind == "picon":
        ty, tok = node[1], node[2]
        t = Const("Pi", Fn(Fn(ty, O), O))
        _check_expected(t.ty, expected, tok)
        return t
    if kind == "negcon":
        _check_expected(Fn(O, O), expected, node[1])
        return Const("Neg", Fn(O, O))
    if kind == "orcon":
        _check_expected(Fn(O, Fn(O, O)), expected, node[1])
        return Const("Or", Fn(O, Fn(O, O)))
    if kind == "app":
        _, fnode, xnode, tok = node
        try:
            f = _elab(fnode, None, env, sig)
        except _Uninferred as u:
            # infer the head from the argument and the expected result type
            x = _elab(xnode, None, env, sig)
            if expected is None:
                raise ParseError("typing", u.tok.line, u.tok.col,
                                 "cannot infer type of %r; declare it" % u.tok.text) from None
            f = _elab(fnode, Fn(type_of(x), expected), env, sig)
            return App(f, x)
        fty = type_of(f)
        if not isinstance(fty, Fn):
            raise ParseError("typing", tok.line, tok.col,
                             "applying a term of base type %s" % _ty_str(fty))
        x = _elab(xnode, fty.dom, env, sig)
        _check_expected(fty.cod, expected, tok)
        return App(f, x)
    if kind == "lam":
        _, name, ty, body, tok = node
        bexp = None
        if expected is not None:
            if not isinstance(expected, Fn) or expected.dom != ty:
                raise ParseError("typing", tok.line, tok.col,
                                 "abstraction on %s does not fit expected type %s"
                                 % (_ty_str(ty), _ty_str(expected)))
            bexp = expected.cod
        env2 = dict(env)
        env2[name] = ty
        b = _elab(body, bexp, env2, sig)
        return Lam(name, ty, b)
    if kind in ("leib", "andr"):
        _, lnode, rnode, ty, tok = node
        l = _elab(lnode, ty, env, sig)
        r = _elab(rnode, ty, env, sig)
        _check_expected(O, expected, tok)
        try:
            return leibniz(l, r, ty) if kind == "leib" else andrews_eq(l, r, ty)
        except TermTypeError as e:
            raise ParseError("typing", tok.line, tok.col, str(e)) from None
    raise AssertionError("bad AST node %r" % (kind,))


def _reserved_check(name, tok):
    if name in LOGICAL_NAMES or name in ("o", "i"):
        raise ParseError("scoping", tok.line, tok.col,
                         "%r is reserved and cannot be declared" % name)


# ------------------------------------------------------------ public API

def parse_type(text):
    p = _P(_lex(text))
    t = _parse_type(p)
    if p.peek().kind != "eof":
        p.fail("trailing input after type")
    return t


def parse_term(text, sig=None, expected=None):
    """Parse and type a term.  sig maps declared parameter names to types;
    undeclared names are inferred where the context determines them and
    recorded into sig."""
    sig = {} if sig is None else sig
    p = _P(_lex(text))
    ast = _parse_term(p)
    if p.peek().kind != "eof":
        p.fail("trailing input after term")
    return _elab_root(ast, expected, sig)


def _elab_root(ast, expected, sig):
    try:
        return _elab(ast, expected, {}, sig)
    except _Uninferred as u:
        raise ParseError("typing", u.tok.line, u.tok.col,
                         "cannot infer type of %r; declare it" % u.tok.text) from None


def parse_sequent(text, sig=None):
    sig = {} if sig is None else sig
    p = _P(_lex(text))
    s = _parse_sequent_body(p, sig)
    if p.peek().kind != "eof":
        p.fail("trailing input after sequent")
    return s


def _parse_sequent_body(p, sig):
    open_tok = p.eat("{")
    fs = []
    if not p.at("}"):
        while True:
            tok = p.peek()
            ast = _parse_term(p)
            t = _elab_root(ast, O, sig)
            fs.append((beta_normal(t), tok))
            if p.at(","):
                p.next()
                continue
            break
    p.eat("}")
    for t, tok in fs:
        if free_vars(t):
            raise ParseError("scoping", tok.line, tok.col,
                             "sequent members must be closed; %s is open"
                             % ", ".join(sorted(free_vars(t))))
    try:
        return Sequent(t for t, _ in fs)
    except SequentError as e:
        raise ParseError("typing", open_tok.line, open_tok.col, str(e)) from None


def _parse_param_term(p, sig, expected=None):
    """Rule parameters are single atoms; parenthesize compound terms."""
    tok = p.peek()
    if not (p.at("(") or tok.kind == "ident" or p.at("\\")):
        p.fail("expected a term atom (parenthesize compound terms)")
    ast = _parse_atom(p)
    return _elab_root(ast, expected, sig)


def parse_derivation(text, sig=None):
    sig = {} if sig is None else sig
    p = _P(_lex(text))
    node = _parse_node(p, sig)
    if p.peek().kind != "eof":
        p.fail("trailing input after derivation")
    return node


def _parse_node(p, sig):
    p.eat("(")
    rtok = p.eat_ident()
    rule = rtok.text
    if rule not in RULE_NAMES:
        raise ParseError("syntactic", rtok.line, rtok.col,
                         "unknown rule name %r" % rule)
    witness = eigen = cut_formula = arg_count = ty_a = ty_b = None
    concl = None
    while True:
        if p.peek().kind == "int":
            arg_count = int(p.next().text)
            continue
        if not p.at(":"):
            break
        p.next()
        key = p.eat_ident().text
        if key == "concl":
            concl = _parse_sequent_body(p, sig)
            break
        if key == "w":
            witness = _parse_param_term(p, sig)
        elif key == "c":
            eigen = p.eat_ident().text
        elif key == "f":
            cut_formula = beta_normal(_parse_param_term(p, sig, expected=O))
        elif key == "a":
            ty_a = _parse_type(p)
        elif key == "b":
            ty_b = _parse_type(p)
        else:
            raise ParseError("syntactic", rtok.line, rtok.col,
                             "unknown node parameter :%s" % key)
    if concl is None:
        p.fail("node needs a :concl sequent")
    kids = []
    while p.at("("):
        kids.append(_parse_node(p, sig))
    p.eat(")")
    return Node(rule, concl, tuple(kids), witness=witness, eigen=eigen,
                cut_formula=cut_formula, arg_count=arg_count,
                ty_a=ty_a, ty_b=ty_b)


@dataclass
class DerivationDecl:
    name: str
    calc_name: str
    realizer: Term | None
    root: Node

    def calculus(self):
        return calculus_by_name(self.calc_name, self.realizer)


@dataclass
class SourceProblem:
    sig: dict = field(default_factory=dict)
    sequents: dict = field(default_factory=dict)
    derivations: list = field(default_factory=list)


_CALC_NAMES = set(CALCULI) | {"gbcuta"}


def parse_problem(text):
    p = _P(_lex(text))
    prob = SourceProblem()
    while p.peek().kind != "eof":
        tok = p.eat_ident()
        if tok.text == "const":
            ntok = p.eat_ident()
            _reserved_check(ntok.text, ntok)
            p.eat(":")
            ty = _parse_type(p)
            p.eat(".")
            old = prob.sig.get(ntok.text)
            if old is not None and old != ty:
                raise ParseError("scoping", ntok.line, ntok.col,
                                 "%r already declared with type %s"
                                 % (ntok.text, _ty_str(old)))
            prob.sig[ntok.text] = ty
        elif tok.text == "seq":
            ntok = p.eat_ident()
            if ntok.text in prob.sequents:
                raise ParseError("scoping", ntok.line, ntok.col,
                                 "sequent %r already defined" % ntok.text)
            prob.sequents[ntok.text] = _parse_sequent_body(p, prob.sig)
        elif tok.text == "derivation":
            ntok = p.eat_ident()
            if any(d.name == ntok.text for d in prob.derivations):
                raise ParseError("scoping", ntok.line, ntok.col,
                                 "derivation %r already defined" % ntok.text)
            ctok = p.eat_ident()
            if ctok.text not in _CALC_NAMES:
                raise ParseError("syntactic", ctok.line, ctok.col,
                                 "unknown calculus %r (one of: %s)"
                                 % (ctok.text, ", ".join(sorted(_CALC_NAMES))))
            realizer = None
            if p.at(":"):
                save = p.i
                p.next()
                key = p.eat_ident()
                if key.text != "realizer":
                    p.i = save
                else:
                    realizer = beta_normal(_parse_param_term(p, prob.sig, expected=O))
            if ctok.text == "gbcuta" and realizer is None:
                raise ParseError("syntactic", ctok.line, ctok.col,
                                 "calculus gbcuta needs a :realizer formula")
            root = _parse_node(p, prob.sig)
            prob.derivations.append(
                DerivationDecl(ntok.text, ctok.text, realizer, root))
        else:
            raise ParseError("syntactic", tok.line, tok.col,
                             "expected const, seq or derivation, found %r" % tok.text)
    return prob


# ---------------------------------------------------------------- printing

def print_type(ty):
    if isinstance(ty, Base):
        return ty.name
    d = print_type(ty.dom)
    if isinstance(ty.dom, Fn):
        d = "(%s)" % d
    return "%s->%s" % (d, print_type(ty.cod))


# precedence levels, loosest first
_EQ, _IFF, _IMP, _OR, _AND, _NEG, _APP, _ATOM = range(8)


def _binder_name(n, ty, body):
    avoid = params_of(body) | (free_vars(body) - {n}) | LOGICAL_NAMES | {"o", "i"}
    if n in avoid:
        n2 = fresh_var(n, avoid)
        return n2, subst(body, n, Var(n2, ty))
    return n, body


def _match_iff(t):
    inner = split_neg(t)
    if inner is None:
        return None
    lr = split_or(inner)
    if lr is None:
        return None
    l = split_neg(lr[0])
    r = split_neg(lr[1])
    if l is None or r is None:
        return None
    lo = split_or(l)
    ro = split_or(r)
    if lo is None or ro is None:
        return None
    a = split_neg(lo[0])
    b2 = split_neg(ro[0])
    if a is None or b2 is None:
        return None
    if lo[1] == b2 and ro[1] == a:
        return a, lo[1]
    return None


def _match_exists(t):
    inner = split_neg(t)
    if inner is None:
        return None
    pp = split_pi(inner)
    if pp is None:
        return None
    ty, f = pp
    if isinstance(f, Lam) and f.ty == ty:
        body = split_neg(f.body)
        if body is not None:
            return f.name, ty, body
    return None


def print_term(t):
    return _pp(t, _EQ)


def _wrap(s, level, ctx):
    return "(%s)" % s if level < ctx else s


def _pp(t, ctx):
    eq = split_leibniz(t)
    if eq is not None:
        s = "%s == %s @ %s" % (_pp(eq[0], _IFF), _pp(eq[1], _IFF),
                               print_type(eq[2]))
        return _wrap(s, _EQ, ctx)
    eq = split_andrews(t)
    if eq is not None:
        s = "%s === %s @ %s" % (_pp(eq[0], _IFF), _pp(eq[1], _IFF),
                                print_type(eq[2]))
        return _wrap(s, _EQ, ctx)
    m = _match_iff(t)
    if m is not None:
        s = "%s <=> %s" % (_pp(m[0], _IMP), _pp(m[1], _IFF))
        return _wrap(s, _IFF, ctx)
    m = _match_exists(t)
    if m is not None:
        n, ty, body = m
        n, body = _binder_name(n, ty, body)
        s = "?%s:%s. %s" % (n, print_type(ty), _pp(body, _EQ))
        return _wrap(s, _EQ, ctx)
    inner = split_neg(t)
    if inner is not None:
        lr = split_or(inner)
        if lr is not None:
            nl = split_neg(lr[0])
            nr = split_neg(lr[1])
            if nl is not None and nr is not None:
                s = "%s & %s" % (_pp(nl, _AND), _pp(nr, _NEG))
                return _wrap(s, _AND, ctx)
        return _wrap("~%s" % _pp(inner, _NEG), _NEG, ctx)
    lr = split_or(t)
    if lr is not None:
        nl = split_neg(lr[0])
        if nl is not None:
            s = "%s => %s" % (_pp(nl, _OR), _pp(lr[1], _IMP))
            return _wrap(s, _IMP, ctx)
        s = "%s | %s" % (_pp(lr[0], _OR), _pp(lr[1], _AND))
        return _wrap(s, _OR, ctx)
    pp = split_pi(t)
    if pp is not None and isinstance(pp[1], Lam) and pp[1].ty == pp[0]:
        f = pp[1]
        n, body = _binder_name(f.name, f.ty, f.body)
        s = "!%s:%s. %s" % (n, print_type(pp[0]), _pp(body, _EQ))
        return _wrap(s, _EQ, ctx)
    if isinstance(t, App):
        head, args = spine(t)
        parts = [_pp(head, _ATOM)] + [_pp(a, _ATOM) for a in args]
        return _wrap(" ".join(parts), _APP, ctx)
    if isinstance(t, Lam):
        n, body = _binder_name(t.name, t.ty, t.body)
        s = "\\%s:%s. %s" % (n, print_type(t.ty), _pp(body, _EQ))
        return _wrap(s, _EQ, ctx)
    if isinstance(t, Const):
        if t.name == "Pi":
            ety = t.ty.dom.dom
            sty = print_type(ety)
            if isinstance(ety, Fn):
                sty = "(%s)" % sty
            return "Pi@%s" % sty
        return t.name
    if isinstance(t, Var):
        return t.name
    raise TypeError("cannot print %r" % (t,))


def print_sequent(s):
    return "{%s}" % ", ".join(_pp(f, _EQ) for f in s)


def print_derivation(node, indent=0):
    pad = "  " * indent
    parts = [pad, "(", node.rule]
    if node.arg_count is not None:
        parts.append(" %d" % node.arg_count)
    if node.witness is not None:
        parts.append(" :w (%s)" % print_term(node.witness))
    if node.eigen is not None:
        parts.append(" :c %s" % node.eigen)
    if node.cut_formula is not None:
        parts.append(" :f (%s)" % print_term(node.cut_formula))
    if node.ty_a is not None:
        parts.append(" :a %s" % print_type(node.ty_a))
    if node.ty_b is not None:
        parts.append(" :b %s" % print_type(node.ty_b))
    parts.append(" :concl %s" % print_sequent(node.concl))
    if node.premises:
        for k in node.premises:
            parts.append("\n")
            parts.append(print_derivation(k, indent + 1))
    parts.append(")")
    return "".join(parts)


def _collect_params(t, out):
    if isinstance(t, Const):
        if not is_logical_const(t):
            old = out.get(t.name)
            if old is not None and old != t.ty:
                raise ValueError("parameter %s used at two types" % t.name)
            out[t.name] = t.ty
    elif isinstance(t, App):
        _collect_params(t.fn, out)
        _collect_params(t.arg, out)
    elif isinstance(t, Lam):
        _collect_params(t.body, out)


def _node_params(node, out):
    for f in node.concl:
        _collect_params(f, out)
    for t in (node.witness, node.cut_formula):
        if t is not None:
            _collect_params(t, out)
    if node.eigen is not None:
        # the eigen-parameter's type is visible from the premise; leave it
        # to the premise formulas collected below
        pass
    for k in node.premises:
        _node_params(k, out)


def print_problem(prob):
    """Render a problem with every used parameter declared, so the output
    re-parses without relying on inference."""
    out = []
    params = dict(prob.sig)
    for s in prob.sequents.values():
        for f in s:
            _collect_params(f, params)
    for d in prob.derivations:
        _node_params(d.root, params)
        if d.realizer is not None:
            _collect_params(d.realizer, params)
    for name in sorted(params):
        out.append("const %s : %s." % (name, print_type(params[name])))
    for name, s in prob.sequents.items():
        out.append("seq %s %s" % (name, print_sequent(s)))
    for d in prob.derivations:
        head = "derivation %s %s" % (d.name, d.calc_name)
        if d.realizer is not None:
            head += " :realizer (%s)" % print_term(d.realizer)
        out.append(head)
        out.append(print_derivation(d.root))
    return "\n".join(out) + "\n"
