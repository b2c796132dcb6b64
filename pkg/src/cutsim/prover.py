"""Bounded backward proof search over any of the registered calculi.

The search deepens a node allowance one step at a time and, inside each
iteration, runs depth-first branch-and-bound over the backward rule
instances of the goal, so the first derivation returned is one of minimum
node count.  Two caches make repeated deepening cheap:

* exact minima for subgoals whose exploration never touched the current
  ancestor chain (those are context-free facts), and
* failure bounds ("no derivation within k nodes") under the same
  condition.

Results whose exploration was cut short by the per-branch visited set are
never cached, because a different ancestor chain could admit a derivation
that the pruned one forbade.  Pruning itself is safe for minimality: a
derivation that concludes the same sequent twice along one path can always
be shortened by grafting the inner subderivation over the outer node, so
some minimum-size derivation is repeat-free.

Witness instantiation is the usual bounded compromise: piL and cut draw
from a finite pool built out of the goal (closed subterms, explicit seeds,
a fresh parameter per quantified type, and predicate wrappers around pool
formulas).  Minima reported here are therefore relative to that pool.
"""

from dataclasses import dataclass

from .calculus import Sequent, applicable_rule_instances, check_derivation
from .terms import (
    App,
    Const,
    Lam,
    O,
    beta_normal,
    canon,
    closed_subterms,
    free_vars,
    fresh_param,
    is_beta_normal,
    neg,
    split_neg,
    split_pi,
    type_of,
)


class NotFoundWithinBudget(Exception):
    """No derivation was found within the node allowance."""

    def __init__(self, bound, message=None):
        self.bound = bound
        super().__init__(message or "no derivation within %d nodes" % bound)


@dataclass(frozen=True)
class SearchBudget:
    """Limits and witness policy for one search.

    max_nodes bounds the total node count of any derivation considered.
    max_depth, when set, additionally bounds the rule-nesting depth.
    seeds are extra witness terms offered to piL and cut on top of the
    goal's own closed subterms; set use_goal_subterms / fresh_params /
    predicate_wrappers to False to shrink the pool down to an explicit
    list.
    """

    max_nodes: int = 6
    max_depth: int | None = None
    seeds: tuple = ()
    use_goal_subterms: bool = True
    fresh_params: bool = True
    predicate_wrappers: bool = True

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be at least 1")
        if self.max_depth is not None and self.max_depth < 1:
            raise ValueError("max_depth must be at least 1 when given")


def _binder_types(goal):
    """Types quantified over anywhere in the goal, in a stable order."""
    seen = []

    def visit(t):
        p = split_pi(t) if type_of(t) == O else None
        if p is not None and p[0] not in seen:
            seen.append(p[0])
        if isinstance(t, App):
            visit(t.fn)
            visit(t.arg)
        elif isinstance(t, Lam):
            visit(t.body)

    for f in goal:
        visit(f)
    return seen


def witness_pool(goal, budget=None):
    """The finite witness/cut-formula pool for a goal, deterministically
    ordered.  Contents, in order: closed β-normal subterms of the goal's
    members, explicit seeds, one fresh parameter per quantified type, and
    λ-wrappers turning each pool formula into a constant predicate for each
    quantified type."""
    budget = budget or SearchBudget()
    pool = []
    have = set()

    def add(t):
        if t not in have:
            have.add(t)
            pool.append(t)

    if budget.use_goal_subterms:
        for f in goal:
            normal = [s for s in closed_subterms(f) if is_beta_normal(s)]
            for s in sorted(normal, key=canon):
                add(s)
    for s in budget.seeds:
        t = beta_normal(s)
        if free_vars(t):
            raise ValueError("witness seeds must be closed: %r" % (s,))
        add(t)
    tys = _binder_types(goal)
    if budget.fresh_params:
        avoid = set(goal.params())
        for ty in tys:
            name = fresh_param(ty, avoid)
            avoid.add(name)
            add(Const(name, ty))
    if budget.predicate_wrappers:
        formulas = [t for t in pool if type_of(t) == O]
        for ty in tys:
            for c in formulas:
                add(Lam("X", ty, c))
    return tuple(pool)


class _Searcher:
    """One search context: calculus, pool, caches."""

    def __init__(self, calculus, pool, max_depth=None):
        self.calculus = calculus
        self.pool = pool
        self.max_depth = max_depth
        self.opt = {}   # sequent -> (size, tree); context-free exact minima
        self.fail = {}  # sequent -> largest cap proven underivable

    def search(self, goal, cap, ancestors, depth):
        """Minimum-size derivation of `goal` using at most `cap` nodes and
        concluding no sequent from `ancestors` along any path.

        Returns ((size, tree) | None, tainted); `tainted` records whether
        the visited set or the depth limit influenced the outcome, in which
        case the result must not be cached.
        """
        if cap < 1:
            return None, False
        hit = self.opt.get(goal)
        if hit is not None:
            return (hit if hit[0] <= cap else None), False
        if self.fail.get(goal, 0) >= cap:
            return None, False
        if goal in ancestors:
            return None, True
        if self.max_depth is not None and depth >= self.max_depth:
            return None, True

        chain = ancestors | {goal}
        best = None
        tainted = False
        for inst in applicable_rule_instances(goal, self.calculus, self.pool,
                                              maximal_only=True):
            bound = cap if best is None else best[0] - 1
            got, t = self._close_instance(inst, goal, bound, chain, depth)
            tainted |= t
            if got is not None and (best is None or got[0] < best[0]):
                best = got
        if best is not None:
            if not tainted:
                self.opt[goal] = best
            return best, tainted
        if not tainted and cap > self.fail.get(goal, 0):
            self.fail[goal] = cap
        return None, tainted

    def _close_instance(self, inst, goal, bound, ancestors, depth):
        k = len(inst.premises)
        if bound < 1 + k:
            return None, False
        kids = []
        total = 1
        tainted = False
        remaining = k
        for prem in inst.premises:
            remaining -= 1
            sub, t = self.search(prem, bound - total - remaining,
                                 ancestors, depth + 1)
            tainted |= t
            if sub is None:
                return None, tainted
            total += sub[0]
            kids.append(sub[1])
        return (total, inst.make_node(tuple(kids), goal)), tainted


def _run(goal, calculus, budget):
    pool = witness_pool(goal, budget)
    searcher = _Searcher(calculus, pool, budget.max_depth)
    empty = frozenset()
    for cap in range(1, budget.max_nodes + 1):
        found, _ = searcher.search(goal, cap, empty, 0)
        if found is not None:
            return found
    return None


def prove(goal, calculus, budget=None):
    """Search for a minimum-size derivation of `goal` in `calculus`.

    Deterministic: the same goal, calculus and budget always produce the
    same derivation.  Raises NotFoundWithinBudget (carrying the exhausted
    node bound) when the allowance runs out.  The returned derivation is
    re-checked before it is handed back.
    """
    budget = budget or SearchBudget()
    found = _run(goal, calculus, budget)
    if found is None:
        raise NotFoundWithinBudget(budget.max_nodes)
    size, tree = found
    checked = check_derivation(tree, calculus)
    if checked != size:
        raise AssertionError("search sized a derivation at %d but the "
                             "checker counted %d" % (size, checked))
    return tree


def minimal_proof_size(goal, calculus, max_nodes=6, *, budget=None):
    """Smallest node count of any derivation of `goal` within `max_nodes`,
    or None when the bound is exhausted (the answer is then unknown, not
    'unprovable')."""
    if budget is None:
        budget = SearchBudget(max_nodes=max_nodes)
    found = _run(goal, calculus, budget)
    return None if found is None else found[0]


@dataclass(frozen=True)
class ApplicabilityReport:
    """What could possibly conclude a goal.

    instances lists every backward instance of the pool-free rules (all
    rules except piL, cut and cutA — their premises are fixed by the goal).
    pil_targets lists the negated-universal members piL could instantiate:
    when it is empty, piL contributes nothing for any witness pool.
    unbounded_rules names rules (cut, and cutA when its negated realizer is
    present) that admit instances for every pool formula and therefore can
    never be refuted by inspection.
    """

    goal: Sequent
    calculus: str
    instances: tuple
    pil_targets: tuple
    unbounded_rules: tuple

    @property
    def is_empty(self):
        """True when no rule instance can conclude the goal for any pool:
        an emptiness certificate, so the goal is underivable outright."""
        return (not self.instances and not self.pil_targets
                and not self.unbounded_rules)


def refute_applicability(goal, calculus):
    """Enumerate everything that could conclude `goal` in `calculus`.

    The instance list is complete for the pool-free rules.  piL is handled
    by witness-independence: it needs a negated universal member, so if the
    goal has none, no pool can make piL applicable; otherwise the member is
    reported as a target.  A calculus with cut (or an armed cutA) is never
    refutable this way, and the report says so instead of certifying
    emptiness.
    """
    instances = tuple(applicable_rule_instances(goal, calculus, pool=()))
    pil = ()
    if "piL" in calculus.rules:
        pil = tuple(f for f in sorted(goal.formulas, key=canon)
                    if (a := split_neg(f)) is not None
                    and split_pi(a) is not None)
    unbounded = []
    if "cut" in calculus.rules:
        unbounded.append("cut")
    if ("cutA" in calculus.rules and calculus.realizer is not None
            and neg(calculus.realizer) in goal.formulas):
        unbounded.append("cutA")
    return ApplicabilityReport(goal=goal, calculus=calculus.name,
                               instances=instances, pil_targets=pil,
                               unbounded_rules=tuple(unbounded))
