"""Proof-size benchmarks: cut-free versus cut-assisted minima.

Two scalable goal families, each a stand-in for the classic hard-instance
shapes rather than a faithful reproduction of them:

* defchain(n) — a chain of definitions: atoms e1..en with e1 equated to
  t|t and each later ei equated to e(i-1)|e(i-1), all as negated
  equations, next to ~en and t.  Extracting each definition once makes it
  available everywhere below (contexts are sets and only grow upward), so
  the measured cut-free minima grow linearly and cut has nothing to share.
* php(n) — n+1 pigeons in n holes, propositionally: the placement formula
  in atoms pij on one side, the collision disjunction on the other.  The
  instances beyond n=1 sit outside exhaustive reach and are reported as
  unknown.

The search pool is an explicit list (the family's atoms, plus the identity
predicate for defchain), so every reported minimum is relative to that
pool and exactly reproducible.

Output: one stable line per instance on stdout; with an output directory,
also a TSV with caps and timings and one PNG plot per family.
"""

import csv
import os
import time

from .calculus import GB, GB_CUT, Sequent
from .prover import SearchBudget, minimal_proof_size
from .terms import Const, Lam, O, Var, conj, disj, leibniz, neg

FAMILIES = ("defchain", "php")


def defchain_goal(n):
    """Goal and pool seeds for the definition-chain instance of size n."""
    if n < 1:
        raise ValueError("defchain size must be at least 1")
    t = Const("t", O)
    es = [Const("e%d" % i, O) for i in range(1, n + 1)]
    defs = []
    prev = disj(t, t)
    for e in es:
        defs.append(neg(leibniz(e, prev, O)))
        prev = disj(e, e)
    seeds = (Lam("x", O, Var("x", O)),) + tuple(es)
    return Sequent(defs + [neg(es[-1]), t]), seeds


def php_goal(n):
    """Goal and pool seeds for the pigeonhole instance with n holes."""
    if n < 1:
        raise ValueError("php size must be at least 1")
    p = {(i, j): Const("p%d%d" % (i, j), O)
         for i in range(1, n + 2) for j in range(1, n + 1)}
    placed = None
    for i in range(1, n + 2):
        row = None
        for j in range(1, n + 1):
            row = p[i, j] if row is None else disj(row, p[i, j])
        placed = row if placed is None else conj(placed, row)
    collide = None
    for j in range(1, n + 1):
        for i1 in range(1, n + 2):
            for i2 in range(i1 + 1, n + 2):
                c = conj(p[i1, j], p[i2, j])
                collide = c if collide is None else disj(collide, c)
    seeds = tuple(p[k] for k in sorted(p))
    return Sequent([neg(placed), collide]), seeds


_GOALS = {"defchain": defchain_goal, "php": php_goal}


def default_cap(family, n):
    """Node allowance keeping a default run short: enough for the known
    defchain minima with headroom, and a fast-failing lid on php, whose
    search space explodes past the one-hole instance."""
    if family == "defchain":
        return 6 * n + 8
    return 12 if n == 1 else 14


#: default instance sizes per family; php stops at two holes because the
#: collision formula makes exhaustive search useless (and slow) beyond that
DEFAULT_SIZES = {"defchain": (1, 2, 3), "php": (1, 2)}


def run_bench(families=FAMILIES, sizes=None, max_nodes=None,
              out_dir=None, echo=print, which="both"):
    """Measure cut-free (gb) and cut-assisted (gbcut) minimal proof sizes.

    `sizes=None` uses each family's default instance list; `which` picks
    the columns ("gb", "gbcut" or "both").  Returns the result rows;
    prints one line per instance through `echo`.
    """
    calcs = {"both": (GB, GB_CUT), "gb": (GB,), "gbcut": (GB_CUT,)}[which]
    rows = []
    for family in families:
        build = _GOALS[family]
        for n in (sizes if sizes is not None else DEFAULT_SIZES[family]):
            goal, seeds = build(n)
            cap = max_nodes if max_nodes is not None else default_cap(family, n)
            budget = SearchBudget(max_nodes=cap, seeds=seeds,
                                  use_goal_subterms=False, fresh_params=False,
                                  predicate_wrappers=False)
            per_calc = {}
            for calc in calcs:
                t0 = time.time()
                m = minimal_proof_size(goal, calc, budget=budget)
                per_calc[calc.name] = m
                rows.append({"family": family, "n": n, "calculus": calc.name,
                             "max_nodes": cap, "minimal": m,
                             "seconds": round(time.time() - t0, 3)})
            parts = ["family=%s" % family, "n=%d" % n]
            if "gb" in per_calc:
                parts.append("cutfree=%s" % _fmt(per_calc["gb"]))
            if "gbcut" in per_calc:
                parts.append("withcut=%s" % _fmt(per_calc["gbcut"]))
            if len(per_calc) == 2:
                cf, wc = per_calc["gb"], per_calc["gbcut"]
                gap = cf - wc if (cf is not None and wc is not None) else None
                parts.append("gap=%s" % _fmt(gap))
            echo(" ".join(parts))
    if out_dir is not None:
        _write_artifacts(rows, out_dir)
    return rows


def _fmt(v):
    return "?" if v is None else str(v)


def _write_artifacts(rows, out_dir):
    os.makedirs(out_dir, exist_ok=True)
    tsv = os.path.join(out_dir, "bench.tsv")
    with open(tsv, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["family", "n", "calculus",
                                           "max_nodes", "minimal", "seconds"],
                           delimiter="\t")
        w.writeheader()
        for r in rows:
            w.writerow({**r, "minimal": "" if r["minimal"] is None
                        else r["minimal"]})
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    for family in sorted({r["family"] for r in rows}):
        fam = [r for r in rows if r["family"] == family]
        fig, ax = plt.subplots(figsize=(5, 3.5))
        for calc, marker in (("gb", "o"), ("gbcut", "s")):
            pts = [(r["n"], r["minimal"]) for r in fam
                   if r["calculus"] == calc and r["minimal"] is not None]
            if pts:
                ax.plot([p[0] for p in pts], [p[1] for p in pts],
                        marker=marker, label=calc)
        ax.set_xlabel("instance size n")
        ax.set_ylabel("minimal proof nodes")
        ax.set_title("%s family" % family)
        ax.legend()
        fig.tight_layout()
        fig.savefig(os.path.join(out_dir, "bench_%s.png" % family))
        plt.close(fig)
