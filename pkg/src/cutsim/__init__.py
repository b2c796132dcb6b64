"""Proof toolkit for classical simple type theory: a small lambda-calculus
kernel, one-sided sequent calculi with a derivation checker, cut-strength
realizer schemas with exact step budgets, derivation transformers
(weakening, inversion, cut simulation and elimination), and a bounded
backward prover."""

from .terms import (
    O, I, Fn, fn, TermTypeError,
    Var, Const, App, Lam,
    type_of, subst, beta_normal, beta_eta_normal, is_beta_normal,
    alpha_eq, canon, free_vars, params_of, is_atomic, is_logical_const,
    spine, mk_app, closed_subterms, fresh_var, fresh_param,
    neg, disj, conj, implies, iff, pi, forall, exists, leibniz, andrews_eq,
    split_neg, split_or, split_pi, split_leibniz, split_andrews,
)
from .syntax import (
    ParseError, DerivationDecl, SourceProblem,
    parse_type, parse_term, parse_sequent, parse_derivation, parse_problem,
    print_type, print_term, print_sequent, print_derivation, print_problem,
)
from .calculus import (
    Sequent, SequentError, Node, Calculus, CheckError, RuleInstance,
    GB, GB_CUT, GBE, GBE_CUT, GBFB_MINUS, GBFB, gb_cuta,
    CALCULI, calculus_by_name, ext_fun_axiom, ext_bool_axiom,
    check_derivation, check_node, match_node, step_count, nodes_equal,
    applicable_rule_instances,
)
from .transform import (
    TransformError, NotPresent, InvalidExtra, NotCutStrong, SchemaMismatch,
    weaken, rename_params, neg_invert, simulate_cut, eliminate_cuta,
    eliminate_cut_ge,
)
from .schemas import (
    CutStrongSchema, ShapeMismatch, NotAtomic,
    builtin_schemas, schema_by_name, realize,
    build_iff_refl, build_leib_refl, build_leib_clash,
)
from .prover import (
    SearchBudget, NotFoundWithinBudget, ApplicabilityReport,
    witness_pool, prove, minimal_proof_size, refute_applicability,
)
from .bench import run_bench

__version__ = "0.1.0"
