//! The base inference rules, the definition rule and the Close check.
//!
//! All rules consume weakly abstracted premises and weakly abstract their
//! conclusions. Unifiers are simple mgus; a rule only fires when the
//! instantiated pivotal term is not a pure background term, which also
//! guarantees (on weakly abstracted premises) that the pivotal substitution
//! is restricted.

use std::collections::HashMap;

use crate::abstraction::{unabstract_with_subst, weakly_abstract};
use crate::bg::close::{clause_set_formula, CloseError};
use crate::bg::presburger::{decide, Verdict};
use crate::clause::{Clause, Literal};
use crate::ordering::{clause_compare, lpo_compare, maximal_in, Cmp, Precedence};
use crate::subst::Substitution;
use crate::sym::{self, Level, OpId, Variable};
use crate::term::{Term, TermClass};
use crate::unify::simple_mgu;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    EqualityResolution,
    NegativeSuperposition,
    PositiveSuperposition,
    EqualityFactoring,
}

/// One generating inference: conclusion plus the pivotal substitution.
#[derive(Clone, Debug)]
pub struct Inference {
    pub rule: Rule,
    pub conclusion: Clause,
    pub pivotal: Substitution,
}

/// Rule context: the term ordering and the abstraction mode of the run.
pub struct CalcCtx<'a> {
    pub prec: &'a Precedence,
    pub abstract_domain_elements: bool,
}

impl<'a> CalcCtx<'a> {
    pub fn new(prec: &'a Precedence) -> CalcCtx<'a> {
        CalcCtx {
            prec,
            abstract_domain_elements: false,
        }
    }

    fn abstr(&self, c: Clause) -> Clause {
        weakly_abstract(&c, self.abstract_domain_elements)
    }
}

fn not_geq(prec: &Precedence, a: &Term, b: &Term) -> bool {
    !matches!(lpo_compare(prec, a, b), Cmp::Gt | Cmp::Eq)
}

/// Orientations of a literal: each side once as the major side, skipping the
/// duplicate when the sides are equal.
fn orientations(l: &Literal) -> Vec<(Term, Term)> {
    if l.lhs == l.rhs {
        vec![(l.lhs.clone(), l.rhs.clone())]
    } else {
        vec![
            (l.lhs.clone(), l.rhs.clone()),
            (l.rhs.clone(), l.lhs.clone()),
        ]
    }
}

/// Resolves a negative literal whose sides unify, provided the instantiated
/// side is not pure background and the literal is selected or maximal under
/// the unifier.
pub fn equality_resolution(ctx: &CalcCtx, c: &Clause) -> Vec<Inference> {
    let mut out = Vec::new();
    for (i, lit) in c.literals.iter().enumerate() {
        if lit.positive {
            continue;
        }
        if !c.selected.is_empty() && !c.selected.contains(&i) {
            continue;
        }
        let Some(sigma) = simple_mgu(&lit.lhs, &lit.rhs) else {
            continue;
        };
        if sigma.apply(&lit.lhs).class() == TermClass::PureBg {
            continue;
        }
        if c.selected.is_empty() {
            let inst = sigma.apply_clause(c);
            if !maximal_in(ctx.prec, &inst, i, false) {
                continue;
            }
        }
        let conclusion = ctx.abstr(sigma.apply_clause(&c.without_literal(i)));
        out.push(Inference {
            rule: Rule::EqualityResolution,
            conclusion,
            pivotal: sigma,
        });
    }
    out
}

/// Superposition of `left` (the equation premise) into `right`. `positive`
/// selects which polarity of target literal is rewritten. Premises must be
/// variable-disjoint; the engine renames before calling.
pub fn superposition(
    ctx: &CalcCtx,
    left: &Clause,
    right: &Clause,
    positive: bool,
) -> Vec<Inference> {
    let mut out = Vec::new();
    // The equation premise never has selected literals.
    if !left.selected.is_empty() {
        return out;
    }
    if positive && !right.selected.is_empty() {
        return out;
    }
    for (li, llit) in left.literals.iter().enumerate() {
        if !llit.positive {
            continue;
        }
        for (l, r) in orientations(llit) {
            for (ri, rlit) in right.literals.iter().enumerate() {
                if rlit.positive != positive {
                    continue;
                }
                if !positive && !right.selected.is_empty() && !right.selected.contains(&ri) {
                    continue;
                }
                for (s, t) in orientations(rlit) {
                    for (pos, u) in s.positions() {
                        if u.is_var() {
                            continue;
                        }
                        if u.sort() != l.sort() {
                            continue;
                        }
                        let Some(sigma) = simple_mgu(&l, &u) else {
                            continue;
                        };
                        let l_inst = sigma.apply(&l);
                        if l_inst.class() == TermClass::PureBg {
                            continue;
                        }
                        if !not_geq(ctx.prec, &sigma.apply(&r), &l_inst) {
                            continue;
                        }
                        if !not_geq(ctx.prec, &sigma.apply(&t), &sigma.apply(&s)) {
                            continue;
                        }
                        // Maximality under the unifier.
                        let left_inst = sigma.apply_clause(left);
                        if !maximal_in(ctx.prec, &left_inst, li, true) {
                            continue;
                        }
                        let right_inst = sigma.apply_clause(right);
                        if positive {
                            if !maximal_in(ctx.prec, &right_inst, ri, true) {
                                continue;
                            }
                        } else if right.selected.is_empty()
                            && !maximal_in(ctx.prec, &right_inst, ri, false)
                        {
                            continue;
                        }
                        let rewritten =
                            Literal::new(s.replace_at(&pos, r.clone()), t.clone(), positive);
                        let mut lits = vec![rewritten];
                        for (j, k) in left.literals.iter().enumerate() {
                            if j != li {
                                lits.push(k.clone());
                            }
                        }
                        for (j, k) in right.literals.iter().enumerate() {
                            if j != ri {
                                lits.push(k.clone());
                            }
                        }
                        let conclusion = ctx.abstr(sigma.apply_clause(&Clause::new(lits)));
                        out.push(Inference {
                            rule: if positive {
                                Rule::PositiveSuperposition
                            } else {
                                Rule::NegativeSuperposition
                            },
                            conclusion,
                            pivotal: sigma,
                        });
                    }
                }
            }
        }
    }
    out
}

pub fn negative_superposition(ctx: &CalcCtx, left: &Clause, right: &Clause) -> Vec<Inference> {
    superposition(ctx, left, right, false)
}

pub fn positive_superposition(ctx: &CalcCtx, left: &Clause, right: &Clause) -> Vec<Inference> {
    superposition(ctx, left, right, true)
}

/// Factors two positive literals with unifiable major sides, keeping the
/// second and adding the disequation of the minor sides.
pub fn equality_factoring(ctx: &CalcCtx, c: &Clause) -> Vec<Inference> {
    let mut out = Vec::new();
    if !c.selected.is_empty() {
        return out;
    }
    for (i, fst) in c.literals.iter().enumerate() {
        if !fst.positive {
            continue;
        }
        for (s, t) in orientations(fst) {
            for (j, snd) in c.literals.iter().enumerate() {
                if i == j || !snd.positive {
                    continue;
                }
                for (l, r) in orientations(snd) {
                    if s.sort() != l.sort() {
                        continue;
                    }
                    let Some(sigma) = simple_mgu(&s, &l) else {
                        continue;
                    };
                    if sigma.apply(&s).class() == TermClass::PureBg {
                        continue;
                    }
                    if !maximal_in(ctx.prec, &sigma.apply_clause(c), i, false) {
                        continue;
                    }
                    if !not_geq(ctx.prec, &sigma.apply(&t), &sigma.apply(&s)) {
                        continue;
                    }
                    if !not_geq(ctx.prec, &sigma.apply(&r), &sigma.apply(&l)) {
                        continue;
                    }
                    let mut lits = vec![
                        Literal::eq(l.clone(), r.clone()),
                        Literal::neq(t.clone(), r.clone()),
                    ];
                    for (k, other) in c.literals.iter().enumerate() {
                        if k != i && k != j {
                            lits.push(other.clone());
                        }
                    }
                    let conclusion = ctx.abstr(sigma.apply_clause(&Clause::new(lits)));
                    out.push(Inference {
                        rule: Rule::EqualityFactoring,
                        conclusion,
                        pivotal: sigma,
                    });
                }
            }
        }
    }
    out
}

/// Parameters minted for ground background-sorted foreground terms; each
/// defined term determines its parameter uniquely.
#[derive(Default, Debug, Clone)]
pub struct DefinitionTable {
    by_term: HashMap<Term, OpId>,
    count: usize,
}

impl DefinitionTable {
    pub fn new() -> DefinitionTable {
        DefinitionTable::default()
    }

    pub fn lookup(&self, t: &Term) -> Option<OpId> {
        self.by_term.get(t).copied()
    }

    pub fn param_for(&mut self, t: &Term) -> OpId {
        if let Some(op) = self.by_term.get(t) {
            return *op;
        }
        let op = sym::new_parameter(&format!("def_{}", self.count + 1), t.sort());
        self.commit(t.clone(), op);
        op
    }

    fn commit(&mut self, t: Term, op: OpId) {
        self.count += 1;
        self.by_term.insert(t, op);
    }

    /// Pre-seeds a term-to-parameter binding (used by proof replay).
    pub fn seed(&mut self, t: Term, op: OpId) {
        self.by_term.insert(t, op);
    }

    pub fn len(&self) -> usize {
        self.by_term.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_term.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct DefineInference {
    pub definition: Clause,
    pub replacement: Clause,
    pub parameter: OpId,
    /// The ground version of the defined term, the table key.
    pub defined_term: Term,
}

/// Finds a minimal background-sorted non-variable subterm with a foreground
/// head whose unabstracted version is ground.
fn define_candidate(c: &Clause, theta: &Substitution) -> Option<(Term, Term)> {
    fn minimal_bg_fg(t: &Term) -> Option<Term> {
        for a in t.args() {
            if let Some(found) = minimal_bg_fg(a) {
                return Some(found);
            }
        }
        let is_candidate = match t.top_op() {
            Some(op) => {
                sym::op_level(op) == Level::Foreground
                    && sym::sort_level(t.sort()) == Level::Background
            }
            None => false,
        };
        if is_candidate {
            Some(t.clone())
        } else {
            None
        }
    }
    for l in &c.literals {
        for side in [&l.lhs, &l.rhs] {
            if let Some(u) = minimal_bg_fg(side) {
                let ground = theta.apply(&u);
                if ground.is_ground() {
                    return Some((u, ground));
                }
            }
        }
    }
    None
}

/// The definition rule: replaces a ground background-sorted foreground term
/// by a parameter and emits the defining equation. Without `reckless`, the
/// rule only applies when it simplifies: both conclusions must be smaller
/// than the premise in the clause ordering (or subsume it), so definitions
/// are never re-defined.
pub fn define(
    ctx: &CalcCtx,
    c: &Clause,
    table: &mut DefinitionTable,
    reckless: bool,
) -> Option<DefineInference> {
    let (_, theta) = unabstract_with_subst(c);
    let (u, ground) = define_candidate(c, &theta)?;
    // A fresh parameter is only committed to the table when the inference
    // actually applies.
    let existing = table.lookup(&ground);
    let param = existing
        .unwrap_or_else(|| sym::new_parameter(&format!("def_{}", table.count + 1), ground.sort()));
    let alpha = Term::app(param, vec![]);
    let definition = ctx.abstr(Clause::new(vec![Literal::eq(ground.clone(), alpha.clone())]));
    let mut replaced: Vec<Literal> = Vec::with_capacity(c.literals.len());
    for l in &c.literals {
        replaced.push(Literal::new(
            l.lhs.replace_all(&u, &alpha),
            l.rhs.replace_all(&u, &alpha),
            l.positive,
        ));
    }
    let replacement = ctx.abstr(Clause::new(replaced));
    if !reckless {
        let def_ok = clause_compare(ctx.prec, &definition, c) == Cmp::Lt
            || crate::simplify::properly_subsumes(&definition, c);
        let repl_ok = clause_compare(ctx.prec, &replacement, c) == Cmp::Lt
            || crate::simplify::properly_subsumes(&replacement, c);
        if !(def_ok && repl_ok) {
            return None;
        }
    }
    if existing.is_none() {
        table.commit(ground.clone(), param);
    }
    Some(DefineInference {
        definition,
        replacement,
        parameter: param,
        defined_term: ground,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CloseVerdict {
    /// Indices into the input slice forming an unsatisfiable core.
    Unsat(Vec<usize>),
    Open,
}

/// Refutes a background clause set when no background model satisfies it:
/// parameters are existential, clause variables universal over the
/// integers. Impure clauses participate through their pure simple ground
/// instances, so both variable kinds quantify universally. The core is
/// shrunk by greedy deletion.
pub fn close_check(clauses: &[Clause]) -> Result<CloseVerdict, CloseError> {
    if clauses.is_empty() {
        return Ok(CloseVerdict::Open);
    }
    let formula = clause_set_formula(clauses)?;
    if decide(&formula) == Verdict::Valid {
        return Ok(CloseVerdict::Open);
    }
    // Greedy core minimization, newest clauses first, so cores prefer the
    // earliest derivations.
    let mut core: Vec<usize> = (0..clauses.len()).collect();
    let mut i = core.len();
    while i > 0 {
        i -= 1;
        let mut trial = core.clone();
        trial.remove(i);
        let subset: Vec<Clause> = trial.iter().map(|&j| clauses[j].clone()).collect();
        let still_unsat =
            !subset.is_empty() && decide(&clause_set_formula(&subset)?) == Verdict::Invalid;
        if still_unsat {
            core = trial;
        }
    }
    Ok(CloseVerdict::Unsat(core))
}

/// Renames all variables of a clause apart (fresh variables of the same
/// sorts and kinds).
pub fn rename_clause(c: &Clause) -> Clause {
    let mut sigma = Substitution::new();
    for v in c.vars() {
        sigma.bind(v, Term::var(Variable::fresh(v.sort, v.kind)));
    }
    sigma.apply_clause(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{builtins, new_op, new_parameter, Signature, VarKind};

    fn plus(a: Term, b: Term) -> Term {
        Term::app(builtins().plus, vec![a, b])
    }

    #[test]
    fn equality_resolution_examples() {
        let b = builtins();
        let prec = Precedence::new();
        let ctx = CalcCtx::new(&prec);
        let c_op = new_op("ca_c", vec![], b.int, Level::Foreground);
        let c_const = Term::app(c_op, vec![]);
        let x = Term::var(Variable::fresh(b.int, VarKind::Ordinary));

        // 1 + c != 1 + x resolves with [x -> c].
        let cl = Clause::new(vec![Literal::neq(
            plus(Term::int(1), c_const.clone()),
            plus(Term::int(1), x.clone()),
        )]);
        let infs = equality_resolution(&ctx, &cl);
        assert_eq!(infs.len(), 1);
        assert!(infs[0].conclusion.is_empty());
        assert!(infs[0].pivotal.is_restricted());

        // 1 + alpha != 1 + x: the instantiated side is pure background.
        let alpha = Term::app(new_parameter("ca_alpha", b.int), vec![]);
        let cl = Clause::new(vec![Literal::neq(
            plus(Term::int(1), alpha),
            plus(Term::int(1), x),
        )]);
        assert!(equality_resolution(&ctx, &cl).is_empty());

        // Z + u != (x + y) + U: the unified term is pure background.
        let z = Term::var(Variable::fresh(b.int, VarKind::Abstraction));
        let u = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let x2 = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let y2 = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let cap_u = Term::var(Variable::fresh(b.int, VarKind::Abstraction));
        let cl = Clause::new(vec![Literal::neq(plus(z, u), plus(plus(x2, y2), cap_u))]);
        assert!(equality_resolution(&ctx, &cl).is_empty());
    }

    #[test]
    fn positive_superposition_weakly_abstracts_conclusion() {
        // From f(X) = 1 | X != alpha into P(f(1) + 1): the conclusion
        // P(1 + 1) | 1 != alpha needs one abstraction step.
        let b = builtins();
        let prec = Precedence::new();
        let ctx = CalcCtx::new(&prec);
        let mut sig = Signature::new();
        let f = sig
            .declare_op("ca_f", vec![b.int], b.int, Level::Foreground)
            .unwrap();
        let (p, true_p) = sig
            .declare_predicate("ca_p", vec![b.int], Level::Foreground)
            .unwrap();
        let alpha = Term::app(new_parameter("ca_beta", b.int), vec![]);
        let cap_x = Term::var(Variable::fresh(b.int, VarKind::Abstraction));
        let left = Clause::new(vec![
            Literal::eq(Term::app(f, vec![cap_x.clone()]), Term::int(1)),
            Literal::neq(cap_x, alpha.clone()),
        ]);
        let right = Clause::new(vec![Literal::eq(
            Term::app(p, vec![plus(Term::app(f, vec![Term::int(1)]), Term::int(1))]),
            Term::app(true_p, vec![]),
        )]);
        let infs = positive_superposition(&ctx, &left, &right);
        assert_eq!(infs.len(), 1);
        let conclusion = &infs[0].conclusion;
        // P(Y) | 1 != alpha | Y != 1 + 1 after abstraction.
        assert_eq!(conclusion.literals.len(), 3);
        assert!(crate::abstraction::is_weakly_abstracted(conclusion, false));
        let arg = conclusion.literals[0].lhs.args()[0].clone();
        assert!(arg.is_var());
        assert_eq!(conclusion.literals[2].rhs, plus(Term::int(1), Term::int(1)));
    }

    #[test]
    fn equality_factoring_keeps_second_literal() {
        // c = beta | c = 0 factors into c = 0 | beta != 0.
        let b = builtins();
        let prec = Precedence::new();
        let ctx = CalcCtx::new(&prec);
        let c_const = Term::app(new_op("ca_c2", vec![], b.int, Level::Foreground), vec![]);
        let beta = Term::app(new_parameter("ca_gamma", b.int), vec![]);
        let cl = Clause::new(vec![
            Literal::eq(c_const.clone(), beta.clone()),
            Literal::eq(c_const.clone(), Term::int(0)),
        ]);
        let infs = equality_factoring(&ctx, &cl);
        let expected = Clause::new(vec![
            Literal::eq(c_const, Term::int(0)),
            Literal::neq(beta, Term::int(0)),
        ]);
        assert!(
            infs.iter()
                .any(|i| i.conclusion.alpha_eq_multiset(&expected)),
            "expected factoring result not found in {:?}",
            infs.iter()
                .map(|i| i.conclusion.to_string())
                .collect::<Vec<_>>()
        );
        // A clause with a single positive literal admits no factoring.
        let unit = Clause::new(vec![Literal::eq(Term::int(0), Term::int(0))]);
        assert!(equality_factoring(&ctx, &unit).is_empty());
    }

    #[test]
    fn define_examples() {
        let b = builtins();
        let prec = Precedence::new();
        let ctx = CalcCtx::new(&prec);
        let mut sig = Signature::new();
        let data = sig.declare_sort("ca_data", Level::Foreground).unwrap();
        let f = sig
            .declare_op("ca_f3", vec![b.int, data], b.int, Level::Foreground)
            .unwrap();
        let g = sig
            .declare_op("ca_g3", vec![b.int, b.int, data], b.int, Level::Foreground)
            .unwrap();
        let c_const = Term::app(
            sig.declare_op("ca_cc", vec![], data, Level::Foreground)
                .unwrap(),
            vec![],
        );
        let beta = Term::app(new_parameter("ca_delta", b.int), vec![]);

        // g(f(x, y) + 1, x, y) = 1 | x != 1 + beta | y != c.
        let x = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let y = Term::var(Variable::fresh(data, VarKind::Ordinary));
        let clause = Clause::new(vec![
            Literal::eq(
                Term::app(
                    g,
                    vec![
                        plus(Term::app(f, vec![x.clone(), y.clone()]), Term::int(1)),
                        x.clone(),
                        y.clone(),
                    ],
                ),
                Term::int(1),
            ),
            Literal::neq(x.clone(), plus(Term::int(1), beta.clone())),
            Literal::neq(y.clone(), c_const.clone()),
        ]);
        let mut table = DefinitionTable::new();
        let di = define(&ctx, &clause, &mut table, true).expect("applicable");
        // Definition: f(X, c) = alpha | X != 1 + beta.
        assert_eq!(
            di.defined_term,
            Term::app(f, vec![plus(Term::int(1), beta), c_const.clone()])
        );
        assert_eq!(di.definition.literals.len(), 2);
        assert!(di.definition.literals[0].positive);
        // Replacement: g(Z, x, y) = 1 | ... | Z != alpha + 1.
        assert_eq!(di.replacement.literals.len(), 4);
        let head_arg = di.replacement.literals[0].lhs.args()[0].clone();
        assert!(head_arg.is_var());

        // f2(c2) = 1 is rejected when the simplification condition is on:
        // the definition would be larger than the premise.
        let f2 = sig
            .declare_op("ca_f4", vec![data], b.int, Level::Foreground)
            .unwrap();
        let cl = Clause::new(vec![Literal::eq(
            Term::app(f2, vec![c_const.clone()]),
            Term::int(1),
        )]);
        let mut table = DefinitionTable::new();
        assert!(define(&ctx, &cl, &mut table, false).is_none());
        // Reckless mode applies regardless.
        assert!(define(&ctx, &cl, &mut table, true).is_some());
    }

    #[test]
    fn close_check_examples() {
        let b = builtins();
        let alpha = Term::app(new_parameter("ca_eps", b.int), vec![]);
        let gt = |l: Term, r: Term| {
            Literal::eq(
                Term::app(b.less, vec![r, l]),
                Term::app(b.true_less, vec![]),
            )
        };
        // {alpha > 0, 0 > alpha} is unsatisfiable.
        let c1 = Clause::new(vec![gt(alpha.clone(), Term::int(0))]);
        let c2 = Clause::new(vec![gt(Term::int(0), alpha.clone())]);
        match close_check(&[c1.clone(), c2]).unwrap() {
            CloseVerdict::Unsat(core) => assert_eq!(core.len(), 2),
            CloseVerdict::Open => panic!("expected unsat"),
        }

        // {alpha + beta = alpha, beta != 0} is unsatisfiable.
        let beta = Term::app(new_parameter("ca_zeta", b.int), vec![]);
        let c1 = Clause::new(vec![Literal::eq(
            plus(alpha.clone(), beta.clone()),
            alpha.clone(),
        )]);
        let c2 = Clause::new(vec![Literal::neq(beta, Term::int(0))]);
        assert!(matches!(
            close_check(&[c1, c2]).unwrap(),
            CloseVerdict::Unsat(_)
        ));

        // {alpha > 3} is open.
        let c = Clause::new(vec![gt(alpha, Term::int(3))]);
        assert_eq!(close_check(&[c]).unwrap(), CloseVerdict::Open);
    }
}
