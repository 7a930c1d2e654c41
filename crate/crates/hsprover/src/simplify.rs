//! The simplification suite: tautology deletion, subsumption, domain-element
//! instantiation, background evaluation and demodulation.
//!
//! Each call performs at most one simplification step; the engine iterates
//! to a fixpoint. Simplified clauses are re-abstracted, so results are
//! always weakly abstracted. In the ground background-sorted mode every
//! replacement must additionally pass the suitability conditions: background
//! terms of the unabstracted result stay bounded (in the size ordering) by
//! background terms of the input, background-sorted foreground operators
//! keep definition shape, background terms stay pure, and groundness is
//! preserved.
//!
//! Background evaluation is deliberately cautious by default: only literals
//! whose sides are background terms are evaluated, and only ground
//! arithmetic subterms are folded. Terms containing foreground symbols are
//! never rewritten by background identities. The aggressive mode
//! additionally brings integer subterms into a sum-of-monomials normal form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abstraction::{
    bg_terms_ground, bg_terms_pure, definition_shape_ok, unabstract, unabstracted_bg_terms,
    weakly_abstract,
};
use crate::bg::linear::linearize;
use crate::clause::{Clause, Literal};
use crate::ordering::{clause_compare, fin_compare, lpo_compare, Cmp, Precedence};
use crate::subst::Substitution;
use crate::sym::{self, VarKind, Variable};
use crate::term::{Term, TermClass, TermKind};
use crate::unify::match_simple;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BgSimpMode {
    Cautious,
    Aggressive,
}

#[derive(Clone, Copy, Debug)]
pub struct SimpConfig {
    pub mode: BgSimpMode,
    /// Enforce the suitability conditions on every replacement.
    pub suitable_only: bool,
    pub abstract_domain_elements: bool,
}

impl Default for SimpConfig {
    fn default() -> Self {
        SimpConfig {
            mode: BgSimpMode::Cautious,
            suitable_only: false,
            abstract_domain_elements: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimpRule {
    Tautology,
    Subsumed,
    DedupLiteral,
    RemoveFalseLiteral,
    InstantiateDomainElement,
    ArithEval,
    Normalize,
    Demodulate,
}

impl SimpRule {
    pub fn name(self) -> &'static str {
        match self {
            SimpRule::Tautology => "tautology",
            SimpRule::Subsumed => "subsumed",
            SimpRule::DedupLiteral => "dedup_literal",
            SimpRule::RemoveFalseLiteral => "remove_false_literal",
            SimpRule::InstantiateDomainElement => "instantiate",
            SimpRule::ArithEval => "arith_eval",
            SimpRule::Normalize => "normalize",
            SimpRule::Demodulate => "demodulate",
        }
    }
}

#[derive(Clone, Debug)]
pub enum SimpOutcome {
    /// The clause is redundant and can be dropped.
    Deleted { rule: SimpRule, by: Option<usize> },
    /// The clause is replaced by a single simplified clause.
    Replaced {
        clause: Clause,
        rule: SimpRule,
        by: Vec<usize>,
    },
}

/// Multiset subsumption under a simple matcher: some simple substitution
/// maps each literal of `d` onto a distinct literal occurrence of `c`.
pub fn subsumes(d: &Clause, c: &Clause) -> bool {
    fn go(
        d: &[Literal],
        c: &Clause,
        used: &mut Vec<bool>,
        bind: &mut BTreeMap<Variable, Term>,
    ) -> bool {
        let Some(lit) = d.first() else {
            return true;
        };
        for (i, target) in c.literals.iter().enumerate() {
            if used[i] || target.positive != lit.positive {
                continue;
            }
            for flip in [false, true] {
                let (tl, tr) = if flip {
                    (&target.rhs, &target.lhs)
                } else {
                    (&target.lhs, &target.rhs)
                };
                let saved = bind.clone();
                if match_simple(&lit.lhs, tl, bind) && match_simple(&lit.rhs, tr, bind) {
                    used[i] = true;
                    if go(&d[1..], c, used, bind) {
                        return true;
                    }
                    used[i] = false;
                }
                *bind = saved;
            }
        }
        false
    }
    if d.literals.len() > c.literals.len() {
        return false;
    }
    go(
        &d.literals,
        c,
        &mut vec![false; c.literals.len()],
        &mut BTreeMap::new(),
    )
}

/// Proper subsumption: `d` subsumes `c` but not the other way around, so
/// variants are not deleted by each other.
pub fn properly_subsumes(d: &Clause, c: &Clause) -> bool {
    subsumes(d, c) && (d.literals.len() < c.literals.len() || !subsumes(c, d))
}

/// Decides a literal whose sides are background terms with constant
/// difference; `None` when the truth value is not determined.
fn bg_literal_truth(l: &Literal) -> Option<bool> {
    let b = sym::builtins();
    if !l.is_bg() {
        return None;
    }
    let sort = l.lhs.sort();
    if sort == b.int {
        let diff = linearize(&l.lhs).ok()? - linearize(&l.rhs).ok()?;
        if !diff.is_constant() {
            return None;
        }
        Some(diff.constant.is_zero() == l.positive)
    } else if sort == b.o_less || sort == b.o_leq {
        let side = |t: &Term| -> Option<bool> {
            match t.top_op() {
                Some(op) if op == b.true_less || op == b.true_leq => Some(true),
                Some(op) if op == b.less || op == b.leq => {
                    let diff =
                        linearize(&t.args()[0]).ok()? - linearize(&t.args()[1]).ok()?;
                    if !diff.is_constant() {
                        return None;
                    }
                    Some(if op == b.less {
                        diff.constant < BigInt::zero()
                    } else {
                        diff.constant <= BigInt::zero()
                    })
                }
                _ => None,
            }
        };
        let lv = side(&l.lhs)?;
        let rv = side(&l.rhs)?;
        Some((lv == rv) == l.positive)
    } else {
        None
    }
}

pub fn is_tautology(c: &Clause) -> bool {
    for (i, l) in c.literals.iter().enumerate() {
        if l.positive && l.lhs == l.rhs {
            return true;
        }
        if bg_literal_truth(l) == Some(true) {
            return true;
        }
        for k in c.literals.iter().skip(i + 1) {
            if l.positive != k.positive && l.same_atom(k) {
                return true;
            }
        }
    }
    false
}

fn literal_is_false(l: &Literal) -> bool {
    (!l.positive && l.lhs == l.rhs) || bg_literal_truth(l) == Some(false)
}

/// Folds ground arithmetic applications into domain elements.
fn eval_ground_arith(t: &Term) -> Term {
    let b = sym::builtins();
    match t.kind() {
        TermKind::Var(_) => t.clone(),
        TermKind::App(op, args) => {
            let new_args: Vec<Term> = args.iter().map(eval_ground_arith).collect();
            let values: Vec<Option<BigInt>> =
                new_args.iter().map(|a| a.domain_value()).collect();
            if let (Some(Some(a)), Some(bv)) = (values.first(), values.get(1)) {
                if let Some(bv) = bv {
                    if *op == b.plus {
                        return Term::int(a + bv);
                    }
                    if *op == b.minus {
                        return Term::int(a - bv);
                    }
                    if *op == b.times {
                        return Term::int(a * bv);
                    }
                }
            }
            if let Some(Some(a)) = values.first() {
                if *op == b.uminus {
                    return Term::int(-a);
                }
            }
            if new_args.as_slice() == args {
                t.clone()
            } else {
                Term::app(*op, new_args)
            }
        }
    }
}

/// Sum-of-monomials normal form for integer subterms: non-arithmetic
/// integer terms become opaque atoms (with their own arguments normalized),
/// coefficients are collected, and the result is rendered canonically, for
/// example `5*a + f(3+6, a*4) - a*3` as `2*a + f(9, 4*a)`.
fn normalize_arith(t: &Term) -> Term {
    let b = sym::builtins();
    let arith_head = |t: &Term| {
        matches!(t.top_op(), Some(op) if op == b.plus || op == b.minus || op == b.uminus || op == b.times)
    };
    fn monomials(
        t: &Term,
        sign: &BigInt,
        acc: &mut Vec<(BigInt, Term)>,
        konst: &mut BigInt,
    ) {
        let b = sym::builtins();
        match t.top_op() {
            Some(op) if op == b.plus => {
                monomials(&t.args()[0], sign, acc, konst);
                monomials(&t.args()[1], sign, acc, konst);
            }
            Some(op) if op == b.minus => {
                monomials(&t.args()[0], sign, acc, konst);
                monomials(&t.args()[1], &-sign, acc, konst);
            }
            Some(op) if op == b.uminus => {
                monomials(&t.args()[0], &-sign, acc, konst);
            }
            Some(op)
                if op == b.times
                    && (t.args()[0].domain_value().is_some()
                        || t.args()[1].domain_value().is_some()) =>
            {
                let (k, other) = if let Some(k) = t.args()[0].domain_value() {
                    (k, &t.args()[1])
                } else {
                    (t.args()[1].domain_value().unwrap(), &t.args()[0])
                };
                if let Some(k2) = other.domain_value() {
                    *konst += sign * k * k2;
                } else {
                    push_monomial(sign * k, normalize_opaque(other), acc);
                }
            }
            _ => {
                if let Some(v) = t.domain_value() {
                    *konst += sign * v;
                } else {
                    push_monomial(sign.clone(), normalize_opaque(t), acc);
                }
            }
        }
    }
    fn push_monomial(coeff: BigInt, atom: Term, acc: &mut Vec<(BigInt, Term)>) {
        if coeff.is_zero() {
            return;
        }
        for (c, a) in acc.iter_mut() {
            if *a == atom {
                *c += coeff;
                return;
            }
        }
        acc.push((coeff, atom));
    }
    // Atoms keep their shape but get normalized arguments.
    fn normalize_opaque(t: &Term) -> Term {
        match t.kind() {
            TermKind::Var(_) => t.clone(),
            TermKind::App(op, args) => {
                let new_args: Vec<Term> = args.iter().map(normalize_arith).collect();
                if new_args.as_slice() == args {
                    t.clone()
                } else {
                    Term::app(*op, new_args)
                }
            }
        }
    }

    if t.sort() != b.int || !arith_head(t) {
        return normalize_opaque(t);
    }
    let mut acc: Vec<(BigInt, Term)> = Vec::new();
    let mut konst = BigInt::zero();
    monomials(t, &BigInt::one(), &mut acc, &mut konst);
    acc.retain(|(c, _)| !c.is_zero());
    acc.sort_by(|(_, a), (_, b)| a.structural_cmp(b));
    let mut rendered: Option<Term> = None;
    for (c, a) in acc {
        let mono = if c.is_one() {
            a
        } else if (-c.clone()).is_one() {
            Term::app(b.uminus, vec![a])
        } else {
            Term::app(b.times, vec![Term::int(c), a])
        };
        rendered = Some(match rendered {
            None => mono,
            Some(prev) => Term::app(b.plus, vec![prev, mono]),
        });
    }
    match rendered {
        None => Term::int(konst),
        Some(sum) if konst.is_zero() => sum,
        Some(sum) => Term::app(b.plus, vec![sum, Term::int(konst)]),
    }
}

fn map_sides(c: &Clause, f: &dyn Fn(&Term) -> Term) -> Clause {
    Clause {
        literals: c
            .literals
            .iter()
            .map(|l| Literal {
                lhs: f(&l.lhs),
                rhs: f(&l.rhs),
                positive: l.positive,
            })
            .collect(),
        selected: Vec::new(),
    }
}

/// Suitability of a replacement: conditions on the unabstracted clauses.
pub fn suitable_replacement(prec: &Precedence, before: &Clause, after: &Clause) -> bool {
    if !bg_terms_pure(after) {
        return false;
    }
    let ub = unabstract(before);
    let ua = unabstract(after);
    if !definition_shape_ok(&ua) {
        return false;
    }
    if bg_terms_ground(&ub) && !bg_terms_ground(&ua) {
        return false;
    }
    let before_terms = unabstracted_bg_terms(before);
    for t in unabstracted_bg_terms(after) {
        let covered = if t.is_ground() {
            before_terms.iter().any(|s| {
                s.is_ground() && matches!(fin_compare(prec, s, &t), Cmp::Gt | Cmp::Eq)
            })
        } else {
            before_terms.contains(&t)
        };
        if !covered {
            return false;
        }
    }
    true
}

/// One simplification step of `c` against the active clauses (given as
/// `(id, clause)` pairs). Returns `None` when nothing applies.
pub fn simplify_once(
    c: &Clause,
    active: &[(usize, Clause)],
    cfg: &SimpConfig,
    prec: &Precedence,
) -> Option<SimpOutcome> {
    let admit = |clause: Clause| -> Option<Clause> {
        let clause = weakly_abstract(&clause, cfg.abstract_domain_elements);
        if !cfg.suitable_only || suitable_replacement(prec, c, &clause) {
            Some(clause)
        } else {
            None
        }
    };

    if is_tautology(c) {
        return Some(SimpOutcome::Deleted {
            rule: SimpRule::Tautology,
            by: None,
        });
    }

    for (id, d) in active {
        if properly_subsumes(d, c) {
            return Some(SimpOutcome::Deleted {
                rule: SimpRule::Subsumed,
                by: Some(*id),
            });
        }
    }

    // Duplicate literal occurrences collapse.
    for (i, l) in c.literals.iter().enumerate() {
        for (j, k) in c.literals.iter().enumerate().skip(i + 1) {
            if l.positive == k.positive && l.same_atom(k) {
                if let Some(clause) = admit(c.without_literal(j)) {
                    return Some(SimpOutcome::Replaced {
                        clause,
                        rule: SimpRule::DedupLiteral,
                        by: vec![],
                    });
                }
            }
        }
    }

    // Deletion of literals that are false in every background model.
    if let Some(i) = c.literals.iter().position(literal_is_false) {
        if let Some(clause) = admit(c.without_literal(i)) {
            return Some(SimpOutcome::Replaced {
                clause,
                rule: SimpRule::RemoveFalseLiteral,
                by: vec![],
            });
        }
    }

    // zeta != d with a domain element instantiates the clause.
    for (i, l) in c.literals.iter().enumerate() {
        if l.positive {
            continue;
        }
        let pair = [(&l.lhs, &l.rhs), (&l.rhs, &l.lhs)]
            .into_iter()
            .find_map(|(a, b)| {
                let v = a.as_var()?;
                b.is_domain_element().then(|| (v, b.clone()))
            });
        if let Some((v, d)) = pair {
            let sigma = Substitution::singleton(v, d);
            let rest = sigma.apply_clause(&c.without_literal(i));
            if let Some(clause) = admit(rest) {
                return Some(SimpOutcome::Replaced {
                    clause,
                    rule: SimpRule::InstantiateDomainElement,
                    by: vec![],
                });
            }
        }
    }

    // Cautious evaluation of ground arithmetic subterms.
    let evaled = map_sides(c, &eval_ground_arith);
    if evaled != *c {
        if let Some(clause) = admit(evaled) {
            return Some(SimpOutcome::Replaced {
                clause,
                rule: SimpRule::ArithEval,
                by: vec![],
            });
        }
    }

    if cfg.mode == BgSimpMode::Aggressive {
        let normalized = map_sides(c, &normalize_arith);
        if normalized != *c {
            if let Some(clause) = admit(normalized) {
                return Some(SimpOutcome::Replaced {
                    clause,
                    rule: SimpRule::Normalize,
                    by: vec![],
                });
            }
        }
    }

    // Demodulation by active unit equations, smallest-instance first.
    for (id, d) in active {
        if !d.is_unit() || !d.literals[0].positive {
            continue;
        }
        let unit = &d.literals[0];
        for (l, r) in [
            (unit.lhs.clone(), unit.rhs.clone()),
            (unit.rhs.clone(), unit.lhs.clone()),
        ] {
            if l.is_var() {
                continue;
            }
            for (li, lit) in c.literals.iter().enumerate() {
                for (side_idx, side) in [&lit.lhs, &lit.rhs].into_iter().enumerate() {
                    for (pos, u) in side.positions() {
                        if u.is_var() || u.sort() != l.sort() {
                            continue;
                        }
                        let mut bind = BTreeMap::new();
                        if !match_simple(&l, &u, &mut bind) {
                            continue;
                        }
                        let mut sigma = Substitution::new();
                        for (v, t) in bind {
                            sigma.bind(v, t);
                        }
                        let r_inst = sigma.apply(&r);
                        if lpo_compare(prec, &u, &r_inst) != Cmp::Gt {
                            continue;
                        }
                        let unit_inst = Clause::new(vec![Literal::eq(u.clone(), r_inst.clone())]);
                        if clause_compare(prec, &unit_inst, c) != Cmp::Lt {
                            continue;
                        }
                        let new_side = side.replace_at(&pos, r_inst);
                        let mut lits = c.literals.clone();
                        lits[li] = if side_idx == 0 {
                            Literal::new(new_side, lit.rhs.clone(), lit.positive)
                        } else {
                            Literal::new(lit.lhs.clone(), new_side, lit.positive)
                        };
                        if let Some(clause) = admit(Clause::new(lits)) {
                            return Some(SimpOutcome::Replaced {
                                clause,
                                rule: SimpRule::Demodulate,
                                by: vec![*id],
                            });
                        }
                    }
                }
            }
        }
    }

    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{builtins, new_op, new_parameter, Level};

    fn plus(a: Term, b: Term) -> Term {
        Term::app(builtins().plus, vec![a, b])
    }

    fn cfg() -> SimpConfig {
        SimpConfig::default()
    }

    #[test]
    fn instantiates_domain_element_disequations() {
        // P(zeta) | zeta != 3 collapses to P(3).
        let b = builtins();
        let mut sig = crate::sym::Signature::new();
        let (p, true_p) = sig
            .declare_predicate("si_p", vec![b.int], Level::Foreground)
            .unwrap();
        let zeta = Term::var(Variable::fresh(b.int, VarKind::Abstraction));
        let c = Clause::new(vec![
            Literal::eq(Term::app(p, vec![zeta.clone()]), Term::app(true_p, vec![])),
            Literal::neq(zeta, Term::int(3)),
        ]);
        let prec = Precedence::new();
        match simplify_once(&c, &[], &cfg(), &prec) {
            Some(SimpOutcome::Replaced { clause, rule, .. }) => {
                assert_eq!(rule, SimpRule::InstantiateDomainElement);
                assert_eq!(clause.literals.len(), 1);
                assert_eq!(clause.literals[0].lhs.args()[0], Term::int(3));
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn evaluates_ground_arithmetic() {
        // The weakly abstracted form of P((2+3) + a) carries the sum in its
        // abstraction literal; evaluation turns it into 5 + a.
        let b = builtins();
        let mut sig = crate::sym::Signature::new();
        let (p, true_p) = sig
            .declare_predicate("si_q", vec![b.int], Level::Foreground)
            .unwrap();
        let alpha = Term::app(new_parameter("si_alpha", b.int), vec![]);
        let raw = Clause::new(vec![Literal::eq(
            Term::app(p, vec![plus(plus(Term::int(2), Term::int(3)), alpha.clone())]),
            Term::app(true_p, vec![]),
        )]);
        let c = weakly_abstract(&raw, false);
        assert_eq!(c.literals[1].rhs, plus(plus(Term::int(2), Term::int(3)), alpha.clone()));
        let prec = Precedence::new();
        match simplify_once(&c, &[], &cfg(), &prec) {
            Some(SimpOutcome::Replaced { clause, rule, .. }) => {
                assert_eq!(rule, SimpRule::ArithEval);
                assert_eq!(clause.literals[1].rhs, plus(Term::int(5), alpha));
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn removes_bg_false_literals_and_keeps_fg_inequations() {
        let b = builtins();
        let alpha = Term::app(new_parameter("si_beta", b.int), vec![]);
        // 5 + alpha < 4 + alpha is false in every model: drop the literal.
        let lt = Literal::eq(
            Term::app(
                b.less,
                vec![
                    plus(Term::int(5), alpha.clone()),
                    plus(Term::int(4), alpha.clone()),
                ],
            ),
            Term::app(b.true_less, vec![]),
        );
        let keep = Literal::neq(alpha.clone(), Term::int(7));
        let c = Clause::new(vec![lt, keep.clone()]);
        let prec = Precedence::new();
        match simplify_once(&c, &[], &cfg(), &prec) {
            Some(SimpOutcome::Replaced { clause, rule, .. }) => {
                assert_eq!(rule, SimpRule::RemoveFalseLiteral);
                assert_eq!(clause.literals, vec![keep]);
            }
            other => panic!("unexpected outcome {other:?}"),
        }

        // f(X) + 1 != y + 1 is not rewritten by background identities.
        let f = new_op("si_f", vec![b.int], b.int, Level::Foreground);
        let cap_x = Term::var(Variable::fresh(b.int, VarKind::Abstraction));
        let y = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let c = Clause::new(vec![Literal::neq(
            plus(Term::app(f, vec![cap_x]), Term::int(1)),
            plus(y, Term::int(1)),
        )]);
        assert!(simplify_once(&c, &[], &cfg(), &prec).is_none());
    }

    #[test]
    fn aggressive_normal_form() {
        // 5*a + f(3+6, a*4) - a*3 becomes 2*a + f(9, 4*a).
        let b = builtins();
        let alpha = Term::app(new_parameter("si_gamma", b.int), vec![]);
        let f = new_op("si_g", vec![b.int, b.int], b.int, Level::Foreground);
        let t = Term::app(
            b.minus,
            vec![
                plus(
                    Term::app(b.times, vec![Term::int(5), alpha.clone()]),
                    Term::app(
                        f,
                        vec![
                            plus(Term::int(3), Term::int(6)),
                            Term::app(b.times, vec![alpha.clone(), Term::int(4)]),
                        ],
                    ),
                ),
                Term::app(b.times, vec![alpha.clone(), Term::int(3)]),
            ],
        );
        let n = normalize_arith(&t);
        let expected_f = Term::app(
            f,
            vec![
                Term::int(9),
                Term::app(b.times, vec![Term::int(4), alpha.clone()]),
            ],
        );
        let expected_mono = Term::app(b.times, vec![Term::int(2), alpha.clone()]);
        assert!(
            n == plus(expected_mono.clone(), expected_f.clone())
                || n == plus(expected_f, expected_mono),
            "unexpected normal form {n}"
        );
        // Idempotent.
        assert_eq!(normalize_arith(&n), n);
    }

    #[test]
    fn subsumption() {
        let b = builtins();
        let mut sig = crate::sym::Signature::new();
        let (p, true_p) = sig
            .declare_predicate("si_r", vec![b.int], Level::Foreground)
            .unwrap();
        let tp = Term::app(true_p, vec![]);
        let x = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let general = Clause::new(vec![Literal::eq(Term::app(p, vec![x]), tp.clone())]);
        let instance = Clause::new(vec![
            Literal::eq(Term::app(p, vec![Term::int(4)]), tp.clone()),
            Literal::neq(Term::int(0), Term::int(1)),
        ]);
        assert!(properly_subsumes(&general, &instance));
        assert!(!properly_subsumes(&instance, &general));
        // Variants do not properly subsume each other.
        let y = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let variant = Clause::new(vec![Literal::eq(Term::app(p, vec![y]), tp)]);
        assert!(subsumes(&general, &variant));
        assert!(!properly_subsumes(&general, &variant));
    }

    #[test]
    fn demodulation_rewrites_with_smaller_units() {
        let b = builtins();
        let mut sig = crate::sym::Signature::new();
        let f = sig
            .declare_op("si_h", vec![b.int], b.int, Level::Foreground)
            .unwrap();
        let (p, true_p) = sig
            .declare_predicate("si_s", vec![b.int], Level::Foreground)
            .unwrap();
        // Unit f(0) = 1 rewrites P(f(0)) to P(1).
        let unit = Clause::new(vec![Literal::eq(
            Term::app(f, vec![Term::int(0)]),
            Term::int(1),
        )]);
        let c = Clause::new(vec![Literal::eq(
            Term::app(p, vec![Term::app(f, vec![Term::int(0)])]),
            Term::app(true_p, vec![]),
        )]);
        let prec = Precedence::new();
        match simplify_once(&c, &[(7, unit)], &cfg(), &prec) {
            Some(SimpOutcome::Replaced { clause, rule, by }) => {
                assert_eq!(rule, SimpRule::Demodulate);
                assert_eq!(by, vec![7]);
                assert_eq!(clause.literals[0].lhs.args()[0], Term::int(1));
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }
}
