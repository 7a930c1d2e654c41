//! Finite saturation of linear integer clause sets via shifted strict
//! orders.
//!
//! Clause sets whose proper terms are ground, variables, or offset sums
//! `zeta + k` on the right of a positive `<` are closed under a
//! transformation into ground clauses over the relations `s <_k t`
//! (meaning `s < t + k`): negative inequalities are flipped, equality
//! literals with variables eliminated, remaining variables removed
//! Fourier-Motzkin style, literal pairs over the same terms normalized, and
//! finally each equivalence class of clauses is reduced to its minimal
//! offset tuples, which is a finite set by Dickson's lemma. Satisfiability
//! over the integers is then decided by the quantifier-elimination backend.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::clause::{Clause, Literal};
use crate::sym::{self, Variable};
use crate::term::Term;

use super::linear::linearize;
use super::presburger::{decide, fresh_qvar, PFormula, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LkTerm {
    /// Index into the ground term table.
    Ground(usize),
    Var(Variable),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LkLit {
    /// Unordered; kept with the smaller side first.
    Eq(LkTerm, LkTerm),
    Ne(LkTerm, LkTerm),
    /// `s <_k t`, that is `s < t + k`.
    Lt(LkTerm, u64, LkTerm),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LkClause {
    pub literals: Vec<LkLit>,
}

#[derive(Clone, Debug)]
pub struct LkClauseSet {
    /// The finite table of ground proper terms.
    pub terms: Vec<Term>,
    pub clauses: Vec<LkClause>,
    /// Clauses dropped by the minimal-tuple filter, paired with a kept
    /// clause that dominates them pointwise.
    pub removals: Vec<(LkClause, LkClause)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LkVerdict {
    SatOverZ,
    UnsatOverZ,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LkError {
    #[error("outside supported clause fragment: {0}")]
    OutsideFragment(String),
}

impl fmt::Display for LkLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn t(x: &LkTerm) -> String {
            match x {
                LkTerm::Ground(i) => format!("t{i}"),
                LkTerm::Var(v) => format!("?X{}", v.id),
            }
        }
        match self {
            LkLit::Eq(a, b) => write!(f, "{} = {}", t(a), t(b)),
            LkLit::Ne(a, b) => write!(f, "{} != {}", t(a), t(b)),
            LkLit::Lt(a, k, b) => write!(f, "{} <{} {}", t(a), k, t(b)),
        }
    }
}

/// Recognizes `zeta + k` / `k + zeta` with `k >= 0`.
fn offset_sum(t: &Term) -> Option<(Variable, u64)> {
    let b = sym::builtins();
    if t.top_op() != Some(b.plus) {
        return None;
    }
    let (a, c) = (&t.args()[0], &t.args()[1]);
    let pick = |var: &Term, num: &Term| -> Option<(Variable, u64)> {
        let v = var.as_var()?;
        let k = num.domain_value()?;
        if k.sign() == num_bigint::Sign::Minus {
            return None;
        }
        Some((v, u64::try_from(k).ok()?))
    };
    pick(a, c).or_else(|| pick(c, a))
}

fn check_proper(t: &Term) -> Result<(), LkError> {
    if t.is_ground() || t.is_var() {
        return Ok(());
    }
    Err(LkError::OutsideFragment(format!(
        "proper term `{t}` must be ground or a variable here; offset sums are \
         only allowed on the right-hand side of a positive <"
    )))
}

/// The shape check: every proper term in the input must be ground, a
/// variable, or an offset sum in the one permitted position. It runs over
/// all clauses, including foreground atoms, before anything else.
fn check_shape(clauses: &[Clause]) -> Result<(), LkError> {
    let b = sym::builtins();
    fn walk_fg(t: &Term) -> Result<(), LkError> {
        for a in t.args() {
            if a.sort() == sym::builtins().int {
                check_proper(a)?;
            } else {
                walk_fg(a)?;
            }
        }
        Ok(())
    }
    for c in clauses {
        for l in &c.literals {
            let sort = l.lhs.sort();
            if sort == b.o_less || sort == b.o_leq {
                for side in [&l.lhs, &l.rhs] {
                    let Some(op) = side.top_op() else {
                        return Err(LkError::OutsideFragment(format!(
                            "variable of comparison sort in `{l}`"
                        )));
                    };
                    if op == b.true_less || op == b.true_leq {
                        continue;
                    }
                    let (s, t) = (&side.args()[0], &side.args()[1]);
                    check_proper(s)?;
                    // An offset sum is admissible only as the right-hand
                    // side of a positive strict comparison.
                    let strict_positive = l.positive && op == b.less;
                    if !(strict_positive && offset_sum(t).is_some()) {
                        check_proper(t)?;
                    }
                }
            } else if sort == b.int {
                check_proper(&l.lhs)?;
                check_proper(&l.rhs)?;
            } else {
                walk_fg(&l.lhs)?;
                walk_fg(&l.rhs)?;
            }
        }
    }
    Ok(())
}

struct TermTable {
    terms: Vec<Term>,
}

impl TermTable {
    fn intern(&mut self, t: &Term) -> usize {
        if let Some(i) = self.terms.iter().position(|u| u == t) {
            return i;
        }
        self.terms.push(t.clone());
        self.terms.len() - 1
    }

    fn lk(&mut self, t: &Term) -> LkTerm {
        match t.as_var() {
            Some(v) => LkTerm::Var(v),
            None => LkTerm::Ground(self.intern(t)),
        }
    }
}

fn orient(a: LkTerm, b: LkTerm, positive: bool) -> LkLit {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    if positive {
        LkLit::Eq(a, b)
    } else {
        LkLit::Ne(a, b)
    }
}

/// Encodes one input clause, flipping negative inequalities and mapping
/// `<`/`<=` onto the shifted relations.
fn encode_clause(c: &Clause, table: &mut TermTable) -> Result<LkClause, LkError> {
    let b = sym::builtins();
    let mut lits = Vec::new();
    for l in &c.literals {
        let sort = l.lhs.sort();
        if sort == b.int {
            lits.push(orient(table.lk(&l.lhs), table.lk(&l.rhs), l.positive));
        } else if sort == b.o_less || sort == b.o_leq {
            // Both sides must be the comparison atom and its truth constant.
            let (atom, tru) = if l.lhs.top_op() == Some(b.less) || l.lhs.top_op() == Some(b.leq) {
                (&l.lhs, &l.rhs)
            } else {
                (&l.rhs, &l.lhs)
            };
            let tru_op = tru.top_op();
            if tru_op != Some(b.true_less) && tru_op != Some(b.true_leq) {
                return Err(LkError::OutsideFragment(format!(
                    "comparison atoms may only be equated with their truth constant: `{l}`"
                )));
            }
            let strict = atom.top_op() == Some(b.less);
            let (s, t) = (&atom.args()[0], &atom.args()[1]);
            if l.positive {
                if strict {
                    if let Some((v, k)) = offset_sum(t) {
                        lits.push(LkLit::Lt(table.lk(s), k, LkTerm::Var(v)));
                    } else {
                        lits.push(LkLit::Lt(table.lk(s), 0, table.lk(t)));
                    }
                } else {
                    lits.push(LkLit::Lt(table.lk(s), 1, table.lk(t)));
                }
            } else {
                // not (s < t) becomes t <= s; not (s <= t) becomes t < s.
                let k = if strict { 1 } else { 0 };
                lits.push(LkLit::Lt(table.lk(t), k, table.lk(s)));
            }
        } else {
            return Err(LkError::OutsideFragment(format!(
                "foreground literal `{l}` cannot be encoded"
            )));
        }
    }
    Ok(LkClause { literals: lits })
}

fn substitute(c: &LkClause, v: Variable, by: &LkTerm) -> LkClause {
    let sub = |t: &LkTerm| -> LkTerm {
        match t {
            LkTerm::Var(w) if *w == v => by.clone(),
            other => other.clone(),
        }
    };
    LkClause {
        literals: c
            .literals
            .iter()
            .map(|l| match l {
                LkLit::Eq(a, b) => orient(sub(a), sub(b), true),
                LkLit::Ne(a, b) => orient(sub(a), sub(b), false),
                LkLit::Lt(a, k, b) => LkLit::Lt(sub(a), *k, sub(b)),
            })
            .collect(),
    }
}

/// Removes trivial reflexive literals. `None` means the clause is a
/// tautology.
fn cleanup_self_loops(c: &LkClause) -> Option<LkClause> {
    let mut lits = Vec::new();
    for l in &c.literals {
        match l {
            LkLit::Eq(a, b) if a == b => return None,
            LkLit::Ne(a, b) if a == b => {}
            LkLit::Lt(a, k, b) if a == b => {
                if *k >= 1 {
                    return None;
                }
            }
            other => lits.push(other.clone()),
        }
    }
    Some(LkClause { literals: lits })
}

/// Eliminates equality literals that contain variables.
fn eliminate_equalities(mut work: Vec<LkClause>) -> Vec<LkClause> {
    let mut done = Vec::new();
    while let Some(c) = work.pop() {
        let Some(c) = cleanup_self_loops(&c) else {
            continue;
        };
        let target = c.literals.iter().enumerate().find_map(|(i, l)| match l {
            LkLit::Eq(a, b) => match (a, b) {
                (LkTerm::Var(v), t) | (t, LkTerm::Var(v)) => Some((i, *v, t.clone(), true)),
                _ => None,
            },
            LkLit::Ne(a, b) => match (a, b) {
                (LkTerm::Var(v), t) | (t, LkTerm::Var(v)) => Some((i, *v, t.clone(), false)),
                _ => None,
            },
            LkLit::Lt(..) => None,
        });
        match target {
            None => done.push(c),
            Some((i, v, t, positive)) => {
                let mut rest = c.literals.clone();
                rest.remove(i);
                let rest = LkClause { literals: rest };
                if positive {
                    // C | zeta = t splits into zeta <_1 t and t <_1 zeta.
                    let mut left = rest.clone();
                    left.literals.push(LkLit::Lt(LkTerm::Var(v), 1, t.clone()));
                    let mut right = rest;
                    right.literals.push(LkLit::Lt(t, 1, LkTerm::Var(v)));
                    work.push(left);
                    work.push(right);
                } else {
                    // C | zeta != t collapses to C[zeta -> t].
                    work.push(substitute(&rest, v, &t));
                }
            }
        }
    }
    done
}

fn clause_vars(c: &LkClause) -> Vec<Variable> {
    let mut out = Vec::new();
    let mut push = |t: &LkTerm| {
        if let LkTerm::Var(v) = t {
            if !out.contains(v) {
                out.push(*v);
            }
        }
    };
    for l in &c.literals {
        match l {
            LkLit::Eq(a, b) | LkLit::Ne(a, b) => {
                push(a);
                push(b);
            }
            LkLit::Lt(a, _, b) => {
                push(a);
                push(b);
            }
        }
    }
    out
}

/// Removes one variable from a clause: all its upper and lower bound
/// literals are replaced by their pairwise combinations.
fn fourier_motzkin(mut work: Vec<LkClause>) -> Vec<LkClause> {
    let mut done = Vec::new();
    while let Some(c) = work.pop() {
        let Some(c) = cleanup_self_loops(&c) else {
            continue;
        };
        let vars = clause_vars(&c);
        let Some(&zeta) = vars.first() else {
            done.push(c);
            continue;
        };
        let mut uppers: Vec<(u64, LkTerm)> = Vec::new(); // zeta <_k s
        let mut lowers: Vec<(LkTerm, u64)> = Vec::new(); // t <_n zeta
        let mut rest: Vec<LkLit> = Vec::new();
        for l in &c.literals {
            match l {
                LkLit::Lt(LkTerm::Var(v), k, s) if *v == zeta => uppers.push((*k, s.clone())),
                LkLit::Lt(t, n, LkTerm::Var(v)) if *v == zeta => lowers.push((t.clone(), *n)),
                other => rest.push(other.clone()),
            }
        }
        for (k, s) in &uppers {
            for (t, n) in &lowers {
                rest.push(LkLit::Lt(t.clone(), k + n, s.clone()));
            }
        }
        work.push(LkClause { literals: rest });
    }
    done
}

/// The pairwise normalization rules: after exhaustion, any two terms are
/// related by at most one literal in a clause. `None` means a tautology.
fn normalize_pairs(c: &LkClause) -> Option<LkClause> {
    let mut lits = c.literals.clone();
    'outer: loop {
        for i in 0..lits.len() {
            for j in 0..lits.len() {
                if i == j {
                    continue;
                }
                match (&lits[i], &lits[j]) {
                    // s <_k t | s = t
                    (LkLit::Lt(s, k, t), LkLit::Eq(a, b))
                        if same_pair(s, t, a, b) =>
                    {
                        if *k >= 1 {
                            lits.remove(j);
                        } else {
                            let new = LkLit::Lt(s.clone(), 1, t.clone());
                            let (lo, hi) = ordered(i, j);
                            lits.remove(hi);
                            lits.remove(lo);
                            lits.push(new);
                        }
                        continue 'outer;
                    }
                    // s <_k t | s != t
                    (LkLit::Lt(s, k, t), LkLit::Ne(a, b))
                        if same_pair(s, t, a, b) =>
                    {
                        if *k >= 1 {
                            return None;
                        }
                        lits.remove(i);
                        continue 'outer;
                    }
                    // s <_k t | s <_n t
                    (LkLit::Lt(s1, k, t1), LkLit::Lt(s2, n, t2))
                        if s1 == s2 && t1 == t2 =>
                    {
                        if k <= n {
                            lits.remove(i);
                        } else {
                            lits.remove(j);
                        }
                        continue 'outer;
                    }
                    // s <_k t | t <_n s
                    (LkLit::Lt(s1, k, t1), LkLit::Lt(t2, n, s2))
                        if s1 == s2 && t1 == t2 =>
                    {
                        if k + n >= 1 {
                            return None;
                        }
                        let new = orient(s1.clone(), t1.clone(), false);
                        let (lo, hi) = ordered(i, j);
                        lits.remove(hi);
                        lits.remove(lo);
                        lits.push(new);
                        continue 'outer;
                    }
                    // s = t | s != t
                    (LkLit::Eq(a1, b1), LkLit::Ne(a2, b2)) if a1 == a2 && b1 == b2 => {
                        return None;
                    }
                    _ => {}
                }
                // Duplicate literals.
                if lits[i] == lits[j] {
                    lits.remove(ordered(i, j).1);
                    continue 'outer;
                }
            }
        }
        break;
    }
    Some(LkClause { literals: lits })
}

fn same_pair(s: &LkTerm, t: &LkTerm, a: &LkTerm, b: &LkTerm) -> bool {
    (s == a && t == b) || (s == b && t == a)
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Key identifying the equivalence class of a clause: which pairs are
/// related by =, by != and by a directed < (at any offset).
fn class_key(c: &LkClause) -> (Vec<LkLit>, Vec<(LkTerm, LkTerm)>) {
    let mut fixed: Vec<LkLit> = Vec::new();
    let mut lt_pairs: Vec<(LkTerm, LkTerm)> = Vec::new();
    for l in &c.literals {
        match l {
            LkLit::Eq(..) | LkLit::Ne(..) => fixed.push(l.clone()),
            LkLit::Lt(s, _, t) => lt_pairs.push((s.clone(), t.clone())),
        }
    }
    fixed.sort();
    lt_pairs.sort();
    lt_pairs.dedup();
    (fixed, lt_pairs)
}

fn offset_vector(c: &LkClause, pairs: &[(LkTerm, LkTerm)]) -> Vec<u64> {
    pairs
        .iter()
        .map(|(s, t)| {
            c.literals
                .iter()
                .find_map(|l| match l {
                    LkLit::Lt(a, k, b) if a == s && b == t => Some(*k),
                    _ => None,
                })
                .expect("normalized clause relates each pair at most once")
        })
        .collect()
}

/// Keeps only the clauses whose offset tuples are minimal within their
/// equivalence class; a dropped clause is entailed by the kept clause that
/// dominates it pointwise.
fn dickson_filter(clauses: Vec<LkClause>) -> (Vec<LkClause>, Vec<(LkClause, LkClause)>) {
    let mut groups: BTreeMap<String, Vec<LkClause>> = BTreeMap::new();
    for c in clauses {
        let key = format!("{:?}", class_key(&c));
        groups.entry(key).or_default().push(c);
    }
    let mut kept = Vec::new();
    let mut removals = Vec::new();
    for (_, group) in groups {
        let (_, pairs) = class_key(&group[0]);
        let vectors: Vec<Vec<u64>> = group.iter().map(|c| offset_vector(c, &pairs)).collect();
        let dominated = |i: usize| -> Option<usize> {
            (0..group.len()).find(|&j| {
                j != i
                    && vectors[j].iter().zip(&vectors[i]).all(|(a, b)| a <= b)
                    && (vectors[j] != vectors[i] || j < i)
            })
        };
        let keep: Vec<bool> = (0..group.len()).map(|i| dominated(i).is_none()).collect();
        for (i, c) in group.iter().enumerate() {
            if keep[i] {
                kept.push(c.clone());
            } else {
                // Chase to a kept dominator; chains are finite.
                let mut j = dominated(i).unwrap();
                while !keep[j] {
                    j = dominated(j).unwrap();
                }
                debug_assert!(vectors[j].iter().zip(&vectors[i]).all(|(a, b)| a <= b));
                removals.push((c.clone(), group[j].clone()));
            }
        }
    }
    (kept, removals)
}

/// Full transformation pipeline.
pub fn lk_transform(clauses: &[Clause]) -> Result<LkClauseSet, LkError> {
    check_shape(clauses)?;
    let mut table = TermTable { terms: Vec::new() };
    let mut encoded = Vec::with_capacity(clauses.len());
    for c in clauses {
        encoded.push(encode_clause(c, &mut table)?);
    }
    let after_eq = eliminate_equalities(encoded);
    let after_fm = fourier_motzkin(after_eq);
    let mut normalized = Vec::new();
    for c in after_fm {
        if let Some(c) = normalize_pairs(&c) {
            debug_assert!(clause_vars(&c).is_empty(), "variables survived elimination");
            normalized.push(c);
        }
    }
    normalized.sort_by_key(|c| format!("{c:?}"));
    normalized.dedup();
    let (kept, removals) = dickson_filter(normalized);
    Ok(LkClauseSet {
        terms: table.terms,
        clauses: kept,
        removals,
    })
}

fn lk_term_formula(
    set: &LkClauseSet,
    t: &LkTerm,
) -> Result<crate::bg::linear::LinearTerm, LkError> {
    match t {
        LkTerm::Ground(i) => linearize(&set.terms[*i])
            .map_err(|e| LkError::OutsideFragment(format!("ground term not linear: {e}"))),
        LkTerm::Var(v) => Ok(crate::bg::linear::LinearTerm::var(*v)),
    }
}

/// Decides integer satisfiability of the transformed set: the shifted
/// relations are decoded back to plain inequalities and handed to the
/// quantifier-elimination backend (parameters existential, any remaining
/// variables universal).
pub fn lk_decide(set: &LkClauseSet) -> Result<LkVerdict, LkError> {
    let mut clause_formulas = Vec::new();
    for c in &set.clauses {
        let mut lits = Vec::new();
        let mut vars = Vec::new();
        for l in &c.literals {
            let f = match l {
                LkLit::Eq(a, b) => {
                    PFormula::eq(lk_term_formula(set, a)?, lk_term_formula(set, b)?)
                }
                LkLit::Ne(a, b) => {
                    PFormula::ne(lk_term_formula(set, a)?, lk_term_formula(set, b)?)
                }
                LkLit::Lt(a, k, b) => PFormula::lt(
                    lk_term_formula(set, a)?,
                    lk_term_formula(set, b)? + crate::bg::linear::LinearTerm::constant(*k),
                ),
            };
            lits.push(f);
        }
        for v in clause_vars(c) {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        let mut f = PFormula::or(lits);
        for v in vars {
            let q = fresh_qvar();
            f = PFormula::forall(q, f.var_to_qvar(v, q));
        }
        clause_formulas.push(f);
    }
    match decide(&PFormula::and(clause_formulas)) {
        Verdict::Valid => Ok(LkVerdict::SatOverZ),
        Verdict::Invalid => Ok(LkVerdict::UnsatOverZ),
    }
}

/// Direct decision of an input set: transform, then decide.
pub fn lk_saturate(clauses: &[Clause]) -> Result<(LkClauseSet, LkVerdict), LkError> {
    let set = lk_transform(clauses)?;
    let verdict = lk_decide(&set)?;
    Ok((set, verdict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{builtins, new_parameter, VarKind};

    fn lt_atom(a: Term, b: Term) -> Literal {
        let bi = builtins();
        Literal::eq(
            Term::app(bi.less, vec![a, b]),
            Term::app(bi.true_less, vec![]),
        )
    }

    fn leq_atom(a: Term, b: Term) -> Literal {
        let bi = builtins();
        Literal::eq(
            Term::app(bi.leq, vec![a, b]),
            Term::app(bi.true_leq, vec![]),
        )
    }

    #[test]
    fn leq_becomes_shift_one() {
        let c = Clause::new(vec![leq_atom(Term::int(3), Term::int(4))]);
        let set = lk_transform(&[c]).unwrap();
        assert_eq!(set.clauses.len(), 1);
        assert!(matches!(set.clauses[0].literals[0], LkLit::Lt(_, 1, _)));
    }

    #[test]
    fn fourier_motzkin_combines_bounds() {
        // C | zeta <_2 s | t <_3 zeta collapses to C | t <_5 s when zeta
        // does not occur in C.
        let b = builtins();
        let zeta = Variable::fresh(b.int, VarKind::Ordinary);
        let g0 = LkTerm::Ground(0);
        let g1 = LkTerm::Ground(1);
        let c = LkClause {
            literals: vec![
                LkLit::Ne(g0.clone(), g1.clone()),
                LkLit::Lt(LkTerm::Var(zeta), 2, g0.clone()),
                LkLit::Lt(g1.clone(), 3, LkTerm::Var(zeta)),
            ],
        };
        let out = fourier_motzkin(vec![c]);
        assert_eq!(out.len(), 1);
        assert_eq!(
            out[0].literals,
            vec![LkLit::Ne(g0.clone(), g1.clone()), LkLit::Lt(g1, 5, g0)]
        );
    }

    #[test]
    fn offset_literals_from_input_syntax() {
        // t < zeta + 3 and an unconstrained upper bound zeta < y eliminate
        // to a single shifted bound between t and y.
        let b = builtins();
        let zeta = Variable::fresh(b.int, VarKind::Ordinary);
        let y = Variable::fresh(b.int, VarKind::Ordinary);
        let t = Term::app(new_parameter("lk_t", b.int), vec![]);
        let c = Clause::new(vec![
            lt_atom(Term::var(zeta), Term::var(y)),
            lt_atom(
                t.clone(),
                Term::app(b.plus, vec![Term::var(zeta), Term::int(3)]),
            ),
        ]);
        // After eliminating zeta the clause is t <_3 y; eliminating y (no
        // upper bounds) leaves the empty clause, so the set is unsat.
        let (_, verdict) = lk_saturate(&[c]).unwrap();
        assert_eq!(verdict, LkVerdict::UnsatOverZ);
    }

    #[test]
    fn opposite_bounds_with_positive_slack_are_tautologies() {
        let b = builtins();
        let s = Term::app(new_parameter("lk_u", b.int), vec![]);
        let t = Term::app(new_parameter("lk_v", b.int), vec![]);
        // s < t | t <= s: slack 0 + 1 >= 1, tautology.
        let c = Clause::new(vec![lt_atom(s.clone(), t.clone()), leq_atom(t, s)]);
        let set = lk_transform(&[c]).unwrap();
        assert!(set.clauses.is_empty());
    }

    #[test]
    fn shape_check_rejects_left_hand_sums() {
        let b = builtins();
        let x = Variable::fresh(b.int, VarKind::Ordinary);
        let y = Variable::fresh(b.int, VarKind::Ordinary);
        // X + 1 < Y has the offset sum on the left.
        let c = Clause::new(vec![lt_atom(
            Term::app(b.plus, vec![Term::var(x), Term::int(1)]),
            Term::var(y),
        )]);
        let err = lk_transform(&[c]).unwrap_err();
        match err {
            LkError::OutsideFragment(msg) => assert!(msg.contains("+")),
        }
    }

    #[test]
    fn decide_small_sets() {
        let b = builtins();
        let alpha = Term::app(new_parameter("lk_alpha", b.int), vec![]);
        // {0 < alpha, alpha < 0} is unsatisfiable.
        let c1 = Clause::new(vec![lt_atom(Term::int(0), alpha.clone())]);
        let c2 = Clause::new(vec![lt_atom(alpha.clone(), Term::int(0))]);
        let (_, verdict) = lk_saturate(&[c1.clone(), c2]).unwrap();
        assert_eq!(verdict, LkVerdict::UnsatOverZ);

        // The empty set is satisfiable.
        let (_, verdict) = lk_saturate(&[]).unwrap();
        assert_eq!(verdict, LkVerdict::SatOverZ);

        // {alpha > 0, alpha < 3} is satisfiable.
        let c3 = Clause::new(vec![lt_atom(alpha, Term::int(3))]);
        let (_, verdict) = lk_saturate(&[c1, c3]).unwrap();
        assert_eq!(verdict, LkVerdict::SatOverZ);
    }
}
