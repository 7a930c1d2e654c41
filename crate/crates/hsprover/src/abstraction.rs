//! Weak abstraction and its inverse.
//!
//! A target term is a non-variable background subterm (by default also not a
//! domain element) sitting directly under a foreground operator or beside a
//! foreground or impure-background sibling. Weak abstraction exhaustively
//! extracts target terms into disequations `zeta != q`, using a fresh
//! abstraction variable for pure targets and a fresh ordinary variable for
//! impure ones. Unabstraction reverses this by resolving eliminable
//! disequations.

use crate::clause::{Clause, Literal};
use crate::subst::Substitution;
use crate::sym::{self, Level, VarKind, Variable};
use crate::term::{Term, TermClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

#[derive(Clone, Debug)]
pub struct TargetOccurrence {
    pub literal: usize,
    pub side: Side,
    pub position: Vec<u32>,
    pub term: Term,
    pub pure: bool,
}

fn qualifies(q: &Term, parent_fg: bool, siblings_bad: bool, domain_elements_too: bool) -> bool {
    if q.is_var() || q.class() == TermClass::Foreground {
        return false;
    }
    if !domain_elements_too && q.is_domain_element() {
        return false;
    }
    parent_fg || siblings_bad
}

/// Finds the leftmost-innermost target occurrence, if any. With
/// `abstract_domain_elements` set, domain elements qualify as well (the
/// linear-arithmetic saturation mode needs this).
pub fn find_target(c: &Clause, abstract_domain_elements: bool) -> Option<TargetOccurrence> {
    fn walk(
        t: &Term,
        lit: usize,
        side: Side,
        path: &mut Vec<u32>,
        dom: bool,
    ) -> Option<TargetOccurrence> {
        let args = t.args();
        if args.is_empty() {
            return None;
        }
        let parent_fg = sym::op_level(t.top_op().unwrap()) == Level::Foreground;
        for (i, a) in args.iter().enumerate() {
            path.push(i as u32);
            // Innermost first: look inside the argument before testing it.
            if let Some(found) = walk(a, lit, side, path, dom) {
                return Some(found);
            }
            let siblings_bad = args.iter().enumerate().any(|(j, s)| {
                j != i && matches!(s.class(), TermClass::Foreground | TermClass::ImpureBg)
            });
            if qualifies(a, parent_fg, siblings_bad, dom) {
                let occ = TargetOccurrence {
                    literal: lit,
                    side,
                    position: path.clone(),
                    term: a.clone(),
                    pure: a.class() == TermClass::PureBg,
                };
                path.pop();
                return Some(occ);
            }
            path.pop();
        }
        None
    }
    for (i, l) in c.literals.iter().enumerate() {
        for (side, t) in [(Side::Lhs, &l.lhs), (Side::Rhs, &l.rhs)] {
            if let Some(found) = walk(t, i, side, &mut Vec::new(), abstract_domain_elements) {
                return Some(found);
            }
        }
    }
    None
}

pub fn is_weakly_abstracted(c: &Clause, abstract_domain_elements: bool) -> bool {
    find_target(c, abstract_domain_elements).is_none()
}

/// The termination measure for abstraction: the multiset of non-variable
/// occurrence counts of the literal sides.
#[cfg(debug_assertions)]
fn abstraction_measure(c: &Clause) -> Vec<u32> {
    fn non_var_occurrences(t: &Term) -> u32 {
        match t.is_var() {
            true => 0,
            false => 1 + t.args().iter().map(non_var_occurrences).sum::<u32>(),
        }
    }
    let mut m: Vec<u32> = c
        .literals
        .iter()
        .flat_map(|l| [non_var_occurrences(&l.lhs), non_var_occurrences(&l.rhs)])
        .collect();
    m.sort_unstable_by(|a, b| b.cmp(a));
    m
}

#[cfg(debug_assertions)]
fn measure_decreased(before: &[u32], after: &[u32]) -> bool {
    // Multiset decrease over naturals: drop common elements, then every
    // remaining element on the right must be below some remaining left one.
    let mut b = before.to_vec();
    let mut a = Vec::new();
    'outer: for x in after {
        for i in 0..b.len() {
            if b[i] == *x {
                b.remove(i);
                continue 'outer;
            }
        }
        a.push(*x);
    }
    !b.is_empty() && a.iter().all(|x| b.iter().any(|y| y > x))
}

/// Exhaustively extracts target terms. Extraction order is fixed
/// (leftmost-innermost) so derivations replay deterministically.
pub fn weakly_abstract(c: &Clause, abstract_domain_elements: bool) -> Clause {
    let mut cur = Clause::new(c.literals.clone());
    while let Some(occ) = find_target(&cur, abstract_domain_elements) {
        #[cfg(debug_assertions)]
        let before = abstraction_measure(&cur);
        let kind = if occ.pure {
            VarKind::Abstraction
        } else {
            VarKind::Ordinary
        };
        let zeta = Variable::fresh(occ.term.sort(), kind);
        let var = Term::var(zeta);
        let lit = &cur.literals[occ.literal];
        let new_lit = match occ.side {
            Side::Lhs => Literal {
                lhs: lit.lhs.replace_at(&occ.position, var.clone()),
                rhs: lit.rhs.clone(),
                positive: lit.positive,
            },
            Side::Rhs => Literal {
                lhs: lit.lhs.clone(),
                rhs: lit.rhs.replace_at(&occ.position, var.clone()),
                positive: lit.positive,
            },
        };
        let mut lits = cur.literals.clone();
        lits[occ.literal] = new_lit;
        lits.push(Literal::neq(var, occ.term.clone()));
        let next = Clause::new(lits);
        #[cfg(debug_assertions)]
        debug_assert!(
            measure_decreased(&before, &abstraction_measure(&next)),
            "abstraction measure must strictly decrease"
        );
        cur = next;
    }
    cur
}

/// Removes every disequation `zeta != t` where `t` is `zeta` itself or does
/// not contain `zeta`, substituting `t` for `zeta` in the rest. Eliminations
/// are applied in literal order, smallest position first. Also returns the
/// accumulated substitution (the final instantiation of each eliminated
/// variable).
pub fn unabstract_with_subst(c: &Clause) -> (Clause, Substitution) {
    let mut cur = Clause::new(c.literals.clone());
    let mut theta = Substitution::new();
    'scan: loop {
        for (i, l) in cur.literals.iter().enumerate() {
            if l.positive {
                continue;
            }
            let candidate = [(&l.lhs, &l.rhs), (&l.rhs, &l.lhs)]
                .into_iter()
                .find_map(|(a, b)| {
                    let v = a.as_var()?;
                    if b.as_var() == Some(v) || !b.contains_var(v) {
                        Some((v, b.clone()))
                    } else {
                        None
                    }
                });
            if let Some((v, t)) = candidate {
                let step = Substitution::singleton(v, t);
                let mut lits = cur.literals.clone();
                lits.remove(i);
                cur = Clause::new(lits.iter().map(|l| step.apply_lit(l)).collect());
                theta = theta.compose(&step);
                continue 'scan;
            }
        }
        break;
    }
    (cur, theta)
}

pub fn unabstract(c: &Clause) -> Clause {
    unabstract_with_subst(c).0
}

/// True if the clause mentions no impure background term: no background
/// subterm contains an ordinary variable.
fn all_bg_terms_pure(c: &Clause) -> bool {
    fn ok(t: &Term) -> bool {
        t.class() != TermClass::ImpureBg && t.args().iter().all(ok)
    }
    c.literals.iter().all(|l| ok(&l.lhs) && ok(&l.rhs))
}

fn all_bg_terms_ground(c: &Clause) -> bool {
    fn ok(t: &Term) -> bool {
        if t.class() != TermClass::Foreground {
            t.is_ground()
        } else {
            t.args().iter().all(ok)
        }
    }
    c.literals.iter().all(|l| ok(&l.lhs) && ok(&l.rhs))
}

/// Checks that every occurrence of a background-sorted foreground operator
/// is at the top of one side of a literal whose other side is a ground
/// background term; `positive_only` additionally requires a positive literal.
fn bg_sorted_fg_ops_in_definition_shape(c: &Clause, positive_only: bool) -> bool {
    fn is_bg_sorted_fg_app(t: &Term) -> bool {
        match t.top_op() {
            Some(op) => {
                sym::op_level(op) == Level::Foreground
                    && sym::sort_level(t.sort()) == Level::Background
            }
            None => false,
        }
    }
    fn no_nested(t: &Term) -> bool {
        t.args()
            .iter()
            .all(|a| !is_bg_sorted_fg_app(a) && no_nested(a))
    }
    for l in &c.literals {
        for (mine, other) in [(&l.lhs, &l.rhs), (&l.rhs, &l.lhs)] {
            if is_bg_sorted_fg_app(mine) {
                let other_ok =
                    other.class() != TermClass::Foreground && other.is_ground();
                if !other_ok || (positive_only && !l.positive) {
                    return false;
                }
            }
            if !no_nested(mine) {
                return false;
            }
        }
    }
    true
}

/// A clean clause: background terms are pure, background terms of the
/// unabstracted version are ground, and background-sorted foreground
/// operators occur only in positive definition-shaped literals.
pub fn is_clean(c: &Clause) -> bool {
    if !all_bg_terms_pure(c) {
        return false;
    }
    let u = unabstract(c);
    all_bg_terms_ground(&u) && bg_sorted_fg_ops_in_definition_shape(&u, true)
}

pub(crate) fn definition_shape_ok(c: &Clause) -> bool {
    bg_sorted_fg_ops_in_definition_shape(c, false)
}

pub(crate) fn bg_terms_ground(c: &Clause) -> bool {
    all_bg_terms_ground(c)
}

pub(crate) fn bg_terms_pure(c: &Clause) -> bool {
    all_bg_terms_pure(c)
}

/// Ground background-sorted term clause: every background-sorted subterm is
/// ground.
pub fn is_gbt(c: &Clause) -> bool {
    fn ok(t: &Term) -> bool {
        if sym::sort_level(t.sort()) == Level::Background && !t.is_ground() {
            return false;
        }
        t.args().iter().all(ok)
    }
    c.literals.iter().all(|l| ok(&l.lhs) && ok(&l.rhs))
}

/// The maximal background subterms of the unabstracted clause; for clean
/// clauses these are all ground.
pub fn unabstracted_bg_terms(c: &Clause) -> Vec<Term> {
    let u = unabstract(c);
    let mut out = Vec::new();
    fn walk(t: &Term, out: &mut Vec<Term>) {
        if t.class() != TermClass::Foreground {
            if !out.contains(t) {
                out.push(t.clone());
            }
            return;
        }
        for a in t.args() {
            walk(a, out);
        }
    }
    for l in &u.literals {
        walk(&l.lhs, &mut out);
        walk(&l.rhs, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{builtins, new_op, new_parameter, Level, Signature};

    struct Fix {
        alpha: Term,
        beta: Term,
        f: sym::OpId,
        g: sym::OpId,
        z: Variable,
    }

    fn fixture() -> Fix {
        let b = builtins();
        let data = new_sort_once();
        Fix {
            alpha: Term::app(new_parameter(&fresh_name("ab_alpha"), b.int), vec![]),
            beta: Term::app(new_parameter(&fresh_name("ab_beta"), b.int), vec![]),
            f: new_op(&fresh_name("ab_f"), vec![b.int], b.int, Level::Foreground),
            g: new_op(
                &fresh_name("ab_g"),
                vec![b.int, b.int, b.int, data],
                b.int,
                Level::Foreground,
            ),
            z: Variable::fresh(data, VarKind::Ordinary),
        }
    }

    use std::sync::atomic::{AtomicU32, Ordering};
    static N: AtomicU32 = AtomicU32::new(0);
    fn fresh_name(base: &str) -> String {
        format!("{base}_{}", N.fetch_add(1, Ordering::Relaxed))
    }
    fn new_sort_once() -> sym::SortId {
        sym::new_sort(&fresh_name("ab_data"), Level::Foreground)
    }

    fn plus(a: Term, b: Term) -> Term {
        Term::app(builtins().plus, vec![a, b])
    }

    #[test]
    fn finds_innermost_target_and_abstracts() {
        // g(1, alpha, f(1) + (alpha + 1), z) = beta
        // The terms 1, f(1) + (alpha + 1), z and beta are not target terms.
        let fx = fixture();
        let lhs = Term::app(
            fx.g,
            vec![
                Term::int(1),
                fx.alpha.clone(),
                plus(
                    Term::app(fx.f, vec![Term::int(1)]),
                    plus(fx.alpha.clone(), Term::int(1)),
                ),
                Term::var(fx.z),
            ],
        );
        let c = Clause::new(vec![Literal::eq(lhs, fx.beta.clone())]);
        let occ = find_target(&c, false).expect("has a target");
        assert_eq!(occ.term, fx.alpha);
        assert!(occ.pure);

        let a = weakly_abstract(&c, false);
        assert!(is_weakly_abstracted(&a, false));
        assert_eq!(a.literals.len(), 3);
        // Shape: g(1, X, f(1) + Y, z) = beta | X != alpha | Y != alpha + 1.
        let head = &a.literals[0].lhs;
        let x = head.args()[1].as_var().expect("abstracted to a variable");
        assert_eq!(x.kind, VarKind::Abstraction);
        let y = head.args()[2].args()[1].as_var().expect("sum abstracted");
        assert_eq!(y.kind, VarKind::Abstraction);
        assert!(!a.literals[1].positive);
        assert_eq!(a.literals[1].rhs, fx.alpha);
        assert_eq!(a.literals[2].rhs, plus(fx.alpha.clone(), Term::int(1)));
        // Idempotent.
        assert_eq!(weakly_abstract(&a, false), a);
    }

    #[test]
    fn impure_targets_get_ordinary_variables() {
        // f(z + alpha) = 1 needs two steps; the sum gets an ordinary variable.
        let fx = fixture();
        let b = builtins();
        let z = Variable::fresh(b.int, VarKind::Ordinary);
        let c = Clause::new(vec![Literal::eq(
            Term::app(fx.f, vec![plus(Term::var(z), fx.alpha.clone())]),
            Term::int(1),
        )]);
        let a = weakly_abstract(&c, false);
        assert!(is_weakly_abstracted(&a, false));
        assert_eq!(a.literals.len(), 3);
        let y = a.literals[0].lhs.args()[0].as_var().unwrap();
        assert_eq!(y.kind, VarKind::Ordinary);
        // X != alpha comes first (innermost), then y != z + X.
        assert_eq!(a.literals[1].rhs, fx.alpha);
        assert_eq!(a.literals[1].lhs.as_var().unwrap().kind, VarKind::Abstraction);
        assert_eq!(a.literals[2].lhs.as_var().unwrap().kind, VarKind::Ordinary);
    }

    #[test]
    fn already_abstracted_inputs_are_fixed_points() {
        // write(a, 2, read(a, 1) + 1) = b is already weakly abstracted.
        let b = builtins();
        let mut sig = Signature::new();
        let arr = sig.declare_sort(&fresh_name("ab_array"), Level::Foreground).unwrap();
        let write = sig
            .declare_op(&fresh_name("ab_write"), vec![arr, b.int, b.int], arr, Level::Foreground)
            .unwrap();
        let read = sig
            .declare_op(&fresh_name("ab_read"), vec![arr, b.int], b.int, Level::Foreground)
            .unwrap();
        let a_const = sig
            .declare_op(&fresh_name("ab_a"), vec![], arr, Level::Foreground)
            .unwrap();
        let b_const = sig
            .declare_op(&fresh_name("ab_b"), vec![], arr, Level::Foreground)
            .unwrap();
        let lhs = Term::app(
            write,
            vec![
                Term::app(a_const, vec![]),
                Term::int(2),
                plus(
                    Term::app(read, vec![Term::app(a_const, vec![]), Term::int(1)]),
                    Term::int(1),
                ),
            ],
        );
        let c = Clause::new(vec![Literal::eq(lhs, Term::app(b_const, vec![]))]);
        assert!(find_target(&c, false).is_none());
        assert_eq!(weakly_abstract(&c, false), c);

        // Every pure background clause is trivially weakly abstracted.
        let fx = fixture();
        let c = Clause::new(vec![Literal::eq(plus(fx.alpha.clone(), Term::int(1)), fx.beta.clone())]);
        assert!(find_target(&c, false).is_none());
    }

    #[test]
    fn unabstraction_reverses_abstraction() {
        let fx = fixture();
        let lhs = Term::app(
            fx.g,
            vec![
                Term::int(1),
                fx.alpha.clone(),
                plus(
                    Term::app(fx.f, vec![Term::int(1)]),
                    plus(fx.alpha.clone(), Term::int(1)),
                ),
                Term::var(fx.z),
            ],
        );
        let c = Clause::new(vec![Literal::eq(lhs, fx.beta.clone())]);
        let u = unabstract(&weakly_abstract(&c, false));
        assert!(u.alpha_eq_multiset(&c));
    }

    #[test]
    fn unabstraction_keeps_cyclic_disequations() {
        let b = builtins();
        let x = Variable::fresh(b.int, VarKind::Ordinary);
        // x != x + 1 has x inside the right-hand side: kept.
        let c = Clause::new(vec![Literal::neq(
            Term::var(x),
            plus(Term::var(x), Term::int(1)),
        )]);
        assert_eq!(unabstract(&c), c);
    }

    #[test]
    fn cleanliness() {
        let fx = fixture();
        let b = builtins();
        let sig_f = fx.f; // f : int -> int, foreground
        // P(f(c) + 1) with c foreground-int: not clean.
        let mut sig = Signature::new();
        let (p, true_p) = sig
            .declare_predicate(&fresh_name("ab_p"), vec![b.int], Level::Foreground)
            .unwrap();
        let c_const = sig
            .declare_op(&fresh_name("ab_c"), vec![], b.int, Level::Foreground)
            .unwrap();
        let atom = Term::app(
            p,
            vec![plus(
                Term::app(sig_f, vec![Term::app(c_const, vec![])]),
                Term::int(1),
            )],
        );
        let dirty = Clause::new(vec![Literal::eq(atom, Term::app(true_p, vec![]))]);
        assert!(!is_clean(&dirty));

        // f(x) = 1 + alpha | P2(x) with x foreground-sorted: clean.
        let data = sig.declare_sort(&fresh_name("ab_d2"), Level::Foreground).unwrap();
        let f2 = sig
            .declare_op(&fresh_name("ab_f2"), vec![data], b.int, Level::Foreground)
            .unwrap();
        let (p2, true_p2) = sig
            .declare_predicate(&fresh_name("ab_p2"), vec![data], Level::Foreground)
            .unwrap();
        let x = Variable::fresh(data, VarKind::Ordinary);
        let clean = Clause::new(vec![
            Literal::eq(
                Term::app(f2, vec![Term::var(x)]),
                plus(Term::int(1), fx.alpha.clone()),
            ),
            Literal::eq(Term::app(p2, vec![Term::var(x)]), Term::app(true_p2, vec![])),
        ]);
        assert!(is_clean(&clean));

        // Any pure background ground clause is clean.
        let c = Clause::new(vec![Literal::eq(fx.alpha.clone(), Term::int(0))]);
        assert!(is_clean(&c));
    }
}
