//! Simple unification and simple matching.
//!
//! Unification respects variable kinds: an abstraction variable may only be
//! bound to a pure background term. When an abstraction variable meets an
//! impure background term, the ordinary variables inside are weakened to
//! fresh abstraction variables, which yields the most general *simple*
//! unifier (for example `Z` and `x + y` unify with
//! `[x -> X, y -> Y, Z -> X + Y]`).

use std::collections::BTreeMap;

use crate::subst::Substitution;
use crate::sym::{VarKind, Variable};
use crate::term::{Term, TermClass, TermKind};

/// Most general simple unifier of `s` and `t`, or `None` when the terms are
/// not unifiable by a simple substitution. The returned substitution is
/// idempotent.
pub fn simple_mgu(s: &Term, t: &Term) -> Option<Substitution> {
    if s.sort() != t.sort() {
        return None;
    }
    let mut bindings: BTreeMap<Variable, Term> = BTreeMap::new();
    if !unify(s, t, &mut bindings) {
        return None;
    }
    // Resolve the triangular bindings into an idempotent substitution.
    let mut out = Substitution::new();
    for (v, _) in bindings.iter() {
        let t = deep_resolve(&Term::var(*v), &bindings);
        out.bind(*v, t);
    }
    debug_assert!(out.is_simple());
    debug_assert!(out.is_idempotent());
    Some(out)
}

fn resolve_top(t: &Term, b: &BTreeMap<Variable, Term>) -> Term {
    let mut cur = t.clone();
    while let Some(v) = cur.as_var() {
        match b.get(&v) {
            Some(next) => cur = next.clone(),
            None => break,
        }
    }
    cur
}

fn deep_resolve(t: &Term, b: &BTreeMap<Variable, Term>) -> Term {
    let t = resolve_top(t, b);
    match t.kind() {
        TermKind::Var(_) => t,
        TermKind::App(op, args) => {
            let new_args: Vec<Term> = args.iter().map(|a| deep_resolve(a, b)).collect();
            if new_args.as_slice() == args {
                t.clone()
            } else {
                Term::app(*op, new_args)
            }
        }
    }
}

fn occurs(v: Variable, t: &Term, b: &BTreeMap<Variable, Term>) -> bool {
    match t.kind() {
        TermKind::Var(w) => {
            if *w == v {
                return true;
            }
            match b.get(w) {
                Some(next) => occurs(v, &next.clone(), b),
                None => false,
            }
        }
        TermKind::App(_, args) => args.iter().any(|a| occurs(v, a, b)),
    }
}

fn unify(s: &Term, t: &Term, b: &mut BTreeMap<Variable, Term>) -> bool {
    let s = resolve_top(s, b);
    let t = resolve_top(t, b);
    if s == t {
        return true;
    }
    match (s.as_var(), t.as_var()) {
        (Some(x), Some(y)) => {
            // Prefer binding the ordinary variable: binding an abstraction
            // variable to an ordinary one would not be simple.
            match (x.kind, y.kind) {
                (VarKind::Abstraction, VarKind::Ordinary) => {
                    b.insert(y, Term::var(x));
                }
                _ => {
                    b.insert(x, Term::var(y));
                }
            }
            true
        }
        (Some(x), None) => bind(x, &t, b),
        (None, Some(y)) => bind(y, &s, b),
        (None, None) => match (s.kind(), t.kind()) {
            (TermKind::App(f, fa), TermKind::App(g, ga)) => {
                f == g && fa.iter().zip(ga).all(|(a, c)| unify(a, c, b))
            }
            _ => unreachable!(),
        },
    }
}

fn bind(v: Variable, t: &Term, b: &mut BTreeMap<Variable, Term>) -> bool {
    if occurs(v, t, b) {
        return false;
    }
    if v.kind == VarKind::Abstraction {
        let resolved = deep_resolve(t, b);
        if resolved.class() == TermClass::Foreground {
            return false;
        }
        // Weaken: ordinary variables inside the candidate become fresh
        // abstraction variables so the binding is a pure background term.
        for w in resolved.vars() {
            if w.kind == VarKind::Ordinary {
                b.insert(w, Term::var(Variable::fresh(w.sort, VarKind::Abstraction)));
            }
        }
    }
    b.insert(v, t.clone());
    true
}

/// One-sided simple matching: extends `bindings` so that `pattern` under the
/// bindings equals `target`. Abstraction variables match only pure
/// background targets.
pub fn match_simple(
    pattern: &Term,
    target: &Term,
    bindings: &mut BTreeMap<Variable, Term>,
) -> bool {
    match pattern.kind() {
        TermKind::Var(v) => {
            if let Some(prev) = bindings.get(v) {
                return prev == target;
            }
            if v.sort != target.sort() {
                return false;
            }
            if v.kind == VarKind::Abstraction && target.class() != TermClass::PureBg {
                return false;
            }
            bindings.insert(*v, target.clone());
            true
        }
        TermKind::App(f, fa) => match target.kind() {
            TermKind::App(g, ga) if f == g => {
                fa.iter().zip(ga).all(|(p, t)| match_simple(p, t, bindings))
            }
            _ => false,
        },
    }
}
