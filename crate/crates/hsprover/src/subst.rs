//! Finite sort-respecting substitutions.

use std::collections::BTreeMap;
use std::fmt;

use crate::clause::{Clause, Literal};
use crate::sym::{VarKind, Variable};
use crate::term::{Term, TermClass, TermKind};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<Variable, Term>,
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn singleton(v: Variable, t: Term) -> Substitution {
        let mut s = Substitution::new();
        s.bind(v, t);
        s
    }

    pub fn bind(&mut self, v: Variable, t: Term) {
        assert_eq!(v.sort, t.sort(), "substitution must respect sorts");
        if t.as_var() == Some(v) {
            self.map.remove(&v);
        } else {
            self.map.insert(v, t);
        }
    }

    pub fn get(&self, v: Variable) -> Option<&Term> {
        self.map.get(&v)
    }

    pub fn domain(&self) -> impl Iterator<Item = Variable> + '_ {
        self.map.keys().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Variable, &Term)> {
        self.map.iter()
    }

    pub fn apply(&self, t: &Term) -> Term {
        if self.map.is_empty() || t.is_ground() {
            return t.clone();
        }
        match t.kind() {
            TermKind::Var(v) => self.map.get(v).cloned().unwrap_or_else(|| t.clone()),
            TermKind::App(op, args) => {
                let mut changed = false;
                let new_args: Vec<Term> = args
                    .iter()
                    .map(|a| {
                        let n = self.apply(a);
                        if n != *a {
                            changed = true;
                        }
                        n
                    })
                    .collect();
                if changed {
                    Term::app(*op, new_args)
                } else {
                    t.clone()
                }
            }
        }
    }

    pub fn apply_lit(&self, l: &Literal) -> Literal {
        Literal {
            lhs: self.apply(&l.lhs),
            rhs: self.apply(&l.rhs),
            positive: l.positive,
        }
    }

    /// Selection indices survive application untouched: instantiation does
    /// not reorder literals.
    pub fn apply_clause(&self, c: &Clause) -> Clause {
        Clause {
            literals: c.literals.iter().map(|l| self.apply_lit(l)).collect(),
            selected: c.selected.clone(),
        }
    }

    /// Composition: `x(self.compose(other)) = (x self) other`.
    pub fn compose(&self, other: &Substitution) -> Substitution {
        let mut map = BTreeMap::new();
        for (v, t) in &self.map {
            let t = other.apply(t);
            if t.as_var() != Some(*v) {
                map.insert(*v, t);
            }
        }
        for (v, t) in &other.map {
            if !self.map.contains_key(v) {
                map.insert(*v, t.clone());
            }
        }
        Substitution { map }
    }

    /// Simple: every abstraction variable in the domain maps to a pure
    /// background term.
    pub fn is_simple(&self) -> bool {
        self.map.iter().all(|(v, t)| {
            v.kind != VarKind::Abstraction || t.class() == TermClass::PureBg
        })
    }

    /// Restricted: every abstraction variable in the domain maps to an
    /// abstraction variable or a domain element.
    pub fn is_restricted(&self) -> bool {
        self.map.iter().all(|(v, t)| {
            if v.kind != VarKind::Abstraction {
                return true;
            }
            match t.as_var() {
                Some(w) => w.kind == VarKind::Abstraction,
                None => t.is_domain_element(),
            }
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.map
            .values()
            .all(|t| t.vars().iter().all(|v| !self.map.contains_key(v)))
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (v, t)) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let marker = if v.kind == VarKind::Abstraction { '^' } else { '?' };
            write!(f, "{marker}X{} -> {t}", v.id)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{builtins, new_op, Level};

    #[test]
    fn homomorphic_application_and_composition() {
        let b = builtins();
        let c = new_op("su_c", vec![], b.int, Level::Foreground);
        let x = Variable::fresh(b.int, VarKind::Ordinary);
        let y = Variable::fresh(b.int, VarKind::Ordinary);
        let one_plus_x = Term::app(b.plus, vec![Term::int(1), Term::var(x)]);

        // [x -> c] applied to 1 + x.
        let s = Substitution::singleton(x, Term::app(c, vec![]));
        assert_eq!(
            s.apply(&one_plus_x),
            Term::app(b.plus, vec![Term::int(1), Term::app(c, vec![])])
        );

        // Identity leaves the term untouched.
        let id = Substitution::new();
        assert_eq!(id.apply(&one_plus_x), one_plus_x);

        // Composition law on x with sigma = [x -> y], tau = [y -> 0].
        let sigma = Substitution::singleton(x, Term::var(y));
        let tau = Substitution::singleton(y, Term::int(0));
        let composed = sigma.compose(&tau);
        assert_eq!(composed.apply(&Term::var(x)), Term::int(0));
        assert_eq!(
            composed.apply(&Term::var(x)),
            tau.apply(&sigma.apply(&Term::var(x)))
        );
    }

    #[test]
    fn simplicity_and_restrictedness() {
        let b = builtins();
        let f = new_op("su_f", vec![b.int], b.int, Level::Foreground);
        let x = Variable::fresh(b.int, VarKind::Ordinary);
        let cap_x = Variable::fresh(b.int, VarKind::Abstraction);
        let cap_y = Variable::fresh(b.int, VarKind::Abstraction);
        let alpha = crate::sym::new_parameter("su_alpha", b.int);
        let alpha_t = Term::app(alpha, vec![]);

        // [x -> f(1)] is simple; [X -> f(1)] is not.
        let s = Substitution::singleton(x, Term::app(f, vec![Term::int(1)]));
        assert!(s.is_simple());
        let s = Substitution::singleton(cap_x, Term::app(f, vec![Term::int(1)]));
        assert!(!s.is_simple());

        // [X -> 1 + alpha] is simple but not restricted.
        let s = Substitution::singleton(
            cap_x,
            Term::app(b.plus, vec![Term::int(1), alpha_t]),
        );
        assert!(s.is_simple());
        assert!(!s.is_restricted());

        // [X -> Y] and [X -> 1] are restricted.
        let s = Substitution::singleton(cap_x, Term::var(cap_y));
        assert!(s.is_restricted());
        let s = Substitution::singleton(cap_x, Term::int(1));
        assert!(s.is_restricted());
    }
}
