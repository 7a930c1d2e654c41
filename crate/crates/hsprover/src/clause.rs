//! Equational literals and clauses.
//!
//! A literal is an (implicitly unordered) equation or disequation between
//! terms of the same sort; non-equational atoms arrive already encoded as
//! equations with a distinguished `true` constant. A clause is a multiset of
//! literals together with a selection of negative foreground literals.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::sym::Variable;
use crate::term::{Term, TermClass};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub lhs: Term,
    pub rhs: Term,
    pub positive: bool,
}

impl Literal {
    pub fn new(lhs: Term, rhs: Term, positive: bool) -> Literal {
        assert_eq!(lhs.sort(), rhs.sort(), "literal sides must share a sort");
        Literal { lhs, rhs, positive }
    }

    pub fn eq(lhs: Term, rhs: Term) -> Literal {
        Literal::new(lhs, rhs, true)
    }

    pub fn neq(lhs: Term, rhs: Term) -> Literal {
        Literal::new(lhs, rhs, false)
    }

    pub fn flipped(&self) -> Literal {
        Literal {
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
            positive: self.positive,
        }
    }

    /// True if both sides are background terms (pure or impure).
    pub fn is_bg(&self) -> bool {
        self.lhs.class() != TermClass::Foreground && self.rhs.class() != TermClass::Foreground
    }

    pub fn is_pure_bg(&self) -> bool {
        self.lhs.class() == TermClass::PureBg && self.rhs.class() == TermClass::PureBg
    }

    pub fn is_fg(&self) -> bool {
        !self.is_bg()
    }

    /// Equality up to the orientation of the sides.
    pub fn same_atom(&self, other: &Literal) -> bool {
        (self.lhs == other.lhs && self.rhs == other.rhs)
            || (self.lhs == other.rhs && self.rhs == other.lhs)
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<Variable>) {
        self.lhs.collect_vars(out);
        self.rhs.collect_vars(out);
    }

    pub fn is_ground(&self) -> bool {
        self.lhs.is_ground() && self.rhs.is_ground()
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = crate::sym::builtins();
        // Atom-encoded literals print as the atom itself.
        if let Some(op) = self.rhs.top_op() {
            if (op == b.true_less || op == b.true_leq) && self.rhs.args().is_empty() {
                if self.positive {
                    return write!(f, "{}", self.lhs);
                }
                return write!(f, "~{}", self.lhs);
            }
        }
        if self.positive {
            write!(f, "{} = {}", self.lhs, self.rhs)
        } else {
            write!(f, "{} != {}", self.lhs, self.rhs)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub literals: Vec<Literal>,
    /// Indices of selected literals; always negative foreground literals.
    pub selected: Vec<usize>,
}

impl Clause {
    pub fn new(literals: Vec<Literal>) -> Clause {
        Clause {
            literals,
            selected: Vec::new(),
        }
    }

    pub fn empty() -> Clause {
        Clause::new(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn is_bg(&self) -> bool {
        self.literals.iter().all(|l| l.is_bg())
    }

    pub fn is_ground(&self) -> bool {
        self.literals.iter().all(|l| l.is_ground())
    }

    pub fn is_unit(&self) -> bool {
        self.literals.len() == 1
    }

    pub fn vars(&self) -> BTreeSet<Variable> {
        let mut s = BTreeSet::new();
        for l in &self.literals {
            l.collect_vars(&mut s);
        }
        s
    }

    /// Symbol count plus twice the number of distinct variables; the passive
    /// queue orders clauses by this.
    pub fn weight(&self) -> u32 {
        let syms: u32 = self
            .literals
            .iter()
            .map(|l| l.lhs.weight() + l.rhs.weight())
            .sum();
        syms + 2 * self.vars().len() as u32
    }

    pub fn without_literal(&self, idx: usize) -> Clause {
        let mut lits = self.literals.clone();
        lits.remove(idx);
        Clause::new(lits)
    }

    /// Ordered alpha-equivalence: literal-by-literal with a variable
    /// bijection built on the fly (sorts and kinds must agree).
    pub fn alpha_eq_ordered(&self, other: &Clause) -> bool {
        if self.literals.len() != other.literals.len() {
            return false;
        }
        let mut fwd: BTreeMap<Variable, Variable> = BTreeMap::new();
        let mut bwd: BTreeMap<Variable, Variable> = BTreeMap::new();
        fn terms_match(
            a: &Term,
            b: &Term,
            fwd: &mut BTreeMap<Variable, Variable>,
            bwd: &mut BTreeMap<Variable, Variable>,
        ) -> bool {
            match (a.as_var(), b.as_var()) {
                (Some(x), Some(y)) => {
                    if x.sort != y.sort || x.kind != y.kind {
                        return false;
                    }
                    match (fwd.get(&x), bwd.get(&y)) {
                        (None, None) => {
                            fwd.insert(x, y);
                            bwd.insert(y, x);
                            true
                        }
                        (Some(&y2), Some(&x2)) => y2 == y && x2 == x,
                        _ => false,
                    }
                }
                (None, None) => {
                    if a.top_op() != b.top_op() {
                        return false;
                    }
                    a.args()
                        .iter()
                        .zip(b.args())
                        .all(|(x, y)| terms_match(x, y, fwd, bwd))
                }
                _ => false,
            }
        }
        self.literals.iter().zip(&other.literals).all(|(l, k)| {
            l.positive == k.positive
                && terms_match(&l.lhs, &k.lhs, &mut fwd, &mut bwd)
                && terms_match(&l.rhs, &k.rhs, &mut fwd, &mut bwd)
        })
    }

    /// Alpha-equivalence up to literal order and side orientation. Clauses
    /// here are small; backtracking over literal matchings is fine.
    pub fn alpha_eq_multiset(&self, other: &Clause) -> bool {
        if self.literals.len() != other.literals.len() {
            return false;
        }
        fn go(
            mine: &[Literal],
            theirs: &mut Vec<Option<Literal>>,
            acc: &Clause,
            other_acc: &mut Vec<Literal>,
        ) -> bool {
            if mine.is_empty() {
                let reordered = Clause::new(other_acc.clone());
                return acc.alpha_eq_ordered(&reordered);
            }
            let lit = &mine[0];
            for i in 0..theirs.len() {
                let Some(cand) = theirs[i].clone() else {
                    continue;
                };
                if cand.positive != lit.positive {
                    continue;
                }
                for flip in [false, true] {
                    let c = if flip { cand.flipped() } else { cand.clone() };
                    theirs[i] = None;
                    other_acc.push(c);
                    if go(&mine[1..], theirs, acc, other_acc) {
                        return true;
                    }
                    other_acc.pop();
                    theirs[i] = Some(cand.clone());
                }
            }
            false
        }
        let mut slots: Vec<Option<Literal>> = other.literals.iter().cloned().map(Some).collect();
        go(&self.literals, &mut slots, self, &mut Vec::new())
    }

    /// A rendering that is invariant under variable renaming, used to detect
    /// duplicate clauses. Literals are first sorted by a name-free key.
    pub fn canonical_key(&self) -> String {
        fn skeleton(t: &Term) -> String {
            match t.as_var() {
                Some(v) => format!("V{:?}{}", v.kind, v.sort.0),
                None => {
                    let mut s = format!("f{}(", t.top_op().unwrap().0);
                    for a in t.args() {
                        s.push_str(&skeleton(a));
                        s.push(',');
                    }
                    s.push(')');
                    s
                }
            }
        }
        let mut lits: Vec<(String, &Literal)> = self
            .literals
            .iter()
            .map(|l| {
                let mut sides = [skeleton(&l.lhs), skeleton(&l.rhs)];
                sides.sort();
                (
                    format!("{}{}|{}", l.positive as u8, sides[0], sides[1]),
                    l,
                )
            })
            .collect();
        lits.sort_by(|a, b| a.0.cmp(&b.0));
        // Second pass: canonical variable numbering in sorted-literal order.
        let mut names: BTreeMap<Variable, usize> = BTreeMap::new();
        fn render(t: &Term, names: &mut BTreeMap<Variable, usize>) -> String {
            match t.as_var() {
                Some(v) => {
                    let n = names.len();
                    let ix = *names.entry(v).or_insert(n);
                    format!("v{:?}{}#{}", v.kind, v.sort.0, ix)
                }
                None => {
                    let mut s = format!("f{}(", t.top_op().unwrap().0);
                    for a in t.args() {
                        s.push_str(&render(a, names));
                        s.push(',');
                    }
                    s.push(')');
                    s
                }
            }
        }
        let mut out = String::new();
        for (_, l) in lits {
            let a = render(&l.lhs, &mut names);
            let b = render(&l.rhs, &mut names);
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            out.push_str(&format!("{}{}~{};", l.positive as u8, a, b));
        }
        out
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.literals.is_empty() {
            return write!(f, "[]");
        }
        for (i, l) in self.literals.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{builtins, new_op, Level, VarKind, Variable};

    #[test]
    fn alpha_equivalence() {
        let b = builtins();
        let f = new_op("ce_f", vec![b.int], b.int, Level::Foreground);
        let x = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let y = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let c1 = Clause::new(vec![Literal::eq(Term::app(f, vec![x.clone()]), x.clone())]);
        let c2 = Clause::new(vec![Literal::eq(Term::app(f, vec![y.clone()]), y.clone())]);
        assert!(c1.alpha_eq_ordered(&c2));
        // Different kinds do not match.
        let z = Term::var(Variable::fresh(b.int, VarKind::Abstraction));
        let c3 = Clause::new(vec![Literal::eq(Term::app(f, vec![z.clone()]), z)]);
        assert!(!c1.alpha_eq_ordered(&c3));
        assert_eq!(c1.canonical_key(), c2.canonical_key());
    }

    #[test]
    fn multiset_alpha_eq_ignores_order_and_orientation() {
        let b = builtins();
        let x = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let l1 = Literal::eq(x.clone(), Term::int(1));
        let l2 = Literal::neq(x.clone(), Term::int(2));
        let c1 = Clause::new(vec![l1.clone(), l2.clone()]);
        let c2 = Clause::new(vec![l2.flipped(), l1]);
        assert!(c1.alpha_eq_multiset(&c2));
        assert!(!c1.alpha_eq_ordered(&c2));
    }
}
