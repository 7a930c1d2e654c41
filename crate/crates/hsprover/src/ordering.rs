//! The hierarchic reduction ordering and its extensions.
//!
//! The concrete ordering is a lexicographic path ordering whose precedence
//! puts every foreground operator above every background operator and every
//! background operator above every domain element; domain elements are
//! compared arithmetically by magnitude, negative above positive, so the
//! chain `... > -2 > 2 > -1 > 1 > 0` never has to be materialized. Because
//! abstraction variables can only be instantiated by background terms, a
//! non-variable foreground term is ordered above any abstraction variable.

use std::cell::RefCell;
use std::cmp::Ordering as StdOrd;
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrd};

use num_traits::Signed;

use crate::clause::{Clause, Literal};
use crate::sym::{self, Level, OpId, VarKind};
use crate::term::{Term, TermClass};

/// Four-valued comparison verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Gt,
    Lt,
    Eq,
    Inc,
}

impl Cmp {
    pub fn flip(self) -> Cmp {
        match self {
            Cmp::Gt => Cmp::Lt,
            Cmp::Lt => Cmp::Gt,
            other => other,
        }
    }
}

static PRECEDENCE_IDS: AtomicU64 = AtomicU64::new(0);

/// Total precedence on operator symbols.
///
/// Within a level band, user overrides (an ordered list of names, highest
/// first) win, then arity, then name, then declaration order.
#[derive(Debug)]
pub struct Precedence {
    id: u64,
    overrides: HashMap<OpId, usize>,
}

impl Default for Precedence {
    fn default() -> Self {
        Precedence::new()
    }
}

impl Precedence {
    pub fn new() -> Precedence {
        Precedence {
            id: PRECEDENCE_IDS.fetch_add(1, AtomicOrd::Relaxed),
            overrides: HashMap::new(),
        }
    }

    /// `names` ordered highest-first; unknown names are ignored by the
    /// caller, which resolves them against the signature.
    pub fn with_overrides(ops: &[OpId]) -> Precedence {
        let mut overrides = HashMap::new();
        let n = ops.len();
        for (i, op) in ops.iter().enumerate() {
            overrides.insert(*op, n - i);
        }
        Precedence {
            id: PRECEDENCE_IDS.fetch_add(1, AtomicOrd::Relaxed),
            overrides,
        }
    }

    pub fn cmp_ops(&self, a: OpId, b: OpId) -> StdOrd {
        if a == b {
            return StdOrd::Equal;
        }
        let da = sym::op_data(a);
        let db = sym::op_data(b);
        // Foreground above background.
        let band = |d: &sym::OpData| match (d.level, d.domain_value.is_some()) {
            (Level::Foreground, _) => 2u8,
            (Level::Background, false) => 1,
            (Level::Background, true) => 0,
        };
        match band(&da).cmp(&band(&db)) {
            StdOrd::Equal => {}
            o => return o,
        }
        if let (Some(va), Some(vb)) = (&da.domain_value, &db.domain_value) {
            // Magnitude first, negative above positive at equal magnitude.
            return match va.abs().cmp(&vb.abs()) {
                StdOrd::Equal => vb.sign().cmp(&va.sign()),
                o => o,
            };
        }
        let ra = self.overrides.get(&a).copied().unwrap_or(0);
        let rb = self.overrides.get(&b).copied().unwrap_or(0);
        ra.cmp(&rb)
            .then(da.arg_sorts.len().cmp(&db.arg_sorts.len()))
            .then(da.name.cmp(&db.name))
            .then(a.0.cmp(&b.0))
    }
}

thread_local! {
    static LPO_CACHE: RefCell<HashMap<(u64, u64, u64), bool>> = RefCell::new(HashMap::new());
}

const LPO_CACHE_LIMIT: usize = 1 << 20;

fn lpo_gt(prec: &Precedence, s: &Term, t: &Term) -> bool {
    // A variable is never greater than anything.
    if s.is_var() {
        return false;
    }
    if let Some(y) = t.as_var() {
        // s > y if y occurs in s; additionally any non-variable foreground
        // term dominates an abstraction variable, which can only ever be
        // instantiated by background terms.
        return s.contains_var(y)
            || (y.kind == VarKind::Abstraction && s.class() == TermClass::Foreground);
    }
    let key = (prec.id, s.node_id(), t.node_id());
    if let Some(hit) = LPO_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return hit;
    }
    let result = lpo_gt_uncached(prec, s, t);
    LPO_CACHE.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() >= LPO_CACHE_LIMIT {
            c.clear();
        }
        c.insert(key, result);
    });
    result
}

fn lpo_gt_uncached(prec: &Precedence, s: &Term, t: &Term) -> bool {
    let sargs = s.args();
    let targs = t.args();
    if sargs.iter().any(|a| a == t || lpo_gt(prec, a, t)) {
        return true;
    }
    let f = s.top_op().unwrap();
    let g = t.top_op().unwrap();
    match prec.cmp_ops(f, g) {
        StdOrd::Greater => targs.iter().all(|b| lpo_gt(prec, s, b)),
        StdOrd::Equal => {
            for (i, (a, b)) in sargs.iter().zip(targs).enumerate() {
                if a == b {
                    continue;
                }
                return lpo_gt(prec, a, b)
                    && targs[i + 1..].iter().all(|b| lpo_gt(prec, s, b));
            }
            false
        }
        StdOrd::Less => false,
    }
}

/// LPO verdict on two terms.
pub fn lpo_compare(prec: &Precedence, s: &Term, t: &Term) -> Cmp {
    if s == t {
        Cmp::Eq
    } else if lpo_gt(prec, s, t) {
        Cmp::Gt
    } else if lpo_gt(prec, t, s) {
        Cmp::Lt
    } else {
        Cmp::Inc
    }
}

/// Multiset extension of a strict comparison.
fn multiset_cmp<T: Clone + PartialEq>(
    xs: &[T],
    ys: &[T],
    gt: &mut dyn FnMut(&T, &T) -> bool,
) -> Cmp {
    // Drop common elements multiset-wise.
    let mut rest_y: Vec<Option<&T>> = ys.iter().map(Some).collect();
    let mut rest_x: Vec<&T> = Vec::new();
    'outer: for x in xs {
        for slot in rest_y.iter_mut() {
            if let Some(y) = slot {
                if *y == x {
                    *slot = None;
                    continue 'outer;
                }
            }
        }
        rest_x.push(x);
    }
    let rest_y: Vec<&T> = rest_y.into_iter().flatten().collect();
    if rest_x.is_empty() && rest_y.is_empty() {
        return Cmp::Eq;
    }
    let x_covers = rest_y
        .iter()
        .all(|y| rest_x.iter().any(|x| gt(x, y)));
    let y_covers = rest_x
        .iter()
        .all(|x| rest_y.iter().any(|y| gt(y, x)));
    match (
        x_covers && !rest_x.is_empty(),
        y_covers && !rest_y.is_empty(),
    ) {
        (true, false) => Cmp::Gt,
        (false, true) => Cmp::Lt,
        _ => Cmp::Inc,
    }
}

/// The multiset encoding of a literal: `{s, t}` for a positive equation,
/// `{s, s, t, t}` for a negative one.
fn literal_multiset(l: &Literal) -> Vec<Term> {
    if l.positive {
        vec![l.lhs.clone(), l.rhs.clone()]
    } else {
        vec![
            l.lhs.clone(),
            l.lhs.clone(),
            l.rhs.clone(),
            l.rhs.clone(),
        ]
    }
}

pub fn literal_compare(prec: &Precedence, l: &Literal, k: &Literal) -> Cmp {
    multiset_cmp(
        &literal_multiset(l),
        &literal_multiset(k),
        &mut |a, b| lpo_gt(prec, a, b),
    )
}

pub fn clause_compare(prec: &Precedence, c: &Clause, d: &Clause) -> Cmp {
    let cm: Vec<Vec<Term>> = c.literals.iter().map(literal_multiset).collect();
    let dm: Vec<Vec<Term>> = d.literals.iter().map(literal_multiset).collect();
    multiset_cmp(&cm, &dm, &mut |a, b| {
        multiset_cmp(a, b, &mut |x, y| lpo_gt(prec, x, y)) == Cmp::Gt
    })
}

/// Whether the literal occurrence at `idx` is maximal (strictly maximal) in
/// the clause: no other occurrence is greater (greater or equal).
pub fn maximal_in(prec: &Precedence, c: &Clause, idx: usize, strict: bool) -> bool {
    let target = &c.literals[idx];
    for (j, other) in c.literals.iter().enumerate() {
        if j == idx {
            continue;
        }
        match literal_compare(prec, other, target) {
            Cmp::Gt => return false,
            Cmp::Eq if strict => return false,
            _ => {}
        }
    }
    true
}

/// Size-based Knuth-Bendix ordering on ground background terms (all symbol
/// weights 1), used to bound simplification results: the weight strictly
/// decreases except between equal-weight terms ordered by precedence.
pub fn fin_compare(prec: &Precedence, s: &Term, t: &Term) -> Cmp {
    debug_assert!(s.is_ground() && t.is_ground());
    if s == t {
        return Cmp::Eq;
    }
    match s.weight().cmp(&t.weight()) {
        StdOrd::Greater => Cmp::Gt,
        StdOrd::Less => Cmp::Lt,
        StdOrd::Equal => {
            let f = s.top_op().unwrap();
            let g = t.top_op().unwrap();
            match prec.cmp_ops(f, g) {
                StdOrd::Greater => Cmp::Gt,
                StdOrd::Less => Cmp::Lt,
                StdOrd::Equal => {
                    for (a, b) in s.args().iter().zip(t.args()) {
                        match fin_compare(prec, a, b) {
                            Cmp::Eq => {}
                            o => return o,
                        }
                    }
                    Cmp::Eq
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clause::{Clause, Literal};
    use crate::sym::{builtins, new_op, new_parameter, Level, VarKind, Variable};

    fn fg_const(name: &str) -> Term {
        Term::app(
            new_op(name, vec![], builtins().int, Level::Foreground),
            vec![],
        )
    }

    #[test]
    fn ground_fg_above_ground_bg() {
        let b = builtins();
        let prec = Precedence::new();
        let f = new_op("or_f", vec![b.int], b.int, Level::Foreground);
        let alpha = Term::app(new_parameter("or_alpha", b.int), vec![]);
        let f1 = Term::app(f, vec![Term::int(1)]);
        let a1 = Term::app(b.plus, vec![alpha, Term::int(1)]);
        assert_eq!(lpo_compare(&prec, &f1, &a1), Cmp::Gt);
    }

    #[test]
    fn domain_element_chain() {
        let prec = Precedence::new();
        assert_eq!(lpo_compare(&prec, &Term::int(2), &Term::int(0)), Cmp::Gt);
        assert_eq!(lpo_compare(&prec, &Term::int(-2), &Term::int(2)), Cmp::Gt);
        assert_eq!(lpo_compare(&prec, &Term::int(2), &Term::int(-1)), Cmp::Gt);
        assert_eq!(lpo_compare(&prec, &Term::int(-1), &Term::int(1)), Cmp::Gt);
        assert_eq!(lpo_compare(&prec, &Term::int(1), &Term::int(0)), Cmp::Gt);
        let t = Term::int(5);
        assert_eq!(lpo_compare(&prec, &t, &t), Cmp::Eq);
    }

    #[test]
    fn abstraction_variable_below_fg_terms() {
        let b = builtins();
        let prec = Precedence::new();
        let f = new_op("or_g", vec![b.int], b.int, Level::Foreground);
        let cap_x = Variable::fresh(b.int, VarKind::Abstraction);
        let fx = Term::app(f, vec![Term::var(cap_x)]);
        assert_eq!(lpo_compare(&prec, &fx, &Term::var(cap_x)), Cmp::Gt);
        // Ordinary variables are only below terms containing them.
        let x = Variable::fresh(b.int, VarKind::Ordinary);
        let y = Variable::fresh(b.int, VarKind::Ordinary);
        let fx = Term::app(f, vec![Term::var(x)]);
        assert_eq!(lpo_compare(&prec, &fx, &Term::var(y)), Cmp::Inc);
        assert_eq!(lpo_compare(&prec, &fx, &Term::var(x)), Cmp::Gt);
    }

    #[test]
    fn literal_encoding_orders_negative_above_positive() {
        let prec = Precedence::new();
        let a = fg_const("or_a");
        let c = fg_const("or_b");
        let neg = Literal::neq(a.clone(), c.clone());
        let pos = Literal::eq(a, c);
        assert_eq!(literal_compare(&prec, &neg, &pos), Cmp::Gt);
        assert_eq!(literal_compare(&prec, &pos, &pos), Cmp::Eq);
    }

    #[test]
    fn literal_compare_with_fg_side() {
        // With f(1) > alpha: f(1) = 0 dominates alpha = 0. Expected value
        // computed by exhaustive pairing of the multiset encodings.
        let b = builtins();
        let prec = Precedence::new();
        let f = new_op("or_h", vec![b.int], b.int, Level::Foreground);
        let alpha = Term::app(new_parameter("or_beta", b.int), vec![]);
        let l = Literal::eq(Term::app(f, vec![Term::int(1)]), Term::int(0));
        let k = Literal::eq(alpha, Term::int(0));
        assert_eq!(literal_compare(&prec, &l, &k), Cmp::Gt);
        assert_eq!(literal_compare(&prec, &k, &l), Cmp::Lt);
    }

    #[test]
    fn maximality() {
        let prec = Precedence::new();
        let a = fg_const("or_c1");
        let l = Literal::eq(a.clone(), Term::int(0));
        // Unit clause: maximal and strictly maximal.
        let c = Clause::new(vec![l.clone()]);
        assert!(maximal_in(&prec, &c, 0, false));
        assert!(maximal_in(&prec, &c, 0, true));
        // Duplicated literal: maximal but not strictly maximal.
        let c = Clause::new(vec![l.clone(), l]);
        assert!(maximal_in(&prec, &c, 0, false));
        assert!(!maximal_in(&prec, &c, 0, true));
    }

    #[test]
    fn maximality_with_parameter_vs_domain_element() {
        // In c = beta | c = 0 with precedence c > beta > 0, the literal
        // c = beta is maximal: multiset comparison {c, beta} vs {c, 0}.
        let b = builtins();
        let prec = Precedence::new();
        let c = fg_const("or_c2");
        let beta = Term::app(new_parameter("or_gamma", b.int), vec![]);
        let cl = Clause::new(vec![
            Literal::eq(c.clone(), beta),
            Literal::eq(c, Term::int(0)),
        ]);
        assert!(maximal_in(&prec, &cl, 0, false));
        assert!(!maximal_in(&prec, &cl, 1, false));
    }

    #[test]
    fn fin_compare_strictly_decreases_on_evaluation() {
        let b = builtins();
        let prec = Precedence::new();
        // weight(1 + 1) = 3 > weight(2) = 1.
        let sum = Term::app(b.plus, vec![Term::int(1), Term::int(1)]);
        assert_eq!(fin_compare(&prec, &sum, &Term::int(2)), Cmp::Gt);
        let zz = Term::app(b.plus, vec![Term::int(0), Term::int(0)]);
        assert_eq!(fin_compare(&prec, &zz, &Term::int(0)), Cmp::Gt);
        assert_eq!(fin_compare(&prec, &Term::int(2), &Term::int(2)), Cmp::Eq);
    }
}
