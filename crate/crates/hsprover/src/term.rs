//! Shared-structure terms over the two-level sorted vocabulary.
//!
//! Terms are immutable reference-counted trees with cached classification,
//! groundness, weight and structural hash, so equality checks and the hot
//! ordering/unification paths stay cheap. Every node also carries a unique id
//! minted from a process-wide counter; ids are never reused, which makes them
//! safe keys for memoization tables.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigInt;

use crate::sym::{self, Level, OpId, SortId, VarKind, Variable};

/// Every term is exactly one of: foreground, pure background, impure
/// background (background symbols only but containing an ordinary variable).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermClass {
    Foreground,
    PureBg,
    ImpureBg,
}

#[derive(Debug)]
pub enum TermKind {
    Var(Variable),
    App(OpId, Vec<Term>),
}

#[derive(Debug)]
pub struct TermNode {
    pub kind: TermKind,
    sort: SortId,
    class: TermClass,
    ground: bool,
    weight: u32,
    depth: u32,
    hash: u64,
    id: u64,
}

static NODE_COUNTER: AtomicU64 = AtomicU64::new(0);

#[derive(Clone, Debug)]
pub struct Term(Arc<TermNode>);

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        if self.0.hash != other.0.hash {
            return false;
        }
        match (&self.0.kind, &other.0.kind) {
            (TermKind::Var(a), TermKind::Var(b)) => a == b,
            (TermKind::App(f, fa), TermKind::App(g, ga)) => f == g && fa == ga,
            _ => false,
        }
    }
}

impl Eq for Term {}

impl Hash for Term {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

fn mix(a: u64, b: u64) -> u64 {
    // FNV-style mixing; only used as a prefilter for structural equality.
    (a ^ b).wrapping_mul(0x100000001b3).rotate_left(17)
}

impl Term {
    pub fn var(v: Variable) -> Term {
        let class = if sym::sort_level(v.sort) == Level::Background {
            match v.kind {
                VarKind::Abstraction => TermClass::PureBg,
                VarKind::Ordinary => TermClass::ImpureBg,
            }
        } else {
            TermClass::Foreground
        };
        Term(Arc::new(TermNode {
            sort: v.sort,
            class,
            ground: false,
            weight: 1,
            depth: 1,
            hash: mix(0x9e3779b97f4a7c15, v.id ^ (v.sort.0 as u64) << 32),
            id: NODE_COUNTER.fetch_add(1, Ordering::Relaxed),
            kind: TermKind::Var(v),
        }))
    }

    pub fn app(op: OpId, args: Vec<Term>) -> Term {
        let data = sym::op_data(op);
        assert_eq!(
            data.arg_sorts.len(),
            args.len(),
            "arity mismatch for `{}`",
            data.name
        );
        for (i, a) in args.iter().enumerate() {
            assert_eq!(
                a.sort(),
                data.arg_sorts[i],
                "ill-sorted argument {i} of `{}`",
                data.name
            );
        }
        let mut class = match data.level {
            Level::Foreground => TermClass::Foreground,
            Level::Background => TermClass::PureBg,
        };
        if class != TermClass::Foreground {
            for a in &args {
                match a.class() {
                    TermClass::Foreground => {
                        class = TermClass::Foreground;
                        break;
                    }
                    TermClass::ImpureBg => class = TermClass::ImpureBg,
                    TermClass::PureBg => {}
                }
            }
        }
        let ground = args.iter().all(|a| a.is_ground());
        let weight = 1 + args.iter().map(|a| a.weight()).sum::<u32>();
        let depth = 1 + args.iter().map(|a| a.depth()).max().unwrap_or(0);
        let mut h = mix(0x51afd7ed558ccd6d, op.0 as u64);
        for a in &args {
            h = mix(h, a.0.hash);
        }
        Term(Arc::new(TermNode {
            sort: data.result_sort,
            class,
            ground,
            weight,
            depth,
            hash: h,
            id: NODE_COUNTER.fetch_add(1, Ordering::Relaxed),
            kind: TermKind::App(op, args),
        }))
    }

    pub fn int(value: impl Into<BigInt>) -> Term {
        let v: BigInt = value.into();
        Term::app(sym::int_const(&v), vec![])
    }

    pub fn kind(&self) -> &TermKind {
        &self.0.kind
    }

    pub fn sort(&self) -> SortId {
        self.0.sort
    }

    pub fn class(&self) -> TermClass {
        self.0.class
    }

    pub fn is_ground(&self) -> bool {
        self.0.ground
    }

    pub fn weight(&self) -> u32 {
        self.0.weight
    }

    pub fn depth(&self) -> u32 {
        self.0.depth
    }

    pub fn node_id(&self) -> u64 {
        self.0.id
    }

    pub fn as_var(&self) -> Option<Variable> {
        match &self.0.kind {
            TermKind::Var(v) => Some(*v),
            TermKind::App(..) => None,
        }
    }

    pub fn is_var(&self) -> bool {
        matches!(self.0.kind, TermKind::Var(_))
    }

    pub fn top_op(&self) -> Option<OpId> {
        match &self.0.kind {
            TermKind::App(op, _) => Some(*op),
            TermKind::Var(_) => None,
        }
    }

    pub fn args(&self) -> &[Term] {
        match &self.0.kind {
            TermKind::App(_, args) => args,
            TermKind::Var(_) => &[],
        }
    }

    pub fn domain_value(&self) -> Option<BigInt> {
        self.top_op().and_then(sym::op_domain_value)
    }

    pub fn is_domain_element(&self) -> bool {
        self.domain_value().is_some()
    }

    pub fn is_parameter(&self) -> bool {
        self.top_op().map(sym::op_is_parameter).unwrap_or(false)
    }

    pub fn contains_var(&self, v: Variable) -> bool {
        if self.is_ground() {
            return false;
        }
        match &self.0.kind {
            TermKind::Var(w) => *w == v,
            TermKind::App(_, args) => args.iter().any(|a| a.contains_var(v)),
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<Variable>) {
        if self.is_ground() {
            return;
        }
        match &self.0.kind {
            TermKind::Var(v) => {
                out.insert(*v);
            }
            TermKind::App(_, args) => {
                for a in args {
                    a.collect_vars(out);
                }
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<Variable> {
        let mut s = BTreeSet::new();
        self.collect_vars(&mut s);
        s
    }

    /// All subterms in pre-order, paired with their position paths.
    pub fn positions(&self) -> Vec<(Vec<u32>, Term)> {
        let mut out = Vec::new();
        fn walk(t: &Term, path: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, Term)>) {
            out.push((path.clone(), t.clone()));
            for (i, a) in t.args().iter().enumerate() {
                path.push(i as u32);
                walk(a, path, out);
                path.pop();
            }
        }
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn at(&self, pos: &[u32]) -> Term {
        let mut cur = self.clone();
        for &i in pos {
            cur = cur.args()[i as usize].clone();
        }
        cur
    }

    pub fn replace_at(&self, pos: &[u32], replacement: Term) -> Term {
        if pos.is_empty() {
            return replacement;
        }
        match &self.0.kind {
            TermKind::Var(_) => unreachable!("position into a variable"),
            TermKind::App(op, args) => {
                let i = pos[0] as usize;
                let mut new_args = args.clone();
                new_args[i] = args[i].replace_at(&pos[1..], replacement);
                Term::app(*op, new_args)
            }
        }
    }

    /// Replaces every occurrence of `from` by `to`.
    pub fn replace_all(&self, from: &Term, to: &Term) -> Term {
        if self == from {
            return to.clone();
        }
        match &self.0.kind {
            TermKind::Var(_) => self.clone(),
            TermKind::App(op, args) => {
                let mut changed = false;
                let new_args: Vec<Term> = args
                    .iter()
                    .map(|a| {
                        let n = a.replace_all(from, to);
                        if n != *a {
                            changed = true;
                        }
                        n
                    })
                    .collect();
                if changed {
                    Term::app(*op, new_args)
                } else {
                    self.clone()
                }
            }
        }
    }

    /// Deterministic structural comparison (symbol ids, then arguments);
    /// unrelated to the reduction ordering, used for canonical renderings.
    pub fn structural_cmp(&self, other: &Term) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        match (&self.0.kind, &other.0.kind) {
            (TermKind::Var(a), TermKind::Var(b)) => a.id.cmp(&b.id),
            (TermKind::Var(_), TermKind::App(..)) => Less,
            (TermKind::App(..), TermKind::Var(_)) => Greater,
            (TermKind::App(f, fa), TermKind::App(g, ga)) => match f.0.cmp(&g.0) {
                Equal => {
                    for (a, b) in fa.iter().zip(ga.iter()) {
                        match a.structural_cmp(b) {
                            Equal => {}
                            o => return o,
                        }
                    }
                    fa.len().cmp(&ga.len())
                }
                o => o,
            },
        }
    }
}

/// The unique classification of a term as foreground, pure background or
/// impure background.
pub fn classify(t: &Term) -> TermClass {
    t.class()
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            TermKind::Var(v) => {
                let marker = match v.kind {
                    VarKind::Abstraction => '^',
                    VarKind::Ordinary => '?',
                };
                write!(f, "{marker}X{}", v.id)
            }
            TermKind::App(op, args) => {
                let b = sym::builtins();
                let name = sym::op_name(*op);
                if args.is_empty() {
                    return write!(f, "{name}");
                }
                if *op == b.plus {
                    write!(f, "({} + {})", args[0], args[1])
                } else if *op == b.minus {
                    write!(f, "({} - {})", args[0], args[1])
                } else if *op == b.times {
                    write!(f, "({} * {})", args[0], args[1])
                } else if *op == b.uminus {
                    write!(f, "(-{})", args[0])
                } else if *op == b.less {
                    write!(f, "({} < {})", args[0], args[1])
                } else if *op == b.leq {
                    write!(f, "({} <= {})", args[0], args[1])
                } else {
                    write!(f, "{name}(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{a}")?;
                    }
                    write!(f, ")")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{builtins, new_op, new_parameter, Level, VarKind, Variable};

    fn plus(a: Term, b: Term) -> Term {
        Term::app(builtins().plus, vec![a, b])
    }

    #[test]
    fn classification_is_total() {
        let b = builtins();
        let alpha = Term::app(new_parameter("tc_alpha", b.int), vec![]);
        let y = Term::var(Variable::fresh(b.int, VarKind::Ordinary));
        let f = new_op("tc_f", vec![b.int], b.int, Level::Foreground);

        // alpha + 1: background symbols only, no ordinary variable.
        let t = plus(alpha.clone(), Term::int(1));
        assert_eq!(t.class(), TermClass::PureBg);

        // 1 + y with y ordinary: impure.
        let t = plus(Term::int(1), y.clone());
        assert_eq!(t.class(), TermClass::ImpureBg);

        // f(1) + (alpha + 1): contains a foreground operator.
        let t = plus(
            Term::app(f, vec![Term::int(1)]),
            plus(alpha, Term::int(1)),
        );
        assert_eq!(t.class(), TermClass::Foreground);
    }

    #[test]
    fn structural_equality_and_sharing() {
        let one = Term::int(1);
        let a = plus(one.clone(), one.clone());
        let b = plus(Term::int(1), Term::int(1));
        assert_eq!(a, b);
        assert_ne!(a.node_id(), b.node_id());
    }

    #[test]
    fn positions_and_replacement() {
        let b = builtins();
        let f = new_op("tp_f", vec![b.int], b.int, Level::Foreground);
        let t = Term::app(f, vec![plus(Term::int(1), Term::int(2))]);
        let ps = t.positions();
        assert_eq!(ps.len(), 4);
        let r = t.replace_at(&[0, 1], Term::int(7));
        assert_eq!(r.at(&[0, 1]), Term::int(7));
        assert_eq!(t.at(&[0, 1]), Term::int(2));
    }
}
