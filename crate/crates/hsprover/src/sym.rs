//! Sorts, operator symbols and variables.
//!
//! Symbols live in a process-wide append-only arena so that terms can refer
//! to them by index. A [`Signature`] is a per-problem view mapping names to
//! arena entries; the arena itself is never garbage collected.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, OnceLock, RwLock};

use num_bigint::BigInt;

/// Whether a sort or operator belongs to the interpreted background
/// vocabulary or to the free foreground extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    Background,
    Foreground,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SortId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpId(pub u32);

#[derive(Clone, Debug)]
pub struct SortData {
    pub name: String,
    pub level: Level,
}

#[derive(Clone, Debug)]
pub struct OpData {
    pub name: String,
    pub arg_sorts: Vec<SortId>,
    pub result_sort: SortId,
    pub level: Level,
    /// `Some(n)` iff this operator is the distinguished constant for the
    /// integer `n`. Distinct domain elements denote distinct values in every
    /// background model.
    pub domain_value: Option<BigInt>,
    pub parameter: bool,
}

struct Arena {
    sorts: Vec<SortData>,
    ops: Vec<OpData>,
}

static ARENA: OnceLock<RwLock<Arena>> = OnceLock::new();
static INT_CONSTS: OnceLock<Mutex<HashMap<BigInt, OpId>>> = OnceLock::new();
static VAR_COUNTER: AtomicU64 = AtomicU64::new(0);

fn arena() -> &'static RwLock<Arena> {
    ARENA.get_or_init(|| {
        RwLock::new(Arena {
            sorts: Vec::new(),
            ops: Vec::new(),
        })
    })
}

pub fn new_sort(name: &str, level: Level) -> SortId {
    let mut a = arena().write().unwrap();
    let id = SortId(a.sorts.len() as u32);
    a.sorts.push(SortData {
        name: name.to_string(),
        level,
    });
    id
}

fn push_op(data: OpData) -> OpId {
    let mut a = arena().write().unwrap();
    let id = OpId(a.ops.len() as u32);
    a.ops.push(data);
    id
}

pub fn new_op(name: &str, arg_sorts: Vec<SortId>, result_sort: SortId, level: Level) -> OpId {
    push_op(OpData {
        name: name.to_string(),
        arg_sorts,
        result_sort,
        level,
        domain_value: None,
        parameter: false,
    })
}

/// Declares a background parameter: a free constant whose value a background
/// model may choose.
pub fn new_parameter(name: &str, sort: SortId) -> OpId {
    assert_eq!(sort_level(sort), Level::Background, "parameters are background constants");
    push_op(OpData {
        name: name.to_string(),
        arg_sorts: Vec::new(),
        result_sort: sort,
        level: Level::Background,
        domain_value: None,
        parameter: true,
    })
}

/// Returns the domain-element operator for an integer value, creating it on
/// first use. All integer constants are domain elements.
pub fn int_const(value: &BigInt) -> OpId {
    let table = INT_CONSTS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut table = table.lock().unwrap();
    if let Some(op) = table.get(value) {
        return *op;
    }
    let op = push_op(OpData {
        name: value.to_string(),
        arg_sorts: Vec::new(),
        result_sort: builtins().int,
        level: Level::Background,
        domain_value: Some(value.clone()),
        parameter: false,
    });
    table.insert(value.clone(), op);
    op
}

pub fn op_data(op: OpId) -> OpData {
    arena().read().unwrap().ops[op.0 as usize].clone()
}

pub fn op_name(op: OpId) -> String {
    arena().read().unwrap().ops[op.0 as usize].name.clone()
}

pub fn op_arity(op: OpId) -> usize {
    arena().read().unwrap().ops[op.0 as usize].arg_sorts.len()
}

pub fn op_level(op: OpId) -> Level {
    arena().read().unwrap().ops[op.0 as usize].level
}

pub fn op_result_sort(op: OpId) -> SortId {
    arena().read().unwrap().ops[op.0 as usize].result_sort
}

pub fn op_arg_sorts(op: OpId) -> Vec<SortId> {
    arena().read().unwrap().ops[op.0 as usize].arg_sorts.clone()
}

pub fn op_domain_value(op: OpId) -> Option<BigInt> {
    arena().read().unwrap().ops[op.0 as usize].domain_value.clone()
}

pub fn op_is_parameter(op: OpId) -> bool {
    arena().read().unwrap().ops[op.0 as usize].parameter
}

pub fn sort_name(sort: SortId) -> String {
    arena().read().unwrap().sorts[sort.0 as usize].name.clone()
}

pub fn sort_level(sort: SortId) -> Level {
    arena().read().unwrap().sorts[sort.0 as usize].level
}

/// The built-in integer vocabulary plus the encoding of the two interpreted
/// comparison predicates as equations with a distinguished `true` constant.
pub struct Builtins {
    pub int: SortId,
    /// Default foreground sort for individuals (`$i`).
    pub individual: SortId,
    pub plus: OpId,
    pub minus: OpId,
    pub uminus: OpId,
    pub times: OpId,
    /// Private result sort of the `<` atom encoding.
    pub o_less: SortId,
    pub less: OpId,
    pub true_less: OpId,
    pub o_leq: SortId,
    pub leq: OpId,
    pub true_leq: OpId,
}

static BUILTINS: OnceLock<Builtins> = OnceLock::new();

pub fn builtins() -> &'static Builtins {
    BUILTINS.get_or_init(|| {
        let int = new_sort("$int", Level::Background);
        let individual = new_sort("$i", Level::Foreground);
        let plus = new_op("$sum", vec![int, int], int, Level::Background);
        let minus = new_op("$difference", vec![int, int], int, Level::Background);
        let uminus = new_op("$uminus", vec![int], int, Level::Background);
        let times = new_op("$product", vec![int, int], int, Level::Background);
        let o_less = new_sort("$o_less", Level::Background);
        let less = new_op("$less", vec![int, int], o_less, Level::Background);
        let true_less = new_op("$true_less", vec![], o_less, Level::Background);
        let o_leq = new_sort("$o_lesseq", Level::Background);
        let leq = new_op("$lesseq", vec![int, int], o_leq, Level::Background);
        let true_leq = new_op("$true_lesseq", vec![], o_leq, Level::Background);
        Builtins {
            int,
            individual,
            plus,
            minus,
            uminus,
            times,
            o_less,
            less,
            true_less,
            o_leq,
            leq,
            true_leq,
        }
    })
}

/// Background variables carry a kind restricting how they may be
/// instantiated; foreground-sorted variables are always ordinary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    Abstraction,
    Ordinary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    pub id: u64,
    pub sort: SortId,
    pub kind: VarKind,
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.id.cmp(&other.id)
    }
}

impl Variable {
    /// Mints a fresh variable from the process-wide monotone counter.
    pub fn fresh(sort: SortId, kind: VarKind) -> Variable {
        assert!(
            kind == VarKind::Ordinary || sort_level(sort) == Level::Background,
            "abstraction variables must have a background sort"
        );
        let id = VAR_COUNTER.fetch_add(1, Ordering::Relaxed);
        Variable { id, sort, kind }
    }
}

/// Per-problem symbol table: maps source names to arena entries and records
/// which operators are in play (used to build precedences and term pools).
#[derive(Default, Clone)]
pub struct Signature {
    sorts_by_name: HashMap<String, SortId>,
    ops_by_name: HashMap<String, OpId>,
    pub declared_ops: Vec<OpId>,
    pub declared_sorts: Vec<SortId>,
}

impl Signature {
    pub fn new() -> Signature {
        let b = builtins();
        let mut sig = Signature::default();
        sig.sorts_by_name.insert("$int".into(), b.int);
        sig.sorts_by_name.insert("$i".into(), b.individual);
        sig
    }

    pub fn declare_sort(&mut self, name: &str, level: Level) -> Result<SortId, String> {
        if self.sorts_by_name.contains_key(name) {
            return Err(format!("sort `{name}` already declared"));
        }
        let id = new_sort(name, level);
        self.sorts_by_name.insert(name.to_string(), id);
        self.declared_sorts.push(id);
        Ok(id)
    }

    pub fn declare_op(
        &mut self,
        name: &str,
        arg_sorts: Vec<SortId>,
        result_sort: SortId,
        level: Level,
    ) -> Result<OpId, String> {
        if self.ops_by_name.contains_key(name) {
            return Err(format!("symbol `{name}` already declared"));
        }
        let id = new_op(name, arg_sorts, result_sort, level);
        self.ops_by_name.insert(name.to_string(), id);
        self.declared_ops.push(id);
        Ok(id)
    }

    pub fn declare_parameter(&mut self, name: &str, sort: SortId) -> Result<OpId, String> {
        if self.ops_by_name.contains_key(name) {
            return Err(format!("symbol `{name}` already declared"));
        }
        if sort_level(sort) != Level::Background {
            return Err(format!("parameter `{name}` must have a background sort"));
        }
        let id = new_parameter(name, sort);
        self.ops_by_name.insert(name.to_string(), id);
        self.declared_ops.push(id);
        Ok(id)
    }

    /// Declares a predicate by the usual encoding: a private result sort and
    /// a distinguished constant, so that `p(t...)` stands for the equation
    /// `p(t...) = true_p`.
    pub fn declare_predicate(
        &mut self,
        name: &str,
        arg_sorts: Vec<SortId>,
        level: Level,
    ) -> Result<(OpId, OpId), String> {
        if self.ops_by_name.contains_key(name) {
            return Err(format!("symbol `{name}` already declared"));
        }
        let sort = new_sort(&format!("$o_{name}"), level);
        let pred = new_op(name, arg_sorts, sort, level);
        let tru = new_op(&format!("$true_{name}"), vec![], sort, level);
        self.ops_by_name.insert(name.to_string(), pred);
        self.declared_ops.push(pred);
        self.declared_ops.push(tru);
        Ok((pred, tru))
    }

    pub fn lookup_sort(&self, name: &str) -> Option<SortId> {
        self.sorts_by_name.get(name).copied()
    }

    pub fn lookup_op(&self, name: &str) -> Option<OpId> {
        self.ops_by_name.get(name).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_consts_are_shared() {
        let a = int_const(&BigInt::from(42));
        let b = int_const(&BigInt::from(42));
        assert_eq!(a, b);
        assert_eq!(op_domain_value(a), Some(BigInt::from(42)));
        assert_eq!(op_level(a), Level::Background);
    }

    #[test]
    fn fresh_variables_are_distinct() {
        let b = builtins();
        let x = Variable::fresh(b.int, VarKind::Ordinary);
        let y = Variable::fresh(b.int, VarKind::Ordinary);
        assert_ne!(x.id, y.id);
    }

    #[test]
    #[should_panic]
    fn abstraction_variables_need_bg_sort() {
        let b = builtins();
        Variable::fresh(b.individual, VarKind::Abstraction);
    }
}
