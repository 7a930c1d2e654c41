//! Parsed problems and their canonical text rendering.

use std::collections::HashMap;

use crate::clause::{Clause, Literal};
use crate::engine::{InputClause, Role};
use crate::sym::{self, OpId, Signature, SortId, VarKind, Variable};
use crate::term::{Term, TermKind};

#[derive(Clone, Debug)]
pub enum Declaration {
    Sort(SortId),
    Op(OpId),
    Predicate(OpId),
    Parameter(OpId),
}

/// A fully resolved problem: declarations, annotated clauses, and the
/// predicate encoding table (predicate operator to its truth constant).
pub struct ProblemFile {
    pub signature: Signature,
    pub declarations: Vec<(String, Declaration)>,
    pub clauses: Vec<InputClause>,
    pub predicates: HashMap<OpId, OpId>,
}

impl ProblemFile {
    pub fn truth_constant_of(&self, pred: OpId) -> Option<OpId> {
        let b = sym::builtins();
        if pred == b.less {
            return Some(b.true_less);
        }
        if pred == b.leq {
            return Some(b.true_leq);
        }
        self.predicates.get(&pred).copied()
    }

    fn is_atom_literal(&self, l: &Literal) -> Option<(Term, bool)> {
        // Recognizes pred(args) = true_pred in either orientation.
        for (a, bside) in [(&l.lhs, &l.rhs), (&l.rhs, &l.lhs)] {
            if let Some(pred) = a.top_op() {
                if let Some(tru) = self.truth_constant_of(pred) {
                    if bside.top_op() == Some(tru) {
                        return Some((a.clone(), l.positive));
                    }
                }
            }
        }
        None
    }

    fn render_term(&self, t: &Term, names: &mut HashMap<Variable, String>) -> String {
        match t.kind() {
            TermKind::Var(v) => {
                let n = names.len();
                let name = names
                    .entry(*v)
                    .or_insert_with(|| format!("X{}", n + 1))
                    .clone();
                match v.kind {
                    VarKind::Abstraction => format!("^{name}"),
                    VarKind::Ordinary => format!("?{name}"),
                }
            }
            TermKind::App(op, args) => {
                if let Some(v) = sym::op_domain_value(*op) {
                    return v.to_string();
                }
                let name = sym::op_name(*op);
                if args.is_empty() {
                    name
                } else {
                    let rendered: Vec<String> =
                        args.iter().map(|a| self.render_term(a, names)).collect();
                    format!("{name}({})", rendered.join(", "))
                }
            }
        }
    }

    fn render_literal(&self, l: &Literal, names: &mut HashMap<Variable, String>) -> String {
        if let Some((atom, positive)) = self.is_atom_literal(l) {
            let rendered = self.render_term(&atom, names);
            if positive {
                return rendered;
            }
            return format!("~{rendered}");
        }
        let a = self.render_term(&l.lhs, names);
        let b = self.render_term(&l.rhs, names);
        if l.positive {
            format!("{a} = {b}")
        } else {
            format!("{a} != {b}")
        }
    }

    pub fn render_clause(&self, c: &Clause) -> String {
        if c.literals.is_empty() {
            return "$false".into();
        }
        let mut names = HashMap::new();
        let lits: Vec<String> = c
            .literals
            .iter()
            .map(|l| self.render_literal(l, &mut names))
            .collect();
        lits.join(" | ")
    }

    fn render_type(&self, op: OpId, predicate: bool) -> String {
        let args = sym::op_arg_sorts(op);
        let result = if predicate {
            "$o".to_string()
        } else {
            sym::sort_name(sym::op_result_sort(op))
        };
        match args.len() {
            0 => result,
            1 => format!("{} > {result}", sym::sort_name(args[0])),
            _ => {
                let parts: Vec<String> = args.iter().map(|s| sym::sort_name(*s)).collect();
                format!("({}) > {result}", parts.join(" * "))
            }
        }
    }

    /// Renders the problem so that parsing the output yields a structurally
    /// identical problem.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, (name, decl)) in self.declarations.iter().enumerate() {
            let line = match decl {
                Declaration::Sort(_) => format!("tff(d{i}, type, {name}: $tType)."),
                Declaration::Parameter(op) => {
                    format!(
                        "tff(d{i}, type, {name}: {}, parameter).",
                        sym::sort_name(sym::op_result_sort(*op))
                    )
                }
                Declaration::Op(op) => {
                    format!("tff(d{i}, type, {name}: {}).", self.render_type(*op, false))
                }
                Declaration::Predicate(op) => {
                    format!("tff(d{i}, type, {name}: {}).", self.render_type(*op, true))
                }
            };
            out.push_str(&line);
            out.push('\n');
        }
        for ic in &self.clauses {
            let role = match ic.role {
                Role::Axiom => "axiom",
                Role::Hypothesis => "hypothesis",
                Role::NegatedConjecture => "negated_conjecture",
            };
            out.push_str(&format!(
                "tff({}, {role}, ({})).\n",
                ic.name,
                self.render_clause(&ic.clause)
            ));
        }
        out
    }
}
