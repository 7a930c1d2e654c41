use hsprover::clause::{Clause, Literal};
use hsprover::engine::*;
use hsprover::sym::{builtins, new_parameter, Level, Signature};
use hsprover::term::Term;

fn main() {
    let b = builtins();
    let mut sig = Signature::new();
    let alpha = Term::app(new_parameter("en2_alpha", b.int), vec![]);
    let beta = Term::app(new_parameter("en2_beta", b.int), vec![]);
    let c_const = Term::app(sig.declare_op("en2_c", vec![], b.int, Level::Foreground).unwrap(), vec![]);
    let mk = |name: &str, clause: Clause| InputClause { name: name.into(), role: Role::Axiom, clause };
    let clauses = vec![
        mk("c1", Clause::new(vec![Literal::eq(Term::app(b.plus, vec![alpha.clone(), beta.clone()]), alpha.clone())])),
        mk("c2", Clause::new(vec![Literal::neq(c_const.clone(), beta.clone()), Literal::neq(c_const.clone(), Term::int(0))])),
        mk("c3", Clause::new(vec![Literal::eq(c_const.clone(), beta.clone()), Literal::eq(c_const.clone(), Term::int(0))])),
    ];
    let result = prove(clauses, EngineConfig::default());
    println!("{:?}", result.outcome);
    if let Some(p) = explain(&result) { println!("{p}"); }
}
