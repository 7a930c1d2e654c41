//! Translation of background clauses into solver formulas.
//!
//! A background clause set is satisfiable iff some choice of parameter
//! values makes every clause true for all integer instantiations of its
//! variables: parameters are existential, clause variables universal. Both
//! kinds of term variables (abstraction and ordinary) range over all
//! integers here, since pure simple ground instances reach every integer in
//! a term-generated background model.

use thiserror::Error;

use crate::clause::{Clause, Literal};
use crate::sym::{self};
use crate::term::{Term, TermClass};

use super::linear::{linearize, LinearError};
use super::presburger::{fresh_qvar, PFormula};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CloseError {
    #[error("clause {0} is not a background clause")]
    NonBgClause(usize),
    #[error("unsupported background literal: {0}")]
    UnsupportedLiteral(String),
    #[error("{0}")]
    Linear(#[from] LinearError),
}

/// Truth-value encoding of an atom-sorted side: the comparison atoms map to
/// their arithmetic meaning, the distinguished constants to truth.
fn atom_side_formula(t: &Term) -> Result<PFormula, CloseError> {
    let b = sym::builtins();
    match t.top_op() {
        Some(op) if op == b.less => {
            let a = linearize(&t.args()[0])?;
            let c = linearize(&t.args()[1])?;
            Ok(PFormula::lt(a, c))
        }
        Some(op) if op == b.leq => {
            let a = linearize(&t.args()[0])?;
            let c = linearize(&t.args()[1])?;
            Ok(PFormula::le(a, c))
        }
        Some(op) if op == b.true_less || op == b.true_leq => Ok(PFormula::True),
        _ => Err(CloseError::UnsupportedLiteral(t.to_string())),
    }
}

pub fn literal_formula(l: &Literal) -> Result<PFormula, CloseError> {
    let b = sym::builtins();
    if l.lhs.sort() == b.int {
        let a = linearize(&l.lhs)?;
        let c = linearize(&l.rhs)?;
        Ok(if l.positive {
            PFormula::eq(a, c)
        } else {
            PFormula::ne(a, c)
        })
    } else if l.lhs.sort() == b.o_less || l.lhs.sort() == b.o_leq {
        let fa = atom_side_formula(&l.lhs)?;
        let fc = atom_side_formula(&l.rhs)?;
        let iff = PFormula::iff(fa, fc);
        Ok(if l.positive { iff } else { PFormula::not(iff) })
    } else {
        Err(CloseError::UnsupportedLiteral(l.to_string()))
    }
}

/// `forall(vars(clause)) . \/ literals`, with term variables renamed to
/// solver variables.
pub fn clause_formula(c: &Clause) -> Result<PFormula, CloseError> {
    let mut lits = Vec::with_capacity(c.literals.len());
    for l in &c.literals {
        lits.push(literal_formula(l)?);
    }
    let mut f = PFormula::or(lits);
    for v in c.vars() {
        let q = fresh_qvar();
        f = PFormula::forall(q, f.var_to_qvar(v, q));
    }
    Ok(f)
}

/// Conjunction over the clause set; parameters are left free (the decision
/// procedure closes them existentially).
pub fn clause_set_formula(clauses: &[Clause]) -> Result<PFormula, CloseError> {
    let mut fs = Vec::with_capacity(clauses.len());
    for (i, c) in clauses.iter().enumerate() {
        if !c.is_bg() {
            return Err(CloseError::NonBgClause(i));
        }
        fs.push(clause_formula(c)?);
    }
    Ok(PFormula::and(fs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bg::presburger::{decide, Verdict};
    use crate::sym::{builtins, new_parameter, VarKind, Variable};

    #[test]
    fn impure_clauses_quantify_universally() {
        let b = builtins();
        let alpha = Term::app(new_parameter("cl_alpha", b.int), vec![]);
        let x = Variable::fresh(b.int, VarKind::Ordinary);
        // { alpha > 3 } is satisfiable, { x != alpha } is not.
        let gt3 = Clause::new(vec![Literal::eq(
            Term::app(b.less, vec![Term::int(3), alpha.clone()]),
            Term::app(b.true_less, vec![]),
        )]);
        let f = clause_set_formula(&[gt3]).unwrap();
        assert_eq!(decide(&f), Verdict::Valid);

        let all_diff = Clause::new(vec![Literal::neq(Term::var(x), alpha)]);
        let f = clause_set_formula(&[all_diff]).unwrap();
        assert_eq!(decide(&f), Verdict::Invalid);
    }

    #[test]
    fn rejects_foreground_clauses() {
        let b = builtins();
        let f = crate::sym::new_op("cl_f", vec![b.int], b.int, crate::sym::Level::Foreground);
        let c = Clause::new(vec![Literal::eq(
            Term::app(f, vec![Term::int(0)]),
            Term::int(0),
        )]);
        assert_eq!(
            clause_set_formula(&[c]),
            Err(CloseError::NonBgClause(0))
        );
    }
}
