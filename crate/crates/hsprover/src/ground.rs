//! Bounded enumeration of simple ground instances.
//!
//! This is a brute-force oracle used by tests and diagnostics: it maps each
//! variable of a clause to ground pool terms of the matching sort, offering
//! only pure background terms to abstraction variables.

use thiserror::Error;

use crate::clause::Clause;
use crate::subst::Substitution;
use crate::sym::VarKind;
use crate::term::{Term, TermClass};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroundError {
    #[error("uninhabited sort pool")]
    UninhabitedSortPool,
}

/// All ground instances of `c` obtained by mapping each variable to a pool
/// term of its sort (of depth at most `depth`); abstraction variables only
/// take pure background pool terms.
pub fn bounded_simple_ground_instances(
    c: &Clause,
    depth: u32,
    pool: &[Term],
) -> Result<Vec<Clause>, GroundError> {
    let vars: Vec<_> = c.vars().into_iter().collect();
    let mut candidates: Vec<Vec<Term>> = Vec::with_capacity(vars.len());
    for v in &vars {
        let cands: Vec<Term> = pool
            .iter()
            .filter(|t| {
                t.is_ground()
                    && t.sort() == v.sort
                    && t.depth() <= depth
                    && (v.kind != VarKind::Abstraction || t.class() == TermClass::PureBg)
            })
            .cloned()
            .collect();
        if cands.is_empty() {
            return Err(GroundError::UninhabitedSortPool);
        }
        candidates.push(cands);
    }
    let mut out = Vec::new();
    let mut picks = vec![0usize; vars.len()];
    loop {
        let mut sigma = Substitution::new();
        for (i, v) in vars.iter().enumerate() {
            sigma.bind(*v, candidates[i][picks[i]].clone());
        }
        let inst = sigma.apply_clause(c);
        if !out.contains(&inst) {
            out.push(inst);
        }
        // Advance the odometer.
        let mut i = 0;
        loop {
            if i == vars.len() {
                return Ok(out);
            }
            picks[i] += 1;
            if picks[i] < candidates[i].len() {
                break;
            }
            picks[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clause::Literal;
    use crate::sym::{builtins, new_op, Level, Signature, Variable};

    #[test]
    fn enumerates_pool_instances() {
        let b = builtins();
        let mut sig = Signature::new();
        let (p, true_p) = sig
            .declare_predicate("gr_p", vec![b.int], Level::Foreground)
            .unwrap();
        let tp = Term::app(true_p, vec![]);
        let x = Variable::fresh(b.int, VarKind::Ordinary);
        let c = Clause::new(vec![Literal::eq(Term::app(p, vec![Term::var(x)]), tp.clone())]);
        let pool = vec![Term::int(0), Term::int(1)];
        let insts = bounded_simple_ground_instances(&c, 3, &pool).unwrap();
        assert_eq!(insts.len(), 2);

        // A ground clause is its own only instance.
        let g = Clause::new(vec![Literal::eq(Term::app(p, vec![Term::int(0)]), tp.clone())]);
        assert_eq!(
            bounded_simple_ground_instances(&g, 3, &pool).unwrap(),
            vec![g.clone()]
        );

        // Abstraction variables skip foreground pool terms.
        let f = new_op("gr_f", vec![b.int], b.int, Level::Foreground);
        let cap_x = Variable::fresh(b.int, VarKind::Abstraction);
        let c = Clause::new(vec![Literal::eq(
            Term::app(p, vec![Term::var(cap_x)]),
            tp,
        )]);
        let pool = vec![Term::int(0), Term::app(f, vec![Term::int(0)])];
        let insts = bounded_simple_ground_instances(&c, 3, &pool).unwrap();
        assert_eq!(insts.len(), 1);

        // Empty candidate set is an error.
        let empty: Vec<Term> = vec![];
        assert_eq!(
            bounded_simple_ground_instances(&c, 3, &empty),
            Err(GroundError::UninhabitedSortPool)
        );
    }
}
