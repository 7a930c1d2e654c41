//! Canonical linear forms of background integer terms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::sym::{self, OpId, Variable};
use crate::term::{Term, TermKind};

/// An atom of a linear form: a variable or a parameter (free background
/// constant). `QVar` atoms are solver-internal quantified variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinAtom {
    Var(Variable),
    Param(OpId),
    QVar(u64),
}

/// `sum(coeffs) + constant` with no zero coefficients stored and atoms in a
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinearTerm {
    pub coeffs: BTreeMap<LinAtom, BigInt>,
    pub constant: BigInt,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinearError {
    #[error("nonlinear term: {0}")]
    Nonlinear(String),
    #[error("unsupported operator in background term: {0}")]
    Unsupported(String),
}

impl LinearTerm {
    pub fn constant(c: impl Into<BigInt>) -> LinearTerm {
        LinearTerm {
            coeffs: BTreeMap::new(),
            constant: c.into(),
        }
    }

    pub fn atom(a: LinAtom) -> LinearTerm {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(a, BigInt::from(1));
        LinearTerm {
            coeffs,
            constant: BigInt::zero(),
        }
    }

    pub fn var(v: Variable) -> LinearTerm {
        LinearTerm::atom(LinAtom::Var(v))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a: &LinAtom) -> BigInt {
        self.coeffs.get(a).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, k: &BigInt) -> LinearTerm {
        if k.is_zero() {
            return LinearTerm::constant(0);
        }
        LinearTerm {
            coeffs: self
                .coeffs
                .iter()
                .map(|(a, c)| (a.clone(), c * k))
                .collect(),
            constant: &self.constant * k,
        }
    }

    /// Replaces an atom by a linear term.
    pub fn substitute(&self, a: &LinAtom, by: &LinearTerm) -> LinearTerm {
        let c = self.coeff(a);
        if c.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        out.coeffs.remove(a);
        out + by.scale(&c)
    }

    /// Evaluates under an assignment of atoms to integers; `None` if some
    /// atom is unassigned.
    pub fn eval(&self, env: &dyn Fn(&LinAtom) -> Option<BigInt>) -> Option<BigInt> {
        let mut acc = self.constant.clone();
        for (a, c) in &self.coeffs {
            acc += c * env(a)?;
        }
        Some(acc)
    }
}

impl Add for LinearTerm {
    type Output = LinearTerm;
    fn add(self, rhs: LinearTerm) -> LinearTerm {
        let mut coeffs = self.coeffs;
        for (a, c) in rhs.coeffs {
            let entry = coeffs.entry(a).or_insert_with(BigInt::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LinearTerm {
            coeffs,
            constant: self.constant + rhs.constant,
        }
    }
}

impl Sub for LinearTerm {
    type Output = LinearTerm;
    fn sub(self, rhs: LinearTerm) -> LinearTerm {
        self + rhs.neg()
    }
}

impl Neg for LinearTerm {
    type Output = LinearTerm;
    fn neg(self) -> LinearTerm {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul<BigInt> for LinearTerm {
    type Output = LinearTerm;
    fn mul(self, rhs: BigInt) -> LinearTerm {
        self.scale(&rhs)
    }
}

impl fmt::Display for LinearTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match a {
                LinAtom::Var(v) => write!(f, "{c}*X{}", v.id)?,
                LinAtom::Param(op) => write!(f, "{c}*{}", sym::op_name(*op))?,
                LinAtom::QVar(i) => write!(f, "{c}*q{i}")?,
            }
        }
        if first || !self.constant.is_zero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}", self.constant)?;
        }
        Ok(())
    }
}

/// Canonical linear form of a proper background integer term built from
/// domain elements, parameters, variables, sum, difference, unary minus and
/// multiplication with at least one integer-literal factor.
pub fn linearize(t: &Term) -> Result<LinearTerm, LinearError> {
    let b = sym::builtins();
    match t.kind() {
        TermKind::Var(v) => Ok(LinearTerm::var(*v)),
        TermKind::App(op, args) => {
            if let Some(v) = sym::op_domain_value(*op) {
                return Ok(LinearTerm::constant(v));
            }
            if sym::op_is_parameter(*op) {
                return Ok(LinearTerm::atom(LinAtom::Param(*op)));
            }
            if *op == b.plus {
                Ok(linearize(&args[0])? + linearize(&args[1])?)
            } else if *op == b.minus {
                Ok(linearize(&args[0])? - linearize(&args[1])?)
            } else if *op == b.uminus {
                Ok(-linearize(&args[0])?)
            } else if *op == b.times {
                let l = linearize(&args[0])?;
                let r = linearize(&args[1])?;
                if l.is_constant() {
                    Ok(r.scale(&l.constant))
                } else if r.is_constant() {
                    Ok(l.scale(&r.constant))
                } else {
                    Err(LinearError::Nonlinear(t.to_string()))
                }
            } else {
                Err(LinearError::Unsupported(t.to_string()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym::{builtins, new_parameter, VarKind};

    #[test]
    fn collects_coefficients() {
        // 5 * alpha + 1 - alpha * 3 has linear form 2 * alpha + 1.
        let b = builtins();
        let alpha_op = new_parameter("li_alpha", b.int);
        let alpha = Term::app(alpha_op, vec![]);
        let t = Term::app(
            b.minus,
            vec![
                Term::app(
                    b.plus,
                    vec![
                        Term::app(b.times, vec![Term::int(5), alpha.clone()]),
                        Term::int(1),
                    ],
                ),
                Term::app(b.times, vec![alpha.clone(), Term::int(3)]),
            ],
        );
        let lin = linearize(&t).unwrap();
        assert_eq!(lin.constant, BigInt::from(1));
        assert_eq!(lin.coeff(&LinAtom::Param(alpha_op)), BigInt::from(2));
        assert_eq!(lin.coeffs.len(), 1);

        assert_eq!(linearize(&Term::int(0)).unwrap(), LinearTerm::constant(0));

        // A product of two non-constant factors is rejected.
        let beta = Term::app(new_parameter("li_beta", b.int), vec![]);
        let bad = Term::app(b.times, vec![alpha, beta]);
        assert!(matches!(linearize(&bad), Err(LinearError::Nonlinear(_))));
    }

    #[test]
    fn evaluation_matches_term_semantics() {
        let b = builtins();
        let x = Variable::fresh(b.int, VarKind::Ordinary);
        // 2*x - 7 at x = 5 is 3.
        let t = Term::app(
            b.minus,
            vec![
                Term::app(b.times, vec![Term::int(2), Term::var(x)]),
                Term::int(7),
            ],
        );
        let lin = linearize(&t).unwrap();
        let v = lin
            .eval(&|a| match a {
                LinAtom::Var(w) if *w == x => Some(BigInt::from(5)),
                _ => None,
            })
            .unwrap();
        assert_eq!(v, BigInt::from(3));
    }
}
