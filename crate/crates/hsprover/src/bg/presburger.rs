//! Quantified linear integer arithmetic, decided by quantifier elimination.
//!
//! The formula language has equations, disequations, strict bounds and
//! divisibility atoms over linear terms, boolean connectives and integer
//! quantifiers. Quantifiers are eliminated innermost-first in the classic
//! way: coefficients of the bound variable are unified via the lcm, the
//! variable is test-substituted with boundary terms shifted by 1..delta, and
//! a "minus infinity" (or "plus infinity") residue handles the unbounded
//! direction. Divisibility atoms only ever appear solver-internally.
//!
//! All arithmetic is arbitrary precision: the lcm step can blow up
//! coefficients quickly.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linear::{LinAtom, LinearTerm};

/// Solver-side quantified variable.
pub type QVar = u64;

static QVAR_COUNTER: AtomicU64 = AtomicU64::new(1_000_000);

pub fn fresh_qvar() -> QVar {
    QVAR_COUNTER.fetch_add(1, Ordering::Relaxed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PFormula {
    True,
    False,
    /// `lt < 0`
    Lt(LinearTerm),
    /// `lt = 0`
    Eq(LinearTerm),
    /// `lt != 0`
    Ne(LinearTerm),
    /// `d | lt`
    Dvd(BigInt, LinearTerm),
    /// `not (d | lt)`
    Ndvd(BigInt, LinearTerm),
    And(Vec<PFormula>),
    Or(Vec<PFormula>),
    Not(Box<PFormula>),
    Exists(QVar, Box<PFormula>),
    Forall(QVar, Box<PFormula>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxVerdict {
    TrueOnBox,
    FalseOnBox,
}

impl PFormula {
    pub fn and(fs: Vec<PFormula>) -> PFormula {
        PFormula::And(fs)
    }

    pub fn or(fs: Vec<PFormula>) -> PFormula {
        PFormula::Or(fs)
    }

    pub fn not(f: PFormula) -> PFormula {
        PFormula::Not(Box::new(f))
    }

    pub fn exists(x: QVar, f: PFormula) -> PFormula {
        PFormula::Exists(x, Box::new(f))
    }

    pub fn forall(x: QVar, f: PFormula) -> PFormula {
        PFormula::Forall(x, Box::new(f))
    }

    /// `a < b`
    pub fn lt(a: LinearTerm, b: LinearTerm) -> PFormula {
        PFormula::Lt(a - b)
    }

    /// `a <= b`, expressed strictly over the integers.
    pub fn le(a: LinearTerm, b: LinearTerm) -> PFormula {
        PFormula::Lt(a - b - LinearTerm::constant(1))
    }

    pub fn eq(a: LinearTerm, b: LinearTerm) -> PFormula {
        PFormula::Eq(a - b)
    }

    pub fn ne(a: LinearTerm, b: LinearTerm) -> PFormula {
        PFormula::Ne(a - b)
    }

    pub fn iff(a: PFormula, b: PFormula) -> PFormula {
        PFormula::or(vec![
            PFormula::and(vec![a.clone(), b.clone()]),
            PFormula::and(vec![PFormula::not(a), PFormula::not(b)]),
        ])
    }

    fn mentions(&self, x: QVar) -> bool {
        match self {
            PFormula::True | PFormula::False => false,
            PFormula::Lt(lt) | PFormula::Eq(lt) | PFormula::Ne(lt) => {
                !lt.coeff(&LinAtom::QVar(x)).is_zero()
            }
            PFormula::Dvd(_, lt) | PFormula::Ndvd(_, lt) => {
                !lt.coeff(&LinAtom::QVar(x)).is_zero()
            }
            PFormula::And(fs) | PFormula::Or(fs) => fs.iter().any(|f| f.mentions(x)),
            PFormula::Not(f) => f.mentions(x),
            PFormula::Exists(_, f) | PFormula::Forall(_, f) => f.mentions(x),
        }
    }

    pub fn free_params(&self) -> Vec<crate::sym::OpId> {
        let mut out = Vec::new();
        fn collect_lt(lt: &LinearTerm, out: &mut Vec<crate::sym::OpId>) {
            for a in lt.coeffs.keys() {
                if let LinAtom::Param(op) = a {
                    if !out.contains(op) {
                        out.push(*op);
                    }
                }
            }
        }
        match self {
            PFormula::True | PFormula::False => {}
            PFormula::Lt(lt) | PFormula::Eq(lt) | PFormula::Ne(lt) => collect_lt(lt, &mut out),
            PFormula::Dvd(_, lt) | PFormula::Ndvd(_, lt) => collect_lt(lt, &mut out),
            PFormula::And(fs) | PFormula::Or(fs) => {
                for f in fs {
                    for p in f.free_params() {
                        if !out.contains(&p) {
                            out.push(p);
                        }
                    }
                }
            }
            PFormula::Not(f) | PFormula::Exists(_, f) | PFormula::Forall(_, f) => {
                for p in f.free_params() {
                    if !out.contains(&p) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    fn map_atoms(&self, f: &dyn Fn(&LinearTerm) -> LinearTerm) -> PFormula {
        match self {
            PFormula::True | PFormula::False => self.clone(),
            PFormula::Lt(lt) => PFormula::Lt(f(lt)),
            PFormula::Eq(lt) => PFormula::Eq(f(lt)),
            PFormula::Ne(lt) => PFormula::Ne(f(lt)),
            PFormula::Dvd(d, lt) => PFormula::Dvd(d.clone(), f(lt)),
            PFormula::Ndvd(d, lt) => PFormula::Ndvd(d.clone(), f(lt)),
            PFormula::And(fs) => PFormula::And(fs.iter().map(|g| g.map_atoms(f)).collect()),
            PFormula::Or(fs) => PFormula::Or(fs.iter().map(|g| g.map_atoms(f)).collect()),
            PFormula::Not(g) => PFormula::not(g.map_atoms(f)),
            PFormula::Exists(x, g) => PFormula::exists(*x, g.map_atoms(f)),
            PFormula::Forall(x, g) => PFormula::forall(*x, g.map_atoms(f)),
        }
    }

    /// Replaces a free parameter by a solver variable.
    pub fn param_to_qvar(&self, param: crate::sym::OpId, x: QVar) -> PFormula {
        self.map_atoms(&move |lt| {
            lt.substitute(&LinAtom::Param(param), &LinearTerm::atom(LinAtom::QVar(x)))
        })
    }

    /// Replaces a term variable by a solver variable.
    pub fn var_to_qvar(&self, v: crate::sym::Variable, x: QVar) -> PFormula {
        self.map_atoms(&move |lt| {
            lt.substitute(&LinAtom::Var(v), &LinearTerm::atom(LinAtom::QVar(x)))
        })
    }
}

/// Negation normal form with negations folded into the atoms. Expects a
/// quantifier-free formula.
fn nnf(f: &PFormula, positive: bool) -> PFormula {
    match f {
        PFormula::True => {
            if positive {
                PFormula::True
            } else {
                PFormula::False
            }
        }
        PFormula::False => {
            if positive {
                PFormula::False
            } else {
                PFormula::True
            }
        }
        PFormula::Lt(lt) => {
            if positive {
                PFormula::Lt(lt.clone())
            } else {
                // not (lt < 0)  <=>  -lt - 1 < 0
                PFormula::Lt(-(lt.clone()) - LinearTerm::constant(1))
            }
        }
        PFormula::Eq(lt) => {
            if positive {
                PFormula::Eq(lt.clone())
            } else {
                PFormula::Ne(lt.clone())
            }
        }
        PFormula::Ne(lt) => {
            if positive {
                PFormula::Ne(lt.clone())
            } else {
                PFormula::Eq(lt.clone())
            }
        }
        PFormula::Dvd(d, lt) => {
            if positive {
                PFormula::Dvd(d.clone(), lt.clone())
            } else {
                PFormula::Ndvd(d.clone(), lt.clone())
            }
        }
        PFormula::Ndvd(d, lt) => {
            if positive {
                PFormula::Ndvd(d.clone(), lt.clone())
            } else {
                PFormula::Dvd(d.clone(), lt.clone())
            }
        }
        PFormula::And(fs) => {
            let mapped: Vec<PFormula> = fs.iter().map(|g| nnf(g, positive)).collect();
            if positive {
                PFormula::And(mapped)
            } else {
                PFormula::Or(mapped)
            }
        }
        PFormula::Or(fs) => {
            let mapped: Vec<PFormula> = fs.iter().map(|g| nnf(g, positive)).collect();
            if positive {
                PFormula::Or(mapped)
            } else {
                PFormula::And(mapped)
            }
        }
        PFormula::Not(g) => nnf(g, !positive),
        PFormula::Exists(..) | PFormula::Forall(..) => {
            unreachable!("nnf is applied after quantifier elimination")
        }
    }
}

/// Structural simplification with constant folding.
fn simplify(f: &PFormula) -> PFormula {
    match f {
        PFormula::Lt(lt) if lt.is_constant() => {
            if lt.constant.is_negative() {
                PFormula::True
            } else {
                PFormula::False
            }
        }
        PFormula::Eq(lt) if lt.is_constant() => {
            if lt.constant.is_zero() {
                PFormula::True
            } else {
                PFormula::False
            }
        }
        PFormula::Ne(lt) if lt.is_constant() => {
            if lt.constant.is_zero() {
                PFormula::False
            } else {
                PFormula::True
            }
        }
        PFormula::Dvd(d, lt) => {
            if d.is_one() || d.abs().is_one() {
                PFormula::True
            } else if lt.is_constant() {
                if lt.constant.mod_floor(d).is_zero() {
                    PFormula::True
                } else {
                    PFormula::False
                }
            } else {
                f.clone()
            }
        }
        PFormula::Ndvd(d, lt) => match simplify(&PFormula::Dvd(d.clone(), lt.clone())) {
            PFormula::True => PFormula::False,
            PFormula::False => PFormula::True,
            _ => f.clone(),
        },
        PFormula::And(fs) => {
            let mut out: Vec<PFormula> = Vec::new();
            for g in fs {
                match simplify(g) {
                    PFormula::True => {}
                    PFormula::False => return PFormula::False,
                    PFormula::And(mut inner) => out.append(&mut inner),
                    other => {
                        if !out.contains(&other) {
                            out.push(other);
                        }
                    }
                }
            }
            match out.len() {
                0 => PFormula::True,
                1 => out.pop().unwrap(),
                _ => PFormula::And(out),
            }
        }
        PFormula::Or(fs) => {
            let mut out: Vec<PFormula> = Vec::new();
            for g in fs {
                match simplify(g) {
                    PFormula::False => {}
                    PFormula::True => return PFormula::True,
                    PFormula::Or(mut inner) => out.append(&mut inner),
                    other => {
                        if !out.contains(&other) {
                            out.push(other);
                        }
                    }
                }
            }
            match out.len() {
                0 => PFormula::False,
                1 => out.pop().unwrap(),
                _ => PFormula::Or(out),
            }
        }
        PFormula::Not(g) => match simplify(g) {
            PFormula::True => PFormula::False,
            PFormula::False => PFormula::True,
            other => PFormula::not(other),
        },
        _ => f.clone(),
    }
}

/// Quantifier elimination entry point. Innermost quantifiers are eliminated
/// first; universal quantifiers by dualization.
pub fn cooper_qe(f: &PFormula) -> PFormula {
    let out = match f {
        PFormula::Exists(x, g) => {
            let inner = cooper_qe(g);
            eliminate_exists(*x, &nnf(&inner, true))
        }
        PFormula::Forall(x, g) => {
            let inner = cooper_qe(g);
            let neg_inner = nnf(&inner, false);
            PFormula::not(eliminate_exists(*x, &neg_inner))
        }
        PFormula::And(fs) => PFormula::And(fs.iter().map(cooper_qe).collect()),
        PFormula::Or(fs) => PFormula::Or(fs.iter().map(cooper_qe).collect()),
        PFormula::Not(g) => PFormula::not(cooper_qe(g)),
        other => other.clone(),
    };
    simplify(&out)
}

/// Bounds contributed by atoms mentioning the eliminated variable.
enum BoundKind {
    Lower(LinearTerm),
    Upper(LinearTerm),
    Both(LinearTerm, LinearTerm),
    None,
}

fn eliminate_exists(x: QVar, phi: &PFormula) -> PFormula {
    let phi = simplify(phi);
    if !phi.mentions(x) {
        return phi;
    }
    let key = LinAtom::QVar(x);

    // Unify the coefficients of x to +-1 (conceptually substituting
    // y = lambda * x and remembering lambda | y).
    let mut lambda = BigInt::one();
    collect_lcm(&phi, &key, &mut lambda);
    let phi = scale_atoms(&phi, &key, &lambda);
    let phi = if lambda.is_one() {
        phi
    } else {
        PFormula::And(vec![
            phi,
            PFormula::Dvd(lambda.clone(), LinearTerm::atom(key.clone())),
        ])
    };

    // Divisor lcm and boundary sets.
    let mut delta = BigInt::one();
    collect_divisor_lcm(&phi, &key, &mut delta);
    let mut lower: Vec<LinearTerm> = Vec::new();
    let mut upper: Vec<LinearTerm> = Vec::new();
    collect_bounds(&phi, &key, &mut lower, &mut upper);

    let use_lower = lower.len() <= upper.len();
    let mut disjuncts: Vec<PFormula> = Vec::new();
    let mut j = BigInt::one();
    while j <= delta {
        let jt = LinearTerm::constant(j.clone());
        // The unbounded residue.
        disjuncts.push(infinity_version(&phi, &key, use_lower, &jt));
        let boundaries = if use_lower { &lower } else { &upper };
        for b in boundaries {
            let val = if use_lower {
                b.clone() + jt.clone()
            } else {
                b.clone() - jt.clone()
            };
            disjuncts.push(substitute_var(&phi, &key, &val));
        }
        j += 1;
    }
    simplify(&PFormula::Or(disjuncts))
}

fn collect_lcm(f: &PFormula, key: &LinAtom, acc: &mut BigInt) {
    match f {
        PFormula::Lt(lt) | PFormula::Eq(lt) | PFormula::Ne(lt) => {
            let c = lt.coeff(key);
            if !c.is_zero() {
                *acc = acc.lcm(&c.abs());
            }
        }
        PFormula::Dvd(_, lt) | PFormula::Ndvd(_, lt) => {
            let c = lt.coeff(key);
            if !c.is_zero() {
                *acc = acc.lcm(&c.abs());
            }
        }
        PFormula::And(fs) | PFormula::Or(fs) => {
            for g in fs {
                collect_lcm(g, key, acc);
            }
        }
        _ => {}
    }
}

/// Scales every atom mentioning the variable so its coefficient becomes +-1.
fn scale_atoms(f: &PFormula, key: &LinAtom, lambda: &BigInt) -> PFormula {
    let rescale = |lt: &LinearTerm| -> Option<(LinearTerm, BigInt)> {
        let c = lt.coeff(key);
        if c.is_zero() {
            return None;
        }
        let m = lambda / c.abs();
        let mut scaled = lt.scale(&m);
        // Set the x coefficient to sign(c).
        let sign = if c.is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::one()
        };
        let current = scaled.coeff(key);
        scaled = scaled.substitute(key, &LinearTerm::constant(0));
        scaled.coeffs.insert(key.clone(), sign);
        debug_assert_eq!(current.abs(), lambda.clone());
        Some((scaled, m))
    };
    match f {
        PFormula::Lt(lt) => match rescale(lt) {
            Some((s, _)) => PFormula::Lt(s),
            None => f.clone(),
        },
        PFormula::Eq(lt) => match rescale(lt) {
            Some((s, _)) => PFormula::Eq(s),
            None => f.clone(),
        },
        PFormula::Ne(lt) => match rescale(lt) {
            Some((s, _)) => PFormula::Ne(s),
            None => f.clone(),
        },
        PFormula::Dvd(d, lt) => match rescale(lt) {
            Some((s, m)) => PFormula::Dvd(d * m, s),
            None => f.clone(),
        },
        PFormula::Ndvd(d, lt) => match rescale(lt) {
            Some((s, m)) => PFormula::Ndvd(d * m, s),
            None => f.clone(),
        },
        PFormula::And(fs) => {
            PFormula::And(fs.iter().map(|g| scale_atoms(g, key, lambda)).collect())
        }
        PFormula::Or(fs) => {
            PFormula::Or(fs.iter().map(|g| scale_atoms(g, key, lambda)).collect())
        }
        other => other.clone(),
    }
}

fn collect_divisor_lcm(f: &PFormula, key: &LinAtom, acc: &mut BigInt) {
    match f {
        PFormula::Dvd(d, lt) | PFormula::Ndvd(d, lt) => {
            if !lt.coeff(key).is_zero() {
                *acc = acc.lcm(d);
            }
        }
        PFormula::And(fs) | PFormula::Or(fs) => {
            for g in fs {
                collect_divisor_lcm(g, key, acc);
            }
        }
        _ => {}
    }
}

fn bound_of(f: &PFormula, key: &LinAtom) -> BoundKind {
    let residue = |lt: &LinearTerm| lt.substitute(key, &LinearTerm::constant(0));
    match f {
        PFormula::Lt(lt) => {
            let c = lt.coeff(key);
            if c.is_one() {
                // x + r < 0: upper bound -r.
                BoundKind::Upper(-residue(lt))
            } else if (-c.clone()).is_one() {
                // -x + r < 0: lower bound r.
                BoundKind::Lower(residue(lt))
            } else {
                BoundKind::None
            }
        }
        PFormula::Eq(lt) => {
            let c = lt.coeff(key);
            if c.abs().is_one() {
                // x = -sign(c) * r.
                let target = residue(lt).scale(&-c);
                BoundKind::Both(
                    target.clone() - LinearTerm::constant(1),
                    target + LinearTerm::constant(1),
                )
            } else {
                BoundKind::None
            }
        }
        PFormula::Ne(lt) => {
            let c = lt.coeff(key);
            if c.abs().is_one() {
                let target = residue(lt).scale(&-c);
                BoundKind::Both(target.clone(), target)
            } else {
                BoundKind::None
            }
        }
        _ => BoundKind::None,
    }
}

fn collect_bounds(
    f: &PFormula,
    key: &LinAtom,
    lower: &mut Vec<LinearTerm>,
    upper: &mut Vec<LinearTerm>,
) {
    match f {
        PFormula::And(fs) | PFormula::Or(fs) => {
            for g in fs {
                collect_bounds(g, key, lower, upper);
            }
        }
        _ => match bound_of(f, key) {
            BoundKind::Lower(b) => {
                if !lower.contains(&b) {
                    lower.push(b);
                }
            }
            BoundKind::Upper(a) => {
                if !upper.contains(&a) {
                    upper.push(a);
                }
            }
            BoundKind::Both(b, a) => {
                if !lower.contains(&b) {
                    lower.push(b);
                }
                if !upper.contains(&a) {
                    upper.push(a);
                }
            }
            BoundKind::None => {}
        },
    }
}

/// The residue formula for the unbounded direction: bound atoms collapse to
/// truth values, divisibility atoms keep the shift `x := +-j`.
fn infinity_version(f: &PFormula, key: &LinAtom, minus: bool, j: &LinearTerm) -> PFormula {
    match f {
        PFormula::Lt(lt) => {
            let c = lt.coeff(key);
            if c.is_zero() {
                f.clone()
            } else if c.is_positive() == minus {
                // minus infinity satisfies x + r < 0, plus infinity -x + r < 0.
                PFormula::True
            } else {
                PFormula::False
            }
        }
        PFormula::Eq(lt) => {
            if lt.coeff(key).is_zero() {
                f.clone()
            } else {
                PFormula::False
            }
        }
        PFormula::Ne(lt) => {
            if lt.coeff(key).is_zero() {
                f.clone()
            } else {
                PFormula::True
            }
        }
        PFormula::Dvd(..) | PFormula::Ndvd(..) => {
            let shift = if minus { j.clone() } else { -(j.clone()) };
            substitute_var(f, key, &shift)
        }
        PFormula::And(fs) => PFormula::And(
            fs.iter()
                .map(|g| infinity_version(g, key, minus, j))
                .collect(),
        ),
        PFormula::Or(fs) => PFormula::Or(
            fs.iter()
                .map(|g| infinity_version(g, key, minus, j))
                .collect(),
        ),
        other => other.clone(),
    }
}

fn substitute_var(f: &PFormula, key: &LinAtom, val: &LinearTerm) -> PFormula {
    f.map_atoms(&move |lt| lt.substitute(key, val))
}

/// Truth of a closed formula whose prefix quantifies parameters
/// existentially and term variables universally. Free parameters are
/// existentially closed before elimination.
pub fn decide(f: &PFormula) -> Verdict {
    let mut closed = f.clone();
    for p in f.free_params() {
        let q = fresh_qvar();
        closed = PFormula::exists(q, closed.param_to_qvar(p, q));
    }
    let result = simplify(&cooper_qe(&closed));
    match result {
        PFormula::True => Verdict::Valid,
        PFormula::False => Verdict::Invalid,
        other => unreachable!("quantifier elimination left residue: {other:?}"),
    }
}

/// Brute-force truth with every quantifier restricted to `[-bound, bound]`.
/// A test oracle; the formula must be closed and parameter-free.
pub fn brute_force(f: &PFormula, bound: i64) -> BoxVerdict {
    fn eval(f: &PFormula, bound: i64, env: &mut BTreeMap<QVar, BigInt>) -> bool {
        match f {
            PFormula::True => true,
            PFormula::False => false,
            PFormula::Lt(lt) => value(lt, env).is_negative(),
            PFormula::Eq(lt) => value(lt, env).is_zero(),
            PFormula::Ne(lt) => !value(lt, env).is_zero(),
            PFormula::Dvd(d, lt) => value(lt, env).mod_floor(d).is_zero(),
            PFormula::Ndvd(d, lt) => !value(lt, env).mod_floor(d).is_zero(),
            PFormula::And(fs) => fs.iter().all(|g| eval(g, bound, env)),
            PFormula::Or(fs) => fs.iter().any(|g| eval(g, bound, env)),
            PFormula::Not(g) => !eval(g, bound, env),
            PFormula::Exists(x, g) => (-bound..=bound).any(|v| {
                env.insert(*x, BigInt::from(v));
                let r = eval(g, bound, env);
                env.remove(x);
                r
            }),
            PFormula::Forall(x, g) => (-bound..=bound).all(|v| {
                env.insert(*x, BigInt::from(v));
                let r = eval(g, bound, env);
                env.remove(x);
                r
            }),
        }
    }
    fn value(lt: &LinearTerm, env: &BTreeMap<QVar, BigInt>) -> BigInt {
        lt.eval(&|a| match a {
            LinAtom::QVar(q) => env.get(q).cloned(),
            _ => panic!("brute force requires a closed, parameter-free formula"),
        })
        .expect("unbound variable in brute force evaluation")
    }
    if eval(f, bound, &mut BTreeMap::new()) {
        BoxVerdict::TrueOnBox
    } else {
        BoxVerdict::FalseOnBox
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qv(x: QVar) -> LinearTerm {
        LinearTerm::atom(LinAtom::QVar(x))
    }

    fn k(c: i64) -> LinearTerm {
        LinearTerm::constant(c)
    }

    #[test]
    fn witness_in_gap() {
        // exists x (x > a and x < a + 2) is valid: witness a + 1.
        let a = 1;
        let x = 2;
        let f = PFormula::forall(
            a,
            PFormula::exists(
                x,
                PFormula::and(vec![
                    PFormula::lt(qv(a), qv(x)),
                    PFormula::lt(qv(x), qv(a) + k(2)),
                ]),
            ),
        );
        assert_eq!(decide(&f), Verdict::Valid);
    }

    #[test]
    fn empty_interval() {
        // exists x (x >= 0 and x <= -1) is invalid.
        let x = 1;
        let f = PFormula::exists(
            x,
            PFormula::and(vec![
                PFormula::le(k(0), qv(x)),
                PFormula::le(qv(x), k(-1)),
            ]),
        );
        assert_eq!(decide(&f), Verdict::Invalid);
    }

    #[test]
    fn integer_discreteness() {
        // forall x (x > a -> x >= a + 1).
        let a = 1;
        let x = 2;
        let f = PFormula::forall(
            a,
            PFormula::forall(
                x,
                PFormula::or(vec![
                    PFormula::not(PFormula::lt(qv(a), qv(x))),
                    PFormula::le(qv(a) + k(1), qv(x)),
                ]),
            ),
        );
        assert_eq!(decide(&f), Verdict::Valid);
    }

    #[test]
    fn divisibility_via_coefficients() {
        // exists x (2x = a) decides parity of a; under forall a it fails.
        let a = 1;
        let x = 2;
        let f = PFormula::forall(
            a,
            PFormula::exists(x, PFormula::eq(qv(x).scale(&BigInt::from(2)), qv(a))),
        );
        assert_eq!(decide(&f), Verdict::Invalid);
        // But every even number has a half.
        let f = PFormula::forall(
            a,
            PFormula::exists(x, PFormula::eq(qv(x).scale(&BigInt::from(2)), qv(a) + qv(a))),
        );
        assert_eq!(decide(&f), Verdict::Valid);
    }

    #[test]
    fn brute_force_oracle() {
        let x = 1;
        // forall x (x >= -bound) holds on any box.
        let f = PFormula::forall(x, PFormula::le(k(-8), qv(x)));
        assert_eq!(brute_force(&f, 8), BoxVerdict::TrueOnBox);
        // exists x (x > bound) fails on the box.
        let f = PFormula::exists(x, PFormula::lt(k(8), qv(x)));
        assert_eq!(brute_force(&f, 8), BoxVerdict::FalseOnBox);
    }

    #[test]
    fn agreement_with_brute_force_on_witnesses() {
        // If a witness exists in the box, decide must agree.
        let x = 1;
        let y = 2;
        let f = PFormula::exists(
            x,
            PFormula::exists(
                y,
                PFormula::and(vec![
                    PFormula::eq(qv(x) + qv(y), k(7)),
                    PFormula::lt(qv(x), qv(y)),
                ]),
            ),
        );
        assert_eq!(brute_force(&f, 8), BoxVerdict::TrueOnBox);
        assert_eq!(decide(&f), Verdict::Valid);
    }
}
