//! A hierarchic superposition prover for many-sorted first-order clause
//! logic modulo linear integer arithmetic.
//!
//! The library is organized in layers:
//! - [`sym`], [`term`], [`clause`], [`subst`], [`unify`]: the sorted kernel
//!   with two kinds of background variables and simple unification;
//! - [`ordering`]: the hierarchic reduction ordering (an LPO) and the
//!   size-based ordering that bounds simplification;
//! - [`abstraction`]: weak abstraction, unabstraction, cleanliness;
//! - [`calculus`], [`simplify`]: the inference rules, the definition rule
//!   and the simplification suite;
//! - [`bg`]: the background solver (linear forms, quantifier elimination,
//!   the shifted-order clause-set transformation);
//! - [`engine`]: the given-clause saturation loop with proof recording;
//! - [`frontend`]: typed clausal input, CLI driver and SZS output.

pub mod abstraction;
pub mod bg;
pub mod calculus;
pub mod clause;
pub mod engine;
pub mod frontend;
pub mod ground;
pub mod ordering;
pub mod simplify;
pub mod subst;
pub mod sym;
pub mod term;
pub mod unify;

pub use clause::{Clause, Literal};
pub use subst::Substitution;
pub use sym::{Level, OpId, Signature, SortId, VarKind, Variable};
pub use term::{Term, TermClass};
