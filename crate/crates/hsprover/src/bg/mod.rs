//! Background reasoning for linear integer arithmetic.

pub mod close;
pub mod linear;
pub mod lk;
pub mod presburger;

pub use linear::{linearize, LinAtom, LinearTerm};
pub use presburger::{brute_force, cooper_qe, decide, BoxVerdict, PFormula, Verdict};
