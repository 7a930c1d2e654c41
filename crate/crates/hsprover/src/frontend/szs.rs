//! SZS result reporting.

use std::fmt;

use crate::engine::{Outcome, ProverResult, Resource, Sufficiency};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SzsStatus {
    Theorem,
    Unsatisfiable,
    Satisfiable,
    Unknown,
    Timeout,
    GaveUp,
}

impl fmt::Display for SzsStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SzsStatus::Theorem => "Theorem",
            SzsStatus::Unsatisfiable => "Unsatisfiable",
            SzsStatus::Satisfiable => "Satisfiable",
            SzsStatus::Unknown => "Unknown",
            SzsStatus::Timeout => "Timeout",
            SzsStatus::GaveUp => "GaveUp",
        };
        write!(f, "{s}")
    }
}

impl SzsStatus {
    /// Exit code contract: 0 for a definitive verdict, 1 otherwise.
    pub fn exit_code(self) -> i32 {
        match self {
            SzsStatus::Theorem | SzsStatus::Unsatisfiable | SzsStatus::Satisfiable => 0,
            SzsStatus::Unknown | SzsStatus::Timeout | SzsStatus::GaveUp => 1,
        }
    }

    pub fn is_definitive(self) -> bool {
        self.exit_code() == 0
    }
}

/// Maps a prover result onto an SZS status. A refutation whose empty clause
/// descends from a negated conjecture is a `Theorem`; saturation claims a
/// model only when sufficient completeness is certified or asserted.
pub fn status_of(result: &ProverResult) -> SzsStatus {
    match result.outcome {
        Outcome::Refutation { .. } => {
            if result.refutation_from_conjecture() {
                SzsStatus::Theorem
            } else {
                SzsStatus::Unsatisfiable
            }
        }
        Outcome::Saturated => match result.sufficiency {
            Sufficiency::GbtCertified | Sufficiency::Asserted => SzsStatus::Satisfiable,
            Sufficiency::Unknown => SzsStatus::Unknown,
        },
        Outcome::ResourceOut(Resource::Time) => SzsStatus::Timeout,
        Outcome::ResourceOut(_) => SzsStatus::GaveUp,
    }
}

/// The machine-parseable status line; always the first `%`-prefixed status
/// line of the output.
pub fn status_line(status: SzsStatus, file: &str) -> String {
    format!("% SZS status {status} for {file}")
}

pub const OUTPUT_START: &str = "% SZS output start Refutation";
pub const OUTPUT_END: &str = "% SZS output end Refutation";
