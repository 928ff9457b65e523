//! Y-systems of pairs of Dynkin diagrams and the verification of their
//! periodicity.

mod direct;
mod fold;
mod report;
mod sequence;
mod verify;

pub use direct::{y_system_step, PairData, YSystemState};
pub use fold::verify_folding;
pub use report::{Check, Counterexample, LiftInfo, PeriodicityReport, SystemKind, Verdict};
pub use sequence::{
    mu_boxtimes_sequence, mu_square_sequence, source_signs, MutationBlock, MutationSequence,
};
pub use verify::{
    mutate_y_values, verify_direct_ysystem, verify_periodicity, verify_periodicity_with,
    PatternKind, VerifyOptions,
};
