//! GIT stability: the decision tables for (2,3) curves and cubic
//! threefolds, with Hilbert-Mumford weights, exact LP certificates, Chow
//! forms and the Mumford/Schubert numerics as independent checks.

pub mod chow;
pub mod destabilize;
pub mod lp;
pub mod mumford;
pub mod onepss;
pub mod verdict;

pub use chow::{chow_certificate, chow_form, chow_weight_min, chow_zero_weight, line_meets, normal_form, ChowForm};
pub use destabilize::{destabilize_search, random_frames, zero_weight_witness, Certificate, FrameSearch};
pub use lp::{Lp, LpOutcome, Rel};
pub use onepss::{torus_weight_min, Convention, OnePs};
pub use mumford::{linearization_balance, mumford_rhs, schubert_bound, schubert_survivors, SchubertBound, SchubertDecision};
pub use verdict::{
    allcock_verdict, cubic_orbit_of, degeneration_target, git_verdict, CurveFlags, DegenerationTarget, MinimalOrbit, Status,
    StabilityVerdict, ThreefoldData, ThreefoldSingularity,
};
