//! Claim registry, relation generators and the suite runner behind `praxkit verify`.

pub mod claim;
pub mod gen;
pub mod registry;
pub mod runner;

pub use claim::{Bound, Claim, Domain, Expected, Found, Probe, Quantifier, Status, Witness};
pub use gen::Constraint;
pub use registry::registry;
pub use runner::{run_claim, run_suite, ClaimReport, Counterexample, Report, RunConfig};
