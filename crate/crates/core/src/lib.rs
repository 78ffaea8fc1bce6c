//! Rough approximations over finite reflexive relations, with the partial
//! algebras and dependence measures built on top of them.

pub mod algebra;
pub mod approx;
pub mod dependence;
pub mod error;
pub mod fixtures;
pub mod granules;
pub mod operators;
pub mod relation;
pub mod rough;
pub mod semantics;
pub mod set;

pub use approx::{ApproxKind, AssocKind};
pub use error::{PraxError, Result};
pub use granules::{GranuleKind, Space};
pub use relation::{BinRel, RelationJson, RelationProfile};
pub use set::{Subset, Universe};

pub use dependence::FiniteProbSpace;

/// Exact rational scalar.
pub type Rational = num_rational::Ratio<i64>;
/// Probability space with exact rational weights.
pub type ExactProbSpace = FiniteProbSpace<Rational>;
/// Probability space with floating-point weights.
pub type FloatProbSpace = FiniteProbSpace<f64>;
