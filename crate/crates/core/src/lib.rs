//! Combinatorics of sutured manifolds with parameterizing surfaces: slopes
//! and multicurves on tori, surface norms, sutured boundary data, the index
//! of a parameterizing surface, fat graphs of intersection patterns with
//! Scharlemann-cycle search, and the cobordism read off a Scharlemann cycle.
//!
//! Exact arithmetic is generic over [`scalar::IntScalar`]; the aliases below
//! fix machine integers for everyday use.

pub mod cobordism;
pub mod error;
pub mod fatgraph;
pub mod format;
pub mod harness;
pub mod report;
pub mod scalar;
pub mod slopes;
pub mod snf;
pub mod surfaces;
pub mod sutured;

pub use error::{Error, Result};
pub use report::Report;

pub type Slope = slopes::Slope<i64>;
pub type Term = slopes::Term<i64>;
pub type OrientedMulticurve = slopes::OrientedMulticurve<i64>;
pub type AbelianGroup = snf::AbelianGroup<i64>;
