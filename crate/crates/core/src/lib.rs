//! Bott's theorem on generalized flag manifolds `G/P` and combinatorial
//! vanishing ranges for homogeneous bundles.
//!
//! Weights are given in the basis of fundamental weights and roots in the
//! basis of simple roots, with Bourbaki labelling of every simple component.
//! The scalar product is normalized so that long roots have squared length 2.

#![allow(clippy::needless_range_loop)]

pub mod bott;
pub mod catalog;
pub mod error;
pub mod exec;
pub mod nodeset;
pub mod oracle;
pub mod parabolic;
pub mod rootsys;
pub mod vanishing;

/// Exact rational scalar.
pub type Rational = num_rational::Ratio<i64>;

pub use bott::{bott_cohomology, line_bundle_table, weyl_dimension, CohomologyResult, TableEntry};
pub use error::{Error, Result};
pub use exec::Execution;
pub use nodeset::NodeSet;
pub use parabolic::ParabolicData;
pub use rootsys::{DynkinDiagram, Root, RootSystem, SimpleType, Weight};
pub use vanishing::ABConfig;
