//! Exact-arithmetic toolkit for regular matroids: totally unimodular
//! matrices, vector matroids, standard representations `[1 | B]`, and the
//! 1-, 2- and 3-sum constructions together with executable witnesses that
//! sums of regular matroids are regular.

pub mod combinatorics;
pub mod corpus;
pub mod error;
pub mod exactmat;
pub mod exec;
pub mod label;
pub mod matroid;
pub mod stdrepr;
pub mod sums;
pub mod tumod;

pub use error::{Error, Result};
pub use exactmat::{ExactMatrix, Scalar, ScalarKind};
pub use exec::Execution;
pub use label::{Label, LabelSet, LabeledMatrix};
pub use matroid::FiniteMatroid;
pub use stdrepr::StandardRepr;
