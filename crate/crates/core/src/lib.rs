//! Classification of the cohomological `A_q` modules of an equal-rank real
//! form, starting from its Cartan matrix and a set of noncompact simple roots.
//!
//! The pipeline runs
//! [`rootsys`] → [`realform`] → [`posenum`] → [`parabolics`] → [`cohomology`] → [`classify`],
//! and [`cli`] renders the result. Everything is exact integer arithmetic in
//! simple-root coordinates.
//!
//! ```
//! use aqclass::classify::{classify, RunOptions};
//! use aqclass::rootsys::CartanMatrix;
//!
//! let report = classify("F4", CartanMatrix::type_f4(), &[0], &RunOptions::default()).unwrap();
//! assert_eq!((report.counts.total, report.counts.discrete_series, report.counts.bds), (46, 12, 1));
//! ```

pub mod classify;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod parabolics;
pub mod posenum;
pub mod realform;
pub mod reference;
pub mod rootsys;

pub use error::{Error, Result};
