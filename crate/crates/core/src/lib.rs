//! Exact kernel for valued-field arithmetic in positive characteristic:
//! value groups in Q^r with lexicographic order, residue field towers over
//! small finite fields, truncated Laurent series, monomial (Gauss)
//! valuations, coarsening and composition of valuations, and defect,
//! completion-defect and defect-quotient reports for a certified catalog of
//! extensions.

pub mod ambient;
pub mod error;
pub mod fq;
pub mod mpoly;
pub mod residue_fields;
pub mod series;
pub mod value_groups;

pub use error::{KernelError, Result};
