//! MDS self-dual, self-orthogonal, and almost self-dual codes over GF(r^2)
//! built from generalized Reed-Solomon codes on coset-union evaluation sets.
//!
//! The crate provides:
//!
//! - [`field`]: canonical GF(p^{2m}) contexts with quadratic character and
//!   square roots;
//! - [`poly`]: vanishing polynomials, derivative products L_S, and the
//!   closed coset-union forms;
//! - [`grs`]: (extended) GRS codes and the self-dual / self-orthogonal
//!   criteria;
//! - [`construct`]: the coset-union evaluation-set families and their
//!   validators;
//! - [`enumerate`]: achievable-length enumeration and coverage statistics;
//! - [`verify`]: independent verification oracles (Gram products, rank,
//!   brute-force minimum distance).

pub mod construct;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod grs;
pub mod matrix;
mod numth;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
