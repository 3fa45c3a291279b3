//! Exact algebra for knot-concordance obstructions coming from clover
//! (clasper) surgery.
//!
//! The crate is organised bottom-up:
//!
//! - [`laurent`]: integer Laurent polynomials, factorization, and the
//!   exact unit-circle spectrum.
//! - [`matrix`]: square matrices over `Z[t, t^-1]` and their determinants.
//! - [`knots`]: knot descriptors, Alexander polynomials and the classical
//!   factorization tests for sliceness and double sliceness.
//! - [`clover`]: the combinatorics of clovers: class membership, edge
//!   orientations without trivalent sources or sinks, and link splitting.
//! - [`obstruct`]: the family `1 ± t^k (t-1)^n`, wheel linking matrices and
//!   the c¹-equivalence tests built on them.
//!
//! All values are immutable and all operations are pure functions.

pub mod clover;
pub mod error;
pub mod knots;
pub mod laurent;
pub mod matrix;
pub mod obstruct;
pub mod report;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Point};
pub use report::{ObstructionReport, Reason, TestKind, Verdict, Witness};
