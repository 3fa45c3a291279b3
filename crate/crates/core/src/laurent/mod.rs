//! The ring `Z[t, t^-1]`: arithmetic, normal forms modulo units,
//! factorization and unit-circle root localization.

pub mod cyclotomic;
pub mod dense;
pub mod factor;
mod modp;
mod parse;
pub mod poly;
pub mod spectrum;

pub use cyclotomic::cyclotomic;
pub use dense::IntPoly;
pub use factor::{factor_int, factor_int_with, FactorConfig, Factorization};
pub use poly::{LaurentPoly, Point};
pub use spectrum::{reciprocal_part, unit_circle_roots, unit_circle_roots_with, SpectrumEntry, UnitCircleSpectrum};
