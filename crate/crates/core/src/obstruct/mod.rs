//! Obstructions to c¹-equivalence.
//!
//! Surgery on a wheel with `n` legs multiplies the Alexander polynomial by
//! `det(B)`, where `B = [[0, D], [D★, 0]]` is the wheel's linking matrix,
//! and `det(D)` is a unit multiple of a member of the family
//! `1 ± t^k (t-1)^n`. Members of that family only vanish on the unit
//! circle at `e^{±iπ/3}`, which yields the spectral tests here.

mod search;
mod spectral;
mod wheel;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

pub use search::{family_witness_search, family_witness_search_with, FamilyWitnessSearch, SearchBounds};
pub use spectral::{
    c1_pair_obstruction, c1_pair_obstruction_with, c1_unknot_obstruction, c1_unknot_obstruction_with,
    divisibility_check,
};
pub use wheel::{analyze_wheel, build_wheel_matrix, closed_form_det_d, wheel_delta_ratio, WheelAnalysis, WheelSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^e`.
    pub fn parity(e: i64) -> Sign {
        if e.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value() as i8
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "+1" | "1" | "plus" => Ok(Sign::Plus),
            "-" | "-1" | "−" | "minus" => Ok(Sign::Minus),
            other => Err(Error::InvalidFamily(format!("unknown sign {other:?}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Sign::Plus { "+" } else { "-" })
    }
}

/// Index `(k, n, ±)` of the family member `1 ± t^k (t-1)^n`, `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawIndex", into = "RawIndex")]
pub struct FamilyIndex {
    k: i64,
    n: u32,
    sign: Sign,
}

#[derive(Serialize, Deserialize)]
struct RawIndex {
    k: i64,
    n: u32,
    sign: Sign,
}

impl TryFrom<RawIndex> for FamilyIndex {
    type Error = Error;

    fn try_from(r: RawIndex) -> Result<Self> {
        FamilyIndex::new(r.k, r.n, r.sign)
    }
}

impl From<FamilyIndex> for RawIndex {
    fn from(i: FamilyIndex) -> Self {
        RawIndex { k: i.k, n: i.n, sign: i.sign }
    }
}

impl FamilyIndex {
    pub fn new(k: i64, n: u32, sign: Sign) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidFamily("n must be positive".into()));
        }
        Ok(FamilyIndex { k, n, sign })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// The index of the conjugate: `f(t^-1) = 1 ± (-1)^n t^{-k-n} (t-1)^n`.
    pub fn conjugate(&self) -> FamilyIndex {
        let n = self.n as i64;
        FamilyIndex { k: -self.k - n, n: self.n, sign: self.sign * Sign::parity(n) }
    }
}

impl fmt::Display for FamilyIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tk = match self.k {
            0 => String::new(),
            1 => "t".to_string(),
            k => format!("t^{k}"),
        };
        let pow = if self.n == 1 { String::new() } else { format!("^{}", self.n) };
        write!(f, "(1 {} {tk}(t - 1){pow})", self.sign)
    }
}

/// `1 + sign · t^k (t-1)^n`, expanded.
pub fn family_poly(idx: &FamilyIndex) -> LaurentPoly {
    let t_minus_one = LaurentPoly::from_coeffs(0, &[-1, 1]);
    let term = &LaurentPoly::monomial(idx.sign.value(), idx.k) * &t_minus_one.pow(idx.n as usize);
    &LaurentPoly::one() + &term
}

/// Product of the family members listed; the empty product is 1.
pub fn family_product(indices: &[FamilyIndex]) -> LaurentPoly {
    indices.iter().map(family_poly).product()
}

/// `θ(t) θ(t^-1)` for the product `θ` of the listed members.
pub fn family_norm(indices: &[FamilyIndex]) -> LaurentPoly {
    let theta = family_product(indices);
    &theta * &theta.conjugate()
}
