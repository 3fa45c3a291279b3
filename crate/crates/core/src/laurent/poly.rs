use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::dense::IntPoly;
use super::parse::{parse_terms, write_terms};
use crate::error::{Error, Result};

/// An element of `Z[t, t^-1]`.
///
/// Stored densely as a lowest exponent plus a coefficient run whose first
/// and last entries are nonzero, so the representation is canonical and
/// derived equality is exact term-by-term equality. The zero polynomial
/// has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

/// Evaluation points that stay inside the integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Point {
    One,
    MinusOne,
}

impl LaurentPoly {
    fn from_raw(mut low: i64, mut coeffs: Vec<BigInt>) -> Self {
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        low += lead_zeros as i64;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LaurentPoly { low, coeffs }
    }

    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_raw(0, vec![c.into()])
    }

    /// `c * t^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_raw(e, vec![c.into()])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// Coefficients of `t^low, t^(low+1), ...`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_raw(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Sums the given terms; repeated exponents are combined.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_raw(lo, coeffs)
    }

    /// `t^shift * p(t)`
    pub fn from_int_poly(p: &IntPoly, shift: i64) -> Self {
        Self::from_raw(shift, p.coeffs().to_vec())
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Difference between highest and lowest exponent (0 for zero).
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `t^-low * self` as an ordinary polynomial with nonzero constant term.
    pub fn to_int_poly(&self) -> (IntPoly, i64) {
        (IntPoly::new(self.coeffs.clone()), self.low)
    }

    /// Applies the involution `t -> t^-1`.
    pub fn conjugate(&self) -> Self {
        match self.high_exp() {
            None => Self::zero(),
            Some(hi) => Self::from_raw(-hi, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    /// Canonical representative modulo the units `±t^k`: lowest exponent 0
    /// and positive leading coefficient.
    pub fn normalize(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        if coeffs.last().unwrap().is_negative() {
            coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        Ok(LaurentPoly { low: 0, coeffs })
    }

    pub fn is_normalized(&self) -> bool {
        !self.is_zero() && self.low == 0 && self.coeffs.last().unwrap().is_positive()
    }

    /// Equality up to units `±t^k`.
    pub fn associated(&self, other: &LaurentPoly) -> bool {
        match (self.normalize(), other.normalize()) {
            (Ok(a), Ok(b)) => a == b,
            _ => self.is_zero() && other.is_zero(),
        }
    }

    /// True for the units `±t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    /// Symmetric up to units: `f(t^-1) ≐ f(t)`.
    pub fn is_symmetric(&self) -> bool {
        !self.is_zero() && self.associated(&self.conjugate())
    }

    pub fn evaluate(&self, point: Point) -> BigInt {
        match point {
            Point::One => self.coeffs.iter().sum(),
            Point::MinusOne => self
                .terms()
                .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
                .sum(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division in the Laurent ring; `None` if `d` does not divide.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a, la) = self.to_int_poly();
        let (b, lb) = d.to_int_poly();
        a.exact_div(&b).map(|q| Self::from_int_poly(&q, la - lb))
    }

    pub fn divides(&self, other: &LaurentPoly) -> bool {
        other.exact_div(self).is_some()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, BigInt)> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        f.write_str(&write_terms(&terms, 't'))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::from_terms(parse_terms(s, 't')?))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn add_aligned(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.low.min(b.low);
    let hi = a.high_exp().unwrap().max(b.high_exp().unwrap());
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_raw(lo, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_aligned(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_aligned(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::from_raw(self.low + rhs.low, out)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| &a + &b)
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| &a * &b)
    }
}

impl<'a> Product<&'a LaurentPoly> for LaurentPoly {
    fn product<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| &a * b)
    }
}
