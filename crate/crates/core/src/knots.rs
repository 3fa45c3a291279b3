//! Knot descriptors, Alexander polynomials, and the classical
//! factorization conditions for sliceness and double sliceness.
//!
//! Knots are carried by algebraic descriptors rather than diagrams: a
//! Seifert matrix, a torus knot, a connected sum or a mirror image. Both
//! factorization tests only check necessary conditions; a polynomial that
//! passes says nothing about the geometry of the knot.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::dense::IntPoly;
use crate::laurent::factor::poly_order;
use crate::laurent::{factor_int_with, FactorConfig, LaurentPoly, Point};
use crate::matrix::LaurentMatrix;
use crate::report::{ObstructionReport, Reason, TestKind, Verdict, Witness};

/// Square integer matrix of even size with `det(V - Vᵀ) = ±1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i64>>", into = "Vec<Vec<i64>>")]
pub struct SeifertMatrix {
    rows: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSeifert("matrix is not square".into()));
        }
        if !n.is_multiple_of(2) {
            return Err(Error::InvalidSeifert(format!("odd size {n}")));
        }
        let m = SeifertMatrix { rows };
        let d = m.intersection_form().det();
        if !d.is_unit() || d.span() != 0 || d.low_exp() != Some(0) {
            return Err(Error::InvalidSeifert(format!("det(V - Vᵀ) = {d}, expected ±1")));
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn genus(&self) -> usize {
        self.rows.len() / 2
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    fn entry(&self, i: usize, j: usize) -> LaurentPoly {
        LaurentPoly::constant(self.rows[i][j])
    }

    /// `V - Vᵀ` as a constant Laurent matrix.
    fn intersection_form(&self) -> LaurentMatrix {
        LaurentMatrix::from_fn(self.size(), |i, j| &self.entry(i, j) - &self.entry(j, i))
    }

    /// `V - t Vᵀ`
    pub fn alexander_matrix(&self) -> LaurentMatrix {
        let t = LaurentPoly::t();
        LaurentMatrix::from_fn(self.size(), |i, j| &self.entry(i, j) - &(&t * &self.entry(j, i)))
    }
}

impl TryFrom<Vec<Vec<i64>>> for SeifertMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<SeifertMatrix> for Vec<Vec<i64>> {
    fn from(m: SeifertMatrix) -> Self {
        m.rows
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum KnotDescriptor {
    Unknot,
    Seifert { matrix: SeifertMatrix },
    Torus { p: i64, q: i64 },
    Sum { left: Box<KnotDescriptor>, right: Box<KnotDescriptor> },
    Mirror { knot: Box<KnotDescriptor> },
}

impl KnotDescriptor {
    pub fn torus(p: i64, q: i64) -> Self {
        KnotDescriptor::Torus { p, q }
    }

    pub fn seifert(rows: Vec<Vec<i64>>) -> Result<Self> {
        Ok(KnotDescriptor::Seifert { matrix: SeifertMatrix::new(rows)? })
    }

    pub fn sum(left: KnotDescriptor, right: KnotDescriptor) -> Self {
        KnotDescriptor::Sum { left: Box::new(left), right: Box::new(right) }
    }

    pub fn mirror(knot: KnotDescriptor) -> Self {
        KnotDescriptor::Mirror { knot: Box::new(knot) }
    }

    /// `K ♯ (-K)`
    pub fn doubled(knot: KnotDescriptor) -> Self {
        Self::sum(knot.clone(), Self::mirror(knot))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            KnotDescriptor::Unknot | KnotDescriptor::Seifert { .. } => Ok(()),
            KnotDescriptor::Torus { p, q } => {
                let (a, b) = (p.unsigned_abs(), q.unsigned_abs());
                if a < 2 || b < 2 || a.gcd(&b) != 1 {
                    Err(Error::InvalidTorus { p: *p, q: *q })
                } else {
                    Ok(())
                }
            }
            KnotDescriptor::Sum { left, right } => {
                left.validate()?;
                right.validate()
            }
            KnotDescriptor::Mirror { knot } => knot.validate(),
        }
    }
}

/// Normalized Alexander polynomial of a knot descriptor.
pub fn alexander(k: &KnotDescriptor) -> Result<LaurentPoly> {
    k.validate()?;
    let delta = match k {
        KnotDescriptor::Unknot => LaurentPoly::one(),
        KnotDescriptor::Seifert { matrix } => matrix.alexander_matrix().det().normalize()?,
        KnotDescriptor::Torus { p, q } => torus_alexander(p.unsigned_abs(), q.unsigned_abs()),
        KnotDescriptor::Sum { left, right } => (&alexander(left)? * &alexander(right)?).normalize()?,
        KnotDescriptor::Mirror { knot } => alexander(knot)?.conjugate().normalize()?,
    };
    debug_assert!(delta.is_symmetric());
    debug_assert!(delta.evaluate(Point::One).abs().is_one());
    Ok(delta)
}

/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`
fn torus_alexander(p: u64, q: u64) -> LaurentPoly {
    let pow_minus_one = |n: u64| &LaurentPoly::monomial(1, n as i64) - &LaurentPoly::one();
    let num = &pow_minus_one(p * q) * &pow_minus_one(1);
    let den = &pow_minus_one(p) * &pow_minus_one(q);
    num.exact_div(&den)
        .expect("torus knot quotient is exact")
        .normalize()
        .expect("nonzero")
}

/// Checks the two defining properties of an Alexander polynomial,
/// `Δ(1) = ±1` and `Δ(t^-1) ≐ Δ(t)`, and returns the normalized form.
pub fn validate_alexander(delta: &LaurentPoly) -> Result<LaurentPoly> {
    let invalid = |reason: &str| Error::InvalidAlexander {
        poly: delta.to_string(),
        reason: reason.to_string(),
    };
    if delta.is_zero() {
        return Err(invalid("zero polynomial"));
    }
    if !delta.evaluate(Point::One).abs().is_one() {
        return Err(invalid("value at t = 1 is not ±1"));
    }
    if !delta.is_symmetric() {
        return Err(invalid("not symmetric under t -> 1/t up to units"));
    }
    delta.normalize()
}

/// Result of splitting a factorization into conjugate pairs.
enum Pairing {
    Root(LaurentPoly),
    Unpaired(LaurentPoly, usize),
    BadContent(BigInt),
}

/// Searches for `f` with `Δ ≐ f(t) f(t^-1)` by pairing irreducible factors
/// with their conjugates. From each conjugate pair the member with the
/// larger leading coefficient (in absolute value, relative to its constant
/// term) is kept, so e.g. `2t^2 - 5t + 2` yields `2t - 1`.
fn conjugate_pairing(delta: &LaurentPoly, cfg: &FactorConfig) -> Result<Pairing> {
    let fz = factor_int_with(delta, cfg)?;
    let root = fz.content.sqrt();
    if &root * &root != fz.content {
        return Ok(Pairing::BadContent(fz.content));
    }
    let mult: BTreeMap<Key, usize> = fz
        .factors
        .iter()
        .map(|(g, m)| (Key(g.clone()), *m))
        .collect();

    let mut f = LaurentPoly::constant(root);
    for (g, m) in &fz.factors {
        let partner = g.conjugate().normalize()?;
        if &partner == g {
            if m % 2 == 1 {
                return Ok(Pairing::Unpaired(g.clone(), *m));
            }
            f = &f * &g.pow(m / 2);
            continue;
        }
        let pm = mult.get(&Key(partner.clone())).copied().unwrap_or(0);
        if pm != *m {
            return Ok(Pairing::Unpaired(g.clone(), *m));
        }
        if prefer(g, &partner) {
            f = &f * &g.pow(*m);
        }
    }
    Ok(Pairing::Root(f))
}

/// Total order on normalized polynomials, used for deterministic choices.
#[derive(PartialEq, Eq)]
struct Key(LaurentPoly);

impl Ord for Key {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        poly_order(&self.0.to_int_poly().0, &other.0.to_int_poly().0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Whether `g` rather than its conjugate partner represents the pair.
fn prefer(g: &LaurentPoly, partner: &LaurentPoly) -> bool {
    let weight = |p: &LaurentPoly| {
        let (ip, _) = p.to_int_poly();
        ip.lc().abs() - ip.coeff(0).abs()
    };
    let (wg, wp) = (weight(g), weight(partner));
    if wg != wp {
        return wg > wp;
    }
    let (a, b): (IntPoly, IntPoly) = (g.to_int_poly().0, partner.to_int_poly().0);
    poly_order(&a, &b).is_lt()
}

fn pairing_report(test: TestKind, pairing: Pairing) -> ObstructionReport {
    match pairing {
        Pairing::Root(f) => ObstructionReport::new(
            test,
            Verdict::Passed,
            Reason::ConjugatePairing,
            Some(Witness::ConjugateSquareRoot { f }),
        ),
        Pairing::Unpaired(factor, multiplicity) => ObstructionReport::new(
            test,
            Verdict::Obstructed,
            Reason::UnpairedFactor,
            Some(Witness::UnpairedFactor { factor, multiplicity }),
        ),
        Pairing::BadContent(c) => ObstructionReport::new(
            test,
            Verdict::Obstructed,
            Reason::NonSquareContent,
            Some(Witness::Content { content: c.to_string() }),
        ),
    }
}

/// Slice-type condition `Δ ≐ f(t) f(t^-1)`, `f(1) = ±1`.
pub fn fox_milnor_test(delta: &LaurentPoly) -> Result<ObstructionReport> {
    fox_milnor_test_with(delta, &FactorConfig::default())
}

pub fn fox_milnor_test_with(delta: &LaurentPoly, cfg: &FactorConfig) -> Result<ObstructionReport> {
    let delta = validate_alexander(delta)?;
    Ok(pairing_report(TestKind::FoxMilnor, conjugate_pairing(&delta, cfg)?))
}

/// Double-slice condition `Δ ≐ θ(t) θ(t^-1)`, `θ(1) = ±1`. Polynomially
/// this coincides with the Fox–Milnor pairing; a pass means such a `θ`
/// exists, which is necessary for double sliceness.
pub fn double_slice_test(delta: &LaurentPoly) -> Result<ObstructionReport> {
    double_slice_test_with(delta, &FactorConfig::default())
}

pub fn double_slice_test_with(delta: &LaurentPoly, cfg: &FactorConfig) -> Result<ObstructionReport> {
    let delta = validate_alexander(delta)?;
    Ok(pairing_report(TestKind::DoubleSlice, conjugate_pairing(&delta, cfg)?))
}
