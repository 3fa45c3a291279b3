//! Exact location of roots on the unit circle.
//!
//! A root `z` with `|z| = 1` is recorded through `x = z + 1/z`, a real
//! number in `[-2, 2]`. The self-reciprocal part of the input (after
//! stripping the roots `z = ±1`, i.e. `x = ±2`) is rewritten as
//! `t^m * g(t + 1/t)`; the circle roots correspond exactly to the roots of
//! `g` in `(-2, 2)`, which are isolated with Sturm sequences over the
//! rationals. Each root is identified by its minimal polynomial and its
//! rank among that polynomial's roots in the interval, so two spectra can
//! be compared without any floating point.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::dense::IntPoly;
use super::factor::{factor_poly, FactorConfig};
use super::poly::LaurentPoly;
use crate::error::Result;

/// One circle root class `{z, 1/z}` (a single root when `z = ±1`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    /// Minimal polynomial of `x = z + 1/z` over the rationals.
    pub min_poly: IntPoly,
    /// Rank of `x` among the roots of `min_poly` in `[-2, 2]`, ascending.
    pub root_index: usize,
    /// Multiplicity of `z` as a root of the input.
    pub multiplicity: usize,
    /// `x` to double precision, for display and numeric cross-checks.
    pub x_approx: f64,
}

impl SpectrumEntry {
    /// Exact identity of the root class, without the multiplicity.
    pub fn class(&self) -> (&IntPoly, usize) {
        (&self.min_poly, self.root_index)
    }

    /// The `e^{±iπ/3}` class, `x = 1`.
    pub fn is_sixth_root(&self) -> bool {
        self.min_poly == IntPoly::linear_root(1)
    }

    /// Number of roots `z` this entry stands for, with multiplicity.
    pub fn root_count(&self) -> usize {
        let n = self.min_poly.deg();
        let at_pm_one = n == 1 && self.min_poly.coeff(0).abs() == BigInt::from(2);
        if at_pm_one {
            self.multiplicity
        } else {
            2 * self.multiplicity
        }
    }
}

impl fmt::Display for SpectrumEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [root {}, x ≈ {:.12}] ×{}",
            self.min_poly, self.root_index, self.x_approx, self.multiplicity
        )
    }
}

/// The multiset of unit-circle roots of a Laurent polynomial.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct UnitCircleSpectrum {
    /// Entries sorted by ascending `x`.
    pub entries: Vec<SpectrumEntry>,
}

impl UnitCircleSpectrum {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn multiplicity_of(&self, min_poly: &IntPoly) -> usize {
        self.entries
            .iter()
            .filter(|e| &e.min_poly == min_poly)
            .map(|e| e.multiplicity)
            .sum()
    }

    /// Multiplicity of the `e^{±iπ/3}` pair (`x = 1`).
    pub fn sixth_root_multiplicity(&self) -> usize {
        self.multiplicity_of(&IntPoly::linear_root(1))
    }

    /// Multiplicity of `z = 1` (`x = 2`).
    pub fn multiplicity_at_one(&self) -> usize {
        self.multiplicity_of(&IntPoly::linear_root(2))
    }

    /// Multiplicity of `z = -1` (`x = -2`).
    pub fn multiplicity_at_minus_one(&self) -> usize {
        self.multiplicity_of(&IntPoly::linear_root(-2))
    }

    /// True when every circle root is `e^{±iπ/3}` (vacuously for none).
    pub fn only_sixth_roots(&self) -> bool {
        self.entries.iter().all(|e| e.is_sixth_root())
    }

    /// The spectrum with the `x = 1` class removed.
    pub fn without_sixth_roots(&self) -> UnitCircleSpectrum {
        UnitCircleSpectrum {
            entries: self.entries.iter().filter(|e| !e.is_sixth_root()).cloned().collect(),
        }
    }

    /// Total number of circle roots `z`, with multiplicity.
    pub fn root_count(&self) -> usize {
        self.entries.iter().map(|e| e.root_count()).sum()
    }
}

impl fmt::Display for UnitCircleSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("{}");
        }
        f.write_str("{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// Splits `f` into its maximal self-reciprocal factor and the rest, both
/// normalized; their product equals `normalize(f)`.
pub fn reciprocal_part(f: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
    let (p, _) = f.normalize()?.to_int_poly();
    let s = p.gcd(&p.reverse()).primitive_part();
    let rest = p.exact_div(&s).expect("gcd divides");
    Ok((LaurentPoly::from_int_poly(&s, 0), LaurentPoly::from_int_poly(&rest, 0)))
}

pub fn unit_circle_roots(f: &LaurentPoly) -> Result<UnitCircleSpectrum> {
    unit_circle_roots_with(f, &FactorConfig::default())
}

pub fn unit_circle_roots_with(f: &LaurentPoly, cfg: &FactorConfig) -> Result<UnitCircleSpectrum> {
    let (mut p, _) = f.normalize()?.to_int_poly();
    let mut entries = Vec::new();

    for (z, x) in [(1i64, 2i64), (-1, -2)] {
        let m = p.root_multiplicity(z);
        if m > 0 {
            p = p.exact_div(&IntPoly::linear_root(z).pow(m)).unwrap();
            entries.push(SpectrumEntry {
                min_poly: IntPoly::linear_root(x),
                root_index: 0,
                multiplicity: m,
                x_approx: x as f64,
            });
        }
    }

    let s = p.gcd(&p.reverse()).primitive_part();
    if s.deg() > 0 {
        let g = palindromic_to_trace_poly(&s);
        let (_, factors) = factor_poly(&g, cfg)?;
        let lo = BigRational::from_integer(BigInt::from(-2));
        let hi = BigRational::from_integer(BigInt::from(2));
        for (h, mult) in factors {
            for (i, (a, b)) in isolate_real_roots(&h, &lo, &hi).into_iter().enumerate() {
                entries.push(SpectrumEntry {
                    min_poly: h.clone(),
                    root_index: i,
                    multiplicity: mult,
                    x_approx: refine_to_f64(&h, a, b),
                });
            }
        }
    }
    entries.sort_by(|a, b| a.x_approx.total_cmp(&b.x_approx));
    Ok(UnitCircleSpectrum { entries })
}

/// For palindromic `s` of degree `2m`, the `g` with `s(t) = t^m g(t + 1/t)`.
pub(crate) fn palindromic_to_trace_poly(s: &IntPoly) -> IntPoly {
    let n = s.deg();
    debug_assert!(n.is_multiple_of(2) && s.reverse() == *s, "expected an even palindrome, got {s}");
    let m = n / 2;
    // t^j + t^-j as polynomials in x = t + 1/t.
    let x = IntPoly::from_i64s(&[0, 1]);
    let mut prev = IntPoly::from_i64s(&[2]);
    let mut cur = x.clone();
    let mut g = IntPoly::constant(s.coeff(m));
    for j in 1..=m {
        g = &g + &cur.scale(&s.coeff(m + j));
        let next = &(&x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    g
}

// ---------------------------------------------------------------------------
// Sturm sequences over the rationals

type QPoly = Vec<BigRational>;

fn q_trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn q_rem(a: &QPoly, d: &QPoly) -> QPoly {
    let mut r = a.clone();
    let dd = d.len() - 1;
    let dlc = d.last().unwrap().clone();
    while r.len() > dd {
        let shift = r.len() - 1 - dd;
        let q = r.last().unwrap() / &dlc;
        for (j, c) in d.iter().enumerate() {
            r[shift + j] -= &q * c;
        }
        r.pop();
        r = q_trim(r);
    }
    r
}

fn q_eval(p: &QPoly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sturm_sequence(h: &IntPoly) -> Vec<QPoly> {
    let to_q = |p: &IntPoly| -> QPoly {
        p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()
    };
    let mut seq = vec![to_q(h), to_q(&h.derivative())];
    while seq.last().is_some_and(|p| p.len() > 1) {
        let n = seq.len();
        let r: QPoly = q_rem(&seq[n - 2], &seq[n - 1]).into_iter().map(|c| -c).collect();
        if r.is_empty() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn sign_changes(seq: &[QPoly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let v = q_eval(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of squarefree `h` in `(a, b]`.
fn count_roots(seq: &[QPoly], a: &BigRational, b: &BigRational) -> usize {
    sign_changes(seq, a) - sign_changes(seq, b)
}

/// Disjoint intervals `(a, b]`, in ascending order, each holding exactly one
/// root of the squarefree polynomial `h` in `(lo, hi)`.
pub(crate) fn isolate_real_roots(
    h: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> Vec<(BigRational, BigRational)> {
    if h.deg() == 0 {
        return vec![];
    }
    let seq = sturm_sequence(h);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = count_roots(&seq, &a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
        stack.push((mid.clone(), b));
        stack.push((a, mid));
    }
    // A root sitting exactly on `hi` is outside the open interval.
    if h.eval_rational(hi).is_zero() {
        out.retain(|(_, b)| b != hi);
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

fn refine_to_f64(h: &IntPoly, mut a: BigRational, mut b: BigRational) -> f64 {
    if h.deg() == 1 {
        let r = BigRational::new(-h.coeff(0), h.coeff(1));
        return r.to_f64().unwrap();
    }
    let seq = sturm_sequence(h);
    let two = BigRational::from_integer(BigInt::from(2));
    for _ in 0..60 {
        let mid = (&a + &b) / &two;
        if count_roots(&seq, &a, &mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    ((a + b) / two).to_f64().unwrap()
}
