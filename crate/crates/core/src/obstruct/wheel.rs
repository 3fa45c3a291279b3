use serde::{Deserialize, Serialize};

use super::{FamilyIndex, Sign};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::LaurentMatrix;

/// A wheel with `n` legs whose circle links the knot `k` times; `sign` is
/// the sign of the corner entry `±t^k` of `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct WheelSpec {
    n: u32,
    k: i64,
    sign: Sign,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    n: u32,
    k: i64,
    sign: Sign,
}

impl TryFrom<RawSpec> for WheelSpec {
    type Error = Error;

    fn try_from(r: RawSpec) -> Result<Self> {
        WheelSpec::new(r.n, r.k, r.sign)
    }
}

impl From<WheelSpec> for RawSpec {
    fn from(w: WheelSpec) -> Self {
        RawSpec { n: w.n, k: w.k, sign: w.sign }
    }
}

impl WheelSpec {
    /// `n = 1` is accepted; such wheels are served by the closed form only.
    pub fn new(n: u32, k: i64, sign: Sign) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidWheel("a wheel needs at least one leg".into()));
        }
        Ok(WheelSpec { n, k, sign })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Sign `s′` in `det D = (t-1)^n + s′ t^k`, namely `(-1)^{n-1} · sign`.
    pub fn det_sign(&self) -> Sign {
        self.sign * Sign::parity(self.n as i64 - 1)
    }

    /// The family member associated to `det D`:
    /// `det D = s′ t^k · (1 + s′ t^{-k} (t-1)^n)`.
    pub fn family_index(&self) -> FamilyIndex {
        FamilyIndex::new(-self.k, self.n, self.det_sign()).expect("n >= 1")
    }
}

fn d_block(w: &WheelSpec) -> LaurentMatrix {
    let n = w.n as usize;
    let t_minus_one = LaurentPoly::from_coeffs(0, &[-1, 1]);
    LaurentMatrix::from_fn(n, |i, j| {
        if i == j {
            t_minus_one.clone()
        } else if j == i + 1 {
            LaurentPoly::one()
        } else if i == n - 1 && j == 0 {
            LaurentPoly::monomial(w.sign.value(), w.k)
        } else {
            LaurentPoly::zero()
        }
    })
}

/// The `2n × 2n` linking matrix `[[0, D], [D★, 0]]`, where `D` has `t - 1`
/// on the diagonal, `1` above it and `±t^k` in the lower-left corner.
pub fn build_wheel_matrix(w: &WheelSpec) -> Result<LaurentMatrix> {
    if w.n < 2 {
        return Err(Error::InvalidWheel(
            "the linking matrix needs n >= 2; use the closed form for n = 1".into(),
        ));
    }
    let d = d_block(w);
    let zero = LaurentMatrix::zero(d.size());
    Ok(LaurentMatrix::from_blocks(&zero, &d, &d.star(), &zero))
}

/// `(t-1)^n + (-1)^{n-1} · sign · t^k`, the determinant of `D`.
pub fn closed_form_det_d(w: &WheelSpec) -> LaurentPoly {
    let t_minus_one = LaurentPoly::from_coeffs(0, &[-1, 1]);
    &t_minus_one.pow(w.n as usize) + &LaurentPoly::monomial(w.det_sign().value(), w.k)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WheelAnalysis {
    pub spec: WheelSpec,
    /// `B`; absent for `n = 1`.
    pub matrix: Option<LaurentMatrix>,
    /// `det D`, from the matrix when there is one.
    pub det_d: LaurentPoly,
    /// `det B` as computed, before normalization.
    pub det_b: Option<LaurentPoly>,
    pub closed_form_ok: bool,
    /// Normalized `Δ_{K′} / Δ_K`.
    pub ratio: LaurentPoly,
    /// `det D ≐` this family member; the ratio is its norm.
    pub family: FamilyIndex,
}

pub fn analyze_wheel(w: &WheelSpec) -> Result<WheelAnalysis> {
    let closed = closed_form_det_d(w);
    let closed_ratio = (&closed * &closed.conjugate()).normalize()?;
    let family = w.family_index();

    if w.n < 2 {
        return Ok(WheelAnalysis {
            spec: *w,
            matrix: None,
            det_d: closed,
            det_b: None,
            closed_form_ok: true,
            ratio: closed_ratio,
            family,
        });
    }
    let b = build_wheel_matrix(w)?;
    let n = w.n as usize;
    let det_d = b.block(0..n, n..2 * n).det();
    let det_b = b.det();
    let ratio = det_b.normalize()?;
    let closed_form_ok = det_d == closed && ratio == closed_ratio;
    Ok(WheelAnalysis { spec: *w, matrix: Some(b), det_d, det_b: Some(det_b), closed_form_ok, ratio, family })
}

/// Normalized `det B`, the factor by which wheel surgery changes the
/// Alexander polynomial. For `n = 1` the closed form `g(t) g(t^-1)` with
/// `g = det D` is used.
pub fn wheel_delta_ratio(w: &WheelSpec) -> Result<LaurentPoly> {
    let a = analyze_wheel(w)?;
    assert!(a.closed_form_ok, "determinant of {w:?} disagrees with its closed form");
    Ok(a.ratio)
}
