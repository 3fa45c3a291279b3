use crate::error::Result;
use crate::knots::validate_alexander;
use crate::laurent::{unit_circle_roots_with, FactorConfig, LaurentPoly, SpectrumEntry, UnitCircleSpectrum};
use crate::report::{ObstructionReport, Reason, TestKind, Verdict, Witness};

/// Necessary condition for c¹-equivalence to the unknot: every unit-circle
/// root of `Δ` is `e^{±iπ/3}`.
pub fn c1_unknot_obstruction(delta: &LaurentPoly) -> Result<ObstructionReport> {
    c1_unknot_obstruction_with(delta, &FactorConfig::default())
}

pub fn c1_unknot_obstruction_with(delta: &LaurentPoly, cfg: &FactorConfig) -> Result<ObstructionReport> {
    let delta = validate_alexander(delta)?;
    let spectrum = unit_circle_roots_with(&delta, cfg)?;
    Ok(match spectrum.entries.into_iter().find(|e| !e.is_sixth_root()) {
        Some(entry) => ObstructionReport::new(
            TestKind::C1Unknot,
            Verdict::Obstructed,
            Reason::ForeignCircleRoot,
            Some(Witness::CircleRoot { entry }),
        ),
        None => ObstructionReport::new(TestKind::C1Unknot, Verdict::Inconclusive, Reason::SixthRootsOnly, None),
    })
}

/// Necessary condition for `K` and `K′` to be c¹-equivalent: away from
/// `e^{±iπ/3}` their unit-circle spectra agree with multiplicity.
pub fn c1_pair_obstruction(d1: &LaurentPoly, d2: &LaurentPoly) -> Result<ObstructionReport> {
    c1_pair_obstruction_with(d1, d2, &FactorConfig::default())
}

pub fn c1_pair_obstruction_with(d1: &LaurentPoly, d2: &LaurentPoly, cfg: &FactorConfig) -> Result<ObstructionReport> {
    let s1 = unit_circle_roots_with(&validate_alexander(d1)?, cfg)?.without_sixth_roots();
    let s2 = unit_circle_roots_with(&validate_alexander(d2)?, cfg)?.without_sixth_roots();
    Ok(match first_mismatch(&s1, &s2).or_else(|| first_mismatch(&s2, &s1)) {
        Some(entry) => ObstructionReport::new(
            TestKind::C1Pair,
            Verdict::Obstructed,
            Reason::SpectrumMismatch,
            Some(Witness::CircleRoot { entry }),
        ),
        None => ObstructionReport::new(TestKind::C1Pair, Verdict::Inconclusive, Reason::SpectraAgree, None),
    })
}

/// An entry of `a` whose class is missing from `b` or has another multiplicity.
fn first_mismatch(a: &UnitCircleSpectrum, b: &UnitCircleSpectrum) -> Option<SpectrumEntry> {
    a.entries
        .iter()
        .find(|e| {
            !b.entries
                .iter()
                .any(|f| f.class() == e.class() && f.multiplicity == e.multiplicity)
        })
        .cloned()
}

/// `Δ_K | Δ_{K′}`, necessary for `K′` to come from `K` by one wheel surgery.
pub fn divisibility_check(d_k: &LaurentPoly, d_kp: &LaurentPoly) -> Result<ObstructionReport> {
    let divisor = validate_alexander(d_k)?;
    let dividend = validate_alexander(d_kp)?;
    Ok(match dividend.exact_div(&divisor) {
        Some(q) => ObstructionReport::new(
            TestKind::Divisibility,
            Verdict::Passed,
            Reason::ExactQuotient,
            Some(Witness::Quotient { quotient: q.normalize()? }),
        ),
        None => ObstructionReport::new(
            TestKind::Divisibility,
            Verdict::Obstructed,
            Reason::NonzeroRemainder,
            Some(Witness::Indivisible { divisor, dividend }),
        ),
    })
}
