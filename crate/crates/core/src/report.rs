//! Verdicts with machine-checkable evidence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::laurent::{LaurentPoly, SpectrumEntry};
use crate::obstruct::FamilyIndex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Obstructed,
    Passed,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TestKind {
    FoxMilnor,
    DoubleSlice,
    C1Unknot,
    C1Pair,
    FamilyWitness,
    Divisibility,
}

/// Machine-readable reason code attached to every verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// Every irreducible factor pairs with its conjugate.
    ConjugatePairing,
    /// A self-conjugate factor occurs to an odd power.
    UnpairedFactor,
    /// The integer content is not a perfect square.
    NonSquareContent,
    /// A unit-circle root other than `e^{±iπ/3}` is present.
    ForeignCircleRoot,
    /// All unit-circle roots are `e^{±iπ/3}`.
    SixthRootsOnly,
    /// Circle spectra differ away from `e^{±iπ/3}`.
    SpectrumMismatch,
    /// Circle spectra agree away from `e^{±iπ/3}`.
    SpectraAgree,
    /// Explicit family products were found.
    FamilyProductsFound,
    /// The bounded search finished without a match.
    SearchExhausted,
    ExactQuotient,
    NonzeroRemainder,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A polynomial `f` with `Δ ≐ f · f(t^-1)`.
    ConjugateSquareRoot { f: LaurentPoly },
    /// An irreducible factor with odd multiplicity that equals its conjugate.
    UnpairedFactor { factor: LaurentPoly, multiplicity: usize },
    /// The integer content that fails to be a square.
    Content { content: String },
    /// A circle root class that witnesses the verdict.
    CircleRoot { entry: SpectrumEntry },
    /// `θ` and `θ′` as lists of family indices.
    FamilyPair { theta: Vec<FamilyIndex>, theta_prime: Vec<FamilyIndex> },
    /// Exact quotient `Δ_K′ / Δ_K`.
    Quotient { quotient: LaurentPoly },
    /// Normalized divisor and dividend of a failed exact division.
    Indivisible { divisor: LaurentPoly, dividend: LaurentPoly },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub test: TestKind,
    pub verdict: Verdict,
    pub reason: Reason,
    pub witness: Option<Witness>,
    /// True when the test only checks a necessary condition.
    pub necessary_only: bool,
}

impl ObstructionReport {
    pub fn new(test: TestKind, verdict: Verdict, reason: Reason, witness: Option<Witness>) -> Self {
        ObstructionReport { test, verdict, reason, witness, necessary_only: true }
    }

    pub fn is_obstructed(&self) -> bool {
        self.verdict == Verdict::Obstructed
    }

    pub fn is_passed(&self) -> bool {
        self.verdict == Verdict::Passed
    }

    pub fn is_inconclusive(&self) -> bool {
        self.verdict == Verdict::Inconclusive
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "Obstructed",
            Verdict::Passed => "Passed",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

impl fmt::Display for TestKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TestKind::FoxMilnor => "fox_milnor",
            TestKind::DoubleSlice => "double_slice",
            TestKind::C1Unknot => "c1_unknot",
            TestKind::C1Pair => "c1_pair",
            TestKind::FamilyWitness => "family_witness",
            TestKind::Divisibility => "divisibility",
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ConjugateSquareRoot { f: g } => write!(f, "f = {g}"),
            Witness::UnpairedFactor { factor, multiplicity } => {
                write!(f, "self-conjugate factor {factor} with multiplicity {multiplicity}")
            }
            Witness::Content { content } => write!(f, "content {content} is not a square"),
            Witness::CircleRoot { entry } => write!(f, "circle root class {entry}"),
            Witness::FamilyPair { theta, theta_prime } => {
                let show = |v: &[FamilyIndex]| {
                    if v.is_empty() {
                        "1".to_string()
                    } else {
                        v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" · ")
                    }
                };
                write!(f, "θ = {}, θ′ = {}", show(theta), show(theta_prime))
            }
            Witness::Quotient { quotient } => write!(f, "quotient {quotient}"),
            Witness::Indivisible { divisor, dividend } => {
                write!(f, "{divisor} does not divide {dividend}")
            }
        }
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verdict)?;
        if let Some(w) = &self.witness {
            write!(f, " ({w})")?;
        }
        Ok(())
    }
}
