use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{family_norm, FamilyIndex, Sign};
use crate::error::{Error, Result};
use crate::knots::validate_alexander;
use crate::laurent::LaurentPoly;
use crate::report::{ObstructionReport, Reason, TestKind, Verdict, Witness};

/// Largest number of products `θ` the search will tabulate.
pub const MAX_CANDIDATES: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchBounds {
    /// Most family members in each of `θ` and `θ′`.
    pub max_factors: usize,
    /// `k` ranges over `[-max_k, max_k]`.
    pub max_k: i64,
    /// `n` ranges over `[1, max_n]`.
    pub max_n: u32,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_factors: 2, max_k: 8, max_n: 4 }
    }
}

impl SearchBounds {
    fn validate(&self) -> Result<()> {
        if self.max_factors == 0 || self.max_n == 0 || self.max_k < 0 {
            return Err(Error::InvalidBounds(format!(
                "need max_factors >= 1, max_k >= 0 and max_n >= 1, got {self}"
            )));
        }
        Ok(())
    }

    fn indices(&self) -> Vec<FamilyIndex> {
        let mut out = Vec::new();
        for k in -self.max_k..=self.max_k {
            for n in 1..=self.max_n {
                for s in Sign::both() {
                    out.push(FamilyIndex::new(k, n, s).expect("n >= 1"));
                }
            }
        }
        out
    }

    /// Number of multisets of at most `max_factors` indices, if it fits.
    fn candidate_count(&self) -> Option<usize> {
        let m = (2 * self.max_k as u128 + 1) * self.max_n as u128 * 2;
        let mut total: u128 = 0;
        let mut c: u128 = 1; // C(m + j - 1, j)
        for j in 0..=self.max_factors as u128 {
            if j > 0 {
                c = c.checked_mul(m + j - 1)? / j;
            }
            total = total.checked_add(c)?;
        }
        usize::try_from(total).ok()
    }
}

impl fmt::Display for SearchBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.max_factors, self.max_k, self.max_n)
    }
}

/// `max_factors,max_k,max_n`.
impl FromStr for SearchBounds {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidBounds(format!("expected max_factors,max_k,max_n, got {s:?}"));
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(bad());
        };
        let bounds = SearchBounds {
            max_factors: a.parse().map_err(|_| bad())?,
            max_k: b.parse().map_err(|_| bad())?,
            max_n: c.parse().map_err(|_| bad())?,
        };
        bounds.validate()?;
        Ok(bounds)
    }
}

/// Precomputed table of norms `θ(t) θ(t^-1)` for every product `θ` within
/// bounds, reusable across searches.
pub struct FamilyWitnessSearch {
    bounds: SearchBounds,
    /// Normalized norm to the first (fewest factors) product realizing it.
    table: HashMap<LaurentPoly, usize>,
    /// Distinct norms with their products, by increasing factor count.
    reps: Vec<(Vec<FamilyIndex>, LaurentPoly)>,
}

impl FamilyWitnessSearch {
    pub fn new(bounds: SearchBounds) -> Result<Self> {
        bounds.validate()?;
        let candidates = bounds.candidate_count().unwrap_or(usize::MAX);
        if candidates > MAX_CANDIDATES {
            return Err(Error::SearchOverflow { candidates, limit: MAX_CANDIDATES });
        }
        let indices = bounds.indices();
        let single: Vec<LaurentPoly> = indices
            .iter()
            .map(|i| family_norm(&[*i]).normalize().expect("nonzero"))
            .collect();

        let mut search = FamilyWitnessSearch { bounds, table: HashMap::new(), reps: Vec::new() };
        // Nondecreasing index sequences of one length at a time.
        let mut layer: Vec<(Vec<usize>, LaurentPoly)> = vec![(vec![], LaurentPoly::one())];
        for size in 0..=bounds.max_factors {
            if size > 0 {
                let mut next = Vec::new();
                for (seq, norm) in &layer {
                    let from = seq.last().copied().unwrap_or(0);
                    for (j, s) in single.iter().enumerate().skip(from) {
                        let mut seq = seq.clone();
                        seq.push(j);
                        next.push((seq, norm * s));
                    }
                }
                layer = next;
            }
            for (seq, norm) in &layer {
                if !search.table.contains_key(norm) {
                    search.table.insert(norm.clone(), search.reps.len());
                    search.reps.push((seq.iter().map(|&j| indices[j]).collect(), norm.clone()));
                }
            }
        }
        Ok(search)
    }

    pub fn bounds(&self) -> SearchBounds {
        self.bounds
    }

    /// Number of distinct norms tabulated.
    pub fn table_size(&self) -> usize {
        self.reps.len()
    }

    /// Looks for `θ`, `θ′` with `Δ₂ θ′ θ′★ ≐ Δ₁ θ θ★`, minimizing the total
    /// number of factors; ties go to the smaller `θ′`.
    pub fn search(&self, d1: &LaurentPoly, d2: &LaurentPoly) -> Result<ObstructionReport> {
        let d1 = validate_alexander(d1)?;
        let d2 = validate_alexander(d2)?;
        let mut best: Option<(usize, usize)> = None;
        for (i, (theta_prime, norm)) in self.reps.iter().enumerate() {
            if best.is_some_and(|(a, b)| theta_prime.len() >= self.reps[a].0.len() + self.reps[b].0.len()) {
                break;
            }
            let lhs = &d2 * norm;
            let Some(q) = lhs.exact_div(&d1) else { continue };
            if let Some(&j) = self.table.get(&q) {
                let total = theta_prime.len() + self.reps[j].0.len();
                if best.is_none_or(|(a, b)| total < self.reps[a].0.len() + self.reps[b].0.len()) {
                    best = Some((j, i));
                }
            }
        }
        Ok(match best {
            Some((j, i)) => ObstructionReport::new(
                TestKind::FamilyWitness,
                Verdict::Passed,
                Reason::FamilyProductsFound,
                Some(Witness::FamilyPair {
                    theta: self.reps[j].0.clone(),
                    theta_prime: self.reps[i].0.clone(),
                }),
            ),
            None => ObstructionReport::new(TestKind::FamilyWitness, Verdict::Inconclusive, Reason::SearchExhausted, None),
        })
    }
}

pub fn family_witness_search(d1: &LaurentPoly, d2: &LaurentPoly) -> Result<ObstructionReport> {
    family_witness_search_with(d1, d2, SearchBounds::default())
}

pub fn family_witness_search_with(d1: &LaurentPoly, d2: &LaurentPoly, bounds: SearchBounds) -> Result<ObstructionReport> {
    FamilyWitnessSearch::new(bounds)?.search(d1, d2)
}
