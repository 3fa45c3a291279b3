//! Factorization in `Z[t, t^-1]`.
//!
//! Inputs are normalized (units `±t^k` removed), split into a squarefree
//! core, and factored by the Zassenhaus method: factor modulo a small
//! prime, Hensel-lift to a power of that prime exceeding the Mignotte
//! coefficient bound, then recombine lifted factors by trial division.
//! Hard limits on degree and recombination work turn pathological inputs
//! into explicit errors instead of long runs.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::dense::IntPoly;
use super::modp::{factor_squarefree, FpPoly};
use super::poly::LaurentPoly;
use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_LIMIT: usize = 24;
pub const DEFAULT_RECOMBINATION_BUDGET: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorConfig {
    /// Largest accepted degree span of the normalized input.
    pub degree_limit: usize,
    /// Largest number of factor subsets tried during recombination.
    pub recombination_budget: usize,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            degree_limit: DEFAULT_DEGREE_LIMIT,
            recombination_budget: DEFAULT_RECOMBINATION_BUDGET,
        }
    }
}

impl FactorConfig {
    pub fn with_degree_limit(degree_limit: usize) -> Self {
        FactorConfig { degree_limit, ..Self::default() }
    }
}

/// `content * prod(factor^multiplicity)`, equal to the normalized input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(LaurentPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> LaurentPoly {
        self.factors
            .iter()
            .fold(LaurentPoly::constant(self.content.clone()), |acc, (g, m)| {
                &acc * &g.pow(*m)
            })
    }
}

pub fn factor_int(f: &LaurentPoly) -> Result<Factorization> {
    factor_int_with(f, &FactorConfig::default())
}

pub fn factor_int_with(f: &LaurentPoly, cfg: &FactorConfig) -> Result<Factorization> {
    let n = f.normalize()?;
    let (p, _) = n.to_int_poly();
    let (content, factors) = factor_poly(&p, cfg)?;
    Ok(Factorization {
        content,
        factors: factors
            .into_iter()
            .map(|(g, m)| (LaurentPoly::from_int_poly(&g, 0), m))
            .collect(),
    })
}

/// Factors an ordinary integer polynomial: returns the signed content and
/// primitive irreducible factors with positive leading coefficients, sorted
/// by degree then coefficients.
pub(crate) fn factor_poly(f: &IntPoly, cfg: &FactorConfig) -> Result<(BigInt, Vec<(IntPoly, usize)>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let deg = f.deg();
    if deg > cfg.degree_limit {
        return Err(Error::DegreeLimit { span: deg, limit: cfg.degree_limit });
    }
    let mut content = f.content();
    if f.lc().is_negative() {
        content = -content;
    }
    let prim = f.primitive_part();
    if prim.deg() == 0 {
        return Ok((content, vec![]));
    }

    let mut factors = Vec::new();
    let mut rest = prim.clone();
    // Powers of x are factored out directly.
    let mut xm = 0;
    while rest.coeff(0).is_zero() {
        rest = IntPoly::new(rest.coeffs()[1..].to_vec());
        xm += 1;
    }
    if xm > 0 {
        factors.push((IntPoly::from_i64s(&[0, 1]), xm));
    }
    if rest.deg() > 0 {
        let g = rest.gcd(&rest.derivative());
        let sqf = rest.exact_div(&g).expect("gcd divides").primitive_part();
        for irr in zassenhaus(&sqf, cfg)? {
            let mut m = 0;
            while let Some(q) = rest.exact_div(&irr) {
                rest = q;
                m += 1;
            }
            debug_assert!(m > 0);
            factors.push((irr, m));
        }
    }
    factors.sort_by(|(a, _), (b, _)| poly_order(a, b));
    Ok((content, factors))
}

pub(crate) fn poly_order(a: &IntPoly, b: &IntPoly) -> std::cmp::Ordering {
    a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

const PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

/// Irreducible factors of a primitive squarefree polynomial with `deg >= 1`.
fn zassenhaus(f: &IntPoly, cfg: &FactorConfig) -> Result<Vec<IntPoly>> {
    if f.deg() <= 1 {
        return Ok(vec![f.primitive_part()]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c10e);

    // Try a few good primes and keep the one with the fewest modular factors.
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        let lc_mod = FpPoly::from_int(&IntPoly::constant(f.lc()), p);
        if lc_mod.is_zero() {
            continue;
        }
        let fp = FpPoly::from_int(f, p);
        if !fp.is_squarefree() {
            continue;
        }
        let facs = factor_squarefree(&fp, &mut rng);
        if facs.len() == 1 {
            return Ok(vec![f.clone()]);
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried == 4 {
            break;
        }
    }
    let (p, modular) = best.expect("some small prime keeps a squarefree polynomial squarefree");

    // Lift until p^a exceeds twice the bound on coefficients of lc * factor.
    let bound = f.lc().abs() * (BigInt::one() << f.deg()) * f.l1_norm();
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut a = 1u32;
    while modulus <= &bound * 2 {
        modulus *= &pb;
        a += 1;
    }
    let lifted = multifactor_lift(f, &modular, p, a);
    recombine(f, lifted, &modulus, cfg)
}

fn reduce_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m >> 1;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Lifts `f ≡ lc(f) * prod(factors) (mod p)` to a factorization modulo
/// `p^a`; the returned factors are monic modulo `p^a`.
fn multifactor_lift(f: &IntPoly, factors: &[FpPoly], p: u64, a: u32) -> Vec<IntPoly> {
    let m = BigInt::from(p).pow(a);
    let mut cur = reduce_mod(f, &m);
    let mut out = Vec::with_capacity(factors.len());
    for i in 0..factors.len() - 1 {
        let lc_p = FpPoly::from_int(&IntPoly::constant(cur.lc()), p);
        let rest = factors[i + 1..]
            .iter()
            .fold(lc_p, |acc, g| acc.mul(g));
        let (g, h) = hensel_pair(&cur, &rest, &factors[i], p, a);
        out.push(h);
        cur = g;
    }
    // What remains is lc * last factor.
    let lc = cur.lc();
    let inv = lc.modinv(&m).expect("leading coefficient is a unit mod p");
    out.push(reduce_mod(&cur.scale(&inv), &m));
    out
}

/// Linear Hensel lifting of `f ≡ g0 * h0 (mod p)` with `h0` monic, to
/// `f ≡ g * h (mod p^a)` with `h` monic and `lc(g) = lc(f)`.
fn hensel_pair(f: &IntPoly, g0: &FpPoly, h0: &FpPoly, p: u64, a: u32) -> (IntPoly, IntPoly) {
    let pb = BigInt::from(p);
    let m = pb.pow(a);
    let (one, s, t) = g0.ext_gcd(h0);
    debug_assert_eq!(one.deg(), 0);

    let mut g = g0.to_int();
    let top = g.deg();
    let mut gc = g.into_coeffs();
    gc[top] = f.lc().mod_floor(&m);
    g = IntPoly::new(gc);
    let mut h = h0.to_int();

    let mut pk = pb.clone();
    for _ in 1..a {
        let diff = reduce_mod(&(f - &(&g * &h)), &m);
        let e_int = IntPoly::new(
            diff.coeffs()
                .iter()
                .map(|c| {
                    debug_assert!((c % &pk).is_zero());
                    c / &pk
                })
                .collect(),
        );
        let e = FpPoly::from_int(&e_int, p);
        let (q, r) = e.mul(&s).div_rem(h0);
        let dg = e.mul(&t).add(&q.mul(g0));
        g = reduce_mod(&(&g + &dg.to_int().scale(&pk)), &m);
        h = reduce_mod(&(&h + &r.to_int().scale(&pk)), &m);
        pk *= &pb;
    }
    (g, h)
}

fn recombine(f: &IntPoly, lifted: Vec<IntPoly>, m: &BigInt, cfg: &FactorConfig) -> Result<Vec<IntPoly>> {
    let mut found = Vec::new();
    let mut rest = f.clone();
    let mut pool = lifted;
    let mut size = 1;
    let mut spent = 0usize;
    'outer: while 2 * size <= pool.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            spent += 1;
            if spent > cfg.recombination_budget {
                return Err(Error::RecombinationBudget { budget: cfg.recombination_budget });
            }
            let lc = rest.lc();
            let cand = idx
                .iter()
                .fold(IntPoly::constant(lc.clone()), |acc, &i| reduce_mod(&(&acc * &pool[i]), m));
            let cand = symmetric_mod(&cand, m).primitive_part();
            if let Some(q) = rest.exact_div(&cand) {
                found.push(cand);
                rest = q;
                for &i in idx.iter().rev() {
                    pool.remove(i);
                }
                continue 'outer;
            }
            if !next_combination(&mut idx, pool.len()) {
                break;
            }
        }
        size += 1;
    }
    let rest = rest.primitive_part();
    if rest.deg() > 0 {
        found.push(rest);
    }
    debug_assert!(found.iter().all(|g| g.lc().sign() == Sign::Plus));
    Ok(found)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
