//! Reference computations for integration tests. Nothing here calls into
//! the factorizer, the Sturm machinery, Bareiss elimination or the
//! orientation algorithm of the crate under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use knotclover::LaurentPoly;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

// ---------------------------------------------------------------------------
// Floating-point roots

type QPoly = Vec<BigRational>;

fn q_trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn q_rem(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let f = r.last().unwrap() / b.last().unwrap();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &f * c;
        }
        r = q_trim(r);
    }
    r
}

fn q_div(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(db)];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let f = r.last().unwrap() / b.last().unwrap();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &f * c;
        }
        q[shift] = f;
        r = q_trim(r);
    }
    assert!(r.is_empty(), "inexact division");
    q_trim(q)
}

fn q_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = q_rem(&a, &b);
        a = b;
        b = r;
    }
    let lc = a.last().unwrap().clone();
    a.iter().map(|c| c / &lc).collect()
}

fn q_derivative(a: &QPoly) -> QPoly {
    q_trim(a.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(i.into())).collect())
}

fn q_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let zero = BigRational::zero();
    let n = a.len().max(b.len());
    q_trim((0..n).map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero)).collect())
}

/// Yun's squarefree decomposition over the rationals: `[(a_i, i)]` with
/// `f = c · Π a_i^i`, each `a_i` squarefree and monic.
pub fn yun(f: &[BigInt]) -> Vec<(QPoly, usize)> {
    let f: QPoly = q_trim(f.iter().map(|c| BigRational::from_integer(c.clone())).collect());
    let df = q_derivative(&f);
    if df.is_empty() {
        return vec![];
    }
    let a0 = q_gcd(&f, &df);
    let mut b = q_div(&f, &a0);
    let c = q_div(&df, &a0);
    let mut d = q_sub(&c, &q_derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.len() > 1 {
        let a = q_gcd(&b, &d);
        b = q_div(&b, &a);
        let c = q_div(&d, &a);
        d = q_sub(&c, &q_derivative(&b));
        if a.len() > 1 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn horner(p: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut dv = Complex64::new(0.0, 0.0);
    for c in p.iter().rev() {
        dv = dv * z + v;
        v = v * z + c;
    }
    (v, dv)
}

/// All complex roots of a squarefree polynomial (ascending coefficients)
/// by Aberth–Ehrlich iteration, then Newton polishing.
pub fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let p: Vec<Complex64> = coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
    let d = p.len() - 1;
    if d == 0 {
        return vec![];
    }
    let lc = coeffs[d].abs();
    let radius = 1.0 + coeffs[..d].iter().map(|c| c.abs() / lc).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(0.5 * radius, 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut biggest: f64 = 0.0;
        for k in 0..d {
            let (v, dv) = horner(&p, z[k]);
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = v / dv;
            let s: Complex64 = (0..d).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[k] -= w;
            biggest = biggest.max(w.norm() / z[k].norm().max(1e-300));
        }
        if biggest < 1e-16 {
            break;
        }
    }
    for r in z.iter_mut() {
        for _ in 0..5 {
            let (v, dv) = horner(&p, *r);
            if dv.norm() == 0.0 {
                break;
            }
            *r -= v / dv;
        }
    }
    z
}

/// Unit-circle spectrum by floating point: `(x = z + 1/z, multiplicity)`
/// for every class `{z, z̄}` with `||z| - 1| < tol`, sorted by `x`.
pub fn float_circle_spectrum(f: &LaurentPoly, tol: f64) -> Vec<(f64, usize)> {
    let (low, high) = (f.low_exp().unwrap(), f.high_exp().unwrap());
    let coeffs: Vec<BigInt> = (low..=high).map(|e| f.coeff(e)).collect();
    let mut out: Vec<(f64, usize)> = Vec::new();
    for (a, m) in yun(&coeffs) {
        let af: Vec<f64> = a.iter().map(|c| c.to_f64().unwrap()).collect();
        for z in aberth(&af) {
            if (z.norm() - 1.0).abs() >= tol {
                continue;
            }
            // Keep one representative per conjugate pair.
            if z.im < -tol {
                continue;
            }
            out.push((2.0 * z.re, m));
        }
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    out
}

/// Number of unit-circle roots with multiplicity, by floating point.
pub fn float_circle_root_count(f: &LaurentPoly, tol: f64) -> usize {
    float_circle_spectrum(f, tol)
        .iter()
        .map(|&(x, m)| if (x.abs() - 2.0).abs() < tol { m } else { 2 * m })
        .sum()
}

// ---------------------------------------------------------------------------
// Modular evaluation and determinants

pub const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

pub fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn reduce(c: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let r = ((c % &p) + &p) % &p;
    r.to_u64().unwrap()
}

/// `f(t0) mod P` for a Laurent polynomial.
pub fn eval_mod(f: &LaurentPoly, t0: u64) -> u64 {
    let inv = invmod(t0);
    f.terms().fold(0, |acc, (e, c)| {
        let base = if e >= 0 { powmod(t0, e as u64) } else { powmod(inv, (-e) as u64) };
        (acc + mulmod(reduce(c), base)) % P
    })
}

/// Determinant mod `P` by Gaussian elimination.
pub fn det_mod(mut a: Vec<Vec<u64>>) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| a[i][k] != 0) else { return 0 };
        if piv != k {
            a.swap(piv, k);
            det = (P - det) % P;
        }
        det = mulmod(det, a[k][k]);
        let inv = invmod(a[k][k]);
        for i in k + 1..n {
            let f = mulmod(a[i][k], inv);
            if f == 0 {
                continue;
            }
            for j in k..n {
                let sub = mulmod(f, a[k][j]);
                a[i][j] = (a[i][j] + P - sub) % P;
            }
        }
    }
    det
}

// ---------------------------------------------------------------------------
// Clover graphs by half-edge pairings

/// A graph with `t` trivalent vertices `0..t` followed by `l` leaves.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RawGraph {
    pub trivalent: usize,
    pub leaves: usize,
    pub edges: Vec<(usize, usize)>,
}

impl RawGraph {
    pub fn vertex_count(&self) -> usize {
        self.trivalent + self.leaves
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        v >= self.trivalent
    }

    pub fn connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn betti(&self) -> isize {
        self.edges.len() as isize - self.vertex_count() as isize + 1
    }

    /// Canonical form under relabelling trivalent vertices (leaves follow
    /// their neighbours).
    pub fn canonical(&self) -> Vec<(usize, usize)> {
        let t = self.trivalent;
        let mut best: Option<Vec<(usize, usize)>> = None;
        for perm in permutations(t) {
            let mut edges: Vec<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(a, b)| {
                    let m = |v: usize| if v < t { perm[v] } else { usize::MAX };
                    let (x, y) = (m(a), m(b));
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort();
            if best.as_ref().is_none_or(|b| edges < *b) {
                best = Some(edges);
            }
        }
        best.unwrap_or_default()
    }

    /// Whether `dirs` (one bit per edge, set = reversed) satisfies both
    /// orientation conditions.
    pub fn valid_orientation(&self, dirs: &[(usize, usize)]) -> bool {
        let n = self.vertex_count();
        let (mut inn, mut out) = (vec![0; n], vec![0; n]);
        for (&(a, b), &(x, y)) in self.edges.iter().zip(dirs) {
            if !((x, y) == (a, b) || (x, y) == (b, a)) || self.is_leaf(x) {
                return false;
            }
            out[x] += 1;
            inn[y] += 1;
        }
        (0..self.trivalent).all(|v| inn[v] > 0 && out[v] > 0)
    }

    /// Brute force over all `2^E` orientations.
    pub fn orientable(&self) -> bool {
        let e = self.edges.len();
        (0u64..1 << e).any(|mask| {
            let dirs: Vec<(usize, usize)> = self
                .edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 0 { (a, b) } else { (b, a) })
                .collect();
            self.valid_orientation(&dirs)
        })
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every graph with `e` edges, vertex degrees in `{1, 3}`, loops allowed at
/// trivalent vertices, one representative per isomorphism class.
pub fn all_graphs(e: usize) -> Vec<RawGraph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in 0..=(2 * e) / 3 {
        let l = 2 * e - 3 * t;
        // Half-edge owners: three per trivalent vertex, one per leaf.
        let owners: Vec<usize> = (0..t).flat_map(|v| [v, v, v]).chain(t..t + l).collect();
        let mut pairing = Vec::new();
        let mut used = vec![false; owners.len()];
        matchings(&owners, &mut used, &mut pairing, &mut |edges| {
            let g = RawGraph { trivalent: t, leaves: l, edges: edges.to_vec() };
            let key = (t, g.canonical());
            if seen.insert(key) {
                out.push(g);
            }
        });
    }
    out
}

fn matchings(
    owners: &[usize],
    used: &mut [bool],
    acc: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    let Some(first) = used.iter().position(|u| !u) else {
        emit(acc);
        return;
    };
    used[first] = true;
    for j in first + 1..owners.len() {
        if used[j] {
            continue;
        }
        used[j] = true;
        acc.push((owners[first], owners[j]));
        matchings(owners, used, acc, emit);
        acc.pop();
        used[j] = false;
    }
    used[first] = false;
}

/// A uniformly random half-edge pairing with `t` trivalent vertices and `l` leaves.
pub fn random_graph<R: rand::Rng>(t: usize, l: usize, rng: &mut R) -> RawGraph {
    use rand::seq::SliceRandom;
    let mut owners: Vec<usize> = (0..t).flat_map(|v| [v, v, v]).chain(t..t + l).collect();
    owners.shuffle(rng);
    let edges = owners.chunks(2).map(|c| (c[0], c[1])).collect();
    RawGraph { trivalent: t, leaves: l, edges }
}

// ---------------------------------------------------------------------------
// Small helpers

pub fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn is_pm_one(v: &BigInt) -> bool {
    v.abs().is_one()
}
