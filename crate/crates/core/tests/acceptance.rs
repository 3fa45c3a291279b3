//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod oracle;

use std::collections::HashMap;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use knotclover::clover::{self, CloverError, CloverGraph, VertexKind};
use knotclover::knots::{alexander, double_slice_test, fox_milnor_test, KnotDescriptor};
use knotclover::laurent::{unit_circle_roots, IntPoly};
use knotclover::obstruct::{
    analyze_wheel, c1_pair_obstruction, c1_unknot_obstruction, divisibility_check, family_norm, family_poly,
    FamilyIndex, FamilyWitnessSearch, SearchBounds, Sign, WheelSpec,
};
use knotclover::{LaurentPoly, Point, Verdict, Witness};
use num_bigint::BigInt;
use oracle::{big, det_mod, eval_mod, float_circle_root_count, float_circle_spectrum, lp, RawGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tolerance for floating-point comparisons against the exact spectrum.
const SPECTRUM_TOL: f64 = 1e-9;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `1 + s t^k (t-1)^n` by direct binomial expansion, independent of the
/// crate's family constructor.
fn family_oracle(k: i64, n: u32, s: i64) -> LaurentPoly {
    let mut terms: Vec<(i64, BigInt)> = vec![(0, big(1))];
    let mut binom = big(1);
    for j in 0..=n as i64 {
        // (t-1)^n = Σ C(n,j) t^j (-1)^{n-j}
        let sign = if (n as i64 - j) % 2 == 0 { 1 } else { -1 };
        terms.push((k + j, &binom * big(s * sign)));
        binom = binom * big(n as i64 - j) / big(j + 1);
    }
    LaurentPoly::from_terms(terms)
}

fn criterion_1() -> Check {
    let mut checked = 0;
    let sixth = IntPoly::linear_root(1);
    let x_sixth = 2.0 * (std::f64::consts::PI / 3.0).cos();
    for k in -6..=6 {
        for n in 1..=6u32 {
            for sign in Sign::both() {
                let idx = FamilyIndex::new(k, n, sign).unwrap();
                let f = family_poly(&idx);
                ensure(f == family_oracle(k, n, sign.value()), || format!("{idx} expands wrongly"))?;
                let spec = unit_circle_roots(&f).map_err(|e| e.to_string())?;
                ensure(spec.entries.iter().all(|e| e.min_poly == sixth), || format!("{idx}: spectrum {spec}"))?;
                // Float cross-check: every circle root sits at e^{±iπ/3}.
                for (x, _) in float_circle_spectrum(&f, 1e-7) {
                    ensure((x - x_sixth).abs() < 1e-6, || format!("{idx}: float circle root x = {x}"))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} family members, circle roots only at e^{{±iπ/3}}"))
}

fn wheel_grid() -> Vec<WheelSpec> {
    let mut out = Vec::new();
    for n in 2..=8 {
        for k in 0..=8 {
            for s in Sign::both() {
                out.push(WheelSpec::new(n, k, s).unwrap());
            }
        }
    }
    out
}

fn criterion_2() -> Check {
    let grid = wheel_grid();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for w in &grid {
        let a = analyze_wheel(w).map_err(|e| e.to_string())?;
        let b = a.matrix.as_ref().unwrap();
        let n = w.n() as usize;
        // Closed form with s′ = (-1)^{n-1}·sign, pinned by 2x2 and 3x3 expansions.
        let s_prime = w.sign().value() * if n % 2 == 1 { 1 } else { -1 };
        let closed = &lp("t - 1").pow(n) + &LaurentPoly::monomial(s_prime, w.k());
        ensure(a.det_d.associated(&closed), || format!("{w:?}: det D = {}", a.det_d))?;
        let det_b = a.det_b.clone().unwrap();
        let prod = &a.det_d * &a.det_d.conjugate();
        ensure(det_b.associated(&prod), || format!("{w:?}: det B = {det_b}"))?;
        // Modular oracle: det B(t0) by Gaussian elimination, at more
        // points than the span of det B.
        let span = det_b.span() + 2;
        for _ in 0..span.max(40) {
            let t0 = rng.gen_range(2..oracle::P - 1);
            let m: Vec<Vec<u64>> =
                (0..2 * n).map(|i| (0..2 * n).map(|j| eval_mod(b.get(i, j), t0)).collect()).collect();
            let d: Vec<Vec<u64>> = (0..n).map(|i| m[i][n..].to_vec()).collect();
            ensure(det_mod(m) == eval_mod(&det_b, t0), || format!("{w:?}: det B mismatch at {t0}"))?;
            ensure(det_mod(d) == eval_mod(&a.det_d, t0), || format!("{w:?}: det D mismatch at {t0}"))?;
        }
    }
    Ok(format!("{} wheel specs, det D ≐ (t-1)^n + (-1)^(n-1)·sign·t^k, det B ≐ det D·det D★", grid.len()))
}

fn criterion_3() -> Check {
    let t52 = KnotDescriptor::torus(5, 2);
    let knot = KnotDescriptor::sum(t52.clone(), KnotDescriptor::mirror(t52));
    let delta = alexander(&knot).map_err(|e| e.to_string())?;

    // Φ₁₀ = (t^10 - 1)(t - 1) / ((t^5 - 1)(t^2 - 1)), long division by hand.
    let phi10 = {
        let num = &(&lp("t^10 - 1") * &lp("t - 1"));
        let mut rem: Vec<i64> = (0..=11).map(|e| num.coeff(e).try_into().unwrap()).collect();
        let den = [1i64, 0, -1, 0, 0, -1, 0, 1]; // (t^5 - 1)(t^2 - 1), ascending
        let mut q = vec![0i64; 5];
        for d in (0..5).rev() {
            let c = rem[d + 7];
            q[d] = c;
            for (i, &x) in den.iter().enumerate() {
                rem[d + i] -= c * x;
            }
        }
        ensure(rem.iter().all(|&c| c == 0), || "Φ10 division not exact".into())?;
        LaurentPoly::from_coeffs(0, &q)
    };
    ensure(delta.associated(&phi10.pow(2)), || format!("Δ = {delta}"))?;

    let ds = double_slice_test(&delta).map_err(|e| e.to_string())?;
    ensure(ds.verdict == Verdict::Passed, || format!("double slice: {ds}"))?;
    let Some(Witness::ConjugateSquareRoot { f: theta }) = &ds.witness else {
        return Err("double slice: no θ".into());
    };
    ensure(theta.associated(&phi10), || format!("θ = {theta}"))?;

    let c1 = c1_unknot_obstruction(&delta).map_err(|e| e.to_string())?;
    ensure(c1.verdict == Verdict::Obstructed, || format!("c1: {c1}"))?;
    let Some(Witness::CircleRoot { entry }) = &c1.witness else {
        return Err("c1: no circle root witness".into());
    };
    // Expected minimal polynomial of x = z + 1/z, from the float roots of Φ₁₀.
    let xs: Vec<f64> = float_circle_spectrum(&phi10, SPECTRUM_TOL).iter().map(|p| p.0).collect();
    ensure(xs.len() == 2, || format!("oracle found {xs:?}"))?;
    let (b, c) = (-(xs[0] + xs[1]), xs[0] * xs[1]);
    let expected = IntPoly::from_i64s(&[c.round() as i64, b.round() as i64, 1]);
    ensure(expected == "x^2 - x - 1".parse().unwrap(), || format!("oracle min poly {expected}"))?;
    ensure(entry.min_poly == expected, || format!("witness {entry}"))?;
    Ok(format!("Δ ≐ Φ10², double_slice Passed with θ = {theta}, c1_unknot Obstructed by {}", entry.min_poly))
}

fn criterion_4() -> Check {
    let trefoil = lp("t^2 - t + 1");
    let r = fox_milnor_test(&trefoil).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Obstructed, || format!("trefoil: {r}"))?;

    let stevedore = lp("2t^2 - 5t + 2");
    let r = fox_milnor_test(&stevedore).map_err(|e| e.to_string())?;
    ensure(r.witness == Some(Witness::ConjugateSquareRoot { f: lp("2t - 1") }), || format!("stevedore: {r}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for case in 0..50 {
        let deg = rng.gen_range(1..=5);
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-4..=4)).collect();
        if c[deg] == 0 {
            c[deg] = 1;
        }
        // Fix the constant term so that f(1) = ±1.
        let target = if rng.gen_bool(0.5) { 1 } else { -1 };
        c[0] = target - c[1..].iter().sum::<i64>();
        let f = LaurentPoly::from_coeffs(rng.gen_range(-3..=3), &c);
        ensure(f.evaluate(Point::One) == big(target), || "construction".into())?;
        let delta = &f * &f.conjugate();
        let r = fox_milnor_test(&delta).map_err(|e| format!("case {case}, f = {f}: {e}"))?;
        ensure(r.verdict == Verdict::Passed, || format!("case {case}, f = {f}: {r}"))?;
        let Some(Witness::ConjugateSquareRoot { f: g }) = &r.witness else {
            return Err(format!("case {case}: missing witness"));
        };
        ensure((g * &g.conjugate()).associated(&delta), || format!("case {case}: witness {g} does not verify"))?;
    }
    Ok("trefoil Obstructed, Stevedore Passed with 2t - 1, 50/50 random f·f★ Passed".into())
}

fn to_clover(g: &RawGraph) -> CloverGraph {
    let mut kinds = vec![VertexKind::Trivalent; g.trivalent];
    kinds.extend(std::iter::repeat_n(VertexKind::leaf(), g.leaves));
    CloverGraph::new(kinds, g.edges.clone()).expect("valid degrees")
}

/// Orientation agreement for one graph; returns whether it was orientable.
fn check_graph(g: &RawGraph, brute: bool) -> Result<bool, String> {
    let cg = to_clover(g);
    let result = clover::orient_edges(&cg);
    let truth = if brute { Some(g.orientable()) } else { None };
    match result {
        Ok(o) => {
            ensure(g.valid_orientation(&o.directions), || format!("{g:?}: bad orientation {:?}", o.directions))?;
            ensure(truth != Some(false), || format!("{g:?}: oracle says infeasible"))?;
            ensure(clover::orient_edges(&cg).unwrap() == o, || "nondeterministic".into())?;
            let p = clover::split_link(&cg, &o).map_err(|e| e.to_string())?;
            ensure(p.components.len() == 2 * g.edges.len(), || "partition size".into())?;
            Ok(true)
        }
        Err(CloverError::Infeasible(_)) => {
            ensure(truth != Some(true), || format!("{g:?}: oracle found an orientation"))?;
            Ok(false)
        }
        Err(e) => Err(format!("{g:?}: {e}")),
    }
}

fn criterion_5() -> Check {
    let (mut classes, mut feasible, mut infeasible) = (0, 0, 0);
    for e in 1..=6 {
        for g in oracle::all_graphs(e) {
            if !g.connected() {
                continue;
            }
            classes += 1;
            let ok = check_graph(&g, true)?;
            ensure(ok == (g.betti() >= 1), || format!("{g:?}: β₁ = {} but orientable = {ok}", g.betti()))?;
            if ok {
                feasible += 1;
            } else {
                infeasible += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut random = 0;
    while random < 100 {
        let e = rng.gen_range(3..=12);
        let t = rng.gen_range(1..=(2 * e) / 3);
        let l = 2 * e - 3 * t;
        let g = oracle::random_graph(t, l, &mut rng);
        if !g.connected() || g.betti() < 1 {
            continue;
        }
        ensure(check_graph(&g, true)?, || format!("{g:?}: no orientation"))?;
        random += 1;
    }
    Ok(format!(
        "{classes} connected classes with E ≤ 6 ({feasible} with β₁ ≥ 1 oriented, {infeasible} trees infeasible), {random} random E ≤ 12"
    ))
}

fn criterion_6() -> Check {
    let deltas = [lp("1"), lp("t^2 - t + 1"), lp("2t^2 - 5t + 2"), knotclover::laurent::cyclotomic(10).pow(2)];
    let search = FamilyWitnessSearch::new(SearchBounds::default()).map_err(|e| e.to_string())?;
    let mut searched = 0;
    let mut cache: HashMap<WheelSpec, LaurentPoly> = HashMap::new();
    for w in wheel_grid() {
        let ratio = cache.entry(w).or_insert_with(|| analyze_wheel(&w).unwrap().ratio).clone();
        for d in &deltas {
            let d2 = d * &ratio;
            let r = c1_pair_obstruction(d, &d2).map_err(|e| e.to_string())?;
            ensure(r.verdict == Verdict::Inconclusive, || format!("{w:?}, Δ = {d}: {r}"))?;

            let r = divisibility_check(d, &d2).map_err(|e| e.to_string())?;
            ensure(
                r.witness == Some(Witness::Quotient { quotient: ratio.clone() }),
                || format!("{w:?}, Δ = {d}: {r}"),
            )?;

            if w.n() <= 4 {
                let r = search.search(d, &d2).map_err(|e| e.to_string())?;
                let Some(Witness::FamilyPair { theta, theta_prime }) = &r.witness else {
                    return Err(format!("{w:?}, Δ = {d}: search {r}"));
                };
                let lhs = &d2 * &family_norm(theta_prime);
                let rhs = d * &family_norm(theta);
                ensure(lhs.associated(&rhs), || format!("{w:?}: witness does not verify"))?;
                searched += 1;
            }
        }
    }
    Ok(format!(
        "{} (wheel, Δ) pairs Inconclusive with exact quotient; {searched} searches found verified (θ, θ′)",
        cache.len() * deltas.len()
    ))
}

fn random_circle_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let pool: Vec<LaurentPoly> = [1, 2, 3, 4, 5, 6, 8, 10, 12]
        .iter()
        .map(|&n| knotclover::laurent::cyclotomic(n))
        .chain(["t^2 - 3t + 1", "t^2 + 3t + 1", "t^4 - t^3 - t^2 - t + 1", "t^4 + t^3 - 3t^2 + t + 1"].map(lp))
        .collect();
    loop {
        let mut f = LaurentPoly::one();
        let mut deg = 0;
        let factors = rng.gen_range(1..=4);
        for _ in 0..factors {
            let g = if rng.gen_bool(0.75) {
                pool[rng.gen_range(0..pool.len())].clone()
            } else {
                let d = rng.gen_range(1..=3);
                let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-3..=3)).collect();
                if c[d] == 0 {
                    c[d] = 1;
                }
                if c[0] == 0 {
                    c[0] = -1;
                }
                LaurentPoly::from_coeffs(0, &c)
            };
            let gd = g.span() - 1;
            if deg + gd > 6 {
                continue;
            }
            deg += gd;
            f = &f * &g;
        }
        if deg >= 1 {
            let unit = LaurentPoly::monomial(if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(-3..=3));
            return &f * &unit;
        }
    }
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut with_roots = 0;
    for case in 0..100 {
        let f = random_circle_poly(&mut rng);
        let exact = unit_circle_roots(&f).map_err(|e| e.to_string())?;
        let float = float_circle_spectrum(&f, SPECTRUM_TOL);
        ensure(exact.root_count() == float_circle_root_count(&f, SPECTRUM_TOL), || {
            format!("case {case}, f = {f}: exact {exact} vs float {float:?}")
        })?;
        ensure(exact.entries.len() == float.len(), || format!("case {case}, f = {f}: {exact} vs {float:?}"))?;
        for (e, (x, m)) in exact.entries.iter().zip(&float) {
            ensure((e.x_approx - x).abs() < SPECTRUM_TOL && e.multiplicity == *m, || {
                format!("case {case}, f = {f}: {e} vs ({x}, {m})")
            })?;
        }
        if !exact.is_empty() {
            with_roots += 1;
        }
    }
    Ok(format!("100 polynomials agree ({with_roots} with circle roots), tolerance {SPECTRUM_TOL:e}"))
}

fn main() {
    let criteria: [(u32, &str, u64, fn() -> Check); 7] = [
        (1, "family roots on the unit circle are sixth roots of unity", 10, criterion_1),
        (2, "wheel determinant closed form", 30, criterion_2),
        (3, "T(5,2) # -T(5,2) witness", 1, criterion_3),
        (4, "Fox-Milnor sanity", 30, criterion_4),
        (5, "clover orientations", 60, criterion_5),
        (6, "wheel ratio consistency", 60, criterion_6),
        (7, "exact spectrum vs floating-point roots", 60, criterion_7),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(limit) => Err(format!("{msg}; exceeded {limit} s")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {id} PASS [{:.2}s < {limit}s] {name}: {msg}", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {id} FAIL [{:.2}s] {name}: {msg}", elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
