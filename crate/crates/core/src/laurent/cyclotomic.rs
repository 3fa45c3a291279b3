use num_bigint::BigInt;
use num_traits::One;

use super::dense::IntPoly;
use super::poly::LaurentPoly;

/// The `n`-th cyclotomic polynomial, by exact division of `t^n - 1` by
/// `Φ_d` for every proper divisor `d` of `n`.
pub fn cyclotomic(n: usize) -> LaurentPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    LaurentPoly::from_int_poly(&cyclotomic_int(n), 0)
}

pub(crate) fn cyclotomic_int(n: usize) -> IntPoly {
    let mut table: Vec<Option<IntPoly>> = vec![None; n + 1];
    build(n, &mut table)
}

fn build(n: usize, table: &mut Vec<Option<IntPoly>>) -> IntPoly {
    if let Some(p) = &table[n] {
        return p.clone();
    }
    let mut p = &IntPoly::monomial(BigInt::one(), n) - &IntPoly::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi = build(d, table);
        p = p.exact_div(&phi).expect("cyclotomic factors divide t^n - 1");
    }
    table[n] = Some(p.clone());
    p
}
