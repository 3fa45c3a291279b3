//! Text syntax for one-variable polynomials: sums of monomials such as
//! `1 - t + t^2`, `t^-2 + 3`, `2*t^(-1) - 5t`. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Parses `input` into `(exponent, coefficient)` pairs in input order.
/// Repeated exponents are left for the caller to combine.
pub(crate) fn parse_terms(input: &str, var: char) -> Result<Vec<(i64, BigInt)>> {
    let chars: Vec<char> = input
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    let fail = |reason: &str| Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    if chars.is_empty() {
        return Err(fail("empty input"));
    }
    let words: Vec<&str> = input.split_whitespace().collect();
    if words.windows(2).any(|w| {
        w[0].ends_with(|c: char| c.is_ascii_digit()) && w[1].starts_with(|c: char| c.is_ascii_digit())
    }) {
        return Err(fail("digits separated by whitespace"));
    }

    let mut terms = Vec::new();
    let mut i = 0;
    let mut first = true;
    while i < chars.len() {
        let mut negative = false;
        if chars[i] == '+' || chars[i] == '-' {
            negative = chars[i] == '-';
            i += 1;
        } else if !first {
            return Err(fail("expected '+' or '-' between terms"));
        }
        first = false;

        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: Option<BigInt> = if i > start {
            let digits: String = chars[start..i].iter().collect();
            Some(digits.parse().map_err(|_| fail("bad coefficient"))?)
        } else {
            None
        };

        if i < chars.len() && chars[i] == '*' {
            if coeff.is_none() {
                return Err(fail("'*' without a coefficient"));
            }
            i += 1;
            if i >= chars.len() || chars[i] != var {
                return Err(fail(&format!("expected '{var}' after '*'")));
            }
        }

        let mut exp = 0i64;
        if i < chars.len() && chars[i] == var {
            i += 1;
            exp = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let paren = i < chars.len() && chars[i] == '(';
                if paren {
                    i += 1;
                }
                let mut eneg = false;
                if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                    eneg = chars[i] == '-';
                    i += 1;
                }
                let es = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if es == i {
                    return Err(fail("missing exponent after '^'"));
                }
                let digits: String = chars[es..i].iter().collect();
                let e: i64 = digits.parse().map_err(|_| fail("exponent out of range"))?;
                exp = if eneg { -e } else { e };
                if paren {
                    if i >= chars.len() || chars[i] != ')' {
                        return Err(fail("unclosed '('"));
                    }
                    i += 1;
                }
            }
        } else if coeff.is_none() {
            return Err(fail("expected a coefficient or a monomial"));
        }

        let mut c = coeff.unwrap_or_else(BigInt::one);
        if negative {
            c = -c;
        }
        terms.push((exp, c));
    }
    Ok(terms)
}

/// Renders nonzero terms in the given order.
pub(crate) fn write_terms(terms: &[(i64, BigInt)], var: char) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in terms.iter().enumerate() {
        debug_assert!(!c.is_zero());
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if *e == 0 {
            out.push_str(&a.to_string());
            continue;
        }
        if !a.is_one() {
            out.push_str(&a.to_string());
        }
        out.push(var);
        if *e != 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}
