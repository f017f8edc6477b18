//! Exact linear algebra over the rationals.
//!
//! Everything here works on [`Rational`] entries with arbitrary-precision
//! numerators and denominators. Elimination always pivots on the first nonzero
//! entry in column order, so every routine is deterministic.

mod echelon;
mod factor;
mod matrix;
mod modp;
mod poly;
mod subspace;

pub use factor::{expand_factors, factor_polynomial, DEFAULT_DEGREE_CAP};
pub use matrix::{char_poly_rational_roots, Matrix, Rref};
pub use poly::{rational_roots, Polynomial};
pub use subspace::{Subspace, SubspaceOps};

pub(crate) use echelon::Echelon;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` in lowest terms. Panics if `den` is zero.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"n"` or `"n/d"`; the denominator must be a nonzero integer.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("bad numerator in {text:?}"))?;
    let den: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| format!("bad denominator in {text:?}"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"num/den"` form, with the denominator omitted when it is 1.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

pub(crate) fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Positive divisors of a nonzero integer, ascending.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(!n.is_zero(), "divisors of zero requested");
    let mut out = vec![BigInt::one()];
    for (prime, exp) in prime_factors(&n.abs()) {
        let mut next = Vec::with_capacity(out.len() * (exp + 1));
        for d in &out {
            let mut power = d.clone();
            next.push(power.clone());
            for _ in 0..exp {
                power *= &prime;
                next.push(power.clone());
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Trial division; the bound shrinks as factors are removed.
fn prime_factors(n: &BigInt) -> Vec<(BigInt, usize)> {
    if let Ok(small) = u128::try_from(n) {
        return prime_factors_u128(small)
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect();
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 1;
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}

fn prime_factors_u128(mut rest: u128) -> Vec<(u128, usize)> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= rest {
        let mut e = 0;
        while rest.is_multiple_of(d) {
            rest /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(format_rational(&frac(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn divisor_lists() {
        let d: Vec<i64> = divisors(&BigInt::from(-12))
            .iter()
            .map(|b| b.try_into().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&BigInt::from(1)).len(), 1);
    }
}
