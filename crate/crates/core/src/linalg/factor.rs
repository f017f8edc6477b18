//! Factorisation of small-degree polynomials over the rationals.
//!
//! Squarefree decomposition (Yun), rational-root stripping, then Kronecker's
//! interpolation search for the remaining factors. Factor degrees ruled out by
//! the factorisation pattern modulo small primes are never searched. The
//! search is still exponential in the degree, which is why callers pass a
//! degree cap.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::modp::allowed_degrees;
use super::{divisors, rational_roots, Polynomial, Rational};
use crate::error::{Error, Result};

/// Default cap on the degree accepted by [`factor_polynomial`].
pub const DEFAULT_DEGREE_CAP: usize = 12;

/// Monic irreducible factors of `p` with multiplicities, sorted by degree and
/// then coefficients. Their product equals `p` divided by its leading
/// coefficient.
pub fn factor_polynomial(p: &Polynomial, degree_cap: usize) -> Result<Vec<(Polynomial, usize)>> {
    let Some(degree) = p.degree() else {
        return Err(Error::InvalidAlgebra(
            "cannot factor the zero polynomial".into(),
        ));
    };
    if degree > degree_cap {
        return Err(Error::DegreeCapExceeded {
            degree,
            cap: degree_cap,
        });
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(&p.monic()) {
        for factor in squarefree_factors(&part) {
            out.push((factor, mult));
        }
    }
    out.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

/// Yun's algorithm: monic squarefree, pairwise coprime `a_i` with
/// `p = Π a_i^i`. Constant parts are omitted.
fn squarefree_decomposition(p: &Polynomial) -> Vec<(Polynomial, usize)> {
    if p.degree().is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let dp = p.derivative();
    let a0 = Polynomial::gcd(p, &dp);
    let mut b = p.exact_div(&a0);
    let c = dp.exact_div(&a0);
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().is_some_and(|deg| deg > 0) {
        let a = Polynomial::gcd(&b, &d);
        b = b.exact_div(&a);
        let c = d.exact_div(&a);
        d = &c - &b.derivative();
        if a.degree().is_some_and(|deg| deg > 0) {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Irreducible monic factors of a monic squarefree polynomial.
fn squarefree_factors(p: &Polynomial) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let mut rest = p.clone();
    for (root, _) in rational_roots(p) {
        let linear = Polynomial::linear(&root);
        rest = rest.exact_div(&linear);
        out.push(linear);
    }
    if rest.degree().is_some_and(|d| d > 0) {
        kronecker(&rest, &mut out);
    }
    out
}

/// Split a monic polynomial without rational roots into irreducibles.
fn kronecker(p: &Polynomial, out: &mut Vec<Polynomial>) {
    let degree = p.degree().expect("nonzero polynomial");
    // No rational roots: degrees 2 and 3 are irreducible already.
    if degree <= 3 {
        out.push(p.monic());
        return;
    }
    let ints = p.primitive_integer();
    let allowed = allowed_degrees(&ints);
    for d in (2..=degree / 2).filter(|&d| allowed[d]) {
        if let Some(g) = find_factor(&ints, d) {
            let g = g.monic();
            let h = p.exact_div(&g);
            kronecker(&g, out);
            kronecker(&h, out);
            return;
        }
    }
    out.push(p.monic());
}

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Search for an integer factor of exact degree `d` by interpolating through
/// divisors of the values at `d + 1` sample points.
fn find_factor(f: &[BigInt], d: usize) -> Option<Polynomial> {
    let target = Polynomial::from_integers(f);
    // Sample points 0, 1, -1, 2, -2, ...; keep the d+1 with fewest divisors.
    let mut samples: Vec<(BigInt, Vec<BigInt>)> = (0..2 * d + 6)
        .map(|k| {
            let k = k as i64;
            let x = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
            BigInt::from(x)
        })
        .filter_map(|x| {
            let v = eval_int(f, &x);
            // Only reachable when f has an integer root, which callers strip.
            (!v.is_zero()).then(|| (x, divisors(&v)))
        })
        .collect();
    samples.sort_by_key(|(_, divs)| divs.len());
    samples.truncate(d + 1);
    if samples.len() < d + 1 {
        return None;
    }
    let xs: Vec<Rational> = samples
        .iter()
        .map(|(x, _)| Rational::from_integer(x.clone()))
        .collect();
    // Signed choices per point; the first value stays positive, which fixes
    // the overall sign of the candidate.
    let choices: Vec<Vec<BigInt>> = samples
        .iter()
        .enumerate()
        .map(|(i, (_, divs))| {
            let mut c = divs.clone();
            if i > 0 {
                c.extend(divs.iter().map(|x| -x));
            }
            c
        })
        .collect();
    let mut index = vec![0usize; choices.len()];
    loop {
        let ys: Vec<Rational> = index
            .iter()
            .zip(&choices)
            .map(|(&i, c)| Rational::from_integer(c[i].clone()))
            .collect();
        let g = interpolate(&xs, &ys);
        if g.degree() == Some(d) && g.coeffs().iter().all(|c| c.is_integer()) && g.divides(&target)
        {
            return Some(g);
        }
        // Mixed-radix increment.
        let mut pos = 0;
        loop {
            if pos == index.len() {
                return None;
            }
            index[pos] += 1;
            if index[pos] < choices[pos].len() {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}

/// Lagrange interpolation through distinct points.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Polynomial::one();
        let mut denom = Rational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = &basis * &Polynomial::linear(xj);
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}

/// Product of factors raised to their multiplicities.
pub fn expand_factors(factors: &[(Polynomial, usize)]) -> Polynomial {
    factors
        .iter()
        .fold(Polynomial::one(), |acc, (f, m)| &acc * &f.pow(*m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn difference_of_squares() {
        let f = factor_polynomial(&p(&[-1, 0, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(f, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn cube_minus_one() {
        let f = factor_polynomial(&p(&[-1, 0, 0, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(f, vec![(p(&[-1, 1]), 1), (p(&[1, 1, 1]), 1)]);
        assert_eq!(expand_factors(&f), p(&[-1, 0, 0, 1]));
    }

    #[test]
    fn irreducible_quadratic() {
        let f = factor_polynomial(&p(&[1, 0, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(f, vec![(p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn quartic_without_roots_splits() {
        // (x^2 + 1)(x^2 - 2) = x^4 - x^2 - 2
        let f = factor_polynomial(&p(&[-2, 0, -1, 0, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(f, vec![(p(&[-2, 0, 1]), 1), (p(&[1, 0, 1]), 1)]);
        // x^4 + 1 is irreducible over Q.
        let g = factor_polynomial(&p(&[1, 0, 0, 0, 1]), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(g, vec![(p(&[1, 0, 0, 0, 1]), 1)]);
    }

    #[test]
    fn repeated_factors() {
        // 3 (x - 1)^3 (x^2 + x + 1)^2
        let q = &p(&[-1, 1]).pow(3) * &p(&[1, 1, 1]).pow(2);
        let f = factor_polynomial(&q.scale(&rat(3)), DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(f, vec![(p(&[-1, 1]), 3), (p(&[1, 1, 1]), 2)]);
    }

    #[test]
    fn degree_cap_and_zero() {
        assert!(matches!(
            factor_polynomial(&p(&[1, 0, 0, 1]), 2),
            Err(Error::DegreeCapExceeded { degree: 3, cap: 2 })
        ));
        assert!(factor_polynomial(&Polynomial::zero(), 4).is_err());
        assert!(factor_polynomial(&p(&[7]), 4).unwrap().is_empty());
    }
}
