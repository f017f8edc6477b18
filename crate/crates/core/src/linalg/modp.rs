//! Dense polynomials over a small prime field, just enough for distinct-degree
//! factorisation. Coefficients low-first, no trailing zeros.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn degree(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

fn pow(mut b: u64, mut e: u64, l: u64) -> u64 {
    let mut acc = 1;
    b %= l;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % l;
        }
        b = b * b % l;
        e >>= 1;
    }
    acc
}

fn inv(a: u64, l: u64) -> u64 {
    pow(a, l - 2, l)
}

fn sub(a: &[u64], b: &[u64], l: u64) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + l - b.get(i).copied().unwrap_or(0)) % l)
            .collect(),
    )
}

fn mul(a: &[u64], b: &[u64], l: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % l;
        }
    }
    trim(out)
}

fn div_rem(a: &[u64], b: &[u64], l: u64) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead = inv(b[db], l);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i] * lead % l;
        q[i - db] = c;
        if c != 0 {
            for (j, y) in b.iter().enumerate() {
                let k = i - db + j;
                r[k] = (r[k] + l - c * y % l) % l;
            }
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn monic(a: Poly, l: u64) -> Poly {
    match a.last() {
        Some(&lead) => {
            let c = inv(lead, l);
            a.into_iter().map(|x| x * c % l).collect()
        }
        None => a,
    }
}

fn gcd(a: &[u64], b: &[u64], l: u64) -> Poly {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = div_rem(&a, &b, l).1;
        a = b;
        b = r;
    }
    monic(a, l)
}

fn derivative(a: &[u64], l: u64) -> Poly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| (i as u64 % l) * c % l)
            .collect(),
    )
}

fn pow_mod(base: &[u64], mut e: u64, f: &[u64], l: u64) -> Poly {
    let mut acc = vec![1];
    let mut b = div_rem(base, f, l).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = div_rem(&mul(&acc, &b, l), f, l).1;
        }
        b = div_rem(&mul(&b, &b, l), f, l).1;
        e >>= 1;
    }
    acc
}

/// Degrees of the irreducible factors of a monic squarefree `f` mod `l`.
fn distinct_degrees(f: Poly, l: u64) -> Vec<usize> {
    let x = vec![0, 1];
    let mut g = f;
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut i = 1;
    while degree(&g).is_some_and(|d| d >= 2 * i) {
        h = pow_mod(&h, l, &g, l);
        let d = gcd(&g, &sub(&h, &x, l), l);
        let dd = degree(&d).unwrap_or(0);
        if dd > 0 {
            out.extend(std::iter::repeat_n(i, dd / i));
            g = div_rem(&g, &d, l).0;
            h = div_rem(&h, &g, l).1;
        }
        i += 1;
    }
    if let Some(d) = degree(&g).filter(|&d| d > 0) {
        out.push(d);
    }
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `allowed[d]` is false when no factor of degree `d` over the rationals can
/// exist, judged from factorisations modulo a few primes. `f` must be a
/// squarefree integer polynomial.
pub(crate) fn allowed_degrees(f: &[BigInt]) -> Vec<bool> {
    const PRIMES_WANTED: usize = 6;
    let n = f.len() - 1;
    let mut allowed = vec![true; n + 1];
    let mut used = 0;
    for l in (3u64..2000).filter(|&l| is_prime(l)) {
        if used == PRIMES_WANTED || allowed[1..n].iter().all(|a| !a) {
            break;
        }
        let lb = BigInt::from(l);
        let reduced: Poly = f
            .iter()
            .map(|c| {
                let r = ((c % &lb) + &lb) % &lb;
                r.to_u64().expect("residue fits")
            })
            .collect();
        let reduced = trim(reduced);
        if degree(&reduced) != Some(n) {
            continue;
        }
        let reduced = monic(reduced, l);
        if degree(&gcd(&reduced, &derivative(&reduced, l), l)) != Some(0) {
            continue;
        }
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in distinct_degrees(reduced, l) {
            for s in (d..=n).rev() {
                sums[s] |= sums[s - d];
            }
        }
        for (a, s) in allowed.iter_mut().zip(sums) {
            *a &= s;
        }
        used += 1;
    }
    allowed
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn degree_patterns() {
        // x^4 + 1 splits mod every prime but is irreducible over Q.
        let a = allowed_degrees(&ints(&[1, 0, 0, 0, 1]));
        assert!(a[4] && a[0]);
        // (x^2 + 1)(x^2 - 2) keeps its quadratic factors.
        let b = allowed_degrees(&ints(&[-2, 0, -1, 0, 1]));
        assert!(b[2]);
        // x^5 - x - 1 is irreducible and is irreducible mod 5.
        let c = allowed_degrees(&ints(&[-1, -1, 0, 0, 0, 1]));
        assert_eq!(c, vec![true, false, false, false, false, true]);
    }

    #[test]
    fn field_arithmetic() {
        let l = 7;
        let f = vec![1, 0, 1];
        let g = vec![6, 1];
        let (q, r) = div_rem(&mul(&f, &g, l), &g, l);
        assert_eq!((q, r), (f.clone(), vec![]));
        // x^2 + 1 is irreducible mod 7.
        assert_eq!(distinct_degrees(f, l), vec![2]);
        // x^2 - 1 = (x - 1)(x + 1).
        assert_eq!(distinct_degrees(vec![6, 0, 1], l), vec![1, 1]);
    }
}
