use std::collections::BTreeMap;

use proptest::prelude::*;

use pqder::linalg::{
    expand_factors, factor_polynomial, frac, rat, Matrix, Polynomial, Rational, Subspace,
};

fn small_matrix(max_dim: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..=3, r * c)
            .prop_map(move |xs| Matrix::from_entries(r, c, xs.into_iter().map(rat).collect()))
    })
}

fn square_matrix(max_dim: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec((-4i64..=4, 1i64..=2), n * n).prop_map(move |xs| {
            Matrix::from_entries(n, n, xs.into_iter().map(|(a, b)| frac(a, b)).collect())
        })
    })
}

/// Permutation expansion of the determinant.
fn leibniz_det(m: &Matrix) -> Rational {
    fn go(
        m: &Matrix,
        row: usize,
        used: &mut Vec<bool>,
        sign: i64,
        acc: Rational,
        out: &mut Rational,
    ) {
        let n = m.rows();
        if row == n {
            *out += acc * rat(sign);
            return;
        }
        let mut flips = 0;
        for col in 0..n {
            if used[col] {
                continue;
            }
            // Inversions contributed by picking `col` now: unused columns left of it.
            let s = if flips % 2 == 0 { sign } else { -sign };
            used[col] = true;
            go(
                m,
                row + 1,
                used,
                s,
                acc.clone() * m[(row, col)].clone(),
                out,
            );
            used[col] = false;
            flips += 1;
        }
    }
    let mut out = rat(0);
    go(m, 0, &mut vec![false; m.rows()], 1, rat(1), &mut out);
    out
}

fn shifted(m: &Matrix, t: i64) -> Matrix {
    let n = m.rows();
    &Matrix::identity(n).scale(&rat(t)) - m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in small_matrix(6)) {
        let k = m.nullspace();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn canonical_basis_ignores_spanning_set(m in small_matrix(5), mix in prop::collection::vec(-2i64..=2, 25)) {
        let rows = m.row_vectors();
        let a = Subspace::span(m.cols(), rows.clone());
        // Integer recombinations of the rows, plus the rows themselves, in reverse.
        let mut others: Vec<Vec<Rational>> = (0..rows.len())
            .map(|i| {
                let mut v = vec![rat(0); m.cols()];
                for (j, r) in rows.iter().enumerate() {
                    let c = rat(mix[(i * 5 + j) % mix.len()]);
                    for (x, y) in v.iter_mut().zip(r) {
                        *x += c.clone() * y;
                    }
                }
                v
            })
            .collect();
        others.extend(rows.iter().rev().cloned());
        let b = Subspace::span(m.cols(), others);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.dim(), m.rank());
    }

    #[test]
    fn char_poly_matches_determinants(m in square_matrix(8)) {
        let p = m.char_poly();
        prop_assert_eq!(p.degree(), Some(m.rows()));
        prop_assert_eq!(p.leading(), rat(1));
        for t in -2..=2 {
            prop_assert_eq!(p.eval(&rat(t)), shifted(&m, t).determinant());
        }
        prop_assert!(p.eval_matrix(&m).is_zero());
    }

    #[test]
    fn determinant_matches_permutation_expansion(m in square_matrix(5)) {
        prop_assert_eq!(m.determinant(), leibniz_det(&m));
    }

    #[test]
    fn factoring_recovers_known_irreducibles(picks in prop::collection::vec((0usize..POOL.len(), 1usize..=2), 1..4)) {
        let mut expected: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        let mut p = Polynomial::one();
        let mut degree = 0;
        for (i, m) in picks {
            let f = Polynomial::from_i64(POOL[i]);
            degree += f.degree().unwrap() * m;
            if degree > 12 {
                break;
            }
            p = &p * &f.pow(m);
            *expected.entry(POOL[i].to_vec()).or_default() += m;
        }
        let scaled = p.scale(&frac(-3, 2));
        let factors = factor_polynomial(&scaled, 12).unwrap();
        prop_assert_eq!(expand_factors(&factors), p.clone());
        let got: BTreeMap<Vec<i64>, usize> = factors
            .iter()
            .map(|(f, m)| (f.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect(), *m))
            .collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn ext_gcd_bezout(a in prop::collection::vec(-3i64..=3, 1..6), b in prop::collection::vec(-3i64..=3, 1..6)) {
        let (a, b) = (Polynomial::from_i64(&a), Polynomial::from_i64(&b));
        prop_assume!(!a.is_zero() || !b.is_zero());
        let (g, s, t) = Polynomial::ext_gcd(&a, &b);
        prop_assert_eq!(&(&s * &a) + &(&t * &b), g.clone());
        prop_assert!(g.divides(&a) && g.divides(&b));
    }
}

/// Monic irreducibles over Q, low coefficient first.
const POOL: [&[i64]; 8] = [
    &[0, 1],
    &[-1, 1],
    &[2, 1],
    &[1, 0, 1],
    &[-2, 0, 1],
    &[1, 1, 1],
    &[-2, 0, 0, 1],
    &[1, 0, 0, 0, 1],
];

#[test]
fn degree_cap_is_enforced() {
    let p = Polynomial::from_i64(&[1, 0, 0, 0, 0, 1]);
    assert!(factor_polynomial(&p, 4).is_err());
    assert_eq!(factor_polynomial(&p, 5).unwrap().len(), 2);
}

#[test]
fn subspace_lattice() {
    let e = |i: usize| {
        let mut v = vec![rat(0); 4];
        v[i] = rat(1);
        v
    };
    let u = Subspace::span(4, [e(0), e(1)]);
    let w = Subspace::span(4, [e(1), e(2)]);
    assert_eq!(u.intersection(&w).unwrap(), Subspace::span(4, [e(1)]));
    assert_eq!(u.sum(&w).unwrap().dim(), 3);
    assert!(u.sum(&w).unwrap().contains(&u).unwrap());
    assert!(Subspace::try_span(3, [e(0)]).is_err());
}
