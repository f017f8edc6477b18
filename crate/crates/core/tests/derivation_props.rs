mod common;

use proptest::prelude::*;

use common::{all_kinds, change_basis, element, naive_identity, small_catalog};
use pqder::constructors::{builtin, Builtin, NamedGroup};
use pqder::derivation::{check_identity, solve_space};
use pqder::linalg::{rat, Matrix};
use pqder::{DerivationKind, LinearMap};

#[test]
fn solved_maps_satisfy_the_naive_identity_on_every_pair() {
    for a in small_catalog() {
        let basis = a.basis_elements();
        for kind in all_kinds() {
            let space = solve_space(&a, kind).unwrap();
            for (m, d) in space.basis.iter().enumerate() {
                for x in &basis {
                    for y in &basis {
                        assert!(
                            naive_identity(&a, d, kind, x, y),
                            "{} {kind} map {m}",
                            a.name()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn named_kinds_match_their_weights() {
    for a in small_catalog() {
        let same = |k1, k2| {
            assert_eq!(
                solve_space(&a, k1).unwrap().space,
                solve_space(&a, k2).unwrap().space
            )
        };
        same(DerivationKind::Left, DerivationKind::PQ { p: 0, q: 1 });
        same(DerivationKind::Right, DerivationKind::PQ { p: 1, q: 0 });
        same(
            DerivationKind::JordanLeft,
            DerivationKind::JordanPQ { p: 0, q: 1 },
        );
        same(
            DerivationKind::PQ { p: 1, q: 2 },
            DerivationKind::PQ { p: 3, q: 6 },
        );
        same(
            DerivationKind::JordanPQ { p: 2, q: 1 },
            DerivationKind::JordanPQ { p: 4, q: 2 },
        );
    }
}

#[test]
fn inner_derivations_are_solved() {
    for a in small_catalog() {
        let ord = solve_space(&a, DerivationKind::Ordinary).unwrap();
        for x in a.basis_elements() {
            let (l, r) = a.regular_representations(&x);
            let ad = LinearMap::new(l.matrix() - r.matrix()).unwrap();
            assert!(ord.contains(&ad), "{}", a.name());
        }
    }
}

#[test]
fn product_kinds_lie_in_jordan_kinds() {
    for a in small_catalog() {
        for (p, q) in [(1, 2), (2, 1), (0, 1), (1, 0)] {
            let prod = solve_space(&a, DerivationKind::PQ { p, q }).unwrap();
            let jordan = solve_space(&a, DerivationKind::JordanPQ { p, q }).unwrap();
            assert!(
                jordan.space.contains(&prod.space).unwrap(),
                "{} ({p},{q})",
                a.name()
            );
        }
    }
}

#[test]
fn known_dimensions() {
    let m2 = builtin(Builtin::FullMatrix(2)).unwrap();
    assert_eq!(solve_space(&m2, DerivationKind::Ordinary).unwrap().dim(), 3);
    let p = builtin(Builtin::PaperExample).unwrap();
    assert_eq!(
        solve_space(&p, DerivationKind::PQ { p: 1, q: 2 })
            .unwrap()
            .dim(),
        2
    );
    // A commutative semisimple algebra has no nonzero ordinary derivations.
    let c3 = NamedGroup::C3.algebra();
    assert_eq!(solve_space(&c3, DerivationKind::Ordinary).unwrap().dim(), 0);
}

fn invertible_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |xs| {
        // Unit lower-triangular times the random matrix's upper part keeps it invertible.
        let mut m = Matrix::identity(n);
        let mut u = Matrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                let v = rat(xs[i * n + j]);
                if i > j {
                    m = set(&m, i, j, v);
                } else if i < j {
                    u = set(&u, i, j, v);
                }
            }
        }
        &m * &u
    })
}

fn set(m: &Matrix, i: usize, j: usize, v: pqder::linalg::Rational) -> Matrix {
    let mut entries = m.entries().to_vec();
    entries[i * m.cols() + j] = v;
    Matrix::from_entries(m.rows(), m.cols(), entries)
}

fn algebra_and_basis() -> impl Strategy<Value = (usize, Matrix)> {
    let dims: Vec<usize> = small_catalog().iter().map(|a| a.dim()).collect();
    (0..dims.len()).prop_flat_map(move |i| (Just(i), invertible_matrix(dims[i])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spaces_are_basis_independent((idx, p) in algebra_and_basis(), k in 0usize..12) {
        let a = &small_catalog()[idx];
        let b = change_basis(a, &p).unwrap();
        let kind = all_kinds()[k];
        let sa = solve_space(a, kind).unwrap();
        let sb = solve_space(&b, kind).unwrap();
        prop_assert_eq!(sa.dim(), sb.dim());
        // d ↦ P⁻¹ d P carries one space onto the other.
        for d in &sa.basis {
            let cols: Vec<Vec<_>> = (0..a.dim())
                .map(|j| p.solve(&d.matrix().mul_vec(&p.column(j))).unwrap())
                .collect();
            let moved = LinearMap::new(Matrix::from_columns(a.dim(), &cols)).unwrap();
            prop_assert!(sb.contains(&moved));
        }
    }

    #[test]
    fn combinations_stay_in_the_space(idx in 0usize..8, k in 0usize..12, coeffs in prop::collection::vec(-3i64..=3, 1..6), xs in prop::collection::vec(-2i64..=2, 8), ys in prop::collection::vec(-2i64..=2, 8)) {
        let a = &small_catalog()[idx % small_catalog().len()];
        let kind = all_kinds()[k];
        let space = solve_space(a, kind).unwrap();
        prop_assume!(space.dim() > 0);
        let mut m = Matrix::zeros(a.dim(), a.dim());
        for (i, d) in space.basis.iter().enumerate() {
            m = &m + &d.matrix().scale(&rat(coeffs[i % coeffs.len()]));
        }
        let d = LinearMap::new(m).unwrap();
        prop_assert!(check_identity(a, &d, kind).unwrap());
        prop_assert!(naive_identity(a, &d, kind, &element(a, &xs), &element(a, &ys)));
    }
}
