#![allow(dead_code)]

use pqder::constructors::builtin_catalog;
use pqder::linalg::{rat, Matrix, Rational};
use pqder::{Algebra, DerivationKind, Element, LinearMap};

/// The same algebra written in the basis given by the columns of `p`.
/// Returns `None` when `p` is singular.
pub fn change_basis(a: &Algebra, p: &Matrix) -> Option<Algebra> {
    let n = a.dim();
    if p.rank() < n {
        return None;
    }
    let cols: Vec<Element> = (0..n).map(|i| Element::new(p.column(i))).collect();
    let mut triples = Vec::new();
    for (i, x) in cols.iter().enumerate() {
        for (j, y) in cols.iter().enumerate() {
            let v = p.solve(a.mul(x, y).coords()).expect("p is invertible");
            for (k, c) in v.into_iter().enumerate() {
                if c != rat(0) {
                    triples.push((i, j, k, c));
                }
            }
        }
    }
    let labels = (0..n).map(|i| format!("f{i}")).collect();
    Some(
        Algebra::from_triples(format!("{}'", a.name()), labels, &triples)
            .expect("basis change keeps associativity"),
    )
}

/// Catalog members small enough for property tests.
pub fn small_catalog() -> Vec<Algebra> {
    builtin_catalog()
        .into_iter()
        .filter(|a| a.dim() <= 6)
        .collect()
}

pub fn element(a: &Algebra, coords: &[i64]) -> Element {
    Element::new(
        (0..a.dim())
            .map(|i| rat(coords[i % coords.len()]))
            .collect(),
    )
}

/// `(p + q) d(xy) = 2p d(x) y + 2q x d(y)` on one pair, or its polarised
/// Jordan form with `y` symmetric.
pub fn naive_identity(
    a: &Algebra,
    d: &LinearMap,
    kind: DerivationKind,
    x: &Element,
    y: &Element,
) -> bool {
    let scale = |c: u64, e: &Element| e.scale(&Rational::from_integer(c.into()));
    if let Some((p, q)) = kind.jordan_pq() {
        let lhs = scale(p + q, &d.apply(&(&a.mul(x, y) + &a.mul(y, x))));
        let (dx, dy) = (d.apply(x), d.apply(y));
        let left = &a.mul(&dx, y) + &a.mul(&dy, x);
        let right = &a.mul(x, &dy) + &a.mul(y, &dx);
        return lhs == &scale(2 * p, &left) + &scale(2 * q, &right);
    }
    let (p, q) = kind.pq().unwrap_or((1, 1));
    let lhs = scale(p + q, &d.apply(&a.mul(x, y)));
    lhs == &scale(2 * p, &a.mul(&d.apply(x), y)) + &scale(2 * q, &a.mul(x, &d.apply(y)))
}

pub fn all_kinds() -> Vec<DerivationKind> {
    use DerivationKind::*;
    vec![
        Ordinary,
        Left,
        Right,
        PQ { p: 0, q: 1 },
        PQ { p: 1, q: 0 },
        PQ { p: 1, q: 2 },
        PQ { p: 2, q: 1 },
        PQ { p: 1, q: 3 },
        JordanPQ { p: 1, q: 2 },
        JordanPQ { p: 2, q: 1 },
        JordanLeft,
        JordanRight,
    ]
}
