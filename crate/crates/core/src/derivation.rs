//! Linear systems for derivation-type maps, the direct identity oracle, and
//! the iterated Leibniz identities satisfied by (p,q)-derivations.
//!
//! A map `d` is a (p,q)-derivation when
//! `(p+q)·d(xy) = 2p·d(x)·y + 2q·x·d(y)` for all `x, y`; ordinary derivations
//! are the weights `p = q`. The Jordan variants impose the identity only on
//! squares. Over ℚ that is equivalent to its polarisation
//! `(p+q)·d(xy + yx) = 2p·d(x)y + 2q·x·d(y) + 2p·d(y)x + 2q·y·d(x)`,
//! which is linear and is what gets assembled.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Algebra, Element, Ideal, LinearMap};
use crate::error::{Error, Result};
use crate::linalg::{char_poly_rational_roots, rat, Echelon, Matrix, Rational, Subspace};

/// Which identity a map is asked to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DerivationKind {
    Ordinary,
    PQ {
        p: u64,
        q: u64,
    },
    JordanPQ {
        p: u64,
        q: u64,
    },
    /// Same identity as `PQ { p: 0, q: 1 }`.
    Left,
    /// Same identity as `PQ { p: 1, q: 0 }`.
    Right,
    /// Same identity as `JordanPQ { p: 0, q: 1 }`.
    JordanLeft,
    /// Same identity as `JordanPQ { p: 1, q: 0 }`.
    JordanRight,
}

/// The data an identity check needs: weights and whether only squares count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Identity {
    p: u64,
    q: u64,
    jordan: bool,
}

impl DerivationKind {
    pub fn validate(self) -> Result<Self> {
        if let Self::PQ { p, q } | Self::JordanPQ { p, q } = self {
            if p == q {
                return Err(Error::InvalidKind(format!(
                    "p = q = {p} is not allowed; use the ordinary kind instead"
                )));
            }
            // p ≠ q already rules out p + q = 0 for unsigned weights.
        }
        Ok(self)
    }

    /// `(p, q)` for the product-identity kinds.
    pub fn pq(self) -> Option<(u64, u64)> {
        match self {
            Self::PQ { p, q } => Some((p, q)),
            Self::Left => Some((0, 1)),
            Self::Right => Some((1, 0)),
            _ => None,
        }
    }

    /// `(p, q)` for the Jordan kinds.
    pub fn jordan_pq(self) -> Option<(u64, u64)> {
        match self {
            Self::JordanPQ { p, q } => Some((p, q)),
            Self::JordanLeft => Some((0, 1)),
            Self::JordanRight => Some((1, 0)),
            _ => None,
        }
    }

    pub fn is_jordan(self) -> bool {
        self.jordan_pq().is_some()
    }

    fn identity(self) -> Result<Identity> {
        let kind = self.validate()?;
        Ok(match kind {
            Self::Ordinary => Identity {
                p: 1,
                q: 1,
                jordan: false,
            },
            _ => match (kind.pq(), kind.jordan_pq()) {
                (Some((p, q)), _) => Identity {
                    p,
                    q,
                    jordan: false,
                },
                (_, Some((p, q))) => Identity { p, q, jordan: true },
                _ => unreachable!("every kind is ordinary, product or Jordan"),
            },
        })
    }
}

impl fmt::Display for DerivationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Ordinary => write!(f, "ordinary"),
            Self::PQ { p, q } => write!(f, "pq({p},{q})"),
            Self::JordanPQ { p, q } => write!(f, "jordan({p},{q})"),
            Self::Left => write!(f, "left"),
            Self::Right => write!(f, "right"),
            Self::JordanLeft => write!(f, "jordan-left"),
            Self::JordanRight => write!(f, "jordan-right"),
        }
    }
}

impl FromStr for DerivationKind {
    type Err = Error;

    /// Accepts `p,q`, `pq(p,q)`, `jordan:p,q`, `jordan(p,q)`, `ordinary`,
    /// `left`, `right`, `jordan-left` and `jordan-right`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let pair = |body: &str| -> Result<(u64, u64)> {
            let (p, q) = body
                .split_once(',')
                .ok_or_else(|| Error::InvalidKind(format!("expected `p,q`, got `{body}`")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidKind(format!("bad weight `{x}` in `{s}`")))
            };
            Ok((parse(p)?, parse(q)?))
        };
        let kind = match s.to_ascii_lowercase().as_str() {
            "ordinary" => Self::Ordinary,
            "left" => Self::Left,
            "right" => Self::Right,
            "jordan-left" | "jordan_left" => Self::JordanLeft,
            "jordan-right" | "jordan_right" => Self::JordanRight,
            other => {
                if let Some(body) = other.strip_prefix("jordan:") {
                    let (p, q) = pair(body)?;
                    Self::JordanPQ { p, q }
                } else if let Some(body) = other
                    .strip_prefix("jordan(")
                    .and_then(|b| b.strip_suffix(')'))
                {
                    let (p, q) = pair(body)?;
                    Self::JordanPQ { p, q }
                } else if let Some(body) =
                    other.strip_prefix("pq(").and_then(|b| b.strip_suffix(')'))
                {
                    let (p, q) = pair(body)?;
                    Self::PQ { p, q }
                } else {
                    let (p, q) = pair(other)?;
                    Self::PQ { p, q }
                }
            }
        };
        kind.validate()
    }
}

/// A solved space of maps in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub algebra: String,
    pub kind: DerivationKind,
    /// Canonical subspace of `ℚ^(n²)` over the row-major map entries.
    pub space: Subspace,
    pub basis: Vec<LinearMap>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, d: &LinearMap) -> bool {
        self.space.contains_vector(d.matrix().entries())
    }
}

fn weight(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Unknown index of matrix entry `d[row][col]`.
#[inline]
fn unknown(n: usize, row: usize, col: usize) -> usize {
    row * n + col
}

/// Rows for `(p+q)·d(e_i e_j) − 2p·d(e_i)e_j − 2q·e_i d(e_j)`, one per output
/// coordinate, accumulated into `rows` (which must hold `n` zero rows).
fn add_product_rows(
    a: &Algebra,
    p: &Rational,
    q: &Rational,
    i: usize,
    j: usize,
    rows: &mut [Vec<Rational>],
) {
    let n = a.dim();
    let s = p + q;
    let two_p = p * rat(2);
    let two_q = q * rat(2);
    // (p+q) d(e_i e_j)_l = (p+q) Σ_m c[i][j][m] d[l][m]
    for (m, c) in a.basis_product(i, j).iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let coeff = &s * c;
        for (l, row) in rows.iter_mut().enumerate() {
            row[unknown(n, l, m)] += &coeff;
        }
    }
    for k in 0..n {
        // (d(e_i) e_j)_l = Σ_k d[k][i] c[k][j][l]
        if !two_p.is_zero() {
            for (l, c) in a.basis_product(k, j).iter().enumerate() {
                if !c.is_zero() {
                    rows[l][unknown(n, k, i)] -= &two_p * c;
                }
            }
        }
        // (e_i d(e_j))_l = Σ_k d[k][j] c[i][k][l]
        if !two_q.is_zero() {
            for (l, c) in a.basis_product(i, k).iter().enumerate() {
                if !c.is_zero() {
                    rows[l][unknown(n, k, j)] -= &two_q * c;
                }
            }
        }
    }
}

/// Invoke `f` with each block of `n` constraint rows, one block per basis pair.
fn for_each_constraint_block(
    a: &Algebra,
    identity: Identity,
    mut f: impl FnMut(Vec<Vec<Rational>>),
) {
    let n = a.dim();
    let (p, q) = (weight(identity.p), weight(identity.q));
    for i in 0..n {
        let start = if identity.jordan { i } else { 0 };
        for j in start..n {
            let mut rows = vec![vec![Rational::zero(); n * n]; n];
            add_product_rows(a, &p, &q, i, j, &mut rows);
            if identity.jordan && i != j {
                add_product_rows(a, &p, &q, j, i, &mut rows);
            }
            f(rows);
        }
    }
}

/// Linear conditions on the `n²` entries of `d` (row-major, `d[row][col]`
/// with column `j` the image of `e_j`). Product kinds contribute one block per
/// ordered basis pair, Jordan kinds one per unordered pair.
pub fn assemble_constraints(a: &Algebra, kind: DerivationKind) -> Result<Matrix> {
    let identity = kind.identity()?;
    let mut all = Vec::new();
    for_each_constraint_block(a, identity, |rows| all.extend(rows));
    let n = a.dim();
    Ok(if all.is_empty() {
        Matrix::zeros(0, n * n)
    } else {
        Matrix::from_rows(all)
    })
}

/// The space of maps of the given kind, re-verified against
/// [`check_identity`].
pub fn solve_space(a: &Algebra, kind: DerivationKind) -> Result<DerivationSpace> {
    let identity = kind.identity()?;
    let n = a.dim();
    let mut echelon = Echelon::new(n * n);
    for_each_constraint_block(a, identity, |rows| {
        for row in rows {
            if echelon.rank() < n * n && row.iter().any(|x| !x.is_zero()) {
                echelon.insert(row);
            }
        }
    });
    let space = Subspace::span(n * n, echelon.kernel_vectors());
    let basis: Vec<LinearMap> = space
        .basis()
        .iter()
        .map(|v| LinearMap::from_flat(n, v.clone()))
        .collect();
    for (idx, d) in basis.iter().enumerate() {
        if !check_identity(a, d, kind)? {
            return Err(Error::Internal(format!(
                "solved {kind} basis map {idx} on {} fails the direct identity check",
                a.name()
            )));
        }
    }
    Ok(DerivationSpace {
        algebra: a.name().to_string(),
        kind,
        space,
        basis,
    })
}

/// Residual of the defining identity at one basis pair, evaluated through
/// [`Algebra::mul`] only.
fn identity_residual(
    a: &Algebra,
    d: &LinearMap,
    identity: Identity,
    x: &Element,
    y: &Element,
) -> Element {
    let p = weight(identity.p);
    let q = weight(identity.q);
    let two = rat(2);
    let term = |x: &Element, y: &Element| -> Element {
        let lhs = d.apply(&a.mul(x, y)).scale(&(&p + &q));
        let right =
            &a.mul(&d.apply(x), y).scale(&(&two * &p)) + &a.mul(x, &d.apply(y)).scale(&(&two * &q));
        &lhs - &right
    };
    if identity.jordan {
        &term(x, y) + &term(y, x)
    } else {
        term(x, y)
    }
}

/// Whether `d` satisfies the identity of `kind` on every basis pair. Does not
/// touch the assembled constraint matrix.
pub fn check_identity(a: &Algebra, d: &LinearMap, kind: DerivationKind) -> Result<bool> {
    Ok(identity_witness(a, d, kind)?.is_none())
}

/// First basis pair `(i, j)` where the identity fails, if any.
pub fn identity_witness(
    a: &Algebra,
    d: &LinearMap,
    kind: DerivationKind,
) -> Result<Option<(usize, usize)>> {
    let identity = kind.identity()?;
    if d.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: d.dim(),
        });
    }
    let basis = a.basis_elements();
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            if identity.jordan && j < i {
                continue;
            }
            if !identity_residual(a, d, identity, x, y).is_zero() {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

fn check_weights(p: u64, q: u64) -> Result<()> {
    DerivationKind::PQ { p, q }.validate().map(|_| ())
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// Both sides of the iterated product rule
/// `dⁿ(a₁a₂) = (2/(p+q))ⁿ Σₖ C(n,k) p^(n−k) q^k d^(n−k)(a₁) d^k(a₂)`
/// with `0⁰ = 1` and `d⁰ = id`.
pub fn leibniz_iterate(
    a: &Algebra,
    d: &LinearMap,
    a1: &Element,
    a2: &Element,
    n: usize,
    p: u64,
    q: u64,
) -> Result<(Element, Element)> {
    check_weights(p, q)?;
    if n == 0 {
        return Err(Error::InvalidKind(
            "the iteration count must be at least 1".into(),
        ));
    }
    let lhs = d.apply_power(&a.mul(a1, a2), n);
    let (pw, qw) = (weight(p), weight(q));
    let mut sum = a.zero_element();
    for k in 0..=n {
        // num_traits::pow gives 0^0 = 1.
        let coeff = Rational::from_integer(binomial(n, k))
            * num_traits::pow(pw.clone(), n - k)
            * num_traits::pow(qw.clone(), k);
        if coeff.is_zero() {
            continue;
        }
        let term = a.mul(&d.apply_power(a1, n - k), &d.apply_power(a2, k));
        sum = &sum + &term.scale(&coeff);
    }
    let factor = num_traits::pow(rat(2) / (&pw + &qw), n);
    Ok((lhs, sum.scale(&factor)))
}

/// `n! · (2/(p+q))^((n²+n−2)/2) · q^((n²−n)/2) · p^(n−1)`, with `0⁰ = 1`.
pub fn lemma1_coefficient(n: usize, p: u64, q: u64) -> Result<Rational> {
    if p + q == 0 {
        return Err(Error::InvalidKind("p + q must be positive".into()));
    }
    if n == 0 {
        return Err(Error::InvalidKind("n must be at least 1".into()));
    }
    let factorial: BigInt = (1..=n).map(BigInt::from).product();
    let ratio = rat(2) / (weight(p) + weight(q));
    Ok(Rational::from_integer(factorial)
        * num_traits::pow(ratio, (n * n + n - 2) / 2)
        * num_traits::pow(weight(q), (n * n - n) / 2)
        * num_traits::pow(weight(p), n - 1))
}

/// Whether `dⁿ(ιⁿ) − lemma1_coefficient(n,p,q)·d(ι)ⁿ` lies in `ideal`, with
/// left-nested powers.
pub fn lemma1_membership(
    a: &Algebra,
    d: &LinearMap,
    ideal: &Ideal,
    iota: &Element,
    n: usize,
    p: u64,
    q: u64,
) -> Result<bool> {
    Ok(ideal.contains(&lemma1_difference(a, d, ideal, iota, n, p, q)?))
}

/// The element whose membership [`lemma1_membership`] tests.
pub fn lemma1_difference(
    a: &Algebra,
    d: &LinearMap,
    ideal: &Ideal,
    iota: &Element,
    n: usize,
    p: u64,
    q: u64,
) -> Result<Element> {
    if !ideal.contains(iota) {
        return Err(Error::IotaNotInIdeal);
    }
    let coeff = lemma1_coefficient(n, p, q)?;
    let lhs = d.apply_power(&a.power(iota, n), n);
    let rhs = a.power(&d.apply(iota), n).scale(&coeff);
    Ok(&lhs - &rhs)
}

/// Composition of two maps and what is known about it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    /// `d1 ∘ d2`.
    pub composition: LinearMap,
    pub is_ordinary_derivation: bool,
    pub range: Subspace,
}

pub fn compose_and_classify(a: &Algebra, d1: &LinearMap, d2: &LinearMap) -> Result<Composition> {
    let composition = d1.compose(d2);
    let is_ordinary_derivation = check_identity(a, &composition, DerivationKind::Ordinary)?;
    let range = composition.range();
    Ok(Composition {
        composition,
        is_ordinary_derivation,
        range,
    })
}

/// A rational eigenvalue and its full eigenspace (kernel for `λ = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenpair {
    pub value: Rational,
    pub space: Subspace,
}

/// Every rational eigenvalue of `d` with its exact eigenspace, ascending.
pub fn rational_eigenpairs(d: &LinearMap) -> Vec<Eigenpair> {
    let n = d.dim();
    let (_, roots) = char_poly_rational_roots(d.matrix());
    roots
        .into_iter()
        .map(|(value, _)| {
            let shifted = d.matrix() - &Matrix::identity(n).scale(&value);
            Eigenpair {
                value,
                space: shifted.nullspace(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{builtin, Builtin};
    use crate::linalg::frac;

    fn example() -> Algebra {
        builtin(Builtin::PaperExample).unwrap()
    }

    /// d(a) = λa, d(a²) = 2λa².
    fn paper_map(lambda: Rational) -> LinearMap {
        LinearMap::new(Matrix::diagonal(&[lambda.clone(), lambda * rat(2)])).unwrap()
    }

    #[test]
    fn kind_parsing_and_validation() {
        assert_eq!(
            "1,2".parse::<DerivationKind>().unwrap(),
            DerivationKind::PQ { p: 1, q: 2 }
        );
        assert_eq!(
            "jordan:2,1".parse::<DerivationKind>().unwrap(),
            DerivationKind::JordanPQ { p: 2, q: 1 }
        );
        assert_eq!(
            "left".parse::<DerivationKind>().unwrap(),
            DerivationKind::Left
        );
        assert!(matches!(
            "1,1".parse::<DerivationKind>(),
            Err(Error::InvalidKind(_))
        ));
        assert!(matches!(
            "0,0".parse::<DerivationKind>(),
            Err(Error::InvalidKind(_))
        ));
        for k in ["ordinary", "pq(1,3)", "jordan(1,2)", "jordan-left", "right"] {
            let kind: DerivationKind = k.parse().unwrap();
            assert_eq!(kind.to_string().parse::<DerivationKind>().unwrap(), kind);
        }
    }

    #[test]
    fn assembled_system_for_paper_example() {
        let a = example();
        let m = assemble_constraints(&a, DerivationKind::PQ { p: 1, q: 2 }).unwrap();
        assert_eq!(m.cols(), 4);
        assert_eq!(m.rref_nullspace().nullspace.dim(), 2);
        assert!(matches!(
            assemble_constraints(&a, DerivationKind::PQ { p: 1, q: 1 }),
            Err(Error::InvalidKind(_))
        ));
        // The zero map satisfies every row.
        let zero = vec![Rational::zero(); 4];
        assert!(m.mul_vec(&zero).iter().all(Zero::is_zero));
    }

    #[test]
    fn paper_example_space() {
        let a = example();
        for (p, q) in [(0, 1), (1, 0), (1, 2), (2, 1), (1, 3)] {
            let s = solve_space(&a, DerivationKind::PQ { p, q }).unwrap();
            assert_eq!(s.dim(), 2, "({p},{q})");
            for lambda in [rat(1), rat(5), frac(-3, 2)] {
                assert!(s.contains(&paper_map(lambda)));
            }
        }
    }

    #[test]
    fn full_matrix_spaces() {
        let m2 = builtin(Builtin::FullMatrix(2)).unwrap();
        assert_eq!(
            solve_space(&m2, DerivationKind::PQ { p: 1, q: 2 })
                .unwrap()
                .dim(),
            0
        );
        let der = solve_space(&m2, DerivationKind::Ordinary).unwrap();
        assert_eq!(der.dim(), 3);
        for b in m2.basis_elements() {
            let (l, r) = m2.regular_representations(&b);
            let ad = LinearMap::new(l.matrix() - r.matrix()).unwrap();
            assert!(der.contains(&ad));
        }
    }

    #[test]
    fn direct_identity_checks() {
        let m2 = builtin(Builtin::FullMatrix(2)).unwrap();
        let id = LinearMap::identity(4);
        assert!(!check_identity(&m2, &id, DerivationKind::PQ { p: 1, q: 2 }).unwrap());
        let a = example();
        assert!(check_identity(&a, &paper_map(rat(5)), DerivationKind::PQ { p: 3, q: 7 }).unwrap());
    }

    #[test]
    fn leibniz_examples() {
        let a = example();
        let d = paper_map(rat(1));
        let x = a.basis_element(0);
        let (lhs, rhs) = leibniz_iterate(&a, &d, &x, &x, 2, 1, 2).unwrap();
        assert_eq!(lhs, a.element_i64(&[0, 4]));
        assert_eq!(rhs, lhs);

        // n = 1 is the defining identity divided by p + q.
        let y = a.element_i64(&[3, -1]);
        let (_, rhs) = leibniz_iterate(&a, &d, &x, &y, 1, 1, 2).unwrap();
        let expected = (&a.mul(&d.apply(&x), &y).scale(&rat(2))
            + &a.mul(&x, &d.apply(&y)).scale(&rat(4)))
            .scale(&frac(1, 3));
        assert_eq!(rhs, expected);

        let zero = LinearMap::zero(2);
        let (lhs, rhs) = leibniz_iterate(&a, &zero, &x, &y, 3, 1, 2).unwrap();
        assert!(lhs.is_zero() && rhs.is_zero());
        assert!(leibniz_iterate(&a, &d, &x, &y, 1, 2, 2).is_err());
    }

    #[test]
    fn lemma1_coefficients() {
        assert_eq!(lemma1_coefficient(1, 1, 2).unwrap(), rat(1));
        assert_eq!(lemma1_coefficient(1, 0, 1).unwrap(), rat(1));
        assert_eq!(lemma1_coefficient(2, 1, 2).unwrap(), frac(16, 9));
        assert_eq!(lemma1_coefficient(2, 1, 0).unwrap(), rat(0));
    }

    #[test]
    fn lemma1_membership_examples() {
        let a = example();
        let d = paper_map(rat(1));
        let x = a.basis_element(0);
        let sq = Ideal::new(&a, Subspace::span(2, [a.basis_element(1).into_coords()])).unwrap();
        assert!(lemma1_membership(&a, &d, &sq, &x, 1, 1, 2).is_err());
        let whole = Ideal::whole(&a);
        assert!(lemma1_membership(&a, &d, &whole, &x, 1, 1, 2).unwrap());
        assert_eq!(
            lemma1_difference(&a, &d, &whole, &x, 2, 1, 2).unwrap(),
            Element::new(vec![rat(0), frac(20, 9)])
        );
        assert!(lemma1_membership(&a, &d, &whole, &x, 2, 1, 2).unwrap());
        assert!(matches!(
            lemma1_membership(&a, &d, &Ideal::zero(&a), &x, 2, 1, 2),
            Err(Error::IotaNotInIdeal)
        ));
    }

    #[test]
    fn compositions() {
        let m2 = builtin(Builtin::FullMatrix(2)).unwrap();
        let zero = LinearMap::zero(4);
        let c = compose_and_classify(&m2, &zero, &zero).unwrap();
        assert!(c.composition.is_zero() && c.is_ordinary_derivation);
        let ad = |i: usize| {
            let (l, r) = m2.regular_representations(&m2.basis_element(i));
            LinearMap::new(l.matrix() - r.matrix()).unwrap()
        };
        // basis order e11, e12, e21, e22
        let c = compose_and_classify(&m2, &ad(1), &ad(2)).unwrap();
        assert!(!c.is_ordinary_derivation);
    }

    #[test]
    fn eigenpairs() {
        let pairs = rational_eigenpairs(&paper_map(rat(1)));
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].value, rat(1));
        assert_eq!(pairs[0].space, Subspace::span(2, [vec![rat(1), rat(0)]]));
        assert_eq!(pairs[1].value, rat(2));
        assert_eq!(pairs[1].space, Subspace::span(2, [vec![rat(0), rat(1)]]));

        let zero = rational_eigenpairs(&LinearMap::zero(3));
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].value, rat(0));
        assert!(zero[0].space.is_full());

        let rot = LinearMap::new(Matrix::from_i64_rows(&[&[0, -1], &[1, 0]])).unwrap();
        assert!(rational_eigenpairs(&rot).is_empty());
    }
}
