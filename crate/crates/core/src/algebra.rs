//! Finite-dimensional associative algebras given by structure constants.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, is_zero_vec, Matrix, Rational, Subspace};

/// An associative algebra over ℚ with a fixed basis `e_0 .. e_{n-1}`.
///
/// `e_i · e_j = Σ_k c[i][j][k] e_k`. Associativity is checked when the
/// algebra is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    basis_labels: Vec<String>,
    structure: Vec<Rational>,
    note: Option<String>,
}

/// Coordinates of an element relative to the basis of its algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Rational>,
}

/// A linear map `A → A` as a square matrix acting on coordinate columns:
/// column `j` holds the image of basis element `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    matrix: Matrix,
}

/// A two-sided ideal, stored as its canonical subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    space: Subspace,
}

/// The unitization `A₁ = ℚ·1 ⊕ A`. Basis index 0 is the adjoined unit and
/// basis index `i + 1` is `e_i`.
#[derive(Clone, Debug)]
pub struct Unitization {
    pub algebra: Algebra,
}

impl Element {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coords[i] = Rational::one();
        e
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coords.iter().map(|x| x * c).collect())
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim(), "element dimension mismatch");
        Element::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element::new(self.coords.iter().map(|a| -a).collect())
    }
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        Ok(Self { matrix })
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            matrix: Matrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: Matrix::identity(dim),
        }
    }

    /// Map sending basis element `j` to `images[j]`.
    pub fn from_images(images: &[Element]) -> Self {
        let n = images.len();
        let columns: Vec<Vec<Rational>> = images.iter().map(|e| e.coords.clone()).collect();
        Self {
            matrix: Matrix::from_columns(n, &columns),
        }
    }

    /// Rebuild from the row-major flattening used for solver unknowns.
    pub fn from_flat(dim: usize, flat: Vec<Rational>) -> Self {
        Self {
            matrix: Matrix::from_entries(dim, dim, flat),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &Element) -> Element {
        Element::new(self.matrix.mul_vec(&x.coords))
    }

    /// `d^k(x)`, with `d^0(x) = x`.
    pub fn apply_power(&self, x: &Element, k: usize) -> Element {
        (0..k).fold(x.clone(), |acc, _| self.apply(&acc))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            matrix: &self.matrix * &other.matrix,
        }
    }

    pub fn range(&self) -> Subspace {
        self.matrix.column_space()
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.nullspace()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn image_of_basis(&self, j: usize) -> Element {
        Element::new(self.matrix.column(j))
    }
}

impl Ideal {
    /// Wrap a subspace after checking closure under left and right
    /// multiplication by every basis element.
    pub fn new(algebra: &Algebra, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                found: space.ambient_dim(),
            });
        }
        for v in space.basis() {
            let x = Element::new(v.clone());
            for i in 0..algebra.dim() {
                let e = Element::basis(algebra.dim(), i);
                if !space.contains_vector(algebra.mul(&e, &x).coords()) {
                    return Err(Error::NotAnIdeal(format!(
                        "left multiplication by {} leaves the subspace",
                        algebra.basis_labels[i]
                    )));
                }
                if !space.contains_vector(algebra.mul(&x, &e).coords()) {
                    return Err(Error::NotAnIdeal(format!(
                        "right multiplication by {} leaves the subspace",
                        algebra.basis_labels[i]
                    )));
                }
            }
        }
        Ok(Self { space })
    }

    pub fn zero(algebra: &Algebra) -> Self {
        Self {
            space: Subspace::zero(algebra.dim()),
        }
    }

    pub fn whole(algebra: &Algebra) -> Self {
        Self {
            space: Subspace::full(algebra.dim()),
        }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.space.contains_vector(x.coords())
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        self.space
            .basis()
            .iter()
            .cloned()
            .map(Element::new)
            .collect()
    }
}

impl Unitization {
    pub fn unit(&self) -> Element {
        Element::basis(self.algebra.dim(), 0)
    }

    pub fn embed(&self, x: &Element) -> Element {
        let mut coords = Vec::with_capacity(x.dim() + 1);
        coords.push(Rational::zero());
        coords.extend_from_slice(x.coords());
        Element::new(coords)
    }
}

impl Algebra {
    /// Build from a dense `n × n × n` table, indexed `(i * n + j) * n + k`.
    pub fn new(
        name: impl Into<String>,
        basis_labels: Vec<String>,
        structure: Vec<Rational>,
    ) -> Result<Self> {
        if basis_labels.is_empty() {
            return Err(Error::InvalidAlgebra(
                "an algebra needs dimension at least 1".into(),
            ));
        }
        Self::build(name.into(), basis_labels, structure)
    }

    /// Build from sparse `(i, j, k, c)` triples; repeated triples add up.
    pub fn from_triples(
        name: impl Into<String>,
        basis_labels: Vec<String>,
        triples: &[(usize, usize, usize, Rational)],
    ) -> Result<Self> {
        let n = basis_labels.len();
        let mut structure = vec![Rational::zero(); n * n * n];
        for (i, j, k, c) in triples {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::InvalidAlgebra(format!(
                    "structure index ({i}, {j}, {k}) out of range for dimension {n}"
                )));
            }
            structure[(i * n + j) * n + k] += c;
        }
        Self::new(name, basis_labels, structure)
    }

    /// Like [`Algebra::new`] but also accepts dimension 0, which arises as
    /// the quotient of an algebra by itself.
    pub(crate) fn build(
        name: String,
        basis_labels: Vec<String>,
        structure: Vec<Rational>,
    ) -> Result<Self> {
        let n = basis_labels.len();
        if structure.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: structure.len(),
            });
        }
        let algebra = Self {
            name,
            basis_labels,
            structure,
            note: None,
        };
        algebra.check_associative()?;
        Ok(algebra)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    /// `c[i][j][k]`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.structure[(i * n + j) * n + k]
    }

    /// Nonzero structure constants sorted by `(i, j, k)`.
    pub fn nonzero_triples(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// Coordinates of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim();
        &self.structure[(i * n + j) * n..(i * n + j + 1) * n]
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let jk = self.basis_product(j, k);
                    for l in 0..n {
                        let mut lhs = Rational::zero();
                        let mut rhs = Rational::zero();
                        for m in 0..n {
                            if !ij[m].is_zero() {
                                lhs += &ij[m] * self.constant(m, k, l);
                            }
                            if !jk[m].is_zero() {
                                rhs += &jk[m] * self.constant(i, m, l);
                            }
                        }
                        if lhs != rhs {
                            return Err(Error::NotAssociative { i, j, k, l });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn zero_element(&self) -> Element {
        Element::zero(self.dim())
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        (0..self.dim()).map(|i| self.basis_element(i)).collect()
    }

    /// Element from integer coordinates; panics on a length mismatch.
    pub fn element_i64(&self, coords: &[i64]) -> Element {
        assert_eq!(coords.len(), self.dim(), "coordinate count mismatch");
        Element::new(coords.iter().map(|&c| crate::linalg::rat(c)).collect())
    }

    /// Product with dimension checks.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        for e in [x, y] {
            if e.dim() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: e.dim(),
                });
            }
        }
        Ok(self.mul(x, y))
    }

    /// `(xy)_k = Σ x_i y_j c[i][j][k]`. Panics on a dimension mismatch.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let n = self.dim();
        assert!(x.dim() == n && y.dim() == n, "element dimension mismatch");
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (target, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *target += &xy * c;
                    }
                }
            }
        }
        Element::new(out)
    }

    /// `x^k` with left-nested products; `k ≥ 1`.
    pub fn power(&self, x: &Element, k: usize) -> Element {
        assert!(k >= 1, "element powers start at 1");
        (1..k).fold(x.clone(), |acc, _| self.mul(&acc, x))
    }

    /// Left and right regular representations `(L_x, R_x)`.
    pub fn regular_representations(&self, x: &Element) -> (LinearMap, LinearMap) {
        (self.left_multiplication(x), self.right_multiplication(x))
    }

    pub fn left_multiplication(&self, x: &Element) -> LinearMap {
        let images: Vec<Element> = (0..self.dim())
            .map(|j| self.mul(x, &self.basis_element(j)))
            .collect();
        LinearMap::from_images(&images)
    }

    pub fn right_multiplication(&self, x: &Element) -> LinearMap {
        let images: Vec<Element> = (0..self.dim())
            .map(|j| self.mul(&self.basis_element(j), x))
            .collect();
        LinearMap::from_images(&images)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// `Z(A) = {x : x·e_j = e_j·x for all j}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for l in 0..n {
                rows.push(
                    (0..n)
                        .map(|i| self.constant(i, j, l) - self.constant(j, i, l))
                        .collect(),
                );
            }
        }
        if rows.is_empty() {
            return Subspace::zero(0);
        }
        Matrix::from_rows(rows).nullspace()
    }

    pub fn unitization(&self) -> Unitization {
        let n = self.dim();
        let m = n + 1;
        let mut structure = vec![Rational::zero(); m * m * m];
        let idx = |i: usize, j: usize, k: usize| (i * m + j) * m + k;
        structure[idx(0, 0, 0)] = Rational::one();
        for i in 0..n {
            structure[idx(0, i + 1, i + 1)] = Rational::one();
            structure[idx(i + 1, 0, i + 1)] = Rational::one();
            for j in 0..n {
                for k in 0..n {
                    structure[idx(i + 1, j + 1, k + 1)] = self.constant(i, j, k).clone();
                }
            }
        }
        let mut labels = vec!["1".to_string()];
        labels.extend(self.basis_labels.iter().cloned());
        let algebra = Self::build(format!("{}^+", self.name), labels, structure)
            .expect("unitization of an associative algebra is associative");
        Unitization { algebra }
    }

    /// Canonical solution `E` of `e_i · E = e_i` for every `i`, if any.
    pub fn find_right_identity(&self) -> Option<Element> {
        let n = self.dim();
        // Unknowns E_j; equation (i, l): Σ_j E_j c[i][j][l] = δ_il.
        let mut rows = Vec::with_capacity(n * n);
        let mut rhs = Vec::with_capacity(n * n);
        for i in 0..n {
            for l in 0..n {
                rows.push((0..n).map(|j| self.constant(i, j, l).clone()).collect());
                rhs.push(if i == l {
                    Rational::one()
                } else {
                    Rational::zero()
                });
            }
        }
        if rows.is_empty() {
            return None;
        }
        let e = Element::new(Matrix::from_rows(rows).solve(&rhs)?);
        debug_assert!((0..n).all(|i| self.mul(&self.basis_element(i), &e) == self.basis_element(i)));
        Some(e)
    }

    /// The two-sided identity, if one exists.
    pub fn identity(&self) -> Option<Element> {
        let n = self.dim();
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for l in 0..n {
                let delta = if i == l {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                rows.push((0..n).map(|j| self.constant(i, j, l).clone()).collect());
                rhs.push(delta.clone());
                rows.push((0..n).map(|j| self.constant(j, i, l).clone()).collect());
                rhs.push(delta);
            }
        }
        if rows.is_empty() {
            return None;
        }
        Matrix::from_rows(rows).solve(&rhs).map(Element::new)
    }

    pub fn is_unital(&self) -> bool {
        self.identity().is_some()
    }

    /// `b` with `ab = ba = a + b`, verified exactly before it is returned.
    pub fn quasi_inverse(&self, a: &Element) -> Option<Element> {
        let n = self.dim();
        let (left, right) = self.regular_representations(a);
        // (L_a − I) b = a and (R_a − I) b = a.
        let id = Matrix::identity(n);
        let l = left.matrix() - &id;
        let r = right.matrix() - &id;
        let mut rows = l.row_vectors();
        rows.extend(r.row_vectors());
        let mut rhs = a.coords().to_vec();
        rhs.extend_from_slice(a.coords());
        let b = Element::new(Matrix::from_rows(rows).solve(&rhs)?);
        self.is_quasi_inverse(a, &b).then_some(b)
    }

    pub fn is_quasi_inverse(&self, a: &Element, b: &Element) -> bool {
        let sum = a + b;
        self.mul(a, b) == sum && self.mul(b, a) == sum
    }

    /// Smallest `k ≤ cap` with `a^k = 0`.
    pub fn nilpotency_index(&self, a: &Element, cap: usize) -> Option<usize> {
        let mut power = a.clone();
        for k in 1..=cap {
            if power.is_zero() {
                return Some(k);
            }
            power = self.mul(&power, a);
        }
        None
    }

    /// `ran(A) = {γ : x·γ = 0 for all x}`.
    pub fn right_annihilator(&self) -> Ideal {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for l in 0..n {
                rows.push((0..n).map(|j| self.constant(i, j, l).clone()).collect());
            }
        }
        let space = if rows.is_empty() {
            Subspace::zero(0)
        } else {
            Matrix::from_rows(rows).nullspace()
        };
        Ideal::new(self, space).expect("the right annihilator is a two-sided ideal")
    }

    /// Readable form such as `2*a - 1/2*a^2`.
    pub fn format_element(&self, x: &Element) -> String {
        let mut out = String::new();
        for (c, label) in x.coords().iter().zip(&self.basis_labels) {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !magnitude.is_one() {
                out.push_str(&format_rational(&magnitude));
                out.push('*');
            }
            out.push_str(label);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.dim())
    }
}
