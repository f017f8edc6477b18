use num_traits::Zero;

use super::{is_zero_vec, Echelon, Matrix, Rational};
use crate::error::{Error, Result};

/// A subspace of `ℚ^n` held by its canonical basis: the nonzero rows of the
/// reduced row echelon form of any spanning set. Two subspaces are equal
/// exactly when their canonical bases are equal, so `PartialEq` is subspace
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

/// Sum, intersection and containment of two subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    /// Whether the second argument lies inside the first.
    pub contains: bool,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::span(
            ambient_dim,
            (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)),
        )
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut e = Echelon::new(ambient_dim);
        for v in vectors {
            assert_eq!(
                v.len(),
                ambient_dim,
                "vector length does not match ambient dimension"
            );
            if e.rank() == ambient_dim {
                break;
            }
            e.insert(v);
        }
        Self::from_echelon(e)
    }

    /// Span of the given vectors, reporting length mismatches as errors.
    pub fn try_span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let vectors: Vec<_> = vectors.into_iter().collect();
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: bad.len(),
            });
        }
        Ok(Self::span(ambient_dim, vectors))
    }

    pub(crate) fn from_echelon(e: Echelon) -> Self {
        let ambient_dim = e.cols();
        let (basis, pivots) = e.into_parts();
        Self {
            ambient_dim,
            basis,
            pivots,
        }
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim);
        for v in &self.basis {
            e.insert(v.clone());
        }
        e
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates outside the pivot columns, ascending: the lexicographically
    /// earliest coordinate complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its component along the canonical basis; zero on every pivot
    /// column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let mut v = v.to_vec();
        for (row, &pivot) in self.basis.iter().zip(&self.pivots) {
            if v[pivot].is_zero() {
                continue;
            }
            let factor = v[pivot].clone();
            for (target, entry) in v[pivot..].iter_mut().zip(&row[pivot..]) {
                if !entry.is_zero() {
                    *target -= &factor * entry;
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Whether `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut e = self.echelon();
        for v in &other.basis {
            e.insert(v.clone());
        }
        Ok(Self::from_echelon(e))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let r = self.dim();
        // Columns [a_1 .. a_r | -b_1 .. -b_s]; each kernel vector (α, β) gives
        // Σ α_i a_i = Σ β_j b_j.
        let mut columns: Vec<Vec<Rational>> = self.basis.clone();
        columns.extend(other.basis.iter().map(|b| b.iter().map(|x| -x).collect()));
        let m = Matrix::from_columns(self.ambient_dim, &columns);
        let kernel = m.echelon().kernel_vectors();
        Ok(Self::span(
            self.ambient_dim,
            kernel.into_iter().map(|coeffs| {
                let mut v = vec![Rational::zero(); self.ambient_dim];
                for (c, a) in coeffs[..r].iter().zip(&self.basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (t, x) in v.iter_mut().zip(a) {
                        *t += c * x;
                    }
                }
                v
            }),
        ))
    }

    /// Sum, intersection and containment in one call.
    pub fn ops(&self, other: &Subspace) -> Result<SubspaceOps> {
        Ok(SubspaceOps {
            sum: self.sum(other)?,
            intersection: self.intersection(other)?,
            contains: self.contains(other)?,
        })
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }
}

pub(crate) fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = num_traits::One::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn whole_space_contains_everything() {
        let whole = Subspace::full(3);
        let b = Subspace::span(3, [v(&[1, 2, 3]), v(&[0, 1, 1])]);
        assert!(whole.ops(&b).unwrap().contains);
    }

    #[test]
    fn direct_complement() {
        let a = Subspace::span(2, [v(&[1, 0])]);
        let b = Subspace::span(2, [v(&[0, 1])]);
        let ops = a.ops(&b).unwrap();
        assert_eq!(ops.sum.dim(), 2);
        assert_eq!(ops.intersection.dim(), 0);
        assert!(!ops.contains);
    }

    #[test]
    fn nested_line_in_plane() {
        let a = Subspace::span(3, [v(&[1, 1, 0])]);
        let b = Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 0, 1])]);
        assert!(b.contains(&a).unwrap());
        assert!(!a.contains(&b).unwrap());
        assert_eq!(a.intersection(&b).unwrap(), a);
        assert_eq!(b.intersection(&a).unwrap(), a);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
        assert!(Subspace::try_span(2, [v(&[1, 2, 3])]).is_err());
    }

    #[test]
    fn canonical_basis_is_independent_of_spanning_set() {
        let a = Subspace::span(3, [v(&[1, 2, 3]), v(&[4, 5, 6])]);
        let b = Subspace::span(3, [v(&[5, 7, 9]), v(&[3, 3, 3]), v(&[2, 4, 6])]);
        assert_eq!(a, b);
        assert_eq!(a.complement_columns(), vec![2]);
    }
}
