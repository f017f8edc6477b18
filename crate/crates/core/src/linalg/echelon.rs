use num_traits::{One, Zero};

use super::Rational;

/// Incrementally maintained reduced row echelon form.
///
/// Rows are kept sorted by pivot column, every pivot is 1 and every pivot
/// column is zero outside its own row.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    cols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_parts(self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        (self.rows, self.pivots)
    }

    /// Subtract pivot rows until `v` vanishes on every pivot column.
    pub fn reduce(&self, v: &mut [Rational]) {
        debug_assert_eq!(v.len(), self.cols);
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
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
    }

    /// Add a row to the row space. Returns true when the rank grew.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(
            v.len(),
            self.cols,
            "row length does not match echelon width"
        );
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if !v[pivot].is_one() {
            let inv = v[pivot].recip();
            for x in v[pivot..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        for row in &mut self.rows {
            if row[pivot].is_zero() {
                continue;
            }
            let factor = row[pivot].clone();
            for (target, entry) in row[pivot..].iter_mut().zip(&v[pivot..]) {
                if !entry.is_zero() {
                    *target -= &factor * entry;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }

    /// Canonical basis of the solution space `{x : row · x = 0 for every row}`.
    pub fn kernel_vectors(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[free].is_zero() {
                        v[p] = -row[free].clone();
                    }
                }
                v
            })
            .collect()
    }
}
