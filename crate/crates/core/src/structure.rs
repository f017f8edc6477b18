//! Radicals, quotients and primitive ideals.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element, Ideal, LinearMap};
use crate::error::{Error, Result};
use crate::linalg::{
    factor_polynomial, rat, Echelon, Matrix, Polynomial, Rational, Subspace, DEFAULT_DEGREE_CAP,
};

/// Default number of random central combinations tried after the central
/// basis vectors.
pub const DEFAULT_RETRIES: usize = 32;

/// Smallest ideal containing `generators`.
pub fn ideal_closure(a: &Algebra, generators: &[Element]) -> Ideal {
    let n = a.dim();
    let mut echelon = Echelon::new(n);
    let mut queue: Vec<Element> = Vec::new();
    for g in generators {
        if echelon.insert(g.coords().to_vec()) {
            queue.push(g.clone());
        }
    }
    let basis = a.basis_elements();
    while let Some(x) = queue.pop() {
        if echelon.rank() == n {
            break;
        }
        for e in &basis {
            for y in [a.mul(e, &x), a.mul(&x, e)] {
                if echelon.insert(y.coords().to_vec()) {
                    queue.push(y);
                }
            }
        }
    }
    Ideal::new(a, Subspace::from_echelon(echelon)).expect("closure is an ideal by construction")
}

/// `span{xy : x ∈ I, y ∈ J}`.
pub fn subspace_product(a: &Algebra, i: &Subspace, j: &Subspace) -> Subspace {
    let xs: Vec<Element> = i.basis().iter().cloned().map(Element::new).collect();
    let ys: Vec<Element> = j.basis().iter().cloned().map(Element::new).collect();
    let mut echelon = Echelon::new(a.dim());
    for x in &xs {
        for y in &ys {
            if echelon.rank() == a.dim() {
                break;
            }
            echelon.insert(a.mul(x, y).into_coords());
        }
    }
    Subspace::from_echelon(echelon)
}

/// Smallest `m ≤ cap` with `Iᵐ = 0`.
pub fn nilpotency_exponent(a: &Algebra, ideal: &Ideal, cap: usize) -> Option<usize> {
    let mut power = ideal.space().clone();
    for m in 1..=cap {
        if power.is_zero() {
            return Some(m);
        }
        power = subspace_product(a, &power, ideal.space());
    }
    None
}

/// `{x ∈ A : tr(L_{xy}) = 0 for all y ∈ A₁}` with left multiplication taken
/// in the unitization `A₁`. No verification.
pub fn trace_radical(a: &Algebra) -> Subspace {
    let n = a.dim();
    if n == 0 {
        return Subspace::zero(0);
    }
    let unit = a.unitization();
    let b = &unit.algebra;
    let m = n + 1;
    // tr(L_{f_k}) on A₁, then tr(L_{f_i f_j}) = Σ_k c[i][j][k] tr(L_{f_k}).
    let traces: Vec<Rational> = (0..m)
        .map(|k| (0..m).map(|l| b.constant(k, l, l).clone()).sum())
        .collect();
    let gram = |i: usize, j: usize| -> Rational {
        b.basis_product(i, j)
            .iter()
            .zip(&traces)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, t)| c * t)
            .sum()
    };
    // Unknown x ∈ A sits at unitization indices 1..=n.
    let rows: Vec<Vec<Rational>> = (0..m)
        .map(|j| (1..m).map(|i| gram(i, j)).collect())
        .collect();
    Matrix::from_rows(rows).nullspace()
}

/// The radical as a verified ideal: closed, nilpotent with exponent at most
/// `dim + 1`, and with semisimple quotient.
pub fn radical(a: &Algebra) -> Result<Ideal> {
    Ok(nilradical(a)?.ideal)
}

/// The nilradical together with its nilpotency certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nilradical {
    pub ideal: Ideal,
    /// Smallest `m` with `idealᵐ = 0`.
    pub exponent: usize,
}

/// Same ideal as [`radical`], returned with the exponent `m ≤ dim + 1` that
/// certifies `radᵐ = 0`.
pub fn nilradical(a: &Algebra) -> Result<Nilradical> {
    nilradical_with_cap(a, None)
}

/// [`nilradical`] with the certificate search bounded by `cap` (`None` means
/// `dim + 1`, which always suffices).
pub fn nilradical_with_cap(a: &Algebra, cap: Option<usize>) -> Result<Nilradical> {
    let space = trace_radical(a);
    let ideal = Ideal::new(a, space).map_err(|e| {
        Error::Internal(format!(
            "trace radical of {} is not an ideal: {e}",
            a.name()
        ))
    })?;
    let bound = a.dim() + 1;
    let cap = cap.unwrap_or(bound);
    let exponent = match nilpotency_exponent(a, &ideal, cap.min(bound)) {
        Some(m) => m,
        None if cap < bound => return Err(Error::NilpotencyCapExceeded { cap }),
        None => {
            return Err(Error::Internal(format!(
                "trace radical of {} is not nilpotent",
                a.name()
            )));
        }
    };
    let q = quotient(a, &ideal)?;
    if !trace_radical(&q.quotient).is_zero() {
        return Err(Error::Internal(format!(
            "quotient of {} by its trace radical is not semisimple",
            a.name()
        )));
    }
    Ok(Nilradical { ideal, exponent })
}

pub fn is_semiprime(a: &Algebra) -> Result<bool> {
    Ok(radical(a)?.is_zero())
}

/// `A/I` on the coordinate complement of the ideal's pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientAlgebra {
    pub parent: Algebra,
    pub ideal: Ideal,
    pub quotient: Algebra,
    /// Parent coordinates whose classes form the quotient basis.
    pub complement: Vec<usize>,
    /// `dim(A/I) × dim(A)`.
    pub projection: Matrix,
    /// `dim(A) × dim(A/I)`, a right inverse of `projection`.
    pub section: Matrix,
}

pub fn quotient(a: &Algebra, ideal: &Ideal) -> Result<QuotientAlgebra> {
    let ideal = Ideal::new(a, ideal.space().clone())?;
    let n = a.dim();
    let complement = ideal.space().complement_columns();
    let m = complement.len();
    let project = |v: &[Rational]| -> Vec<Rational> {
        let r = ideal.space().reduce(v);
        complement.iter().map(|&c| r[c].clone()).collect()
    };
    let mut structure = vec![Rational::zero(); m * m * m];
    for (qi, &i) in complement.iter().enumerate() {
        for (qj, &j) in complement.iter().enumerate() {
            let image = project(a.basis_product(i, j));
            let start = (qi * m + qj) * m;
            structure[start..start + m].clone_from_slice(&image);
        }
    }
    let labels = complement
        .iter()
        .map(|&c| format!("[{}]", a.basis_labels()[c]))
        .collect();
    let quotient = Algebra::build(format!("{}/I", a.name()), labels, structure)?;
    let columns: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            project(&e)
        })
        .collect();
    let projection = Matrix::from_columns(m, &columns);
    let mut section = Matrix::zeros(n, m);
    for (qi, &c) in complement.iter().enumerate() {
        section[(c, qi)] = Rational::one();
    }
    Ok(QuotientAlgebra {
        parent: a.clone(),
        ideal,
        quotient,
        complement,
        projection,
        section,
    })
}

impl QuotientAlgebra {
    pub fn project(&self, x: &Element) -> Element {
        Element::new(self.projection.mul_vec(x.coords()))
    }

    pub fn lift(&self, x: &Element) -> Element {
        Element::new(self.section.mul_vec(x.coords()))
    }

    /// `D(x + I) = d(x) + I`; `None` unless `d(I) ⊆ I`.
    pub fn induced_map(&self, d: &LinearMap) -> Option<LinearMap> {
        if !check_ideal_invariance(d, &self.ideal) {
            return None;
        }
        let m = self.quotient.dim();
        let images: Vec<Element> = (0..m)
            .map(|i| self.project(&d.apply(&self.lift(&Element::basis(m, i)))))
            .collect();
        Some(if m == 0 {
            LinearMap::zero(0)
        } else {
            LinearMap::from_images(&images)
        })
    }
}

/// Whether `d(I) ⊆ I`.
pub fn check_ideal_invariance(d: &LinearMap, ideal: &Ideal) -> bool {
    ideal
        .basis_elements()
        .iter()
        .all(|x| ideal.contains(&d.apply(x)))
}

/// Knobs for [`primitive_ideals`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimitiveOptions {
    pub degree_cap: usize,
    pub retries: usize,
    pub seed: u64,
}

impl Default for PrimitiveOptions {
    fn default() -> Self {
        Self {
            degree_cap: DEFAULT_DEGREE_CAP,
            retries: DEFAULT_RETRIES,
            seed: 0,
        }
    }
}

/// One simple component of `A/rad`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Primitive central idempotent, in quotient coordinates.
    pub idempotent: Element,
    pub dim: usize,
    /// Irreducible factor of the separating element's minimal polynomial.
    pub factor: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub radical: Ideal,
    pub semisimple: QuotientAlgebra,
    /// Central element of `A/rad` whose minimal polynomial split the center.
    pub separating: Option<Element>,
    pub minimal_polynomial: Option<Polynomial>,
    pub blocks: Vec<Block>,
    /// `primitive_ideals[i]` is the preimage of `(A/rad)(1 − e_i)`.
    pub primitive_ideals: Vec<Ideal>,
}

/// Minimal polynomial of `z` in a unital algebra with unit `one`.
pub fn minimal_polynomial(a: &Algebra, one: &Element, z: &Element) -> Polynomial {
    let n = a.dim();
    // Track each power's combination of earlier powers alongside it.
    let mut rows: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut power = one.clone();
    for k in 0..=n {
        let mut v = power.coords().to_vec();
        let mut combo = vec![Rational::zero(); k + 1];
        combo[k] = Rational::one();
        for (row, row_combo) in &rows {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("stored rows are nonzero");
            if v[pivot].is_zero() {
                continue;
            }
            let factor = &v[pivot] / &row[pivot];
            for (t, r) in v.iter_mut().zip(row) {
                *t -= &factor * r;
            }
            for (t, r) in combo.iter_mut().zip(row_combo) {
                *t -= &factor * r;
            }
        }
        if v.iter().all(Zero::is_zero) {
            return Polynomial::new(combo).monic();
        }
        rows.push((v, combo));
        power = a.mul(&power, z);
    }
    unreachable!("n + 1 powers in an n-dimensional space are dependent")
}

/// `f(z)` in a unital algebra.
pub fn eval_polynomial(a: &Algebra, one: &Element, f: &Polynomial, z: &Element) -> Element {
    let mut acc = a.zero_element();
    for c in f.coeffs().iter().rev() {
        acc = &a.mul(&acc, z) + &one.scale(c);
    }
    acc
}

fn separating_candidates(center: &Subspace, options: &PrimitiveOptions) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = center.basis().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    for _ in 0..options.retries {
        let mut v = vec![Rational::zero(); center.ambient_dim()];
        for b in center.basis() {
            let c = rat(rng.gen_range(-4..=4));
            for (t, x) in v.iter_mut().zip(b) {
                *t += &c * x;
            }
        }
        out.push(v);
    }
    out
}

/// Wedderburn blocks of `A/rad` and the primitive ideals of `A`.
///
/// Every block is checked: the idempotents are orthogonal and sum to the
/// unit, each `A/P` has zero radical, its center has the degree of the
/// block's factor as dimension, and every nonzero basis class generates all
/// of `A/P`. The intersection of the primitive ideals is checked against the
/// radical.
pub fn primitive_ideals(a: &Algebra, options: &PrimitiveOptions) -> Result<BlockDecomposition> {
    let radical = radical(a)?;
    let semisimple = quotient(a, &radical)?;
    let s = &semisimple.quotient;
    if s.dim() == 0 {
        return Ok(BlockDecomposition {
            radical,
            semisimple,
            separating: None,
            minimal_polynomial: None,
            blocks: Vec::new(),
            primitive_ideals: Vec::new(),
        });
    }
    let one = s
        .identity()
        .ok_or_else(|| Error::Internal(format!("{}/rad has no unit", a.name())))?;
    let center = s.center();
    let k = center.dim();
    let (z, m) = separating_candidates(&center, options)
        .into_iter()
        .map(Element::new)
        .map(|z| {
            let m = minimal_polynomial(s, &one, &z);
            (z, m)
        })
        .find(|(_, m)| m.degree() == Some(k) && m.is_squarefree())
        .ok_or(Error::SeparatingElementNotFound {
            retries: options.retries,
        })?;
    let factors = factor_polynomial(&m, options.degree_cap)?;

    let mut blocks = Vec::with_capacity(factors.len());
    for (f, mult) in &factors {
        if *mult != 1 {
            return Err(Error::Internal(
                "minimal polynomial is not squarefree".into(),
            ));
        }
        let h = m.exact_div(f);
        let (g, inv, _) = Polynomial::ext_gcd(&h, f);
        if g != Polynomial::one() {
            return Err(Error::Internal("cofactors are not coprime".into()));
        }
        let e_poly = (&h * &inv).rem(&m);
        let idempotent = eval_polynomial(s, &one, &e_poly, &z);
        let dim = subspace_product(
            s,
            &Subspace::full(s.dim()),
            &Subspace::span(s.dim(), [idempotent.coords().to_vec()]),
        )
        .dim();
        blocks.push(Block {
            idempotent,
            dim,
            factor: f.clone(),
        });
    }
    verify_idempotents(s, &one, &blocks)?;

    let full = Subspace::full(s.dim());
    let mut primitive = Vec::with_capacity(blocks.len());
    for block in &blocks {
        let complement = &one - &block.idempotent;
        let kernel = subspace_product(
            s,
            &full,
            &Subspace::span(s.dim(), [complement.into_coords()]),
        );
        let lifted = kernel.basis().iter().map(|v| semisimple.section.mul_vec(v));
        let space = radical.space().sum(&Subspace::span(a.dim(), lifted))?;
        let p = Ideal::new(a, space)?;
        verify_simple_quotient(a, &p, block)?;
        primitive.push(p);
    }

    let mut meet = Subspace::full(a.dim());
    for p in &primitive {
        meet = meet.intersection(p.space())?;
    }
    if &meet != radical.space() {
        return Err(Error::Internal(format!(
            "primitive ideals of {} do not intersect to the radical",
            a.name()
        )));
    }
    Ok(BlockDecomposition {
        radical,
        semisimple,
        separating: Some(z),
        minimal_polynomial: Some(m),
        blocks,
        primitive_ideals: primitive,
    })
}

fn verify_idempotents(s: &Algebra, one: &Element, blocks: &[Block]) -> Result<()> {
    let mut sum = s.zero_element();
    for (i, bi) in blocks.iter().enumerate() {
        if s.mul(&bi.idempotent, &bi.idempotent) != bi.idempotent || bi.idempotent.is_zero() {
            return Err(Error::Internal(format!(
                "block {i} idempotent is not a nonzero idempotent"
            )));
        }
        for (j, bj) in blocks.iter().enumerate() {
            if i != j && !s.mul(&bi.idempotent, &bj.idempotent).is_zero() {
                return Err(Error::Internal(format!(
                    "block idempotents {i} and {j} are not orthogonal"
                )));
            }
        }
        sum = &sum + &bi.idempotent;
    }
    if &sum != one {
        return Err(Error::Internal(
            "block idempotents do not sum to the unit".into(),
        ));
    }
    Ok(())
}

fn verify_simple_quotient(a: &Algebra, p: &Ideal, block: &Block) -> Result<()> {
    let q = quotient(a, p)?;
    let b = &q.quotient;
    let fail = |what: &str| {
        Err(Error::Internal(format!(
            "{}/P for factor {}: {what}",
            a.name(),
            block.factor
        )))
    };
    if b.dim() != block.dim {
        return fail("dimension differs from the block");
    }
    if !trace_radical(b).is_zero() {
        return fail("nonzero radical");
    }
    if Some(b.center().dim()) != block.factor.degree() {
        return fail("center dimension differs from the factor degree");
    }
    for x in b.basis_elements() {
        if !ideal_closure(b, &[x]).space().is_full() {
            return fail("a nonzero element generates a proper ideal");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{builtin, direct_sum, Builtin, NamedGroup};

    fn span(a: &Algebra, vs: &[&[i64]]) -> Subspace {
        Subspace::span(a.dim(), vs.iter().map(|v| a.element_i64(v).into_coords()))
    }

    #[test]
    fn radicals_of_builtins() {
        let m2 = builtin(Builtin::FullMatrix(2)).unwrap();
        assert!(radical(&m2).unwrap().is_zero());
        let t2 = builtin(Builtin::UpperTriangular(2)).unwrap();
        // basis e11, e12, e22
        assert_eq!(radical(&t2).unwrap().space(), &span(&t2, &[&[0, 1, 0]]));
        let p = builtin(Builtin::PaperExample).unwrap();
        let nil = nilradical(&p).unwrap();
        assert!(nil.ideal.space().is_full());
        assert_eq!(nil.exponent, 3);
        let ann = builtin(Builtin::AnnihilatorModel).unwrap();
        let nil = nilradical(&ann).unwrap();
        assert_eq!(nil.ideal.space(), &span(&ann, &[&[0, 1]]));
        assert_eq!(nil.exponent, 2);
        let nil = nilradical(&m2).unwrap();
        assert_eq!(nil.exponent, 1);
    }

    #[test]
    fn radical_of_direct_sum() {
        let s = direct_sum(
            &NamedGroup::C2.algebra(),
            &builtin(Builtin::PaperExample).unwrap(),
        );
        let r = radical(&s).unwrap();
        assert_eq!(r.space(), &span(&s, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]));
    }

    #[test]
    fn closures() {
        let m2 = builtin(Builtin::FullMatrix(2)).unwrap();
        assert!(ideal_closure(&m2, &[m2.basis_element(1)]).space().is_full());
        let p = builtin(Builtin::PaperExample).unwrap();
        assert_eq!(ideal_closure(&p, &[p.basis_element(1)]).dim(), 1);
        let c3 = NamedGroup::C3.algebra();
        assert!(ideal_closure(&c3, &[c3.basis_element(0)]).space().is_full());
        assert!(ideal_closure(&c3, &[]).is_zero());
    }

    #[test]
    fn quotients() {
        let t2 = builtin(Builtin::UpperTriangular(2)).unwrap();
        let q = quotient(&t2, &radical(&t2).unwrap()).unwrap();
        assert_eq!(q.quotient.dim(), 2);
        assert_eq!(q.quotient.basis_labels(), ["[e11]", "[e22]"]);
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j {
                    q.quotient.basis_element(i)
                } else {
                    q.quotient.zero_element()
                };
                assert_eq!(
                    q.quotient
                        .mul(&q.quotient.basis_element(i), &q.quotient.basis_element(j)),
                    expected
                );
            }
        }
        assert_eq!(&q.projection * &q.section, Matrix::identity(2));

        let whole = quotient(&t2, &Ideal::whole(&t2)).unwrap();
        assert_eq!(whole.quotient.dim(), 0);
        let same = quotient(&t2, &Ideal::zero(&t2)).unwrap();
        assert_eq!(same.quotient.nonzero_triples(), t2.nonzero_triples());
    }

    #[test]
    fn induced_maps() {
        let p = builtin(Builtin::PaperExample).unwrap();
        let d = LinearMap::new(Matrix::diagonal(&[rat(1), rat(2)])).unwrap();
        let sq = Ideal::new(&p, span(&p, &[&[0, 1]])).unwrap();
        assert!(check_ideal_invariance(&d, &sq));
        assert!(check_ideal_invariance(&LinearMap::zero(2), &sq));
        let q = quotient(&p, &sq).unwrap();
        assert_eq!(
            q.induced_map(&d).unwrap().matrix(),
            &Matrix::from_i64_rows(&[&[1]])
        );
        let swap = LinearMap::new(Matrix::from_i64_rows(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(q.induced_map(&swap).is_none());
    }

    #[test]
    fn semiprime_flags() {
        assert!(is_semiprime(&builtin(Builtin::FullMatrix(2)).unwrap()).unwrap());
        assert!(!is_semiprime(&builtin(Builtin::PaperExample).unwrap()).unwrap());
        assert!(is_semiprime(&NamedGroup::C2.algebra()).unwrap());
    }

    #[test]
    fn minimal_polynomials() {
        let c3 = NamedGroup::C3.algebra();
        let one = c3.basis_element(0);
        let g = c3.basis_element(1);
        assert_eq!(
            minimal_polynomial(&c3, &one, &g),
            Polynomial::from_i64(&[-1, 0, 0, 1])
        );
        assert_eq!(
            minimal_polynomial(&c3, &one, &one),
            Polynomial::from_i64(&[-1, 1])
        );
        let f = Polynomial::from_i64(&[1, 1, 1]);
        assert_eq!(
            eval_polynomial(&c3, &one, &f, &g),
            c3.element_i64(&[1, 1, 1])
        );
    }

    #[test]
    fn primitive_ideal_examples() {
        let opts = PrimitiveOptions::default();
        let t2 = builtin(Builtin::UpperTriangular(2)).unwrap();
        let blocks = primitive_ideals(&t2, &opts).unwrap();
        assert_eq!(blocks.primitive_ideals.len(), 2);
        assert!(blocks.primitive_ideals.iter().all(|p| p.dim() == 2));

        let c3 = NamedGroup::C3.algebra();
        let blocks = primitive_ideals(&c3, &opts).unwrap();
        let degrees: Vec<_> = blocks
            .blocks
            .iter()
            .map(|b| b.factor.degree().unwrap())
            .collect();
        assert_eq!(degrees, vec![1, 2]);
        assert_eq!(
            blocks.blocks[0].idempotent,
            Element::new(vec![rat(1); 3].iter().map(|x| x / rat(3)).collect())
        );

        let m2 = builtin(Builtin::FullMatrix(2)).unwrap();
        let blocks = primitive_ideals(&m2, &opts).unwrap();
        assert_eq!(blocks.primitive_ideals.len(), 1);
        assert!(blocks.primitive_ideals[0].is_zero());
        assert_eq!(blocks.blocks[0].dim, 4);

        let p = builtin(Builtin::PaperExample).unwrap();
        assert!(primitive_ideals(&p, &opts)
            .unwrap()
            .primitive_ideals
            .is_empty());
    }

    #[test]
    fn group_algebras_split() {
        let opts = PrimitiveOptions::default();
        let expected = [
            (NamedGroup::S3, vec![1, 1, 4]),
            (NamedGroup::Q8, vec![1, 1, 1, 1, 4]),
            (NamedGroup::D4, vec![1, 1, 1, 1, 4]),
            (NamedGroup::C4, vec![1, 1, 2]),
        ];
        for (g, dims) in expected {
            let blocks = primitive_ideals(&g.algebra(), &opts).unwrap();
            let mut got: Vec<usize> = blocks.blocks.iter().map(|b| b.dim).collect();
            got.sort();
            assert_eq!(got, dims, "{g}");
        }
    }

    #[test]
    fn zero_retries_can_fail() {
        // Q[C2×C2] has central basis vectors of degree 2 only; a 4-dim center
        // needs a combination.
        let opts = PrimitiveOptions {
            retries: 0,
            ..PrimitiveOptions::default()
        };
        assert!(matches!(
            primitive_ideals(&NamedGroup::C2xC2.algebra(), &opts),
            Err(Error::SeparatingElementNotFound { retries: 0 })
        ));
        assert_eq!(
            primitive_ideals(&NamedGroup::C2xC2.algebra(), &PrimitiveOptions::default())
                .unwrap()
                .blocks
                .len(),
            4
        );
    }
}
