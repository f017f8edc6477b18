//! Built-in algebras, group algebras from Cayley tables, and direct sums.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};

/// Note stamped on every group algebra: finite `ℚ[G]` is the only group
/// algebra this workbench can build, so it stands in for the analytic ones.
pub const GROUP_ALGEBRA_NOTE: &str =
    "finite group algebra Q[G]; desk-scale stand-in for L1(G), M(G), A(G) and B(G)";

/// The named built-in algebra families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// `M_n(ℚ)` with matrix units `e_ij`.
    FullMatrix(usize),
    /// Upper-triangular `n × n` matrices.
    UpperTriangular(usize),
    /// Strictly upper-triangular `n × n` matrices; nilpotent.
    StrictlyUpperTriangular(usize),
    /// `span{a, a²}` with `a·a = a²` and every other product zero.
    PaperExample,
    /// `span{e, r}` with `e·e = e`, `r·e = r`, `e·r = r·r = 0`.
    AnnihilatorModel,
    /// `span{t, …, t^(k−1)}` with `t^k = 0`.
    TruncatedPolynomial(usize),
}

impl Builtin {
    pub const FAMILIES: [&'static str; 6] = [
        "full_matrix",
        "upper_triangular",
        "strictly_upper_triangular",
        "paper_example",
        "annihilator_model",
        "truncated_polynomial",
    ];

    /// Look up a family by name; sized families require `size`.
    pub fn from_name(name: &str, size: Option<usize>) -> Result<Self> {
        let need = |size: Option<usize>| {
            size.ok_or_else(|| Error::BadSize {
                name: name.to_string(),
                reason: "this family needs a size parameter".into(),
            })
        };
        Ok(match name {
            "full_matrix" => Self::FullMatrix(need(size)?),
            "upper_triangular" => Self::UpperTriangular(need(size)?),
            "strictly_upper_triangular" => Self::StrictlyUpperTriangular(need(size)?),
            "truncated_polynomial" => Self::TruncatedPolynomial(need(size)?),
            "paper_example" => Self::PaperExample,
            "annihilator_model" => Self::AnnihilatorModel,
            _ => return Err(Error::UnknownBuiltin(name.to_string())),
        })
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FullMatrix(n) => write!(f, "full_matrix({n})"),
            Self::UpperTriangular(n) => write!(f, "upper_triangular({n})"),
            Self::StrictlyUpperTriangular(n) => write!(f, "strictly_upper_triangular({n})"),
            Self::PaperExample => write!(f, "paper_example"),
            Self::AnnihilatorModel => write!(f, "annihilator_model"),
            Self::TruncatedPolynomial(k) => write!(f, "truncated_polynomial({k})"),
        }
    }
}

fn labels<I: IntoIterator<Item = S>, S: Into<String>>(it: I) -> Vec<String> {
    it.into_iter().map(Into::into).collect()
}

fn bad_size(name: &str, reason: &str) -> Error {
    Error::BadSize {
        name: name.to_string(),
        reason: reason.to_string(),
    }
}

/// Matrix-unit algebra on the positions `(i, j)` accepted by `keep`.
fn matrix_units(name: String, n: usize, keep: impl Fn(usize, usize) -> bool) -> Result<Algebra> {
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| keep(i, j))
        .collect();
    let index = |p: (usize, usize)| positions.iter().position(|&q| q == p);
    let mut triples = Vec::new();
    for (a, &(i, j)) in positions.iter().enumerate() {
        for (b, &(k, l)) in positions.iter().enumerate() {
            if j == k {
                let c = index((i, l)).expect("matrix-unit families are closed under products");
                triples.push((a, b, c, Rational::one()));
            }
        }
    }
    let names = positions.iter().map(|&(i, j)| {
        if n <= 9 {
            format!("e{}{}", i + 1, j + 1)
        } else {
            format!("e{}_{}", i + 1, j + 1)
        }
    });
    Algebra::from_triples(name, labels(names), &triples)
}

/// Construct a built-in algebra with its canonical basis.
pub fn builtin(which: Builtin) -> Result<Algebra> {
    let name = which.to_string();
    match which {
        Builtin::FullMatrix(n) => {
            if n == 0 {
                return Err(bad_size("full_matrix", "size must be at least 1"));
            }
            matrix_units(name, n, |_, _| true)
        }
        Builtin::UpperTriangular(n) => {
            if n == 0 {
                return Err(bad_size("upper_triangular", "size must be at least 1"));
            }
            matrix_units(name, n, |i, j| i <= j)
        }
        Builtin::StrictlyUpperTriangular(n) => {
            if n < 2 {
                return Err(bad_size(
                    "strictly_upper_triangular",
                    "size must be at least 2",
                ));
            }
            matrix_units(name, n, |i, j| i < j)
        }
        Builtin::PaperExample => {
            Algebra::from_triples(name, labels(["a", "a^2"]), &[(0, 0, 1, rat(1))])
        }
        Builtin::AnnihilatorModel => Algebra::from_triples(
            name,
            labels(["e", "r"]),
            &[(0, 0, 0, rat(1)), (1, 0, 1, rat(1))],
        ),
        Builtin::TruncatedPolynomial(k) => {
            if k < 2 {
                return Err(bad_size("truncated_polynomial", "k must be at least 2"));
            }
            // basis index i holds t^(i+1)
            let mut triples = Vec::new();
            for i in 0..k - 1 {
                for j in 0..k - 1 {
                    let deg = i + j + 2;
                    if deg < k {
                        triples.push((i, j, deg - 1, rat(1)));
                    }
                }
            }
            let names = (1..k).map(|e| {
                if e == 1 {
                    "t".to_string()
                } else {
                    format!("t^{e}")
                }
            });
            Algebra::from_triples(name, labels(names), &triples)
        }
    }
}

/// A finite group given by its multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl CayleyTable {
    /// Validate associativity, the Latin-square property and the identity.
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if identity >= n {
            return Err(Error::NotAGroup(format!(
                "identity index {identity} out of range"
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has length {}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!(
                    "row {i} contains out-of-range entry {bad}"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at triple ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut seen_row[table[i][j]], true) {
                    return Err(Error::NotAGroup(format!(
                        "row {i} repeats {}; not a Latin square",
                        table[i][j]
                    )));
                }
                if std::mem::replace(&mut seen_col[table[j][i]], true) {
                    return Err(Error::NotAGroup(format!(
                        "column {i} repeats {}; not a Latin square",
                        table[j][i]
                    )));
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| table[identity][x] != x || table[x][identity] != x) {
            return Err(Error::NotAGroup(format!(
                "index {identity} is not a two-sided identity (fails at {x})"
            )));
        }
        Ok(Self {
            name: name.into(),
            table,
            identity,
        })
    }

    /// Table of a group given by explicit elements and a product; the first
    /// element must be the identity.
    fn from_elements<T: PartialEq>(name: &str, elements: &[T], op: impl Fn(&T, &T) -> T) -> Self {
        let table = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| {
                        let ab = op(a, b);
                        elements
                            .iter()
                            .position(|e| *e == ab)
                            .expect("element list is closed under the product")
                    })
                    .collect()
            })
            .collect();
        Self::new(name, table, 0).expect("bundled tables are groups")
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        let elements: Vec<usize> = (0..n).collect();
        Self::from_elements(&format!("C{n}"), &elements, |a, b| (a + b) % n)
    }

    pub fn klein_four() -> Self {
        let elements: Vec<usize> = (0..4).collect();
        Self::from_elements("C2xC2", &elements, |a, b| a ^ b)
    }

    pub fn symmetric3() -> Self {
        Self::from_elements(
            "S3",
            &permutation_group(&[vec![1, 0, 2], vec![1, 2, 0]]),
            |p, q| compose(p, q),
        )
    }

    pub fn dihedral4() -> Self {
        Self::from_elements(
            "D4",
            &permutation_group(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]),
            |p, q| compose(p, q),
        )
    }

    pub fn quaternion() -> Self {
        // (negative, unit) with unit 0 = 1, 1 = i, 2 = j, 3 = k.
        let elements: Vec<(bool, usize)> = (0..4).flat_map(|u| [(false, u), (true, u)]).collect();
        Self::from_elements("Q8", &elements, |&(sa, a), &(sb, b)| {
            let (neg, unit) = quaternion_unit_product(a, b);
            (sa ^ sb ^ neg, unit)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}

fn quaternion_unit_product(a: usize, b: usize) -> (bool, usize) {
    match (a, b) {
        (0, u) | (u, 0) => (false, u),
        (x, y) if x == y => (true, 0),
        (1, 2) => (false, 3),
        (2, 3) => (false, 1),
        (3, 1) => (false, 2),
        (2, 1) => (true, 3),
        (3, 2) => (true, 1),
        (1, 3) => (true, 2),
        _ => unreachable!("quaternion units are 0..4"),
    }
}

/// `(p ∘ q)(i) = p(q(i))`.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

/// All products of the generators, sorted so the identity comes first.
fn permutation_group(generators: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = generators[0].len();
    let mut elements = vec![(0..n).collect::<Vec<_>>()];
    let mut frontier = elements.clone();
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = compose(g, &x);
            if !elements.contains(&y) {
                elements.push(y.clone());
                frontier.push(y);
            }
        }
    }
    elements.sort();
    elements
}

/// The bundled groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    C2,
    C3,
    C4,
    C2xC2,
    S3,
    Q8,
    D4,
}

impl NamedGroup {
    pub const ALL: [NamedGroup; 7] = [
        Self::C2,
        Self::C3,
        Self::C4,
        Self::C2xC2,
        Self::S3,
        Self::Q8,
        Self::D4,
    ];

    pub fn table(self) -> CayleyTable {
        match self {
            Self::C2 => CayleyTable::cyclic(2),
            Self::C3 => CayleyTable::cyclic(3),
            Self::C4 => CayleyTable::cyclic(4),
            Self::C2xC2 => CayleyTable::klein_four(),
            Self::S3 => CayleyTable::symmetric3(),
            Self::Q8 => CayleyTable::quaternion(),
            Self::D4 => CayleyTable::dihedral4(),
        }
    }

    pub fn algebra(self) -> Algebra {
        group_algebra(&self.table()).expect("bundled tables give associative algebras")
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::C2 => "C2",
            Self::C3 => "C3",
            Self::C4 => "C4",
            Self::C2xC2 => "C2xC2",
            Self::S3 => "S3",
            Self::Q8 => "Q8",
            Self::D4 => "D4",
        };
        f.write_str(s)
    }
}

impl FromStr for NamedGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|g| g.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownBuiltin(format!("group {s}")))
    }
}

/// `ℚ[G]`: basis `g_0 .. g_{n−1}` with `g_i · g_j = g_{table[i][j]}`.
pub fn group_algebra(t: &CayleyTable) -> Result<Algebra> {
    let n = t.order();
    let mut triples = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            triples.push((i, j, t.product(i, j), Rational::one()));
        }
    }
    let names = (0..n).map(|i| format!("g{i}"));
    Ok(
        Algebra::from_triples(format!("Q[{}]", t.name()), labels(names), &triples)?
            .with_note(GROUP_ALGEBRA_NOTE),
    )
}

/// Block-diagonal direct sum `A ⊕ B`.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Algebra {
    let (n, m) = (a.dim(), b.dim());
    let mut triples = Vec::new();
    for (i, j, k, c) in a.nonzero_triples() {
        triples.push((i, j, k, c));
    }
    for (i, j, k, c) in b.nonzero_triples() {
        triples.push((i + n, j + n, k + n, c));
    }
    let mut names: Vec<String> = a
        .basis_labels()
        .iter()
        .map(|l| format!("({l},0)"))
        .collect();
    names.extend(b.basis_labels().iter().map(|l| format!("(0,{l})")));
    debug_assert_eq!(names.len(), n + m);
    Algebra::from_triples(format!("{} ⊕ {}", a.name(), b.name()), names, &triples)
        .expect("a direct sum of associative algebras is associative")
}

/// The default catalog: seven named-family instances, the seven bundled group
/// algebras, and two direct sums.
pub fn builtin_catalog() -> Vec<Algebra> {
    let families = [
        Builtin::FullMatrix(2),
        Builtin::UpperTriangular(2),
        Builtin::UpperTriangular(3),
        Builtin::StrictlyUpperTriangular(3),
        Builtin::PaperExample,
        Builtin::AnnihilatorModel,
        Builtin::TruncatedPolynomial(4),
    ];
    let mut out: Vec<Algebra> = families
        .into_iter()
        .map(|b| builtin(b).expect("catalog sizes are valid"))
        .collect();
    out.extend(NamedGroup::ALL.into_iter().map(NamedGroup::algebra));
    let example = builtin(Builtin::PaperExample).expect("valid");
    out.push(direct_sum(&NamedGroup::C2.algebra(), &example));
    out.push(direct_sum(&example, &example));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;

    #[test]
    fn builtin_dimensions() {
        assert_eq!(builtin(Builtin::FullMatrix(2)).unwrap().dim(), 4);
        assert_eq!(builtin(Builtin::UpperTriangular(3)).unwrap().dim(), 6);
        assert_eq!(
            builtin(Builtin::StrictlyUpperTriangular(3)).unwrap().dim(),
            3
        );
        assert_eq!(builtin(Builtin::TruncatedPolynomial(4)).unwrap().dim(), 3);
        assert_eq!(builtin(Builtin::PaperExample).unwrap().dim(), 2);
    }

    #[test]
    fn bad_sizes() {
        assert!(matches!(
            builtin(Builtin::FullMatrix(0)),
            Err(Error::BadSize { .. })
        ));
        assert!(matches!(
            builtin(Builtin::StrictlyUpperTriangular(1)),
            Err(Error::BadSize { .. })
        ));
        assert!(matches!(
            Builtin::from_name("nope", None),
            Err(Error::UnknownBuiltin(_))
        ));
        assert!(matches!(
            Builtin::from_name("full_matrix", None),
            Err(Error::BadSize { .. })
        ));
    }

    #[test]
    fn bundled_group_orders() {
        let orders: Vec<usize> = NamedGroup::ALL.iter().map(|g| g.table().order()).collect();
        assert_eq!(orders, vec![2, 3, 4, 4, 6, 8, 8]);
        // S3, Q8 and D4 are non-abelian; the rest are abelian.
        for g in NamedGroup::ALL {
            let abelian = matches!(
                g,
                NamedGroup::C2 | NamedGroup::C3 | NamedGroup::C4 | NamedGroup::C2xC2
            );
            assert_eq!(g.algebra().is_commutative(), abelian, "{g}");
        }
        // Q8 has a unique element of order 2; D4 has five.
        let involutions = |t: &CayleyTable| {
            (0..t.order())
                .filter(|&x| x != t.identity() && t.product(x, x) == t.identity())
                .count()
        };
        assert_eq!(involutions(&CayleyTable::quaternion()), 1);
        assert_eq!(involutions(&CayleyTable::dihedral4()), 5);
    }

    #[test]
    fn group_algebra_unit_is_identity_vector() {
        for g in NamedGroup::ALL {
            let t = g.table();
            let a = g.algebra();
            let unit = a.basis_element(t.identity());
            for x in a.basis_elements() {
                assert_eq!(a.mul(&x, &unit), x);
                assert_eq!(a.mul(&unit, &x), x);
            }
            assert_eq!(a.note(), Some(GROUP_ALGEBRA_NOTE));
        }
    }

    #[test]
    fn corrupted_table_reports_a_triple() {
        // A loop of order 5: Latin square with identity 0, not associative.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = CayleyTable::new("bad", table, 0).unwrap_err();
        match err {
            Error::NotAGroup(msg) => {
                assert!(msg.contains("associativity fails at triple"), "{msg}")
            }
            other => panic!("unexpected {other:?}"),
        }
        let mut c3 = CayleyTable::cyclic(3).table().to_vec();
        c3[1][1] = 0;
        let err = CayleyTable::new("c3", c3, 0).unwrap_err();
        assert!(
            matches!(&err, Error::NotAGroup(m) if m.contains("triple")),
            "{err:?}"
        );
        let err = CayleyTable::new("latin", vec![vec![0, 1], vec![1, 1]], 0).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn direct_sum_is_block_diagonal() {
        let c2 = NamedGroup::C2.algebra();
        let p = builtin(Builtin::PaperExample).unwrap();
        let s = direct_sum(&c2, &p);
        assert_eq!(s.dim(), 4);
        let x = s.element_i64(&[1, 2, 3, 4]);
        let y = s.element_i64(&[0, 1, 1, 0]);
        let xy = s.mul(&x, &y);
        assert_eq!(xy, s.element_i64(&[2, 1, 0, 3]));
        let left: Subspace = Subspace::span(4, (0..2).map(|i| s.basis_element(i).into_coords()));
        assert!(left.contains_vector(s.mul(&s.basis_element(0), &s.basis_element(1)).coords()));
    }

    #[test]
    fn catalog_size() {
        let cat = builtin_catalog();
        assert_eq!(cat.len(), 16);
        let mut names: Vec<&str> = cat.iter().map(Algebra::name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 16);
    }
}
