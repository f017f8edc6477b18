//! Executable checks of the derivation theorems, one verdict per
//! `(check, algebra, kind)`.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Algebra, Element, Ideal, LinearMap};
use crate::derivation::{
    compose_and_classify, identity_witness, leibniz_iterate, lemma1_difference,
    rational_eigenpairs, solve_space, DerivationKind, DerivationSpace,
};
use crate::error::{Error, Result};
use crate::linalg::{rat, Rational, Subspace, DEFAULT_DEGREE_CAP};
use crate::structure::{
    check_ideal_invariance, ideal_closure, nilradical_with_cap, primitive_ideals, quotient,
    subspace_product, BlockDecomposition, Nilradical, PrimitiveOptions, DEFAULT_RETRIES,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

const TRIVIAL: &str = "trivially: empty derivation space";
const RATIONAL_ONLY: &str = "rational eigenvalues only";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    SingerWermer,
    SemisimpleTrivial,
    LeftDerivationRadical,
    PrimitiveInvariance,
    EigenCubeZero,
    EigenQuasiInverse,
    EigenEmptyUnital,
    RightIdentityTrivial,
    LeibnizFormula,
    Lemma1Ideal,
    JordanContainment,
    HabbAnalogue,
    PosnerCreedon,
}

/// Which kinds a check runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// `PQ`, `Left` and `Right`.
    Product,
    /// Jordan kinds; product kinds are mapped to their Jordan counterpart.
    Jordan,
    /// A single fixed kind, run once per algebra.
    Fixed(DerivationKind),
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        Self::SingerWermer,
        Self::SemisimpleTrivial,
        Self::LeftDerivationRadical,
        Self::PrimitiveInvariance,
        Self::EigenCubeZero,
        Self::EigenQuasiInverse,
        Self::EigenEmptyUnital,
        Self::RightIdentityTrivial,
        Self::LeibnizFormula,
        Self::Lemma1Ideal,
        Self::JordanContainment,
        Self::HabbAnalogue,
        Self::PosnerCreedon,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::SingerWermer => "singer_wermer",
            Self::SemisimpleTrivial => "semisimple_trivial",
            Self::LeftDerivationRadical => "left_derivation_radical",
            Self::PrimitiveInvariance => "primitive_invariance",
            Self::EigenCubeZero => "eigen_cube_zero",
            Self::EigenQuasiInverse => "eigen_quasi_inverse",
            Self::EigenEmptyUnital => "eigen_empty_unital",
            Self::RightIdentityTrivial => "right_identity_trivial",
            Self::LeibnizFormula => "leibniz_formula",
            Self::Lemma1Ideal => "lemma1_ideal",
            Self::JordanContainment => "jordan_containment",
            Self::HabbAnalogue => "habb_analogue",
            Self::PosnerCreedon => "posner_creedon",
        }
    }

    pub fn scope(self) -> Scope {
        match self {
            Self::LeftDerivationRadical => Scope::Fixed(DerivationKind::Left),
            Self::PosnerCreedon => Scope::Fixed(DerivationKind::Ordinary),
            Self::JordanContainment | Self::HabbAnalogue => Scope::Jordan,
            _ => Scope::Product,
        }
    }

    /// The kind this check actually runs on when asked for `kind`.
    pub fn resolve_kind(self, kind: Option<DerivationKind>) -> Result<DerivationKind> {
        match (self.scope(), kind) {
            (Scope::Fixed(k), _) => Ok(k),
            (Scope::Product, Some(k)) if k.validate().is_ok() && k.pq().is_some() => Ok(k),
            (Scope::Jordan, Some(k)) if k.validate().is_ok() && k.is_jordan() => Ok(k),
            (Scope::Jordan, Some(k)) if k.validate().is_ok() && k.pq().is_some() => Ok(match k {
                DerivationKind::Left => DerivationKind::JordanLeft,
                DerivationKind::Right => DerivationKind::JordanRight,
                _ => {
                    let (p, q) = k.pq().expect("guarded");
                    DerivationKind::JordanPQ { p, q }
                }
            }),
            (_, Some(k)) => Err(Error::InvalidKind(format!(
                "{} does not apply to kind {k}",
                self.as_str()
            ))),
            (_, None) => Err(Error::InvalidKind(format!(
                "{} needs a kind",
                self.as_str()
            ))),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::Skipped(_) => "skipped",
        }
    }
}

/// Counterexample data attached to a failing result.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Witness {
    pub map_index: Option<usize>,
    pub map: Option<LinearMap>,
    pub element: Option<Element>,
    pub note: String,
}

impl Witness {
    fn note(note: impl Into<String>) -> Self {
        Self {
            note: note.into(),
            ..Self::default()
        }
    }

    fn map(index: Option<usize>, map: &LinearMap, note: impl Into<String>) -> Self {
        Self {
            map_index: index,
            map: Some(map.clone()),
            element: None,
            note: note.into(),
        }
    }

    fn with_element(mut self, x: Element) -> Self {
        self.element = Some(x);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub check: CheckId,
    pub algebra: String,
    pub kind: Option<DerivationKind>,
    pub status: Status,
    pub witness: Option<Witness>,
    pub details: String,
}

impl CheckResult {
    fn sort_key(&self) -> (&'static str, &str, String) {
        (
            self.check.as_str(),
            self.algebra.as_str(),
            self.kind.map(|k| k.to_string()).unwrap_or_default(),
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// Caps, sampling sizes and the seed. Every report records them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub degree_cap: usize,
    pub retries: usize,
    /// `None` means `dim + 1`.
    pub nilpotency_cap: Option<usize>,
    pub leibniz_max_n: usize,
    /// Random elements, pairs and map combinations drawn per check.
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            degree_cap: DEFAULT_DEGREE_CAP,
            retries: DEFAULT_RETRIES,
            nilpotency_cap: None,
            leibniz_max_n: 4,
            samples: 3,
        }
    }
}

/// Summary of one algebra that took part in a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraInfo {
    pub name: String,
    pub dim: usize,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub version: String,
    pub options: VerifyOptions,
    pub algebras: Vec<AlgebraInfo>,
    pub results: Vec<CheckResult>,
    pub totals: Totals,
}

impl VerificationReport {
    pub fn new(
        options: VerifyOptions,
        algebras: Vec<AlgebraInfo>,
        mut results: Vec<CheckResult>,
    ) -> Self {
        results.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let mut totals = Totals::default();
        for r in &results {
            match r.status {
                Status::Pass => totals.pass += 1,
                Status::Fail => totals.fail += 1,
                Status::Skipped(_) => totals.skipped += 1,
            }
        }
        Self {
            version: VERSION.to_string(),
            options,
            algebras,
            results,
            totals,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.totals.fail == 0
    }
}

impl AlgebraInfo {
    pub fn of(a: &Algebra) -> Self {
        Self {
            name: a.name().to_string(),
            dim: a.dim(),
            note: a.note().map(str::to_string),
        }
    }
}

struct Outcome {
    status: Status,
    witness: Option<Witness>,
    details: String,
}

fn pass(details: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        status: Status::Pass,
        witness: None,
        details: details.into(),
    })
}

fn fail(witness: Witness, details: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        status: Status::Fail,
        witness: Some(witness),
        details: details.into(),
    })
}

fn skip(reason: impl Into<String>) -> Result<Outcome> {
    let reason = reason.into();
    Ok(Outcome {
        status: Status::Skipped(reason.clone()),
        witness: None,
        details: reason,
    })
}

/// Cached per-algebra data shared by all checks on that algebra.
struct Context<'a> {
    a: &'a Algebra,
    options: VerifyOptions,
    nil: Option<Result<Nilradical>>,
    blocks: Option<Result<BlockDecomposition>>,
    spaces: HashMap<DerivationKind, Result<DerivationSpace>>,
}

impl<'a> Context<'a> {
    fn new(a: &'a Algebra, options: VerifyOptions) -> Self {
        Self {
            a,
            options,
            nil: None,
            blocks: None,
            spaces: HashMap::new(),
        }
    }

    fn nilradical(&mut self) -> Result<Nilradical> {
        let (a, cap) = (self.a, self.options.nilpotency_cap);
        self.nil
            .get_or_insert_with(|| nilradical_with_cap(a, cap))
            .clone()
    }

    fn radical(&mut self) -> Result<Ideal> {
        Ok(self.nilradical()?.ideal)
    }

    fn blocks(&mut self) -> Result<BlockDecomposition> {
        let a = self.a;
        let opts = PrimitiveOptions {
            degree_cap: self.options.degree_cap,
            retries: self.options.retries,
            seed: self.options.seed,
        };
        self.blocks
            .get_or_insert_with(|| primitive_ideals(a, &opts))
            .clone()
    }

    fn space(&mut self, kind: DerivationKind) -> Result<DerivationSpace> {
        let a = self.a;
        self.spaces
            .entry(kind)
            .or_insert_with(|| solve_space(a, kind))
            .clone()
    }

    fn rng(&self, check: CheckId, kind: DerivationKind) -> ChaCha8Rng {
        let mut h = DefaultHasher::new();
        (
            self.options.seed,
            self.a.name(),
            check.as_str(),
            kind.to_string(),
        )
            .hash(&mut h);
        ChaCha8Rng::seed_from_u64(h.finish())
    }
}

fn random_element(rng: &mut ChaCha8Rng, dim: usize) -> Element {
    Element::new((0..dim).map(|_| rat(rng.gen_range(-3..=3))).collect())
}

fn combine(rng: &mut ChaCha8Rng, vectors: &[Vec<Rational>], len: usize) -> Option<Vec<Rational>> {
    let mut out = vec![Rational::from_integer(0.into()); len];
    let mut any = false;
    for v in vectors {
        let c = rat(rng.gen_range(-3..=3));
        if c == rat(0) {
            continue;
        }
        any = true;
        for (t, x) in out.iter_mut().zip(v) {
            *t += &c * x;
        }
    }
    any.then_some(out)
}

/// Basis maps, then up to `samples` random combinations of them. Entries are
/// `(basis index, map)`.
fn sample_maps(
    space: &DerivationSpace,
    rng: &mut ChaCha8Rng,
    samples: usize,
) -> Vec<(Option<usize>, LinearMap)> {
    let mut out: Vec<(Option<usize>, LinearMap)> = space
        .basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, d)| (Some(i), d))
        .collect();
    if space.dim() >= 2 {
        let n = space.basis[0].dim();
        let flats: Vec<Vec<Rational>> = space
            .basis
            .iter()
            .map(|d| d.matrix().entries().to_vec())
            .collect();
        for _ in 0..samples {
            if let Some(flat) = combine(rng, &flats, n * n) {
                out.push((None, LinearMap::from_flat(n, flat)));
            }
        }
    }
    out
}

/// Vectors of a subspace to test: its basis plus random combinations.
fn sample_vectors(space: &Subspace, rng: &mut ChaCha8Rng, samples: usize) -> Vec<Element> {
    let mut out: Vec<Element> = space.basis().iter().cloned().map(Element::new).collect();
    if space.dim() >= 2 {
        for _ in 0..samples {
            if let Some(v) = combine(rng, space.basis(), space.ambient_dim()) {
                out.push(Element::new(v));
            }
        }
    }
    out
}

/// First `(map, basis index)` whose image leaves `target`.
fn range_escape(space: &DerivationSpace, target: &Subspace) -> Option<(usize, usize)> {
    space.basis.iter().enumerate().find_map(|(i, d)| {
        (0..d.dim())
            .find(|&j| !target.contains_vector(d.image_of_basis(j).coords()))
            .map(|j| (i, j))
    })
}

fn describe_space(space: &DerivationSpace) -> String {
    format!("{} space of dim {}", space.kind, space.dim())
}

fn product_weights(kind: DerivationKind) -> (u64, u64) {
    kind.pq()
        .or_else(|| kind.jordan_pq())
        .expect("resolved kinds carry weights")
}

fn containment_check(
    a: &Algebra,
    space: &DerivationSpace,
    target: &Subspace,
    target_name: &str,
) -> Result<Outcome> {
    if space.dim() == 0 {
        return pass(format!("{TRIVIAL}; {target_name} has dim {}", target.dim()));
    }
    match range_escape(space, target) {
        Some((i, j)) => {
            let d = &space.basis[i];
            fail(
                Witness::map(
                    Some(i),
                    d,
                    format!("d({}) lies outside {target_name}", a.basis_labels()[j]),
                )
                .with_element(d.image_of_basis(j)),
                format!(
                    "{}: basis map {i} leaves {target_name}",
                    describe_space(space)
                ),
            )
        }
        None => pass(format!(
            "range of every map in the {} lies in {target_name} (dim {})",
            describe_space(space),
            target.dim()
        )),
    }
}

fn singer_wermer(ctx: &mut Context, kind: DerivationKind) -> Result<Outcome> {
    let nil = ctx.nilradical()?;
    let space = ctx.space(kind)?;
    let mut out = containment_check(ctx.a, &space, nil.ideal.space(), "nil(A)")?;
    if out.status == Status::Pass {
        out.details.push_str(&format!(
            "; nilpotency certificate exponent {}",
            nil.exponent
        ));
    }
    Ok(out)
}

fn semisimple_trivial(ctx: &mut Context, kind: DerivationKind) -> Result<Outcome> {
    let rad = ctx.radical()?;
    if !rad.is_zero() {
        return skip(format!("hypothesis fails: radical has dim {}", rad.dim()));
    }
    let space = ctx.space(kind)?;
    match space.basis.first() {
        Some(d) => fail(
            Witness::map(Some(0), d, "nonzero map on a semisimple algebra"),
            format!("semisimple algebra but {}", describe_space(&space)),
        ),
        None => pass("radical is zero and the derivation space has dim 0"),
    }
}

fn left_derivation_radical(ctx: &mut Context) -> Result<Outcome> {
    let rad = ctx.radical()?;
    let space = ctx.space(DerivationKind::Left)?;
    containment_check(ctx.a, &space, rad.space(), "rad(A)")
}

fn primitive_invariance(ctx: &mut Context, kind: DerivationKind) -> Result<Outcome> {
    let space = ctx.space(kind)?;
    let blocks = ctx.blocks()?;
    let ideals = &blocks.primitive_ideals;
    if space.dim() == 0 {
        return pass(format!("{TRIVIAL}; {} primitive ideals", ideals.len()));
    }
    if ideals.is_empty() {
        return pass("no primitive ideals: A/rad is zero");
    }
    let a = ctx.a;
    let quotients = ideals
        .iter()
        .map(|p| quotient(a, p))
        .collect::<Result<Vec<_>>>()?;
    for (i, d) in space.basis.iter().enumerate() {
        for (pi, (p, q)) in ideals.iter().zip(&quotients).enumerate() {
            if !check_ideal_invariance(d, p) {
                let x = p
                    .basis_elements()
                    .into_iter()
                    .find(|x| !p.contains(&d.apply(x)))
                    .expect("invariance failed on some basis vector");
                return fail(
                    Witness::map(Some(i), d, format!("d(x) leaves primitive ideal {pi}"))
                        .with_element(x),
                    format!(
                        "basis map {i} does not preserve primitive ideal {pi} (dim {})",
                        p.dim()
                    ),
                );
            }
            let induced = q.induced_map(d).expect("invariance was just checked");
            if let Some((x, y)) = identity_witness(&q.quotient, &induced, kind)? {
                return fail(
                    Witness::map(
                        Some(i),
                        d,
                        format!(
                            "induced map on A/P_{pi} fails the identity at basis pair ({x}, {y})"
                        ),
                    ),
                    format!("induced map on quotient {pi} is not a {kind} map"),
                );
            }
        }
    }
    let dims: Vec<String> = ideals.iter().map(|p| p.dim().to_string()).collect();
    pass(format!(
        "{} primitive ideals (dims {}) invariant under the {}; induced maps satisfy the identity",
        ideals.len(),
        dims.join(", "),
        describe_space(&space)
    ))
}

/// `(basis index, map, eigenvalue, eigenspace)`; no index for random combinations.
type SampledEigenpair = (Option<usize>, LinearMap, Rational, Subspace);

/// Nonzero eigenpairs of each sampled map.
fn eigen_data(
    ctx: &mut Context,
    check: CheckId,
    kind: DerivationKind,
) -> Result<(DerivationSpace, Vec<SampledEigenpair>, ChaCha8Rng)> {
    let space = ctx.space(kind)?;
    let mut rng = ctx.rng(check, kind);
    let mut out = Vec::new();
    for (idx, d) in sample_maps(&space, &mut rng, ctx.options.samples) {
        for pair in rational_eigenpairs(&d) {
            if pair.value != rat(0) {
                out.push((idx, d.clone(), pair.value, pair.space));
            }
        }
    }
    Ok((space, out, rng))
}

/// Whether `x³ = 0` for every `x` in `space`, via the polarised cube on a
/// basis: for `i ≤ j ≤ k` the sum over distinct orderings of `v_i v_j v_k`
/// must vanish. On failure returns an explicit `x` with `x³ ≠ 0`.
fn cube_zero_on(a: &Algebra, space: &Subspace) -> Option<Element> {
    let vs: Vec<Element> = space.basis().iter().cloned().map(Element::new).collect();
    let r = vs.len();
    let triple = |i: usize, j: usize, k: usize| a.mul(&a.mul(&vs[i], &vs[j]), &vs[k]);
    for i in 0..r {
        for j in i..r {
            for k in j..r {
                let mut orders = vec![
                    [i, j, k],
                    [i, k, j],
                    [j, i, k],
                    [j, k, i],
                    [k, i, j],
                    [k, j, i],
                ];
                orders.sort();
                orders.dedup();
                let mut sum = a.zero_element();
                for [x, y, z] in orders {
                    sum = &sum + &triple(x, y, z);
                }
                if sum.is_zero() {
                    continue;
                }
                // A nonzero cubic in three variables cannot vanish on {0,1,2,3}³.
                for s in 0..4i64 {
                    for t in 0..4i64 {
                        for u in 0..4i64 {
                            let x = &(&vs[i].scale(&rat(s)) + &vs[j].scale(&rat(t)))
                                + &vs[k].scale(&rat(u));
                            if !a.power(&x, 3).is_zero() {
                                return Some(x);
                            }
                        }
                    }
                }
                unreachable!("nonzero polarised cube with vanishing cube on a grid");
            }
        }
    }
    None
}

fn eigen_cube_zero(ctx: &mut Context, kind: DerivationKind) -> Result<Outcome> {
    let (space, pairs, _) = eigen_data(ctx, CheckId::EigenCubeZero, kind)?;
    if space.dim() == 0 {
        return pass(format!("{TRIVIAL}; {RATIONAL_ONLY}"));
    }
    for (idx, d, value, eigenspace) in &pairs {
        if let Some(x) = cube_zero_on(ctx.a, eigenspace) {
            return fail(
                Witness::map(
                    *idx,
                    d,
                    format!("eigenvector for {value} with nonzero cube"),
                )
                .with_element(x),
                format!("eigenspace for {value} is not cube-zero; {RATIONAL_ONLY}"),
            );
        }
    }
    pass(format!(
        "{} nonzero eigenpairs over the {}, every eigenvector has a^3 = 0; {RATIONAL_ONLY}",
        pairs.len(),
        describe_space(&space)
    ))
}

fn eigen_quasi_inverse(ctx: &mut Context, kind: DerivationKind) -> Result<Outcome> {
    let (space, pairs, mut rng) = eigen_data(ctx, CheckId::EigenQuasiInverse, kind)?;
    if space.dim() == 0 {
        return pass(format!("{TRIVIAL}; {RATIONAL_ONLY}"));
    }
    let a = ctx.a;
    let mut tested = 0;
    for (idx, d, value, eigenspace) in &pairs {
        for x in sample_vectors(eigenspace, &mut rng, ctx.options.samples) {
            tested += 1;
            let b = &(-&x) - &a.mul(&x, &x);
            if !a.is_quasi_inverse(&x, &b) {
                return fail(
                    Witness::map(
                        *idx,
                        d,
                        format!("-a-a^2 is not a quasi-inverse of this eigenvector for {value}"),
                    )
                    .with_element(x),
                    format!("quasi-inverse identity fails; {RATIONAL_ONLY}"),
                );
            }
        }
    }
    pass(format!(
        "{tested} eigenvectors over {} nonzero eigenpairs have quasi-inverse -a-a^2; {RATIONAL_ONLY}",
        pairs.len()
    ))
}

fn eigen_empty_unital(ctx: &mut Context, kind: DerivationKind) -> Result<Outcome> {
    // A nonzero finite-dimensional algebra without nonzero nilpotents is
    // semisimple, hence unital, so unitality covers both hypotheses.
    if !ctx.a.is_unital() {
        return skip("hypothesis fails: A is not unital, so it also has nonzero nilpotents");
    }
    let (space, pairs, _) = eigen_data(ctx, CheckId::EigenEmptyUnital, kind)?;
    if space.dim() == 0 {
        return pass(format!("{TRIVIAL}; {RATIONAL_ONLY}"));
    }
    if let Some((idx, d, value, eigenspace)) = pairs.first() {
        return fail(
            Witness::map(
                *idx,
                d,
                format!("nonzero eigenvalue {value} on a unital algebra"),
            )
            .with_element(Element::new(eigenspace.basis()[0].clone())),
            format!("unital algebra with a nonzero rational eigenvalue; {RATIONAL_ONLY}"),
        );
    }
    pass(format!(
        "no nonzero rational eigenvalue on the {}; {RATIONAL_ONLY}",
        describe_space(&space)
    ))
}

fn right_identity_trivial(ctx: &mut Context, kind: DerivationKind) -> Result<Outcome> {
    let Some(e) = ctx.a.find_right_identity() else {
        return skip("hypothesis fails: no right identity");
    };
    let space = ctx.space(kind)?;
    let label = ctx.a.format_element(&e);
    match space.basis.first() {
        Some(d) => fail(
            Witness::map(
                Some(0),
                d,
                format!("nonzero map although {label} is a right identity"),
            ),
            format!("right identity {label} but {}", describe_space(&space)),
        ),
        None => pass(format!(
            "right identity {label}; derivation space has dim 0"
        )),
    }
}

fn leibniz_formula(ctx: &mut Context, kind: DerivationKind) -> Result<Outcome> {
    let space = ctx.space(kind)?;
    if space.dim() == 0 {
        return pass(TRIVIAL);
    }
    let (p, q) = product_weights(kind);
    let a = ctx.a;
    let mut rng = ctx.rng(CheckId::LeibnizFormula, kind);
    let samples = ctx.options.samples;
    let maps = sample_maps(&space, &mut rng, samples);
    let mut pairs: Vec<(Element, Element)> = Vec::new();
    for x in a.basis_elements() {
        for y in a.basis_elements() {
            pairs.push((x.clone(), y));
        }
    }
    for _ in 0..samples {
        pairs.push((
            random_element(&mut rng, a.dim()),
            random_element(&mut rng, a.dim()),
        ));
    }
    let max_n = ctx.options.leibniz_max_n;
    for (idx, d) in &maps {
        for (x, y) in &pairs {
            for n in 1..=max_n {
                let (lhs, rhs) = leibniz_iterate(a, d, x, y, n, p, q)?;
                if lhs != rhs {
                    return fail(
                        Witness::map(
                            *idx,
                            d,
                            format!(
                                "n = {n}, a1 = {}, a2 = {}",
                                a.format_element(x),
                                a.format_element(y)
                            ),
                        )
                        .with_element(&lhs - &rhs),
                        format!("iterated product rule fails at n = {n}"),
                    );
                }
            }
        }
    }
    pass(format!(
        "{} maps x {} pairs x n = 1..{max_n} agree exactly",
        maps.len(),
        pairs.len()
    ))
}

/// Nonzero powers of the radical and the ideals generated by single basis
/// vectors, without repeats.
fn test_ideals(ctx: &mut Context) -> Result<Vec<Ideal>> {
    let a = ctx.a;
    let rad = ctx.radical()?;
    let mut out: Vec<Ideal> = Vec::new();
    let mut push = |i: Ideal| {
        if !i.is_zero() && !out.iter().any(|o| o.space() == i.space()) {
            out.push(i);
        }
    };
    let mut power = rad.space().clone();
    while !power.is_zero() {
        push(Ideal::new(a, power.clone())?);
        power = subspace_product(a, &power, rad.space());
    }
    for e in a.basis_elements() {
        push(ideal_closure(a, &[e]));
    }
    Ok(out)
}

fn lemma1_ideal(ctx: &mut Context, kind: DerivationKind) -> Result<Outcome> {
    let space = ctx.space(kind)?;
    if space.dim() == 0 {
        return pass(TRIVIAL);
    }
    let (p, q) = product_weights(kind);
    let a = ctx.a;
    let ideals = test_ideals(ctx)?;
    let mut rng = ctx.rng(CheckId::Lemma1Ideal, kind);
    let samples = ctx.options.samples;
    let maps = sample_maps(&space, &mut rng, samples);
    let max_n = ctx.options.leibniz_max_n;
    let mut tested = 0usize;
    for (idx, d) in &maps {
        for (ii, ideal) in ideals.iter().enumerate() {
            for iota in sample_vectors(ideal.space(), &mut rng, samples) {
                for n in 1..=max_n {
                    tested += 1;
                    let diff = lemma1_difference(a, d, ideal, &iota, n, p, q)?;
                    if !ideal.contains(&diff) {
                        return fail(
                            Witness::map(
                                *idx,
                                d,
                                format!("n = {n}, iota = {}, ideal {ii}", a.format_element(&iota)),
                            )
                            .with_element(diff),
                            format!(
                                "difference leaves ideal {ii} (dim {}) at n = {n}",
                                ideal.dim()
                            ),
                        );
                    }
                }
            }
        }
    }
    pass(format!(
        "{tested} memberships over {} ideals and {} maps, n = 1..{max_n}",
        ideals.len(),
        maps.len()
    ))
}

fn positive_weights(kind: DerivationKind) -> Option<(u64, u64)> {
    let (p, q) = product_weights(kind);
    (p > 0 && q > 0).then_some((p, q))
}

fn jordan_containment(ctx: &mut Context, kind: DerivationKind) -> Result<Outcome> {
    if positive_weights(kind).is_none() {
        return skip("hypothesis fails: p and q must both be positive");
    }
    let rad = ctx.radical()?;
    if !rad.is_zero() {
        return skip(format!(
            "hypothesis fails: not semiprime (radical dim {})",
            rad.dim()
        ));
    }
    let space = ctx.space(kind)?;
    if space.dim() == 0 {
        return pass(TRIVIAL);
    }
    for (i, d) in space.basis.iter().enumerate() {
        if let Some((x, y)) = identity_witness(ctx.a, d, DerivationKind::Ordinary)? {
            return fail(
                Witness::map(
                    Some(i),
                    d,
                    format!("not a derivation at basis pair ({x}, {y})"),
                ),
                format!("{} contains a non-derivation", describe_space(&space)),
            );
        }
    }
    pass(format!(
        "every map in the {} is an ordinary derivation",
        describe_space(&space)
    ))
}

fn habb_analogue(ctx: &mut Context, kind: DerivationKind) -> Result<Outcome> {
    if positive_weights(kind).is_none() {
        return skip("hypothesis fails: p and q must both be positive");
    }
    let a = ctx.a;
    if a.find_right_identity().is_none() {
        return skip("hypothesis fails: no right identity");
    }
    let ran = a.right_annihilator();
    if ran.is_zero() {
        return skip("hypothesis fails: right annihilator is zero");
    }
    let space = ctx.space(kind)?;
    let mut out = containment_check(a, &space, ran.space(), "ran(A)")?;
    if out.status != Status::Pass {
        return Ok(out);
    }
    for (i, d) in space.basis.iter().enumerate() {
        if let Some((x, y)) = identity_witness(a, d, DerivationKind::JordanLeft)? {
            return fail(
                Witness::map(
                    Some(i),
                    d,
                    format!("Jordan-left identity fails at basis pair ({x}, {y})"),
                ),
                "map is not a Jordan left derivation",
            );
        }
    }
    if space.dim() > 0 {
        out.details
            .push_str("; every map is a Jordan left derivation");
    }
    Ok(out)
}

fn posner_creedon(ctx: &mut Context) -> Result<Outcome> {
    let kind = DerivationKind::Ordinary;
    let space = ctx.space(kind)?;
    if space.dim() == 0 {
        return pass(TRIVIAL);
    }
    let rad = ctx.radical()?;
    let a = ctx.a;
    let mut rng = ctx.rng(CheckId::PosnerCreedon, kind);
    let maps = sample_maps(&space, &mut rng, ctx.options.samples);
    let (mut pairs, mut derivations) = (0usize, 0usize);
    for (i1, d1) in &maps {
        for (i2, d2) in &maps {
            pairs += 1;
            let c = compose_and_classify(a, d1, d2)?;
            if !c.is_ordinary_derivation {
                continue;
            }
            derivations += 1;
            if !rad.space().contains(&c.range)? {
                let j = (0..a.dim())
                    .find(|&j| !rad.contains(&c.composition.image_of_basis(j)))
                    .expect("range escapes on some basis vector");
                let which = |i: &Option<usize>| {
                    i.map_or("combination".to_string(), |i| format!("basis map {i}"))
                };
                return fail(
                    Witness::map(
                        None,
                        &c.composition,
                        format!("{} composed with {}", which(i1), which(i2)),
                    )
                    .with_element(c.composition.image_of_basis(j)),
                    "composition is a derivation but its range leaves rad(A)",
                );
            }
        }
    }
    pass(format!(
        "{derivations} of {pairs} sampled compositions are derivations, all with range in rad(A) (dim {})",
        rad.dim()
    ))
}

fn run(ctx: &mut Context, check: CheckId, kind: DerivationKind) -> Result<Outcome> {
    match check {
        CheckId::SingerWermer => singer_wermer(ctx, kind),
        CheckId::SemisimpleTrivial => semisimple_trivial(ctx, kind),
        CheckId::LeftDerivationRadical => left_derivation_radical(ctx),
        CheckId::PrimitiveInvariance => primitive_invariance(ctx, kind),
        CheckId::EigenCubeZero => eigen_cube_zero(ctx, kind),
        CheckId::EigenQuasiInverse => eigen_quasi_inverse(ctx, kind),
        CheckId::EigenEmptyUnital => eigen_empty_unital(ctx, kind),
        CheckId::RightIdentityTrivial => right_identity_trivial(ctx, kind),
        CheckId::LeibnizFormula => leibniz_formula(ctx, kind),
        CheckId::Lemma1Ideal => lemma1_ideal(ctx, kind),
        CheckId::JordanContainment => jordan_containment(ctx, kind),
        CheckId::HabbAnalogue => habb_analogue(ctx, kind),
        CheckId::PosnerCreedon => posner_creedon(ctx),
    }
}

fn run_to_result(ctx: &mut Context, check: CheckId, kind: DerivationKind) -> CheckResult {
    let outcome = match run(ctx, check, kind) {
        Ok(o) => o,
        // Failed internal verification is a bug, never a skip.
        Err(e @ Error::Internal(_)) => Outcome {
            status: Status::Fail,
            witness: Some(Witness::note(e.to_string())),
            details: format!("internal verification failed: {e}"),
        },
        Err(e) => Outcome {
            status: Status::Skipped(format!("not computable: {e}")),
            witness: None,
            details: format!("not computable: {e}"),
        },
    };
    CheckResult {
        check,
        algebra: ctx.a.name().to_string(),
        kind: Some(kind),
        status: outcome.status,
        witness: outcome.witness,
        details: outcome.details,
    }
}

/// Run one check. Product checks need a product kind; Jordan checks accept a
/// Jordan kind or a product kind standing for its Jordan counterpart; the
/// two fixed-kind checks ignore `kind`.
pub fn verify(
    check: CheckId,
    a: &Algebra,
    kind: Option<DerivationKind>,
    options: &VerifyOptions,
) -> Result<CheckResult> {
    let kind = check.resolve_kind(kind)?;
    let mut ctx = Context::new(a, *options);
    Ok(run_to_result(&mut ctx, check, kind))
}

pub fn verify_by_name(
    check: &str,
    a: &Algebra,
    kind: Option<DerivationKind>,
    options: &VerifyOptions,
) -> Result<CheckResult> {
    verify(check.parse()?, a, kind, options)
}

/// `(check, kind)` pairs the suite runs for the given kinds, in order.
pub fn suite_plan(kinds: &[DerivationKind]) -> Vec<(CheckId, DerivationKind)> {
    let mut plan = Vec::new();
    for check in CheckId::ALL {
        let mut seen: Vec<DerivationKind> = Vec::new();
        let resolved: Vec<DerivationKind> = match check.scope() {
            Scope::Fixed(k) => vec![k],
            _ => kinds
                .iter()
                .filter_map(|&k| check.resolve_kind(Some(k)).ok())
                .collect(),
        };
        for k in resolved {
            if !seen.contains(&k) {
                seen.push(k);
                plan.push((check, k));
            }
        }
    }
    plan
}

/// Every applicable check over `algebras × kinds`. Algebras are processed in
/// parallel; the report is sorted by `(check, algebra, kind)` so the output
/// does not depend on scheduling.
pub fn run_suite(
    algebras: &[Algebra],
    kinds: &[DerivationKind],
    options: &VerifyOptions,
) -> VerificationReport {
    let plan = suite_plan(kinds);
    let results: Vec<CheckResult> = algebras
        .par_iter()
        .flat_map_iter(|a| {
            let mut ctx = Context::new(a, *options);
            plan.iter()
                .map(|&(check, kind)| run_to_result(&mut ctx, check, kind))
                .collect::<Vec<_>>()
        })
        .collect();
    VerificationReport::new(
        *options,
        algebras.iter().map(AlgebraInfo::of).collect(),
        results,
    )
}

/// The default kinds of the acceptance run.
pub fn default_kinds() -> Vec<DerivationKind> {
    [(0, 1), (1, 0), (1, 2), (2, 1), (1, 3)]
        .into_iter()
        .map(|(p, q)| DerivationKind::PQ { p, q })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{builtin, direct_sum, Builtin, NamedGroup};

    const PQ12: DerivationKind = DerivationKind::PQ { p: 1, q: 2 };

    fn opts() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn check_ids_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.as_str().parse::<CheckId>().unwrap(), c);
        }
        assert!(matches!(
            "nope".parse::<CheckId>(),
            Err(Error::UnknownCheck(_))
        ));
        let a = builtin(Builtin::PaperExample).unwrap();
        assert!(matches!(
            verify_by_name("nope", &a, Some(PQ12), &opts()),
            Err(Error::UnknownCheck(_))
        ));
    }

    #[test]
    fn kind_resolution() {
        assert_eq!(
            CheckId::JordanContainment.resolve_kind(Some(PQ12)).unwrap(),
            DerivationKind::JordanPQ { p: 1, q: 2 }
        );
        assert_eq!(
            CheckId::PosnerCreedon.resolve_kind(None).unwrap(),
            DerivationKind::Ordinary
        );
        assert!(CheckId::SingerWermer
            .resolve_kind(Some(DerivationKind::Ordinary))
            .is_err());
        assert!(CheckId::SingerWermer.resolve_kind(None).is_err());
    }

    #[test]
    fn examples() {
        let m2 = builtin(Builtin::FullMatrix(2)).unwrap();
        let r = verify(CheckId::SemisimpleTrivial, &m2, Some(PQ12), &opts()).unwrap();
        assert_eq!(r.status, Status::Pass);

        let s = direct_sum(
            &NamedGroup::C2.algebra(),
            &builtin(Builtin::PaperExample).unwrap(),
        );
        let r = verify(CheckId::SingerWermer, &s, Some(PQ12), &opts()).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.details);
        assert!(!r.details.starts_with("trivially"));

        let p = builtin(Builtin::PaperExample).unwrap();
        let r = verify(CheckId::EigenCubeZero, &p, Some(PQ12), &opts()).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.details);
        assert!(r.details.contains(RATIONAL_ONLY));
        let r = verify(CheckId::SemisimpleTrivial, &p, Some(PQ12), &opts()).unwrap();
        assert!(matches!(r.status, Status::Skipped(_)));
    }

    #[test]
    fn cube_polarisation_finds_witnesses() {
        let t = builtin(Builtin::TruncatedPolynomial(4)).unwrap();
        // span{t}: t^3 ≠ 0.
        let x = cube_zero_on(&t, &Subspace::span(3, [t.basis_element(0).into_coords()])).unwrap();
        assert!(!t.power(&x, 3).is_zero());
        let p = builtin(Builtin::PaperExample).unwrap();
        assert!(cube_zero_on(&p, &Subspace::full(2)).is_none());
        // In M_2 each of e12, e21 cubes to zero but e12 + e21 does not.
        let m2 = builtin(Builtin::FullMatrix(2)).unwrap();
        let plane = Subspace::span(
            4,
            [
                m2.basis_element(1).into_coords(),
                m2.basis_element(2).into_coords(),
            ],
        );
        let x = cube_zero_on(&m2, &plane).unwrap();
        assert!(!m2.power(&x, 3).is_zero());
    }

    #[test]
    fn broken_map_is_caught() {
        // A non-derivation fed through the containment helper.
        let p = builtin(Builtin::PaperExample).unwrap();
        let space = DerivationSpace {
            algebra: p.name().into(),
            kind: PQ12,
            space: Subspace::full(4),
            basis: vec![LinearMap::identity(2)],
        };
        let out = containment_check(
            &p,
            &space,
            &Subspace::span(2, [p.basis_element(1).into_coords()]),
            "span{a^2}",
        )
        .unwrap();
        assert_eq!(out.status, Status::Fail);
        let w = out.witness.unwrap();
        assert_eq!(w.element.unwrap(), p.basis_element(0));
    }

    #[test]
    fn nilpotent_suite() {
        let p = builtin(Builtin::PaperExample).unwrap();
        let report = run_suite(&[p], &[PQ12], &opts());
        let find = |c: CheckId| report.results.iter().find(|r| r.check == c).unwrap();
        assert!(matches!(
            find(CheckId::SemisimpleTrivial).status,
            Status::Skipped(_)
        ));
        assert_eq!(find(CheckId::SingerWermer).status, Status::Pass);
        assert_eq!(report.totals.fail, 0, "{:#?}", report.results);
    }

    #[test]
    fn empty_suite() {
        let report = run_suite(&[], &default_kinds(), &opts());
        assert!(report.results.is_empty());
        assert_eq!(report.totals, Totals::default());
    }
}
