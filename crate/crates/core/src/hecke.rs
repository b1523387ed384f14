//! The truncation `1_omega S 1_omega`, `omega = (1^d)`, and its generators.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bases::{enumerate_basis, independent_subset, rank_of_family, BasisKind, BasisTable};
use crate::error::{Result, SchurError};
use crate::ring::factorial;
use crate::tensormodel::{Model, SparseOperator, Weight};
use crate::verify::{CheckReport, ReportBuilder};

/// Cap on closure rounds in [`check_hecke_generation`].
pub const MAX_ROUNDS: usize = 10;

#[derive(Clone, Debug, Serialize)]
pub struct TruncationResult {
    pub omega: Weight,
    /// Nonzero `1_omega b 1_omega` for `b` in `B1`.
    #[serde(skip)]
    pub family: Vec<SparseOperator>,
    pub nonzero: usize,
    pub dim: usize,
    /// Rank of the truncated `B2` family.
    pub dim_b2: usize,
    pub expected: usize,
}

impl TruncationResult {
    pub fn pass(&self) -> bool {
        self.dim == self.expected && self.dim_b2 == self.expected
    }
}

/// `(1^d, 0, ..., 0)`.
pub fn omega(n: usize, d: usize) -> Weight {
    Weight((0..n).map(|k| (k < d) as u32).collect())
}

fn truncate(model: &Model, omega: &SparseOperator, kind: BasisKind) -> Result<Vec<SparseOperator>> {
    let table = BasisTable::new(model, enumerate_basis(model.n(), model.d(), kind))?;
    Ok(table
        .ops()
        .iter()
        .map(|b| omega.compose(b).compose(omega))
        .filter(|x| !x.is_zero())
        .collect())
}

pub fn omega_truncation(model: &Model) -> Result<TruncationResult> {
    let (n, d) = (model.n(), model.d());
    if n < d {
        return Err(SchurError::Hypothesis(format!("truncation needs n >= d, got n = {n}, d = {d}")));
    }
    let w = omega(n, d);
    let one = model.weight_idempotent(&w)?;
    let family = truncate(model, one, BasisKind::B1)?;
    let family_b2 = truncate(model, one, BasisKind::B2)?;
    Ok(TruncationResult {
        omega: w,
        nonzero: family.len(),
        dim: rank_of_family(model, &family),
        dim_b2: rank_of_family(model, &family_b2),
        expected: factorial(d as u64).to_usize().expect("small"),
        family,
    })
}

/// Rank of the algebra generated by `gens` and `unit`, with the number of
/// rounds it took to stabilize.
fn closure_rank(model: &Model, unit: &SparseOperator, gens: &[SparseOperator]) -> (usize, usize) {
    let mut span: Vec<SparseOperator> = std::iter::once(unit.clone()).chain(gens.iter().cloned()).collect();
    span = independent_subset(model, &span).into_iter().map(|k| span[k].clone()).collect();
    for round in 1..=MAX_ROUNDS {
        let mut candidates = span.clone();
        for x in &span {
            candidates.extend(gens.iter().map(|g| x.compose(g)));
        }
        let keep = independent_subset(model, &candidates);
        if keep.len() == span.len() {
            return (span.len(), round);
        }
        span = keep.into_iter().map(|k| candidates[k].clone()).collect();
    }
    (span.len(), MAX_ROUNDS + 1)
}

/// For `n = d`: both `{1_omega E_i F_i 1_omega}` and `{1_omega F_i E_i 1_omega}`
/// generate an algebra of dimension `d!`.
pub fn check_hecke_generation(model: &Model) -> Result<CheckReport> {
    let (n, d) = (model.n(), model.d());
    if n != d {
        return Err(SchurError::Hypothesis(format!("generation is stated for n = d, got n = {n}, d = {d}")));
    }
    let mut b = ReportBuilder::new("hecke_generation", n, d, model.mode());
    let one = model.weight_idempotent(&omega(n, d))?;
    let expected = factorial(d as u64).to_usize().expect("small");
    for (id, ef) in [("EF", true), ("FE", false)] {
        let gens: Vec<SparseOperator> = (1..n)
            .map(|i| {
                let (e, f) = (model.raise(i), model.lower(i));
                let mid = if ef { e.compose(f) } else { f.compose(e) };
                one.compose(&mid).compose(one)
            })
            .collect();
        let (rank, rounds) = closure_rank(model, one, &gens);
        b.case(id, rank == expected && rounds <= MAX_ROUNDS, || {
            format!("rank {rank} expected {expected} after {rounds} rounds")
        });
        b.note(format!("{id}: rank {rank} after {rounds} rounds"));
    }
    Ok(b.finish())
}

/// `{omega, dim, expected, generation: {EF, FE}}`.
#[derive(Clone, Debug, Serialize)]
pub struct HeckeSummary {
    pub omega: Weight,
    pub dim: usize,
    pub dim_b2: usize,
    pub nonzero: usize,
    pub expected: usize,
    pub generation: Option<Generation>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Generation {
    #[serde(rename = "EF")]
    pub ef: bool,
    #[serde(rename = "FE")]
    pub fe: bool,
}

/// Truncation plus, when `n = d`, the generation check.
pub fn hecke_summary(model: &Model) -> Result<HeckeSummary> {
    let t = omega_truncation(model)?;
    let generation = if model.n() == model.d() {
        let r = check_hecke_generation(model)?;
        let flag = |id: &str| r.relation(id).is_some_and(|x| x.pass);
        Some(Generation { ef: flag("EF"), fe: flag("FE") })
    } else {
        None
    };
    let pass = t.pass() && generation.as_ref().is_none_or(|g| g.ef && g.fe);
    Ok(HeckeSummary {
        omega: t.omega.clone(),
        dim: t.dim,
        dim_b2: t.dim_b2,
        nonzero: t.nonzero,
        expected: t.expected,
        generation,
        pass,
    })
}
