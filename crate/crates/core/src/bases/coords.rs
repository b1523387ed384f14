use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, SchurError};
use crate::ring::Scalar;
use crate::rootvectors::{eval_label, BasisLabel};
use crate::tensormodel::{Model, SparseOperator, Weight};

/// Coordinates with respect to a basis: `(label position, coefficient)`,
/// ascending by position, no zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoefficientVector {
    entries: Vec<(usize, Scalar)>,
}

impl CoefficientVector {
    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn get(&self, k: usize) -> Scalar {
        self.entries
            .binary_search_by_key(&k, |e| e.0)
            .map(|i| self.entries[i].1.clone())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// All coefficients lie in `Z` resp. `Z[v, v^-1]`.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|(_, x)| x.is_integral())
    }

    /// Label key to scalar string.
    pub fn keyed(&self, labels: &[BasisLabel]) -> BTreeMap<String, String> {
        self.entries
            .iter()
            .map(|(k, x)| (labels[*k].key(), x.to_string()))
            .collect()
    }
}

type Block = (Weight, Weight);

/// A basis together with its evaluated operators.
///
/// When every basis operator lives in a single (row weight, column weight)
/// block, as for `B1`/`B2`, coordinates are found block by block.
#[derive(Clone, Debug)]
pub struct BasisTable {
    labels: Vec<BasisLabel>,
    ops: Vec<SparseOperator>,
    blocks: Option<BTreeMap<Block, Vec<usize>>>,
    index: HashMap<BasisLabel, usize>,
}

impl BasisTable {
    pub fn new(model: &Model, labels: Vec<BasisLabel>) -> Result<Self> {
        let ops: Vec<SparseOperator> = labels
            .par_iter()
            .map(|l| eval_label(model, l))
            .collect::<Result<_>>()?;
        let mut blocks: Option<BTreeMap<Block, Vec<usize>>> = Some(BTreeMap::new());
        for (k, op) in ops.iter().enumerate() {
            if op.is_zero() {
                continue;
            }
            match (model.block_of(op), blocks.as_mut()) {
                (Some(b), Some(map)) => map.entry(b).or_default().push(k),
                _ => blocks = None,
            }
        }
        let index = labels.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
        Ok(Self { labels, ops, blocks, index })
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn ops(&self) -> &[SparseOperator] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, label: &BasisLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// The unique expansion of `op`; `NotInSpan` if there is none.
    pub fn coordinates(&self, model: &Model, op: &SparseOperator) -> Result<CoefficientVector> {
        let mut entries = Vec::new();
        match &self.blocks {
            Some(blocks) => {
                let mut by_block: BTreeMap<Block, Vec<(usize, usize, Scalar)>> = BTreeMap::new();
                for (r, c, x) in op.entries() {
                    let key = (model.word_weight(r).clone(), model.word_weight(c).clone());
                    by_block.entry(key).or_default().push((r, c, x.clone()));
                }
                for (key, target) in by_block {
                    let members = blocks.get(&key).ok_or(SchurError::NotInSpan)?;
                    entries.extend(solve(&self.ops, members, &target)?);
                }
            }
            None => {
                let members: Vec<usize> = (0..self.ops.len()).collect();
                let target: Vec<_> = op.entries().map(|(r, c, x)| (r, c, x.clone())).collect();
                entries.extend(solve(&self.ops, &members, &target)?);
            }
        }
        entries.sort_by_key(|e| e.0);
        Ok(CoefficientVector { entries })
    }

    /// Coordinates of `b_i b_j`.
    pub fn structure_constants(&self, model: &Model, i: usize, j: usize) -> Result<CoefficientVector> {
        let get = |k: usize| {
            self.ops
                .get(k)
                .ok_or(SchurError::IndexOutOfRange { what: "basis label", index: k })
        };
        let product = get(i)?.compose(get(j)?);
        self.coordinates(model, &product)
    }

    /// Structure constants for the given pairs, evaluated in parallel.
    pub fn table(&self, model: &Model, pairs: &[(usize, usize)]) -> Result<StructTable> {
        let triples = pairs
            .par_iter()
            .map(|&(i, j)| {
                let coeffs = self.structure_constants(model, i, j)?;
                Ok(StructTriple {
                    left: self.labels[i].key(),
                    right: self.labels[j].key(),
                    integral: coeffs.is_integral(),
                    coeffs: coeffs.keyed(&self.labels),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(StructTable { basis: self.labels.clone(), triples })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StructTriple {
    pub left: String,
    pub right: String,
    pub coeffs: BTreeMap<String, String>,
    pub integral: bool,
}

/// `{basis: [labels], triples: [{left, right, coeffs}]}`.
#[derive(Clone, Debug, Serialize)]
pub struct StructTable {
    pub basis: Vec<BasisLabel>,
    pub triples: Vec<StructTriple>,
}

impl StructTable {
    pub fn is_integral(&self) -> bool {
        self.triples.iter().all(|t| t.integral)
    }
}

/// Solves `sum_k x_k ops[members[k]] = target` by Gauss-Jordan elimination
/// over the scalar field, with free variables set to zero.
fn solve(
    ops: &[SparseOperator],
    members: &[usize],
    target: &[(usize, usize, Scalar)],
) -> Result<Vec<(usize, Scalar)>> {
    let mut positions: BTreeSet<(usize, usize)> = target.iter().map(|(r, c, _)| (*c, *r)).collect();
    for &k in members {
        positions.extend(ops[k].entries().map(|(r, c, _)| (c, r)));
    }
    let row_of: HashMap<(usize, usize), usize> =
        positions.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let width = members.len();
    let mut m = vec![vec![Scalar::zero(); width + 1]; positions.len()];
    for (col, &k) in members.iter().enumerate() {
        for (r, c, x) in ops[k].entries() {
            m[row_of[&(c, r)]][col] = x.clone();
        }
    }
    for (r, c, x) in target {
        m[row_of[&(*c, *r)]][width] = x.clone();
    }

    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..width {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        let pivot_row: Vec<Scalar> = m[row].iter().map(|x| x * &inv).collect();
        for (i, r) in m.iter_mut().enumerate() {
            if i != row && !r[col].is_zero() {
                let f = r[col].clone();
                for (x, y) in r.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        m[row] = pivot_row;
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[width].is_zero()) {
        return Err(SchurError::NotInSpan);
    }
    Ok(pivots
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !m[*i][width].is_zero())
        .map(|(i, col)| (members[col], m[i][width].clone()))
        .collect())
}

/// Coordinates of `op` in the basis `labels`.
pub fn coordinates(model: &Model, op: &SparseOperator, labels: &[BasisLabel]) -> Result<CoefficientVector> {
    BasisTable::new(model, labels.to_vec())?.coordinates(model, op)
}

/// Coordinates of `labels[i] * labels[j]` in the basis `labels`.
pub fn structure_constants(model: &Model, labels: &[BasisLabel], i: usize, j: usize) -> Result<CoefficientVector> {
    BasisTable::new(model, labels.to_vec())?.structure_constants(model, i, j)
}
