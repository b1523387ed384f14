//! Exact rank of operator families.
//!
//! Each operator is flattened to an integer vector (denominators cleared;
//! quantum entries first specialized at a rational point). Vectors are split
//! by weight shift, since different shifts have disjoint supports. Within a
//! class a mod-p echelon picks rows that are certainly independent over `Q`;
//! only rows that look dependent mod p are then checked by exact
//! fraction-free elimination.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::ring::Mode;
use crate::tensormodel::{Model, SparseOperator};

/// Points `v = p/q` used for quantum rank certificates.
pub const SPECIALIZATION_POINTS: [(i64, i64); 2] = [(7, 5), (11, 7)];

const PRIME: u64 = 2_147_483_647;

type IntRow = Vec<(usize, BigInt)>;

fn point(k: usize) -> BigRational {
    let (p, q) = SPECIALIZATION_POINTS[k];
    BigRational::new(p.into(), q.into())
}

fn integer_row(op: &SparseOperator, at: Option<&BigRational>) -> IntRow {
    let dim = op.dim();
    let vals: Vec<(usize, BigRational)> = op
        .entries()
        .map(|(r, c, x)| {
            let q = match at {
                Some(p) => x.specialize(p).expect("specialization point is not a pole"),
                None => x.as_rational().expect("classical operator").clone(),
            };
            (c * dim + r, q)
        })
        .filter(|(_, q)| !q.is_zero())
        .collect();
    let lcm = vals
        .iter()
        .fold(BigInt::from(1), |acc, (_, q)| acc.lcm(q.denom()));
    vals.into_iter()
        .map(|(i, q)| (i, q.numer() * (&lcm / q.denom())))
        .collect()
}

fn weight_classes(model: &Model, ops: &[SparseOperator]) -> Vec<Vec<usize>> {
    let shifts: Option<Vec<Vec<i64>>> = ops.iter().map(|op| model.weight_shift(op)).collect();
    match shifts {
        Some(shifts) => {
            let mut classes: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
            for (k, s) in shifts.into_iter().enumerate() {
                classes.entry(s).or_default().push(k);
            }
            classes.into_values().collect()
        }
        None => vec![(0..ops.len()).collect()],
    }
}

struct ModpEchelon {
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModpEchelon {
    /// Reduces `v`; keeps it and returns true if it is independent.
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        for (piv, row) in &self.rows {
            let f = v[*piv];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = (*x + (PRIME - f) * y % PRIME) % PRIME;
                }
            }
        }
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = mod_pow(v[piv], PRIME - 2);
        for x in v.iter_mut() {
            *x = *x * inv % PRIME;
        }
        self.rows.push((piv, v));
        true
    }
}

fn mod_pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    acc
}

struct ExactEchelon {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl ExactEchelon {
    fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        for (piv, row) in &self.rows {
            if v[*piv].is_zero() {
                continue;
            }
            let (a, b) = (&row[*piv], v[*piv].clone());
            for (x, y) in v.iter_mut().zip(row) {
                *x = &*x * a - &b * y;
            }
            let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if g > BigInt::from(1) {
                for x in v.iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(piv) => {
                self.rows.push((piv, v));
                true
            }
            None => false,
        }
    }
}

/// Indices of a maximal independent subfamily of `rows`, stopping early once
/// `target` rows have been found.
fn select(classes: &[Vec<usize>], rows: &[IntRow], target: Option<usize>) -> Vec<usize> {
    let reached = |k: usize| target.is_some_and(|t| k >= t);
    let columns: Vec<BTreeMap<usize, usize>> = classes
        .iter()
        .map(|class| {
            let cols: BTreeSet<usize> = class.iter().flat_map(|&k| rows[k].iter().map(|e| e.0)).collect();
            cols.into_iter().enumerate().map(|(i, c)| (c, i)).collect()
        })
        .collect();

    let mut chosen: Vec<Vec<usize>> = vec![Vec::new(); classes.len()];
    let mut skipped: Vec<Vec<usize>> = vec![Vec::new(); classes.len()];
    let mut total = 0;
    for (ci, class) in classes.iter().enumerate() {
        let width = columns[ci].len();
        let mut ech = ModpEchelon { rows: Vec::new() };
        for &k in class {
            if reached(total) {
                skipped[ci].push(k);
                continue;
            }
            let mut v = vec![0u64; width];
            for (c, x) in &rows[k] {
                v[columns[ci][c]] = x.mod_floor(&BigInt::from(PRIME)).to_u64().expect("reduced mod p");
            }
            if ech.insert(v) {
                chosen[ci].push(k);
                total += 1;
            } else {
                skipped[ci].push(k);
            }
        }
    }

    if !reached(total) {
        for (ci, class_skipped) in skipped.iter().enumerate() {
            if class_skipped.is_empty() || reached(total) {
                continue;
            }
            let width = columns[ci].len();
            let dense = |k: usize| {
                let mut v = vec![BigInt::zero(); width];
                for (c, x) in &rows[k] {
                    v[columns[ci][c]] = x.clone();
                }
                v
            };
            let mut ech = ExactEchelon { rows: Vec::new() };
            for &k in &chosen[ci] {
                let fresh = ech.insert(dense(k));
                debug_assert!(fresh, "mod-p independent rows are independent over Q");
            }
            for &k in class_skipped {
                if reached(total) {
                    break;
                }
                if ech.insert(dense(k)) {
                    chosen[ci].push(k);
                    total += 1;
                }
            }
        }
    }
    let mut out: Vec<usize> = chosen.into_iter().flatten().collect();
    out.sort_unstable();
    out
}

fn select_at(model: &Model, ops: &[SparseOperator], at: Option<&BigRational>, target: Option<usize>) -> Vec<usize> {
    let rows: Vec<IntRow> = ops.iter().map(|op| integer_row(op, at)).collect();
    let classes = weight_classes(model, ops);
    select(&classes, &rows, target)
}

/// Exact rank of `ops` as vectors of length `(n^d)^2`.
///
/// Quantum families are ranked at each specialization point; each such rank
/// is a lower bound for the rank over `Q(v)`, and the largest is returned.
pub fn rank_of_family(model: &Model, ops: &[SparseOperator]) -> usize {
    rank_with_target(model, ops, None)
}

/// As [`rank_of_family`], but stops as soon as `target` independent
/// operators are found, so the result is `min(rank, target)`.
pub fn rank_with_target(model: &Model, ops: &[SparseOperator], target: Option<usize>) -> usize {
    match model.mode() {
        Mode::Classical => select_at(model, ops, None, target).len(),
        Mode::Quantum => (0..SPECIALIZATION_POINTS.len())
            .map(|k| select_at(model, ops, Some(&point(k)), target).len())
            .max()
            .unwrap_or(0),
    }
}

/// Rank at every specialization point, labelled `"p/q"`.
/// A family is certified independent over `Q(v)` if any entry equals its size.
pub fn quantum_rank_certificate(model: &Model, ops: &[SparseOperator]) -> Vec<(String, usize)> {
    (0..SPECIALIZATION_POINTS.len())
        .map(|k| {
            let (p, q) = SPECIALIZATION_POINTS[k];
            (format!("{p}/{q}"), select_at(model, ops, Some(&point(k)), None).len())
        })
        .collect()
}

/// Indices of a maximal independent subfamily, ascending. In quantum mode
/// independence is decided at the first specialization point, which is
/// sufficient for independence over `Q(v)`.
pub fn independent_subset(model: &Model, ops: &[SparseOperator]) -> Vec<usize> {
    match model.mode() {
        Mode::Classical => select_at(model, ops, None, None),
        Mode::Quantum => select_at(model, ops, Some(&point(0)), None),
    }
}
