use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::error::Result;
use crate::ring::{RingError, Scalar};

/// An exact sparse matrix acting on the word basis.
///
/// Stored by column: `cols[c]` lists `(row, value)` pairs sorted by row with no
/// zero values, so derived equality is entrywise equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOperator {
    dim: usize,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl SparseOperator {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(dim, |_| Scalar::one())
    }

    pub fn diagonal(dim: usize, f: impl Fn(usize) -> Scalar) -> Self {
        let cols = (0..dim)
            .map(|c| {
                let x = f(c);
                if x.is_zero() {
                    Vec::new()
                } else {
                    vec![(c, x)]
                }
            })
            .collect();
        Self { dim, cols }
    }

    /// Builds from `(row, col, value)` entries; duplicates are summed.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); dim];
        for (r, c, x) in entries {
            assert!(r < dim && c < dim, "entry ({r}, {c}) outside a {dim}x{dim} operator");
            let slot = acc[c].entry(r).or_default();
            *slot = &*slot + &x;
        }
        Self::from_column_maps(dim, acc)
    }

    fn from_column_maps(dim: usize, acc: Vec<BTreeMap<usize, Scalar>>) -> Self {
        let cols = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        Self { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.cols[c]
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.cols[col]
            .binary_search_by_key(&row, |(r, _)| *r)
            .map(|k| self.cols[col][k].1.clone())
            .unwrap_or_default()
    }

    /// Nonzero entries as `(row, col, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (*r, c, x)))
    }

    /// `self ∘ rhs`: apply `rhs` first.
    pub fn compose(&self, rhs: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, rhs.dim, "composing operators of different sizes");
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, b) in col {
                    for (r, a) in &self.cols[*k] {
                        let term = a * b;
                        match acc.get_mut(r) {
                            Some(slot) => *slot = &*slot + &term,
                            None => {
                                acc.insert(*r, term);
                            }
                        }
                    }
                }
                acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        SparseOperator { dim: self.dim, cols }
    }

    pub fn pow(&self, k: u32) -> SparseOperator {
        let mut acc = SparseOperator::identity(self.dim);
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    fn combine(&self, rhs: &SparseOperator, sign: i64) -> SparseOperator {
        assert_eq!(self.dim, rhs.dim, "adding operators of different sizes");
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let ra = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
                    let rb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
                    if ra < rb {
                        out.push(a[i].clone());
                        i += 1;
                    } else if rb < ra {
                        let x = if sign < 0 { -&b[j].1 } else { b[j].1.clone() };
                        out.push((rb, x));
                        j += 1;
                    } else {
                        let x = if sign < 0 {
                            &a[i].1 - &b[j].1
                        } else {
                            &a[i].1 + &b[j].1
                        };
                        if !x.is_zero() {
                            out.push((ra, x));
                        }
                        i += 1;
                        j += 1;
                    }
                }
                out
            })
            .collect();
        SparseOperator { dim: self.dim, cols }
    }

    pub fn scale(&self, s: &Scalar) -> SparseOperator {
        if s.is_zero() {
            return SparseOperator::zero(self.dim);
        }
        self.map_entries(|x| x * s)
    }

    /// Divides every entry by `s`.
    pub fn div_scalar(&self, s: &Scalar) -> Result<SparseOperator> {
        let inv = s.inv().ok_or(RingError::DivisionByZero)?;
        Ok(self.map_entries(|x| x * &inv))
    }

    pub fn map_entries(&self, f: impl Fn(&Scalar) -> Scalar) -> SparseOperator {
        self.try_map_entries(|x| Ok(f(x))).expect("infallible map")
    }

    pub fn try_map_entries(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<SparseOperator> {
        let mut cols = Vec::with_capacity(self.dim);
        for col in &self.cols {
            let mut out = Vec::with_capacity(col.len());
            for (r, x) in col {
                let y = f(x)?;
                if !y.is_zero() {
                    out.push((*r, y));
                }
            }
            cols.push(out);
        }
        Ok(SparseOperator { dim: self.dim, cols })
    }

    /// Evaluates every entry at `v = r`. Rational entries pass through.
    /// `None` if some entry has a pole at `r`.
    pub fn specialize(&self, r: &BigRational) -> Option<SparseOperator> {
        let mut cols = Vec::with_capacity(self.dim);
        for col in &self.cols {
            let mut out = Vec::with_capacity(col.len());
            for (row, x) in col {
                let y = x.specialize(r)?;
                if y != BigRational::from_integer(0.into()) {
                    out.push((*row, Scalar::Rational(y)));
                }
            }
            cols.push(out);
        }
        Some(SparseOperator { dim: self.dim, cols })
    }

    /// Entries all lie in `Z` (resp. `Z[v, v^-1]`).
    pub fn is_integral(&self) -> bool {
        self.entries().all(|(_, _, x)| x.is_integral())
    }
}

impl Mul for &SparseOperator {
    type Output = SparseOperator;
    fn mul(self, rhs: &SparseOperator) -> SparseOperator {
        self.compose(rhs)
    }
}

impl Add for &SparseOperator {
    type Output = SparseOperator;
    fn add(self, rhs: &SparseOperator) -> SparseOperator {
        self.combine(rhs, 1)
    }
}

impl Sub for &SparseOperator {
    type Output = SparseOperator;
    fn sub(self, rhs: &SparseOperator) -> SparseOperator {
        self.combine(rhs, -1)
    }
}

impl Neg for &SparseOperator {
    type Output = SparseOperator;
    fn neg(self) -> SparseOperator {
        self.map_entries(|x| -x)
    }
}

impl Mul for SparseOperator {
    type Output = SparseOperator;
    fn mul(self, rhs: SparseOperator) -> SparseOperator {
        self.compose(&rhs)
    }
}

impl Add for SparseOperator {
    type Output = SparseOperator;
    fn add(self, rhs: SparseOperator) -> SparseOperator {
        self.combine(&rhs, 1)
    }
}

impl Sub for SparseOperator {
    type Output = SparseOperator;
    fn sub(self, rhs: SparseOperator) -> SparseOperator {
        self.combine(&rhs, -1)
    }
}
