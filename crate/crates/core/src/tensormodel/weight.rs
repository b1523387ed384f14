use std::fmt;

use serde::{Deserialize, Serialize};

use super::Root;

/// A vector in `N^n`: a composition, a content value, or an exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<u32>);

impl Weight {
    pub fn zeros(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Entry for the 1-based index `k`.
    pub fn get(&self, k: usize) -> u32 {
        self.0[k - 1]
    }

    /// Componentwise partial order.
    pub fn dominated_by(&self, other: &Weight) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self + k * (eps_i - eps_j)`, or `None` if an entry would go negative.
    pub fn shift_by_root(&self, root: Root, k: i64) -> Option<Weight> {
        let mut out = self.0.clone();
        let a = out[root.i - 1] as i64 + k;
        let b = out[root.j - 1] as i64 - k;
        if a < 0 || b < 0 {
            return None;
        }
        out[root.i - 1] = a as u32;
        out[root.j - 1] = b as u32;
        Some(Weight(out))
    }

    /// Signed difference `self - other`.
    pub fn diff(&self, other: &Weight) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| *a as i64 - *b as i64)
            .collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for Weight {
    fn from(v: Vec<u32>) -> Self {
        Weight(v)
    }
}

/// All vectors in `N^parts` with entry sum exactly `total`, in ascending
/// lexicographic order. With `parts = n` this is `Lambda(n, d)`.
pub fn compositions(parts: usize, total: u32) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; parts];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Weight>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Weight(cur.clone()));
            return;
        }
        for x in 0..=left {
            cur[pos] = x;
            rec(pos + 1, left - x, cur, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Weight(Vec::new()));
        }
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out
}

/// All vectors in `N^parts` with entry sum at most `bound`, ascending lexicographic.
pub fn bounded_vectors(parts: usize, bound: u32) -> Vec<Weight> {
    let mut out: Vec<Weight> = (0..=bound).flat_map(|t| compositions(parts, t)).collect();
    out.sort();
    out
}

/// A basis word of `V^{⊗d}`: letters in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Letter multiplicities.
    pub fn weight(&self, n: usize) -> Weight {
        let mut w = vec![0u32; n];
        for &l in &self.0 {
            w[l as usize - 1] += 1;
        }
        Weight(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}
