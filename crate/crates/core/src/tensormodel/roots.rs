use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The positive root `eps_i - eps_j` (1-based, `i < j`) of type `A_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j, "positive root needs 1 <= i < j, got ({i}, {j})");
        Self { i, j }
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

impl FromStr for Root {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once('-').ok_or_else(|| format!("bad root key {s:?}"))?;
        let i: usize = a.trim().parse().map_err(|_| format!("bad root key {s:?}"))?;
        let j: usize = b.trim().parse().map_err(|_| format!("bad root key {s:?}"))?;
        if i == 0 || i >= j {
            return Err(format!("root key {s:?} is not a positive root"));
        }
        Ok(Root { i, j })
    }
}

/// Root data of type `A_{n-1}`: positive roots in lexicographic order and
/// the pairing `(eps_i, alpha_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    n: usize,
    positive: Vec<Root>,
}

impl RootData {
    pub fn new(n: usize) -> Self {
        let positive = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| Root { i, j }))
            .collect();
        Self { n, positive }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (1..self.n).map(|i| Root { i, j: i + 1 }).collect()
    }

    pub fn root_index(&self, root: Root) -> Option<usize> {
        self.positive.binary_search(&root).ok()
    }

    /// `(eps_i, alpha_j) = delta_{i,j} - delta_{i,j+1}`.
    pub fn pairing(i: usize, j: usize) -> i64 {
        (i == j) as i64 - (i == j + 1) as i64
    }
}
