//! Basis enumeration, exact rank, coordinates and structure constants.

mod coords;
mod linalg;

pub use coords::{coordinates, structure_constants, BasisTable, CoefficientVector, StructTable, StructTriple};
pub use linalg::{
    independent_subset, quantum_rank_certificate, rank_of_family, rank_with_target,
    SPECIALIZATION_POINTS,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::ring::binomial;
use crate::rootvectors::{pbw_generators, BasisLabel, MultiIndex};
use crate::tensormodel::{bounded_vectors, compositions, RootData, Weight};

/// Which basis to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisKind {
    B1,
    B2,
    Pbw { k0: usize },
    Plus,
    Minus,
    BorelUp,
    BorelDown,
    Zero,
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKind::B1 => write!(f, "b1"),
            BasisKind::B2 => write!(f, "b2"),
            BasisKind::Pbw { k0 } => write!(f, "pbw(k0={k0})"),
            BasisKind::Plus => write!(f, "plus"),
            BasisKind::Minus => write!(f, "minus"),
            BasisKind::BorelUp => write!(f, "borel_up"),
            BasisKind::BorelDown => write!(f, "borel_down"),
            BasisKind::Zero => write!(f, "zero"),
        }
    }
}

impl FromStr for BasisKind {
    type Err = String;

    /// Accepts `b1`, `b2`, `pbw`, `pbw:K`, `plus`, `minus`, `borel_up`,
    /// `borel_down`, `zero`. Plain `pbw` gets `k0 = 0`, to be replaced by `n`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.to_ascii_lowercase();
        Ok(match s.as_str() {
            "b1" => BasisKind::B1,
            "b2" => BasisKind::B2,
            "pbw" => BasisKind::Pbw { k0: 0 },
            "plus" => BasisKind::Plus,
            "minus" => BasisKind::Minus,
            "borel_up" | "borel-up" => BasisKind::BorelUp,
            "borel_down" | "borel-down" => BasisKind::BorelDown,
            "zero" => BasisKind::Zero,
            other => match other.strip_prefix("pbw:").map(str::parse) {
                Some(Ok(k0)) => BasisKind::Pbw { k0 },
                _ => return Err(format!("unknown basis kind {s:?}")),
            },
        })
    }
}

/// `chi(x_alpha^(m)) = m eps_max(i,j)`, summed over `A`.
pub fn content(a: &MultiIndex, n: usize) -> Weight {
    let mut w = Weight::zeros(n);
    for (r, m) in a.iter() {
        w.0[r.j - 1] += m;
    }
    w
}

/// `sum_alpha a_alpha eps_min(i,j)`; the content rule that governs `B2`.
pub fn dual_content(a: &MultiIndex, n: usize) -> Weight {
    let mut w = Weight::zeros(n);
    for (r, m) in a.iter() {
        w.0[r.i - 1] += m;
    }
    w
}

fn add(a: &Weight, b: &Weight) -> Weight {
    Weight(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
}

/// All labels of one basis of `S(n, d)` (or a subalgebra), ordered
/// lexicographically by `(lambda, A, C)` with multi-indices compared as
/// exponent vectors over the lexicographic root order.
pub fn enumerate_basis(n: usize, d: usize, kind: BasisKind) -> Vec<BasisLabel> {
    let roots = RootData::new(n);
    let d32 = d as u32;
    let multis: Vec<MultiIndex> = bounded_vectors(roots.positive_roots().len(), d32)
        .iter()
        .map(|e| MultiIndex::from_exponents(&roots, &e.0))
        .collect();
    let lambdas = compositions(n, d32);
    let mut out = Vec::new();
    match kind {
        BasisKind::B1 | BasisKind::B2 => {
            let chi = if kind == BasisKind::B1 { content } else { dual_content };
            for lam in &lambdas {
                for a in &multis {
                    let ca = chi(a, n);
                    if !ca.dominated_by(lam) {
                        continue;
                    }
                    for c in &multis {
                        if add(&ca, &chi(c, n)).dominated_by(lam) {
                            out.push(if kind == BasisKind::B1 {
                                BasisLabel::b1(a.clone(), lam.clone(), c.clone())
                            } else {
                                BasisLabel::b2(a.clone(), lam.clone(), c.clone())
                            });
                        }
                    }
                }
            }
        }
        BasisKind::Pbw { k0 } => {
            let len = pbw_generators(n, k0).len();
            out.extend(bounded_vectors(len, d32).into_iter().map(|e| BasisLabel::pbw(k0, e.0)));
        }
        BasisKind::Plus => out.extend(multis.iter().cloned().map(BasisLabel::plus)),
        BasisKind::Minus => out.extend(multis.iter().cloned().map(BasisLabel::minus)),
        BasisKind::BorelUp | BasisKind::BorelDown => {
            for lam in &lambdas {
                for a in multis.iter().filter(|a| content(a, n).dominated_by(lam)) {
                    out.push(if kind == BasisKind::BorelUp {
                        BasisLabel::borel_up(a.clone(), lam.clone())
                    } else {
                        BasisLabel::borel_down(lam.clone(), a.clone())
                    });
                }
            }
        }
        BasisKind::Zero => out.extend(lambdas.into_iter().map(BasisLabel::zero_part)),
    }
    out
}

/// `dim S(n, d) = binom(n^2 - 1 + d, d)`: monomials of degree at most `d`
/// in `n^2 - 1` commuting symbols.
pub fn schur_dimension(n: usize, d: usize) -> BigInt {
    binomial((n * n - 1 + d) as u64, d as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensormodel::Root;

    #[test]
    fn content_values() {
        let a = MultiIndex::single(Root::new(1, 3), 2);
        assert_eq!(content(&a, 3), Weight(vec![0, 0, 2]));
        assert_eq!(content(&MultiIndex::zero(), 3), Weight(vec![0, 0, 0]));
        let b = MultiIndex::from_pairs([(Root::new(1, 2), 1), (Root::new(2, 3), 1)]);
        assert_eq!(content(&b, 3), Weight(vec![0, 1, 1]));
        assert_eq!(dual_content(&b, 3), Weight(vec![1, 1, 0]));
    }

    #[test]
    fn b1_on_2_2_has_ten_labels_grouped_by_lambda() {
        let b = enumerate_basis(2, 2, BasisKind::B1);
        assert_eq!(b.len(), 10);
        let count = |l: &[u32]| b.iter().filter(|x| x.lambda.as_ref().unwrap().0 == l).count();
        assert_eq!(count(&[2, 0]), 1);
        assert_eq!(count(&[1, 1]), 3);
        assert_eq!(count(&[0, 2]), 6);
    }

    #[test]
    fn counts_on_2_2() {
        assert_eq!(enumerate_basis(2, 2, BasisKind::B2).len(), 10);
        assert_eq!(enumerate_basis(2, 2, BasisKind::Pbw { k0: 2 }).len(), 10);
        assert_eq!(enumerate_basis(2, 2, BasisKind::Zero).len(), 3);
        assert_eq!(enumerate_basis(2, 2, BasisKind::Plus).len(), 3);
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free() {
        let b = enumerate_basis(3, 2, BasisKind::B1);
        let roots = RootData::new(3);
        let keys: Vec<_> = b
            .iter()
            .map(|l| (l.lambda.clone().unwrap(), l.a.to_exponents(&roots), l.c.to_exponents(&roots)))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("pbw:1".parse::<BasisKind>().unwrap(), BasisKind::Pbw { k0: 1 });
        assert_eq!("B2".parse::<BasisKind>().unwrap(), BasisKind::B2);
        assert!("b3".parse::<BasisKind>().is_err());
    }
}
