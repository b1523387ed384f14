//! Root vectors, divided powers, and evaluation of basis labels.

mod label;

pub use label::{eval_label, pbw_generators, BasisLabel, Flavor, MultiIndex, PbwGenerator};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SchurError};
use crate::ring::{factorial, quantum_factorial, Mode, RingError, Scalar};
use crate::tensormodel::{Model, Root, SparseOperator};

/// Positive (`E_alpha`, `x_alpha`) or negative (`F_alpha`, `x_{-alpha}`) root vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Builds `[plus, minus]` for every positive root, in `RootData` order.
pub(crate) fn build_root_vectors(model: &Model) -> Vec<[SparseOperator; 2]> {
    let mut built: BTreeMap<Root, [SparseOperator; 2]> = BTreeMap::new();
    for &root in model.roots().positive_roots() {
        let pair = if root.is_simple() {
            [model.raise(root.i).clone(), model.lower(root.i).clone()]
        } else {
            match model.mode() {
                Mode::Classical => [
                    matrix_unit_action(model, root.j as u8, root.i as u8),
                    matrix_unit_action(model, root.i as u8, root.j as u8),
                ],
                Mode::Quantum => {
                    let left = &built[&Root::new(root.i, root.j - 1)];
                    let (e_last, f_last) = (model.raise(root.j - 1), model.lower(root.j - 1));
                    let plus = &left[0].compose(e_last)
                        - &e_last.compose(&left[0]).scale(&Scalar::v_pow(-1));
                    let minus = &f_last.compose(&left[1])
                        - &left[1].compose(f_last).scale(&Scalar::v_pow(1));
                    [plus, minus]
                }
            }
        };
        built.insert(root, pair);
    }
    built.into_values().collect()
}

/// Leibniz action of the matrix unit sending letter `from` to letter `to`.
fn matrix_unit_action(model: &Model, from: u8, to: u8) -> SparseOperator {
    let mut entries = Vec::new();
    for (c, w) in model.words().iter().enumerate() {
        for (p, &l) in w.letters().iter().enumerate() {
            if l == from {
                let mut out = w.letters().to_vec();
                out[p] = to;
                let r = model.word_index(&out).expect("letter in range");
                entries.push((r, c, Scalar::one()));
            }
        }
    }
    SparseOperator::from_entries(model.dim(), entries)
}

/// `x_alpha` / `x_{-alpha}` classically, `E_alpha` / `F_alpha` in quantum mode.
pub fn root_vector(model: &Model, root: Root, sign: Sign) -> Result<&SparseOperator> {
    let k = model
        .roots()
        .root_index(root)
        .ok_or(SchurError::IndexOutOfRange { what: "root", index: root.j })?;
    Ok(&model.root_vectors[k][sign as usize])
}

/// `op^m / m!` classically, `op^m / [m]!` in quantum mode, divided exactly
/// entry by entry in `Z` resp. `Z[v, v^-1]`.
pub fn divided_power(model: &Model, op: &SparseOperator, m: u32) -> Result<SparseOperator> {
    let raw = op.pow(m);
    if m < 2 {
        return Ok(raw);
    }
    match model.mode() {
        Mode::Classical => {
            let f = factorial(m as u64);
            raw.try_map_entries(|x| {
                let q = x
                    .as_rational()
                    .filter(|r| r.is_integer() && (r.numer() % &f) == 0.into())
                    .ok_or_else(|| not_divisible(x, &f))?;
                Ok(Scalar::big_int(q.numer() / &f))
            })
        }
        Mode::Quantum => {
            let f = quantum_factorial(m as u64);
            raw.try_map_entries(|x| {
                let p = x.as_laurent().ok_or_else(|| not_divisible(x, &f))?;
                Ok(Scalar::laurent(p.exact_div(&f)?))
            })
        }
    }
}

fn not_divisible(x: &Scalar, f: &impl fmt::Display) -> SchurError {
    RingError::NotDivisible { dividend: x.to_string(), divisor: f.to_string() }.into()
}

/// The divided power of a root vector; `m = 0` gives the identity.
pub fn root_divided_power(model: &Model, root: Root, sign: Sign, m: u32) -> Result<SparseOperator> {
    divided_power(model, root_vector(model, root, sign)?, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensormodel::Generator;

    #[test]
    fn classical_e13_on_one_letter() {
        let m = Model::classical(3, 1).unwrap();
        let x = root_vector(&m, Root::new(1, 3), Sign::Plus).unwrap();
        assert_eq!(x.nnz(), 1);
        assert_eq!(x.get(0, 2), Scalar::one());
    }

    #[test]
    fn classical_e13_is_commutator() {
        let m = Model::classical(3, 2).unwrap();
        let e1 = m.generator_action(Generator::E(1)).unwrap();
        let e2 = m.generator_action(Generator::E(2)).unwrap();
        let x = root_vector(&m, Root::new(1, 3), Sign::Plus).unwrap();
        assert_eq!(*x, &(e1 * e2) - &(e2 * e1));
        let f1 = m.generator_action(Generator::F(1)).unwrap();
        let f2 = m.generator_action(Generator::F(2)).unwrap();
        let y = root_vector(&m, Root::new(1, 3), Sign::Minus).unwrap();
        assert_eq!(*y, &(f2 * f1) - &(f1 * f2));
    }

    #[test]
    fn quantum_e13_matches_recursion() {
        let m = Model::quantum(3, 2).unwrap();
        let e1 = m.generator_action(Generator::E(1)).unwrap();
        let e2 = m.generator_action(Generator::E(2)).unwrap();
        let x = root_vector(&m, Root::new(1, 3), Sign::Plus).unwrap();
        assert_eq!(*x, &(e1 * e2) - &(e2 * e1).scale(&Scalar::v_pow(-1)));
    }

    #[test]
    fn simple_roots_are_generators() {
        for m in [Model::classical(3, 2).unwrap(), Model::quantum(3, 2).unwrap()] {
            for i in 1..3 {
                let r = Root::new(i, i + 1);
                assert_eq!(
                    root_vector(&m, r, Sign::Plus).unwrap(),
                    m.generator_action(Generator::E(i)).unwrap()
                );
                assert_eq!(
                    root_vector(&m, r, Sign::Minus).unwrap(),
                    m.generator_action(Generator::F(i)).unwrap()
                );
            }
        }
    }

    #[test]
    fn classical_divided_powers() {
        let m = Model::classical(2, 2).unwrap();
        let e = root_vector(&m, Root::new(1, 2), Sign::Plus).unwrap();
        assert_eq!(divided_power(&m, e, 0).unwrap(), m.identity());
        let e2 = divided_power(&m, e, 2).unwrap();
        assert_eq!(e2.nnz(), 1);
        assert_eq!(e2.get(0, 3), Scalar::one());
        assert!(divided_power(&m, e, 3).unwrap().is_zero());
    }

    #[test]
    fn quantum_e13_square_divides_by_two() {
        let m = Model::quantum(3, 2).unwrap();
        let x = root_vector(&m, Root::new(1, 3), Sign::Plus).unwrap();
        let sq = x.pow(2);
        let (u33, u11) = (m.word_index(&[3, 3]).unwrap(), m.word_index(&[1, 1]).unwrap());
        assert_eq!(sq.get(u11, u33), Scalar::laurent(crate::ring::quantum_integer(2)));
        let div = divided_power(&m, x, 2).unwrap();
        assert_eq!(div.get(u11, u33), Scalar::one());
    }

    #[test]
    fn non_integral_input_is_not_divisible() {
        let m = Model::classical(2, 2).unwrap();
        let op = m.identity();
        let err = divided_power(&m, &op, 2).unwrap_err();
        assert!(matches!(err, SchurError::Ring(RingError::NotDivisible { .. })));
    }

    #[test]
    fn bad_root_is_rejected() {
        let m = Model::classical(2, 2).unwrap();
        assert!(root_vector(&m, Root::new(1, 3), Sign::Plus).is_err());
    }
}
