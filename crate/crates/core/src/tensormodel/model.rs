use std::fmt;

use crate::error::{Result, SchurError};
use crate::ring::{binomial, factorial, LaurentPoly, Mode, Scalar};
use crate::rootvectors;

use super::{compositions, RootData, SparseOperator, Weight, Word};

/// Default bound on `n^d`.
pub const DEFAULT_WORD_CAP: usize = 10_000;

/// A Chevalley-type generator. `E`/`F` are `e_i`/`f_i` in classical mode and
/// `E_i`/`F_i` in quantum mode; `H` is classical only, `K`/`KInv` quantum only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    E(usize),
    F(usize),
    H(usize),
    K(usize),
    KInv(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "E{i}"),
            Generator::F(i) => write!(f, "F{i}"),
            Generator::H(k) => write!(f, "H{k}"),
            Generator::K(k) => write!(f, "K{k}"),
            Generator::KInv(k) => write!(f, "K{k}^-1"),
        }
    }
}

/// The tensor-space realization of `S(n, d)` or `S_v(n, d)`.
///
/// Words are enumerated lexicographically, so word index `k` is `k` written in
/// base `n` with letters shifted by one. All generator, root-vector and
/// idempotent operators are computed at construction; the model is immutable
/// afterwards.
#[derive(Clone, Debug)]
pub struct Model {
    n: usize,
    d: usize,
    mode: Mode,
    roots: RootData,
    words: Vec<Word>,
    word_weights: Vec<Weight>,
    raise: Vec<SparseOperator>,
    lower: Vec<SparseOperator>,
    cartan: Vec<SparseOperator>,
    cartan_inv: Vec<SparseOperator>,
    pub(crate) root_vectors: Vec<[SparseOperator; 2]>,
    lambdas: Vec<Weight>,
    idempotents: Vec<SparseOperator>,
}

impl Model {
    pub fn new(n: usize, d: usize, mode: Mode) -> Result<Self> {
        Self::with_word_cap(n, d, mode, DEFAULT_WORD_CAP)
    }

    pub fn classical(n: usize, d: usize) -> Result<Self> {
        Self::new(n, d, Mode::Classical)
    }

    pub fn quantum(n: usize, d: usize) -> Result<Self> {
        Self::new(n, d, Mode::Quantum)
    }

    pub fn with_word_cap(n: usize, d: usize, mode: Mode, cap: usize) -> Result<Self> {
        if n < 2 || d < 1 || n > u8::MAX as usize {
            return Err(SchurError::InvalidParameters { n, d });
        }
        let count = u32::try_from(d)
            .ok()
            .and_then(|e| n.checked_pow(e))
            .filter(|&c| c <= cap)
            .ok_or(SchurError::SizeLimit { n, d, cap })?;

        let words: Vec<Word> = (0..count).map(|k| index_to_word(k, n, d)).collect();
        let word_weights = words.iter().map(|w| w.weight(n)).collect();
        let mut model = Model {
            n,
            d,
            mode,
            roots: RootData::new(n),
            words,
            word_weights,
            raise: Vec::new(),
            lower: Vec::new(),
            cartan: Vec::new(),
            cartan_inv: Vec::new(),
            root_vectors: Vec::new(),
            lambdas: compositions(n, d as u32),
            idempotents: Vec::new(),
        };
        model.raise = (1..n).map(|i| model.build_raise(i)).collect();
        model.lower = (1..n).map(|i| model.build_lower(i)).collect();
        model.cartan = (1..=n).map(|k| model.build_cartan(k, 1)).collect();
        if mode == Mode::Quantum {
            model.cartan_inv = (1..=n).map(|k| model.build_cartan(k, -1)).collect();
        }
        model.root_vectors = rootvectors::build_root_vectors(&model);
        model.idempotents = model
            .lambdas
            .iter()
            .map(|lam| model.cartan_monomial(lam))
            .collect::<Result<_>>()?;
        Ok(model)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn roots(&self) -> &RootData {
        &self.roots
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn word_weight(&self, idx: usize) -> &Weight {
        &self.word_weights[idx]
    }

    /// `Lambda(n, d)` in ascending lexicographic order.
    pub fn compositions(&self) -> &[Weight] {
        &self.lambdas
    }

    pub fn word_index(&self, letters: &[u8]) -> Option<usize> {
        if letters.len() != self.d {
            return None;
        }
        letters.iter().try_fold(0usize, |acc, &l| {
            (1..=self.n as u8)
                .contains(&l)
                .then(|| acc * self.n + (l as usize - 1))
        })
    }

    pub fn identity(&self) -> SparseOperator {
        SparseOperator::identity(self.dim())
    }

    pub fn zero(&self) -> SparseOperator {
        SparseOperator::zero(self.dim())
    }

    /// `v^k` in quantum mode; the integer 1 classically.
    pub(crate) fn v_pow(&self, k: i64) -> Scalar {
        match self.mode {
            Mode::Classical => Scalar::one(),
            Mode::Quantum => Scalar::v_pow(k),
        }
    }

    fn build_raise(&self, i: usize) -> SparseOperator {
        let (from, to) = ((i + 1) as u8, i as u8);
        let entries = self.words.iter().enumerate().flat_map(|(c, w)| {
            let letters = w.letters();
            (0..self.d).filter(move |&p| letters[p] == from).map(move |p| {
                let mut out = letters.to_vec();
                out[p] = to;
                // Delta(E) = E ⊗ K_i K_{i+1}^{-1} + 1 ⊗ E: the K-factor acts on later slots.
                let exp: i64 = letters[p + 1..]
                    .iter()
                    .map(|&l| (l == to) as i64 - (l == from) as i64)
                    .sum();
                (self.index_of(&out), c, self.v_pow(exp))
            })
        });
        SparseOperator::from_entries(self.dim(), entries.collect::<Vec<_>>())
    }

    fn build_lower(&self, i: usize) -> SparseOperator {
        let (from, to) = (i as u8, (i + 1) as u8);
        let entries = self.words.iter().enumerate().flat_map(|(c, w)| {
            let letters = w.letters();
            (0..self.d).filter(move |&p| letters[p] == from).map(move |p| {
                let mut out = letters.to_vec();
                out[p] = to;
                // Delta(F) = F ⊗ 1 + K_i^{-1} K_{i+1} ⊗ F: the K-factor acts on earlier slots.
                let exp: i64 = letters[..p]
                    .iter()
                    .map(|&l| (l == to) as i64 - (l == from) as i64)
                    .sum();
                (self.index_of(&out), c, self.v_pow(exp))
            })
        });
        SparseOperator::from_entries(self.dim(), entries.collect::<Vec<_>>())
    }

    /// `H_k` classically; `K_k^{sign}` in quantum mode.
    fn build_cartan(&self, k: usize, sign: i64) -> SparseOperator {
        SparseOperator::diagonal(self.dim(), |c| {
            let mu = self.word_weights[c].get(k) as i64;
            match self.mode {
                Mode::Classical => Scalar::int(mu),
                Mode::Quantum => Scalar::v_pow(sign * mu),
            }
        })
    }

    fn index_of(&self, letters: &[u8]) -> usize {
        letters
            .iter()
            .fold(0usize, |acc, &l| acc * self.n + (l as usize - 1))
    }

    pub fn generator_action(&self, gen: Generator) -> Result<&SparseOperator> {
        let simple = |i: usize| {
            if (1..self.n).contains(&i) {
                Ok(i - 1)
            } else {
                Err(SchurError::IndexOutOfRange { what: "simple root", index: i })
            }
        };
        let cartan = |k: usize| {
            if (1..=self.n).contains(&k) {
                Ok(k - 1)
            } else {
                Err(SchurError::IndexOutOfRange { what: "Cartan generator", index: k })
            }
        };
        match (gen, self.mode) {
            (Generator::E(i), _) => Ok(&self.raise[simple(i)?]),
            (Generator::F(i), _) => Ok(&self.lower[simple(i)?]),
            (Generator::H(k), Mode::Classical) => Ok(&self.cartan[cartan(k)?]),
            (Generator::K(k), Mode::Quantum) => Ok(&self.cartan[cartan(k)?]),
            (Generator::KInv(k), Mode::Quantum) => Ok(&self.cartan_inv[cartan(k)?]),
            (g, m) => Err(SchurError::WrongMode(format!("generator {g} in {m} mode"))),
        }
    }

    pub(crate) fn raise(&self, i: usize) -> &SparseOperator {
        &self.raise[i - 1]
    }

    pub(crate) fn lower(&self, i: usize) -> &SparseOperator {
        &self.lower[i - 1]
    }

    /// `H_k` or `K_k`.
    pub(crate) fn cartan(&self, k: usize) -> &SparseOperator {
        &self.cartan[k - 1]
    }

    /// `K_k^{-1}`; quantum only.
    pub(crate) fn cartan_inv(&self, k: usize) -> &SparseOperator {
        &self.cartan_inv[k - 1]
    }

    /// `binom(H_k, t)` classically, `[K_k; t]` in quantum mode, evaluated as
    /// an operator polynomial.
    pub fn cartan_binomial(&self, k: usize, t: u32) -> Result<SparseOperator> {
        if !(1..=self.n).contains(&k) {
            return Err(SchurError::IndexOutOfRange { what: "Cartan generator", index: k });
        }
        let id = self.identity();
        match self.mode {
            Mode::Classical => {
                let h = self.cartan(k);
                let num = (0..t as i64).fold(id.clone(), |acc, s| {
                    acc.compose(&(h - &id.scale(&Scalar::int(s))))
                });
                num.div_scalar(&Scalar::big_int(factorial(t as u64)))
            }
            Mode::Quantum => {
                let (kk, kinv) = (self.cartan(k), self.cartan_inv(k));
                let mut num = id.clone();
                let mut den = LaurentPoly::one();
                for s in 1..=t as i64 {
                    let factor = &kk.scale(&Scalar::v_pow(1 - s)) - &kinv.scale(&Scalar::v_pow(s - 1));
                    num = num.compose(&factor);
                    den = &den * &(&LaurentPoly::v_pow(s) - &LaurentPoly::v_pow(-s));
                }
                num.div_scalar(&Scalar::laurent(den))
            }
        }
    }

    /// `H_B = prod_k binom(H_k, b_k)` or `K_B = prod_j [K_j; b_j]`.
    pub fn cartan_monomial(&self, b: &Weight) -> Result<SparseOperator> {
        if b.len() != self.n {
            return Err(SchurError::BadWeight { weight: b.0.clone(), n: self.n, d: self.d });
        }
        (1..=self.n).try_fold(self.identity(), |acc, k| {
            Ok(acc.compose(&self.cartan_binomial(k, b.get(k))?))
        })
    }

    /// `1_lambda`, computed from the binomial formula at construction.
    pub fn weight_idempotent(&self, lambda: &Weight) -> Result<&SparseOperator> {
        self.lambdas
            .binary_search(lambda)
            .map(|k| &self.idempotents[k])
            .map_err(|_| SchurError::BadWeight { weight: lambda.0.clone(), n: self.n, d: self.d })
    }

    /// The `(row weight, column weight)` block containing all nonzero
    /// entries of `op`, if there is a single one.
    pub fn block_of(&self, op: &SparseOperator) -> Option<(Weight, Weight)> {
        let mut found: Option<(usize, usize)> = None;
        for (r, c, _) in op.entries() {
            match found {
                None => found = Some((r, c)),
                Some((r0, c0)) => {
                    if self.word_weights[r] != self.word_weights[r0]
                        || self.word_weights[c] != self.word_weights[c0]
                    {
                        return None;
                    }
                }
            }
        }
        found.map(|(r, c)| (self.word_weights[r].clone(), self.word_weights[c].clone()))
    }

    /// Row weight minus column weight, if the same for every nonzero entry.
    /// Operators with different shifts have disjoint supports.
    pub fn weight_shift(&self, op: &SparseOperator) -> Option<Vec<i64>> {
        let mut shift: Option<Vec<i64>> = None;
        for (r, c, _) in op.entries() {
            let s = self.word_weights[r].diff(&self.word_weights[c]);
            match &shift {
                None => shift = Some(s),
                Some(s0) if *s0 != s => return None,
                _ => {}
            }
        }
        shift.or_else(|| Some(vec![0; self.n]))
    }

    /// Entry-wise binomial coefficients are used by the reduction-formula
    /// checks; exposed here so the classical/quantum choice stays in one place.
    pub fn binomial_scalar(&self, a: u64, b: u64) -> Scalar {
        match self.mode {
            Mode::Classical => Scalar::big_int(binomial(a, b)),
            Mode::Quantum => Scalar::laurent(
                crate::ring::gaussian_binomial(a as i64, b as i64).expect("nonnegative arguments"),
            ),
        }
    }
}

fn index_to_word(mut k: usize, n: usize, d: usize) -> Word {
    let mut letters = vec![0u8; d];
    for p in (0..d).rev() {
        letters[p] = (k % n) as u8 + 1;
        k /= n;
    }
    Word(letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[u8]) -> Word {
        Word(letters.to_vec())
    }

    #[test]
    fn words_are_lexicographic() {
        let m = Model::classical(2, 2).unwrap();
        assert_eq!(m.words(), &[w(&[1, 1]), w(&[1, 2]), w(&[2, 1]), w(&[2, 2])]);
        assert_eq!(Model::classical(3, 1).unwrap().dim(), 3);
        assert_eq!(m.word_index(&[2, 1]), Some(2));
        assert_eq!(m.word_index(&[3, 1]), None);
    }

    #[test]
    fn parameter_and_size_errors() {
        assert!(matches!(Model::classical(1, 2), Err(SchurError::InvalidParameters { .. })));
        assert!(matches!(Model::classical(2, 0), Err(SchurError::InvalidParameters { .. })));
        assert!(matches!(
            Model::with_word_cap(3, 9, Mode::Classical, 10_000),
            Err(SchurError::SizeLimit { .. })
        ));
        assert!(matches!(Model::classical(10, 5), Err(SchurError::SizeLimit { .. })));
    }

    #[test]
    fn classical_e1_leibniz_action() {
        let m = Model::classical(2, 2).unwrap();
        let e = m.generator_action(Generator::E(1)).unwrap();
        let idx = |l: &[u8]| m.word_index(l).unwrap();
        assert_eq!(e.get(idx(&[1, 2]), idx(&[2, 2])), Scalar::one());
        assert_eq!(e.get(idx(&[2, 1]), idx(&[2, 2])), Scalar::one());
        assert_eq!(e.column(idx(&[2, 2])).len(), 2);
        assert_eq!(e.column(idx(&[1, 2])), &[(idx(&[1, 1]), Scalar::one())]);
        assert!(e.column(idx(&[1, 1])).is_empty());
    }

    #[test]
    fn h1_eigenvalue_is_letter_count() {
        let m = Model::classical(2, 3).unwrap();
        let h = m.generator_action(Generator::H(1)).unwrap();
        let c = m.word_index(&[1, 2, 1]).unwrap();
        assert_eq!(h.get(c, c), Scalar::int(2));
    }

    #[test]
    fn quantum_k1_eigenvalues() {
        let m = Model::quantum(2, 2).unwrap();
        let k = m.generator_action(Generator::K(1)).unwrap();
        let expect = [2, 1, 1, 0];
        for (c, e) in expect.iter().enumerate() {
            assert_eq!(k.get(c, c), Scalar::v_pow(*e));
        }
        assert!(m.generator_action(Generator::H(1)).is_err());
        assert!(Model::classical(2, 2).unwrap().generator_action(Generator::K(1)).is_err());
    }

    #[test]
    fn quantum_e1_coproduct_action() {
        let m = Model::quantum(2, 2).unwrap();
        let e = m.generator_action(Generator::E(1)).unwrap();
        let idx = |l: &[u8]| m.word_index(l).unwrap();
        assert_eq!(e.get(idx(&[1, 2]), idx(&[2, 2])), Scalar::v_pow(-1));
        assert_eq!(e.get(idx(&[2, 1]), idx(&[2, 2])), Scalar::one());
    }

    #[test]
    fn generator_index_out_of_range() {
        let m = Model::classical(3, 1).unwrap();
        assert!(m.generator_action(Generator::E(3)).is_err());
        assert!(m.generator_action(Generator::H(0)).is_err());
        assert!(m.generator_action(Generator::H(3)).is_ok());
    }

    #[test]
    fn bad_weight_rejected() {
        let m = Model::classical(2, 2).unwrap();
        assert!(matches!(
            m.weight_idempotent(&Weight(vec![1, 0])),
            Err(SchurError::BadWeight { .. })
        ));
        assert!(m.weight_idempotent(&Weight(vec![1, 1, 0])).is_err());
    }
}
