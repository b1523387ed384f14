//! Worked examples. Expected values are computed here by small independent
//! routines (direct expansion over words and weights) and frozen.

use num_traits::ToPrimitive;

use schur_core::bases::{
    content, enumerate_basis, rank_of_family, schur_dimension, BasisKind, BasisTable,
};
use schur_core::hecke::{check_hecke_generation, omega_truncation};
use schur_core::ring::{gaussian_binomial, quantum_integer, LaurentPoly, Mode, RingError, Scalar};
use schur_core::rootvectors::{
    divided_power, eval_label, root_vector, BasisLabel, Flavor, MultiIndex, Sign,
};
use schur_core::tensormodel::{Generator, Model, Root, SparseOperator, Weight};
use schur_core::verify::{check_enveloping_relations, check_rank_one_presentation, check_structural_facts};

fn w(v: &[u32]) -> Weight {
    Weight(v.to_vec())
}

fn gen(m: &Model, g: Generator) -> SparseOperator {
    m.generator_action(g).unwrap().clone()
}

/// Diagonal operator with `f(weight of word)` on each word.
fn by_weight(m: &Model, f: impl Fn(&Weight) -> Scalar) -> SparseOperator {
    SparseOperator::diagonal(m.dim(), |k| f(m.word_weight(k)))
}

#[test]
fn gaussian_binomial_four_two() {
    let q = |k| quantum_integer(k);
    let oracle = (&q(4) * &q(3)).exact_div(&(&q(2) * &q(1))).unwrap();
    let frozen = LaurentPoly::from_terms([(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]);
    assert_eq!(oracle, frozen);
    assert_eq!(gaussian_binomial(4, 2).unwrap(), frozen);
    assert_eq!(gaussian_binomial(2, 1).unwrap().to_string(), "v + v^-1");
    assert!(gaussian_binomial(3, 3).unwrap().is_one());
}

#[test]
fn exact_div_parity_obstruction() {
    let num: LaurentPoly = "v + 1".parse().unwrap();
    let den = &LaurentPoly::v() - &LaurentPoly::v_pow(-1);
    assert!(matches!(num.exact_div(&den), Err(RingError::NotDivisible { .. })));
    let two = (&LaurentPoly::v_pow(2) - &LaurentPoly::v_pow(-2)).exact_div(&den).unwrap();
    assert_eq!(two, quantum_integer(2));
}

#[test]
fn quantum_k1_on_two_two() {
    let m = Model::quantum(2, 2).unwrap();
    let k1 = gen(&m, Generator::K(1));
    let expected = [2, 1, 1, 0];
    for (idx, word) in m.words().iter().enumerate() {
        let ones = word.letters().iter().filter(|&&l| l == 1).count() as i64;
        assert_eq!(ones, expected[idx]);
        assert_eq!(k1.get(idx, idx), Scalar::v_pow(ones));
    }
    assert_eq!(k1.nnz(), 4);
}

#[test]
fn quantum_e1_on_word_two_two() {
    let m = Model::quantum(2, 2).unwrap();
    let e1 = gen(&m, Generator::E(1));
    let col = m.word_index(&[2, 2]).unwrap();
    let (r12, r21) = (m.word_index(&[1, 2]).unwrap(), m.word_index(&[2, 1]).unwrap());
    assert_eq!(e1.column(col).len(), 2);
    assert_eq!(e1.get(r12, col), Scalar::v_pow(-1));
    assert_eq!(e1.get(r21, col), Scalar::one());
}

#[test]
fn idempotent_projectors_on_two_two() {
    for mode in [Mode::Classical, Mode::Quantum] {
        let m = Model::new(2, 2, mode).unwrap();
        for lambda in [w(&[1, 1]), w(&[2, 0]), w(&[0, 2])] {
            let oracle = by_weight(&m, |mu| if *mu == lambda { Scalar::one() } else { Scalar::zero() });
            assert_eq!(m.weight_idempotent(&lambda).unwrap(), &oracle, "{lambda} {mode}");
        }
        let p11 = m.weight_idempotent(&w(&[1, 1])).unwrap();
        let support: Vec<usize> = p11.entries().map(|(r, _, _)| r).collect();
        assert_eq!(support, vec![m.word_index(&[1, 2]).unwrap(), m.word_index(&[2, 1]).unwrap()]);
    }
}

#[test]
fn non_simple_root_vectors_on_three_two() {
    let root = Root::new(1, 3);
    let m = Model::classical(3, 2).unwrap();
    let (e1, e2) = (gen(&m, Generator::E(1)), gen(&m, Generator::E(2)));
    assert_eq!(root_vector(&m, root, Sign::Plus).unwrap(), &(&e1.compose(&e2) - &e2.compose(&e1)));

    let m = Model::quantum(3, 2).unwrap();
    let (e1, e2) = (gen(&m, Generator::E(1)), gen(&m, Generator::E(2)));
    let oracle = &e1.compose(&e2) - &e2.compose(&e1).scale(&Scalar::v_pow(-1));
    assert_eq!(root_vector(&m, root, Sign::Plus).unwrap(), &oracle);
    let (f1, f2) = (gen(&m, Generator::F(1)), gen(&m, Generator::F(2)));
    let oracle = &f2.compose(&f1) - &f1.compose(&f2).scale(&Scalar::v_pow(1));
    assert_eq!(root_vector(&m, root, Sign::Minus).unwrap(), &oracle);
}

#[test]
fn classical_divided_square_on_two_two() {
    let m = Model::classical(2, 2).unwrap();
    let e = gen(&m, Generator::E(1));
    let square = e.pow(2);
    let (c, r) = (m.word_index(&[2, 2]).unwrap(), m.word_index(&[1, 1]).unwrap());
    assert_eq!(square.get(r, c), Scalar::int(2));
    let half = divided_power(&m, &e, 2).unwrap();
    assert_eq!(half.get(r, c), Scalar::one());
    assert_eq!(half.nnz(), 1);
    assert!(divided_power(&m, &e, 3).unwrap().is_zero());
}

#[test]
fn b1_label_is_a_composite() {
    let m = Model::classical(2, 2).unwrap();
    let a = MultiIndex::single(Root::new(1, 2), 1);
    let label = BasisLabel::b1(a.clone(), w(&[0, 2]), a);
    let oracle = gen(&m, Generator::E(1))
        .compose(m.weight_idempotent(&w(&[0, 2])).unwrap())
        .compose(&gen(&m, Generator::F(1)));
    assert_eq!(eval_label(&m, &label).unwrap(), oracle);
    assert!(!oracle.is_zero());
}

#[test]
fn pbw_label_product_order() {
    // Generators for n = 2, k0 = 2: (x-, H1, x+); the monomial h e evaluates as H1 then e.
    let m = Model::classical(2, 2).unwrap();
    let label = BasisLabel::pbw(2, vec![0, 1, 1]);
    let oracle = gen(&m, Generator::H(1)).compose(&gen(&m, Generator::E(1)));
    assert_eq!(eval_label(&m, &label).unwrap(), oracle);
    assert_eq!(label.flavor, Flavor::Pbw);
}

#[test]
fn content_is_additive() {
    let a = MultiIndex::from_pairs([(Root::new(1, 2), 1), (Root::new(2, 3), 1)]);
    assert_eq!(content(&a, 3), w(&[0, 1, 1]));
}

#[test]
fn b1_labels_on_two_two() {
    let labels = enumerate_basis(2, 2, BasisKind::B1);
    assert_eq!(labels.len(), 10);
    for (lambda, count) in [(w(&[2, 0]), 1), (w(&[1, 1]), 3), (w(&[0, 2]), 6)] {
        let got: Vec<&BasisLabel> = labels.iter().filter(|l| l.lambda.as_ref() == Some(&lambda)).collect();
        assert_eq!(got.len(), count, "{lambda}");
        let budget = lambda.get(2);
        assert!(got.iter().all(|l| l.a.total() + l.c.total() <= budget));
    }
    assert_eq!(enumerate_basis(2, 2, BasisKind::Pbw { k0: 2 }).len(), 10);
}

#[test]
fn b1_rank_on_two_two() {
    let m = Model::classical(2, 2).unwrap();
    let table = BasisTable::new(&m, enumerate_basis(2, 2, BasisKind::B1)).unwrap();
    assert_eq!(rank_of_family(&m, table.ops()), 10);
    assert_eq!(schur_dimension(2, 2).to_usize(), Some(10));
    assert_eq!(schur_dimension(3, 2).to_usize(), Some(45));
    assert_eq!(schur_dimension(2, 4).to_usize(), Some(35));
}

#[test]
fn coordinates_of_identity_and_e() {
    let m = Model::classical(2, 2).unwrap();
    let table = BasisTable::new(&m, enumerate_basis(2, 2, BasisKind::B1)).unwrap();
    let id = table.coordinates(&m, &m.identity()).unwrap();
    for (k, l) in table.labels().iter().enumerate() {
        let expected = if l.a.is_zero() && l.c.is_zero() { 1 } else { 0 };
        assert_eq!(id.get(k), Scalar::int(expected), "{}", l.key());
    }
    let e = table.coordinates(&m, &gen(&m, Generator::E(1))).unwrap();
    assert!(!e.is_zero());
    for &(k, ref x) in e.entries() {
        let l = &table.labels()[k];
        assert!(l.a.total() == 1 && l.c.is_zero(), "{}", l.key());
        assert!(x.is_integral());
    }
    // e = e 1_(1,1) + e 1_(0,2): one coefficient per weight it can act on.
    assert_eq!(e.entries().len(), 2);
}

#[test]
fn truncated_product_is_integral() {
    let m = Model::classical(2, 2).unwrap();
    let p = m.weight_idempotent(&w(&[1, 1])).unwrap();
    let left = gen(&m, Generator::E(1)).compose(p);
    let right = p.compose(&gen(&m, Generator::F(1)));
    let table = BasisTable::new(&m, enumerate_basis(2, 2, BasisKind::B1)).unwrap();
    let coords = table.coordinates(&m, &left.compose(&right)).unwrap();
    assert!(coords.is_integral() && !coords.is_zero());
}

#[test]
fn serre_vacuous_for_rank_one() {
    let r = check_enveloping_relations(&Model::classical(2, 2).unwrap());
    assert!(r.pass);
    for id in ["R4", "R5"] {
        assert!(r.relation(id).is_some_and(|x| x.vacuous && x.cases == 0), "{id}");
    }
    for id in ["R1", "R2", "R3"] {
        assert!(r.relation(id).is_some_and(|x| !x.vacuous && x.failures.is_empty()), "{id}");
    }
    let r = check_enveloping_relations(&Model::classical(3, 2).unwrap());
    assert!(r.pass && r.relation("R4").is_some_and(|x| !x.vacuous));
    let r = check_enveloping_relations(&Model::quantum(3, 2).unwrap());
    assert!(r.pass && r.relation("Q5").is_some_and(|x| !x.vacuous));
}

#[test]
fn cartan_identities_on_two_two() {
    let m = Model::classical(2, 2).unwrap();
    let (h1, h2) = (gen(&m, Generator::H(1)), gen(&m, Generator::H(2)));
    assert_eq!(&h1 + &h2, m.identity().scale(&Scalar::int(2)));
    let id = m.identity();
    let cubic = (0..3).fold(id.clone(), |acc, k| acc.compose(&(&h1 - &id.scale(&Scalar::int(k)))));
    assert!(cubic.is_zero());

    let m = Model::quantum(2, 2).unwrap();
    let k1 = gen(&m, Generator::K(1));
    let id = m.identity();
    let cubic = (0..3).fold(id.clone(), |acc, k| acc.compose(&(&k1 - &id.scale(&Scalar::v_pow(k)))));
    assert!(cubic.is_zero());
}

#[test]
fn weight_idempotent_relations_on_two_two() {
    let m = Model::classical(2, 2).unwrap();
    let e = gen(&m, Generator::E(1));
    assert!(e.compose(m.weight_idempotent(&w(&[2, 0])).unwrap()).is_zero());
    let f = gen(&m, Generator::F(1));
    let comm = &e.compose(&f) - &f.compose(&e);
    let oracle = by_weight(&m, |mu| Scalar::int(mu.get(1) as i64 - mu.get(2) as i64));
    assert_eq!(comm, oracle);
    for (lambda, eig) in [(w(&[2, 0]), 2), (w(&[1, 1]), 0), (w(&[0, 2]), -2)] {
        let p = m.weight_idempotent(&lambda).unwrap();
        assert_eq!(comm.compose(p), p.scale(&Scalar::int(eig)));
    }
}

#[test]
fn reduction_examples_on_two_two() {
    let m = Model::classical(2, 2).unwrap();
    let (e, f) = (gen(&m, Generator::E(1)), gen(&m, Generator::F(1)));
    let lhs = f.compose(&m.cartan_binomial(2, 1).unwrap()).compose(&e);
    let rhs = m.cartan_binomial(2, 2).unwrap().scale(&Scalar::int(2));
    assert_eq!(lhs, rhs);

    let m = Model::quantum(2, 2).unwrap();
    let (e, f) = (gen(&m, Generator::E(1)), gen(&m, Generator::F(1)));
    let lhs = e.compose(m.weight_idempotent(&w(&[1, 1])).unwrap()).compose(&f);
    let rhs = m.weight_idempotent(&w(&[2, 0])).unwrap().scale(&Scalar::laurent(quantum_integer(2)));
    assert_eq!(lhs, rhs);
}

#[test]
fn rank_one_d_two() {
    for mode in [Mode::Classical, Mode::Quantum] {
        let r = check_rank_one_presentation(2, mode).unwrap();
        assert!(r.pass, "{r}");
    }
    let m = Model::quantum(2, 2).unwrap();
    let k = gen(&m, Generator::K(1)).compose(&gen(&m, Generator::KInv(2)));
    let id = m.identity();
    let cubic = [2, 0, -2].iter().fold(id.clone(), |acc, &j| acc.compose(&(&k - &id.scale(&Scalar::v_pow(j)))));
    assert!(cubic.is_zero());
}

#[test]
fn structural_on_two_two() {
    let m = Model::classical(2, 2).unwrap();
    let e = gen(&m, Generator::E(1));
    assert!(e.pow(3).is_zero() && !e.pow(2).is_zero());
    assert!(m.cartan_monomial(&w(&[2, 1])).unwrap().is_zero());
    let r = check_structural_facts(&m);
    assert!(r.pass && r.relation("triangular").is_some_and(|x| x.cases == 6));
}

#[test]
fn specialization_of_one_label() {
    let a = MultiIndex::single(Root::new(1, 2), 1);
    let label = BasisLabel::b1(a.clone(), w(&[0, 2]), a);
    let q = eval_label(&Model::quantum(2, 2).unwrap(), &label).unwrap();
    let c = eval_label(&Model::classical(2, 2).unwrap(), &label).unwrap();
    assert_eq!(q.specialize(&num_rational::BigRational::from_integer(1.into())), Some(c));
}

#[test]
fn hecke_dimensions() {
    for (n, d, dim) in [(2, 2, 2), (3, 3, 6)] {
        for mode in [Mode::Classical, Mode::Quantum] {
            let m = Model::new(n, d, mode).unwrap();
            assert_eq!(omega_truncation(&m).unwrap().dim, dim);
            let r = check_hecke_generation(&m).unwrap();
            assert!(r.pass, "{r}");
        }
    }
    let r = check_hecke_generation(&Model::classical(2, 2).unwrap()).unwrap();
    for note in &r.notes {
        let rounds: usize = note.rsplit(' ').nth(1).unwrap().parse().unwrap();
        assert!(rounds <= 2, "{note}");
    }
}
