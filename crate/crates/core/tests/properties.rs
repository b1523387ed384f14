use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use schur_core::bases::{enumerate_basis, BasisKind, BasisTable};
use schur_core::ring::{gaussian_binomial, LaurentFraction, LaurentPoly, Mode, RingError, Scalar};
use schur_core::rootvectors::{eval_label, root_divided_power, root_vector, Sign};
use schur_core::tensormodel::{Generator, Model, Root};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -6i64..=6), 0..5).prop_map(LaurentPoly::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| Scalar::ratio(p, q))
}

fn quantum() -> impl Strategy<Value = Scalar> {
    (laurent(), nonzero_laurent())
        .prop_map(|(p, q)| Scalar::Quantum(LaurentFraction::new(p, q).expect("nonzero denominator")))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![rational(), quantum()]
}

fn same_mode_triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    prop_oneof![(rational(), rational(), rational()), (quantum(), quantum(), quantum())]
}

fn field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(&(a + b) + c), &(a + &(b + c)));
    prop_assert_eq!(&(&(a * b) * c), &(a * &(b * c)));
    prop_assert_eq!(&(a * &(b + c)), &(&(a * b) + &(a * c)));
    prop_assert_eq!(&(a + b), &(b + a));
    prop_assert_eq!(&(a * b), &(b * a));
    prop_assert_eq!(&(&(a + b) - b), a);
    prop_assert!((a - &a.clone()).is_zero());
    match a.inv() {
        Some(inv) => prop_assert!((a * &inv).is_one()),
        None => prop_assert!(a.is_zero()),
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn scalar_field_axioms((a, b, c) in same_mode_triple()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn exact_div_round_trip(p in laurent(), q in nonzero_laurent()) {
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }
}

proptest! {
    #[test]
    fn specialize_is_a_ring_homomorphism(p in laurent(), q in laurent(), num in 1i64..9, den in 1i64..9) {
        let r = BigRational::new(num.into(), den.into());
        prop_assert_eq!((&p * &q).specialize(&r), p.specialize(&r) * q.specialize(&r));
        prop_assert_eq!((&p + &q).specialize(&r), p.specialize(&r) + q.specialize(&r));
    }

    #[test]
    fn exact_div_rejects_or_divides(p in laurent(), q in nonzero_laurent()) {
        match p.exact_div(&q) {
            Ok(r) => prop_assert_eq!(&r * &q, p),
            Err(e) => prop_assert!(matches!(e, RingError::NotDivisible { .. }), "{e:?}"),
        }
    }

    #[test]
    fn scalar_text_round_trip(x in scalar()) {
        let back: Scalar = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn gaussian_binomial_is_bar_invariant(a in 0i64..=10, b in 0i64..=10) {
        let g = gaussian_binomial(a, b).unwrap();
        prop_assert_eq!(g.bar(), g);
    }
}

#[test]
fn gaussian_binomial_specializes_to_binomial() {
    let one = BigRational::one();
    for a in 0..=12u64 {
        for b in 0..=a {
            let fact = |m: u64| (1..=m).fold(BigInt::one(), |acc, k| acc * k);
            let expected = fact(a) / (fact(b) * fact(a - b));
            let got = gaussian_binomial(a as i64, b as i64).unwrap().specialize(&one);
            assert_eq!(got, BigRational::from_integer(expected), "a={a} b={b}");
        }
    }
}

fn models() -> Vec<Model> {
    let mut out = Vec::new();
    for (n, d) in [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)] {
        out.push(Model::classical(n, d).unwrap());
        out.push(Model::quantum(n, d).unwrap());
    }
    out
}

#[test]
fn idempotents_are_orthogonal_and_sum_to_one() {
    for m in models() {
        let lambdas = m.compositions().to_vec();
        let mut sum = m.zero();
        for l in &lambdas {
            let x = m.weight_idempotent(l).unwrap();
            sum = &sum + x;
            for mu in &lambdas {
                let y = m.weight_idempotent(mu).unwrap();
                let p = x.compose(y);
                if l == mu {
                    assert_eq!(&p, x);
                } else {
                    assert!(p.is_zero(), "1_{l} 1_{mu} on n={} d={}", m.n(), m.d());
                }
            }
        }
        assert_eq!(sum, m.identity());
    }
}

#[test]
fn cartan_generators_commute_and_invert() {
    for m in models() {
        for i in 1..=m.n() {
            for j in 1..=m.n() {
                let (gi, gj) = match m.mode() {
                    Mode::Classical => (Generator::H(i), Generator::H(j)),
                    Mode::Quantum => (Generator::K(i), Generator::K(j)),
                };
                let (x, y) = (m.generator_action(gi).unwrap(), m.generator_action(gj).unwrap());
                assert_eq!(x.compose(y), y.compose(x));
            }
            if m.mode() == Mode::Quantum {
                let k = m.generator_action(Generator::K(i)).unwrap();
                let kinv = m.generator_action(Generator::KInv(i)).unwrap();
                assert_eq!(k.compose(kinv), m.identity());
            }
        }
    }
}

#[test]
fn raising_operators_shift_weight_by_a_simple_root() {
    for m in models() {
        for i in 1..m.n() {
            for (gen, sign) in [(Generator::E(i), 1i64), (Generator::F(i), -1)] {
                let op = m.generator_action(gen).unwrap();
                for (r, c, _) in op.entries() {
                    let diff = m.word_weight(r).diff(m.word_weight(c));
                    let mut alpha = vec![0i64; m.n()];
                    alpha[i - 1] = sign;
                    alpha[i] = -sign;
                    assert_eq!(diff, alpha, "{gen} entry ({r},{c})");
                }
            }
        }
    }
}

#[test]
fn root_vectors_nilpotent_of_index_d_plus_one() {
    for m in models() {
        for &root in m.roots().positive_roots() {
            for sign in [Sign::Plus, Sign::Minus] {
                let x = root_vector(&m, root, sign).unwrap();
                let top = x.pow(m.d() as u32);
                assert!(!top.is_zero(), "{root}{sign} n={} d={}", m.n(), m.d());
                assert!(top.compose(x).is_zero());
            }
        }
    }
}

#[test]
fn divided_powers_are_integral() {
    for m in models() {
        for &root in m.roots().positive_roots() {
            for sign in [Sign::Plus, Sign::Minus] {
                for k in 0..=m.d() as u32 {
                    let x = root_divided_power(&m, root, sign, k).unwrap();
                    assert!(x.is_integral(), "{root}{sign}^({k}) n={} d={} {}", m.n(), m.d(), m.mode());
                }
            }
        }
    }
}

#[test]
fn simple_root_vectors_are_the_generators() {
    for m in models() {
        for i in 1..m.n() {
            let root = Root::new(i, i + 1);
            assert_eq!(root_vector(&m, root, Sign::Plus).unwrap(), m.generator_action(Generator::E(i)).unwrap());
            assert_eq!(root_vector(&m, root, Sign::Minus).unwrap(), m.generator_action(Generator::F(i)).unwrap());
        }
    }
}

#[test]
fn coordinates_of_basis_elements_are_unit_vectors() {
    for (n, d) in [(2, 2), (2, 3), (3, 2)] {
        for mode in [Mode::Classical, Mode::Quantum] {
            let m = Model::new(n, d, mode).unwrap();
            for kind in [BasisKind::B1, BasisKind::B2, BasisKind::Pbw { k0: n }] {
                let table = BasisTable::new(&m, enumerate_basis(n, d, kind)).unwrap();
                for (k, label) in table.labels().iter().enumerate() {
                    let op = eval_label(&m, label).unwrap();
                    let coords = table.coordinates(&m, &op).unwrap();
                    for j in 0..table.len() {
                        let expected = if j == k { Scalar::one() } else { Scalar::zero() };
                        assert_eq!(coords.get(j), expected, "{kind} n={n} d={d} {mode}: {}", label.key());
                    }
                }
            }
        }
    }
}

#[test]
fn one_sided_families_count_and_rank() {
    use schur_core::bases::rank_of_family;
    for (n, d) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let m = Model::classical(n, d).unwrap();
        let roots = n * (n - 1) / 2;
        let expected = (0..=d).map(|k| binom(roots + k - 1, k)).sum::<usize>();
        for kind in [BasisKind::Plus, BasisKind::Minus] {
            let table = BasisTable::new(&m, enumerate_basis(n, d, kind)).unwrap();
            assert_eq!(table.len(), expected, "{kind} n={n} d={d}");
            assert_eq!(rank_of_family(&m, table.ops()), expected);
        }
    }
}

fn binom(a: usize, b: usize) -> usize {
    if b == 0 {
        return 1;
    }
    (1..=b).fold(1, |acc, k| acc * (a + 1 - k) / k)
}

#[test]
fn zero_is_not_invertible() {
    assert!(Scalar::zero().inv().is_none());
    assert!(Scalar::laurent(LaurentPoly::zero()).inv().is_none());
    assert!(BigRational::zero().is_zero());
}
