use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::bases::{enumerate_basis, independent_subset, rank_of_family, rank_with_target, schur_dimension, BasisKind};
use crate::error::Result;
use crate::ring::{binomial, LaurentPoly, Mode, Scalar};
use crate::rootvectors::{eval_label, root_divided_power, root_vector, BasisLabel, MultiIndex, Sign};
use crate::tensormodel::{bounded_vectors, compositions, Model, SparseOperator};

use super::{CheckReport, ReportBuilder};

fn products(left: &[SparseOperator], right: &[SparseOperator]) -> Vec<SparseOperator> {
    left.par_iter()
        .flat_map_iter(|x| right.iter().map(move |y| x.compose(y)))
        .filter(|p| !p.is_zero())
        .collect()
}

/// Nilpotency of root vectors, vanishing of `H_B` (`K_B`) above degree `d`,
/// the idempotent basis of the zero part, and all six orders of the
/// triangular decomposition.
pub fn check_structural_facts(model: &Model) -> CheckReport {
    let (n, d, mode) = (model.n(), model.d(), model.mode());
    let mut b = ReportBuilder::new("structural_facts", n, d, mode);
    let roots = model.roots().positive_roots().to_vec();

    for &root in &roots {
        for sign in [Sign::Plus, Sign::Minus] {
            let x = root_vector(model, root, sign).expect("positive root");
            let below = x.pow(d as u32);
            let ok = !below.is_zero() && below.compose(x).is_zero();
            b.case("nilpotency", ok, || format!("alpha={root},sign={sign}"));
        }
    }

    for total in [d + 1, d + 2] {
        for bvec in compositions(n, total as u32) {
            let hb = model.cartan_monomial(&bvec).expect("length n");
            b.case("H_B-vanishing", hb.is_zero(), || format!("B={bvec}"));
        }
    }

    let lambdas = model.compositions();
    let idems: Vec<SparseOperator> =
        lambdas.iter().map(|l| model.weight_idempotent(l).expect("composition").clone()).collect();
    let orthogonal = idems.iter().enumerate().all(|(a, x)| {
        idems.iter().enumerate().all(|(c, y)| {
            let p = x.compose(y);
            if a == c { &p == x } else { p.is_zero() }
        })
    });
    b.case("idempotents", orthogonal, || "pairwise orthogonal".into());
    let sum = idems.iter().fold(model.zero(), |acc, x| &acc + x);
    b.case("idempotents", sum == model.identity(), || "sum to identity".into());
    let rank = rank_of_family(model, &idems);
    b.case("idempotents", rank == lambdas.len(), || format!("rank {rank} != {}", lambdas.len()));

    let d32 = d as u32;
    let multis: Vec<MultiIndex> = bounded_vectors(roots.len(), d32)
        .iter()
        .map(|e| MultiIndex::from_exponents(model.roots(), &e.0))
        .collect();
    let side = |sign: Sign| -> Vec<SparseOperator> {
        multis
            .iter()
            .map(|a| {
                a.iter().fold(model.identity(), |acc, (r, m)| {
                    acc.compose(&root_divided_power(model, r, sign, m).expect("divided power"))
                })
            })
            .collect()
    };
    let plus = side(Sign::Plus);
    let minus = side(Sign::Minus);
    let zero: Vec<SparseOperator> = bounded_vectors(n, d32)
        .iter()
        .map(|bv| model.cartan_monomial(bv).expect("length n"))
        .collect();
    let dim = schur_dimension(n, d).to_usize().expect("small dimension");
    let parts = [("+", &plus), ("0", &zero), ("-", &minus)];
    for order in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let name: String = order.iter().map(|&k| parts[k].0).collect();
        let first = products(parts[order[0]].1, parts[order[1]].1);
        let keep = independent_subset(model, &first);
        let first: Vec<SparseOperator> = keep.into_iter().map(|k| first[k].clone()).collect();
        let all = products(&first, parts[order[2]].1);
        let r = rank_with_target(model, &all, Some(dim));
        b.case("triangular", r == dim, || format!("order {name}: rank {r} < {dim}"));
    }
    b.finish()
}

/// The `n = 2` presentation: `sl_2` relations for `h = H_1 - H_2` (resp.
/// `K = K_1 K_2^-1`), the minimal polynomial, minimality, and (classically)
/// the truncated PBW family `f^a h^b e^c`, `a + b + c <= d`.
pub fn check_rank_one_presentation(d: usize, mode: Mode) -> Result<CheckReport> {
    let model = Model::new(2, d, mode)?;
    let mut b = ReportBuilder::new("rank_one_presentation", 2, d, mode);
    let (e, f) = (model.raise(1), model.lower(1));
    let id = model.identity();
    let (h, factors) = match mode {
        Mode::Classical => {
            let h = model.cartan(1) - model.cartan(2);
            let two = Scalar::int(2);
            let he = &(&h.compose(e) - &e.compose(&h)) - &e.scale(&two);
            let ef = &(&e.compose(f) - &f.compose(e)) - &h;
            let hf = &(&h.compose(f) - &f.compose(&h)) + &f.scale(&two);
            b.case("sl2", he.is_zero(), || "he - eh = 2e".into());
            b.case("sl2", ef.is_zero(), || "ef - fe = h".into());
            b.case("sl2", hf.is_zero(), || "hf - fh = -2f".into());
            let factors: Vec<SparseOperator> = (0..=d as i64)
                .map(|k| &h - &id.scale(&Scalar::int(d as i64 - 2 * k)))
                .collect();
            (h, factors)
        }
        Mode::Quantum => {
            let k = model.cartan(1).compose(model.cartan_inv(2));
            let kinv = model.cartan_inv(1).compose(model.cartan(2));
            b.case("sl2", k.compose(&kinv) == id && kinv.compose(&k) == id, || "KK^-1 = 1".into());
            let ke = &k.compose(e).compose(&kinv) - &e.scale(&Scalar::v_pow(2));
            let kf = &k.compose(f).compose(&kinv) - &f.scale(&Scalar::v_pow(-2));
            b.case("sl2", ke.is_zero(), || "KEK^-1 = v^2 E".into());
            b.case("sl2", kf.is_zero(), || "KFK^-1 = v^-2 F".into());
            let denom = Scalar::laurent(&LaurentPoly::v() - &LaurentPoly::v_pow(-1));
            let rhs = (&k - &kinv).div_scalar(&denom)?;
            let ef = &(&e.compose(f) - &f.compose(e)) - &rhs;
            b.case("sl2", ef.is_zero(), || "EF - FE = (K - K^-1)/(v - v^-1)".into());
            let factors: Vec<SparseOperator> = (0..=d as i64)
                .map(|j| &k - &id.scale(&Scalar::v_pow(d as i64 - 2 * j)))
                .collect();
            (k, factors)
        }
    };
    let product = |skip: Option<usize>| {
        factors
            .iter()
            .enumerate()
            .filter(|(k, _)| Some(*k) != skip)
            .fold(id.clone(), |acc, (_, x)| acc.compose(x))
    };
    b.case("minimal-polynomial", product(None).is_zero(), || "full product".into());
    for k in 0..=d {
        b.case("no-proper-subproduct", !product(Some(k)).is_zero(), || {
            format!("omitting eigenvalue {}", d as i64 - 2 * k as i64)
        });
    }

    match mode {
        Mode::Classical => {
            let mut family = Vec::new();
            for a in 0..=d as u32 {
                for bb in 0..=d as u32 - a {
                    for c in 0..=d as u32 - a - bb {
                        family.push(f.pow(a).compose(&h.pow(bb)).compose(&e.pow(c)));
                    }
                }
            }
            let expected = binomial(d as u64 + 3, 3).to_usize().expect("small");
            let rank = rank_of_family(&model, &family);
            b.case("truncated-PBW", family.len() == expected && rank == expected, || {
                format!("count {} rank {rank} expected {expected}", family.len())
            });
        }
        Mode::Quantum => b.note("truncated PBW family f^a h^b e^c is a classical statement; not run in quantum mode"),
    }
    Ok(b.finish())
}

/// Every `B1'`/`B2'` operator at `v = 1` equals its classical counterpart.
/// The truncated PBW basis is excluded: `K_i` specializes to the identity.
pub fn check_specialization(n: usize, d: usize) -> Result<CheckReport> {
    let classical = Model::classical(n, d)?;
    let quantum = Model::quantum(n, d)?;
    let mut b = ReportBuilder::new("specialization", n, d, Mode::Quantum);
    let one = BigRational::one();
    for (id, kind) in [("B1'", BasisKind::B1), ("B2'", BasisKind::B2)] {
        let labels = enumerate_basis(n, d, kind);
        let outcomes: Vec<(bool, &BasisLabel)> = labels
            .par_iter()
            .map(|l| -> Result<(bool, &BasisLabel)> {
                let q = eval_label(&quantum, l)?;
                let c = eval_label(&classical, l)?;
                Ok((q.specialize(&one).is_some_and(|s| s == c), l))
            })
            .collect::<Result<_>>()?;
        for (ok, l) in outcomes {
            b.case(id, ok, || l.key());
        }
    }
    b.note("PBW labels excluded: K_i acts as the identity at v = 1");
    Ok(b.finish())
}
