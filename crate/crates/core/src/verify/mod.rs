//! Exact operator checks of the defining relations, presentations, reduction
//! formulas and structural facts.

mod report;
mod structural;

pub use report::{CheckReport, RelationResult};
pub use structural::{check_rank_one_presentation, check_specialization, check_structural_facts};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SchurError};
use crate::ring::{binomial, gaussian_binomial, quantum_integer, LaurentPoly, Mode, Scalar};
use crate::rootvectors::{root_divided_power, Sign};
use crate::tensormodel::{Model, Root, RootData, SparseOperator, Weight};

pub(crate) use report::ReportBuilder;

fn int(k: i64) -> Scalar {
    Scalar::int(k)
}

/// `v^k` in quantum mode.
fn vp(k: i64) -> Scalar {
    Scalar::v_pow(k)
}

/// `[2] = v + v^-1`.
fn q2() -> Scalar {
    Scalar::laurent(quantum_integer(2))
}

fn simple(i: usize) -> Root {
    Root::new(i, i + 1)
}

/// Serre relation for a pair of raising (or lowering) operators.
fn serre(xi: &SparseOperator, xj: &SparseOperator, adjacent: bool, middle: &Scalar) -> SparseOperator {
    if adjacent {
        &(&xi.compose(xi).compose(xj) - &xi.compose(xj).compose(xi).scale(middle))
            + &xj.compose(xi).compose(xi)
    } else {
        &xi.compose(xj) - &xj.compose(xi)
    }
}

fn serre_cases(b: &mut ReportBuilder, model: &Model, ids: [&str; 2]) {
    let n = model.n();
    let middle = match model.mode() {
        Mode::Classical => int(2),
        Mode::Quantum => q2(),
    };
    b.declare(ids[0]);
    b.declare(ids[1]);
    for i in 1..n {
        for j in 1..n {
            if i == j {
                continue;
            }
            let adjacent = i.abs_diff(j) == 1;
            let up = serre(model.raise(i), model.raise(j), adjacent, &middle);
            b.case(ids[0], up.is_zero(), || format!("i={i},j={j}"));
            let down = serre(model.lower(i), model.lower(j), adjacent, &middle);
            b.case(ids[1], down.is_zero(), || format!("i={i},j={j}"));
        }
    }
}

/// (R1)-(R5) classically, (Q1)-(Q5) in quantum mode. The second line of
/// (Q4) is checked as `E_i E_j = E_j E_i` for `|i - j| > 1`.
pub fn check_enveloping_relations(model: &Model) -> CheckReport {
    let (n, d, mode) = (model.n(), model.d(), model.mode());
    let mut b = ReportBuilder::new("enveloping_relations", n, d, mode);
    let id = model.identity();
    match mode {
        Mode::Classical => {
            for i in 1..=n {
                for j in i + 1..=n {
                    let (hi, hj) = (model.cartan(i), model.cartan(j));
                    b.case("R1", (&hi.compose(hj) - &hj.compose(hi)).is_zero(), || format!("i={i},j={j}"));
                }
            }
            for i in 1..n {
                for j in 1..n {
                    let mut res = &model.raise(i).compose(model.lower(j)) - &model.lower(j).compose(model.raise(i));
                    if i == j {
                        res = &res - &(model.cartan(j) - model.cartan(j + 1));
                    }
                    b.case("R2", res.is_zero(), || format!("i={i},j={j}"));
                }
            }
            for i in 1..=n {
                for j in 1..n {
                    let p = int(RootData::pairing(i, j));
                    let (h, e, f) = (model.cartan(i), model.raise(j), model.lower(j));
                    let up = &(&h.compose(e) - &e.compose(h)) - &e.scale(&p);
                    let down = &(&h.compose(f) - &f.compose(h)) + &f.scale(&p);
                    b.case("R3", up.is_zero() && down.is_zero(), || format!("i={i},j={j}"));
                }
            }
            serre_cases(&mut b, model, ["R4", "R5"]);
        }
        Mode::Quantum => {
            for i in 1..=n {
                let (ki, kinv) = (model.cartan(i), model.cartan_inv(i));
                let inverse = ki.compose(kinv) == id && kinv.compose(ki) == id;
                b.case("Q1", inverse, || format!("i={i} inverse"));
                for j in i + 1..=n {
                    let kj = model.cartan(j);
                    b.case("Q1", ki.compose(kj) == kj.compose(ki), || format!("i={i},j={j}"));
                }
            }
            let denom = Scalar::laurent(&LaurentPoly::v() - &LaurentPoly::v_pow(-1));
            for i in 1..n {
                for j in 1..n {
                    let mut res = &model.raise(i).compose(model.lower(j)) - &model.lower(j).compose(model.raise(i));
                    if i == j {
                        let num = &model.cartan(i).compose(model.cartan_inv(i + 1))
                            - &model.cartan_inv(i).compose(model.cartan(i + 1));
                        res = &res - &num.div_scalar(&denom).expect("v - v^-1 is nonzero");
                    }
                    b.case("Q2", res.is_zero(), || format!("i={i},j={j}"));
                }
            }
            for i in 1..=n {
                for j in 1..n {
                    let p = RootData::pairing(i, j);
                    let (k, e, f) = (model.cartan(i), model.raise(j), model.lower(j));
                    let up = &k.compose(e) - &e.compose(k).scale(&vp(p));
                    let down = &k.compose(f) - &f.compose(k).scale(&vp(-p));
                    b.case("Q3", up.is_zero() && down.is_zero(), || format!("i={i},j={j}"));
                }
            }
            serre_cases(&mut b, model, ["Q4", "Q5"]);
            b.note("Q4 second line checked as E_iE_j - E_jE_i = 0 for |i-j| > 1");
        }
    }
    b.finish()
}

/// (R6)-(R7) or (Q6)-(Q7).
pub fn check_schur_relations(model: &Model) -> CheckReport {
    let (n, d, mode) = (model.n(), model.d(), model.mode());
    let mut b = ReportBuilder::new("schur_relations", n, d, mode);
    let id = model.identity();
    let (ids, unit): ([&str; 2], fn(i64) -> Scalar) = match mode {
        Mode::Classical => (["R6", "R7"], int),
        Mode::Quantum => (["Q6", "Q7"], vp),
    };
    let total = match mode {
        Mode::Classical => (1..=n).fold(model.zero(), |acc, k| &acc + model.cartan(k)),
        Mode::Quantum => (1..=n).fold(id.clone(), |acc, k| acc.compose(model.cartan(k))),
    };
    let expected = match mode {
        Mode::Classical => id.scale(&int(d as i64)),
        Mode::Quantum => id.scale(&vp(d as i64)),
    };
    b.case(ids[0], total == expected, || "sum/product of Cartan generators".into());
    for k in 1..=n {
        // H_k (H_k - 1) ... (H_k - d), resp. (K_k - 1)(K_k - v) ... (K_k - v^d).
        let prod = (0..=d as i64).fold(id.clone(), |acc, s| {
            acc.compose(&(model.cartan(k) - &id.scale(&unit(s))))
        });
        b.case(ids[1], prod.is_zero(), || format!("k={k}"));
    }
    b.finish()
}

/// (S1)-(S3) with the Serre relations, resp. (S1')-(S3') with q-Serre.
/// Every "0 otherwise" branch is checked as well.
pub fn check_idempotent_presentation(model: &Model) -> CheckReport {
    let (n, d, mode) = (model.n(), model.d(), model.mode());
    let mut b = ReportBuilder::new("idempotent_presentation", n, d, mode);
    let ids: [&str; 5] = match mode {
        Mode::Classical => ["S1", "S2", "S3", "R4", "R5"],
        Mode::Quantum => ["S1'", "S2'", "S3'", "Q4", "Q5"],
    };
    let lambdas = model.compositions();
    let one = |l: &Weight| model.weight_idempotent(l).expect("composition");
    let zero = model.zero();

    for lam in lambdas {
        for mu in lambdas {
            let prod = one(lam).compose(one(mu));
            let ok = if lam == mu { &prod == one(lam) } else { prod.is_zero() };
            b.case(ids[0], ok, || format!("lambda={lam},mu={mu}"));
        }
    }
    let sum = lambdas.iter().fold(model.zero(), |acc, l| &acc + one(l));
    b.case(ids[0], sum == model.identity(), || "sum of idempotents".into());

    for i in 1..n {
        let (e, f) = (model.raise(i), model.lower(i));
        for lam in lambdas {
            let plus = lam.shift_by_root(simple(i), 1);
            let minus = lam.shift_by_root(simple(i), -1);
            let l = one(lam);
            // e_i 1_lam = 1_{lam+a_i} e_i
            let rhs = plus.as_ref().map_or(zero.clone(), |p| one(p).compose(e));
            b.case(ids[1], e.compose(l) == rhs, || format!("e_{i} 1_{lam}"));
            // f_i 1_lam = 1_{lam-a_i} f_i
            let rhs = minus.as_ref().map_or(zero.clone(), |p| one(p).compose(f));
            b.case(ids[1], f.compose(l) == rhs, || format!("f_{i} 1_{lam}"));
            // 1_lam e_i = e_i 1_{lam-a_i}
            let rhs = minus.as_ref().map_or(zero.clone(), |p| e.compose(one(p)));
            b.case(ids[1], l.compose(e) == rhs, || format!("1_{lam} e_{i}"));
            // 1_lam f_i = f_i 1_{lam+a_i}
            let rhs = plus.as_ref().map_or(zero.clone(), |p| f.compose(one(p)));
            b.case(ids[1], l.compose(f) == rhs, || format!("1_{lam} f_{i}"));
        }
    }

    for i in 1..n {
        for j in 1..n {
            let mut res = &model.raise(i).compose(model.lower(j)) - &model.lower(j).compose(model.raise(i));
            if i == j {
                for lam in lambdas {
                    let m = lam.get(j) as i64 - lam.get(j + 1) as i64;
                    let coeff = match mode {
                        Mode::Classical => int(m),
                        Mode::Quantum => Scalar::laurent(quantum_integer(m)),
                    };
                    res = &res - &one(lam).scale(&coeff);
                }
            }
            b.case(ids[2], res.is_zero(), || format!("i={i},j={j}"));
        }
    }
    serre_cases(&mut b, model, [ids[3], ids[4]]);
    b.finish()
}

/// The three families of reduction formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionFamily {
    /// Middle factor `binom(H_j, b)` / `binom(H_i, b)`.
    ClassicalH,
    /// Middle factor `1_lambda`, Gaussian binomial coefficients.
    QuantumIdempotent,
    /// Middle factor `1_lambda`, ordinary binomial coefficients.
    ClassicalIdempotent,
}

impl ReductionFamily {
    pub const ALL: [ReductionFamily; 3] = [
        ReductionFamily::ClassicalH,
        ReductionFamily::QuantumIdempotent,
        ReductionFamily::ClassicalIdempotent,
    ];

    pub fn mode(self) -> Mode {
        match self {
            ReductionFamily::QuantumIdempotent => Mode::Quantum,
            _ => Mode::Classical,
        }
    }
}

impl fmt::Display for ReductionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionFamily::ClassicalH => "classical-H",
            ReductionFamily::QuantumIdempotent => "quantum-idempotent",
            ReductionFamily::ClassicalIdempotent => "classical-idempotent",
        })
    }
}

impl FromStr for ReductionFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        ReductionFamily::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| format!("unknown reduction family {s:?}"))
    }
}

/// `sign * binom(k-1, s-1) * binom(top, k)` in the family's coefficient ring.
fn reduction_coefficient(mode: Mode, k: u32, s: u32, top: u32) -> Scalar {
    let sign = if (k - s).is_multiple_of(2) { 1 } else { -1 };
    match mode {
        Mode::Classical => {
            Scalar::big_int(binomial((k - 1) as u64, (s - 1) as u64) * binomial(top as u64, k as u64) * sign)
        }
        Mode::Quantum => {
            let g = |a: u32, b: u32| gaussian_binomial(a as i64, b as i64).expect("nonnegative");
            Scalar::laurent((&g(k - 1, s - 1) * &g(top, k)).scale(&sign.into()))
        }
    }
}

/// The reduction formulas for every positive root and every admissible
/// parameter tuple with `s >= 1`.
pub fn check_reduction_formulas(model: &Model, family: ReductionFamily) -> Result<CheckReport> {
    let (n, d, mode) = (model.n(), model.d(), model.mode());
    if family.mode() != mode {
        return Err(SchurError::WrongMode(format!("reduction family {family} in {mode} mode")));
    }
    let mut b = ReportBuilder::new(&format!("reduction_formulas/{family}"), n, d, mode);
    let ids = match family {
        ReductionFamily::ClassicalH => ["fHe", "eHf"],
        _ => ["first", "second"],
    };
    b.declare(ids[0]);
    b.declare(ids[1]);
    let dp = |root: Root, sign: Sign, m: u32| root_divided_power(model, root, sign, m);
    let d32 = d as u32;
    for &root in model.roots().positive_roots() {
        let (i, j) = (root.i, root.j);
        match family {
            ReductionFamily::ClassicalH => {
                for (id, outer, inner, hk) in [(ids[0], Sign::Minus, Sign::Plus, j), (ids[1], Sign::Plus, Sign::Minus, i)] {
                    for a in 0..=d32 {
                        for bb in 0..=d32 {
                            for c in 0..=d32 {
                                let Some(s) = (a + bb + c).checked_sub(d32).filter(|&s| s >= 1) else {
                                    continue;
                                };
                                let lhs = dp(root, outer, a)?
                                    .compose(&model.cartan_binomial(hk, bb)?)
                                    .compose(&dp(root, inner, c)?);
                                let mut rhs = model.zero();
                                for k in s..=a.min(c) {
                                    let term = dp(root, outer, a - k)?
                                        .compose(&model.cartan_binomial(hk, bb + k)?)
                                        .compose(&dp(root, inner, c - k)?);
                                    rhs = &rhs + &term.scale(&reduction_coefficient(mode, k, s, bb + k));
                                }
                                b.case(id, lhs == rhs, || format!("alpha={root},a={a},b={bb},c={c}"));
                            }
                        }
                    }
                }
            }
            ReductionFamily::QuantumIdempotent | ReductionFamily::ClassicalIdempotent => {
                for b1 in 0..=d32 {
                    let b2 = d32 - b1;
                    let mut lam = Weight::zeros(n);
                    lam.0[i - 1] = b1;
                    lam.0[j - 1] = b2;
                    let idem = |k: i64| -> Result<SparseOperator> {
                        match lam.shift_by_root(root, k) {
                            Some(w) => Ok(model.weight_idempotent(&w)?.clone()),
                            None => Ok(model.zero()),
                        }
                    };
                    for (id, outer, inner, bt, dir) in
                        [(ids[0], Sign::Plus, Sign::Minus, b1, 1i64), (ids[1], Sign::Minus, Sign::Plus, b2, -1)]
                    {
                        for a in 0..=d32 {
                            for c in 0..=d32 {
                                let Some(s) = (a + bt + c).checked_sub(d32).filter(|&s| s >= 1) else {
                                    continue;
                                };
                                let lhs = dp(root, outer, a)?.compose(&idem(0)?).compose(&dp(root, inner, c)?);
                                let mut rhs = model.zero();
                                for k in s..=a.min(c) {
                                    let term = dp(root, outer, a - k)?
                                        .compose(&idem(dir * k as i64)?)
                                        .compose(&dp(root, inner, c - k)?);
                                    rhs = &rhs + &term.scale(&reduction_coefficient(mode, k, s, bt + k));
                                }
                                b.case(id, lhs == rhs, || {
                                    format!("alpha={root},a={a},b1={b1},b2={b2},c={c}")
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(b.finish())
}

/// Which suites `verify` runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Relations,
    Idempotent,
    Reduction,
    Structural,
    Specialize,
    Rank1,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "all" => Suite::All,
            "relations" => Suite::Relations,
            "idempotent" => Suite::Idempotent,
            "reduction" => Suite::Reduction,
            "structural" => Suite::Structural,
            "specialize" => Suite::Specialize,
            "rank1" => Suite::Rank1,
            _ => return Err(format!("unknown suite {s:?}")),
        })
    }
}

/// Runs one suite on `model`. `Rank1` uses `n = 2` and the model's `d`;
/// `All` includes it only when `n = 2`.
pub fn run_suite(model: &Model, suite: Suite) -> Result<Vec<CheckReport>> {
    let reduction = |model: &Model| -> Result<Vec<CheckReport>> {
        ReductionFamily::ALL
            .into_iter()
            .filter(|f| f.mode() == model.mode())
            .map(|f| check_reduction_formulas(model, f))
            .collect()
    };
    Ok(match suite {
        Suite::Relations => vec![check_enveloping_relations(model), check_schur_relations(model)],
        Suite::Idempotent => vec![check_idempotent_presentation(model)],
        Suite::Reduction => reduction(model)?,
        Suite::Structural => vec![check_structural_facts(model)],
        Suite::Specialize => vec![check_specialization(model.n(), model.d())?],
        Suite::Rank1 => vec![check_rank_one_presentation(model.d(), model.mode())?],
        Suite::All => {
            let mut out = vec![
                check_enveloping_relations(model),
                check_schur_relations(model),
                check_idempotent_presentation(model),
            ];
            out.extend(reduction(model)?);
            out.push(check_structural_facts(model));
            out.push(check_specialization(model.n(), model.d())?);
            if model.n() == 2 {
                out.push(check_rank_one_presentation(model.d(), model.mode())?);
            }
            out
        }
    })
}
