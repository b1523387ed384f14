use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, SchurError};
use crate::tensormodel::{Model, Root, RootData, SparseOperator, Weight};

use super::{root_divided_power, root_vector, Sign};

/// An element of `N^{Phi+}`; zero entries are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiIndex(BTreeMap<Root, u32>);

impl MultiIndex {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(root: Root, m: u32) -> Self {
        Self::from_pairs([(root, m)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Root, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (r, m) in pairs {
            *map.entry(r).or_insert(0) += m;
        }
        map.retain(|_, m| *m > 0);
        MultiIndex(map)
    }

    /// From an exponent vector indexed like `roots.positive_roots()`.
    pub fn from_exponents(roots: &RootData, exps: &[u32]) -> Self {
        Self::from_pairs(roots.positive_roots().iter().copied().zip(exps.iter().copied()))
    }

    pub fn to_exponents(&self, roots: &RootData) -> Vec<u32> {
        roots.positive_roots().iter().map(|r| self.get(*r)).collect()
    }

    pub fn get(&self, root: Root) -> u32 {
        self.0.get(&root).copied().unwrap_or(0)
    }

    /// `|A|`.
    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero entries in lexicographic root order.
    pub fn iter(&self) -> impl Iterator<Item = (Root, u32)> + '_ {
        self.0.iter().map(|(r, m)| (*r, *m))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (r, m)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}:{m}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (r, m) in &self.0 {
            map.serialize_entry(&r.to_string(), m)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for MultiIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, u32>::deserialize(d)?;
        let pairs = raw
            .into_iter()
            .map(|(k, m)| k.parse::<Root>().map(|r| (r, m)))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(MultiIndex::from_pairs(pairs))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// `e_A 1_lambda f_C`.
    B1,
    /// `f_A 1_lambda e_C`.
    B2,
    /// Monomial in the truncated PBW generators.
    #[serde(rename = "PBW")]
    Pbw,
    /// `e_A`.
    #[serde(rename = "PLUS")]
    Plus,
    /// `f_A`.
    #[serde(rename = "MINUS")]
    Minus,
    /// `e_A 1_lambda`.
    #[serde(rename = "BOREL_UP")]
    BorelUp,
    /// `1_lambda f_A`.
    #[serde(rename = "BOREL_DOWN")]
    BorelDown,
    /// `1_lambda`.
    #[serde(rename = "ZERO")]
    Zero,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Flavor::B1 => "B1",
            Flavor::B2 => "B2",
            Flavor::Pbw => "PBW",
            Flavor::Plus => "PLUS",
            Flavor::Minus => "MINUS",
            Flavor::BorelUp => "BOREL_UP",
            Flavor::BorelDown => "BOREL_DOWN",
            Flavor::Zero => "ZERO",
        };
        f.write_str(s)
    }
}

/// Combinatorial label of a basis element.
///
/// One-sided flavors (`PLUS`, `MINUS`, `BOREL_UP`, `BOREL_DOWN`) keep their
/// multi-index in `a`; `c` stays zero. `PBW` uses `k0` and `exponents`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisLabel {
    pub flavor: Flavor,
    #[serde(rename = "A", default)]
    pub a: MultiIndex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Weight>,
    #[serde(rename = "C", default)]
    pub c: MultiIndex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k0: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<u32>>,
}

impl BasisLabel {
    fn new(flavor: Flavor, a: MultiIndex, lambda: Option<Weight>, c: MultiIndex) -> Self {
        Self { flavor, a, lambda, c, k0: None, exponents: None }
    }

    pub fn b1(a: MultiIndex, lambda: Weight, c: MultiIndex) -> Self {
        Self::new(Flavor::B1, a, Some(lambda), c)
    }

    pub fn b2(a: MultiIndex, lambda: Weight, c: MultiIndex) -> Self {
        Self::new(Flavor::B2, a, Some(lambda), c)
    }

    pub fn plus(a: MultiIndex) -> Self {
        Self::new(Flavor::Plus, a, None, MultiIndex::zero())
    }

    pub fn minus(a: MultiIndex) -> Self {
        Self::new(Flavor::Minus, a, None, MultiIndex::zero())
    }

    pub fn borel_up(a: MultiIndex, lambda: Weight) -> Self {
        Self::new(Flavor::BorelUp, a, Some(lambda), MultiIndex::zero())
    }

    pub fn borel_down(lambda: Weight, a: MultiIndex) -> Self {
        Self::new(Flavor::BorelDown, a, Some(lambda), MultiIndex::zero())
    }

    pub fn zero_part(lambda: Weight) -> Self {
        Self::new(Flavor::Zero, MultiIndex::zero(), Some(lambda), MultiIndex::zero())
    }

    pub fn pbw(k0: usize, exponents: Vec<u32>) -> Self {
        Self {
            flavor: Flavor::Pbw,
            a: MultiIndex::zero(),
            lambda: None,
            c: MultiIndex::zero(),
            k0: Some(k0),
            exponents: Some(exponents),
        }
    }

    /// Canonical one-line key, used for coefficient maps.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.flavor)?;
        match self.flavor {
            Flavor::Pbw => {
                write!(f, "|k0={}|X(", self.k0.unwrap_or(0))?;
                for (k, e) in self.exponents.iter().flatten().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            _ => {
                write!(f, "|A{}", self.a)?;
                if let Some(lam) = &self.lambda {
                    write!(f, "|L{lam}")?;
                }
                if matches!(self.flavor, Flavor::B1 | Flavor::B2) {
                    write!(f, "|C{}", self.c)?;
                }
                Ok(())
            }
        }
    }
}

/// A member of the ordered PBW generating set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PbwGenerator {
    Root(Root, Sign),
    /// `H_k` classically, `K_k` in quantum mode.
    Cartan(usize),
}

impl fmt::Display for PbwGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PbwGenerator::Root(r, s) => write!(f, "x{s}({r})"),
            PbwGenerator::Cartan(k) => write!(f, "H{k}"),
        }
    }
}

/// Negative root vectors, then `H_k` for `k != k0`, then positive root
/// vectors; roots in lexicographic order.
pub fn pbw_generators(n: usize, k0: usize) -> Vec<PbwGenerator> {
    let roots = RootData::new(n);
    let mut out: Vec<PbwGenerator> = roots
        .positive_roots()
        .iter()
        .map(|r| PbwGenerator::Root(*r, Sign::Minus))
        .collect();
    out.extend((1..=n).filter(|&k| k != k0).map(PbwGenerator::Cartan));
    out.extend(roots.positive_roots().iter().map(|r| PbwGenerator::Root(*r, Sign::Plus)));
    out
}

/// Ordered product of divided powers over `a`, lexicographic in the root.
fn root_product(model: &Model, a: &MultiIndex, sign: Sign) -> Result<SparseOperator> {
    a.iter().try_fold(model.identity(), |acc, (root, m)| {
        Ok(acc.compose(&root_divided_power(model, root, sign, m)?))
    })
}

fn idempotent<'m>(model: &'m Model, lambda: &Option<Weight>) -> Result<&'m SparseOperator> {
    let lam = lambda
        .as_ref()
        .ok_or_else(|| SchurError::InvalidLabel("missing lambda".into()))?;
    model.weight_idempotent(lam)
}

/// The operator a label stands for in `model`.
pub fn eval_label(model: &Model, label: &BasisLabel) -> Result<SparseOperator> {
    let up = |a: &MultiIndex| root_product(model, a, Sign::Plus);
    let down = |a: &MultiIndex| root_product(model, a, Sign::Minus);
    match label.flavor {
        Flavor::B1 => {
            let mid = idempotent(model, &label.lambda)?;
            Ok(up(&label.a)?.compose(mid).compose(&down(&label.c)?))
        }
        Flavor::B2 => {
            let mid = idempotent(model, &label.lambda)?;
            Ok(down(&label.a)?.compose(mid).compose(&up(&label.c)?))
        }
        Flavor::Plus => up(&label.a),
        Flavor::Minus => down(&label.a),
        Flavor::BorelUp => Ok(up(&label.a)?.compose(idempotent(model, &label.lambda)?)),
        Flavor::BorelDown => Ok(idempotent(model, &label.lambda)?.compose(&down(&label.a)?)),
        Flavor::Zero => Ok(idempotent(model, &label.lambda)?.clone()),
        Flavor::Pbw => eval_pbw(model, label),
    }
}

fn eval_pbw(model: &Model, label: &BasisLabel) -> Result<SparseOperator> {
    let n = model.n();
    let k0 = label
        .k0
        .filter(|k| (1..=n).contains(k))
        .ok_or_else(|| SchurError::InvalidLabel(format!("PBW label needs 1 <= k0 <= {n}")))?;
    let gens = pbw_generators(n, k0);
    let exps = label
        .exponents
        .as_ref()
        .filter(|e| e.len() == gens.len())
        .ok_or_else(|| {
            SchurError::InvalidLabel(format!("PBW label needs {} exponents", gens.len()))
        })?;
    if exps.iter().sum::<u32>() as usize > model.d() {
        return Err(SchurError::InvalidLabel(format!(
            "PBW monomial of degree {} exceeds d = {}",
            exps.iter().sum::<u32>(),
            model.d()
        )));
    }
    gens.iter().zip(exps).try_fold(model.identity(), |acc, (g, &e)| {
        if e == 0 {
            return Ok(acc);
        }
        let op = match g {
            PbwGenerator::Root(r, s) => root_vector(model, *r, *s)?,
            PbwGenerator::Cartan(k) => model.cartan(*k),
        };
        Ok(acc.compose(&op.pow(e)))
    })
}
