//! Laurent polynomials in `v` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RingError;

/// An element of `Z[v, v^-1]`.
///
/// Stored as a sparse map from exponent to coefficient. Zero coefficients are
/// never stored, so the zero polynomial is the empty map and structural
/// equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `v`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `v^exp`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Returns the constant value if the polynomial has no `v`-dependence.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `v`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The bar involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Nonnegative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient by `c`, which must divide each of them.
    pub(crate) fn div_coefficients(&self, c: &BigInt) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (*e, x / c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Dense coefficient vector starting at the lowest exponent.
    fn dense(&self) -> (i64, Vec<BigInt>) {
        let lo = self.min_exp().unwrap_or(0);
        let hi = self.max_exp().unwrap_or(0);
        let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        (lo, out)
    }

    /// Exact quotient in `Z[v, v^-1]`.
    ///
    /// Fails with [`RingError::NotDivisible`] when no Laurent polynomial `r`
    /// with `divisor * r == self` exists.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (p_shift, p) = self.dense();
        let (q_shift, q) = divisor.dense();
        let not_divisible = || RingError::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        // Both dense forms have a nonzero constant term, so a Laurent quotient
        // exists iff the ordinary polynomial quotient does.
        if p.len() < q.len() {
            return Err(not_divisible());
        }
        let top = q.len() - 1;
        let lead = &q[top];
        let mut rem = p;
        let mut quot = vec![BigInt::zero(); rem.len() - top];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + top];
            if c.is_zero() {
                continue;
            }
            let (qc, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            for (k, qk) in q.iter().enumerate() {
                rem[i + k] -= &qc * qk;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(not_divisible());
        }
        Ok(Self::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + p_shift - q_shift, c)),
        ))
    }

    /// Evaluation homomorphism `v -> r`. `r` must be nonzero.
    pub fn specialize(&self, r: &BigRational) -> BigRational {
        assert!(!r.is_zero(), "cannot specialize a Laurent polynomial at v = 0");
        self.terms
            .iter()
            .map(|(e, c)| {
                let base = if *e >= 0 { r.clone() } else { r.recip() };
                let mut power = BigRational::one();
                for _ in 0..e.unsigned_abs() {
                    power *= &base;
                }
                power * BigRational::from_integer(c.clone())
            })
            .fold(BigRational::zero(), |acc, t| acc + t)
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms with the highest exponent first, e.g. `v^2 - 3 + 2*v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{magnitude}*v")?,
                (_, true) => write!(f, "v^{e}")?,
                (_, false) => write!(f, "{magnitude}*v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = RingError;

    /// Parses the canonical rendering (and any reordering of its terms).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RingError::Parse(s.to_string());
        let compact: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        while i < compact.len() {
            let mut negative = false;
            if compact[i] == '+' || compact[i] == '-' {
                negative = compact[i] == '-';
                i += 1;
            } else if i != 0 {
                return Err(bad());
            }
            let digits_start = i;
            while i < compact.len() && compact[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: Option<BigInt> = if i > digits_start {
                let text: String = compact[digits_start..i].iter().collect();
                Some(text.parse().map_err(|_| bad())?)
            } else {
                None
            };
            let mut exp = 0i64;
            let has_star = i < compact.len() && compact[i] == '*';
            if has_star {
                if coeff.is_none() {
                    return Err(bad());
                }
                i += 1;
            }
            if i < compact.len() && compact[i] == 'v' {
                i += 1;
                exp = 1;
                if i < compact.len() && compact[i] == '^' {
                    i += 1;
                    let start = i;
                    if i < compact.len() && compact[i] == '-' {
                        i += 1;
                    }
                    while i < compact.len() && compact[i].is_ascii_digit() {
                        i += 1;
                    }
                    let text: String = compact[start..i].iter().collect();
                    exp = text.parse().map_err(|_| bad())?;
                }
            } else if has_star || coeff.is_none() {
                return Err(bad());
            }
            let mut c = coeff.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            out.add_term(exp, c);
        }
        Ok(out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
