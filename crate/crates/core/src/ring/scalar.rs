use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{LaurentFraction, LaurentPoly, RingError};

/// Which coefficient field a model works over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `Q`, the classical Schur algebra.
    Classical,
    /// `Q(v)`, the q-Schur algebra.
    Quantum,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Classical => write!(f, "classical"),
            Mode::Quantum => write!(f, "quantum"),
        }
    }
}

/// An element of `Q` or `Q(v)`.
///
/// Mixed arithmetic promotes through the embedding `Q -> Q(v)`, so integer
/// and rational constants can be combined freely with quantum values.
/// Equality is mathematical equality across that embedding.
#[derive(Clone)]
pub enum Scalar {
    Rational(BigRational),
    Quantum(LaurentFraction),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(n.into()))
    }

    pub fn big_int(n: BigInt) -> Self {
        Scalar::Rational(BigRational::from_integer(n))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::Rational(BigRational::new(p.into(), q.into()))
    }

    pub fn laurent(p: LaurentPoly) -> Self {
        Scalar::Quantum(LaurentFraction::from_poly(p))
    }

    /// `v^k`.
    pub fn v_pow(k: i64) -> Self {
        Self::laurent(LaurentPoly::v_pow(k))
    }

    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Rational(_) => Mode::Classical,
            Scalar::Quantum(_) => Mode::Quantum,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Quantum(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Quantum(f) => f.as_laurent().is_some_and(|p| p.is_one()),
        }
    }

    /// True for elements of `Z` (classical) or `Z[v, v^-1]` (quantum).
    pub fn is_integral(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_integer(),
            Scalar::Quantum(f) => f.as_laurent().is_some(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Quantum(_) => None,
        }
    }

    /// The value as a Laurent polynomial when it is integral.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        match self {
            Scalar::Rational(r) if r.is_integer() => Some(LaurentPoly::constant(r.to_integer())),
            Scalar::Rational(_) => None,
            Scalar::Quantum(f) => f.as_laurent(),
        }
    }

    fn to_fraction(&self) -> LaurentFraction {
        match self {
            Scalar::Rational(r) => LaurentFraction::from_rational(r),
            Scalar::Quantum(f) => f.clone(),
        }
    }

    /// Evaluates at `v = r`. Rationals are returned unchanged; `None` if a
    /// denominator vanishes at `r`.
    pub fn specialize(&self, r: &BigRational) -> Option<BigRational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Quantum(f) => f.specialize(r),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) if r.is_zero() => None,
            Scalar::Rational(r) => Some(Scalar::Rational(r.recip())),
            Scalar::Quantum(f) => f.inv().map(Scalar::Quantum),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::laurent(p)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Quantum(a), Scalar::Quantum(b)) => a == b,
            _ => self.to_fraction() == other.to_fraction(),
        }
    }
}

impl Eq for Scalar {}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => Scalar::Quantum(self.to_fraction().add(&rhs.to_fraction())),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => Scalar::Quantum(self.to_fraction().sub(&rhs.to_fraction())),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Rational(a), Scalar::Quantum(_)) if a.is_one() => rhs.clone(),
            (Scalar::Quantum(_), Scalar::Rational(b)) if b.is_one() => self.clone(),
            _ => Scalar::Quantum(self.to_fraction().mul(&rhs.to_fraction())),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quantum(f) => Scalar::Quantum(f.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    /// Rationals render as `p/q` (or `p`); quantum values as Laurent text, with
    /// non-integral values as `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Quantum(q) => write!(f, "{q}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "Rational({r})"),
            Scalar::Quantum(q) => write!(f, "Quantum({q})"),
        }
    }
}

impl FromStr for Scalar {
    type Err = RingError;

    /// Accepts `p`, `p/q`, a Laurent polynomial, or `(num)/(den)`. Text
    /// mentioning `v`, and any `(num)/(den)`, is quantum; anything else is rational.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let (num, den) = rest
                .split_once(")/(")
                .ok_or_else(|| RingError::Parse(s.to_string()))?;
            let den = den
                .strip_suffix(')')
                .ok_or_else(|| RingError::Parse(s.to_string()))?;
            let f = LaurentFraction::new(num.parse()?, den.parse()?)?;
            return Ok(Scalar::Quantum(f));
        }
        if !t.contains('v') {
            return t
                .parse::<BigRational>()
                .map(Scalar::Rational)
                .map_err(|_| RingError::Parse(s.to_string()));
        }
        Ok(Scalar::laurent(t.parse()?))
    }
}
