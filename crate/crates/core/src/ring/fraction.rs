//! Fractions of Laurent polynomials: the field `Q(v)` without gcd machinery.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, RingError};

/// `num / den` with `den != 0`.
///
/// Kept in a light normal form: whenever `den` divides `num` exactly the
/// fraction collapses to `num / 1`; otherwise `den` has lowest exponent 0 and
/// positive leading coefficient, and the integer content shared by numerator
/// and denominator is removed. Equality is cross-multiplication, so two
/// fractions may compare equal with different stored parts.
#[derive(Clone)]
pub struct LaurentFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::normalized(
            LaurentPoly::constant(r.numer().clone()),
            LaurentPoly::constant(r.denom().clone()),
        )
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::from_poly(LaurentPoly::zero());
        }
        if den.is_one() {
            return Self { num, den };
        }
        if let Ok(q) = num.exact_div(&den) {
            return Self::from_poly(q);
        }
        let shift = -den.min_exp().unwrap_or(0);
        let (mut num, mut den) = (num.shift(shift), den.shift(shift));
        let g = num.content().gcd(&den.content());
        if !g.is_one() && !g.is_zero() {
            num = num.div_coefficients(&g);
            den = den.div_coefficients(&g);
        }
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this fraction equals, if it lies in `Z[v, v^-1]`.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            self.num.exact_div(&self.den).ok()
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }

    /// Value at `v = r`; `None` when the denominator vanishes there.
    pub fn specialize(&self, r: &BigRational) -> Option<BigRational> {
        let d = self.den.specialize(r);
        if d.is_zero() {
            None
        } else {
            Some(self.num.specialize(r) / d)
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::normalized(&self.num + &rhs.num, self.den.clone());
        }
        Self::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        Self::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

impl PartialEq for LaurentFraction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for LaurentFraction {}

impl fmt::Display for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentFraction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn divisible_fraction_collapses() {
        let f = LaurentFraction::new(lp("v^2 - v^-2"), lp("v - v^-1")).unwrap();
        assert!(f.denom().is_one());
        assert_eq!(f.numer(), &lp("v + v^-1"));
    }

    #[test]
    fn denominator_is_normalized() {
        let f = LaurentFraction::new(lp("2*v^3"), lp("-4*v^2 + 2*v")).unwrap();
        // v^3 / (-2v^2 + v) = v^2 / (1 - 2v): shift, content 2, sign.
        assert_eq!(f.denom(), &lp("2*v - 1"));
        assert_eq!(f.numer(), &lp("-v^2"));
        let g = LaurentFraction::new(lp("v^3"), lp("v - 2*v^2")).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(LaurentFraction::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn specialize_respects_poles() {
        let f = LaurentFraction::new(LaurentPoly::one(), lp("v - 1")).unwrap();
        assert!(f.specialize(&BigRational::one()).is_none());
        let two = BigRational::from_integer(2.into());
        assert_eq!(f.specialize(&two), Some(BigRational::one()));
    }
}
