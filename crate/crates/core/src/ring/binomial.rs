//! Ordinary and quantum binomial machinery.

use num_bigint::BigInt;
use num_traits::One;

use super::{LaurentPoly, RingError};

pub fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `a choose b` for `a, b >= 0` (zero when `b > a`).
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::from(0);
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for k in 0..b {
        acc = acc * BigInt::from(a - k) / BigInt::from(k + 1);
    }
    acc
}

/// The quantum integer `[m] = (v^m - v^-m) / (v - v^-1)`, defined for every
/// integer `m`; `[-m] = -[m]` and `[0] = 0`.
pub fn quantum_integer(m: i64) -> LaurentPoly {
    let k = m.unsigned_abs() as i64;
    let sum = LaurentPoly::from_terms((0..k).map(|t| (k - 1 - 2 * t, 1)));
    if m < 0 {
        -sum
    } else {
        sum
    }
}

/// `[m]! = [m][m-1]...[1]`.
pub fn quantum_factorial(m: u64) -> LaurentPoly {
    (1..=m as i64).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_integer(k))
}

/// The Gaussian binomial `[a choose b] = [a]! / ([b]! [a-b]!)`.
///
/// Only `a >= 0` is supported; `b > a` gives zero.
pub fn gaussian_binomial(a: i64, b: i64) -> Result<LaurentPoly, RingError> {
    if a < 0 || b < 0 {
        return Err(RingError::NegativeArgument { a, b });
    }
    if b > a {
        return Ok(LaurentPoly::zero());
    }
    let (a, b) = (a as u64, b as u64);
    let den = &quantum_factorial(b) * &quantum_factorial(a - b);
    quantum_factorial(a).exact_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_integer_matches_defining_quotient() {
        let den = lp("v - v^-1");
        for m in -6i64..=6 {
            let num = &LaurentPoly::v_pow(m) - &LaurentPoly::v_pow(-m);
            assert_eq!(num.exact_div(&den).unwrap(), quantum_integer(m), "m = {m}");
        }
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(2, 1).unwrap(), lp("v + v^-1"));
        assert_eq!(gaussian_binomial(3, 3).unwrap(), LaurentPoly::one());
        assert_eq!(
            gaussian_binomial(4, 2).unwrap(),
            lp("v^4 + v^2 + 2 + v^-2 + v^-4")
        );
        assert!(gaussian_binomial(2, 5).unwrap().is_zero());
        assert!(gaussian_binomial(-1, 1).is_err());
    }

    #[test]
    fn gaussian_binomial_four_two_by_long_division() {
        // [4][3] / ([2][1]) computed independently of the factorial route.
        let num = &quantum_integer(4) * &quantum_integer(3);
        let den = quantum_integer(2);
        assert_eq!(num.exact_div(&den).unwrap(), gaussian_binomial(4, 2).unwrap());
    }

    #[test]
    fn binomial_specializations_up_to_twelve() {
        let one = BigRational::one();
        for a in 0..=12u64 {
            for b in 0..=a {
                let g = gaussian_binomial(a as i64, b as i64).unwrap();
                let expected = factorial(a) / (factorial(b) * factorial(a - b));
                assert_eq!(g.specialize(&one), BigRational::from_integer(expected));
                assert_eq!(g.bar(), g, "bar-invariance of [{a} choose {b}]");
            }
        }
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }
}
