use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A real number known to lie in `value ± error_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecisionReal {
    value: BigRational,
    error_bound: BigRational,
}

impl PrecisionReal {
    pub fn new(value: BigRational, error_bound: BigRational) -> Self {
        assert!(!error_bound.is_negative(), "error bound must be nonnegative");
        Self { value, error_bound }
    }

    pub fn exact(value: BigRational) -> Self {
        Self::new(value, BigRational::zero())
    }

    /// The midpoint of `[lower, upper]` with half the width as error.
    pub fn from_interval(lower: BigRational, upper: BigRational) -> Self {
        assert!(lower <= upper, "empty interval");
        let two = BigRational::from_integer(2.into());
        let value = (&lower + &upper) / &two;
        let error_bound = (upper - lower) / two;
        Self { value, error_bound }
    }

    /// Wraps a floating-point result with an externally derived error bound.
    pub fn from_f64(value: f64, error_bound: f64) -> Self {
        let value = BigRational::from_float(value).expect("finite value");
        let error_bound = BigRational::from_float(error_bound).expect("finite bound");
        Self::new(value, error_bound)
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn error_bound(&self) -> &BigRational {
        &self.error_bound
    }

    pub fn lower(&self) -> BigRational {
        &self.value - &self.error_bound
    }

    pub fn upper(&self) -> BigRational {
        &self.value + &self.error_bound
    }

    pub fn width(&self) -> BigRational {
        &self.error_bound * BigRational::from_integer(2.into())
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }

    pub fn error_f64(&self) -> f64 {
        self.error_bound.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lower() <= x && x <= &self.upper()
    }

    /// Whether `x` is within the interval, with both sides widened by `slack`.
    pub fn contains_f64(&self, x: f64, slack: f64) -> bool {
        let x = match BigRational::from_float(x) {
            Some(x) => x,
            None => return false,
        };
        let slack = BigRational::from_float(slack.abs()).unwrap_or_else(BigRational::zero);
        self.lower() - &slack <= x && x <= self.upper() + slack
    }

    /// The value rounded half away from zero to `digits` decimal places.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = &self.value * BigRational::from_integer(scale.clone());
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let rounded = if scaled.is_negative() {
            -(-scaled + half).floor().to_integer()
        } else {
            (scaled + half).floor().to_integer()
        };
        let negative = rounded.sign() == Sign::Minus;
        let (whole, frac) = rounded.abs().div_rem(&scale);
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&whole.to_string());
        if digits > 0 {
            out.push('.');
            out.push_str(&format!("{:0>width$}", frac.to_string(), width = digits as usize));
        }
        out
    }

    pub fn cmp_f64(&self, x: f64) -> Option<Ordering> {
        let x = BigRational::from_float(x)?;
        if self.upper() < x {
            Some(Ordering::Less)
        } else if self.lower() > x {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

impl fmt::Display for PrecisionReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(12) as u32;
        write!(f, "{} ± {:.1e}", self.to_decimal(digits), self.error_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn decimal_rounding() {
        let x = PrecisionReal::exact(q(22, 7));
        assert_eq!(x.to_decimal(0), "3");
        assert_eq!(x.to_decimal(4), "3.1429");
        assert_eq!(PrecisionReal::exact(q(-1, 8)).to_decimal(2), "-0.13");
        assert_eq!(PrecisionReal::exact(q(1, 200)).to_decimal(3), "0.005");
        assert_eq!(PrecisionReal::exact(q(-1, 1000)).to_decimal(1), "0.0");
    }

    #[test]
    fn interval_accessors() {
        let x = PrecisionReal::from_interval(q(1, 1), q(2, 1));
        assert_eq!(x.value(), &q(3, 2));
        assert_eq!(x.error_bound(), &q(1, 2));
        assert!(x.contains(&q(2, 1)));
        assert!(!x.contains(&q(5, 2)));
        assert!(x.contains_f64(2.2, 0.25));
        assert_eq!(x.cmp_f64(3.0), Some(Ordering::Less));
        assert_eq!(x.cmp_f64(1.5), None);
    }
}
