//! Certified growth rates.
//!
//! The growth rate of `FIM_r` (`r >= 2`) is the unique root in `(p, p+1)` of
//! the growth polynomial. A floating-point seed is found on the logarithmic
//! form
//!
//! ```text
//! g(y) = p·ln p + (p-2)·ln y - (p-1)·ln(p·y - 1)
//! ```
//!
//! which has the sign of `P_p(y)` for `y > 1/p` and never overflows. The
//! bracket is then certified and refined by exact evaluation of `P_p` at
//! dyadic rationals.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::{Error, Result};

use super::poly::{growth_poly, GrowthPolynomial};
use super::real::PrecisionReal;
use super::p_for_rank;

/// Largest number of decimal digits accepted by the certified routines.
pub const MAX_DIGITS: u32 = 5000;

/// Digits carried beyond the requested ones: `2·⌈log10 p⌉ + 10`.
pub fn guard_digits(p: u64) -> u32 {
    2 * (p as f64).log10().ceil() as u32 + 10
}

fn check_digits(digits: u32) -> Result<()> {
    if digits > MAX_DIGITS {
        return Err(Error::PrecisionBudget { digits, max: MAX_DIGITS });
    }
    Ok(())
}

/// `p·ln p + (p-2)·ln y - (p-1)·ln(p·y - 1)`; same sign as `P_p(y)`.
pub fn log_sign_function(p: u64, y: f64) -> f64 {
    let pf = p as f64;
    pf * pf.ln() + (pf - 2.0) * y.ln() - (pf - 1.0) * (pf * y - 1.0).ln()
}

/// Floating-point approximation of the root in `(p, p+1)`.
fn seed(p: u64) -> f64 {
    let (mut lo, mut hi) = (p as f64, p as f64 + 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if log_sign_function(p, mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn floor_dyadic(x: f64, scale: u64) -> BigInt {
    let x = BigRational::from_float(x).expect("finite");
    (x * BigRational::from_integer(BigInt::one() << scale)).floor().to_integer()
}

/// A root bracket `[lo, hi] / 2^scale` with `P(lo) > 0 > P(hi)`.
struct Bracket<'a> {
    poly: &'a GrowthPolynomial,
    lo: BigInt,
    hi: BigInt,
    scale: u64,
}

impl Bracket<'_> {
    fn sign(&self, num: &BigInt) -> Ordering {
        self.poly.poly().sign_at_dyadic(num, self.scale)
    }

    fn is_certified(&self) -> bool {
        self.lo < self.hi && self.sign(&self.lo) == Ordering::Greater && self.sign(&self.hi) == Ordering::Less
    }

    /// Bisects until the bracket is one unit wide. An exact zero at a dyadic
    /// point collapses the bracket onto it.
    fn refine(&mut self) {
        while &self.hi - &self.lo > BigInt::one() {
            let mid: BigInt = (&self.lo + &self.hi) >> 1;
            match self.sign(&mid) {
                Ordering::Greater => self.lo = mid,
                Ordering::Less => self.hi = mid,
                Ordering::Equal => {
                    self.lo = mid.clone();
                    self.hi = mid;
                }
            }
        }
    }

    fn into_real(self) -> PrecisionReal {
        let denom = BigInt::one() << self.scale;
        PrecisionReal::from_interval(
            BigRational::new(self.lo, denom.clone()),
            BigRational::new(self.hi, denom),
        )
    }
}

/// The exponential growth rate of `FIM_rank`, certified to an exact
/// sign-change bracket of width at most `10^-digits`.
pub fn growth_rate(rank: u32, digits: u32) -> Result<PrecisionReal> {
    let poly = growth_poly(rank)?;
    growth_rate_of(&poly, digits)
}

pub fn growth_rate_of(poly: &GrowthPolynomial, digits: u32) -> Result<PrecisionReal> {
    check_digits(digits)?;
    let p = poly.p();
    let working = u64::from(digits + guard_digits(p));
    // 2^-scale <= 10^-working
    let scale = (working as f64 * std::f64::consts::LOG2_10).ceil() as u64 + 1;
    let floor_p = BigInt::from(p) << scale;
    let ceil_p = BigInt::from(p + 1) << scale;

    let y0 = seed(p);
    let mut delta = 1e-9 * p as f64;
    let mut bracket = loop {
        let lo = floor_dyadic(y0 - delta, scale).max(floor_p.clone());
        let hi = (floor_dyadic(y0 + delta, scale) + BigInt::one()).min(ceil_p.clone());
        let candidate = Bracket { poly, lo, hi, scale };
        if candidate.is_certified() {
            break candidate;
        }
        if delta >= 1.0 {
            return Err(Error::RootIsolation(format!(
                "no sign change of P_{p} on [{p}, {}]",
                p + 1
            )));
        }
        delta *= 16.0;
    };
    bracket.refine();
    let root = bracket.into_real();
    let target = BigRational::new(BigInt::one(), Pow::pow(&BigInt::from(10), digits));
    if root.width() > target {
        return Err(Error::PrecisionBudget { digits, max: MAX_DIGITS });
    }
    Ok(root)
}

/// `((2r-1)/(2r-2))^(r-1)·√(2r-1) = √(p^p / (p-1)^(p-1))`, the growth rate
/// of the idempotents, as an interval of width `10^-(digits + guard)`.
pub fn idempotent_growth_rate(rank: u32, digits: u32) -> Result<PrecisionReal> {
    let p = p_for_rank(rank)?;
    check_digits(digits)?;
    let working = digits + guard_digits(p);
    let ten_pow = Pow::pow(&BigUint::from(10u32), working);
    let numerator = Pow::pow(&BigUint::from(p), p) * &ten_pow * &ten_pow;
    let denominator = Pow::pow(&BigUint::from(p - 1), p - 1);
    // floor(sqrt(floor(a/b))) = floor(sqrt(a/b))
    let root = (numerator / denominator).sqrt();
    let scale = BigInt::from(ten_pow);
    Ok(PrecisionReal::from_interval(
        BigRational::new(BigInt::from(root.clone()), scale.clone()),
        BigRational::new(BigInt::from(root) + 1, scale),
    ))
}

/// `2·rank - 3/(4·rank)`.
pub fn asymptotic_growth(rank: u32) -> f64 {
    let r = f64::from(rank);
    2.0 * r - 3.0 / (4.0 * r)
}
