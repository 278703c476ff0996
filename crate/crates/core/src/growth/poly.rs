//! Exact integer polynomials and the growth polynomial
//! `P_p(y) = p^p·y^(p-2) - (p·y - 1)^(p-1)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::counting::binomial;
use crate::error::Result;

use super::p_for_rank;

/// Univariate polynomial over `Z`, coefficients in ascending degree, no
/// trailing zeros. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut poly = Self { coeffs };
        while poly.coeffs.last().is_some_and(Zero::is_zero) {
            poly.coeffs.pop();
        }
        poly
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// `f(c·y)`.
    pub fn scale_variable(&self, c: &BigInt) -> IntPoly {
        let mut power = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for coeff in &self.coeffs {
            out.push(coeff * &power);
            power *= c;
        }
        IntPoly::new(out)
    }

    /// Exact division over `Z`: `Some(q)` iff `self = q·divisor` with `q`
    /// integral.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let d = divisor.degree()?;
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return rem.iter().all(Zero::is_zero).then(|| IntPoly::new(Vec::new()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let (q, r) = rem[i + d].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| IntPoly::new(quot))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Sign of `f(num / 2^scale)`, computed from the homogenized value
    /// `Σ c_i·num^i·2^(scale·(n-i))` in integers.
    pub fn sign_at_dyadic(&self, num: &BigInt, scale: u64) -> Ordering {
        let mut acc = BigInt::zero();
        for (k, c) in self.coeffs.iter().rev().enumerate() {
            acc = acc * num + (c << (scale * k as u64));
        }
        acc.sign_ordering()
    }

    /// Sign of `f(x)`, from the homogenized integer value
    /// `Σ c_i·num^i·den^(n-i)` (the denominator is positive).
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc.sign_ordering()
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl fmt::Display for IntPoly {
    /// Descending coefficients separated by spaces, e.g. `-9 33 -1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().rev().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `P_p(y) = p^p·y^(p-2) - (p·y - 1)^(p-1)` for `p = 2·rank - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthPolynomial {
    p: u64,
    poly: IntPoly,
}

impl GrowthPolynomial {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("nonzero")
    }

    pub fn coefficients(&self) -> &[BigInt] {
        self.poly.coefficients()
    }

    pub fn sign_at(&self, y: &BigRational) -> Ordering {
        self.poly.sign_at(y)
    }

    pub fn sign_at_integer(&self, y: u64) -> Ordering {
        self.poly.sign_at_dyadic(&BigInt::from(y), 0)
    }
}

impl fmt::Display for GrowthPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Exact expansion of the growth polynomial for `rank >= 2`.
pub fn growth_poly(rank: u32) -> Result<GrowthPolynomial> {
    let p = p_for_rank(rank)?;
    let n = p - 1;
    let pb = BigInt::from(p);
    // -(p·y - 1)^(p-1) = -Σ_j C(n,j)·p^j·(-1)^(n-j)·y^j
    let mut coeffs: Vec<BigInt> = (0..=n)
        .map(|j| {
            let term = BigInt::from(binomial(n, j as i64)) * Pow::pow(&pb, j);
            if (n - j) % 2 == 0 {
                -term
            } else {
                term
            }
        })
        .collect();
    coeffs[(p - 2) as usize] += Pow::pow(&pb, p);
    Ok(GrowthPolynomial { p, poly: IntPoly::new(coeffs) })
}

/// The two factors of `P_9` in the variable `z = 9y`, before substitution.
fn rank5_factors_in_z() -> (IntPoly, IntPoly) {
    (
        IntPoly::from_i64(&[1, 1, 1]),
        IntPoly::from_i64(&[1, -9, 36, -83, 117, -90, 1]),
    )
}

/// The quadratic factor `81y² + 9y + 1` of `P_9`, i.e. `(py)² + py + 1`.
pub fn rank5_quadratic_factor() -> IntPoly {
    rank5_factors_in_z().0.scale_variable(&BigInt::from(9))
}

/// Checks coefficientwise that
/// `P_9(y) = -((9y)² + 9y + 1)·((9y)⁶ - 90(9y)⁵ + 117(9y)⁴ - 83(9y)³ + 36(9y)² - 9·9y + 1)`.
pub fn check_rank5_factorization() -> bool {
    let target = growth_poly(5).expect("rank 5 is valid");
    let nine = BigInt::from(9);
    let (quadratic, sextic) = rank5_factors_in_z();
    let product = quadratic.scale_variable(&nine).mul(&sextic.scale_variable(&nine)).neg();
    &product == target.poly()
}
