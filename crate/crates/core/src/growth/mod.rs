//! Exponential growth rates of `FIM_r` for `r >= 2`.

pub mod irreducible;
pub mod poly;
pub mod rate;
pub mod real;
pub mod variational;

pub use irreducible::{irreducibility_certificate, Certificate};
pub use poly::{check_rank5_factorization, growth_poly, GrowthPolynomial, IntPoly};
pub use rate::{asymptotic_growth, growth_rate, idempotent_growth_rate};
pub use real::PrecisionReal;
pub use variational::{h, maximize_h, HMaximum};

use crate::error::{Error, Result};

/// `p = 2·rank - 1`, rejecting ranks without exponential growth.
pub fn p_for_rank(rank: u32) -> Result<u64> {
    match rank {
        0 => Err(Error::InvalidRank { rank, min: 2 }),
        1 => Err(Error::PolynomialGrowth),
        _ => Ok(2 * u64::from(rank) - 1),
    }
}
