//! The function
//!
//! ```text
//! h(x) = [x·ln p + (p + x(p-1))·ln(p + x(p-1)) - (p-1)(1+x)·ln((p-1)(1+x))] / (x + 2)
//! ```
//!
//! whose supremum of `exp h` over `x >= 0` is the growth rate (it exceeds
//! `p`). Its derivative vanishes exactly where
//!
//! ```text
//! F(x) = 2·ln p + (p-2)·ln(p + x(p-1)) - (p-1)·ln((p-1)(x+1)) = 0
//! ```
//!
//! and `F` is strictly decreasing, so the maximizer is unique and can be
//! bisected. Evaluation is in `f64` with a rounding-error bound attached.

use crate::error::{Error, Result};

use super::p_for_rank;
use super::real::PrecisionReal;

/// Iteration cap for both the golden-section stage and the bisection stage.
pub const MAX_ITERATIONS: usize = 500;

fn terms(p: f64, x: f64) -> (f64, f64, f64) {
    let a = p + x * (p - 1.0);
    let b = (p - 1.0) * (1.0 + x);
    (x * p.ln(), a * a.ln(), b * b.ln())
}

fn h_f64(p: f64, x: f64) -> f64 {
    let (t0, t1, t2) = terms(p, x);
    (t0 + t1 - t2) / (x + 2.0)
}

/// Bound on the accumulated rounding error of [`h_f64`]: a few ulps of the
/// largest intermediate, divided by `x + 2`.
fn h_error(p: f64, x: f64) -> f64 {
    let (t0, t1, t2) = terms(p, x);
    16.0 * f64::EPSILON * (t0.abs() + t1.abs() + t2.abs() + 1.0) / (x + 2.0)
}

fn check_x(x: f64) -> Result<()> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(Error::RootIsolation(format!("h is defined for finite x >= 0, got {x}")));
    }
    Ok(())
}

/// `h(x)` for the given rank (`rank >= 2`).
pub fn h(x: f64, rank: u32) -> Result<PrecisionReal> {
    let p = p_for_rank(rank)? as f64;
    check_x(x)?;
    Ok(PrecisionReal::from_f64(h_f64(p, x), h_error(p, x)))
}

/// `exp h(x)` as a plain float.
pub fn exp_h(x: f64, rank: u32) -> Result<f64> {
    Ok(h(x, rank)?.to_f64().exp())
}

/// Stationarity function; positive left of the maximizer, negative right.
pub fn stationarity(x: f64, rank: u32) -> Result<f64> {
    let p = p_for_rank(rank)? as f64;
    check_x(x)?;
    Ok(2.0 * p.ln() + (p - 2.0) * (p + x * (p - 1.0)).ln() - (p - 1.0) * ((p - 1.0) * (x + 1.0)).ln())
}

/// Golden-section search for a maximum of a unimodal `f` on `[lo, hi]`.
/// Returns the final bracket.
pub fn golden_section_max(
    f: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    max_iterations: usize,
) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..max_iterations {
        if hi - lo <= tol {
            break;
        }
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    (lo, hi)
}

#[derive(Debug, Clone)]
pub struct HMaximum {
    pub x_star: PrecisionReal,
    /// `exp h(x*)`.
    pub value: PrecisionReal,
}

/// Maximizes `h` over `[0, 10p]`; the maximizer `p(y-1)/(p-1)` is below
/// `10p` because `y < p + 1`.
///
/// A golden-section pass narrows the search, then the stationarity equation
/// is bisected until the bracket on `x*` is narrower than `tol`.
pub fn maximize_h(rank: u32, tol: f64) -> Result<HMaximum> {
    let p = p_for_rank(rank)? as f64;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::ToleranceNotReached { tol, achieved: f64::NAN });
    }
    let x_max = 10.0 * p;
    let (g_lo, g_hi) = golden_section_max(|x| h_f64(p, x), 0.0, x_max, 1e-3 * p, MAX_ITERATIONS);

    let f = |x: f64| stationarity(x, rank).expect("x in range");
    // The golden-section bracket can miss by a rounding step; fall back to
    // the full interval if it does not straddle the stationary point.
    let (mut lo, mut hi) = if f(g_lo) > 0.0 && f(g_hi) < 0.0 { (g_lo, g_hi) } else { (0.0, x_max) };
    if !(f(lo) > 0.0 && f(hi) < 0.0) {
        return Err(Error::RootIsolation("stationarity has no sign change on [0, 10p]".into()));
    }
    let mut iterations = 0;
    while hi - lo > tol / 4.0 && iterations < MAX_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let width = hi - lo;
    if width > tol {
        return Err(Error::ToleranceNotReached { tol, achieved: width });
    }
    let x = 0.5 * (lo + hi);
    let value = h_f64(p, x).exp();
    // exp h is flat at x*, so the spread over the bracket plus rounding
    // bounds the error of the maximum.
    let spread = (h_f64(p, lo).exp() - value).abs().max((h_f64(p, hi).exp() - value).abs());
    let value_error = spread + value * (h_error(p, x) * 2.0);
    Ok(HMaximum {
        x_star: PrecisionReal::from_f64(x, 0.5 * width),
        value: PrecisionReal::from_f64(value, value_error),
    })
}
