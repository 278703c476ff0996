use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Natural logarithm of a big integer from its top 64 bits.
#[allow(dead_code)]
pub fn ln_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    let shift = bits.saturating_sub(64);
    let top = (n >> shift).to_f64().expect("fits");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
