//! One-sided irreducibility certificates for the growth polynomial.
//!
//! If `P_p mod ℓ` keeps its degree and is irreducible over `F_ℓ`, then `P_p`
//! is irreducible over `Q`. Irreducibility over `F_ℓ` is decided with
//! Ben-Or's test: a polynomial `f` of degree `n` is irreducible iff
//! `gcd(x^(ℓ^i) - x, f) = 1` for `i = 1..=n/2`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::Result;

use super::poly::{growth_poly, IntPoly};

/// Outcome of [`irreducibility_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Irreducible over `Q`: the reduction modulo this prime is irreducible.
    Irreducible(u64),
    /// An exact proper factor over `Z`.
    ReducibleWitness(IntPoly),
    Unknown,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Irreducible(prime) => write!(f, "Irreducible({prime})"),
            Certificate::ReducibleWitness(factor) => write!(f, "ReducibleWitness({factor})"),
            Certificate::Unknown => f.write_str("Unknown"),
        }
    }
}

/// Dense polynomial over `F_ℓ`, ascending coefficients, trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
struct ModPoly {
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

impl ModPoly {
    fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    fn reduce(poly: &IntPoly, m: u64) -> Self {
        let big_m = BigInt::from(m);
        Self::new(
            poly.coefficients()
                .iter()
                .map(|c| c.mod_floor(&big_m).to_u64().expect("reduced below modulus"))
                .collect(),
        )
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn x() -> Self {
        Self { coeffs: vec![0, 1] }
    }

    fn sub(&self, other: &ModPoly, m: u64) -> ModPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        ModPoly::new(
            (0..n)
                .map(|i| (get(&self.coeffs, i) + m - get(&other.coeffs, i)) % m)
                .collect(),
        )
    }

    fn rem(&self, divisor: &ModPoly, m: u64) -> ModPoly {
        let d = divisor.degree().expect("nonzero divisor");
        let lead_inv = inv_mod(divisor.coeffs[d], m);
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let factor = mul_mod(r[top], lead_inv, m);
            if factor != 0 {
                for (j, &c) in divisor.coeffs.iter().enumerate() {
                    let i = top - d + j;
                    r[i] = (r[i] + m - mul_mod(factor, c, m)) % m;
                }
            }
            r.pop();
        }
        ModPoly::new(r)
    }

    fn mul_rem(&self, other: &ModPoly, modulus: &ModPoly, m: u64) -> ModPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return ModPoly::new(Vec::new());
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, m)) % m;
            }
        }
        ModPoly::new(out).rem(modulus, m)
    }

    fn pow_rem(&self, mut exp: u64, modulus: &ModPoly, m: u64) -> ModPoly {
        let mut acc = ModPoly::new(vec![1]).rem(modulus, m);
        let mut base = self.rem(modulus, m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_rem(&base, modulus, m);
            }
            base = base.mul_rem(&base, modulus, m);
            exp >>= 1;
        }
        acc
    }

    fn gcd(&self, other: &ModPoly, m: u64) -> ModPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.coeffs.is_empty() {
            let r = a.rem(&b, m);
            a = b;
            b = r;
        }
        a
    }
}

/// Ben-Or irreducibility test over `F_ℓ`, `ℓ` prime. The polynomial must be
/// nonzero modulo `ℓ`.
fn is_irreducible_mod(poly: &ModPoly, prime: u64) -> bool {
    let n = match poly.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    let x = ModPoly::x();
    let mut frobenius = x.clone();
    for _ in 1..=n / 2 {
        frobenius = frobenius.pow_rem(prime, poly, prime);
        let g = frobenius.sub(&x, prime).gcd(poly, prime);
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

/// Whether `poly mod prime` keeps its degree and is irreducible over `F_prime`.
pub fn irreducible_mod_prime(poly: &IntPoly, prime: u64) -> bool {
    let reduced = ModPoly::reduce(poly, prime);
    reduced.degree() == poly.degree() && is_irreducible_mod(&reduced, prime)
}

/// Primes up to `limit` (inclusive).
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for n in 2..=limit {
        if !composite[n] {
            primes.push(n as u64);
            let mut multiple = n * n;
            while multiple <= limit {
                composite[multiple] = true;
                multiple += n;
            }
        }
    }
    primes
}

/// Candidate exact factors tried before the modular search: the quadratic
/// `(py)² + py + 1`, which divides `P_p` at rank 5.
fn candidate_factors(p: u64) -> Vec<IntPoly> {
    let p = BigInt::from(p);
    vec![IntPoly::new(vec![BigInt::from(1), p.clone(), &p * &p])]
}

/// Certifies irreducibility over `Q` of the growth polynomial for `rank`
/// using primes up to `prime_budget`, or exhibits an exact factor.
pub fn irreducibility_certificate(rank: u32, prime_budget: u64) -> Result<Certificate> {
    let poly = growth_poly(rank)?;
    let target = poly.poly();
    for candidate in candidate_factors(poly.p()) {
        if candidate.degree() < target.degree() && target.exact_div(&candidate).is_some() {
            return Ok(Certificate::ReducibleWitness(candidate));
        }
    }
    for prime in primes_up_to(prime_budget) {
        if poly.p() % prime == 0 {
            continue;
        }
        if irreducible_mod_prime(target, prime) {
            return Ok(Certificate::Irreducible(prime));
        }
    }
    Ok(Certificate::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::poly::rank5_quadratic_factor;

    fn modp(coeffs: &[u64]) -> ModPoly {
        ModPoly::new(coeffs.to_vec())
    }

    /// Brute force: no monic factor of degree 1..=n/2 over F_m.
    fn brute_irreducible(poly: &ModPoly, m: u64) -> bool {
        let n = poly.degree().unwrap();
        for d in 1..=n / 2 {
            for code in 0..m.pow(d as u32) {
                let mut c = Vec::with_capacity(d + 1);
                let mut rest = code;
                for _ in 0..d {
                    c.push(rest % m);
                    rest /= m;
                }
                c.push(1);
                if poly.rem(&ModPoly::new(c), m).coeffs.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn ben_or_matches_brute_force() {
        for m in [2u64, 3, 5] {
            for degree in 1..=4usize {
                for code in 0..m.pow(degree as u32) {
                    let mut c = Vec::new();
                    let mut rest = code;
                    for _ in 0..degree {
                        c.push(rest % m);
                        rest /= m;
                    }
                    c.push(1);
                    let poly = modp(&c);
                    assert_eq!(is_irreducible_mod(&poly, m), brute_irreducible(&poly, m), "{c:?} mod {m}");
                }
            }
        }
    }

    #[test]
    fn known_polynomials() {
        // x² + 1 is irreducible mod 3, splits mod 5.
        assert!(irreducible_mod_prime(&IntPoly::from_i64(&[1, 0, 1]), 3));
        assert!(!irreducible_mod_prime(&IntPoly::from_i64(&[1, 0, 1]), 5));
        // Degree drops mod 3.
        assert!(!irreducible_mod_prime(&IntPoly::from_i64(&[1, 1, 3]), 3));
    }

    #[test]
    fn sieve() {
        assert_eq!(primes_up_to(30), [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(primes_up_to(1).is_empty());
    }

    #[test]
    fn rank_two_irreducible() {
        // -9y² + 33y - 1 has discriminant 1053, not a square.
        assert!((0..=33u64).all(|s| s * s != 1053));
        assert!(matches!(irreducibility_certificate(2, 100).unwrap(), Certificate::Irreducible(_)));
    }

    #[test]
    fn rank_five_witness() {
        assert_eq!(
            irreducibility_certificate(5, 100).unwrap(),
            Certificate::ReducibleWitness(rank5_quadratic_factor())
        );
    }

    #[test]
    fn low_ranks_certified() {
        for rank in [3, 4, 6, 7] {
            let cert = irreducibility_certificate(rank, 1000).unwrap();
            let Certificate::Irreducible(prime) = cert else { panic!("rank {rank}: {cert}") };
            let poly = growth_poly(rank).unwrap();
            assert!(irreducible_mod_prime(poly.poly(), prime));
        }
    }

    #[test]
    fn tiny_budget_is_unknown() {
        // Rank 6 needs ℓ = 7.
        assert_eq!(irreducibility_certificate(6, 5).unwrap(), Certificate::Unknown);
    }
}
