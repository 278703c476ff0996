//! Seeded random-sample checks of the inverse-monoid laws on Munn trees.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::munn::MunnTree;
use crate::words::{format_letters, Letter};

pub fn random_word(rng: &mut impl Rng, rank: u32, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| Letter::new(rng.gen_range(1..=rank), rng.gen_bool(0.5)))
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks one triple of words: associativity, `w·w⁻¹·w = w` and its dual,
/// commutation of the idempotents `u·u⁻¹` and `v·v⁻¹`, the homomorphism
/// `eval(uv) = eval(u)·eval(v)`, and the geodesic round trip with length
/// `t + 2k`. Returns the names of the laws that failed.
pub fn check_triple(rank: u32, u: &[Letter], v: &[Letter], w: &[Letter]) -> Result<Vec<&'static str>> {
    let (a, b, c) = (MunnTree::eval(rank, u)?, MunnTree::eval(rank, v)?, MunnTree::eval(rank, w)?);
    let mut failed = Vec::new();

    if a.multiply(&b)?.multiply(&c)? != a.multiply(&b.multiply(&c)?)? {
        failed.push("associativity");
    }
    let a_inv = a.invert();
    if a.multiply(&a_inv)?.multiply(&a)? != a || a_inv.multiply(&a)?.multiply(&a_inv)? != a_inv {
        failed.push("regularity");
    }
    let e = a.multiply(&a_inv)?;
    let f = b.multiply(&b.invert())?;
    if !e.is_idempotent() || !f.is_idempotent() || e.multiply(&f)? != f.multiply(&e)? {
        failed.push("idempotents commute");
    }
    let uv: Vec<Letter> = u.iter().chain(v).copied().collect();
    if MunnTree::eval(rank, &uv)? != a.multiply(&b)? {
        failed.push("homomorphism");
    }
    for m in [&a, &b, &c] {
        let (t, k) = m.trunk_branch_counts();
        let g = m.geodesic_word();
        if g.len() != t + 2 * k || &MunnTree::eval(rank, &g)? != m {
            failed.push("geodesic");
            break;
        }
    }
    Ok(failed)
}

/// Runs [`check_triple`] on `samples` random triples of words of length at
/// most `max_len`, drawn from a ChaCha8 stream seeded with `seed`.
pub fn run_sample(rank: u32, samples: usize, max_len: usize, seed: u64) -> Result<AxiomReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AxiomReport::default();
    for _ in 0..samples {
        let u = random_word(&mut rng, rank, max_len);
        let v = random_word(&mut rng, rank, max_len);
        let w = random_word(&mut rng, rank, max_len);
        for law in check_triple(rank, &u, &v, &w)? {
            report.failures.push(format!(
                "{law}: u={} v={} w={}",
                format_letters(&u),
                format_letters(&v),
                format_letters(&w)
            ));
        }
        report.checked += 1;
    }
    Ok(report)
}
