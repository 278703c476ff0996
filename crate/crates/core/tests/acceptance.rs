//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test --release --test acceptance`.

mod common;

use std::cmp::Ordering;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fim_growth::counting::{fuss_catalan, idempotent_sphere_size, count_munn_trees, sphere_size};
use fim_growth::growth::{
    asymptotic_growth, check_rank5_factorization, growth_poly, growth_rate, idempotent_growth_rate,
    irreducibility_certificate, maximize_h, Certificate,
};
use fim_growth::oracle::{census, enumerate_tree_diagrams, DEFAULT_WORK_BUDGET};
use fim_growth::axioms::run_sample;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Pow, Signed};

use common::ln_big;

type Outcome = Result<String, String>;

/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `⌊√n · 10^digits⌋ / 10^digits`, within `10^-digits` of `√n`.
fn sqrt_rational(n: u32, digits: u32) -> BigRational {
    let scale = Pow::pow(&BigUint::from(10u32), digits);
    let root = (BigUint::from(n) * &scale * &scale).sqrt();
    BigRational::new(BigInt::from(root), BigInt::from(scale))
}

fn table_reproduction() -> Outcome {
    let expected = ["3.636", "5.759", "7.819", "9.855", "11.878", "13.896"];
    let width = ratio(1, 1_000_000);
    let mut bad = Vec::new();
    let mut got = Vec::new();
    for (rank, want) in (2..=7u32).zip(expected) {
        let y = growth_rate(rank, 6).map_err(|e| e.to_string())?;
        let poly = growth_poly(rank).map_err(|e| e.to_string())?;
        ensure(
            y.width() <= width
                && poly.sign_at(&y.lower()) == Ordering::Greater
                && poly.sign_at(&y.upper()) == Ordering::Less,
            || format!("rank {rank}: bracket not certified"),
        )?;
        let shown = y.to_decimal(3);
        if shown != want {
            bad.push(format!("rank {rank}: {shown} (bracket [{:.12}, {:.12}]) != {want}", y.lower_f64(), y.upper_f64()));
        }
        got.push(shown);
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(got.join(" "))
}

fn rank_two_exact() -> Outcome {
    let y = growth_rate(2, 20).map_err(|e| e.to_string())?;
    let exact = ratio(11, 6) + sqrt_rational(13, 40) / ratio(2, 1);
    let gap = (y.value() - &exact).abs();
    ensure(gap <= ratio(1, 1_000_000_000_000), || format!("gap {gap}"))?;
    Ok(format!("y = {}", y.to_decimal(15)))
}

fn sphere_oracle() -> Outcome {
    for (rank, max_k) in [(2u32, 10usize), (3, 7)] {
        let found = census(rank, max_k, DEFAULT_WORK_BUDGET).map_err(|e| e.to_string())?;
        ensure(found.is_complete(), || format!("rank {rank}: census incomplete"))?;
        for radius in 0..=max_k {
            let oracle = BigUint::from(found.sphere(radius).unwrap());
            let formula = sphere_size(rank, radius as u64);
            ensure(oracle == formula, || format!("rank {rank} K {radius}: {oracle} != {formula}"))?;
        }
    }
    Ok("rank 2 K<=10, rank 3 K<=7".into())
}

fn fuss_catalan_oracle() -> Outcome {
    for p in 1..=5u32 {
        for q in 1..=5u32 {
            for k in 0..=7u64 {
                let found = enumerate_tree_diagrams(p, q, k, u64::MAX).map_err(|e| e.to_string())?;
                let formula = fuss_catalan(p.into(), q.into(), k);
                ensure(found == formula, || format!("p {p} q {q} k {k}: {found} != {formula}"))?;
            }
        }
    }
    Ok("1<=p,q<=5, 0<=k<=7".into())
}

fn monogenic() -> Outcome {
    for radius in 0..=200u64 {
        let r = radius / 2;
        let want = if radius % 2 == 1 { r * r + 3 * r + 2 } else { r * r + 2 * r + 1 };
        let got = sphere_size(1, radius);
        ensure(got == BigUint::from(want), || format!("K {radius}: {got} != {want}"))?;
    }
    let found = census(1, 12, DEFAULT_WORK_BUDGET).map_err(|e| e.to_string())?;
    ensure(found.is_complete(), || "census incomplete".into())?;
    for radius in 0..=12usize {
        let oracle = BigUint::from(found.sphere(radius).unwrap());
        ensure(oracle == sphere_size(1, radius as u64), || format!("oracle differs at K {radius}"))?;
    }
    Ok("formulas K<=200, oracle K<=12".into())
}

fn idempotent_growth() -> Outcome {
    let e = idempotent_growth_rate(2, 20).map_err(|e| e.to_string())?;
    let exact = ratio(3, 2) * sqrt_rational(3, 40);
    let gap = (e.value() - &exact).abs();
    ensure(gap <= ratio(1, 1_000_000_000_000), || format!("rate gap {gap}"))?;
    let found = census(2, 10, DEFAULT_WORK_BUDGET).map_err(|e| e.to_string())?;
    for radius in 0..=10usize {
        let oracle = BigUint::from(found.idempotents(radius).unwrap());
        let formula = idempotent_sphere_size(2, radius as u64);
        ensure(oracle == formula, || format!("K {radius}: {oracle} != {formula}"))?;
    }
    let k = 10_000u64;
    let root = (ln_big(&count_munn_trees(2, 0, k)) / (2 * k) as f64).exp();
    let target = 1.5 * 3f64.sqrt();
    let rel = (root - target).abs() / target;
    ensure(rel < 0.01, || format!("M(0,1e4)^(1/2e4) = {root}, off by {rel:.4}"))?;
    Ok(format!("rate {}, root at k=1e4 {root:.5} ({:.3}% off)", e.to_decimal(12), 100.0 * rel))
}

fn variational() -> Outcome {
    let mut worst = (0.0f64, 0.0f64);
    for rank in 2..=10u32 {
        let y = growth_rate(rank, 15).map_err(|e| e.to_string())?.to_f64();
        let m = maximize_h(rank, 1e-9).map_err(|e| e.to_string())?;
        let p = f64::from(2 * rank - 1);
        let dv = (m.value.to_f64() - y).abs();
        let dx = (m.x_star.to_f64() - p * (y - 1.0) / (p - 1.0)).abs();
        ensure(dv <= 1e-9, || format!("rank {rank}: |exp h(x*) - y| = {dv:e}"))?;
        ensure(dx <= 1e-6, || format!("rank {rank}: |x* - p(y-1)/(p-1)| = {dx:e}"))?;
        worst = (worst.0.max(dv), worst.1.max(dx));
    }
    Ok(format!("max value gap {:.1e}, max x* gap {:.1e}", worst.0, worst.1))
}

fn asymptotics() -> Outcome {
    let mut scaled = Vec::new();
    for rank in [10u32, 50, 100] {
        let y = growth_rate(rank, 15).map_err(|e| e.to_string())?.to_f64();
        scaled.push(f64::from(rank) * (y - asymptotic_growth(rank)).abs());
    }
    let text = format!("r*gap = {:.5} {:.5} {:.5}", scaled[0], scaled[1], scaled[2]);
    ensure(scaled[0] > scaled[1] && scaled[1] > scaled[2], || format!("not decreasing: {text}"))?;
    ensure(scaled[2] < 0.5, || format!("too large at r = 100: {text}"))?;
    Ok(text)
}

fn rank_five_and_irreducibility() -> Outcome {
    ensure(check_rank5_factorization(), || "rank-5 identity fails".into())?;
    let mut primes = Vec::new();
    for rank in (2..=20u32).filter(|&r| r != 5) {
        match irreducibility_certificate(rank, 10_000).map_err(|e| e.to_string())? {
            Certificate::Irreducible(prime) => primes.push(format!("{rank}:{prime}")),
            other => return Err(format!("rank {rank}: {other}")),
        }
    }
    Ok(format!("identity holds; primes {}", primes.join(" ")))
}

fn algebraic_laws() -> Outcome {
    for rank in 1..=3u32 {
        let report = run_sample(rank, 10_000, 12, u64::from(rank)).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("rank {rank}: {}", report.failures[0]))?;
    }
    Ok("3 x 10^4 triples".into())
}

trait Bounds {
    fn lower_f64(&self) -> f64;
    fn upper_f64(&self) -> f64;
}

impl Bounds for fim_growth::growth::PrecisionReal {
    fn lower_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.lower()).unwrap_or(f64::NAN)
    }
    fn upper_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.upper()).unwrap_or(f64::NAN)
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("table reproduction", 5, table_reproduction),
        ("exact rank-2 value", 1, rank_two_exact),
        ("sphere oracle", 60, sphere_oracle),
        ("Fuss-Catalan oracle", 30, fuss_catalan_oracle),
        ("monogenic formulas", 5, monogenic),
        ("idempotent growth", 60, idempotent_growth),
        ("variational cross-check", 30, variational),
        ("asymptotics", 60, asymptotics),
        ("rank 5 and irreducibility", 120, rank_five_and_irreducibility),
        ("algebraic laws", 60, algebraic_laws),
    ];
    let mut failures = 0;
    for (number, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > Duration::from_secs(*limit) {
            outcome = Err(format!("took {elapsed:.2?}, limit {limit} s"));
        }
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failures += usize::from(outcome.is_err());
        println!("{status} {:>2} {name} [{elapsed:.2?}]: {detail}", number + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
