mod common;

use std::cmp::Ordering;

use fim_growth::counting::{count_munn_trees, sphere_size};
use fim_growth::growth::{
    growth_poly, growth_rate, idempotent_growth_rate, maximize_h, rate::growth_rate_of,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::ln_big;

#[test]
fn root_bracket_for_many_ranks() {
    for rank in 2..=200u32 {
        let poly = growth_poly(rank).unwrap();
        let y = growth_rate_of(&poly, 6).unwrap();
        let p = BigRational::from_integer(BigInt::from(poly.p()));
        let p1 = &p + BigRational::from_integer(1.into());
        assert!(y.lower() > p && y.upper() < p1, "rank {rank}");
        assert_eq!(poly.sign_at(&y.lower()), Ordering::Greater);
        assert_eq!(poly.sign_at(&y.upper()), Ordering::Less);
    }
}

#[test]
fn idempotent_rate_below_whole_rate() {
    for rank in 2..=30u32 {
        let e = idempotent_growth_rate(rank, 8).unwrap();
        let y = growth_rate(rank, 8).unwrap();
        assert!(e.upper() < y.lower());
        assert!(e.upper() < BigRational::from_integer(BigInt::from(2 * rank - 1)));
    }
}

#[test]
fn sphere_roots_decrease_towards_the_rate() {
    // |S(K)| is submultiplicative, so its K-th roots approach the growth
    // rate from above. |S(1)| = 4 and |S(2)| = 16 tie, hence the `<=`.
    let ln_y = growth_rate(2, 15).unwrap().to_f64().ln();
    let mut previous = f64::INFINITY;
    for radius in 1..=1000u64 {
        let ln_root = ln_big(&sphere_size(2, radius)) / radius as f64;
        assert!(ln_root > ln_y, "K = {radius}");
        assert!(ln_root <= previous + 1e-12, "K = {radius}");
        assert!(radius < 3 || ln_root < previous, "K = {radius}");
        previous = ln_root;
    }
}

#[test]
fn idempotent_roots_converge() {
    let target = 1.5 * 3f64.sqrt();
    let k = 10_000u64;
    let root = (ln_big(&count_munn_trees(2, 0, k)) / (2 * k) as f64).exp();
    assert!((root - target).abs() / target < 0.01, "{root}");
}

#[test]
fn sphere_growth_is_bounded_by_the_rate_bracket() {
    // Ratios of consecutive spheres settle between p and p + 1.
    for rank in 2..=4u32 {
        let a = sphere_size(rank, 400);
        let b = sphere_size(rank, 401);
        let ratio = (ln_big(&b) - ln_big(&a)).exp();
        let p = f64::from(2 * rank - 1);
        assert!(ratio > p && ratio < p + 1.0, "rank {rank}: {ratio}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn variational_maximum_agrees(rank in 2u32..=25) {
        let y = growth_rate(rank, 14).unwrap().to_f64();
        let m = maximize_h(rank, 1e-9).unwrap();
        let p = f64::from(2 * rank - 1);
        prop_assert!((m.value.to_f64() - y).abs() <= 1e-9 * y);
        prop_assert!((m.x_star.to_f64() - p * (y - 1.0) / (p - 1.0)).abs() <= 1e-6);
    }

    #[test]
    fn brackets_at_different_precisions_overlap(rank in 2u32..=12, digits in 1u32..=30) {
        let coarse = growth_rate(rank, digits).unwrap();
        let fine = growth_rate(rank, digits + 5).unwrap();
        prop_assert!(fine.width() < coarse.width());
        prop_assert!(fine.lower() <= coarse.upper() && coarse.lower() <= fine.upper());
    }
}
