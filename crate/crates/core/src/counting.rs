//! Exact closed-form counts.
//!
//! With `p = 2·rank - 1`, the number of Munn trees with `t` trunk edges and
//! `k` branch edges is
//!
//! ```text
//! |M(t,k)| = (p+1)·p^(t-1)·R_{p,q}(k),  q = 2p + (t-1)(p-1),  t >= 1
//! |M(0,k)| = R_{p,p+1}(k)
//! ```
//!
//! where `R_{p,q}(k) = q/(kp+q)·C(kp+q, k)` is the Fuss–Catalan number. An
//! element of `M(t,k)` has length `t + 2k`, which gives the sphere sizes.
//!
//! Everything here is exact integer arithmetic. Note that `C(kp+q, k)` grows
//! exponentially in `k`, so memory is the only bound on the arguments.

use std::fmt;
use std::io;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

fn p_of(rank: u32) -> u64 {
    assert!(rank >= 1, "rank must be at least 1");
    2 * u64::from(rank) - 1
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // n!/(n-k)! and k! by balanced product trees, then one exact division.
    range_product(n - k + 1, n) / range_product(1, k)
}

fn range_product(lo: u64, hi: u64) -> BigUint {
    if lo > hi {
        return BigUint::one();
    }
    if hi - lo < 8 {
        return (lo..=hi).fold(BigUint::one(), |acc, x| acc * x);
    }
    let mid = lo + (hi - lo) / 2;
    range_product(lo, mid) * range_product(mid + 1, hi)
}

/// The Fuss–Catalan (Raney) number `R_{p,q}(k) = q/(kp+q)·C(kp+q, k)`.
pub fn fuss_catalan(p: u64, q: u64, k: u64) -> BigUint {
    assert!(p >= 1 && q >= 1, "fuss_catalan needs p, q >= 1");
    let n = k * p + q;
    let numerator = binomial(n, k as i64) * q;
    let (quotient, remainder) = numerator.div_rem(&BigUint::from(n));
    assert!(remainder.is_zero(), "q·C(kp+q,k) not divisible by kp+q");
    quotient
}

/// Number of `p`-ary tree diagrams with `i` internal nodes: `1` for `i = 0`,
/// otherwise `R_{p,p}(i-1)`.
pub fn p_catalan(p: u64, i: u64) -> BigUint {
    if i == 0 {
        return BigUint::one();
    }
    fuss_catalan(p, p, i - 1)
}

/// `|M(t,k)|`, the number of elements with `t` trunk and `k` branch edges.
pub fn count_munn_trees(rank: u32, t: u64, k: u64) -> BigUint {
    let p = p_of(rank);
    if t == 0 {
        return fuss_catalan(p, p + 1, k);
    }
    let q = 2 * p + (t - 1) * (p - 1);
    let trunks = BigUint::from(p + 1) * Pow::pow(&BigUint::from(p), t - 1);
    trunks * fuss_catalan(p, q, k)
}

/// `|S(K)|`, the number of elements of length exactly `K`.
pub fn sphere_size(rank: u32, radius: u64) -> BigUint {
    let mut total = idempotent_sphere_size(rank, radius);
    // t = K - 2k >= 1
    for k in 0..=(radius.saturating_sub(1) / 2) {
        let t = radius - 2 * k;
        if t >= 1 {
            total += count_munn_trees(rank, t, k);
        }
    }
    total
}

/// Idempotents of length exactly `K`: zero for odd `K`, `|M(0, K/2)|` else.
pub fn idempotent_sphere_size(rank: u32, radius: u64) -> BigUint {
    if radius % 2 == 1 {
        return BigUint::zero();
    }
    count_munn_trees(rank, 0, radius / 2)
}

/// `Σ_{j <= K} |S(j)|`.
pub fn ball_size(rank: u32, radius: u64) -> BigUint {
    (0..=radius).map(|j| sphere_size(rank, j)).sum()
}

mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        BigUint::parse_bytes(text.as_bytes(), 10)
            .ok_or_else(|| D::Error::custom(format!("not a decimal integer: {text:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereRow {
    #[serde(rename = "K")]
    pub radius: u64,
    #[serde(with = "decimal")]
    pub sphere: BigUint,
    #[serde(with = "decimal")]
    pub idempotents: BigUint,
    #[serde(with = "decimal")]
    pub ball: BigUint,
}

/// Sphere, idempotent and ball sizes for `K = 0..=K_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereTable {
    pub rank: u32,
    pub rows: Vec<SphereRow>,
}

#[derive(Debug, thiserror::Error)]
pub enum TableFormatError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("table invariant violated: {0}")]
    Invariant(String),
}

pub fn sphere_table(rank: u32, max_radius: u64) -> SphereTable {
    let mut ball = BigUint::zero();
    let rows = (0..=max_radius)
        .map(|radius| {
            let sphere = sphere_size(rank, radius);
            ball += &sphere;
            SphereRow {
                radius,
                idempotents: idempotent_sphere_size(rank, radius),
                sphere,
                ball: ball.clone(),
            }
        })
        .collect();
    SphereTable { rank, rows }
}

impl SphereTable {
    /// Rows contiguous from 0, ball column equal to the prefix sums, no odd
    /// idempotents.
    pub fn check(&self) -> Result<(), TableFormatError> {
        let mut ball = BigUint::zero();
        for (i, row) in self.rows.iter().enumerate() {
            if row.radius != i as u64 {
                return Err(TableFormatError::Invariant(format!("row {i} has K = {}", row.radius)));
            }
            ball += &row.sphere;
            if row.ball != ball {
                return Err(TableFormatError::Invariant(format!("ball mismatch at K = {i}")));
            }
            if row.radius % 2 == 1 && !row.idempotents.is_zero() {
                return Err(TableFormatError::Invariant(format!("odd K = {i} has idempotents")));
            }
        }
        Ok(())
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<(), TableFormatError> {
        let mut writer = csv::Writer::from_writer(out);
        for row in &self.rows {
            writer.serialize(row)?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn from_csv(rank: u32, text: &str) -> Result<Self, TableFormatError> {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let rows = reader.deserialize().collect::<Result<Vec<SphereRow>, _>>()?;
        let table = SphereTable { rank, rows };
        table.check()?;
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, TableFormatError> {
        let table: SphereTable = serde_json::from_str(text)?;
        table.check()?;
        Ok(table)
    }

    pub fn spheres(&self) -> Vec<BigUint> {
        self.rows.iter().map(|r| r.sphere.clone()).collect()
    }
}

impl fmt::Display for SphereTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_csv())
    }
}
