//! The `fim` command-line front end.
//!
//! Exit codes: 0 success, 1 usage, 2 rank without exponential growth,
//! 3 work budget exceeded, 4 verification mismatch.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::axioms;
use crate::counting::{count_munn_trees, idempotent_sphere_size, sphere_size, sphere_table};
use crate::error::Error;
use crate::growth::{
    asymptotic_growth, growth_poly, growth_rate, idempotent_growth_rate, irreducibility_certificate,
    Certificate,
};
use crate::munn::MunnTree;
use crate::oracle::{census, DEFAULT_WORK_BUDGET};
use crate::words::format_letters;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// Environment variable holding the default work budget for `verify`.
pub const BUDGET_ENV: &str = "FIM_WORK_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "fim", version, about = "Growth of free inverse monoids via Munn trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sphere, idempotent and ball sizes for K = 0..=max-k.
    Spheres {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long = "max-k")]
        max_k: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Compare brute-force enumeration with the closed forms.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long = "max-k")]
        max_k: usize,
        /// Ceiling on (2·rank)^K.
        #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_WORK_BUDGET)]
        budget: u64,
        /// Also check the inverse-monoid laws on this many random word triples.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Certified exponential growth rate for one rank.
    Growth {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long, default_value_t = 12)]
        digits: u32,
    },
    /// Growth rates, asymptotic estimates and idempotent rates for ranks 2..=max-rank.
    Table1 {
        #[arg(long, default_value_t = 3)]
        digits: u32,
        #[arg(long = "max-rank", default_value_t = 7, value_parser = clap::value_parser!(u32).range(2..))]
        max_rank: u32,
    },
    /// Coefficients of the growth polynomial, highest degree first.
    Poly {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        #[arg(long = "factor-check")]
        factor_check: bool,
        #[arg(long = "prime-budget", default_value_t = 10_000)]
        prime_budget: u64,
    },
    /// Irreducibility certificates for every rank in 2..=max-rank. Slow for
    /// large ranks.
    IrreducibilityScan {
        #[arg(long = "max-rank", value_parser = clap::value_parser!(u32).range(2..))]
        max_rank: u32,
        #[arg(long = "prime-budget", default_value_t = 10_000)]
        prime_budget: u64,
    },
    /// Munn tree, length and a geodesic word for a word such as `aAb`.
    Eval {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rank: u32,
        word: String,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::PolynomialGrowth => EXIT_DOMAIN,
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Parse { input: String::new(), reason: format!("i/o error: {e}") }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match command {
        Command::Spheres { rank, max_k, format } => {
            let table = sphere_table(rank, max_k);
            let text = match format {
                Format::Csv => table.to_csv(),
                Format::Json => table.to_json() + "\n",
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify { rank, max_k, budget, samples, seed } => {
            verify(rank, max_k, budget, samples, seed, out, err)
        }
        Command::Growth { rank, digits } => {
            if rank == 1 {
                writeln!(
                    err,
                    "rank 1: the monogenic free inverse monoid has quadratic spherical growth \
                     (|S(2R+1)| = R²+3R+2, |S(2R)| = R²+2R+1); its exponential growth rate is 1"
                )
                .map_err(io)?;
                return Ok(EXIT_DOMAIN);
            }
            let y = growth_rate(rank, digits)?;
            writeln!(out, "rank,p,growth_rate,lower,upper").map_err(io)?;
            writeln!(
                out,
                "{rank},{},{},{},{}",
                2 * rank - 1,
                y.to_decimal(digits),
                y.lower(),
                y.upper()
            )
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Table1 { digits, max_rank } => {
            writeln!(out, "rank,growth_rate,asymptotic,idempotent_rate").map_err(io)?;
            for rank in 2..=max_rank {
                let y = growth_rate(rank, digits)?;
                let e = idempotent_growth_rate(rank, digits)?;
                writeln!(
                    out,
                    "{rank},{},{:.*},{}",
                    y.to_decimal(digits),
                    digits as usize,
                    asymptotic_growth(rank),
                    e.to_decimal(digits)
                )
                .map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Poly { rank, factor_check, prime_budget } => {
            if rank == 1 {
                return Err(Error::PolynomialGrowth);
            }
            writeln!(out, "{}", growth_poly(rank)?).map_err(io)?;
            if factor_check {
                writeln!(out, "{}", irreducibility_certificate(rank, prime_budget)?).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::IrreducibilityScan { max_rank, prime_budget } => {
            writeln!(out, "rank,certificate").map_err(io)?;
            let mut unknown = false;
            for rank in 2..=max_rank {
                let cert = irreducibility_certificate(rank, prime_budget)?;
                unknown |= cert == Certificate::Unknown;
                writeln!(out, "{rank},{cert}").map_err(io)?;
            }
            Ok(if unknown { EXIT_MISMATCH } else { EXIT_OK })
        }
        Command::Eval { rank, word } => {
            let m = MunnTree::eval_text(rank, &word)?;
            let (t, k) = m.trunk_branch_counts();
            writeln!(out, "tree={m}").map_err(io)?;
            writeln!(out, "t={t} k={k} length={}", m.length()).map_err(io)?;
            writeln!(out, "idempotent={}", m.is_idempotent()).map_err(io)?;
            writeln!(out, "geodesic={}", format_letters(&m.geodesic_word())).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "MISMATCH"
    }
}

fn verify(
    rank: u32,
    max_k: usize,
    budget: u64,
    samples: usize,
    seed: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Error> {
    let found = census(rank, max_k, budget)?;
    let mut mismatches = 0usize;
    writeln!(out, "K,t,k,oracle,formula,status").map_err(io)?;
    for (radius, level) in found.levels.iter().enumerate() {
        // Every (t, k) with t + 2k = K, sorted by t, including empty classes.
        for k in (0..=radius / 2).rev() {
            let t = radius - 2 * k;
            let oracle = BigUint::from(level.get(&(t, k)).copied().unwrap_or(0));
            let formula = count_munn_trees(rank, t as u64, k as u64);
            let ok = oracle == formula;
            mismatches += usize::from(!ok);
            writeln!(out, "{radius},{t},{k},{oracle},{formula},{}", verdict(ok)).map_err(io)?;
        }
        let oracle = BigUint::from(found.sphere(radius).expect("level exists"));
        let formula = sphere_size(rank, radius as u64);
        let ok = oracle == formula;
        mismatches += usize::from(!ok);
        writeln!(out, "{radius},sphere,,{oracle},{formula},{}", verdict(ok)).map_err(io)?;
        let oracle = BigUint::from(found.idempotents(radius).expect("level exists"));
        let formula = idempotent_sphere_size(rank, radius as u64);
        let ok = oracle == formula;
        mismatches += usize::from(!ok);
        writeln!(out, "{radius},idempotents,,{oracle},{formula},{}", verdict(ok)).map_err(io)?;
    }
    if samples > 0 {
        let report = axioms::run_sample(rank, samples, 12, seed)?;
        for failure in &report.failures {
            writeln!(err, "law violated: {failure}").map_err(io)?;
        }
        mismatches += report.failures.len();
        writeln!(out, "# laws checked on {} random triples (seed {seed})", report.checked).map_err(io)?;
    }
    if mismatches > 0 {
        writeln!(out, "FAIL: {mismatches} mismatches").map_err(io)?;
        return Ok(EXIT_MISMATCH);
    }
    if !found.is_complete() {
        writeln!(
            out,
            "PARTIAL: work budget {budget} exhausted; verified K <= {}",
            found.completed().unwrap_or(0)
        )
        .map_err(io)?;
        writeln!(err, "error: work budget exceeded before K = {max_k}").map_err(io)?;
        return Ok(EXIT_BUDGET);
    }
    writeln!(out, "PASS").map_err(io)?;
    Ok(EXIT_OK)
}
