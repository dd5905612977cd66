//! weilcensus: exact isogeny-class censuses over prime fields and numeric
//! verification of the effective bounds behind them.
//!
//! Exit status: 0 when every hard assertion in the run passed, 1 on
//! assertion failure (the failing record is named on stderr), 2 on usage
//! errors.

mod cache;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use weilcensus_core::arith::primes;
use weilcensus_core::census::Epsilon;

use cache::ClassNumberCache;
use commands::BoundsArgs;
use report::{Report, Timing};

#[derive(Parser)]
#[command(
    name = "weilcensus",
    about = "Isogeny-class censuses over prime fields, order discriminants \
             and class numbers, and verification of the effective bounds",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the Y_g coefficient family, validating every member
    WeilEnum {
        /// Prime p
        #[arg(long)]
        p: u64,
        /// Dimension g (1..=8)
        #[arg(long)]
        g: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Write the JSON report here
        #[arg(long)]
        output: Option<PathBuf>,
        /// Include wall-clock timing in the JSON report (off by default so
        /// reports are byte-identical across worker counts)
        #[arg(long)]
        timing: bool,
    },
    /// Class-number census vs brute-force curve enumeration at g = 1
    Census {
        /// Prime p >= 5
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Class-number cache file (overridden by WEILCENSUS_CACHE)
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timing: bool,
    },
    /// Exact discriminant-threshold densities over Y_g
    Density {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        g: usize,
        /// Rational threshold parameter u/v with v dividing 4
        #[arg(long, default_value = "1/2")]
        eps: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timing: bool,
    },
    /// Class-number lower-bound sum (g=1) or disc statistics (g = 2, 3)
    LowerBound {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        g: usize,
        /// Threshold parameter for the g >= 2 statistics
        #[arg(long, default_value = "1/2")]
        eps: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timing: bool,
    },
    /// Run one named bound verification
    BoundsCheck {
        /// One of: pair-product, leading-coeff, orbit-grid, order-bounds,
        /// partition-recurrence, hardy-ramanujan, fekete, sublevel,
        /// unit-euler, exponent-audit
        #[arg(long)]
        check: String,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        g: usize,
        #[arg(long, default_value = "1/4")]
        eps: String,
        /// Largest prime ell for grid checks
        #[arg(long, default_value_t = 31)]
        lmax: u64,
        /// Largest n for grid checks and for fekete
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Largest delta for grid checks
        #[arg(long, default_value_t = 6)]
        dmax: usize,
        /// Smallest m for pair-product sweeps
        #[arg(long, default_value_t = 2)]
        mmin: usize,
        /// Largest m for pair-product sweeps / partition scans
        #[arg(long, default_value_t = 12)]
        mmax: usize,
        /// Seeded trials per grid point
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        /// Sample grid for sublevel measures (>= 10000)
        #[arg(long, default_value_t = 10_000)]
        grid: usize,
        /// Growth-scan constant C as a rational > 1
        #[arg(long, default_value = "3")]
        c: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        timing: bool,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_eps(s: &str) -> Result<Epsilon, String> {
    Epsilon::parse(s).map_err(|e| e.to_string())
}

/// Rational "a/b" or integer "a"; used for the growth-scan constant C.
fn parse_ratio(s: &str) -> Result<(u64, u64), String> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = n.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
    let den = d.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
    if den == 0 {
        return Err(format!("bad rational {s:?}"));
    }
    Ok((num, den))
}

fn cache_path(cli_path: Option<PathBuf>) -> Option<PathBuf> {
    std::env::var_os("WEILCENSUS_CACHE")
        .map(PathBuf::from)
        .or(cli_path)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();

    let outcome: Result<(Report, Option<PathBuf>, bool), ExitCode> = match cli.command {
        Command::WeilEnum {
            p,
            g,
            workers,
            output,
            timing,
        } => commands::weil_enum(p, g, workers)
            .map(|r| (r, output, timing))
            .map_err(|e| usage_error(&e.to_string())),
        Command::Census {
            p,
            workers,
            cache,
            output,
            timing,
        } => {
            if !primes::is_prime(p) || p < 5 {
                return usage_error(&format!("p must be prime >= 5, got {p}"));
            }
            let cache = ClassNumberCache::open(cache_path(cache));
            match commands::census(p, workers, &cache) {
                Ok(r) => {
                    match cache.verify_all() {
                        Ok(_) => println!("class-number cache: {} verified entries", cache.len()),
                        Err(e) => eprintln!("warning: cache verification failed: {e}"),
                    }
                    if let Err(e) = cache.save() {
                        eprintln!("warning: cache save failed: {e}");
                    }
                    Ok((r, output, timing))
                }
                Err(e) => Err(usage_error(&e.to_string())),
            }
        }
        Command::Density {
            p,
            g,
            eps,
            workers,
            output,
            timing,
        } => match parse_eps(&eps) {
            Ok(eps) => commands::density(p, g, eps, workers)
                .map(|r| (r, output, timing))
                .map_err(|e| usage_error(&e.to_string())),
            Err(e) => Err(usage_error(&e)),
        },
        Command::LowerBound {
            p,
            g,
            eps,
            workers,
            cache,
            output,
            timing,
        } => match parse_eps(&eps) {
            Ok(eps) => {
                let cache = ClassNumberCache::open(cache_path(cache));
                match commands::lower_bound(p, g, eps, workers, &cache) {
                    Ok(r) => {
                        if let Err(e) = cache.save() {
                            eprintln!("warning: cache save failed: {e}");
                        }
                        Ok((r, output, timing))
                    }
                    Err(e) => Err(usage_error(&e.to_string())),
                }
            }
            Err(e) => Err(usage_error(&e)),
        },
        Command::BoundsCheck {
            check,
            p,
            g,
            eps,
            lmax,
            nmax,
            dmax,
            mmin,
            mmax,
            trials,
            grid,
            c,
            seed,
            workers,
            output,
            timing,
        } => {
            let eps = match parse_eps(&eps) {
                Ok(e) => e,
                Err(e) => return usage_error(&e),
            };
            let c = match parse_ratio(&c) {
                Ok(c) => c,
                Err(e) => return usage_error(&e),
            };
            let args = BoundsArgs {
                check,
                p,
                g,
                eps,
                lmax,
                nmax,
                dmax,
                mmin,
                mmax,
                trials,
                grid,
                c,
                seed,
                workers,
            };
            commands::bounds_check(&args)
                .map(|r| (r, output, timing))
                .map_err(|e| usage_error(&e.to_string()))
        }
    };

    let (mut report, output, timing) = match outcome {
        Ok(v) => v,
        Err(code) => return code,
    };

    let elapsed = started.elapsed();
    if timing {
        report.timing = Some(Timing {
            wall_ms: elapsed.as_millis() as u64,
        });
    }
    println!(
        "assertions: {} passed, {} failed ({:.2}s)",
        report.assertions.passed,
        report.assertions.failed.len(),
        elapsed.as_secs_f64()
    );
    for f in &report.assertions.failed {
        eprintln!("FAILED: {f}");
    }
    if let Some(path) = output {
        if let Err(e) = report.write(&path) {
            eprintln!("error: cannot write report to {}: {e}", path.display());
            return ExitCode::from(1);
        }
        println!("report written to {}", path.display());
    }
    if report.assertions.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
