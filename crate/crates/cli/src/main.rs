//! Command-line front end for Narayana number divisibility.
//!
//! Exit codes: 0 when a query evaluated (whatever the verdict), 1 for
//! usage or domain errors, 2 when `verify` finds a fast-path/oracle
//! mismatch.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use narayana_core::narayana::{narayana_valuation, prime_divides_narayana};
use narayana_core::triangle::{self, RenderSpec};
use narayana_core::{oracle, NarayanaQuery, PrimeBase, RenderFormat};

/// Exact computations walk the whole (n, k) range, so they are gated to
/// keep runs desk-scale and predictable.
const ORACLE_BUDGET: u64 = 2000;

/// Renders materialize every cell; these caps turn would-be OOMs on huge
/// inputs into diagnostics. Huge rows are meant to be sampled, not drawn.
const ROW_RENDER_BUDGET: u64 = 10_000_000;
const TRIANGLE_RENDER_BUDGET: u64 = 10_000;

/// Seed for benchmark k-sampling ("narayana" as little-endian ASCII);
/// fixed so reports are reproducible.
const BENCH_SEED: u64 = 0x6e61_7261_7961_6e61;

#[derive(Parser)]
#[command(
    name = "narayana",
    version,
    about = "Prime divisibility of Narayana numbers N(n, k) via base-p digit criteria"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Ascii,
    Csv,
    Pbm,
}

impl From<FormatArg> for RenderFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Ascii => RenderFormat::Ascii,
            FormatArg::Csv => RenderFormat::Csv,
            FormatArg::Pbm => RenderFormat::Pbm,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether p divides N(n, k) without computing N(n, k).
    Divides {
        /// Prime modulus.
        #[arg(long)]
        p: u64,
        /// Row index, n >= 1.
        #[arg(long)]
        n: u64,
        /// Column index, 0 <= k <= n-1.
        #[arg(long)]
        k: u64,
        /// Also print which criterion case matched or which condition failed.
        #[arg(long)]
        explain: bool,
        /// Emit one JSON record {p, n, k, divisible, case} instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print the p-adic order of N(n, k).
    Order {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Print the exact value of N(n, k) (n up to 2000).
    Value {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Render a single row of the mod-p triangle.
    Row {
        #[arg(long)]
        p: u64,
        /// Row to render, n >= 1.
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
        format: FormatArg,
        /// Write bytes here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = '#')]
        survivor_symbol: char,
        #[arg(long, default_value_t = '.')]
        nonsurvivor_symbol: char,
    },
    /// Render triangle rows 1..=rows.
    Triangle {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        rows: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
        format: FormatArg,
        /// Write bytes here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = '#')]
        survivor_symbol: char,
        #[arg(long, default_value_t = '.')]
        nonsurvivor_symbol: char,
    },
    /// Compare the fast verdict against the exact oracle over every (n, k)
    /// with n <= max-n. Exits 2 if any mismatch shows up.
    Verify {
        #[arg(long)]
        p: u64,
        /// Sweep bound, at most 2000.
        #[arg(long)]
        max_n: u64,
    },
    /// Time the fast predicate on pseudo-randomly sampled k at large n.
    Bench {
        #[arg(long)]
        p: u64,
        /// Evaluate at n = 10^N_EXP.
        #[arg(
            long,
            value_name = "E",
            required_unless_present = "n",
            conflicts_with = "n"
        )]
        n_exp: Option<u32>,
        /// Evaluate at this exact n instead of a power of ten.
        #[arg(long)]
        n: Option<u64>,
        /// Number of sampled k values.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        /// Sample k from [1, n-2] (skipping the always-surviving edges)
        /// instead of the default [0, n-1].
        #[arg(long)]
        interior: bool,
    },
}

#[derive(Serialize)]
struct DividesRecord<'a> {
    p: u64,
    n: u64,
    k: u64,
    divisible: bool,
    case: &'a str,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let _ = err.print();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::FAILURE,
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Divides {
            p,
            n,
            k,
            explain,
            json,
        } => cmd_divides(p, n, k, explain, json),
        Command::Order { p, n, k } => cmd_order(p, n, k),
        Command::Value { n, k } => cmd_value(n, k),
        Command::Row {
            p,
            n,
            format,
            out,
            survivor_symbol,
            nonsurvivor_symbol,
        } => cmd_row(
            p,
            n,
            format,
            out.as_deref(),
            survivor_symbol,
            nonsurvivor_symbol,
        ),
        Command::Triangle {
            p,
            rows,
            format,
            out,
            survivor_symbol,
            nonsurvivor_symbol,
        } => cmd_triangle(
            p,
            rows,
            format,
            out.as_deref(),
            survivor_symbol,
            nonsurvivor_symbol,
        ),
        Command::Verify { p, max_n } => cmd_verify(p, max_n),
        Command::Bench {
            p,
            n_exp,
            n,
            samples,
            interior,
        } => cmd_bench(p, n_exp, n, samples, interior),
    }
}

fn parse_query(p: u64, n: u64, k: u64) -> Result<NarayanaQuery> {
    let base = PrimeBase::new(p)?;
    Ok(NarayanaQuery::new(base, n, k)?)
}

fn cmd_divides(p: u64, n: u64, k: u64, explain: bool, json: bool) -> Result<ExitCode> {
    let query = parse_query(p, n, k)?;
    let verdict = prime_divides_narayana(&query);
    let word = if verdict.divisible {
        "divisible"
    } else {
        "nondivisible"
    };
    if json {
        let record = DividesRecord {
            p,
            n,
            k,
            divisible: verdict.divisible,
            case: verdict.case_token(),
        };
        println!("{}", serde_json::to_string(&record)?);
    } else if explain {
        println!("{word} ({})", verdict.explanation());
    } else {
        println!("{word}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_order(p: u64, n: u64, k: u64) -> Result<ExitCode> {
    let query = parse_query(p, n, k)?;
    println!("{}", narayana_valuation(&query).omega_narayana);
    Ok(ExitCode::SUCCESS)
}

fn cmd_value(n: u64, k: u64) -> Result<ExitCode> {
    if n == 0 || k >= n {
        bail!("value needs 1 <= n and 0 <= k <= n-1, got n = {n}, k = {k}");
    }
    if n > ORACLE_BUDGET {
        bail!("exact evaluation is capped at n <= {ORACLE_BUDGET}, got n = {n}");
    }
    println!("{}", oracle::narayana_exact(n, k));
    Ok(ExitCode::SUCCESS)
}

fn cmd_row(
    p: u64,
    n: u64,
    format: FormatArg,
    out: Option<&Path>,
    survivor: char,
    nonsurvivor: char,
) -> Result<ExitCode> {
    let base = PrimeBase::new(p)?;
    if n > ROW_RENDER_BUDGET {
        bail!(
            "rendering materializes the full row, capped at n <= {ROW_RENDER_BUDGET}; \
             sample huge rows with `bench` or query single entries with `divides`"
        );
    }
    let spec = RenderSpec::new(format.into(), n, survivor, nonsurvivor)?;
    emit(&triangle::render_row(&spec, base), out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_triangle(
    p: u64,
    rows: u64,
    format: FormatArg,
    out: Option<&Path>,
    survivor: char,
    nonsurvivor: char,
) -> Result<ExitCode> {
    let base = PrimeBase::new(p)?;
    if rows > TRIANGLE_RENDER_BUDGET {
        bail!("triangle renders are capped at rows <= {TRIANGLE_RENDER_BUDGET}, got {rows}");
    }
    let spec = RenderSpec::new(format.into(), rows, survivor, nonsurvivor)?;
    emit(&triangle::render(&spec, base), out)?;
    Ok(ExitCode::SUCCESS)
}

fn emit(bytes: &[u8], out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, bytes)
            .with_context(|| format!("writing output to {}", path.display()))?,
        None => std::io::stdout()
            .lock()
            .write_all(bytes)
            .context("writing output to stdout")?,
    }
    Ok(())
}

fn cmd_verify(p: u64, max_n: u64) -> Result<ExitCode> {
    let base = PrimeBase::new(p)?;
    if max_n == 0 || max_n > ORACLE_BUDGET {
        bail!("verify needs 1 <= max-n <= {ORACLE_BUDGET}, got {max_n}");
    }

    // shard by row; each row's exact values are computed once
    let mut mismatches: Vec<(u64, u64, bool)> = (1..=max_n)
        .into_par_iter()
        .flat_map_iter(|n| {
            let row = oracle::narayana_row_exact(n);
            (0..n).filter_map(move |k| {
                let query = NarayanaQuery::new(base, n, k).expect("0 <= k < n");
                let fast = prime_divides_narayana(&query).divisible;
                let exact = (&row[k as usize] % p).is_zero();
                (fast != exact).then_some((n, k, fast))
            })
        })
        .collect();
    mismatches.sort_unstable();

    let checked = max_n * (max_n + 1) / 2;
    for &(n, k, fast) in &mismatches {
        println!(
            "mismatch at n={n} k={k}: fast={} oracle={}",
            verdict_word(fast),
            verdict_word(!fast)
        );
    }
    println!("checked {checked} queries, {} mismatches", mismatches.len());
    if mismatches.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn verdict_word(divisible: bool) -> &'static str {
    if divisible {
        "divisible"
    } else {
        "nondivisible"
    }
}

fn cmd_bench(
    p: u64,
    n_exp: Option<u32>,
    n: Option<u64>,
    samples: u64,
    interior: bool,
) -> Result<ExitCode> {
    let base = PrimeBase::new(p)?;
    let n = match (n_exp, n) {
        (Some(e), None) => 10u64
            .checked_pow(e)
            .with_context(|| format!("10^{e} exceeds the 64-bit fast-path range"))?,
        (None, Some(n)) => n,
        _ => bail!("give exactly one of --n-exp or --n"),
    };
    if n == 0 {
        bail!("bench needs n >= 1");
    }
    if samples == 0 {
        bail!("bench needs at least one sample");
    }
    let (lo, hi) = if interior {
        if n < 3 {
            bail!("--interior needs n >= 3 so [1, n-2] is nonempty");
        }
        (1, n - 2)
    } else {
        (0, n - 1)
    };

    let samples = usize::try_from(samples).context("sample count exceeds this platform")?;
    let mut rng = ChaCha8Rng::seed_from_u64(BENCH_SEED);
    let ks: Vec<u64> = (0..samples).map(|_| rng.random_range(lo..=hi)).collect();

    let started = Instant::now();
    let mut survivors = 0u64;
    for &k in &ks {
        let query = NarayanaQuery::new(base, n, k).expect("lo <= k <= hi < n");
        if !prime_divides_narayana(&query).divisible {
            survivors += 1;
        }
    }
    let elapsed = started.elapsed();

    println!(
        "n = {n}, p = {p}, samples = {samples}, seed = {BENCH_SEED:#018x}, k range = [{lo}, {hi}]"
    );
    println!(
        "survivor fraction: {:.6}",
        survivors as f64 / samples as f64
    );
    println!(
        "mean per-query: {} ns (total {:?})",
        elapsed.as_nanos() / samples as u128,
        elapsed
    );
    Ok(ExitCode::SUCCESS)
}
