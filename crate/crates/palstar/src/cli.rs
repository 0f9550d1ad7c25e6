//! Command-line surface: exact sequence tables, palstar factorization,
//! certified constants, 1/k expansions, and the verification harness.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 domain rejection
//! (not a palstar), 3 computation limit exceeded (enumeration budget or
//! stabilization ceiling).

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::asymptotics::{
    alpha_inv_series_bounded, InverseKSeries, DEFAULT_STABILIZATION_LIMIT,
};
use crate::counting::{p_sequence, u_sequence, CountSequence};
use crate::error::{Error, Result};
use crate::factor::factor_palstar;
use crate::gf::{
    alpha_from_rho, compute_amplitude, decimal_ceil, decimal_floor, enclosure_decimal,
    solve_rho, RationalEnclosure,
};
use crate::verify::{
    all_suites, suite_amplitude, suite_bounds, suite_identity, suite_oracle, suite_scan,
    suite_structure, suite_table, CheckOutcome,
};
use crate::words::{Alphabet, Word, DEFAULT_ENUMERATION_BUDGET};

#[derive(Debug, Parser)]
#[command(
    name = "palstar",
    version,
    about = "Exact enumeration and analysis of palstars (concatenations of even-length palindromes)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for machine consumption.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    /// Candidate-word ceiling for the brute-force oracles.
    #[arg(long, global = true, env = "PALSTAR_BUDGET")]
    budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print terms 0..=N of a counting sequence as exact decimal strings.
    Count {
        /// Which sequence: palstars of length 2n, or unbordered words of length n.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Alphabet size (k >= 2).
        #[arg(short)]
        k: u32,
        /// Last index to print.
        #[arg(short = 'N')]
        n_max: usize,
    },
    /// Factor a word (ASCII letters, a=0, b=1, ...) into prime palstars.
    Factor {
        /// The word to factor.
        word: String,
        /// Declared alphabet size; letters at or past index k are rejected.
        #[arg(short, default_value_t = 26)]
        k: u32,
    },
    /// Certified decimal digits of rho_k, alpha_k, and C_k.
    Alpha {
        /// Alphabet size (k >= 2).
        #[arg(short)]
        k: u32,
        /// How many certified decimal digits to print (truncated, not rounded).
        #[arg(long, default_value_t = 50)]
        digits: u32,
    },
    /// 1/k expansions of 1/alpha_k and alpha_k with exact fractions.
    Expand {
        /// Number of series terms. For `--as alpha` this counts the
        /// correction terms after the leading 2k.
        #[arg(long, default_value_t = 9)]
        terms: usize,
        /// Which expansion to print.
        #[arg(long = "as", value_enum, default_value_t = ExpandTarget::Both)]
        target: ExpandTarget,
        /// Give up if the coefficients have not stabilized by this n.
        #[arg(long, default_value_t = DEFAULT_STABILIZATION_LIMIT)]
        max_n: usize,
    },
    /// Run a verification suite; prints one JSON line per check.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Alphabet size for the oracle suite.
        #[arg(short, default_value_t = 2)]
        k: u32,
        /// Largest sequence index for the oracle suite.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Largest alphabet size for the bounds suite.
        #[arg(long, default_value_t = 64)]
        k_max: u64,
        /// Grid size for the circle-scan suite.
        #[arg(long, default_value_t = 360)]
        samples: usize,
        /// Word-length ceiling for the structure suite.
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Palstar,
    Unbordered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExpandTarget {
    Both,
    Alpha,
    AlphaInv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Table,
    Oracle,
    Identity,
    Bounds,
    Structure,
    Scan,
    Amplitude,
    All,
}

/// Parses and dispatches; returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let budget = cli.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET);
    let format = cli.format;
    let outcome = match cli.command {
        Command::Count { kind, k, n_max } => cmd_count(kind, k, n_max, format),
        Command::Factor { word, k } => cmd_factor(&word, k, format),
        Command::Alpha { k, digits } => cmd_alpha(k, digits, format),
        Command::Expand { terms, target, max_n } => cmd_expand(terms, target, max_n, format),
        Command::Verify { suite, k, max_n, k_max, samples, max_len } => {
            cmd_verify(suite, k, max_n, k_max, samples, max_len, budget)
        }
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::NotAPalstar { .. } => 2,
                Error::BudgetExceeded { .. } | Error::NoStabilization { .. } => 3,
                _ => 1,
            }
        }
    }
}

fn sequence_terms(seq: &CountSequence) -> Vec<String> {
    seq.terms().iter().map(|t| t.to_string()).collect()
}

fn cmd_count(kind: KindArg, k: u32, n_max: usize, format: OutputFormat) -> Result<u8> {
    let (seq, kind_name) = match kind {
        KindArg::Palstar => (p_sequence(k, n_max)?, "palstar"),
        KindArg::Unbordered => (u_sequence(k, n_max)?, "unbordered"),
    };
    let terms = sequence_terms(&seq);
    match format {
        OutputFormat::Plain => println!("{}", terms.join(" ")),
        OutputFormat::Json => {
            println!("{}", json!({ "k": k, "kind": kind_name, "terms": terms }));
        }
        OutputFormat::Csv => {
            println!("n,count");
            for (n, t) in terms.iter().enumerate() {
                println!("{n},{t}");
            }
        }
    }
    Ok(0)
}

fn cmd_factor(word: &str, k: u32, format: OutputFormat) -> Result<u8> {
    let alphabet = Alphabet::new(k)?;
    let w = Word::from_letters(alphabet, word)?;
    let factorization = factor_palstar(&w)?;
    let factors: Vec<String> = factorization.factors().iter().map(|f| f.to_string()).collect();
    match format {
        OutputFormat::Plain => println!("{factorization}"),
        OutputFormat::Json => {
            println!("{}", json!({ "word": word, "factors": factors }));
        }
        OutputFormat::Csv => {
            println!("factor");
            for f in &factors {
                println!("{f}");
            }
        }
    }
    Ok(0)
}

/// The printed truncation at `digits` plus a marker when the enclosure
/// straddles a decimal boundary and the last digit may read one low.
fn render_enclosure(e: &RationalEnclosure, digits: u32) -> String {
    match enclosure_decimal(e, digits as usize) {
        Some(s) => s,
        None => format!("{} (+1 ulp possible)", decimal_floor(e.lo(), digits as usize)),
    }
}

fn enclosure_json(e: &RationalEnclosure, digits: u32, n_used: usize) -> serde_json::Value {
    // floor on the low side and ceil on the high side keep the printed
    // decimals a sound enclosure
    json!({
        "lo": decimal_floor(e.lo(), digits as usize + 4),
        "hi": decimal_ceil(e.hi(), digits as usize + 4),
        "digits": digits,
        "n_used": n_used,
    })
}

fn cmd_alpha(k: u32, digits: u32, format: OutputFormat) -> Result<u8> {
    if digits == 0 {
        return Err(Error::invalid("digits must be at least 1"));
    }
    // reciprocal and derivative both lose about 2 log10(2k) digits; guard for it
    let guard = (2.0 * ((2 * k) as f64).log10()).ceil() as u32 + 3;
    let root = solve_rho(k, digits + guard)?;
    let alpha = alpha_from_rho(&root.rho)?;
    let amplitude = compute_amplitude(k, &root.rho, digits + 2)?;
    match format {
        OutputFormat::Plain => {
            println!("rho_{k}   = {}", render_enclosure(&root.rho, digits));
            println!("alpha_{k} = {}", render_enclosure(&alpha, digits));
            println!("C_{k}     = {}", render_enclosure(&amplitude.c, digits));
            println!(
                "digits = {digits} (truncated; every printed digit certified), N_used = {} (rho), {} (C)",
                root.n_used, amplitude.n_used
            );
        }
        OutputFormat::Json => {
            println!(
                "{}",
                json!({
                    "k": k,
                    "digits": digits,
                    "rho": enclosure_json(&root.rho, digits, root.n_used),
                    "alpha": enclosure_json(&alpha, digits, root.n_used),
                    "c": enclosure_json(&amplitude.c, digits, amplitude.n_used),
                })
            );
        }
        OutputFormat::Csv => {
            println!("quantity,value,n_used");
            println!("rho,{},{}", render_enclosure(&root.rho, digits), root.n_used);
            println!("alpha,{},{}", render_enclosure(&alpha, digits), root.n_used);
            println!("c,{},{}", render_enclosure(&amplitude.c, digits), amplitude.n_used);
        }
    }
    Ok(0)
}

fn series_json(s: &InverseKSeries) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = s
        .coefficients()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            json!({
                "power": s.leading_power() - j as i64,
                "numerator": c.numer().to_string(),
                "denominator": c.denom().to_string(),
            })
        })
        .collect();
    serde_json::Value::Array(terms)
}

fn cmd_expand(
    terms: usize,
    target: ExpandTarget,
    max_n: usize,
    format: OutputFormat,
) -> Result<u8> {
    if terms == 0 {
        return Err(Error::invalid("terms must be at least 1"));
    }
    // `alpha` counts correction terms past the leading 2k, so it needs one
    // more coefficient of the reciprocal series
    let inv_terms = match target {
        ExpandTarget::Alpha => terms + 1,
        _ => terms,
    };
    let stabilized = alpha_inv_series_bounded(inv_terms, max_n)?;
    let inv = &stabilized.series;
    let alpha = inv.reciprocal()?;
    let inv_remainder = inv_terms + 1;
    let alpha_remainder = inv_terms - 1;
    match format {
        OutputFormat::Plain => {
            match target {
                ExpandTarget::Both => {
                    println!("1/alpha_k = {inv} + O(k^-{inv_remainder})");
                    println!("alpha_k   = {alpha} + O(k^-{alpha_remainder})");
                }
                ExpandTarget::AlphaInv => {
                    println!("1/alpha_k = {inv} + O(k^-{inv_remainder})");
                }
                ExpandTarget::Alpha => {
                    println!("alpha_k = {alpha} + O(k^-{alpha_remainder})");
                }
            }
            println!("stabilized at n = {}", stabilized.stabilized_at);
        }
        OutputFormat::Json => {
            let mut object = serde_json::Map::new();
            object.insert("terms".into(), json!(terms));
            object.insert("stabilized_at".into(), json!(stabilized.stabilized_at));
            if target != ExpandTarget::Alpha {
                object.insert("alpha_inv".into(), series_json(inv));
            }
            if target != ExpandTarget::AlphaInv {
                object.insert("alpha".into(), series_json(&alpha));
            }
            println!("{}", serde_json::Value::Object(object));
        }
        OutputFormat::Csv => {
            println!("series,power,numerator,denominator");
            let mut rows = Vec::new();
            if target != ExpandTarget::Alpha {
                rows.push(("alpha_inv", inv));
            }
            let alpha_ref = &alpha;
            if target != ExpandTarget::AlphaInv {
                rows.push(("alpha", alpha_ref));
            }
            for (label, series) in rows {
                for (j, c) in series.coefficients().iter().enumerate() {
                    println!(
                        "{label},{},{},{}",
                        series.leading_power() - j as i64,
                        c.numer(),
                        c.denom()
                    );
                }
            }
        }
    }
    Ok(0)
}

fn cmd_verify(
    suite: SuiteArg,
    k: u32,
    max_n: usize,
    k_max: u64,
    samples: usize,
    max_len: usize,
    budget: u64,
) -> Result<u8> {
    let outcomes: Vec<CheckOutcome> = match suite {
        SuiteArg::Table => suite_table(),
        SuiteArg::Oracle => suite_oracle(k, max_n, budget),
        SuiteArg::Identity => suite_identity(200),
        SuiteArg::Bounds => suite_bounds(k_max),
        SuiteArg::Structure => suite_structure(max_len),
        SuiteArg::Scan => suite_scan(samples),
        SuiteArg::Amplitude => suite_amplitude(),
        SuiteArg::All => all_suites(budget),
    };
    let mut first_failure = None;
    for outcome in &outcomes {
        println!(
            "{}",
            json!({
                "check": outcome.name,
                "status": if outcome.passed { "pass" } else { "fail" },
                "detail": outcome.detail,
            })
        );
        if !outcome.passed && first_failure.is_none() {
            first_failure = Some(outcome.name.clone());
        }
    }
    match first_failure {
        None => Ok(0),
        Some(name) => {
            eprintln!("failed check: {name}");
            Ok(1)
        }
    }
}
