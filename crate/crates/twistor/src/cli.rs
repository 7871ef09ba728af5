//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 for malformed input, 2 when the input is
//! well-formed but violates a hypothesis or cannot come from a twistor space.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use twistor_core::classifier::{enumerate_configurations, Diagnosis};
use twistor_core::cohomology::{
    chern_numbers, first_chern_class, fundamental_class, pairing_matrix, second_chern_class,
    CohomologyClass,
};
use twistor_core::cycle::{h0_formula, h0_oracle, CycleLineBundle};
use twistor_core::{classify, TwistorModel};

use crate::acceptance;
use crate::document::parse_schedule;
use crate::report::{table_row, EnumerationRecord, ReportRecord};

pub const SEED_VAR: &str = "TWISTOR_SEED";
const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Parser)]
#[command(name = "twistor", version, about = "Twistor spaces over 4#CP2: cohomology, fundamental divisors and classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Chern numbers c1^3, c1c2, c3 of the twistor space over nCP2.
    Chern {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Cup product with the fundamental class as a map H^2 -> H^4.
    Pairing {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Print the matrix as well as its determinant.
        #[arg(long)]
        matrix: bool,
    },
    /// Euler characteristic of the m-th power of the fundamental bundle.
    Euler {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        m: u64,
    },
    /// Evaluate a product in the cohomology ring, e.g. `w*x1*x1` or `c1*c2`.
    Ring {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        expr: String,
    },
    /// h0 of a line bundle on a cycle of rational curves.
    CycleH0 {
        /// Comma-separated degrees around the cycle, e.g. `2,-2,2,-2`.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
        degrees: Vec<i64>,
        /// Also compute h0 by brute force with random gluing.
        #[arg(long)]
        oracle: bool,
        /// Seed for the oracle (defaults to $TWISTOR_SEED, then 1).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Classify a schedule document.
    Classify {
        file: std::path::PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate blow-up configurations up to symmetry and classify them.
    Enumerate {
        /// Stop after this many distinct configurations.
        #[arg(long, default_value_t = usize::MAX, hide_default_value = true)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the acceptance checks.
    Selftest,
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: writing output: {e}");
            1
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match cmd {
        Command::Chern { n } => {
            let d = chern_numbers(n as usize);
            writeln!(out, "c1^3 = {}", d.c1_cubed)?;
            writeln!(out, "c1c2 = {}", d.c1_c2)?;
            writeln!(out, "c3 = {}", d.c3)?;
        }
        Command::Pairing { n, matrix } => {
            let p = pairing_matrix(n as usize);
            if matrix {
                write!(out, "{}", p.matrix)?;
            }
            writeln!(out, "det = {}", p.det)?;
        }
        Command::Euler { n, m } => {
            writeln!(
                out,
                "{}",
                twistor_core::cohomology::euler_char_fundamental(n as usize, m)
            )?;
        }
        Command::Ring { n, expr } => match evaluate_expression(n as usize, &expr) {
            Ok(v) => writeln!(out, "{v}")?,
            Err(msg) => {
                writeln!(err, "error: {msg}")?;
                return Ok(1);
            }
        },
        Command::CycleH0 {
            degrees,
            oracle,
            seed,
        } => return cycle_h0(degrees, oracle, seed, out, err),
        Command::Classify { file, json } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    writeln!(err, "error: {}: {e}", file.display())?;
                    return Ok(1);
                }
            };
            let parsed = match parse_schedule(&text) {
                Ok(p) => p,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(1);
                }
            };
            let outcome = TwistorModel::new(
                parsed.schedule,
                parsed.torsion,
                parsed.smooth_anticanonical,
            )
            .and_then(|m| classify(&m));
            match outcome {
                Ok(r) if json => {
                    let record = ReportRecord::from(&r);
                    writeln!(out, "{}", serde_json::to_string_pretty(&record).expect("serializable"))?;
                }
                Ok(r) => writeln!(out, "{r}")?,
                Err(d) => return diagnose(&d, err),
            }
        }
        Command::Enumerate { limit, json } => {
            let e = enumerate_configurations(limit);
            if json {
                let record = EnumerationRecord::from(&e);
                writeln!(out, "{}", serde_json::to_string_pretty(&record).expect("serializable"))?;
            } else {
                for c in &e.configurations {
                    writeln!(out, "{}", table_row(c))?;
                }
                let realizable = e.configurations.iter().filter(|c| c.is_realizable()).count();
                writeln!(
                    out,
                    "{} configurations ({realizable} realizable) from {} schedules{}",
                    e.configurations.len(),
                    e.leaves,
                    if e.exhausted { ", exhausted" } else { "" }
                )?;
            }
        }
        Command::Selftest => {
            let results = acceptance::run_all();
            for r in &results {
                writeln!(out, "{r}")?;
            }
            if results.iter().any(|r| !r.passed) {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn diagnose(d: &Diagnosis, err: &mut dyn Write) -> std::io::Result<i32> {
    writeln!(err, "{}: {d}", d.tag())?;
    Ok(if d.is_input_error() { 1 } else { 2 })
}

fn cycle_h0(
    degrees: Vec<i64>,
    oracle: bool,
    seed: Option<u64>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let bundle = match CycleLineBundle::new(degrees) {
        Ok(b) => b,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(1);
        }
    };
    let formula = h0_formula(&bundle);
    if !oracle {
        return match formula {
            Ok(h) => {
                writeln!(out, "{h}")?;
                Ok(0)
            }
            Err(e) => {
                writeln!(err, "formula hypotheses not met: {e}")?;
                Ok(2)
            }
        };
    }
    let seed = match seed {
        Some(s) => s,
        None => match std::env::var(SEED_VAR) {
            Ok(v) => match v.trim().parse() {
                Ok(s) => s,
                Err(_) => {
                    writeln!(err, "error: {SEED_VAR}={v:?} is not an unsigned integer")?;
                    return Ok(1);
                }
            },
            Err(_) => DEFAULT_SEED,
        },
    };
    let result = h0_oracle(&bundle, seed).expect("bundle has at least two components");
    match &formula {
        Ok(h) => writeln!(out, "formula: {h}")?,
        Err(e) => {
            writeln!(out, "formula: not applicable")?;
            writeln!(err, "formula hypotheses not met: {e}")?;
        }
    }
    writeln!(out, "oracle: {} (seed {seed}, draws {:?})", result.h0, result.draws)?;
    if let Ok(h) = formula {
        let verdict = if h == result.h0 { "agree" } else { "DISAGREE" };
        writeln!(out, "{verdict}")?;
        if h != result.h0 {
            return Ok(2);
        }
    }
    Ok(0)
}

/// Evaluates a `*`-separated product of `x1..xn`, `w`, `c1`, `c2`, `fund`
/// and integers. Degree-6 results are integrated; others print their
/// coefficients.
fn evaluate_expression(n: usize, expr: &str) -> Result<String, String> {
    let mut acc = CohomologyClass::one(n);
    for token in expr.split('*').map(str::trim) {
        let factor = match token {
            "w" => CohomologyClass::w(n),
            "c1" => first_chern_class(n),
            "c2" => second_chern_class(n),
            "fund" => fundamental_class(n),
            t if t.starts_with('x') => {
                let i: usize = t[1..]
                    .parse()
                    .map_err(|_| format!("unknown generator {t:?}"))?;
                if !(1..=n).contains(&i) {
                    return Err(format!("generator {t} out of range 1..={n}"));
                }
                CohomologyClass::x(n, i)
            }
            t => {
                let k: BigInt = t.parse().map_err(|_| format!("unknown token {t:?}"))?;
                acc = acc.scaled(&k);
                continue;
            }
        };
        acc = acc.cup(&factor).map_err(|e| e.to_string())?;
    }
    if acc.degree() == 6 {
        acc.evaluate().map(|v| v.to_string()).map_err(|e| e.to_string())
    } else {
        let coeffs: Vec<String> = acc.coefficients().iter().map(ToString::to_string).collect();
        Ok(format!("degree {}: [{}]", acc.degree(), coeffs.join(", ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_expressions() {
        assert_eq!(evaluate_expression(4, "w*x1*x1").unwrap(), "-1");
        assert_eq!(evaluate_expression(4, "c1*c2").unwrap(), "24");
        assert_eq!(evaluate_expression(3, "c1*c1*c1").unwrap(), "16");
        assert_eq!(evaluate_expression(4, "fund*fund*fund").unwrap(), "0");
        assert_eq!(evaluate_expression(4, "2*w*x1*x1").unwrap(), "-2");
        assert!(evaluate_expression(4, "x5").is_err());
        assert!(evaluate_expression(4, "y").is_err());
    }
}
