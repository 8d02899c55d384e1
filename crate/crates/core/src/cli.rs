//! Command-line front end.
//!
//! Exit codes: 0 success or affirmative verdict, 1 negative verdict or
//! counterexample, 2 usage error, 3 precision error.

use std::ffi::OsString;
use std::io::{self, Write};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_traits::{One, Zero};

use crate::decimal::Decimal;
use crate::fibonacci::{fib, FibIndex, Natural};
use crate::geometry::{
    convergence_table, octagon, octagon_limits, ConvergenceRow, PrecisionConfig,
};
use crate::hippasus::{descend, successors};
use crate::table::{hippasus_table, render, OutputFormat};
use crate::verify::{self, Outcome, Suite};
use crate::wasteels::classify;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PRECISION: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hippasus",
    version,
    about = "Fibonacci numbers as the solutions of b(b+a) - a^2 = ±1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print F_i (F_0 = F_1 = 1)
    Fib { index: u64 },
    /// List every Hippasus pair with beta <= max-beta
    Table {
        #[arg(long, default_value = "1000", value_parser = parse_positive)]
        max_beta: Natural,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Decide whether beta is a Hippasus number
    Check {
        #[arg(value_parser = parse_positive)]
        beta: Natural,
    },
    /// Apply Wasteels' criterion to (x, y)
    Wasteels {
        #[arg(value_parser = parse_positive)]
        x: Natural,
        #[arg(value_parser = parse_positive)]
        y: Natural,
    },
    /// Print the subtractive descent from beta
    Descent {
        #[arg(value_parser = parse_positive)]
        beta: Natural,
    },
    /// Octagon built from the circles of diameter F_n and F_{n+2}
    Octagon {
        #[arg(long, default_value_t = 40)]
        n: u64,
        #[arg(long, default_value_t = PrecisionConfig::DEFAULT_DIGITS)]
        digits: u32,
    },
    /// F_{n+1}/F_n against phi for n = 0..=n-max
    PhiConvergence {
        #[arg(long, default_value_t = 20)]
        n_max: u64,
        #[arg(long, default_value_t = PrecisionConfig::DEFAULT_DIGITS)]
        digits: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Run a range check and report the smallest counterexample
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        bound: u64,
    },
}

fn parse_positive(s: &str) -> Result<Natural, String> {
    let n = Natural::from_str(s).map_err(|_| format!("`{s}` is not a non-negative integer"))?;
    if n.is_zero() {
        return Err("value must be at least 1".to_string());
    }
    Ok(n)
}

enum Failure {
    Usage(String),
    Precision(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Precision(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_PRECISION
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_NEGATIVE
        }
    }
}

fn verdict(yes: bool) -> u8 {
    if yes {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn index(i: u64) -> Result<FibIndex, Failure> {
    FibIndex::new(i).map_err(|e| Failure::Usage(e.to_string()))
}

fn precision(digits: u32) -> Result<PrecisionConfig, Failure> {
    PrecisionConfig::new(digits).map_err(|e| Failure::Precision(e.to_string()))
}

fn join(values: &[Natural], sep: &str) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Fib { index: i } => {
            writeln!(out, "{}", fib(index(i)?))?;
            Ok(EXIT_OK)
        }
        Command::Table { max_beta, format } => {
            out.write_all(render(&hippasus_table(&max_beta), format).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Check { beta } => check(&beta, out),
        Command::Wasteels { x, y } => {
            let v = classify(&x, &y);
            writeln!(out, "x: {x}")?;
            writeln!(out, "y: {y}")?;
            writeln!(out, "residual y^2 - xy - x^2: {}", v.residual)?;
            writeln!(
                out,
                "consecutive: {}",
                if v.consecutive { "yes" } else { "no" }
            )?;
            if let Some((i, j)) = v.indices {
                writeln!(out, "indices: F_{i} = {x}, F_{j} = {y}")?;
            }
            Ok(verdict(v.consecutive))
        }
        Command::Descent { beta } => match descend(&beta) {
            Some(trace) => {
                writeln!(out, "{}", join(&trace.steps, " "))?;
                writeln!(out, "index: {}", trace.recovered_index)?;
                Ok(EXIT_OK)
            }
            None => {
                writeln!(out, "{beta} is not a Hippasus number")?;
                Ok(EXIT_NEGATIVE)
            }
        },
        Command::Octagon { n, digits } => {
            let cfg = precision(digits)?;
            report_octagon(index(n)?, &cfg, out)?;
            Ok(EXIT_OK)
        }
        Command::PhiConvergence {
            n_max,
            digits,
            format,
        } => {
            let cfg = precision(digits)?;
            let rows = convergence_table(index(n_max)?, &cfg)
                .map_err(|e| Failure::Precision(e.to_string()))?;
            out.write_all(render_convergence(&rows, format).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, bound } => {
            let name = format!("{suite:?}").to_lowercase();
            match verify::run(suite, bound).map_err(|e| Failure::Usage(e.to_string()))? {
                Outcome::Pass { checked } => {
                    writeln!(out, "{name}: pass ({checked} cases up to {bound})")?;
                    Ok(EXIT_OK)
                }
                Outcome::Fail(counterexample) => {
                    writeln!(out, "{name}: FAIL")?;
                    writeln!(out, "counterexample: {counterexample}")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
    }
}

fn check(beta: &Natural, out: &mut dyn Write) -> Result<u8, Failure> {
    let set = successors(beta);
    writeln!(out, "beta: {beta}")?;
    match descend(beta) {
        Some(trace) => {
            writeln!(out, "hippasus: yes")?;
            writeln!(out, "successors: {}", join(&set.successors, ", "))?;
            writeln!(out, "descent: {}", join(&trace.steps, " > "))?;
            if beta.is_one() {
                writeln!(out, "fibonacci index: 0 (and 1)")?;
            } else {
                writeln!(out, "fibonacci index: {}", trace.recovered_index)?;
            }
            Ok(EXIT_OK)
        }
        None => {
            writeln!(out, "hippasus: no")?;
            writeln!(out, "successors: none")?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn report_octagon(n: FibIndex, cfg: &PrecisionConfig, out: &mut dyn Write) -> io::Result<()> {
    let g = octagon(n, cfg);
    let limits = octagon_limits(cfg);
    writeln!(out, "n: {n}")?;
    writeln!(out, "F_n: {}", g.f_n)?;
    writeln!(out, "F_n+2: {}", g.f_n2)?;
    writeln!(out, "P: ({}, {})", g.p.x, g.p.y)?;
    writeln!(out, "Q: ({}, {})", g.q.x, g.q.y)?;
    writeln!(out, "d: {}", g.d)?;
    writeln!(out, "e: {}", g.e)?;
    let ratios = [
        ("d/F_n", &g.ratio_d_over_f, &limits.d_over_f),
        ("d/e", &g.ratio_d_over_e, &limits.d_over_e),
        ("e/F_n", &g.ratio_e_over_f, &limits.e_over_f),
    ];
    for (name, value, limit) in ratios {
        writeln!(out, "{name}: {value}")?;
        writeln!(out, "{name} limit: {limit}")?;
        writeln!(
            out,
            "{name} deviation: {}",
            deviation(value, limit, cfg.digits())
        )?;
    }
    Ok(())
}

fn deviation(value: &Decimal, limit: &Decimal, digits: u32) -> Decimal {
    (value - limit).round_significant(digits)
}

fn render_convergence(rows: &[ConvergenceRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Aligned => {
            let cells: Vec<[String; 3]> = rows
                .iter()
                .map(|r| [r.n.to_string(), r.ratio.to_string(), r.error.to_string()])
                .collect();
            let header = ["n", "F_{n+1}/F_n", "phi - ratio"].map(String::from);
            let mut widths = header.clone().map(|h| h.len());
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.len());
                }
            }
            let mut out = String::new();
            for row in std::iter::once(&header).chain(&cells) {
                let line = format!(
                    "{:>w0$}  {:<w1$}  {}",
                    row[0],
                    row[1],
                    row[2],
                    w0 = widths[0],
                    w1 = widths[1]
                );
                out.push_str(line.trim_end());
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "ratio", "error"])
                .expect("in-memory write");
            for r in rows {
                w.write_record([r.n.to_string(), r.ratio.to_string(), r.error.to_string()])
                    .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII")
        }
        OutputFormat::Json => {
            let number = |s: String| {
                serde_json::Value::Number(serde_json::Number::from_str(&s).expect("plain decimal"))
            };
            let array = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "n": r.n.get(),
                        "ratio": number(r.ratio.to_string()),
                        "error": number(r.error.to_string()),
                    })
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&serde_json::Value::Array(array))
                .expect("JSON values serialize");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("hippasus").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn positive_parser() {
        assert!(parse_positive("0").is_err());
        assert!(parse_positive("-3").is_err());
        assert!(parse_positive("abc").is_err());
        assert_eq!(parse_positive("12"), Ok(Natural::from(12u32)));
        assert!(parse_positive("123456789012345678901234567890").is_ok());
    }

    #[test]
    fn fib_command() {
        assert_eq!(
            run_capture(&["fib", "16"]),
            (0, "1597\n".into(), String::new())
        );
        let (code, _, err) = run_capture(&["fib", "1000001"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("exceeds"));
    }

    #[test]
    fn check_codes() {
        let (code, out, _) = run_capture(&["check", "55"]);
        assert_eq!(code, 0);
        assert!(out.contains("successors: 89"));
        assert!(out.contains("fibonacci index: 9"));
        let (code, out, _) = run_capture(&["check", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("successors: 1, 2"));
        assert_eq!(run_capture(&["check", "57"]).0, 1);
        assert_eq!(run_capture(&["check", "fifty"]).0, 2);
        assert_eq!(run_capture(&["check", "0"]).0, 2);
    }

    #[test]
    fn wasteels_codes() {
        let (code, out, _) = run_capture(&["wasteels", "21", "34"]);
        assert_eq!(code, 0);
        assert!(out.contains("F_7 = 21, F_8 = 34"));
        assert_eq!(run_capture(&["wasteels", "1", "1"]).0, 0);
        let (code, out, _) = run_capture(&["wasteels", "9", "15"]);
        assert_eq!(code, 1);
        assert!(out.contains("residual y^2 - xy - x^2: 9"));
    }

    #[test]
    fn descent_output() {
        let (code, out, _) = run_capture(&["descent", "13"]);
        assert_eq!(code, 0);
        assert_eq!(out, "13 8 5 3 2 1 1\nindex: 6\n");
        assert_eq!(run_capture(&["descent", "12"]).0, 1);
    }

    #[test]
    fn octagon_codes() {
        assert_eq!(run_capture(&["octagon", "--n", "0"]).0, 0);
        let (code, _, err) = run_capture(&["octagon", "--n", "40", "--digits", "10"]);
        assert_eq!(code, EXIT_PRECISION);
        assert!(err.contains("precision"));
    }

    #[test]
    fn convergence_precision_error() {
        let (code, _, _) = run_capture(&["phi-convergence", "--n-max", "200", "--digits", "20"]);
        assert_eq!(code, EXIT_PRECISION);
        let (code, out, _) = run_capture(&["phi-convergence", "--n-max", "3", "--format", "csv"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("n,ratio,error\n0,1.000"));
    }

    #[test]
    fn verify_codes() {
        let (code, out, _) = run_capture(&["verify", "cassini", "--bound", "300"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("cassini: pass"));
        assert_eq!(run_capture(&["verify", "nonsense", "--bound", "3"]).0, 2);
        assert_eq!(
            run_capture(&["verify", "cassini", "--bound", "5000000"]).0,
            2
        );
    }
}
