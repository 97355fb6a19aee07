use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use casimir_core::algebra::{Algebra, AlgebraDocument, AlgebraId};
use casimir_core::decomposition::{verify_decomposition, DecompositionReport, SolverConfig};
use casimir_core::suite::{compare_traces, run_suite, Format, RunConfig, SuiteReport, SuiteStatus, TraceReport};
use casimir_core::vogel::{Catalog, Table2};
use casimir_core::wedge::{Caps, RankConfig};
use casimir_core::Error;

/// Exact split Casimir operators on antisymmetric powers of the adjoint.
#[derive(Parser)]
#[command(name = "casimir", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure constants and Killing metric as JSON.
    Build {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tr(C^k) on the n-th wedge power next to the universal formulas.
    Traces {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Spectrum of the n-th wedge operator grouped by catalog eigenvalue.
    Decompose {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// The full acceptance matrix.
    VerifyAll {
        /// JSON run configuration; defaults apply to missing fields.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated override of the configured algebras.
        #[arg(long, value_delimiter = ',')]
        algebra: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<usize>>,
        #[arg(long)]
        k_max: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulated dimensions and the eigenvalue catalog as JSON.
    Tables {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    max_wedge_dim: Option<i64>,
    #[arg(long)]
    primes: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Text => Format::Text,
        }
    }
}

/// Exit-code contract: 0 pass, 1 mathematical mismatch, 2 usage, 3 cap.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::ResourceCap(_) => 3,
            Error::UnsupportedAlgebra(_)
            | Error::Parse(_)
            | Error::MissingParameter(..)
            | Error::NoFormula(_)
            | Error::FormulaNotPrinted { .. }
            | Error::SlotOutOfRange { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn caps(max_wedge_dim: Option<i64>, base: Caps) -> Result<Caps, Failure> {
    let mut caps = base;
    if let Some(m) = max_wedge_dim {
        if m <= 0 {
            return Err(Error::ResourceCap(format!("max wedge dimension {m} is not positive")).into());
        }
        caps.max_wedge_dim = m as usize;
    }
    Ok(caps)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            let tail = if text.ends_with('\n') { "" } else { "\n" };
            // a closed pipe (`| head`) is not an error worth reporting
            let _ = out
                .write_all(text.as_bytes())
                .and_then(|_| out.write_all(tail.as_bytes()));
            Ok(())
        }
    }
}

fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("flat rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn render_traces(r: &TraceReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => to_csv(&r.rows),
        Format::Text => {
            let mut s = format!("{} n={} wedge dim {}\n", r.algebra, r.n, r.wedge_dim);
            for row in &r.rows {
                let verdict = match row.matched {
                    Some(true) => "match",
                    Some(false) => "MISMATCH",
                    None => "no formula",
                };
                let f = row.formula.as_deref().unwrap_or("-");
                s.push_str(&format!("  k={}  {:>16}  {:>16}  {verdict}\n", row.k, row.computed, f));
            }
            s
        }
    }
}

#[derive(Serialize)]
struct GroupLine<'a> {
    lambda: &'a str,
    expected: &'a str,
    known: &'a str,
    observed: usize,
    status: String,
    solved: String,
}

fn render_decomposition(r: &DecompositionReport, format: Format) -> String {
    let lines: Vec<GroupLine> = r
        .groups
        .iter()
        .map(|g| GroupLine {
            lambda: &g.lambda,
            expected: &g.expected,
            known: &g.known,
            observed: g.observed,
            status: serde_json::to_value(&g.status).unwrap().as_str().unwrap().to_string(),
            solved: g
                .solved
                .as_ref()
                .map_or(String::new(), |s| format!("dim{}={}", s.label, s.dim)),
        })
        .collect();
    match format {
        Format::Json => r.to_json(),
        Format::Csv => to_csv(&lines),
        Format::Text => {
            let mut s = format!("{} n={} wedge dim {} ({:?})\n", r.algebra, r.n, r.wedge_dim, r.scope);
            for l in lines {
                s.push_str(&format!(
                    "  lambda {:>6}  {:<12} observed {:>5}  expected {}  {}\n",
                    l.lambda, l.status, l.observed, l.expected, l.solved
                ));
            }
            s
        }
    }
}

#[derive(Serialize)]
struct CheckLine<'a> {
    criterion: u8,
    name: &'a str,
    pass: bool,
    detail: &'a str,
}

fn render_suite(r: &SuiteReport, format: Format) -> String {
    match format {
        Format::Json => r.to_json(),
        Format::Csv => to_csv(
            &r.checks
                .iter()
                .map(|c| CheckLine {
                    criterion: c.criterion,
                    name: &c.name,
                    pass: c.pass,
                    detail: &c.detail,
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::new();
            for c in &r.checks {
                let mark = if c.pass { "PASS" } else { "FAIL" };
                s.push_str(&format!("[{mark}] {:>2} {:<36} {}\n", c.criterion, c.name, c.detail));
            }
            s.push_str(&format!(
                "status {:?}; seed {}; primes {}\n",
                r.status,
                r.seed,
                r.primes.join(",")
            ));
            for n in &r.notes {
                s.push_str(&format!("note: {n}\n"));
            }
            s
        }
    }
}

fn solver(common: &Common) -> Result<SolverConfig, Failure> {
    let primes = common.primes.unwrap_or(2);
    if primes < 2 {
        return Err(usage("at least two primes are required"));
    }
    Ok(SolverConfig {
        caps: caps(common.max_wedge_dim, Caps::default())?,
        ranks: RankConfig::seeded(common.seed.unwrap_or(0x5eed), primes),
        ..SolverConfig::default()
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build { algebra, out } => {
            let id: AlgebraId = algebra.parse()?;
            let alg = Algebra::build(id)?;
            emit(&AlgebraDocument::new(&alg.f, &alg.metric).to_json(), out.as_ref())
        }
        Command::Traces {
            algebra,
            n,
            k_max,
            common,
        } => {
            let id: AlgebraId = algebra.parse()?;
            let caps = caps(common.max_wedge_dim, Caps::default())?;
            let report = compare_traces(id, n, k_max, &caps)?;
            emit(
                &render_traces(&report, common.format.map_or(Format::Json, Into::into)),
                common.out.as_ref(),
            )?;
            if report.all_matched() {
                Ok(())
            } else {
                Err(Failure {
                    code: 1,
                    message: "computed traces differ from the universal formulas".into(),
                })
            }
        }
        Command::Decompose { algebra, n, common } => {
            let id: AlgebraId = algebra.parse()?;
            let cfg = solver(&common)?;
            let report = verify_decomposition(id, n, &cfg)?;
            emit(
                &render_decomposition(&report, common.format.map_or(Format::Json, Into::into)),
                common.out.as_ref(),
            )?;
            if report.is_consistent() {
                Ok(())
            } else {
                Err(Failure {
                    code: 1,
                    message: "inconsistent eigenvalue groups".into(),
                })
            }
        }
        Command::VerifyAll {
            config,
            algebra,
            n,
            k_max,
            common,
        } => {
            let mut cfg = match &config {
                Some(p) => {
                    let text = fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
                    RunConfig::from_json(&text)?
                }
                None => RunConfig::default(),
            };
            if let Some(a) = algebra {
                cfg.algebras = a;
            }
            if let Some(n) = n {
                cfg.n_values = n;
            }
            if let Some(k) = k_max {
                cfg.k_max = k;
            }
            cfg.caps = caps(common.max_wedge_dim, cfg.caps)?;
            if let Some(p) = common.primes {
                cfg.primes = p;
            }
            if let Some(s) = common.seed {
                cfg.seed = s;
            }
            let mut output = cfg.output.clone().unwrap_or_default();
            if let Some(f) = common.format {
                output.format = f.into();
            }
            if let Some(p) = &common.out {
                output.path = Some(p.display().to_string());
            }
            let report = run_suite(&cfg)?;
            emit(
                &render_suite(&report, output.format),
                output.path.map(PathBuf::from).as_ref(),
            )?;
            match report.status {
                SuiteStatus::Pass => Ok(()),
                SuiteStatus::ResourceCap => Err(Failure {
                    code: 3,
                    message: format!("resource cap hit: {}", report.failed.join(", ")),
                }),
                SuiteStatus::Fail => Err(Failure {
                    code: 1,
                    message: format!("failed: {}", report.failed.join(", ")),
                }),
            }
        }
        Command::Tables { out } => {
            let table = Table2::standard();
            let doc = serde_json::json!({
                "table2": table.to_json(),
                "catalog": Catalog::standard().to_json(&table),
            });
            emit(&json(&doc), out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_codes() {
        assert_eq!(Failure::from(Error::ResourceCap("x".into())).code, 3);
        assert_eq!(Failure::from(Error::UnsupportedAlgebra("e8".into())).code, 2);
        assert_eq!(Failure::from(Error::SpectrumMismatch("x".into())).code, 1);
    }

    #[test]
    fn nonpositive_cap_is_a_cap_error() {
        assert_eq!(caps(Some(0), Caps::default()).unwrap_err().code, 3);
        assert_eq!(caps(Some(5), Caps::default()).unwrap().max_wedge_dim, 5);
    }
}
