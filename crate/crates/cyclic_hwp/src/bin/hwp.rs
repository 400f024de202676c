use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cyclic_hwp::certificate::{Certificate, ReportSummary, Verification};
use cyclic_hwp::verify::{CoverageReport, FactorId};
use cyclic_hwp::{
    assemble, check_base, check_factorization, develop, generate_skolem, Error, Params, Vertex,
};

/// Cyclic Hamilton-Waterloo solutions: generate, verify and develop base cycles.
#[derive(Parser)]
#[command(name = "hwp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the base cycles for short length ELL and multiplier N.
    Generate {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Level::None)]
        verify: Level,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Include the sign maps in the certificate.
        #[arg(long)]
        emit_maps: bool,
    },
    /// Check a certificate (JSON or text).
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = CheckLevel::Base)]
        level: CheckLevel,
    },
    /// Print a Skolem sequence.
    Skolem {
        #[arg(long)]
        order: u32,
    },
    /// Expand a certificate into 2-factors.
    Develop {
        #[arg(long)]
        input: PathBuf,
        /// Emit only this factor; without it a summary of all factors is printed.
        #[arg(long)]
        factor_index: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    None,
    Base,
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckLevel {
    Base,
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

enum Failure {
    Invalid(String),
    Unverified,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn read_certificate(path: &Path) -> Result<Certificate, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(Certificate::parse(&text)?)
}

/// Base report, plus the full edge-level report when requested and the base passed.
fn run_checks(
    base: &cyclic_hwp::BaseCycleSet,
    full: bool,
) -> (CoverageReport, Option<CoverageReport>) {
    let report = check_base(base);
    let full_report = (full && report.ok).then(|| {
        let fact = develop(base, &report).expect("report passed for this base");
        check_factorization(&fact, &base.params)
    });
    (report, full_report)
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    ok: bool,
    base: &'a CoverageReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    full: Option<&'a CoverageReport>,
}

fn all_ok(base: &CoverageReport, full: Option<&CoverageReport>, want_full: bool) -> bool {
    base.ok && (!want_full || full.is_some_and(|r| r.ok))
}

fn generate(
    ell: u32,
    n: u32,
    level: Level,
    format: Format,
    output: Option<&Path>,
    emit_maps: bool,
) -> Result<(), Failure> {
    let p = Params::new(ell, n)?;
    let base = assemble(&p)?;
    let mut cert = Certificate::from_base(&base, emit_maps);
    let mut ok = true;
    if level != Level::None {
        let (b, f) = run_checks(&base, level == Level::Full);
        ok = all_ok(&b, f.as_ref(), level == Level::Full);
        cert.verification = Some(Verification {
            base: Some(ReportSummary::from(&b)),
            full: f.as_ref().map(ReportSummary::from),
        });
    }
    let text = match format {
        Format::Json => cert.to_json(),
        Format::Text => cert.to_text(),
    };
    emit(output, &text)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Unverified)
    }
}

fn verify(input: &Path, level: CheckLevel) -> Result<(), Failure> {
    let base = read_certificate(input)?.to_base()?;
    let want_full = level == CheckLevel::Full;
    let (b, f) = run_checks(&base, want_full);
    let ok = all_ok(&b, f.as_ref(), want_full);
    let out = VerifyOutput {
        ok,
        base: &b,
        full: f.as_ref(),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).expect("report serializes")
    );
    if ok {
        Ok(())
    } else {
        Err(Failure::Unverified)
    }
}

#[derive(Serialize)]
struct FactorOutput {
    index: usize,
    id: FactorId,
    cycle_length: usize,
    cycles: Vec<Vec<Vertex>>,
}

#[derive(Serialize)]
struct DevelopSummary {
    factors: usize,
    short_factors: usize,
    long_factors: usize,
    short_cycle_length: u32,
    long_cycle_length: u32,
}

fn develop_cmd(input: &Path, index: Option<usize>, output: Option<&Path>) -> Result<(), Failure> {
    let base = read_certificate(input)?.to_base()?;
    let report = check_base(&base);
    if !report.ok {
        eprintln!("base cycles fail the difference check");
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
        return Err(Failure::Unverified);
    }
    let fact = develop(&base, &report)?;
    let text = match index {
        Some(i) => {
            let f = fact.factor(i).ok_or_else(|| {
                Failure::Invalid(format!("factor index {i} out of range 0..{}", fact.len()))
            })?;
            let out = FactorOutput {
                index: i,
                id: f.id,
                cycle_length: f.cycles[0].len(),
                cycles: f.cycles.into_iter().map(|c| c.0).collect(),
            };
            serde_json::to_string(&out).expect("factor serializes")
        }
        None => serde_json::to_string_pretty(&DevelopSummary {
            factors: fact.len(),
            short_factors: fact.short_count(),
            long_factors: fact.long_count(),
            short_cycle_length: base.params.ell,
            long_cycle_length: base.params.long_len,
        })
        .expect("summary serializes"),
    };
    emit(output, &(text + "\n"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Generate {
            ell,
            n,
            verify,
            format,
            output,
            emit_maps,
        } => generate(ell, n, verify, format, output.as_deref(), emit_maps),
        Command::Verify { input, level } => verify(&input, level),
        Command::Skolem { order } => generate_skolem(order).map_err(Failure::from).map(|s| {
            println!(
                "{}",
                serde_json::to_string(&s).expect("sequence serializes")
            );
        }),
        Command::Develop {
            input,
            factor_index,
            output,
        } => develop_cmd(&input, factor_index, output.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Unverified) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
