//! The `hurwitz-phi` command line.
//!
//! Results go to `out`, diagnostics to `err`. Exit codes: 0 success,
//! 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::monodromy::{
    oracle_phi, realize, verify_certificate, MonodromyCertificate, OracleOutcome, Realization, SearchBudget,
    DEFAULT_BUDGET, DEFAULT_SEED,
};
use crate::patterson::{enumerate_covering_data, patterson_feasible};
use crate::phi::{phi, phi_table, PhiResult};
use crate::sphere::classify_sphere_pair;
use crate::surface::{CoveringData, RamificationProfile, Surface};
use crate::volume::volume_ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Tsv,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "hurwitz-phi", version, about = "Minimal critical points of maps between closed surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// φ(Σ_G, Σ_g) with its witness covering data.
    Phi {
        #[arg(long)]
        source_genus: u32,
        #[arg(long)]
        target_genus: u32,
        /// Also search for and print a monodromy certificate for the witness.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// φ(Σ_G, Σ_g) for G = 0..=N.
    Table {
        #[arg(long)]
        target_genus: u32,
        #[arg(long)]
        max_source_genus: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Search for a monodromy certificate and write it as JSON.
    Realize {
        #[arg(long)]
        target_genus: u32,
        #[arg(long)]
        degree: u32,
        /// Comma-separated multiplicities; empty for an unramified cover.
        #[arg(long, value_parser = parse_profile, allow_hyphen_values = true)]
        profile: RamificationProfile,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a certificate file.
    VerifyCert {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// What is known about φ(S^M, S^N).
    SpherePhi {
        m: u32,
        n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Simplicial-volume ratio ‖Σ_G‖/‖Σ_g‖ mod ℤ.
    VolumeRatio {
        source_genus: u32,
        target_genus: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Brute-force upper bound for φ by scanning covering data.
    OraclePhi {
        source_genus: u32,
        target_genus: u32,
        #[arg(long)]
        max_k: u32,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// All covering data with k critical points and degree <= D.
    Enumerate {
        #[arg(long, allow_hyphen_values = true)]
        source_euler: i64,
        #[arg(long)]
        target_genus: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Patterson's existence criterion for a target of genus >= 1.
    Feasible {
        #[arg(long)]
        target_genus: u32,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_parser = parse_profile, allow_hyphen_values = true)]
        profile: RamificationProfile,
    },
}

fn parse_profile(s: &str) -> Result<RamificationProfile, String> {
    let ms = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|e| format!("bad multiplicity {t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    RamificationProfile::new(ms).map_err(|e| e.to_string())
}

enum Failure {
    Domain(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

type CmdResult = Result<(), Failure>;

pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(command: Command, out: &mut impl Write, err: &mut impl Write) -> CmdResult {
    match command {
        Command::Phi { source_genus, target_genus, witness, format } => {
            cmd_phi(Surface::new(source_genus), Surface::new(target_genus), witness, format, out)
        }
        Command::Table { target_genus, max_source_genus, format } => {
            cmd_table(target_genus, max_source_genus, format, out)
        }
        Command::Realize { target_genus, degree, profile, seed, budget, out: path } => {
            let budget = SearchBudget { max_evaluations: budget, seed };
            cmd_realize(Surface::new(target_genus), degree, &profile, budget, path, out, err)
        }
        Command::VerifyCert { file, format } => cmd_verify(&file, format, out),
        Command::SpherePhi { m, n, format } => {
            let r = classify_sphere_pair(m, n)?;
            match format {
                OutputFormat::Json => write_json(out, &r),
                _ => Ok(writeln!(out, "{r}")?),
            }
        }
        Command::VolumeRatio { source_genus, target_genus, format } => {
            let r = volume_ratio(Surface::new(source_genus), Surface::new(target_genus))?;
            match format {
                OutputFormat::Json => write_json(out, &r),
                _ => Ok(writeln!(out, "{r}")?),
            }
        }
        Command::OraclePhi { source_genus, target_genus, max_k, max_degree, budget, format } => {
            let budget = SearchBudget { max_evaluations: budget, seed: DEFAULT_SEED };
            let r = oracle_phi(Surface::new(source_genus), Surface::new(target_genus), max_k, max_degree, budget);
            match (format, &r) {
                (OutputFormat::Json, _) => write_json(out, &r),
                (_, OracleOutcome::Finite { k, witness, .. }) => Ok(writeln!(out, "{k}\n{witness}")?),
                (_, OracleOutcome::NoneFoundWithin { max_k, max_degree }) => {
                    Ok(writeln!(out, "none within k<={max_k} d<={max_degree}")?)
                }
            }
        }
        Command::Enumerate { source_euler, target_genus, k, max_degree, format } => {
            let e = enumerate_covering_data(source_euler, Surface::new(target_genus), k, max_degree)?;
            match format {
                OutputFormat::Json => write_json(out, &e.data),
                OutputFormat::Tsv | OutputFormat::Csv => {
                    let mut w = table_writer(out, format);
                    w.write_record(["d", "profile", "source_euler"])?;
                    for c in &e.data {
                        w.write_record([
                            c.degree().to_string(),
                            c.profile().to_string(),
                            c.source_euler().to_string(),
                        ])?;
                    }
                    w.flush()?;
                    Ok(())
                }
            }
        }
        Command::Feasible { target_genus, degree, profile } => {
            let ok = patterson_feasible(Surface::new(target_genus), degree, &profile)?;
            Ok(writeln!(out, "{ok}")?)
        }
    }
}

fn write_json<T: Serialize + ?Sized>(out: &mut impl Write, value: &T) -> CmdResult {
    let text = serde_json::to_string(value).map_err(|e| Failure::Domain(e.to_string()))?;
    Ok(writeln!(out, "{text}")?)
}

fn table_writer<W: Write>(out: W, format: OutputFormat) -> csv::Writer<W> {
    let delimiter = if format == OutputFormat::Csv { b',' } else { b'\t' };
    csv::WriterBuilder::new().delimiter(delimiter).from_writer(out)
}

fn witness_cell(r: &PhiResult) -> String {
    match r {
        PhiResult::Finite { witness: Some(w), .. } => w.to_string(),
        PhiResult::Finite { witness: None, .. } => String::new(),
        PhiResult::Infinite { case } => format!("case {}", case.tag()),
    }
}

fn phi_cell(r: &PhiResult) -> String {
    match r.value() {
        Some(k) => k.to_string(),
        None => "infinite".to_string(),
    }
}

fn cmd_phi(source: Surface, target: Surface, witness: bool, format: OutputFormat, out: &mut impl Write) -> CmdResult {
    let r = phi(source, target);
    let certificate = match (&r, witness) {
        (PhiResult::Finite { witness: Some(w), .. }, true) => Some(certify(w)?),
        (PhiResult::Infinite { .. }, true) => {
            return Err(Failure::Domain(format!("φ({source}, {target}) is infinite; there is no witness")));
        }
        _ => None,
    };
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct WithCertificate<'a> {
                #[serde(flatten)]
                phi: &'a PhiResult,
                certificate: Option<serde_json::Value>,
            }
            match certificate {
                None => write_json(out, &r),
                Some(c) => {
                    let value = serde_json::from_str(&c.to_json()).expect("certificate JSON");
                    write_json(out, &WithCertificate { phi: &r, certificate: Some(value) })
                }
            }
        }
        OutputFormat::Tsv | OutputFormat::Csv => {
            writeln!(out, "{r}")?;
            if let Some(w) = r.witness() {
                writeln!(out, "{w}")?;
            }
            if let Some(c) = certificate {
                out.write_all(c.to_json().as_bytes())?;
            }
            Ok(())
        }
    }
}

fn certify(w: &CoveringData) -> Result<MonodromyCertificate, Failure> {
    match realize(w.target(), w.degree(), w.profile(), SearchBudget::default()) {
        Realization::Certificate(c) => Ok(c),
        Realization::Infeasible(reason) => Err(Failure::Domain(format!("witness {w} is not realizable: {reason}"))),
        Realization::NotFound { evaluations } => {
            Err(Failure::Domain(format!("no certificate for witness {w} within {evaluations} evaluations")))
        }
    }
}

fn cmd_table(target_genus: u32, max_source_genus: u32, format: OutputFormat, out: &mut impl Write) -> CmdResult {
    let rows = phi_table(target_genus, max_source_genus);
    match format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                #[serde(rename = "G")]
                source_genus: u32,
                phi: &'a PhiResult,
            }
            let rows: Vec<Row> = rows.iter().map(|(g, r)| Row { source_genus: *g, phi: r }).collect();
            write_json(out, &rows)
        }
        OutputFormat::Tsv | OutputFormat::Csv => {
            let mut w = table_writer(out, format);
            w.write_record(["G", "phi", "witness"])?;
            for (g, r) in &rows {
                w.write_record([g.to_string(), phi_cell(r), witness_cell(r)])?;
            }
            w.flush()?;
            Ok(())
        }
    }
}

fn cmd_realize(
    target: Surface,
    degree: u32,
    profile: &RamificationProfile,
    budget: SearchBudget,
    path: Option<PathBuf>,
    out: &mut impl Write,
    err: &mut impl Write,
) -> CmdResult {
    match realize(target, degree, profile, budget) {
        Realization::Certificate(cert) => {
            let text = cert.to_json();
            match path {
                Some(p) => {
                    fs::write(&p, &text)?;
                    writeln!(err, "wrote {}", p.display())?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(())
        }
        Realization::Infeasible(reason) => Err(Failure::Domain(format!("infeasible: {reason}"))),
        Realization::NotFound { evaluations } => Err(Failure::Domain(format!(
            "not found within {evaluations} evaluations (this is not a proof of nonexistence)"
        ))),
    }
}

fn cmd_verify(file: &PathBuf, format: OutputFormat, out: &mut impl Write) -> CmdResult {
    let text = fs::read_to_string(file)?;
    let cert = MonodromyCertificate::from_json(&text)?;
    let report = verify_certificate(&cert)?;
    match format {
        OutputFormat::Json => write_json(out, &report)?,
        _ => {
            writeln!(out, "{}", if report.valid { "valid" } else { "invalid" })?;
            for v in &report.violations {
                writeln!(out, "violation: {v}")?;
            }
            writeln!(out, "source_euler={}", report.computed_source_euler)?;
        }
    }
    if report.valid {
        Ok(())
    } else {
        Err(Failure::Domain(format!("{} violation(s)", report.violations.len())))
    }
}
