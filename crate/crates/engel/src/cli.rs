//! Command-line driver.
//!
//! Exit status: 0 when every non-exploratory claim came out as expected,
//! 1 when some did not, 2 for unreadable or invalid input, 3 when an
//! internal invariant broke.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use engel_core::lie::Strategy;
use engel_core::{Error, Field, Presentation, PrimeField, QuotientAlgebra, Rationals};
use serde_json::json;
use thiserror::Error;

use crate::catalog::{self, element_record, parse_expectations, record, verdict_outcome, Context, Expectation, CLAIMS};
use crate::drivers::{lie_engel_check_par, with_jobs};
use crate::io::{parse_presentation, DocumentError, INSTANCE};
use crate::report::{AlgebraSummary, ClaimRecord, Format, Status, VerificationReport};

#[derive(Debug, Parser)]
#[command(name = "engel", version, about = "Exact Engel-condition checks in nilpotent quotients of free algebras")]
pub struct Cli {
    /// Presentation document; defaults to the built-in instance.
    #[arg(long, global = true, value_name = "PATH")]
    pub spec: Option<PathBuf>,
    /// Override the characteristic of the document (0 or a prime).
    #[arg(long = "char", global = true, value_name = "P")]
    pub characteristic: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, env = "ENGEL_JOBS")]
    pub jobs: Option<usize>,
    /// Seed for the randomized property claims.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Record per-claim wall-clock time (makes reports non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the quotient and print its dimensions.
    Build,
    /// List the basis words and the rewrite rules for eliminated words.
    Basis,
    /// Run the claim catalog, or single Engel checks when requested.
    Verify(VerifyArgs),
    /// Search for a witness to the failure of an Engel condition.
    Witness(EngelArgs),
    /// Run the BCH-group claims.
    Bch,
    /// Evaluate the 5-Engel witness and both 5-Engel conditions over prime fields.
    CharScan {
        #[arg(value_delimiter = ',', default_value = "2,3,5,7")]
        primes: Vec<u64>,
    },
    /// Run the claim catalog and write the report (JSON unless --format says otherwise).
    Report {
        #[arg(long, value_name = "PATH")]
        claims: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct EngelArgs {
    /// Check [u, (n) v] = 0.
    #[arg(long, value_name = "N")]
    pub lie_engel: Vec<usize>,
    /// Check ((1+u), (n) (1+v)) = 1.
    #[arg(long, value_name = "N")]
    pub group_engel: Vec<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Symbolic)]
    pub strategy: StrategyArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub engel: EngelArgs,
    /// Expected outcome of the single checks.
    #[arg(long, value_enum, default_value_t = Expect::Pass)]
    pub expect: Expect,
    /// Claims file for the catalog run; defaults to the shipped one.
    #[arg(long, value_name = "PATH")]
    pub claims: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StrategyArg {
    Symbolic,
    Symmetrized,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Symbolic => Strategy::Symbolic,
            StrategyArg::Symmetrized => Strategy::Symmetrized,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Expect {
    Pass,
    Fail,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
    #[error(transparent)]
    Engine(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("report invariant violated: {0}")]
    Report(String),
}

impl From<engel_core::PresentationError> for CliError {
    fn from(e: engel_core::PresentationError) -> Self {
        CliError::Engine(e.into())
    }
}

impl From<engel_core::ScalarError> for CliError {
    fn from(e: engel_core::ScalarError) -> Self {
        CliError::Engine(e.into())
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        let breach = |e: &Error| matches!(e, Error::InvariantBreach(_));
        match self {
            CliError::Engine(e) if breach(e) => 3,
            CliError::Catalog(catalog::CatalogError::Engine { source, .. }) if breach(source) => 3,
            CliError::Report(_) => 3,
            _ => 2,
        }
    }
}

/// What a command produced: text ready to print, and whether every claim
/// matched its expectation.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.clone(),
        source,
    })
}

fn load_spec(cli: &Cli) -> Result<Presentation, CliError> {
    let text = match &cli.spec {
        Some(p) => read(p)?,
        None => INSTANCE.to_string(),
    };
    let spec = parse_presentation(&text)?;
    Ok(match cli.characteristic {
        Some(p) => spec.with_characteristic(p)?,
        None => spec,
    })
}

fn expectations(path: &Option<PathBuf>) -> Result<Vec<Expectation>, CliError> {
    let text = match path {
        Some(p) => read(p)?,
        None => CLAIMS.to_string(),
    };
    Ok(parse_expectations(&text)?)
}

fn finish(report: VerificationReport, format: Format) -> Result<Output, CliError> {
    report.check_invariants().map_err(CliError::Report)?;
    Ok(Output {
        ok: report.all_match(),
        text: report.render(format),
    })
}

fn catalog_report(
    cli: &Cli,
    spec: Presentation,
    exp: &[Expectation],
    format: Format,
) -> Result<Output, CliError> {
    let ctx = Context::new(spec, cli.seed)?;
    let alg = QuotientAlgebra::build(ctx.spec(), Rationals)?;
    let mut report = VerificationReport::new(AlgebraSummary::of(&alg));
    report.claims = catalog::run(&ctx, exp, cli.timing)?
        .into_iter()
        .map(|(_, c)| c)
        .collect();
    finish(report, format)
}

fn engel_claims<K>(
    alg: &QuotientAlgebra<K>,
    args: &EngelArgs,
    expect: Status,
) -> Result<Vec<ClaimRecord>, Error>
where
    K: Field + Send + Sync,
    K::Elem: Send + Sync,
{
    let p = alg.field().characteristic();
    let expected = if alg.presentation().outside_theorem_hypotheses() {
        Status::Exploratory
    } else {
        expect
    };
    let mut out = Vec::new();
    for &n in &args.lie_engel {
        let v = lie_engel_check_par(alg, n, args.strategy.into())?;
        out.push(record(
            &format!("lie-engel-{n}"),
            &format!("[u, ({n}) v] = 0 for all u, v (characteristic {p})"),
            "command line".into(),
            expected,
            verdict_outcome(alg, &v),
            None,
        ));
    }
    for &n in &args.group_engel {
        let v = engel_core::group::group_engel_check(alg, n)?;
        out.push(record(
            &format!("group-engel-{n}"),
            &format!("((1+u), ({n}) (1+v)) = 1 for all u, v (characteristic {p})"),
            "command line".into(),
            expected,
            verdict_outcome(alg, &v),
            None,
        ));
    }
    Ok(out)
}

fn engel_report(spec: &Presentation, args: &EngelArgs, expect: Status, format: Format) -> Result<Output, CliError> {
    if args.lie_engel.is_empty() && args.group_engel.is_empty() {
        return Err(CliError::Usage("give --lie-engel N or --group-engel N".into()));
    }
    let report = match spec.characteristic() {
        0 => {
            let alg = QuotientAlgebra::build(spec, Rationals)?;
            VerificationReport {
                claims: engel_claims(&alg, args, expect)?,
                algebra: AlgebraSummary::of(&alg),
            }
        }
        p => {
            let alg = QuotientAlgebra::build(spec, PrimeField::new(p)?)?;
            VerificationReport {
                claims: engel_claims(&alg, args, expect)?,
                algebra: AlgebraSummary::of(&alg),
            }
        }
    };
    finish(report, format)
}

fn basis_listing<K: Field>(alg: &QuotientAlgebra<K>, format: Format) -> String {
    let names = alg.generators();
    let r = alg.arith();
    let words: Vec<_> = alg.basis().iter().map(|w| w.render(names)).collect();
    let rewrites: Vec<(String, String)> = alg
        .rewrites()
        .iter()
        .map(|rw| {
            let mut coords = vec![alg.field().zero(); alg.dim()];
            for (i, c) in &rw.tail {
                coords[*i] = c.clone();
            }
            (rw.word.render(names), r.render(&r.from_coords(coords)))
        })
        .collect();
    match format {
        Format::Json => {
            let basis: Vec<_> = words
                .iter()
                .enumerate()
                .map(|(i, w)| json!({"index": i, "degree": alg.degree(i), "word": w}))
                .collect();
            let rw: Vec<_> = rewrites.iter().map(|(w, t)| json!({"word": w, "equals": t})).collect();
            let mut s = serde_json::to_string_pretty(&json!({"basis": basis, "rewrites": rw})).expect("json");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (i, w) in words.iter().enumerate() {
                s.push_str(&format!("e{i:<3} degree {}  {w}\n", alg.degree(i)));
            }
            for (w, t) in &rewrites {
                s.push_str(&format!("{w} = {t}\n"));
            }
            s
        }
    }
}

fn char_scan(spec: &Presentation, primes: &[u64], format: Format) -> Result<Output, CliError> {
    let alg = QuotientAlgebra::build(spec, Rationals)?;
    let mut report = VerificationReport::new(AlgebraSummary::of(&alg));
    for e in engel_core::group::characteristic_scan(spec, primes)? {
        let p = e.characteristic;
        let vanishes = 6 % p == 0;
        let is_zero = e.witness_part.coords().iter().all(|&c| c == 0);
        let alg_p = QuotientAlgebra::build(&spec.with_characteristic(p)?, PrimeField::new(p)?)?;
        let r = alg_p.arith();
        let args = [r.generator(0), r.generator(1)];
        let part = element_record(&alg_p, &args, &e.witness_part);
        let outcome = |holds: bool, witness| catalog::Outcome { holds, witness };
        report.claims.push(record(
            &format!("char-scan.f{p}.witness"),
            &format!(
                "over F_{p} the part of the 5-Engel word at the generators is {} ({})",
                e.witness_rendered,
                if vanishes { "expected zero" } else { "expected nonzero" }
            ),
            "characteristic scan".into(),
            Status::Pass,
            outcome(is_zero == vanishes, (is_zero != vanishes).then(|| part.clone())),
            None,
        ));
        let expected = |s| if e.outside_theorem_hypotheses { Status::Exploratory } else { s };
        report.claims.push(record(
            &format!("char-scan.f{p}.lie-engel-5"),
            &format!("the Lie algebra over F_{p} is 5-Engel"),
            "characteristic scan".into(),
            expected(Status::Pass),
            outcome(e.lie_five_engel, None),
            None,
        ));
        let witness = (!e.group_five_engel).then(|| part.clone());
        report.claims.push(record(
            &format!("char-scan.f{p}.group-engel-5"),
            &format!("1 + B over F_{p} is 5-Engel"),
            "characteristic scan".into(),
            expected(Status::Fail),
            outcome(e.group_five_engel, witness),
            None,
        ));
    }
    finish(report, format)
}

/// Runs a parsed invocation.
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let spec = load_spec(cli)?;
    let text = cli.format.unwrap_or(Format::Text);
    match &cli.command {
        Command::Build => {
            let r = match spec.characteristic() {
                0 => AlgebraSummary::of(&QuotientAlgebra::build(&spec, Rationals)?),
                p => AlgebraSummary::of(&QuotientAlgebra::build(&spec, PrimeField::new(p)?)?),
            };
            finish(VerificationReport::new(r), text)
        }
        Command::Basis => {
            let listing = match spec.characteristic() {
                0 => basis_listing(&QuotientAlgebra::build(&spec, Rationals)?, text),
                p => basis_listing(&QuotientAlgebra::build(&spec, PrimeField::new(p)?)?, text),
            };
            Ok(Output { text: listing, ok: true })
        }
        Command::Verify(v) => {
            if v.engel.lie_engel.is_empty() && v.engel.group_engel.is_empty() {
                catalog_report(cli, spec, &expectations(&v.claims)?, text)
            } else {
                let expect = match v.expect {
                    Expect::Pass => Status::Pass,
                    Expect::Fail => Status::Fail,
                };
                engel_report(&spec, &v.engel, expect, text)
            }
        }
        Command::Witness(e) => engel_report(&spec, e, Status::Fail, text),
        Command::Bch => {
            let ids: Vec<Expectation> = expectations(&None)?
                .into_iter()
                .filter(|e| e.id.starts_with("bch."))
                .collect();
            catalog_report(cli, spec, &ids, text)
        }
        Command::CharScan { primes } => char_scan(&spec, primes, text),
        Command::Report { claims } => {
            catalog_report(cli, spec, &expectations(claims)?, cli.format.unwrap_or(Format::Json))
        }
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match with_jobs(cli.jobs, || execute(&cli)) {
        Ok(out) => {
            match &cli.output {
                Some(path) => {
                    if let Err(source) = std::fs::write(path, &out.text) {
                        let e = CliError::Write { path: path.clone(), source };
                        eprintln!("error: {e}");
                        return ExitCode::from(e.exit_code());
                    }
                }
                None => print!("{}", out.text),
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
