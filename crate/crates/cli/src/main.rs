use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use skewrank_core::goldie::goldie_rank;
use skewrank_core::ideal::{alpha_orbit, Ideal};
use skewrank_core::module::{uniform_dimension, FiniteModule};
use skewrank_core::primes::is_alpha_prime;
use skewrank_core::quotient::quotient_algebra;
use skewrank_core::radical::{is_semiprime, jacobson_radical};
use skewrank_core::scenario::{selftest, verify_context, VerifyOptions};
use skewrank_core::spec_doc::{self, SeriesDoc};
use skewrank_core::truncation::{
    alpha_prime_transfer, build_truncation, induced_ideal_truncated, verify_induced_corollary,
};
use skewrank_core::{Error, Limits, Report, SkewContext};

#[derive(Parser, Debug)]
#[command(name = "skewrank", version, about = "Skew power series and Laurent series over finite F_p-algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Ring spec (JSON).
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    /// Series document (JSON).
    #[arg(long, global = true)]
    series: Option<PathBuf>,
    /// Ideal generators, e.g. "1,0,0,0;0,1,0,0".
    #[arg(long, global = true)]
    ideal: Option<String>,
    #[arg(long, global = true, default_value_t = 8)]
    precision: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Brute-force cross-checks.
    #[arg(long, global = true, value_enum, default_value_t = Toggle::On)]
    oracle: Toggle,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Check the ring file's axioms and automorphism.
    Validate,
    /// Goldie rank and semiprimality of the coefficient algebra.
    Rank,
    /// Alpha-primeness of an ideal (default: zero) and the transfer to series rings.
    AlphaPrime,
    /// Invert a series with unit constant term, or a Laurent series with unit leading term.
    Invert,
    /// Induced ideal of an alpha-ideal in the truncation.
    Induced,
    /// All scenarios on one context.
    Verify,
    /// All scenarios on the built-in suite.
    Selftest,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Toggle {
    On,
    Off,
}

const EXIT_CLAIM_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_TOO_LARGE: u8 = 3;

enum Failure {
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

enum Output {
    Report(Report),
    Document(String),
}

fn read(path: &Option<PathBuf>, flag: &str) -> Result<String, Failure> {
    let path = path
        .as_ref()
        .ok_or_else(|| Failure::Input(format!("--{flag} is required")))?;
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn context(cli: &Cli) -> Result<Arc<SkewContext>, Failure> {
    Ok(spec_doc::parse_context(&read(&cli.spec, "spec")?)?)
}

fn ideal_arg(cli: &Cli, ctx: &SkewContext, required: bool) -> Result<Ideal, Failure> {
    let alg = ctx.algebra();
    match &cli.ideal {
        Some(text) => {
            let gens = spec_doc::parse_vectors(text, alg.dim(), alg.field().p())?;
            Ok(Ideal::generated_by(alg, &gens))
        }
        None if required => Err(Failure::Input("--ideal is required".into())),
        None => Ok(Ideal::zero(alg)),
    }
}

fn cmd_validate(cli: &Cli, started: Instant) -> Result<Output, Failure> {
    let ctx = context(cli)?;
    let alg = ctx.algebra();
    let mut r = Report::new("validate");
    r.check(
        "algebra_axioms",
        true,
        json!({"p": alg.field().p(), "dim": alg.dim(), "basis": alg.basis_names()}),
    );
    r.check(
        "automorphism",
        true,
        json!({"order": ctx.alpha().order(), "identity": ctx.alpha().is_identity()}),
    );
    Ok(Output::Report(r.finish(started)))
}

fn cmd_rank(cli: &Cli, limits: &Limits, started: Instant) -> Result<Output, Failure> {
    let ctx = context(cli)?;
    let alg = ctx.algebra();
    let mut r = Report::new("rank");
    let radical = jacobson_radical(alg)?;
    let semiprime = is_semiprime(alg, limits)?;
    r.check(
        "semiprime",
        true,
        json!({"semiprime": semiprime, "radical_dim": radical.dim()}),
    );
    if semiprime {
        r.check("goldie_rank", true, json!({"rank": goldie_rank(alg, limits)?}));
    } else {
        let regular = FiniteModule::regular(alg.clone());
        r.check(
            "right_uniform_dimension",
            true,
            json!({"udim": uniform_dimension(&regular, limits)?}),
        );
    }
    Ok(Output::Report(r.finish(started)))
}

fn cmd_alpha_prime(cli: &Cli, limits: &Limits, started: Instant) -> Result<Output, Failure> {
    let ctx = context(cli)?;
    let alg = ctx.algebra();
    let ideal = ideal_arg(cli, &ctx, false)?;
    let mut r = Report::new("alpha-prime");
    if ideal.is_zero() {
        r.absorb("transfer", alpha_prime_transfer(&ctx, cli.precision, limits)?);
    } else {
        let verdict = is_alpha_prime(alg, ctx.alpha(), &ideal, limits)?;
        let orbit: Vec<String> = alpha_orbit(&ideal, ctx.alpha())
            .iter()
            .map(|i| i.format(alg))
            .collect();
        r.check(
            "alpha_prime",
            true,
            json!({"ideal": ideal.format(alg), "alpha_prime": verdict, "orbit": orbit}),
        );
    }
    Ok(Output::Report(r.finish(started)))
}

fn cmd_invert(cli: &Cli) -> Result<Output, Failure> {
    let ctx = context(cli)?;
    let doc = SeriesDoc::parse(&read(&cli.series, "series")?)?;
    let out = if doc.valuation.is_some() {
        SeriesDoc::from_laurent(&doc.to_laurent(&ctx)?.inverse()?)
    } else {
        let mut f = doc.to_series(&ctx)?;
        if cli.precision < f.precision() {
            f = f.truncate(cli.precision);
        }
        SeriesDoc::from_series(&f.invert_unit()?)
    };
    Ok(Output::Document(out.to_json()))
}

fn cmd_induced(cli: &Cli, limits: &Limits, started: Instant) -> Result<Output, Failure> {
    let ctx = context(cli)?;
    let alg = ctx.algebra();
    let ideal = ideal_arg(cli, &ctx, true)?;
    let t = build_truncation(&ctx, cli.precision, limits)?;
    let mut r = Report::new(format!("induced {} at N = {}", ideal.format(alg), cli.precision));
    r.absorb("induced", induced_ideal_truncated(&ideal, &t, limits)?.report);
    if !ideal.is_whole() && jacobson_radical(&quotient_algebra(alg, &ideal)?.algebra)?.is_zero() {
        r.absorb(
            "corollary",
            verify_induced_corollary(&ctx, &ideal, cli.precision, limits)?,
        );
    }
    Ok(Output::Report(r.finish(started)))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let started = Instant::now();
    let mut limits = Limits::from_env();
    limits.oracles = cli.oracle == Toggle::On;
    if cli.precision == 0 {
        return Err(Failure::Input("--precision must be positive".into()));
    }
    let options = VerifyOptions {
        precision: cli.precision,
        samples: 1000,
        ..VerifyOptions::default()
    };
    match cli.command {
        Command::Validate => cmd_validate(cli, started),
        Command::Rank => cmd_rank(cli, &limits, started),
        Command::AlphaPrime => cmd_alpha_prime(cli, &limits, started),
        Command::Invert => cmd_invert(cli),
        Command::Induced => cmd_induced(cli, &limits, started),
        Command::Verify => {
            let ctx = context(cli)?;
            let name = cli
                .spec
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_default();
            Ok(Output::Report(verify_context(&name, &ctx, &options, &limits)?))
        }
        Command::Selftest => Ok(Output::Report(selftest(&options, &limits)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Document(doc)) => {
            println!("{doc}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(report)) => {
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                for c in report.failures() {
                    eprintln!("failed claim {}: {}", c.name, c.witness);
                }
                ExitCode::from(EXIT_CLAIM_FAILED)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::TooLarge { .. } => EXIT_TOO_LARGE,
                Error::Inconsistent(_) => EXIT_CLAIM_FAILED,
                _ => EXIT_INPUT,
            })
        }
    }
}
