use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use belyi_core::derive::pipeline::{DeriveOptions, Stage, run_derivation};
use belyi_core::derive::symbolic::AnsatzState;
use belyi_core::poly::{UPoly, parse_poly, parse_rational_poly, resultant};
use belyi_core::scalars::QuadExt;
use belyi_core::series::{Branch, LocalPlace, MAX_TERMS, expand_y};
use belyi_core::verify::{ClaimFile, Gamma, bundled_claim, certify};

mod config;

use config::{CliError, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "belyi", version, about = "Derive and certify the degree-eight genus-one Belyi pairs")]
struct Cli {
    /// Working precision in bits for numeric stages.
    #[arg(long, global = true, default_value_t = 256)]
    precision: u32,
    /// Largest truncation order accepted for series.
    #[arg(long, global = true, default_value_t = MAX_TERMS)]
    cap: usize,
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the elimination and certify both pairs.
    Derive {
        #[arg(long)]
        stop_after: Option<Stage>,
    },
    /// Certify a claim file, or a bundled claim selected by sign.
    Verify {
        #[arg(long, conflicts_with = "gamma")]
        claim: Option<PathBuf>,
        #[arg(long)]
        gamma: Option<Gamma>,
    },
    /// j-invariant of a bundled curve or of `y^2 = f(x)`.
    Jinv {
        #[arg(long, conflicts_with = "poly")]
        gamma: Option<Gamma>,
        #[arg(long)]
        poly: Option<String>,
    },
    /// Local expansion of `x` and `y` at a place of the symbolic quartic model.
    Expand {
        /// One of A1, C1, C2.
        #[arg(long)]
        place: String,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Resultant of two polynomials with respect to a variable.
    Resultant { p: String, q: String, var: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let cfg = RunConfig::new(cli.precision, cli.cap, cli.out.clone())?;
    match cli.command {
        Command::Derive { stop_after } => derive(&cfg, stop_after),
        Command::Verify { claim, gamma } => verify(&cfg, claim, gamma),
        Command::Jinv { gamma, poly } => jinv(&cfg, gamma, poly),
        Command::Expand { place, order } => expand(&cfg, &place, order),
        Command::Resultant { p, q, var } => {
            let (p, q) = (parse_rational_poly(&p)?, parse_rational_poly(&q)?);
            cfg.emit(&resultant(&p, &q, &var)?.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn derive(cfg: &RunConfig, stop_after: Option<Stage>) -> Result<ExitCode, CliError> {
    let report = run_derivation(DeriveOptions { precision: cfg.precision, stop_after })
        .map_err(|e| CliError::Internal(e.to_string()))?;
    cfg.emit(&report.to_json())?;
    let failures = report.golden_failures();
    if !failures.is_empty() {
        for f in failures {
            eprintln!("golden mismatch in {} / {}:\n  expected {}\n  observed {}", f.stage, f.name, f.expected, f.observed);
        }
        return Ok(ExitCode::from(2));
    }
    if stop_after.is_some() || report.succeeded() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("Belyi cases {:?}; certificates {:?}", report.belyi_cases, report.certificates.iter().map(|c| c.passed).collect::<Vec<_>>());
        Ok(ExitCode::from(1))
    }
}

fn verify(cfg: &RunConfig, claim: Option<PathBuf>, gamma: Option<Gamma>) -> Result<ExitCode, CliError> {
    let file = match (claim, gamma) {
        (Some(path), _) => {
            let src = std::fs::read_to_string(&path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            ClaimFile::from_json(&src)?
        }
        (None, Some(g)) => bundled_claim(g),
        (None, None) => return Err(CliError::Input("pass --claim or --gamma".into())),
    };
    let cert = certify(&file.parse()?);
    cfg.emit(&serde_json::to_string_pretty(&cert).expect("certificates serialize"))?;
    if cert.passed {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{}: failed at {:?}: {}", cert.name, cert.outcome, cert.failure.unwrap_or_default());
        Ok(ExitCode::from(1))
    }
}

fn jinv(cfg: &RunConfig, gamma: Option<Gamma>, poly: Option<String>) -> Result<ExitCode, CliError> {
    let model = match (gamma, poly) {
        (Some(g), _) => bundled_claim(g).parse()?.model,
        (None, Some(text)) => {
            let f: UPoly<QuadExt> = parse_poly(&text)?.to_dense("x")?;
            std::sync::Arc::new(belyi_core::curve::CurveModel::new(f).map_err(|e| CliError::Input(e.to_string()))?)
        }
        (None, None) => return Err(CliError::Input("pass --gamma or --poly".into())),
    };
    let digits = (cfg.precision as f64 * std::f64::consts::LOG10_2) as usize - 6;
    let out = serde_json::json!({
        "model": model.to_string(),
        "j": model.j_invariant().to_string(),
        "numeric": model.j_numeric(cfg.precision).to_decimal(digits),
        "precision": cfg.precision,
    });
    cfg.emit(&serde_json::to_string_pretty(&out).expect("json values serialize"))?;
    Ok(ExitCode::SUCCESS)
}

fn expand(cfg: &RunConfig, place: &str, order: usize) -> Result<ExitCode, CliError> {
    if order > cfg.cap {
        return Err(CliError::Input(format!("order {order} exceeds the cap {}", cfg.cap)));
    }
    let state = AnsatzState::new();
    let p = match place {
        "A1" => belyi_core::derive::symbolic::a1_place(),
        "C1" => LocalPlace::Infinite(Branch::Plus),
        "C2" => LocalPlace::Infinite(Branch::Minus),
        other => return Err(CliError::Input(format!("unknown place `{other}`, expected A1, C1 or C2"))),
    };
    let e = expand_y(&state.f, &p, order).map_err(|e| CliError::Internal(e.to_string()))?;
    cfg.emit(&format!("x = {}\ny = {}", e.x, e.y))?;
    Ok(ExitCode::SUCCESS)
}
