mod golden;
mod job;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::bail;
use clap::{Args, Parser, Subcommand, ValueEnum};
use peterson::peterson::{build_centralizer, build_yp, build_yp_star, generic_rank};
use peterson::pls::pls_table;
use peterson::verify::{run_suite, Case, Check, Suite, VerifyConfig};
use polyalg::PolyError;
use serde::Serialize;

use job::{ConfigError, Format, JobConfig};

#[derive(Parser)]
#[command(name = "peterson", version, about = "Presentations of Peterson schemes and their verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a scheme presentation as JSON.
    Build {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Scheme::Yp)]
        scheme: Scheme,
    },
    /// Run verification suites; exit 1 if any check fails.
    Verify(VerifyArgs),
    /// Generic rank of the coordinate ring over the parameter ring.
    Rank {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Tabulate the affine-to-quantum basis map as TSV.
    Pls {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Regenerate the golden presentation files.
    Golden {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Target {
    /// Lie type: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    lie_type: String,
    #[arg(long)]
    rank: usize,
    /// Levi simple roots, 1-based and comma-separated; "" is the Borel.
    #[arg(long, default_value = "")]
    parabolic: String,
    #[arg(long)]
    equivariant: bool,
    #[arg(long, value_delimiter = ',', default_values_t = [1u64, 2, 3])]
    seeds: Vec<u64>,
    /// Maximum Gröbner pair reductions; overrides the environment.
    #[arg(long)]
    budget: Option<usize>,
}

impl Target {
    fn config(&self) -> anyhow::Result<JobConfig> {
        let datum = job::datum(&self.lie_type, self.rank)?;
        let parabolic = job::parabolic(&datum, &self.parabolic)?;
        Ok(JobConfig {
            datum,
            parabolic,
            equivariant: self.equivariant,
            seeds: job::seeds(&self.seeds)?,
            budget: job::budget(self.budget)?,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Yp,
    YpStar,
    Centralizer,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (comma-separated); all when omitted.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    /// Restrict per-case suites to one type; needs --rank.
    #[arg(long = "type", requires = "rank")]
    lie_type: Option<String>,
    #[arg(long, requires = "lie_type")]
    rank: Option<usize>,
    #[arg(long, requires = "lie_type")]
    parabolic: Option<String>,
    #[arg(long, value_delimiter = ',', default_values_t = [1u64, 2, 3])]
    seeds: Vec<u64>,
    #[arg(long)]
    budget: Option<usize>,
    /// Add G_2 and rank-3 cases to the per-case suites.
    #[arg(long)]
    extended: bool,
    /// Directory holding the golden presentation files.
    #[arg(long)]
    golden_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    suite: &'a str,
    case: &'a str,
    check: &'a str,
    passed: bool,
    detail: &'a str,
}

impl<'a> From<&'a Check> for CheckJson<'a> {
    fn from(c: &'a Check) -> Self {
        CheckJson { suite: c.suite.id(), case: &c.case, check: &c.anchor, passed: c.passed, detail: &c.detail }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if cause.downcast_ref::<ConfigError>().is_some() {
            return 2;
        }
        if let Some(err) = cause.downcast_ref::<peterson::Error>() {
            match err {
                peterson::Error::Config(_) | peterson::Error::Precondition(_) => return 2,
                peterson::Error::Poly(PolyError::BudgetExceeded { .. }) => return 3,
                _ => {}
            }
        }
        if let Some(PolyError::BudgetExceeded { .. }) = cause.downcast_ref::<PolyError>() {
            return 3;
        }
    }
    1
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let mut stdout = std::io::stdout().lock();
    match cli.command {
        Command::Build { target, scheme } => {
            let cfg = target.config()?;
            let pres = match scheme {
                Scheme::Yp => build_yp(&cfg.datum, &cfg.parabolic, cfg.equivariant)?,
                Scheme::YpStar => build_yp_star(&cfg.datum, &cfg.parabolic, cfg.equivariant)?,
                Scheme::Centralizer => build_centralizer(&cfg.datum, cfg.equivariant)?,
            };
            writeln!(stdout, "{}", pres.to_json_string())?;
        }
        Command::Rank { target, format } => {
            let cfg = target.config()?;
            let pres = build_yp(&cfg.datum, &cfg.parabolic, true)?;
            let report = generic_rank(&pres, &cfg.seeds, cfg.budget)?;
            match format {
                Format::Json => {
                    let value = serde_json::json!({
                        "type": cfg.datum.name(),
                        "parabolic": pres.to_json().parabolic,
                        "rank": report.rank(),
                        "seeds": report.seeds,
                        "specialized": report.specialized,
                        "symbolic": report.symbolic,
                    });
                    writeln!(stdout, "{}", serde_json::to_string_pretty(&value)?)?;
                }
                Format::Text | Format::Tsv => {
                    writeln!(stdout, "rank\t{}", report.rank())?;
                    writeln!(stdout, "seeds\t{:?}", report.seeds)?;
                    writeln!(stdout, "specialized\t{:?}", report.specialized)?;
                    let sym = report.symbolic.map_or("skipped".to_string(), |s| s.to_string());
                    writeln!(stdout, "symbolic\t{sym}")?;
                }
            }
        }
        Command::Pls { target, max_len } => {
            let cfg = target.config()?;
            writeln!(stdout, "w\tlambda\tlength\tin_WP_af\teta\tw_tilde")?;
            for row in pls_table(&cfg.datum, &cfg.parabolic, max_len)? {
                writeln!(
                    stdout,
                    "{}\t{:?}\t{}\t{}\t{}\t{}",
                    row.word,
                    row.lambda,
                    row.length,
                    row.in_wp_af,
                    row.eta.map_or("-".to_string(), |e| format!("{e:?}")),
                    row.schubert.unwrap_or_else(|| "-".to_string()),
                )?;
            }
        }
        Command::Golden { dir } => {
            let dir = dir.unwrap_or_else(golden::default_dir);
            std::fs::create_dir_all(&dir)?;
            for g in &golden::GOLDEN {
                std::fs::write(dir.join(g.file), golden::render(g)?)?;
                writeln!(stdout, "wrote {}", dir.join(g.file).display())?;
            }
        }
        Command::Verify(args) => return verify(args, &mut stdout),
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs, stdout: &mut impl Write) -> anyhow::Result<ExitCode> {
    let suites: Vec<Suite> = if args.suite.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.suite.iter().map(|s| s.parse::<Suite>()).collect::<peterson::Result<_>>()?
    };
    let budget = job::budget(args.budget)?;
    let mut cfg = VerifyConfig::standard(budget);
    cfg.seeds = job::seeds(&args.seeds)?;
    cfg.extended = args.extended;
    if let (Some(t), Some(r)) = (&args.lie_type, args.rank) {
        let datum = job::datum(t, r)?;
        let parabolic = job::parabolic(&datum, args.parabolic.as_deref().unwrap_or(""))?;
        cfg.cases = vec![Case { datum, parabolic }];
        if args.extended {
            bail!(ConfigError("--extended cannot be combined with --type".into()));
        }
    }

    let mut checks = Vec::new();
    for suite in suites {
        checks.extend(run_suite(suite, &cfg)?);
        if suite == Suite::GoldenSl2 {
            checks.extend(golden::check_all(&args.golden_dir.clone().unwrap_or_else(golden::default_dir))?);
        }
    }
    let failures: Vec<CheckJson> = checks.iter().filter(|c| !c.passed).map(CheckJson::from).collect();
    match args.format {
        Format::Json => {
            let all: Vec<CheckJson> = checks.iter().map(CheckJson::from).collect();
            let value = serde_json::json!({ "checks": all, "failures": failures.len() });
            writeln!(stdout, "{}", serde_json::to_string_pretty(&value)?)?;
        }
        Format::Text | Format::Tsv => {
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let case = if c.case.is_empty() { "-" } else { &c.case };
                writeln!(stdout, "{status}\t{}\t{case}\t{}\t{}", c.suite, c.anchor, c.detail)?;
            }
            writeln!(stdout, "{} checks, {} failed", checks.len(), failures.len())?;
            if !failures.is_empty() {
                eprintln!("{}", serde_json::to_string(&failures)?);
            }
        }
    }
    Ok(if failures.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
