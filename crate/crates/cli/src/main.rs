use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use lifequant::distributions::{default_verification_grid, errata_report, verify_family, ErrataReport};
use lifequant::sampler::{format_number, ks_against, sample, SampleMethod};
use lifequant::{validate, DistributionSpec, Error, FamilyId};

/// Lifetime-distribution quantiles, sampling and formula verification.
#[derive(Debug, Parser)]
#[command(name = "lifequant", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Quantile t with F(t) = u.
    Quantile {
        #[command(flatten)]
        dist: DistArgs,
        #[arg(long)]
        u: f64,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Residual tolerance of the numeric path.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Distribution function F(t).
    Cdf {
        #[command(flatten)]
        dist: DistArgs,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
    },
    /// Survival function 1 - F(t).
    Sf {
        #[command(flatten)]
        dist: DistArgs,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
    },
    /// Seeded inverse-transform sample.
    Sample {
        #[command(flatten)]
        dist: DistArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Roundtrip check of the published inverse for one parameter set, or all reference sets.
    Verify {
        #[arg(long, value_parser = parse_family)]
        family: Option<FamilyId>,
        #[arg(long = "param", value_name = "NAME=VALUE", requires = "family")]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Kolmogorov-Smirnov distance of a sample from the model.
    Ks {
        #[command(flatten)]
        dist: DistArgs,
        /// CSV with a `value` header; without it a sample is drawn from --n and --seed.
        #[arg(long, conflicts_with_all = ["n", "seed"])]
        input: Option<PathBuf>,
        #[arg(long, required_unless_present = "input")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "input")]
        seed: Option<u64>,
    },
    /// Verdict on every family's published inverse over its reference sets.
    Errata {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Registered families with parameter names and support.
    List,
}

#[derive(Debug, Args)]
struct DistArgs {
    #[arg(long, value_parser = parse_family)]
    family: FamilyId,
    /// Repeat once per parameter, e.g. --param a=1 --param b=0.5.
    #[arg(long = "param", value_name = "NAME=VALUE", allow_hyphen_values = true)]
    params: Vec<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Analytic,
    Numeric,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Method> for SampleMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Analytic => SampleMethod::Analytic,
            Method::Numeric => SampleMethod::Numeric,
            Method::Auto => SampleMethod::Auto,
        }
    }
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse::<FamilyId>().map_err(|e| {
        let names: Vec<&str> = FamilyId::ALL.iter().map(|f| f.as_str()).collect();
        format!("{e}; expected one of: {}", names.join(", "))
    })
}

enum Failure {
    Usage(String),
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Convergence { .. } | Error::Bracket { .. } => Failure::Numeric(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn build_spec(family: FamilyId, raw: &[String]) -> Result<DistributionSpec, Failure> {
    let mut pairs = Vec::with_capacity(raw.len());
    for item in raw {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("--param expects NAME=VALUE, got `{item}`")))?;
        let v: f64 = v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("--param {k}: `{v}` is not a number")))?;
        pairs.push((k.trim(), v));
    }
    Ok(validate(family, &pairs)?)
}

fn families_help() -> String {
    let mut out = String::from("Families (parameters: constraints):\n");
    for f in FamilyId::ALL {
        let info = f.info();
        let _ = writeln!(out, "  {:<20} {:<14} {}", f.as_str(), info.params.join(","), info.constraints);
    }
    out.push_str("\nExit status: 0 success, 2 usage or parameter error, 3 numeric failure.");
    out
}

fn run(cli: Cli) -> Result<String, Failure> {
    let out = match cli.command {
        Command::Quantile {
            dist,
            u,
            method,
            tol,
            format,
        } => {
            let spec = build_spec(dist.family, &dist.params)?;
            let q = match method {
                Method::Analytic => spec.quantile(u)?,
                Method::Numeric => spec.numeric_quantile(u, tol)?,
                Method::Auto if spec.family().has_analytic_quantile() => spec.quantile(u)?,
                Method::Auto => spec.numeric_quantile(u, tol)?,
            };
            match format {
                Some(Format::Json) => format!("{}\n", serde_json::to_string(&q).expect("serializable")),
                Some(Format::Csv) => format!(
                    "t,path,roundtrip_residual\n{},{:?},{}\n",
                    format_number(q.t),
                    q.path,
                    format_number(q.roundtrip_residual)
                ),
                None => format!("{}\n", format_number(q.t)),
            }
        }
        Command::Cdf { dist, t } => {
            let spec = build_spec(dist.family, &dist.params)?;
            format!("{}\n", format_number(spec.cdf(t)))
        }
        Command::Sf { dist, t } => {
            let spec = build_spec(dist.family, &dist.params)?;
            format!("{}\n", format_number(spec.survival(t)))
        }
        Command::Sample {
            dist,
            n,
            seed,
            method,
            format,
        } => {
            let spec = build_spec(dist.family, &dist.params)?;
            let batch = sample(&spec, n, seed, method.into())?;
            match format {
                Format::Csv => batch.to_csv(),
                Format::Json => batch.to_json() + "\n",
            }
        }
        Command::Verify { family, params, format } => {
            let grid = default_verification_grid();
            let report = match family {
                Some(f) => ErrataReport {
                    entries: vec![verify_family(&build_spec(f, &params)?, &grid)?],
                },
                None => errata_report(&grid)?,
            };
            render(&report, format)
        }
        Command::Ks { dist, input, n, seed } => {
            let spec = build_spec(dist.family, &dist.params)?;
            let values = match input {
                Some(path) => read_values(&path)?,
                // clap guarantees both are present without --input.
                None => sample(&spec, n.unwrap_or(0), seed.unwrap_or(0), SampleMethod::Auto)?.values,
            };
            let d = ks_against(&values, &spec)?;
            let n = values.len() as f64;
            format!(
                "n,d,d_sqrt_n\n{},{},{}\n",
                values.len(),
                format_number(d),
                format_number(d * n.sqrt())
            )
        }
        Command::Errata { format } => render(&errata_report(&default_verification_grid())?, format),
        Command::List => {
            let mut out = String::from("family,params,support,status\n");
            for f in FamilyId::ALL {
                let info = f.info();
                let _ = writeln!(
                    out,
                    "{},{},\"{}\",{:?}",
                    f,
                    info.params.join(" "),
                    support_text(f),
                    info.status
                );
            }
            out
        }
    };
    Ok(out)
}

fn render(report: &ErrataReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    }
}

fn support_text(f: FamilyId) -> &'static str {
    use FamilyId::*;
    match f {
        TruncLogWeibull => "(-inf, inf)",
        GenWeibull => "[0, (a c)^(-1/b)]",
        Kies4 | Phani5 => "[a, b)",
        ShiftedModWeibull => "[d, inf)",
        ModPareto4 => "[mu, inf)",
        _ => "[0, inf)",
    }
}

fn read_values(path: &PathBuf) -> Result<Vec<f64>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    if lines.next() != Some("value") {
        return Err(Failure::Usage(format!("{}: first line must be `value`", path.display())));
    }
    lines
        .enumerate()
        .map(|(i, l)| {
            l.parse::<f64>()
                .map_err(|_| Failure::Usage(format!("{} line {}: `{l}` is not a number", path.display(), i + 2)))
        })
        .collect()
}

fn main() -> ExitCode {
    let command = Cli::command().after_help(families_help());
    let matches = command.get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
