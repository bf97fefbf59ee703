//! Subcommand implementations behind the `convexity-radii` binary.
//!
//! Exit codes: 0 success, 1 a check or verification failed, 2 usage or
//! domain error.

use crate::error::Result;
use crate::family::{FamilySpec, NormKind};
use crate::output::OutputRecord;
use crate::radius::{solve_radius, RadiusQuery, Verified};
use crate::verify::{self, disk_certify, run_suite, SuiteKind};
use crate::zeros::{derivative_zeros, function_zeros, interlacing_certificate};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "convexity-radii",
    about = "Radii of convexity of normalized Lommel and Struve functions",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve for the radius of convexity of one normalization.
    Radius(RadiusArgs),
    /// Tabulate zeros of the function or its derivative part.
    Zeros(ZerosArgs),
    /// Sweep a parameter/alpha grid and write a CSV.
    Sweep(SweepArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Lommel,
    Struve,
}

#[derive(Args)]
struct FamilyOpts {
    /// Function family; may be omitted when --norm already implies it.
    #[arg(long)]
    family: Option<FamilyArg>,
    /// Lommel order parameter mu in (-1,1), nonzero.
    #[arg(long)]
    mu: Option<f64>,
    /// Struve order parameter nu in [-1/2, 1/2].
    #[arg(long)]
    nu: Option<f64>,
}

impl FamilyOpts {
    fn resolve(&self, implied: Option<FamilyArg>) -> Result<FamilySpec> {
        let fam = self.family.or(implied).ok_or_else(|| {
            crate::Error::ParameterRange("--family is required (or implied by --norm)".into())
        })?;
        match fam {
            FamilyArg::Lommel => {
                let mu = self.mu.ok_or_else(|| {
                    crate::Error::ParameterRange("--mu is required for the lommel family".into())
                })?;
                FamilySpec::lommel(mu)
            }
            FamilyArg::Struve => {
                let nu = self.nu.ok_or_else(|| {
                    crate::Error::ParameterRange("--nu is required for the struve family".into())
                })?;
                FamilySpec::struve(nu)
            }
        }
    }
}

fn parse_norm(letter: &str) -> Result<(NormKind, FamilyArg)> {
    let c = letter.chars().next().filter(|_| letter.len() == 1);
    c.and_then(NormKind::from_letter)
        .map(|(norm, fam)| {
            (
                norm,
                if fam == "lommel" {
                    FamilyArg::Lommel
                } else {
                    FamilyArg::Struve
                },
            )
        })
        .ok_or_else(|| {
            crate::Error::ParameterRange(format!(
                "--norm must be one of f,g,h (Lommel) or u,v,w (Struve); got {letter}"
            ))
        })
}

#[derive(Args)]
struct RadiusArgs {
    #[command(flatten)]
    family: FamilyOpts,
    /// Normalization: f/g/h (Lommel power/shift/sqrt) or u/v/w (Struve).
    #[arg(long)]
    norm: String,
    /// Convexity order alpha in [0,1).
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    /// Acceptable residual |K(radius) - alpha|.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Also certify the result on the boundary disk.
    #[arg(long)]
    certify: bool,
}

fn cmd_radius(args: &RadiusArgs) -> Result<i32> {
    let (norm, implied) = parse_norm(&args.norm)?;
    let fam = args.family.resolve(Some(implied))?;
    if norm.letter(&fam).to_string() != args.norm {
        return Err(crate::Error::ParameterRange(format!(
            "norm '{}' does not belong to the {} family",
            args.norm,
            fam.name()
        )));
    }
    let query = RadiusQuery::new(fam, norm, args.alpha)?;
    let mut result = solve_radius(&query)?;
    let mut checks = serde_json::Value::Null;
    let mut code = EXIT_OK;
    if result.residual > args.tol {
        code = EXIT_CHECK_FAILED;
    }
    if args.certify {
        let report = disk_certify(&query, &result, verify::CERT_ANGLES, verify::CERT_SHRINK)?;
        if report.passed {
            result.verified = Verified::DiskChecked;
        } else {
            code = EXIT_CHECK_FAILED;
        }
        checks = serde_json::to_value(&report).unwrap();
    }
    OutputRecord::new(
        "radius",
        serde_json::json!({
            "family": fam,
            "norm": norm,
            "alpha": args.alpha,
            "tol": args.tol,
            "certify": args.certify,
        }),
        serde_json::to_value(result).unwrap(),
    )
    .with_checks(checks)
    .print();
    Ok(code)
}

#[derive(Args)]
struct ZerosArgs {
    #[command(flatten)]
    family: FamilyOpts,
    /// 0: zeros of the function part; 1: zeros of its derivative part.
    #[arg(long, default_value_t = 0)]
    deriv: u8,
    /// How many zeros to tabulate.
    #[arg(long, default_value_t = 10)]
    count: usize,
}

fn cmd_zeros(args: &ZerosArgs) -> Result<i32> {
    let fam = args.family.resolve(None)?;
    if args.deriv > 1 {
        return Err(crate::Error::ParameterRange(
            "--deriv must be 0 or 1".into(),
        ));
    }
    let base = function_zeros(&fam, args.count + 1)?;
    let (table, checks) = if args.deriv == 0 {
        let mut t = base.clone();
        t.records.truncate(args.count);
        (t, serde_json::Value::Null)
    } else {
        let deriv = derivative_zeros(&fam, &base)?;
        let cert = interlacing_certificate(&fam, &base, &deriv)?;
        let mut t = deriv;
        t.records.truncate(args.count);
        (t, serde_json::to_value(&cert).unwrap())
    };
    let worst = table
        .records
        .iter()
        .map(|r| r.residual)
        .fold(0.0f64, f64::max);
    let code = if worst <= 1e-10 { EXIT_OK } else { EXIT_CHECK_FAILED };
    OutputRecord::new(
        "zeros",
        serde_json::json!({
            "family": fam,
            "deriv": args.deriv,
            "count": args.count,
        }),
        serde_json::to_value(&table).unwrap(),
    )
    .with_checks(checks)
    .print();
    Ok(code)
}

#[derive(Args)]
struct SweepArgs {
    /// Family to sweep (the order parameter runs over --param-grid).
    #[arg(long)]
    family: FamilyArg,
    /// Normalization letter, as in `radius --norm`.
    #[arg(long)]
    norm: String,
    /// Order-parameter grid, lo:hi:step inclusive.
    #[arg(long, value_parser = parse_grid)]
    param_grid: Grid,
    /// Alpha grid, lo:hi:step inclusive.
    #[arg(long, value_parser = parse_grid)]
    alpha_grid: Grid,
    /// Output CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug)]
struct Grid {
    lo: f64,
    hi: f64,
    step: f64,
}

impl Grid {
    fn values(&self) -> Vec<f64> {
        let mut v = Vec::new();
        let n = ((self.hi - self.lo) / self.step + 1e-9).floor() as usize;
        for i in 0..=n {
            v.push(self.lo + i as f64 * self.step);
        }
        v
    }
}

fn parse_grid(s: &str) -> std::result::Result<Grid, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected lo:hi:step, got '{s}'"));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.parse::<f64>().map_err(|e| e.to_string()))
        .collect::<std::result::Result<_, _>>()?;
    if !(nums[2] > 0.0) || nums[1] < nums[0] {
        return Err("grid needs hi >= lo and step > 0".into());
    }
    Ok(Grid {
        lo: nums[0],
        hi: nums[1],
        step: nums[2],
    })
}

fn cmd_sweep(args: &SweepArgs) -> Result<i32> {
    let (norm, implied) = parse_norm(&args.norm)?;
    if implied != args.family {
        return Err(crate::Error::ParameterRange(format!(
            "norm '{}' does not belong to the requested family",
            args.norm
        )));
    }
    let mut cells: Vec<(f64, f64)> = Vec::new();
    for p in args.param_grid.values() {
        for a in args.alpha_grid.values() {
            cells.push((p, a));
        }
    }

    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Ok(n) = std::env::var("CONVEXITY_RADII_THREADS") {
            if let Ok(n) = n.parse::<usize>() {
                builder = builder.num_threads(n.max(1));
            }
        }
        builder.build().map_err(|e| {
            crate::Error::DomainError(format!("thread pool: {e}"))
        })?
    };

    use rayon::prelude::*;
    let family = args.family;
    let fam_name = match family {
        FamilyArg::Lommel => "lommel",
        FamilyArg::Struve => "struve",
    };
    let norm_letter = &args.norm;
    let mut rows: Vec<(f64, f64, String)> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(p, a)| {
                let row = (|| -> Result<String> {
                    let fam = match family {
                        FamilyArg::Lommel => FamilySpec::lommel(p)?,
                        FamilyArg::Struve => FamilySpec::struve(p)?,
                    };
                    let query = RadiusQuery::new(fam, norm, a)?;
                    let r = solve_radius(&query)?;
                    Ok(format!(
                        "{fam_name},{p:.17e},{norm_letter},{a:.17e},{:.17e},{:.17e},{:.3e},ok",
                        r.radius, r.upper_endpoint, r.residual
                    ))
                })()
                .unwrap_or_else(|e| {
                    format!(
                        "{fam_name},{p:.17e},{norm_letter},{a:.17e},,,,error: {}",
                        e.to_string().replace(',', ";")
                    )
                });
                (p, a, row)
            })
            .collect()
    });
    rows.sort_by(|x, y| (x.0, x.1).partial_cmp(&(y.0, y.1)).unwrap());

    let mut csv =
        String::from("family,param,norm,alpha,radius,upper_endpoint,residual,status\n");
    for (_, _, row) in &rows {
        csv.push_str(row);
        csv.push('\n');
    }
    match &args.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| crate::Error::DomainError(format!("cannot write {path:?}: {e}")))?;
            f.write_all(csv.as_bytes())
                .map_err(|e| crate::Error::DomainError(e.to_string()))?;
            eprintln!("wrote {} rows to {}", rows.len(), path.display());
        }
        None => print!("{csv}"),
    }
    let any_error = rows.iter().any(|(_, _, r)| r.contains(",error:"));
    Ok(if any_error { EXIT_CHECK_FAILED } else { EXIT_OK })
}

#[derive(Args)]
struct VerifyArgs {
    /// fast: coarse grids; full: dense grids plus all disk certifications.
    #[arg(long, default_value = "fast")]
    suite: String,
    /// Seed for the randomized grid points.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let kind = match args.suite.as_str() {
        "fast" => SuiteKind::Fast,
        "full" => SuiteKind::Full,
        other => {
            return Err(crate::Error::ParameterRange(format!(
                "--suite must be fast or full; got {other}"
            )))
        }
    };
    let reports = run_suite(kind, args.seed);
    let all_passed = reports.iter().all(|r| r.passed);
    OutputRecord::new(
        "verify",
        serde_json::json!({ "suite": args.suite, "seed": args.seed }),
        serde_json::to_value(&reports).unwrap(),
    )
    .print();
    Ok(if all_passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}

/// Parse argv and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version as "errors" with success status
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Radius(a) => cmd_radius(a),
        Command::Zeros(a) => cmd_zeros(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g = parse_grid("0.1:0.9:0.2").unwrap();
        let v = g.values();
        assert_eq!(v.len(), 5);
        assert!((v[4] - 0.9).abs() < 1e-12);
        assert!(parse_grid("1:0:0.1").is_err());
        assert!(parse_grid("0:1").is_err());
    }

    #[test]
    fn norm_letters_imply_family() {
        assert!(matches!(parse_norm("g"), Ok((NormKind::Shift, FamilyArg::Lommel))));
        assert!(matches!(parse_norm("w"), Ok((NormKind::Sqrt, FamilyArg::Struve))));
        assert!(parse_norm("x").is_err());
        assert!(parse_norm("fg").is_err());
    }
}
