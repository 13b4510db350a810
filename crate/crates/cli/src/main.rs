//! Command-line front end.
//!
//! Subcommands compute polynomial families (`yv`, `ohyama`), rational
//! solutions (`pii`), generating-function expansions and Lax spot checks
//! (`genfun`), run the verification suites (`verify`), and sample exact
//! rational functions on a grid (`sample`).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use painleve_exact::adler_moser::{pii_rational, verify_am_identities, yv_polynomial, AMChain};
use painleve_exact::genfun::{expand_generating, numeric_lax_check, verify_series_chain};
use painleve_exact::ohyama::{
    algebraic_p, potential_v, rho, verify_family, Profile, RhoRoute, VRoute,
};
use painleve_exact::rings::{Poly, RationalFunction};
use painleve_exact::scalars::{Rational, Scalar};
use painleve_exact::Report;

mod poles;

#[derive(Parser)]
#[command(
    name = "painleve",
    about = "Exact rational/algebraic Painlevé II and III (D7) solutions via Wronskians",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write standard output to this file instead.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Yablonskii-Vorob'ev polynomial of index n (tau polynomial of the
    /// rational Painlevé II solutions).
    Yv {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Rational Painlevé II solution at integer parameter alpha, with the
    /// conjugate momentum and the tau polynomial.
    Pii {
        #[arg(long)]
        alpha: i64,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Ohyama polynomial rho_n by the chosen route.
    Ohyama {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "recurrence")]
        route: String,
        #[arg(long, default_value = "canonical")]
        profile: String,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run a verification suite; exits 1 if any identity fails.
    Verify(VerifyArgs),
    /// Lambda-expansion of the generating function, or numeric Lax spot
    /// checks when --lax-grid is given.
    Genfun {
        /// Chain sign: 1 or -1.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        delta: i64,
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// Comma-separated rational grid values; runs the numeric Lax
        /// check on the grid square and emits CSV rows.
        #[arg(long)]
        lax_grid: Option<String>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Evaluate an exact solution on a rational grid, as CSV.
    Sample(SampleArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: am, ohyama, genfun, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 3)]
    n_max: i64,
    #[arg(long, default_value = "canonical")]
    profile: String,
    /// Append one deliberately broken check to demonstrate failure
    /// reporting (forces exit code 1).
    #[arg(long, default_value_t = false)]
    then_fail_demo: bool,
}

#[derive(Args)]
struct SampleArgs {
    /// Expression: P_n, V_n (grids in zeta) or q_alpha (grid in z).
    #[arg(long)]
    expr: String,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<i64>,
    /// Grid start, as an exact rational ("-2", "1/3", "0.25").
    #[arg(long, allow_hyphen_values = true)]
    from: String,
    #[arg(long, allow_hyphen_values = true)]
    to: String,
    #[arg(long, default_value_t = 11)]
    points: usize,
    /// Decimal digits in the rendered values.
    #[arg(long, default_value_t = 12)]
    digits: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => match std::fs::File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("error: cannot open {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(std::io::stdout()),
    };
    match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match command {
        Command::Yv { n, format } => {
            if n < 0 {
                return Err("yv index must be non-negative".into());
            }
            emit_poly(out, &yv_polynomial(n), &format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Pii { alpha, format } => {
            let sol = pii_rational(alpha);
            if format != "json" {
                return Err("pii supports only --format json".into());
            }
            let value = serde_json::json!({
                "alpha": alpha,
                "ell": sol.ell.to_string(),
                "q": sol.q.to_json(),
                "p": sol.p.to_json(),
                "tau": sol.tau_poly.to_json(),
            });
            writeln!(out, "{value}")?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ohyama {
            n,
            route,
            profile,
            format,
        } => {
            let route = RhoRoute::from_name(&route)?;
            let profile = Profile::from_name(&profile)?;
            emit_poly(out, &rho(n, route, profile)?, &format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => run_verify(args, out),
        Command::Genfun {
            delta,
            order,
            lax_grid,
            tol,
            format,
        } => {
            if let Some(grid) = lax_grid {
                return run_lax_grid(&grid, tol, out);
            }
            let series = expand_generating(delta, order)?;
            if format != "json" {
                return Err("genfun series supports only --format json".into());
            }
            let value = serde_json::json!({
                "delta": series.delta,
                "order": series.order,
                "coefficients": series
                    .coefficients
                    .iter()
                    .map(|c| c.to_json())
                    .collect::<Vec<_>>(),
            });
            writeln!(out, "{value}")?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample(args) => run_sample(args, out),
    }
}

fn emit_poly(
    out: &mut dyn Write,
    p: &Poly<Rational>,
    format: &str,
) -> Result<(), Box<dyn std::error::Error>> {
    match format {
        "json" => writeln!(out, "{}", p.to_json())?,
        "csv" => {
            writeln!(out, "exponent,coefficient")?;
            for (k, c) in p.terms() {
                writeln!(out, "{k},{c}")?;
            }
        }
        other => return Err(format!("unknown format {other:?}").into()),
    }
    Ok(())
}

fn run_verify(args: VerifyArgs, out: &mut dyn Write) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let profile = Profile::from_name(&args.profile)?;
    let mut report = Report::new();
    match args.suite.as_str() {
        "am" => report.extend(am_report(args.n_max)?),
        "ohyama" => report.extend(verify_family(args.n_max.max(1), profile)?),
        "genfun" => report.extend(genfun_report(args.n_max)?),
        "all" => {
            report.extend(am_report(args.n_max)?);
            report.extend(verify_family(args.n_max.max(1), profile)?);
            report.extend(genfun_report(args.n_max)?);
        }
        other => return Err(format!("unknown suite {other:?}").into()),
    }
    if args.then_fail_demo {
        report.checks.push(painleve_exact::ohyama::injected_failure_check());
    }
    writeln!(out, "{}", report.to_json())?;
    let failed: Vec<_> = report.failures().collect();
    if failed.is_empty() {
        eprintln!("verify: {} checks, all ok", report.checks.len());
        Ok(ExitCode::SUCCESS)
    } else {
        for f in &failed {
            eprintln!("verify: FAILED {} (index {})", f.identity, f.index);
        }
        Ok(ExitCode::from(1))
    }
}

fn am_report(k_max: i64) -> Result<Report, Box<dyn std::error::Error>> {
    // A fixed non-trivial constant vector; the property tests in the test
    // suite draw random ones.
    let constants: Vec<Rational> = (0..k_max.max(1) as usize + 1)
        .map(|i| Rational::new(2 * i as i64 + 3, i as i64 + 2))
        .collect();
    let mut chain = AMChain::new(constants);
    Ok(verify_am_identities(k_max.max(1), &mut chain)?)
}

fn genfun_report(n_max: i64) -> Result<Report, Box<dyn std::error::Error>> {
    let order = n_max.clamp(1, 8) as usize;
    let mut report = Report::new();
    for delta in [1, -1] {
        let series = expand_generating(delta, order)?;
        report.extend(verify_series_chain(&series, order)?);
    }
    Ok(report)
}



fn run_lax_grid(grid: &str, tol: f64, out: &mut dyn Write) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let values: Vec<Rational> = grid
        .split(',')
        .map(|s| s.trim().parse::<Rational>())
        .collect::<Result<_, _>>()?;
    writeln!(out, "zeta,lambda,residual_schrodinger,residual_lambda_flow")?;
    let mut all_ok = true;
    for zeta in &values {
        for lambda in &values {
            let check = numeric_lax_check(zeta, lambda, tol)?;
            writeln!(
                out,
                "{},{},{:.3e},{:.3e}",
                zeta, lambda, check.residual_schrodinger, check.residual_lambda_flow
            )?;
            all_ok &= check.ok;
        }
    }
    if all_ok {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("lax check: residuals above tolerance {tol}");
        Ok(ExitCode::from(1))
    }
}

fn run_sample(args: SampleArgs, out: &mut dyn Write) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let from: Rational = args.from.parse()?;
    let to: Rational = args.to.parse()?;
    if args.points < 1 {
        return Err("need at least one grid point".into());
    }
    let f: RationalFunction<Rational> = match args.expr.as_str() {
        "P_n" => {
            let n = args.n.ok_or("P_n requires --n")?;
            algebraic_p(n)
        }
        "V_n" => {
            let n = args.n.ok_or("V_n requires --n")?;
            potential_v(n, VRoute::FromP)?
        }
        "q_alpha" => {
            let alpha = args.alpha.ok_or("q_alpha requires --alpha")?;
            pii_rational(alpha).q
        }
        other => return Err(format!("unknown expression {other:?}").into()),
    };
    // Report the rational poles of the reduced denominator up front.
    let poles = poles::rational_roots(f.den());
    if !poles.is_empty() {
        eprintln!(
            "poles: {}",
            poles
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    writeln!(out, "point,value")?;
    let steps = args.points.saturating_sub(1).max(1) as i64;
    let span = to.sub(&from);
    for i in 0..args.points as i64 {
        let x = if args.points == 1 {
            from.clone()
        } else {
            from.add(&span.mul(&Rational::new(i, steps)))
        };
        match f.eval(&x) {
            Ok(v) => writeln!(out, "{},{}", x, v.to_decimal_string(args.digits))?,
            Err(_) => writeln!(out, "{x},pole")?,
        }
    }
    Ok(ExitCode::SUCCESS)
}
