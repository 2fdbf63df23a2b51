//! Command-line front end: evaluate umbral moments, print generating
//! functions, emit recurrence tables, and run the verification suites.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use umbral::recurrences::{CaseName, DyckSolver, DyckTable, RecurrenceSolution};
use umbral::series::{rat_int, Poly, Rational};
use umbral::verify::{self, CheckStatus};
use umbral::{dsl, oracles, DEFAULT_ORDER};

#[derive(Parser)]
#[command(
    name = "umbral",
    version,
    about = "Exact umbral calculus: moments, generating functions, recurrence tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Truncation order of the power-series engine.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    order: usize,

    /// Output format for tables and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate E[EXPR^N] exactly (rational, or polynomial in x).
    Eval { expr: String, n: usize },
    /// Print coefficients c_0..c_N of EXPR's generating function.
    Gf {
        expr: String,
        /// Overrides --order.
        #[arg(value_name = "ORDER")]
        order_override: Option<usize>,
    },
    /// Emit a recurrence-case table (integral, pascal, fibonacci, dyck).
    Table {
        case: String,
        /// Row range, inclusive, e.g. 0..8.
        #[arg(long, value_parser = parse_range)]
        n: Option<(usize, usize)>,
        /// Column range for the dyck case, inclusive.
        #[arg(long, value_parser = parse_range)]
        m: Option<(usize, usize)>,
    },
    /// Run a verification suite (series, bell, umbra, sheffer, recurrences, all).
    Verify { suite: String },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("`{s}` is not a range; expected A..B"))?;
    let lo = lo.parse().map_err(|_| format!("bad range start `{lo}`"))?;
    let hi = hi.parse().map_err(|_| format!("bad range end `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

struct Outcome {
    output: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(2);
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &outcome.output) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{}", outcome.output);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::Eval { expr, n } => cmd_eval(expr, *n, cli),
        Command::Gf {
            expr,
            order_override,
        } => cmd_gf(expr, order_override.unwrap_or(cli.order), cli),
        Command::Table { case, n, m } => cmd_table(case, *n, *m, cli),
        Command::Verify { suite } => cmd_verify(suite, cli),
    }
}

/// Polynomials print in descending powers; plain rationals print as `p/q`.
fn poly_string(p: &Poly) -> String {
    match p.constant_value() {
        Some(c) => c.to_string(),
        None => p.to_string(),
    }
}

fn cmd_eval(expr: &str, n: usize, cli: &Cli) -> Result<Outcome, String> {
    let parsed = dsl::parse(expr).map_err(|e| e.to_string())?;
    let value = parsed
        .to_umbral(cli.order)
        .evaluate(n, cli.order)
        .map_err(|e| e.to_string())?;
    let rendered = poly_string(&value);
    let output = match cli.format {
        Format::Csv => format!("{rendered}\n"),
        Format::Json => format!("{}\n", json!({ "expr": expr, "n": n, "value": rendered })),
    };
    Ok(Outcome { output, ok: true })
}

fn cmd_gf(expr: &str, order: usize, cli: &Cli) -> Result<Outcome, String> {
    let parsed = dsl::parse(expr).map_err(|e| e.to_string())?;
    let umbral_expr = parsed.to_umbral(order);
    let coeffs: Vec<String> = if umbral_expr.contains_x() {
        umbral_expr
            .gf::<Poly>(order)
            .map_err(|e| e.to_string())?
            .coeffs()
            .iter()
            .map(poly_string)
            .collect()
    } else {
        umbral_expr
            .gf::<Rational>(order)
            .map_err(|e| e.to_string())?
            .coeffs()
            .iter()
            .map(Rational::to_string)
            .collect()
    };
    let output = match cli.format {
        Format::Csv => format!("{}\n", coeffs.join(", ")),
        Format::Json => format!("{}\n", json!(coeffs)),
    };
    Ok(Outcome { output, ok: true })
}

fn cmd_table(
    case: &str,
    n: Option<(usize, usize)>,
    m: Option<(usize, usize)>,
    cli: &Cli,
) -> Result<Outcome, String> {
    let case = CaseName::from_name(case)
        .ok_or_else(|| format!("unknown case `{case}`; expected integral, pascal, fibonacci, or dyck"))?;
    let (n_lo, n_hi) = n.unwrap_or(match case {
        CaseName::Dyck => (0, 5),
        _ => (0, 8),
    });
    if n_hi > cli.order {
        return Err(format!(
            "table rows reach n = {n_hi} but the truncation order is {}; raise --order",
            cli.order
        ));
    }

    let mut rows: Vec<serde_json::Value> = Vec::new();
    let mut csv = String::new();
    match case {
        CaseName::Dyck => {
            let (m_lo, m_hi) = m.unwrap_or((0, 6));
            let solver = DyckSolver::new(n_hi.max(m_hi));
            let table = DyckTable::from_solver(&solver, n_hi.max(m_hi)).map_err(|e| e.to_string())?;
            csv.push_str("n,m,value\n");
            for n in n_lo..=n_hi {
                for m in m_lo.max(n)..=m_hi {
                    let value = table
                        .get(n, m)
                        .ok_or_else(|| format!("D({n},{m}) missing from the table"))?;
                    let _ = writeln!(csv, "{n},{m},{value}");
                    rows.push(json!({ "case": "dyck", "n": n, "m": m, "value": value }));
                }
            }
        }
        CaseName::Integral => {
            let solution = RecurrenceSolution::new(case);
            csv.push_str("n,value,integral_ok\n");
            for n in n_lo..=n_hi {
                let q = solution.poly(n).map_err(|e| e.to_string())?;
                let direct = oracles::integrate01(&q);
                let umbral_route =
                    umbral::recurrences::integral01_via_umbra(&q).map_err(|e| e.to_string())?;
                let ok = direct == rat_int(1) && umbral_route == rat_int(1);
                let rendered = poly_string(&q);
                let _ = writeln!(csv, "{n},{rendered},{ok}");
                rows.push(json!({ "case": "integral", "n": n, "value": rendered, "integral_ok": ok }));
            }
        }
        CaseName::Pascal => {
            let solution = RecurrenceSolution::new(case);
            csv.push_str("n,value\n");
            for n in n_lo..=n_hi {
                let q = solution.poly(n).map_err(|e| e.to_string())?;
                let rendered = poly_string(&q);
                let _ = writeln!(csv, "{n},{rendered}");
                rows.push(json!({ "case": "pascal", "n": n, "value": rendered }));
            }
        }
        CaseName::Fibonacci => {
            let solution = RecurrenceSolution::new(case);
            csv.push_str("n,value,diagonal\n");
            for n in n_lo..=n_hi {
                let q = solution.poly(n).map_err(|e| e.to_string())?;
                let diagonal = q.eval(&rat_int(0));
                let diagonal = u64::try_from(diagonal.numer().clone())
                    .map_err(|_| format!("diagonal value at n = {n} overflows u64"))?;
                let rendered = poly_string(&q);
                let _ = writeln!(csv, "{n},{rendered},{diagonal}");
                rows.push(json!({ "case": "fibonacci", "n": n, "value": rendered, "diagonal": diagonal }));
            }
        }
    }

    let output = match cli.format {
        Format::Csv => csv,
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows).unwrap()),
    };
    Ok(Outcome { output, ok: true })
}

fn cmd_verify(suite: &str, cli: &Cli) -> Result<Outcome, String> {
    let checks = verify::run_suite(suite, cli.order).ok_or_else(|| {
        format!(
            "unknown suite `{suite}`; expected one of {}",
            verify::SUITES.join(", ")
        )
    })?;

    let mut passed = 0usize;
    let mut failed = 0usize;
    let mut reported = 0usize;
    for check in &checks {
        match check.status {
            CheckStatus::Pass => passed += 1,
            CheckStatus::Fail => failed += 1,
            CheckStatus::Reported => reported += 1,
        }
    }

    let output = match cli.format {
        Format::Csv => {
            let mut text = String::new();
            for check in &checks {
                let tag = match check.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Reported => "REPORTED",
                };
                if check.detail.is_empty() {
                    let _ = writeln!(text, "{tag} {}::{}", check.suite, check.name);
                } else {
                    let _ = writeln!(text, "{tag} {}::{} — {}", check.suite, check.name, check.detail);
                }
            }
            let _ = writeln!(
                text,
                "{} checks: {passed} passed, {failed} failed, {reported} reported",
                checks.len()
            );
            text
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = checks
                .iter()
                .map(|check| {
                    json!({
                        "suite": check.suite,
                        "name": check.name,
                        "status": match check.status {
                            CheckStatus::Pass => "pass",
                            CheckStatus::Fail => "fail",
                            CheckStatus::Reported => "reported",
                        },
                        "detail": check.detail,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&rows).unwrap())
        }
    };
    Ok(Outcome {
        output,
        ok: failed == 0,
    })
}
