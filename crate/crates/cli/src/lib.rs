//! Command-line front end: argument parsing, check dispatch, report output
//! and the symbolic expansions.

pub mod checks;
pub mod props;
pub mod report;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qhall_core::freealg::serre_element;
use qhall_core::rank2::{from_coords, monomial};
use qhall_core::resolution::{chi_e_symbolic, resolution_shadow, CoefficientTable};
use qhall_core::{ffield::is_prime, Direction, EvalConvention, Rank2Datum, DEFAULT_POINT_CAP};

use checks::{Settings, Task};
use report::{emit_report, Params, Report, Witness};

/// Environment variable overriding the largest point count a check may enumerate.
pub const CAP_VAR: &str = "QHALL_POINT_CAP";

#[derive(Parser, Debug)]
#[command(name = "qhall", version, about = "Exact checks of rank-2 Lusztig symmetries against Hall algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one verification suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        opts: Opts,
    },
    /// Find the evaluation conventions under which the Hall-level suites pass
    Calibrate {
        #[command(flatten)]
        opts: Opts,
    },
    /// Print symbolic expansions
    Expand {
        #[arg(value_enum, default_value = "table")]
        what: Target,
        /// Coefficient table as CSV with columns m,p,a,b,c
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args, Debug)]
struct Opts {
    /// Number of arrows (comma list)
    #[arg(long = "N", value_delimiter = ',')]
    n: Option<Vec<u32>>,
    /// Weight parameter m (comma list); for `qbinom`, also the degrees d
    #[arg(long, value_delimiter = ',')]
    m: Option<Vec<u32>>,
    /// Field sizes, primes only (comma list)
    #[arg(long, value_delimiter = ',')]
    q: Option<Vec<u32>>,
    /// Emit one JSON object per report line
    #[arg(long)]
    json: bool,
    /// Image of v: +q^1/2, -q^1/2, +q^-1/2 or -q^-1/2
    #[arg(long, allow_hyphen_values = true, default_value = "+q^1/2")]
    ev: EvalConvention,
    /// Seed for the property suites
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Serre,
    Cor58,
    Cor59,
    Thm57,
    Omega,
    Prop510,
    Resolution,
    Qbinom,
    Basis,
    Props,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    F,
    Fprime,
    Serre,
    T,
    Chi,
    Shadow,
    Table,
}

/// Usage errors exit with this code.
const USAGE: i32 = 2;

pub fn execute(args: impl IntoIterator<Item = String>) -> i32 {
    execute_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn execute_with(args: impl IntoIterator<Item = String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            let text = e.render().to_string();
            return if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                let _ = out.write_all(text.as_bytes());
                0
            } else {
                let _ = err.write_all(text.as_bytes());
                USAGE
            };
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "usage: qhall <verify SUITE | calibrate | expand [TARGET]> [--N ..] [--m ..] [--q ..] [--json] [--ev ..] [--seed ..]");
            USAGE
        }
    }
}

fn point_cap() -> Result<u64, String> {
    match std::env::var(CAP_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("{CAP_VAR} must be a non-negative integer, got {s:?}")),
        Err(_) => Ok(DEFAULT_POINT_CAP),
    }
}

fn settings(opts: &Opts) -> Result<Settings, String> {
    if let Some(ns) = &opts.n {
        if let Some(bad) = ns.iter().find(|&&n| n == 0) {
            return Err(format!("--N must be at least 1, got {bad}"));
        }
    }
    if let Some(qs) = &opts.q {
        if let Some(bad) = qs.iter().find(|&&q| !is_prime(q.into())) {
            return Err(format!("--q must be prime, got {bad}"));
        }
    }
    Ok(Settings {
        n: opts.n.clone(),
        m: opts.m.clone(),
        q: opts.q.clone(),
        ev: opts.ev,
        seed: opts.seed,
        cap: point_cap()?,
    })
}

fn suite_tasks(suite: Suite, s: &Settings) -> Vec<Task> {
    match suite {
        Suite::Serre => checks::serre(s),
        Suite::Cor58 => checks::cor58(s),
        Suite::Cor59 => checks::cor59(s),
        Suite::Thm57 => checks::thm57(s),
        Suite::Omega => checks::omega(s),
        Suite::Prop510 => checks::prop510(s),
        Suite::Resolution => checks::resolution(s),
        Suite::Qbinom => checks::qbinom_suite(s),
        Suite::Basis => checks::basis(s),
        Suite::Props => props::suites(s),
        Suite::All => [
            Suite::Serre,
            Suite::Cor58,
            Suite::Cor59,
            Suite::Thm57,
            Suite::Omega,
            Suite::Prop510,
            Suite::Resolution,
            Suite::Qbinom,
            Suite::Basis,
            Suite::Props,
        ]
        .into_iter()
        .flat_map(|x| suite_tasks(x, s))
        .collect(),
    }
}

fn guard(tasks: &[Task], cap: u64) -> Result<(), String> {
    if tasks.is_empty() {
        return Err("no checks match the given parameters".into());
    }
    if let Some(t) = checks::over_cap(tasks, cap) {
        let p: Vec<_> = t.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        return Err(format!(
            "{} [{}] would enumerate {} points, above the cap {cap}; raise {CAP_VAR} to run it",
            t.check,
            p.join(" "),
            t.points
        ));
    }
    Ok(())
}

fn write_reports(out: &mut dyn Write, reports: &[Report], json: bool) -> i32 {
    let _ = out.write_all(emit_report(reports, json).as_bytes());
    i32::from(reports.iter().any(|r| !r.pass))
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, String> {
    match cli.command {
        Command::Verify { suite, opts } => {
            let s = settings(&opts)?;
            let tasks = suite_tasks(suite, &s);
            guard(&tasks, s.cap)?;
            Ok(write_reports(out, &checks::run_tasks(&tasks), opts.json))
        }
        Command::Calibrate { opts } => {
            let mut s = settings(&opts)?;
            if s.n.is_none() {
                s.n = Some(vec![1, 2]);
            }
            let reports = calibrate(&s)?;
            // losing conventions are expected to fail; only the selection decides
            write_reports(out, &reports, opts.json);
            Ok(i32::from(!reports.last().is_some_and(|r| r.pass)))
        }
        Command::Expand { what, csv, opts } => {
            let s = settings(&opts)?;
            expand(what, csv, &s, out).map(|()| 0)
        }
    }
}

/// One report per convention, then `calibrate.selection`, which passes iff
/// exactly one convention passes every Hall-level suite.
pub fn calibrate(s: &Settings) -> Result<Vec<Report>, String> {
    let mut reports = Vec::new();
    let mut winners = Vec::new();
    for ev in EvalConvention::ALL {
        let s = Settings { ev, ..s.clone() };
        let tasks = checks::calibration_suite(&s);
        guard(&tasks, s.cap)?;
        let start = std::time::Instant::now();
        let results = checks::run_tasks(&tasks);
        let failed: Vec<_> = results
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.pass)
            .map(|(k, r)| Witness::new(k as u64, "PASS", format!("FAIL {} {}", r.check, r.params_text())))
            .collect();
        if failed.is_empty() {
            winners.push(ev);
        }
        let mut ps = Params::new();
        ps.insert("ev".into(), ev.as_str().into());
        reports.push(Report::new("calibrate", ps, failed, start.elapsed().as_millis() as u64));
    }
    let mut ps = Params::new();
    let names: Vec<_> = winners.iter().map(|w| w.as_str()).collect();
    ps.insert("selected".into(), names.join(",").into());
    let witnesses = if winners.len() == 1 {
        vec![]
    } else {
        vec![Witness::new(0, "exactly one convention", format!("{} conventions", winners.len()))]
    };
    reports.push(Report::new("calibrate.selection", ps, witnesses, 0));
    Ok(reports)
}

fn expand(what: Target, csv: bool, s: &Settings, out: &mut dyn Write) -> Result<(), String> {
    let e = |x: qhall_core::Error| x.to_string();
    let ns = s.n.clone().unwrap_or_else(|| vec![2]);
    if csv {
        if what != Target::Table {
            return Err("--csv is only available for the coefficient table".into());
        }
        if ns.len() != 1 {
            return Err("--csv takes a single --N".into());
        }
        let table = CoefficientTable::new(ns[0]).map_err(e)?;
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["m", "p", "a", "b", "c"]).map_err(|x| x.to_string())?;
        for r in table.rows.iter().filter(|r| s.m.as_ref().is_none_or(|ms| ms.contains(&r.m))) {
            w.write_record([r.m.to_string(), r.p.to_string(), r.a.to_string(), r.b.to_string(), r.c.to_string()])
                .map_err(|x| x.to_string())?;
        }
        let bytes = w.into_inner().map_err(|x| x.to_string())?;
        return out.write_all(&bytes).map_err(|x| x.to_string());
    }
    let mut text = String::new();
    for n in ns {
        let d = Rank2Datum::new(n).map_err(e)?;
        if what == Target::Serre {
            text += &format!("N={n}  serre = {}\n", serre_element(-i64::from(n)).map_err(e)?);
            continue;
        }
        if what == Target::Table {
            text += &format!("N={n}\n  m  p  a  b  c\n");
            for r in CoefficientTable::new(n).map_err(e)?.rows {
                if s.m.as_ref().is_none_or(|ms| ms.contains(&r.m)) {
                    text += &format!("  {}  {}  {}  {}  {}\n", r.m, r.p, r.a, r.b, r.c);
                }
            }
            continue;
        }
        let ms: Vec<u32> = match &s.m {
            Some(ms) => ms.iter().copied().filter(|&m| m <= n).collect(),
            None => (0..=n).collect(),
        };
        for m in ms {
            let line = match what {
                Target::F => format!("f({m}) = {}", d.f(m)),
                Target::Fprime => format!("f'({m}) = {}", d.f_prime(m)),
                Target::T => {
                    let t = qhall_core::rank2::lusztig_t(&d.f(m), m, d, Direction::Forward).map_err(e)?;
                    format!("T_i f({m}) = {t}")
                }
                Target::Chi => format!("chi E({m}) = {}", from_coords(&chi_e_symbolic(m, n).map_err(e)?)),
                Target::Shadow => {
                    let sh = resolution_shadow(m, n).map_err(e)?;
                    let terms: Vec<_> = sh
                        .terms
                        .iter()
                        .map(|t| {
                            let word = monomial(m, t.monomial);
                            format!("[{}] v^{} {}", t.hom_degree, t.grade_shift, word)
                        })
                        .collect();
                    format!("shadow({m}): {}", terms.join(" | "))
                }
                Target::Serre | Target::Table => unreachable!(),
            };
            text += &format!("N={n}  {line}\n");
        }
    }
    out.write_all(text.as_bytes()).map_err(|x| x.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("qhall").chain(args.iter().copied()).map(String::from);
        let code = execute_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ev_accepts_leading_minus() {
        let (code, out, _) = call(&["verify", "qbinom", "--m", "2", "--q", "2", "--ev", "-q^1/2", "--json"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"ev\":\"-q^1/2\""));
    }

    #[test]
    fn composite_q_is_usage_error() {
        let (code, out, err) = call(&["verify", "serre", "--q", "4"]);
        assert_eq!((code, out.as_str()), (2, ""));
        assert!(err.contains("prime"));
    }

    #[test]
    fn csv_needs_table() {
        assert_eq!(call(&["expand", "f", "--csv"]).0, 2);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify") && err.is_empty());
    }
}
