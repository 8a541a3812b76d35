//! The `partcert` command-line interface.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error or unknown check,
//! 3 I/O failure. Results go to stdout (or `--out`), diagnostics to stderr.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rug::float::Round;
use rug::Rational;

use crate::decay::{self, ExpansionSign};
use crate::enclosure::{format_float, DEFAULT_PRECISION, MIN_PRECISION, PRECISION_CAP, PRECISION_ENV};
use crate::error::Error;
use crate::exact::{self, PartitionTable};
use crate::series;
use crate::verify::{self, CheckId, Expectation, Normalization, ScanParams};

pub const CACHE_ENV: &str = "PARTCERT_CACHE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "partcert", version, about = "Certified computations with the partition function")]
pub struct Cli {
    /// Starting working precision in bits.
    #[arg(
        long,
        global = true,
        env = PRECISION_ENV,
        default_value_t = DEFAULT_PRECISION,
        value_parser = clap::value_parser!(u32).range(MIN_PRECISION as i64..)
    )]
    pub precision: u32,

    /// Table cache file, loaded if present and rewritten when it grows.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Plain,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print p(n).
    Compute {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
    },
    /// Scan a range and report violations of a check.
    Verify {
        /// One of: logconcave, chen-reverse, chen-refined, chen-sharp, strong,
        /// sun-q, janoski, prop-bounds, lemma-t1, lemma-ratio.
        check: String,
        /// First point scanned (defaults to the smallest valid n for the check).
        #[arg(long)]
        from: Option<u64>,
        /// Last point scanned, inclusive.
        #[arg(long)]
        to: Option<u64>,
        /// Known violation set: odd-le-25, even-lt-45, none, or a list like 27,36 or 10:3.
        #[arg(long)]
        expect: Option<String>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// A_k normalization for the janoski check.
        #[arg(long, default_value = "star-over-sqrtk")]
        normalization: String,
        /// Largest precision tried before a point is reported indeterminate.
        #[arg(long, default_value_t = PRECISION_CAP)]
        precision_cap: u32,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Write the normalized second log-difference series as CSV.
    Decay {
        #[arg(long, default_value_t = 2)]
        from: u64,
        #[arg(long, default_value_t = 2000)]
        to: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Add L_plus and L_minus columns of this order.
        #[arg(long)]
        order: Option<u32>,
    },
    /// Write the exact table p(0..=to).
    Table {
        #[arg(long)]
        to: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failure mapped to an exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Parse { .. } | Error::EmptyTable => EXIT_IO,
            Error::Resolution { .. } => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_IO,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{text}")
            } else {
                write!(stdout, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "partcert: {}", f.message);
            f.code
        }
    }
}

struct Cache {
    path: Option<PathBuf>,
    table: PartitionTable,
    loaded_to: u64,
}

impl Cache {
    fn open(path: Option<&Path>) -> Result<Self, Failure> {
        let table = match path {
            Some(p) if p.exists() => exact::load_table(p)?,
            _ => PartitionTable::new(),
        };
        Ok(Cache {
            path: path.map(Path::to_path_buf),
            loaded_to: table.n_max(),
            table,
        })
    }

    fn persist(&self) -> Result<(), Failure> {
        if let Some(p) = &self.path {
            if self.table.n_max() > self.loaded_to || !p.exists() {
                exact::save_table(&self.table, p)?;
            }
        }
        Ok(())
    }
}

fn emit(out: Option<&Path>, stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let prec = cli.precision;
    let mut cache = Cache::open(cli.cache.as_deref())?;
    let code = match &cli.command {
        Command::Compute { n, method } => {
            let value = match method {
                Method::Recurrence => exact::p_exact(*n, &mut cache.table),
                Method::Series => {
                    if *n == 0 {
                        return Err(usage("--method series needs n >= 1"));
                    }
                    series::p_via_series(*n)?
                }
            };
            writeln!(stdout, "{value}")?;
            EXIT_OK
        }
        Command::Verify {
            check,
            from,
            to,
            expect,
            out,
            normalization,
            precision_cap,
            format,
        } => {
            let check: CheckId = check.parse()?;
            let normalization: Normalization = normalization.parse()?;
            let expect: Option<Expectation> = expect.as_deref().map(str::parse).transpose()?;
            let from = from.unwrap_or(check.min_n());
            let to = to.unwrap_or(check.default_to());
            let params = ScanParams {
                precision_bits: prec,
                precision_cap: (*precision_cap).max(prec),
                normalization,
            };
            let mut report = verify::scan(&mut cache.table, check, from, to, &params)?;
            let ok = match &expect {
                Some(e) => {
                    let matched = report.matches(e);
                    report.parameters.insert("expect".into(), e.to_string().into());
                    report.parameters.insert("matches_expectation".into(), matched.into());
                    matched
                }
                None => report.passed,
            };
            let text = match format {
                ReportFormat::Json => report.to_json(),
                ReportFormat::Plain => plain_summary(&report, ok),
            };
            emit(out.as_deref(), stdout, &text)?;
            if !ok {
                writeln!(
                    stderr,
                    "{}: {} violation(s), {} indeterminate",
                    report.check_id,
                    report.violations.len(),
                    report.indeterminate.len()
                )?;
            }
            if ok {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Command::Decay {
            from,
            to,
            out,
            order,
        } => {
            if *from < 2 || from > to {
                return Err(usage(format!("decay needs 2 <= --from <= --to, got {from}..{to}")));
            }
            let need = (*to).max(2000) + 1;
            cache.table.fill_to(cache.table.n_max().max(need));
            let csv = decay_csv(&cache.table, *from, *to, *order, prec)?;
            emit(out.as_deref(), stdout, &csv)?;
            h1_note(&cache.table, prec, stderr)?;
            EXIT_OK
        }
        Command::Table { to, out } => {
            cache.table.fill_to(cache.table.n_max().max(*to));
            let mut buf = Vec::new();
            let trimmed = cache.table.truncated(*to);
            trimmed.write_to(&mut buf)?;
            match out {
                Some(p) => fs::write(p, &buf)?,
                None => stdout.write_all(&buf)?,
            }
            EXIT_OK
        }
    };
    cache.persist()?;
    Ok(code)
}

fn plain_summary(report: &verify::CheckReport, ok: bool) -> String {
    let points: Vec<String> = report.violations.iter().map(|v| v.point.to_string()).collect();
    format!(
        "{} [{}, {}]: {} violations [{}], {} indeterminate, {}\n",
        report.check_id,
        report.range.from,
        report.range.to,
        points.len(),
        points.join(","),
        report.indeterminate.len(),
        if ok { "ok" } else { "FAILED" }
    )
}

/// The decay series as CSV; `order` adds the two expansion columns.
pub fn decay_csv(
    table: &PartitionTable,
    from: u64,
    to: u64,
    order: Option<u32>,
    prec: u32,
) -> crate::Result<String> {
    let samples = decay::figure1_series(table, from, to, prec)?;
    let mut csv = String::from("n,d_lo,d_hi,normalized_lo,normalized_hi");
    if order.is_some() {
        csv.push_str(",L_plus,L_minus");
    }
    csv.push('\n');
    for s in samples {
        csv.push_str(&format!(
            "{},{},{},{},{}",
            s.n,
            s.d_value.lo_string(),
            s.d_value.hi_string(),
            s.normalized.lo_string(),
            s.normalized.hi_string()
        ));
        if let Some(k) = order {
            let mid = |sign| {
                decay::l_expansion(s.n, k, sign, prec)
                    .map(|l| format_float(&l.midpoint(), Round::Nearest))
            };
            csv.push_str(&format!(",{},{}", mid(ExpansionSign::Plus)?, mid(ExpansionSign::Minus)?));
        }
        csv.push('\n');
    }
    Ok(csv)
}

// Both readings of the leading constant at n = 2000, next to D(2000).
fn h1_note(table: &PartitionTable, prec: u32, stderr: &mut dyn Write) -> Result<(), Failure> {
    let x = Rational::from(2000);
    let (h1, _) = decay::h_terms(&x, prec)?;
    let printed = decay::h1_printed(&x, prec)?;
    let d = decay::d_exact(table, 2000, prec)?;
    let f = |e: &crate::Enclosure| format_float(&e.midpoint(), Round::Nearest);
    writeln!(
        stderr,
        "note: at n=2000, D = {}, h1 = (C/4) n^(-3/2) = {}, printed 4/(C n^(3/2)) = {}",
        f(&d),
        f(&h1),
        f(&printed)
    )?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["partcert"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn compute_commands() {
        assert_eq!(call(&["compute", "--n", "5"]).1, "7\n");
        assert_eq!(call(&["compute", "--n", "100", "--method", "series"]).1, "190569292\n");
        assert_eq!(call(&["compute", "--n", "-1"]).0, EXIT_USAGE);
        assert_eq!(call(&["compute", "--n", "abc"]).0, EXIT_USAGE);
        assert_eq!(call(&["compute", "--n", "0", "--method", "series"]).0, EXIT_USAGE);
    }

    #[test]
    fn verify_commands() {
        let (code, out, _) = call(&["verify", "logconcave", "--from", "1", "--to", "100", "--expect", "odd-le-25"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"matches_expectation\": true"));
        assert_eq!(call(&["verify", "logconcave", "--from", "1", "--to", "100"]).0, EXIT_FAIL);
        assert_eq!(call(&["verify", "strong", "--to", "60"]).0, EXIT_OK);
        assert_eq!(call(&["verify", "bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "lemma-t1", "--from", "3", "--to", "60"]).0, EXIT_USAGE);
        let (code, out, _) = call(&[
            "verify", "chen-sharp", "--from", "2", "--to", "60", "--expect", "even-lt-45", "--format", "plain",
        ]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.starts_with("chen-sharp [2, 60]: 22 violations"));
    }

    #[test]
    fn decay_and_table_commands() {
        let dir = tempfile::tempdir().unwrap();
        let csv = dir.path().join("d.csv");
        let (code, _, err) = call(&["decay", "--from", "2", "--to", "30", "--out", csv.to_str().unwrap(), "--order", "1"]);
        assert_eq!(code, EXIT_OK);
        assert!(err.contains("n=2000"));
        let text = fs::read_to_string(&csv).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,d_lo,d_hi,normalized_lo,normalized_hi,L_plus,L_minus"));
        assert_eq!(lines.count(), 29);
        assert_eq!(call(&["decay", "--from", "5", "--to", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["decay", "--from", "2", "--to", "3", "--out", "/nonexistent/x.csv"]).0, EXIT_IO);

        let t = dir.path().join("t.txt");
        assert_eq!(call(&["table", "--to", "2", "--out", t.to_str().unwrap()]).0, EXIT_OK);
        assert_eq!(fs::read_to_string(&t).unwrap(), "0 1\n1 1\n2 2\n");
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = dir.path().join("cache.txt");
        let c = cache.to_str().unwrap();
        assert_eq!(call(&["--cache", c, "compute", "--n", "50"]).1, "204226\n");
        let loaded = exact::load_table(&cache).unwrap();
        assert!(loaded.n_max() >= 50);
        assert_eq!(call(&["--cache", c, "compute", "--n", "10"]).1, "42\n");
        fs::write(&cache, "0 1\n1 2\n").unwrap();
        assert_eq!(call(&["--cache", c, "compute", "--n", "3"]).0, EXIT_IO);
    }
}
