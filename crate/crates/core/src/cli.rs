//! `rectcount` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 a verification check
//! failed.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::cache;
use crate::error::{Error, Result};
use crate::oracle::{self, Oracle, DEFAULT_ORACLE_BOUND, EXTENDED_ORACLE_BOUND};
use crate::recursion::{parity_report, CountTable};
use crate::topology::WedgeReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rectcount",
    version,
    about = "Exact counts of rectangulations of a square"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Largest tile count (alias --max-n)
    #[arg(long = "max-m", visible_alias = "max-n", global = true)]
    pub max_m: Option<usize>,

    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Table cache file, read if present and rewritten when extended
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    /// Omit zero rows above the support of each layer
    #[arg(long, global = true)]
    pub sparse: bool,

    /// Worker threads; results do not depend on this
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Allow brute-force runs above the default bound
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// t(m, s) for every m and s
    Table,
    /// Total count t(m) for every m
    Sequence,
    /// Euler characteristic and wedge-sphere count for every n
    Kn,
    /// t(n) mod 2 against the period-8 pattern
    Parity,
    /// Brute-force cross-check of the recurrence
    Verify {
        /// Write the per-class census to this file
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Totally symmetric rectangulations, by brute force
    Symmetric,
    /// A single t(m, r, s)
    Trs {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    // buffered so the command can run inside a dedicated pool
    let mut out_buf = Vec::new();
    let mut err_buf = Vec::new();
    let result = match cli.global.threads {
        Some(0) => Err(Error::InvalidArgument("--threads must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))
            .and_then(|pool| pool.install(|| dispatch(&cli, &mut out_buf, &mut err_buf))),
        None => dispatch(&cli, &mut out_buf, &mut err_buf),
    };
    let _ = out.write_all(&out_buf).and_then(|_| out.flush());
    let _ = err.write_all(&err_buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::NegativeCount { .. } | Error::NegativeWedgeCount { .. } => EXIT_MISMATCH,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch<W: Write, E: Write>(cli: &Cli, out: &mut W, err: &mut E) -> Result<i32> {
    let g = &cli.global;
    match &cli.command {
        Command::Table => cmd_table(g, out),
        Command::Sequence => cmd_sequence(g, out),
        Command::Kn => cmd_kn(g, out),
        Command::Parity => cmd_parity(g, out),
        Command::Verify { dump } => cmd_verify(g, dump.as_ref(), out, err),
        Command::Symmetric => cmd_symmetric(g, out, err),
        Command::Trs { m, r, s } => cmd_trs(g, *m, *r, *s, out),
    }
}

fn required_max(g: &GlobalArgs) -> Result<usize> {
    match g.max_m {
        Some(0) | None => Err(Error::InvalidArgument(
            "--max-m (or --max-n) must be given and at least 1".into(),
        )),
        Some(n) => Ok(n),
    }
}

fn load_table(g: &GlobalArgs, max_m: usize) -> Result<CountTable> {
    // the installed pool (if any) is picked up by the fill
    cache::load_or_fill(g.cache.as_deref(), max_m, None)
}

fn oracle_for(g: &GlobalArgs, max_m: usize) -> Result<Oracle> {
    let bound = if g.force {
        EXTENDED_ORACLE_BOUND
    } else {
        DEFAULT_ORACLE_BOUND
    };
    if max_m > bound {
        let hint = if g.force { "" } else { " (use --force for 7)" };
        return Err(Error::InvalidArgument(format!(
            "brute force is limited to m <= {bound}{hint}"
        )));
    }
    Oracle::with_bound(bound)
}

/// A row of named cells. Counts are kept as decimal strings.
enum Cell {
    Index(usize),
    Count(String),
    Flag(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Index(i) => i.to_string(),
            Cell::Count(s) => s.clone(),
            Cell::Flag(b) => (*b as u8).to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Index(i) => json!(i),
            Cell::Count(s) => json!(s),
            Cell::Flag(b) => json!(b),
        }
    }
}

fn emit<W: Write>(out: &mut W, format: Format, header: &[&str], rows: &[Vec<Cell>]) -> Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{}", header.join(","))?;
            for row in rows {
                let line: Vec<String> = row.iter().map(Cell::csv).collect();
                writeln!(out, "{}", line.join(","))?;
            }
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let obj: serde_json::Map<String, Value> = header
                        .iter()
                        .zip(row)
                        .map(|(h, c)| (h.to_string(), c.json()))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            let text = serde_json::to_string_pretty(&Value::Array(items))
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            writeln!(out, "{text}")?;
        }
    }
    Ok(())
}

fn count(v: impl ToString) -> Cell {
    Cell::Count(v.to_string())
}

pub fn cmd_table<W: Write>(g: &GlobalArgs, out: &mut W) -> Result<i32> {
    let max_m = required_max(g)?;
    let table = load_table(g, max_m)?;
    let mut rows = Vec::new();
    for m in 1..=max_m {
        let layer: Vec<BigUint> = (0..m).map(|s| table.t_of_ms(m, s)).collect::<Result<_>>()?;
        let support = if g.sparse {
            layer
                .iter()
                .rposition(|t| !t.is_zero())
                .map_or(0, |i| i + 1)
        } else {
            m
        };
        for (s, t) in layer.into_iter().enumerate().take(support) {
            rows.push(vec![Cell::Index(m), Cell::Index(s), count(t)]);
        }
    }
    emit(out, g.format, &["m", "s", "t"], &rows)?;
    Ok(EXIT_OK)
}

pub fn cmd_sequence<W: Write>(g: &GlobalArgs, out: &mut W) -> Result<i32> {
    let max_m = required_max(g)?;
    let table = load_table(g, max_m)?;
    let rows = (1..=max_m)
        .map(|m| Ok(vec![Cell::Index(m), count(table.t_total(m)?)]))
        .collect::<Result<Vec<_>>>()?;
    emit(out, g.format, &["m", "t"], &rows)?;
    Ok(EXIT_OK)
}

pub fn cmd_kn<W: Write>(g: &GlobalArgs, out: &mut W) -> Result<i32> {
    let max_n = required_max(g)?;
    let table = load_table(g, max_n)?;
    let rows = (1..=max_n)
        .map(|n| {
            let report = WedgeReport::compute(n, &table)?;
            Ok(vec![Cell::Index(n), count(&report.euler), count(&report.k)])
        })
        .collect::<Result<Vec<_>>>()?;
    emit(out, g.format, &["n", "euler", "k"], &rows)?;
    Ok(EXIT_OK)
}

pub fn cmd_parity<W: Write>(g: &GlobalArgs, out: &mut W) -> Result<i32> {
    let max_m = required_max(g)?;
    let table = load_table(g, max_m)?;
    let report = parity_report(max_m, &table)?;
    let rows: Vec<Vec<Cell>> = report
        .entries
        .iter()
        .map(|e| {
            vec![
                Cell::Index(e.n),
                Cell::Index(e.parity as usize),
                Cell::Index(e.expected as usize),
                Cell::Flag(e.agrees()),
            ]
        })
        .collect();
    emit(out, g.format, &["n", "parity", "expected", "agrees"], &rows)?;
    Ok(if report.all_agree() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

pub fn cmd_verify<W: Write, E: Write>(
    g: &GlobalArgs,
    dump: Option<&PathBuf>,
    out: &mut W,
    err: &mut E,
) -> Result<i32> {
    let max_m = required_max(g)?;
    let oracle = oracle_for(g, max_m)?;
    let table = load_table(g, max_m)?;
    let report = oracle.cross_check(max_m, &table)?;

    for &(m, classes) in &report.classes_per_m {
        writeln!(out, "m={m} classes={classes} t={}", table.t_total(m)?)?;
    }
    for c in &report.euler_checks {
        let status = if c.oracle == c.table {
            "ok"
        } else {
            "MISMATCH"
        };
        writeln!(
            out,
            "euler n={} oracle={} table={} {status}",
            c.n, c.oracle, c.table
        )?;
    }
    for mm in &report.mismatches {
        writeln!(
            err,
            "mismatch m={} r={} s={} oracle={} recursion={}",
            mm.m, mm.r, mm.s, mm.oracle, mm.recursion
        )?;
    }
    for v in &report.invariant_violations {
        writeln!(err, "invariant: {v}")?;
    }
    writeln!(
        out,
        "classes={} mismatches={} invariant_violations={}",
        report.total_classes(),
        report.mismatches.len(),
        report.invariant_violations.len()
    )?;

    if let Some(path) = dump {
        let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
        for m in 1..=max_m {
            oracle::write_class_dump(&oracle.enumerate_rectangulations(m)?, &mut file)?;
        }
        file.flush()?;
    }

    Ok(if report.is_clean() {
        writeln!(out, "verified")?;
        EXIT_OK
    } else {
        writeln!(out, "FAILED")?;
        EXIT_MISMATCH
    })
}

/// Checks on the symmetric counts: `s_n ≡ t_n (mod 2)`, `s_n = 0` unless
/// `n ≡ 0, 1 (mod 4)`, and `s_{4k+1} = s_{4k+4}` where both are known.
pub fn symmetric_violations(s: &[BigUint], t: &[BigUint]) -> Vec<String> {
    let mut out = Vec::new();
    for (i, (sn, tn)) in s.iter().zip(t).enumerate() {
        let n = i + 1;
        if sn.bit(0) != tn.bit(0) {
            out.push(format!("n={n}: s_n and t_n differ mod 2"));
        }
        if !matches!(n % 4, 0 | 1) && !sn.is_zero() {
            out.push(format!("n={n}: s_n={sn} but n is not 4k or 4k+1"));
        }
        if n % 4 == 1 && n + 3 <= s.len() && s[n + 2] != *sn {
            out.push(format!("s_{n}={sn} differs from s_{}={}", n + 3, s[n + 2]));
        }
    }
    out
}

pub fn cmd_symmetric<W: Write, E: Write>(g: &GlobalArgs, out: &mut W, err: &mut E) -> Result<i32> {
    let max_n = required_max(g)?;
    let oracle = oracle_for(g, max_n)?;
    let table = load_table(g, max_n)?;
    let s: Vec<BigUint> = (1..=max_n)
        .map(|n| oracle.d8_symmetric_count(n))
        .collect::<Result<_>>()?;
    let t: Vec<BigUint> = (1..=max_n)
        .map(|n| table.t_total(n))
        .collect::<Result<_>>()?;
    let rows: Vec<Vec<Cell>> = (0..max_n)
        .map(|i| {
            vec![
                Cell::Index(i + 1),
                count(&s[i]),
                Cell::Index(t[i].bit(0) as usize),
                Cell::Index(s[i].bit(0) as usize),
            ]
        })
        .collect();
    emit(out, g.format, &["n", "s_n", "t_mod_2", "s_mod_2"], &rows)?;
    let violations = symmetric_violations(&s, &t);
    for v in &violations {
        writeln!(err, "check failed: {v}")?;
    }
    Ok(if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

pub fn cmd_trs<W: Write>(g: &GlobalArgs, m: usize, r: usize, s: usize, out: &mut W) -> Result<i32> {
    if m == 0 || r >= m {
        return Err(Error::IndexOutOfRange {
            m: m as i64,
            r: r as i64,
            s: s as i64,
        });
    }
    let table = load_table(g, m)?;
    let t = table.t_of_mrs(m, r, s)?;
    emit(
        out,
        g.format,
        &["m", "r", "s", "t"],
        &[vec![
            Cell::Index(m),
            Cell::Index(r),
            Cell::Index(s),
            count(t),
        ]],
    )?;
    Ok(EXIT_OK)
}
