//! Command-line front end. `run` parses arguments, dispatches and returns
//! the process exit code: 0 on success, 1 on usage or input errors, 2 when
//! `verify` reports a mismatch.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::benzenoid::{build_system, parse_hex_list};
use crate::closed_form::Family;
use crate::graph::{k_degree_profile, read_edge_list, write_edge_list, MolecularGraph};
use crate::index::{compute_index, compute_polynomial, edge_partition, IndexKind, IndexValue};
use crate::verify::{verify_range, ReportFormat, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "benzleap",
    version,
    about = "Leap topological indices of benzenoid systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the edge list of a benzenoid graph.
    Generate {
        #[command(flatten)]
        source: BuildSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print index values, one `token value` line each.
    Indices {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// Comma-separated index tokens; defaults to every leap index.
        #[arg(long)]
        quantities: Option<String>,
    },
    /// Print the k-distance degree edge partition as `a b count` lines.
    Partition {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// Print an index polynomial in ascending exponent order.
    Poly {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// One of lm1, lm2, hlm1, hlm2.
        #[arg(long)]
        kind: String,
    },
    /// Compare computed values with closed forms and tables.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyChoice,
        #[arg(long, default_value_t = 2)]
        p_min: u32,
        #[arg(long, default_value_t = 10)]
        p_max: u32,
        #[arg(long, value_enum, default_value_t = FormatChoice::Text)]
        format: FormatChoice,
    },
    /// Tabulate indices over a range of p, one row per p.
    Sweep {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        p_min: u32,
        #[arg(long)]
        p_max: u32,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long)]
        quantities: Option<String>,
        #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
        format: SweepFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct BuildSource {
    #[arg(long, value_enum, requires = "p", conflicts_with = "hexes")]
    family: Option<Family>,
    #[arg(long)]
    p: Option<u32>,
    /// File of `q r` axial hexagon coordinates, one per line.
    #[arg(long)]
    hexes: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GraphSource {
    #[command(flatten)]
    build: BuildSource,
    /// Edge-list file as written by `generate`.
    #[arg(long, conflicts_with_all = ["family", "hexes"])]
    input: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyChoice {
    Zigzag,
    Rhombic,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatChoice {
    Text,
    Csv,
    Jsonl,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SweepFormat {
    Csv,
    Text,
}

impl ValueEnum for Family {
    fn value_variants<'a>() -> &'a [Self] {
        &Family::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.token()))
    }
}

type CliResult<T> = std::result::Result<T, String>;

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command) -> CliResult<i32> {
    match cmd {
        Command::Generate { source, out } => {
            let g = source.build()?;
            emit(out.as_deref(), |w| write_edge_list(&g, w))?;
        }
        Command::Indices {
            source,
            k,
            quantities,
        } => {
            let g = source.load()?;
            let kinds = parse_kinds(quantities.as_deref())?;
            let values = evaluate(&g, k, &kinds)?;
            emit(None, |w| {
                for (kind, v) in kinds.iter().zip(&values) {
                    writeln!(w, "{kind} {v}")?;
                }
                Ok(())
            })?;
        }
        Command::Partition { source, k } => {
            let g = source.load()?;
            let profile = k_degree_profile(&g, k).map_err(|e| e.to_string())?;
            let part = edge_partition(&g, &profile).map_err(|e| e.to_string())?;
            emit(None, |w| {
                for ((a, b), f) in part.classes() {
                    writeln!(w, "{a} {b} {f}")?;
                }
                Ok(())
            })?;
        }
        Command::Poly { source, k, kind } => {
            let kind: IndexKind = kind.parse().map_err(|e: crate::Error| e.to_string())?;
            let g = source.load()?;
            let profile = k_degree_profile(&g, k).map_err(|e| e.to_string())?;
            let poly = compute_polynomial(&g, &profile, kind).map_err(|e| e.to_string())?;
            emit(None, |w| writeln!(w, "{poly}"))?;
        }
        Command::Verify {
            family,
            p_min,
            p_max,
            format,
        } => {
            let families: &[Family] = match family {
                FamilyChoice::Zigzag => &[Family::Zigzag],
                FamilyChoice::Rhombic => &[Family::Rhombic],
                FamilyChoice::Both => &Family::ALL,
            };
            let mut report = VerificationReport::default();
            for &f in families {
                report.extend(verify_range(f, p_min, p_max).map_err(|e| e.to_string())?);
            }
            let format = match format {
                FormatChoice::Text => ReportFormat::Text,
                FormatChoice::Csv => ReportFormat::Csv,
                FormatChoice::Jsonl => ReportFormat::Jsonl,
            };
            emit(None, |w| report.write(format, w))?;
            if report.has_mismatch() {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Sweep {
            family,
            p_min,
            p_max,
            k,
            quantities,
            format,
            out,
        } => {
            if p_min < 1 || p_min > p_max {
                return Err(format!("need 1 <= p-min <= p-max, got {p_min}..{p_max}"));
            }
            let kinds = parse_kinds(quantities.as_deref())?;
            let rows: Vec<Vec<String>> = (p_min..=p_max)
                .into_par_iter()
                .map(|p| sweep_row(family, p, k, &kinds))
                .collect::<CliResult<_>>()?;
            let mut header = vec!["family".to_string(), "p".into(), "n".into(), "m".into()];
            header.extend(kinds.iter().map(|k| k.token().to_string()));
            emit(out.as_deref(), |w| write_table(w, &header, &rows, format))?;
        }
    }
    Ok(EXIT_OK)
}

impl BuildSource {
    fn build(&self) -> CliResult<MolecularGraph> {
        let benzenoid = match (&self.family, self.p, &self.hexes) {
            (Some(family), Some(p), None) => family.build(p),
            (None, None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                parse_hex_list(&text).and_then(|hexes| build_system(&hexes))
            }
            _ => return Err("give --family with --p, --hexes, or --input".into()),
        };
        benzenoid.map(|b| b.graph).map_err(|e| e.to_string())
    }
}

impl GraphSource {
    fn load(&self) -> CliResult<MolecularGraph> {
        match &self.input {
            Some(path) => {
                let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
                read_edge_list(BufReader::new(file)).map_err(|e| format!("{}: {e}", path.display()))
            }
            None => self.build.build(),
        }
    }
}

fn parse_kinds(list: Option<&str>) -> CliResult<Vec<IndexKind>> {
    match list {
        None => Ok(IndexKind::LEAP.to_vec()),
        Some(s) => {
            let kinds = IndexKind::parse_list(s).map_err(|e| e.to_string())?;
            if kinds.is_empty() {
                return Err("--quantities is empty".into());
            }
            Ok(kinds)
        }
    }
}

/// Leap kinds use the k profile; classical kinds always use ordinary degrees.
fn evaluate(g: &MolecularGraph, k: u32, kinds: &[IndexKind]) -> CliResult<Vec<IndexValue>> {
    let err = |e: crate::Error| e.to_string();
    let leap = kinds
        .iter()
        .any(|k| !k.is_classical())
        .then(|| k_degree_profile(g, k))
        .transpose()
        .map_err(err)?;
    let classical = kinds
        .iter()
        .any(|k| k.is_classical())
        .then(|| k_degree_profile(g, 1))
        .transpose()
        .map_err(err)?;
    kinds
        .iter()
        .map(|&kind| {
            let profile = if kind.is_classical() {
                &classical
            } else {
                &leap
            };
            compute_index(g, profile.as_ref().expect("profile built above"), kind).map_err(err)
        })
        .collect()
}

fn sweep_row(family: Family, p: u32, k: u32, kinds: &[IndexKind]) -> CliResult<Vec<String>> {
    let g = family.build(p).map_err(|e| e.to_string())?.graph;
    let values = evaluate(&g, k, kinds)?;
    let mut row = vec![
        family.token().to_string(),
        p.to_string(),
        g.vertex_count().to_string(),
        g.edge_count().to_string(),
    ];
    row.extend(values.into_iter().map(|v| match v {
        IndexValue::Int(i) => i.to_string(),
        IndexValue::Real(r) => significant(r, 6),
    }));
    Ok(row)
}

/// Formats `x` rounded to `digits` significant digits, without exponent.
fn significant(x: f64, digits: i32) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = digits - 1 - magnitude;
    if decimals >= 0 {
        format!("{x:.prec$}", prec = decimals as usize)
    } else {
        let scale = 10f64.powi(-decimals);
        format!("{:.0}", (x / scale).round() * scale)
    }
}

fn write_table(
    w: &mut dyn Write,
    header: &[String],
    rows: &[Vec<String>],
    format: SweepFormat,
) -> io::Result<()> {
    if format == SweepFormat::Csv {
        writeln!(w, "{}", header.join(","))?;
        for row in rows {
            writeln!(w, "{}", row.join(","))?;
        }
        return Ok(());
    }
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in rows {
        for (width, cell) in widths.iter_mut().zip(row) {
            *width = (*width).max(cell.len());
        }
    }
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &wd)| format!("{c:>wd$}"))
            .collect();
        writeln!(w, "{}", cells.join("  "))?;
    }
    Ok(())
}

/// Buffers the whole output, then writes it to `path` or standard output.
fn emit<F>(path: Option<&Path>, body: F) -> CliResult<()>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    let mut buf = Vec::new();
    body(&mut buf).map_err(|e| e.to_string())?;
    let result = match path {
        Some(path) => File::create(path)
            .and_then(|f| {
                let mut f = BufWriter::new(f);
                f.write_all(&buf)?;
                f.flush()
            })
            .map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(&buf)
                .and_then(|_| lock.flush())
                .map_err(|e| e.to_string())
        }
    };
    result
}
