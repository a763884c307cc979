//! `pcg`: analyses of periodic colorings of the square grid over PCG files.
//!
//! Exit codes: 0 when the property holds or the command succeeds, 1 when it
//! fails or a violation is found, 2 on usage, input or parse errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pcg_core::diagonal::{diagonal_classes, shift_residue_class};
use pcg_core::enumerate::{classify, enumerate, SearchSpec};
use pcg_core::orbit::orbit_report;
use pcg_core::perfect::{check, stationary};
use pcg_core::twins::{merge, theorem1_audit, twin_pairs};
use pcg_core::{fixtures, pcg, Error, Lattice, Orientation, PeriodicColoring, QuotientMatrix};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "pcg", version, about = "Perfect colorings of the square grid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check perfectness; print the quotient matrix or the first violation.
    Verify(Json),
    /// Print the quotient matrix.
    Quotient(Json),
    /// Print everything known about a coloring.
    Classify(Json),
    /// List twin color pairs. Exits 1 if there are none.
    Twins(Input),
    /// Recolor twin color B as A and write the result.
    Merge {
        file: PathBuf,
        a: String,
        b: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Exit 0 if the two colorings are equivalent.
    Equiv { first: PathBuf, second: PathBuf },
    /// Decide whether the coloring is an orbit coloring.
    Orbit(Json),
    /// Classify every diagonal class as JSON.
    Diagonals {
        file: PathBuf,
        /// Only one-color and alternating classes.
        #[arg(long)]
        special: bool,
    },
    /// Shift every diagonal with index ≡ R (mod M) by T steps.
    Shift {
        file: PathBuf,
        #[arg(long, value_enum)]
        orientation: Side,
        #[arg(long, allow_negative_numbers = true)]
        residue: i64,
        #[arg(long)]
        modulus: i64,
        #[arg(long, allow_negative_numbers = true)]
        offset: i64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// All perfect colorings of a torus, up to equivalence.
    Enumerate(EnumerateArgs),
    /// Stationary vector of the quotient matrix.
    Stationary(Input),
    /// Covering / twins / orbit report. Exits 1 if the dichotomy fails.
    Audit(Input),
    /// Built-in colorings.
    Fixture {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Args)]
struct Input {
    file: PathBuf,
}

#[derive(Args)]
struct Json {
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    width: i64,
    #[arg(long)]
    height: i64,
    #[arg(long, default_value_t = 0)]
    shear: i64,
    #[arg(long)]
    colors: usize,
    /// Allow fewer colors than --colors.
    #[arg(long)]
    at_most: bool,
    /// File with a quotient matrix, one row per line.
    #[arg(long)]
    quotient: Option<PathBuf>,
    /// Print a JSON array of classification reports.
    #[arg(long)]
    report: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
    Show { id: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Right,
    Left,
}

impl From<Side> for Orientation {
    fn from(s: Side) -> Self {
        match s {
            Side::Right => Orientation::Right,
            Side::Left => Orientation::Left,
        }
    }
}

enum Failure {
    /// Property false or violation found.
    No(String),
    /// Bad input.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPerfect(_) | Error::NotTwins { .. } => Failure::No(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Text for stdout, and whether the property held.
type Output = Result<(String, bool), Failure>;

fn read(path: &Path) -> Result<PeriodicColoring, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    pcg::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

fn color(f: &PeriodicColoring, token: &str) -> Result<pcg_core::ColorId, Failure> {
    f.color_by_token(token).map_err(Failure::from)
}

fn run(command: Command) -> Output {
    match command {
        Command::Verify(Json { file, json: as_json }) => {
            let f = read(&file)?;
            let result = check(&f);
            if as_json {
                #[derive(Serialize)]
                struct Report<'a> {
                    perfect: bool,
                    quotient: Option<&'a QuotientMatrix>,
                    violation: Option<&'a pcg_core::Violation>,
                }
                let report = Report {
                    perfect: result.is_ok(),
                    quotient: result.as_ref().ok(),
                    violation: result.as_ref().err(),
                };
                return Ok((json(&report), result.is_ok()));
            }
            match result {
                Ok(s) => Ok((s.to_string(), true)),
                Err(v) => Ok((format!("not perfect: {v}\n"), false)),
            }
        }
        Command::Quotient(Json { file, json: as_json }) => {
            let s = pcg_core::perfect::quotient(&read(&file)?)?;
            Ok((if as_json { json(&s) } else { s.to_string() }, true))
        }
        Command::Classify(Json { file, json: as_json }) => {
            let f = read(&file)?;
            let report = classify(&f);
            if as_json {
                return Ok((json(&report), true));
            }
            Ok((classification_text(&f, &report), true))
        }
        Command::Twins(Input { file }) => {
            let f = read(&file)?;
            let pairs = twin_pairs(&pcg_core::perfect::quotient(&f)?);
            let mut out = String::new();
            for (a, b) in &pairs {
                writeln!(out, "{} {}", f.token(*a), f.token(*b)).unwrap();
            }
            Ok((out, !pairs.is_empty()))
        }
        Command::Merge { file, a, b, output } => {
            let f = read(&file)?;
            let merged = merge(&f, color(&f, &a)?, color(&f, &b)?)?;
            write(&output, &pcg::render(&merged))?;
            Ok((String::new(), true))
        }
        Command::Equiv { first, second } => {
            let same = read(&first)?.equivalent(&read(&second)?);
            let text = if same { "equivalent\n" } else { "not equivalent\n" };
            Ok((text.to_string(), same))
        }
        Command::Orbit(Json { file, json: as_json }) => {
            let report = orbit_report(&read(&file)?);
            if as_json {
                return Ok((json(&report), report.orbit));
            }
            let mut out = format!(
                "orbit: {}\norbits: {}\nstabilizer order: {}\n",
                report.orbit, report.num_orbits, report.stabilizer_order
            );
            if let Some((x, y)) = report.counterexample_pair {
                writeln!(out, "no automorphism maps {x} to {y}").unwrap();
            }
            Ok((out, report.orbit))
        }
        Command::Diagonals { file, special } => {
            let mut classes = diagonal_classes(&read(&file)?);
            if special {
                classes.retain(|d| d.kind.is_special());
            }
            Ok((json(&classes), true))
        }
        Command::Shift {
            file,
            orientation,
            residue,
            modulus,
            offset,
            output,
        } => {
            let f = read(&file)?;
            let g = shift_residue_class(&f, orientation.into(), residue, modulus, offset)?;
            write(&output, &pcg::render(&g))?;
            Ok((String::new(), true))
        }
        Command::Enumerate(args) => run_enumerate(args),
        Command::Stationary(Input { file }) => {
            let f = read(&file)?;
            let p = stationary(&pcg_core::perfect::quotient(&f)?)?;
            let mut out = String::new();
            for (c, pi) in f.colors().zip(&p) {
                writeln!(out, "{} {pi}", f.token(c)).unwrap();
            }
            Ok((out, true))
        }
        Command::Audit(Input { file }) => {
            let report = theorem1_audit(&read(&file)?)?;
            Ok((json(&report), report.dichotomy_holds))
        }
        Command::Fixture { action } => match action {
            FixtureAction::List => {
                let mut out = String::new();
                for fx in fixtures::list() {
                    writeln!(out, "{}\t{}", fx.id, fx.description).unwrap();
                }
                Ok((out, true))
            }
            FixtureAction::Show { id } => {
                let fx = fixtures::info(&id)?;
                let mut lines = fx.text.lines();
                let mut out = format!("{}\n", lines.next().unwrap_or_default());
                writeln!(out, "# fixture {}: {}", fx.id, fx.description).unwrap();
                writeln!(out, "# covering: {}", fx.covering).unwrap();
                if let Some(orbit) = fx.orbit {
                    writeln!(out, "# orbit: {orbit}").unwrap();
                }
                for line in lines {
                    writeln!(out, "{line}").unwrap();
                }
                Ok((out, true))
            }
        },
    }
}

fn run_enumerate(args: EnumerateArgs) -> Output {
    let lattice = Lattice::new(args.width, args.height, args.shear)?;
    let mut spec = SearchSpec::new(lattice, args.colors);
    if args.at_most {
        spec = spec.at_most();
    }
    if let Some(path) = &args.quotient {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let s = QuotientMatrix::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        if s.n() != args.colors || args.at_most {
            return Err(Failure::Usage(format!(
                "--quotient has {} colors; pass --colors {} without --at-most",
                s.n(),
                s.n()
            )));
        }
        spec = spec.with_quotient(s);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let found = pool.install(|| enumerate(&spec))?;
    if args.report {
        let reports: Vec<_> = found.iter().map(classify).collect();
        return Ok((json(&reports), true));
    }
    let blocks: Vec<String> = found.iter().map(pcg::render).collect();
    Ok((blocks.join("\n"), true))
}

fn classification_text(f: &PeriodicColoring, r: &pcg_core::ClassificationReport) -> String {
    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut out = String::new();
    writeln!(out, "colors: {}", f.num_colors()).unwrap();
    writeln!(out, "maximal periods: {}", r.maximal_periods).unwrap();
    writeln!(out, "perfect: {}", yes(r.perfect)).unwrap();
    if let Some(v) = &r.violation {
        writeln!(out, "violation: {v}").unwrap();
    }
    if let Some(s) = &r.quotient {
        out.push_str("quotient:\n");
        for row in s.rows() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(out, "  {}", line.join(" ")).unwrap();
        }
    }
    writeln!(out, "bipartite: {}", yes(r.bipartite)).unwrap();
    let twins: Vec<String> = r
        .twins
        .iter()
        .map(|(a, b)| format!("{}~{}", f.token(*a), f.token(*b)))
        .collect();
    writeln!(out, "twins: {}", if twins.is_empty() { "none".into() } else { twins.join(" ") }).unwrap();
    writeln!(out, "covering: {}", yes(r.covering)).unwrap();
    writeln!(out, "orbit: {}", yes(r.orbit)).unwrap();
    writeln!(out, "special diagonal classes: {}", r.diagonals.len()).unwrap();
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, holds)) => {
            print!("{text}");
            ExitCode::from(if holds { 0 } else { 1 })
        }
        Err(Failure::No(msg)) => {
            eprintln!("pcg: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("pcg: {msg}");
            ExitCode::from(2)
        }
    }
}
