//! `mfib`: deterministic command-line front end.
//!
//! Every command prints pretty JSON with sorted keys. Exit codes: 0 success
//! or affirmative verdict, 1 negative verdict, 2 bad input (including any
//! library error), 3 unknown verdict.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mfib::io;
use mfib::{
    build, destabilize, enumerate_classes, hurwitz_move, reduce, stabilize, substitution_witness,
    total_space_invariants, universality_report, Catalog, Error, HurwitzDirection,
    LefschetzFibration, Sign, StabilizationMode, SurfaceSpec, Verdict, WitnessOutcome,
};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "mfib", version, about = "Monodromy calculus for Lefschetz fibrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count (and optionally list) curve classes on F_{g,b}
    Census {
        g: usize,
        b: usize,
        /// List the classes and check the count against the enumeration
        #[arg(long)]
        enumerate: bool,
    },
    /// Write a named fibration: u_g1, u_11, u_10 or p_g
    Build {
        name: String,
        #[arg(long)]
        g: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Euler characteristic, H1 and H2 rank of the total space (disk base)
    Invariants { file: PathBuf },
    /// Universality conditions; exit code reflects the verdict
    CheckUniversal {
        file: PathBuf,
        /// Test strong universality
        #[arg(long)]
        strong: bool,
    },
    /// Search for a meridian plan realizing -f as a pullback of -u
    Witness {
        #[arg(short = 'u', long = "universal")]
        u: PathBuf,
        #[arg(short = 'f', long = "fibration")]
        f: PathBuf,
        #[arg(long, env = "MF_DEPTH", default_value_t = mfib::fibration::DEFAULT_WITNESS_DEPTH)]
        depth: usize,
    },
    /// Destabilize greedily, lowest generator first
    Reduce {
        file: PathBuf,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        /// Print the steps taken along with the result
        #[arg(long)]
        report: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply Hurwitz moves, given as POSITION:L or POSITION:R (1-based)
    Hurwitz {
        file: PathBuf,
        #[arg(long = "move", value_name = "I:L|R", required = true)]
        moves: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Add a 1-handle to the fiber together with a cycle over it
    Stabilize {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        sign: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Remove a 1-handle along a basis generator such as a2 or d1
    Destabilize {
        file: PathBuf,
        #[arg(long)]
        generator: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the standard generator curves for genus 1..=N
    Catalog {
        #[arg(long, default_value_t = 6)]
        max_genus: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Genus,
    Boundary,
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<u8, Failure>;

fn read_fibration(path: &Path) -> Result<LefschetzFibration, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    io::parse_fibration(&text).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn emit(v: &Value, out: Option<&Path>) -> Result<(), Failure> {
    let text = io::to_pretty_string(v);
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Yes => 0,
        Verdict::No => EXIT_NEGATIVE,
        Verdict::Unknown => EXIT_UNKNOWN,
    }
}

fn parse_move(s: &str) -> Result<(usize, HurwitzDirection), Failure> {
    let bad = || Failure::Io(format!("move '{s}' is not of the form POSITION:L or POSITION:R"));
    let (i, d) = s.split_once(':').ok_or_else(bad)?;
    let i: usize = i.parse().map_err(|_| bad())?;
    if i == 0 {
        return Err(Failure::Io("move positions are 1-based".into()));
    }
    Ok((i - 1, d.parse().map_err(|_| bad())?))
}

fn generator_index(s: SurfaceSpec, name: &str) -> Result<usize, Failure> {
    (0..s.rank())
        .find(|&k| s.basis_name(k) == name)
        .ok_or_else(|| Failure::Io(format!("{s} has no basis generator '{name}'")))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Census { g, b, enumerate } => {
            let s = SurfaceSpec::new(g, b);
            if !enumerate {
                emit(&io::census_to_json(s, None), None)?;
                return Ok(0);
            }
            let classes = enumerate_classes(s);
            let mut v = io::census_to_json(s, Some(&classes));
            let agrees = classes.len() as u64 == mfib::class_count(s);
            v["enumerated"] = json!(classes.len());
            emit(&v, None)?;
            Ok(if agrees { 0 } else { EXIT_NEGATIVE })
        }
        Command::Build { name, g, out } => {
            let f = build(&name, g)?;
            emit(&io::fibration_to_json(&f), out.as_deref())?;
            Ok(0)
        }
        Command::Invariants { file } => {
            let f = read_fibration(&file)?;
            emit(&io::invariants_to_json(&total_space_invariants(&f)?), None)?;
            Ok(0)
        }
        Command::CheckUniversal { file, strong } => {
            let f = read_fibration(&file)?;
            let r = universality_report(&f)?;
            emit(&io::universality_to_json(&r), None)?;
            Ok(verdict_code(if strong { r.strongly_universal } else { r.universal }))
        }
        Command::Witness { u, f, depth } => {
            let u = read_fibration(&u)?;
            let f = read_fibration(&f)?;
            let w = substitution_witness(&u, &f, depth)?;
            let mut v = io::witness_to_json(&w);
            v["depth"] = json!(depth);
            emit(&v, None)?;
            Ok(match w {
                WitnessOutcome::Immersion(_) | WitnessOutcome::Plan(_) => 0,
                WitnessOutcome::Unknown { .. } => EXIT_UNKNOWN,
            })
        }
        Command::Reduce { file, budget, report, out } => {
            let f = read_fibration(&file)?;
            let r = reduce(&f, budget)?;
            let v = if report {
                io::reduction_to_json(&r)
            } else {
                io::fibration_to_json(&r.fibration)
            };
            emit(&v, out.as_deref())?;
            if r.exhausted {
                eprintln!("mfib: budget of {budget} destabilizations exhausted");
            }
            Ok(0)
        }
        Command::Hurwitz { file, moves, out } => {
            let mut f = read_fibration(&file)?;
            for m in &moves {
                let (i, d) = parse_move(m)?;
                f = hurwitz_move(&f, i, d)?;
            }
            emit(&io::fibration_to_json(&f), out.as_deref())?;
            Ok(0)
        }
        Command::Stabilize { file, mode, sign, out } => {
            let f = read_fibration(&file)?;
            let mode = match mode {
                Mode::Genus => StabilizationMode::GenusUp,
                Mode::Boundary => StabilizationMode::BoundaryUp,
            };
            let g = stabilize(&f, mode, Sign::from_i64(sign)?)?;
            emit(&io::fibration_to_json(&g), out.as_deref())?;
            Ok(0)
        }
        Command::Destabilize { file, generator, out } => {
            let f = read_fibration(&file)?;
            let k = generator_index(f.fiber(), &generator)?;
            let g = destabilize(&f, k)?;
            emit(&io::fibration_to_json(&g), out.as_deref())?;
            Ok(0)
        }
        Command::Catalog { max_genus } => {
            if max_genus == 0 {
                return Err(Error::Input("--max-genus must be at least 1".into()).into());
            }
            let _ = Catalog::genus(max_genus)?;
            emit(&io::catalogs_to_json(max_genus)?, None)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Lib(e)) => {
            eprintln!("mfib: {e}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("mfib: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
