use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use liaison::groebner::{reduced_groebner_basis, GbOptions};
use liaison::idealfile::IdealFile;
use liaison::linkage::{graded_generic_link, symbolic_residual, LinkOptions};
use liaison::polyring::{MonomialOrder, Polynomial};
use liaison::resolution::minimal_free_resolution;
use liaison::verify::{check_ideal, run_suite, summary, CheckOptions, Claim, Family, SuiteConfig, SuiteRun};
use liaison::Error;

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_RESOURCE: u8 = 4;
const EXIT_VIOLATION: u8 = 5;

#[derive(Parser)]
#[command(name = "liaison", version, about = "Groebner bases, Betti tables, generic links and regularity bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Random,
    Symbolic,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced Groebner basis of an ideal, one element per line.
    Gb {
        file: PathBuf,
        ideal: String,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: Order,
    },
    /// Print the Betti table of R/I and its regularity.
    Betti {
        file: PathBuf,
        ideal: String,
        /// Emit the table as JSON instead.
        #[arg(long)]
        json: bool,
    },
    /// Compute a generic link and print it as JSON.
    Link {
        file: PathBuf,
        ideal: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "random")]
        mode: Mode,
        /// Number of combinations in symbolic mode (default: the codimension).
        #[arg(long)]
        s: Option<usize>,
    },
    /// Check regularity bounds on the ideals of a file or on the built-in suite.
    Verify {
        file: Option<PathBuf>,
        /// Restrict to one ideal of the file.
        ideal: Option<String>,
        /// Run the built-in suite instead of a file.
        #[arg(long, conflicts_with = "file")]
        suite: bool,
        /// Comma separated claims: NIU, NIU11, BEL, LINKDEG, OMEGA, EXC.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        /// Comma separated suite families (letters a-e or names).
        #[arg(long, value_delimiter = ',')]
        families: Option<Vec<String>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Links tried per ideal by LINKDEG.
        #[arg(long, default_value_t = 5)]
        link_seeds: usize,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record per-step timings in the JSON report.
        #[arg(long)]
        timings: bool,
    },
}

enum Failure {
    Engine(Error),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UnknownVariable { .. }
        | Error::Syntax { .. }
        | Error::DivisionInInput { .. }
        | Error::InvalidRing(_)
        | Error::UnknownIdeal(_)
        | Error::Io(_) => EXIT_PARSE,
        Error::DegreeCapExceeded { .. } | Error::SizeCapExceeded { .. } => EXIT_RESOURCE,
        _ => EXIT_PRECONDITION,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gb { file, ideal, order } => {
            let f = IdealFile::read(&file)?;
            let i = &f.get(&ideal)?.ideal;
            let order = match order {
                Order::Grevlex => MonomialOrder::Grevlex,
                Order::Lex => MonomialOrder::Lex,
            };
            let ring = f.ring.with_order(order)?;
            let gens: Vec<Polynomial> = i.generators().iter().map(|g| g.with_ring(&ring)).collect();
            let gb = reduced_groebner_basis(&ring, &gens, &GbOptions::default())?;
            for g in gb.elements() {
                println!("{g}");
            }
        }
        Command::Betti { file, ideal, json } => {
            let f = IdealFile::read(&file)?;
            let res = minimal_free_resolution(&f.get(&ideal)?.ideal)?;
            let table = res.betti_table();
            let reg = table.regularity().unwrap_or(0);
            if json {
                let value = serde_json::json!({ "betti": table, "regularity": reg });
                println!("{}", serde_json::to_string_pretty(&value).expect("json"));
            } else {
                print!("{}", table.to_text());
                println!("reg R/I = {reg}");
            }
        }
        Command::Link { file, ideal, seed, mode, s } => {
            let f = IdealFile::read(&file)?;
            let i = &f.get(&ideal)?.ideal;
            let opts = LinkOptions::default();
            let result = match mode {
                Mode::Random => graded_generic_link(i, seed, &opts)?,
                Mode::Symbolic => {
                    let s = match s {
                        Some(s) => s,
                        None => i.codimension()?,
                    };
                    symbolic_residual(i, s, &opts)?
                }
            };
            println!("{}", serde_json::to_string_pretty(&result.report()?).expect("json"));
        }
        Command::Verify { file, ideal, suite, claims, families, seed, link_seeds, json, timings } => {
            let claims: Vec<Claim> = match claims {
                Some(list) => list.iter().map(|c| c.parse()).collect::<Result<_, _>>()?,
                None => Claim::ALL.to_vec(),
            };
            let run = if suite {
                let families: Vec<Family> = match families {
                    Some(list) => list.iter().map(|c| c.parse()).collect::<Result<_, _>>()?,
                    None => Family::ALL.to_vec(),
                };
                let config = SuiteConfig { seed, families, claims, link_seeds, timings, ..SuiteConfig::default() };
                run_suite(&config)?
            } else {
                let Some(file) = file else {
                    return Err(Error::InvalidArgument("give an ideal file or --suite".into()).into());
                };
                let f = IdealFile::read(&file)?;
                let selected: Vec<_> = match &ideal {
                    Some(name) => vec![f.get(name)?],
                    None => f.ideals.iter().collect(),
                };
                let opts = CheckOptions { seed, link_seeds, timings, ..CheckOptions::default() };
                let mut reports = Vec::new();
                for named in selected {
                    reports.push(check_ideal(&named.name, &named.ideal, &claims, &opts)?);
                }
                SuiteRun { field: f.ring.field().to_string(), seed, reports, errors: Vec::new() }
            };
            print!("{}", summary(&run));
            for r in &run.reports {
                for c in &r.checks {
                    println!("  {} {} {} {}", r.name, c.claim, c.verdict, c.detail);
                }
            }
            if let Some(path) = json {
                if path.as_os_str() == "-" {
                    println!("{}", run.to_json());
                } else {
                    std::fs::write(&path, run.to_json()).map_err(|e| Error::Io(e.to_string()))?;
                }
            }
            if run.violations() > 0 {
                return Err(Failure::Violation(format!("{} bound violations", run.violations())));
            }
            if run.error_count() > 0 {
                return Err(Error::InvalidArgument(format!("{} checks failed to compute", run.error_count())).into());
            }
        }
    }
    Ok(())
}
