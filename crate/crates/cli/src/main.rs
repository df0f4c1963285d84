//! `braidx`: braid and Hurwitz actions on marked surfaces from the command line.
//!
//! Exit codes: 0 on success, 1 on a domain or input error (including an
//! invalid dissection under `dissection validate`), 2 when a separation is
//! inconclusive.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::fukaya::{quiver_of, GradingData};
use hurwitz_core::mutation::{braid_act, format_dissection, parse_dissection, BraidWord, Dissection};
use hurwitz_core::orbit::{counterexample_g1b2, explore, genus0_transitivity_check, separate, SeparationCertificate};
use hurwitz_core::perm::{format_hurwitz, hurwitz_orbit, move_graph_components, parse_hurwitz, product};
use hurwitz_core::surface::surface_from_hurwitz;
use hurwitz_core::Error;

#[derive(Parser)]
#[command(name = "braidx", version, about = "Braid group actions on dissections of marked surfaces")]
struct Cli {
    /// Worker threads for orbit searches; 0 picks one per core.
    #[arg(long, global = true, env = "BRAIDX_THREADS", default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hurwitz systems of transpositions.
    #[command(subcommand)]
    Hurwitz(HurwitzCmd),
    /// Dissections read from `.dsc` files.
    #[command(subcommand)]
    Dissection(DissectionCmd),
    /// Orbit exploration and separation.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// Preset scenarios.
    #[command(subcommand)]
    Counterexample(CounterexampleCmd),
    /// Checks that the disk orbit reaches every bounded dissection.
    Genus0(Genus0Args),
}

#[derive(Subcommand)]
enum HurwitzCmd {
    /// Orbit of one system under Hurwitz moves.
    Orbit {
        file: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
    },
    /// Components of the move graph on all generating tuples.
    Components { m: usize, n: usize },
}

#[derive(Subcommand)]
enum DissectionCmd {
    /// Checks the dissection conditions.
    Validate { file: PathBuf },
    /// Hurwitz system of the projection.
    Hurwitz { file: PathBuf },
    /// Applies a braid word, leftmost generator first.
    Mutate {
        file: PathBuf,
        /// Generators such as "1 -2 3"; `k` is sigma_k and `-k` its inverse.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Graded quiver with relations.
    Quiver {
        file: PathBuf,
        #[arg(long)]
        grading: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Dot,
}

#[derive(Subcommand)]
enum OrbitCmd {
    /// Breadth-first orbit of a dissection.
    Explore {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value_t = 100_000)]
        max_states: usize,
    },
    /// Path or invariant witness between two dissections on one chart.
    Separate {
        a: PathBuf,
        b: PathBuf,
        /// Total search depth of the bidirectional search.
        #[arg(long, default_value_t = 8)]
        budget: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_states: usize,
    },
}

#[derive(Subcommand)]
enum CounterexampleCmd {
    /// Genus one, two boundary components, one marked point on each.
    G1b2 {
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_states: usize,
    },
}

#[derive(Args)]
struct Genus0Args {
    /// Marked points on the disk.
    m: usize,
    #[arg(long, default_value_t = 4)]
    word_bound: usize,
    #[arg(long, default_value_t = 8)]
    depth: usize,
    #[arg(long, default_value_t = 100_000)]
    max_states: usize,
}

enum Outcome {
    Done(String),
    Failed(String),
    Inconclusive(String),
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Domain(format!("{}: {e}", path.display())))
}

fn load_dissection(path: &Path) -> Result<Dissection, Error> {
    parse_dissection(&read(path)?).map_err(|e| Error::Domain(format!("{}: {e}", path.display())))
}

fn positive(name: &str, v: usize) -> Result<(), Error> {
    if v == 0 {
        return Err(Error::Domain(format!("--{name} must be positive")));
    }
    Ok(())
}

fn run(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Hurwitz(HurwitzCmd::Orbit { file, limit }) => {
            positive("limit", limit)?;
            let text = read(&file)?;
            let h = parse_hurwitz(&text).map_err(|e| Error::Domain(format!("{}: {e}", file.display())))?;
            let orbit = hurwitz_orbit(&h, limit)?;
            let surface = surface_from_hurwitz(&h)?;
            let mut out = format!(
                "orbit_size={} complete={}\nproduct={}\nsurface {}\n",
                orbit.systems.len(),
                orbit.complete,
                product(&h),
                surface
            );
            for s in &orbit.systems {
                out.push_str(&format!("{s}\n"));
            }
            Ok(Outcome::Done(out))
        }
        Command::Hurwitz(HurwitzCmd::Components { m, n }) => {
            positive("m", m)?;
            let comps = move_graph_components(m, n);
            let mut out = format!("components={}\n", comps.len());
            for c in &comps {
                out.push_str(&format!("size={} product={}\n", c.len(), product(&c[0])));
            }
            Ok(Outcome::Done(out))
        }
        Command::Dissection(DissectionCmd::Validate { file }) => {
            let v = load_dissection(&file)?.validate();
            let text = format!("{}\n", v.to_string().trim_end());
            Ok(if v.is_valid() { Outcome::Done(text) } else { Outcome::Failed(text) })
        }
        Command::Dissection(DissectionCmd::Hurwitz { file }) => {
            let d = load_dissection(&file)?;
            Ok(Outcome::Done(format_hurwitz(&d.hurwitz()?)))
        }
        Command::Dissection(DissectionCmd::Mutate { file, word, output }) => {
            let d = load_dissection(&file)?;
            let (e, _) = braid_act(&d, &BraidWord::parse(&word)?)?;
            let text = format_dissection(&e);
            match output {
                Some(path) => {
                    fs::write(&path, &text).map_err(|err| Error::Domain(format!("{}: {err}", path.display())))?;
                    Ok(Outcome::Done(String::new()))
                }
                None => Ok(Outcome::Done(text)),
            }
        }
        Command::Dissection(DissectionCmd::Quiver { file, grading, format }) => {
            let d = load_dissection(&file)?;
            let sk = d.skeleton()?;
            let g = match grading {
                Some(path) => GradingData::parse(&sk, &read(&path)?)
                    .map_err(|e| Error::Domain(format!("{}: {e}", path.display())))?,
                None => GradingData::zero(sk.n()),
            };
            let q = quiver_of(&sk, &g)?;
            Ok(Outcome::Done(match format {
                Format::Text => q.to_string(),
                Format::Dot => q.to_dot(),
            }))
        }
        Command::Orbit(OrbitCmd::Explore { file, depth, max_states }) => {
            positive("max-states", max_states)?;
            let report = explore(&load_dissection(&file)?, depth, max_states)?;
            Ok(Outcome::Done(report.to_string()))
        }
        Command::Orbit(OrbitCmd::Separate { a, b, budget, max_states }) => {
            positive("max-states", max_states)?;
            let cert = separate(&load_dissection(&a)?, &load_dissection(&b)?, budget, max_states)?;
            let text = format!("{cert}\n");
            Ok(match cert {
                SeparationCertificate::Inconclusive { .. } => Outcome::Inconclusive(text),
                _ => Outcome::Done(text),
            })
        }
        Command::Counterexample(CounterexampleCmd::G1b2 { depth, max_states }) => {
            positive("max-states", max_states)?;
            let report = counterexample_g1b2(depth, max_states)?;
            let text = format!("{report}\n");
            Ok(match report.certificate {
                SeparationCertificate::Witness { .. } => Outcome::Done(text),
                SeparationCertificate::Inconclusive { .. } => Outcome::Inconclusive(text),
                SeparationCertificate::Path(_) => Outcome::Failed(text),
            })
        }
        Command::Genus0(args) => {
            positive("max-states", args.max_states)?;
            let report = genus0_transitivity_check(args.m, args.word_bound, args.depth, args.max_states)?;
            let text = format!("{report}\n");
            Ok(if report.transitive() { Outcome::Done(text) } else { Outcome::Failed(text) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli.command) {
        Ok(Outcome::Done(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Ok(Outcome::Inconclusive(text)) => {
            print!("{text}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
